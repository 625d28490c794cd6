#pragma once

#include <stdexcept>
#include <string>

namespace bs {

enum class errc {
    not_increasing,
    finite_after_infinity,
    not_comparable,
    not_in_cone,
    empty_diagram,
    no_touching_index,
    basis_too_large,
    delta_size_mismatch,
    invalid_sequence,
    invalid_intermediate,
    pieri_failure,
    not_split,
    bad_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_increasing: return "NotIncreasing";
        case errc::finite_after_infinity: return "FiniteAfterInfinity";
        case errc::not_comparable: return "NotComparable";
        case errc::not_in_cone: return "NotInCone";
        case errc::empty_diagram: return "EmptyDiagram";
        case errc::no_touching_index: return "NoTouchingIndex";
        case errc::basis_too_large: return "BasisTooLarge";
        case errc::delta_size_mismatch: return "DeltaSizeMismatch";
        case errc::invalid_sequence: return "InvalidSequence";
        case errc::invalid_intermediate: return "InvalidIntermediate";
        case errc::pieri_failure: return "PieriFailure";
        case errc::not_split: return "NotSplit";
        case errc::bad_input: return "BadInput";
    }
    return "Unknown";
}

/// Library error carrying a machine-readable code alongside the message.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* code_name() const noexcept { return errc_name(code_); }

  private:
    errc code_;
};

}  // namespace bs

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bs/betti.hpp"
#include "bs/core.hpp"
#include "bs/equivariant.hpp"
#include "bs/es_construction.hpp"
#include "bs/errors.hpp"
#include "bs/ext_int.hpp"
#include "bs/supernatural.hpp"

namespace bs {

using json = nlohmann::ordered_json;

/// Comma-separated entries with "inf"/"-inf" sentinels.
inline std::vector<ExtInt> parse_ext_list(const std::string& s) {
    std::vector<ExtInt> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        std::size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        out.push_back(ExtInt::parse(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline DegreeSequence parse_degree_sequence(const std::string& s) {
    auto raw = parse_ext_list(s);
    return DegreeSequence(raw, static_cast<int>(raw.size()) - 1);
}

inline RootSequence parse_root_sequence(const std::string& s) {
    auto raw = parse_ext_list(s);
    return RootSequence(raw, static_cast<int>(raw.size()) + 1);
}

inline GLWeight parse_weight(const std::string& s) {
    std::vector<long long> parts;
    for (const auto& e : parse_ext_list(s)) parts.push_back(e.value());
    return GLWeight(std::move(parts));
}

inline json to_json(const ExtInt& e) { return e.str(); }

inline json to_json(const DegreeSequence& d) {
    json a = json::array();
    for (const auto& e : d.entries()) a.push_back(e.str());
    return a;
}

inline json to_json(const RootSequence& f) {
    json a = json::array();
    for (const auto& e : f.entries()) a.push_back(e.str());
    return a;
}

inline json to_json(const GLWeight& w) { return w.parts; }

inline json to_json(const BettiDiagram& b) {
    json a = json::array();
    for (const auto& [key, value] : b.entries)
        a.push_back({{"i", key.first}, {"j", key.second}, {"value", rational_str(value)}});
    return a;
}

inline BettiDiagram betti_diagram_from_json(const json& a) {
    if (!a.is_array())
        throw error(errc::bad_input, "diagram must be a list of {i, j, value} records");
    BettiDiagram b;
    for (const auto& rec : a) {
        if (!rec.contains("i") || !rec.contains("j") || !rec.contains("value"))
            throw error(errc::bad_input, "diagram record needs fields i, j, value");
        Rational v = rec["value"].is_string()
                         ? parse_rational(rec["value"].get<std::string>())
                         : Rational(rec["value"].get<long long>());
        b.add(rec["i"].get<int>(), rec["j"].get<long long>(), v);
    }
    return b;
}

inline json to_json(const PureDiagram& p) {
    json betti = json::array();
    for (const auto& b : p.betti) betti.push_back(b.str());
    return {{"degree_sequence", to_json(p.d)}, {"betti", betti}};
}

inline json to_json(const Decomposition& dec) {
    json terms = json::array();
    for (const auto& [c, pi] : dec.terms)
        terms.push_back({{"coefficient", rational_str(c)}, {"diagram", to_json(pi)}});
    return {{"terms", terms}};
}

inline json to_json(const TwistTable& t) {
    json rows = json::array();
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        rows.push_back({{"i", i}, {"twist", t.rows[i]}, {"rank", t.ranks[i].str()}});
    return rows;
}

inline json to_json(const ExponentMatrix& m) {
    json top = json::array(), bot = json::array();
    for (auto [a, b] : m.cols) { top.push_back(a); bot.push_back(b); }
    return {{"top", top}, {"bottom", bot}};
}

inline json to_json(const BasisElement& b) {
    return {{"subset", b.subset}, {"exponents", to_json(b.exps)}};
}

inline json to_json(const FreeModuleDescriptor& fm) {
    json factors = json::array();
    for (auto [kind, m] : fm.factors)
        factors.push_back({{"kind", kind == FactorKind::H1 ? "H1" : "H0"}, {"degree", m}});
    return {{"side", fm.side == Side::unprimed ? "unprimed" : "primed"},
            {"j", fm.j},
            {"twist", fm.twist},
            {"koszul_rank", fm.koszul_rank.str()},
            {"s", fm.s},
            {"factors", factors},
            {"total_rank", fm.total_rank.str()}};
}

inline json to_json(const EsData& e) {
    json out{{"d", to_json(e.d)},
             {"d_prime", to_json(e.dp)},
             {"r", e.r},
             {"delta", e.delta},
             {"a", e.a},
             {"delta_prime", e.delta_p},
             {"a_prime", e.a_p}};
    if (e.c) out["c"] = *e.c;
    return out;
}

inline json to_json(const WitnessCertificate& c) {
    return {{"setup", to_json(c.data)},
            {"touching_index", c.j},
            {"twists", to_json(c.table)},
            {"twists_prime", to_json(c.table_p)},
            {"free_module", to_json(c.fm)},
            {"free_module_prime", to_json(c.fm_p)},
            {"witness", to_json(c.witness)},
            {"image", to_json(c.image)}};
}

inline json to_json(const EqResolutionShape& s) {
    json shapes = json::array();
    for (const auto& w : s.shapes) shapes.push_back(to_json(w));
    return {{"degree_sequence", to_json(s.d)},
            {"shapes", shapes},
            {"det_twist", s.det_twist}};
}

inline json to_json(const EqHomCertificate& c) {
    json chain = json::array();
    for (const auto& d : c.chain) chain.push_back(to_json(d));
    json steps = json::array();
    for (const auto& st : c.steps) {
        json before = json::array(), after = json::array();
        for (const auto& w : st.before) before.push_back(to_json(w));
        for (const auto& w : st.after) after.push_back(to_json(w));
        json verdicts = json::array();
        for (std::size_t j = 0; j < st.surjective.size(); ++j)
            if (static_cast<int>(j) != st.position)
                verdicts.push_back({{"j", j}, {"surjective", st.surjective[j]}});
        steps.push_back({{"position", st.position},
                         {"before", before},
                         {"after", after},
                         {"verdicts", verdicts}});
    }
    return {{"d", to_json(c.d)},
            {"d_prime", to_json(c.dp)},
            {"touching_index", c.touching},
            {"chain", chain},
            {"steps", steps}};
}

inline json to_json(const BWBResult& r) {
    if (r.vanishing) return {{"vanishing", true}};
    return {{"vanishing", false},
            {"degree", r.degree},
            {"weight", to_json(r.weight)},
            {"dim", r.dim.str()}};
}

inline json to_json(const EqSupernaturalWeight& w) {
    return {{"lambda", to_json(w.lambda)}, {"twist", w.twist}};
}

inline json to_json(const EqRootHomCertificate& c) {
    return {{"exists", c.exists},
            {"lambda", to_json(c.lambda)},
            {"lambda_prime", to_json(c.lambda_p)},
            {"lambda_double_prime", to_json(c.lambda_pp)},
            {"lambda_complement", to_json(c.lambda_c)},
            {"N", c.N},
            {"slack", c.slack}};
}

inline json to_json(const SupernaturalTable& t) {
    json values = json::array();
    for (const auto& [key, v] : t.values)
        values.push_back({{"i", key.first}, {"j", key.second}, {"value", v.str()}});
    return {{"f", to_json(t.f)},
            {"rank_convention", t.rank_convention.str()},
            {"window", {t.window.first, t.window.second}},
            {"values", values}};
}

}  // namespace bs

// Command-line front end for the Boij-Soderberg toolkit: partial orders,
// pure diagrams and decomposition, Hom witness certificates, twist tables,
// equivariant shapes, and supernatural cohomology tables.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bs/betti.hpp"
#include "bs/core.hpp"
#include "bs/equivariant.hpp"
#include "bs/es_construction.hpp"
#include "bs/io.hpp"
#include "bs/supernatural.hpp"

namespace {

struct Output {
    std::string verb;
    bs::json input = bs::json::object();
    bs::json result;
    std::optional<bs::json> certificate;
    std::string text;
};

std::pair<long long, long long> parse_window(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos)
        throw bs::error(bs::errc::bad_input, "window must be a:b");
    return {bs::ExtInt::parse(s.substr(0, colon)).value(),
            bs::ExtInt::parse(s.substr(colon + 1)).value()};
}

std::string render_shapes_text(const bs::EqResolutionShape& s) { return s.render(); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boij-Soderberg toolkit"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out_path;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--out", out_path, "Write output to a file instead of stdout");

    std::optional<Output> output;

    // pure <d>
    {
        auto* cmd = app.add_subcommand("pure", "Pure diagram of a degree sequence");
        auto d = std::make_shared<std::string>();
        cmd->add_option("d", *d, "degree sequence, e.g. 0,2,4")->required();
        cmd->callback([&output, d] {
            auto seq = bs::parse_degree_sequence(*d);
            auto pi = bs::pure_diagram(seq);
            Output o;
            o.verb = "pure";
            o.input["d"] = bs::to_json(seq);
            o.result = bs::to_json(pi);
            o.text = pi.diagram().render();
            output = std::move(o);
        });
    }

    // decompose <diagram-file> [--n]
    {
        auto* cmd = app.add_subcommand("decompose", "Boij-Soderberg decomposition");
        auto file = std::make_shared<std::string>();
        auto n_opt = std::make_shared<int>(-1);
        cmd->add_option("diagram", *file, "JSON file with {i, j, value} records")
            ->required();
        cmd->add_option("--n", *n_opt, "number of variables (default: largest column)");
        cmd->callback([&output, file, n_opt] {
            std::ifstream in(*file);
            if (!in) throw bs::error(bs::errc::bad_input, "cannot open " + *file);
            bs::json raw = bs::json::parse(in, nullptr, true, true);
            auto diagram = bs::betti_diagram_from_json(raw);
            int n = *n_opt;
            if (n < 0)
                for (const auto& [key, value] : diagram.entries)
                    n = std::max(n, key.first);
            auto dec = bs::decompose(diagram, n);
            Output o;
            o.verb = "decompose";
            o.input["diagram"] = bs::to_json(diagram);
            o.input["n"] = n;
            o.result = bs::to_json(dec);
            std::ostringstream text;
            for (const auto& [c, pi] : dec.terms)
                text << bs::rational_str(c) << " * pi" << pi.d.str() << "\n";
            o.text = text.str();
            output = std::move(o);
        });
    }

    // order deg|root <a> <b>
    {
        auto* cmd = app.add_subcommand("order", "Compare two sequences in the partial order");
        auto kind = std::make_shared<std::string>();
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        cmd->add_option("kind", *kind, "deg or root")
            ->required()
            ->check(CLI::IsMember({"deg", "root"}));
        cmd->add_option("a", *a)->required();
        cmd->add_option("b", *b)->required();
        cmd->callback([&output, kind, a, b] {
            Output o;
            o.verb = "order " + *kind;
            bool leq;
            if (*kind == "deg") {
                auto da = bs::parse_degree_sequence(*a);
                auto db = bs::parse_degree_sequence(*b);
                if (da.n() != db.n())
                    throw bs::error(bs::errc::bad_input, "sequences of different lengths");
                leq = bs::deg_leq(da, db);
                o.input["a"] = bs::to_json(da);
                o.input["b"] = bs::to_json(db);
            } else {
                auto fa = bs::parse_root_sequence(*a);
                auto fb = bs::parse_root_sequence(*b);
                if (fa.n() != fb.n())
                    throw bs::error(bs::errc::bad_input, "sequences of different lengths");
                leq = bs::root_leq(fa, fb);
                o.input["a"] = bs::to_json(fa);
                o.input["b"] = bs::to_json(fb);
            }
            o.result = leq;
            o.text = leq ? "true\n" : "false\n";
            output = std::move(o);
        });
    }

    // witness deg <d> <d'> | witness root <f> <f'>
    {
        auto* cmd = app.add_subcommand("witness", "Constructive Hom certificate");
        auto kind = std::make_shared<std::string>();
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        cmd->add_option("kind", *kind, "deg or root")
            ->required()
            ->check(CLI::IsMember({"deg", "root"}));
        cmd->add_option("a", *a)->required();
        cmd->add_option("b", *b)->required();
        cmd->callback([&output, kind, a, b] {
            Output o;
            o.verb = "witness " + *kind;
            if (*kind == "deg") {
                auto d = bs::parse_degree_sequence(*a);
                auto dp = bs::parse_degree_sequence(*b);
                if (d.n() != dp.n())
                    throw bs::error(bs::errc::bad_input, "sequences of different lengths");
                o.input["d"] = bs::to_json(d);
                o.input["d_prime"] = bs::to_json(dp);
                auto red = bs::shift_reduction(d, dp);
                auto cert = bs::hom_witness(d, red.reduced);
                o.result = {{"shift", red.t},
                            {"reduced", bs::to_json(red.reduced)},
                            {"touching_index", cert.j}};
                o.certificate = bs::to_json(cert);
                std::ostringstream text;
                text << "shift t = " << red.t << ", reduced d' = " << red.reduced.str()
                     << "\n"
                     << "touching index j = " << cert.j << "\n"
                     << "witness:  " << cert.witness.str() << "\n"
                     << "nu image: " << cert.image.str() << "\n";
                o.text = text.str();
            } else {
                auto f = bs::parse_root_sequence(*a);
                auto fp = bs::parse_root_sequence(*b);
                if (f.n() != fp.n())
                    throw bs::error(bs::errc::bad_input, "sequences of different lengths");
                o.input["f"] = bs::to_json(f);
                o.input["f_prime"] = bs::to_json(fp);
                if (!bs::root_leq(f, fp))
                    throw bs::error(bs::errc::not_comparable, "f is not below f'");
                bs::Int bound = bs::hom_lower_bound(f, fp);
                auto split = bs::split_hom_dim(f, fp);
                o.result = {{"hom_lower_bound", bound.str()}};
                std::ostringstream text;
                text << "hom lower bound: " << bound.str() << "\n";
                if (split) {
                    o.result["split_hom_dim"] = split->str();
                    text << "split hom dim:   " << split->str() << "\n";
                }
                o.text = text.str();
            }
            output = std::move(o);
        });
    }

    // es table <d> <d'>
    {
        auto* cmd = app.add_subcommand("es", "Pushforward construction data");
        auto* sub = cmd->add_subcommand("table", "Twist tables of both Koszul complexes");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        sub->add_option("d", *a)->required();
        sub->add_option("d_prime", *b)->required();
        cmd->require_subcommand(1);
        sub->callback([&output, a, b] {
            auto d = bs::parse_degree_sequence(*a);
            auto dp = bs::parse_degree_sequence(*b);
            if (d.n() != dp.n())
                throw bs::error(bs::errc::bad_input, "sequences of different lengths");
            auto e = bs::es_setup(d, dp);
            auto t = bs::twist_table(e, bs::Side::unprimed);
            auto tp = bs::twist_table(e, bs::Side::primed);
            Output o;
            o.verb = "es table";
            o.input["d"] = bs::to_json(d);
            o.input["d_prime"] = bs::to_json(dp);
            o.result = {{"setup", bs::to_json(e)},
                        {"twists", bs::to_json(t)},
                        {"twists_prime", bs::to_json(tp)}};
            o.text = t.render() + tp.render();
            output = std::move(o);
        });
    }

    // eq shapes | eq witness | eq bwb | eq supernatural
    {
        auto* cmd = app.add_subcommand("eq", "Equivariant constructions");
        cmd->require_subcommand(1);

        auto* shapes = cmd->add_subcommand("shapes", "Generator weights of the pure resolution");
        auto sd = std::make_shared<std::string>();
        shapes->add_option("d", *sd)->required();
        shapes->callback([&output, sd] {
            auto d = bs::parse_degree_sequence(*sd);
            auto s = bs::efw_shapes(d);
            Output o;
            o.verb = "eq shapes";
            o.input["d"] = bs::to_json(d);
            o.result = bs::to_json(s);
            o.text = render_shapes_text(s);
            output = std::move(o);
        });

        auto* wit = cmd->add_subcommand("witness", "Equivariant Hom certificate");
        auto wa = std::make_shared<std::string>();
        auto wb = std::make_shared<std::string>();
        wit->add_option("d", *wa)->required();
        wit->add_option("d_prime", *wb)->required();
        wit->callback([&output, wa, wb] {
            auto d = bs::parse_degree_sequence(*wa);
            auto dp = bs::parse_degree_sequence(*wb);
            if (d.n() != dp.n())
                throw bs::error(bs::errc::bad_input, "sequences of different lengths");
            auto red = bs::shift_reduction(d, dp);
            auto cert = bs::eq_hom_witness(d, red.reduced);
            Output o;
            o.verb = "eq witness";
            o.input["d"] = bs::to_json(d);
            o.input["d_prime"] = bs::to_json(dp);
            o.result = {{"shift", red.t}, {"touching_index", cert.touching}};
            o.certificate = bs::to_json(cert);
            std::ostringstream text;
            text << "shift t = " << red.t << ", touching index k = " << cert.touching
                 << "\n"
                 << "chain of " << cert.steps.size() << " unit steps, all Pieri "
                 << "projections surjective away from the incremented position\n";
            o.text = text.str();
            output = std::move(o);
        });

        auto* bott = cmd->add_subcommand("bwb", "Cohomology of a twisted Schur bundle");
        auto bw = std::make_shared<std::string>();
        auto be = std::make_shared<long long>();
        auto bn = std::make_shared<int>();
        bott->add_option("lambda", *bw, "weight, e.g. 1,0")->required();
        bott->add_option("e", *be, "twist")->required();
        bott->add_option("n", *bn, "dimension of V")->required();
        bott->callback([&output, bw, be, bn] {
            auto w = bs::parse_weight(*bw);
            auto r = bs::bwb(w, *be, *bn);
            Output o;
            o.verb = "eq bwb";
            o.input = {{"lambda", bs::to_json(w)}, {"e", *be}, {"n", *bn}};
            o.result = bs::to_json(r);
            if (r.vanishing) o.text = "all cohomology vanishes\n";
            else
                o.text = "H^" + std::to_string(r.degree) + " of dimension " +
                         r.dim.str() + ", weight " + r.weight.str() + "\n";
            output = std::move(o);
        });

        auto* snat = cmd->add_subcommand("supernatural", "Equivariant supernatural bundle");
        auto sf = std::make_shared<std::string>();
        snat->add_option("f", *sf)->required();
        snat->callback([&output, sf] {
            auto f = bs::parse_root_sequence(*sf);
            auto w = bs::eq_supernatural_weight(f);
            Output o;
            o.verb = "eq supernatural";
            o.input["f"] = bs::to_json(f);
            o.result = bs::to_json(w);
            o.text = "lambda = " + w.lambda.str() + ", twist = " +
                     std::to_string(w.twist) + "\n";
            output = std::move(o);
        });
    }

    // snat table <f> [--window a:b]
    {
        auto* cmd = app.add_subcommand("snat", "Supernatural cohomology tables");
        cmd->require_subcommand(1);
        auto* sub = cmd->add_subcommand("table", "Cohomology table of a root sequence");
        auto f = std::make_shared<std::string>();
        auto window = std::make_shared<std::string>();
        sub->add_option("f", *f)->required();
        sub->add_option("--window", *window, "inclusive column range a:b");
        sub->callback([&output, f, window] {
            auto seq = bs::parse_root_sequence(*f);
            std::optional<std::pair<long long, long long>> w;
            if (!window->empty()) w = parse_window(*window);
            auto t = bs::table(seq, w);
            Output o;
            o.verb = "snat table";
            o.input["f"] = bs::to_json(seq);
            o.result = bs::to_json(t);
            o.text = t.render();
            output = std::move(o);
        });
    }

    std::string verb_guess = argc > 1 ? argv[1] : "";
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const bs::error& e) {
        if (format == "structured") {
            bs::json err{{"verb", verb_guess},
                         {"error", {{"code", e.code_name()}, {"message", e.what()}}}};
            std::cout << err.dump(2) << "\n";
        } else {
            std::cerr << "error [" << e.code_name() << "]: " << e.what() << "\n";
        }
        return e.code() == bs::errc::bad_input ? 1 : 2;
    }

    if (!output) return 1;
    std::ostringstream os;
    if (format == "structured") {
        bs::json record{{"verb", output->verb},
                        {"input", output->input},
                        {"result", output->result}};
        if (output->certificate) record["certificate"] = *output->certificate;
        os << record.dump(2) << "\n";
    } else {
        os << output->text;
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 1;
        }
        out << os.str();
    } else {
        std::cout << os.str();
    }
    return 0;
}

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "jacinf/corpus.hpp"
#include "jacinf/mapio.hpp"
#include "jacinf/report.hpp"

using namespace jacinf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitPrecondition = 4;
constexpr int kExitFixture = 5;

struct CommonOpts {
    std::string map_source;
    int max_blowups = 200;
    bool rational_only = false;
};

AnalyzeOptions to_analyze_options(const CommonOpts& c) {
    AnalyzeOptions o;
    o.resolve.max_blowups = c.max_blowups;
    o.resolve.rational_only = c.rational_only;
    return o;
}

int cmd_analyze(const CommonOpts& c, const std::string& dot_file, bool as_json) {
    PolyMap f = parse_map(c.map_source);
    Report r = analyze_map(f, c.map_source, to_analyze_options(c));
    if (as_json)
        std::cout << emit_json(r);
    else
        std::cout << emit_text(r);
    if (!dot_file.empty()) {
        std::ofstream out(dot_file);
        if (!out) {
            std::cerr << "error: cannot write " << dot_file << "\n";
            return 1;
        }
        out << emit_dot(r.tree, r.image_mults);
    }
    return kExitOk;
}

int cmd_certify(const CommonOpts& c) {
    PolyMap f = parse_map(c.map_source);
    ResolveOptions opts;
    opts.max_blowups = c.max_blowups;
    opts.rational_only = c.rational_only;
    Certificate cert = certify_automorphism(f, opts);
    std::cout << "verdict: " << cert.verdict_str() << "\n";
    if (cert.verdict == Certificate::Verdict::Automorphism)
        std::cout << "strong form (last pole order 6): " << (cert.strong_form ? "yes" : "no")
                  << "\n";
    for (const auto& s : cert.reasons) std::cout << "  - " << s << "\n";
    return kExitOk;
}

int cmd_degree(const CommonOpts& c) {
    PolyMap f = parse_map(c.map_source);
    std::cout << topological_degree(f, effective_seed()) << "\n";
    return kExitOk;
}

int cmd_random_auto(uint64_t seed, int factors, uint32_t max_exponent, int degree_cap) {
    auto [m, w] = random_automorphism(seed, factors, max_exponent, degree_cap);
    std::cout << "seed: " << seed << "\n";
    std::cout << "word: " << w.str() << "\n";
    if (w.retries) std::cout << "retries: " << w.retries << "\n";
    std::cout << "map: " << m.str() << "\n";
    std::cout << "jacobian: " << jacobian(m).str() << "\n";
    return kExitOk;
}

int cmd_selftest() {
    int failures = 0;
    auto report_line = [&](const std::string& name, bool ok, const std::string& why = "") {
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (!ok && !why.empty()) std::cout << "  (" << why << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    };

    for (const auto& fx : known_examples()) {
        std::string why;
        bool ok = true;
        try {
            Report r = analyze_map(fx.map, fx.name);
            if (fx.jacobian && r.jacobian != *fx.jacobian) {
                ok = false;
                why = "jacobian " + r.jacobian + " != " + *fx.jacobian;
            }
            if (ok && fx.exceptional_nodes &&
                static_cast<int>(r.tree.nodes.size()) - 1 != *fx.exceptional_nodes) {
                ok = false;
                why = "exceptional node count " + std::to_string(r.tree.nodes.size() - 1);
            }
            if (ok && fx.graph2_n && !matches_graph2(r.tree, *fx.graph2_n, &why)) ok = false;
            if (ok && fx.graph2_n) {
                const auto& last = r.tree.nodes.back();
                if (last.pole != 6 || last.mult_t != 1) {
                    ok = false;
                    why = "last node (p, a) != (6, 1)";
                }
            }
            if (ok && fx.degree && r.degree != *fx.degree) {
                ok = false;
                why = "degree mismatch";
            }
            if (ok && fx.degree && r.t_self.t2 != *fx.degree) {
                ok = false;
                why = "T^2 != degree";
            }
            if (ok && fx.verdict && r.certificate.verdict_str() != *fx.verdict) {
                ok = false;
                why = "verdict " + r.certificate.verdict_str() + " != " + *fx.verdict;
            }
            if (ok && fx.expect_strong && !r.certificate.strong_form) {
                ok = false;
                why = "strong form expected";
            }
            if (ok && !r.pole_pairs.empty()) {
                ok = false;
                why = "pole pair violation";
            }
            if (ok && !r.parity_even) {
                ok = false;
                why = "odd pole order";
            }
            if (ok && fx.nonproper_nonempty && r.non_properness.entries.empty()) {
                ok = false;
                why = "expected non-properness entries";
            }
            if (ok && r.order_relations.applicable && !r.order_relations.all_hold()) {
                ok = false;
                why = "order relation failed";
            }
            if (ok) {
                Report r2 = analyze_map(fx.map, fx.name);
                if (emit_json(r) != emit_json(r2)) {
                    ok = false;
                    why = "nondeterministic output";
                }
            }
        } catch (const std::exception& e) {
            ok = false;
            why = e.what();
        }
        report_line("fixture " + fx.name, ok, why);
    }

    // synthetic pole-pair violations carry the correct clause
    {
        auto mk = [&](long long a, long long b) {
            ResolutionTree t{identity_map()};
            TCurveNode p;
            p.id = 0;
            p.pole = a;
            p.name = "P";
            TCurveNode cnode;
            cnode.id = 1;
            cnode.pole = b;
            cnode.name = "C";
            cnode.t_parent = 0;
            t.nodes = {p, cnode};
            t.edges = {{0, 1, 1}};
            return t;
        };
        auto v1 = validate_pole_pairs(mk(2, 4));
        report_line("pole-pair fixture (2,4)", v1.size() == 1 && v1[0].clause == "a<=2 and b>=2");
        auto v2 = validate_pole_pairs(mk(-4, -4));
        report_line("pole-pair fixture (-4,-4)", v2.size() == 1 && v2[0].clause == "a=b<=-2");
    }

    std::cout << (failures == 0 ? "selftest OK" : "selftest FAILED") << "\n";
    return failures == 0 ? kExitOk : kExitFixture;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"jacinf: resolution at infinity and automorphism certification for plane "
                 "polynomial maps"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string dot_file;
    bool as_json = false;

    auto add_map_opts = [&](CLI::App* sub) {
        sub->add_option("map", common.map_source,
                        "map source \"P; Q\" over x, y (or @file)")
            ->required();
        sub->add_option("--max-blowups", common.max_blowups, "blow-up budget (default 200)");
        sub->add_flag("--rational-only", common.rational_only,
                      "treat irrational base points as a hard error");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "resolve and run every check");
    add_map_opts(analyze);
    analyze->add_option("--dot", dot_file, "write the annotated graph to FILE");
    analyze->add_flag("--json", as_json, "canonical structured output");

    CLI::App* certify = app.add_subcommand("certify", "chain-criterion automorphism certificate");
    add_map_opts(certify);

    CLI::App* degree = app.add_subcommand("degree", "topological degree of a dominant map");
    add_map_opts(degree);

    CLI::App* rnd = app.add_subcommand("random-auto", "seeded random tame automorphism");
    uint64_t seed = 1;
    int factors = 2;
    uint32_t max_exponent = 5;
    int degree_cap = 32;
    rnd->add_option("--seed", seed, "generator seed")->required();
    rnd->add_option("--factors", factors, "number of generator factors")->required();
    rnd->add_option("--max-exponent", max_exponent, "largest elementary exponent (default 5)");
    rnd->add_option("--degree-cap", degree_cap, "composition degree cap (default 32)");

    CLI::App* selftest = app.add_subcommand("selftest", "run the fixture corpus");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(common, dot_file, as_json);
        if (app.got_subcommand(certify)) return cmd_certify(common);
        if (app.got_subcommand(degree)) return cmd_degree(common);
        if (app.got_subcommand(rnd)) return cmd_random_auto(seed, factors, max_exponent, degree_cap);
        if (app.got_subcommand(selftest)) return cmd_selftest();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const PreconditionFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}

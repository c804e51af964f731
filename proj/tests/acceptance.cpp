// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "jacinf/corpus.hpp"
#include "jacinf/mapio.hpp"
#include "jacinf/report.hpp"

using namespace jacinf;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void line(int criterion, bool ok, const std::string& what) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << "\n";
    if (!ok) ++g_failures;
}

constexpr uint64_t kSeed = kDefaultSeed;

struct AutoCase {
    PolyMap map;
    GeneratorWord word;
};

std::vector<AutoCase> make_auto_corpus(size_t count) {
    std::vector<AutoCase> out;
    uint64_t seed = 1;
    while (out.size() < count) {
        int factors = static_cast<int>(seed % 4) + 1;  // 1..4 factors
        auto [m, w] = random_automorphism(seed, factors, 4, 32);
        out.push_back({std::move(m), std::move(w)});
        ++seed;
    }
    return out;
}

// criterion 1 ---------------------------------------------------------------
void criterion1() {
    bool ok = true;
    std::ostringstream what;
    what << "Graph 2 reproduction for F_n, n=2..5";
    for (int n = 2; n <= 5 && ok; ++n) {
        auto t0 = Clock::now();
        ResolutionTree t = resolve(parse_map("x + y^" + std::to_string(n) + "; y"));
        double dt = seconds_since(t0);
        std::string why;
        if (!matches_graph2(t, n, &why)) {
            ok = false;
            what << " [n=" << n << ": " << why << "]";
            break;
        }
        const auto& last = t.nodes.back();
        if (last.pole != 6 || last.mult_t != 1) {
            ok = false;
            what << " [n=" << n << ": last node (p,a)=(" << last.pole << ","
                 << (last.mult_t ? std::to_string(*last.mult_t) : "-") << ") != (6,1)]";
            break;
        }
        if (dt >= 5.0) {
            ok = false;
            what << " [n=" << n << ": took " << dt << "s >= 5s]";
            break;
        }
        what << " n=" << n << ":" << static_cast<int>(dt * 1000) << "ms";
    }
    line(1, ok, what.str());
}

// criterion 2 ---------------------------------------------------------------
void criterion2() {
    ResolutionTree t = resolve(parse_map("x + y^2; y"));
    struct Row {
        long long p, a, s;
    };
    const Row expect[4] = {{6, 2, -1}, {4, 1, -2}, {8, 2, -2}, {6, 1, -1}};
    bool ok = t.nodes.size() == 4;
    std::ostringstream what;
    what << "F2 hand-resolution oracle (p,a,s) per node";
    for (int i = 0; ok && i < 4; ++i) {
        const auto& n = t.nodes[static_cast<size_t>(i)];
        if (n.pole != expect[i].p || n.mult_t != expect[i].a || n.self_int != expect[i].s) {
            ok = false;
            what << " [node " << i << ": got (" << n.pole << ","
                 << (n.mult_t ? std::to_string(*n.mult_t) : "-") << "," << n.self_int << ")]";
        }
    }
    if (ok && !(t.has_edge(0, 2) && t.has_edge(1, 2) && t.has_edge(2, 3) && t.edges.size() == 3)) {
        ok = false;
        what << " [edges differ from {L-E2, E2-E1, E2-E3}]";
    }
    line(2, ok, what.str());
}

// criterion 3 ---------------------------------------------------------------
void criterion3() {
    auto t0 = Clock::now();
    bool ok = true;
    std::ostringstream what;
    what << "cusp example: J = y, image of y=0 is 27x^2 - 4y^3, branch cusp(2)";
    PolyMap g = parse_map("2x^3 + x*y; 3x^2 + y");
    auto vs = PolyMap::xy();
    if (jacobian(g) != Poly::variable(vs, 1)) {
        ok = false;
        what << " [jacobian " << jacobian(g).str() << "]";
    }
    // parametrization of y = 0: (P(t,0), Q(t,0)) = (2t^3, 3t^2)
    auto ps = make_vars({"t", "x", "y"});
    Poly tvar = Poly::variable(ps, 0);
    std::map<size_t, Poly> sub;
    sub.emplace(0, tvar);
    sub.emplace(1, Poly(ps));
    RationalParam par;
    par.field = FieldCtx{};
    par.space = ps;
    par.fn = g.P.substitute(sub, ps);
    par.fd = Poly::constant(ps, Rat(1));
    par.gn = g.Q.substitute(sub, ps);
    par.gd = Poly::constant(ps, Rat(1));
    if (ok) {
        Poly x = Poly::variable(ps, 1), y = Poly::variable(ps, 2);
        Poly implicit = implicitize(par, kSeed);
        Poly expect = make_monic_main(FieldCtx{},
                                      x * x.mul_scalar(Rat(27)) - y * y * y.mul_scalar(Rat(4)));
        if (implicit != expect) {
            ok = false;
            what << " [implicit " << implicit.str() << "]";
        }
        BranchType bt = classify_branch(par, tvar, kSeed);
        if (!(bt.kind == BranchType::Kind::Cusp && bt.p == 2)) {
            ok = false;
            what << " [branch " << bt.str() << "]";
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 1.0) {
        ok = false;
        what << " [took " << dt << "s >= 1s]";
    }
    line(3, ok, what.str());
}

// criteria 4-7 share the corpus ---------------------------------------------
void criteria4to7() {
    auto t0 = Clock::now();
    auto autos = make_auto_corpus(50);

    // criterion 4: T^2 = topological degree
    {
        bool ok = true;
        std::ostringstream what;
        what << "degree identity T^2 = j on " << autos.size()
             << " random automorphisms + squares + identity";
        size_t done = 0;
        for (const auto& ac : autos) {
            ResolutionTree t = resolve(ac.map);
            long long t2 = t_self_intersection(t).t2;
            long long j = topological_degree(ac.map, kSeed);
            if (t2 != 1 || j != 1) {
                ok = false;
                what << " [word " << ac.word.str() << ": T^2=" << t2 << " j=" << j << "]";
                break;
            }
            ++done;
        }
        if (ok) {
            ResolutionTree sq = resolve(parse_map("x^2 - y^2; 2xy"));
            if (t_self_intersection(sq).t2 != 4 ||
                topological_degree(sq.map, kSeed) != 4) {
                ok = false;
                what << " [squares map: expected 4]";
            }
            ResolutionTree id = resolve(identity_map());
            if (t_self_intersection(id).t2 != 1) {
                ok = false;
                what << " [identity: expected 1]";
            }
        }
        double dt = seconds_since(t0);
        if (dt >= 600.0) {
            ok = false;
            what << " [took " << dt << "s >= 600s]";
        }
        what << " (" << static_cast<int>(dt) << "s)";
        line(4, ok, what.str());
    }

    // criterion 5: certifier soundness
    {
        bool ok = true;
        std::ostringstream what;
        what << "certifier: every random automorphism certifies (strong); (x,xy) fails the "
                "precondition";
        for (const auto& ac : autos) {
            Certificate c = certify_automorphism(ac.map);
            if (c.verdict != Certificate::Verdict::Automorphism || !c.strong_form) {
                ok = false;
                what << " [word " << ac.word.str() << ": " << c.verdict_str() << "]";
                break;
            }
        }
        Certificate cxy = certify_automorphism(parse_map("x; x*y"));
        if (cxy.verdict != Certificate::Verdict::PreconditionFailed) {
            ok = false;
            what << " [(x,xy): " << cxy.verdict_str() << "]";
        }
        line(5, ok, what.str());
    }

    // criteria 6 and 7 run over every resolvable corpus map
    std::vector<std::pair<std::string, PolyMap>> corpus;
    for (const auto& fx : known_examples()) corpus.emplace_back(fx.name, fx.map);
    for (size_t i = 0; i < autos.size(); ++i)
        corpus.emplace_back("auto" + std::to_string(i + 1), autos[i].map);

    {
        bool ok = true;
        std::ostringstream what;
        what << "pole-pair exclusion on " << corpus.size()
             << " resolved maps + synthetic violation fixtures";
        for (const auto& [name, m] : corpus) {
            ResolutionTree t = resolve(m);
            auto v = validate_pole_pairs(t);
            if (!v.empty()) {
                ok = false;
                what << " [" << name << ": violation]";
                break;
            }
        }
        auto mk = [&](long long a, long long b) {
            ResolutionTree t{identity_map()};
            TCurveNode p;
            p.id = 0;
            p.pole = a;
            TCurveNode c;
            c.id = 1;
            c.pole = b;
            c.t_parent = 0;
            t.nodes = {p, c};
            t.edges = {{0, 1, 1}};
            return t;
        };
        auto v1 = validate_pole_pairs(mk(2, 4));
        if (!(v1.size() == 1 && v1[0].clause == "a<=2 and b>=2")) {
            ok = false;
            what << " [(2,4) fixture not flagged with clause a]";
        }
        auto v2 = validate_pole_pairs(mk(-4, -4));
        if (!(v2.size() == 1 && v2[0].clause == "a=b<=-2")) {
            ok = false;
            what << " [(-4,-4) fixture not flagged with clause c]";
        }
        line(6, ok, what.str());
    }

    {
        bool ok = true;
        std::ostringstream what;
        what << "order relations on constant-Jacobian maps; pole parity everywhere";
        for (const auto& [name, m] : corpus) {
            ResolutionTree t = resolve(m);
            for (const auto& n : t.nodes) {
                if (n.pole % 2 != 0) {
                    ok = false;
                    what << " [" << name << ": odd pole]";
                }
            }
            auto rep = check_order_relations(t, kSeed);
            Poly J = jacobian(m);
            bool constant_jac = J.is_constant() && !J.is_zero();
            if (rep.applicable != constant_jac) {
                ok = false;
                what << " [" << name << ": applicability gate wrong]";
            }
            if (rep.applicable && !rep.all_hold()) {
                ok = false;
                what << " [" << name << ": an order relation failed]";
            }
            if (!ok) break;
        }
        line(7, ok, what.str());
    }
}

// criterion 8 ---------------------------------------------------------------
void criterion8() {
    bool ok = true;
    std::ostringstream what;
    what << "determinism: byte-identical canonical output on every fixture";
    for (const auto& fx : known_examples()) {
        Report r1 = analyze_map(fx.map, fx.name);
        Report r2 = analyze_map(fx.map, fx.name);
        if (emit_json(r1) != emit_json(r2) || emit_text(r1) != emit_text(r2) ||
            emit_dot(r1.tree, r1.image_mults) != emit_dot(r2.tree, r2.image_mults)) {
            ok = false;
            what << " [" << fx.name << " differs]";
            break;
        }
    }
    line(8, ok, what.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criteria4to7();
    criterion8();
    if (g_failures) {
        std::cout << g_failures << " criterion(s) FAILED\n";
        return 1;
    }
    std::cout << "all acceptance criteria passed\n";
    return 0;
}

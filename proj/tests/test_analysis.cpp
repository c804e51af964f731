#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "jacinf/analysis.hpp"
#include "jacinf/mapio.hpp"

using namespace jacinf;

namespace {

constexpr uint64_t kSeed = 0x6a6163696e66ULL;

// Durand-Kerner root finder, test-only numeric oracle.
std::vector<std::complex<double>> dk_roots(std::vector<std::complex<double>> c) {
    using C = std::complex<double>;
    while (!c.empty() && std::abs(c.back()) < 1e-14) c.pop_back();
    size_t n = c.size() - 1;
    for (auto& z : c) z /= c.back();
    std::vector<C> r(n);
    for (size_t i = 0; i < n; ++i) r[i] = std::pow(C(0.4, 0.9), static_cast<double>(i + 1));
    for (int it = 0; it < 500; ++it) {
        double delta = 0;
        for (size_t i = 0; i < n; ++i) {
            C num = 0;
            for (size_t k = c.size(); k-- > 0;) num = num * r[i] + c[k];
            C den = 1;
            for (size_t j = 0; j < n; ++j)
                if (j != i) den *= (r[i] - r[j]);
            C step = num / den;
            r[i] -= step;
            delta = std::max(delta, std::abs(step));
        }
        if (delta < 1e-12) break;
    }
    return r;
}

// Synthetic two-node tree with a single (parent -> child) pole pair.
ResolutionTree synthetic_pair(long long a, long long b) {
    ResolutionTree t{parse_map("x; y")};
    TCurveNode p;
    p.id = 0;
    p.name = "P";
    p.pole = a;
    TCurveNode c;
    c.id = 1;
    c.name = "C";
    c.pole = b;
    c.t_parent = 0;
    t.nodes = {p, c};
    t.edges = {{0, 1, 1}};
    return t;
}

RationalParam make_param(const Poly& fn, const Poly& gn) {
    RationalParam par;
    par.field = FieldCtx{};
    par.space = fn.vars_ptr();
    par.fn = fn;
    par.fd = Poly::constant(par.space, Rat(1));
    par.gn = gn;
    par.gd = Poly::constant(par.space, Rat(1));
    return par;
}

}  // namespace

TEST_CASE("pole pairs: resolved F2 is consistent") {
    ResolutionTree t = resolve(parse_map("x + y^2; y"));
    CHECK(validate_pole_pairs(t).empty());
    // and the pairs are exactly (6,8), (8,4), (8,6)
    std::multiset<std::pair<long long, long long>> pairs;
    for (const auto& n : t.nodes)
        if (n.t_parent) pairs.insert({t.node(*n.t_parent).pole, n.pole});
    std::multiset<std::pair<long long, long long>> expect{{6, 8}, {8, 4}, {8, 6}};
    CHECK(pairs == expect);
}

TEST_CASE("pole pairs: synthetic violations with the correct clause") {
    auto v1 = validate_pole_pairs(synthetic_pair(2, 4));
    REQUIRE(v1.size() == 1);
    CHECK(v1[0].clause == "a<=2 and b>=2");
    CHECK(v1[0].a == 2);
    CHECK(v1[0].b == 4);

    auto v2 = validate_pole_pairs(synthetic_pair(-4, -4));
    REQUIRE(v2.size() == 1);
    CHECK(v2[0].clause == "a=b<=-2");

    auto v3 = validate_pole_pairs(synthetic_pair(4, -2));
    REQUIRE(v3.size() == 2);  // violates both a>=2&b<=-2 and a>=4&b<=0
}

TEST_CASE("topological degree: identity and elementary") {
    CHECK(topological_degree(identity_map(), kSeed) == 1);
    CHECK(topological_degree(parse_map("x + y^2; y"), kSeed) == 1);
}

TEST_CASE("topological degree: squaring-type map is 4, confirmed numerically") {
    PolyMap f = parse_map("x^2 - y^2; 2xy");
    CHECK(topological_degree(f, kSeed) == 4);

    // numeric brute force: fiber over (a,b) = (1/3, 5/7)
    double a = 1.0 / 3, b = 5.0 / 7;
    // y-values: roots of -4y^4 - 4a y^2 + b^2
    auto ys = dk_roots({{b * b, 0}, {0, 0}, {-4 * a, 0}, {0, 0}, {-4, 0}});
    int count = 0;
    for (auto y : ys) {
        if (std::abs(y) < 1e-9) continue;
        auto x = std::complex<double>(b, 0) / (2.0 * y);
        if (std::abs(x * x - y * y - a) < 1e-7) ++count;
    }
    CHECK(count == 4);
}

TEST_CASE("topological degree requires dominance") {
    CHECK_THROWS_AS(topological_degree(parse_map("x; x"), kSeed), PreconditionFailed);
}

TEST_CASE("T self-intersection equals the degree") {
    {
        ResolutionTree t = resolve(parse_map("x + y^2; y"));
        auto ts = t_self_intersection(t);
        CHECK(ts.t2 == 1);
        CHECK(ts.t2 == topological_degree(t.map, kSeed));
    }
    {
        ResolutionTree t = resolve(identity_map());
        CHECK(t_self_intersection(t).t2 == 1);
    }
    {
        ResolutionTree t = resolve(parse_map("x^2 - y^2; 2xy"));
        auto ts = t_self_intersection(t);
        CHECK(ts.t2 == 4);  // T = 2L, L^2 = 1
        CHECK(ts.t2 == topological_degree(t.map, kSeed));
    }
    {
        ResolutionTree t = resolve(parse_map("x; x*y"));
        auto ts = t_self_intersection(t);
        CHECK(ts.t2 == topological_degree(t.map, kSeed));
    }
}

TEST_CASE("T.E vanishes on contracted supp-T curves") {
    for (const char* src : {"x + y^2; y", "x + y^3; y", "x; x*y"}) {
        CAPTURE(src);
        ResolutionTree t = resolve(parse_map(src));
        auto ts = t_self_intersection(t);
        for (auto [id, val] : ts.t_dot_e) {
            auto img = restricted_map(t, id);
            if (img.kind == ParametrizedImage::Kind::Contracted) CHECK(val == 0);
        }
    }
}

TEST_CASE("image curve: cusp parametrization gives 27x^2 = 4y^3") {
    auto vs = make_vars({"t", "x", "y"});
    Poly t = Poly::variable(vs, 0), x = Poly::variable(vs, 1), y = Poly::variable(vs, 2);
    RationalParam par = make_param(t * t * t.mul_scalar(Rat(2)), t * t.mul_scalar(Rat(3)));
    Poly g = implicitize(par, kSeed);
    Poly expect = x * x.mul_scalar(Rat(27)) - y * y * y.mul_scalar(Rat(4));
    CHECK(g == make_monic_main(FieldCtx{}, expect));
    // composition back onto the parametrization is identically zero
    Poly comp = g.eval_at(1, par.fn).eval_at(2, par.gn);
    CHECK(comp.is_zero());
}

TEST_CASE("image curve: simple parametrizations") {
    auto vs = make_vars({"t", "x", "y"});
    Poly t = Poly::variable(vs, 0), x = Poly::variable(vs, 1), y = Poly::variable(vs, 2);
    CHECK(implicitize(make_param(t, t), kSeed) == x - y);
    CHECK(implicitize(make_param(t, t * t), kSeed) == x * x - y);  // monic form of y - x^2
}

TEST_CASE("image curve from the tree: (x, xy) node E3 maps onto x = 0 with m = 1") {
    ResolutionTree tr = resolve(parse_map("x; x*y"));
    ImageCurve ic = image_curve(tr, 3, kSeed);
    Poly x = Poly::variable(ic.implicit.vars_ptr(), 1);
    CHECK(ic.implicit == x);
    CHECK(ic.m == 1);
    CHECK_THROWS_WITH_AS(image_curve(tr, 1, kSeed), "node is contracted", std::invalid_argument);
}

TEST_CASE("classify branch: spec examples") {
    auto vs = make_vars({"t", "x", "y"});
    Poly t = Poly::variable(vs, 0);
    Poly root = t;  // t0 = 0

    BranchType cusp = classify_branch(
        make_param(t * t * t.mul_scalar(Rat(2)), t * t.mul_scalar(Rat(3))), root, kSeed);
    CHECK(cusp.kind == BranchType::Kind::Cusp);
    CHECK(cusp.p == 2);

    BranchType sm = classify_branch(make_param(t, t * t * t), root, kSeed);
    CHECK(sm.kind == BranchType::Kind::Smooth);

    BranchType gen = classify_branch(make_param(t * t, pow(t, 5)), root, kSeed);
    CHECK(gen.kind == BranchType::Kind::General);
    CHECK(gen.orders == std::pair<long long, long long>(2, 5));
}

TEST_CASE("classify branch: invariance under reparametrization and seed") {
    auto vs = make_vars({"t", "x", "y"});
    Poly t = Poly::variable(vs, 0);
    // t -> (3/2) t
    Poly t32 = t.mul_scalar(make_rat(3, 2));
    Poly f = pow(t32, 3).mul_scalar(Rat(2));
    Poly g = pow(t32, 2).mul_scalar(Rat(3));
    for (uint64_t seed : {kSeed, kSeed + 1, uint64_t{42}}) {
        BranchType bt = classify_branch(make_param(f, g), t, seed);
        CHECK(bt.kind == BranchType::Kind::Cusp);
        CHECK(bt.p == 2);
    }
}

TEST_CASE("order relations: F2 holds exactly") {
    ResolutionTree t = resolve(parse_map("x + y^2; y"));
    auto rep = check_order_relations(t, kSeed);
    CHECK(rep.applicable);
    CHECK(rep.all_hold());
    CHECK(rep.entries.size() >= 4);
}

TEST_CASE("order relations: applicable across the chain fixtures") {
    for (const char* src : {"x + y^3; y", "x + y^5; y"}) {
        CAPTURE(src);
        auto rep = check_order_relations(resolve(parse_map(src)), kSeed);
        CHECK(rep.applicable);
        CHECK(rep.all_hold());
    }
}

TEST_CASE("order relations: nonconstant Jacobian is not applicable") {
    auto rep = check_order_relations(resolve(parse_map("2x^3 + x*y; 3x^2 + y")), kSeed);
    CHECK_FALSE(rep.applicable);
    CHECK(rep.entries.empty());
}

TEST_CASE("certificates") {
    Certificate c1 = certify_automorphism(parse_map("x + y^3; y"));
    CHECK(c1.verdict == Certificate::Verdict::Automorphism);
    CHECK(c1.strong_form);

    Certificate c2 = certify_automorphism(identity_map());
    CHECK(c2.verdict == Certificate::Verdict::Automorphism);
    CHECK(c2.strong_form);

    Certificate c3 = certify_automorphism(parse_map("x; x*y"));
    CHECK(c3.verdict == Certificate::Verdict::PreconditionFailed);
    REQUIRE(c3.reasons.size() == 1);
    CHECK(c3.reasons[0].find("J = x") != std::string::npos);

    Certificate c4 = certify_automorphism(parse_map("x^2 - y^2; 2xy"));
    CHECK(c4.verdict == Certificate::Verdict::PreconditionFailed);
}

TEST_CASE("certificate assembly: tampered chains are rejected") {
    ResolutionTree t = resolve(parse_map("x + y^2; y"));

    {
        ResolutionTree bad = t;
        bad.nodes.back().pole = -2;
        Certificate c = certificate_from_tree(bad);
        CHECK(c.verdict == Certificate::Verdict::NotCertified);
        REQUIRE(!c.reasons.empty());
        CHECK(c.reasons[0].find("last pole order") != std::string::npos);
    }
    {
        ResolutionTree bad = t;
        bad.stages[1].centers.push_back(bad.stages[1].centers[0]);
        Certificate c = certificate_from_tree(bad);
        CHECK(c.verdict == Certificate::Verdict::NotCertified);
        CHECK(c.reasons[0].find("chain break at stage 2") != std::string::npos);
    }
    {
        ResolutionTree bad = t;
        bad.stages[2].centers[0].orbit_deg = 2;
        Certificate c = certificate_from_tree(bad);
        CHECK(c.verdict == Certificate::Verdict::NotCertified);
        CHECK(c.reasons[0].find("irrational center") != std::string::npos);
    }
    {
        ResolutionTree bad = t;
        bad.stages[2].centers[0].node = 0;
        bad.stages[2].centers[0].other_node = -1;
        Certificate c = certificate_from_tree(bad);
        CHECK(c.verdict == Certificate::Verdict::NotCertified);
        CHECK(c.reasons[0].find("not on the newest curve") != std::string::npos);
    }
}

TEST_CASE("non-properness report") {
    CHECK(non_properness_report(resolve(parse_map("x + y^2; y")), kSeed).entries.empty());
    CHECK(non_properness_report(resolve(identity_map()), kSeed).entries.empty());

    auto rep = non_properness_report(resolve(parse_map("x; x*y")), kSeed);
    REQUIRE(rep.entries.size() == 1);
    const auto& e = rep.entries[0];
    CHECK(e.node == 3);
    CHECK(e.image_is_curve);
    CHECK(e.image == "x = 0");
    CHECK(e.m == 1);
    CHECK(e.pole == 2);
    REQUIRE(e.branch.has_value());
    CHECK(e.branch->kind == BranchType::Kind::Smooth);
    CHECK_FALSE(rep.flagged);  // Jacobian x is not constant
}

TEST_CASE("minimality report") {
    CHECK(minimality_report(resolve(parse_map("x + y^2; y"))).empty());
    CHECK(minimality_report(resolve(identity_map())).empty());
    CHECK(minimality_report(resolve(parse_map("x + y^4; y"))).empty());
}

TEST_CASE("full invariant sweep on the dominant fixtures") {
    for (const char* src : {"x + y^2; y", "x + y^3; y", "x^2 - y^2; 2xy", "x; x*y",
                            "2x^3 + x*y; 3x^2 + y"}) {
        CAPTURE(src);
        ResolutionTree t = resolve(parse_map(src));
        CHECK(validate_pole_pairs(t).empty());
        for (const auto& n : t.nodes) CHECK(n.pole % 2 == 0);
        CHECK(t_self_intersection(t).t2 == topological_degree(t.map, kSeed));
    }
}

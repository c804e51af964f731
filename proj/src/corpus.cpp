#include "jacinf/corpus.hpp"

#include <random>
#include <sstream>

#include "jacinf/mapio.hpp"

namespace jacinf {

PolyMap factor_map(const GeneratorFactor& f) {
    const VarsPtr& xy = PolyMap::xy();
    Poly x = Poly::variable(xy, 0), y = Poly::variable(xy, 1);
    if (std::holds_alternative<AffineFactor>(f)) {
        const auto& a = std::get<AffineFactor>(f);
        return PolyMap(x.mul_scalar(a.a) + y.mul_scalar(a.b) + Poly::constant(xy, a.e),
                       x.mul_scalar(a.c) + y.mul_scalar(a.d) + Poly::constant(xy, a.f));
    }
    const auto& e = std::get<ElementaryFactor>(f);
    if (e.x_shear) return PolyMap(x + pow(y, e.k).mul_scalar(e.c), y);
    return PolyMap(x, y + pow(x, e.k).mul_scalar(e.c));
}

PolyMap factor_inverse(const GeneratorFactor& f) {
    const VarsPtr& xy = PolyMap::xy();
    Poly x = Poly::variable(xy, 0), y = Poly::variable(xy, 1);
    if (std::holds_alternative<AffineFactor>(f)) {
        const auto& a = std::get<AffineFactor>(f);
        Rat det = a.det();
        Rat ia = a.d / det, ib = -a.b / det, ic = -a.c / det, id = a.a / det;
        // inverse of v -> M v + t is v -> M^-1 v - M^-1 t
        Rat ie = -(ia * a.e + ib * a.f), iff = -(ic * a.e + id * a.f);
        return PolyMap(x.mul_scalar(ia) + y.mul_scalar(ib) + Poly::constant(xy, ie),
                       x.mul_scalar(ic) + y.mul_scalar(id) + Poly::constant(xy, iff));
    }
    const auto& e = std::get<ElementaryFactor>(f);
    if (e.x_shear) return PolyMap(x - pow(y, e.k).mul_scalar(e.c), y);
    return PolyMap(x, y - pow(x, e.k).mul_scalar(e.c));
}

PolyMap GeneratorWord::to_map() const {
    if (factors.empty()) return identity_map();
    PolyMap m = factor_map(factors.front());
    for (size_t i = 1; i < factors.size(); ++i) m = compose(m, factor_map(factors[i]));
    return m;
}

PolyMap GeneratorWord::inverse_map() const {
    if (factors.empty()) return identity_map();
    PolyMap m = factor_inverse(factors.back());
    for (size_t i = factors.size() - 1; i-- > 0;) m = compose(m, factor_inverse(factors[i]));
    return m;
}

Rat GeneratorWord::det_product() const {
    Rat d(1);
    for (const auto& f : factors)
        if (std::holds_alternative<AffineFactor>(f)) d *= std::get<AffineFactor>(f).det();
    return d;
}

std::string GeneratorWord::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << " . ";
        if (std::holds_alternative<AffineFactor>(factors[i])) {
            const auto& a = std::get<AffineFactor>(factors[i]);
            os << "affine[" << rat_str(a.a) << "," << rat_str(a.b) << ";" << rat_str(a.c) << ","
               << rat_str(a.d) << " | " << rat_str(a.e) << "," << rat_str(a.f) << "]";
        } else {
            const auto& e = std::get<ElementaryFactor>(factors[i]);
            os << "elem[" << (e.x_shear ? "x+" : "y+") << rat_str(e.c)
               << (e.x_shear ? "y^" : "x^") << e.k << "]";
        }
    }
    return os.str();
}

std::pair<PolyMap, GeneratorWord> random_automorphism(uint64_t seed, int n_factors,
                                                      uint32_t max_exponent, int degree_cap) {
    if (n_factors < 1) throw std::invalid_argument("random_automorphism: n_factors < 1");
    if (max_exponent < 2) throw std::invalid_argument("random_automorphism: max_exponent < 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-10, 10);
    std::uniform_int_distribution<long> den(1, 10);
    std::uniform_int_distribution<uint32_t> expo(2, max_exponent);
    std::uniform_int_distribution<int> coin(0, 1);
    auto rat = [&]() { return make_rat(num(rng), den(rng)); };
    auto nonzero_rat = [&]() {
        while (true) {
            Rat r = rat();
            if (r != 0) return r;
        }
    };

    int retries = 0;
    while (true) {
        GeneratorWord word;
        word.retries = retries;
        long long expected_deg = 1;
        for (int i = 0; i < n_factors; ++i) {
            if (i % 2 == 0) {
                ElementaryFactor e;
                e.c = nonzero_rat();
                e.k = expo(rng);
                e.x_shear = coin(rng) == 0;
                expected_deg *= e.k;
                word.factors.emplace_back(e);
            } else {
                AffineFactor a;
                do {
                    a.a = rat();
                    a.b = rat();
                    a.c = rat();
                    a.d = rat();
                } while (a.det() == 0);
                a.e = rat();
                a.f = rat();
                word.factors.emplace_back(a);
            }
        }
        if (expected_deg > degree_cap) {
            ++retries;
            continue;
        }
        PolyMap m = word.to_map();
        if (m.d != expected_deg) {
            ++retries;  // degree collapsed under an unlucky affine alignment
            continue;
        }
        word.retries = retries;
        return {std::move(m), std::move(word)};
    }
}

bool matches_graph2(const ResolutionTree& tree, int n, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (tree.nodes.size() != static_cast<size_t>(2 * n))
        return fail("expected " + std::to_string(2 * n - 1) + " exceptional curves, got " +
                    std::to_string(tree.nodes.size() - 1));
    if (tree.edges.size() != static_cast<size_t>(2 * n - 1)) return fail("edge count mismatch");
    if (!tree.has_edge(0, 2)) return fail("missing edge L-E2");
    for (int k = 2; k < n; ++k)
        if (!tree.has_edge(k, k + 1))
            return fail("missing edge E" + std::to_string(k) + "-E" + std::to_string(k + 1));
    if (!tree.has_edge(n, 1)) return fail("missing edge E" + std::to_string(n) + "-E1");
    for (int j = n; j < 2 * n - 1; ++j)
        if (!tree.has_edge(j, j + 1))
            return fail("missing edge E" + std::to_string(j) + "-E" + std::to_string(j + 1));
    return true;
}

std::vector<Fixture> known_examples() {
    std::vector<Fixture> out;
    for (int n = 2; n <= 5; ++n) {
        Fixture f{"F" + std::to_string(n), parse_map("x + y^" + std::to_string(n) + "; y")};
        f.exceptional_nodes = 2 * n - 1;
        f.graph2_n = n;
        f.degree = 1;
        f.verdict = "automorphism";
        f.expect_strong = true;
        f.jacobian = "1";
        out.push_back(std::move(f));
    }
    {
        Fixture f{"cusp", parse_map("2x^3 + x*y; 3x^2 + y")};
        f.jacobian = "y";
        f.verdict = "precondition-failed";
        out.push_back(std::move(f));
    }
    {
        Fixture f{"identity", identity_map()};
        f.exceptional_nodes = 0;
        f.degree = 1;
        f.verdict = "automorphism";
        f.expect_strong = true;
        f.jacobian = "1";
        out.push_back(std::move(f));
    }
    {
        Fixture f{"squares", parse_map("x^2 - y^2; 2xy")};
        f.exceptional_nodes = 0;
        f.degree = 4;
        f.verdict = "precondition-failed";
        out.push_back(std::move(f));
    }
    {
        Fixture f{"shear-degenerate", parse_map("x; x*y")};
        f.verdict = "precondition-failed";
        f.jacobian = "x";
        f.degree = 1;
        f.nonproper_nonempty = true;
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace jacinf

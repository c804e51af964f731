#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "jacinf/polymap.hpp"
#include "jacinf/resolution.hpp"

namespace jacinf {

/// An invertible affine factor (x, y) -> (a x + b y + e, c x + d y + f).
struct AffineFactor {
    Rat a, b, c, d, e, f;
    Rat det() const { return a * d - b * c; }
};

/// An elementary shear (x + c y^k, y) or (x, y + c x^k), c != 0, k >= 2.
struct ElementaryFactor {
    Rat c;
    uint32_t k;
    bool x_shear;
};

using GeneratorFactor = std::variant<AffineFactor, ElementaryFactor>;

/// A word in the tame generators. The composed map applies factors.front()
/// outermost: map = f1 o f2 o ... o fn.
struct GeneratorWord {
    std::vector<GeneratorFactor> factors;
    int retries = 0;  // internal resamples against the degree cap

    PolyMap to_map() const;
    /// Composition of the factor inverses in reverse order.
    PolyMap inverse_map() const;
    Rat det_product() const;
    std::string str() const;
};

PolyMap factor_map(const GeneratorFactor& f);
PolyMap factor_inverse(const GeneratorFactor& f);

/// Seed-deterministic random automorphism: alternating elementary and affine
/// factors (elementary first), coefficients small rationals, resampled until
/// the expanded degree equals the product of the elementary exponents and
/// stays within the cap.
std::pair<PolyMap, GeneratorWord> random_automorphism(uint64_t seed, int n_factors,
                                                      uint32_t max_exponent = 5,
                                                      int degree_cap = 32);

/// A named test map with its expected facts.
struct Fixture {
    std::string name;
    PolyMap map;
    std::optional<int> exceptional_nodes;
    std::optional<int> graph2_n;            // adjacency must match Graph 2 for this n
    std::optional<long long> degree;        // topological degree
    std::optional<std::string> verdict;     // expected certificate verdict
    bool expect_strong = false;
    std::optional<std::string> jacobian;    // canonical text of J
    bool nonproper_nonempty = false;
};

/// The fixed example corpus: F_n for n = 2..5, the cusp map, the identity,
/// the squaring-type map, and (x, xy).
std::vector<Fixture> known_examples();

/// Adjacency check against Graph 2 for F_n: path L-E2-...-E_n, branch
/// E_n-E1, chain E_n-E_{n+1}-...-E_{2n-1}, with 2n-1 exceptional curves.
bool matches_graph2(const ResolutionTree& tree, int n, std::string* why = nullptr);

}  // namespace jacinf

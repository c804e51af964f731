#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacinf/analysis.hpp"
#include "jacinf/corpus.hpp"
#include "jacinf/mapio.hpp"

using namespace jacinf;

TEST_CASE("seed determinism") {
    auto [m1, w1] = random_automorphism(12345, 3);
    auto [m2, w2] = random_automorphism(12345, 3);
    CHECK(m1.str() == m2.str());
    CHECK(w1.str() == w2.str());
    auto [m3, w3] = random_automorphism(54321, 3);
    CHECK(m1.str() != m3.str());  // overwhelmingly likely
}

TEST_CASE("single elementary factor") {
    auto [m, w] = random_automorphism(7, 1, 2);
    REQUIRE(w.factors.size() == 1);
    REQUIRE(std::holds_alternative<ElementaryFactor>(w.factors[0]));
    const auto& e = std::get<ElementaryFactor>(w.factors[0]);
    CHECK(e.c != 0);
    CHECK(e.k == 2);
    CHECK(m.d == 2);
}

TEST_CASE("jacobian equals the product of affine determinants") {
    for (uint64_t seed : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u}) {
        for (int nf : {1, 2, 3, 4}) {
            auto [m, w] = random_automorphism(seed * 97 + static_cast<uint64_t>(nf), nf, 4);
            Poly J = jacobian(m);
            REQUIRE(J.is_constant());
            CHECK(J.constant_value() == w.det_product());
            CHECK(J.constant_value() != 0);
        }
    }
}

TEST_CASE("degree is the product of the elementary exponents, within the cap") {
    for (uint64_t seed : {11u, 22u, 33u, 44u}) {
        auto [m, w] = random_automorphism(seed, 4, 5, 32);
        long long prod = 1;
        for (const auto& f : w.factors)
            if (std::holds_alternative<ElementaryFactor>(f))
                prod *= std::get<ElementaryFactor>(f).k;
        CHECK(m.d == prod);
        CHECK(m.d <= 32);
    }
}

TEST_CASE("word round trip: inverse word composes to the identity") {
    for (uint64_t seed : {3u, 17u, 29u}) {
        for (int nf : {1, 2, 3}) {
            auto [m, w] = random_automorphism(seed + static_cast<uint64_t>(nf) * 1000, nf, 3);
            PolyMap inv = w.inverse_map();
            PolyMap round = compose(inv, m);
            CHECK(round.str() == identity_map().str());
        }
    }
}

TEST_CASE("generated maps certify and have degree 1") {
    for (uint64_t seed : {101u, 202u}) {
        auto [m, w] = random_automorphism(seed, 3, 3);
        Certificate c = certify_automorphism(m);
        CHECK(c.verdict == Certificate::Verdict::Automorphism);
        CHECK(c.strong_form);
        CHECK(topological_degree(m, 99) == 1);
    }
}

TEST_CASE("known examples carry the expected facts") {
    auto fx = known_examples();
    REQUIRE(fx.size() == 8);
    CHECK(fx[0].name == "F2");
    CHECK(fx[0].exceptional_nodes == 3);
    CHECK(fx[0].graph2_n == 2);
    auto cusp = std::find_if(fx.begin(), fx.end(), [](auto& f) { return f.name == "cusp"; });
    REQUIRE(cusp != fx.end());
    CHECK(jacobian(cusp->map).str() == "y");
    auto id = std::find_if(fx.begin(), fx.end(), [](auto& f) { return f.name == "identity"; });
    REQUIRE(id != fx.end());
    CHECK(certify_automorphism(id->map).verdict == Certificate::Verdict::Automorphism);
}

#pragma once

#include <vector>

#include "jacinf/tower.hpp"

namespace jacinf {

// Operations on polynomials over a field context. Polynomial spaces follow
// the trailing-generators convention: the first nmain variables are
// polynomial variables, the rest are tower generators. Over the empty tower
// these are plain operations over Q.

/// Leading coefficient with respect to the main variables under graded-lex:
/// returns the field element (gens-only terms) attached to the maximal main
/// monomial. p must be nonzero.
Poly lead_main_coeff(const FieldCtx& ctx, const Poly& p);

/// Scale so the graded-lex leading main coefficient is 1. Zero stays zero.
Poly make_monic_main(const FieldCtx& ctx, const Poly& p);

/// Exact division over the field: a = q*b in K[mains]; throws if not exact.
Poly divide_exact_field(const FieldCtx& ctx, const Poly& a, const Poly& b);

/// Pseudo-remainder lc(b)^(deg_a - deg_b + 1) * a mod b with respect to var.
Poly pseudo_rem(const FieldCtx& ctx, const Poly& a, const Poly& b, size_t var);

/// gcd over K[mains], monic under graded-lex; gcd(0, b) = monic b.
/// Contents are split off recursively; primitive parts go through the
/// subresultant PRS.
Poly poly_gcd(const FieldCtx& ctx, const Poly& a, const Poly& b);

/// Resultant with respect to one main variable, via the subresultant PRS.
/// Errors when either input is zero or both have degree 0 in var.
Poly resultant(const FieldCtx& ctx, const Poly& a, const Poly& b, size_t var);

/// Product of the distinct irreducible factors involving var:
/// a / gcd(a, da/dvar), made monic.
Poly squarefree_part(const FieldCtx& ctx, const Poly& a, size_t var);

/// Univariate gcd over K (Euclid with monic normalization).
Poly uni_gcd(const FieldCtx& ctx, const Poly& a, const Poly& b, size_t var);

/// Yun's squarefree factorization of a univariate polynomial: monic
/// pairwise-coprime squarefree factors with multiplicities, ordered by
/// multiplicity.
std::vector<std::pair<Poly, int>> squarefree_factorization(const FieldCtx& ctx, const Poly& p,
                                                           size_t var);

struct RootOrbit {
    Poly modulus;  // monic squarefree factor, univariate over the tower
    int multiplicity;
};

/// Squarefree decomposition of p into Galois-orbit moduli, refined through
/// the split oracle when one is supplied, in canonical order (degree, then
/// coefficient sequence). Constant p yields the empty list.
std::vector<RootOrbit> univariate_root_orbits(const FieldCtx& ctx, const Poly& p, size_t var,
                                              const SplitOracle* oracle = nullptr);

/// Extend the tower by one generator. The modulus must be univariate in the
/// trailing variable of its space (the new generator) over the current
/// generators, squarefree and of degree >= 2; it is stored monic.
FieldCtx ext_adjoin(const FieldCtx& ctx, const Poly& modulus, const std::string& gen_name);

}  // namespace jacinf

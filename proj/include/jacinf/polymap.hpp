#pragma once

#include "jacinf/poly.hpp"

namespace jacinf {

/// A polynomial self-map F = (P, Q) of the affine plane, over the fixed
/// coordinate space (x, y). d = max(deg P, deg Q) >= 1.
struct PolyMap {
    Poly P, Q;
    int d;

    PolyMap(Poly p, Poly q);

    /// The shared (x, y) variable space used by all maps.
    static const VarsPtr& xy();

    std::string str() const;  // "P; Q", parseable
};

/// Jacobian determinant P_x Q_y - P_y Q_x, exactly.
Poly jacobian(const PolyMap& f);

/// Composition (f o g)(x, y) = f(g(x, y)), expanded exactly.
PolyMap compose(const PolyMap& f, const PolyMap& g);

PolyMap identity_map();

}  // namespace jacinf

#include "jacinf/polymap.hpp"

#include <stdexcept>

namespace jacinf {

const VarsPtr& PolyMap::xy() {
    static VarsPtr space = make_vars({"x", "y"});
    return space;
}

PolyMap::PolyMap(Poly p, Poly q) : P(std::move(p)), Q(std::move(q)) {
    if (P.vars() != *xy()) P = P.aligned_to(xy());
    if (Q.vars() != *xy()) Q = Q.aligned_to(xy());
    d = std::max(P.total_degree(), Q.total_degree());
    if (d < 1) throw std::invalid_argument("map components are both constant");
}

std::string PolyMap::str() const { return P.str() + "; " + Q.str(); }

Poly jacobian(const PolyMap& f) {
    return f.P.derivative(0) * f.Q.derivative(1) - f.P.derivative(1) * f.Q.derivative(0);
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
    std::map<size_t, Poly> sub;
    sub.emplace(0, g.P);
    sub.emplace(1, g.Q);
    return PolyMap(f.P.substitute(sub, PolyMap::xy()), f.Q.substitute(sub, PolyMap::xy()));
}

PolyMap identity_map() {
    return PolyMap(Poly::variable(PolyMap::xy(), 0), Poly::variable(PolyMap::xy(), 1));
}

}  // namespace jacinf

#include "jacinf/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jacinf {

namespace {
const Vars kNoVars;
uint64_t exp_total(const Poly::Exp& e) {
    uint64_t s = 0;
    for (auto x : e) s += x;
    return s;
}
}  // namespace

VarsPtr make_vars(std::initializer_list<const char*> names) {
    Vars v;
    for (auto n : names) v.emplace_back(n);
    return std::make_shared<const Vars>(std::move(v));
}

VarsPtr make_vars(Vars names) { return std::make_shared<const Vars>(std::move(names)); }

bool Poly::TermOrder::operator()(const Exp& a, const Exp& b) const {
    uint64_t ta = exp_total(a), tb = exp_total(b);
    if (ta != tb) return ta > tb;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

const Vars& Poly::vars() const { return vars_ ? *vars_ : kNoVars; }

size_t Poly::var_index(const std::string& name) const {
    const Vars& v = vars();
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] == name) return i;
    throw std::invalid_argument("unknown variable: " + name);
}

Poly Poly::constant(VarsPtr vars, Rat c) {
    Poly p(std::move(vars));
    if (c != 0) p.terms_.emplace(Exp(p.nvars(), 0), std::move(c));
    return p;
}

Poly Poly::variable(VarsPtr vars, size_t index) {
    Poly p(std::move(vars));
    if (index >= p.nvars()) throw std::invalid_argument("variable index out of range");
    Exp e(p.nvars(), 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

Poly Poly::monomial(VarsPtr vars, Exp e, Rat c) {
    Poly p(std::move(vars));
    if (e.size() != p.nvars()) throw std::invalid_argument("exponent arity mismatch");
    if (c != 0) p.terms_.emplace(std::move(e), std::move(c));
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && exp_total(terms_.begin()->first) == 0;
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::logic_error("constant_value on nonconstant polynomial");
    return terms_.begin()->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(exp_total(terms_.begin()->first));
}

int Poly::degree_in(size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

uint32_t Poly::min_degree_in(size_t var) const {
    uint32_t m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e[var] < m) m = e[var];
        first = false;
    }
    return first ? 0 : m;
}

Rat Poly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::check_compat(const Poly& o) const {
    if (vars() != o.vars()) throw std::logic_error("polynomial variable spaces differ");
}

void Poly::add_term(const Exp& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    check_compat(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_compat(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::mul_scalar(const Rat& c) const {
    Poly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::mul_monomial(const Exp& e, const Rat& c) const {
    Poly r(vars_);
    if (c == 0) return r;
    for (const auto& [te, tc] : terms_) {
        Exp ne(te);
        for (size_t i = 0; i < ne.size(); ++i) ne[i] += e[i];
        r.terms_.emplace(std::move(ne), tc * c);
    }
    return r;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.vars() != b.vars()) throw std::logic_error("polynomial variable spaces differ");
    Poly r(a.vars_ptr());
    if (a.is_zero() || b.is_zero()) return r;
    // Iterate over the smaller operand's terms in the outer loop.
    const Poly& small = a.nterms() <= b.nterms() ? a : b;
    const Poly& big = a.nterms() <= b.nterms() ? b : a;
    for (const auto& [e, c] : small.terms()) r += big.mul_monomial(e, c);
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

bool Poly::operator==(const Poly& o) const {
    return vars() == o.vars() && terms_ == o.terms_;
}

Poly Poly::coeff_of(size_t var, uint32_t power) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != power) continue;
        Exp ne(e);
        ne[var] = 0;
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

Poly Poly::shift_down(size_t var, uint32_t k) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] < k) throw std::logic_error("shift_down: term not divisible");
        Exp ne(e);
        ne[var] -= k;
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

Poly Poly::derivative(size_t var) const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exp ne(e);
        ne[var] -= 1;
        r.add_term(ne, c * Rat(static_cast<long>(e[var])));
    }
    return r;
}

Poly Poly::substitute(const std::map<size_t, Poly>& sub, const VarsPtr& target) const {
    const Vars& tv = *target;
    // Map untouched variables by name into the target space.
    std::vector<size_t> remap(nvars(), SIZE_MAX);
    for (size_t i = 0; i < nvars(); ++i) {
        if (sub.count(i)) continue;
        auto it = std::find(tv.begin(), tv.end(), vars()[i]);
        if (it == tv.end())
            throw std::logic_error("substitute: variable " + vars()[i] + " missing from target");
        remap[i] = static_cast<size_t>(it - tv.begin());
    }
    // Memoized powers of each replacement.
    std::map<size_t, std::vector<Poly>> powers;
    for (const auto& [i, p] : sub) {
        if (p.vars() != tv) throw std::logic_error("substitute: replacement space mismatch");
        powers[i] = {Poly::constant(target, Rat(1))};
    }
    auto power_of = [&](size_t i, uint32_t k) -> const Poly& {
        auto& v = powers[i];
        while (v.size() <= k) v.push_back(v.back() * sub.at(i));
        return v[k];
    };
    Poly result(target);
    for (const auto& [e, c] : terms_) {
        Exp base(tv.size(), 0);
        for (size_t i = 0; i < nvars(); ++i)
            if (remap[i] != SIZE_MAX) base[remap[i]] = e[i];
        Poly term = Poly::monomial(target, base, c);
        for (const auto& [i, p] : sub)
            if (e[i] > 0) term *= power_of(i, e[i]);
        result += term;
    }
    return result;
}

Poly Poly::eval_at(size_t var, const Poly& value) const {
    std::map<size_t, Poly> sub;
    sub.emplace(var, value);
    return substitute(sub, vars_ptr());
}

Poly Poly::aligned_to(const VarsPtr& target) const {
    if (vars_ptr() == target || vars() == *target) {
        Poly r = *this;
        const_cast<VarsPtr&>(r.vars_) = target;
        return r;
    }
    const Vars& tv = *target;
    std::vector<size_t> remap(nvars());
    for (size_t i = 0; i < nvars(); ++i) {
        auto it = std::find(tv.begin(), tv.end(), vars()[i]);
        if (it == tv.end())
            throw std::logic_error("aligned_to: variable " + vars()[i] + " missing from target");
        remap[i] = static_cast<size_t>(it - tv.begin());
    }
    Poly r(target);
    for (const auto& [e, c] : terms_) {
        Exp ne(tv.size(), 0);
        for (size_t i = 0; i < nvars(); ++i) ne[remap[i]] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

bool Poly::try_divide_exact(const Poly& a, const Poly& b, Poly& q) {
    if (a.vars() != b.vars()) throw std::logic_error("polynomial variable spaces differ");
    if (b.is_zero()) return false;
    Poly rem = a;
    Poly quot(a.vars_ptr());
    const auto& blead = *b.terms().begin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().begin();
        Exp qe(rlead.first.size());
        for (size_t i = 0; i < qe.size(); ++i) {
            if (rlead.first[i] < blead.first[i]) return false;
            qe[i] = rlead.first[i] - blead.first[i];
        }
        Rat qc = rlead.second / blead.second;
        quot.add_term(qe, qc);
        rem -= b.mul_monomial(qe, qc);
    }
    q = std::move(quot);
    return true;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat ac = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
            first = false;
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        bool hasvar = exp_total(e) > 0;
        bool unit = (ac == 1);
        if (!unit || !hasvar) os << rat_str(ac);
        bool lead = !unit || !hasvar;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (lead) os << "*";
            os << vars()[i];
            if (e[i] > 1) os << "^" << e[i];
            lead = true;
        }
    }
    return os.str();
}

Poly pow(const Poly& base, uint32_t e) {
    Poly r = Poly::constant(base.vars_ptr(), Rat(1));
    Poly b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

int poly_cmp(const Poly& a, const Poly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    Poly::TermOrder lt;
    while (ia != a.terms().end() && ib != b.terms().end()) {
        if (lt(ia->first, ib->first)) return 1;   // a has the larger monomial
        if (lt(ib->first, ia->first)) return -1;
        int c = rat_cmp(ia->second, ib->second);
        if (c != 0) return c;
        ++ia;
        ++ib;
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

}  // namespace jacinf

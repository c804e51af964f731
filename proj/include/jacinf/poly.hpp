#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "jacinf/rational.hpp"

namespace jacinf {

using Vars = std::vector<std::string>;
using VarsPtr = std::shared_ptr<const Vars>;

VarsPtr make_vars(std::initializer_list<const char*> names);
VarsPtr make_vars(Vars names);

/// Sparse multivariate polynomial over Q with an explicit ordered variable
/// list. Terms are kept in descending graded-lex order, so begin() is the
/// leading term. No zero coefficients are ever stored; the zero polynomial
/// has an empty term map and total degree -1.
class Poly {
public:
    using Exp = std::vector<uint32_t>;

    // Descending graded lexicographic: higher total degree first, then
    // lexicographically larger exponent vector first.
    struct TermOrder {
        bool operator()(const Exp& a, const Exp& b) const;
    };
    using Terms = std::map<Exp, Rat, TermOrder>;

    Poly() = default;  // zero polynomial over the empty variable list
    explicit Poly(VarsPtr vars) : vars_(std::move(vars)) {}

    static Poly constant(VarsPtr vars, Rat c);
    static Poly variable(VarsPtr vars, size_t index);
    static Poly monomial(VarsPtr vars, Exp e, Rat c);

    const Vars& vars() const;
    const VarsPtr& vars_ptr() const { return vars_; }
    size_t nvars() const { return vars().size(); }
    size_t var_index(const std::string& name) const;  // throws if absent

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // 0 for the zero polynomial
    const Terms& terms() const { return terms_; }
    size_t nterms() const { return terms_.size(); }

    int total_degree() const;  // -1 sentinel for zero
    int degree_in(size_t var) const;
    uint32_t min_degree_in(size_t var) const;  // order of vanishing along var=0; 0 for zero poly
    Rat coeff(const Exp& e) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    Poly mul_scalar(const Rat& c) const;
    Poly mul_monomial(const Exp& e, const Rat& c) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Coefficient of var^power, as a polynomial in the same variable space
    /// (the chosen variable appears with exponent 0).
    Poly coeff_of(size_t var, uint32_t power) const;
    /// Divide by var^k; requires every term divisible.
    Poly shift_down(size_t var, uint32_t k) const;
    Poly derivative(size_t var) const;
    /// Substitute variables by polynomials over a target space. Variables not
    /// mentioned must exist in the target space under the same name.
    Poly substitute(const std::map<size_t, Poly>& sub, const VarsPtr& target) const;
    Poly eval_at(size_t var, const Poly& value) const;  // target = same space
    /// Re-express over a superset variable list (match by name).
    Poly aligned_to(const VarsPtr& target) const;

    /// Exact division over Q[vars]; returns false if b does not divide a.
    static bool try_divide_exact(const Poly& a, const Poly& b, Poly& q);

    std::string str() const;  // canonical, deterministic

    void add_term(const Exp& e, const Rat& c);  // accumulate, dropping zeros

private:
    VarsPtr vars_;
    Terms terms_;
    void check_compat(const Poly& o) const;
};

Poly operator*(const Poly& a, const Poly& b);
Poly pow(const Poly& base, uint32_t e);

/// Total order on polynomials over the same variable space: compares the
/// term sequences (monomial, coefficient) in descending graded-lex order.
/// Used only for deterministic tie-breaking, not algebra.
int poly_cmp(const Poly& a, const Poly& b);

}  // namespace jacinf

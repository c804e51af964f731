#pragma once

#include <exception>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jacinf/poly.hpp"

namespace jacinf {

/// One level of an algebraic extension tower: a generator name and its monic
/// squarefree modulus, a univariate polynomial in the generator whose
/// coefficients live in the levels below. The modulus need not be
/// irreducible; zero divisors discovered later trigger splits (D5).
struct TowerLevel {
    std::string gen;
    Poly modulus;  // variable space: [g0, ..., g_k] with g_k == gen; monic in gen
};

/// An extension tower over Q. The empty tower is Q itself. Total degree is
/// the product of the modulus degrees.
class Tower {
public:
    Tower() = default;

    size_t height() const { return levels_.size(); }
    const TowerLevel& level(size_t i) const { return levels_.at(i); }
    const std::vector<TowerLevel>& levels() const { return levels_; }
    uint64_t total_degree() const;
    Vars gen_names() const;
    /// Variable space [g0, ..., g_{h-1}] of field elements.
    VarsPtr gen_space() const;

    /// Canonical serialization of levels [0, k); used as split-oracle keys.
    std::string signature_prefix(size_t k) const;
    std::string signature() const { return signature_prefix(height()); }

    Tower extended(TowerLevel lvl) const;
    /// Copy with level k's modulus replaced (for split branches).
    Tower with_modulus(size_t k, Poly m) const;

    bool operator==(const Tower& o) const;

private:
    std::vector<TowerLevel> levels_;
};

/// Thrown when arithmetic meets a zero divisor: the modulus at `level`
/// factors as factor_a * factor_b. The resolution engine records the
/// factorization and replays the computation per branch.
struct SplitDiscovered : std::exception {
    size_t level;
    std::string prefix_sig;
    Poly modulus, factor_a, factor_b;
    std::string msg;
    SplitDiscovered(size_t lvl, std::string sig, Poly m, Poly fa, Poly fb);
    const char* what() const noexcept override { return msg.c_str(); }
};

/// Value-level result of ext_invert when a zero divisor is found: the two
/// refined towers whose moduli at the split level multiply to the original.
struct SplitEvent {
    size_t level;
    Poly factor_a, factor_b;
    Tower branch_a, branch_b;
};

/// Accumulated factorization knowledge, keyed by (base-field signature,
/// modulus). Deterministic replays consult it so that previously discovered
/// splits are applied up front.
class SplitOracle {
public:
    void record(const std::string& prefix_sig, const Poly& modulus, const Poly& fa, const Poly& fb);
    /// Fully refined factor list for a modulus over the given base field
    /// (recursively applies known splits). Returns {modulus} when none known.
    std::vector<Poly> refine(const std::string& prefix_sig, const Poly& modulus) const;
    bool knows(const std::string& prefix_sig, const Poly& modulus) const;
    size_t size() const { return table_.size(); }

private:
    std::map<std::pair<std::string, std::string>, std::pair<Poly, Poly>> table_;
};

/// A field context: the tower, plus the convention that in every attached
/// polynomial space the generator variables occupy the trailing positions in
/// tower order.
struct FieldCtx {
    Tower tower;

    size_t ngens() const { return tower.height(); }
    /// Index of generator g_i inside a space with `nvars` variables.
    size_t gen_index(size_t nvars, size_t i) const { return nvars - ngens() + i; }
    /// Number of leading "main" variables in a space.
    size_t nmain(const Poly& p) const { return p.nvars() - ngens(); }
};

/// Reduce all generator degrees below their modulus degrees. p's space must
/// follow the trailing-generators convention.
Poly tower_reduce(const FieldCtx& ctx, Poly p);

/// Multiplicative inverse of a field element (a polynomial in the generators
/// only, reduced). Throws SplitDiscovered on zero divisors and
/// std::domain_error on zero.
Poly field_invert(const FieldCtx& ctx, const Poly& elem);

/// Spec-level inversion: either the inverse or the split event.
std::variant<Poly, SplitEvent> ext_invert(const FieldCtx& ctx, const Poly& elem);

/// True if the element (gens-only polynomial, reduced) is zero.
bool field_is_zero(const Poly& elem);

/// Extract a field element (all main exponents zero) into the tower's gen
/// space; throws if main variables occur.
Poly to_field_elem(const FieldCtx& ctx, const Poly& p);

/// Deterministic total order on reduced field elements.
int field_elem_cmp(const Poly& a, const Poly& b);

/// Division a = q*b + r in the variable `var` with deg_var(r) < deg_var(b);
/// b must be monic in var (its leading var-coefficient is the constant 1).
void field_divmod_monic(const FieldCtx& ctx, const Poly& a, const Poly& b, size_t var, Poly& q,
                        Poly& r);

}  // namespace jacinf

#include "jacinf/tower.hpp"

#include <sstream>
#include <stdexcept>

namespace jacinf {

uint64_t Tower::total_degree() const {
    uint64_t d = 1;
    for (size_t i = 0; i < levels_.size(); ++i) {
        size_t top = levels_[i].modulus.nvars() - 1;
        d *= static_cast<uint64_t>(levels_[i].modulus.degree_in(top));
    }
    return d;
}

Vars Tower::gen_names() const {
    Vars v;
    for (const auto& l : levels_) v.push_back(l.gen);
    return v;
}

VarsPtr Tower::gen_space() const { return make_vars(gen_names()); }

std::string Tower::signature_prefix(size_t k) const {
    std::ostringstream os;
    for (size_t i = 0; i < k && i < levels_.size(); ++i)
        os << levels_[i].gen << "|" << levels_[i].modulus.str() << ";";
    return os.str();
}

Tower Tower::extended(TowerLevel lvl) const {
    Tower t = *this;
    t.levels_.push_back(std::move(lvl));
    return t;
}

Tower Tower::with_modulus(size_t k, Poly m) const {
    Tower t = *this;
    t.levels_.at(k).modulus = std::move(m);
    return t;
}

bool Tower::operator==(const Tower& o) const {
    if (levels_.size() != o.levels_.size()) return false;
    for (size_t i = 0; i < levels_.size(); ++i)
        if (levels_[i].gen != o.levels_[i].gen || levels_[i].modulus != o.levels_[i].modulus)
            return false;
    return true;
}

SplitDiscovered::SplitDiscovered(size_t lvl, std::string sig, Poly m, Poly fa, Poly fb)
    : level(lvl), prefix_sig(std::move(sig)), modulus(std::move(m)),
      factor_a(std::move(fa)), factor_b(std::move(fb)) {
    msg = "zero divisor: modulus " + modulus.str() + " splits as (" + factor_a.str() + ")*(" +
          factor_b.str() + ")";
}

void SplitOracle::record(const std::string& prefix_sig, const Poly& modulus, const Poly& fa,
                         const Poly& fb) {
    table_.insert({{prefix_sig, modulus.str()}, {fa, fb}});
}

bool SplitOracle::knows(const std::string& prefix_sig, const Poly& modulus) const {
    return table_.count({prefix_sig, modulus.str()}) > 0;
}

std::vector<Poly> SplitOracle::refine(const std::string& prefix_sig, const Poly& modulus) const {
    auto it = table_.find({prefix_sig, modulus.str()});
    if (it == table_.end()) return {modulus};
    std::vector<Poly> out;
    for (const Poly* f : {&it->second.first, &it->second.second})
        for (Poly& g : refine(prefix_sig, *f)) out.push_back(std::move(g));
    return out;
}

Poly tower_reduce(const FieldCtx& ctx, Poly p) {
    if (ctx.ngens() == 0) return p;
    const size_t nv = p.nvars();
    for (size_t li = ctx.ngens(); li-- > 0;) {
        const TowerLevel& lvl = ctx.tower.level(li);
        size_t gv = ctx.gen_index(nv, li);
        size_t md = lvl.modulus.nvars() - 1;
        int mdeg = lvl.modulus.degree_in(md);
        if (p.degree_in(gv) < mdeg) continue;
        Poly m = lvl.modulus.aligned_to(p.vars_ptr());
        // m is monic in gv: m = gv^mdeg + tail
        Poly::Exp lead(nv, 0);
        lead[gv] = static_cast<uint32_t>(mdeg);
        Poly tail = m - Poly::monomial(p.vars_ptr(), lead, Rat(1));
        while (p.degree_in(gv) >= mdeg) {
            uint32_t k = static_cast<uint32_t>(p.degree_in(gv));
            Poly c = p.coeff_of(gv, k);
            Poly::Exp sh(nv, 0);
            sh[gv] = k;
            // remove c*gv^k and add back -c*gv^(k-mdeg)*tail
            p -= c.mul_monomial(sh, Rat(1));
            sh[gv] = k - static_cast<uint32_t>(mdeg);
            p -= (c * tail).mul_monomial(sh, Rat(1));
        }
    }
    return p;
}

bool field_is_zero(const Poly& elem) { return elem.is_zero(); }

Poly to_field_elem(const FieldCtx& ctx, const Poly& p) {
    VarsPtr gs = ctx.tower.gen_space();
    size_t nmain = p.nvars() - ctx.ngens();
    Poly r(gs);
    for (const auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < nmain; ++i)
            if (e[i] != 0) throw std::logic_error("to_field_elem: main variable present");
        Poly::Exp ne(e.begin() + static_cast<long>(nmain), e.end());
        r.add_term(ne, c);
    }
    return r;
}

void field_divmod_monic(const FieldCtx& ctx, const Poly& a, const Poly& b, size_t var, Poly& q,
                        Poly& r) {
    int db = b.degree_in(var);
    q = Poly(a.vars_ptr());
    r = a;
    Poly::Exp lead(b.nvars(), 0);
    lead[var] = static_cast<uint32_t>(db);
    Poly tail = b - Poly::monomial(b.vars_ptr(), lead, Rat(1));
    while (!r.is_zero() && r.degree_in(var) >= db) {
        uint32_t k = static_cast<uint32_t>(r.degree_in(var));
        Poly c = r.coeff_of(var, k);
        Poly::Exp sh(r.nvars(), 0);
        sh[var] = k;
        r -= c.mul_monomial(sh, Rat(1));
        sh[var] = k - static_cast<uint32_t>(db);
        Poly cq = c.mul_monomial(sh, Rat(1));
        q += cq;
        r -= tower_reduce(ctx, cq * tail);
        r = tower_reduce(ctx, r);
    }
}

namespace {

// Inverse of elem over levels [0, h). elem lives in the full gen space,
// reduced, with all generators >= h absent.
Poly invert_level(const FieldCtx& ctx, const Poly& elem, size_t h) {
    if (elem.is_zero()) throw std::domain_error("division by zero in extension field");
    VarsPtr gs = elem.vars_ptr();
    if (h == 0) {
        if (!elem.is_constant()) throw std::logic_error("invert_level: stray generator");
        return Poly::constant(gs, Rat(1) / elem.constant_value());
    }
    size_t gv = ctx.gen_index(gs->size(), h - 1);
    if (elem.degree_in(gv) <= 0) return invert_level(ctx, elem, h - 1);

    const TowerLevel& lvl = ctx.tower.level(h - 1);
    Poly m = lvl.modulus.aligned_to(gs);
    // Extended Euclid tracking only the cofactor of elem:
    //   r0 = m, t0 = 0;  r1 = elem, t1 = 1;  invariant r_i = s_i*m + t_i*elem.
    Poly r0 = m, r1 = elem;
    Poly t0(gs), t1 = Poly::constant(gs, Rat(1));
    while (!r1.is_zero() && r1.degree_in(gv) > 0) {
        Poly lc = r1.coeff_of(gv, static_cast<uint32_t>(r1.degree_in(gv)));
        Poly lc_inv = invert_level(ctx, lc, h - 1);
        r1 = tower_reduce(ctx, r1 * lc_inv);
        t1 = tower_reduce(ctx, t1 * lc_inv);
        Poly q, r2;
        field_divmod_monic(ctx, r0, r1, gv, q, r2);
        Poly t2 = tower_reduce(ctx, t0 - q * t1);
        r0 = std::move(r1);
        t0 = std::move(t1);
        r1 = std::move(r2);
        t1 = std::move(t2);
    }
    if (r1.is_zero()) {
        // gcd(elem, m) = r0, monic of positive degree < deg m: zero divisor.
        Poly other;
        Poly mm = lvl.modulus;
        Poly g = r0.aligned_to(mm.vars_ptr());
        if (!Poly::try_divide_exact(mm, g, other))
            throw std::logic_error("split factor does not divide modulus");
        throw SplitDiscovered(h - 1, ctx.tower.signature_prefix(h - 1), mm, g, other);
    }
    Poly c_inv = invert_level(ctx, r1, h - 1);
    Poly inv = tower_reduce(ctx, t1 * c_inv);
    // Safety: verify elem * inv == 1.
    Poly check = tower_reduce(ctx, inv * elem);
    if (!(check.is_constant() && check.constant_value() == 1))
        throw std::logic_error("field inversion verification failed");
    return inv;
}

}  // namespace

Poly field_invert(const FieldCtx& ctx, const Poly& elem) {
    Poly e = tower_reduce(ctx, elem.aligned_to(ctx.tower.gen_space()));
    return invert_level(ctx, e, ctx.ngens());
}

std::variant<Poly, SplitEvent> ext_invert(const FieldCtx& ctx, const Poly& elem) {
    try {
        return field_invert(ctx, elem);
    } catch (const SplitDiscovered& s) {
        SplitEvent ev;
        ev.level = s.level;
        ev.factor_a = s.factor_a;
        ev.factor_b = s.factor_b;
        ev.branch_a = ctx.tower.with_modulus(s.level, s.factor_a);
        ev.branch_b = ctx.tower.with_modulus(s.level, s.factor_b);
        return ev;
    }
}

int field_elem_cmp(const Poly& a, const Poly& b) { return poly_cmp(a, b); }

}  // namespace jacinf

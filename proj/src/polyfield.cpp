#include "jacinf/polyfield.hpp"

#include <algorithm>
#include <stdexcept>

namespace jacinf {

namespace {

// Maximal main-exponent vector under graded-lex, among terms of p.
Poly::Exp main_lead_exp(const FieldCtx& ctx, const Poly& p) {
    size_t nmain = ctx.nmain(p);
    Poly::TermOrder lt;
    Poly::Exp best;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Poly::Exp me(e.begin(), e.begin() + static_cast<long>(nmain));
        if (first || lt(me, best)) {
            best = std::move(me);
            first = false;
        }
    }
    return best;
}

Poly coeff_of_main(const FieldCtx& ctx, const Poly& p, const Poly::Exp& me) {
    size_t nmain = ctx.nmain(p);
    Poly r(p.vars_ptr());
    for (const auto& [e, c] : p.terms()) {
        bool match = true;
        for (size_t i = 0; i < nmain; ++i)
            if (e[i] != me[i]) { match = false; break; }
        if (!match) continue;
        Poly::Exp ne(e);
        for (size_t i = 0; i < nmain; ++i) ne[i] = 0;
        r.add_term(ne, c);
    }
    return r;
}

// Probe that a field element is a unit; zero divisors raise SplitDiscovered.
void probe_unit(const FieldCtx& ctx, const Poly& elem_in_space) {
    if (ctx.ngens() == 0) return;
    field_invert(ctx, to_field_elem(ctx, elem_in_space));
}

}  // namespace

Poly lead_main_coeff(const FieldCtx& ctx, const Poly& p) {
    if (p.is_zero()) throw std::logic_error("lead_main_coeff of zero");
    return coeff_of_main(ctx, p, main_lead_exp(ctx, p));
}

Poly make_monic_main(const FieldCtx& ctx, const Poly& p) {
    if (p.is_zero()) return p;
    Poly lc = lead_main_coeff(ctx, p);
    if (lc.is_constant()) {
        Rat c = lc.constant_value();
        if (c == 1) return p;
        return p.mul_scalar(Rat(1) / c);
    }
    Poly inv = field_invert(ctx, to_field_elem(ctx, lc)).aligned_to(p.vars_ptr());
    return tower_reduce(ctx, p * inv);
}

Poly divide_exact_field(const FieldCtx& ctx, const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::logic_error("division by zero polynomial");
    Poly B = tower_reduce(ctx, b);
    Poly r = tower_reduce(ctx, a);
    Poly q(a.vars_ptr());
    if (r.is_zero()) return q;
    size_t nmain = ctx.nmain(a);
    Poly::Exp be = main_lead_exp(ctx, B);
    Poly bc = coeff_of_main(ctx, B, be);
    Poly binv;
    if (bc.is_constant())
        binv = Poly::constant(B.vars_ptr(), Rat(1) / bc.constant_value());
    else
        binv = field_invert(ctx, to_field_elem(ctx, bc)).aligned_to(B.vars_ptr());
    while (!r.is_zero()) {
        Poly::Exp re = main_lead_exp(ctx, r);
        Poly::Exp qe(r.nvars(), 0);
        for (size_t i = 0; i < nmain; ++i) {
            if (re[i] < be[i]) throw std::logic_error("inexact polynomial division");
            qe[i] = re[i] - be[i];
        }
        Poly rc = coeff_of_main(ctx, r, re);
        Poly qc = tower_reduce(ctx, rc * binv).mul_monomial(qe, Rat(1));
        q += qc;
        r = tower_reduce(ctx, r - qc * B);
    }
    return q;
}

Poly pseudo_rem(const FieldCtx& ctx, const Poly& a, const Poly& b, size_t var) {
    int db = b.degree_in(var);
    if (db < 0) throw std::logic_error("pseudo_rem by zero");
    Poly lc = b.coeff_of(var, static_cast<uint32_t>(db));
    Poly r = a;
    int steps_left = std::max(0, a.degree_in(var) - db) + 1;
    while (!r.is_zero() && r.degree_in(var) >= db) {
        uint32_t k = static_cast<uint32_t>(r.degree_in(var));
        Poly c = r.coeff_of(var, k);
        Poly::Exp sh(r.nvars(), 0);
        sh[var] = k - static_cast<uint32_t>(db);
        r = tower_reduce(ctx, r * lc - c.mul_monomial(sh, Rat(1)) * b);
        --steps_left;
    }
    // Normalize to exactly lc^(delta+1) * a mod b.
    for (; steps_left > 0; --steps_left) r = tower_reduce(ctx, r * lc);
    return r;
}

namespace {

// Content of p with respect to main variable var: monic gcd of the
// var-coefficients.
Poly content_in(const FieldCtx& ctx, const Poly& p, size_t var);

Poly gcd_inner(const FieldCtx& ctx, Poly a, Poly b) {
    a = tower_reduce(ctx, a);
    b = tower_reduce(ctx, b);
    if (a.is_zero()) return make_monic_main(ctx, b);
    if (b.is_zero()) return make_monic_main(ctx, a);
    size_t nmain = ctx.nmain(a);
    std::vector<size_t> occurring;
    for (size_t i = 0; i < nmain; ++i)
        if (a.degree_in(i) > 0 || b.degree_in(i) > 0) occurring.push_back(i);
    VarsPtr space = a.vars_ptr();
    if (occurring.empty()) return Poly::constant(space, Rat(1));
    size_t x = occurring.back();
    Poly ca = content_in(ctx, a, x);
    Poly cb = content_in(ctx, b, x);
    Poly pa = divide_exact_field(ctx, a, ca);
    Poly pb = divide_exact_field(ctx, b, cb);
    Poly cg = gcd_inner(ctx, ca, cb);

    if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);
    Poly g = Poly::constant(space, Rat(1));
    Poly h = g;
    Poly part;
    while (true) {
        int da = pa.degree_in(x), db = pb.degree_in(x);
        if (db == 0) {
            // x-degree 0 remainder: primitive parts are coprime in x.
            part = Poly::constant(space, Rat(1));
            break;
        }
        if (ctx.ngens() > 0) {
            probe_unit(ctx, lead_main_coeff(ctx, pb));
        }
        uint32_t delta = static_cast<uint32_t>(da - db);
        Poly r = pseudo_rem(ctx, pa, pb, x);
        if (r.is_zero()) {
            part = pb;
            break;
        }
        Poly divisor = tower_reduce(ctx, g * pow(h, delta));
        pa = pb;
        pb = divide_exact_field(ctx, r, divisor);
        g = pa.coeff_of(x, static_cast<uint32_t>(pa.degree_in(x)));
        if (delta > 0) h = divide_exact_field(ctx, tower_reduce(ctx, pow(g, delta)), pow(h, delta - 1));
    }
    if (part.degree_in(x) > 0) part = divide_exact_field(ctx, part, content_in(ctx, part, x));
    return make_monic_main(ctx, tower_reduce(ctx, cg * part));
}

Poly content_in(const FieldCtx& ctx, const Poly& p, size_t var) {
    int d = p.degree_in(var);
    Poly cont(p.vars_ptr());
    for (int k = d; k >= 0; --k) {
        Poly c = p.coeff_of(var, static_cast<uint32_t>(k));
        if (c.is_zero()) continue;
        if (c.is_constant()) return Poly::constant(p.vars_ptr(), Rat(1));
        cont = cont.is_zero() ? std::move(c) : gcd_inner(ctx, cont, c);
        if (cont.is_constant() && !cont.is_zero()) return Poly::constant(p.vars_ptr(), Rat(1));
    }
    return make_monic_main(ctx, cont);
}

}  // namespace

Poly poly_gcd(const FieldCtx& ctx, const Poly& a, const Poly& b) {
    if (a.vars() != b.vars()) throw std::logic_error("gcd: variable spaces differ");
    return gcd_inner(ctx, a, b);
}

Poly resultant(const FieldCtx& ctx, const Poly& a, const Poly& b, size_t var) {
    if (a.is_zero() || b.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    Poly A = tower_reduce(ctx, a), B = tower_reduce(ctx, b);
    int m = A.degree_in(var), n = B.degree_in(var);
    if (m == 0 && n == 0) throw std::invalid_argument("resultant undefined: both degree 0");
    int s = 1;
    if (m < n) {
        std::swap(A, B);
        std::swap(m, n);
        if ((m & 1) && (n & 1)) s = -s;
    }
    VarsPtr space = A.vars_ptr();
    Poly g = Poly::constant(space, Rat(1));
    Poly h = g;
    while (B.degree_in(var) > 0) {
        int da = A.degree_in(var), db = B.degree_in(var);
        uint32_t delta = static_cast<uint32_t>(da - db);
        if ((da & 1) && (db & 1)) s = -s;
        if (ctx.ngens() > 0) probe_unit(ctx, lead_main_coeff(ctx, B));
        Poly R = pseudo_rem(ctx, A, B, var);
        if (R.is_zero()) return Poly(space);
        A = B;
        Poly divisor = tower_reduce(ctx, g * pow(h, delta));
        B = divide_exact_field(ctx, R, divisor);
        g = A.coeff_of(var, static_cast<uint32_t>(A.degree_in(var)));
        if (delta > 0)
            h = divide_exact_field(ctx, tower_reduce(ctx, pow(g, delta)), pow(h, delta - 1));
    }
    // B is constant in var; deg A = degree of the last nontrivial element.
    uint32_t d = static_cast<uint32_t>(A.degree_in(var));
    Poly res;
    if (d == 0) {
        res = B;  // cannot happen: loop guard, kept for safety
    } else {
        res = divide_exact_field(ctx, tower_reduce(ctx, pow(B, d)), pow(h, d - 1));
    }
    if (s < 0) res = -res;
    return tower_reduce(ctx, res);
}

Poly squarefree_part(const FieldCtx& ctx, const Poly& a, size_t var) {
    if (a.is_zero()) throw std::invalid_argument("squarefree_part of zero");
    if (a.degree_in(var) <= 0) return make_monic_main(ctx, a);
    Poly g = poly_gcd(ctx, a, a.derivative(var));
    return make_monic_main(ctx, divide_exact_field(ctx, a, g));
}

Poly uni_gcd(const FieldCtx& ctx, const Poly& a, const Poly& b, size_t var) {
    Poly x = tower_reduce(ctx, a), y = tower_reduce(ctx, b);
    while (!y.is_zero()) {
        if (y.degree_in(var) == 0) {
            // nonzero field constant divides everything
            probe_unit(ctx, y);
            return Poly::constant(x.vars_ptr(), Rat(1));
        }
        Poly ym = make_monic_main(ctx, y);
        Poly q, r;
        field_divmod_monic(ctx, x, ym, var, q, r);
        x = std::move(ym);
        y = std::move(r);
    }
    return make_monic_main(ctx, x);
}

std::vector<std::pair<Poly, int>> squarefree_factorization(const FieldCtx& ctx, const Poly& p,
                                                           size_t var) {
    std::vector<std::pair<Poly, int>> out;
    Poly f = make_monic_main(ctx, tower_reduce(ctx, p));
    if (f.degree_in(var) <= 0) return out;
    Poly fp = f.derivative(var);
    Poly u = uni_gcd(ctx, f, fp, var);
    // Yun: v_1 = f/u, w_1 = f'/u; a_i = gcd(v_i, w_i - v_i'); iterate.
    Poly v = divide_exact_field(ctx, f, u);
    Poly w = divide_exact_field(ctx, fp, u);
    int i = 1;
    while (v.degree_in(var) > 0) {
        Poly d = tower_reduce(ctx, w - v.derivative(var));
        Poly h = uni_gcd(ctx, v, d, var);
        if (h.degree_in(var) > 0) out.emplace_back(h, i);
        v = divide_exact_field(ctx, v, h);
        w = divide_exact_field(ctx, d, h);
        ++i;
    }
    return out;
}

namespace {

// ---- exact rational root extraction -------------------------------------
//
// Rational roots of a squarefree univariate f over Q are found without any
// factorization: transform to a monic integer polynomial (roots scale by the
// leading coefficient), then isolate integer roots by Sturm-sequence
// bisection over [-B, B] with B the Cauchy bound, and verify candidates
// exactly.

using DenseQ = std::vector<Rat>;  // coefficients, low to high, trimmed

void dq_trim(DenseQ& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int dq_deg(const DenseQ& p) { return static_cast<int>(p.size()) - 1; }

Rat dq_eval(const DenseQ& p, const Rat& x) {
    Rat acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

DenseQ dq_derivative(const DenseQ& p) {
    DenseQ d;
    for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    dq_trim(d);
    return d;
}

DenseQ dq_neg_rem(const DenseQ& a, const DenseQ& b) {
    DenseQ r = a;
    dq_trim(r);
    int db = dq_deg(b);
    while (dq_deg(r) >= db) {
        Rat q = r.back() / b.back();
        size_t shift = r.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) r[shift + i] -= q * b[i];
        dq_trim(r);
        if (r.empty()) break;
    }
    for (auto& c : r) c = -c;
    return r;
}

std::vector<DenseQ> sturm_chain(const DenseQ& f) {
    std::vector<DenseQ> chain{f, dq_derivative(f)};
    while (!chain.back().empty() && dq_deg(chain.back()) > 0) {
        DenseQ next = dq_neg_rem(chain[chain.size() - 2], chain.back());
        if (next.empty()) break;
        chain.push_back(std::move(next));
    }
    return chain;
}

int sign_variations(const std::vector<DenseQ>& chain, const Rat& x) {
    int vars = 0, prev = 0;
    for (const auto& p : chain) {
        if (p.empty()) continue;
        int s = sgn(dq_eval(p, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// All integer roots of a squarefree monic integer polynomial (given as
// rational coefficients), via Sturm bisection.
std::vector<Int> integer_roots_monic(const DenseQ& g) {
    std::vector<Int> roots;
    if (dq_deg(g) < 1) return roots;
    // Cauchy bound: 1 + max |coeff|.
    Rat maxc(0);
    for (size_t i = 0; i + 1 < g.size(); ++i)
        if (abs(g[i]) > maxc) maxc = abs(g[i]);
    Int bound = maxc.get_num() / maxc.get_den() + 2;
    auto chain = sturm_chain(g);
    struct Iv {
        Int lo, hi;
        int vlo, vhi;
    };
    std::vector<Iv> work;
    Int lo = -bound, hi = bound;
    if (dq_eval(g, Rat(lo)) == 0) roots.push_back(lo);  // not possible under Cauchy, kept safe
    work.push_back({lo, hi, sign_variations(chain, Rat(lo)), sign_variations(chain, Rat(hi))});
    while (!work.empty()) {
        Iv iv = work.back();
        work.pop_back();
        if (iv.vlo == iv.vhi) continue;  // no roots in (lo, hi]
        if (iv.hi - iv.lo <= 1) {
            if (dq_eval(g, Rat(iv.hi)) == 0) roots.push_back(iv.hi);
            continue;
        }
        Int mid = (iv.lo + iv.hi) / 2;
        int vm = sign_variations(chain, Rat(mid));
        work.push_back({iv.lo, mid, iv.vlo, vm});
        work.push_back({mid, iv.hi, vm, iv.vhi});
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

// Rational roots of a squarefree univariate polynomial over Q.
std::vector<Rat> rational_roots_q(const DenseQ& f) {
    std::vector<Rat> roots;
    int d = dq_deg(f);
    if (d < 1) return roots;
    // Clear denominators to integer coefficients.
    Int den(1);
    for (const auto& c : f) den = lcm(den, c.get_den());
    std::vector<Int> F;
    for (const auto& c : f) F.push_back(c.get_num() * (den / c.get_den()));
    // Monic transform G(u) = a_d^(d-1) F(u / a_d); roots u = a_d * t.
    Int ad = F.back();
    DenseQ g(f.size());
    Int scale(1);
    for (int i = d; i >= 0; --i) {
        g[static_cast<size_t>(i)] = Rat(F[static_cast<size_t>(i)] * scale);
        if (i > 0) scale *= ad;
    }
    for (const Int& u : integer_roots_monic(g)) roots.push_back(make_rat(u, ad));
    return roots;
}

DenseQ poly_to_dense(const Poly& p, size_t var) {
    DenseQ d(static_cast<size_t>(p.degree_in(var)) + 1, Rat(0));
    for (const auto& [e, c] : p.terms()) {
        for (size_t i = 0; i < e.size(); ++i)
            if (i != var && e[i] != 0)
                throw std::logic_error("poly_to_dense: polynomial is not univariate");
        d[e[var]] = c;
    }
    dq_trim(d);
    return d;
}

// Roots of f lying in the field itself. Over Q this is complete. Over a
// tower we only pull out the rational ones, located as rational roots of the
// norm (iterated resultant against the tower moduli) and verified in K;
// conjugate irrational points stay lumped in their orbit moduli.
std::vector<Poly> field_roots(const FieldCtx& ctx, const Poly& f, size_t var) {
    std::vector<Rat> rats;
    if (ctx.ngens() == 0) {
        rats = rational_roots_q(poly_to_dense(f, var));
    } else {
        Poly norm = f;
        FieldCtx plain;  // all variables treated as polynomial variables
        for (size_t li = ctx.ngens(); li-- > 0;) {
            size_t gv = ctx.gen_index(f.nvars(), li);
            if (norm.is_zero()) return {};
            if (norm.degree_in(gv) == 0) continue;
            Poly m = ctx.tower.level(li).modulus.aligned_to(f.vars_ptr());
            norm = resultant(plain, norm, m, gv);
        }
        if (norm.is_zero()) return {};
        Poly nsf = squarefree_part(plain, norm, var);
        for (const Rat& r : rational_roots_q(poly_to_dense(nsf, var))) {
            Poly val = tower_reduce(ctx, f.eval_at(var, Poly::constant(f.vars_ptr(), r)));
            if (val.is_zero()) rats.push_back(r);
        }
    }
    std::vector<Poly> out;
    for (const Rat& r : rats)
        out.push_back(Poly::variable(f.vars_ptr(), var) - Poly::constant(f.vars_ptr(), r));
    return out;
}

}  // namespace

std::vector<RootOrbit> univariate_root_orbits(const FieldCtx& ctx, const Poly& p, size_t var,
                                              const SplitOracle* oracle) {
    if (p.is_zero()) throw std::invalid_argument("root orbits of the zero polynomial");
    std::vector<RootOrbit> out;
    if (p.degree_in(var) <= 0) return out;
    auto factors = squarefree_factorization(ctx, p, var);
    std::string sig = ctx.tower.signature();
    for (auto& [f, mult] : factors) {
        std::vector<Poly> refined = oracle ? oracle->refine(sig, f) : std::vector<Poly>{f};
        for (Poly& m : refined) {
            if (m.degree_in(var) >= 2) {
                // Split off roots lying in the base field.
                for (const Poly& lin : field_roots(ctx, m, var)) {
                    out.push_back({lin, mult});
                    m = divide_exact_field(ctx, m, lin);
                }
            }
            if (m.degree_in(var) >= 1) out.push_back({std::move(m), mult});
        }
    }
    std::sort(out.begin(), out.end(), [&](const RootOrbit& a, const RootOrbit& b) {
        int da = a.modulus.degree_in(var), db = b.modulus.degree_in(var);
        if (da != db) return da < db;
        // within a degree: t-1 sorts before t-2
        return poly_cmp(a.modulus, b.modulus) > 0;
    });
    return out;
}

FieldCtx ext_adjoin(const FieldCtx& ctx, const Poly& modulus, const std::string& gen_name) {
    // Working layout for the checks: [gen, g0, ..., g_{h-1}] (main leading).
    Vars work{gen_name};
    for (const auto& g : ctx.tower.gen_names()) work.push_back(g);
    VarsPtr wspace = make_vars(work);
    Poly m = tower_reduce(ctx, modulus.aligned_to(wspace));
    if (m.is_zero()) throw std::invalid_argument("ext_adjoin: zero modulus");
    m = make_monic_main(ctx, m);
    if (m.degree_in(0) < 2)
        throw std::invalid_argument("ext_adjoin: modulus degree < 2");
    Poly g = uni_gcd(ctx, m, m.derivative(0), 0);
    if (g.degree_in(0) > 0) throw std::invalid_argument("ext_adjoin: modulus not squarefree");
    // Storage layout: [g0, ..., g_{h-1}, gen].
    Vars store = ctx.tower.gen_names();
    store.push_back(gen_name);
    TowerLevel lvl{gen_name, m.aligned_to(make_vars(store))};
    FieldCtx next;
    next.tower = ctx.tower.extended(std::move(lvl));
    return next;
}

}  // namespace jacinf

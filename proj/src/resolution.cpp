#include "jacinf/resolution.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace jacinf {

int ResolutionTree::depth(int id) const {
    int d = 0;
    int cur = id;
    while (nodes.at(static_cast<size_t>(cur)).t_parent) {
        cur = *nodes.at(static_cast<size_t>(cur)).t_parent;
        if (++d > static_cast<int>(nodes.size())) throw std::logic_error("t_parent cycle");
    }
    return d;
}

std::vector<int> ResolutionTree::children(int id) const {
    std::vector<int> out;
    for (const auto& n : nodes)
        if (n.t_parent && *n.t_parent == id) out.push_back(n.id);
    return out;
}

bool ResolutionTree::has_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (const auto& e : edges)
        if (e.a == a && e.b == b) return true;
    return false;
}

std::pair<Chart, Chart> charts_at_infinity(const PolyMap& f) {
    const int d = f.d;
    auto build = [&](bool second) {
        Chart ch;
        ch.space = make_vars({"u", "v"});
        ch.label = second ? "inf2" : "inf1";
        auto lift = [&](const Poly& p) {
            Poly r(ch.space);
            for (const auto& [e, c] : p.terms()) {
                uint32_t i = e[0], j = e[1];
                uint32_t vpow = static_cast<uint32_t>(d) - i - j;
                Poly::Exp ne{second ? i : j, vpow};
                r.add_term(ne, c);
            }
            return r;
        };
        ch.A = lift(f.P);
        ch.B = lift(f.Q);
        ch.C = Poly::monomial(ch.space, {0, static_cast<uint32_t>(d)}, Rat(1));
        uint32_t k = std::min({ch.A.min_degree_in(1), ch.B.min_degree_in(1), ch.C.min_degree_in(1)});
        if (k > 0) {
            ch.A = ch.A.shift_down(1, k);
            ch.B = ch.B.shift_down(1, k);
            ch.C = ch.C.shift_down(1, k);
        }
        ch.axis_node[1] = 0;  // v = 0 is L
        return ch;
    };
    return {build(false), build(true)};
}

namespace {

// Common zeros of the chart triple along one axis, as orbit centers in
// canonical order, with this chart's exclusions already removed.
std::vector<CenterRec> enumerate_axis(const Chart& chart, int chart_id, int axis, int node_id,
                                      const SplitOracle* oracle) {
    size_t av = static_cast<size_t>(axis), ov = 1 - av;
    const FieldCtx& K = chart.field;
    Poly g(chart.space);
    for (const Poly* p : {&chart.A, &chart.B, &chart.C}) {
        Poly r = p->coeff_of(av, 0);
        g = uni_gcd(K, g, r, ov);
        if (!g.is_zero() && g.degree_in(ov) == 0) break;
    }
    if (g.is_zero() || g.degree_in(ov) == 0) return {};
    for (const auto& [eaxis, m] : chart.exclusions) {
        if (eaxis != axis) continue;
        while (g.degree_in(ov) > 0) {
            Poly h = uni_gcd(K, g, m, ov);
            if (h.degree_in(ov) <= 0) break;
            g = divide_exact_field(K, g, h);
        }
    }
    if (g.degree_in(ov) <= 0) return {};
    std::vector<CenterRec> out;
    Poly ovar = Poly::variable(chart.space, ov);
    for (auto& orb : univariate_root_orbits(K, g, ov, oracle)) {
        CenterRec c;
        c.chart = chart_id;
        c.axis = axis;
        c.modulus = orb.modulus;
        c.sf_mult = orb.multiplicity;
        c.node = node_id;
        c.orbit_deg = static_cast<long long>(orb.modulus.degree_in(ov)) *
                      static_cast<long long>(K.tower.total_degree());
        if (c.modulus == ovar && chart.axis_node[ov])
            c.other_node = *chart.axis_node[ov];
        out.push_back(std::move(c));
    }
    return out;
}

// Is the chart origin a base point (and not already blown up)?
std::optional<CenterRec> probe_origin(const Chart& chart, int chart_id, int paxis, int node_id) {
    size_t ov = 1 - static_cast<size_t>(paxis);
    for (const auto& [eaxis, m] : chart.exclusions) {
        Poly c0 = tower_reduce(chart.field, m.coeff_of(0, 0).coeff_of(1, 0));
        if (eaxis == paxis && c0.is_zero()) return std::nullopt;  // origin already excluded
    }
    for (const Poly* p : {&chart.A, &chart.B, &chart.C}) {
        Poly val = tower_reduce(chart.field, p->coeff_of(0, 0).coeff_of(1, 0));
        if (!val.is_zero()) return std::nullopt;
    }
    CenterRec c;
    c.chart = chart_id;
    c.axis = paxis;
    c.modulus = Poly::variable(chart.space, ov);
    c.sf_mult = 1;
    c.is_probe = true;
    c.node = node_id;
    c.orbit_deg = static_cast<long long>(chart.field.tower.total_degree());
    if (chart.axis_node[ov]) c.other_node = *chart.axis_node[ov];
    return c;
}

std::string center_desc(const Chart& chart, const CenterRec& c) {
    std::ostringstream os;
    os << (c.is_double() ? "double" : "single") << " at V(" << (*chart.space)[static_cast<size_t>(c.axis)]
       << ", " << c.modulus.str() << ") in chart " << chart.label;
    if (c.orbit_deg > 1) os << " [orbit " << c.orbit_deg << "]";
    return os.str();
}

struct Resolver {
    const PolyMap& f;
    ResolveOptions opts;
    SplitOracle own_oracle;
    SplitOracle& oracle;
    ResolutionTree tree;
    std::map<int, std::vector<CenterRec>> pending;

    Resolver(const PolyMap& f_, ResolveOptions o, SplitOracle* shared)
        : f(f_), opts(o), oracle(shared ? *shared : own_oracle), tree{f_} {}

    std::vector<CenterRec> enumerate_node(int nid) {
        const TCurveNode& n = tree.nodes[static_cast<size_t>(nid)];
        auto out = enumerate_axis(tree.charts[static_cast<size_t>(n.enum_chart)], n.enum_chart,
                                  n.enum_axis, nid, &oracle);
        auto pc = probe_origin(tree.charts[static_cast<size_t>(n.probe_chart)], n.probe_chart,
                               n.probe_axis, nid);
        if (pc) out.push_back(std::move(*pc));
        return out;
    }

    void build_roots() {
        tree.nodes.clear();
        tree.edges.clear();
        tree.charts.clear();
        tree.log.clear();
        tree.stages.clear();
        auto [c1, c2] = charts_at_infinity(f);
        tree.charts.push_back(std::move(c1));
        tree.charts.push_back(std::move(c2));
        TCurveNode L;
        L.id = 0;
        L.name = "L";
        L.kind = TCurveNode::Kind::RootLine;
        L.pole = 6;
        L.self_int = 1;
        L.orbit = 1;
        L.center_type = TCurveNode::CenterType::Root;
        L.enum_chart = 0;
        L.enum_axis = 1;
        L.probe_chart = 1;
        L.probe_axis = 1;
        tree.nodes.push_back(std::move(L));
    }

    void add_edge(int a, int b, long long mult) {
        if (a > b) std::swap(a, b);
        tree.edges.push_back({a, b, mult});
    }

    void remove_edge(int a, int b) {
        if (a > b) std::swap(a, b);
        for (auto it = tree.edges.begin(); it != tree.edges.end(); ++it) {
            if (it->a == a && it->b == b) {
                tree.edges.erase(it);
                return;
            }
        }
        throw std::logic_error("double blow-up at a non-edge");
    }

    void apply(const CenterRec& c, int stage) {
        const Chart base = tree.charts[static_cast<size_t>(c.chart)];
        const size_t av = static_cast<size_t>(c.axis), ov = 1 - av;
        const int p1 = c.node, p2 = c.other_node;
        const int degm = c.modulus.degree_in(ov);

        // Translate the center to the origin, adjoining its orbit modulus if
        // it is not a single point over the chart field.
        FieldCtx K2 = base.field;
        VarsPtr space2 = base.space;
        Poly A2 = base.A, B2 = base.B, C2 = base.C;
        bool at_origin = false;
        if (degm == 1) {
            Poly root = Poly::variable(space2, ov) - c.modulus;  // the root, gens only
            at_origin = root.is_zero();
            if (!at_origin) {
                Poly shift = Poly::variable(space2, ov) + root;
                A2 = tower_reduce(K2, A2.eval_at(ov, shift));
                B2 = tower_reduce(K2, B2.eval_at(ov, shift));
                C2 = tower_reduce(K2, C2.eval_at(ov, shift));
            }
        } else {
            if (opts.rational_only)
                throw PreconditionFailed("irrational base point (orbit degree " +
                                         std::to_string(degm) + ") with --rational-only");
            std::string gname = "g" + std::to_string(K2.ngens());
            Vars mv = base.field.tower.gen_names();
            mv.push_back(gname);
            VarsPtr mspace = make_vars(mv);
            Poly m2(mspace);
            for (const auto& [e, coef] : c.modulus.terms()) {
                Poly::Exp ne(mv.size(), 0);
                for (size_t gi = 0; gi + 2 < e.size(); ++gi) ne[gi] = e[2 + gi];
                ne.back() = e[ov];
                m2.add_term(ne, coef);
            }
            K2 = ext_adjoin(base.field, m2, gname);
            Vars sv = *base.space;
            sv.push_back(gname);
            space2 = make_vars(sv);
            A2 = base.A.aligned_to(space2);
            B2 = base.B.aligned_to(space2);
            C2 = base.C.aligned_to(space2);
            Poly alpha = Poly::variable(space2, space2->size() - 1);
            Poly shift = Poly::variable(space2, ov) + alpha;
            A2 = tower_reduce(K2, A2.eval_at(ov, shift));
            B2 = tower_reduce(K2, B2.eval_at(ov, shift));
            C2 = tower_reduce(K2, C2.eval_at(ov, shift));
        }

        // Axes of the translated chart, indexed by coordinate.
        std::array<std::optional<int>, 2> tax;
        tax[av] = p1;
        if (at_origin && p2 >= 0) tax[ov] = p2;

        // New node.
        const int nid = static_cast<int>(tree.nodes.size());
        TCurveNode node;
        node.id = nid;
        node.name = "E" + std::to_string(nid);
        node.kind = TCurveNode::Kind::Exceptional;
        node.pole = c.is_double() ? tree.nodes[static_cast<size_t>(p1)].pole +
                                         tree.nodes[static_cast<size_t>(p2)].pole - 2
                                   : tree.nodes[static_cast<size_t>(p1)].pole - 2;
        if (node.pole % 2 != 0) throw std::logic_error("odd pole order");
        node.orbit = static_cast<long long>(K2.tower.total_degree());
        node.self_int = -1;
        node.center_type =
            c.is_double() ? TCurveNode::CenterType::Double : TCurveNode::CenterType::Single;
        node.parents = {p1, p2};

        // Parents lose orbit/parent-orbit from their self-intersections.
        for (int p : {p1, p2}) {
            if (p < 0) continue;
            auto& pn = tree.nodes[static_cast<size_t>(p)];
            if (node.orbit % pn.orbit != 0)
                throw std::logic_error("center orbit not divisible by parent orbit");
            pn.self_int -= node.orbit / pn.orbit;
        }

        // Edge rewiring: a double blow-up separates its two parents.
        if (c.is_double()) {
            remove_edge(p1, p2);
            add_edge(p1, nid, node.orbit);
            add_edge(p2, nid, node.orbit);
            int d1 = tree.depth(p1), d2 = tree.depth(p2);
            if (d1 == d2) throw std::logic_error("adjacent t-curves at equal depth");
            int near = d1 < d2 ? p1 : p2;
            int far = d1 < d2 ? p2 : p1;
            node.t_parent = near;
            tree.nodes[static_cast<size_t>(far)].t_parent = nid;
        } else {
            add_edge(p1, nid, node.orbit);
            node.t_parent = p1;
        }

        // The two blow-up charts: chartA (u = s, v = s t), chartB (u = s t, v = t).
        Vars cnames{"s" + std::to_string(nid), "t" + std::to_string(nid)};
        for (const auto& g : K2.tower.gen_names()) cnames.push_back(g);
        auto mk_chart = [&](bool isA) {
            VarsPtr cs = make_vars(cnames);
            Poly s = Poly::variable(cs, 0), t = Poly::variable(cs, 1);
            std::map<size_t, Poly> sub;
            if (isA) {
                sub.emplace(0, s);
                sub.emplace(1, s * t);
            } else {
                sub.emplace(0, s * t);
                sub.emplace(1, t);
            }
            Chart ch;
            ch.field = K2;
            ch.space = cs;
            ch.A = tower_reduce(K2, A2.substitute(sub, cs));
            ch.B = tower_reduce(K2, B2.substitute(sub, cs));
            ch.C = tower_reduce(K2, C2.substitute(sub, cs));
            size_t ev = isA ? 0 : 1;
            uint32_t k = std::min(
                {ch.A.min_degree_in(ev), ch.B.min_degree_in(ev), ch.C.min_degree_in(ev)});
            if (k > 0) {
                ch.A = ch.A.shift_down(ev, k);
                ch.B = ch.B.shift_down(ev, k);
                ch.C = ch.C.shift_down(ev, k);
            }
            if (ch.C.is_zero()) throw std::logic_error("chart C component vanished");
            if (isA) {
                ch.axis_node[0] = nid;
                ch.axis_node[1] = tax[1];
            } else {
                ch.axis_node[0] = tax[0];
                ch.axis_node[1] = nid;
            }
            ch.parent_chart = c.chart;
            ch.born_stage = stage;
            ch.label = (isA ? "A" : "B") + std::to_string(nid);
            return ch;
        };
        Chart chA = mk_chart(true);
        Chart chB = mk_chart(false);
        const int aid = static_cast<int>(tree.charts.size());
        node.enum_chart = aid;
        node.enum_axis = 0;
        node.probe_chart = aid + 1;
        node.probe_axis = 1;

        tree.charts[static_cast<size_t>(c.chart)].exclusions.emplace_back(c.axis, c.modulus);
        tree.log.push_back({stage, center_desc(base, c), node.center_type, nid, node.orbit});
        tree.nodes.push_back(std::move(node));
        tree.charts.push_back(std::move(chA));
        tree.charts.push_back(std::move(chB));

        // Refresh worklists touched by the new exclusion, then the new node.
        for (const auto& n : tree.nodes) {
            if (n.id != nid && (n.enum_chart == c.chart || n.probe_chart == c.chart))
                pending[n.id] = enumerate_node(n.id);
        }
        pending[nid] = enumerate_node(nid);
    }

    void finalize_multiplicities() {
        for (auto& n : tree.nodes) {
            uint32_t a = tree.charts[static_cast<size_t>(n.enum_chart)].C.min_degree_in(
                static_cast<size_t>(n.enum_axis));
            uint32_t b = tree.charts[static_cast<size_t>(n.probe_chart)].C.min_degree_in(
                static_cast<size_t>(n.probe_axis));
            if (a != b) throw std::logic_error("multiplicity in T differs between charts");
            if (a >= 1) n.mult_t = a;
        }
    }

    ResolutionTree run_once() {
        build_roots();
        pending.clear();
        pending[0] = enumerate_node(0);
        int stage = 1;
        while (true) {
            StageRec rec{stage, {}};
            for (const auto& [nid, list] : pending)
                rec.centers.insert(rec.centers.end(), list.begin(), list.end());
            tree.stages.push_back(rec);
            if (rec.centers.empty()) break;
            if (static_cast<int>(tree.log.size()) >= opts.max_blowups)
                throw BudgetExceeded("resolution budget exceeded (" +
                                     std::to_string(opts.max_blowups) + " blow-ups)");
            apply(rec.centers.front(), stage);
            ++stage;
        }
        finalize_multiplicities();
        return std::move(tree);
    }

    ResolutionTree run() {
        int restarts = 0;
        while (true) {
            try {
                ResolutionTree t = run_once();
                t.restarts = restarts;
                return t;
            } catch (const SplitDiscovered& s) {
                oracle.record(s.prefix_sig, s.modulus, s.factor_a, s.factor_b);
                tree = ResolutionTree{f};
                if (++restarts > 500)
                    throw std::logic_error("split replay budget exhausted");
            }
        }
    }
};

}  // namespace

std::vector<CenterRec> find_base_points(const Chart& chart, const SplitOracle* oracle) {
    std::vector<CenterRec> out;
    for (int axis : {0, 1}) {
        if (!chart.axis_node[static_cast<size_t>(axis)]) continue;
        auto cs = enumerate_axis(chart, -1, axis, *chart.axis_node[static_cast<size_t>(axis)],
                                 oracle);
        for (auto& c : cs) {
            if (axis == 1 && c.is_double()) {
                // origin center already reported via axis 0
                bool dup = false;
                for (const auto& c0 : out)
                    if (c0.is_double()) dup = true;
                if (dup) continue;
            }
            out.push_back(std::move(c));
        }
    }
    return out;
}

ResolutionTree resolve(const PolyMap& f, const ResolveOptions& opts, SplitOracle* shared_oracle) {
    Resolver r(f, opts, shared_oracle);
    return r.run();
}

std::optional<long long> multiplicity_in_t(const ResolutionTree& tree, int node) {
    const TCurveNode& n = tree.node(node);
    uint32_t a = tree.charts[static_cast<size_t>(n.enum_chart)].C.min_degree_in(
        static_cast<size_t>(n.enum_axis));
    uint32_t b = tree.charts[static_cast<size_t>(n.probe_chart)].C.min_degree_in(
        static_cast<size_t>(n.probe_axis));
    if (a != b) throw std::logic_error("multiplicity in T differs between charts");
    if (a >= 1) return static_cast<long long>(a);
    return std::nullopt;
}

ParametrizedImage restricted_map(const ResolutionTree& tree, int node) {
    const TCurveNode& n = tree.node(node);
    const Chart& ch = tree.charts[static_cast<size_t>(n.enum_chart)];
    size_t av = static_cast<size_t>(n.enum_axis), ov = 1 - av;
    const FieldCtx& K = ch.field;
    ParametrizedImage img;
    img.chart = n.enum_chart;
    img.param_var = static_cast<int>(ov);
    img.a0 = tower_reduce(K, ch.A.coeff_of(av, 0));
    img.b0 = tower_reduce(K, ch.B.coeff_of(av, 0));
    img.c0 = tower_reduce(K, ch.C.coeff_of(av, 0));
    auto wronskian_zero = [&](const Poly& p, const Poly& q) {
        Poly w = tower_reduce(K, p * q.derivative(ov) - p.derivative(ov) * q);
        return w.is_zero();
    };
    bool constant = wronskian_zero(img.a0, img.b0) && wronskian_zero(img.a0, img.c0) &&
                    wronskian_zero(img.b0, img.c0);
    if (constant) {
        img.kind = ParametrizedImage::Kind::Contracted;
        // all three are multiples of a common univariate; extract the ratios
        const Poly* w = nullptr;
        for (const Poly* p : {&img.a0, &img.b0, &img.c0})
            if (!p->is_zero()) { w = p; break; }
        if (!w) throw std::logic_error("restricted triple identically zero");
        std::vector<Poly> pt;
        for (const Poly* p : {&img.a0, &img.b0, &img.c0})
            pt.push_back(p->is_zero() ? Poly(ch.space)
                                      : divide_exact_field(K, *p, *w));
        // normalize so the first nonzero coordinate is 1
        for (const Poly& coord : pt) {
            if (coord.is_zero()) continue;
            Poly inv = field_invert(K, to_field_elem(K, coord)).aligned_to(ch.space);
            for (auto& c2 : pt) c2 = tower_reduce(K, c2 * inv);
            break;
        }
        img.point = std::move(pt);
        img.point_at_infinity = img.point[2].is_zero();
        return img;
    }
    img.kind = img.c0.is_zero() ? ParametrizedImage::Kind::OntoInfinity
                                : ParametrizedImage::Kind::AffineCurve;
    return img;
}

}  // namespace jacinf

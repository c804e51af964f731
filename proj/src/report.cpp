#include "jacinf/report.hpp"

#include <cstdlib>
#include <sstream>

#include <json.hpp>

namespace jacinf {

using nlohmann::json;

uint64_t effective_seed() {
    if (const char* env = std::getenv("JACINF_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return static_cast<uint64_t>(v);
    }
    return kDefaultSeed;
}

Report analyze_map(const PolyMap& f, const std::string& input_echo, const AnalyzeOptions& opts) {
    SplitOracle oracle;
    uint64_t seed = opts.seed ? *opts.seed : effective_seed();
    for (int attempt = 0; attempt < 64; ++attempt) {
        Report r{input_echo, f, "", false, ResolutionTree{f}};
        try {
            Poly J = jacobian(f);
            r.jacobian = J.str();
            r.jacobian_constant = J.is_constant() && !J.is_zero();
            r.seed = seed;
            r.seed_from_env = std::getenv("JACINF_SEED") != nullptr && !opts.seed;

            r.tree = resolve(f, opts.resolve, &oracle);
            for (const auto& n : r.tree.nodes)
                if (n.pole % 2 != 0) r.parity_even = false;

            r.pole_pairs = validate_pole_pairs(r.tree);
            r.order_relations = check_order_relations(r.tree, seed);
            r.t_self = t_self_intersection(r.tree);
            if (J.is_zero()) {
                r.degree_note = "map not dominant: Jacobian vanishes identically";
            } else {
                r.degree = topological_degree(f, seed);
            }
            r.minimality = minimality_report(r.tree);
            r.certificate = certificate_from_tree(r.tree);
            r.non_properness = non_properness_report(r.tree, seed);
            for (const auto& e : r.non_properness.entries)
                if (e.m) r.image_mults[e.node] = *e.m;
            return r;
        } catch (const SplitDiscovered& s) {
            oracle.record(s.prefix_sig, s.modulus, s.factor_a, s.factor_b);
        }
    }
    throw std::logic_error("analysis split replays exhausted");
}

namespace {

std::string ll(long long v) { return std::to_string(v); }

json node_json(const Report& r, const TCurveNode& n) {
    json j;
    j["id"] = ll(n.id);
    j["name"] = n.name;
    j["kind"] = n.kind == TCurveNode::Kind::RootLine ? "root-line" : "exceptional";
    j["p"] = ll(n.pole);
    if (n.mult_t)
        j["a"] = ll(*n.mult_t);
    else
        j["a"] = nullptr;
    auto im = r.image_mults.find(n.id);
    if (im != r.image_mults.end())
        j["m"] = ll(im->second);
    else
        j["m"] = nullptr;
    j["s"] = ll(n.self_int);
    j["orbit"] = ll(n.orbit);
    if (n.t_parent)
        j["parent"] = ll(*n.t_parent);
    else
        j["parent"] = nullptr;
    switch (n.center_type) {
        case TCurveNode::CenterType::Root: j["center"] = "root"; break;
        case TCurveNode::CenterType::Single: j["center"] = "single"; break;
        case TCurveNode::CenterType::Double:
            j["center"] = "double(" + ll(n.parents[0]) + "," + ll(n.parents[1]) + ")";
            break;
    }
    return j;
}

const char* kind_str(TCurveNode::CenterType t) {
    switch (t) {
        case TCurveNode::CenterType::Root: return "root";
        case TCurveNode::CenterType::Single: return "single";
        case TCurveNode::CenterType::Double: return "double";
    }
    return "?";
}

}  // namespace

std::string emit_json(const Report& r) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = kToolVersion;
    j["seed"] = std::to_string(r.seed);
    j["seed_from_env"] = r.seed_from_env;

    j["input"]["echo"] = r.input_echo;
    j["input"]["p"] = r.map.P.str();
    j["input"]["q"] = r.map.Q.str();
    j["input"]["d"] = ll(r.map.d);

    j["jacobian"]["poly"] = r.jacobian;
    j["jacobian"]["nonzero_constant"] = r.jacobian_constant;

    json nodes = json::array();
    for (const auto& n : r.tree.nodes) nodes.push_back(node_json(r, n));
    j["resolution"]["nodes"] = nodes;
    json edges = json::array();
    for (const auto& e : r.tree.edges) {
        json je;
        je["a"] = ll(e.a);
        je["b"] = ll(e.b);
        je["mult"] = ll(e.mult);
        edges.push_back(je);
    }
    j["resolution"]["edges"] = edges;
    json log = json::array();
    for (const auto& b : r.tree.log) {
        json jb;
        jb["stage"] = ll(b.stage);
        jb["center"] = b.center;
        jb["type"] = kind_str(b.type);
        jb["node"] = ll(b.node);
        jb["orbit"] = ll(b.orbit);
        log.push_back(jb);
    }
    j["resolution"]["blowup_log"] = log;
    j["resolution"]["restarts"] = ll(r.tree.restarts);

    json pp = json::array();
    for (const auto& v : r.pole_pairs) {
        json jv;
        jv["parent"] = ll(v.parent);
        jv["child"] = ll(v.child);
        jv["pair"] = "(" + ll(v.a) + "," + ll(v.b) + ")";
        jv["clause"] = v.clause;
        pp.push_back(jv);
    }
    j["checks"]["pole_pairs"] = pp;
    j["checks"]["parity_even"] = r.parity_even;

    j["checks"]["order_relations"]["applicable"] = r.order_relations.applicable;
    json ore = json::array();
    for (const auto& e : r.order_relations.entries) {
        json je;
        je["node"] = ll(e.node);
        je["relation"] = e.relation;
        je["holds"] = e.holds;
        ore.push_back(je);
    }
    j["checks"]["order_relations"]["entries"] = ore;
    j["checks"]["order_relations"]["all_hold"] = r.order_relations.all_hold();

    j["checks"]["t_self_intersection"] = ll(r.t_self.t2);
    json tde = json::array();
    for (auto [id, v] : r.t_self.t_dot_e) {
        json je;
        je["node"] = ll(id);
        je["value"] = ll(v);
        tde.push_back(je);
    }
    j["checks"]["t_dot_e"] = tde;
    if (r.degree) {
        j["checks"]["topological_degree"] = ll(*r.degree);
        j["checks"]["degree_matches_t2"] = (*r.degree == r.t_self.t2);
    } else {
        j["checks"]["topological_degree"] = nullptr;
        j["checks"]["degree_note"] = r.degree_note;
    }
    json mi = json::array();
    for (int id : r.minimality) mi.push_back(ll(id));
    j["checks"]["minimality_violations"] = mi;

    j["certificate"]["verdict"] = r.certificate.verdict_str();
    j["certificate"]["strong_form"] = r.certificate.strong_form;
    json reasons = json::array();
    for (const auto& s : r.certificate.reasons) reasons.push_back(s);
    j["certificate"]["reasons"] = reasons;

    json np = json::array();
    for (const auto& e : r.non_properness.entries) {
        json je;
        je["node"] = ll(e.node);
        je["image_kind"] = e.image_is_curve ? "affine curve" : "affine point";
        je["image"] = e.image;
        je["branch"] = e.branch ? json(e.branch->str()) : json(nullptr);
        je["p"] = ll(e.pole);
        je["m"] = e.m ? json(ll(*e.m)) : json(nullptr);
        je["s"] = ll(e.self_int);
        np.push_back(je);
    }
    j["non_properness"]["entries"] = np;
    j["non_properness"]["empty"] = r.non_properness.entries.empty();
    j["non_properness"]["flagged"] = r.non_properness.flagged;

    return j.dump(2) + "\n";
}

std::string emit_dot(const ResolutionTree& tree, const std::map<int, long long>& image_mults) {
    std::ostringstream os;
    os << "graph jacinf {\n";
    os << "  node [shape=ellipse];\n";
    for (const auto& n : tree.nodes) {
        os << "  n" << n.id << " [label=\"" << n.name << "\\n(p=" << n.pole;
        if (n.mult_t) os << ", a=" << *n.mult_t;
        auto im = image_mults.find(n.id);
        if (im != image_mults.end()) os << ", m=" << im->second;
        os << ", s=" << n.self_int;
        if (n.orbit > 1) os << ", x" << n.orbit;
        os << ")\"";
        if (n.kind == TCurveNode::Kind::RootLine) os << ", peripheries=2";
        os << "];\n";
    }
    std::vector<EdgeRec> edges = tree.edges;
    std::sort(edges.begin(), edges.end(), [](const EdgeRec& x, const EdgeRec& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    for (const auto& e : edges) {
        os << "  n" << e.a << " -- n" << e.b;
        if (e.mult > 1) os << " [label=\"x" << e.mult << "\"]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string emit_text(const Report& r) {
    std::ostringstream os;
    os << "map: " << r.map.str() << "\n";
    os << "degree of components: " << r.map.d << "\n";
    os << "jacobian: " << r.jacobian
       << (r.jacobian_constant ? " (nonzero constant)" : " (not a nonzero constant)") << "\n";
    os << "\nresolution: " << r.tree.log.size() << " blow-ups, " << r.tree.nodes.size()
       << " t-curves";
    if (r.tree.restarts) os << ", " << r.tree.restarts << " split replays";
    os << "\n";
    os << "  id  name  kind         p     a|m   s     orbit  parent  center\n";
    for (const auto& n : r.tree.nodes) {
        std::string am = "-";
        if (n.mult_t) am = "a=" + std::to_string(*n.mult_t);
        auto im = r.image_mults.find(n.id);
        if (im != r.image_mults.end()) am = "m=" + std::to_string(im->second);
        char buf[160];
        std::snprintf(buf, sizeof buf, "  %-3d %-5s %-12s %-5lld %-5s %-5lld %-6lld %-7s %s\n",
                      n.id, n.name.c_str(),
                      n.kind == TCurveNode::Kind::RootLine ? "root-line" : "exceptional", n.pole,
                      am.c_str(), n.self_int, n.orbit,
                      n.t_parent ? std::to_string(*n.t_parent).c_str() : "-",
                      n.center_type == TCurveNode::CenterType::Root
                          ? "root"
                          : (n.center_type == TCurveNode::CenterType::Single ? "single"
                                                                             : "double"));
        os << buf;
    }
    os << "  edges:";
    std::vector<EdgeRec> edges = r.tree.edges;
    std::sort(edges.begin(), edges.end(), [](const EdgeRec& x, const EdgeRec& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    for (const auto& e : edges) {
        os << " " << r.tree.node(e.a).name << "-" << r.tree.node(e.b).name;
        if (e.mult > 1) os << "(x" << e.mult << ")";
    }
    os << "\n  blow-up log:\n";
    for (const auto& b : r.tree.log)
        os << "    stage " << b.stage << ": " << b.center << " -> " << r.tree.node(b.node).name
           << "\n";

    os << "\nchecks:\n";
    os << "  pole pairs: "
       << (r.pole_pairs.empty() ? "consistent" : std::to_string(r.pole_pairs.size()) + " violation(s)")
       << "\n";
    for (const auto& v : r.pole_pairs)
        os << "    " << r.tree.node(v.parent).name << "->" << r.tree.node(v.child).name << " ("
           << v.a << "," << v.b << ") violates " << v.clause << "\n";
    os << "  pole parity: " << (r.parity_even ? "all even" : "ODD POLE ORDER PRESENT") << "\n";
    if (r.order_relations.applicable) {
        os << "  order relations: " << (r.order_relations.all_hold() ? "all hold" : "FAILED")
           << "\n";
        for (const auto& e : r.order_relations.entries)
            os << "    " << (e.holds ? "ok   " : "FAIL ") << e.relation << "\n";
    } else {
        os << "  order relations: not applicable (Jacobian not a nonzero constant)\n";
    }
    os << "  T^2 = " << r.t_self.t2;
    if (r.degree)
        os << ", topological degree = " << *r.degree
           << (r.t_self.t2 == *r.degree ? " (match)" : " (MISMATCH)");
    else
        os << ", topological degree: " << r.degree_note;
    os << "\n";
    os << "  T.E:";
    for (auto [id, v] : r.t_self.t_dot_e) os << " " << r.tree.node(id).name << "=" << v;
    os << "\n";
    os << "  minimality: ";
    if (r.minimality.empty()) {
        os << "no contracted (-1)-curves\n";
    } else {
        for (int id : r.minimality) os << r.tree.node(id).name << " ";
        os << "are contracted (-1)-curves\n";
    }

    os << "\ncertificate: " << r.certificate.verdict_str();
    if (r.certificate.verdict == Certificate::Verdict::Automorphism)
        os << (r.certificate.strong_form ? " (strong form: last pole order 6)" : " (weak form)");
    os << "\n";
    for (const auto& s : r.certificate.reasons) os << "  - " << s << "\n";

    os << "\nnon-properness report: ";
    if (r.non_properness.entries.empty()) {
        os << "empty (every t-curve maps into the support of T)\n";
    } else {
        os << r.non_properness.entries.size() << " t-curve(s) meet the affine target\n";
        if (r.non_properness.flagged)
            os << "  ** constant-Jacobian map with non-proper behavior: check this example **\n";
        for (const auto& e : r.non_properness.entries) {
            os << "  " << r.tree.node(e.node).name << ": " << (e.image_is_curve ? "curve " : "point ")
               << e.image;
            if (e.branch) os << ", branch " << e.branch->str();
            os << "  (p=" << e.pole << (e.m ? ", m=" + std::to_string(*e.m) : "")
               << ", s=" << e.self_int << ")\n";
        }
    }
    os << "\nseed: " << r.seed << (r.seed_from_env ? " (from JACINF_SEED)" : "") << "\n";
    return os.str();
}

}  // namespace jacinf

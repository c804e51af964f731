#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jacinf/resolution.hpp"

namespace jacinf {

// ---------------------------------------------------------------------------
// pole pairs

struct PolePairViolation {
    int parent, child;
    long long a, b;  // pole orders of (t-parent, child)
    std::string clause;
};

/// Check every (t-parent, child) edge against the excluded pole pairs:
/// a<=2 & b>=2, a>=2 & b<=-2, a>=4 & b<=0, a=b<=-2. Empty means consistent.
std::vector<PolePairViolation> validate_pole_pairs(const ResolutionTree& tree);

// ---------------------------------------------------------------------------
// parametrized curves, implicitization, branch types

/// A parametrized plane curve (fn/fd, gn/gd), univariate in variable 0 ("t")
/// of `space`, over the field `field` (generators trail in `space`).
struct RationalParam {
    FieldCtx field;
    VarsPtr space;  // [t, x, y, gens...]
    Poly fn, fd, gn, gd;
};

/// Parametrization of a node's image; requires an AffineCurve restriction.
RationalParam node_parametrization(const ResolutionTree& tree, int node);

/// The reduced implicit equation of the parametrized curve: the factor of
/// the elimination resultant that vanishes on the image, extracted as a gcd
/// across three elimination routes and reduced squarefree. Monic.
Poly implicitize(const RationalParam& par, uint64_t seed);

struct ImageCurve {
    Poly implicit;
    long long m;  // vanishing order of the pulled-back equation along the node
};
/// Implicit equation and multiplicity for a node mapped onto an affine
/// curve. Errors with "node is contracted" otherwise.
ImageCurve image_curve(const ResolutionTree& tree, int node, uint64_t seed);

struct BranchType {
    enum class Kind { Smooth, Cusp, General };
    Kind kind = Kind::Smooth;
    long long p = 0;                              // cusp: local model x^p = y^(p+1)
    std::pair<long long, long long> orders{0, 0}; // general: coprime order pair
    std::string str() const;
    bool operator==(const BranchType& o) const {
        return kind == o.kind && p == o.p && orders == o.orders;
    }
};

/// Branch type of the image at the parameter value given by a linear root
/// (var - t0): orders of the coordinates after a seeded generic linear
/// change, reduced to smooth / cusp(p) / general((a,b)/gcd).
BranchType classify_branch(const RationalParam& par, const Poly& root, uint64_t seed);

// ---------------------------------------------------------------------------
// degree and intersection numbers

/// Topological degree: deg_y of the squarefree part of Res_x(P-a, Q-b) with
/// (a, b) transcendental, validated against two rational specializations.
/// Errors when the Jacobian vanishes identically.
long long topological_degree(const PolyMap& f, uint64_t seed);

struct TSelfIntersection {
    long long t2;
    /// (node, T.E per geometric component) for every node in supp T.
    std::vector<std::pair<int, long long>> t_dot_e;
};
TSelfIntersection t_self_intersection(const ResolutionTree& tree);

// ---------------------------------------------------------------------------
// order relations

struct OrderRelationEntry {
    int node;
    std::string relation;
    bool holds;
};
struct OrderRelationsReport {
    bool applicable = false;  // Jacobian is a nonzero constant
    std::vector<OrderRelationEntry> entries;
    bool all_hold() const;
};
OrderRelationsReport check_order_relations(const ResolutionTree& tree, uint64_t seed);

// ---------------------------------------------------------------------------
// certification

struct Certificate {
    enum class Verdict { Automorphism, NotCertified, PreconditionFailed };
    Verdict verdict = Verdict::NotCertified;
    bool strong_form = false;  // last pole order exactly 6
    std::vector<std::string> reasons;
    std::string verdict_str() const;
};

/// The chain criterion: Jacobian a nonzero constant, one rational center per
/// stage each on the newest curve, and final pole order >= 0.
Certificate certify_automorphism(const PolyMap& f, const ResolveOptions& opts = {},
                                 SplitOracle* oracle = nullptr);
/// Certificate assembly from a finished resolution (Jacobian gate included).
Certificate certificate_from_tree(const ResolutionTree& tree);

// ---------------------------------------------------------------------------
// non-properness and minimality

struct NonPropernessEntry {
    int node;
    bool image_is_curve = false;
    std::string image;  // point coordinates or implicit equation
    std::optional<BranchType> branch;
    long long pole;
    std::optional<long long> m;
    long long self_int;
};
struct NonPropernessReport {
    std::vector<NonPropernessEntry> entries;
    bool flagged = false;  // constant-Jacobian map with a non-empty report
};
NonPropernessReport non_properness_report(const ResolutionTree& tree, uint64_t seed);

/// Exceptional (-1)-nodes contracted by the restricted map.
std::vector<int> minimality_report(const ResolutionTree& tree);

}  // namespace jacinf

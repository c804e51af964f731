#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "jacinf/errors.hpp"
#include "jacinf/polyfield.hpp"
#include "jacinf/polymap.hpp"

namespace jacinf {

/// An affine coordinate chart on the blown-up surface, carrying the map as a
/// coprime triple [A:B:C] in the chart coordinates (the first two variables
/// of `space`; tower generators trail). axis_node records which t-curves the
/// two coordinate axes are: axis 0 is u=0, axis 1 is v=0.
struct Chart {
    FieldCtx field;
    VarsPtr space;
    Poly A, B, C;
    std::array<std::optional<int>, 2> axis_node;
    int parent_chart = -1;
    int born_stage = 0;
    std::string label;
    /// Centers already blown up in this chart: (axis index, monic modulus in
    /// the other variable). The chart remains a valid patch away from them.
    std::vector<std::pair<int, Poly>> exclusions;
};

struct TCurveNode {
    enum class Kind { RootLine, Exceptional };
    enum class CenterType { Root, Single, Double };

    int id = 0;
    std::string name;
    Kind kind = Kind::Exceptional;
    long long pole = 0;                    // always even
    std::optional<long long> mult_t;       // multiplicity a in T, when in supp T
    long long self_int = -1;               // per geometric component
    long long orbit = 1;                   // number of geometric components
    CenterType center_type = CenterType::Root;
    std::array<int, 2> parents{-1, -1};
    std::optional<int> t_parent;
    int enum_chart = -1, enum_axis = -1;   // primary chart: full axis enumeration
    int probe_chart = -1, probe_axis = -1; // secondary chart: origin covers the missing point
};

struct EdgeRec {
    int a, b;            // a < b
    long long mult;      // geometric intersection count (orbit-adjusted)
};

/// A blow-up center: the point(s) V(axis var = 0, modulus = 0) of a chart.
struct CenterRec {
    int chart = -1;
    int axis = 0;        // the discovering node's axis in that chart
    Poly modulus;        // monic in the other chart variable, over the chart field
    int sf_mult = 1;     // multiplicity in the squarefree decomposition
    bool is_probe = false;
    int node = -1;       // discovering node
    int other_node = -1; // second parent when the center is an axis intersection
    long long orbit_deg = 1;

    bool is_double() const { return other_node >= 0; }
};

struct StageRec {
    int stage;                        // 1-based
    std::vector<CenterRec> centers;   // canonical order; front() was blown up
};

struct BlowupRec {
    int stage;
    std::string center;
    TCurveNode::CenterType type;
    int node;
    long long orbit;
};

struct ResolveOptions {
    int max_blowups = 200;
    bool rational_only = false;
};

struct ResolutionTree {
    PolyMap map;
    std::vector<TCurveNode> nodes;
    std::vector<EdgeRec> edges;
    std::vector<Chart> charts;
    std::vector<BlowupRec> log;
    std::vector<StageRec> stages;  // terminal stage has no centers
    int restarts = 0;

    const TCurveNode& node(int id) const { return nodes.at(static_cast<size_t>(id)); }
    int depth(int id) const;
    std::vector<int> children(int id) const;
    bool has_edge(int a, int b) const;
};

/// The two affine charts of the projective plane along the line at infinity:
/// chart 1 has x = 1/v, y = u/v; chart 2 has x = u/v, y = 1/v. The triple is
/// [v^d P : v^d Q : v^d] in chart coordinates, divided by the common power of
/// v; the v = 0 axis is the root line L.
std::pair<Chart, Chart> charts_at_infinity(const PolyMap& f);

/// Base points of one chart: common zeros of the triple on its axis curves,
/// as Galois-orbit centers in canonical order (excluded centers filtered).
std::vector<CenterRec> find_base_points(const Chart& chart, const SplitOracle* oracle = nullptr);

/// Resolve the indeterminacy of the extended map by iterated blow-ups at
/// base points. Deterministic; D5 splits trigger internal replays. A shared
/// oracle lets callers carry factorizations discovered downstream back into
/// a replay.
ResolutionTree resolve(const PolyMap& f, const ResolveOptions& opts = {},
                       SplitOracle* shared_oracle = nullptr);

/// Vanishing order of the chart component C along the node's axis, checked
/// for consistency across the node's charts; absent when the order is 0.
std::optional<long long> multiplicity_in_t(const ResolutionTree& tree, int node);

/// Restriction of [A:B:C] to a t-curve.
struct ParametrizedImage {
    enum class Kind { Contracted, OntoInfinity, AffineCurve };
    Kind kind = Kind::Contracted;
    int chart = -1;
    int param_var = 0;               // chart variable parametrizing the axis
    Poly a0, b0, c0;                 // triple restricted to the axis
    std::vector<Poly> point;         // Contracted: [a:b:c] normalized, field elems
    bool point_at_infinity = false;  // Contracted: c-coordinate is zero
};
ParametrizedImage restricted_map(const ResolutionTree& tree, int node);

}  // namespace jacinf

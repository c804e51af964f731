#pragma once

#include <map>
#include <optional>
#include <string>

#include "jacinf/analysis.hpp"

namespace jacinf {

inline constexpr const char* kToolVersion = "jacinf 0.1.0";
inline constexpr const char* kSchemaVersion = "1";
inline constexpr uint64_t kDefaultSeed = 0x6a6163696e66ULL;

/// Seed for probe functions and generic coordinate changes: JACINF_SEED from
/// the environment when set, otherwise the built-in default.
uint64_t effective_seed();

/// Everything `analyze` computes for one map, ready for rendering.
struct Report {
    std::string input_echo;
    PolyMap map;
    std::string jacobian;
    bool jacobian_constant = false;

    ResolutionTree tree;
    std::map<int, long long> image_mults;  // m for curve-image nodes outside supp T

    std::vector<PolePairViolation> pole_pairs;
    bool parity_even = true;
    OrderRelationsReport order_relations;
    TSelfIntersection t_self;
    std::optional<long long> degree;       // absent when not dominant
    std::string degree_note;
    std::vector<int> minimality;
    Certificate certificate;
    NonPropernessReport non_properness;

    uint64_t seed = 0;
    bool seed_from_env = false;
};

struct AnalyzeOptions {
    ResolveOptions resolve;
    std::optional<uint64_t> seed;  // default: effective_seed()
};

/// Resolve and run every check. Splits discovered during analysis are fed
/// back into a replayed resolution, so the output is deterministic.
Report analyze_map(const PolyMap& f, const std::string& input_echo, const AnalyzeOptions& opts = {});

/// Canonical structured output: sorted keys, integers as decimal strings,
/// rationals as "num/den"; byte-stable for a fixed input and tool version.
std::string emit_json(const Report& r);

/// Graph-description output for the annotated tree.
std::string emit_dot(const ResolutionTree& tree,
                     const std::map<int, long long>& image_mults = {});

/// Human-readable report.
std::string emit_text(const Report& r);

}  // namespace jacinf

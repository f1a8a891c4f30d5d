#pragma once

#include <optional>
#include <vector>

#include "wayfind/common.hpp"

namespace wayfind {

// Row-major stack of N source distributions over the same M routes.
// Convention for perception-driven fusion: sign, crowd, space, memory.
using SourceMatrix = std::vector<RouteDistribution>;

// Output of the fusion: entries in [0,1], total mass in [0,1]. Mass below 1
// is expected; entropic sources are discounted rather than renormalized.
using ConfidenceOverRoutes = std::vector<double>;

// Route id, or nullopt when confidence never reached the threshold.
using MacroDecision = std::optional<int>;

// Jensen-Shannon divergence in bits between two distributions of equal
// length. Symmetric, in [0,1]; 0*log2(...) terms contribute zero.
double jsd(const RouteDistribution& p, const RouteDistribution& q);

// Mean pairwise JSD of each source against all others. N == 1 yields {0}.
std::vector<double> avg_jsd(const SourceMatrix& F);

// Sup_i = 1 / max(epsilon, avg_i).
std::vector<double> support_degrees(const std::vector<double>& avg, double epsilon);

// Crd_i = (Sup_i / sum Sup) * (1 - mean(avg)). Sums to 1 - mean(avg).
std::vector<double> credibility_degrees(const std::vector<double>& sup,
                                        const std::vector<double>& avg);

// Shannon entropy divided by log2(M), clamped to [0,1]. M == 1 is a
// DomainError (a one-route "decision" has no entropy scale).
double normalized_entropy(const RouteDistribution& p);

inline constexpr double kSupportEpsilon = 1e-5;

// Per-source intermediates of a fuse() evaluation, for inspection/tests.
struct FusionBreakdown {
    ConfidenceOverRoutes confidence;        // G
    std::vector<double> avg_divergence;     // one per source
    std::vector<double> support;            // one per source
    std::vector<double> credibility;        // one per source
    std::vector<double> entropy;            // normalized, one per source
    std::vector<double> weight;             // credibility * (1 - entropy)
    std::vector<RouteDistribution> term;    // weight_i * F_i, one per source
};

FusionBreakdown fuse_breakdown(const SourceMatrix& F, double epsilon = kSupportEpsilon);

// The divergence/credibility/entropy pipeline collapsing F into a single
// confidence distribution over routes.
ConfidenceOverRoutes fuse(const SourceMatrix& F, double epsilon = kSupportEpsilon);

// Argmax of g if it reaches theta, otherwise no decision. Ties go to the
// lowest route id. theta must lie in (0, 1].
MacroDecision macro_decide(const ConfidenceOverRoutes& g, double theta);

// Lowest-id argmax, used both by macro_decide and by forced commits.
int argmax_route(const std::vector<double>& values);

}  // namespace wayfind

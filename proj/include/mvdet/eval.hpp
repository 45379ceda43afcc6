#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mvdet/geometry.hpp"
#include "mvdet/targets.hpp"

namespace mvdet {

struct MatchPair {
    int det = -1;
    int gt = -1;
    double distance = 0.0;
};

struct FrameMatch {
    std::vector<MatchPair> pairs;
    int tp = 0, fp = 0, fn = 0;
    int n_gt = 0;
};

struct MetricsReport {
    double moda = 0.0, modp = 0.0, precision = 0.0, recall = 0.0;
    long tp = 0, fp = 0, fn = 0, n_gt = 0;
};

/// Min-cost square assignment (Jonker-Volgenant style potentials), O(n^3).
/// Returns, for each row, the assigned column. Exposed for testing.
std::vector<int> solve_assignment(const std::vector<std::vector<double>>& cost);

/// Optimal matching under the distance gate: maximizes the number of pairs
/// with distance <= threshold, then minimizes the total matched distance.
FrameMatch match_frame(const DetectionSet& dets, const std::vector<Vec2>& gts,
                       double threshold = 0.5);

/// Pools counts over frames (micro-average):
///   MODA = 1 - (FP + FN) / GT, precision = TP/(TP+FP) (1 when empty),
///   recall = TP/GT, MODP = mean over matches of (1 - d/threshold).
MetricsReport compute_metrics(const std::vector<FrameMatch>& frames, double threshold = 0.5);

nlohmann::json report_to_json(const MetricsReport& r);

} // namespace mvdet

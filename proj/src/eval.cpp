#include "mvdet/eval.hpp"

#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

namespace mvdet {

std::vector<int> solve_assignment(const std::vector<std::vector<double>>& cost) {
    const int n = static_cast<int>(cost.size());
    if (n == 0) return {};
    constexpr double kInf = std::numeric_limits<double>::infinity();

    // 1-indexed potentials; p[j] = row matched to column j.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = p[j0];
            int j1 = 0;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    std::vector<int> row_to_col(n, -1);
    for (int j = 1; j <= n; ++j)
        if (p[j] != 0) row_to_col[p[j] - 1] = j - 1;
    return row_to_col;
}

FrameMatch match_frame(const DetectionSet& dets, const std::vector<Vec2>& gts,
                       double threshold) {
    FrameMatch fm;
    const int nd = static_cast<int>(dets.size());
    const int ng = static_cast<int>(gts.size());
    fm.n_gt = ng;
    if (nd == 0 || ng == 0) {
        fm.tp = 0;
        fm.fp = nd;
        fm.fn = ng;
        return fm;
    }

    const int m = std::max(nd, ng);
    // One sentinel cost covers forbidden edges (distance above threshold)
    // and the padding rows/columns. It exceeds any feasible total of real
    // edges, so minimizing cost first maximizes matched pairs and then
    // minimizes their summed distance.
    const double forbidden = threshold * m + 1.0;
    std::vector<std::vector<double>> cost(m, std::vector<double>(m, forbidden));
    for (int i = 0; i < nd; ++i) {
        for (int j = 0; j < ng; ++j) {
            const double d = std::hypot(dets[i].x - gts[j].x, dets[i].y - gts[j].y);
            if (d <= threshold) cost[i][j] = d;
        }
    }
    const std::vector<int> assign = solve_assignment(cost);
    for (int i = 0; i < nd; ++i) {
        const int j = assign[i];
        if (j >= 0 && j < ng && cost[i][j] < forbidden)
            fm.pairs.push_back({i, j, cost[i][j]});
    }
    fm.tp = static_cast<int>(fm.pairs.size());
    fm.fp = nd - fm.tp;
    fm.fn = ng - fm.tp;
    return fm;
}

MetricsReport compute_metrics(const std::vector<FrameMatch>& frames, double threshold) {
    if (frames.empty()) throw ValidationError("compute_metrics: no frames");
    MetricsReport r;
    double modp_sum = 0.0;
    for (const FrameMatch& f : frames) {
        r.tp += f.tp;
        r.fp += f.fp;
        r.fn += f.fn;
        r.n_gt += f.n_gt;
        for (const MatchPair& p : f.pairs) modp_sum += 1.0 - p.distance / threshold;
    }
    r.precision = (r.tp + r.fp) == 0 ? 1.0 : static_cast<double>(r.tp) / (r.tp + r.fp);
    r.recall = r.n_gt == 0 ? 1.0 : static_cast<double>(r.tp) / r.n_gt;
    r.moda = r.n_gt == 0 ? (r.fp == 0 ? 1.0 : 0.0)
                         : 1.0 - static_cast<double>(r.fp + r.fn) / r.n_gt;
    r.modp = r.tp == 0 ? 0.0 : modp_sum / r.tp;
    return r;
}

nlohmann::json report_to_json(const MetricsReport& r) {
    return {{"moda", r.moda},       {"modp", r.modp}, {"precision", r.precision},
            {"recall", r.recall},   {"tp", r.tp},     {"fp", r.fp},
            {"fn", r.fn},           {"n_gt", r.n_gt}};
}

} // namespace mvdet

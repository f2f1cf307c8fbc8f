#include "measures.hpp"

#include "errors.hpp"

#include <algorithm>
#include <cmath>

namespace qtl {

double negativity(const DensityMatrix& rho) {
    return 0.5 * (trace_norm(partial_transpose(rho, 1)) - 1.0);
}

CcnrParts ccnr_parts(const DensityMatrix& rho) {
    const auto [rho_a, rho_b] = reduced_pair(rho);
    const ComplexMatrix correlation =
        rho.matrix() - kron(rho_a.matrix(), rho_b.matrix());
    const double realigned_norm =
        trace_norm(realign(correlation, rho.dims()[0], rho.dims()[1]));
    const double slack_a = std::max(0.0, 1.0 - purity(rho_a));
    const double slack_b = std::max(0.0, 1.0 - purity(rho_b));
    return {realigned_norm, std::sqrt(slack_a * slack_b)};
}

double ccnr_score(const DensityMatrix& rho) {
    const CcnrParts parts = ccnr_parts(rho);
    return parts.realigned_norm - parts.purity_bound;
}

Classification classify(const EntanglementScores& scores, double tol) {
    if (!std::isfinite(scores.n1) || !std::isfinite(scores.n2)) {
        throw DomainError("classify: scores must be finite");
    }
    if (scores.n1 > tol) {
        return Classification::FreeEntangled;
    }
    if (scores.n2 > tol) {
        return Classification::BoundEntangled;
    }
    return Classification::Undetected;
}

const char* classification_label(Classification c) {
    switch (c) {
    case Classification::FreeEntangled:
        return "free";
    case Classification::BoundEntangled:
        return "bound";
    case Classification::Undetected:
        return "undetected";
    }
    return "undetected";
}

namespace {

double interp_n2(std::span<const ScoredSample> series, std::size_t hint,
                 double t_star) {
    // t_star lies within [t[hint-1], t[hint+1]]; pick the bracketing segment.
    std::size_t lo = hint;
    if (t_star < series[hint].t) {
        lo = hint - 1;
    } else if (hint + 1 >= series.size()) {
        lo = hint - 1;
    }
    const ScoredSample& left = series[lo];
    const ScoredSample& right = series[lo + 1];
    const double frac = (t_star - left.t) / (right.t - left.t);
    return left.scores.n2 + frac * (right.scores.n2 - left.scores.n2);
}

} // namespace

DsdReport scan_dsd(std::span<const ScoredSample> series,
                   const DsdScanOptions& options) {
    const std::size_t n = series.size();
    if (n < 2) {
        throw DomainError("scan_dsd: need at least 2 samples");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (!(series[i].t > series[i - 1].t)) {
            throw DomainError("scan_dsd: samples must be sorted by strictly "
                              "increasing t");
        }
    }

    const double tol = options.tol;
    DsdReport report;

    // Grid-level descents of n1 through tol.
    for (std::size_t i = 1; i < n; ++i) {
        const double prev = series[i - 1].scores.n1;
        const double cur = series[i].scores.n1;
        if (prev > tol && cur <= tol) {
            const double frac = (prev - tol) / (prev - cur);
            const double t_star =
                series[i - 1].t + frac * (series[i].t - series[i - 1].t);
            const double n2_star =
                series[i - 1].scores.n2 +
                frac * (series[i].scores.n2 - series[i - 1].scores.n2);
            if (n2_star > tol) {
                report.free_to_bound.push_back({t_star, std::max(cur, 0.0), n2_star});
            }
        }
    }

    // Isolated zeros the grid straddles: strict local minima of n1 whose
    // V-interpolated floor reaches touch_tol. The two outer segments around
    // the minimum stay on one branch each, so their intersection locates the
    // kink of a piecewise-linear dip exactly.
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double v = series[i].scores.n1;
        if (!(v > tol) || !(v < series[i - 1].scores.n1) ||
            !(v < series[i + 1].scores.n1)) {
            continue;
        }
        const std::size_t l0 = (i >= 2) ? i - 2 : i - 1;
        const std::size_t l1 = (i >= 2) ? i - 1 : i;
        const std::size_t r0 = (i + 2 < n) ? i + 1 : i;
        const std::size_t r1 = (i + 2 < n) ? i + 2 : i + 1;
        const double sl = (series[l1].scores.n1 - series[l0].scores.n1) /
                          (series[l1].t - series[l0].t);
        const double sr = (series[r1].scores.n1 - series[r0].scores.n1) /
                          (series[r1].t - series[r0].t);
        if (!(sl < 0.0) || !(sr > 0.0)) {
            continue;
        }
        const double tl = series[i - 1].t;
        const double vl = series[i - 1].scores.n1;
        const double tr = series[i + 1].t;
        const double vr = series[i + 1].scores.n1;
        const double t_star = (vr - vl + sl * tl - sr * tr) / (sl - sr);
        if (!(t_star >= tl) || !(t_star <= tr)) {
            continue;
        }
        const double v_star = vl + sl * (t_star - tl);
        if (v_star > options.touch_tol) {
            continue;
        }
        const double n2_star = interp_n2(series, i, t_star);
        if (n2_star > tol) {
            report.free_to_bound.push_back({t_star, std::max(v_star, 0.0), n2_star});
        }
    }

    std::sort(report.free_to_bound.begin(), report.free_to_bound.end(),
              [](const FreeToBoundEvent& a, const FreeToBoundEvent& b) {
                  return a.t < b.t;
              });

    // Detection gaps: maximal runs where both scores sit at or below tol.
    std::size_t i = 0;
    while (i < n) {
        if (series[i].scores.n1 <= tol && series[i].scores.n2 <= tol) {
            std::size_t j = i;
            while (j + 1 < n && series[j + 1].scores.n1 <= tol &&
                   series[j + 1].scores.n2 <= tol) {
                ++j;
            }
            report.detection_gaps.push_back({series[i].t, series[j].t});
            i = j + 1;
        } else {
            ++i;
        }
    }

    return report;
}

} // namespace qtl

#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "chd/dataset.hpp"

namespace chd {

struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tn = 0;

    std::size_t total() const { return tp + fp + fn + tn; }
};

ConfusionCounts confusion(const std::vector<ClassLabel>& y_true,
                          const std::vector<ClassLabel>& y_pred, ClassLabel positive);

// A rate whose denominator vanished is reported as 0 with the
// degenerate flag set; report emitters print it as a dash.
struct MetricValue {
    double value = 0.0;
    bool degenerate = false;
};

struct PrfValues {
    MetricValue precision;
    MetricValue recall;
    MetricValue f1;
};

// P = TP/(TP+FP), R = TP/(TP+FN), F1 = 2PR/(P+R).
PrfValues prf(const ConfusionCounts& c);

struct ClassReport {
    // Index 0 = Non-CHD, 1 = CHD.
    std::array<PrfValues, 2> per_class;
    std::array<std::size_t, 2> support;
    double accuracy = 0.0;
    PrfValues macro_avg;
    PrfValues weighted_avg;

    std::size_t test_size() const { return support[0] + support[1]; }
};

ClassReport build_report(const std::vector<ClassLabel>& y_true,
                         const std::vector<ClassLabel>& y_pred);

// Threshold form: predicts 1 iff score >= threshold.
ClassReport build_report(const std::vector<ClassLabel>& y_true,
                         const std::vector<double>& scores, double threshold);

struct Curve {
    std::vector<std::pair<double, double>> points;  // x non-decreasing
    double area = 0.0;
};

// (FPR, TPR) swept over descending score thresholds, tied scores grouped
// into a single step; anchored at (0,0) and (1,1); trapezoidal area.
Curve roc_curve(const std::vector<ClassLabel>& y_true, const std::vector<double>& scores);

// (recall, precision) over descending thresholds, tied scores grouped,
// anchored at recall 0; trapezoidal area over the recall axis.
Curve pr_curve(const std::vector<ClassLabel>& y_true, const std::vector<double>& scores);

}  // namespace chd

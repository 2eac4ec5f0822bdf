#include "chd/metrics.hpp"

#include <algorithm>

#include "chd/errors.hpp"

namespace chd {

ConfusionCounts confusion(const std::vector<ClassLabel>& y_true,
                          const std::vector<ClassLabel>& y_pred, ClassLabel positive) {
    if (y_true.size() != y_pred.size())
        throw DimensionMismatch("confusion: length mismatch");
    if (y_true.empty()) throw Error("confusion: empty input");
    ConfusionCounts c;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        bool actual = y_true[i] == positive;
        bool predicted = y_pred[i] == positive;
        if (actual && predicted) c.tp++;
        else if (!actual && predicted) c.fp++;
        else if (actual && !predicted) c.fn++;
        else c.tn++;
    }
    return c;
}

namespace {

MetricValue ratio(std::size_t num, std::size_t den) {
    if (den == 0) return {0.0, true};
    return {static_cast<double>(num) / static_cast<double>(den), false};
}

MetricValue f1_of(const MetricValue& p, const MetricValue& r) {
    double sum = p.value + r.value;
    if (sum == 0.0) return {0.0, true};
    return {2.0 * p.value * r.value / sum, false};
}

}  // namespace

PrfValues prf(const ConfusionCounts& c) {
    PrfValues out;
    out.precision = ratio(c.tp, c.tp + c.fp);
    out.recall = ratio(c.tp, c.tp + c.fn);
    out.f1 = f1_of(out.precision, out.recall);
    return out;
}

ClassReport build_report(const std::vector<ClassLabel>& y_true,
                         const std::vector<ClassLabel>& y_pred) {
    if (y_true.size() != y_pred.size())
        throw DimensionMismatch("build_report: length mismatch");
    if (y_true.empty()) throw Error("build_report: empty input");

    ClassReport report;
    std::size_t correct = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i)
        if (y_true[i] == y_pred[i]) ++correct;
    report.accuracy = static_cast<double>(correct) / static_cast<double>(y_true.size());

    for (ClassLabel c : {0, 1}) {
        ConfusionCounts counts = confusion(y_true, y_pred, c);
        report.per_class[c] = prf(counts);
        report.support[c] = counts.tp + counts.fn;
    }

    auto mean2 = [](double a, double b) { return 0.5 * (a + b); };
    report.macro_avg.precision = {mean2(report.per_class[0].precision.value,
                                        report.per_class[1].precision.value), false};
    report.macro_avg.recall = {mean2(report.per_class[0].recall.value,
                                     report.per_class[1].recall.value), false};
    report.macro_avg.f1 = {mean2(report.per_class[0].f1.value,
                                 report.per_class[1].f1.value), false};

    double total = static_cast<double>(report.test_size());
    auto weighted = [&](double v0, double v1) {
        return (static_cast<double>(report.support[0]) * v0 +
                static_cast<double>(report.support[1]) * v1) / total;
    };
    report.weighted_avg.precision = {weighted(report.per_class[0].precision.value,
                                              report.per_class[1].precision.value), false};
    report.weighted_avg.recall = {weighted(report.per_class[0].recall.value,
                                           report.per_class[1].recall.value), false};
    report.weighted_avg.f1 = {weighted(report.per_class[0].f1.value,
                                       report.per_class[1].f1.value), false};
    return report;
}

ClassReport build_report(const std::vector<ClassLabel>& y_true,
                         const std::vector<double>& scores, double threshold) {
    std::vector<ClassLabel> preds(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i)
        preds[i] = scores[i] >= threshold ? 1 : 0;
    return build_report(y_true, preds);
}

namespace {

// Descending (score, label) pairs with equal scores adjacent.
std::vector<std::pair<double, ClassLabel>> ranked(const std::vector<ClassLabel>& y_true,
                                                  const std::vector<double>& scores) {
    if (y_true.size() != scores.size())
        throw DimensionMismatch("curve: length mismatch");
    std::vector<std::pair<double, ClassLabel>> pairs(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i) pairs[i] = {scores[i], y_true[i]};
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    return pairs;
}

double trapezoid(const std::vector<std::pair<double, double>>& points) {
    double area = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i)
        area += 0.5 * (points[i].first - points[i - 1].first) *
                (points[i].second + points[i - 1].second);
    return area;
}

}  // namespace

Curve roc_curve(const std::vector<ClassLabel>& y_true, const std::vector<double>& scores) {
    std::size_t pos = static_cast<std::size_t>(std::count(y_true.begin(), y_true.end(), 1));
    std::size_t neg = y_true.size() - pos;
    if (pos == 0 || neg == 0) throw Error("roc_curve: single-class truth");

    auto pairs = ranked(y_true, scores);
    Curve curve;
    curve.points.emplace_back(0.0, 0.0);
    std::size_t tp = 0, fp = 0;
    for (std::size_t i = 0; i < pairs.size();) {
        double score = pairs[i].first;
        while (i < pairs.size() && pairs[i].first == score) {
            (pairs[i].second == 1 ? tp : fp)++;
            ++i;
        }
        curve.points.emplace_back(static_cast<double>(fp) / static_cast<double>(neg),
                                  static_cast<double>(tp) / static_cast<double>(pos));
    }
    if (curve.points.back() != std::make_pair(1.0, 1.0)) curve.points.emplace_back(1.0, 1.0);
    curve.area = trapezoid(curve.points);
    return curve;
}

Curve pr_curve(const std::vector<ClassLabel>& y_true, const std::vector<double>& scores) {
    std::size_t pos = static_cast<std::size_t>(std::count(y_true.begin(), y_true.end(), 1));
    if (pos == 0) throw Error("pr_curve: no positives in truth");

    auto pairs = ranked(y_true, scores);
    Curve curve;
    std::size_t tp = 0, predicted = 0;
    for (std::size_t i = 0; i < pairs.size();) {
        double score = pairs[i].first;
        while (i < pairs.size() && pairs[i].first == score) {
            if (pairs[i].second == 1) ++tp;
            ++predicted;
            ++i;
        }
        double recall = static_cast<double>(tp) / static_cast<double>(pos);
        double precision = static_cast<double>(tp) / static_cast<double>(predicted);
        if (curve.points.empty())
            curve.points.emplace_back(0.0, precision);  // anchor at recall 0
        curve.points.emplace_back(recall, precision);
    }
    curve.area = trapezoid(curve.points);
    return curve;
}

}  // namespace chd

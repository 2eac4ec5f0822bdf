#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "chd/errors.hpp"
#include "chd/metrics.hpp"
#include "chd/rng.hpp"

using namespace chd;

namespace {

// Tie-aware pairwise-concordance AUROC (Mann-Whitney with half credit).
double mann_whitney_auc(const std::vector<ClassLabel>& y, const std::vector<double>& s) {
    double concordant = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] != 1) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] != 0) continue;
            ++pairs;
            if (s[i] > s[j]) concordant += 1.0;
            else if (s[i] == s[j]) concordant += 0.5;
        }
    }
    return concordant / static_cast<double>(pairs);
}

}  // namespace

TEST_CASE("confusion counting") {
    auto c = confusion({1, 1, 0, 0}, {1, 0, 0, 0}, 1);
    CHECK(c.tp == 1);
    CHECK(c.fn == 1);
    CHECK(c.fp == 0);
    CHECK(c.tn == 2);
    CHECK(c.total() == 4);
}

TEST_CASE("perfect predictions have no errors") {
    auto c = confusion({1, 0, 1}, {1, 0, 1}, 1);
    CHECK(c.fp == 0);
    CHECK(c.fn == 0);
}

TEST_CASE("swapping the positive class swaps the roles") {
    std::vector<ClassLabel> t = {1, 1, 0, 0, 1};
    std::vector<ClassLabel> p = {1, 0, 0, 1, 1};
    auto pos1 = confusion(t, p, 1);
    auto pos0 = confusion(t, p, 0);
    CHECK(pos0.tp == pos1.tn);
    CHECK(pos0.tn == pos1.tp);
    CHECK(pos0.fp == pos1.fn);
    CHECK(pos0.fn == pos1.fp);
}

TEST_CASE("confusion input validation") {
    CHECK_THROWS_AS(confusion({1}, {1, 0}, 1), DimensionMismatch);
    CHECK_THROWS(confusion({}, {}, 1));
}

TEST_CASE("prf formula arithmetic") {
    ConfusionCounts c{2, 1, 2, 0};
    auto v = prf(c);
    CHECK(v.precision.value == doctest::Approx(2.0 / 3.0));
    CHECK(v.recall.value == doctest::Approx(0.5));
    CHECK(v.f1.value == doctest::Approx(4.0 / 7.0));
    CHECK(!v.precision.degenerate);
}

TEST_CASE("zero denominators set the degenerate flag") {
    ConfusionCounts c{0, 0, 3, 5};
    auto v = prf(c);
    CHECK(v.precision.value == 0.0);
    CHECK(v.precision.degenerate);
    CHECK(v.f1.degenerate);
}

TEST_CASE("F1 of the published random-forest Non-CHD row") {
    // P=0.85, R=0.98 -> F1 = 2*0.85*0.98/1.83
    double f1 = 2.0 * 0.85 * 0.98 / (0.85 + 0.98);
    CHECK(f1 == doctest::Approx(0.91).epsilon(0.005));
}

TEST_CASE("perfect report") {
    auto r = build_report({1, 0, 1, 0}, std::vector<ClassLabel>{1, 0, 1, 0});
    CHECK(r.accuracy == 1.0);
    for (int c = 0; c < 2; ++c) {
        CHECK(r.per_class[c].precision.value == 1.0);
        CHECK(r.per_class[c].recall.value == 1.0);
        CHECK(r.per_class[c].f1.value == 1.0);
    }
    CHECK(r.support[0] == 2);
    CHECK(r.support[1] == 2);
}

TEST_CASE("macro average is the unweighted mean") {
    // Published random-forest rows: F1 0.91 and 0.21 -> macro 0.56.
    CHECK(0.5 * (0.91 + 0.21) == doctest::Approx(0.56));
    auto r = build_report({0, 0, 0, 1}, std::vector<ClassLabel>{0, 0, 1, 1});
    double expect = 0.5 * (r.per_class[0].f1.value + r.per_class[1].f1.value);
    CHECK(r.macro_avg.f1.value == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("weighted average recall equals accuracy, exactly") {
    auto rng = RngStream::derive(31, "weights");
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t m = 2 + rng.next_index(30);
        std::vector<ClassLabel> t(m), p(m);
        bool both = false;
        for (std::size_t i = 0; i < m; ++i) {
            t[i] = static_cast<ClassLabel>(rng.next_index(2));
            p[i] = static_cast<ClassLabel>(rng.next_index(2));
        }
        both = std::count(t.begin(), t.end(), 1) > 0 &&
               std::count(t.begin(), t.end(), 0) > 0;
        if (!both) continue;
        auto r = build_report(t, p);
        CHECK(r.weighted_avg.recall.value == doctest::Approx(r.accuracy).epsilon(1e-12));
        // accuracy = (TP+TN)/total for the positive-class confusion
        auto c = confusion(t, p, 1);
        CHECK(r.accuracy ==
              doctest::Approx(static_cast<double>(c.tp + c.tn) / c.total()).epsilon(1e-12));
        CHECK(r.support[0] + r.support[1] == m);
        for (int cls = 0; cls < 2; ++cls) {
            CHECK(r.per_class[cls].precision.value >= 0.0);
            CHECK(r.per_class[cls].precision.value <= 1.0);
            CHECK(r.per_class[cls].f1.value >= 0.0);
            CHECK(r.per_class[cls].f1.value <= 1.0);
        }
    }
}

TEST_CASE("single-class test set collapses the weighted average") {
    auto r = build_report({1, 1, 1}, std::vector<ClassLabel>{1, 0, 1});
    CHECK(r.weighted_avg.recall.value == doctest::Approx(r.per_class[1].recall.value));
    CHECK(r.weighted_avg.f1.value == doctest::Approx(r.per_class[1].f1.value));
}

TEST_CASE("threshold form of build_report") {
    auto r = build_report({1, 0}, std::vector<double>{0.9, 0.1}, 0.5);
    CHECK(r.accuracy == 1.0);
    // Tie at exactly the threshold predicts class 1.
    auto r2 = build_report({1, 0}, std::vector<double>{0.5, 0.5}, 0.5);
    CHECK(r2.per_class[1].recall.value == 1.0);
    CHECK(r2.per_class[0].recall.value == 0.0);
}

TEST_CASE("ROC endpoints and perfect ranking") {
    auto curve = roc_curve({1, 1, 0, 0}, {0.9, 0.8, 0.2, 0.1});
    CHECK(curve.points.front() == std::make_pair(0.0, 0.0));
    CHECK(curve.points.back() == std::make_pair(1.0, 1.0));
    CHECK(curve.area == doctest::Approx(1.0));
}

TEST_CASE("all-equal scores give the diagonal") {
    auto curve = roc_curve({1, 0, 1, 0}, {0.5, 0.5, 0.5, 0.5});
    CHECK(curve.area == doctest::Approx(0.5));
    CHECK(curve.points.size() == 2);  // (0,0) and the single grouped step (1,1)
}

TEST_CASE("4-point ROC fixture matches the concordance oracle") {
    std::vector<ClassLabel> y = {1, 0, 1, 0};
    std::vector<double> s = {0.9, 0.8, 0.3, 0.1};
    auto curve = roc_curve(y, s);
    CHECK(curve.area == doctest::Approx(mann_whitney_auc(y, s)).epsilon(1e-12));
}

TEST_CASE("ROC area equals the Mann-Whitney oracle on random fixtures") {
    auto rng = RngStream::derive(37, "roc");
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t m = 4 + rng.next_index(17);  // up to 20 points
        std::vector<ClassLabel> y(m);
        std::vector<double> s(m);
        bool has0 = false, has1 = false;
        for (std::size_t i = 0; i < m; ++i) {
            y[i] = static_cast<ClassLabel>(rng.next_index(2));
            s[i] = static_cast<double>(rng.next_index(5)) / 4.0;  // ties likely
            (y[i] ? has1 : has0) = true;
        }
        if (!has0 || !has1) continue;
        auto curve = roc_curve(y, s);
        CHECK(curve.area == doctest::Approx(mann_whitney_auc(y, s)).epsilon(1e-12));
        for (std::size_t i = 1; i < curve.points.size(); ++i)
            CHECK(curve.points[i].first >= curve.points[i - 1].first);
    }
}

TEST_CASE("ROC area is invariant under strictly monotone score transforms") {
    auto rng = RngStream::derive(41, "mono");
    std::vector<ClassLabel> y;
    std::vector<double> s;
    for (int i = 0; i < 30; ++i) {
        y.push_back(static_cast<ClassLabel>(rng.next_index(2)));
        s.push_back(rng.next_double());
    }
    y[0] = 0; y[1] = 1;
    auto base = roc_curve(y, s);
    std::vector<double> transformed(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        transformed[i] = std::exp(3.0 * s[i]) + 1.0;
    auto after = roc_curve(y, transformed);
    CHECK(after.area == doctest::Approx(base.area).epsilon(1e-12));
}

TEST_CASE("label swap with score reflection preserves the ROC area") {
    auto rng = RngStream::derive(43, "swap");
    std::vector<ClassLabel> y;
    std::vector<double> s;
    for (int i = 0; i < 25; ++i) {
        y.push_back(static_cast<ClassLabel>(rng.next_index(2)));
        s.push_back(static_cast<double>(rng.next_index(7)) / 6.0);
    }
    y[0] = 0; y[1] = 1;
    auto base = roc_curve(y, s);
    std::vector<ClassLabel> flipped(y.size());
    std::vector<double> reflected(s.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        flipped[i] = 1 - y[i];
        reflected[i] = 1.0 - s[i];
    }
    auto after = roc_curve(flipped, reflected);
    CHECK(after.area == doctest::Approx(base.area).epsilon(1e-12));
}

TEST_CASE("single-class truth is rejected for ROC") {
    CHECK_THROWS(roc_curve({1, 1}, {0.5, 0.6}));
}

TEST_CASE("PR perfect ranking has area 1") {
    auto curve = pr_curve({1, 1, 0, 0}, {0.9, 0.8, 0.2, 0.1});
    CHECK(curve.area == doctest::Approx(1.0));
}

TEST_CASE("uninformative scores give area = prevalence") {
    auto curve = pr_curve({1, 0, 0, 0}, {0.4, 0.4, 0.4, 0.4});
    CHECK(curve.area == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("4-point PR fixture matches exhaustive threshold enumeration") {
    std::vector<ClassLabel> y = {1, 0, 1, 0};
    std::vector<double> s = {0.9, 0.8, 0.3, 0.1};
    // Thresholds sweep the distinct scores descending:
    //  t=0.9: tp=1, pred=1 -> recall 1/2, precision 1
    //  t=0.8: tp=1, pred=2 -> recall 1/2, precision 1/2
    //  t=0.3: tp=2, pred=3 -> recall 1,   precision 2/3
    //  t=0.1: tp=2, pred=4 -> recall 1,   precision 1/2
    // Trapezoid over recall with the (0,1) anchor:
    double expect = 0.5 * (1.0 + 1.0) * 0.5      // 0 -> 0.5
                  + 0.0                           // same recall step at 0.5
                  + 0.5 * (0.5 + 2.0 / 3.0) * 0.5 // 0.5 -> 1
                  + 0.0;                          // same recall step at 1
    auto curve = pr_curve(y, s);
    CHECK(curve.area == doctest::Approx(expect).epsilon(1e-12));
    CHECK(curve.points.size() <= 4 + 2);  // unique scores + anchors
}

TEST_CASE("PR requires at least one positive") {
    CHECK_THROWS(pr_curve({0, 0}, {0.1, 0.9}));
}

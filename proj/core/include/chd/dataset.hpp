#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace chd {

// 0 = Non-CHD, 1 = CHD.
using ClassLabel = int;

inline constexpr const char* kLabelColumn = "TenYearCHD";

struct Dataset {
    std::vector<std::string> feature_names;
    std::vector<std::vector<double>> rows;  // m x n, finite values only
    std::vector<ClassLabel> labels;         // m values in {0,1}

    std::size_t num_rows() const { return rows.size(); }
    std::size_t num_features() const { return feature_names.size(); }

    // (count of class 0, count of class 1)
    std::pair<std::size_t, std::size_t> class_counts() const {
        std::size_t n0 = 0, n1 = 0;
        for (ClassLabel y : labels) (y == 1 ? n1 : n0)++;
        return {n0, n1};
    }
};

// Every fitted classifier exposes a probability-like score in [0,1]
// for the positive (CHD) class and a thresholded class prediction.
// Pure-vote models (forest, KNN) override predict with their majority
// rule; for all others, predict(x) = 1 iff score(x) >= threshold.
class FittedModel {
public:
    virtual ~FittedModel() = default;

    virtual double score(const std::vector<double>& x) const = 0;

    virtual ClassLabel predict(const std::vector<double>& x,
                               double threshold = 0.5) const {
        return score(x) >= threshold ? 1 : 0;
    }
};

}  // namespace chd

#include "chd/knn.hpp"

#include <algorithm>
#include <cmath>

#include "chd/errors.hpp"

namespace chd {

double l2_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("l2_distance: size mismatch");
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        double d = a[j] - b[j];
        sum += d * d;
    }
    return std::sqrt(sum);
}

KnnModel::KnnModel(Dataset train, std::size_t k) : train_(std::move(train)), k_(k) {
    if (k_ == 0 || k_ > train_.num_rows())
        throw Error("knn: K must satisfy 1 <= K <= training size");
}

double KnnModel::score(const std::vector<double>& x) const {
    std::size_t m = train_.num_rows();
    std::vector<std::pair<double, std::size_t>> dist(m);
    for (std::size_t i = 0; i < m; ++i) dist[i] = {l2_distance(x, train_.rows[i]), i};
    // (distance, row index) ordering gives the documented tie-break.
    std::partial_sort(dist.begin(), dist.begin() + k_, dist.end());

    std::size_t positives = 0;
    for (std::size_t k = 0; k < k_; ++k)
        if (train_.labels[dist[k].second] == 1) ++positives;
    return static_cast<double>(positives) / static_cast<double>(k_);
}

ClassLabel KnnModel::predict(const std::vector<double>& x, double /*threshold*/) const {
    return score(x) > 0.5 ? 1 : 0;  // vote tie goes to class 0
}

std::unique_ptr<KnnModel> fit_knn(const Dataset& train, std::size_t k) {
    return std::make_unique<KnnModel>(train, k);
}

}  // namespace chd

#pragma once

#include <memory>
#include <vector>

#include "chd/dataset.hpp"

namespace chd {

double l2_distance(const std::vector<double>& a, const std::vector<double>& b);

// K-nearest-neighbors by exhaustive l2 search. Distance ties break on
// the lower training-row index; the vote tie goes to class 0.
class KnnModel : public FittedModel {
public:
    KnnModel(Dataset train, std::size_t k);

    // Positive fraction among the K nearest neighbors.
    double score(const std::vector<double>& x) const override;
    ClassLabel predict(const std::vector<double>& x, double threshold = 0.5) const override;

    std::size_t k() const { return k_; }

private:
    Dataset train_;
    std::size_t k_;
};

std::unique_ptr<KnnModel> fit_knn(const Dataset& train, std::size_t k = 5);

}  // namespace chd

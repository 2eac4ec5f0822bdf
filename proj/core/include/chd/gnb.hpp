#pragma once

#include <array>
#include <memory>
#include <vector>

#include "chd/dataset.hpp"

namespace chd {

// Gaussian Naive Bayes: per-class per-feature Gaussian likelihoods,
// population variances floored at variance_floor, class-frequency
// priors. Posteriors are accumulated in the log domain.
class GnbModel : public FittedModel {
public:
    // (p0, p1), normalized to sum to 1.
    std::pair<double, double> posterior(const std::vector<double>& x) const;

    double score(const std::vector<double>& x) const override {
        return posterior(x).second;
    }
    ClassLabel predict(const std::vector<double>& x, double threshold = 0.5) const override;

    const std::array<std::vector<double>, 2>& means() const { return means_; }
    const std::array<std::vector<double>, 2>& variances() const { return variances_; }
    const std::array<double, 2>& priors() const { return priors_; }

private:
    friend std::unique_ptr<GnbModel> fit_gnb(const Dataset&, double);
    std::array<std::vector<double>, 2> means_;
    std::array<std::vector<double>, 2> variances_;
    std::array<double, 2> priors_{};
};

std::unique_ptr<GnbModel> fit_gnb(const Dataset& train, double variance_floor = 1e-9);

}  // namespace chd

#pragma once

#include <array>
#include <memory>
#include <vector>

#include "chd/dataset.hpp"
#include "chd/linalg.hpp"

namespace chd {

// Linear discriminant analysis with a pooled within-class covariance
// (denominator m-2) plus a small ridge on the diagonal. Scores are the
// softmax of the two discriminants so they live in [0,1] like every
// other model's.
class LdaModel : public FittedModel {
public:
    double score(const std::vector<double>& x) const override;
    ClassLabel predict(const std::vector<double>& x, double threshold = 0.5) const override;

    // delta_c(x) = x' Sigma^-1 mu_c - 1/2 mu_c' Sigma^-1 mu_c + ln pi_c
    double discriminant(const std::vector<double>& x, ClassLabel c) const;

    const std::array<std::vector<double>, 2>& means() const { return means_; }
    const SymMatrix& pooled_covariance() const { return covariance_; }
    const std::array<double, 2>& priors() const { return priors_; }

private:
    friend std::unique_ptr<LdaModel> fit_lda(const Dataset&, double);
    LdaModel() : covariance_(0), chol_(0) {}

    std::array<std::vector<double>, 2> means_;
    SymMatrix covariance_;
    SymMatrix chol_;                                // Cholesky factor of covariance_
    std::array<std::vector<double>, 2> solved_mu_;  // Sigma^-1 mu_c, precomputed
    std::array<double, 2> offsets_{};               // -1/2 mu' Sigma^-1 mu + ln pi
    std::array<double, 2> priors_{};
};

std::unique_ptr<LdaModel> fit_lda(const Dataset& train, double ridge = 1e-6);

}  // namespace chd

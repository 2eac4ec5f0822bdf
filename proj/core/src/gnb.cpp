#include "chd/gnb.hpp"

#include <cmath>

#include "chd/errors.hpp"

namespace chd {

std::pair<double, double> GnbModel::posterior(const std::vector<double>& x) const {
    if (x.size() != means_[0].size())
        throw DimensionMismatch("gnb posterior: feature count mismatch");

    std::array<double, 2> log_post;
    for (int c = 0; c < 2; ++c) {
        double lp = std::log(priors_[c]);
        for (std::size_t j = 0; j < x.size(); ++j) {
            double var = variances_[c][j];
            double diff = x[j] - means_[c][j];
            lp += -0.5 * (std::log(2.0 * M_PI * var) + diff * diff / var);
        }
        log_post[c] = lp;
    }
    // Normalize via log-sum-exp; the evidence p(x) cancels.
    double hi = std::max(log_post[0], log_post[1]);
    double e0 = std::exp(log_post[0] - hi);
    double e1 = std::exp(log_post[1] - hi);
    return {e0 / (e0 + e1), e1 / (e0 + e1)};
}

ClassLabel GnbModel::predict(const std::vector<double>& x, double /*threshold*/) const {
    auto [p0, p1] = posterior(x);
    return p1 > p0 ? 1 : 0;  // tie goes to class 0
}

std::unique_ptr<GnbModel> fit_gnb(const Dataset& train, double variance_floor) {
    auto [n0, n1] = train.class_counts();
    if (n0 == 0 || n1 == 0) throw SingleClass();
    std::size_t m = train.num_rows();
    std::size_t n = train.num_features();
    std::array<double, 2> counts = {static_cast<double>(n0), static_cast<double>(n1)};

    auto model = std::unique_ptr<GnbModel>(new GnbModel());
    for (int c = 0; c < 2; ++c) {
        model->means_[c].assign(n, 0.0);
        model->variances_[c].assign(n, 0.0);
    }
    for (std::size_t i = 0; i < m; ++i) {
        auto& mu = model->means_[train.labels[i]];
        for (std::size_t j = 0; j < n; ++j) mu[j] += train.rows[i][j];
    }
    for (int c = 0; c < 2; ++c)
        for (std::size_t j = 0; j < n; ++j) model->means_[c][j] /= counts[c];

    for (std::size_t i = 0; i < m; ++i) {
        int c = train.labels[i];
        for (std::size_t j = 0; j < n; ++j) {
            double diff = train.rows[i][j] - model->means_[c][j];
            model->variances_[c][j] += diff * diff;
        }
    }
    for (int c = 0; c < 2; ++c)
        for (std::size_t j = 0; j < n; ++j)
            model->variances_[c][j] = std::max(model->variances_[c][j] / counts[c], variance_floor);

    model->priors_ = {counts[0] / static_cast<double>(m), counts[1] / static_cast<double>(m)};
    return model;
}

}  // namespace chd

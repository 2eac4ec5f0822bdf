#include "chd/lda.hpp"

#include <cmath>

#include "chd/errors.hpp"
#include "chd/logistic.hpp"

namespace chd {

double LdaModel::discriminant(const std::vector<double>& x, ClassLabel c) const {
    if (x.size() != solved_mu_[0].size())
        throw DimensionMismatch("lda discriminant: feature count mismatch");
    return dot(x, solved_mu_[c]) + offsets_[c];
}

double LdaModel::score(const std::vector<double>& x) const {
    double d0 = discriminant(x, 0);
    double d1 = discriminant(x, 1);
    // Two-class softmax collapses to a sigmoid of the difference.
    return sigmoid(d1 - d0);
}

ClassLabel LdaModel::predict(const std::vector<double>& x, double /*threshold*/) const {
    // Argmax of the discriminants; exact tie goes to class 0.
    return discriminant(x, 1) > discriminant(x, 0) ? 1 : 0;
}

std::unique_ptr<LdaModel> fit_lda(const Dataset& train, double ridge) {
    auto [n0, n1] = train.class_counts();
    if (n0 < 2 || n1 < 2) throw SingleClass();
    std::size_t m = train.num_rows();
    std::size_t n = train.num_features();

    auto model = std::unique_ptr<LdaModel>(new LdaModel());
    model->means_[0].assign(n, 0.0);
    model->means_[1].assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        auto& mu = model->means_[train.labels[i]];
        for (std::size_t j = 0; j < n; ++j) mu[j] += train.rows[i][j];
    }
    for (std::size_t j = 0; j < n; ++j) {
        model->means_[0][j] /= static_cast<double>(n0);
        model->means_[1][j] /= static_cast<double>(n1);
    }

    SymMatrix cov(n);
    std::vector<double> centered(n);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& mu = model->means_[train.labels[i]];
        for (std::size_t j = 0; j < n; ++j) centered[j] = train.rows[i][j] - mu[j];
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b <= a; ++b) cov.at(a, b) += centered[a] * centered[b];
    }
    double denom = static_cast<double>(m) - 2.0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b <= a; ++b) {
            cov.at(a, b) /= denom;
            cov.at(b, a) = cov.at(a, b);
        }
        cov.at(a, a) += ridge;
    }
    model->covariance_ = cov;
    try {
        model->chol_ = cholesky(cov);
    } catch (const Error&) {
        throw Error("fit_lda: singular pooled covariance even with ridge");
    }

    model->priors_ = {static_cast<double>(n0) / static_cast<double>(m),
                      static_cast<double>(n1) / static_cast<double>(m)};
    for (int c = 0; c < 2; ++c) {
        model->solved_mu_[c] = cholesky_solve(model->chol_, model->means_[c]);
        model->offsets_[c] = -0.5 * dot(model->means_[c], model->solved_mu_[c]) +
                             std::log(model->priors_[c]);
    }
    return model;
}

}  // namespace chd

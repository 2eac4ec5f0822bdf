#include "chd/boost.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "chd/errors.hpp"
#include "chd/logistic.hpp"

namespace chd {

double xgb_split_gain(double g_left, double h_left, double g_right, double h_right,
                      double lambda, double gamma) {
    double g_total = g_left + g_right;
    double h_total = h_left + h_right;
    return 0.5 * (g_left * g_left / (h_left + lambda) +
                  g_right * g_right / (h_right + lambda) -
                  g_total * g_total / (h_total + lambda)) -
           gamma;
}

double xgb_init(const Dataset& train) {
    if (train.num_rows() == 0) throw Error("xgb_init: empty dataset");
    double sum = 0.0;
    for (ClassLabel y : train.labels) sum += static_cast<double>(y);
    return sum / static_cast<double>(train.num_rows());
}

namespace {

constexpr double kProbClamp = 1e-6;

double logit(double p) {
    p = std::clamp(p, kProbClamp, 1.0 - kProbClamp);
    return std::log(p / (1.0 - p));
}

struct GradHess {
    double g = 0.0;
    double h = 0.0;
};

std::unique_ptr<BoostNode> grow(const Dataset& data, const std::vector<GradHess>& gh,
                                std::vector<std::size_t>& rows, const BoostParams& params,
                                std::size_t depth) {
    double g_sum = 0.0, h_sum = 0.0;
    for (std::size_t i : rows) {
        g_sum += gh[i].g;
        h_sum += gh[i].h;
    }

    auto node = std::make_unique<BoostNode>();
    node->leaf_weight = -g_sum / (h_sum + params.lambda);
    if (depth >= params.max_depth || rows.size() < 2) return node;

    // Exact greedy search over midpoints between distinct sorted values.
    struct Best {
        std::size_t feature;
        double threshold;
        double gain;
    };
    std::optional<Best> best;
    std::size_t m = rows.size();
    std::vector<std::pair<double, std::size_t>> column(m);
    for (std::size_t feature = 0; feature < data.num_features(); ++feature) {
        for (std::size_t k = 0; k < m; ++k)
            column[k] = {data.rows[rows[k]][feature], rows[k]};
        std::sort(column.begin(), column.end());

        double g_left = 0.0, h_left = 0.0;
        for (std::size_t k = 0; k + 1 < m; ++k) {
            g_left += gh[column[k].second].g;
            h_left += gh[column[k].second].h;
            if (column[k].first == column[k + 1].first) continue;
            double gain = xgb_split_gain(g_left, h_left, g_sum - g_left, h_sum - h_left,
                                         params.lambda, params.gamma);
            if (gain > 0.0 && (!best || gain > best->gain)) {
                double threshold =
                    column[k].first + 0.5 * (column[k + 1].first - column[k].first);
                best = Best{feature, threshold, gain};
            }
        }
    }
    if (!best) return node;

    std::vector<std::size_t> left_rows, right_rows;
    for (std::size_t i : rows) {
        if (data.rows[i][best->feature] < best->threshold)
            left_rows.push_back(i);
        else
            right_rows.push_back(i);
    }
    node->feature = static_cast<int>(best->feature);
    node->threshold = best->threshold;
    node->left = grow(data, gh, left_rows, params, depth + 1);
    node->right = grow(data, gh, right_rows, params, depth + 1);
    return node;
}

double route_weight(const BoostNode& root, const std::vector<double>& x) {
    const BoostNode* node = &root;
    while (!node->is_leaf())
        node = x[static_cast<std::size_t>(node->feature)] < node->threshold ? node->left.get()
                                                                            : node->right.get();
    return node->leaf_weight;
}

}  // namespace

double BoostModel::score(const std::vector<double>& x) const {
    double raw = raw_init_;
    for (const auto& tree : trees_) raw += eta_ * route_weight(*tree, x);
    return sigmoid(raw);
}

std::unique_ptr<BoostModel> fit_boost(const Dataset& train, const BoostParams& params) {
    auto [n0, n1] = train.class_counts();
    if (n0 == 0 || n1 == 0) throw SingleClass();
    std::size_t m = train.num_rows();

    auto model = std::unique_ptr<BoostModel>(new BoostModel());
    model->base_score_ = xgb_init(train);
    model->raw_init_ = logit(model->base_score_);
    model->eta_ = params.eta;

    std::vector<double> raw(m, model->raw_init_);
    std::vector<GradHess> gh(m);
    std::vector<std::size_t> all_rows(m);
    for (std::size_t i = 0; i < m; ++i) all_rows[i] = i;

    auto mean_logloss = [&]() {
        double loss = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            double z = raw[i];
            double y = static_cast<double>(train.labels[i]);
            double softplus = z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
            loss += softplus - y * z;
        }
        return loss / static_cast<double>(m);
    };
    model->loss_trace_.push_back(mean_logloss());

    for (std::size_t round = 0; round < params.rounds; ++round) {
        for (std::size_t i = 0; i < m; ++i) {
            double p = sigmoid(raw[i]);
            gh[i].g = p - static_cast<double>(train.labels[i]);
            gh[i].h = p * (1.0 - p);
        }
        auto tree = grow(train, gh, all_rows, params, 0);
        for (std::size_t i = 0; i < m; ++i)
            raw[i] += params.eta * route_weight(*tree, train.rows[i]);
        model->trees_.push_back(std::move(tree));
        model->loss_trace_.push_back(mean_logloss());
    }
    return model;
}

}  // namespace chd

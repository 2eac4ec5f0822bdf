#include "chd/tree.hpp"

#include <algorithm>
#include <cmath>

#include "chd/errors.hpp"

namespace chd {

double gini(const std::array<std::size_t, 2>& counts) {
    std::size_t total = counts[0] + counts[1];
    if (total == 0) throw Error("gini: empty node");
    double p0 = static_cast<double>(counts[0]) / static_cast<double>(total);
    double p1 = static_cast<double>(counts[1]) / static_cast<double>(total);
    return 1.0 - (p0 * p0 + p1 * p1);
}

double entropy(const std::array<std::size_t, 2>& counts) {
    std::size_t total = counts[0] + counts[1];
    if (total == 0) throw Error("entropy: empty node");
    double s = 0.0;
    for (std::size_t c : counts) {
        if (c == 0) continue;
        double p = static_cast<double>(c) / static_cast<double>(total);
        s -= p * std::log2(p);
    }
    return s;
}

double impurity_of(Impurity kind, const std::array<std::size_t, 2>& counts) {
    return kind == Impurity::gini ? gini(counts) : entropy(counts);
}

std::optional<SplitCandidate> best_split(const Dataset& data,
                                         const std::vector<std::size_t>& rows,
                                         Impurity impurity,
                                         const std::vector<std::size_t>& feature_pool) {
    std::size_t m = rows.size();
    if (m < 2) return std::nullopt;

    std::array<std::size_t, 2> parent_counts{};
    for (std::size_t i : rows) parent_counts[data.labels[i]]++;
    if (parent_counts[0] == 0 || parent_counts[1] == 0) return std::nullopt;
    double parent_impurity = impurity_of(impurity, parent_counts);

    std::optional<SplitCandidate> best;
    std::vector<std::pair<double, ClassLabel>> column(m);
    for (std::size_t feature : feature_pool) {
        for (std::size_t k = 0; k < m; ++k)
            column[k] = {data.rows[rows[k]][feature], data.labels[rows[k]]};
        std::sort(column.begin(), column.end());

        std::array<std::size_t, 2> left{};
        for (std::size_t k = 0; k + 1 < m; ++k) {
            left[column[k].second]++;
            if (column[k].first == column[k + 1].first) continue;
            double threshold = column[k].first + 0.5 * (column[k + 1].first - column[k].first);
            std::array<std::size_t, 2> right{parent_counts[0] - left[0],
                                             parent_counts[1] - left[1]};
            double n_left = static_cast<double>(k + 1);
            double n_right = static_cast<double>(m - k - 1);
            double child = (n_left * impurity_of(impurity, left) +
                            n_right * impurity_of(impurity, right)) /
                           static_cast<double>(m);
            double gain = parent_impurity - child;
            // Strict > keeps the first candidate on ties; the pool is in
            // ascending feature order and thresholds ascend within it.
            if (gain > 0.0 && (!best || gain > best->gain))
                best = SplitCandidate{feature, threshold, gain};
        }
    }
    return best;
}

namespace {

std::unique_ptr<TreeNode> make_leaf(const Dataset& data, const std::vector<std::size_t>& rows) {
    auto node = std::make_unique<TreeNode>();
    for (std::size_t i : rows) node->class_counts[data.labels[i]]++;
    std::size_t total = rows.size();
    node->probability = static_cast<double>(node->class_counts[1]) / static_cast<double>(total);
    return node;
}

std::unique_ptr<TreeNode> grow(const Dataset& data, std::vector<std::size_t>& rows,
                               const TreeParams& params, const FeaturePoolFn& pool_fn,
                               std::size_t depth) {
    auto node = make_leaf(data, rows);
    bool pure = node->class_counts[0] == 0 || node->class_counts[1] == 0;
    if (pure || depth >= params.max_depth || rows.size() < params.min_samples_split)
        return node;

    std::vector<std::size_t> pool;
    if (pool_fn) {
        pool = pool_fn();
        std::sort(pool.begin(), pool.end());
    } else {
        pool.resize(data.num_features());
        for (std::size_t j = 0; j < pool.size(); ++j) pool[j] = j;
    }

    auto split = best_split(data, rows, params.impurity, pool);
    if (!split) return node;

    std::vector<std::size_t> left_rows, right_rows;
    for (std::size_t i : rows) {
        if (data.rows[i][split->feature] < split->threshold)
            left_rows.push_back(i);
        else
            right_rows.push_back(i);
    }
    node->feature = static_cast<int>(split->feature);
    node->threshold = split->threshold;
    node->left = grow(data, left_rows, params, pool_fn, depth + 1);
    node->right = grow(data, right_rows, params, pool_fn, depth + 1);
    return node;
}

}  // namespace

std::unique_ptr<TreeNode> fit_tree(const Dataset& train, const TreeParams& params,
                                   const FeaturePoolFn& feature_pool) {
    if (train.num_rows() == 0) throw Error("fit_tree: empty dataset");
    std::vector<std::size_t> rows(train.num_rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    return grow(train, rows, params, feature_pool, 0);
}

std::pair<double, ClassLabel> tree_predict(const TreeNode& root, const std::vector<double>& x) {
    const TreeNode* node = &root;
    while (!node->is_leaf())
        node = x[static_cast<std::size_t>(node->feature)] < node->threshold ? node->left.get()
                                                                            : node->right.get();
    return {node->probability, node->probability >= 0.5 ? 1 : 0};
}

double ForestModel::score(const std::vector<double>& x) const {
    std::size_t votes = 0;
    for (const auto& tree : trees_)
        if (tree_predict(*tree, x).second == 1) ++votes;
    return static_cast<double>(votes) / static_cast<double>(trees_.size());
}

ClassLabel ForestModel::predict(const std::vector<double>& x, double /*threshold*/) const {
    // Mode of the tree votes; an exact tie goes to class 0.
    return score(x) > 0.5 ? 1 : 0;
}

std::unique_ptr<ForestModel> fit_forest(const Dataset& train, const ForestParams& params,
                                        RngStream& rng) {
    if (train.num_rows() == 0) throw Error("fit_forest: empty dataset");
    std::size_t m = train.num_rows();
    std::size_t n = train.num_features();
    std::size_t subset = params.feature_subset_size;
    if (subset == 0) subset = static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
    subset = std::min(subset, n);

    TreeParams tree_params;
    tree_params.max_depth = params.max_depth;

    auto model = std::unique_ptr<ForestModel>(new ForestModel());
    for (std::size_t b = 0; b < params.num_trees; ++b) {
        RngStream tree_rng = rng.child("tree:" + std::to_string(b));

        Dataset sample;
        const Dataset* fit_data = &train;
        if (params.bootstrap) {
            sample.feature_names = train.feature_names;
            sample.rows.reserve(m);
            sample.labels.reserve(m);
            for (std::size_t k = 0; k < m; ++k) {
                std::size_t i = tree_rng.next_index(m);
                sample.rows.push_back(train.rows[i]);
                sample.labels.push_back(train.labels[i]);
            }
            fit_data = &sample;
        }

        FeaturePoolFn pool_fn;
        if (subset < n) {
            pool_fn = [&tree_rng, n, subset]() {
                // Partial Fisher-Yates: first `subset` entries of a shuffle.
                std::vector<std::size_t> all(n);
                for (std::size_t j = 0; j < n; ++j) all[j] = j;
                for (std::size_t j = 0; j < subset; ++j) {
                    std::size_t k = j + tree_rng.next_index(n - j);
                    std::swap(all[j], all[k]);
                }
                all.resize(subset);
                return all;
            };
        }
        model->trees_.push_back(fit_tree(*fit_data, tree_params, pool_fn));
    }
    return model;
}

}  // namespace chd

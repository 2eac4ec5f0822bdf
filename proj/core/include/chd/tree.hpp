#pragma once

#include <array>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "chd/dataset.hpp"
#include "chd/rng.hpp"

namespace chd {

enum class Impurity { gini, entropy };

// G = 1 - sum p_c^2 over the two classes.
double gini(const std::array<std::size_t, 2>& counts);

// S = -sum p_c log2 p_c, with 0 log 0 = 0.
double entropy(const std::array<std::size_t, 2>& counts);

double impurity_of(Impurity kind, const std::array<std::size_t, 2>& counts);

struct SplitCandidate {
    std::size_t feature = 0;
    double threshold = 0.0;
    double gain = 0.0;  // weighted impurity decrease
};

struct TreeNode {
    // Leaf payload; populated for every node so internal nodes can also
    // report their class distribution.
    std::array<std::size_t, 2> class_counts{};
    double probability = 0.0;  // positive fraction at the node

    // feature < 0 marks a leaf.
    int feature = -1;
    double threshold = 0.0;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;

    bool is_leaf() const { return feature < 0; }
};

struct TreeParams {
    Impurity impurity = Impurity::gini;
    std::size_t max_depth = std::numeric_limits<std::size_t>::max();
    std::size_t min_samples_split = 2;
};

// Candidate features searched at a node, ascending index order.
using FeaturePoolFn = std::function<std::vector<std::size_t>()>;

// Best (feature, midpoint-threshold) by weighted impurity decrease over
// the given rows; ties go to the lower feature index, then the lower
// threshold. Returns nullopt when no split decreases impurity.
std::optional<SplitCandidate> best_split(const Dataset& data,
                                         const std::vector<std::size_t>& rows,
                                         Impurity impurity,
                                         const std::vector<std::size_t>& feature_pool);

std::unique_ptr<TreeNode> fit_tree(const Dataset& train, const TreeParams& params,
                                   const FeaturePoolFn& feature_pool = {});

// Routes x down the tree: strictly-less goes left, ties go right.
// Returns (leaf positive fraction, class by >= 0.5).
std::pair<double, ClassLabel> tree_predict(const TreeNode& root, const std::vector<double>& x);

class TreeModel : public FittedModel {
public:
    TreeModel(std::unique_ptr<TreeNode> root) : root_(std::move(root)) {}
    double score(const std::vector<double>& x) const override {
        return tree_predict(*root_, x).first;
    }
    const TreeNode& root() const { return *root_; }

private:
    std::unique_ptr<TreeNode> root_;
};

struct ForestParams {
    std::size_t num_trees = 100;
    std::size_t max_depth = std::numeric_limits<std::size_t>::max();
    // 0 means floor(sqrt(n)).
    std::size_t feature_subset_size = 0;
    bool bootstrap = true;  // test hook; disabling trains every tree on the full data
};

class ForestModel : public FittedModel {
public:
    ForestModel() = default;
    explicit ForestModel(std::vector<std::unique_ptr<TreeNode>> trees)
        : trees_(std::move(trees)) {}

    // Fraction of trees voting class 1.
    double score(const std::vector<double>& x) const override;
    // Majority vote of the per-tree classes; exact tie goes to class 0.
    ClassLabel predict(const std::vector<double>& x, double threshold = 0.5) const override;

    const std::vector<std::unique_ptr<TreeNode>>& trees() const { return trees_; }

private:
    friend std::unique_ptr<ForestModel> fit_forest(const Dataset&, const ForestParams&,
                                                   RngStream&);
    std::vector<std::unique_ptr<TreeNode>> trees_;
};

// Bagged forest: per-tree bootstrap of size m with replacement and a
// fresh uniform feature subset at every node, each from a child stream
// derived from the forest's stream.
std::unique_ptr<ForestModel> fit_forest(const Dataset& train, const ForestParams& params,
                                        RngStream& rng);

}  // namespace chd

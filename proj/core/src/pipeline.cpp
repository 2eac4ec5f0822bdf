#include "chd/pipeline.hpp"

#include <algorithm>
#include <cmath>

#include "chd/errors.hpp"

namespace chd {

namespace {

std::size_t label_index(const RawTable& table) {
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        if (table.columns[c] == kLabelColumn) return c;
    throw CsvError("label column not present");
}

Dataset take_rows(const Dataset& src, const std::vector<std::size_t>& idx) {
    Dataset out;
    out.feature_names = src.feature_names;
    out.rows.reserve(idx.size());
    out.labels.reserve(idx.size());
    for (std::size_t i : idx) {
        out.rows.push_back(src.rows[i]);
        out.labels.push_back(src.labels[i]);
    }
    return out;
}

}  // namespace

Dataset drop_missing(const RawTable& table) {
    std::size_t label_col = label_index(table);

    Dataset out;
    for (std::size_t c = 0; c < table.columns.size(); ++c)
        if (c != label_col) out.feature_names.push_back(table.columns[c]);

    for (const auto& row : table.cells) {
        bool complete = std::all_of(row.begin(), row.end(),
                                    [](const auto& cell) { return cell.has_value(); });
        if (!complete) continue;
        std::vector<double> features;
        features.reserve(row.size() - 1);
        for (std::size_t c = 0; c < row.size(); ++c)
            if (c != label_col) features.push_back(*row[c]);
        double y = *row[label_col];
        if (y != 0.0 && y != 1.0) throw CsvError("label outside {0,1}");
        out.rows.push_back(std::move(features));
        out.labels.push_back(static_cast<ClassLabel>(y));
    }
    if (out.rows.empty()) throw Error("all rows dropped: no complete row in table");
    return out;
}

std::map<std::string, std::size_t> missing_counts(const RawTable& table) {
    std::map<std::string, std::size_t> counts;
    for (const auto& row : table.cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            if (!row[c].has_value()) counts[table.columns[c]]++;
    return counts;
}

ScalerParams fit_scaler(const Dataset& train) {
    if (train.num_rows() == 0) throw Error("fit_scaler: empty dataset");
    std::size_t n = train.num_features();
    ScalerParams params;
    params.feature_names = train.feature_names;
    params.min.assign(n, std::numeric_limits<double>::infinity());
    params.max.assign(n, -std::numeric_limits<double>::infinity());
    for (const auto& row : train.rows) {
        for (std::size_t j = 0; j < n; ++j) {
            params.min[j] = std::min(params.min[j], row[j]);
            params.max[j] = std::max(params.max[j], row[j]);
        }
    }
    return params;
}

Dataset apply_scaler(const ScalerParams& params, const Dataset& data) {
    if (params.feature_names != data.feature_names)
        throw DimensionMismatch("apply_scaler: feature names differ from fitted params");
    Dataset out = data;
    std::size_t n = data.num_features();
    for (auto& row : out.rows) {
        for (std::size_t j = 0; j < n; ++j) {
            double range = params.max[j] - params.min[j];
            double v = range == 0.0 ? 0.0 : (row[j] - params.min[j]) / range;
            row[j] = std::clamp(v, 0.0, 1.0);
        }
    }
    return out;
}

DataSplit split(const Dataset& data, double ratio, RngStream& rng) {
    std::size_t m = data.num_rows();
    if (ratio <= 0.0 || ratio >= 1.0) throw Error("split: ratio outside (0,1)");
    if (m < 2) throw Error("split: need at least 2 rows");
    std::size_t train_size = static_cast<std::size_t>(std::floor(ratio * static_cast<double>(m)));
    if (train_size == 0 || train_size == m)
        throw Error("split: degenerate partition");

    std::vector<std::size_t> perm = rng.permutation(m);
    std::vector<std::size_t> train_idx(perm.begin(), perm.begin() + train_size);
    std::vector<std::size_t> test_idx(perm.begin() + train_size, perm.end());
    return DataSplit{take_rows(data, train_idx), take_rows(data, test_idx), ratio};
}

Dataset undersample(const Dataset& train, RngStream& rng) {
    auto [n0, n1] = train.class_counts();
    if (n0 == 0 || n1 == 0) throw SingleClass();
    ClassLabel majority = n0 >= n1 ? 0 : 1;
    std::size_t keep = std::min(n0, n1);

    std::vector<std::size_t> majority_idx, result_idx;
    for (std::size_t i = 0; i < train.num_rows(); ++i)
        if (train.labels[i] == majority) majority_idx.push_back(i);

    std::vector<std::size_t> perm = rng.permutation(majority_idx.size());
    std::vector<bool> kept(train.num_rows(), false);
    for (std::size_t k = 0; k < keep; ++k) kept[majority_idx[perm[k]]] = true;

    for (std::size_t i = 0; i < train.num_rows(); ++i)
        if (train.labels[i] != majority || kept[i]) result_idx.push_back(i);
    return take_rows(train, result_idx);
}

Dataset oversample(const Dataset& train, RngStream& rng) {
    auto [n0, n1] = train.class_counts();
    if (n0 == 0 || n1 == 0) throw SingleClass();
    ClassLabel minority = n0 <= n1 ? 0 : 1;
    std::size_t deficit = (n0 <= n1 ? n1 - n0 : n0 - n1);

    std::vector<std::size_t> minority_idx;
    for (std::size_t i = 0; i < train.num_rows(); ++i)
        if (train.labels[i] == minority) minority_idx.push_back(i);

    std::vector<std::size_t> result_idx(train.num_rows());
    for (std::size_t i = 0; i < train.num_rows(); ++i) result_idx[i] = i;
    for (std::size_t k = 0; k < deficit; ++k)
        result_idx.push_back(minority_idx[rng.next_index(minority_idx.size())]);
    return take_rows(train, result_idx);
}

}  // namespace chd

#pragma once

#include <map>
#include <string>
#include <vector>

#include "chd/csv.hpp"
#include "chd/dataset.hpp"
#include "chd/rng.hpp"

namespace chd {

struct ScalerParams {
    std::vector<std::string> feature_names;
    std::vector<double> min;
    std::vector<double> max;
};

struct DataSplit {
    Dataset train;
    Dataset test;
    double ratio;
};

// Removes every row with at least one missing cell; the 15 non-label
// columns become features and TenYearCHD the label vector. Row order
// is preserved. Throws if nothing survives.
Dataset drop_missing(const RawTable& table);

// Missing-cell count per column; columns without missing cells are omitted.
std::map<std::string, std::size_t> missing_counts(const RawTable& table);

ScalerParams fit_scaler(const Dataset& train);

// x -> (x - min) / (max - min), clamped to [0,1]; constant features map
// to 0. Throws FeatureMismatch-style errors when names differ.
Dataset apply_scaler(const ScalerParams& params, const Dataset& data);

// Uniform random permutation; first floor(ratio*m) rows go to train.
DataSplit split(const Dataset& data, double ratio, RngStream& rng);

// Majority class subsampled without replacement down to the minority count.
Dataset undersample(const Dataset& train, RngStream& rng);

// Minority class resampled with replacement up to the majority count;
// every original row is retained.
Dataset oversample(const Dataset& train, RngStream& rng);

}  // namespace chd

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chd/boost.hpp"
#include "chd/knn.hpp"
#include "chd/lda.hpp"
#include "chd/logistic.hpp"
#include "chd/metrics.hpp"
#include "chd/pipeline.hpp"
#include "chd/svm.hpp"
#include "chd/tree.hpp"

namespace chd {

enum class Resample { none, under, over };

std::string to_string(Resample r);
Resample resample_from_string(const std::string& s);

inline const std::vector<std::string> kAllModels = {
    "logreg", "lda", "svm", "dtree", "rforest", "gnb", "knn", "xgboost"};

struct BenchConfig {
    std::string data_path;
    std::uint64_t seed = 42;
    double split_ratio = 0.7;
    std::vector<Resample> resamples = {Resample::under, Resample::over};
    std::vector<std::string> models = kAllModels;
    bool scale_on_full = false;
    bool resample_before_split = false;
    std::string out_dir = "out";
    std::vector<std::string> formats = {"md", "json", "csv"};

    LogisticParams logistic;
    double lda_ridge = 1e-6;
    SvmParams svm;
    TreeParams tree;
    ForestParams forest;
    std::size_t knn_k = 5;
    BoostParams boost;

    void validate() const;
};

struct CellResult {
    std::string model;
    Resample resample = Resample::none;
    bool ok = false;
    std::string error;

    ClassReport report;
    Curve roc;
    Curve pr;
    double fit_seconds = 0.0;
};

struct BenchResult {
    std::uint64_t seed = 0;
    std::size_t rows_loaded = 0;
    std::size_t rows_clean = 0;
    std::size_t missing_total = 0;
    std::map<std::string, std::size_t> missing_by_feature;
    // Class counts at key stages: full clean data, train before and
    // after resampling (per resample mode), test.
    std::map<std::string, std::pair<std::size_t, std::size_t>> class_counts;
    std::vector<CellResult> cells;

    bool all_ok() const;
};

// Runs load -> drop_missing -> split -> scale -> resample -> fit ->
// evaluate for every requested (model, resample) combination. A failure
// in one cell is recorded and does not abort the others.
BenchResult run_benchmark(const BenchConfig& cfg);

// report.md / report.json / report.csv in cfg.out_dir, per requested
// format; values rounded to 2 decimals in md, full precision in json.
void emit_report(const BenchResult& result, const BenchConfig& cfg);

// curves/<model>_<resample>_{roc,pr}.csv under cfg.out_dir.
void emit_curves(const BenchResult& result, const BenchConfig& cfg);

// Timings only; kept out of report.json so identical runs stay
// byte-identical.
void emit_run_meta(const BenchResult& result, const BenchConfig& cfg);

}  // namespace chd

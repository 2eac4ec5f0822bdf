#include "chd/bench.hpp"

#include <algorithm>
#include <chrono>

#include "chd/csv.hpp"
#include "chd/errors.hpp"
#include "chd/gnb.hpp"

namespace chd {

std::string to_string(Resample r) {
    switch (r) {
        case Resample::none: return "none";
        case Resample::under: return "under";
        case Resample::over: return "over";
    }
    return "none";
}

Resample resample_from_string(const std::string& s) {
    if (s == "none") return Resample::none;
    if (s == "under") return Resample::under;
    if (s == "over") return Resample::over;
    throw ConfigError("unknown resample mode: " + s);
}

void BenchConfig::validate() const {
    if (split_ratio <= 0.0 || split_ratio >= 1.0)
        throw ConfigError("split ratio must lie in (0,1)");
    if (models.empty()) throw ConfigError("model list must not be empty");
    if (resamples.empty()) throw ConfigError("resample list must not be empty");
    for (const auto& m : models)
        if (std::find(kAllModels.begin(), kAllModels.end(), m) == kAllModels.end())
            throw ConfigError("unknown model: " + m);
    for (const auto& f : formats)
        if (f != "md" && f != "json" && f != "csv")
            throw ConfigError("unknown format: " + f);
}

bool BenchResult::all_ok() const {
    return std::all_of(cells.begin(), cells.end(),
                       [](const CellResult& c) { return c.ok; });
}

namespace {

std::unique_ptr<FittedModel> fit_model(const std::string& name, const Dataset& train,
                                       const BenchConfig& cfg, RngStream& rng) {
    if (name == "logreg") return fit_logistic(train, cfg.logistic);
    if (name == "lda") return fit_lda(train, cfg.lda_ridge);
    if (name == "svm") return fit_svm(train, cfg.svm, rng);
    if (name == "dtree") return std::make_unique<TreeModel>(fit_tree(train, cfg.tree));
    if (name == "rforest") return fit_forest(train, cfg.forest, rng);
    if (name == "gnb") return fit_gnb(train);
    if (name == "knn") return fit_knn(train, cfg.knn_k);
    if (name == "xgboost") return fit_boost(train, cfg.boost);
    throw ConfigError("unknown model: " + name);
}

Dataset resample_train(const Dataset& train, Resample mode, RngStream& rng) {
    switch (mode) {
        case Resample::none: return train;
        case Resample::under: return undersample(train, rng);
        case Resample::over: return oversample(train, rng);
    }
    return train;
}

}  // namespace

BenchResult run_benchmark(const BenchConfig& cfg) {
    cfg.validate();

    BenchResult result;
    result.seed = cfg.seed;

    RawTable table = load_csv(cfg.data_path);
    result.rows_loaded = table.num_rows();
    result.missing_by_feature = missing_counts(table);
    for (const auto& [name, count] : result.missing_by_feature) result.missing_total += count;

    Dataset clean = drop_missing(table);
    result.rows_clean = clean.num_rows();
    result.class_counts["clean"] = clean.class_counts();

    for (Resample mode : cfg.resamples) {
        std::string mode_name = to_string(mode);
        Dataset source = clean;

        RngStream resample_rng = RngStream::derive(cfg.seed, "resample:" + mode_name);
        if (cfg.resample_before_split && mode != Resample::none)
            source = resample_train(source, mode, resample_rng);

        if (cfg.scale_on_full) {
            ScalerParams params = fit_scaler(source);
            source = apply_scaler(params, source);
        }

        RngStream split_rng = RngStream::derive(cfg.seed, "split");
        DataSplit parts = split(source, cfg.split_ratio, split_rng);

        if (!cfg.scale_on_full) {
            ScalerParams params = fit_scaler(parts.train);
            parts.train = apply_scaler(params, parts.train);
            parts.test = apply_scaler(params, parts.test);
        }

        result.class_counts["train/" + mode_name + "/before"] = parts.train.class_counts();
        if (!cfg.resample_before_split && mode != Resample::none)
            parts.train = resample_train(parts.train, mode, resample_rng);
        result.class_counts["train/" + mode_name + "/after"] = parts.train.class_counts();
        result.class_counts["test/" + mode_name] = parts.test.class_counts();

        for (const auto& model_name : cfg.models) {
            CellResult cell;
            cell.model = model_name;
            cell.resample = mode;
            try {
                RngStream model_rng =
                    RngStream::derive(cfg.seed, "model:" + model_name + ":" + mode_name);
                auto start = std::chrono::steady_clock::now();
                auto model = fit_model(model_name, parts.train, cfg, model_rng);
                cell.fit_seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();

                std::size_t m = parts.test.num_rows();
                std::vector<double> scores(m);
                std::vector<ClassLabel> preds(m);
                for (std::size_t i = 0; i < m; ++i) {
                    scores[i] = model->score(parts.test.rows[i]);
                    preds[i] = model->predict(parts.test.rows[i]);
                }
                cell.report = build_report(parts.test.labels, preds);
                cell.roc = roc_curve(parts.test.labels, scores);
                cell.pr = pr_curve(parts.test.labels, scores);
                cell.ok = true;
            } catch (const std::exception& e) {
                cell.ok = false;
                cell.error = e.what();
            }
            result.cells.push_back(std::move(cell));
        }
    }
    return result;
}

}  // namespace chd

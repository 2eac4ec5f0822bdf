#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "chd/bench.hpp"
#include "chd/errors.hpp"

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coronary-heart-disease classifier benchmark"};
    app.require_subcommand(1);

    chd::BenchConfig cfg;
    std::string models_arg = "all";
    std::string resample_arg = "under,over";
    std::string formats_arg = "md,json,csv";
    bool seed_given = false;

    CLI::App* run = app.add_subcommand("run", "run the full benchmark matrix");
    run->add_option("--data", cfg.data_path, "input CSV path")->required();
    run->add_option("--seed", cfg.seed, "random seed (fallback: CHD_BENCH_SEED)")
        ->each([&](const std::string&) { seed_given = true; });
    run->add_option("--split", cfg.split_ratio, "train fraction (default 0.7)");
    run->add_option("--resample", resample_arg,
                    "comma list of under|over|none (default under,over)");
    run->add_option("--models", models_arg,
                    "comma list of logreg,lda,svm,dtree,rforest,gnb,knn,xgboost or 'all'");
    run->add_option("--out", cfg.out_dir, "output directory (default out)");
    run->add_option("--format", formats_arg, "comma list of md,json,csv");
    run->add_flag("--scale-on-full", cfg.scale_on_full,
                  "fit the min-max scaler on the whole dataset before splitting");
    run->add_flag("--resample-before-split", cfg.resample_before_split,
                  "balance classes before the train/test split");

    run->add_option("--logreg-lr", cfg.logistic.learning_rate, "logistic learning rate");
    run->add_option("--logreg-iters", cfg.logistic.max_iters, "logistic max iterations");
    run->add_option("--svm-c", cfg.svm.c, "SVM slack penalty");
    run->add_option("--svm-epochs", cfg.svm.epochs, "SVM epochs");
    run->add_option("--forest-trees", cfg.forest.num_trees, "forest size");
    run->add_option("--knn-k", cfg.knn_k, "KNN neighbor count");
    run->add_option("--boost-rounds", cfg.boost.rounds, "boosting rounds");
    run->add_option("--boost-eta", cfg.boost.eta, "boosting shrinkage");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!seed_given) {
            if (const char* env = std::getenv("CHD_BENCH_SEED"))
                cfg.seed = std::strtoull(env, nullptr, 10);
        }
        if (models_arg == "all")
            cfg.models = chd::kAllModels;
        else
            cfg.models = split_list(models_arg);
        cfg.formats = split_list(formats_arg);
        cfg.resamples.clear();
        for (const auto& r : split_list(resample_arg))
            cfg.resamples.push_back(chd::resample_from_string(r));
        cfg.validate();

        chd::BenchResult result = chd::run_benchmark(cfg);
        chd::emit_report(result, cfg);
        chd::emit_curves(result, cfg);
        chd::emit_run_meta(result, cfg);

        for (const auto& cell : result.cells) {
            std::cout << cell.model << "/" << chd::to_string(cell.resample) << ": ";
            if (cell.ok)
                std::cout << "accuracy " << cell.report.accuracy << ", AUROC "
                          << cell.roc.area << ", PR-AUC " << cell.pr.area << "\n";
            else
                std::cout << "FAILED (" << cell.error << ")\n";
        }
        return result.all_ok() ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

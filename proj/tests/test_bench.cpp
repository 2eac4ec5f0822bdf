#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "chd/bench.hpp"
#include "chd/errors.hpp"
#include "chd/rng.hpp"

using namespace chd;
namespace fs = std::filesystem;

namespace {

// Writes a small Framingham-shaped CSV with a learnable signal.
std::string write_fixture_csv(std::size_t rows) {
    auto path = fs::temp_directory_path() / ("bench_fixture_" + std::to_string(rows) + ".csv");
    std::ofstream out(path);
    out << "male,age,education,currentSmoker,cigsPerDay,BPMeds,prevalentStroke,"
           "prevalentHyp,diabetes,totChol,sysBP,diaBP,BMI,heartRate,glucose,TenYearCHD\n";
    auto rng = RngStream::derive(1234, "fixture");
    for (std::size_t i = 0; i < rows; ++i) {
        double age = 35.0 + rng.next_double() * 35.0;
        double sysbp = 110.0 + rng.next_double() * 60.0;
        double logit = 0.12 * (age - 52.0) + 0.05 * (sysbp - 140.0);
        int label = rng.next_double() < 1.0 / (1.0 + std::exp(-logit)) ? 1 : 0;
        out << (i % 2) << "," << age << ",2,0,0,0,0,0,0,200," << sysbp
            << ",80,25,70,85," << label << "\n";
    }
    return path.string();
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("config validation") {
    BenchConfig cfg;
    cfg.split_ratio = 1.5;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.split_ratio = 0.7;
    cfg.models = {};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.models = {"not-a-model"};
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    cfg.models = {"gnb"};
    CHECK_NOTHROW(cfg.validate());
    CHECK_THROWS_AS(resample_from_string("sideways"), ConfigError);
}

TEST_CASE("benchmark matrix is complete and deterministic") {
    std::string data = write_fixture_csv(300);

    BenchConfig cfg;
    cfg.data_path = data;
    cfg.seed = 7;
    cfg.models = {"logreg", "gnb", "dtree", "knn"};
    cfg.resamples = {Resample::under, Resample::over};
    cfg.forest.num_trees = 10;
    cfg.boost.rounds = 5;

    auto result = run_benchmark(cfg);
    REQUIRE(result.cells.size() == 8);
    for (const auto& cell : result.cells) {
        CHECK(cell.ok);
        CHECK(cell.report.test_size() == 90);  // 300 - floor(0.7*300)
        CHECK(cell.roc.points.front() == std::make_pair(0.0, 0.0));
        CHECK(cell.roc.points.back() == std::make_pair(1.0, 1.0));
        CHECK(cell.roc.area >= 0.0);
        CHECK(cell.roc.area <= 1.0);
        CHECK(cell.pr.area >= 0.0);
        CHECK(cell.pr.area <= 1.0);
    }
    // Resampled train partitions are balanced.
    auto under = result.class_counts.at("train/under/after");
    CHECK(under.first == under.second);
    auto over = result.class_counts.at("train/over/after");
    CHECK(over.first == over.second);

    auto again = run_benchmark(cfg);
    for (std::size_t i = 0; i < result.cells.size(); ++i) {
        CHECK(result.cells[i].report.accuracy == again.cells[i].report.accuracy);
        CHECK(result.cells[i].roc.area == again.cells[i].roc.area);
    }
    fs::remove(data);
}

TEST_CASE("emitted outputs are byte-identical across identical runs") {
    std::string data = write_fixture_csv(200);

    BenchConfig cfg;
    cfg.data_path = data;
    cfg.seed = 99;
    cfg.models = {"gnb", "dtree"};
    cfg.resamples = {Resample::over};

    auto dir1 = fs::temp_directory_path() / "bench_out_1";
    auto dir2 = fs::temp_directory_path() / "bench_out_2";
    fs::remove_all(dir1);
    fs::remove_all(dir2);

    for (const auto& dir : {dir1, dir2}) {
        cfg.out_dir = dir.string();
        auto result = run_benchmark(cfg);
        emit_report(result, cfg);
        emit_curves(result, cfg);
    }

    CHECK(slurp(dir1 / "report.json") == slurp(dir2 / "report.json"));
    CHECK(slurp(dir1 / "report.md") == slurp(dir2 / "report.md"));
    CHECK(slurp(dir1 / "report.csv") == slurp(dir2 / "report.csv"));
    for (const char* name : {"gnb_over_roc.csv", "gnb_over_pr.csv",
                             "dtree_over_roc.csv", "dtree_over_pr.csv"}) {
        auto a = slurp(dir1 / "curves" / name);
        CHECK(!a.empty());
        CHECK(a == slurp(dir2 / "curves" / name));
    }

    // Markdown table: 5 labeled rows per model cell.
    std::string md = slurp(dir1 / "report.md");
    CHECK(md.find("| Non-CHD |") != std::string::npos);
    CHECK(md.find("| CHD |") != std::string::npos);
    CHECK(md.find("| Accuracy |") != std::string::npos);
    CHECK(md.find("| Macro Average |") != std::string::npos);
    CHECK(md.find("| Weighted Average |") != std::string::npos);

    // Curve files start with the area sidecar and the x,y header.
    std::string roc = slurp(dir1 / "curves" / "gnb_over_roc.csv");
    CHECK(roc.rfind("# area = ", 0) == 0);
    CHECK(roc.find("x,y\n0,0\n") != std::string::npos);

    fs::remove_all(dir1);
    fs::remove_all(dir2);
    fs::remove(data);
}

TEST_CASE("a failing cell is recorded without aborting the others") {
    std::string data = write_fixture_csv(120);
    BenchConfig cfg;
    cfg.data_path = data;
    cfg.models = {"knn", "gnb"};
    cfg.resamples = {Resample::none};
    cfg.knn_k = 100000;  // larger than the training partition
    auto result = run_benchmark(cfg);
    REQUIRE(result.cells.size() == 2);
    CHECK(!result.cells[0].ok);
    CHECK(!result.cells[0].error.empty());
    CHECK(result.cells[1].ok);
    CHECK(!result.all_ok());
    fs::remove(data);
}

TEST_CASE("missing data file aborts") {
    BenchConfig cfg;
    cfg.data_path = "/nonexistent/file.csv";
    CHECK_THROWS(run_benchmark(cfg));
}

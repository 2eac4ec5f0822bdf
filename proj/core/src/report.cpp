#include <cstdio>
#include <filesystem>
#include <fstream>

#include "chd/bench.hpp"
#include "chd/errors.hpp"
#include "json.hpp"

namespace chd {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

const std::array<const char*, 2> kClassNames = {"Non-CHD", "CHD"};

std::string fmt2(const MetricValue& v) {
    if (v.degenerate) return "—";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v.value);
    return buf;
}

std::string fmt2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string fmt_full(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ofstream open_out(const fs::path& path) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write output file: " + path.string());
    return out;
}

ordered_json prf_json(const PrfValues& v) {
    ordered_json j;
    j["precision"] = v.precision.value;
    j["precision_degenerate"] = v.precision.degenerate;
    j["recall"] = v.recall.value;
    j["recall_degenerate"] = v.recall.degenerate;
    j["f1"] = v.f1.value;
    j["f1_degenerate"] = v.f1.degenerate;
    return j;
}

void write_md(const BenchResult& result, const fs::path& path) {
    auto out = open_out(path);
    out << "# CHD benchmark report\n\n";
    out << "Seed: " << result.seed << "\n\n";
    out << "Rows loaded: " << result.rows_loaded << ", complete rows: " << result.rows_clean
        << ", missing cells: " << result.missing_total << "\n";

    for (const auto& [mode, counts] : result.class_counts)
        out << "- class counts [" << mode << "]: Non-CHD " << counts.first << ", CHD "
            << counts.second << "\n";

    for (const auto& cell : result.cells) {
        out << "\n## " << cell.model << " / " << to_string(cell.resample) << "\n\n";
        if (!cell.ok) {
            out << "FAILED: " << cell.error << "\n";
            continue;
        }
        out << "| | Precision | Recall | F1 |\n";
        out << "|---|---|---|---|\n";
        for (int c = 0; c < 2; ++c) {
            const auto& v = cell.report.per_class[c];
            out << "| " << kClassNames[c] << " | " << fmt2(v.precision) << " | "
                << fmt2(v.recall) << " | " << fmt2(v.f1) << " |\n";
        }
        out << "| Accuracy | — | — | " << fmt2(cell.report.accuracy) << " |\n";
        out << "| Macro Average | " << fmt2(cell.report.macro_avg.precision) << " | "
            << fmt2(cell.report.macro_avg.recall) << " | " << fmt2(cell.report.macro_avg.f1)
            << " |\n";
        out << "| Weighted Average | " << fmt2(cell.report.weighted_avg.precision) << " | "
            << fmt2(cell.report.weighted_avg.recall) << " | "
            << fmt2(cell.report.weighted_avg.f1) << " |\n";
        out << "\nSupport: Non-CHD " << cell.report.support[0] << ", CHD "
            << cell.report.support[1] << ". AUROC " << fmt2(cell.roc.area) << ", PR-AUC "
            << fmt2(cell.pr.area) << ".\n";
    }
}

void write_json(const BenchResult& result, const fs::path& path) {
    ordered_json root;
    root["seed"] = result.seed;
    root["rows_loaded"] = result.rows_loaded;
    root["rows_clean"] = result.rows_clean;
    root["missing_total"] = result.missing_total;
    root["missing_by_feature"] = result.missing_by_feature;

    ordered_json counts;
    for (const auto& [key, value] : result.class_counts)
        counts[key] = {{"non_chd", value.first}, {"chd", value.second}};
    root["class_counts"] = counts;

    ordered_json cells = ordered_json::array();
    for (const auto& cell : result.cells) {
        ordered_json j;
        j["model"] = cell.model;
        j["resample"] = to_string(cell.resample);
        j["ok"] = cell.ok;
        if (!cell.ok) {
            j["error"] = cell.error;
        } else {
            ordered_json report;
            for (int c = 0; c < 2; ++c) {
                ordered_json row = prf_json(cell.report.per_class[c]);
                row["support"] = cell.report.support[c];
                report[kClassNames[c]] = row;
            }
            report["accuracy"] = cell.report.accuracy;
            report["macro_avg"] = prf_json(cell.report.macro_avg);
            report["weighted_avg"] = prf_json(cell.report.weighted_avg);
            j["report"] = report;
            j["auroc"] = cell.roc.area;
            j["pr_auc"] = cell.pr.area;
        }
        cells.push_back(std::move(j));
    }
    root["cells"] = std::move(cells);

    auto out = open_out(path);
    out << root.dump(2) << "\n";
}

void write_csv(const BenchResult& result, const fs::path& path) {
    auto out = open_out(path);
    out << "model,resample,class,precision,recall,f1,support\n";
    auto cell_value = [](const MetricValue& v) {
        return v.degenerate ? std::string() : fmt_full(v.value);
    };
    for (const auto& cell : result.cells) {
        if (!cell.ok) continue;
        std::string prefix = cell.model + "," + to_string(cell.resample) + ",";
        for (int c = 0; c < 2; ++c) {
            const auto& v = cell.report.per_class[c];
            out << prefix << kClassNames[c] << "," << cell_value(v.precision) << ","
                << cell_value(v.recall) << "," << cell_value(v.f1) << ","
                << cell.report.support[c] << "\n";
        }
        out << prefix << "accuracy,,," << fmt_full(cell.report.accuracy) << ","
            << cell.report.test_size() << "\n";
        out << prefix << "macro avg," << cell_value(cell.report.macro_avg.precision) << ","
            << cell_value(cell.report.macro_avg.recall) << ","
            << cell_value(cell.report.macro_avg.f1) << "," << cell.report.test_size() << "\n";
        out << prefix << "weighted avg," << cell_value(cell.report.weighted_avg.precision)
            << "," << cell_value(cell.report.weighted_avg.recall) << ","
            << cell_value(cell.report.weighted_avg.f1) << "," << cell.report.test_size()
            << "\n";
    }
}

void write_curve(const Curve& curve, const fs::path& path) {
    auto out = open_out(path);
    out << "# area = " << fmt_full(curve.area) << "\n";
    out << "x,y\n";
    for (const auto& [x, y] : curve.points)
        out << fmt_full(x) << "," << fmt_full(y) << "\n";
}

}  // namespace

void emit_report(const BenchResult& result, const BenchConfig& cfg) {
    fs::path dir(cfg.out_dir);
    for (const auto& format : cfg.formats) {
        if (format == "md") write_md(result, dir / "report.md");
        if (format == "json") write_json(result, dir / "report.json");
        if (format == "csv") write_csv(result, dir / "report.csv");
    }
}

void emit_curves(const BenchResult& result, const BenchConfig& cfg) {
    fs::path dir = fs::path(cfg.out_dir) / "curves";
    for (const auto& cell : result.cells) {
        if (!cell.ok) continue;
        std::string stem = cell.model + "_" + to_string(cell.resample);
        write_curve(cell.roc, dir / (stem + "_roc.csv"));
        write_curve(cell.pr, dir / (stem + "_pr.csv"));
    }
}

void emit_run_meta(const BenchResult& result, const BenchConfig& cfg) {
    ordered_json meta;
    meta["seed"] = result.seed;
    ordered_json timings;
    for (const auto& cell : result.cells)
        if (cell.ok)
            timings[cell.model + "/" + to_string(cell.resample)] = cell.fit_seconds;
    meta["fit_seconds"] = timings;
    auto out = open_out(fs::path(cfg.out_dir) / "run_meta.json");
    out << meta.dump(2) << "\n";
}

}  // namespace chd

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace chd {

inline constexpr std::array<const char*, 16> kFraminghamColumns = {
    "male", "age", "education", "currentSmoker", "cigsPerDay",
    "BPMeds", "prevalentStroke", "prevalentHyp", "diabetes", "totChol",
    "sysBP", "diaBP", "BMI", "heartRate", "glucose", "TenYearCHD"};

// Parsed CSV with cells either a real value or missing (nullopt).
// Columns are stored in the canonical kFraminghamColumns order
// regardless of their order in the file.
struct RawTable {
    std::vector<std::string> columns;                         // 16 names
    std::vector<std::vector<std::optional<double>>> cells;    // rows x 16

    std::size_t num_rows() const { return cells.size(); }
};

// Reads an RFC-4180 CSV with a header row. Empty cells and "NA" become
// missing. Throws CsvError for an empty file, a missing expected column,
// or an unparseable cell.
RawTable load_csv(const std::string& path);

}  // namespace chd

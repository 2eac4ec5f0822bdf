#include "chd/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "chd/errors.hpp"

namespace chd {

namespace {

// Splits one RFC-4180 record. Handles quoted fields with embedded
// commas and doubled quotes; this data never contains embedded newlines.
std::vector<std::string> split_record(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

RawTable load_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CsvError("cannot open file: " + path);

    std::string header;
    if (!std::getline(in, header) || trim(header).empty())
        throw CsvError("empty file: " + path);

    std::vector<std::string> names = split_record(header);
    for (auto& n : names) n = trim(n);

    // Map each expected column to its position in the file.
    std::vector<std::size_t> pos(kFraminghamColumns.size());
    for (std::size_t c = 0; c < kFraminghamColumns.size(); ++c) {
        bool found = false;
        for (std::size_t j = 0; j < names.size(); ++j) {
            if (names[j] == kFraminghamColumns[c]) {
                pos[c] = j;
                found = true;
                break;
            }
        }
        if (!found)
            throw CsvError(std::string("missing column: ") + kFraminghamColumns[c]);
    }

    RawTable table;
    table.columns.assign(kFraminghamColumns.begin(), kFraminghamColumns.end());

    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) continue;
        std::vector<std::string> fields = split_record(line);
        std::vector<std::optional<double>> out(kFraminghamColumns.size());
        for (std::size_t c = 0; c < kFraminghamColumns.size(); ++c) {
            if (pos[c] >= fields.size()) {
                out[c] = std::nullopt;
                continue;
            }
            std::string cell = trim(fields[pos[c]]);
            if (cell.empty() || cell == "NA") {
                out[c] = std::nullopt;
                continue;
            }
            double value{};
            auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
            if (ec != std::errc{} || p != cell.data() + cell.size()) {
                std::ostringstream msg;
                msg << "unparseable cell at row " << row + 1 << ", column "
                    << kFraminghamColumns[c] << ": '" << cell << "'";
                throw CsvError(msg.str());
            }
            out[c] = value;
        }
        table.cells.push_back(std::move(out));
        ++row;
    }
    return table;
}

}  // namespace chd

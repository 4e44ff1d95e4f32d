#ifndef OMIT_CSV_HPP
#define OMIT_CSV_HPP

#include <string>
#include <vector>

namespace omit {

// Numeric table with named columns.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// Shortest-round-trip decimal form (17 significant digits).
std::string format_double(double v);

// RFC-4180-style serialization: quoted fields where needed, LF line endings,
// one header row. Writes to <path>.tmp and renames on success so an error
// never leaves a partial file behind. Throws IoError.
void write_csv(const std::string& path, const CsvTable& table);

// Writes pre-serialized text (the JSON sidecar) with the same tmp+rename
// discipline.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace omit

#endif  // OMIT_CSV_HPP

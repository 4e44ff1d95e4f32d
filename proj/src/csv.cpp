#include "omit/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include "omit/errors.hpp"

namespace omit {

namespace {

std::string quote_if_needed(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char ch : field) {
        quoted += ch;
        if (ch == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

void atomic_write(const std::string& path, const std::string& payload) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open for writing: " + tmp.string());
        out << payload;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write failed: " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
        throw IoError("cannot rename " + tmp.string() + " -> " + target.string() +
                      ": " + ec.message());
    }
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(const std::string& path, const CsvTable& table) {
    std::string payload;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) payload += ',';
        payload += quote_if_needed(table.header[i]);
    }
    payload += '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size())
            throw IoError("csv row width does not match header");
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) payload += ',';
            payload += format_double(row[i]);
        }
        payload += '\n';
    }
    atomic_write(path, payload);
}

void write_text_file(const std::string& path, const std::string& text) {
    atomic_write(path, text);
}

}  // namespace omit

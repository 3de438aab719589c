#include "pgs2s/csv.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pgs2s/errors.hpp"

namespace pgs2s {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) --e;
    return s.substr(b, e - b);
}

double parse_cell(const std::string& raw, std::size_t row, const std::string& col) {
    const std::string cell = strip(raw);
    if (cell.empty())
        throw GapError("missing value at data row " + std::to_string(row) + ", column '" + col +
                       "'");
    double v = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ParseError("non-numeric cell '" + cell + "' at data row " + std::to_string(row) +
                         ", column '" + col + "'");
    return v;
}

}  // namespace

TimeSeries load_csv(const std::string& path, const std::string& target_column,
                    const std::vector<std::string>& exogenous_columns) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open CSV file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw SchemaError("empty CSV file: " + path);
    const auto header = split_fields(line);
    std::vector<std::string> wanted = {target_column};
    wanted.insert(wanted.end(), exogenous_columns.begin(), exogenous_columns.end());

    std::vector<std::size_t> col_idx;
    for (const auto& name : wanted) {
        std::size_t found = header.size();
        for (std::size_t i = 0; i < header.size(); ++i)
            if (strip(header[i]) == name) {
                found = i;
                break;
            }
        if (found == header.size())
            throw SchemaError("column '" + name + "' not found in " + path);
        col_idx.push_back(found);
    }

    std::vector<std::vector<double>> cols(wanted.size());
    std::size_t row = 1;  // 1-based data row numbers in messages
    while (std::getline(in, line)) {
        if (strip(line).empty()) break;  // trailing blank line
        const auto fields = split_fields(line);
        for (std::size_t i = 0; i < wanted.size(); ++i) {
            if (col_idx[i] >= fields.size())
                throw GapError("missing value at data row " + std::to_string(row) + ", column '" +
                               wanted[i] + "'");
            cols[i].push_back(parse_cell(fields[col_idx[i]], row, wanted[i]));
        }
        ++row;
    }
    if (cols[0].empty()) throw SchemaError("CSV file has no data rows: " + path);

    TimeSeries ts;
    ts.name = path;
    ts.frequency = "file";
    ts.channel_names = wanted;
    ts.target_channel = 0;
    ts.values.resize(cols[0].size(), wanted.size());
    for (std::size_t r = 0; r < cols[0].size(); ++r)
        for (std::size_t c = 0; c < wanted.size(); ++c) ts.values(r, c) = cols[c][r];
    ts.validate();
    return ts;
}

void write_csv(const TimeSeries& series, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path);
    out << "t,y\n";
    char buf[64];
    for (std::size_t r = 0; r < series.length(); ++r) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g\n", r, series.values(r, series.target_channel));
        out << buf;
    }
    if (!out) throw Error("write failed: " + path);
}

}  // namespace pgs2s

// output.hpp -- machine-readable row format shared by the CLI subcommands.
// CSV and JSON both render numbers with 17 significant digits, '.' decimal
// separator, no locale.

#pragma once

#include <cstdio>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace erlangmax::output {

struct OutputRow {
    double beta = 0.0;
    double omega = 0.0;
    int k = 0;
    double rho = 0.0;
    double exact = 0.0;
    double asym = 0.0;
    std::optional<double> mc_mean;
    std::optional<double> mc_stderr;
    double sampling_error = 0.0;  // 1/(2 beta) - exact
    double d_k = 0.0;
};

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline const char* csv_header() {
    return "beta,omega,k,rho,exact,asym,mc_mean,mc_stderr,sampling_error,D_k";
}

inline std::string to_csv(const OutputRow& r) {
    std::string line;
    line += fmt17(r.beta);
    line += ',';
    line += fmt17(r.omega);
    line += ',';
    line += std::to_string(r.k);
    line += ',';
    line += fmt17(r.rho);
    line += ',';
    line += fmt17(r.exact);
    line += ',';
    line += fmt17(r.asym);
    line += ',';
    if (r.mc_mean) line += fmt17(*r.mc_mean);
    line += ',';
    if (r.mc_stderr) line += fmt17(*r.mc_stderr);
    line += ',';
    line += fmt17(r.sampling_error);
    line += ',';
    line += fmt17(r.d_k);
    return line;
}

inline std::string to_json(const OutputRow& r) {
    std::string o = "{";
    o += "\"beta\":" + fmt17(r.beta);
    o += ",\"omega\":" + fmt17(r.omega);
    o += ",\"k\":" + std::to_string(r.k);
    o += ",\"rho\":" + fmt17(r.rho);
    o += ",\"exact\":" + fmt17(r.exact);
    o += ",\"asym\":" + fmt17(r.asym);
    if (r.mc_mean) o += ",\"mc_mean\":" + fmt17(*r.mc_mean);
    if (r.mc_stderr) o += ",\"mc_stderr\":" + fmt17(*r.mc_stderr);
    o += ",\"sampling_error\":" + fmt17(r.sampling_error);
    o += ",\"D_k\":" + fmt17(r.d_k);
    o += "}";
    return o;
}

inline std::string render_csv(const std::vector<OutputRow>& rows) {
    std::string out = csv_header();
    out += '\n';
    for (const auto& r : rows) {
        out += to_csv(r);
        out += '\n';
    }
    return out;
}

inline std::string render_json(const std::vector<OutputRow>& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ",";
        out += "\n  " + to_json(rows[i]);
    }
    out += rows.empty() ? "]" : "\n]";
    out += '\n';
    return out;
}

// Parses CSV emitted by render_csv; used by the round-trip contract.
inline std::vector<OutputRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != csv_header())
        throw std::runtime_error("parse_csv: missing or unexpected header");
    std::vector<OutputRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.push_back("");
        if (cells.size() != 10) throw std::runtime_error("parse_csv: expected 10 cells");
        OutputRow r;
        r.beta = std::stod(cells[0]);
        r.omega = std::stod(cells[1]);
        r.k = std::stoi(cells[2]);
        r.rho = std::stod(cells[3]);
        r.exact = std::stod(cells[4]);
        r.asym = std::stod(cells[5]);
        if (!cells[6].empty()) r.mc_mean = std::stod(cells[6]);
        if (!cells[7].empty()) r.mc_stderr = std::stod(cells[7]);
        r.sampling_error = std::stod(cells[8]);
        r.d_k = std::stod(cells[9]);
        rows.push_back(r);
    }
    return rows;
}

}  // namespace erlangmax::output

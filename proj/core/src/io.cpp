#include "fracwave/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fracwave::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write_text(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string());
        out << text;
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

void write_field_csv(const std::string& path, const Field& field) {
    std::ostringstream out;
    const char* headers[3] = {"i", "j", "k"};
    for (int a = 0; a < field.grid.dim; ++a) out << headers[a] << ',';
    out << "re,im\n";
    for (std::size_t flat = 0; flat < field.values.size(); ++flat) {
        auto idx = field.grid.unflatten(flat);
        for (int a = 0; a < field.grid.dim; ++a) out << idx[a] << ',';
        out << format_double(field.values[flat].real()) << ','
            << format_double(field.values[flat].imag()) << '\n';
    }
    atomic_write_text(path, out.str());
}

Field read_field_csv(const std::string& path, const TorusGrid& grid) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error("empty CSV: " + path);
    Field field(grid);
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::array<int, 3> idx{0, 0, 0};
        for (int a = 0; a < grid.dim; ++a) {
            std::getline(row, cell, ',');
            idx[a] = std::stoi(cell);
        }
        std::getline(row, cell, ',');
        double re = std::stod(cell);
        std::getline(row, cell, ',');
        double im = std::stod(cell);
        field.values[grid.flatten(idx)] = cdouble(re, im);
        ++rows;
    }
    if (rows != grid.size())
        throw std::runtime_error("CSV row count does not match grid: " + path);
    return field;
}

std::string manifest_json(const TorusGrid& grid, const std::string& data_path,
                          const std::string& extra_json_object) {
    nlohmann::json j;
    j["grid"] = {{"dim", grid.dim},
                 {"n", grid.n},
                 {"box_length", grid.box_length}};
    j["data_file"] = data_path;
    if (!extra_json_object.empty()) {
        nlohmann::json extra = nlohmann::json::parse(extra_json_object);
        for (auto& [key, value] : extra.items()) j[key] = value;
    }
    return j.dump(2) + "\n";
}

} // namespace fracwave::io

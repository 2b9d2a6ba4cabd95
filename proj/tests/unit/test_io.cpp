#include <doctest.h>

#include "fracwave/io.hpp"
#include "fracwave/rng.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace fracwave;

namespace {

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("format_double is 17-significant-digit round-trippable") {
    for (double v : {1.0 / 3.0, 1e-300, -2.718281828459045, 0.0, 1e17}) {
        std::string s = io::format_double(v);
        CHECK(std::stod(s) == v);
        CHECK(s.find(',') == std::string::npos);
    }
}

TEST_CASE("field CSV round trip is bit exact") {
    TorusGrid g(2, 8, 3.0);
    Field f(g);
    Rng rng(404);
    for (auto& v : f.values)
        v = cdouble(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));

    std::string path = temp_path("fracwave_io_test.csv");
    io::write_field_csv(path, f);
    Field back = io::read_field_csv(path, g);
    for (std::size_t i = 0; i < f.values.size(); ++i)
        CHECK(back.values[i] == f.values[i]);
    std::filesystem::remove(path);
}

TEST_CASE("CSV header names the index columns") {
    TorusGrid g(3, 2, 1.0);
    Field f(g);
    std::string path = temp_path("fracwave_io_header.csv");
    io::write_field_csv(path, f);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "i,j,k,re,im");
    std::filesystem::remove(path);
}

TEST_CASE("manifest embeds grid metadata and extras") {
    TorusGrid g(1, 16, 2.5);
    std::string j = io::manifest_json(g, "solution.csv",
                                      R"({"backend":"bessel","sigma":0.4})");
    CHECK(j.find("\"n\": 16") != std::string::npos);
    CHECK(j.find("solution.csv") != std::string::npos);
    CHECK(j.find("bessel") != std::string::npos);
}

TEST_CASE("atomic write leaves no temp file behind") {
    std::string path = temp_path("fracwave_io_atomic.txt");
    io::atomic_write_text(path, "hello\n");
    CHECK(std::filesystem::exists(path));
    CHECK(!std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove(path);
}

TEST_CASE("reading a mismatched grid fails") {
    TorusGrid g(1, 8, 1.0);
    Field f(g);
    std::string path = temp_path("fracwave_io_mismatch.csv");
    io::write_field_csv(path, f);
    TorusGrid bigger(1, 16, 1.0);
    CHECK_THROWS(io::read_field_csv(path, bigger));
    std::filesystem::remove(path);
}

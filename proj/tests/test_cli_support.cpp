#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "../tools/svg.hpp"
#include "aztec/csv.hpp"

using namespace aztec;

TEST_CASE("csv: header, comments and round-trip precision") {
    CsvTable t({"alpha", "value"});
    t.comment("n=8");
    t.row({-0.5, 0.1});
    t.row({1.0 / 3.0, -2e-17});
    CHECK_THROWS_AS(t.row({1.0}), ConfigError);
    std::ostringstream os;
    t.write(os);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "# n=8");
    std::getline(is, line);
    CHECK(line == "alpha,value");
    std::getline(is, line);
    std::getline(is, line);
    const auto comma = line.find(',');
    CHECK(std::stod(line.substr(0, comma)) == 1.0 / 3.0);
    CHECK(std::stod(line.substr(comma + 1)) == -2e-17);
    CHECK_THROWS_AS(t.save("/nonexistent-dir/x.csv"), IoError);
}

TEST_CASE("svg: plot and tiling writers") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto p1 = (dir / "aztec_test_plot.svg").string(), p2 = (dir / "aztec_test_tiling.svg").string();
    CHECK(svg::plot(p1, "t", "x", {{"s", {0, 1, 2}, {1, 0.5, 2}, false}}));
    const Graph g(4);
    CHECK(svg::tiling(p2, g, initial_tiling(g, 0.5)));
    std::ifstream f(p2);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(ss.str().find("<svg") != std::string::npos);
    CHECK(!svg::plot("/nonexistent-dir/p.svg", "t", "x", {}));
}

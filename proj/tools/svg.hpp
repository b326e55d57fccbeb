#pragma once
#include <string>
#include <vector>

#include "aztec/sampler.hpp"

namespace aztec::svg {

struct Series {
    std::string name;
    std::vector<double> x, y;
    bool markers = false;  // scatter with dashed joins instead of a solid line
};

// Static SVG 1.1 line/scatter plot. Returns false (and says why on stderr) instead of throwing.
bool plot(const std::string& path, const std::string& title, const std::string& xlabel, const std::vector<Series>& s);

// Dominoes coloured by the four matching directions.
bool tiling(const std::string& path, const Graph& g, const TilingState& t);

}  // namespace aztec::svg

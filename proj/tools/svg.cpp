#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>

namespace aztec::svg {

namespace {

const char* kColours[] = {"#1f3b73", "#e07b1a", "#2a9d4a", "#b23a48", "#6a4c93", "#1b998b"};

std::string esc(const std::string& s) {
    std::string o;
    for (char c : s) {
        if (c == '<') o += "&lt;";
        else if (c == '>') o += "&gt;";
        else if (c == '&') o += "&amp;";
        else o += c;
    }
    return o;
}

}  // namespace

bool plot(const std::string& path, const std::string& title, const std::string& xlabel, const std::vector<Series>& ss) {
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& s : ss)
        for (size_t i = 0; i < s.x.size(); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            x0 = std::min(x0, s.x[i]);
            x1 = std::max(x1, s.x[i]);
            y0 = std::min(y0, s.y[i]);
            y1 = std::max(y1, s.y[i]);
        }
    if (!(x1 > x0)) {
        std::cerr << "svg: nothing to plot for " << path << "\n";
        return false;
    }
    if (!(y1 > y0)) y1 = y0 + 1;
    const double W = 640, H = 420, L = 70, R = 20, T = 40, Bm = 50;
    auto X = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
    auto Y = [&](double y) { return H - Bm - (y - y0) / (y1 - y0) * (H - T - Bm); };
    std::ofstream f(path);
    if (!f) {
        std::cerr << "svg: cannot write " << path << "\n";
        return false;
    }
    f << "<?xml version=\"1.0\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << W
      << "\" height=\"" << H << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    f << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    f << "<text x=\"" << W / 2 << "\" y=\"22\" text-anchor=\"middle\">" << esc(title) << "</text>\n";
    f << "<text x=\"" << W / 2 << "\" y=\"" << H - 12 << "\" text-anchor=\"middle\">" << esc(xlabel) << "</text>\n";
    f << "<rect x=\"" << L << "\" y=\"" << T << "\" width=\"" << W - L - R << "\" height=\"" << H - T - Bm
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = x0 + (x1 - x0) * k / 4, yv = y0 + (y1 - y0) * k / 4;
        f << "<text x=\"" << X(xv) << "\" y=\"" << H - Bm + 16 << "\" text-anchor=\"middle\">" << xv << "</text>\n";
        f << "<text x=\"" << L - 6 << "\" y=\"" << Y(yv) + 4 << "\" text-anchor=\"end\">" << yv << "</text>\n";
    }
    if (y0 < 0 && y1 > 0)
        f << "<line x1=\"" << L << "\" x2=\"" << W - R << "\" y1=\"" << Y(0) << "\" y2=\"" << Y(0)
          << "\" stroke=\"#aaa\"/>\n";
    for (size_t k = 0; k < ss.size(); ++k) {
        const auto& s = ss[k];
        const char* col = kColours[k % 6];
        f << "<polyline fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\""
          << (s.markers ? " stroke-dasharray=\"4 3\"" : "") << " points=\"";
        for (size_t i = 0; i < s.x.size(); ++i)
            if (std::isfinite(s.y[i])) f << X(s.x[i]) << ',' << Y(s.y[i]) << ' ';
        f << "\"/>\n";
        if (s.markers)
            for (size_t i = 0; i < s.x.size(); ++i)
                if (std::isfinite(s.y[i]))
                    f << "<circle cx=\"" << X(s.x[i]) << "\" cy=\"" << Y(s.y[i]) << "\" r=\"2.5\" fill=\"" << col
                      << "\"/>\n";
        f << "<text x=\"" << W - R - 8 << "\" y=\"" << T + 16 + 16 * k << "\" text-anchor=\"end\" fill=\"" << col
          << "\">" << esc(s.name) << "</text>\n";
    }
    f << "</svg>\n";
    return bool(f);
}

bool tiling(const std::string& path, const Graph& g, const TilingState& t) {
    std::ofstream f(path);
    if (!f) {
        std::cerr << "svg: cannot write " << path << "\n";
        return false;
    }
    const int n = g.n();
    const double S = std::max(2.0, 800.0 / (2 * n + 2));
    const char* fill[4] = {"#d1495b", "#edae49", "#00798c", "#30638e"};
    f << "<?xml version=\"1.0\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << S * (2 * n + 2) << "\" height=\"" << S * (2 * n + 2) << "\">\n";
    f << "<g transform=\"translate(" << S << ',' << S * (2 * n + 1) << ") scale(" << S << ',' << -S << ")\">\n";
    // each dimer is a domino: the union of the two unit diamonds centred on its endpoints
    for (int i = 0; i < g.size(); ++i) {
        const Point w = g.white()[i], b = w + kStep[t.dir[i]];
        const double cx = (w.x1 + b.x1) / 2.0, cy = (w.x2 + b.x2) / 2.0;
        const double dx = (b.x1 - w.x1) / 2.0, dy = (b.x2 - w.x2) / 2.0;
        // long half-axis b - w, short half-axis perpendicular with half that length
        f << "<polygon fill=\"" << fill[t.dir[i]] << "\" points=\"";
        for (auto [s1, s2] : {std::pair{1, 1}, {1, -1}, {-1, -1}, {-1, 1}})
            f << cx + 2 * s1 * dx - s2 * dy << ',' << cy + 2 * s1 * dy + s2 * dx << ' ';
        f << "\"/>\n";
    }
    f << "</g>\n</svg>\n";
    return bool(f);
}

}  // namespace aztec::svg

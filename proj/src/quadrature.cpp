#include "aztec/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <map>
#include <mutex>

#include "aztec/common.hpp"

namespace aztec {

namespace {

template <unsigned N>
GaussRule make() {
    using R = boost::math::quadrature::gauss<double, N>;
    GaussRule g;
    const auto& a = R::abscissa();
    const auto& w = R::weights();
    for (size_t i = 0; i < a.size(); ++i) {
        g.x.push_back(a[i]);
        g.w.push_back(w[i]);
        if (a[i] != 0) {
            g.x.push_back(-a[i]);
            g.w.push_back(w[i]);
        }
    }
    return g;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
    static const std::map<int, GaussRule> rules = {
        {6, make<6>()},   {8, make<8>()},   {12, make<12>()}, {16, make<16>()}, {20, make<20>()},
        {24, make<24>()}, {30, make<30>()}, {32, make<32>()}, {40, make<40>()},
    };
    auto it = rules.find(order);
    if (it == rules.end()) throw ConfigError("unsupported Gauss-Legendre order " + std::to_string(order));
    return it->second;
}

}  // namespace aztec

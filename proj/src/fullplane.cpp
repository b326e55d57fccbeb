#include <algorithm>
#include <cmath>

#include "aztec/exact.hpp"

namespace aztec {

FullPlaneOffset fundamental_offset(Point x, Point y) {
    if (!is_white(x.x1, x.x2) || !is_black(y.x1, y.x2)) throw DomainError("fundamental_offset: need white x, black y");
    const int e1 = eps_of(x), e2 = eps_of(y);
    const Point w0 = e1 == 0 ? x : x - Point{0, 2};
    const Point b = e2 == 1 ? w0 + E1 : w0 + E2;
    const Point d = y - b;
    if ((d.x1 + d.x2) % 4 != 0 || (d.x2 - d.x1) % 4 != 0) throw DomainError("fundamental_offset: not a period translate");
    return {e1, e2, (d.x1 + d.x2) / 4, (d.x2 - d.x1) / 4};
}

// P_a(z,w) = -a z^{-1} (z^2 + beta z + 1) with beta = (2 + 2a^2)/a + w + 1/w, so
// the z-integral is a residue at the root inside the unit circle:
// (1/2 pi i) \oint z^p dz / (z^2 + beta z + 1) = z_in^{|p|} / sqrt(beta^2 - 4).
cplx kinv_full_plane(int e1, int e2, int u, int v, double a, int nodes) {
    if (!(a > 0 && a < 1)) throw DomainError("kinv_full_plane: need 0 < a < 1");
    const int N = nodes > 0 ? nodes : std::max(256, static_cast<int>(std::ceil(40.0 / (1 - a))));
    cplx acc = 0;
    for (int i = 0; i < N; ++i) {
        const double th = 2 * PI * (i + 0.5) / N;
        const cplx w = std::polar(1.0, th);
        const double beta = (2 + 2 * a * a) / a + 2 * std::cos(th);
        const double d = std::sqrt(beta * beta - 4);
        const double zin = (-beta + d) / 2;
        auto J = [&](int p) { return std::pow(zin, std::abs(p)) / d; };
        cplx f;
        if (e1 == 0 && e2 == 0)
            f = -(I * (a + w) / a) * J(u);
        else if (e1 == 0)
            f = (a * J(u) + J(u + 1)) / a;
        else if (e2 == 0)
            f = (a * J(u) + J(u - 1)) / a;
        else
            f = -(I * (a + 1.0 / w) / a) * J(u);
        acc += std::polar(1.0, v * th) * f;
    }
    return acc / double(N);
}

cplx kinv_full_plane_2d(int e1, int e2, int u, int v, double a, int P) {
    cplx acc = 0;
    for (int i = 0; i < P; ++i) {
        const cplx z = std::polar(1.0, 2 * PI * (i + 0.5) / P);
        for (int k = 0; k < P; ++k) {
            const cplx w = std::polar(1.0, 2 * PI * (k + 0.5) / P);
            const cplx Pa = -2 - 2 * a * a - a / w - a * w - a / z - a * z;
            cplx e;
            if (e1 == 0 && e2 == 0)
                e = I * (a + w);
            else if (e1 == 0)
                e = -(a + z);
            else if (e2 == 0)
                e = -(a + 1.0 / z);
            else
                e = I * (a + 1.0 / w);
            acc += e / Pa * std::pow(z, u) * std::pow(w, v);
        }
    }
    return acc / double(P) / double(P);
}

cplx kinv_translation(Point x, Point y, double a) {
    const auto o = fundamental_offset(x, y);
    return kinv_full_plane(o.e1, o.e2, o.u, o.v, a);
}

}  // namespace aztec

#include "pplus/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace pplus {

QuadratureGrid::QuadratureGrid(GridMode mode, double u_max, int n)
    : mode_(mode), u_max_(u_max), n_(n) {
    if (u_max <= 0.0) throw std::invalid_argument("QuadratureGrid: u_max must be positive");
    if (n <= 0) throw std::invalid_argument("QuadratureGrid: n must be positive");

    auto data = std::make_shared<Data>();
    const double h = 2.0 * u_max / n;
    auto mid = [&](int i) { return -u_max + (i + 0.5) * h; };

    if (mode == GridMode::OneDReduced) {
        data->nodes.reserve(n);
        data->weights.reserve(n);
        for (int i = 0; i < n; ++i) {
            const Vec3 u(0.0, 0.0, mid(i));
            data->nodes.push_back(u);
            data->weights.push_back(h / (2.0 * std::sqrt(1.0 + u.squaredNorm())));
        }
    } else {
        const double cell = h * h * h;
        for (int ix = 0; ix < n; ++ix) {
            for (int iy = 0; iy < n; ++iy) {
                for (int iz = 0; iz < n; ++iz) {
                    const Vec3 u(mid(ix), mid(iy), mid(iz));
                    if (u.norm() > u_max) continue;
                    data->nodes.push_back(u);
                    data->weights.push_back(cell / (2.0 * std::sqrt(1.0 + u.squaredNorm())));
                }
            }
        }
    }
    data_ = std::move(data);
}

QuadratureGrid QuadratureGrid::one_d(double u_max, int n) {
    return QuadratureGrid(GridMode::OneDReduced, u_max, n);
}

QuadratureGrid QuadratureGrid::three_d(double u_max, int n) {
    return QuadratureGrid(GridMode::ThreeD, u_max, n);
}

QuadratureGrid QuadratureGrid::make(GridMode mode, double u_max, int n) {
    return QuadratureGrid(mode, u_max, n);
}

}  // namespace pplus

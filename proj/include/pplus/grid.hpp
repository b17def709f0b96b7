#ifndef PPLUS_GRID_HPP
#define PPLUS_GRID_HPP

#include <memory>
#include <vector>

#include "pplus/four_vector.hpp"

namespace pplus {

enum class GridMode { OneDReduced, ThreeD };

/// Midpoint quadrature nodes for the invariant measure d3u / (2 u0).
/// OneDReduced integrates du / (2 u0) along the u_z axis; ThreeD uses the
/// tensor-product midpoint rule clipped to the ball |u| <= u_max. The
/// 1/(2 u0) factor is folded into the weights, which are all positive.
/// Grids are immutable after construction.
class QuadratureGrid {
public:
    static QuadratureGrid one_d(double u_max, int n);
    static QuadratureGrid three_d(double u_max, int n);
    static QuadratureGrid make(GridMode mode, double u_max, int n);

    GridMode mode() const { return mode_; }
    double u_max() const { return u_max_; }
    int points_per_axis() const { return n_; }
    double spacing() const { return 2.0 * u_max_ / n_; }

    const std::vector<Vec3>& nodes() const { return data_->nodes; }
    const std::vector<double>& weights() const { return data_->weights; }
    std::size_t size() const { return data_->nodes.size(); }

    /// Same mode and cutoff with `factor` times the per-axis resolution.
    QuadratureGrid refined(int factor) const { return make(mode_, u_max_, n_ * factor); }

private:
    QuadratureGrid(GridMode mode, double u_max, int n);

    struct Data {
        std::vector<Vec3> nodes;
        std::vector<double> weights;
    };

    GridMode mode_;
    double u_max_;
    int n_;
    std::shared_ptr<const Data> data_;
};

}  // namespace pplus

#endif

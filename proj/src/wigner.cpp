#include "pplus/wigner.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace pplus {

WignerRotation wigner_rotation(const LorentzTransform& lam, const Vec3& uvec) {
    const Vec3 upvec = lam.apply_velocity(uvec);
    SpinorMap w = boost_lift(-upvec) * lam.spinor_lift() * boost_lift(uvec);
    return WignerRotation{LorentzTransform::from_spinor(w), w};
}

WignerDMatrix::WignerDMatrix(int two_j, Eigen::MatrixXcd d) : two_j_(two_j), d_(std::move(d)) {
    if (two_j_ < 0) throw std::invalid_argument("WignerDMatrix: negative spin");
    if (d_.rows() != dim() || d_.cols() != dim()) {
        throw std::invalid_argument("WignerDMatrix: dimension mismatch");
    }
    if (!is_unitary()) throw std::invalid_argument("WignerDMatrix: matrix is not unitary");
}

int WignerDMatrix::row_of(int two_m) const {
    if (std::abs(two_m) > two_j_ || (two_m - two_j_) % 2 != 0) {
        throw std::out_of_range("WignerDMatrix: invalid magnetic label");
    }
    return (two_j_ - two_m) / 2;
}

cplx WignerDMatrix::entry(int two_m_row, int two_m_col) const {
    return d_(row_of(two_m_row), row_of(two_m_col));
}

bool WignerDMatrix::is_unitary(double tol) const {
    return (d_.adjoint() * d_ - Eigen::MatrixXcd::Identity(dim(), dim())).cwiseAbs().maxCoeff() <= tol;
}

namespace {

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

cplx int_pow(cplx base, int e) {
    cplx r(1.0, 0.0);
    for (int k = 0; k < e; ++k) r *= base;
    return r;
}

}  // namespace

WignerDMatrix wigner_d(int two_j, const SpinorMap& w) {
    if (two_j < 0) throw std::invalid_argument("wigner_d: 2j must be a non-negative integer");
    if (!w.is_unitary()) throw std::invalid_argument("wigner_d: spinor map is not unitary");

    const cplx a = w.matrix()(0, 0);
    const cplx b = w.matrix()(0, 1);
    const cplx c = w.matrix()(1, 0);
    const cplx d = w.matrix()(1, 1);

    const int n = two_j + 1;
    Eigen::MatrixXcd out(n, n);

    // Column two_m: expand (a z1 + c z2)^(j+m) (b z1 + d z2)^(j-m) over the
    // normalized monomials z1^(j+m') z2^(j-m') / sqrt((j+m')!(j-m')!).
    for (int col = 0; col < n; ++col) {
        const int jpm = two_j - col;   // j + m
        const int jmm = col;           // j - m
        for (int row = 0; row < n; ++row) {
            const int jpmp = two_j - row;  // j + m'
            const int jmmp = row;          // j - m'
            const int k_lo = std::max(0, jpmp - jmm);
            const int k_hi = std::min(jpm, jpmp);
            cplx sum(0.0, 0.0);
            for (int k = k_lo; k <= k_hi; ++k) {
                const double log_coef =
                    log_factorial(jpm) - log_factorial(k) - log_factorial(jpm - k)
                    + log_factorial(jmm) - log_factorial(jpmp - k) - log_factorial(jmm - jpmp + k)
                    + 0.5 * (log_factorial(jpmp) + log_factorial(jmmp)
                             - log_factorial(jpm) - log_factorial(jmm));
                sum += std::exp(log_coef)
                       * int_pow(a, k) * int_pow(c, jpm - k)
                       * int_pow(b, jpmp - k) * int_pow(d, jmm - jpmp + k);
            }
            out(row, col) = sum;
        }
    }
    return WignerDMatrix(two_j, std::move(out));
}

}  // namespace pplus

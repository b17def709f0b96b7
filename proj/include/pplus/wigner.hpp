#ifndef PPLUS_WIGNER_HPP
#define PPLUS_WIGNER_HPP

#include <Eigen/Dense>

#include "pplus/lorentz.hpp"

namespace pplus {

/// Little-group element W(Lambda, u) = L(Lambda u)^-1 Lambda L(u), returned
/// both as a 4x4 rotation (reconstructed from the 2x2 map) and as the 2x2
/// double-cover element that feeds wigner_d.
struct WignerRotation {
    LorentzTransform rotation;
    SpinorMap spinor;
};

WignerRotation wigner_rotation(const LorentzTransform& lam, const Vec3& uvec);

/// (2j+1)-dimensional representation matrix. Spins are carried as doubled
/// integers (two_j = 2j); rows/columns are indexed by the magnetic label
/// two_m in {two_j, two_j - 2, ..., -two_j}, highest weight first, so that
/// the j = 1/2 matrix is the defining spinor itself.
class WignerDMatrix {
public:
    WignerDMatrix(int two_j, Eigen::MatrixXcd d);

    int two_j() const { return two_j_; }
    int dim() const { return two_j_ + 1; }

    const Eigen::MatrixXcd& matrix() const { return d_; }

    /// Entry addressed by physical labels (doubled j3 values).
    cplx entry(int two_m_row, int two_m_col) const;

    bool is_unitary(double tol = 1e-10) const;

private:
    int row_of(int two_m) const;

    int two_j_;
    Eigen::MatrixXcd d_;
};

/// D^j of a unitary double-cover element, computed by expanding the action
/// on degree-2j monomials; an exact homomorphism up to roundoff. Rejects
/// non-unitary input and negative two_j.
WignerDMatrix wigner_d(int two_j, const SpinorMap& w);

}  // namespace pplus

#endif

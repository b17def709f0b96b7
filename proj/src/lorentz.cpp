#include "pplus/lorentz.hpp"

#include <cmath>
#include <stdexcept>

namespace pplus {

namespace {

const cplx kI(0.0, 1.0);

Mat2c pauli(int k) {
    Mat2c s;
    switch (k) {
        case 0: s << 1, 0, 0, 1; break;
        case 1: s << 0, 1, 1, 0; break;
        case 2: s << 0, -kI, kI, 0; break;
        default: s << 1, 0, 0, -1; break;
    }
    return s;
}

Mat2c hermitian_of(const FourVector& a) {
    Mat2c x;
    x << cplx(a.t + a.z), cplx(a.x) - kI * a.y,
         cplx(a.x) + kI * a.y, cplx(a.t - a.z);
    return x;
}

FourVector four_vector_of(const Mat2c& x) {
    return FourVector(0.5 * std::real(x(0, 0) + x(1, 1)),
                      std::real(x(0, 1)),
                      std::imag(x(1, 0)),
                      0.5 * std::real(x(0, 0) - x(1, 1)));
}

void check_lorentz(const Mat4& lam) {
    const Mat4& eta = minkowski_metric();
    const Mat4 dev = lam.transpose() * eta * lam - eta;
    if (dev.cwiseAbs().maxCoeff() > LorentzTransform::kMetricTol) {
        throw std::invalid_argument("LorentzTransform: matrix does not preserve the Minkowski metric");
    }
    if (lam(0, 0) < 1.0 - LorentzTransform::kMetricTol) {
        throw std::invalid_argument("LorentzTransform: not orthochronous (Lambda^0_0 < 1)");
    }
    if (lam.determinant() < 0.0) {
        throw std::invalid_argument("LorentzTransform: not proper (det Lambda < 0)");
    }
}

/// Quaternion (w, v) of a 3x3 rotation matrix, Shepperd's branch selection,
/// canonical sign w >= 0 (first nonzero of v positive when w == 0).
void quaternion_of_rotation(const Eigen::Matrix3d& r, double& w, Vec3& v) {
    const double tr = r.trace();
    if (tr >= r(0, 0) && tr >= r(1, 1) && tr >= r(2, 2)) {
        double s = std::sqrt(std::max(0.0, 1.0 + tr)) * 2.0;
        w = 0.25 * s;
        v = Vec3(r(2, 1) - r(1, 2), r(0, 2) - r(2, 0), r(1, 0) - r(0, 1)) / s;
    } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
        double s = std::sqrt(std::max(0.0, 1.0 + r(0, 0) - r(1, 1) - r(2, 2))) * 2.0;
        w = (r(2, 1) - r(1, 2)) / s;
        v = Vec3(0.25 * s, (r(0, 1) + r(1, 0)) / s, (r(0, 2) + r(2, 0)) / s);
    } else if (r(1, 1) >= r(2, 2)) {
        double s = std::sqrt(std::max(0.0, 1.0 + r(1, 1) - r(0, 0) - r(2, 2))) * 2.0;
        w = (r(0, 2) - r(2, 0)) / s;
        v = Vec3((r(0, 1) + r(1, 0)) / s, 0.25 * s, (r(1, 2) + r(2, 1)) / s);
    } else {
        double s = std::sqrt(std::max(0.0, 1.0 + r(2, 2) - r(0, 0) - r(1, 1))) * 2.0;
        w = (r(1, 0) - r(0, 1)) / s;
        v = Vec3((r(0, 2) + r(2, 0)) / s, (r(1, 2) + r(2, 1)) / s, 0.25 * s);
    }
    const double norm = std::sqrt(w * w + v.squaredNorm());
    w /= norm;
    v /= norm;
    if (w < 0.0 || (w == 0.0 && (v.x() < 0.0 || (v.x() == 0.0 && (v.y() < 0.0 || (v.y() == 0.0 && v.z() < 0.0)))))) {
        w = -w;
        v = -v;
    }
}

}  // namespace

const Mat4& minkowski_metric() {
    static const Mat4 eta = [] {
        Mat4 m = Mat4::Zero();
        m(0, 0) = 1.0;
        m(1, 1) = m(2, 2) = m(3, 3) = -1.0;
        return m;
    }();
    return eta;
}

SpinorMap::SpinorMap(const Mat2c& m) : m_(m) {
    const cplx det = m_(0, 0) * m_(1, 1) - m_(0, 1) * m_(1, 0);
    if (std::abs(det - 1.0) > 1e-12) {
        throw std::invalid_argument("SpinorMap: determinant must be 1");
    }
}

SpinorMap SpinorMap::identity() { return SpinorMap(Mat2c::Identity()); }

SpinorMap SpinorMap::inverse() const {
    Mat2c adj;
    adj << m_(1, 1), -m_(0, 1), -m_(1, 0), m_(0, 0);
    return SpinorMap(adj);
}

SpinorMap SpinorMap::operator*(const SpinorMap& rhs) const {
    Mat2c prod = m_ * rhs.m_;
    // renormalize the determinant drift of long products
    const cplx det = prod(0, 0) * prod(1, 1) - prod(0, 1) * prod(1, 0);
    prod /= std::sqrt(det);
    return SpinorMap(prod);
}

bool SpinorMap::is_unitary(double tol) const {
    return (m_.adjoint() * m_ - Mat2c::Identity()).cwiseAbs().maxCoeff() <= tol;
}

FourVector SpinorMap::apply(const FourVector& a) const {
    return four_vector_of(m_ * hermitian_of(a) * m_.adjoint());
}

Mat4 SpinorMap::vector_matrix() const {
    Mat4 lam;
    for (int nu = 0; nu < 4; ++nu) {
        const Mat2c img = m_ * pauli(nu) * m_.adjoint();
        lam(0, nu) = 0.5 * std::real((img * pauli(0)).trace());
        for (int i = 1; i < 4; ++i) {
            lam(i, nu) = 0.5 * std::real((pauli(i) * img).trace());
        }
    }
    return lam;
}

LorentzTransform LorentzTransform::identity() {
    return LorentzTransform(Mat4::Identity(), SpinorMap::identity());
}

LorentzTransform LorentzTransform::boost(const Vec3& uvec) {
    const double u0 = std::sqrt(1.0 + uvec.squaredNorm());
    Mat4 lam;
    lam(0, 0) = u0;
    for (int i = 0; i < 3; ++i) {
        lam(0, i + 1) = lam(i + 1, 0) = uvec(i);
        for (int j = 0; j < 3; ++j) {
            lam(i + 1, j + 1) = (i == j ? 1.0 : 0.0) + uvec(i) * uvec(j) / (1.0 + u0);
        }
    }
    return LorentzTransform(lam, boost_lift(uvec));
}

LorentzTransform LorentzTransform::rotation(const Vec3& axis, double angle) {
    const double n = axis.norm();
    if (n == 0.0) throw std::invalid_argument("rotation: zero axis");
    const Vec3 nh = axis / n;
    const Eigen::Matrix3d r = Eigen::AngleAxisd(angle, nh).toRotationMatrix();
    Mat4 lam = Mat4::Identity();
    lam.block<3, 3>(1, 1) = r;
    return LorentzTransform(lam, rotation_lift(nh, angle));
}

LorentzTransform LorentzTransform::from_matrix(const Mat4& lambda) {
    check_lorentz(lambda);
    // polar split Lambda = B(u) R with u the image of the rest frame
    const Vec3 uvec(lambda(1, 0), lambda(2, 0), lambda(3, 0));
    const Mat4 binv = boost(-uvec).matrix();
    const Mat4 rot4 = binv * lambda;
    double w;
    Vec3 v;
    quaternion_of_rotation(rot4.block<3, 3>(1, 1), w, v);
    Mat2c rot_lift = w * Mat2c::Identity() - kI * (v.x() * pauli(1) + v.y() * pauli(2) + v.z() * pauli(3));
    SpinorMap lift = boost_lift(uvec) * SpinorMap(rot_lift);
    return LorentzTransform(lambda, lift);
}

LorentzTransform LorentzTransform::from_spinor(const SpinorMap& a) {
    Mat4 lam = a.vector_matrix();
    check_lorentz(lam);
    return LorentzTransform(lam, a);
}

LorentzTransform LorentzTransform::operator*(const LorentzTransform& rhs) const {
    return LorentzTransform(lambda_ * rhs.lambda_, lift_ * rhs.lift_);
}

LorentzTransform LorentzTransform::inverse() const {
    const Mat4& eta = minkowski_metric();
    return LorentzTransform(eta * lambda_.transpose() * eta, lift_.inverse());
}

FourVector LorentzTransform::apply(const FourVector& a) const {
    return FourVector::from_components(lambda_ * a.components());
}

Vec3 LorentzTransform::apply_velocity(const Vec3& uvec) const {
    return apply(four_velocity(uvec)).spatial();
}

bool LorentzTransform::is_identity(double tol) const {
    return (lambda_ - Mat4::Identity()).cwiseAbs().maxCoeff() <= tol;
}

LorentzTransform standard_boost(const Vec3& uvec) { return LorentzTransform::boost(uvec); }

SpinorMap boost_lift(const Vec3& uvec) {
    const double u0 = std::sqrt(1.0 + uvec.squaredNorm());
    Mat2c m = (1.0 + u0) * Mat2c::Identity()
              + uvec.x() * pauli(1) + uvec.y() * pauli(2) + uvec.z() * pauli(3);
    m /= std::sqrt(2.0 * (1.0 + u0));
    return SpinorMap(m);
}

SpinorMap rotation_lift(const Vec3& axis, double angle) {
    const double n = axis.norm();
    if (n == 0.0) throw std::invalid_argument("rotation_lift: zero axis");
    const Vec3 nh = axis / n;
    Mat2c m = std::cos(0.5 * angle) * Mat2c::Identity()
              - kI * std::sin(0.5 * angle) * (nh.x() * pauli(1) + nh.y() * pauli(2) + nh.z() * pauli(3));
    return SpinorMap(m);
}

}  // namespace pplus

#include "pplus/evolution.hpp"

#include <cmath>
#include <stdexcept>

namespace pplus {

namespace {

double u0_of(const Vec3& u) { return std::sqrt(1.0 + u.squaredNorm()); }

}  // namespace

SpinWavefunction apply_hamiltonian(const SpinWavefunction& f, const ComplexMass& cm) {
    auto inner = f.eval;
    const cplx sq = cm.sqrt_s_r();
    return SpinWavefunction{
        f.two_j,
        [inner, sq](const Vec3& u, int two_j3) { return sq * u0_of(u) * inner(u, two_j3); },
        "P0: " + f.description};
}

SpinWavefunction evolve(const SpinWavefunction& f, const ComplexMass& cm, double t) {
    if (t < 0.0) {
        throw std::domain_error("evolve: semigroup domain violation, time evolution is defined for t >= 0 only");
    }
    auto inner = f.eval;
    const double m = cm.mass;
    const double hg = 0.5 * cm.width;
    return SpinWavefunction{
        f.two_j,
        [inner, m, hg, t](const Vec3& u, int two_j3) -> cplx {
            const double u0 = u0_of(u);
            return std::polar(std::exp(-hg * u0 * t), -m * u0 * t) * inner(u, two_j3);
        },
        "evolve(t=" + std::to_string(t) + "): " + f.description};
}

SpinWavefunction translate(const SpinWavefunction& f, const ComplexMass& cm, const FourVector& a,
                           bool checked) {
    if (checked) {
        const IntervalClass cls = classify_interval(a);
        if (cls != IntervalClass::InForwardCone) {
            throw std::domain_error("translate: causality domain violation, a is " + to_string(cls)
                                    + " and lies outside the forward cone T+");
        }
    }
    auto inner = f.eval;
    const cplx sq = cm.sqrt_s_r();
    return SpinWavefunction{
        f.two_j,
        [inner, sq, a](const Vec3& u, int two_j3) -> cplx {
            const double ua = u0_of(u) * a.t - u.dot(a.spatial());
            return std::exp(cplx(0.0, -1.0) * sq * ua) * inner(u, two_j3);
        },
        "translate: " + f.description};
}

namespace {

SpinWavefunction representation_transform(const SpinWavefunction& f, cplx sqrt_mass,
                                          const LorentzTransform& lam, const FourVector& a,
                                          const char* tag) {
    if (lam.is_identity() && !(a.t == 0.0 && a.x == 0.0 && a.y == 0.0 && a.z == 0.0)) {
        // pure translation: skip the little-group machinery
        auto inner = f.eval;
        return SpinWavefunction{
            f.two_j,
            [inner, sqrt_mass, a](const Vec3& u, int two_j3) -> cplx {
                const double ua = u0_of(u) * a.t - u.dot(a.spatial());
                return std::exp(cplx(0.0, -1.0) * sqrt_mass * ua) * inner(u, two_j3);
            },
            std::string(tag) + ": " + f.description};
    }
    auto inner = f.eval;
    const int two_j = f.two_j;
    const LorentzTransform inv = lam.inverse();
    return SpinWavefunction{
        two_j,
        [inner, sqrt_mass, lam, inv, a, two_j](const Vec3& u, int two_j3) -> cplx {
            const double ua = u0_of(u) * a.t - u.dot(a.spatial());
            const cplx phase = std::exp(cplx(0.0, -1.0) * sqrt_mass * ua);
            const Vec3 src = inv.apply_velocity(u);
            if (two_j == 0) return phase * inner(src, 0);
            const WignerRotation w = wigner_rotation(lam, src);
            const WignerDMatrix d = wigner_d(two_j, w.spinor);
            cplx sum(0.0, 0.0);
            for (int two_jp = -two_j; two_jp <= two_j; two_jp += 2) {
                sum += d.entry(two_j3, two_jp) * inner(src, two_jp);
            }
            return phase * sum;
        },
        std::string(tag) + ": " + f.description};
}

}  // namespace

SpinWavefunction poincare_transform(const SpinWavefunction& f, const ComplexMass& cm,
                                    const LorentzTransform& lam, const FourVector& a,
                                    bool checked) {
    if (checked) {
        const IntervalClass cls = classify_interval(a);
        if (cls != IntervalClass::InForwardCone) {
            throw std::domain_error("poincare_transform: causality domain violation, (Lambda, a) is outside P+ (a is "
                                    + to_string(cls) + ")");
        }
    }
    return representation_transform(f, cm.sqrt_s_r(), lam, a, "U(Lambda,a)");
}

SpinWavefunction stable_transform(const SpinWavefunction& f, double m,
                                  const LorentzTransform& lam, const FourVector& a) {
    if (!(m > 0.0)) throw std::invalid_argument("stable_transform: mass must be positive");
    return representation_transform(f, cplx(m, 0.0), lam, a, "U_stable(Lambda,a)");
}

SpinWavefunction complex_time_evolve(const SpinWavefunction& f, const ComplexMass& cm, cplx z) {
    auto inner = f.eval;
    const cplx sq = cm.sqrt_s_r();
    return SpinWavefunction{
        f.two_j,
        [inner, sq, z](const Vec3& u, int two_j3) -> cplx {
            return std::exp(cplx(0.0, -1.0) * sq * u0_of(u) * z) * inner(u, two_j3);
        },
        "evolve(z): " + f.description};
}

}  // namespace pplus

#include "pplus/selftest.hpp"

#include <cmath>

#include "pplus/evolution.hpp"
#include "pplus/expectation.hpp"
#include "pplus/sampling.hpp"

namespace pplus {

namespace {

SuiteResult make_result(std::string name, int trials, double max_dev, double tol) {
    return SuiteResult{std::move(name), trials, max_dev, tol, max_dev <= tol};
}

SuiteResult metric_preservation(Rng& rng, int trials) {
    double dev = 0.0;
    for (int i = 0; i < trials; ++i) {
        const LorentzTransform lam = random_lorentz(rng, 2.0) * random_lorentz(rng, 2.0);
        const Mat4 res = lam.matrix().transpose() * minkowski_metric() * lam.matrix() - minkowski_metric();
        dev = std::max(dev, res.cwiseAbs().maxCoeff());
    }
    return make_result("lorentz_metric_preservation", trials, dev, 1e-12);
}

SuiteResult wigner_cocycle(Rng& rng, int trials) {
    double dev = 0.0;
    for (int i = 0; i < trials; ++i) {
        const LorentzTransform l1 = random_lorentz(rng, 2.0);
        const LorentzTransform l2 = random_lorentz(rng, 2.0);
        const Vec3 u = random_velocity(rng, 3.0);
        const WignerRotation lhs = wigner_rotation(l1 * l2, u);
        const WignerRotation w2 = wigner_rotation(l2, u);
        const WignerRotation w1 = wigner_rotation(l1, l2.apply_velocity(u));
        dev = std::max(dev, (lhs.rotation.matrix() - (w1.rotation * w2.rotation).matrix())
                                .cwiseAbs().maxCoeff());
        dev = std::max(dev, (lhs.spinor.matrix() - (w1.spinor * w2.spinor).matrix())
                                .cwiseAbs().maxCoeff());
    }
    return make_result("wigner_rotation_cocycle", trials, dev, 1e-10);
}

SuiteResult wigner_d_homomorphism(Rng& rng, int trials) {
    double dev = 0.0;
    for (int i = 0; i < trials; ++i) {
        for (int two_j : {0, 1, 2, 3}) {
            const SpinorMap w1 = random_su2(rng);
            const SpinorMap w2 = random_su2(rng);
            const WignerDMatrix d1 = wigner_d(two_j, w1);
            const WignerDMatrix d2 = wigner_d(two_j, w2);
            const WignerDMatrix d12 = wigner_d(two_j, w1 * w2);
            dev = std::max(dev, (d12.matrix() - d1.matrix() * d2.matrix()).cwiseAbs().maxCoeff());
            const Eigen::MatrixXcd gram = d1.matrix().adjoint() * d1.matrix()
                                          - Eigen::MatrixXcd::Identity(d1.dim(), d1.dim());
            dev = std::max(dev, gram.cwiseAbs().maxCoeff());
        }
    }
    return make_result("wigner_d_homomorphism_unitarity", trials, dev, 1e-10);
}

SuiteResult classify_invariance(Rng& rng, int trials) {
    double dev = 0.0;
    for (int i = 0; i < trials; ++i) {
        const LorentzTransform lam = random_lorentz(rng, 2.0);
        FourVector a = random_four_vector(rng, 2.0);
        if (std::abs(a.minkowski_square()) < 1e-6) a.t += 0.1;  // stay clear of the boundary
        if (classify_interval(lam.apply(a)) != classify_interval(a)) dev = 1.0;
    }
    return make_result("interval_classification_invariance", trials, dev, 0.0);
}

SuiteResult evolve_additivity(Rng& rng, int trials) {
    const ComplexMass cm(1.0, 0.2);
    const SpinWavefunction f = gaussian_packet(Vec3(0.2, -0.1, 0.4), 1.0, 0, {1.0});
    std::uniform_real_distribution<double> td(0.0, 3.0);
    double dev = 0.0;
    for (int i = 0; i < trials; ++i) {
        const double t1 = td(rng), t2 = td(rng);
        const Vec3 u = random_velocity(rng, 3.0);
        const cplx lhs = evolve(evolve(f, cm, t1), cm, t2).eval(u, 0);
        const cplx rhs = evolve(f, cm, t1 + t2).eval(u, 0);
        dev = std::max(dev, std::abs(lhs - rhs));
    }
    return make_result("evolve_additivity", trials, dev, 1e-14);
}

SuiteResult translate_additivity(Rng& rng, int trials) {
    const ComplexMass cm(1.0, 0.2);
    const SpinWavefunction f = gaussian_packet(Vec3::Zero(), 1.0, 0, {1.0});
    double dev = 0.0;
    for (int i = 0; i < trials; ++i) {
        const FourVector a1 = random_forward_vector(rng, 1.5);
        const FourVector a2 = random_forward_vector(rng, 1.5);
        const Vec3 u = random_velocity(rng, 3.0);
        const cplx lhs = translate(translate(f, cm, a1), cm, a2).eval(u, 0);
        const cplx rhs = translate(f, cm, a1 + a2).eval(u, 0);
        dev = std::max(dev, std::abs(lhs - rhs));
    }
    return make_result("translate_additivity", trials, dev, 1e-14);
}

SuiteResult poincare_composition(Rng& rng, int trials) {
    const ComplexMass cm(1.0, 0.2);
    const SpinWavefunction f = gaussian_packet(Vec3(0.1, 0.0, -0.3), 1.2, 1, {cplx(1.0, 0.2), 0.5});
    double dev = 0.0;
    for (int i = 0; i < trials; ++i) {
        const LorentzTransform l1 = random_lorentz(rng, 1.5);
        const LorentzTransform l2 = random_lorentz(rng, 1.5);
        const FourVector a1 = random_forward_vector(rng, 1.5);
        const FourVector a2 = random_forward_vector(rng, 1.5);
        const SpinWavefunction two_step = poincare_transform(poincare_transform(f, cm, l2, a2), cm, l1, a1);
        const SpinWavefunction one_step =
            poincare_transform(f, cm, l1 * l2, a1 + FourVector::from_components(l1.matrix() * a2.components()));
        for (int p = 0; p < 20; ++p) {
            const Vec3 u = random_velocity(rng, 2.5);
            for (int two_j3 : {-1, 1}) {
                dev = std::max(dev, std::abs(two_step.eval(u, two_j3) - one_step.eval(u, two_j3)));
            }
        }
    }
    return make_result("poincare_composition_law", trials, dev, 1e-10);
}

SuiteResult contraction(Rng& rng, int trials) {
    const ComplexMass cm(1.0, 0.2);
    const QuadratureGrid grid = QuadratureGrid::three_d(8.0, 16);
    const NormalizedState state = normalize(gaussian_packet(Vec3::Zero(), 1.0, 0, {1.0}), grid);
    double dev = 0.0;
    for (int i = 0; i < trials; ++i) {
        const FourVector a = random_forward_vector(rng, 2.0, i % 10 == 0);
        const double n2 = norm_squared(translate(state.wavefunction, cm, a), grid);
        dev = std::max(dev, n2 - 1.0);
    }
    return make_result("forward_cone_contraction", trials, dev, 1e-10);
}

SuiteResult decay_bound(Rng& rng, int trials) {
    const ComplexMass cm(1.0, 0.2);
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 128);
    double dev = 0.0;
    for (int i = 0; i < trials; ++i) {
        std::uniform_real_distribution<double> cd(-1.0, 1.0);
        const NormalizedState state =
            normalize(gaussian_packet(Vec3(0.0, 0.0, cd(rng)), 0.8, 0, {1.0}), grid);
        for (double t : {0.1, 1.0, 10.0}) {
            const double n2 = norm_squared(evolve(state.wavefunction, cm, t), grid);
            dev = std::max(dev, n2 - std::exp(-cm.width * t));
        }
    }
    return make_result("decay_bound", trials, dev, 1e-10);
}

SuiteResult schwarz_reflection(Rng& rng, int trials) {
    const ComplexMass cm(1.0, 0.2);
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 64);
    const NormalizedState state = normalize(gaussian_packet(Vec3::Zero(), 1.0, 0, {1.0}), grid);
    const Observable proj = Observable::position_projector({-1.0, 1.0}, cm.mass, 401);
    const AnalyticStrip strip = analytic_strip(spectral_bounds(SpectrumDescriptor::closed_form_ray(cm)));
    std::uniform_real_distribution<double> td(0.2, 2.0);
    std::uniform_real_distribution<double> yd(-0.9 * strip.half_width, 0.9 * strip.half_width);
    double dev = 0.0;
    for (int i = 0; i < trials; ++i) {
        const cplx z(td(rng), yd(rng));
        const cplx lhs = std::conj(complex_expectation(state.wavefunction, grid, proj, cm, std::conj(z)));
        const cplx rhs = complex_expectation(state.wavefunction, grid, proj, cm, z);
        dev = std::max(dev, std::abs(lhs - rhs));
    }
    return make_result("schwarz_reflection", trials, dev, 1e-12);
}

SuiteResult renormalized_scaling(Rng& rng, int trials) {
    const ComplexMass cm(1.0, 0.2);
    const QuadratureGrid grid = QuadratureGrid::one_d(8.0, 64);
    const Observable ind = Observable::velocity_indicator(1.0, true);
    std::uniform_real_distribution<double> sd(0.2, 5.0);
    double dev = 0.0;
    for (int i = 0; i < trials; ++i) {
        const SpinWavefunction f = gaussian_packet(Vec3(0.0, 0.0, 0.3), 1.0, 0, {1.0});
        const cplx factor(sd(rng), sd(rng));
        const FourVector a = random_four_vector(rng, 1.0);
        const double r1 = renormalized_expectation(f, grid, ind, cm, a);
        const double r2 = renormalized_expectation(scaled(f, factor), grid, ind, cm, a);
        dev = std::max(dev, std::abs(r1 - r2));
    }
    return make_result("renormalized_expectation_scaling", trials, dev, 1e-12);
}

}  // namespace

std::vector<SuiteResult> run_selftest(std::uint64_t seed, int trials_scale) {
    Rng rng(seed);
    std::vector<SuiteResult> out;
    out.push_back(metric_preservation(rng, 100 * trials_scale));
    out.push_back(wigner_cocycle(rng, 100 * trials_scale));
    out.push_back(wigner_d_homomorphism(rng, 25 * trials_scale));
    out.push_back(classify_invariance(rng, 100 * trials_scale));
    out.push_back(evolve_additivity(rng, 100 * trials_scale));
    out.push_back(translate_additivity(rng, 100 * trials_scale));
    out.push_back(poincare_composition(rng, 50 * trials_scale));
    out.push_back(contraction(rng, 200 * trials_scale));
    out.push_back(decay_bound(rng, 5 * trials_scale));
    out.push_back(schwarz_reflection(rng, 50 * trials_scale));
    out.push_back(renormalized_scaling(rng, 20 * trials_scale));
    return out;
}

}  // namespace pplus

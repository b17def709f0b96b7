#ifndef PPLUS_EVOLUTION_HPP
#define PPLUS_EVOLUTION_HPP

#include "pplus/complex_mass.hpp"
#include "pplus/wavefunction.hpp"
#include "pplus/wigner.hpp"

namespace pplus {

/// (P0 f)(u, j3) = sqrt(s_R) u0 f(u, j3). A normal operator: multiplication
/// by a fixed complex function of u.
SpinWavefunction apply_hamiltonian(const SpinWavefunction& f, const ComplexMass& cm);

/// Semigroup time evolution, multiplier
/// exp(-i M u0 t) exp(-(Gamma/2) u0 t), defined for t >= 0 only.
/// Negative t throws: the semigroup has no inverse elements.
SpinWavefunction evolve(const SpinWavefunction& f, const ComplexMass& cm, double t);

/// Spacetime translation, multiplier exp(-i sqrt(s_R) (u . a)).
/// In checked mode a must lie in the closed forward cone T+; unchecked mode
/// admits any a and exists only for the analysis scans, which flag it.
SpinWavefunction translate(const SpinWavefunction& f, const ComplexMass& cm, const FourVector& a,
                           bool checked = true);

/// Full complex-mass representation
///   (U(Lambda, a) f)(u, j3) =
///     e^{-i sqrt(s_R) u.a} sum_{j3'} D^j(W(Lambda, Lambda^-1 u))_{j3 j3'}
///                                    f(Lambda^-1 u, j3'),
/// the little-group element evaluated at the source point so that the
/// composition law (L1,a1)(L2,a2) = (L1 L2, a1 + L1 a2) holds pointwise.
SpinWavefunction poincare_transform(const SpinWavefunction& f, const ComplexMass& cm,
                                    const LorentzTransform& lam, const FourVector& a,
                                    bool checked = true);

/// Stable-particle unitary representation: same formula with real mass m,
/// defined for every a (group, not semigroup); |multiplier| = 1 everywhere.
SpinWavefunction stable_transform(const SpinWavefunction& f, double m,
                                  const LorentzTransform& lam, const FourVector& a);

/// Complex-time multiplier exp(-i sqrt(s_R) u0 z). Domain policing (z inside
/// the analyticity strip, Re z >= 0) is the caller's responsibility; the
/// analysis layer enforces it.
SpinWavefunction complex_time_evolve(const SpinWavefunction& f, const ComplexMass& cm, cplx z);

}  // namespace pplus

#endif

#ifndef PPLUS_STRIP_HPP
#define PPLUS_STRIP_HPP

#include <vector>

#include "pplus/complex_mass.hpp"
#include "pplus/lorentz.hpp"

namespace pplus {

/// Spectrum of the generator: either the closed-form ray of a ComplexMass
/// or an explicit sampled set of complex eigenvalues.
struct SpectrumDescriptor {
    enum class Source { ClosedFormRay, SampledSet };

    Source source = Source::ClosedFormRay;
    ComplexMass ray_cm{};
    std::vector<cplx> samples{};

    static SpectrumDescriptor closed_form_ray(const ComplexMass& cm) {
        return {Source::ClosedFormRay, cm, {}};
    }
    static SpectrumDescriptor sampled(std::vector<cplx> pts);
};

/// Log-spaced samples of the ray lambda = (M - i Gamma/2) u0, u0 in
/// [1, u0_max]; the numerical route that cross-checks the closed forms.
std::vector<cplx> sample_ray(const ComplexMass& cm, int count, double u0_max);

enum class StripVerdict {
    Satisfied,   ///< k0 finite, k1 < 0 (possibly empty-set sentinel), k2 > 0
    Degenerate,  ///< conditions hold weakly with k1 = 0 or k2 = 0: strip of width zero
    Violated     ///< some condition fails outright (or spectrum touches the imaginary axis from above)
};

/// Bounds read off the spectrum, lambda = lambda_x + i lambda_y:
///   k0 = sup lambda_y
///   k1 = sup over {lambda_x < 0} of (-lambda_y / lambda_x)
///   k2 = inf over {lambda_x > 0} of (-lambda_y / lambda_x)
/// Points with lambda_x = 0 are excluded from both ratio sets; a spectrum
/// containing lambda_x = 0 with lambda_y > 0 is reported Violated. Empty
/// ratio sets carry the sentinels sup(empty) = -inf, inf(empty) = +inf.
struct StripBounds {
    double k0 = 0.0;
    double k1 = 0.0;
    double k2 = 0.0;
    bool k1_empty = false;
    bool k2_empty = false;
    bool zero_axis_conflict = false;

    bool cond_k0_finite = false;
    bool cond_k1_negative = false;
    bool cond_k2_positive = false;
    StripVerdict verdict = StripVerdict::Violated;

    /// Half-width k = min(|k1|, k2) under the sentinel rules.
    double half_width() const;
};

StripBounds spectral_bounds(const SpectrumDescriptor& spec);

/// The half-strip {z = t + i y : t > 0, -k < y < k}.
struct AnalyticStrip {
    double half_width = 0.0;

    bool contains(cplx z, bool closed = true) const;
};

/// Rejects Violated bounds; a Degenerate verdict yields half-width zero
/// (the stable limit, no continuation off the real axis).
AnalyticStrip analytic_strip(const StripBounds& bounds);

const char* to_string(StripVerdict v);

}  // namespace pplus

#endif

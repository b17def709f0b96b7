#include "pplus/strip.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pplus {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

SpectrumDescriptor SpectrumDescriptor::sampled(std::vector<cplx> pts) {
    if (pts.empty()) throw std::invalid_argument("SpectrumDescriptor: sampled set must be non-empty");
    SpectrumDescriptor s;
    s.source = Source::SampledSet;
    s.samples = std::move(pts);
    return s;
}

std::vector<cplx> sample_ray(const ComplexMass& cm, int count, double u0_max) {
    if (count < 2) throw std::invalid_argument("sample_ray: need at least two samples");
    if (u0_max <= 1.0) throw std::invalid_argument("sample_ray: u0_max must exceed 1");
    std::vector<cplx> out(count);
    const double step = std::log(u0_max) / (count - 1);
    for (int i = 0; i < count; ++i) {
        out[i] = cm.sqrt_s_r() * std::exp(i * step);
    }
    return out;
}

double StripBounds::half_width() const {
    const double a1 = k1_empty ? kInf : std::abs(k1);
    const double a2 = k2_empty ? kInf : k2;
    return std::min(a1, a2);
}

namespace {

StripBounds finish(StripBounds b) {
    b.cond_k0_finite = std::isfinite(b.k0);
    b.cond_k1_negative = b.k1_empty || b.k1 < 0.0;
    b.cond_k2_positive = b.k2_empty || b.k2 > 0.0;

    const bool violated = !b.cond_k0_finite || b.zero_axis_conflict
                          || (!b.k1_empty && b.k1 > 0.0) || (!b.k2_empty && b.k2 < 0.0);
    if (violated) {
        b.verdict = StripVerdict::Violated;
    } else if ((!b.k1_empty && b.k1 == 0.0) || (!b.k2_empty && b.k2 == 0.0)) {
        b.verdict = StripVerdict::Degenerate;
    } else {
        b.verdict = StripVerdict::Satisfied;
    }
    return b;
}

}  // namespace

StripBounds spectral_bounds(const SpectrumDescriptor& spec) {
    StripBounds b;
    if (spec.source == SpectrumDescriptor::Source::ClosedFormRay) {
        const ComplexMass& cm = spec.ray_cm;
        // lambda = (M - i Gamma/2) u0: lambda_x = M u0 > 0 throughout, so the
        // {lambda_x < 0} set is empty and the ratio is the constant Gamma/(2M).
        b.k0 = -0.5 * cm.width;
        b.k1 = -kInf;
        b.k1_empty = true;
        b.k2 = 0.5 * cm.width / cm.mass;
        return finish(b);
    }

    b.k0 = -kInf;
    b.k1 = -kInf;
    b.k2 = kInf;
    b.k1_empty = true;
    b.k2_empty = true;
    for (const cplx& lam : spec.samples) {
        const double lx = lam.real();
        const double ly = lam.imag();
        b.k0 = std::max(b.k0, ly);
        if (lx == 0.0) {
            if (ly > 0.0) b.zero_axis_conflict = true;
            continue;
        }
        const double ratio = -ly / lx;
        if (lx < 0.0) {
            b.k1 = b.k1_empty ? ratio : std::max(b.k1, ratio);
            b.k1_empty = false;
        } else {
            b.k2 = b.k2_empty ? ratio : std::min(b.k2, ratio);
            b.k2_empty = false;
        }
    }
    return finish(b);
}

bool AnalyticStrip::contains(cplx z, bool closed) const {
    if (!(z.real() > 0.0)) return false;
    return closed ? std::abs(z.imag()) <= half_width : std::abs(z.imag()) < half_width;
}

AnalyticStrip analytic_strip(const StripBounds& bounds) {
    if (bounds.verdict == StripVerdict::Violated) {
        throw std::invalid_argument("analytic_strip: spectrum bounds violate the strip conditions");
    }
    if (bounds.verdict == StripVerdict::Degenerate) return AnalyticStrip{0.0};
    return AnalyticStrip{bounds.half_width()};
}

const char* to_string(StripVerdict v) {
    switch (v) {
        case StripVerdict::Satisfied: return "satisfied";
        case StripVerdict::Degenerate: return "degenerate";
        case StripVerdict::Violated: return "violated";
    }
    return "unknown";
}

}  // namespace pplus

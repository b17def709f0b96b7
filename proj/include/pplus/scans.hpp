#ifndef PPLUS_SCANS_HPP
#define PPLUS_SCANS_HPP

#include <optional>
#include <vector>

#include "pplus/expectation.hpp"

namespace pplus {

enum class ScanQuantity { NormSquared, Expectation, RenormalizedExpectation };

const char* to_string(ScanQuantity q);

struct ScanRow {
    FourVector a;
    IntervalClass classification = IntervalClass::InForwardCone;
    bool checked = false;  ///< spacelike entries are always unchecked
    double value = 0.0;
};

struct ScanReport {
    ScanQuantity quantity = ScanQuantity::NormSquared;
    bool checked_mode = false;
    double reference_norm_squared = 1.0;
    std::vector<ScanRow> rows;
    double growth_alpha = 0.0;
    std::optional<double> first_exceed_x;  ///< first |x| with value > alpha * ||f||^2
};

/// Evaluates the quantity at every lattice point. In checked mode,
/// forward-cone points go through the checked translation; spacelike and
/// past points are evaluated unchecked and flagged per row. The observable
/// is ignored for NormSquared. Rows are assembled in lattice order.
ScanReport lattice_scan(const SpinWavefunction& f, const QuadratureGrid& grid, const Observable& a,
                        const ComplexMass& cm, const std::vector<FourVector>& lattice,
                        ScanQuantity quantity, bool checked_mode, int threads = 1);

/// ||U((t, x * direction)) f||^2 along a spatial ray at fixed t, flagging
/// the first x where the value exceeds alpha * ||f||^2.
ScanReport norm_growth_scan(const SpinWavefunction& f, const QuadratureGrid& grid,
                            const ComplexMass& cm, const Vec3& direction, double t,
                            const std::vector<double>& x_values, double alpha = 1e6,
                            int threads = 1);

/// ||U(a) f||^2 at a fixed spacelike a on grids of growing cutoff (same
/// node density). The fitted rates are successive slopes of log(value) in
/// u_max; for states outside the domain of U(a) they increase with u_max,
/// the cutoff-divergence signature of the unbounded translations.
struct RefinementPoint {
    double u_max = 0.0;
    int n = 0;
    double value = 0.0;
};

struct RefinementReport {
    FourVector a;
    IntervalClass classification = IntervalClass::InForwardCone;
    std::vector<RefinementPoint> points;
    std::vector<double> fitted_rates;
};

RefinementReport cutoff_growth_refinement(const SpinWavefunction& f, const ComplexMass& cm,
                                          const FourVector& a, const std::vector<double>& u_max_values,
                                          double points_per_unit, GridMode mode = GridMode::OneDReduced);

/// Position-probability tails of an initially localized 1-D state.
/// The profile must be supported inside V (initial outside mass <= 1e-8 of
/// the norm); negative sample times are rejected with the semigroup error.
/// outside_probability(t) = ||f_t||^2 - int_V |phi_t|^2 dx, which captures
/// all leakage including beyond any finite x window.
struct TailsResult {
    std::vector<double> t_values;
    std::vector<double> outside_probability;
    double initial_outside = 0.0;
    double noise_floor = 0.0;
    bool tails_everywhere = false;  ///< outside probability above the floor at every t > 0
};

inline constexpr double kTailsInitialTol = 1e-8;
inline constexpr double kTailsNoiseFloor = 1e-7;

TailsResult tails_probe(const BumpProfile& f0, const ComplexMass& cm, const Interval& v,
                        const std::vector<double>& t_values, const QuadratureGrid& grid,
                        int x_samples = 4001);

}  // namespace pplus

#endif

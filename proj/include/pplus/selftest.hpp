#ifndef PPLUS_SELFTEST_HPP
#define PPLUS_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace pplus {

struct SuiteResult {
    std::string name;
    int trials = 0;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Randomized property suites over the kinematics and evolution layers:
/// metric preservation, Wigner cocycle and D-matrix homomorphism, interval
/// classification invariance, semigroup additivity, the P+ composition law,
/// contraction and decay bounds, Schwarz reflection and renormalization
/// scale invariance. Deterministic for a fixed seed.
std::vector<SuiteResult> run_selftest(std::uint64_t seed, int trials_scale = 1);

}  // namespace pplus

#endif

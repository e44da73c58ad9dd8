#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pnchow/matrix.hpp"

namespace pnchow {

// Fiberwise linear algebra over the incidence correspondences
//   T = {(v, phi) : phi^t v = 0},  phi in Hom(C^n, C^{n+1}),
//   S = {(v, phi) : phi v = 0},    phi alternating on C^{n+1}, n even.
// The probes certify that full-rank maps have singleton fibers and that the
// determinant / Pfaffian sections cut out exactly the rank-deficient locus.

enum class ProbeVariant { Hom, Alt };

struct SampleConfig {
    std::uint64_t seed = 42;
    long bound = 10;  // entries drawn uniformly from [-bound, bound]
    int samples = 100;
};

struct FiberReport {
    int dim;  // projective dimension of the fiber
    std::optional<std::vector<Rat>> representative;  // present when dim == 0
};

FiberReport fiber_over(ProbeVariant variant, const QMatrix& phi);

enum class PivotRule { MaxAbs, FirstNonZero };

// determinant of phi read in a basis of v-perp; requires phi^t v = 0;
// vanishes exactly when rank(phi) <= n-1
Rat det_section(const std::vector<Rat>& v, const QMatrix& phi,
                PivotRule rule = PivotRule::MaxAbs);

// Pfaffian of the form induced on C^{n+1}/<v>; requires phi v = 0 and n even;
// vanishes exactly when rank(phi) <= n-2
Rat pf_section(const std::vector<Rat>& v, const QMatrix& phi,
               PivotRule rule = PivotRule::MaxAbs);

struct ProbeReport {
    ProbeVariant variant;
    int n = 0;
    int samples = 0;
    // birational probe counters
    long full_rank = 0;
    long singleton_fibers = 0;
    long degenerate_draws = 0;
    // exceptional probe counters
    long deficient_samples = 0;
    long fiber_dim_ok = 0;
    long section_checks = 0;
    long zero_sections = 0;
    long nonzero_sections = 0;
    bool pass = false;

    friend bool operator==(const ProbeReport&, const ProbeReport&) = default;
};

// draws random maps; every full-rank draw must have a singleton fiber
ProbeReport probe_birational(ProbeVariant variant, int n, const SampleConfig& cfg);

// constructed rank-deficient maps must have positive-dimensional fibers and
// vanishing sections; full-rank draws must have nonvanishing sections
ProbeReport probe_exceptional(ProbeVariant variant, int n, const SampleConfig& cfg);

// deterministic sample matrices, exposed for tests
QMatrix draw_hom(int n, SplitMix64& rng, long bound);
QMatrix draw_alt(int n, SplitMix64& rng, long bound);
QMatrix draw_hom_deficient(int n, SplitMix64& rng, long bound);
QMatrix draw_alt_deficient(int n, SplitMix64& rng, long bound);

}  // namespace pnchow

#pragma once

#include "pnchow/rank_loci.hpp"
#include "pnchow/report.hpp"

namespace pnchow {

enum class VerifyTarget { Thm1, Thm2, Lemma1, Lemma2 };

// Full check battery for one statement at a given n: Segre coefficients,
// tautological degree, divisor-class product, section-space dimension and
// the sampling probes.  Thm2 at odd n runs the degree checks expecting 0;
// Lemma2 refuses odd n with odd_n_error.
Report run_verify(VerifyTarget target, int n, const SampleConfig& cfg);

// helper complexes shared with the acceptance suite
Int global_sections_hom(int n);  // dim H^0 of Hom(O^n, T(-1)) via a chase
Int global_sections_alt(int n);  // dim H^0 of wedge^2(T(-1)) via a chase

}  // namespace pnchow

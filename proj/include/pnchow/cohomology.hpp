#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "pnchow/errors.hpp"
#include "pnchow/numeric.hpp"

namespace pnchow {

// Dimension counts of sheaf cohomology on P^n.  Everything here is a
// dimension; no maps or module structure are tracked.

struct SheafAtom {
    enum class Kind { Line, Form };
    Kind kind;
    int p;   // form degree (Form only)
    long t;  // twist

    static SheafAtom line(long d) { return {Kind::Line, 0, d}; }
    static SheafAtom form(int p, long t) { return {Kind::Form, p, t}; }

    friend auto operator<=>(const SheafAtom&, const SheafAtom&) = default;
};

// multiset of line bundles O(d) and twisted form bundles Omega^p(t)
class SheafTerm {
  public:
    SheafTerm() = default;
    explicit SheafTerm(SheafAtom atom, long mult = 1) { add(atom, mult); }

    SheafTerm& add(SheafAtom atom, long mult = 1);
    const std::map<SheafAtom, long>& atoms() const { return atoms_; }

  private:
    std::map<SheafAtom, long> atoms_;
};

// terms of a complex 0 -> A_1 -> ... -> A_m -> C -> 0, exact onto an
// unnamed cokernel C
struct ExactComplex {
    std::vector<SheafTerm> terms;
};

class CohTable {
  public:
    explicit CohTable(int n) : dims_(static_cast<std::size_t>(n) + 1) {}
    CohTable(int n, std::vector<Int> dims);

    int dim() const { return static_cast<int>(dims_.size()) - 1; }
    const Int& operator[](int q) const { return dims_[static_cast<std::size_t>(q)]; }
    Int& operator[](int q) { return dims_[static_cast<std::size_t>(q)]; }

    bool all_zero() const;
    Int euler_characteristic() const;
    std::string str() const;

    friend bool operator==(const CohTable&, const CohTable&) = default;

  private:
    std::vector<Int> dims_;
};

// h^q(P^n, O(d)): sections for d >= 0, top cohomology for d <= -n-1
CohTable line_cohomology(int n, long d);

// Bott's dimension table for h^q(P^n, Omega^p(t))
CohTable bott(int n, int p, long t);

CohTable term_cohomology(int n, const SheafTerm& term);

// long-exact-sequence chase: splits the complex into short exact sequences
// and propagates dimensions; reports only entries forced by vanishing and
// throws ambiguous_chase_error instead of guessing a connecting map
CohTable chase(int n, const ExactComplex& complex);

// h^0 of the twisted n-th symmetric power resolution of Hom(O^n, T(-1));
// the unique-divisor count
Int lemma1_section_space(int n);

// even-n companion for the second wedge of T(-1); throws odd_n_error
Int lemma2_section_space(int n);

Int dim_sym(long m, long k);
Int dim_wedge(long m, long k);

}  // namespace pnchow

#pragma once

#include <vector>

#include "pnchow/truncated.hpp"

namespace pnchow {

// A formal vector bundle on P^n: rank plus total Chern class.  Identity is
// structural; this is the level at which the intersection theory computes.
class Bundle {
  public:
    Bundle(int n, int rank, TruncZ chern);

    int dim() const { return n_; }
    int rank() const { return rank_; }
    const TruncZ& chern() const { return chern_; }

    friend bool operator==(const Bundle& a, const Bundle& b) {
        return a.n_ == b.n_ && a.rank_ == b.rank_ && a.chern_ == b.chern_;
    }

  private:
    int n_;
    int rank_;
    TruncZ chern_;
};

Bundle line_bundle(int n, long d);
Bundle trivial_bundle(int n, int m);

// Whitney: ranks add, total Chern classes multiply
Bundle direct_sum(const Bundle& a, const Bundle& b);
Bundle direct_sum_pow(const Bundle& a, int m);

// T_{P^n}(-1), the globally generated quotient in the Euler sequence;
// its total Chern class is the truncation of (1-h)^{-1}
Bundle tangent_twist(int n);
Bundle tangent(int n);

Bundle dual(const Bundle& a);

// total Segre class = inverse of the total Chern class
TruncZ segre(const Bundle& a);

TruncQ chern_character(const Bundle& a);

// inverse Newton identities; throws non_integral_error when the rational
// class is not the character of a genuine bundle
Bundle bundle_from_character(int n, int rank, const TruncQ& ch);

// Adams operation: scales the h^i component by k^i
TruncQ adams(long k, const TruncQ& x);

Bundle exterior_power(int j, const Bundle& a);
Bundle symmetric_power(int j, const Bundle& a);

Bundle twist(const Bundle& a, long d);

// Omega^p(t), the twisted bundle of p-forms
Bundle form_bundle(int n, int p, long t);

}  // namespace pnchow

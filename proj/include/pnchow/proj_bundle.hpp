#pragma once

#include <map>
#include <string>
#include <utility>

#include "pnchow/bundle.hpp"

namespace pnchow {

// Bidegree class a_{ij} h^i xi^j on the projective bundle P(E) -> P^n, with
// xi the tautological line bundle.  The ring is presented by the relation
//
//   xi^r = sum_{i=1}^{min(r,n)} (-1)^{i+1} pi^*(c_i(E)) xi^{r-i},   r = rank E,
//
// with alternating signs; the other common convention is recovered by
// xi <-> -xi together with E <-> dual(E).  Normal form keeps the xi-exponent
// below the rank; h-degree above n truncates to zero.
class MixedClass {
  public:
    using Key = std::pair<int, int>;  // (h exponent, xi exponent)

    explicit MixedClass(Bundle base);

    static MixedClass monomial(Bundle base, int h_exp, int xi_exp, Int coeff = 1);

    const Bundle& base() const { return base_; }
    const std::map<Key, Int>& coefficients() const { return coeffs_; }
    bool is_normal() const;

    friend MixedClass operator+(const MixedClass& a, const MixedClass& b);
    friend MixedClass operator-(const MixedClass& a, const MixedClass& b);
    friend MixedClass operator*(const MixedClass& a, const MixedClass& b);
    friend MixedClass operator*(const Int& s, const MixedClass& a);

    // rewrite to normal form by repeated use of the relation, highest
    // xi-exponent first
    MixedClass reduce() const;

    // coefficient of the point class pi^*(h^n) xi^{r-1}; requires the input
    // homogeneous of degree dim P(E) = n + r - 1 (deg h = deg xi = 1)
    Int integral() const;

    // equality of normal forms
    friend bool operator==(const MixedClass& a, const MixedClass& b);

    std::string str() const;

  private:
    void insert(int i, int j, const Int& c);

    Bundle base_;
    std::map<Key, Int> coeffs_;  // nonzero entries only
};

// degree of the tautological map: integral of xi^{n + rank - 1}
Int taut_degree(const Bundle& a);

// integral of (a*xi + b*pi^*h) . xi^{n + rank - 2}
Int divisor_top_intersection(long a, long b, const Bundle& bundle);

// (-1)^i integral(h^{n-i} xi^{rank-1+i}); equals the h^i Segre coefficient
Int segre_pushforward(const Bundle& a, int i);

}  // namespace pnchow

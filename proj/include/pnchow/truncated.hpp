#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pnchow/errors.hpp"
#include "pnchow/numeric.hpp"

namespace pnchow {

// Polynomial in the hyperplane class h with exact coefficients, truncated
// modulo h^{n+1}.  This is the Chow ring of P^n; every product discards
// h-degree > n eagerly, so values never hold more than n+1 coefficients.
// Values are immutable after construction.
template <class T>
class TruncSeries {
  public:
    explicit TruncSeries(int n) : n_(checked(n)), c_(static_cast<std::size_t>(n) + 1) {}

    TruncSeries(int n, std::vector<T> coeffs) : n_(checked(n)), c_(std::move(coeffs)) {
        c_.resize(static_cast<std::size_t>(n_) + 1);
    }

    static TruncSeries one(int n) {
        TruncSeries s(n);
        s.c_[0] = 1;
        return s;
    }

    static TruncSeries hyperplane(int n) {
        TruncSeries s(n);
        if (n >= 1) s.c_[1] = 1;
        return s;
    }

    int dim() const { return n_; }

    const T& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

    const std::vector<T>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const T& x : c_)
            if (x != 0) return false;
        return true;
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        a.require_same(b);
        TruncSeries r(a.n_);
        for (int i = 0; i <= a.n_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        a.require_same(b);
        TruncSeries r(a.n_);
        for (int i = 0; i <= a.n_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    friend TruncSeries operator-(const TruncSeries& a) {
        TruncSeries r(a.n_);
        for (int i = 0; i <= a.n_; ++i) r.c_[i] = -a.c_[i];
        return r;
    }

    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.require_same(b);
        TruncSeries r(a.n_);
        for (int i = 0; i <= a.n_; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j <= a.n_; ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend TruncSeries operator*(const T& s, const TruncSeries& a) {
        TruncSeries r(a.n_);
        for (int i = 0; i <= a.n_; ++i) r.c_[i] = s * a.c_[i];
        return r;
    }

    friend TruncSeries operator/(const TruncSeries& a, const T& s) {
        if (s == 0) throw std::domain_error("division of series by zero scalar");
        TruncSeries r(a.n_);
        for (int i = 0; i <= a.n_; ++i) r.c_[i] = a.c_[i] / s;
        return r;
    }

    // multiplicative inverse of a series with constant term 1
    TruncSeries inverse() const {
        if (c_[0] != 1) throw non_unit_error("series inverse requires constant term 1");
        TruncSeries b(n_);
        b.c_[0] = 1;
        for (int k = 1; k <= n_; ++k) {
            T acc = T(0);
            for (int i = 1; i <= k; ++i) acc += c_[i] * b.c_[k - i];
            b.c_[k] = -acc;
        }
        return b;
    }

    TruncSeries pow(unsigned e) const {
        TruncSeries r = one(n_);
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }

    std::string str(const char* var = "h") const {
        std::ostringstream out;
        bool first = true;
        for (int i = 0; i <= n_; ++i) {
            if (c_[i] == 0) continue;
            T a = c_[i];
            if (first) {
                if (a < 0) {
                    out << "-";
                    a = -a;
                }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            bool unit_coeff = (a == 1) && i > 0;
            if (!unit_coeff) out << coeff_str(a);
            if (i > 0) {
                if (!unit_coeff) out << "*";
                out << var;
                if (i > 1) out << "^" << i;
            }
        }
        if (first) out << "0";
        return out.str();
    }

  private:
    static int checked(int n) {
        if (n < 0) throw std::invalid_argument("ambient dimension must be non-negative");
        return n;
    }

    void require_same(const TruncSeries& o) const {
        if (n_ != o.n_) throw dim_mismatch_error("mixed ambient dimensions");
    }

    static std::string coeff_str(const T& a) {
        std::ostringstream s;
        s << a;
        return s.str();
    }

    int n_;
    std::vector<T> c_;
};

using TruncZ = TruncSeries<Int>;
using TruncQ = TruncSeries<Rat>;

inline TruncQ to_rational(const TruncZ& a) {
    std::vector<Rat> c(static_cast<std::size_t>(a.dim()) + 1);
    for (int i = 0; i <= a.dim(); ++i) c[i] = Rat(a[i]);
    return TruncQ(a.dim(), std::move(c));
}

// exact down-conversion; a surviving denominator means the class is not integral
inline TruncZ to_integral(const TruncQ& a) {
    std::vector<Int> c(static_cast<std::size_t>(a.dim()) + 1);
    for (int i = 0; i <= a.dim(); ++i) {
        if (a[i].get_den() != 1)
            throw non_integral_error("coefficient of h^" + std::to_string(i) +
                                     " is not an integer: " + a[i].get_str());
        c[i] = a[i].get_num();
    }
    return TruncZ(a.dim(), std::move(c));
}

// (1 + d*h)^e truncated, e may be negative
inline TruncZ binomial_line_series(int n, long d, long e) {
    std::vector<Int> lin(static_cast<std::size_t>(n) + 1);
    lin[0] = 1;
    if (n >= 1) lin[1] = d;
    TruncZ base(n, std::move(lin));
    if (e < 0) return base.inverse().pow(static_cast<unsigned>(-e));
    return base.pow(static_cast<unsigned>(e));
}

}  // namespace pnchow

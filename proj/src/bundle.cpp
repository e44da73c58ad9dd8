#include "pnchow/bundle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pnchow {

Bundle::Bundle(int n, int rank, TruncZ chern)
    : n_(n), rank_(rank), chern_(std::move(chern)) {
    if (n < 0) throw std::invalid_argument("ambient dimension must be non-negative");
    if (rank < 0) throw std::invalid_argument("rank must be non-negative");
    if (chern_.dim() != n) throw dim_mismatch_error("chern class lives on the wrong P^n");
    if (chern_[0] != 1) throw std::invalid_argument("total Chern class must start at 1");
    for (int i = std::min(rank, n) + 1; i <= n; ++i)
        if (chern_[i] != 0)
            throw std::invalid_argument("c_" + std::to_string(i) +
                                        " nonzero above the rank");
}

Bundle line_bundle(int n, long d) {
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    if (n >= 1) c[1] = d;
    return Bundle(n, 1, TruncZ(n, std::move(c)));
}

Bundle trivial_bundle(int n, int m) {
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    return Bundle(n, m, TruncZ::one(n));
}

Bundle direct_sum(const Bundle& a, const Bundle& b) {
    if (a.dim() != b.dim()) throw dim_mismatch_error("direct sum across different P^n");
    return Bundle(a.dim(), a.rank() + b.rank(), a.chern() * b.chern());
}

Bundle direct_sum_pow(const Bundle& a, int m) {
    if (m < 0) throw std::invalid_argument("negative multiplicity");
    Bundle r = trivial_bundle(a.dim(), 0);
    for (int i = 0; i < m; ++i) r = direct_sum(r, a);
    return r;
}

Bundle tangent_twist(int n) {
    if (n < 1) throw std::invalid_argument("needs n >= 1");
    return Bundle(n, n, binomial_line_series(n, -1, -1));
}

Bundle tangent(int n) {
    if (n < 1) throw std::invalid_argument("needs n >= 1");
    // Euler sequence and Whitney give c(T) = (1+h)^{n+1} mod h^{n+1}
    return Bundle(n, n, binomial_line_series(n, 1, n + 1));
}

Bundle dual(const Bundle& a) {
    std::vector<Int> c(static_cast<std::size_t>(a.dim()) + 1);
    for (int i = 0; i <= a.dim(); ++i) c[i] = (i % 2 == 0) ? a.chern()[i] : -a.chern()[i];
    return Bundle(a.dim(), a.rank(), TruncZ(a.dim(), std::move(c)));
}

TruncZ segre(const Bundle& a) { return a.chern().inverse(); }

// Newton's identities between elementary symmetric functions of the Chern
// roots (the c_i) and their power sums, then ch_k = p_k / k!.
TruncQ chern_character(const Bundle& a) {
    const int n = a.dim();
    std::vector<Rat> p(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        Rat acc = 0;
        for (int i = 1; i < k; ++i) {
            Rat t = Rat(a.chern()[i]) * p[k - i];
            if (i % 2 == 0)
                acc -= t;
            else
                acc += t;
        }
        Rat lead = Rat(k) * Rat(a.chern()[k]);
        if (k % 2 == 0) lead = -lead;
        p[k] = acc + lead;
    }
    std::vector<Rat> ch(static_cast<std::size_t>(n) + 1);
    ch[0] = a.rank();
    Int fact = 1;
    for (int k = 1; k <= n; ++k) {
        fact *= k;
        ch[k] = p[k] / Rat(fact);
    }
    return TruncQ(n, std::move(ch));
}

Bundle bundle_from_character(int n, int rank, const TruncQ& ch) {
    if (ch.dim() != n) throw dim_mismatch_error("character lives on the wrong P^n");
    if (rank < 0) throw std::invalid_argument("rank must be non-negative");
    if (ch[0] != rank) throw std::invalid_argument("ch_0 must equal the rank");
    std::vector<Rat> p(static_cast<std::size_t>(n) + 1);
    Int fact = 1;
    for (int k = 1; k <= n; ++k) {
        fact *= k;
        p[k] = Rat(fact) * ch[k];
    }
    std::vector<Rat> e(static_cast<std::size_t>(n) + 1);
    e[0] = 1;
    for (int k = 1; k <= n; ++k) {
        Rat acc = 0;
        for (int i = 1; i <= k; ++i) {
            Rat t = p[i] * e[k - i];
            if (i % 2 == 0)
                acc -= t;
            else
                acc += t;
        }
        e[k] = acc / Rat(k);
    }
    return Bundle(n, rank, to_integral(TruncQ(n, std::move(e))));
}

TruncQ adams(long k, const TruncQ& x) {
    if (k < 1) throw std::invalid_argument("Adams operation needs k >= 1");
    std::vector<Rat> c(static_cast<std::size_t>(x.dim()) + 1);
    Int kp = 1;
    for (int i = 0; i <= x.dim(); ++i) {
        c[i] = Rat(kp) * x[i];
        kp *= k;
    }
    return TruncQ(x.dim(), std::move(c));
}

namespace {

TruncQ exp_line_character(int n, long d) {
    std::vector<Rat> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    Int num = 1, fact = 1;
    for (int i = 1; i <= n; ++i) {
        num *= d;
        fact *= i;
        c[i] = Rat(num) / Rat(fact);
    }
    return TruncQ(n, std::move(c));
}

int checked_rank(const Int& r) {
    if (!r.fits_sint_p()) throw std::overflow_error("rank too large");
    return static_cast<int>(r.get_si());
}

enum class PowerKind { Exterior, Symmetric };

// Newton-type recursion on Chern characters,
//   j*ch(W^j A) = sum_{i=1..j} s_i * psi^i(ch A) * ch(W^{j-i} A),
// with s_i = (-1)^{i+1} for exterior powers and s_i = 1 for symmetric ones.
Bundle lambda_power(PowerKind kind, int j, const Bundle& a) {
    if (j < 0) throw std::invalid_argument("negative power");
    const int n = a.dim();
    const TruncQ chA = chern_character(a);
    std::vector<TruncQ> psi;
    psi.reserve(static_cast<std::size_t>(j) + 1);
    psi.push_back(TruncQ(n));  // unused slot i = 0
    for (int i = 1; i <= j; ++i) psi.push_back(adams(i, chA));

    std::vector<TruncQ> ch;
    ch.reserve(static_cast<std::size_t>(j) + 1);
    ch.push_back(TruncQ::one(n));
    for (int m = 1; m <= j; ++m) {
        TruncQ acc(n);
        for (int i = 1; i <= m; ++i) {
            TruncQ t = psi[i] * ch[m - i];
            if (kind == PowerKind::Exterior && i % 2 == 0)
                acc = acc - t;
            else
                acc = acc + t;
        }
        ch.push_back(acc / Rat(m));
    }

    Int rk = (kind == PowerKind::Exterior) ? binomial(a.rank(), j)
                                           : binomial(a.rank() + j - 1, j);
    return bundle_from_character(n, checked_rank(rk), ch[static_cast<std::size_t>(j)]);
}

}  // namespace

Bundle exterior_power(int j, const Bundle& a) {
    return lambda_power(PowerKind::Exterior, j, a);
}

Bundle symmetric_power(int j, const Bundle& a) {
    return lambda_power(PowerKind::Symmetric, j, a);
}

Bundle twist(const Bundle& a, long d) {
    TruncQ ch = chern_character(a) * exp_line_character(a.dim(), d);
    return bundle_from_character(a.dim(), a.rank(), ch);
}

Bundle form_bundle(int n, int p, long t) {
    if (p < 0 || p > n) throw std::invalid_argument("form degree out of range");
    return twist(exterior_power(p, dual(tangent(n))), t);
}

}  // namespace pnchow

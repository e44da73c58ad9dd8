#include "pnchow/cohomology.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>

namespace pnchow {

SheafTerm& SheafTerm::add(SheafAtom atom, long mult) {
    if (mult <= 0) throw std::invalid_argument("multiplicity must be positive");
    atoms_[atom] += mult;
    return *this;
}

CohTable::CohTable(int n, std::vector<Int> dims) : dims_(std::move(dims)) {
    dims_.resize(static_cast<std::size_t>(n) + 1);
}

bool CohTable::all_zero() const {
    for (const Int& d : dims_)
        if (d != 0) return false;
    return true;
}

Int CohTable::euler_characteristic() const {
    Int chi = 0;
    for (std::size_t q = 0; q < dims_.size(); ++q)
        chi += (q % 2 == 0) ? dims_[q] : -dims_[q];
    return chi;
}

std::string CohTable::str() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t q = 0; q < dims_.size(); ++q) {
        if (q) out << ", ";
        out << dims_[q].get_str();
    }
    out << "]";
    return out.str();
}

CohTable line_cohomology(int n, long d) {
    CohTable t(n);
    if (d >= 0)
        t[0] = binomial(n + d, n);
    else if (d <= -n - 1)
        t[n] = binomial(-d - 1, n);
    return t;
}

CohTable bott(int n, int p, long t) {
    if (p < 0 || p > n) throw std::invalid_argument("form degree out of range");
    CohTable table(n);
    if (t > p)
        table[0] = binomial(t + n - p, t) * binomial(t - 1, p);
    else if (t == 0)
        table[p] = 1;
    else if (t < p - n)
        table[n] = binomial(-t + p, -t) * binomial(-t - 1, n - p);
    return table;
}

CohTable term_cohomology(int n, const SheafTerm& term) {
    CohTable total(n);
    for (const auto& [atom, mult] : term.atoms()) {
        CohTable one = (atom.kind == SheafAtom::Kind::Line)
                           ? line_cohomology(n, atom.t)
                           : bott(n, atom.p, atom.t);
        for (int q = 0; q <= n; ++q) total[q] += Int(mult) * one[q];
    }
    return total;
}

namespace {

// One short exact sequence 0 -> X -> Y -> Z -> 0 with X, Y known.  The long
// exact sequence is a row of slots
//   H^0(X) H^0(Y) z_0 H^1(X) H^1(Y) z_1 ... ,
// bounded by zeros.  Between any two zero entries the subsequence is exact,
// so its alternating dimension sum vanishes; a run containing exactly one
// unknown determines it.  Solved zeros split runs, so iterate to a fixpoint.
CohTable solve_ses(int n, const CohTable& x, const CohTable& y) {
    struct Slot {
        bool known;
        Int value;  // when known
        int zq;     // unknown index otherwise
    };
    std::vector<Slot> slots;
    slots.reserve(3 * static_cast<std::size_t>(n + 1));
    for (int q = 0; q <= n; ++q) {
        slots.push_back({true, x[q], -1});
        slots.push_back({true, y[q], -1});
        slots.push_back({false, Int(0), q});
    }
    std::vector<std::optional<Int>> z(static_cast<std::size_t>(n) + 1);

    auto slot_known = [&](const Slot& s) -> std::optional<Int> {
        if (s.known) return s.value;
        if (z[static_cast<std::size_t>(s.zq)]) return *z[static_cast<std::size_t>(s.zq)];
        return std::nullopt;
    };

    bool progress = true;
    while (progress) {
        progress = false;
        std::size_t start = 0;  // runs delimited by known zeros and both ends
        for (std::size_t pos = 0; pos <= slots.size(); ++pos) {
            bool boundary = pos == slots.size();
            if (!boundary) {
                auto v = slot_known(slots[pos]);
                boundary = v && *v == 0;
            }
            if (!boundary) continue;
            // run is [start, pos)
            int unknowns = 0;
            std::size_t upos = 0;
            Int alt = 0;
            for (std::size_t i = start; i < pos; ++i) {
                auto v = slot_known(slots[i]);
                int sign = ((i - start) % 2 == 0) ? 1 : -1;
                if (v)
                    alt += sign * *v;
                else {
                    ++unknowns;
                    upos = i;
                }
            }
            if (unknowns == 0 && alt != 0)
                throw std::invalid_argument("complex dimensions are not exact");
            if (unknowns == 1) {
                int sign = ((upos - start) % 2 == 0) ? 1 : -1;
                Int val = -alt * sign;
                if (val < 0)
                    throw std::invalid_argument("complex dimensions are not exact");
                z[static_cast<std::size_t>(slots[upos].zq)] = val;
                progress = true;
            }
            start = pos + 1;
        }
    }

    CohTable out(n);
    for (int q = 0; q <= n; ++q) {
        if (!z[static_cast<std::size_t>(q)]) throw ambiguous_chase_error(q);
        out[q] = *z[static_cast<std::size_t>(q)];
    }
    return out;
}

}  // namespace

CohTable chase(int n, const ExactComplex& complex) {
    if (complex.terms.empty()) throw std::invalid_argument("empty complex");
    // split at images: B_1 = A_1, then 0 -> B_{i-1} -> A_i -> B_i -> 0,
    // ending with B_m = C
    CohTable running = term_cohomology(n, complex.terms.front());
    for (std::size_t i = 1; i < complex.terms.size(); ++i)
        running = solve_ses(n, running, term_cohomology(n, complex.terms[i]));
    return running;
}

Int dim_sym(long m, long k) { return binomial(m + k - 1, k); }

Int dim_wedge(long m, long k) { return binomial(m, k); }

namespace {

long checked_long(const Int& v) {
    if (!v.fits_slong_p()) throw std::overflow_error("multiplicity too large");
    return v.get_si();
}

}  // namespace

Int lemma1_section_space(int n) {
    if (n < 2) throw std::invalid_argument("needs n >= 2");
    // twisted symmetric-power resolution of the rank n^2 bundle by line
    // bundles O(-j-1), multiplicities dim S^{n-j} x dim wedge^j
    ExactComplex cx;
    for (int j = n; j >= 0; --j) {
        Int mult = dim_sym(static_cast<long>(n) * (n + 1), n - j) * dim_wedge(n, j);
        cx.terms.push_back(SheafTerm(SheafAtom::line(-j - 1), checked_long(mult)));
    }
    return chase(n, cx)[0];
}

Int lemma2_section_space(int n) {
    if (n < 2) throw std::invalid_argument("needs n >= 2");
    if (n % 2 != 0) throw odd_n_error("section space defined for even n only");
    const int k = n / 2;
    // twisted symmetric-power resolution with form-bundle terms Omega^{n-j}
    ExactComplex cx;
    for (int j = k; j >= 0; --j) {
        Int mult = dim_sym(static_cast<long>(n) * (n + 1) / 2, k - j);
        cx.terms.push_back(SheafTerm(SheafAtom::form(n - j, 0), checked_long(mult)));
    }
    return chase(n, cx)[0];
}

}  // namespace pnchow

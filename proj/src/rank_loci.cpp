#include "pnchow/rank_loci.hpp"

#include <stdexcept>

namespace pnchow {

namespace {

void check_hom_shape(const QMatrix& phi) {
    if (phi.rows() != phi.cols() + 1 || phi.cols() < 1)
        throw std::invalid_argument("Hom variant needs an (n+1) x n matrix");
}

void check_alt_shape(const QMatrix& phi) {
    if (phi.rows() != phi.cols() || !phi.is_alternating())
        throw not_alternating_error("Alt variant needs an alternating matrix");
    if ((phi.rows() - 1) % 2 != 0)
        throw odd_n_error("Alt variant needs even n = size - 1");
}

int pivot_index(const std::vector<Rat>& v, PivotRule rule) {
    int p = -1;
    if (rule == PivotRule::FirstNonZero) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) return static_cast<int>(i);
    } else {
        Rat best = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            Rat m = abs(v[i]);
            if (m > best) {
                best = m;
                p = static_cast<int>(i);
            }
        }
        if (p >= 0) return p;
    }
    throw std::invalid_argument("zero vector has no pivot");
}

bool annihilates(const QMatrix& m, const std::vector<Rat>& v) {
    // m v = 0 for an rows x cols matrix with cols == v.size()
    for (int i = 0; i < m.rows(); ++i) {
        Rat acc = 0;
        for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[static_cast<std::size_t>(j)];
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace

FiberReport fiber_over(ProbeVariant variant, const QMatrix& phi) {
    QMatrix system(0, 0);
    if (variant == ProbeVariant::Hom) {
        check_hom_shape(phi);
        system = phi.transpose();  // fiber = P(ker phi^t)
    } else {
        check_alt_shape(phi);
        system = phi;  // fiber = P(ker phi)
    }
    std::vector<std::vector<Rat>> kernel = kernel_basis(system);
    FiberReport rep;
    rep.dim = static_cast<int>(kernel.size()) - 1;
    if (rep.dim == 0) rep.representative = kernel.front();
    return rep;
}

Rat det_section(const std::vector<Rat>& v, const QMatrix& phi, PivotRule rule) {
    check_hom_shape(phi);
    const int n = phi.cols();
    if (static_cast<int>(v.size()) != n + 1)
        throw std::invalid_argument("incidence vector has wrong length");
    if (!annihilates(phi.transpose(), v))
        throw incidence_error("phi^t v != 0");
    // columns of phi lie in v-perp; with pivot coordinate p the basis
    // v_p e_i - v_i e_p (i != p) turns the column matrix into phi with row p
    // deleted, scaled by 1/v_p
    int p = pivot_index(v, rule);
    QMatrix square(n, n);
    int r = 0;
    for (int i = 0; i <= n; ++i) {
        if (i == p) continue;
        for (int j = 0; j < n; ++j) square.at(r, j) = phi.at(i, j);
        ++r;
    }
    return det(square) / rat_pow(v[static_cast<std::size_t>(p)], n);
}

Rat pf_section(const std::vector<Rat>& v, const QMatrix& phi, PivotRule rule) {
    check_alt_shape(phi);
    const int n = phi.rows() - 1;
    if (static_cast<int>(v.size()) != n + 1)
        throw std::invalid_argument("incidence vector has wrong length");
    if (!annihilates(phi, v)) throw incidence_error("phi v != 0");
    // induced form on C^{n+1}/<v> in the complement basis {e_i : i != p}
    int p = pivot_index(v, rule);
    QMatrix reduced(n, n);
    int r = 0;
    for (int i = 0; i <= n; ++i) {
        if (i == p) continue;
        int c = 0;
        for (int j = 0; j <= n; ++j) {
            if (j == p) continue;
            reduced.at(r, c) = phi.at(i, j);
            ++c;
        }
        ++r;
    }
    return pfaffian(reduced);
}

QMatrix draw_hom(int n, SplitMix64& rng, long bound) {
    QMatrix m(n + 1, n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = Rat(rng.uniform(-bound, bound));
    return m;
}

QMatrix draw_alt(int n, SplitMix64& rng, long bound) {
    QMatrix m(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            Rat a(rng.uniform(-bound, bound));
            m.at(i, j) = a;
            m.at(j, i) = -a;
        }
    return m;
}

QMatrix draw_hom_deficient(int n, SplitMix64& rng, long bound) {
    // factor through C^{n-1}, so the rank never exceeds n-1
    QMatrix left(n + 1, n - 1), right(n - 1, n);
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < n - 1; ++j) left.at(i, j) = Rat(rng.uniform(-bound, bound));
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n; ++j) right.at(i, j) = Rat(rng.uniform(-bound, bound));
    return left * right;
}

QMatrix draw_alt_deficient(int n, SplitMix64& rng, long bound) {
    // B J B^t with J the standard symplectic block of size n-2
    const int m = n - 2;
    QMatrix j(m, m);
    for (int i = 0; i + 1 < m; i += 2) {
        j.at(i, i + 1) = 1;
        j.at(i + 1, i) = -1;
    }
    QMatrix b(n + 1, m);
    for (int r = 0; r <= n; ++r)
        for (int c = 0; c < m; ++c) b.at(r, c) = Rat(rng.uniform(-bound, bound));
    return b * j * b.transpose();
}

namespace {

void check_variant_n(ProbeVariant variant, int n) {
    if (n < 2) throw std::invalid_argument("probes need n >= 2");
    if (variant == ProbeVariant::Alt && n % 2 != 0)
        throw odd_n_error("Alt probes need even n");
}

}  // namespace

ProbeReport probe_birational(ProbeVariant variant, int n, const SampleConfig& cfg) {
    check_variant_n(variant, n);
    ProbeReport rep;
    rep.variant = variant;
    rep.n = n;
    rep.samples = cfg.samples;
    for (int idx = 0; idx < cfg.samples; ++idx) {
        SplitMix64 rng = sample_stream(cfg.seed, static_cast<std::uint64_t>(idx));
        QMatrix phi = variant == ProbeVariant::Hom ? draw_hom(n, rng, cfg.bound)
                                                   : draw_alt(n, rng, cfg.bound);
        if (rank(phi) < n) {
            ++rep.degenerate_draws;
            continue;
        }
        ++rep.full_rank;
        if (fiber_over(variant, phi).dim == 0) ++rep.singleton_fibers;
    }
    rep.pass = rep.singleton_fibers == rep.full_rank;
    return rep;
}

ProbeReport probe_exceptional(ProbeVariant variant, int n, const SampleConfig& cfg) {
    check_variant_n(variant, n);
    ProbeReport rep;
    rep.variant = variant;
    rep.n = n;
    rep.samples = cfg.samples;
    bool ok = true;

    for (int idx = 0; idx < cfg.samples; ++idx) {
        SplitMix64 rng = sample_stream(cfg.seed, static_cast<std::uint64_t>(idx));
        QMatrix phi = variant == ProbeVariant::Hom
                          ? draw_hom_deficient(n, rng, cfg.bound)
                          : draw_alt_deficient(n, rng, cfg.bound);
        ++rep.deficient_samples;
        QMatrix system = variant == ProbeVariant::Hom ? phi.transpose() : phi;
        std::vector<std::vector<Rat>> kernel = kernel_basis(system);
        if (static_cast<int>(kernel.size()) - 1 >= 1)
            ++rep.fiber_dim_ok;
        else
            ok = false;
        for (const auto& v : kernel) {
            Rat s = variant == ProbeVariant::Hom ? det_section(v, phi)
                                                 : pf_section(v, phi);
            ++rep.section_checks;
            if (s == 0)
                ++rep.zero_sections;
            else
                ok = false;
        }
    }

    // full-rank side: the unique incidence vector carries a nonzero section
    for (int idx = 0; idx < cfg.samples; ++idx) {
        SplitMix64 rng =
            sample_stream(cfg.seed, static_cast<std::uint64_t>(cfg.samples + idx));
        QMatrix phi = variant == ProbeVariant::Hom ? draw_hom(n, rng, cfg.bound)
                                                   : draw_alt(n, rng, cfg.bound);
        if (rank(phi) < n) {
            ++rep.degenerate_draws;
            continue;
        }
        ++rep.full_rank;
        FiberReport fib = fiber_over(variant, phi);
        if (fib.dim != 0 || !fib.representative) {
            ok = false;
            continue;
        }
        Rat s = variant == ProbeVariant::Hom ? det_section(*fib.representative, phi)
                                             : pf_section(*fib.representative, phi);
        ++rep.section_checks;
        if (s != 0)
            ++rep.nonzero_sections;
        else
            ok = false;
    }

    rep.pass = ok && rep.nonzero_sections == rep.full_rank;
    return rep;
}

}  // namespace pnchow

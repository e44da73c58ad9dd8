#include <doctest.h>

#include "pnchow/proj_bundle.hpp"

using namespace pnchow;

namespace {

TruncZ from(int n, std::vector<long> cs) {
    std::vector<Int> c(cs.begin(), cs.end());
    return TruncZ(n, std::move(c));
}

Bundle random_bundle(SplitMix64& rng, int max_n = 4, int max_rank = 6) {
    int n = static_cast<int>(rng.uniform(1, max_n));
    int rank = static_cast<int>(rng.uniform(1, max_rank));
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    c[0] = 1;
    for (int i = 1; i <= std::min(rank, n); ++i)
        c[static_cast<std::size_t>(i)] = rng.uniform(-4, 4);
    return Bundle(n, rank, TruncZ(n, std::move(c)));
}

MixedClass random_mixed(SplitMix64& rng, const Bundle& base) {
    MixedClass x(base);
    int terms = static_cast<int>(rng.uniform(1, 5));
    for (int t = 0; t < terms; ++t) {
        int i = static_cast<int>(rng.uniform(0, base.dim()));
        int j = static_cast<int>(rng.uniform(0, base.rank() + 3));
        x = x + MixedClass::monomial(base, i, j, Int(rng.uniform(-9, 9)));
    }
    return x;
}

Bundle hom_model(int n) { return direct_sum_pow(tangent_twist(n), n); }
Bundle alt_model(int n) { return exterior_power(2, tangent_twist(n)); }

}  // namespace

TEST_CASE("one application of the relation") {
    // base with rank 4 and c = 1 + 2h + 3h^2 on P^2
    Bundle e2 = hom_model(2);
    MixedClass xi4 = MixedClass::monomial(e2, 0, 4);
    MixedClass expect = MixedClass::monomial(e2, 1, 3, 2) +
                        MixedClass::monomial(e2, 2, 2, -3);
    CHECK(xi4.reduce().coefficients() == expect.coefficients());
}

TEST_CASE("classes below the rank are already normal") {
    Bundle e2 = hom_model(2);
    for (int j = 0; j < e2.rank(); ++j) {
        MixedClass m = MixedClass::monomial(e2, 1, j, 7);
        CHECK(m.reduce().coefficients() == m.coefficients());
        CHECK(m.is_normal());
    }
}

TEST_CASE("rank one: xi reduces to c_1") {
    MixedClass xi = MixedClass::monomial(line_bundle(2, 1), 0, 1);
    CHECK(xi.reduce().coefficients() ==
          MixedClass::monomial(line_bundle(2, 1), 1, 0).coefficients());
}

TEST_CASE("reduce is idempotent and multiplicative") {
    SplitMix64 rng(301);
    for (int rep = 0; rep < 25; ++rep) {
        Bundle base = random_bundle(rng);
        MixedClass x = random_mixed(rng, base);
        MixedClass y = random_mixed(rng, base);
        CHECK(x.reduce().reduce().coefficients() == x.reduce().coefficients());
        CHECK((x * y).reduce().coefficients() ==
              (x.reduce() * y.reduce()).reduce().coefficients());
        CHECK(x.reduce().is_normal());
    }
}

TEST_CASE("integral picks out the point class") {
    Bundle e2 = hom_model(2);
    const int n = 2, r = 4;
    CHECK(MixedClass::monomial(e2, n, r - 1).integral() == 1);
    // same monomial assembled as a product
    MixedClass grading = MixedClass::monomial(e2, n, r - 2) *
                         MixedClass::monomial(e2, 0, 1);
    CHECK(grading.integral() == 1);
    CHECK_THROWS_AS(MixedClass::monomial(e2, 1, r - 1).integral(),
                    degree_mismatch_error);
}

TEST_CASE("tautological degrees of the blow-up models") {
    for (int n = 2; n <= 6; ++n) CHECK(taut_degree(hom_model(n)) == 1);
    for (int n : {2, 4, 6, 8}) CHECK(taut_degree(alt_model(n)) == 1);
    for (int n : {3, 5, 7}) CHECK(taut_degree(alt_model(n)) == 0);
}

TEST_CASE("degenerate projective bundle over a line bundle") {
    // P(L) = P^n, so the degree is the self-intersection d^n
    for (long d : {-3L, -1L, 0L, 2L, 5L})
        for (int n = 1; n <= 4; ++n)
            CHECK(taut_degree(line_bundle(n, d)) == int_pow(Int(d), n));
}

TEST_CASE("linear subspace blow-up model") {
    // O^{n-r+1} + O(1) over P^{r-1}, here (n, r) = (4, 3)
    Bundle f = direct_sum(trivial_bundle(2, 2), line_bundle(2, 1));
    CHECK(taut_degree(f) == 1);
    CHECK(segre(f) == from(2, {1, -1, 1}));
}

TEST_CASE("tautological degree equals the signed top Segre coefficient") {
    SplitMix64 rng(302);
    for (int rep = 0; rep < 25; ++rep) {
        Bundle a = random_bundle(rng);
        CHECK(taut_degree(a) == Int(parity_sign(a.dim())) * segre(a)[a.dim()]);
    }
}

TEST_CASE("divisor class products") {
    for (int n = 2; n <= 5; ++n)
        CHECK(divisor_top_intersection(n, -1, hom_model(n)) == 0);
    for (int n : {2, 4, 6})
        CHECK(divisor_top_intersection(n / 2, -1, alt_model(n)) == 0);
    SplitMix64 rng(303);
    for (int rep = 0; rep < 15; ++rep) {
        Bundle a = random_bundle(rng);
        CHECK(divisor_top_intersection(1, 0, a) == taut_degree(a));
    }
}

TEST_CASE("pushforward reproduces the Segre series") {
    SplitMix64 rng(304);
    for (int rep = 0; rep < 20; ++rep) {
        Bundle a = random_bundle(rng);
        TruncZ s = segre(a);
        for (int i = 0; i <= a.dim(); ++i) CHECK(segre_pushforward(a, i) == s[i]);
    }
    for (int n = 2; n <= 4; ++n) {
        Bundle e = hom_model(n);
        CHECK(segre_pushforward(e, n) == Int(parity_sign(n)));
        CHECK(segre_pushforward(e, n - 1) == Int(parity_sign(n - 1)) * n);
        CHECK(segre_pushforward(e, 0) == 1);
    }
}

TEST_CASE("mixed class arithmetic guards") {
    Bundle e2 = hom_model(2);
    Bundle e3 = hom_model(3);
    CHECK_THROWS_AS(MixedClass::monomial(e2, 0, 1) + MixedClass::monomial(e3, 0, 1),
                    dim_mismatch_error);
    CHECK_THROWS_AS(MixedClass::monomial(trivial_bundle(2, 0), 0, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(taut_degree(trivial_bundle(2, 0)), std::invalid_argument);
}

/*
 * Unit tests for the truncated q-series layer.
 *
 * The oracles here are deliberately independent of the library code:
 * naive schoolbook polynomial products over long long, and small
 * recursive partition counters.  Expected values frozen below were
 * produced by those oracles (or worked by hand for the tiny cases)
 * before the library paths existed.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "pil/family.hpp"
#include "pil/series.hpp"

using pil::Coeff;
using pil::TruncatedSeries;

namespace {

/* Naive dense product of integer polynomials, truncated to `order`. */
std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b, int order) {
    std::vector<long long> c(order + 1, 0);
    for (size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i)
        for (size_t j = 0; j < b.size() && static_cast<int>(i + j) <= order; ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

/* Brute-force expansion of prod_{i>=0} (1 - sign q^{offset + modulus i}). */
std::vector<long long> brute_pochhammer(int sign, int offset, int modulus, int order) {
    std::vector<long long> acc(1, 1);
    for (int e = offset; e <= order; e += modulus) {
        std::vector<long long> factor(e + 1, 0);
        factor[0] = 1;
        factor[e] = -sign;
        acc = poly_mul(acc, factor, order);
    }
    acc.resize(order + 1, 0);
    return acc;
}

/* Count partitions of n into distinct parts drawn from `allowed`. */
long long count_distinct_from(const std::vector<int>& allowed, int n, size_t from) {
    if (n == 0) return 1;
    long long total = 0;
    for (size_t i = from; i < allowed.size() && allowed[i] <= n; ++i)
        total += count_distinct_from(allowed, n - allowed[i], i + 1);
    return total;
}

/* Count partitions of n into parts from `allowed`, repeats permitted. */
long long count_from(const std::vector<int>& allowed, int n, size_t from) {
    if (n == 0) return 1;
    long long total = 0;
    for (size_t i = from; i < allowed.size() && allowed[i] <= n; ++i)
        total += count_from(allowed, n - allowed[i], i);
    return total;
}

std::vector<int> range_values(int order, int residue_mod, int modulus) {
    std::vector<int> vals;
    for (int v = 1; v <= order; ++v)
        if (residue_mod < 0 || v % modulus == residue_mod % modulus) vals.push_back(v);
    return vals;
}

/* Partitions of n into at most k parts, by the classic two-way recursion. */
long long partitions_at_most(int n, int k) {
    if (n == 0) return 1;
    if (k == 0 || n < 0) return 0;
    return partitions_at_most(n - k, k) + partitions_at_most(n, k - 1);
}

TruncatedSeries random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> d(-3, 3);
    TruncatedSeries s(order);
    for (int n = 0; n <= order; ++n) s.set_coeff(n, d(rng));
    return s;
}

} // namespace

TEST_CASE("construction and coefficient access") {
    TruncatedSeries z(4);
    CHECK(z.order() == 4);
    for (int n = 0; n <= 4; ++n) CHECK(z.coeff(n) == 0);
    CHECK(z.coeff(9) == 0); /* beyond the order reads zero */

    TruncatedSeries one = TruncatedSeries::one(3);
    CHECK(one.coeff(0) == 1);
    CHECK(one.coeff(1) == 0);

    TruncatedSeries m = TruncatedSeries::monomial(5, 2, 6);
    CHECK(m.coeff(2) == 5);
    CHECK(TruncatedSeries::monomial(7, 9, 4) == TruncatedSeries(4));

    CHECK_THROWS_AS(TruncatedSeries(-1), pil::Error);
    CHECK_THROWS_AS(z.truncated(9), pil::Error);
}

TEST_CASE("arithmetic truncates to the smaller order") {
    TruncatedSeries a = TruncatedSeries::one(5);
    TruncatedSeries b = TruncatedSeries::monomial(1, 1, 3);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK((a - b).order() == 3);
}

TEST_CASE("products of small binomials") {
    /* (1 + q)(1 - q) = 1 - q^2 */
    TruncatedSeries p = TruncatedSeries::one(4) + TruncatedSeries::monomial(1, 1, 4);
    TruncatedSeries m = TruncatedSeries::one(4) - TruncatedSeries::monomial(1, 1, 4);
    TruncatedSeries prod = p * m;
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);
    CHECK(prod.coeff(2) == -1);
    CHECK(prod.coeff(3) == 0);
}

TEST_CASE("ring laws on pseudo-random series") {
    std::mt19937 rng(20260815);
    for (int iter = 0; iter < 60; ++iter) {
        TruncatedSeries a = random_series(rng, 12);
        TruncatedSeries b = random_series(rng, 12);
        TruncatedSeries c = random_series(rng, 12);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK((a - b) + b == a);
        CHECK(a * TruncatedSeries::one(12) == a);
    }
}

TEST_CASE("inversion is two-sided for unit constant terms") {
    /* 1/(1 - q) is the geometric series. */
    TruncatedSeries g = TruncatedSeries::one(8) - TruncatedSeries::monomial(1, 1, 8);
    TruncatedSeries inv = series_invert(g);
    for (int n = 0; n <= 8; ++n) CHECK(inv.coeff(n) == 1);

    std::mt19937 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        TruncatedSeries a = random_series(rng, 10);
        a.set_coeff(0, iter % 2 ? 1 : -1);
        TruncatedSeries ai = series_invert(a);
        CHECK(a * ai == TruncatedSeries::one(10));
        CHECK(ai * a == TruncatedSeries::one(10));
    }

    TruncatedSeries bad = TruncatedSeries::monomial(2, 0, 5);
    CHECK_THROWS_AS(series_invert(bad), pil::NonUnitConstantTerm);
    CHECK_THROWS_AS(series_invert(TruncatedSeries(5)), pil::NonUnitConstantTerm);
}

TEST_CASE("finite pochhammer basics") {
    CHECK(pil::pochhammer_finite(1, 1, 1, 0, 6) == TruncatedSeries::one(6));

    /* (q;q)_2 = (1-q)(1-q^2) = 1 - q - q^2 + q^3 */
    TruncatedSeries s = pil::pochhammer_finite(1, 1, 1, 2, 6);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == -1);
    CHECK(s.coeff(2) == -1);
    CHECK(s.coeff(3) == 1);
    CHECK(s.coeff(4) == 0);

    /* (-1;q^3)_2 = (1+1)(1+q^3) = 2 + 2q^3: offset 0 is fine when finite */
    TruncatedSeries t = pil::pochhammer_finite(-1, 0, 3, 2, 6);
    CHECK(t.coeff(0) == 2);
    CHECK(t.coeff(3) == 2);
    CHECK(t.coeff(6) == 0);

    /* (1;q)_n vanishes */
    CHECK(pil::pochhammer_finite(1, 0, 1, 3, 6) == TruncatedSeries(6));
}

TEST_CASE("infinite pochhammer against the brute-force expansion") {
    /* frozen prefix of (q;q)_inf: the pentagonal-number pattern */
    TruncatedSeries e = pil::pochhammer_infinite(1, 1, 1, 5);
    const long long expected[] = {1, -1, -1, 0, 0, 1};
    for (int n = 0; n <= 5; ++n) CHECK(e.coeff(n) == expected[n]);

    for (int sign : {1, -1})
        for (int offset : {1, 2, 3})
            for (int modulus : {1, 2, 3, 6}) {
                TruncatedSeries lib = pil::pochhammer_infinite(sign, offset, modulus, 40);
                std::vector<long long> ref = brute_pochhammer(sign, offset, modulus, 40);
                for (int n = 0; n <= 40; ++n) CHECK(lib.coeff(n) == ref[n]);
            }

    CHECK_THROWS_AS(pil::pochhammer_infinite(1, 0, 1, 10), pil::DivergentProduct);
}

TEST_CASE("infinite pochhammer is stable under truncation order") {
    TruncatedSeries lo = pil::pochhammer_infinite(-1, 2, 6, 20);
    TruncatedSeries hi = pil::pochhammer_infinite(-1, 2, 6, 45);
    for (int n = 0; n <= 20; ++n) CHECK(lo.coeff(n) == hi.coeff(n));

    /* and a long enough finite product agrees with the infinite one */
    TruncatedSeries fin = pil::pochhammer_finite(-1, 2, 6, 10, 20);
    CHECK(fin == lo);
}

TEST_CASE("(-q;q)_inf counts partitions into distinct parts") {
    TruncatedSeries s = pil::pochhammer_infinite(-1, 1, 1, 30);
    /* frozen: 1, 1, 1, 2 for n = 0..3 */
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(1) == 1);
    CHECK(s.coeff(2) == 1);
    CHECK(s.coeff(3) == 2);
    std::vector<int> all = range_values(30, -1, 1);
    for (int n = 0; n <= 30; ++n)
        CHECK(s.coeff(n) == count_distinct_from(all, n, 0));
}

TEST_CASE("1/(q;q^2)_inf counts partitions into odd parts") {
    TruncatedSeries s = series_invert(pil::pochhammer_infinite(1, 1, 2, 30));
    CHECK(s.coeff(4) == 2); /* 3+1 and 1+1+1+1 */
    std::vector<int> odd = range_values(30, 1, 2);
    for (int n = 0; n <= 30; ++n)
        CHECK(s.coeff(n) == count_from(odd, n, 0));
}

TEST_CASE("1/(q;q)_k counts partitions into at most k parts") {
    for (int k = 0; k <= 6; ++k) {
        TruncatedSeries s = series_invert(pil::pochhammer_finite(1, 1, 1, k, 30));
        for (int n = 0; n <= 30; ++n)
            CHECK(s.coeff(n) == partitions_at_most(n, k));
    }
}

TEST_CASE("product_series assembles numerators and denominators") {
    CHECK(pil::product_series(pil::ProductSpec{}, 8) == TruncatedSeries::one(8));

    /* 1/((q;q^5)(q^4;q^5))_inf: partitions into parts 1 or 4 mod 5 */
    pil::ProductSpec rr{{{1, 1, 5, true}, {1, 4, 5, true}}};
    TruncatedSeries s = pil::product_series(rr, 30);
    CHECK(s.coeff(4) == 2); /* 4 and 1+1+1+1 */
    std::vector<int> allowed;
    for (int v = 1; v <= 30; ++v)
        if (v % 5 == 1 || v % 5 == 4) allowed.push_back(v);
    for (int n = 0; n <= 30; ++n)
        CHECK(s.coeff(n) == count_from(allowed, n, 0));

    /* (-q^2,-q^3,-q^4,-q^6;q^6)_inf: distinct parts not 1 or 5 mod 6 */
    pil::ProductSpec cap{{{-1, 2, 6, false}, {-1, 3, 6, false}, {-1, 4, 6, false}, {-1, 6, 6, false}}};
    TruncatedSeries t = pil::product_series(cap, 30);
    std::vector<int> vals;
    for (int v = 1; v <= 30; ++v)
        if (v % 6 != 1 && v % 6 != 5) vals.push_back(v);
    for (int n = 0; n <= 30; ++n)
        CHECK(t.coeff(n) == count_distinct_from(vals, n, 0));
}

TEST_CASE("three expansions of the same Euler product agree at order 50") {
    const int N = 50;

    /* sum_n q^{n(n+1)/2} / (q;q)_n */
    TruncatedSeries lhs(N);
    for (int n = 0; n * (n + 1) / 2 <= N; ++n) {
        TruncatedSeries term = series_invert(pil::pochhammer_finite(1, 1, 1, n, N));
        lhs = lhs + TruncatedSeries::monomial(1, n * (n + 1) / 2, N) * term;
    }

    /* (q^2;q^2)_inf / (q;q)_inf */
    TruncatedSeries mid = pil::pochhammer_infinite(1, 2, 2, N) *
                          series_invert(pil::pochhammer_infinite(1, 1, 1, N));

    /* 1/(q;q^2)_inf */
    TruncatedSeries rhs = series_invert(pil::pochhammer_infinite(1, 1, 2, N));

    CHECK(lhs == mid);
    CHECK(mid == rhs);
}

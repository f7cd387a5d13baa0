#include "hessbound/interval.hpp"

#include <limits>

#include "doctest.h"
#include "hessbound/bench.hpp"  // SplitMix64

using namespace hb;

TEST_SUITE("interval") {

TEST_CASE("constructors validate endpoints") {
    CHECK_THROWS_AS(Interval(2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(Interval(0.0, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    const Interval p(3.5);
    CHECK(p.lo == 3.5);
    CHECK(p.hi == 3.5);
}

TEST_CASE("addition and constant shifts") {
    const Interval a(-1, 2), b(3, 5);
    CHECK(a + b == Interval(2, 7));
    CHECK(add_const(a, 1.5) == Interval(0.5, 3.5));
    CHECK(mul_by_const(a, 2) == Interval(-2, 4));
    CHECK(mul_by_const(a, -2) == Interval(-4, 2));
    CHECK(mul_by_const(a, 0) == Interval(0, 0));
}

TEST_CASE("four-product multiplication covers all sign cases") {
    CHECK(Interval(1, 2) * Interval(3, 4) == Interval(3, 8));
    CHECK(Interval(-2, -1) * Interval(3, 4) == Interval(-8, -3));
    CHECK(Interval(-1, 2) * Interval(-3, 4) == Interval(-6, 8));
    CHECK(Interval(-1, 2) * Interval(0, 0) == Interval(0, 0));
}

TEST_CASE("multiplication encloses pointwise products") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const double a1 = -5 + 10 * rng.uniform(), a2 = -5 + 10 * rng.uniform();
        const double b1 = -5 + 10 * rng.uniform(), b2 = -5 + 10 * rng.uniform();
        const Interval a(std::fmin(a1, a2), std::fmax(a1, a2));
        const Interval b(std::fmin(b1, b2), std::fmax(b1, b2));
        const Interval p = a * b;
        for (int s = 0; s < 8; ++s) {
            const double x = a.lo + rng.uniform() * a.width();
            const double y = b.lo + rng.uniform() * b.width();
            CHECK(p.contains(x * y));
        }
    }
}

TEST_CASE("one_over") {
    CHECK(one_over(Interval(2, 4)) == Interval(0.25, 0.5));
    CHECK(one_over(Interval(-4, -2)) == Interval(-0.5, -0.25));
    CHECK_THROWS_AS(one_over(Interval(-1, 1)), DomainViolation);
    CHECK_THROWS_AS(one_over(Interval(0, 1)), DomainViolation);
}

TEST_CASE("pow_nat branches") {
    CHECK(pow_nat(Interval(2, 3), 2) == Interval(4, 9));
    CHECK(pow_nat(Interval(-3, -2), 2) == Interval(4, 9));
    CHECK(pow_nat(Interval(-2, 3), 2) == Interval(0, 9));
    CHECK(pow_nat(Interval(-2, 3), 3) == Interval(-8, 27));
    CHECK(pow_nat(Interval(-2, 1), 4) == Interval(0, 16));
    CHECK_THROWS_AS(pow_nat(Interval(1, 2), 1), std::invalid_argument);
}

TEST_CASE("sqrt, exp, ln") {
    CHECK(sqrt_i(Interval(4, 9)) == Interval(2, 3));
    CHECK_THROWS_AS(sqrt_i(Interval(-1, 4)), DomainViolation);
    CHECK(exp_i(Interval(0, 0)) == Interval(1, 1));
    CHECK(ln_i(Interval(1, std::exp(1.0))).hi == doctest::Approx(1.0));
    CHECK_THROWS_AS(ln_i(Interval(0, 1)), DomainViolation);
    CHECK_THROWS_AS(ln_i(Interval(-1, 1)), DomainViolation);
}

TEST_CASE("inflate") {
    const Interval a(-1, 2);
    CHECK(inflate(a, 0.0) == a);
    const Interval b = inflate(a, 1e-6);
    CHECK(b.lo < a.lo);
    CHECK(b.hi > a.hi);
    CHECK(a.subset_of(b));
}

TEST_CASE("vector and matrix kernel ops match the elementwise definition") {
    SplitMix64 rng(11);
    const std::size_t n = 7;
    IntervalVector a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double l1 = -3 + 6 * rng.uniform(), l2 = -3 + 6 * rng.uniform();
        const double m1 = -3 + 6 * rng.uniform(), m2 = -3 + 6 * rng.uniform();
        a[i] = {std::fmin(l1, l2), std::fmax(l1, l2)};
        b[i] = {std::fmin(m1, m2), std::fmax(m1, m2)};
    }
    const IntervalVector s = a + b;
    const IntervalVector cneg = scale(a, -1.5);
    const Interval f(-0.5, 2.0);
    const IntervalVector fi = scale(a, f);
    for (std::size_t i = 0; i < n; ++i) {
        CHECK(s[i] == a[i] + b[i]);
        CHECK(cneg[i] == mul_by_const(a[i], -1.5));
        CHECK(fi[i] == a[i] * f);
    }

    IntervalMatrix M(3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j)
            M.set_sym(i, j, Interval(-1 + 2 * rng.uniform(), 1 + rng.uniform()));
    CHECK(M.is_symmetric());
    const IntervalMatrix M2 = scale(M, Interval(-2, 0.5));
    CHECK(M2.is_symmetric());
    CHECK(M2.at(0, 1) == M.at(0, 1) * Interval(-2, 0.5));
}

TEST_CASE("lambda_aat closed form") {
    IntervalVector a{Interval(1, 2), Interval(-3, 1)};
    CHECK(lambda_aat(a) == Interval(0.0, 4.0 + 9.0));
    // rank-1 bound contains actual extreme eigenvalues: for point vector v,
    // v v^T has eigenvalues {0, |v|^2}
    IntervalVector v{Interval(1.5), Interval(-2.0)};
    const Interval l = lambda_aat(v);
    CHECK(l.contains(0.0));
    CHECK(l.contains(1.5 * 1.5 + 4.0));
}

TEST_CASE("lambda_abba closed form and soundness") {
    IntervalVector a{Interval(1, 1)};
    IntervalVector b{Interval(2, 2)};
    CHECK(lambda_abba(a, b) == Interval(0.0, 4.0));
    // point vectors u, w in the plane: eigenvalues of u w^T + w u^T are
    // u.w +- |u||w|
    IntervalVector u{Interval(1.0), Interval(2.0)};
    IntervalVector w{Interval(-1.0), Interval(0.5)};
    const double dot = 1.0 * -1.0 + 2.0 * 0.5;
    const double cross = std::sqrt(5.0 * 1.25);  // 2.5 exactly
    const Interval l = lambda_abba(u, w);
    CHECK(l.contains(dot + cross));
    CHECK(l.contains(dot - cross));
}

}  // TEST_SUITE

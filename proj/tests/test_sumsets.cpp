#include <doctest.h>

#include <random>

#include "ctidlab/sumsets.hpp"

using namespace ctidlab;

namespace {

SumsetInstance make_instance(long p, std::vector<std::vector<long>> A,
                             std::map<std::pair<int, int>, std::vector<long>> S = {}) {
    SumsetInstance inst;
    inst.p = p;
    inst.A = std::move(A);
    inst.S = std::move(S);
    inst.validate();
    return inst;
}

} // namespace

TEST_CASE("restricted_sumset") {
    // p=7, A_i = {0,1,2}, S_12 = {0} -> {1,2,3}
    SumsetInstance inst = make_instance(7, {{0, 1, 2}, {0, 1, 2}}, {{{1, 2}, {0}}});
    CHECK(restricted_sumset(inst) == std::set<long>{1, 2, 3});

    // no constraints: the full sumset
    SumsetInstance full = make_instance(11, {{0, 1}, {0, 5}});
    CHECK(restricted_sumset(full) == std::set<long>{0, 1, 5, 6});

    // singletons
    SumsetInstance single = make_instance(0, {{3}, {4}, {5}});
    CHECK(restricted_sumset(single) == std::set<long>{12});

    CHECK_THROWS_AS(make_instance(6, {{0}}), BadParams);  // p not prime
    Budget tiny(3);
    CHECK_THROWS_AS(restricted_sumset(make_instance(13, {{0, 1}, {0, 1}, {0, 1}}), tiny),
                    SizeLimit);
}

TEST_CASE("hou_sun_bound and bound_check") {
    CHECK(hou_sun_bound(2, 3, 1) == 3);
    CHECK(hou_sun_bound(2, 3, 0) == 5);  // Cauchy-Davenport style n(k-1)+1
    CHECK(hou_sun_bound(3, 2, 2) == -2); // k-1 < (n-1)ceil(s/2): vacuous

    SumsetInstance t23 = tightness_instance(2, 3, 1, 101);
    BoundReport rep = bound_check(t23);
    CHECK(rep.bound == 3);
    CHECK(rep.size == 3);
    CHECK(rep.meets);
    CHECK(rep.char_ok);

    // s = 0 case checked by enumeration on a small prime
    SumsetInstance free5 = make_instance(31, {{0, 1, 2}, {0, 1, 2}});
    BoundReport rep0 = bound_check(free5);
    CHECK(rep0.bound == 5);
    CHECK(rep0.size == 5);
    CHECK(rep0.meets);
}

TEST_CASE("tightness achieves the bound exactly") {
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k <= 5; ++k)
            for (int t = 1; t <= 2; ++t) {
                SumsetInstance inst = tightness_instance(n, k, t, 101);
                long bound = hou_sun_bound(n, k, 2 * t - 1);
                long size = static_cast<long>(restricted_sumset(inst).size());
                CHECK(size == std::max(bound, 0L));
            }
}

TEST_CASE("f0_coefficient") {
    std::map<std::pair<int, int>, int> s2 = {{{1, 2}, 2}};
    CHECK(f0_coefficient({1, 1}, s2) == BigRat(-2));
    std::map<std::pair<int, int>, int> s1 = {{{1, 2}, 1}};
    CHECK(f0_coefficient({1, 2}, s1) == BigRat(1));
    // s = 0: plain multinomial
    CHECK(f0_coefficient({2, 1}, {}) == BigRat(multinomial({2, 1})));
    CHECK_THROWS_AS(f0_coefficient({1, 1}, std::map<std::pair<int, int>, int>{{{1, 2}, 3}}),
                    BadParams);
}

TEST_CASE("f0 grid path equals brute expansion") {
    std::mt19937 rng(20240909);
    std::uniform_int_distribution<int> deg(0, 3);
    std::uniform_int_distribution<int> mult(0, 2);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + trial % 3;
        std::vector<int> d(n);
        for (auto& x : d) x = deg(rng);
        std::map<std::pair<int, int>, int> s;
        long total_s = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                int v = mult(rng);
                if (v) s[{i, j}] = v;
                total_s += v;
            }
        long N = 0;
        for (int x : d) N += x;
        if (N < total_s) continue;
        CHECK(f0_coefficient(d, s) == f0_coefficient_brute(d, s));
    }
}

TEST_CASE("closed forms equal f0") {
    ClosedFormCase hs = closed_form_hou_sun(2, 2, 1);
    CHECK(hs.value == BigRat(-2));
    CHECK(f0_coefficient(hs.d, hs.s) == hs.value);

    ClosedFormCase anr = closed_form_anr({1, 2});
    CHECK(anr.value == BigRat(1));
    CHECK(f0_coefficient(anr.d, anr.s) == anr.value);
    CHECK(closed_form_anr({2, 2}).value == BigRat(0));  // equal degrees: Vandermonde vanishes

    ClosedFormCase sy = closed_form_sun_yeh(2, 3, 1);
    CHECK(f0_coefficient(sy.d, sy.s) == sy.value);

    ClosedFormCase xin = closed_form_xin({1, 1});
    CHECK(xin.value == BigRat(-2));
    CHECK(f0_coefficient(xin.d, xin.s) == xin.value);
}

TEST_CASE("anr antisymmetry in d") {
    // swapping two degrees flips the sign of the Vandermonde prefactor
    ClosedFormCase a = closed_form_anr({1, 3, 2});
    ClosedFormCase b = closed_form_anr({1, 2, 3});
    CHECK(a.value == -b.value);
    // and f0 agrees on both orderings
    CHECK(f0_coefficient(a.d, a.s) == a.value);
    CHECK(f0_coefficient(b.d, b.s) == b.value);
}

TEST_CASE("nonzero coefficient forces large sumsets") {
    // Theorem-style end-to-end check: when [x^d] F_0 != 0 mod p, every
    // instance with |A_i| = d_i + 1, |S_ij| = s_ij has |sumset| > N.
    std::mt19937 rng(20240910);
    std::uniform_int_distribution<int> deg(1, 3);
    std::uniform_int_distribution<int> mult(0, 1);
    const long p = 101;
    int tested = 0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + trial % 2;
        std::vector<int> d(n);
        for (auto& x : d) x = deg(rng);
        std::map<std::pair<int, int>, int> s;
        long total_s = 0, total_d = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                int v = mult(rng);
                if (v) s[{i, j}] = v;
                total_s += v;
            }
        for (int x : d) total_d += x;
        long N = total_d - total_s;
        if (N < 0) continue;
        BigRat coeff = f0_coefficient(d, s);
        if (coeff.is_zero()) continue;
        REQUIRE(coeff.is_integer());
        if (mpz_class(coeff.num() % p) == 0) continue;

        std::uniform_int_distribution<long> elem(0, p - 1);
        SumsetInstance inst;
        inst.p = p;
        inst.A.resize(n);
        for (int i = 0; i < n; ++i) {
            std::set<long> chosen;
            while (static_cast<int>(chosen.size()) < d[i] + 1) chosen.insert(elem(rng));
            inst.A[i].assign(chosen.begin(), chosen.end());
        }
        for (const auto& [ij, sij] : s) {
            std::set<long> chosen;
            while (static_cast<int>(chosen.size()) < sij) chosen.insert(elem(rng));
            inst.S[ij].assign(chosen.begin(), chosen.end());
        }
        inst.validate();
        CHECK(static_cast<long>(restricted_sumset(inst).size()) > N);
        ++tested;
    }
    CHECK(tested >= 10);
}

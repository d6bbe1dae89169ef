#include <doctest.h>

#include <random>

#include "ctidlab/bigrat.hpp"
#include "ctidlab/laurent.hpp"
#include "ctidlab/linear_factors.hpp"
#include "ctidlab/qpoly.hpp"

using namespace ctidlab;

namespace {

ExpVec ev(std::initializer_list<int> exps) {
    ExpVec e(exps.size());
    std::size_t i = 0;
    for (int x : exps) e.set(i++, x);
    return e;
}

// Random product of simple factors over <= 3 variables. Factors are of the
// forms x_j - x_i, x_j - x_i - e and x_j - e with small integer shifts.
LinearFactorProduct<BigRat> random_product(std::mt19937& rng, std::size_t nvars,
                                           int max_factors) {
    std::uniform_int_distribution<int> nf(0, max_factors);
    std::uniform_int_distribution<int> var(0, static_cast<int>(nvars) - 1);
    std::uniform_int_distribution<int> shift(-2, 2);
    std::uniform_int_distribution<int> kind(0, 2);
    LinearFactorProduct<BigRat> fp(nvars);
    int count = nf(rng);
    for (int t = 0; t < count; ++t) {
        int j = var(rng), i = var(rng);
        switch (kind(rng)) {
            case 0:
                if (i == j) i = (i + 1) % static_cast<int>(nvars);
                fp.push(LinearFactor<BigRat>::difference(j, i));
                break;
            case 1:
                if (i == j) i = (i + 1) % static_cast<int>(nvars);
                fp.push(LinearFactor<BigRat>::shifted_difference(j, i, BigRat(shift(rng))));
                break;
            default:
                fp.push(LinearFactor<BigRat>::var_minus_const(j, BigRat(shift(rng))));
                break;
        }
    }
    return fp;
}

std::vector<BigRat> random_point(std::mt19937& rng, std::size_t nvars) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<BigRat> pt;
    for (std::size_t i = 0; i < nvars; ++i) pt.emplace_back(num(rng), den(rng));
    return pt;
}

BigRat eval_expanded(const LaurentPoly<BigRat>& p, const std::vector<BigRat>& pt) {
    BigRat total;
    for (const auto& [e, c] : p.terms()) {
        BigRat term = c;
        for (std::size_t v = 0; v < p.nvars(); ++v) {
            int k = e[v];
            BigRat base = k >= 0 ? pt[v] : pt[v].inverse();
            for (int i = 0; i < (k >= 0 ? k : -k); ++i) term *= base;
        }
        total += term;
    }
    return total;
}

} // namespace

TEST_CASE("expand simple products") {
    // (x2 - x1)
    LinearFactorProduct<QPoly> fp(2);
    fp.push(LinearFactor<QPoly>::difference(1, 0));
    LaurentPoly<QPoly> p = fp.expand();
    CHECK(p.coefficient(ev({0, 1})) == QPoly(1));
    CHECK(p.coefficient(ev({1, 0})) == QPoly(-1));
    CHECK(p.term_count() == 2);

    // (x2 - x1)(x1 - q x2) = (1+q) x1 x2 - x1^2 - q x2^2
    fp.push(LinearFactor<QPoly>::scaled_difference(0, QPoly::q_power(1), 1));
    p = fp.expand();
    CHECK(p.coefficient(ev({1, 1})) == QPoly::from_coeffs({1, 1}));
    CHECK(p.coefficient(ev({2, 0})) == QPoly(-1));
    CHECK(p.coefficient(ev({0, 2})) == QPoly::from_coeffs({0, -1}));
    CHECK(p.term_count() == 3);

    LinearFactorProduct<QPoly> empty(3);
    CHECK(empty.expand() == LaurentPoly<QPoly>::constant(3, QPoly(1)));
}

TEST_CASE("coefficient and constant term") {
    // (x1 + x2)^2
    LinearFactorProduct<BigRat> sq(2);
    sq.push(LinearFactor<BigRat>::sum_all_minus(2, BigRat(0)));
    sq.push(LinearFactor<BigRat>::sum_all_minus(2, BigRat(0)));
    LaurentPoly<BigRat> p = sq.expand();
    CHECK(p.coefficient(ev({1, 1})) == BigRat(2));
    CHECK(p.coefficient(ev({2, 0})) == BigRat(1));
    CHECK(p.coefficient(ev({5, 0})) == BigRat(0));

    // CT[(1 - x1/x2)(1 - x2/x1)] = 2
    LaurentPoly<BigRat> f1(2), f2(2);
    f1.add_term(ev({0, 0}), BigRat(1));
    f1.add_term(ev({1, -1}), BigRat(-1));
    f2.add_term(ev({0, 0}), BigRat(1));
    f2.add_term(ev({-1, 1}), BigRat(-1));
    CHECK(f1.multiply(f2).constant_term() == BigRat(2));
    CHECK(LaurentPoly<BigRat>::constant(2, BigRat(1)).constant_term() == BigRat(1));
    CHECK(LaurentPoly<BigRat>::monomial(2, ev({1, -1}), BigRat(1)).constant_term() == BigRat(0));
}

TEST_CASE("constant term is stable under multiplying and dividing by x_i") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly<BigRat> p = random_product(rng, 3, 5).expand();
        LaurentPoly<BigRat> xi = LaurentPoly<BigRat>::monomial(3, ev({1, 0, 0}), BigRat(1));
        LaurentPoly<BigRat> xi_inv = LaurentPoly<BigRat>::monomial(3, ev({-1, 0, 0}), BigRat(1));
        CHECK(p.multiply(xi).multiply(xi_inv).constant_term() == p.constant_term());
    }
}

TEST_CASE("evaluate") {
    LinearFactorProduct<BigRat> fp(2);
    fp.push(LinearFactor<BigRat>::difference(1, 0));
    std::vector<BigRat> pt = {BigRat(1), BigRat(1)};
    CHECK(fp.evaluate(pt).is_zero());

    // prod_{e=-1}^{0} (x1 - x0 - e) at (0, 1) -> 2 * 1 = 2
    LinearFactorProduct<BigRat> m(2);
    for (int e = -1; e <= 0; ++e)
        m.push(LinearFactor<BigRat>::shifted_difference(1, 0, BigRat(e)));
    std::vector<BigRat> pt2 = {BigRat(0), BigRat(1)};
    CHECK(m.evaluate(pt2) == BigRat(2));

    LinearFactorProduct<BigRat> empty(2);
    CHECK(empty.evaluate(pt) == BigRat(1));
}

TEST_CASE("expand agrees with evaluate on random products") {
    std::mt19937 rng(20240902);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t nvars = 1 + trial % 3;
        LinearFactorProduct<BigRat> fp = random_product(rng, nvars, 6);
        std::vector<BigRat> pt = random_point(rng, nvars);
        CHECK(eval_expanded(fp.expand(), pt) == fp.evaluate(pt));
    }
}

TEST_CASE("jet_evaluate") {
    // d^2/dx^2 (x-1)^2 = 2 at x = 1
    LinearFactorProduct<BigRat> sq(1);
    sq.push(LinearFactor<BigRat>::var_minus_const(0, BigRat(1)));
    sq.push(LinearFactor<BigRat>::var_minus_const(0, BigRat(1)));
    std::vector<BigRat> at_one = {BigRat(1)};
    std::vector<int> two = {2};
    CHECK(sq.jet_evaluate(at_one, two) == BigRat(2));

    std::vector<int> zero = {0};
    CHECK(sq.jet_evaluate(at_one, zero) == sq.evaluate(at_one));

    LinearFactorProduct<BigRat> lin(1);
    lin.push(LinearFactor<BigRat>::var_minus_const(0, BigRat(1)));
    CHECK(lin.jet_evaluate(at_one, two).is_zero());
}

TEST_CASE("first-order jets match difference quotients") {
    // For each variable, reconstruct the value of the difference quotient
    // (F(c + h e_i) - F(c))/h at h = 0 by exact Lagrange extrapolation from
    // deg(F) integer samples; that limit is the partial derivative.
    std::mt19937 rng(20240903);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t nvars = 1 + trial % 3;
        LinearFactorProduct<BigRat> fp = random_product(rng, nvars, 5);
        std::vector<BigRat> c = random_point(rng, nvars);
        for (std::size_t i = 0; i < nvars; ++i) {
            std::vector<int> orders(nvars, 0);
            orders[i] = 1;
            BigRat jet = fp.jet_evaluate(c, orders);

            int samples = static_cast<int>(fp.degree());
            if (samples == 0) {
                CHECK(jet.is_zero());
                continue;
            }
            // D(h) = (F(c + h e_i) - F(c))/h is a polynomial of degree
            // deg(F) - 1 in h; extrapolate D to h = 0 from integer nodes.
            BigRat f0 = fp.evaluate(c);
            BigRat limit;
            for (int a = 1; a <= samples; ++a) {
                std::vector<BigRat> pt = c;
                pt[i] += BigRat(a);
                BigRat da = (fp.evaluate(pt) - f0) / BigRat(a);
                BigRat weight(1);
                for (int b = 1; b <= samples; ++b) {
                    if (b == a) continue;
                    weight *= BigRat(-b, a - b);
                }
                limit += da * weight;
            }
            CHECK(jet == limit);
        }
    }
}

TEST_CASE("term budget") {
    Budget tiny(10);
    LinearFactorProduct<BigRat> fp(3);
    for (int t = 0; t < 12; ++t) fp.push(LinearFactor<BigRat>::sum_all_minus(3, BigRat(t)));
    CHECK_THROWS_AS(fp.expand(tiny), SizeLimit);
}

TEST_CASE("coefficient_of_product matches full expansion") {
    std::mt19937 rng(20240904);
    std::uniform_int_distribution<int> target_exp(-2, 3);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t nvars = 1 + trial % 3;
        LinearFactorProduct<BigRat> fp = random_product(rng, nvars, 6);
        std::vector<LaurentPoly<BigRat>> factors;
        for (const auto& f : fp.factors) factors.push_back(f.to_laurent(nvars));
        LaurentPoly<BigRat> full = fp.expand();
        ExpVec target(nvars);
        for (std::size_t v = 0; v < nvars; ++v) target.set(v, target_exp(rng));
        CHECK(coefficient_of_product(nvars, factors, target) == full.coefficient(target));
    }
}

#include <numeric>

#include "ctidlab/identities.hpp"

namespace ctidlab {

namespace {

int vec_sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

unsigned u(int x) {
    if (x < 0) throw BadParams("negative q-factorial index");
    return static_cast<unsigned>(x);
}

// ---- plain (q = 1) product formulas ----

BigRat morris_rhs(int n, int a, int b, int k) {
    BigRat r(1);
    for (int j = 0; j < n; ++j) {
        BigRat t = BigRat(mpz_class(factorial(u(a + b + k * j)) * factorial(u(k * j + k))));
        t /= BigRat(mpz_class(factorial(u(a + k * j)) * factorial(u(b + k * j)) * factorial(u(k))));
        r *= t;
    }
    return r;
}

BigRat aomoto_rhs(int n, int m, int a, int b, int k) {
    BigRat r(1);
    for (int j = 0; j < n; ++j) {
        int chi = j >= n - m ? 1 : 0;
        BigRat t = BigRat(mpz_class(factorial(u(a + b + k * j + chi)) * factorial(u(k * j + k))));
        t /= BigRat(mpz_class(factorial(u(a + k * j + chi)) * factorial(u(b + k * j)) * factorial(u(k))));
        r *= t;
    }
    return r;
}

BigRat forrester_rhs(int n, int n0, int a, int b, int k) {
    BigRat r = morris_rhs(n0, a, b, k);
    for (int j = 0; j < n - n0; ++j) {
        int base = k * n0 + (k + 1) * j;
        BigRat t = BigRat(mpz_class(mpz_class(j + 1) * factorial(u(a + b + base)) * factorial(u(base + k))));
        t /= BigRat(mpz_class(factorial(u(a + base)) * factorial(u(b + base)) * factorial(u(k))));
        r *= t;
    }
    return r;
}

// ---- q product formulas ----

QPoly q_morris_rhs(int n, int a, int b, int k) {
    QPoly num(1), den(1);
    for (int j = 0; j < n; ++j) {
        num = num * q_pochhammer(u(a + b + k * j)) * q_pochhammer(u(k * j + k));
        den = den * q_pochhammer(u(a + k * j)) * q_pochhammer(u(b + k * j)) * q_pochhammer(u(k));
    }
    return QPoly::exact_div(num, den);
}

QPoly q_aomoto_rhs(int n, int m, int a, int b, int k) {
    QPoly num(1), den(1);
    for (int j = 0; j < n; ++j) {
        int chi = j >= n - m ? 1 : 0;
        num = num * q_pochhammer(u(a + b + k * j + chi)) * q_pochhammer(u(k * j + k));
        den = den * q_pochhammer(u(a + k * j + chi)) * q_pochhammer(u(b + k * j)) *
              q_pochhammer(u(k));
    }
    return QPoly::exact_div(num, den);
}

QPoly aomoto_forrester_rhs(int n, int n0, int m, int a, int b, int k) {
    QPoly num(1), den(1);
    for (int j = 0; j < n; ++j) {
        int shift = j > n0 ? j - n0 : 0;
        int chi = j >= n - m ? 1 : 0;
        num = num * q_pochhammer(u(a + b + k * j + shift + chi)) *
              q_pochhammer(u(k * j + shift + k));
        den = den * q_pochhammer(u(a + k * j + shift + chi)) *
              q_pochhammer(u(b + k * j + shift)) * q_pochhammer(u(k));
    }
    for (int j = 1; j <= n - n0; ++j) {
        num = num * (QPoly(1) - QPoly::q_power(u((k + 1) * j)));
        den = den * (QPoly(1) - QPoly::q_power(u(k + 1)));
    }
    return QPoly::exact_div(num, den);
}

QPoly kadell_main_rhs(int m, const std::vector<int>& avec) {
    int n = static_cast<int>(avec.size());
    int total = vec_sum(avec);
    int tail = 0;
    for (int v = m; v < n; ++v) tail += avec[v];
    QPoly num = (QPoly(1) - QPoly::q_power(u(1 + total))) * q_pochhammer(u(total));
    QPoly den = QPoly(1) - QPoly::q_power(u(1 + tail));
    for (int ai : avec) den = den * q_pochhammer(u(ai));
    return QPoly::exact_div(num, den);
}

} // namespace

BigRat kadell_corollary_rhs(const std::vector<int>& avec, const std::set<int>& M) {
    int n = static_cast<int>(avec.size());
    int total = vec_sum(avec);
    int outside = 0;
    for (int v = 1; v <= n; ++v)
        if (!M.count(v)) outside += avec[v - 1];
    BigRat r(multinomial(avec));
    r *= BigRat(1 + total, 1 + outside);
    return r;
}

Value rhs(Family f, const CaseParams& p) {
    switch (f) {
        case Family::dyson:
            return BigRat(multinomial(p.avec));
        case Family::q_dyson:
            return q_multinomial(p.avec);
        case Family::morris:
            return morris_rhs(p.n, p.a, p.b, p.k);
        case Family::q_morris:
            return q_morris_rhs(p.n, p.a, p.b, p.k);
        case Family::aomoto:
            return aomoto_rhs(p.n, p.m, p.a, p.b, p.k);
        case Family::q_aomoto:
            return q_aomoto_rhs(p.n, p.m, p.a, p.b, p.k);
        case Family::forrester:
            return forrester_rhs(p.n, p.n0, p.a, p.b, p.k);
        case Family::q_forrester:
            return aomoto_forrester_rhs(p.n, p.n0, 0, p.a, p.b, p.k);
        case Family::aomoto_forrester:
            return aomoto_forrester_rhs(p.n, p.n0, p.m, p.a, p.b, p.k);
        case Family::kadell_main:
            return kadell_main_rhs(p.m, p.avec);
        case Family::kadell_corollary: {
            std::set<int> M;
            for (int v = 1; v <= p.m; ++v) M.insert(v);
            return kadell_corollary_rhs(p.avec, M);
        }
        case Family::kadell_sum: {
            int n = static_cast<int>(p.avec.size());
            int total = vec_sum(p.avec);
            BigRat r(multinomial(p.avec));
            r *= BigRat(mpz_class(mpz_class(n) * binomial(u(n - 1), u(p.m)) * (1 + total)));
            return r;
        }
        case Family::sills: {
            int total = vec_sum(p.avec);
            int as = p.avec[p.s - 1];
            BigRat r(multinomial(p.avec));
            r *= BigRat(-as, 1 + total - as);
            return r;
        }
        case Family::xin:
        case Family::xin_hr:
            return BigRat(multinomial(p.avec));
    }
    throw BadParams("unknown family");
}

} // namespace ctidlab

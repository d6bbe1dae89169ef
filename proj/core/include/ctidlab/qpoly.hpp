#ifndef CTIDLAB_QPOLY_HPP
#define CTIDLAB_QPOLY_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "ctidlab/bigrat.hpp"
#include "ctidlab/errors.hpp"

namespace ctidlab {

/// Dense polynomial in q with arbitrary-precision integer coefficients.
/// Coefficients are stored ascending by degree; the representation is
/// normalized so the highest stored coefficient is nonzero (zero = empty).
class QPoly {
public:
    QPoly() = default;
    QPoly(int c) : QPoly(mpz_class(c)) {}
    QPoly(long c) : QPoly(mpz_class(c)) {}
    QPoly(const mpz_class& c) {
        if (c != 0) c_.push_back(c);
    }

    static QPoly from_coeffs(std::vector<mpz_class> coeffs);
    /// coeff * q^deg
    static QPoly monomial(const mpz_class& coeff, std::size_t deg);
    static QPoly q_power(std::size_t t) { return monomial(1, t); }

    bool is_zero() const { return c_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    const mpz_class& leading() const;
    bool is_monomial() const;
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o) { *this = *this * o; return *this; }
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);

    /// this += a * b, without temporaries in the inner loop.
    void addmul(const QPoly& a, const QPoly& b);
    /// this += sign * c * a * q^shift
    void addmul_monomial(const QPoly& a, const mpz_class& c, std::size_t shift);

    QPoly mul_scalar(const mpz_class& c) const;

    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const QPoly& a, const QPoly& b) { return a.c_ != b.c_; }

    /// Exact division; throws NonDivisible if den does not divide num.
    static QPoly exact_div(const QPoly& num, const QPoly& den);

    /// gcd of all coefficients, positive; 0 for the zero polynomial.
    mpz_class content() const;
    QPoly primitive_part() const;
    /// Polynomial gcd over Z[q] via primitive pseudo-remainder sequences,
    /// contents handled separately. Normalized to positive leading coefficient.
    static QPoly gcd(QPoly a, QPoly b);

    BigRat evaluate(const BigRat& x) const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const QPoly& p);

private:
    void normalize();
    std::vector<mpz_class> c_;
};

std::ostream& operator<<(std::ostream& os, const QPoly& p);

// ---- q-combinatorial building blocks ----

/// (q)_k = (1-q)(1-q^2)...(1-q^k)
QPoly q_pochhammer(unsigned k);
/// (q^a)_k = prod_{i=0}^{k-1} (1 - q^{a+i})
QPoly q_shifted_pochhammer(unsigned a, unsigned k);
/// [u,v]_q = (1-q^u)(1-q^{u+1})...(1-q^v); empty product (v < u) is 1.
QPoly q_range(unsigned u, long v);
/// Gaussian multinomial (q)_{|a|} / prod (q)_{a_i}.
QPoly q_multinomial(const std::vector<int>& a);
/// Sum of coefficients.
BigRat eval_at_one(const QPoly& p);

} // namespace ctidlab

#endif

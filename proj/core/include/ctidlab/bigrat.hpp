#ifndef CTIDLAB_BIGRAT_HPP
#define CTIDLAB_BIGRAT_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "ctidlab/errors.hpp"

namespace ctidlab {

/// Arbitrary-precision rational, always reduced, denominator > 0.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(int n) : v_(n) {}
    BigRat(long n) : v_(static_cast<long>(n)) {}
    BigRat(const mpz_class& n) : v_(n) {}
    BigRat(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw BadParams("BigRat: zero denominator");
        v_.canonicalize();
    }
    BigRat(long num, long den) : BigRat(mpz_class(num), mpz_class(den)) {}

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRat operator-() const { return BigRat(mpq_class(-v_)); }
    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw BadParams("BigRat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    BigRat inverse() const {
        if (is_zero()) throw BadParams("BigRat: inverse of zero");
        return BigRat(mpq_class(1 / v_));
    }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }

    /// "7", "-3/2"
    std::string to_string() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const BigRat& r);

private:
    explicit BigRat(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const BigRat& r);

// ---- integer combinatorics helpers ----
mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);
/// |a|! / (a_1! ... a_n!)
mpz_class multinomial(const std::vector<int>& a);

} // namespace ctidlab

#endif

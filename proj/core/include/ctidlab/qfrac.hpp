#ifndef CTIDLAB_QFRAC_HPP
#define CTIDLAB_QFRAC_HPP

#include <iosfwd>
#include <string>

#include "ctidlab/qpoly.hpp"

namespace ctidlab {

/// Element of Q(q) as a reduced ratio of integer polynomials:
/// gcd(num, den) = 1 and den has positive leading coefficient.
class QFrac {
public:
    QFrac() : num_(), den_(1) {}
    QFrac(int c) : num_(c), den_(1) {}
    QFrac(long c) : num_(c), den_(1) {}
    QFrac(QPoly p) : num_(std::move(p)), den_(1) {}
    QFrac(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw BadParams("QFrac: zero denominator");
        reduce();
    }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    /// Throws NonDivisible unless the reduced denominator is 1.
    QPoly as_polynomial() const {
        if (!is_polynomial()) throw NonDivisible("QFrac: not a polynomial: " + to_string());
        return num_;
    }

    QFrac operator-() const;
    QFrac& operator+=(const QFrac& o) { *this = *this + o; return *this; }
    QFrac& operator-=(const QFrac& o) { *this = *this - o; return *this; }
    QFrac& operator*=(const QFrac& o) { *this = *this * o; return *this; }
    QFrac& operator/=(const QFrac& o) { *this = *this / o; return *this; }
    friend QFrac operator+(const QFrac& a, const QFrac& b);
    friend QFrac operator-(const QFrac& a, const QFrac& b);
    friend QFrac operator*(const QFrac& a, const QFrac& b);
    friend QFrac operator/(const QFrac& a, const QFrac& b);
    QFrac inverse() const;

    friend bool operator==(const QFrac& a, const QFrac& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const QFrac& a, const QFrac& b) { return !(a == b); }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const QFrac& f);

private:
    void reduce();
    QPoly num_, den_;
};

std::ostream& operator<<(std::ostream& os, const QFrac& f);

} // namespace ctidlab

#endif

#ifndef CTIDLAB_QSUM_HPP
#define CTIDLAB_QSUM_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "ctidlab/bigrat.hpp"
#include "ctidlab/qfrac.hpp"
#include "ctidlab/qpoly.hpp"

namespace ctidlab {

/// Element of Q(q) kept in partially factored form:
///
///     rat * poly * q^qpow * prod_v (1 - q^v)^{cyc[v]}
///
/// with integer exponents (negative = denominator). Products, and inverses
/// of pure products, never expand anything, so grid evaluations over powers
/// of q stay cheap and exact. Sums expand only the non-shared residual.
/// Differences of two pure q-monomials refactor as q^u - q^w =
/// -q^min (1 - q^|u-w|) * ..., which keeps node-difference products pure.
class QSum {
public:
    QSum() = default;
    QSum(int c) : QSum(BigRat(c)) {}
    QSum(long c) : QSum(BigRat(c)) {}
    QSum(const BigRat& r) : rat_(r), poly_(1) {
        if (rat_.is_zero()) *this = QSum::zero();
    }

    static QSum zero() { return QSum(ZeroTag{}); }
    static QSum q_power(long t);
    /// (1 - q^v)^e, v >= 1.
    static QSum one_minus_q_power(long v, long e = 1);
    static QSum from_qpoly(const QPoly& p);

    bool is_zero() const { return rat_.is_zero(); }
    /// True when the expanded-part is trivial, i.e. the value is a pure
    /// product rat * q^qpow * prod (1-q^v)^e. Pure values are invertible.
    bool is_pure() const { return poly_.is_one(); }

    QSum operator-() const;
    QSum& operator+=(const QSum& o) { *this = *this + o; return *this; }
    QSum& operator-=(const QSum& o) { *this = *this + (-o); return *this; }
    QSum& operator*=(const QSum& o) { *this = *this * o; return *this; }
    friend QSum operator+(const QSum& a, const QSum& b);
    friend QSum operator-(const QSum& a, const QSum& b) { return a + (-b); }
    friend QSum operator*(const QSum& a, const QSum& b);

    /// Requires a pure value (throws Error otherwise).
    QSum inverse() const;

    friend bool operator==(const QSum& a, const QSum& b);
    friend bool operator!=(const QSum& a, const QSum& b) { return !(a == b); }

    /// Expand and divide out the denominator; throws NonDivisible if the
    /// value is not a polynomial in q.
    QPoly to_qpoly() const;
    QFrac to_qfrac() const;

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const QSum& s);

private:
    struct ZeroTag {};
    explicit QSum(ZeroTag) : rat_(0), poly_(1) {}

    void fold_poly();

    BigRat rat_ = BigRat(0);
    QPoly poly_ = QPoly(1);
    long qpow_ = 0;
    std::map<long, long> cyc_;
};

std::ostream& operator<<(std::ostream& os, const QSum& s);

} // namespace ctidlab

#endif

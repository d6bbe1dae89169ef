#include "ctidlab/qfrac.hpp"

#include <ostream>

namespace ctidlab {

void QFrac::reduce() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    QPoly g = QPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = QPoly::exact_div(num_, g);
        den_ = QPoly::exact_div(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QFrac QFrac::operator-() const {
    QFrac r = *this;
    r.num_ = -r.num_;
    return r;
}

QFrac operator+(const QFrac& a, const QFrac& b) {
    return QFrac(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QFrac operator-(const QFrac& a, const QFrac& b) {
    return QFrac(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QFrac operator*(const QFrac& a, const QFrac& b) {
    return QFrac(a.num_ * b.num_, a.den_ * b.den_);
}

QFrac operator/(const QFrac& a, const QFrac& b) {
    if (b.is_zero()) throw BadParams("QFrac: division by zero");
    return QFrac(a.num_ * b.den_, a.den_ * b.num_);
}

QFrac QFrac::inverse() const {
    if (is_zero()) throw BadParams("QFrac: inverse of zero");
    return QFrac(den_, num_);
}

std::string QFrac::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const QFrac& f) {
    return os << f.to_string();
}

} // namespace ctidlab

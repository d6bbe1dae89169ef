#include "ctidlab/qsum.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ctidlab {

QSum QSum::q_power(long t) {
    QSum s(1);
    s.qpow_ = t;
    return s;
}

QSum QSum::one_minus_q_power(long v, long e) {
    if (v < 1) throw BadParams("QSum: (1-q^v) needs v >= 1");
    QSum s(1);
    if (e != 0) s.cyc_[v] = e;
    return s;
}

// Keep poly_ primitive with positive leading coefficient; fold monomials
// into (rat_, qpow_).
void QSum::fold_poly() {
    if (poly_.is_zero()) {
        *this = zero();
        return;
    }
    if (poly_.is_one()) return;
    mpz_class g = poly_.content();
    if (poly_.leading() < 0) g = -g;
    if (g != 1) {
        rat_ *= BigRat(g);
        poly_ = QPoly::exact_div(poly_, QPoly(g));
    }
    if (poly_.is_monomial()) {
        qpow_ += poly_.degree();
        poly_ = QPoly(1);
    }
}

QSum QSum::from_qpoly(const QPoly& p) {
    if (p.is_zero()) return zero();
    QSum s(1);
    s.poly_ = p;
    s.fold_poly();
    return s;
}

QSum QSum::operator-() const {
    if (is_zero()) return *this;
    QSum r = *this;
    r.rat_ = -r.rat_;
    return r;
}

QSum operator*(const QSum& a, const QSum& b) {
    if (a.is_zero() || b.is_zero()) return QSum::zero();
    QSum r;
    r.rat_ = a.rat_ * b.rat_;
    r.qpow_ = a.qpow_ + b.qpow_;
    r.cyc_ = a.cyc_;
    for (const auto& [v, e] : b.cyc_) {
        long& x = r.cyc_[v];
        x += e;
        if (x == 0) r.cyc_.erase(v);
    }
    if (a.poly_.is_one())
        r.poly_ = b.poly_;
    else if (b.poly_.is_one())
        r.poly_ = a.poly_;
    else
        r.poly_ = a.poly_ * b.poly_;
    r.fold_poly();
    return r;
}

QSum operator+(const QSum& a, const QSum& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;

    // Pure fast paths; these keep node-difference atoms factored.
    if (a.poly_.is_one() && b.poly_.is_one() && a.cyc_ == b.cyc_) {
        if (a.qpow_ == b.qpow_) {
            QSum r = a;
            r.rat_ = a.rat_ + b.rat_;
            if (r.rat_.is_zero()) return QSum::zero();
            return r;
        }
        if (a.rat_ == -b.rat_) {
            // r*q^u - r*q^w = r * q^min(u,w) * (1 - q^|u-w|) taking r from
            // the operand holding the smaller power of q.
            const QSum& lo = (a.qpow_ < b.qpow_) ? a : b;
            const QSum& hi = (a.qpow_ < b.qpow_) ? b : a;
            QSum r = lo;
            long diff = hi.qpow_ - lo.qpow_;
            ++r.cyc_[diff];
            if (r.cyc_[diff] == 0) r.cyc_.erase(diff);
            return r;
        }
    }

    // General case: share the common factored part, expand residuals.
    long qp = std::min(a.qpow_, b.qpow_);
    std::map<long, long> cy;
    for (const auto& [v, e] : a.cyc_) {
        auto it = b.cyc_.find(v);
        long m = std::min(e, it == b.cyc_.end() ? 0L : it->second);
        if (m != 0) cy[v] = m;
    }
    for (const auto& [v, e] : b.cyc_) {
        if (a.cyc_.count(v)) continue;
        long m = std::min(0L, e);
        if (m != 0) cy[v] = m;
    }
    auto residual = [&](const QSum& x) {
        QPoly r = x.poly_;
        r = r * QPoly::q_power(static_cast<std::size_t>(x.qpow_ - qp));
        for (const auto& [v, e] : x.cyc_) {
            auto it = cy.find(v);
            long rem = e - (it == cy.end() ? 0L : it->second);
            for (long i = 0; i < rem; ++i)
                r = r * (QPoly(1) - QPoly::q_power(static_cast<std::size_t>(v)));
        }
        return r;
    };
    QPoly ra = residual(a), rb = residual(b);
    mpz_class da = a.rat_.den(), db = b.rat_.den();
    mpz_class d;
    mpz_lcm(d.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    QPoly sum = ra.mul_scalar(a.rat_.num() * (d / da));
    sum += rb.mul_scalar(b.rat_.num() * (d / db));
    if (sum.is_zero()) return QSum::zero();
    QSum r;
    r.rat_ = BigRat(mpz_class(1), d);
    r.poly_ = std::move(sum);
    r.qpow_ = qp;
    r.cyc_ = std::move(cy);
    r.fold_poly();
    return r;
}

QSum QSum::inverse() const {
    if (is_zero()) throw BadParams("QSum: inverse of zero");
    if (!is_pure())
        throw Error("QSum: inverse of a non-pure value: " + to_string());
    QSum r;
    r.rat_ = rat_.inverse();
    r.poly_ = QPoly(1);
    r.qpow_ = -qpow_;
    for (const auto& [v, e] : cyc_) r.cyc_[v] = -e;
    return r;
}

bool operator==(const QSum& a, const QSum& b) {
    if (a.rat_ == b.rat_ && a.qpow_ == b.qpow_ && a.cyc_ == b.cyc_ && a.poly_ == b.poly_)
        return true;
    return (a - b).is_zero();
}

QPoly QSum::to_qpoly() const {
    if (is_zero()) return QPoly();
    QPoly num = poly_;
    QPoly den(1);
    if (qpow_ > 0)
        num = num * QPoly::q_power(static_cast<std::size_t>(qpow_));
    else if (qpow_ < 0)
        den = den * QPoly::q_power(static_cast<std::size_t>(-qpow_));
    for (const auto& [v, e] : cyc_) {
        QPoly f = QPoly(1) - QPoly::q_power(static_cast<std::size_t>(v));
        for (long i = 0; i < (e > 0 ? e : -e); ++i) {
            if (e > 0)
                num = num * f;
            else
                den = den * f;
        }
    }
    num = num.mul_scalar(rat_.num());
    QPoly quot = QPoly::exact_div(num, den);
    if (rat_.den() != 1) {
        std::vector<mpz_class> cs = quot.coeffs();
        for (auto& c : cs) {
            if (!mpz_divisible_p(c.get_mpz_t(), rat_.den().get_mpz_t()))
                throw NonDivisible("QSum: value is not an integer polynomial");
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), rat_.den().get_mpz_t());
        }
        quot = QPoly::from_coeffs(std::move(cs));
    }
    return quot;
}

QFrac QSum::to_qfrac() const {
    if (is_zero()) return QFrac();
    QPoly num = poly_.mul_scalar(rat_.num());
    QPoly den = QPoly(mpz_class(rat_.den()));
    if (qpow_ > 0)
        num = num * QPoly::q_power(static_cast<std::size_t>(qpow_));
    else if (qpow_ < 0)
        den = den * QPoly::q_power(static_cast<std::size_t>(-qpow_));
    for (const auto& [v, e] : cyc_) {
        QPoly f = QPoly(1) - QPoly::q_power(static_cast<std::size_t>(v));
        for (long i = 0; i < (e > 0 ? e : -e); ++i) {
            if (e > 0)
                num = num * f;
            else
                den = den * f;
        }
    }
    return QFrac(std::move(num), std::move(den));
}

std::string QSum::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    os << rat_.to_string();
    if (!poly_.is_one()) os << " * (" << poly_.to_string() << ")";
    if (qpow_ != 0) os << " * q^" << qpow_;
    for (const auto& [v, e] : cyc_)
        os << " * (1-q^" << v << ")^" << e;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSum& s) {
    return os << s.to_string();
}

} // namespace ctidlab

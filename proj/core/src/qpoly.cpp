#include "ctidlab/qpoly.hpp"

#include <ostream>
#include <sstream>

namespace ctidlab {

namespace {
const mpz_class kZero = 0;
}

void QPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::from_coeffs(std::vector<mpz_class> coeffs) {
    QPoly p;
    p.c_ = std::move(coeffs);
    p.normalize();
    return p;
}

QPoly QPoly::monomial(const mpz_class& coeff, std::size_t deg) {
    QPoly p;
    if (coeff != 0) {
        p.c_.assign(deg + 1, kZero);
        p.c_[deg] = coeff;
    }
    return p;
}

const mpz_class& QPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const mpz_class& QPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

bool QPoly::is_monomial() const {
    if (c_.empty()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.addmul(a, b);
    return r;
}

void QPoly::addmul(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    std::size_t n = a.c_.size() + b.c_.size() - 1;
    if (c_.size() < n) c_.resize(n, kZero);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            mpz_addmul(c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    normalize();
}

void QPoly::addmul_monomial(const QPoly& a, const mpz_class& c, std::size_t shift) {
    if (a.is_zero() || c == 0) return;
    std::size_t n = a.c_.size() + shift;
    if (c_.size() < n) c_.resize(n, kZero);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        mpz_addmul(c_[i + shift].get_mpz_t(), a.c_[i].get_mpz_t(), c.get_mpz_t());
    normalize();
}

QPoly QPoly::mul_scalar(const mpz_class& c) const {
    if (c == 0) return QPoly();
    QPoly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

QPoly QPoly::exact_div(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw BadParams("exact_div: zero divisor");
    if (num.is_zero()) return QPoly();
    if (num.c_.size() < den.c_.size())
        throw NonDivisible("exact_div: degree of numerator below divisor");
    std::vector<mpz_class> rem = num.c_;
    std::size_t dd = den.c_.size() - 1;
    std::vector<mpz_class> quot(rem.size() - dd, kZero);
    mpz_class t;
    for (std::size_t i = quot.size(); i-- > 0;) {
        mpz_class& top = rem[i + dd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), den.c_.back().get_mpz_t()))
            throw NonDivisible("exact_div: leading coefficient not divisible");
        mpz_divexact(quot[i].get_mpz_t(), top.get_mpz_t(), den.c_.back().get_mpz_t());
        for (std::size_t j = 0; j <= dd; ++j)
            mpz_submul(rem[i + j].get_mpz_t(), quot[i].get_mpz_t(), den.c_[j].get_mpz_t());
    }
    for (const auto& r : rem)
        if (r != 0) throw NonDivisible("exact_div: nonzero remainder");
    return from_coeffs(std::move(quot));
}

mpz_class QPoly::content() const {
    mpz_class g = 0;
    for (const auto& c : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

QPoly QPoly::primitive_part() const {
    if (is_zero()) return QPoly();
    mpz_class g = content();
    if (leading() < 0) g = -g;
    QPoly r = *this;
    for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

namespace {

// Pseudo-remainder of a by b: rem(lc(b)^(da-db+1) * a, b) over Z[q].
QPoly pseudo_rem(const QPoly& a, const QPoly& b) {
    std::vector<mpz_class> rem(a.coeffs());
    const std::vector<mpz_class>& d = b.coeffs();
    std::size_t dd = d.size() - 1;
    const mpz_class& lead = d.back();
    while (rem.size() >= d.size()) {
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        if (rem.size() < d.size()) break;
        mpz_class top = rem.back();
        std::size_t shift = rem.size() - d.size();
        // rem = lead*rem - top*q^shift*d
        for (auto& c : rem) c *= lead;
        for (std::size_t j = 0; j <= dd; ++j)
            mpz_submul(rem[shift + j].get_mpz_t(), top.get_mpz_t(), d[j].get_mpz_t());
    }
    return QPoly::from_coeffs(std::move(rem));
}

} // namespace

QPoly QPoly::gcd(QPoly a, QPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part().mul_scalar(b.content());
    if (b.is_zero()) return a.primitive_part().mul_scalar(a.content());
    mpz_class ga = a.content(), gb = b.content();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), ga.get_mpz_t(), gb.get_mpz_t());
    QPoly A = a.primitive_part();
    QPoly B = b.primitive_part();
    if (A.degree() < B.degree()) std::swap(A, B);
    while (!B.is_zero()) {
        QPoly R = pseudo_rem(A, B).primitive_part();
        A = std::move(B);
        B = std::move(R);
    }
    return A.mul_scalar(g);
}

BigRat QPoly::evaluate(const BigRat& x) const {
    BigRat acc;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += BigRat(c_[i]);
    }
    return acc;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpz_class c = c_[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (i == 0 || c != 1) os << c.get_str();
        if (i > 0) {
            if (c != 1) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const QPoly& p) {
    return os << p.to_string();
}

// ---- q-combinatorial building blocks ----

QPoly q_shifted_pochhammer(unsigned a, unsigned k) {
    QPoly r(1);
    for (unsigned i = 0; i < k; ++i) {
        QPoly f = QPoly(1) - QPoly::q_power(a + i);
        r = r * f;
    }
    return r;
}

QPoly q_pochhammer(unsigned k) { return q_shifted_pochhammer(1, k); }

QPoly q_range(unsigned u, long v) {
    if (u < 1) throw BadParams("q_range: u must be positive");
    QPoly r(1);
    for (long e = u; e <= v; ++e)
        r = r * (QPoly(1) - QPoly::q_power(static_cast<std::size_t>(e)));
    return r;
}

QPoly q_multinomial(const std::vector<int>& a) {
    unsigned total = 0;
    for (int ai : a) {
        if (ai < 0) throw BadParams("q_multinomial: negative part");
        total += static_cast<unsigned>(ai);
    }
    QPoly num = q_pochhammer(total);
    for (int ai : a)
        num = QPoly::exact_div(num, q_pochhammer(static_cast<unsigned>(ai)));
    return num;
}

BigRat eval_at_one(const QPoly& p) {
    mpz_class s = 0;
    for (const auto& c : p.coeffs()) s += c;
    return BigRat(s);
}

} // namespace ctidlab

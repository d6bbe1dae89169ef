#ifndef CTIDLAB_EXPVEC_HPP
#define CTIDLAB_EXPVEC_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>

#include "ctidlab/errors.hpp"

namespace ctidlab {

/// Exponent vector of a Laurent monomial: fixed-capacity array of 16-bit
/// signed entries. Capacity 8 covers every family at desk scale.
class ExpVec {
public:
    static constexpr std::size_t kMaxVars = 8;

    ExpVec() = default;
    explicit ExpVec(std::size_t n) : n_(static_cast<std::uint8_t>(n)) {
        if (n > kMaxVars) throw BadParams("ExpVec: too many variables");
    }

    std::size_t size() const { return n_; }
    int operator[](std::size_t i) const { return e_[i]; }
    void set(std::size_t i, int v) {
        if (v < INT16_MIN || v > INT16_MAX)
            throw BadParams("ExpVec: exponent out of 16-bit range");
        e_[i] = static_cast<std::int16_t>(v);
    }
    void add(std::size_t i, int v) { set(i, e_[i] + v); }

    ExpVec plus(const ExpVec& o) const {
        ExpVec r(n_);
        for (std::size_t i = 0; i < n_; ++i) r.set(i, e_[i] + o.e_[i]);
        return r;
    }

    bool is_zero() const {
        for (std::size_t i = 0; i < n_; ++i)
            if (e_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const ExpVec& a, const ExpVec& b) {
        if (a.n_ != b.n_) return false;
        for (std::size_t i = 0; i < a.n_; ++i)
            if (a.e_[i] != b.e_[i]) return false;
        return true;
    }
    /// Lexicographic, for canonical serialization order.
    friend bool operator<(const ExpVec& a, const ExpVec& b) {
        for (std::size_t i = 0; i < a.n_ && i < b.n_; ++i)
            if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i];
        return a.n_ < b.n_;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < n_; ++i) {
            if (i) s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

private:
    std::array<std::int16_t, kMaxVars> e_{};
    std::uint8_t n_ = 0;
};

struct ExpVecHash {
    std::size_t operator()(const ExpVec& e) const {
        std::size_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < e.size(); ++i) {
            h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(e[i]));
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace ctidlab

#endif

#ifndef CTIDLAB_LAURENT_HPP
#define CTIDLAB_LAURENT_HPP

#include <algorithm>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ctidlab/budget.hpp"
#include "ctidlab/errors.hpp"
#include "ctidlab/expvec.hpp"
#include "ctidlab/qpoly.hpp"

namespace ctidlab {

// acc += a*b; QPoly overrides this with an allocation-free accumulate.
template <class S>
inline void muladd(S& acc, const S& a, const S& b) {
    acc += a * b;
}

inline void muladd(QPoly& acc, const QPoly& a, const QPoly& b) { acc.addmul(a, b); }

/// Sparse multivariate Laurent polynomial over an exact scalar ring.
/// No zero coefficients are stored.
template <class S>
class LaurentPoly {
public:
    using TermMap = std::unordered_map<ExpVec, S, ExpVecHash>;

    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, S c) {
        LaurentPoly p(nvars);
        p.add_term(ExpVec(nvars), std::move(c));
        return p;
    }
    static LaurentPoly monomial(std::size_t nvars, const ExpVec& e, S c) {
        LaurentPoly p(nvars);
        p.add_term(e, std::move(c));
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const ExpVec& e, S c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(e, std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// terms[e] += a*b without a temporary when the slot already exists.
    void add_mul_term(const ExpVec& e, const S& a, const S& b) {
        auto [it, inserted] = terms_.try_emplace(e, S());
        muladd(it->second, a, b);
        if (it->second.is_zero()) terms_.erase(it);
    }

    S coefficient(const ExpVec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? S() : it->second;
    }

    S constant_term() const { return coefficient(ExpVec(nvars_)); }

    LaurentPoly multiply(const LaurentPoly& o, const Budget& budget = Budget::unlimited()) const {
        LaurentPoly r(nvars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_)
                r.add_mul_term(ea.plus(eb), ca, cb);
            budget.note_terms(r.terms_.size());
        }
        return r;
    }

    bool operator==(const LaurentPoly& o) const {
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        for (const auto& [e, c] : terms_) {
            auto it = o.terms_.find(e);
            if (it == o.terms_.end() || !(it->second == c)) return false;
        }
        return true;
    }

    /// Terms in lexicographic exponent order (canonical serialization order).
    std::vector<std::pair<ExpVec, S>> sorted_terms() const {
        std::vector<std::pair<ExpVec, S>> v(terms_.begin(), terms_.end());
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return v;
    }

private:
    std::size_t nvars_;
    TermMap terms_;
};

/// Product of all factors, with the term budget applied per step.
template <class S>
LaurentPoly<S> multiply_all(std::size_t nvars, std::span<const LaurentPoly<S>> factors,
                            const Budget& budget = Budget::unlimited()) {
    LaurentPoly<S> acc = LaurentPoly<S>::constant(nvars, S(1));
    for (const auto& f : factors) acc = acc.multiply(f, budget);
    return acc;
}

/// Single coefficient of a product of sparse factors, by expansion with
/// exact pruning: a partial term is dropped as soon as the exponent reach of
/// the remaining factors cannot bring it back to the target. This is the
/// brute-force oracle path behind every constant-term computation.
template <class S>
S coefficient_of_product(std::size_t nvars, const std::vector<LaurentPoly<S>>& factors,
                         const ExpVec& target, const Budget& budget = Budget::unlimited()) {
    const std::size_t nf = factors.size();
    // reach[t][v] = {max positive shift, max negative shift} available to
    // variable v from factors t..end.
    std::vector<std::vector<std::pair<int, int>>> reach(
        nf + 1, std::vector<std::pair<int, int>>(nvars, {0, 0}));
    for (std::size_t t = nf; t-- > 0;) {
        reach[t] = reach[t + 1];
        for (std::size_t v = 0; v < nvars; ++v) {
            int hi = 0, lo = 0;
            for (const auto& [e, c] : factors[t].terms()) {
                hi = std::max(hi, e[v]);
                lo = std::min(lo, e[v]);
            }
            reach[t][v].first += hi;
            reach[t][v].second += -lo;
        }
    }

    LaurentPoly<S> acc = LaurentPoly<S>::constant(nvars, S(1));
    for (std::size_t t = 0; t < nf; ++t) {
        LaurentPoly<S> next(nvars);
        const auto& window = reach[t + 1];
        for (const auto& [ea, ca] : acc.terms()) {
            for (const auto& [eb, cb] : factors[t].terms()) {
                ExpVec e = ea.plus(eb);
                bool reachable = true;
                for (std::size_t v = 0; v < nvars; ++v) {
                    int d = target[v] - e[v];
                    if (d > window[v].first || -d > window[v].second) {
                        reachable = false;
                        break;
                    }
                }
                if (!reachable) continue;
                next.add_mul_term(e, ca, cb);
            }
            budget.note_terms(next.term_count());
        }
        acc = std::move(next);
        if (acc.is_zero()) return S();
    }
    return acc.coefficient(target);
}

} // namespace ctidlab

#endif

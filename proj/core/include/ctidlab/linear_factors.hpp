#ifndef CTIDLAB_LINEAR_FACTORS_HPP
#define CTIDLAB_LINEAR_FACTORS_HPP

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ctidlab/laurent.hpp"

namespace ctidlab {

/// Affine-linear factor  constant + sum_v coeff_v * x_v.
/// Covers every factor shape the product families need: x_j - x_i,
/// x_j - s*x_i, x_j - x_i - e, x_j - e, and (x_1 + ... + x_n) - e.
template <class S>
struct LinearFactor {
    std::vector<std::pair<int, S>> coeffs;
    S constant{};

    static LinearFactor difference(int j, int i) {
        return scaled_difference(j, S(1), i);
    }
    static LinearFactor scaled_difference(int j, S s, int i) {
        LinearFactor f;
        f.coeffs.emplace_back(j, S(1));
        f.coeffs.emplace_back(i, -s);
        return f;
    }
    static LinearFactor shifted_difference(int j, int i, S e) {
        LinearFactor f;
        f.coeffs.emplace_back(j, S(1));
        f.coeffs.emplace_back(i, S(-1));
        f.constant = -e;
        return f;
    }
    static LinearFactor var_minus_const(int j, S e) {
        LinearFactor f;
        f.coeffs.emplace_back(j, S(1));
        f.constant = -e;
        return f;
    }
    static LinearFactor sum_all_minus(std::size_t nvars, S e) {
        LinearFactor f;
        for (std::size_t v = 0; v < nvars; ++v) f.coeffs.emplace_back(static_cast<int>(v), S(1));
        f.constant = -e;
        return f;
    }

    S evaluate(std::span<const S> point) const {
        S acc = constant;
        for (const auto& [v, c] : coeffs) acc += c * point[static_cast<std::size_t>(v)];
        return acc;
    }

    LaurentPoly<S> to_laurent(std::size_t nvars) const {
        LaurentPoly<S> p(nvars);
        if (!constant.is_zero()) p.add_term(ExpVec(nvars), constant);
        for (const auto& [v, c] : coeffs) {
            ExpVec e(nvars);
            e.set(static_cast<std::size_t>(v), 1);
            p.add_term(e, c);
        }
        return p;
    }
};

/// A product of affine-linear factors, kept unexpanded. Point evaluation is
/// factor-by-factor; derivatives come from truncated Taylor (jet) arithmetic,
/// never from expanding the product.
template <class S>
struct LinearFactorProduct {
    std::size_t nvars = 0;
    std::vector<LinearFactor<S>> factors;

    explicit LinearFactorProduct(std::size_t nv) : nvars(nv) {}

    std::size_t degree() const { return factors.size(); }

    void push(LinearFactor<S> f) { factors.push_back(std::move(f)); }

    LaurentPoly<S> expand(const Budget& budget = Budget::unlimited()) const {
        LaurentPoly<S> acc = LaurentPoly<S>::constant(nvars, S(1));
        for (const auto& f : factors) acc = acc.multiply(f.to_laurent(nvars), budget);
        return acc;
    }

    /// Product of factor values; stops at the first zero factor.
    S evaluate(std::span<const S> point) const {
        if (point.size() != nvars) throw BadParams("evaluate: point length must be nvars");
        S acc(1);
        for (const auto& f : factors) {
            S v = f.evaluate(point);
            if (v.is_zero()) return S();
            acc = acc * v;
        }
        return acc;
    }

    /// Mixed partial derivative at a point:
    ///   d^{m_1+...+m_n} F / dx_1^{m_1} ... dx_n^{m_n} (point).
    /// Substitutes x_v = point_v + u_v, multiplies the factors as series
    /// truncated to u_v^{m_v}, and scales the target coefficient by prod m_v!.
    S jet_evaluate(std::span<const S> point, std::span<const int> orders) const {
        if (point.size() != nvars || orders.size() != nvars)
            throw BadParams("jet_evaluate: point and orders must have length nvars");
        int total_order = 0;
        for (int m : orders) {
            if (m < 0) throw BadParams("jet_evaluate: negative order");
            total_order += m;
        }
        if (total_order == 0) return evaluate(point);

        // A factor that vanishes at the point contributes at least one power
        // of u to every surviving term; too many of them force the target
        // coefficient to zero before any series work.
        int vanishing = 0;
        std::vector<S> consts;
        consts.reserve(factors.size());
        for (const auto& f : factors) {
            consts.push_back(f.evaluate(point));
            if (consts.back().is_zero()) ++vanishing;
        }
        if (vanishing > total_order) return S();

        using Series = std::map<ExpVec, S>;
        Series acc;
        acc.emplace(ExpVec(nvars), S(1));
        for (std::size_t t = 0; t < factors.size(); ++t) {
            // factor as a truncated series in u: consts[t] + sum coeff_v u_v
            std::vector<std::pair<std::size_t, const S*>> lin;
            for (const auto& [v, c] : factors[t].coeffs)
                if (orders[static_cast<std::size_t>(v)] > 0) lin.emplace_back(static_cast<std::size_t>(v), &c);
            Series next;
            for (const auto& [e, c] : acc) {
                if (!consts[t].is_zero()) {
                    auto [it, ins] = next.try_emplace(e, S());
                    muladd(it->second, c, consts[t]);
                    if (it->second.is_zero()) next.erase(it);
                }
                int deg = 0;
                for (std::size_t v = 0; v < nvars; ++v) deg += e[v];
                if (deg == total_order) continue;
                for (const auto& [v, cp] : lin) {
                    if (e[v] >= orders[v]) continue;
                    ExpVec e2 = e;
                    e2.add(v, 1);
                    auto [it, ins] = next.try_emplace(e2, S());
                    muladd(it->second, c, *cp);
                    if (it->second.is_zero()) next.erase(it);
                }
            }
            acc = std::move(next);
            if (acc.empty()) return S();
        }
        ExpVec target(nvars);
        for (std::size_t v = 0; v < nvars; ++v) target.set(v, orders[v]);
        auto it = acc.find(target);
        if (it == acc.end()) return S();
        S r = it->second;
        for (int m : orders)
            for (int i = 2; i <= m; ++i) r = r * S(i);
        return r;
    }
};

} // namespace ctidlab

#endif

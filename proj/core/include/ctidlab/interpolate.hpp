#ifndef CTIDLAB_INTERPOLATE_HPP
#define CTIDLAB_INTERPOLATE_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ctidlab/linear_factors.hpp"

namespace ctidlab {

/// Interpolation nodes with multiplicities: distinct points, each carrying a
/// positive multiplicity; |C| is the total multiplicity.
template <class S>
class NodeMultiset {
public:
    NodeMultiset() = default;
    explicit NodeMultiset(std::vector<S> simple_points) {
        for (auto& p : simple_points) entries_.emplace_back(std::move(p), 1);
        validate();
    }
    explicit NodeMultiset(std::vector<std::pair<S, int>> entries)
        : entries_(std::move(entries)) {
        validate();
    }

    const std::vector<std::pair<S, int>>& entries() const { return entries_; }
    std::size_t support_size() const { return entries_.size(); }
    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& [p, m] : entries_) t += static_cast<std::size_t>(m);
        return t;
    }
    bool all_simple() const {
        for (const auto& [p, m] : entries_)
            if (m != 1) return false;
        return true;
    }

private:
    void validate() const {
        if (entries_.empty()) throw BadParams("NodeMultiset: empty");
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].second < 1)
                throw BadParams("NodeMultiset: nonpositive multiplicity");
            for (std::size_t j = i + 1; j < entries_.size(); ++j)
                if (entries_[i].first == entries_[j].first)
                    throw BadParams("NodeMultiset: duplicate support point");
        }
    }
    std::vector<std::pair<S, int>> entries_;
};

/// kappa(C, c) = 1 / prod_{c' in C, c' != c} (c - c').
template <class S>
S lagrange_kappa(std::span<const S> nodes, std::size_t idx) {
    S prod(1);
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j == idx) continue;
        S d = nodes[idx] - nodes[j];
        if (d.is_zero()) throw BadParams("lagrange_kappa: nodes not distinct");
        prod = prod * d;
    }
    return prod.inverse();
}

/// kappa(C, c, m): the coefficient of (x-c)^{omega(c)-m-1} in the power
/// series of 1/(m! * p(x)) around x = c, where
/// p(x) = prod_{c' != c} (x - c')^{omega(c')}.
template <class S>
S hermite_kappa(const NodeMultiset<S>& C, const S& c, int m) {
    int omega_c = -1;
    for (const auto& [p, mult] : C.entries())
        if (p == c) omega_c = mult;
    if (omega_c < 0) throw BadParams("hermite_kappa: point not in support");
    if (m < 0 || m >= omega_c) throw BadParams("hermite_kappa: order out of range");

    const int K = omega_c - 1 - m;
    // p(c+u) truncated to order K.
    std::vector<S> series(static_cast<std::size_t>(K) + 1, S());
    series[0] = S(1);
    for (const auto& [point, mult] : C.entries()) {
        if (point == c) continue;
        S base = c - point;  // factor (u + (c - c'))^mult
        for (int rep = 0; rep < mult; ++rep) {
            for (std::size_t i = series.size(); i-- > 0;) {
                S v = series[i] * base;
                if (i > 0) v += series[i - 1];
                series[i] = std::move(v);
            }
        }
    }
    // Invert the series to order K; constant term is nonzero since the
    // support points are distinct.
    S inv0 = series[0].inverse();
    std::vector<S> inv(static_cast<std::size_t>(K) + 1, S());
    inv[0] = inv0;
    for (int k = 1; k <= K; ++k) {
        S s;
        for (int j = 1; j <= k; ++j)
            s += series[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        inv[static_cast<std::size_t>(k)] = -(inv0 * s);
    }
    S r = inv[static_cast<std::size_t>(K)];
    for (int i = 2; i <= m; ++i) r = r * S(i).inverse();
    return r;
}

namespace detail {

template <class S>
void check_interp_preconditions(const LinearFactorProduct<S>& fp, std::span<const int> d,
                                std::size_t nsets) {
    if (d.size() != fp.nvars || nsets != fp.nvars)
        throw BadParams("interpolation: dimension mismatch");
    long dsum = 0;
    for (int di : d) {
        if (di < 0) throw BadParams("interpolation: negative degree");
        dsum += di;
    }
    if (static_cast<long>(fp.degree()) > dsum)
        throw DegreeViolation("interpolation: product degree exceeds target degree");
}

} // namespace detail

/// Coefficient of prod x_i^{d_i} in the expansion of fp, as the grid sum
/// over C_1 x ... x C_n weighted by Lagrange kappas. Requires |C_i| = d_i+1.
template <class S>
S coeff_lagrange(const LinearFactorProduct<S>& fp, std::span<const int> d,
                 const std::vector<std::vector<S>>& C,
                 const Budget& budget = Budget::unlimited()) {
    detail::check_interp_preconditions(fp, d, C.size());
    const std::size_t n = fp.nvars;
    std::vector<std::vector<S>> kappa(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (C[i].size() != static_cast<std::size_t>(d[i]) + 1)
            throw BadParams("coeff_lagrange: |C_i| must be d_i + 1");
        for (std::size_t j = 0; j < C[i].size(); ++j)
            kappa[i].push_back(lagrange_kappa<S>(C[i], j));
    }

    S total;
    std::vector<std::size_t> idx(n, 0);
    std::vector<S> point(n);
    for (std::size_t i = 0; i < n; ++i) point[i] = C[i][0];
    for (;;) {
        budget.note_grid_point();
        S value = fp.evaluate(point);
        if (!value.is_zero()) {
            for (std::size_t i = 0; i < n; ++i) value = value * kappa[i][idx[i]];
            total += value;
        }
        std::size_t v = 0;
        while (v < n && ++idx[v] == C[v].size()) {
            idx[v] = 0;
            point[v] = C[v][0];
            ++v;
        }
        if (v == n) break;
        point[v] = C[v][idx[v]];
    }
    return total;
}

/// Hermite extension: nodes are multisets, and each support point c with
/// multiplicity omega contributes derivative orders m = 0..omega-1 weighted
/// by kappa(C, c, m). With all multiplicities 1 this reduces to
/// coeff_lagrange exactly.
template <class S>
S coeff_hermite(const LinearFactorProduct<S>& fp, std::span<const int> d,
                const std::vector<NodeMultiset<S>>& C,
                const Budget& budget = Budget::unlimited()) {
    detail::check_interp_preconditions(fp, d, C.size());
    const std::size_t n = fp.nvars;
    struct Entry {
        S point;
        int order;
        S kappa;
    };
    std::vector<std::vector<Entry>> entries(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (C[i].total() != static_cast<std::size_t>(d[i]) + 1)
            throw BadParams("coeff_hermite: |C_i| must be d_i + 1");
        for (const auto& [point, mult] : C[i].entries())
            for (int m = 0; m < mult; ++m) {
                S kap = hermite_kappa(C[i], point, m);
                // A zero weight contributes nothing for any integrand.
                if (kap.is_zero()) continue;
                entries[i].push_back(Entry{point, m, std::move(kap)});
            }
        if (entries[i].empty()) return S();
    }

    S total;
    std::vector<std::size_t> idx(n, 0);
    std::vector<S> point(n);
    std::vector<int> orders(n);
    for (;;) {
        budget.note_grid_point();
        for (std::size_t i = 0; i < n; ++i) {
            point[i] = entries[i][idx[i]].point;
            orders[i] = entries[i][idx[i]].order;
        }
        S value = fp.jet_evaluate(point, orders);
        if (!value.is_zero()) {
            for (std::size_t i = 0; i < n; ++i) value = value * entries[i][idx[i]].kappa;
            total += value;
        }
        std::size_t v = 0;
        while (v < n && ++idx[v] == entries[v].size()) {
            idx[v] = 0;
            ++v;
        }
        if (v == n) break;
    }
    return total;
}

/// A grid point where no factor vanishes, if one exists. When the target
/// coefficient is nonzero such a point is guaranteed to exist.
template <class S>
std::optional<std::vector<S>> nonvanishing_witness(const LinearFactorProduct<S>& fp,
                                                   std::span<const int> d,
                                                   const std::vector<std::vector<S>>& C,
                                                   const Budget& budget = Budget::unlimited()) {
    detail::check_interp_preconditions(fp, d, C.size());
    const std::size_t n = fp.nvars;
    for (std::size_t i = 0; i < n; ++i)
        if (C[i].size() != static_cast<std::size_t>(d[i]) + 1)
            throw BadParams("nonvanishing_witness: |C_i| must be d_i + 1");
    std::vector<std::size_t> idx(n, 0);
    std::vector<S> point(n);
    for (std::size_t i = 0; i < n; ++i) point[i] = C[i][0];
    for (;;) {
        budget.note_grid_point();
        if (!fp.evaluate(point).is_zero()) return point;
        std::size_t v = 0;
        while (v < n && ++idx[v] == C[v].size()) {
            idx[v] = 0;
            point[v] = C[v][0];
            ++v;
        }
        if (v == n) break;
        point[v] = C[v][idx[v]];
    }
    return std::nullopt;
}

} // namespace ctidlab

#endif

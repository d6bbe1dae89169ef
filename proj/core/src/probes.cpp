#include <numeric>

#include "ctidlab/identities.hpp"

namespace ctidlab {

namespace {

// Kernel vector of a homogeneous system over Q(q), by Gaussian elimination.
// Returns empty if the matrix has full column rank.
std::vector<QFrac> kernel_vector(std::vector<std::vector<QFrac>> M, std::size_t cols) {
    std::size_t rows = M.size();
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && M[pr][c].is_zero()) ++pr;
        if (pr == rows) continue;
        std::swap(M[pr], M[r]);
        QFrac inv = M[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) M[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c].is_zero()) continue;
            QFrac f = M[i][c];
            for (std::size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    // find a free column
    std::size_t free_col = cols;
    {
        std::size_t pi = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (pi < pivot_col.size() && pivot_col[pi] == c) {
                ++pi;
                continue;
            }
            free_col = c;
            break;
        }
    }
    if (free_col == cols) return {};
    std::vector<QFrac> x(cols, QFrac(0));
    x[free_col] = QFrac(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        x[pivot_col[i]] = -M[i][free_col];
    return x;
}

QFrac eval_poly_at(const std::vector<QFrac>& coeffs, const QFrac& z) {
    QFrac acc(0);
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs[i];
    return acc;
}

} // namespace

RationalityReport rationality_probe(int n, const std::vector<int>& r, const std::vector<int>& s,
                                    const std::vector<int>& k_list, const Budget& budget) {
    if (static_cast<int>(r.size()) != n || static_cast<int>(s.size()) != n)
        throw BadParams("rationality_probe: r and s must have length n");
    if (std::accumulate(r.begin(), r.end(), 0) != std::accumulate(s.begin(), s.end(), 0))
        throw BadParams("rationality_probe: sum r_i must equal sum s_i");
    if (k_list.size() < 2) throw BadParams("rationality_probe: need at least two k values");
    for (int k : k_list)
        if (k < 1) throw BadParams("rationality_probe: k must be positive");

    RationalityReport rep;
    rep.k_values = k_list;

    std::vector<int> rexp(n);
    for (int i = 0; i < n; ++i) rexp[i] = r[i] - s[i];

    // Normalized values CT * (q)_k^n / (q)_{nk} and the sample points z = q^k.
    std::vector<QFrac> z, N;
    for (int k : k_list) {
        std::vector<int> avec(n, k);
        QPoly ct = monomial_dyson_ct_q(rexp, avec, budget);
        QPoly num = ct;
        for (int i = 0; i < n; ++i) num = num * q_pochhammer(static_cast<unsigned>(k));
        rep.normalized.emplace_back(num, q_pochhammer(static_cast<unsigned>(n * k)));
        N.push_back(rep.normalized.back());
        z.emplace_back(QPoly::q_power(static_cast<std::size_t>(k)));
    }

    // Try degree splits in increasing total degree; a split (dp, dd) is fit
    // on the first dp+dd+1 samples and must predict every remaining one.
    // At least one held-out sample is always kept.
    for (std::size_t total = 0; total + 2 <= k_list.size(); ++total) {
        for (int dp = static_cast<int>(total); dp >= 0; --dp) {
            int dd = static_cast<int>(total) - dp;
            std::size_t fit = total + 1;
            std::size_t cols = total + 2;
            std::vector<std::vector<QFrac>> M;
            for (std::size_t i = 0; i < fit; ++i) {
                std::vector<QFrac> row;
                QFrac zp(1);
                for (int j = 0; j <= dp; ++j) {
                    row.push_back(zp);
                    zp *= z[i];
                }
                zp = QFrac(1);
                for (int j = 0; j <= dd; ++j) {
                    row.push_back(-(N[i] * zp));
                    zp *= z[i];
                }
                M.push_back(std::move(row));
            }
            std::vector<QFrac> x = kernel_vector(std::move(M), cols);
            if (x.empty()) continue;
            std::vector<QFrac> P(x.begin(), x.begin() + dp + 1);
            std::vector<QFrac> D(x.begin() + dp + 1, x.end());
            bool ok = true;
            for (std::size_t i = 0; i < fit && ok; ++i)
                ok = !eval_poly_at(D, z[i]).is_zero();
            if (!ok) continue;
            bool confirmed = true;
            for (std::size_t i = fit; i < k_list.size() && confirmed; ++i) {
                QFrac dv = eval_poly_at(D, z[i]);
                confirmed = !dv.is_zero() && eval_poly_at(P, z[i]) == N[i] * dv;
            }
            if (!confirmed) continue;
            rep.confirmed = true;
            rep.num_degree = dp;
            rep.den_degree = dd;
            rep.fit_count = fit;
            return rep;
        }
    }
    throw ReconstructionFailed("rationality_probe: no degree split fits the samples");
}

std::vector<KadellProbeResult> kadell_conjecture_probe(int n, int m, int amax,
                                                       const Budget& budget) {
    if (n < 2 || m < 1 || m >= n) throw BadParams("kadell_conjecture_probe: need 1 <= m < n");
    std::vector<KadellProbeResult> results;

    std::vector<int> comb(m);
    std::iota(comb.begin(), comb.end(), 1);
    for (;;) {
        std::set<int> M(comb.begin(), comb.end());
        std::vector<int> targets;
        for (int v = 1; v <= n; ++v)
            if (!M.count(v)) targets.push_back(v);

        // all assignments s -> r_s with r_s outside M
        std::vector<std::size_t> pick(M.size(), 0);
        for (;;) {
            std::map<int, int> assign;
            {
                std::size_t i = 0;
                for (int sv : M) assign[sv] = targets[pick[i++]];
            }
            std::vector<int> avec(n, 0);
            for (;;) {
                // skip the all-zero point: trivial on both sides
                bool nonzero = false;
                for (int ai : avec) nonzero |= ai > 0;
                if (nonzero) {
                    KadellProbeResult pr;
                    pr.M = M;
                    pr.r_assign = assign;
                    pr.avec = avec;

                    ParamMatrix B;
                    B.n = n;
                    B.beta.assign(n + 1, std::vector<int>(n + 1, 0));
                    for (int i = 1; i <= n; ++i)
                        for (int j = 1; j <= n; ++j)
                            if (i != j) B.beta[i][j] = avec[i - 1];
                    for (const auto& [sv, rv] : assign) B.beta[rv][sv] += 1;
                    B.validate();

                    std::size_t nv = static_cast<std::size_t>(n) + 1;
                    QPoly lhs = coefficient_of_product<QPoly>(nv, q_laurent_factors(B),
                                                              ExpVec(nv), budget);
                    int total = std::accumulate(avec.begin(), avec.end(), 0);
                    int outside = 0;
                    for (int v = 1; v <= n; ++v)
                        if (!M.count(v)) outside += avec[v - 1];
                    QPoly qb = q_multinomial(avec);
                    QFrac rhs_frac(qb * (QPoly(1) - QPoly::q_power(1 + total)),
                                   QPoly(1) - QPoly::q_power(1 + outside));
                    pr.equal = QFrac(lhs) == rhs_frac;
                    results.push_back(std::move(pr));
                }
                int i = 0;
                while (i < n && avec[i] == amax) avec[i++] = 0;
                if (i == n) break;
                ++avec[i];
            }
            std::size_t i = 0;
            while (i < pick.size() && pick[i] + 1 == targets.size()) pick[i++] = 0;
            if (i == pick.size()) break;
            ++pick[i];
        }
        int i = m - 1;
        while (i >= 0 && comb[i] == n - (m - 1 - i)) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < m; ++j) comb[j] = comb[j - 1] + 1;
    }
    return results;
}

} // namespace ctidlab

#include <map>
#include <numeric>

#include "ctidlab/identities.hpp"

namespace ctidlab {

namespace {

int vec_sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

ExpVec zero_target(std::size_t nvars) { return ExpVec(nvars); }

ExpVec make_target(const std::vector<int>& e) {
    ExpVec t(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) t.set(i, e[i]);
    return t;
}

// (1 - c * x_num / x_den)
template <class S>
LaurentPoly<S> ratio_binomial(std::size_t nvars, int num, int den, S c) {
    LaurentPoly<S> f(nvars);
    f.add_term(ExpVec(nvars), S(1));
    ExpVec e(nvars);
    e.set(num, 1);
    e.set(den, -1);
    f.add_term(e, -c);
    return f;
}

// h_r(x_1..x_n): all monomials of total degree r, coefficient 1.
LaurentPoly<BigRat> complete_homogeneous(std::size_t nvars, int r) {
    LaurentPoly<BigRat> f(nvars);
    ExpVec e(nvars);
    auto rec = [&](auto&& self, std::size_t v, int left) -> void {
        if (v + 1 == nvars) {
            e.set(v, left);
            f.add_term(e, BigRat(1));
            return;
        }
        for (int t = 0; t <= left; ++t) {
            e.set(v, t);
            self(self, v + 1, left - t);
        }
    };
    rec(rec, 0, r);
    return f;
}

// The Xin product factors over n variables and its target exponents:
// coefficient of prod x_i^{w*a_i} in h_w(x)^{|a|} prod_{i!=j} (x_i - x_j)^{a_i}
// taken as Laurent factors h_w^{|a|} prod_{i!=j} (1 - x_j/x_i)^{a_i}.
std::vector<LaurentPoly<BigRat>> xin_factors(const std::vector<int>& avec, int w) {
    std::size_t n = avec.size();
    std::vector<LaurentPoly<BigRat>> fs;
    LaurentPoly<BigRat> h = complete_homogeneous(n, w);
    for (int t = 0; t < vec_sum(avec); ++t) fs.push_back(h);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int t = 0; t < (i == j ? 0 : avec[i]); ++t)
                fs.push_back(ratio_binomial(n, static_cast<int>(j), static_cast<int>(i), BigRat(1)));
    return fs;
}

LinearFactorProduct<QSum> to_qsum(const LinearFactorProduct<QPoly>& fp) {
    LinearFactorProduct<QSum> r(fp.nvars);
    for (const auto& f : fp.factors) {
        LinearFactor<QSum> g;
        g.constant = QSum::from_qpoly(f.constant);
        for (const auto& [v, c] : f.coeffs) g.coeffs.emplace_back(v, QSum::from_qpoly(c));
        r.push(std::move(g));
    }
    return r;
}

using NodeMap = std::map<long, int>;  // exponent of q -> multiplicity

NodeMultiset<QSum> q_nodes(const NodeMap& m) {
    std::vector<std::pair<QSum, int>> entries;
    for (const auto& [alpha, mult] : m) entries.emplace_back(QSum::q_power(alpha), mult);
    return NodeMultiset<QSum>(std::move(entries));
}

NodeMap interval_nodes(long lo, long hi) {
    NodeMap m;
    for (long x = lo; x <= hi; ++x) m[x] = 1;
    return m;
}

// Generic coefficient extraction for F_q(B) with q-power nodes.
QPoly q_pipeline(const ParamMatrix& B, const std::vector<NodeMap>& exps, const Budget& budget) {
    LinearFactorProduct<QSum> fp = to_qsum(fq_polynomial(B));
    std::vector<int> d = fq_target(B);
    std::vector<NodeMultiset<QSum>> C;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        std::size_t total = 0;
        for (const auto& [alpha, mult] : exps[i]) total += static_cast<std::size_t>(mult);
        if (total != static_cast<std::size_t>(d[i]) + 1)
            throw Error("q_pipeline: node multiset size mismatch at variable " +
                        std::to_string(i));
        C.push_back(q_nodes(exps[i]));
    }
    QSum value = coeff_hermite(fp, d, C, budget);
    return value.to_qpoly();
}

// Node exponent sets for the overlay families: gamma_i = beta[i][n] for
// i < n, Delta_t the prefix sums; then
//   A_j = {0} u U_t [Delta_t - gamma_{min(t,j)} + 1, Delta_t]      (sets)
//   A_0 = {0} u U_t [Delta_t - b + 1, Delta_t - b + beta[t+1][0]]   (multiset)
std::vector<NodeMap> overlay_nodes(const ParamMatrix& B) {
    int n = B.n;
    std::vector<long> gamma(n), delta(n);
    for (int i = 0; i < n; ++i) gamma[i] = B.beta[i][n];
    std::partial_sum(gamma.begin(), gamma.end(), delta.begin());
    long b = gamma[0];
    std::vector<NodeMap> exps(n + 1);
    exps[0][0] = 1;
    for (int t = 0; t < n; ++t) {
        long lo = delta[t] - b + 1;
        long hi = delta[t] - b + B.beta[t + 1][0];
        for (long x = lo; x <= hi; ++x) exps[0][x] += 1;
    }
    for (int j = 1; j <= n; ++j) {
        exps[j][0] = 1;
        for (int t = 0; t < n; ++t) {
            long g = gamma[std::min<long>(t, j)];
            for (long x = delta[t] - g + 1; x <= delta[t]; ++x) exps[j][x] += 1;
        }
    }
    return exps;
}

// Dyson-type node sets B_i = {0, ..., |a| - a_i + chi(i <= m)} with the
// homogenizing variable pinned at {q^0}.
std::vector<NodeMap> dyson_kadell_nodes(const std::vector<int>& avec, int m) {
    int n = static_cast<int>(avec.size());
    int total = vec_sum(avec);
    std::vector<NodeMap> exps(n + 1);
    exps[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        exps[i] = interval_nodes(0, total - avec[i - 1] + (i <= m ? 1 : 0));
    return exps;
}

// Drop variables with a_i = 0 (all of them, or only i < n when keep_last):
// their factors do not affect the constant term.
std::vector<int> surviving_avec(const std::vector<int>& avec, bool keep_last, int m, int& m_out) {
    std::vector<int> kept;
    int n = static_cast<int>(avec.size());
    m_out = 0;
    for (int i = 1; i <= n; ++i) {
        if (avec[i - 1] == 0 && !(keep_last && i == n)) continue;
        kept.push_back(avec[i - 1]);
        if (i <= m) ++m_out;
    }
    return kept;
}

BigRat dyson_interp(const std::vector<int>& avec, const Budget& budget) {
    int m_unused = 0;
    std::vector<int> a = surviving_avec(avec, false, 0, m_unused);
    std::size_t n = a.size();
    if (n <= 1) return BigRat(1);
    int total = vec_sum(a);
    LinearFactorProduct<BigRat> fp(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int t = 0; t < (i == j ? 0 : a[i]); ++t)
                fp.push(LinearFactor<BigRat>::difference(static_cast<int>(j), static_cast<int>(i)));
    std::vector<int> d(n);
    std::vector<std::vector<BigRat>> C(n);
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = total - a[i];
        for (int x = 0; x <= d[i]; ++x) C[i].emplace_back(x);
    }
    return coeff_lagrange(fp, d, C, budget);
}

// The modified homogeneous product for the Morris family:
//   prod_j prod_{e=-a}^{b-1} (x_j - x_0 - e)
//   prod_{i<j} prod_{e=-k}^{k-1} (x_j - x_i - e),
// target x_0^{na} prod x_i^{(n-1)k+b}, nodes {0..(n-1)k+b} and the multiset
// {0} u U_l {kl+1 .. kl+a}. The product's top homogeneous part differs from
// the Laurent numerator's by (-1)^{na + C(n,2) k}, hence the sign.
BigRat morris_interp(int n, int a, int b, int k, const Budget& budget) {
    std::size_t nv = static_cast<std::size_t>(n) + 1;
    LinearFactorProduct<BigRat> fp(nv);
    for (int j = 1; j <= n; ++j)
        for (int e = -a; e <= b - 1; ++e)
            fp.push(LinearFactor<BigRat>::shifted_difference(j, 0, BigRat(e)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int e = -k; e <= k - 1; ++e)
                fp.push(LinearFactor<BigRat>::shifted_difference(j, i, BigRat(e)));

    std::vector<int> d(nv);
    d[0] = n * a;
    for (int i = 1; i <= n; ++i) d[i] = (n - 1) * k + b;

    std::vector<NodeMultiset<BigRat>> C;
    {
        std::map<long, int> c0;
        c0[0] = 1;
        for (int l = 0; l < n; ++l)
            for (int e = k * l + 1; e <= k * l + a; ++e) c0[e] += 1;
        std::vector<std::pair<BigRat, int>> entries;
        for (const auto& [x, mult] : c0) entries.emplace_back(BigRat(x), mult);
        C.emplace_back(std::move(entries));
    }
    for (int i = 1; i <= n; ++i) {
        std::vector<BigRat> pts;
        for (int x = 0; x <= d[i]; ++x) pts.emplace_back(x);
        C.emplace_back(std::move(pts));
    }

    BigRat value = coeff_hermite(fp, d, C, budget);
    long sign_exp = static_cast<long>(n) * a + static_cast<long>(k) * n * (n - 1) / 2;
    return (sign_exp % 2 != 0) ? -value : value;
}

// Hermite showcase for the Xin coefficient: nodes B = {b_1..b_n} with
// sum b_j = 0 and multiplicities omega_i(b_j) = a_i + chi(j = i).
BigRat xin_interp(const std::vector<int>& avec, const Budget& budget) {
    std::size_t n = avec.size();
    int total = vec_sum(avec);
    LinearFactorProduct<BigRat> fp(n);
    for (int t = 0; t < total; ++t)
        fp.push(LinearFactor<BigRat>::sum_all_minus(n, BigRat(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int t = 0; t < (i == j ? 0 : avec[i]); ++t)
                fp.push(LinearFactor<BigRat>::difference(static_cast<int>(i), static_cast<int>(j)));

    std::vector<long> b(n);
    for (std::size_t j = 0; j + 1 < n; ++j) b[j] = static_cast<long>(j) + 1;
    if (n >= 1) b[n - 1] = -static_cast<long>(n) * (static_cast<long>(n) - 1) / 2;

    std::vector<int> d(n);
    std::vector<NodeMultiset<BigRat>> C;
    for (std::size_t i = 0; i < n; ++i) {
        d[i] = static_cast<int>(n) * avec[i];
        std::vector<std::pair<BigRat, int>> entries;
        for (std::size_t j = 0; j < n; ++j) {
            int mult = avec[i] + (i == j ? 1 : 0);
            if (mult > 0) entries.emplace_back(BigRat(b[j]), mult);
        }
        C.emplace_back(std::move(entries));
    }
    return coeff_hermite(fp, d, C, budget);
}

} // namespace

// ---------------------------------------------------------------------------
// Brute-force constant terms
// ---------------------------------------------------------------------------

Value ct_brute(const IdentityCase& c0, const Budget& budget) {
    IdentityCase c = c0;
    validate_case(c);
    const CaseParams& p = c.params;
    switch (c.family) {
        case Family::dyson:
            return coefficient_of_product<BigRat>(p.avec.size(), dyson_factors(p.avec),
                                                  zero_target(p.avec.size()), budget);
        case Family::q_dyson:
            return coefficient_of_product<QPoly>(p.avec.size(), dyson_q_factors(p.avec),
                                                 zero_target(p.avec.size()), budget);
        case Family::morris:
        case Family::aomoto:
        case Family::forrester: {
            ParamMatrix B = build_matrix(c.family, p);
            std::size_t nv = static_cast<std::size_t>(B.n) + 1;
            return coefficient_of_product<BigRat>(nv, laurent_factors(B), zero_target(nv), budget);
        }
        case Family::q_morris:
        case Family::q_aomoto:
        case Family::q_forrester:
        case Family::aomoto_forrester:
        case Family::kadell_main: {
            ParamMatrix B = build_matrix(c.family, p);
            std::size_t nv = static_cast<std::size_t>(B.n) + 1;
            return coefficient_of_product<QPoly>(nv, q_laurent_factors(B), zero_target(nv), budget);
        }
        case Family::kadell_corollary: {
            std::set<int> M;
            for (int v = 1; v <= p.m; ++v) M.insert(v);
            return kadell_corollary_ct(p.avec, M, p.r, budget);
        }
        case Family::kadell_sum: {
            int n = p.n;
            BigRat total;
            std::vector<int> comb(p.m);
            std::iota(comb.begin(), comb.end(), 1);
            auto run_subset = [&](const std::set<int>& M) {
                int outside = 0;
                for (int v = 1; v <= n; ++v)
                    if (!M.count(v)) outside += p.avec[v - 1];
                for (int r = 1; r <= n; ++r) {
                    if (M.count(r)) continue;  // vanishing factor (1 - x_r/x_r)
                    total += BigRat(1 + outside) * kadell_corollary_ct(p.avec, M, r, budget);
                }
            };
            if (p.m == 0) {
                run_subset({});
            } else {
                for (;;) {
                    run_subset(std::set<int>(comb.begin(), comb.end()));
                    int i = p.m - 1;
                    while (i >= 0 && comb[i] == n - (p.m - 1 - i)) --i;
                    if (i < 0) break;
                    ++comb[i];
                    for (int j = i + 1; j < p.m; ++j) comb[j] = comb[j - 1] + 1;
                }
            }
            return total;
        }
        case Family::sills: {
            std::vector<int> rexp(p.avec.size(), 0);
            rexp[p.r - 1] = 1;
            rexp[p.s - 1] = -1;
            return monomial_dyson_ct(rexp, p.avec, budget);
        }
        case Family::xin: {
            std::size_t n = p.avec.size();
            return coefficient_of_product<BigRat>(n, xin_factors(p.avec, 1),
                                                  make_target(p.avec), budget);
        }
        case Family::xin_hr: {
            std::size_t n = p.avec.size();
            std::vector<int> target(n);
            for (std::size_t i = 0; i < n; ++i) target[i] = p.r * p.avec[i];
            return coefficient_of_product<BigRat>(n, xin_factors(p.avec, p.r),
                                                  make_target(target), budget);
        }
    }
    throw BadParams("unknown family");
}

// ---------------------------------------------------------------------------
// Interpolation pipelines
// ---------------------------------------------------------------------------

InterpResult ct_interp_detail(const IdentityCase& c0, const Budget& budget) {
    IdentityCase c = c0;
    validate_case(c);
    if (!supports_interp(c.family))
        throw BadParams("family has no interpolation pipeline");
    const CaseParams& p = c.params;
    switch (c.family) {
        case Family::dyson:
            return {dyson_interp(p.avec, budget), false};
        case Family::q_dyson: {
            int m_out = 0;
            std::vector<int> a = surviving_avec(p.avec, false, 0, m_out);
            if (a.empty()) return {QPoly(1), false};
            CaseParams q;
            q.avec = a;
            return {q_pipeline(build_matrix(Family::q_dyson, q), dyson_kadell_nodes(a, 0), budget),
                    false};
        }
        case Family::kadell_main: {
            int m2 = 0;
            std::vector<int> a = surviving_avec(p.avec, true, p.m, m2);
            CaseParams q;
            q.avec = a;
            q.m = m2;
            return {q_pipeline(build_matrix(Family::kadell_main, q), dyson_kadell_nodes(a, m2), budget),
                    false};
        }
        case Family::morris:
            if (p.a == 0 || p.b == 0 || p.k == 0) {
                IdentityCase br = c;
                br.method = Method::brute;
                return {ct_brute(br, budget), true};
            }
            return {morris_interp(p.n, p.a, p.b, p.k, budget), false};
        case Family::q_morris:
        case Family::q_aomoto:
        case Family::q_forrester:
        case Family::aomoto_forrester: {
            if (p.a == 0 || p.b == 0 || p.k == 0) {
                IdentityCase br = c;
                br.method = Method::brute;
                return {ct_brute(br, budget), true};
            }
            ParamMatrix B = build_matrix(c.family, p);
            return {q_pipeline(B, overlay_nodes(B), budget), false};
        }
        case Family::xin:
            return {xin_interp(p.avec, budget), false};
        default:
            throw BadParams("family has no interpolation pipeline");
    }
}

Value ct_interp(const IdentityCase& c, const Budget& budget) {
    return ct_interp_detail(c, budget).value;
}

// ---------------------------------------------------------------------------
// Monomial-weighted Dyson constant terms
// ---------------------------------------------------------------------------

namespace {

void check_monomial(const std::vector<int>& rexp, const std::vector<int>& avec) {
    if (rexp.size() != avec.size())
        throw BadParams("monomial exponent vector and a must have equal length");
    if (vec_sum(rexp) != 0)
        throw BadParams("monomial must have total degree zero");
}

std::vector<int> negated(const std::vector<int>& v) {
    std::vector<int> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = -v[i];
    return r;
}

} // namespace

BigRat monomial_dyson_ct(const std::vector<int>& rexp, const std::vector<int>& avec,
                         const Budget& budget) {
    check_monomial(rexp, avec);
    return coefficient_of_product<BigRat>(avec.size(), dyson_factors(avec),
                                          make_target(negated(rexp)), budget);
}

QPoly monomial_dyson_ct_q(const std::vector<int>& rexp, const std::vector<int>& avec,
                          const Budget& budget) {
    check_monomial(rexp, avec);
    return coefficient_of_product<QPoly>(avec.size(), dyson_q_factors(avec),
                                         make_target(negated(rexp)), budget);
}

BigRat kadell_corollary_ct(const std::vector<int>& avec, const std::set<int>& M, int r,
                           const Budget& budget) {
    int n = static_cast<int>(avec.size());
    if (r < 1 || r > n) throw BadParams("kadell_corollary_ct: r out of range");
    if (M.count(r)) return BigRat(0);
    auto fs = dyson_factors(avec);
    for (int s : M) {
        if (s < 1 || s > n) throw BadParams("kadell_corollary_ct: M out of range");
        fs.push_back(ratio_binomial(avec.size(), r - 1, s - 1, BigRat(1)));
    }
    return coefficient_of_product<BigRat>(avec.size(), fs, zero_target(avec.size()), budget);
}

BigRat kadell_corollary_via_monomials(const std::vector<int>& avec, const std::set<int>& M,
                                      int r, const Budget& budget) {
    int n = static_cast<int>(avec.size());
    if (M.count(r)) return BigRat(0);
    std::vector<int> subset(M.begin(), M.end());
    std::size_t k = subset.size();
    BigRat total;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<int> rexp(n, 0);
        int bits = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) {
                rexp[subset[i] - 1] -= 1;
                rexp[r - 1] += 1;
                ++bits;
            }
        BigRat term = monomial_dyson_ct(rexp, avec, budget);
        total += (bits % 2 != 0) ? -term : term;
    }
    return total;
}

bool xin_hr_check(int r, const std::vector<int>& avec, const Budget& budget) {
    IdentityCase c;
    c.family = Family::xin_hr;
    c.params.avec = avec;
    c.params.r = r;
    c.method = Method::brute;
    Value lhs = ct_brute(c, budget);
    return value_equal(lhs, Value(BigRat(multinomial(avec))));
}

} // namespace ctidlab

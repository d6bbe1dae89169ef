#include "ctidlab/sumsets.hpp"

#include <algorithm>
#include <numeric>

#include "ctidlab/interpolate.hpp"

namespace ctidlab {

bool is_prime(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

long reduce_mod(long x, long p) {
    if (p == 0) return x;
    long r = x % p;
    return r < 0 ? r + p : r;
}

} // namespace

void SumsetInstance::validate() const {
    if (p != 0 && !is_prime(p)) throw BadParams("SumsetInstance: p must be 0 or prime");
    if (A.empty()) throw BadParams("SumsetInstance: no ground sets");
    for (const auto& Ai : A) {
        if (Ai.empty()) throw BadParams("SumsetInstance: empty A_i");
        std::set<long> seen;
        for (long x : Ai)
            if (!seen.insert(reduce_mod(x, p)).second)
                throw BadParams("SumsetInstance: duplicate element in A_i");
    }
    for (const auto& [ij, Sij] : S) {
        auto [i, j] = ij;
        if (i < 1 || j <= i || j > n())
            throw BadParams("SumsetInstance: S indices must satisfy 1 <= i < j <= n");
        std::set<long> seen;
        for (long x : Sij)
            if (!seen.insert(reduce_mod(x, p)).second)
                throw BadParams("SumsetInstance: duplicate element in S_ij");
    }
}

std::set<long> restricted_sumset(const SumsetInstance& inst, const Budget& budget) {
    inst.validate();
    const int n = inst.n();
    const long p = inst.p;

    std::uint64_t grid = 1;
    for (const auto& Ai : inst.A) {
        grid *= Ai.size();
        budget.note_terms(grid);
    }

    // forbidden[j][i] for i < j, reduced mod p
    std::vector<std::vector<std::set<long>>> forbidden(n + 1,
                                                       std::vector<std::set<long>>(n + 1));
    for (const auto& [ij, Sij] : inst.S)
        for (long x : Sij) forbidden[ij.second][ij.first].insert(reduce_mod(x, p));

    std::set<long> sums;
    std::vector<std::size_t> idx(n, 0);
    std::vector<long> a(n);
    for (int i = 0; i < n; ++i) a[i] = reduce_mod(inst.A[i][0], p);
    for (;;) {
        budget.note_grid_point();
        bool ok = true;
        for (int j = 1; j < n && ok; ++j)
            for (int i = 0; i < j && ok; ++i)
                if (forbidden[j + 1][i + 1].count(reduce_mod(a[j] - a[i], p))) ok = false;
        if (ok) sums.insert(reduce_mod(std::accumulate(a.begin(), a.end(), 0L), p));
        int v = 0;
        while (v < n && ++idx[v] == inst.A[v].size()) {
            idx[v] = 0;
            a[v] = reduce_mod(inst.A[v][0], p);
            ++v;
        }
        if (v == n) break;
        a[v] = reduce_mod(inst.A[v][idx[v]], p);
    }
    return sums;
}

long hou_sun_bound(int n, int k, int s) {
    long t = (s + 1) / 2;  // ceil(s/2)
    return static_cast<long>(n) * (k - 1) - static_cast<long>(n) * (n - 1) * t + 1;
}

BoundReport bound_check(const SumsetInstance& inst, const Budget& budget) {
    inst.validate();
    BoundReport rep;
    rep.n = inst.n();
    rep.k = static_cast<int>(inst.A[0].size());
    for (const auto& Ai : inst.A)
        if (static_cast<int>(Ai.size()) != rep.k)
            throw BadParams("bound_check: all A_i must have equal size");
    rep.s = 0;
    for (const auto& [ij, Sij] : inst.S)
        rep.s = std::max(rep.s, static_cast<int>(Sij.size()));
    rep.bound = hou_sun_bound(rep.n, rep.k, rep.s);
    rep.size = static_cast<long>(restricted_sumset(inst, budget).size());
    rep.meets = rep.size >= rep.bound;
    long t = (rep.s + 1) / 2;
    long threshold = std::max(static_cast<long>(rep.n) * t, rep.bound - 1);
    rep.char_ok = inst.p == 0 || inst.p > threshold;
    return rep;
}

SumsetInstance tightness_instance(int n, int k, int t, long p) {
    if (n < 2 || k < 1 || t < 1) throw BadParams("tightness_instance: need n>=2, k>=1, t>=1");
    SumsetInstance inst;
    inst.p = p;
    inst.A.assign(n, {});
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < k; ++x) inst.A[i].push_back(x);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<long> Sij;
            for (int e = -t + 1; e <= t - 1; ++e) Sij.push_back(e);
            inst.S[{i, j}] = Sij;
        }
    inst.validate();
    return inst;
}

namespace {

int s_at(const std::map<std::pair<int, int>, int>& s, int i, int j) {
    auto it = s.find({i, j});
    return it == s.end() ? 0 : it->second;
}

LinearFactorProduct<BigRat> f0_product(const std::vector<int>& d,
                                       const std::map<std::pair<int, int>, int>& s, long& N_out) {
    const int n = static_cast<int>(d.size());
    long N = std::accumulate(d.begin(), d.end(), 0L);
    for (const auto& [ij, sij] : s) {
        auto [i, j] = ij;
        if (i < 1 || j <= i || j > n) throw BadParams("f0: bad s index pair");
        if (sij < 0) throw BadParams("f0: negative multiplicity");
        N -= sij;
    }
    if (N < 0) throw BadParams("f0: sum d_i - sum s_ij must be nonnegative");
    N_out = N;
    LinearFactorProduct<BigRat> fp(static_cast<std::size_t>(n));
    for (long t = 0; t < N; ++t)
        fp.push(LinearFactor<BigRat>::sum_all_minus(static_cast<std::size_t>(n), BigRat(0)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int t = 0; t < s_at(s, i, j); ++t)
                fp.push(LinearFactor<BigRat>::difference(j - 1, i - 1));
    return fp;
}

} // namespace

BigRat f0_coefficient(const std::vector<int>& d, const std::map<std::pair<int, int>, int>& s,
                      const Budget& budget) {
    long N = 0;
    LinearFactorProduct<BigRat> fp = f0_product(d, s, N);
    std::vector<std::vector<BigRat>> C(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0) throw BadParams("f0: negative degree");
        for (int x = 0; x <= d[i]; ++x) C[i].emplace_back(x);
    }
    return coeff_lagrange(fp, d, C, budget);
}

BigRat f0_coefficient_brute(const std::vector<int>& d,
                            const std::map<std::pair<int, int>, int>& s, const Budget& budget) {
    long N = 0;
    LinearFactorProduct<BigRat> fp = f0_product(d, s, N);
    LaurentPoly<BigRat> full = fp.expand(budget);
    ExpVec target(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) target.set(i, d[i]);
    return full.coefficient(target);
}

ClosedFormCase closed_form_hou_sun(int n, int k, int t) {
    if (n < 2 || k < 1 || t < 0) throw BadParams("hou_sun closed form: need n>=2, k>=1, t>=0");
    if (static_cast<long>(k) - 1 < static_cast<long>(n - 1) * t)
        throw BadParams("hou_sun closed form: requires k-1 >= (n-1)t");
    ClosedFormCase cf;
    cf.d.assign(n, k - 1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) cf.s[{i, j}] = 2 * t;
    long N = static_cast<long>(n) * (k - 1) - static_cast<long>(n) * (n - 1) * t;
    BigRat v(factorial(static_cast<unsigned long>(N)));
    for (int i = 0; i < n; ++i) v /= BigRat(factorial(static_cast<unsigned long>(t)));
    for (int i = 1; i <= n; ++i) {
        v *= BigRat(factorial(static_cast<unsigned long>(i) * t));
        v /= BigRat(factorial(static_cast<unsigned long>(k - 1 - (i - 1) * t)));
    }
    long sign = (static_cast<long>(n) * (n - 1) / 2 * t) % 2;
    cf.value = sign ? -v : v;
    return cf;
}

ClosedFormCase closed_form_sun_yeh(int n, int k, int t) {
    if (n < 2 || k < n || t < 1)
        throw BadParams("sun_yeh closed form: need n>=2, k>=n, t>=1");
    ClosedFormCase cf;
    cf.d.resize(n);
    for (int i = 1; i <= n; ++i) cf.d[i - 1] = k - i;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) cf.s[{i, j}] = 2 * t - 1;
    long N = static_cast<long>(n) * (k - 1) - static_cast<long>(n) * (n - 1) * t;
    if (N < 0) throw BadParams("sun_yeh closed form: requires n(k-1) >= n(n-1)t");
    BigRat v(factorial(static_cast<unsigned long>(N)));
    v /= BigRat(factorial(static_cast<unsigned long>(n)));
    for (int i = 0; i < n; ++i) v /= BigRat(factorial(static_cast<unsigned long>(t)));
    for (int i = 1; i <= n; ++i) {
        v *= BigRat(factorial(static_cast<unsigned long>(i) * t));
        v /= BigRat(factorial(static_cast<unsigned long>(k - 1 - (i - 1) * t)));
    }
    long sign = (static_cast<long>(n) * (n - 1) / 2 * t) % 2;
    cf.value = sign ? -v : v;
    return cf;
}

ClosedFormCase closed_form_anr(const std::vector<int>& d) {
    const int n = static_cast<int>(d.size());
    if (n < 2) throw BadParams("anr closed form: need n >= 2");
    ClosedFormCase cf;
    cf.d = d;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) cf.s[{i, j}] = 1;
    long N = std::accumulate(d.begin(), d.end(), 0L) - static_cast<long>(n) * (n - 1) / 2;
    if (N < 0) throw BadParams("anr closed form: requires sum d_i >= C(n,2)");
    BigRat v(factorial(static_cast<unsigned long>(N)));
    for (int di : d) {
        if (di < 0) throw BadParams("anr closed form: negative degree");
        v /= BigRat(factorial(static_cast<unsigned long>(di)));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) v *= BigRat(d[j] - d[i]);
    cf.value = v;
    return cf;
}

ClosedFormCase closed_form_xin(const std::vector<int>& a) {
    const int n = static_cast<int>(a.size());
    if (n < 1) throw BadParams("xin closed form: need n >= 1");
    ClosedFormCase cf;
    cf.d.resize(n);
    long odd = 0;
    for (int i = 1; i <= n; ++i) {
        if (a[i - 1] < 0) throw BadParams("xin closed form: negative a_i");
        cf.d[i - 1] = n * a[i - 1];
        for (int j = i + 1; j <= n; ++j) {
            cf.s[{i, j}] = a[i - 1] + a[j - 1];
            odd += a[i - 1];
        }
    }
    BigRat v(multinomial(a));
    cf.value = (odd % 2) ? -v : v;
    return cf;
}

} // namespace ctidlab

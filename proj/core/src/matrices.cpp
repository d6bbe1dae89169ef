#include <algorithm>
#include <numeric>

#include "ctidlab/identities.hpp"

namespace ctidlab {

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    bool q;
    bool vector_params;
    bool interp;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::dyson, "dyson", false, true, true},
    {Family::q_dyson, "q_dyson", true, true, true},
    {Family::morris, "morris", false, false, true},
    {Family::q_morris, "q_morris", true, false, true},
    {Family::aomoto, "aomoto", false, false, false},
    {Family::q_aomoto, "q_aomoto", true, false, true},
    {Family::kadell_main, "kadell_main", true, true, true},
    {Family::kadell_corollary, "kadell_corollary", false, true, false},
    {Family::kadell_sum, "kadell_sum", false, true, false},
    {Family::sills, "sills", false, true, false},
    {Family::forrester, "forrester", false, false, false},
    {Family::q_forrester, "q_forrester", true, false, true},
    {Family::aomoto_forrester, "aomoto_forrester", true, false, true},
    {Family::xin, "xin", false, true, true},
    {Family::xin_hr, "xin_hr", false, true, false},
};

const FamilyInfo& info(Family f) {
    for (const auto& fi : kFamilies)
        if (fi.family == f) return fi;
    throw BadParams("unknown family");
}

} // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
    for (const auto& fi : kFamilies)
        if (fi.name == name) return fi.family;
    return std::nullopt;
}

bool is_q_family(Family f) { return info(f).q; }
bool has_vector_params(Family f) { return info(f).vector_params; }
bool supports_interp(Family f) { return info(f).interp; }

std::string_view method_name(Method m) {
    switch (m) {
        case Method::brute: return "brute";
        case Method::interp: return "interp";
        case Method::both: return "both";
        case Method::rhs_only: return "rhs_only";
    }
    throw BadParams("unknown method");
}

std::optional<Method> method_from_name(std::string_view name) {
    for (Method m : {Method::brute, Method::interp, Method::both, Method::rhs_only})
        if (method_name(m) == name) return m;
    return std::nullopt;
}

void validate_case(IdentityCase& c) {
    CaseParams& p = c.params;
    if (has_vector_params(c.family)) {
        if (p.avec.empty()) throw BadParams("family requires vector parameter a");
        for (int ai : p.avec)
            if (ai < 0) throw BadParams("a_i must be nonnegative");
        int n = static_cast<int>(p.avec.size());
        if (p.n == 0) p.n = n;
        if (p.n != n) throw BadParams("n does not match |a|");
    } else {
        if (!p.avec.empty()) throw BadParams("family takes scalar a, not a vector");
        if (p.n < 1) throw BadParams("n must be positive");
        if (p.a < 0 || p.b < 0 || p.k < 0) throw BadParams("a, b, k must be nonnegative");
    }
    switch (c.family) {
        case Family::dyson:
        case Family::q_dyson:
        case Family::xin:
            break;
        case Family::xin_hr:
            if (p.r < 1) throw BadParams("xin_hr: r must be positive");
            break;
        case Family::kadell_main:
        case Family::kadell_sum:
            if (p.m < 0 || p.m >= p.n) throw BadParams("requires 0 <= m < n");
            break;
        case Family::kadell_corollary:
            if (p.m < 0 || p.m >= p.n) throw BadParams("requires 0 <= m < n");
            if (p.r == 0) p.r = p.n;
            if (p.r <= p.m || p.r > p.n) throw BadParams("requires r outside M = {1..m}");
            break;
        case Family::sills:
            if (p.r < 1 || p.r > p.n || p.s < 1 || p.s > p.n || p.r == p.s)
                throw BadParams("sills: needs 1 <= r != s <= n");
            break;
        case Family::morris:
        case Family::q_morris:
            break;
        case Family::aomoto:
        case Family::q_aomoto:
            if (p.m < 0 || p.m > p.n) throw BadParams("requires 0 <= m <= n");
            break;
        case Family::forrester:
        case Family::q_forrester:
            if (p.n0 < 0 || p.n0 > p.n) throw BadParams("requires 0 <= n0 <= n");
            break;
        case Family::aomoto_forrester:
            if (p.m < 0 || p.m > p.n) throw BadParams("requires 0 <= m <= n");
            if (p.n0 < 0 || p.n0 > p.n) throw BadParams("requires 0 <= n0 <= n");
            break;
    }
    if (c.method == Method::interp && !supports_interp(c.family))
        throw BadParams("family has no interpolation pipeline");
    if (c.method == Method::both && !supports_interp(c.family)) c.method = Method::brute;
}

bool outside_regime(const IdentityCase& c) {
    if (c.family == Family::aomoto_forrester) return c.params.n > c.params.m + c.params.n0;
    if (c.family == Family::q_forrester) return c.params.n > c.params.n0;
    return false;
}

// ---------------------------------------------------------------------------
// Matrices
// ---------------------------------------------------------------------------

void ParamMatrix::validate() const {
    if (n < 1) throw BadParams("ParamMatrix: n must be positive");
    if (beta.size() != static_cast<std::size_t>(n) + 1)
        throw BadParams("ParamMatrix: wrong row count");
    for (int i = 0; i <= n; ++i) {
        if (beta[i].size() != static_cast<std::size_t>(n) + 1)
            throw BadParams("ParamMatrix: wrong column count");
        if (beta[i][i] != 0) throw BadParams("ParamMatrix: diagonal must be zero");
        for (int j = 0; j <= n; ++j)
            if (beta[i][j] < 0) throw BadParams("ParamMatrix: negative entry");
    }
}

int ParamMatrix::col_sum(int j) const {
    int s = 0;
    for (int i = 0; i <= n; ++i) s += beta[i][j];
    return s;
}

ParamMatrix ParamMatrix::permuted(const std::vector<int>& perm) const {
    if (perm.size() != static_cast<std::size_t>(n) + 1)
        throw BadParams("permutation size mismatch");
    ParamMatrix r;
    r.n = n;
    r.beta.assign(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) r.beta[perm[i]][perm[j]] = beta[i][j];
    r.validate();
    return r;
}

namespace {

ParamMatrix zero_matrix(int n) {
    ParamMatrix B;
    B.n = n;
    B.beta.assign(n + 1, std::vector<int>(n + 1, 0));
    return B;
}

ParamMatrix dyson_matrix(const std::vector<int>& avec) {
    int n = static_cast<int>(avec.size());
    ParamMatrix B = zero_matrix(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) B.beta[i][j] = avec[i - 1];
    return B;
}

// The Aomoto/Forrester overlay: row 0 holds b, column 0 holds a with a+1 in
// the last m rows, off-diagonal k with k+1 in the bottom-right
// (n-n0) x (n-n0) block.
ParamMatrix af_matrix(int n, int n0, int m, int a, int b, int k) {
    ParamMatrix B = zero_matrix(n);
    for (int j = 1; j <= n; ++j) B.beta[0][j] = b;
    for (int i = 1; i <= n; ++i) B.beta[i][0] = a + (i > n - m ? 1 : 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) B.beta[i][j] = k + (i > n0 && j > n0 ? 1 : 0);
    return B;
}

ParamMatrix kadell_matrix(int m, const std::vector<int>& avec) {
    ParamMatrix B = dyson_matrix(avec);
    int n = B.n;
    for (int j = 1; j <= m; ++j) B.beta[n][j] += 1;
    return B;
}

} // namespace

ParamMatrix build_matrix(Family f, const CaseParams& p) {
    ParamMatrix B;
    switch (f) {
        case Family::dyson:
        case Family::q_dyson:
            B = dyson_matrix(p.avec);
            break;
        case Family::morris:
        case Family::q_morris:
            B = af_matrix(p.n, p.n, 0, p.a, p.b, p.k);
            break;
        case Family::aomoto:
        case Family::q_aomoto:
            B = af_matrix(p.n, p.n, p.m, p.a, p.b, p.k);
            break;
        case Family::forrester:
        case Family::q_forrester:
            B = af_matrix(p.n, p.n0, 0, p.a, p.b, p.k);
            break;
        case Family::aomoto_forrester:
            B = af_matrix(p.n, p.n0, p.m, p.a, p.b, p.k);
            break;
        case Family::kadell_main:
            B = kadell_matrix(p.m, p.avec);
            break;
        default:
            throw BadParams("family has no matrix form");
    }
    B.validate();
    return B;
}

// ---------------------------------------------------------------------------
// Factor builders
// ---------------------------------------------------------------------------

namespace {

// (1 - c * x_num / x_den) over scalar S
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

} // namespace

std::vector<LaurentPoly<BigRat>> laurent_factors(const ParamMatrix& B) {
    std::size_t nv = static_cast<std::size_t>(B.n) + 1;
    std::vector<LaurentPoly<BigRat>> fs;
    for (int i = 0; i <= B.n; ++i)
        for (int j = 0; j <= B.n; ++j)
            for (int t = 0; t < (i == j ? 0 : B.beta[i][j]); ++t)
                fs.push_back(ratio_binomial(nv, i, j, BigRat(1)));
    return fs;
}

std::vector<LaurentPoly<QPoly>> q_laurent_factors(const ParamMatrix& B) {
    std::size_t nv = static_cast<std::size_t>(B.n) + 1;
    std::vector<LaurentPoly<QPoly>> fs;
    for (int i = 0; i <= B.n; ++i)
        for (int j = i + 1; j <= B.n; ++j) {
            for (int t = 0; t < B.beta[i][j]; ++t)
                fs.push_back(ratio_binomial(nv, i, j, QPoly::q_power(t)));
            for (int t = 1; t <= B.beta[j][i]; ++t)
                fs.push_back(ratio_binomial(nv, j, i, QPoly::q_power(t)));
        }
    return fs;
}

LaurentPoly<BigRat> laurent_from_matrix(const ParamMatrix& B, const Budget& budget) {
    auto fs = laurent_factors(B);
    return multiply_all<BigRat>(static_cast<std::size_t>(B.n) + 1, fs, budget);
}

LaurentPoly<QPoly> q_laurent_from_matrix(const ParamMatrix& B, const Budget& budget) {
    auto fs = q_laurent_factors(B);
    return multiply_all<QPoly>(static_cast<std::size_t>(B.n) + 1, fs, budget);
}

LinearFactorProduct<QPoly> fq_polynomial(const ParamMatrix& B) {
    LinearFactorProduct<QPoly> fp(static_cast<std::size_t>(B.n) + 1);
    for (int i = 0; i <= B.n; ++i)
        for (int j = i + 1; j <= B.n; ++j) {
            for (int t = 0; t < B.beta[i][j]; ++t)
                fp.push(LinearFactor<QPoly>::scaled_difference(j, QPoly::q_power(t), i));
            for (int t = 1; t <= B.beta[j][i]; ++t)
                fp.push(LinearFactor<QPoly>::scaled_difference(i, QPoly::q_power(t), j));
        }
    return fp;
}

std::vector<int> fq_target(const ParamMatrix& B) {
    std::vector<int> d(static_cast<std::size_t>(B.n) + 1);
    for (int j = 0; j <= B.n; ++j) d[j] = B.col_sum(j);
    return d;
}

std::vector<LaurentPoly<BigRat>> dyson_factors(const std::vector<int>& avec) {
    std::size_t n = avec.size();
    std::vector<LaurentPoly<BigRat>> fs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int t = 0; t < (i == j ? 0 : avec[i]); ++t)
                fs.push_back(ratio_binomial(n, static_cast<int>(i), static_cast<int>(j), BigRat(1)));
    return fs;
}

std::vector<LaurentPoly<QPoly>> dyson_q_factors(const std::vector<int>& avec) {
    std::size_t n = avec.size();
    std::vector<LaurentPoly<QPoly>> fs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            for (int t = 0; t < avec[i]; ++t)
                fs.push_back(ratio_binomial(n, static_cast<int>(i), static_cast<int>(j), QPoly::q_power(t)));
            for (int t = 1; t <= avec[j]; ++t)
                fs.push_back(ratio_binomial(n, static_cast<int>(j), static_cast<int>(i), QPoly::q_power(t)));
        }
    return fs;
}

std::vector<int> cyclic_permutation_power(int n, int pow) {
    std::vector<int> perm(n + 1);
    int size = n + 1;
    int shift = ((pow % size) + size) % size;
    // one application sends i to i-1 (mod n+1)
    for (int i = 0; i <= n; ++i) perm[i] = ((i - shift) % size + size) % size;
    return perm;
}

bool invariance_check(const ParamMatrix& B, const std::vector<int>& perm, bool q_case,
                      const Budget& budget) {
    B.validate();
    if (perm.size() != static_cast<std::size_t>(B.n) + 1)
        throw BadParams("invariance_check: permutation size mismatch");
    {
        std::vector<int> sorted = perm;
        std::sort(sorted.begin(), sorted.end());
        for (int i = 0; i <= B.n; ++i)
            if (sorted[i] != i) throw BadParams("invariance_check: not a permutation");
    }
    if (q_case) {
        bool cyclic = false;
        for (int p = 0; p <= B.n && !cyclic; ++p)
            cyclic = (perm == cyclic_permutation_power(B.n, p));
        if (!cyclic)
            throw BadParams("invariance_check: q-case requires a power of the cycle");
    }
    ParamMatrix B2 = B.permuted(perm);
    std::size_t nv = static_cast<std::size_t>(B.n) + 1;
    ExpVec target(nv);
    if (q_case) {
        QPoly ct1 = coefficient_of_product(nv, q_laurent_factors(B), target, budget);
        QPoly ct2 = coefficient_of_product(nv, q_laurent_factors(B2), target, budget);
        return ct1 == ct2;
    }
    BigRat ct1 = coefficient_of_product(nv, laurent_factors(B), target, budget);
    BigRat ct2 = coefficient_of_product(nv, laurent_factors(B2), target, budget);
    return ct1 == ct2;
}

} // namespace ctidlab

#ifndef CTIDLAB_IDENTITIES_HPP
#define CTIDLAB_IDENTITIES_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ctidlab/bigrat.hpp"
#include "ctidlab/budget.hpp"
#include "ctidlab/interpolate.hpp"
#include "ctidlab/laurent.hpp"
#include "ctidlab/qfrac.hpp"
#include "ctidlab/qpoly.hpp"
#include "ctidlab/qsum.hpp"

namespace ctidlab {

// ---------------------------------------------------------------------------
// The identity catalog
// ---------------------------------------------------------------------------

enum class Family {
    dyson,
    q_dyson,
    morris,
    q_morris,
    aomoto,
    q_aomoto,
    kadell_main,
    kadell_corollary,
    kadell_sum,
    sills,
    forrester,
    q_forrester,
    aomoto_forrester,
    xin,
    xin_hr,
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
/// Families whose constant term lives in Z[q] rather than Z.
bool is_q_family(Family f);
/// Families with a vector parameter a = (a_1, ..., a_n).
bool has_vector_params(Family f);
/// Families with an interpolation pipeline.
bool supports_interp(Family f);

struct CaseParams {
    std::vector<int> avec;  // vector families
    int n = 0;
    int n0 = 0;
    int m = 0;
    int a = 0;
    int b = 0;
    int k = 0;
    int r = 0;
    int s = 0;
};

enum class Method { brute, interp, both, rhs_only };

std::string_view method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

/// One verification unit: a family, its integer parameters, and the
/// evaluation path(s) to run.
struct IdentityCase {
    Family family = Family::dyson;
    CaseParams params;
    Method method = Method::both;
};

/// Normalizes derived fields (n from avec, default r for kadell_corollary)
/// and throws BadParams on any family constraint violation.
void validate_case(IdentityCase& c);

/// aomoto_forrester outside the proven regime n <= m + n0: such cases are
/// computed as conjecture evidence, never asserted.
bool outside_regime(const IdentityCase& c);

// ---------------------------------------------------------------------------
// Parameter matrices (families of Laurent products)
// ---------------------------------------------------------------------------

/// (n+1) x (n+1) nonnegative integer matrix with zero diagonal; entry
/// beta[i][j] is the exponent of (1 - x_i/x_j) in the associated product.
struct ParamMatrix {
    int n = 0;
    std::vector<std::vector<int>> beta;

    void validate() const;
    int col_sum(int j) const;
    ParamMatrix permuted(const std::vector<int>& perm) const;
    bool operator==(const ParamMatrix&) const = default;
};

ParamMatrix build_matrix(Family f, const CaseParams& p);

/// Binomial factors of L(x_0,...,x_n; B) = prod (1 - x_i/x_j)^{beta_ij}.
std::vector<LaurentPoly<BigRat>> laurent_factors(const ParamMatrix& B);
/// Factors of the q-analogue prod_{i<j} (x_i/x_j)_{b_ij} (q x_j/x_i)_{b_ji}.
std::vector<LaurentPoly<QPoly>> q_laurent_factors(const ParamMatrix& B);

LaurentPoly<BigRat> laurent_from_matrix(const ParamMatrix& B,
                                        const Budget& budget = Budget::unlimited());
LaurentPoly<QPoly> q_laurent_from_matrix(const ParamMatrix& B,
                                         const Budget& budget = Budget::unlimited());

/// The homogeneous polynomial with the same target coefficient as the
/// q-product: prod_{i<j} prod_{t<b_ij} (x_j - q^t x_i) prod_{0<t<=b_ji} (x_i - q^t x_j).
LinearFactorProduct<QPoly> fq_polynomial(const ParamMatrix& B);
/// Target exponents: column sums B_j; CT[L_q(B)] = [prod x_j^{B_j}] F_q(B).
std::vector<int> fq_target(const ParamMatrix& B);

/// Dyson product factors over x_1..x_n (no homogenizing variable).
std::vector<LaurentPoly<BigRat>> dyson_factors(const std::vector<int>& avec);
std::vector<LaurentPoly<QPoly>> dyson_q_factors(const std::vector<int>& avec);

/// Permutation sigma^pow of {0..n} for the cycle n -> n-1 -> ... -> 0 -> n.
std::vector<int> cyclic_permutation_power(int n, int pow);

/// CT invariance of the plain product under simultaneous row/column
/// permutation, or of the q-product under a power of the cycle above
/// (any other permutation is rejected with BadParams in the q case).
bool invariance_check(const ParamMatrix& B, const std::vector<int>& perm, bool q_case,
                      const Budget& budget = Budget::unlimited());

// ---------------------------------------------------------------------------
// Evaluation paths
// ---------------------------------------------------------------------------

using Value = std::variant<BigRat, QPoly>;

bool value_equal(const Value& a, const Value& b);
std::string value_to_string(const Value& v);

/// Closed-form right-hand side of the identity.
Value rhs(Family f, const CaseParams& p);

/// Constant term by full sparse expansion (the oracle path).
Value ct_brute(const IdentityCase& c, const Budget& budget = Budget::unlimited());

struct InterpResult {
    Value value;
    bool brute_fallback = false;  // degenerate parameters routed to ct_brute
};

/// Constant term via the interpolation pipelines (Lagrange over node grids,
/// Hermite over node multisets). Only for families with a pipeline.
InterpResult ct_interp_detail(const IdentityCase& c, const Budget& budget = Budget::unlimited());
Value ct_interp(const IdentityCase& c, const Budget& budget = Budget::unlimited());

/// CT[ x^r * D(x;a) ], the monomial-weighted Dyson constant term; requires
/// sum r_i = 0. Plain and q versions.
BigRat monomial_dyson_ct(const std::vector<int>& rexp, const std::vector<int>& avec,
                         const Budget& budget = Budget::unlimited());
QPoly monomial_dyson_ct_q(const std::vector<int>& rexp, const std::vector<int>& avec,
                          const Budget& budget = Budget::unlimited());

/// CT[ prod_{s in M} (1 - x_r/x_s) D(x;a) ] by brute expansion; M is a set of
/// 1-based indices, r a 1-based index outside M.
BigRat kadell_corollary_ct(const std::vector<int>& avec, const std::set<int>& M, int r,
                           const Budget& budget = Budget::unlimited());
/// Same value assembled from monomial_dyson_ct by inclusion-exclusion.
BigRat kadell_corollary_via_monomials(const std::vector<int>& avec, const std::set<int>& M,
                                      int r, const Budget& budget = Budget::unlimited());
BigRat kadell_corollary_rhs(const std::vector<int>& avec, const std::set<int>& M);

/// Brute check of the h_r generalization:
/// CT[ x^{-r a} h_r(x)^{|a|} prod_{i != j} (1 - x_j/x_i)^{a_i} ] = multinomial.
bool xin_hr_check(int r, const std::vector<int>& avec,
                  const Budget& budget = Budget::unlimited());

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

struct VerifyReport {
    IdentityCase c;
    std::optional<Value> lhs;         // brute value when both paths ran
    std::optional<Value> lhs_interp;  // interpolation value when it ran
    std::optional<Value> rhs_value;
    bool equal = false;
    bool conjecture = false;
    std::string status;  // "equal" | "unequal" | "skipped"
    std::string error;
    std::string method_used;
    std::int64_t elapsed_ms = 0;
    std::uint64_t terms = 0;
    std::uint64_t grid_points = 0;
};

/// Runs the requested path(s), compares exactly against the closed form, and
/// never throws for budget or identity failures: those are recorded in the
/// report (status "skipped" resp. "unequal").
VerifyReport verify(const IdentityCase& c, const Budget& budget = Budget::unlimited());

// ---------------------------------------------------------------------------
// Probes
// ---------------------------------------------------------------------------

struct RationalityReport {
    bool confirmed = false;
    int num_degree = 0;
    int den_degree = 0;
    std::size_t fit_count = 0;  // samples consumed by the reconstruction
    std::vector<int> k_values;
    std::vector<QFrac> normalized;  // CT * (q)_k^n / (q)_{nk}
};

/// Checks that the normalized monomial Dyson constant terms, as a function of
/// z = q^k, follow a single rational function: tries degree splits in
/// increasing total degree, reconstructing each from the first dp+dd+1 sample
/// values and requiring it to predict every remaining one (at least one
/// held-out sample always remains). Throws ReconstructionFailed if no split
/// fits and confirms.
RationalityReport rationality_probe(int n, const std::vector<int>& r, const std::vector<int>& s,
                                    const std::vector<int>& k_list,
                                    const Budget& budget = Budget::unlimited());

struct KadellProbeResult {
    std::set<int> M;
    std::map<int, int> r_assign;  // s -> r_s
    std::vector<int> avec;
    bool equal = false;
};

/// Exhaustive probe of the general q-analogue with per-element targets r_s:
/// compares CT[L_q(B_D + sum E_{r_s,s})] with the conjectured closed form for
/// every m-subset M, assignment r_s (not in M), and a_i <= amax.
std::vector<KadellProbeResult> kadell_conjecture_probe(int n, int m, int amax,
                                                       const Budget& budget = Budget::unlimited());

} // namespace ctidlab

#endif

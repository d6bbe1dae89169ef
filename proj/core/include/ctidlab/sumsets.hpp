#ifndef CTIDLAB_SUMSETS_HPP
#define CTIDLAB_SUMSETS_HPP

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ctidlab/bigrat.hpp"
#include "ctidlab/budget.hpp"

namespace ctidlab {

/// Restricted sumset data over F_p (p prime) or Q (p = 0): ground sets A_i
/// and forbidden difference sets S_ij for i < j (1-based index pairs).
struct SumsetInstance {
    long p = 0;
    std::vector<std::vector<long>> A;
    std::map<std::pair<int, int>, std::vector<long>> S;

    int n() const { return static_cast<int>(A.size()); }
    void validate() const;
};

bool is_prime(long p);

/// { a_1 + ... + a_n : a_i in A_i, a_j - a_i not in S_ij for i < j }
/// by exhaustive enumeration.
std::set<long> restricted_sumset(const SumsetInstance& inst,
                                 const Budget& budget = Budget::unlimited());

/// n(k-1) - n(n-1)ceil(s/2) + 1
long hou_sun_bound(int n, int k, int s);

struct BoundReport {
    long size = 0;
    long bound = 0;
    bool meets = false;
    bool char_ok = true;  // characteristic condition satisfied (warning only)
    int n = 0;
    int k = 0;
    int s = 0;
};

BoundReport bound_check(const SumsetInstance& inst, const Budget& budget = Budget::unlimited());

/// The extremal configuration A_i = {0..k-1}, S_ij = {-t+1..t-1} over F_p.
SumsetInstance tightness_instance(int n, int k, int t, long p);

/// Coefficient of prod x_i^{d_i} in (x_1+...+x_n)^N prod_{i<j} (x_j-x_i)^{s_ij}
/// with N = sum d_i - sum s_ij >= 0. Grid interpolation over {0..d_i}.
BigRat f0_coefficient(const std::vector<int>& d, const std::map<std::pair<int, int>, int>& s,
                      const Budget& budget = Budget::unlimited());
/// Same value by full sparse expansion (oracle).
BigRat f0_coefficient_brute(const std::vector<int>& d,
                            const std::map<std::pair<int, int>, int>& s,
                            const Budget& budget = Budget::unlimited());

enum class ClosedFormKind { hou_sun, sun_yeh, anr, xin };

/// A closed-form leading coefficient together with the (d, s) data it
/// belongs to, so callers can cross-check against f0_coefficient.
struct ClosedFormCase {
    std::vector<int> d;
    std::map<std::pair<int, int>, int> s;
    BigRat value;
};

/// d_i = k-1, s_ij = 2t.
ClosedFormCase closed_form_hou_sun(int n, int k, int t);
/// d_i = k-i, s_ij = 2t-1.
ClosedFormCase closed_form_sun_yeh(int n, int k, int t);
/// arbitrary d, s_ij = 1.
ClosedFormCase closed_form_anr(const std::vector<int>& d);
/// d_i = n*a_i, s_ij = a_i + a_j.
ClosedFormCase closed_form_xin(const std::vector<int>& a);

} // namespace ctidlab

#endif

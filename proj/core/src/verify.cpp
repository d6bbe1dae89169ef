#include <chrono>

#include "ctidlab/identities.hpp"

namespace ctidlab {

bool value_equal(const Value& a, const Value& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<BigRat>(a))
        return std::get<BigRat>(a) == std::get<BigRat>(b);
    return std::get<QPoly>(a) == std::get<QPoly>(b);
}

std::string value_to_string(const Value& v) {
    if (std::holds_alternative<BigRat>(v)) return std::get<BigRat>(v).to_string();
    return std::get<QPoly>(v).to_string();
}

VerifyReport verify(const IdentityCase& c0, const Budget& budget) {
    VerifyReport rep;
    rep.c = c0;
    validate_case(rep.c);
    rep.conjecture = outside_regime(rep.c);
    budget.reset_stats();
    auto t0 = std::chrono::steady_clock::now();
    try {
        rep.rhs_value = rhs(rep.c.family, rep.c.params);
        switch (rep.c.method) {
            case Method::rhs_only:
                rep.method_used = "rhs_only";
                rep.equal = true;
                break;
            case Method::brute:
                rep.lhs = ct_brute(rep.c, budget);
                rep.method_used = "brute";
                rep.equal = value_equal(*rep.lhs, *rep.rhs_value);
                break;
            case Method::interp: {
                InterpResult ir = ct_interp_detail(rep.c, budget);
                rep.lhs_interp = ir.value;
                rep.method_used = ir.brute_fallback ? "interp(brute-fallback)" : "interp";
                rep.equal = value_equal(*rep.lhs_interp, *rep.rhs_value);
                break;
            }
            case Method::both: {
                rep.lhs = ct_brute(rep.c, budget);
                InterpResult ir = ct_interp_detail(rep.c, budget);
                rep.lhs_interp = ir.value;
                rep.method_used = ir.brute_fallback ? "both(interp=brute)" : "both";
                rep.equal = value_equal(*rep.lhs, *rep.rhs_value) &&
                            value_equal(*rep.lhs, *rep.lhs_interp);
                break;
            }
        }
        rep.status = rep.equal ? "equal" : "unequal";
    } catch (const SizeLimit& e) {
        rep.status = "skipped";
        rep.error = std::string("SizeLimit: ") + e.what();
    } catch (const Timeout& e) {
        rep.status = "skipped";
        rep.error = std::string("Timeout: ") + e.what();
    } catch (const NonDivisible& e) {
        // Exactness violation: treat as a failed identity, loudly.
        rep.status = "unequal";
        rep.equal = false;
        rep.error = std::string("NonDivisible: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    rep.terms = budget.stats().peak_terms;
    rep.grid_points = budget.stats().grid_points;
    return rep;
}

} // namespace ctidlab

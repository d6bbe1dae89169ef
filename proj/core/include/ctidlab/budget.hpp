#ifndef CTIDLAB_BUDGET_HPP
#define CTIDLAB_BUDGET_HPP

#include <chrono>
#include <cstdint>
#include <optional>

#include "ctidlab/errors.hpp"

namespace ctidlab {

struct BudgetStats {
    std::uint64_t peak_terms = 0;
    std::uint64_t grid_points = 0;
};

// Resource limits threaded through expansions and grid sums. Term budgets
// throw SizeLimit, an expired deadline throws Timeout. Each verification
// case gets its own instance, so the mutable stats need no locking.
class Budget {
public:
    static constexpr std::uint64_t kDefaultMaxTerms = 10'000'000;

    explicit Budget(std::uint64_t max_terms = kDefaultMaxTerms)
        : max_terms_(max_terms) {}

    void set_deadline_after_ms(std::int64_t ms) {
        deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
    }

    std::uint64_t max_terms() const { return max_terms_; }

    // Called after every accumulation step with the current term count.
    void note_terms(std::size_t n) const;

    // Called once per grid point; also polls the deadline.
    void note_grid_point() const;

    void check_deadline() const;

    const BudgetStats& stats() const { return stats_; }
    void reset_stats() const { stats_ = BudgetStats{}; }

    static const Budget& unlimited();

private:
    std::uint64_t max_terms_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    mutable BudgetStats stats_;
};

} // namespace ctidlab

#endif

#include "ctidlab/budget.hpp"

#include <string>

namespace ctidlab {

void Budget::note_terms(std::size_t n) const {
    if (n > stats_.peak_terms) stats_.peak_terms = n;
    if (n > max_terms_)
        throw SizeLimit("term budget exceeded: " + std::to_string(n) + " > " +
                        std::to_string(max_terms_));
    check_deadline();
}

void Budget::note_grid_point() const {
    ++stats_.grid_points;
    if ((stats_.grid_points & 0xff) == 0) check_deadline();
}

void Budget::check_deadline() const {
    if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
        throw Timeout("wall-clock deadline exceeded");
}

const Budget& Budget::unlimited() {
    static const Budget b(UINT64_MAX);
    return b;
}

} // namespace ctidlab

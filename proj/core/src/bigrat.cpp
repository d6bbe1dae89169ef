#include "ctidlab/bigrat.hpp"

#include <ostream>

namespace ctidlab {

std::ostream& operator<<(std::ostream& os, const BigRat& r) {
    return os << r.to_string();
}

mpz_class factorial(unsigned long n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class multinomial(const std::vector<int>& a) {
    unsigned long total = 0;
    for (int ai : a) {
        if (ai < 0) throw BadParams("multinomial: negative part");
        total += static_cast<unsigned long>(ai);
    }
    mpz_class r = factorial(total);
    for (int ai : a) r /= factorial(static_cast<unsigned long>(ai));
    return r;
}

} // namespace ctidlab

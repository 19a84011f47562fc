#include "nbldpc/gfp.hpp"

namespace nbldpc {

bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

FieldSpec::FieldSpec(std::uint32_t p) : p_(p) {
    if (p > 65521) throw InvalidField("field order too large: " + std::to_string(p));
    if (p < 3 || p % 2 == 0) throw InvalidField("field order must be an odd prime >= 3, got " + std::to_string(p));
    if (!is_prime(p)) throw InvalidField("field order is not prime: " + std::to_string(p));
}

Symbol FieldSpec::inv(Symbol a) const {
    if (a == 0) throw ZeroInverse("no inverse of 0 in GF(" + std::to_string(p_) + ")");
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Symbol>(t);
}

}  // namespace nbldpc

#pragma once

#include <cstdint>
#include <vector>

#include "nbldpc/errors.hpp"

namespace nbldpc {

/// A residue in [0, p). Kept canonical by FieldSpec, which owns all arithmetic.
using Symbol = std::uint16_t;

/// GF(p) for a small odd prime p, plus the integer/residue-line geometry
/// (circular distances, nearest congruent integer) used by the decoder.
///
/// Odd p guarantees that the integer nearest to y within a residue class is
/// unique, so distance-based decisions never tie.
class FieldSpec {
  public:
    /// Throws InvalidField unless p is an odd prime with 3 <= p <= 65521.
    explicit FieldSpec(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    /// Floor-mod reduction of any signed integer: result in [0, p).
    /// Maps -1 to p-1, which is what differential weight encodings rely on.
    Symbol reduce(std::int64_t x) const noexcept {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        if (r < 0) r += p_;
        return static_cast<Symbol>(r);
    }

    Symbol add(Symbol a, Symbol b) const noexcept {
        std::uint32_t s = static_cast<std::uint32_t>(a) + b;
        if (s >= p_) s -= p_;
        return static_cast<Symbol>(s);
    }

    Symbol sub(Symbol a, Symbol b) const noexcept {
        std::uint32_t s = static_cast<std::uint32_t>(a) + p_ - b;
        if (s >= p_) s -= p_;
        return static_cast<Symbol>(s);
    }

    Symbol mul(Symbol a, Symbol b) const noexcept {
        return static_cast<Symbol>(static_cast<std::uint32_t>(a) * b % p_);
    }

    Symbol neg(Symbol a) const noexcept { return a == 0 ? Symbol{0} : static_cast<Symbol>(p_ - a); }

    /// Multiplicative inverse via extended Euclid. Throws ZeroInverse for a = 0.
    Symbol inv(Symbol a) const;

    /// min over integers z with z = k (mod p) of |y - z|; equals the circular
    /// distance between y mod p and k. Always in [0, p/2].
    std::uint32_t residue_distance(std::int64_t y, Symbol k) const noexcept {
        Symbol r = reduce(y);
        std::uint32_t d = r >= k ? static_cast<std::uint32_t>(r - k) : static_cast<std::uint32_t>(k - r);
        return d <= p_ / 2 ? d : p_ - d;
    }

    /// The unique integer z = k (mod p) closest to y (unique because p is odd).
    std::int64_t nearest_congruent(std::int64_t y, Symbol k) const noexcept {
        std::int64_t delta = static_cast<std::int64_t>(k) - reduce(y);
        const std::int64_t half = p_ / 2;
        if (delta > half) delta -= p_;
        if (delta < -half) delta += p_;
        return y + delta;
    }

    bool operator==(const FieldSpec& other) const noexcept { return p_ == other.p_; }

  private:
    std::uint32_t p_;
};

/// Trial-division primality check for the FieldSpec constructor; exposed for tests.
bool is_prime(std::uint32_t n) noexcept;

}  // namespace nbldpc

#pragma once

#include <cstdint>
#include <string>

namespace asres {

/// Default characteristic for modular rank computations.
inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Arithmetic in Z/p for an odd prime p < 2^31.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t characteristic() const noexcept { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t inv(std::uint32_t a) const;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// Coefficient field used by the linear-algebra oracle.
struct FieldChoice {
    enum class Kind { rational, prime };

    Kind kind = Kind::rational;
    std::uint32_t prime = kDefaultPrime;

    static FieldChoice rational() { return {}; }
    /// Validates that p is an odd prime below 2^31.
    static FieldChoice modular(std::uint32_t p);

    std::string str() const;
};

} // namespace asres

#include "asres/field.hpp"

#include "asres/error.hpp"

namespace asres {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p <= 2 || p >= (1u << 31) || !is_prime(p))
        throw Error(ErrorKind::domain, "field characteristic must be an odd prime below 2^31, got " +
                                           std::to_string(p));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    if (a == 0) throw Error(ErrorKind::domain, "inverse of zero in prime field");
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

FieldChoice FieldChoice::modular(std::uint32_t p) {
    PrimeField check(p);
    return {Kind::prime, p};
}

std::string FieldChoice::str() const {
    return kind == Kind::rational ? "rational" : "prime:" + std::to_string(prime);
}

} // namespace asres

#pragma once

#include <cstdint>
#include <optional>

namespace cdlevel {

/// Residue arithmetic modulo an odd prime p. Values live in [0, p).
class Fp {
public:
    Fp(uint32_t p, int64_t value);

    uint32_t modulus() const { return p_; }
    uint64_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const;
    Fp operator-(const Fp& o) const;
    Fp operator*(const Fp& o) const;
    Fp operator/(const Fp& o) const;
    Fp operator-() const;
    bool operator==(const Fp& o) const;
    bool operator!=(const Fp& o) const { return !(*this == o); }

    Fp inverse() const;
    Fp pow(uint64_t e) const;

    /// 0 for zero, +1 for a nonzero square, -1 for a non-square.
    int legendre() const;

    /// A square root when one exists (Tonelli-Shanks).
    std::optional<Fp> sqrt() const;

    static bool is_odd_prime(uint32_t p);
    static uint32_t smallest_nonresidue(uint32_t p);

private:
    void check_same(const Fp& o) const;

    uint32_t p_;
    uint64_t v_;
};

} // namespace cdlevel

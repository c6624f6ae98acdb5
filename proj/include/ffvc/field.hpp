#pragma once

#include <cstdint>
#include <string>

#include "ffvc/error.hpp"

namespace ffvc {

// A validated prime modulus. q <= 2^16 keeps every product of two canonical
// representatives inside 64 bits before reduction.
struct FieldSpec {
    uint32_t q = 0;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

constexpr uint32_t kMaxFieldOrder = 65536;

bool is_prime(uint32_t n);

// Rejects non-prime q and q outside [2, 65536].
FieldSpec make_field(uint32_t q);

// Canonical representative in [0, q) that remembers its field.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(uint32_t value, FieldSpec field);

    uint32_t value() const { return value_; }
    FieldSpec field() const { return field_; }
    uint32_t q() const { return field_.q; }
    bool is_zero() const { return value_ == 0; }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    uint32_t value_ = 0;
    FieldSpec field_{};
};

FieldElement add(FieldElement a, FieldElement b);
FieldElement sub(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b);
FieldElement neg(FieldElement a);
FieldElement pow(FieldElement a, uint64_t e);

// a != 0; computed as a^(q-2).
FieldElement inv(FieldElement a);

// Raw kernels for inner loops that already know the shared modulus.
inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t q) {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % q);
}
inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t q) {
    uint32_t s = a + b;
    return s >= q ? s - q : s;
}
inline uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t q) {
    return a >= b ? a - b : a + q - b;
}
uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t q);
uint32_t inv_mod(uint32_t a, uint32_t q);

} // namespace ffvc

#include "ffvc/field.hpp"

namespace ffvc {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (uint32_t p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

FieldSpec make_field(uint32_t q) {
    if (q < 2 || q > kMaxFieldOrder)
        throw ValidationError("field order out of range [2, 65536]: q=" + std::to_string(q));
    if (!is_prime(q))
        throw ValidationError("field order must be prime: q=" + std::to_string(q));
    return FieldSpec{q};
}

FieldElement::FieldElement(uint32_t value, FieldSpec field) : value_(value), field_(field) {
    if (field_.q < 2)
        throw ValidationError("field element requires a constructed FieldSpec");
    if (value_ >= field_.q)
        throw ValidationError("field element " + std::to_string(value_) +
                              " not canonical for q=" + std::to_string(field_.q));
}

namespace {
FieldSpec common_field(FieldElement a, FieldElement b) {
    if (a.field() != b.field())
        throw ValidationError("field mismatch: q=" + std::to_string(a.q()) +
                              " vs q=" + std::to_string(b.q()));
    return a.field();
}
} // namespace

FieldElement add(FieldElement a, FieldElement b) {
    FieldSpec f = common_field(a, b);
    return FieldElement(add_mod(a.value(), b.value(), f.q), f);
}

FieldElement sub(FieldElement a, FieldElement b) {
    FieldSpec f = common_field(a, b);
    return FieldElement(sub_mod(a.value(), b.value(), f.q), f);
}

FieldElement mul(FieldElement a, FieldElement b) {
    FieldSpec f = common_field(a, b);
    return FieldElement(mul_mod(a.value(), b.value(), f.q), f);
}

FieldElement neg(FieldElement a) {
    return FieldElement(a.value() == 0 ? 0 : a.q() - a.value(), a.field());
}

uint32_t pow_mod(uint32_t a, uint64_t e, uint32_t q) {
    uint64_t base = a % q, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % q;
        base = base * base % q;
        e >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

FieldElement pow(FieldElement a, uint64_t e) {
    return FieldElement(pow_mod(a.value(), e, a.q()), a.field());
}

uint32_t inv_mod(uint32_t a, uint32_t q) {
    if (a % q == 0)
        throw ValidationError("zero has no multiplicative inverse mod " + std::to_string(q));
    return pow_mod(a, q - 2, q);
}

FieldElement inv(FieldElement a) {
    return FieldElement(inv_mod(a.value(), a.q()), a.field());
}

} // namespace ffvc

#pragma once

#include <cstdint>
#include <vector>

namespace perfcode {

// Arithmetic tables for GF(q), q a prime power up to 9. Field elements are
// digits 0..q-1. For an extension field GF(p^e) the base-p expansion of a
// digit gives the polynomial coefficients, least significant digit first,
// so digit p always encodes x. Fixed reduction polynomials:
//   q=4: x^2+x+1,  q=8: x^3+x+1,  q=9: x^2+1.
struct FieldSpec {
    int q = 0;        // field order
    int p = 0;        // characteristic
    int degree = 0;   // q = p^degree
    int modulus = 0;  // reduction polynomial, base-p encoded; 0 for prime q

    std::vector<uint8_t> add_tab;  // q*q entries
    std::vector<uint8_t> mul_tab;  // q*q entries
    std::vector<uint8_t> neg_tab;  // q entries
    std::vector<uint8_t> inv_tab;  // q entries, slot 0 unused

    uint8_t add(uint8_t a, uint8_t b) const { return add_tab[a * q + b]; }
    uint8_t sub(uint8_t a, uint8_t b) const { return add_tab[a * q + neg_tab[b]]; }
    uint8_t mul(uint8_t a, uint8_t b) const { return mul_tab[a * q + b]; }
    uint8_t neg(uint8_t a) const { return neg_tab[a]; }
    uint8_t inv(uint8_t a) const;  // throws on a == 0
};

// Canonical field of order q for q in {2,3,4,5,7,8,9}. Returns a reference to
// a process-wide immutable instance, so pointer identity doubles as field
// identity. Unsupported q is rejected.
const FieldSpec& field(int q);

}  // namespace perfcode

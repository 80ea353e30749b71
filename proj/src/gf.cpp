#include "perfcode/gf.hpp"

#include <stdexcept>
#include <string>

namespace perfcode {
namespace {

// Base-p coefficient vector of a digit, least significant first.
std::vector<int> coeffs_of(int value, int p, int len) {
    std::vector<int> c(len, 0);
    for (int i = 0; i < len && value > 0; ++i) {
        c[i] = value % p;
        value /= p;
    }
    return c;
}

int digit_of(const std::vector<int>& c, int p) {
    int v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p + c[i];
    return v;
}

// Multiply two field elements given as digits, reducing by the modulus
// polynomial (monic, degree e, base-p encoded).
int poly_mul_mod(int a, int b, int p, int e, int modulus) {
    std::vector<int> ca = coeffs_of(a, p, e);
    std::vector<int> cb = coeffs_of(b, p, e);
    std::vector<int> prod(2 * e - 1, 0);
    for (int i = 0; i < e; ++i)
        for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    std::vector<int> mod = coeffs_of(modulus, p, e + 1);
    for (int k = 2 * e - 2; k >= e; --k) {
        int c = prod[k];
        if (c == 0) continue;
        // subtract c * x^(k-e) * modulus; the leading term cancels prod[k]
        for (int j = 0; j <= e; ++j) {
            int& slot = prod[k - e + j];
            slot = ((slot - c * mod[j]) % p + p) % p;
        }
    }
    prod.resize(e);
    return digit_of(prod, p);
}

FieldSpec build_field(int q) {
    FieldSpec f;
    f.q = q;
    switch (q) {
        case 2: case 3: case 5: case 7:
            f.p = q; f.degree = 1; f.modulus = 0;
            break;
        case 4:  // x^2 + x + 1 over GF(2)
            f.p = 2; f.degree = 2; f.modulus = 7;
            break;
        case 8:  // x^3 + x + 1 over GF(2)
            f.p = 2; f.degree = 3; f.modulus = 11;
            break;
        case 9:  // x^2 + 1 over GF(3)
            f.p = 3; f.degree = 2; f.modulus = 10;
            break;
        default:
            throw std::invalid_argument("unsupported field order q=" + std::to_string(q) +
                                        " (supported: 2,3,4,5,7,8,9)");
    }

    f.add_tab.resize(q * q);
    f.mul_tab.resize(q * q);
    f.neg_tab.resize(q);
    f.inv_tab.resize(q, 0);

    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (f.degree == 1) {
                f.add_tab[a * q + b] = static_cast<uint8_t>((a + b) % q);
                f.mul_tab[a * q + b] = static_cast<uint8_t>((a * b) % q);
            } else {
                // addition is coefficient-wise mod p
                std::vector<int> ca = coeffs_of(a, f.p, f.degree);
                std::vector<int> cb = coeffs_of(b, f.p, f.degree);
                for (int i = 0; i < f.degree; ++i) ca[i] = (ca[i] + cb[i]) % f.p;
                f.add_tab[a * q + b] = static_cast<uint8_t>(digit_of(ca, f.p));
                f.mul_tab[a * q + b] = static_cast<uint8_t>(poly_mul_mod(a, b, f.p, f.degree, f.modulus));
            }
        }
    }
    for (int a = 0; a < q; ++a) {
        for (int b = 0; b < q; ++b) {
            if (f.add_tab[a * q + b] == 0) f.neg_tab[a] = static_cast<uint8_t>(b);
            if (a != 0 && f.mul_tab[a * q + b] == 1) f.inv_tab[a] = static_cast<uint8_t>(b);
        }
    }
    return f;
}

}  // namespace

uint8_t FieldSpec::inv(uint8_t a) const {
    if (a == 0) throw std::invalid_argument("inv(0) is undefined in GF(" + std::to_string(q) + ")");
    return inv_tab[a];
}

const FieldSpec& field(int q) {
    switch (q) {
        case 2: { static const FieldSpec f = build_field(2); return f; }
        case 3: { static const FieldSpec f = build_field(3); return f; }
        case 4: { static const FieldSpec f = build_field(4); return f; }
        case 5: { static const FieldSpec f = build_field(5); return f; }
        case 7: { static const FieldSpec f = build_field(7); return f; }
        case 8: { static const FieldSpec f = build_field(8); return f; }
        case 9: { static const FieldSpec f = build_field(9); return f; }
        default:
            throw std::invalid_argument("unsupported field order q=" + std::to_string(q) +
                                        " (supported: 2,3,4,5,7,8,9)");
    }
}

}  // namespace perfcode

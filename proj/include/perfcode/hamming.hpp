#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "perfcode/fqlin.hpp"

namespace perfcode {

// Default bound on how many vectors an exhaustive scan or enumeration may
// touch. The PERFCODE_CAP environment variable overrides it; CLI flags
// override both.
inline constexpr unsigned long long kDefaultCap = 1ull << 26;
unsigned long long default_cap();

struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parity-check description of the q-ary Hamming code of length
// n = (q^m - 1)/(q - 1). Columns of H are the normalized nonzero vectors of
// GF(q)^m (leading digit 1), sorted ascending by base-q value with the first
// row most significant. Note the unit vectors do NOT come first under this
// order; anything that needs them must look their positions up.
struct HammingCode {
    const FieldSpec* field = nullptr;
    int m = 0;
    int n = 0;
    FqMatrix H;                         // m x n
    std::vector<long long> col_values;  // ascending base-q column values

    int q() const { return field->q; }
    FqVector column(int i) const;  // 1-based
    // Position of a normalized column, 1-based; rejects vectors that are not
    // columns of H.
    int column_index(const FqVector& w) const;
    unsigned long long codeword_count() const;  // q^(n-m)
};

HammingCode build_hamming(int q, int m);

FqVector syndrome(const HammingCode& code, const FqVector& x);
bool is_codeword(const HammingCode& code, const FqVector& x);

// Decomposes a nonzero syndrome s as c * h_i; (i, c) is unique because the
// columns are pairwise independent.
std::pair<int, uint8_t> locate_syndrome(const HammingCode& code, const FqVector& s);

struct DecodeResult {
    FqVector codeword;
    std::optional<int> error_pos;  // 1-based, empty when x was already a codeword
    uint8_t error_value = 0;       // digit that had been added at error_pos
};
// Total for 1-perfect codes: every x is within distance one of a codeword.
DecodeResult decode(const HammingCode& code, const FqVector& x);

// Deterministic nullspace basis of H; all enumeration derives from it.
std::vector<FqVector> codeword_basis(const HammingCode& code);

// Streams the q^(n-m) codewords, each exactly once, in odometer order over
// the basis coefficients. Construction fails once the count reaches the cap.
class CodewordStream {
  public:
    CodewordStream(const HammingCode& code, unsigned long long cap = default_cap());
    bool next(FqVector& out) { return impl_.next(out); }
    unsigned long long total() const { return impl_.total(); }

  private:
    SpanStream impl_;
};

// Weight-3 codeword with digit 1 at its anchor coordinate.
struct Triple {
    FqVector codeword;
    int anchor = 0;
};

// All weight-3 codewords with digit 1 at coordinate i, complete and free of
// duplicates. Their supports are exactly the collinear triples through i.
std::vector<Triple> triples_at(const HammingCode& code, int i);

// ---- digit files: header line of integers, then one digit string per line.
// '#' starts a comment line; everything is newline-terminated ASCII. ----

struct DigitFile {
    std::vector<long long> header;
    std::vector<std::string> lines;
};
DigitFile read_digit_file(std::istream& in);

FqVector parse_digit_line(const FieldSpec& f, const std::string& line, int expect_len);
std::string digit_line(const FqVector& v);

// Header "q m n" followed by the n columns of H, one per line as m digits.
void write_matrix_file(std::ostream& out, const HammingCode& code);

}  // namespace perfcode

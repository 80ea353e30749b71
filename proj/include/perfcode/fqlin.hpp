#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "perfcode/gf.hpp"

namespace perfcode {

// Dense vector over GF(q). Digits are stored 0-based; every public index in
// coordinate-speak (support, error positions, ...) is 1-based.
struct FqVector {
    const FieldSpec* field = nullptr;
    std::vector<uint8_t> digits;

    int size() const { return static_cast<int>(digits.size()); }
    uint8_t operator[](int i) const { return digits[i]; }
    uint8_t& operator[](int i) { return digits[i]; }
    bool is_zero() const;
    bool operator==(const FqVector& o) const;
    bool operator!=(const FqVector& o) const { return !(*this == o); }
};

FqVector zero_vector(const FieldSpec& f, int len);
FqVector make_vector(const FieldSpec& f, std::initializer_list<int> digits);
FqVector vector_from_digits(const FieldSpec& f, std::vector<uint8_t> digits);

FqVector add(const FqVector& x, const FqVector& y);
FqVector sub(const FqVector& x, const FqVector& y);
FqVector negated(const FqVector& x);
FqVector scaled(const FqVector& x, uint8_t c);
void add_scaled_inplace(FqVector& x, const FqVector& y, uint8_t c);  // x += c*y

int weight(const FqVector& x);
int hamming_distance(const FqVector& x, const FqVector& y);  // same length and field required
std::vector<int> support(const FqVector& x);                 // ascending, 1-based

// Row-major dense matrix over GF(q).
struct FqMatrix {
    const FieldSpec* field = nullptr;
    int rows = 0;
    int cols = 0;
    std::vector<uint8_t> entries;

    uint8_t at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }
    uint8_t& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
};

FqMatrix zero_matrix(const FieldSpec& f, int rows, int cols);
FqMatrix matrix_from_rows(const std::vector<FqVector>& rows);
FqVector matrix_row(const FqMatrix& m, int r);     // 0-based
FqVector matrix_column(const FqMatrix& m, int c);  // 0-based
FqMatrix transpose(const FqMatrix& m);
FqVector mat_vec(const FqMatrix& m, const FqVector& x);

// Gauss-Jordan to reduced row echelon form, in place. Deterministic pivoting:
// columns are scanned left to right and the lowest-index unused row with a
// nonzero entry becomes the pivot row. Returns the pivot columns in order.
std::vector<int> rref_inplace(FqMatrix& m);
int rank(const FqMatrix& m);

// Basis of the right nullspace {x : Mx = 0}, size cols - rank(M). Free
// variables are taken in ascending column order, each set to 1 in turn.
std::vector<FqVector> nullspace_basis(const FqMatrix& m);

// One solution of Mx = b (free variables pinned to 0), or nullopt.
std::optional<std::vector<uint8_t>> solve(const FqMatrix& m, const FqVector& b);

// Coefficients c with v = sum c_i * basis_i, or nullopt if v is outside the
// span. The witness is exact, not a heuristic.
std::optional<std::vector<uint8_t>> in_span(const FqVector& v, const std::vector<FqVector>& basis);

// A subspace kept in reduced row echelon form throughout. Two spans are equal
// exactly when their rows() agree, independent of insertion order.
class ReducedBasis {
  public:
    ReducedBasis() = default;
    ReducedBasis(const FieldSpec& f, int len);

    // Reduces v against the basis; a nonzero remainder joins as a new row and
    // the result is true. Already-spanned vectors leave the basis unchanged.
    bool insert(const FqVector& v);
    bool contains(const FqVector& v) const;
    FqVector reduce(FqVector v) const;  // remainder of v modulo the span

    int dim() const { return static_cast<int>(rows_.size()); }
    int length() const { return len_; }
    const FieldSpec* field() const { return field_; }
    const std::vector<FqVector>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }  // 0-based, ascending

    bool operator==(const ReducedBasis& o) const;

  private:
    const FieldSpec* field_ = nullptr;
    int len_ = 0;
    std::vector<FqVector> rows_;
    std::vector<int> pivots_;
};

ReducedBasis reduced_basis_of(const FieldSpec& f, int len, const std::vector<FqVector>& vectors);

// Streams offset + every GF(q)-combination of the given vectors, q^k in all,
// in odometer order over the coefficients (last vector cycling fastest).
class SpanStream {
  public:
    SpanStream(const FieldSpec& f, int len, std::vector<FqVector> basis, FqVector offset);
    bool next(FqVector& out);
    unsigned long long total() const { return total_; }

  private:
    std::vector<FqVector> basis_;
    std::vector<uint8_t> coeff_;
    FqVector current_;
    unsigned long long emitted_ = 0;
    unsigned long long total_ = 0;
};

// base^exp, or nullopt once the value would pass 2^62.
std::optional<unsigned long long> checked_pow(unsigned long long base, int exp);

// Base-q value of a digit vector, first digit most significant. The whole
// space must be addressable: q^len has to stay below 2^62.
unsigned long long pack_value(const FqVector& x);
FqVector unpack_value(const FieldSpec& f, int len, unsigned long long value);

}  // namespace perfcode

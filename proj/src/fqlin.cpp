#include "perfcode/fqlin.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace perfcode {
namespace {

void check_same_shape(const FqVector& x, const FqVector& y) {
    if (x.field == nullptr || y.field == nullptr)
        throw std::invalid_argument("vector has no field attached");
    if (x.field->q != y.field->q)
        throw std::invalid_argument("field mismatch: GF(" + std::to_string(x.field->q) +
                                    ") vs GF(" + std::to_string(y.field->q) + ")");
    if (x.size() != y.size())
        throw std::invalid_argument("length mismatch: " + std::to_string(x.size()) +
                                    " vs " + std::to_string(y.size()));
}

void check_digit(const FieldSpec& f, int d) {
    if (d < 0 || d >= f.q)
        throw std::invalid_argument("digit " + std::to_string(d) + " out of range for GF(" +
                                    std::to_string(f.q) + ")");
}

}  // namespace

bool FqVector::is_zero() const {
    for (uint8_t d : digits)
        if (d != 0) return false;
    return true;
}

bool FqVector::operator==(const FqVector& o) const {
    return field != nullptr && o.field != nullptr && field->q == o.field->q && digits == o.digits;
}

FqVector zero_vector(const FieldSpec& f, int len) {
    if (len < 0) throw std::invalid_argument("negative vector length");
    return FqVector{&f, std::vector<uint8_t>(len, 0)};
}

FqVector make_vector(const FieldSpec& f, std::initializer_list<int> digits) {
    FqVector v{&f, {}};
    v.digits.reserve(digits.size());
    for (int d : digits) {
        check_digit(f, d);
        v.digits.push_back(static_cast<uint8_t>(d));
    }
    return v;
}

FqVector vector_from_digits(const FieldSpec& f, std::vector<uint8_t> digits) {
    for (uint8_t d : digits) check_digit(f, d);
    return FqVector{&f, std::move(digits)};
}

FqVector add(const FqVector& x, const FqVector& y) {
    check_same_shape(x, y);
    FqVector r = x;
    for (int i = 0; i < r.size(); ++i) r[i] = x.field->add(x[i], y[i]);
    return r;
}

FqVector sub(const FqVector& x, const FqVector& y) {
    check_same_shape(x, y);
    FqVector r = x;
    for (int i = 0; i < r.size(); ++i) r[i] = x.field->sub(x[i], y[i]);
    return r;
}

FqVector negated(const FqVector& x) {
    FqVector r = x;
    for (int i = 0; i < r.size(); ++i) r[i] = x.field->neg(x[i]);
    return r;
}

FqVector scaled(const FqVector& x, uint8_t c) {
    check_digit(*x.field, c);
    FqVector r = x;
    for (int i = 0; i < r.size(); ++i) r[i] = x.field->mul(x[i], c);
    return r;
}

void add_scaled_inplace(FqVector& x, const FqVector& y, uint8_t c) {
    check_same_shape(x, y);
    check_digit(*x.field, c);
    if (c == 0) return;
    for (int i = 0; i < x.size(); ++i) x[i] = x.field->add(x[i], x.field->mul(c, y[i]));
}

int weight(const FqVector& x) {
    int w = 0;
    for (uint8_t d : x.digits) w += (d != 0);
    return w;
}

int hamming_distance(const FqVector& x, const FqVector& y) {
    check_same_shape(x, y);
    int d = 0;
    for (int i = 0; i < x.size(); ++i) d += (x[i] != y[i]);
    return d;
}

std::vector<int> support(const FqVector& x) {
    std::vector<int> s;
    for (int i = 0; i < x.size(); ++i)
        if (x[i] != 0) s.push_back(i + 1);
    return s;
}

FqMatrix zero_matrix(const FieldSpec& f, int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    return FqMatrix{&f, rows, cols, std::vector<uint8_t>(static_cast<size_t>(rows) * cols, 0)};
}

FqMatrix matrix_from_rows(const std::vector<FqVector>& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix_from_rows needs at least one row");
    FqMatrix m = zero_matrix(*rows[0].field, static_cast<int>(rows.size()), rows[0].size());
    for (int r = 0; r < m.rows; ++r) {
        check_same_shape(rows[0], rows[r]);
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
}

FqVector matrix_row(const FqMatrix& m, int r) {
    FqVector v = zero_vector(*m.field, m.cols);
    for (int c = 0; c < m.cols; ++c) v[c] = m.at(r, c);
    return v;
}

FqVector matrix_column(const FqMatrix& m, int c) {
    FqVector v = zero_vector(*m.field, m.rows);
    for (int r = 0; r < m.rows; ++r) v[r] = m.at(r, c);
    return v;
}

FqMatrix transpose(const FqMatrix& m) {
    FqMatrix t = zero_matrix(*m.field, m.cols, m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

FqVector mat_vec(const FqMatrix& m, const FqVector& x) {
    if (x.size() != m.cols) throw std::invalid_argument("mat_vec: dimension mismatch");
    const FieldSpec& f = *m.field;
    FqVector r = zero_vector(f, m.rows);
    for (int i = 0; i < m.rows; ++i) {
        uint8_t acc = 0;
        for (int j = 0; j < m.cols; ++j) acc = f.add(acc, f.mul(m.at(i, j), x[j]));
        r[i] = acc;
    }
    return r;
}

std::vector<int> rref_inplace(FqMatrix& m) {
    const FieldSpec& f = *m.field;
    std::vector<int> pivots;
    int next_row = 0;
    for (int col = 0; col < m.cols && next_row < m.rows; ++col) {
        int pivot = -1;
        for (int r = next_row; r < m.rows; ++r) {
            if (m.at(r, col) != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        if (pivot != next_row)
            for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(next_row, c));
        uint8_t iv = f.inv(m.at(next_row, col));
        for (int c = 0; c < m.cols; ++c) m.at(next_row, c) = f.mul(m.at(next_row, c), iv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == next_row) continue;
            uint8_t factor = m.at(r, col);
            if (factor == 0) continue;
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = f.sub(m.at(r, c), f.mul(factor, m.at(next_row, c)));
        }
        pivots.push_back(col);
        ++next_row;
    }
    return pivots;
}

int rank(const FqMatrix& m) {
    FqMatrix copy = m;
    return static_cast<int>(rref_inplace(copy).size());
}

std::vector<FqVector> nullspace_basis(const FqMatrix& m) {
    const FieldSpec& f = *m.field;
    FqMatrix r = m;
    std::vector<int> pivots = rref_inplace(r);
    std::vector<bool> is_pivot(m.cols, false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<FqVector> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[free]) continue;
        FqVector v = zero_vector(f, m.cols);
        v[free] = 1;
        // pivot variable of row k sits at column pivots[k]; Mx=0 forces it to
        // cancel the free column's entry in that row
        for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = f.neg(r.at(static_cast<int>(k), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<uint8_t>> solve(const FqMatrix& m, const FqVector& b) {
    if (b.size() != m.rows) throw std::invalid_argument("solve: rhs length mismatch");
    const FieldSpec& f = *m.field;
    // eliminate on [M | b]
    FqMatrix aug = zero_matrix(f, m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[r];
    }
    std::vector<int> pivots = rref_inplace(aug);
    if (!pivots.empty() && pivots.back() == m.cols) return std::nullopt;  // row (0..0|1): inconsistent
    std::vector<uint8_t> x(m.cols, 0);
    for (size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug.at(static_cast<int>(k), m.cols);
    return x;
}

std::optional<std::vector<uint8_t>> in_span(const FqVector& v, const std::vector<FqVector>& basis) {
    if (basis.empty()) {
        if (v.is_zero()) return std::vector<uint8_t>{};
        return std::nullopt;
    }
    // columns of M are the basis vectors; witness solves M c = v
    FqMatrix m = zero_matrix(*v.field, v.size(), static_cast<int>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j) {
        check_same_shape(v, basis[j]);
        for (int i = 0; i < v.size(); ++i) m.at(i, static_cast<int>(j)) = basis[j][i];
    }
    return solve(m, v);
}

ReducedBasis::ReducedBasis(const FieldSpec& f, int len) : field_(&f), len_(len) {
    if (len < 0) throw std::invalid_argument("negative basis length");
}

FqVector ReducedBasis::reduce(FqVector v) const {
    for (size_t k = 0; k < rows_.size(); ++k) {
        uint8_t c = v[pivots_[k]];
        if (c != 0) add_scaled_inplace(v, rows_[k], field_->neg(c));
    }
    return v;
}

bool ReducedBasis::insert(const FqVector& v) {
    if (field_ == nullptr) throw std::invalid_argument("ReducedBasis not initialised");
    if (v.size() != len_ || v.field->q != field_->q)
        throw std::invalid_argument("ReducedBasis::insert shape mismatch");
    FqVector r = reduce(v);
    int pivot = -1;
    for (int i = 0; i < r.size(); ++i)
        if (r[i] != 0) { pivot = i; break; }
    if (pivot < 0) return false;
    FqVector unit = scaled(r, field_->inv(r[pivot]));
    // clear the new pivot column in existing rows to stay in RREF
    for (size_t k = 0; k < rows_.size(); ++k) {
        uint8_t c = rows_[k][pivot];
        if (c != 0) add_scaled_inplace(rows_[k], unit, field_->neg(c));
    }
    auto at = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
    size_t idx = static_cast<size_t>(at - pivots_.begin());
    pivots_.insert(at, pivot);
    rows_.insert(rows_.begin() + idx, std::move(unit));
    return true;
}

bool ReducedBasis::contains(const FqVector& v) const {
    if (v.size() != len_) throw std::invalid_argument("ReducedBasis::contains shape mismatch");
    return reduce(v).is_zero();
}

bool ReducedBasis::operator==(const ReducedBasis& o) const {
    if (field_ == nullptr || o.field_ == nullptr) return field_ == o.field_;
    return field_->q == o.field_->q && len_ == o.len_ && pivots_ == o.pivots_ && rows_ == o.rows_;
}

ReducedBasis reduced_basis_of(const FieldSpec& f, int len, const std::vector<FqVector>& vectors) {
    ReducedBasis b(f, len);
    for (const FqVector& v : vectors) b.insert(v);
    return b;
}

SpanStream::SpanStream(const FieldSpec& f, int len, std::vector<FqVector> basis, FqVector offset)
    : basis_(std::move(basis)), current_(std::move(offset)) {
    if (current_.field == nullptr) current_ = zero_vector(f, len);
    if (current_.size() != len) throw std::invalid_argument("SpanStream: offset length mismatch");
    for (const FqVector& b : basis_)
        if (b.size() != len) throw std::invalid_argument("SpanStream: basis length mismatch");
    coeff_.assign(basis_.size(), 0);
    auto t = checked_pow(static_cast<unsigned long long>(f.q), static_cast<int>(basis_.size()));
    if (!t) throw std::overflow_error("SpanStream: span too large to enumerate");
    total_ = *t;
}

bool SpanStream::next(FqVector& out) {
    if (emitted_ == total_) return false;
    out = current_;
    ++emitted_;
    if (emitted_ == total_) return true;
    // odometer step; a wrap from q-1 to 0 is also a +1 mod q, so every touched
    // position adds its basis vector exactly once
    const FieldSpec& f = *current_.field;
    for (int j = static_cast<int>(coeff_.size()) - 1; j >= 0; --j) {
        add_scaled_inplace(current_, basis_[j], 1);
        if (coeff_[j] == f.q - 1) {
            coeff_[j] = 0;
        } else {
            ++coeff_[j];
            break;
        }
    }
    return true;
}

std::optional<unsigned long long> checked_pow(unsigned long long base, int exp) {
    const unsigned long long limit = 1ull << 62;
    unsigned long long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > limit / base) return std::nullopt;
        r *= base;
    }
    return r;
}

unsigned long long pack_value(const FqVector& x) {
    auto space = checked_pow(static_cast<unsigned long long>(x.field->q), x.size());
    if (!space) throw std::overflow_error("pack_value: q^len exceeds the addressable range");
    unsigned long long v = 0;
    for (int i = 0; i < x.size(); ++i) v = v * x.field->q + x[i];
    return v;
}

FqVector unpack_value(const FieldSpec& f, int len, unsigned long long value) {
    FqVector x = zero_vector(f, len);
    for (int i = len - 1; i >= 0; --i) {
        x[i] = static_cast<uint8_t>(value % f.q);
        value /= f.q;
    }
    if (value != 0) throw std::invalid_argument("unpack_value: value out of range");
    return x;
}

}  // namespace perfcode

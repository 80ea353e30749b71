#include "perfcode/hamming.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "perfcode/pg.hpp"

namespace perfcode {

unsigned long long default_cap() {
    if (const char* env = std::getenv("PERFCODE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
        throw std::invalid_argument("PERFCODE_CAP is not a positive integer: " + std::string(env));
    }
    return kDefaultCap;
}

FqVector HammingCode::column(int i) const {
    if (i < 1 || i > n) throw std::invalid_argument("column index " + std::to_string(i) + " out of 1.." + std::to_string(n));
    return matrix_column(H, i - 1);
}

int HammingCode::column_index(const FqVector& w) const {
    if (w.size() != m) throw std::invalid_argument("column_index: wrong length");
    long long value = 0;
    for (int i = 0; i < m; ++i) value = value * q() + w[i];
    auto it = std::lower_bound(col_values.begin(), col_values.end(), value);
    if (it == col_values.end() || *it != value)
        throw std::invalid_argument("not a normalized column of H");
    return static_cast<int>(it - col_values.begin()) + 1;
}

unsigned long long HammingCode::codeword_count() const {
    auto c = checked_pow(static_cast<unsigned long long>(q()), n - m);
    if (!c) throw std::overflow_error("codeword count exceeds the addressable range");
    return *c;
}

HammingCode build_hamming(int q, int m) {
    const FieldSpec& f = field(q);
    if (m < 2) throw std::invalid_argument("need m >= 2, got m=" + std::to_string(m));
    auto total = checked_pow(static_cast<unsigned long long>(q), m);
    if (!total || *total > default_cap())
        throw std::invalid_argument("q^m too large to materialize the parity-check matrix");

    HammingCode code;
    code.field = &f;
    code.m = m;

    // walk all of GF(q)^m in value order; normalized vectors appear in
    // exactly the canonical column order
    std::vector<FqVector> cols;
    for (unsigned long long value = 1; value < *total; ++value) {
        FqVector v = unpack_value(f, m, value);
        int lead = 0;
        while (v[lead] == 0) ++lead;
        if (v[lead] != 1) continue;
        cols.push_back(std::move(v));
        code.col_values.push_back(static_cast<long long>(value));
    }
    code.n = static_cast<int>(cols.size());

    code.H = zero_matrix(f, m, code.n);
    for (int j = 0; j < code.n; ++j)
        for (int i = 0; i < m; ++i) code.H.at(i, j) = cols[j][i];
    return code;
}

FqVector syndrome(const HammingCode& code, const FqVector& x) {
    if (x.size() != code.n) throw std::invalid_argument("syndrome: vector length != n");
    return mat_vec(code.H, x);
}

bool is_codeword(const HammingCode& code, const FqVector& x) {
    return syndrome(code, x).is_zero();
}

std::pair<int, uint8_t> locate_syndrome(const HammingCode& code, const FqVector& s) {
    auto [w, c] = normalize_point(s);
    return {code.column_index(w), c};
}

DecodeResult decode(const HammingCode& code, const FqVector& x) {
    FqVector s = syndrome(code, x);
    if (s.is_zero()) return {x, std::nullopt, 0};
    auto [i, c] = locate_syndrome(code, s);
    FqVector cw = x;
    cw[i - 1] = code.field->sub(cw[i - 1], c);
    return {std::move(cw), i, c};
}

std::vector<FqVector> codeword_basis(const HammingCode& code) {
    return nullspace_basis(code.H);
}

namespace {

std::vector<FqVector> capped_basis(const HammingCode& code, unsigned long long cap) {
    auto count = checked_pow(static_cast<unsigned long long>(code.q()), code.n - code.m);
    if (!count || *count >= cap)
        throw CapExceeded("codeword enumeration needs " +
                          (count ? std::to_string(*count) : std::string("more than 2^62")) +
                          " vectors, cap is " + std::to_string(cap));
    return codeword_basis(code);
}

}  // namespace

CodewordStream::CodewordStream(const HammingCode& code, unsigned long long cap)
    : impl_(*code.field, code.n, capped_basis(code, cap), zero_vector(*code.field, code.n)) {}

std::vector<Triple> triples_at(const HammingCode& code, int i) {
    if (i < 1 || i > code.n) throw std::invalid_argument("anchor out of range");
    const FieldSpec& f = *code.field;
    FqVector hi = code.column(i);
    std::vector<Triple> out;
    for (const Line& l : pencil(code, i)) {
        for (int j : l.points) {
            if (j == i) continue;
            FqVector hj = code.column(j);
            for (int a = 1; a < f.q; ++a) {
                // h_i + a h_j lands on a third point k of the same line:
                // h_i + a h_j = c h_k, so e_i + a e_j - c e_k is a codeword
                FqVector v = hi;
                add_scaled_inplace(v, hj, static_cast<uint8_t>(a));
                auto [w, c] = normalize_point(v);
                int k = code.column_index(w);
                if (k < j) continue;  // the pair {j,k} is emitted once, from its smaller end
                FqVector t = zero_vector(f, code.n);
                t[i - 1] = 1;
                t[j - 1] = static_cast<uint8_t>(a);
                t[k - 1] = f.neg(c);
                out.push_back({std::move(t), i});
            }
        }
    }
    return out;
}

DigitFile read_digit_file(std::istream& in) {
    DigitFile file;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!have_header) {
            std::istringstream hs(line);
            long long v;
            while (hs >> v) file.header.push_back(v);
            if (hs.fail() && !hs.eof())
                throw std::invalid_argument("malformed header line: " + line);
            if (file.header.empty()) throw std::invalid_argument("empty header line");
            have_header = true;
        } else {
            file.lines.push_back(line);
        }
    }
    if (!have_header) throw std::invalid_argument("missing header line");
    return file;
}

FqVector parse_digit_line(const FieldSpec& f, const std::string& line, int expect_len) {
    if (expect_len >= 0 && static_cast<int>(line.size()) != expect_len)
        throw std::invalid_argument("expected " + std::to_string(expect_len) + " digits, got '" + line + "'");
    FqVector v = zero_vector(f, static_cast<int>(line.size()));
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] < '0' || line[i] >= '0' + f.q)
            throw std::invalid_argument("digit out of range for GF(" + std::to_string(f.q) + "): '" + line + "'");
        v[static_cast<int>(i)] = static_cast<uint8_t>(line[i] - '0');
    }
    return v;
}

std::string digit_line(const FqVector& v) {
    std::string s(static_cast<size_t>(v.size()), '0');
    for (int i = 0; i < v.size(); ++i) s[static_cast<size_t>(i)] = static_cast<char>('0' + v[i]);
    return s;
}

void write_matrix_file(std::ostream& out, const HammingCode& code) {
    out << code.q() << ' ' << code.m << ' ' << code.n << '\n';
    for (int j = 1; j <= code.n; ++j) out << digit_line(code.column(j)) << '\n';
}

}  // namespace perfcode

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "perfcode/hamming.hpp"

using namespace perfcode;

TEST_CASE("build_hamming produces the expected lengths") {
    CHECK(build_hamming(2, 3).n == 7);
    CHECK(build_hamming(2, 4).n == 15);
    CHECK(build_hamming(2, 5).n == 31);
    CHECK(build_hamming(3, 3).n == 13);
    CHECK(build_hamming(4, 3).n == 21);
    CHECK(build_hamming(5, 2).n == 6);
    CHECK(build_hamming(9, 2).n == 10);
    CHECK_THROWS_AS(build_hamming(6, 2), std::invalid_argument);
}

TEST_CASE("columns are normalized, sorted, and pairwise independent") {
    for (auto [q, m] : {std::pair{2, 4}, {3, 3}, {4, 3}, {5, 2}}) {
        CAPTURE(q);
        CAPTURE(m);
        HammingCode code = build_hamming(q, m);
        const FieldSpec& f = *code.field;
        long long previous = 0;
        for (int i = 1; i <= code.n; ++i) {
            FqVector h = code.column(i);
            int lead = 0;
            while (h[lead] == 0) ++lead;
            CHECK(h[lead] == 1);  // normalized representative of its ray
            CHECK(code.col_values[i - 1] > previous);
            previous = code.col_values[i - 1];
            CHECK(code.column_index(h) == i);
        }
        // no column is a scalar multiple of another
        for (int i = 1; i <= code.n; ++i)
            for (int j = i + 1; j <= code.n; ++j)
                for (int c = 1; c < f.q; ++c)
                    CHECK_FALSE(scaled(code.column(i), static_cast<uint8_t>(c)) == code.column(j));
    }
}

TEST_CASE("unit columns sit at their base-q positions for q=2") {
    HammingCode code = build_hamming(2, 4);
    // column value equals 1-based index in the binary case
    for (int i = 1; i <= code.n; ++i) CHECK(code.col_values[i - 1] == i);
    CHECK(code.column_index(make_vector(*code.field, {1, 0, 0, 0})) == 8);
    CHECK(code.column_index(make_vector(*code.field, {0, 0, 0, 1})) == 1);
}

TEST_CASE("column_index rejects foreign vectors") {
    HammingCode code = build_hamming(3, 3);
    CHECK_THROWS_AS(code.column_index(zero_vector(*code.field, 3)), std::invalid_argument);
    // (0,2,1) is a ray representative but not normalized, so it is not a column
    CHECK_THROWS_AS(code.column_index(make_vector(*code.field, {0, 2, 1})), std::invalid_argument);
}

TEST_CASE("syndrome, locate_syndrome, and decode agree") {
    for (auto [q, m] : {std::pair{2, 4}, {3, 3}, {4, 3}}) {
        CAPTURE(q);
        CAPTURE(m);
        HammingCode code = build_hamming(q, m);
        const FieldSpec& f = *code.field;

        for (int i = 1; i <= code.n; ++i) {
            for (int c = 1; c < f.q; ++c) {
                FqVector s = scaled(code.column(i), static_cast<uint8_t>(c));
                auto [pos, val] = locate_syndrome(code, s);
                CHECK(pos == i);
                CHECK(val == c);
            }
        }
        CHECK_THROWS_AS(locate_syndrome(code, zero_vector(f, code.m)), std::invalid_argument);

        // pick one codeword and push every single-digit error through decode
        std::vector<FqVector> basis = codeword_basis(code);
        FqVector c0 = basis[0];
        for (const FqVector& b : basis) add_scaled_inplace(c0, b, 1);
        REQUIRE(is_codeword(code, c0));
        DecodeResult clean = decode(code, c0);
        CHECK(clean.codeword == c0);
        CHECK_FALSE(clean.error_pos.has_value());

        for (int i = 1; i <= code.n; ++i) {
            for (int e = 1; e < f.q; ++e) {
                FqVector x = c0;
                x[i - 1] = f.add(x[i - 1], static_cast<uint8_t>(e));
                DecodeResult r = decode(code, x);
                CHECK(r.codeword == c0);
                CHECK(r.error_pos == i);
                CHECK(r.error_value == e);
            }
        }
    }
}

TEST_CASE("codeword_basis is deterministic with full rank") {
    HammingCode code = build_hamming(3, 3);
    std::vector<FqVector> a = codeword_basis(code);
    std::vector<FqVector> b = codeword_basis(code);
    CHECK(a == b);
    CHECK(a.size() == static_cast<size_t>(code.n - code.m));
    for (const FqVector& v : a) CHECK(is_codeword(code, v));
    CHECK(rank(matrix_from_rows(a)) == code.n - code.m);
}

TEST_CASE("CodewordStream emits each codeword exactly once") {
    for (auto [q, m, count] : {std::tuple{2, 3, 16ull}, {2, 4, 2048ull}, {3, 3, 59049ull}}) {
        CAPTURE(q);
        CAPTURE(m);
        HammingCode code = build_hamming(q, m);
        CHECK(code.codeword_count() == count);
        CodewordStream stream(code);
        std::set<unsigned long long> seen;
        FqVector c;
        bool all_codewords = true;
        bool saw_zero = false;
        while (stream.next(c)) {
            all_codewords = all_codewords && is_codeword(code, c);
            saw_zero = saw_zero || c.is_zero();
            seen.insert(pack_value(c));
        }
        CHECK(all_codewords);
        CHECK(saw_zero);
        CHECK(seen.size() == count);
    }
}

TEST_CASE("CodewordStream refuses to start at or above the cap") {
    HammingCode code = build_hamming(2, 4);  // 2048 codewords
    CHECK_THROWS_AS(CodewordStream(code, 2048), CapExceeded);
    CHECK_THROWS_AS(CodewordStream(code, 100), CapExceeded);
    CodewordStream ok(code, 2049);
    CHECK(ok.total() == 2048);
    try {
        CodewordStream bad(code, 2048);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(std::string(e.what()).find("2048") != std::string::npos);
    }
}

namespace {

// independent oracle: all weight-3 words with digit 1 at i, by raw search
// over support pairs and digit values
std::set<std::string> weight3_oracle(const HammingCode& code, int i) {
    const FieldSpec& f = *code.field;
    std::set<std::string> found;
    for (int j = 1; j <= code.n; ++j) {
        if (j == i) continue;
        for (int k = j + 1; k <= code.n; ++k) {
            if (k == i) continue;
            for (int a = 1; a < f.q; ++a) {
                for (int b = 1; b < f.q; ++b) {
                    FqVector v = zero_vector(f, code.n);
                    v[i - 1] = 1;
                    v[j - 1] = static_cast<uint8_t>(a);
                    v[k - 1] = static_cast<uint8_t>(b);
                    if (is_codeword(code, v)) found.insert(digit_line(v));
                }
            }
        }
    }
    return found;
}

}  // namespace

TEST_CASE("triples_at matches the raw weight-3 search") {
    for (auto [q, m] : {std::pair{2, 3}, {2, 4}, {3, 3}, {4, 3}}) {
        CAPTURE(q);
        CAPTURE(m);
        HammingCode code = build_hamming(q, m);
        for (int i = 1; i <= code.n; ++i) {
            std::set<std::string> got;
            for (const Triple& t : triples_at(code, i)) {
                CHECK(t.anchor == i);
                CHECK(t.codeword[i - 1] == 1);
                CHECK(weight(t.codeword) == 3);
                CHECK(is_codeword(code, t.codeword));
                got.insert(digit_line(t.codeword));
            }
            std::set<std::string> expected = weight3_oracle(code, i);
            CHECK(got == expected);
            // per-line count q(q-1)/2 over (n-1)/q lines
            CHECK(got.size() == static_cast<size_t>((code.n - 1) / q * (q * (q - 1) / 2)));
        }
    }
}

TEST_CASE("write_matrix_file is byte-stable with the pinned header") {
    HammingCode code = build_hamming(2, 4);
    std::ostringstream a, b;
    write_matrix_file(a, code);
    write_matrix_file(b, code);
    std::string text = a.str();
    CHECK(text == b.str());
    CHECK(text.substr(0, 7) == "2 4 15\n");
    CHECK(text.back() == '\n');
    // one line per column plus the header
    CHECK(std::count(text.begin(), text.end(), '\n') == 16);
}

TEST_CASE("read_digit_file skips comments and collects raw lines") {
    std::istringstream in(
        "# a comment first\n"
        "3 3 13\n"
        "0001110\n"
        "\n"
        "# interleaved comment\n"
        "1 2 0001110\n");
    DigitFile file = read_digit_file(in);
    REQUIRE(file.header.size() == 3);
    CHECK(file.header[0] == 3);
    CHECK(file.header[2] == 13);
    REQUIRE(file.lines.size() == 2);
    CHECK(file.lines[0] == "0001110");
    CHECK(file.lines[1] == "1 2 0001110");
}

TEST_CASE("parse_digit_line rejects malformed input") {
    const FieldSpec& f = field(3);
    CHECK(parse_digit_line(f, "0121", 4) == make_vector(f, {0, 1, 2, 1}));
    CHECK_THROWS_AS(parse_digit_line(f, "012", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_digit_line(f, "0131", 4), std::invalid_argument);  // 3 is not a GF(3) digit
    CHECK_THROWS_AS(parse_digit_line(f, "01a1", 4), std::invalid_argument);
}

TEST_CASE("PERFCODE_CAP overrides the default cap") {
    unsetenv("PERFCODE_CAP");
    CHECK(default_cap() == kDefaultCap);
    setenv("PERFCODE_CAP", "123456", 1);
    CHECK(default_cap() == 123456);
    setenv("PERFCODE_CAP", "not-a-number", 1);
    CHECK_THROWS_AS(default_cap(), std::invalid_argument);
    unsetenv("PERFCODE_CAP");
    CHECK(default_cap() == kDefaultCap);
}

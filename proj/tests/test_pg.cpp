#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "perfcode/pg.hpp"

using namespace perfcode;

TEST_CASE("normalize_point scales the leading digit to one") {
    const FieldSpec& f3 = field(3);

    auto [w, c] = normalize_point(make_vector(f3, {0, 2, 1}));
    CHECK(w == make_vector(f3, {0, 1, 2}));
    CHECK(c == 2);

    auto [w2, c2] = normalize_point(make_vector(f3, {1, 2, 0}));
    CHECK(w2 == make_vector(f3, {1, 2, 0}));
    CHECK(c2 == 1);

    const FieldSpec& f4 = field(4);
    // leading digit 3 in GF(4): 3 * 3 = 2, 3 * 2 = 1, so inv(3) = 2
    auto [w3, c3] = normalize_point(make_vector(f4, {0, 3, 1}));
    CHECK(c3 == 3);
    CHECK(w3[0] == 0);
    CHECK(w3[1] == 1);
    CHECK(scaled(w3, c3) == make_vector(f4, {0, 3, 1}));

    CHECK_THROWS_AS(normalize_point(zero_vector(f3, 3)), std::invalid_argument);
}

TEST_CASE("line_through lists q+1 points and is symmetric") {
    for (auto [q, m] : {std::pair{2, 3}, {3, 3}, {2, 4}, {4, 3}}) {
        CAPTURE(q);
        CAPTURE(m);
        HammingCode code = build_hamming(q, m);
        Line l = line_through(code, 1, 2);
        CHECK(l.points.size() == static_cast<size_t>(q + 1));
        CHECK(std::is_sorted(l.points.begin(), l.points.end()));
        CHECK(l.contains(1));
        CHECK(l.contains(2));
        CHECK(line_through(code, 2, 1) == l);
        // any two points of the line span it again
        for (int z : l.points)
            if (z != 1) CHECK(line_through(code, 1, z) == l);
    }
}

TEST_CASE("line_through rejects equal points") {
    HammingCode code = build_hamming(2, 3);
    CHECK_THROWS_AS(line_through(code, 3, 3), std::invalid_argument);
}

TEST_CASE("membership in the spanned line is the same as collinearity") {
    for (auto [q, m] : {std::pair{2, 3}, {3, 3}, {2, 4}}) {
        CAPTURE(q);
        CAPTURE(m);
        HammingCode code = build_hamming(q, m);
        Line l = line_through(code, 1, 3);
        for (int z = 1; z <= code.n; ++z) {
            if (z == 1 || z == 3) continue;
            CHECK(l.contains(z) == collinear(code, 1, 3, z));
        }
    }
}

TEST_CASE("pencil partitions the other points") {
    for (auto [q, m] : {std::pair{2, 3}, {3, 3}, {2, 4}, {2, 5}}) {
        CAPTURE(q);
        CAPTURE(m);
        HammingCode code = build_hamming(q, m);
        for (int i = 1; i <= code.n; ++i) {
            std::vector<Line> lines = pencil(code, i);
            CHECK(lines.size() == static_cast<size_t>((code.n - 1) / q));
            std::set<int> covered;
            int previous_min = 0;
            for (const Line& l : lines) {
                CHECK(l.contains(i));
                int smallest_other = 0;
                for (int p : l.points) {
                    if (p != i) {
                        covered.insert(p);
                        if (smallest_other == 0) smallest_other = p;
                    }
                }
                CHECK(previous_min < smallest_other);  // ordering contract
                previous_min = smallest_other;
            }
            CHECK(covered.size() == static_cast<size_t>(code.n - 1));
        }
    }
}

TEST_CASE("the Fano plane has seven lines") {
    HammingCode code = build_hamming(2, 3);
    std::set<std::vector<int>> all_lines;
    for (int i = 1; i <= code.n; ++i)
        for (const Line& l : pencil(code, i)) all_lines.insert(l.points);
    CHECK(all_lines.size() == 7);
    // and the same count from the general formula n(n-1)/(q(q+1))
    HammingCode c13 = build_hamming(3, 3);
    std::set<std::vector<int>> lines13;
    for (int i = 1; i <= c13.n; ++i)
        for (const Line& l : pencil(c13, i)) lines13.insert(l.points);
    CHECK(lines13.size() == 13);
}

TEST_CASE("plane_points spans q^2+q+1 points closed under joining lines") {
    for (auto [q, m] : {std::pair{2, 4}, {3, 3}, {2, 5}}) {
        CAPTURE(q);
        CAPTURE(m);
        HammingCode code = build_hamming(q, m);
        // find a non-collinear triple starting from (1, 2, z)
        int z = 3;
        while (collinear(code, 1, 2, z)) ++z;
        Plane pl = plane_points(code, 1, 2, z);
        CHECK(pl.points.size() == static_cast<size_t>(q * q + q + 1));
        CHECK(std::is_sorted(pl.points.begin(), pl.points.end()));
        CHECK(pl.contains(1));
        CHECK(pl.contains(2));
        CHECK(pl.contains(z));
        // the line through any two plane points stays inside the plane
        for (size_t a = 0; a < pl.points.size(); ++a)
            for (size_t b = a + 1; b < pl.points.size(); ++b)
                for (int p : line_through(code, pl.points[a], pl.points[b]).points)
                    CHECK(pl.contains(p));
    }
}

TEST_CASE("a plane in PG(2,q) is the whole geometry") {
    HammingCode code = build_hamming(3, 3);
    int z = 3;
    while (collinear(code, 1, 2, z)) ++z;
    Plane pl = plane_points(code, 1, 2, z);
    CHECK(pl.points.size() == static_cast<size_t>(code.n));
}

TEST_CASE("plane_points rejects collinear triples") {
    HammingCode code = build_hamming(2, 4);
    Line l = line_through(code, 1, 2);
    CHECK_THROWS_AS(plane_points(code, l.points[0], l.points[1], l.points[2]),
                    std::invalid_argument);
}

#pragma once

#include <utility>
#include <vector>

#include "perfcode/hamming.hpp"

namespace perfcode {

// The columns of a Hamming parity-check matrix are the points of the
// projective geometry PG(m-1, q); coordinates of the code double as point
// indices (1-based). Lines and planes are materialized as sorted index sets.

struct Line {
    std::vector<int> points;  // q + 1 indices, ascending
    bool contains(int p) const;
    bool operator==(const Line&) const = default;
};

struct Plane {
    std::vector<int> points;  // q^2 + q + 1 indices, ascending
    bool contains(int p) const;
};

// (w, c) with v = c * w, where w is the unique scalar multiple of v whose
// leading nonzero digit is 1. Rejects the zero vector.
std::pair<FqVector, uint8_t> normalize_point(const FqVector& v);

// The q + 1 points on the line spanned by two distinct points.
Line line_through(const HammingCode& code, int x, int y);

// The (n-1)/q lines through i. Every point other than i lies on exactly one
// of them. Ordered by each line's smallest point other than i.
std::vector<Line> pencil(const HammingCode& code, int i);

// The q^2 + q + 1 points spanned by three non-collinear points.
Plane plane_points(const HammingCode& code, int x, int y, int z);

// True when the three distinct points span only a line (column rank 2).
bool collinear(const HammingCode& code, int x, int y, int z);

}  // namespace perfcode

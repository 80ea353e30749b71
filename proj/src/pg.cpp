#include "perfcode/pg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace perfcode {
namespace {

void check_point(const HammingCode& code, int x) {
    if (x < 1 || x > code.n)
        throw std::invalid_argument("point index " + std::to_string(x) + " out of 1.." + std::to_string(code.n));
}

}  // namespace

bool Line::contains(int p) const { return std::binary_search(points.begin(), points.end(), p); }
bool Plane::contains(int p) const { return std::binary_search(points.begin(), points.end(), p); }

std::pair<FqVector, uint8_t> normalize_point(const FqVector& v) {
    int lead = -1;
    for (int i = 0; i < v.size(); ++i)
        if (v[i] != 0) { lead = i; break; }
    if (lead < 0) throw std::invalid_argument("cannot normalize the zero vector");
    uint8_t c = v[lead];
    return {scaled(v, v.field->inv(c)), c};
}

Line line_through(const HammingCode& code, int x, int y) {
    check_point(code, x);
    check_point(code, y);
    if (x == y) throw std::invalid_argument("line_through needs two distinct points");
    const FieldSpec& f = *code.field;
    FqVector hx = code.column(x);
    FqVector hy = code.column(y);

    Line l;
    l.points.reserve(f.q + 1);
    l.points.push_back(x);
    // the remaining points of the line are h_y + t h_x for t in GF(q)
    for (int t = 0; t < f.q; ++t) {
        FqVector v = hy;
        add_scaled_inplace(v, hx, static_cast<uint8_t>(t));
        l.points.push_back(code.column_index(normalize_point(v).first));
    }
    std::sort(l.points.begin(), l.points.end());
    return l;
}

std::vector<Line> pencil(const HammingCode& code, int i) {
    check_point(code, i);
    std::vector<bool> covered(code.n + 1, false);
    covered[i] = true;
    std::vector<Line> lines;
    for (int j = 1; j <= code.n; ++j) {
        if (covered[j]) continue;
        Line l = line_through(code, i, j);
        for (int p : l.points) covered[p] = true;
        lines.push_back(std::move(l));
    }
    return lines;
}

Plane plane_points(const HammingCode& code, int x, int y, int z) {
    check_point(code, x);
    check_point(code, y);
    check_point(code, z);
    if (x == y || x == z || y == z) throw std::invalid_argument("plane_points needs three distinct points");
    if (collinear(code, x, y, z))
        throw std::invalid_argument("plane_points needs non-collinear points, got a collinear triple");
    const FieldSpec& f = *code.field;
    FqVector hx = code.column(x);
    FqVector hy = code.column(y);
    FqVector hz = code.column(z);

    // normalized representatives of the 3-dimensional span: z + b y + a x,
    // then y + a x, then x alone
    Plane pl;
    pl.points.reserve(f.q * f.q + f.q + 1);
    for (int a = 0; a < f.q; ++a) {
        for (int b = 0; b < f.q; ++b) {
            FqVector v = hz;
            add_scaled_inplace(v, hy, static_cast<uint8_t>(b));
            add_scaled_inplace(v, hx, static_cast<uint8_t>(a));
            pl.points.push_back(code.column_index(normalize_point(v).first));
        }
    }
    for (int a = 0; a < f.q; ++a) {
        FqVector v = hy;
        add_scaled_inplace(v, hx, static_cast<uint8_t>(a));
        pl.points.push_back(code.column_index(normalize_point(v).first));
    }
    pl.points.push_back(x);
    std::sort(pl.points.begin(), pl.points.end());
    return pl;
}

bool collinear(const HammingCode& code, int x, int y, int z) {
    check_point(code, x);
    check_point(code, y);
    check_point(code, z);
    if (x == y || x == z || y == z) throw std::invalid_argument("collinear needs three distinct points");
    FqMatrix m = matrix_from_rows({code.column(x), code.column(y), code.column(z)});
    return rank(m) == 2;
}

}  // namespace perfcode

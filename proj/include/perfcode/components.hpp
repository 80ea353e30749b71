#pragma once

#include <map>
#include <mutex>

#include "perfcode/pg.hpp"

namespace perfcode {

// The subspace R_i of the code spanned by its weight-3 codewords with digit 1
// at coordinate i, shifted by a representative codeword. A component is the
// coset span(basis) + rep.
struct Component {
    const HammingCode* code = nullptr;
    int anchor = 0;
    ReducedBasis span;  // row-reduced, canonical
    FqVector rep;       // codeword

    bool operator==(const Component& o) const { return anchor == o.anchor && span == o.span && rep == o.rep; }
};

// Basis of the codewords supported inside one line: the nullspace of the
// m x (q+1) column submatrix, written back to length n. Always q - 1 vectors,
// since two of the line's columns already span the rest.
std::vector<FqVector> line_subcode(const HammingCode& code, const Line& l);

// R_i assembled as the sum of the line subcodes over the pencil through i,
// with rep = 0. Equals the span of triples_at(code, i).
Component component_basis(const HammingCode& code, int i);

// Same span, shifted to the given representative (must be a codeword).
Component component_with_rep(const Component& base, FqVector rep);

bool in_component(const Component& comp, const FqVector& x);

struct SupportCheck {
    bool holds = true;
    int violating_x = 0;  // 1-based coordinate that lacks a witness
};

// Every nonzero coordinate x != i of a vector in R_i sees a second nonzero
// coordinate on the line through i and x (besides i and x itself). Vectors
// outside R_i are rejected, not reported as violations.
SupportCheck has_line_witnesses(const Component& r_i, const FqVector& u);
SupportCheck has_line_witnesses(const HammingCode& code, int i, const FqVector& u);

// Every nonzero coordinate x of a vector in R_i + R_j that lies off the line
// through i and j sees another nonzero coordinate in the plane spanned by
// i, j, x (besides those three points).
SupportCheck has_plane_witnesses(const HammingCode& code, int i, int j, const ReducedBasis& joint,
                                 const FqVector& u);
SupportCheck has_plane_witnesses(const HammingCode& code, int i, int j, const FqVector& u);

// Row-reduced span of R_i + R_j.
ReducedBasis joint_span(const Component& a, const Component& b);

// Builds each R_i and each joint span R_i + R_j once and hands out shared
// references. Insertions are mutex-guarded, so concurrent lookups are safe.
class ComponentCache {
  public:
    explicit ComponentCache(const HammingCode& code) : code_(&code) {}
    const Component& component(int i);
    const ReducedBasis& joint(int i, int j);  // i != j, symmetric

  private:
    const HammingCode* code_;
    std::mutex mu_;
    std::map<int, Component> components_;
    std::map<std::pair<int, int>, ReducedBasis> joints_;
};

}  // namespace perfcode

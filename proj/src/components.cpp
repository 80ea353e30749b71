#include "perfcode/components.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace perfcode {

std::vector<FqVector> line_subcode(const HammingCode& code, const Line& l) {
    const FieldSpec& f = *code.field;
    int k = static_cast<int>(l.points.size());
    FqMatrix sub = zero_matrix(f, code.m, k);
    for (int j = 0; j < k; ++j) {
        FqVector col = code.column(l.points[j]);
        for (int i = 0; i < code.m; ++i) sub.at(i, j) = col[i];
    }
    std::vector<FqVector> out;
    for (const FqVector& b : nullspace_basis(sub)) {
        FqVector v = zero_vector(f, code.n);
        for (int j = 0; j < k; ++j) v[l.points[j] - 1] = b[j];
        out.push_back(std::move(v));
    }
    return out;
}

Component component_basis(const HammingCode& code, int i) {
    Component comp;
    comp.code = &code;
    comp.anchor = i;
    comp.span = ReducedBasis(*code.field, code.n);
    comp.rep = zero_vector(*code.field, code.n);
    for (const Line& l : pencil(code, i))
        for (const FqVector& v : line_subcode(code, l)) comp.span.insert(v);
    return comp;
}

Component component_with_rep(const Component& base, FqVector rep) {
    if (!is_codeword(*base.code, rep))
        throw std::invalid_argument("component representative must be a codeword");
    Component comp = base;
    comp.rep = std::move(rep);
    return comp;
}

bool in_component(const Component& comp, const FqVector& x) {
    return comp.span.contains(sub(x, comp.rep));
}

SupportCheck has_line_witnesses(const Component& r_i, const FqVector& u) {
    const HammingCode& code = *r_i.code;
    if (!r_i.span.contains(u))
        throw std::invalid_argument("vector is not in the component span at anchor " +
                                    std::to_string(r_i.anchor));
    int i = r_i.anchor;
    for (int x : support(u)) {
        if (x == i) continue;
        Line l = line_through(code, i, x);
        bool witness = false;
        for (int y : l.points) {
            if (y == i || y == x) continue;
            if (u[y - 1] != 0) { witness = true; break; }
        }
        if (!witness) return {false, x};
    }
    return {true, 0};
}

SupportCheck has_line_witnesses(const HammingCode& code, int i, const FqVector& u) {
    return has_line_witnesses(component_basis(code, i), u);
}

SupportCheck has_plane_witnesses(const HammingCode& code, int i, int j, const ReducedBasis& joint,
                                 const FqVector& u) {
    if (i == j) throw std::invalid_argument("need two distinct anchors");
    if (!joint.contains(u))
        throw std::invalid_argument("vector is not in the joint span of the two components");
    Line lij = line_through(code, i, j);
    for (int x : support(u)) {
        if (lij.contains(x)) continue;
        Plane p = plane_points(code, i, j, x);
        bool witness = false;
        for (int y : p.points) {
            if (y == i || y == j || y == x) continue;
            if (u[y - 1] != 0) { witness = true; break; }
        }
        if (!witness) return {false, x};
    }
    return {true, 0};
}

SupportCheck has_plane_witnesses(const HammingCode& code, int i, int j, const FqVector& u) {
    ReducedBasis joint = joint_span(component_basis(code, i), component_basis(code, j));
    return has_plane_witnesses(code, i, j, joint, u);
}

ReducedBasis joint_span(const Component& a, const Component& b) {
    ReducedBasis joint = a.span;
    for (const FqVector& row : b.span.rows()) joint.insert(row);
    return joint;
}

const Component& ComponentCache::component(int i) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = components_.find(i);
    if (it == components_.end()) it = components_.emplace(i, component_basis(*code_, i)).first;
    return it->second;
}

const ReducedBasis& ComponentCache::joint(int i, int j) {
    if (i == j) throw std::invalid_argument("joint span needs two distinct anchors");
    std::pair<int, int> key = std::minmax(i, j);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = joints_.find(key);
    if (it == joints_.end()) {
        auto ci = components_.find(key.first);
        if (ci == components_.end()) ci = components_.emplace(key.first, component_basis(*code_, key.first)).first;
        auto cj = components_.find(key.second);
        if (cj == components_.end()) cj = components_.emplace(key.second, component_basis(*code_, key.second)).first;
        it = joints_.emplace(key, joint_span(ci->second, cj->second)).first;
    }
    return it->second;
}

}  // namespace perfcode

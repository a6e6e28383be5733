#include "oracles.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace twistfloer::oracle {

ByteMatrix multiply_naive(const ByteMatrix& x, const ByteMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("naive product: shape mismatch");
    ByteMatrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < y.cols; ++j) {
            int acc = 0;
            for (int k = 0; k < x.cols; ++k) acc ^= x.get(i, k) & y.get(k, j);
            out.set(i, j, static_cast<std::uint8_t>(acc));
        }
    return out;
}

int rank_by_span_size(const ByteMatrix& x) {
    if (x.rows > 20) throw std::invalid_argument("span enumeration only for small matrices");
    std::set<std::vector<std::uint8_t>> span;
    for (std::uint32_t mask = 0; mask < (1u << x.rows); ++mask) {
        std::vector<std::uint8_t> v(static_cast<std::size_t>(x.cols), 0);
        for (int r = 0; r < x.rows; ++r) {
            if (!(mask & (1u << r))) continue;
            for (int c = 0; c < x.cols; ++c)
                v[static_cast<std::size_t>(c)] ^= x.get(r, c);
        }
        span.insert(std::move(v));
    }
    int rank = 0;
    std::size_t size = span.size();
    while (size > 1) {
        size >>= 1;
        ++rank;
    }
    return rank;
}

int rank_elimination(ByteMatrix x) {
    int rank = 0;
    for (int c = 0; c < x.cols && rank < x.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < x.rows; ++r)
            if (x.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int k = 0; k < x.cols; ++k) {
            std::uint8_t tmp = x.get(rank, k);
            x.set(rank, k, x.get(pivot, k));
            x.set(pivot, k, tmp);
        }
        for (int r = 0; r < x.rows; ++r) {
            if (r == rank || !x.get(r, c)) continue;
            for (int k = 0; k < x.cols; ++k) x.set(r, k, x.get(r, k) ^ x.get(rank, k));
        }
        ++rank;
    }
    return rank;
}

ByteMatrix kronecker_elementwise(const ByteMatrix& x, const ByteMatrix& y) {
    ByteMatrix out(x.rows * y.rows, x.cols * y.cols);
    for (int i = 0; i < out.rows; ++i)
        for (int j = 0; j < out.cols; ++j)
            out.set(i, j, x.get(i / y.rows, j / y.cols) & y.get(i % y.rows, j % y.cols));
    return out;
}

CwSurface cw_surface(int h, int c) {
    if (c < 1) throw std::invalid_argument("the CW model needs at least one boundary circle");
    CwSurface s;
    s.h = h;
    s.c = c;
    s.vertices = 1 + c;       // v0, w_1..w_c
    s.edges = 2 * h + 2 * c;  // a/b loops, spokes d_i, boundary loops r_i
    s.faces = 1;
    // edge order: a_1, b_1, ..., a_h, b_h, d_1..d_c, r_1..r_c
    s.d1 = ByteMatrix(s.vertices, s.edges);
    for (int i = 0; i < c; ++i) {
        int spoke = 2 * h + i;
        s.d1.set(0, spoke, 1);      // v0
        s.d1.set(1 + i, spoke, 1);  // w_i
    }
    // attaching word a b a^-1 b^-1 ... d_i r_i d_i^-1: mod 2 only the
    // boundary loops survive
    s.d2 = ByteMatrix(s.edges, 1);
    for (int i = 0; i < c; ++i) s.d2.set(2 * h + c + i, 0, 1);
    return s;
}

CwDims cw_homology_dims(const CwSurface& s) {
    int r1 = rank_elimination(s.d1);
    int r2 = rank_elimination(s.d2);
    CwDims d;
    d.h0 = s.vertices - r1;
    d.h1 = (s.edges - r1) - r2;
    d.h2 = s.faces - r2;
    return d;
}

int cw_h2_dim(const CwSurface& s) {
    // dual complex: delta1 = transpose(d2)
    ByteMatrix delta1(s.faces, s.edges);
    for (int r = 0; r < s.edges; ++r)
        for (int c = 0; c < s.faces; ++c) delta1.set(c, r, s.d2.get(r, c));
    return s.faces - rank_elimination(delta1);
}

int cw_euler_characteristic(int genus, int boundary) {
    if (boundary >= 1) {
        CwSurface s = cw_surface(genus, boundary);
        return s.vertices - s.edges + s.faces;
    }
    // closed one-vertex polygon model: 1 vertex, 2g loops, 1 face
    return 1 - 2 * genus + 1;
}

namespace {

// Endpoint positions of a chord on the 4h-gon boundary, as fractional
// edge positions. Classes a_j, b_j connect the midpoints of their two
// edge occurrences in the word a1 b1 a1 b1 ... (orientation is
// irrelevant mod 2); the nudge separates parallel push-off copies.
struct Chord {
    double u = 0;
    double v = 0;
    bool corner = false;  // boundary circle tucked next to vertex 0
};

Chord chord_of(int h, const Class1& x, double nudge) {
    Chord ch;
    if (x.kind == 'd') {
        ch.corner = true;
        return ch;
    }
    if (x.index < 1 || x.index > h) throw std::invalid_argument("class index out of range");
    int base = 4 * (x.index - 1) + (x.kind == 'a' ? 0 : 1);
    ch.u = base + 0.5 + nudge;
    ch.v = base + 2 + 0.5 + nudge;
    return ch;
}

}  // namespace

int pairing_mod2(int h, int c, const Class1& x, const Class1& y) {
    (void)c;  // boundary circles all live in the corner region
    if (x.kind != 'a' && x.kind != 'b' && x.kind != 'd')
        throw std::invalid_argument("unknown class kind");
    if (y.kind != 'a' && y.kind != 'b' && y.kind != 'd')
        throw std::invalid_argument("unknown class kind");
    bool same = (x.kind == y.kind && x.index == y.index);
    Chord cx = chord_of(h, x, 0.0);
    Chord cy = chord_of(h, y, same ? 0.1 : 0.0);  // push-off for a self-pairing
    if (cx.corner || cy.corner) return 0;         // corner circles cross nothing
    // chords of a convex polygon cross exactly when the endpoint pairs
    // interleave around the boundary
    double lo = std::min(cx.u, cx.v), hi = std::max(cx.u, cx.v);
    bool y1_inside = cy.u > lo && cy.u < hi;
    bool y2_inside = cy.v > lo && cy.v < hi;
    return (y1_inside != y2_inside) ? 1 : 0;
}

}  // namespace twistfloer::oracle

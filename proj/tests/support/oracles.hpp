#ifndef TWISTFLOER_TEST_ORACLES_HPP
#define TWISTFLOER_TEST_ORACLES_HPP

// Independent reference computations used by the test and self-check
// suites. Everything here deliberately avoids the library's linear
// algebra and closed-form shortcuts: byte matrices with naive loops, an
// honest CW chain complex, and a convex-polygon chord model for the
// intersection pairing.

#include <cstdint>
#include <vector>

namespace twistfloer::oracle {

struct ByteMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> a;

    ByteMatrix() = default;
    ByteMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    std::uint8_t get(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    void set(int r, int c, std::uint8_t v) { a[static_cast<std::size_t>(r) * cols + c] = v & 1; }
};

/// Triple-loop product mod 2.
ByteMatrix multiply_naive(const ByteMatrix& x, const ByteMatrix& y);

/// Rank as log2 of the size of the row span, by enumerating all 2^rows
/// row combinations. Only for small matrices.
int rank_by_span_size(const ByteMatrix& x);

/// Independent Gaussian elimination on bytes.
int rank_elimination(ByteMatrix x);

/// Entrywise Kronecker product definition.
ByteMatrix kronecker_elementwise(const ByteMatrix& x, const ByteMatrix& y);

/// CW structure of the compact orientable surface of genus h with c >= 1
/// boundary circles: one central vertex, a spoke/vertex/loop triple per
/// boundary circle, 2h loops, one 2-cell. d1: C1 -> C0, d2: C2 -> C1.
struct CwSurface {
    int h = 0;
    int c = 1;
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    ByteMatrix d1;
    ByteMatrix d2;
};
CwSurface cw_surface(int h, int c);

struct CwDims {
    int h0 = 0;
    int h1 = 0;
    int h2 = 0;
};
/// Homology dimensions of the chain complex, via rank_elimination.
CwDims cw_homology_dims(const CwSurface& s);

/// dim H^2 of the dual cochain complex (used by the coproduct oracle).
int cw_h2_dim(const CwSurface& s);

/// Euler characteristic of the surface (h, b) from cell counts: the CW
/// model above for b >= 1, the one-vertex polygon model when closed.
int cw_euler_characteristic(int genus, int boundary);

/// Degree-1 basis classes of the genus-h surface with c boundary circles.
struct Class1 {
    char kind;  // 'a', 'b', or 'd'
    int index;  // 1-based
};

/// Mod-2 intersection number of two degree-1 classes, computed on the
/// convex 4h-gon with edge word a1 b1 a1 b1 ... : each a/b class is the
/// chord between the midpoints of its two edge occurrences, and two
/// chords cross exactly when their endpoints interleave around the
/// polygon; boundary circles sit in a corner region no chord enters.
int pairing_mod2(int h, int c, const Class1& x, const Class1& y);

}  // namespace twistfloer::oracle

#endif

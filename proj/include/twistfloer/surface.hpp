#ifndef TWISTFLOER_SURFACE_HPP
#define TWISTFLOER_SURFACE_HPP

#include <optional>
#include <vector>

#include "twistfloer/gf2.hpp"

namespace twistfloer {

/// Compact orientable surface, possibly with boundary.
struct SurfaceSpec {
    int genus = 0;
    int boundary_count = 0;
};

inline int euler_characteristic(const SurfaceSpec& s) {
    return 2 - 2 * s.genus - s.boundary_count;
}

/// Data of a separating simple closed curve: the two sides it cuts out.
struct SeparatingSplit {
    int g1 = 0;
    int b1 = 0;
    int g2 = 0;
    int b2 = 0;
};

/// A homologically nontrivial simple closed curve on the surface.
struct TwistCurveSpec {
    enum class Kind { non_separating, separating };
    Kind kind = Kind::non_separating;
    SeparatingSplit split;  // meaningful only when separating

    static TwistCurveSpec non_separating() { return TwistCurveSpec{}; }
    static TwistCurveSpec separating(int g1, int b1, int g2, int b2) {
        TwistCurveSpec c;
        c.kind = Kind::separating;
        c.split = {g1, b1, g2, b2};
        return c;
    }
    bool is_separating() const { return kind == Kind::separating; }
};

/// One connected component of the complement of the open twist annulus.
/// Boundary circles are numbered 1..boundary_count; the circles created by
/// removing the annulus carry the L (x = 0 side) and R (x = 1 side) tags.
struct ComponentTopology {
    int genus = 0;
    int boundary_count = 0;
    int l_circle = 0;  // boundary index of the L circle, 0 if absent
    int r_circle = 0;  // boundary index of the R circle, 0 if absent
};

struct ComplementSurface {
    std::vector<ComponentTopology> components;

    int component_with_l() const;
    int component_with_r() const;
    int euler_characteristic() const;
};

/// Cut the surface along the curve and remove the open annulus around it.
/// Non-separating: one component of genus g-1 with two new circles (L = 1,
/// R = 2 ahead of the original boundary circles). Separating: side 1 gains
/// the L circle, side 2 gains the R circle, each as boundary index 1.
ComplementSurface complement(const SurfaceSpec& s, const TwistCurveSpec& c);

/// Mod-2 homology of the complement with a labeled basis. Basis order, per
/// component in order: pt; a_1, b_1, ..., a_h, b_h; d_1, ..., d_{c-1}.
/// d_j is the class of boundary circle j; the omitted circle c satisfies
/// [circle c] = d_1 + ... + d_{c-1} (the total boundary is null-homologous).
GradedF2Space homology(const ComplementSurface& cs);

/// Class of boundary circle `circle` (1-based) of `component`, as a column
/// in homology(cs); expands the omitted circle through the d-basis.
F2Matrix boundary_circle_class(const ComplementSurface& cs, int component, int circle);

/// Point class of `component`, as a column in homology(cs).
F2Matrix point_class(const ComplementSurface& cs, int component);

/// Intersection product of two homogeneous basis classes, as a column in
/// homology(cs). Only degree-1 classes in the same component pair
/// nontrivially: a_i . b_i = pt, boundary-parallel classes pair to zero.
F2Matrix intersection_product(const ComplementSurface& cs, int x_index, int y_index);

/// The intersection product as a linear map H (x) H -> H of degree -2.
F2LinearMap intersection_map(const ComplementSurface& cs);

/// Diagonal coproduct of a basis class: pt -> pt (x) pt, and for x of
/// degree 1, x -> x (x) pt + pt (x) x (the component's own point class).
F2Matrix diagonal_coproduct(const ComplementSurface& cs, int x_index);

/// The diagonal coproduct as a linear map H -> H (x) H of degree 0.
F2LinearMap diagonal_coproduct_map(const ComplementSurface& cs);

}  // namespace twistfloer

#endif

#ifndef TWISTFLOER_FLOER_HPP
#define TWISTFLOER_FLOER_HPP

#include "twistfloer/indexcalc.hpp"
#include "twistfloer/surface.hpp"

namespace twistfloer {

/// Elliptic/hyperbolic generator pair over the circle of fixed points at
/// tubular coordinate slice/power. Genuine generators have
/// 1 <= slice <= power - 1; the boundary slices 0 and power stand for
/// homology classes of the complement (see resolve_boundary_generator).
struct TwistGenerator {
    BasisLabel::TwistKind kind;
    int slice = 0;
    int power = 1;

    int degree() const { return kind == BasisLabel::TwistKind::hyperbolic ? 1 : 0; }
    BasisLabel label() const { return BasisLabel::twist(kind, slice, power); }
};

/// The fixed point homology of the power-th iterate of the twist: homology
/// of the complement, plus an elliptic/hyperbolic pair for each interior
/// slice. Basis order: the complement classes first (in homology() order),
/// then e_1, h_1, e_2, h_2, ..., e_{power-1}, h_{power-1}.
struct FloerSpace {
    SurfaceSpec surface;
    TwistCurveSpec curve;
    int power = 1;
    ComplementSurface complement;
    GradedF2Space space;
    int morse_dim = 0;  // leading block size, = dim homology(complement)

    bool is_twist_index(int i) const { return i >= morse_dim; }
};

/// Build the fixed point homology of the m-th iterate. Throws
/// UnsupportedTopologyError when the structure-map hypotheses fail, with
/// the failing requirement attached.
FloerSpace hf_space(const SurfaceSpec& s, const TwistCurveSpec& c, int m);

/// How the boundary-slice generator labels are identified with homology
/// classes of the complement. The default sends the elliptic label to the
/// point class of the component meeting that side of the twist annulus,
/// and the hyperbolic label to the class of the annulus boundary circle on
/// that side. The identification is isolated here; coassociativity of the
/// coproduct across boundary terms is the consistency test for it.
enum class BoundaryIdentification { point_and_boundary_circle };

/// Class in homology(cs) standing for the generator label at slice 0 or
/// slice `power`. Throws NotABoundaryLabelError for interior slices.
F2Matrix resolve_boundary_generator(
    BasisLabel::TwistKind kind, int slice, int power, const ComplementSurface& cs,
    BoundaryIdentification id = BoundaryIdentification::point_and_boundary_circle);

/// Projection onto the complement block (kills twist generators).
F2LinearMap proj(const FloerSpace& fs);

/// Inclusion of the complement block.
F2LinearMap iota(const FloerSpace& fs);

}  // namespace twistfloer

#endif

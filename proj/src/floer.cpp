#include "twistfloer/floer.hpp"

namespace twistfloer {

FloerSpace hf_space(const SurfaceSpec& s, const TwistCurveSpec& c, int m) {
    if (m < 1) throw ShapeError("twist power must be at least 1");
    MonotonicityVerdict mono = check_monotonicity(s, c);
    if (!mono.satisfied) throw UnsupportedTopologyError(mono.failing_requirement);

    FloerSpace fs;
    fs.surface = s;
    fs.curve = c;
    fs.power = m;
    fs.complement = complement(s, c);
    GradedF2Space morse = homology(fs.complement);
    fs.morse_dim = morse.dim();

    std::vector<BasisVector> basis = morse.basis();
    for (int i = 1; i <= m - 1; ++i) {
        basis.push_back({BasisLabel::twist(BasisLabel::TwistKind::elliptic, i, m), 0});
        basis.push_back({BasisLabel::twist(BasisLabel::TwistKind::hyperbolic, i, m), 1});
    }
    fs.space = GradedF2Space(std::move(basis));
    return fs;
}

F2Matrix resolve_boundary_generator(BasisLabel::TwistKind kind, int slice, int power,
                                    const ComplementSurface& cs, BoundaryIdentification id) {
    (void)id;  // single identification implemented; kept as the audit knob
    if (slice != 0 && slice != power)
        throw NotABoundaryLabelError("slice " + std::to_string(slice) +
                                     " of power " + std::to_string(power) +
                                     " is an interior twist generator, not a boundary label");
    const bool left_side = (slice == 0);
    const int comp = left_side ? cs.component_with_l() : cs.component_with_r();
    if (kind == BasisLabel::TwistKind::elliptic) return point_class(cs, comp);
    const auto& topo = cs.components.at(static_cast<std::size_t>(comp));
    const int circle = left_side ? topo.l_circle : topo.r_circle;
    return boundary_circle_class(cs, comp, circle);
}

F2LinearMap proj(const FloerSpace& fs) {
    GradedF2Space morse = homology(fs.complement);
    F2Matrix m(morse.dim(), fs.space.dim());
    for (int i = 0; i < morse.dim(); ++i) m.set(i, i, true);
    return F2LinearMap(fs.space, std::move(morse), 0, std::move(m));
}

F2LinearMap iota(const FloerSpace& fs) {
    GradedF2Space morse = homology(fs.complement);
    F2Matrix m(fs.space.dim(), morse.dim());
    for (int i = 0; i < morse.dim(); ++i) m.set(i, i, true);
    return F2LinearMap(std::move(morse), fs.space, 0, std::move(m));
}

}  // namespace twistfloer

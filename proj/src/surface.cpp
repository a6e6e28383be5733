#include "twistfloer/surface.hpp"

namespace twistfloer {

int ComplementSurface::component_with_l() const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].l_circle > 0) return static_cast<int>(i);
    throw ShapeError("complement has no L-tagged circle");
}

int ComplementSurface::component_with_r() const {
    for (std::size_t i = 0; i < components.size(); ++i)
        if (components[i].r_circle > 0) return static_cast<int>(i);
    throw ShapeError("complement has no R-tagged circle");
}

int ComplementSurface::euler_characteristic() const {
    int chi = 0;
    for (const auto& comp : components) chi += 2 - 2 * comp.genus - comp.boundary_count;
    return chi;
}

ComplementSurface complement(const SurfaceSpec& s, const TwistCurveSpec& c) {
    if (s.genus < 0 || s.boundary_count < 0)
        throw InvalidCurveError("surface genus and boundary count must be nonnegative");
    ComplementSurface cs;
    if (!c.is_separating()) {
        if (s.genus < 1)
            throw InvalidCurveError("a genus-0 surface carries no non-separating curve");
        ComponentTopology comp;
        comp.genus = s.genus - 1;
        comp.boundary_count = s.boundary_count + 2;
        comp.l_circle = 1;
        comp.r_circle = 2;
        cs.components.push_back(comp);
    } else {
        const auto& sp = c.split;
        if (sp.g1 < 0 || sp.g2 < 0 || sp.b1 < 0 || sp.b2 < 0 || sp.g1 + sp.g2 != s.genus ||
            sp.b1 + sp.b2 != s.boundary_count)
            throw InvalidCurveError("separating split does not add up to the surface data");
        ComponentTopology side1;
        side1.genus = sp.g1;
        side1.boundary_count = sp.b1 + 1;
        side1.l_circle = 1;
        ComponentTopology side2;
        side2.genus = sp.g2;
        side2.boundary_count = sp.b2 + 1;
        side2.r_circle = 1;
        cs.components.push_back(side1);
        cs.components.push_back(side2);
    }
    return cs;
}

GradedF2Space homology(const ComplementSurface& cs) {
    std::vector<BasisVector> basis;
    for (std::size_t ci = 0; ci < cs.components.size(); ++ci) {
        const auto& comp = cs.components[ci];
        if (comp.boundary_count < 1)
            throw ShapeError("complement component must have boundary");
        int cidx = static_cast<int>(ci);
        basis.push_back({BasisLabel::point(cidx), 0});
        for (int i = 1; i <= comp.genus; ++i) {
            basis.push_back({BasisLabel::morse(cidx, BasisLabel::MorseKind::a, i), 1});
            basis.push_back({BasisLabel::morse(cidx, BasisLabel::MorseKind::b, i), 1});
        }
        for (int j = 1; j <= comp.boundary_count - 1; ++j)
            basis.push_back({BasisLabel::morse(cidx, BasisLabel::MorseKind::d, j), 1});
    }
    return GradedF2Space(std::move(basis));
}

F2Matrix boundary_circle_class(const ComplementSurface& cs, int component, int circle) {
    const auto& comp = cs.components.at(static_cast<std::size_t>(component));
    if (circle < 1 || circle > comp.boundary_count)
        throw ShapeError("boundary circle index out of range");
    GradedF2Space h = homology(cs);
    F2Matrix v(h.dim(), 1);
    if (circle < comp.boundary_count) {
        v.set(h.index_of(BasisLabel::morse(component, BasisLabel::MorseKind::d, circle)), 0, true);
    } else {
        // the omitted circle is the sum of all the others
        for (int j = 1; j <= comp.boundary_count - 1; ++j)
            v.set(h.index_of(BasisLabel::morse(component, BasisLabel::MorseKind::d, j)), 0, true);
    }
    return v;
}

F2Matrix point_class(const ComplementSurface& cs, int component) {
    GradedF2Space h = homology(cs);
    F2Matrix v(h.dim(), 1);
    v.set(h.index_of(BasisLabel::point(component)), 0, true);
    return v;
}

namespace {

// Pairing table on degree-1 basis classes of one component: a_i . b_i = 1,
// everything else (and everything involving d classes) pairs to zero.
bool pair_to_point(const BasisLabel::Morse& x, const BasisLabel::Morse& y) {
    if (x.component != y.component) return false;
    using MK = BasisLabel::MorseKind;
    if (x.kind == MK::a && y.kind == MK::b && x.index == y.index) return true;
    if (x.kind == MK::b && y.kind == MK::a && x.index == y.index) return true;
    return false;
}

}  // namespace

F2Matrix intersection_product(const ComplementSurface& cs, int x_index, int y_index) {
    GradedF2Space h = homology(cs);
    F2Matrix out(h.dim(), 1);
    const auto& x = h.at(x_index);
    const auto& y = h.at(y_index);
    if (x.degree != 1 || y.degree != 1) return out;  // target degree < 0
    const auto& xm = x.label.as_morse();
    const auto& ym = y.label.as_morse();
    if (pair_to_point(xm, ym)) out.set(h.index_of(BasisLabel::point(xm.component)), 0, true);
    return out;
}

F2LinearMap intersection_map(const ComplementSurface& cs) {
    GradedF2Space h = homology(cs);
    GradedF2Space hh = tensor_space(h, h);
    F2Matrix m(h.dim(), hh.dim());
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j) {
            F2Matrix prod = intersection_product(cs, i, j);
            for (int r = 0; r < h.dim(); ++r)
                if (prod.get(r, 0)) m.set(r, i * h.dim() + j, true);
        }
    return F2LinearMap(std::move(hh), std::move(h), -2, std::move(m));
}

F2Matrix diagonal_coproduct(const ComplementSurface& cs, int x_index) {
    GradedF2Space h = homology(cs);
    const int n = h.dim();
    F2Matrix out(n * n, 1);
    const auto& x = h.at(x_index);
    int comp = x.label.as_morse().component;
    int pt = h.index_of(BasisLabel::point(comp));
    if (x.degree == 0) {
        out.flip(pt * n + pt, 0);
    } else {
        out.flip(x_index * n + pt, 0);
        out.flip(pt * n + x_index, 0);
    }
    return out;
}

F2LinearMap diagonal_coproduct_map(const ComplementSurface& cs) {
    GradedF2Space h = homology(cs);
    GradedF2Space hh = tensor_space(h, h);
    F2Matrix m(hh.dim(), h.dim());
    for (int j = 0; j < h.dim(); ++j) {
        F2Matrix col = diagonal_coproduct(cs, j);
        for (int r = 0; r < hh.dim(); ++r)
            if (col.get(r, 0)) m.set(r, j, true);
    }
    return F2LinearMap(std::move(h), std::move(hh), 0, std::move(m));
}

}  // namespace twistfloer

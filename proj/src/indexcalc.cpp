#include "twistfloer/indexcalc.hpp"

#include <sstream>

namespace twistfloer {

int cz(OrbitKind kind) {
    switch (kind) {
        case OrbitKind::morse_min:
        case OrbitKind::elliptic: return -1;
        case OrbitKind::morse_saddle:
        case OrbitKind::hyperbolic: return 0;
        case OrbitKind::morse_max: return 1;
    }
    throw ShapeError("unknown orbit kind");
}

int chern_from_wrapping(const SectionTopology& topology, const Wrapping& wrapping) {
    if (topology.separating != wrapping.separating)
        throw ShapeError("wrapping arity does not match the topology");
    if (!topology.separating) {
        if (topology.has_boundary) {
            if (wrapping.eta != 0)
                throw ShapeError("nonzero wrapping with boundary present");
            return 0;
        }
        return (2 - 2 * topology.genus) * wrapping.eta;
    }
    int total = 0;
    if (topology.boundary1) {
        if (wrapping.eta1 != 0) throw ShapeError("nonzero wrapping on a side with boundary");
    } else {
        total += (1 - 2 * topology.g1) * wrapping.eta1;
    }
    if (topology.boundary2) {
        if (wrapping.eta2 != 0) throw ShapeError("nonzero wrapping on a side with boundary");
    } else {
        total += (1 - 2 * topology.g2) * wrapping.eta2;
    }
    return total;
}

int fredholm_index(const SectionIndexData& d) {
    const std::size_t np = d.positive_ends.size();
    const std::size_t nn = d.negative_ends.size();
    if (!((np == 2 && nn == 1) || (np == 1 && nn == 2)))
        throw ShapeError("section must have two positive ends and one negative, or vice versa");
    int idx = -1 + 2 * chern_from_wrapping(d.topology, d.wrapping);
    for (OrbitKind k : d.positive_ends) idx += cz(k);
    for (OrbitKind k : d.negative_ends) idx -= cz(k);
    return idx;
}

MonotonicityVerdict check_monotonicity(const SurfaceSpec& s, const TwistCurveSpec& c) {
    MonotonicityVerdict v;
    if (!c.is_separating()) {
        if (s.boundary_count == 0 && s.genus < 2) {
            v.satisfied = false;
            v.failing_requirement =
                "non-separating curve: surface must have boundary or be closed of genus >= 2";
        }
    } else {
        auto side_ok = [](int g, int b) { return b >= 1 || g >= 2; };
        if (!side_ok(c.split.g1, c.split.b1)) {
            v.satisfied = false;
            v.failing_requirement =
                "separating curve: side 1 must contain boundary or have genus >= 2";
        } else if (!side_ok(c.split.g2, c.split.b2)) {
            v.satisfied = false;
            v.failing_requirement =
                "separating curve: side 2 must contain boundary or have genus >= 2";
        }
    }
    return v;
}

namespace {

// Largest eta >= 0 with index <= 2 + 2 * coeff * eta; -1 when unbounded.
int max_eta_for_coefficient(int coeff, int index) {
    if (coeff >= 0) return -1;
    int bound = 2 - index;
    if (bound < 0) return 0;  // already infeasible at eta = 0
    return bound / (-2 * coeff);
}

}  // namespace

ForcedWrappingVerdict force_zero_wrapping(const SectionTopology& topology, int index) {
    ForcedWrappingVerdict v;
    std::ostringstream w;
    if (!topology.separating) {
        if (topology.has_boundary) {
            v.forced_zero = true;
            v.max_eta = 0;
            v.witness = "boundary present: wrapping vanishes identically";
            return v;
        }
        int coeff = 2 - 2 * topology.genus;
        v.max_eta = max_eta_for_coefficient(coeff, index);
        v.forced_zero = (v.max_eta == 0);
        w << index << " <= 2 + " << 2 * coeff << "*eta (genus " << topology.genus << ")";
        v.witness = w.str();
        return v;
    }
    bool side1_boundary = topology.boundary1;
    bool side2_boundary = topology.boundary2;
    if (side1_boundary && side2_boundary) {
        v.forced_zero = true;
        v.max_eta = 0;
        v.witness = "boundary on both sides: wrapping vanishes identically";
        return v;
    }
    int worst = 0;
    auto fold_side = [&](bool has_boundary, int g) {
        if (has_boundary) return;  // that side's wrapping vanishes on its own
        int m = max_eta_for_coefficient(1 - 2 * g, index);
        if (m < 0 || worst < 0)
            worst = -1;
        else if (m > worst)
            worst = m;
    };
    fold_side(side1_boundary, topology.g1);
    fold_side(side2_boundary, topology.g2);
    v.max_eta = worst;
    v.forced_zero = (worst == 0);
    w << index << " <= 2 + " << 2 * (1 - 2 * topology.g1) << "*eta1 + "
      << 2 * (1 - 2 * topology.g2) << "*eta2";
    v.witness = w.str();
    return v;
}

}  // namespace twistfloer

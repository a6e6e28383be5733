#ifndef TWISTFLOER_INDEXCALC_HPP
#define TWISTFLOER_INDEXCALC_HPP

#include <string>
#include <vector>

#include "twistfloer/surface.hpp"

namespace twistfloer {

/// Where a degree-1 orbit comes from: a critical point of the Hamiltonian
/// on the complement, or a perturbed circle family inside the twist region.
enum class OrbitKind { morse_min, morse_saddle, morse_max, elliptic, hyperbolic };

/// Conley-Zehnder index with respect to the fixed fiber trivialization:
/// local minimum and elliptic -> -1, saddle and hyperbolic -> 0, local
/// maximum -> +1.
int cz(OrbitKind kind);

/// Global topology of the pair-of-pants bundle, as far as the wrapping
/// count sees it: either one complement component (non-separating curve)
/// or two (separating curve), each closed or with boundary.
struct SectionTopology {
    bool separating = false;
    // non-separating data
    int genus = 0;
    bool has_boundary = false;
    // separating data
    int g1 = 0, g2 = 0;
    bool boundary1 = false, boundary2 = false;

    static SectionTopology closed_non_separating(int g) {
        SectionTopology t;
        t.genus = g;
        return t;
    }
    static SectionTopology non_separating_with_boundary(int g) {
        SectionTopology t;
        t.genus = g;
        t.has_boundary = true;
        return t;
    }
    static SectionTopology closed_separating(int g1, int g2) {
        SectionTopology t;
        t.separating = true;
        t.g1 = g1;
        t.g2 = g2;
        return t;
    }
    static SectionTopology separating_with_boundary(int g1, bool bdry1, int g2, bool bdry2) {
        SectionTopology t;
        t.separating = true;
        t.g1 = g1;
        t.g2 = g2;
        t.boundary1 = bdry1;
        t.boundary2 = bdry2;
        return t;
    }
};

/// Wrapping numbers of a section: one count for a non-separating curve,
/// one per side for a separating curve.
struct Wrapping {
    bool separating = false;
    int eta = 0;
    int eta1 = 0, eta2 = 0;

    static Wrapping single(int eta) {
        Wrapping w;
        w.eta = eta;
        return w;
    }
    static Wrapping pair(int eta1, int eta2) {
        Wrapping w;
        w.separating = true;
        w.eta1 = eta1;
        w.eta2 = eta2;
        return w;
    }
};

/// Relative first Chern number of the vertical bundle along a section, in
/// terms of its wrapping numbers: (2-2g) eta in the closed non-separating
/// case, (1-2g1) eta1 + (1-2g2) eta2 in the separating case. A side with
/// boundary forces its wrapping number to zero.
int chern_from_wrapping(const SectionTopology& topology, const Wrapping& wrapping);

/// End data of a candidate section of the product or coproduct bundle:
/// two positive ends and one negative, or one positive and two negative.
struct SectionIndexData {
    std::vector<OrbitKind> positive_ends;
    std::vector<OrbitKind> negative_ends;
    SectionTopology topology;
    Wrapping wrapping;
};

/// Fredholm index: -1 + 2 * chern + sum CZ(positive) - sum CZ(negative).
int fredholm_index(const SectionIndexData& d);

struct MonotonicityVerdict {
    bool satisfied = true;
    /// Empty when satisfied; otherwise names the failing requirement.
    std::string failing_requirement;
    /// Iterates of the twist are weakly monotone unconditionally.
    bool iterate_weakly_monotone = true;
};

/// Check the topological hypotheses under which the structure maps are
/// defined over the two-element field:
///  - non-separating curve: the surface has boundary or is closed of
///    genus at least 2;
///  - separating curve: each side has boundary or genus at least 2.
MonotonicityVerdict check_monotonicity(const SurfaceSpec& s, const TwistCurveSpec& c);

struct ForcedWrappingVerdict {
    bool forced_zero = false;
    /// Largest wrapping number compatible with the index bound; -1 means
    /// unbounded.
    int max_eta = -1;
    /// The inequality that was evaluated, for reporting.
    std::string witness;
};

/// For a section of the given index, bound the wrapping number through
/// index <= 2 + 2 * (chern coefficient) * eta with eta >= 0. Genus at
/// least 2 on every closed side (or boundary everywhere) forces eta = 0.
ForcedWrappingVerdict force_zero_wrapping(const SectionTopology& topology, int index);

}  // namespace twistfloer

#endif

#ifndef TWISTFLOER_STRUCTMAPS_HPP
#define TWISTFLOER_STRUCTMAPS_HPP

#include <string>
#include <vector>

#include "twistfloer/floer.hpp"

namespace twistfloer {

struct IdentityCheck {
    std::string name;
    bool pass = false;
    /// Present exactly when the check fails: the first basis tuple on
    /// which the two sides differ.
    std::string counterexample;
};

struct StructureMapReport {
    F2LinearMap map;
    std::vector<IdentityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

/// The product HF(m) (x) HF(n) -> HF(m+n): include the intersection
/// product of the complement after projecting both factors. Twist
/// generators are annihilated; the degree shift is -2.
F2LinearMap product_map(const SurfaceSpec& s, const TwistCurveSpec& c, int m, int n);

/// The coproduct HF(m+n) -> HF(m) (x) HF(n). On the complement block it is
/// the diagonal coproduct pushed through the inclusions. A twist generator
/// at slice k splits over all (i, k-i) with 0 <= i <= m, 0 <= k-i <= n:
/// elliptic inputs emit elliptic (x) elliptic, hyperbolic inputs emit
/// elliptic (x) hyperbolic + hyperbolic (x) elliptic. Factors at a
/// boundary slice are replaced through resolve_boundary_generator.
F2LinearMap coproduct_map(const SurfaceSpec& s, const TwistCurveSpec& c, int m, int n);

/// Compare product(product (x) id) with product(id (x) product) on
/// HF(m) (x) HF(n) (x) HF(p).
StructureMapReport check_associativity(const SurfaceSpec& s, const TwistCurveSpec& c, int m,
                                       int n, int p);

/// Compare (coproduct (x) id) coproduct with (id (x) coproduct) coproduct
/// as maps HF(m+n+p) -> HF(m) (x) HF(n) (x) HF(p).
StructureMapReport check_coassociativity(const SurfaceSpec& s, const TwistCurveSpec& c, int m,
                                         int n, int p);

/// Compare swap . coproduct(m, n) with coproduct(n, m).
StructureMapReport check_cocommutativity(const SurfaceSpec& s, const TwistCurveSpec& c, int m,
                                         int n);

/// Verify that the twist splitting formula evaluated at the two boundary
/// slices 0 and m+n, with every factor resolved into the complement,
/// agrees with the diagonal coproduct of the resolved input class. This
/// is the consistency test for the boundary-generator identification.
StructureMapReport check_boundary_consistency(const SurfaceSpec& s, const TwistCurveSpec& c,
                                              int m, int n);

}  // namespace twistfloer

#endif

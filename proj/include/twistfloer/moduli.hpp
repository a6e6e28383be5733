#ifndef TWISTFLOER_MODULI_HPP
#define TWISTFLOER_MODULI_HPP

#include <vector>

#include "twistfloer/gf2.hpp"

namespace twistfloer {

/// Monotone C^1 cutoff chi for the twisting term on a cylindrical end:
/// zero at the end's wall, one past a transition window of the given
/// width. Parameterized by the distance d >= 0 past the wall; a cubic
/// smoothstep on the window.
struct CutoffProfile {
    double wall = 2.0;   // |s| coordinate of the wall
    double width = 1.0;  // transition window length

    double chi(double d) const;
    /// integral of chi from 0 to d (closed form)
    double chi_integral(double d) const;
};

CutoffProfile default_cutoff();

enum class EndSign { positive, negative };

/// One cylindrical-end ODE  dx/ds + k - coeff * chi * x = 0  with the
/// cutoff ramping up away from the wall. Positive ends live on
/// s in [wall, infinity), negative ends on (-infinity, -wall]; both are
/// extended linearly (chi = 0) a little past the wall so slopes can be
/// sampled there.
struct OdeProblem {
    int coeff = 1;  // m, n, or m+n
    int k = 0;      // end slice, 0 <= k <= coeff
    EndSign sign = EndSign::positive;
    CutoffProfile cutoff{};
    double tolerance = 1e-9;
};

/// Integrating-factor solution with x = c at the wall, evaluated at s.
/// For a positive end the bounded solution is the one with
/// c = shoot_c_infinity(...); any other c diverges exponentially.
/// Negative ends converge to k/coeff for every c.
double end_ode_solution(const OdeProblem& p, double c, double s);

/// The unique constant making the positive-end solution stay bounded
/// (and equal to k_inf/(m+n) past the transition window), computed by
/// quadrature of the closed-form integral.
double shoot_c_infinity(int m, int n, int k_inf, const CutoffProfile& cutoff,
                        double tolerance = 1e-9);

/// Bisection cross-check for shoot_c_infinity: searches for the constant
/// whose trajectory still sits at the stationary value at s = wall + span.
double shoot_c_infinity_bisection(int m, int n, int k_inf, const CutoffProfile& cutoff,
                                  double span = 30.0);

struct Trajectory {
    std::vector<double> s;
    std::vector<double> x;
    double max_residual = 0.0;
};

/// Sample the solution and verify the ODE residual (via a five-point
/// derivative stencil) at every sample point. Throws NumericError with
/// the achieved residual if the tolerance is not met.
Trajectory solve_end_ode(const OdeProblem& p, double c, double s_from, double s_to,
                         int samples);

struct AnsatzReport {
    double residual_transport = 0.0;  // dx/dt + dy/ds + x F
    double residual_cr = 0.0;         // dy/dt - dx/ds + x G
    double shift_delta = 0.0;         // residual change under y -> y + y0
};

/// Substitute the rotating ansatz y = -k t, x = x(s) into the section
/// equations with F = 0, G = coeff * chi(s), and report the max pointwise
/// residual on a grid, together with the effect of a y-translation.
AnsatzReport verify_section_ansatz(const OdeProblem& p);

/// Max CR-equation residual for the ansatz y = y_slope * t; y_slope = -k
/// is the solving choice, +k is off by 2k.
double ansatz_residual(const OdeProblem& p, double y_slope);

enum class ModuliShape { empty, circle };

/// Shape of the space of twist-region sections with ends at slices
/// k_inf (positive), k1, k2 (negative): a circle exactly when
/// k_inf = k1 + k2 and the triple is shift-equivalent (by the integral
/// relabeling (k_inf, k1, k2) -> (k_inf + m + n, k1 + m, k2 + n)) to one
/// with 0 <= k1 <= m and 0 <= k2 <= n, with the end construction
/// verified numerically; empty otherwise.
ModuliShape moduli_descriptor(int m, int n, int k_inf, int k1, int k2);

enum class FixedEnd { first, second, infinity_end };

struct CascadeSpec {
    int m = 1;
    int n = 1;
    int k_inf = 0;
    int k1 = 0;
    int k2 = 0;
    FixedEnd fixed_end = FixedEnd::infinity_end;

    CascadeSpec(int m_, int n_, int k_inf_, int k1_, int k2_, FixedEnd fe);
};

/// End-to-generator assignment for rigid one-level cascades: the single
/// fixed end lands on a critical point of the perturbing function; a
/// fixed positive end carries the elliptic generator and a free positive
/// end the hyperbolic one, reversed for the negative ends. This constant
/// is the single audit point for the convention.
struct CascadeEndAssignment {
    BasisLabel::TwistKind fixed_positive = BasisLabel::TwistKind::elliptic;
    BasisLabel::TwistKind free_positive = BasisLabel::TwistKind::hyperbolic;
    BasisLabel::TwistKind fixed_negative = BasisLabel::TwistKind::hyperbolic;
    BasisLabel::TwistKind free_negative = BasisLabel::TwistKind::elliptic;
};
inline constexpr CascadeEndAssignment kCascadeEndAssignment{};

/// Number of rigid one-level cascades with the given ends and fixed end:
/// one per circle-shaped section family, zero otherwise.
int count_cascades(const CascadeSpec& cs);

/// Twist generators at interior slices 1..power-1, ordered e_1, h_1, ...
GradedF2Space interior_twist_space(int power);

/// Assemble the interior twist block of the coproduct from cascade
/// counts alone: interior_twist_space(m+n) ->
/// interior_twist_space(m) (x) interior_twist_space(n).
F2LinearMap coproduct_from_cascades(int m, int n);

}  // namespace twistfloer

#endif

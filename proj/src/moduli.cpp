#include "twistfloer/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace twistfloer {

double CutoffProfile::chi(double d) const {
    if (d <= 0) return 0.0;
    if (d >= width) return 1.0;
    double t = d / width;
    return t * t * (3.0 - 2.0 * t);
}

double CutoffProfile::chi_integral(double d) const {
    if (d <= 0) return 0.0;
    if (d >= width) return d - 0.5 * width;
    double t = d / width;
    return width * (t * t * t - 0.5 * t * t * t * t);
}

CutoffProfile default_cutoff() { return CutoffProfile{}; }

namespace {

constexpr double kQuadTol = 1e-14;

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fb, double fm, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, fb, frm, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fb, fm, whole, tol, 48);
}

// Bounded tail of the positive-end solution, as a function of the
// distance u past the wall:
//   x(u) = k * integral_u^inf exp(-coeff (A(v) - A(u))) dv,
// where A is the cutoff integral. Equals k/coeff once chi has saturated.
double bounded_positive_tail(const CutoffProfile& cp, int coeff, int k, double u) {
    if (k == 0) return 0.0;
    if (u >= cp.width) return static_cast<double>(k) / coeff;
    double au = cp.chi_integral(u);
    auto f = [&](double v) { return std::exp(-coeff * (cp.chi_integral(v) - au)); };
    double head = integrate(f, u, cp.width, kQuadTol);
    double tail = std::exp(-coeff * (cp.chi_integral(cp.width) - au)) / coeff;
    return k * (head + tail);
}

// Negative-end solution at distance d past the wall with x = c at the wall:
//   x(d) = c exp(-coeff A(d)) + k integral_0^d exp(-coeff (A(d) - A(u))) du.
double negative_solution(const CutoffProfile& cp, int coeff, int k, double c, double d) {
    double ad = cp.chi_integral(d);
    double x = c * std::exp(-coeff * ad);
    if (k != 0) {
        if (d <= cp.width) {
            auto f = [&](double u) { return std::exp(-coeff * (ad - cp.chi_integral(u))); };
            x += k * integrate(f, 0.0, std::max(d, 0.0), kQuadTol);
        } else {
            auto f = [&](double u) { return std::exp(-coeff * (cp.chi_integral(cp.width) -
                                                               cp.chi_integral(u))); };
            double head = integrate(f, 0.0, cp.width, kQuadTol);
            double decay = std::exp(-coeff * (d - cp.width));
            x += k * (head * decay + (1.0 - decay) / coeff);
        }
    }
    return x;
}

}  // namespace

double shoot_c_infinity(int m, int n, int k_inf, const CutoffProfile& cutoff, double tolerance) {
    int coeff = m + n;
    if (coeff < 1) throw ShapeError("twisting coefficient must be positive");
    if (k_inf < 0 || k_inf > coeff) throw ShapeError("end slice out of range");
    (void)tolerance;  // quadrature runs well below any sensible tolerance
    // value at the wall of the bounded solution
    return bounded_positive_tail(cutoff, coeff, k_inf, 0.0);
}

double end_ode_solution(const OdeProblem& p, double c, double s) {
    if (p.coeff < 1) throw ShapeError("twisting coefficient must be positive");
    if (p.k < 0 || p.k > p.coeff) throw ShapeError("end slice out of range");
    const CutoffProfile& cp = p.cutoff;
    if (p.sign == EndSign::positive) {
        double u = s - cp.wall;
        if (u < 0) return c - p.k * u;  // linear continuation below the wall
        double c_bounded = bounded_positive_tail(cp, p.coeff, p.k, 0.0);
        double x = bounded_positive_tail(cp, p.coeff, p.k, u);
        double drift = c - c_bounded;
        if (drift != 0.0) x += drift * std::exp(p.coeff * cp.chi_integral(u));
        return x;
    }
    double d = -s - cp.wall;
    if (d < 0) return c + p.k * d;  // linear continuation above the wall
    return negative_solution(cp, p.coeff, p.k, c, d);
}

double shoot_c_infinity_bisection(int m, int n, int k_inf, const CutoffProfile& cutoff,
                                  double span) {
    int coeff = m + n;
    OdeProblem p{coeff, k_inf, EndSign::positive, cutoff, 1e-9};
    double target = static_cast<double>(k_inf) / coeff;
    double s_far = cutoff.wall + span;
    auto overshoot = [&](double c) { return end_ode_solution(p, c, s_far) - target; };
    double lo = -1.0, hi = k_inf * (cutoff.width + 1.0 / coeff) + 1.0;
    if (overshoot(lo) > 0 || overshoot(hi) < 0)
        throw NumericError("bisection bracket does not straddle the bounded solution", 0.0);
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid == lo || mid == hi) break;
        (overshoot(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

namespace {

// five-point central derivative of f at s
double stencil_derivative(const std::function<double(double)>& f, double s, double h) {
    return (-f(s + 2 * h) + 8 * f(s + h) - 8 * f(s - h) + f(s - 2 * h)) / (12 * h);
}

double ode_residual(const OdeProblem& p, double c, double s) {
    auto f = [&](double t) { return end_ode_solution(p, c, t); };
    double d = p.sign == EndSign::positive ? s - p.cutoff.wall : -s - p.cutoff.wall;
    double chi = p.cutoff.chi(d);
    return stencil_derivative(f, s, 1e-3) + p.k - p.coeff * chi * end_ode_solution(p, c, s);
}

}  // namespace

Trajectory solve_end_ode(const OdeProblem& p, double c, double s_from, double s_to, int samples) {
    if (samples < 2) throw ShapeError("need at least two samples");
    if (p.tolerance <= 0) throw ShapeError("tolerance must be positive");
    Trajectory tr;
    tr.s.reserve(static_cast<std::size_t>(samples));
    tr.x.reserve(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        double s = s_from + (s_to - s_from) * i / (samples - 1);
        tr.s.push_back(s);
        tr.x.push_back(end_ode_solution(p, c, s));
        tr.max_residual = std::max(tr.max_residual, std::abs(ode_residual(p, c, s)));
    }
    if (tr.max_residual > p.tolerance)
        throw NumericError("ODE residual exceeds tolerance", tr.max_residual);
    return tr;
}

namespace {

// Integration constant used when sampling an end for the ansatz check:
// the bounded solution on a positive end, an arbitrary admissible
// constant on a negative end (every constant converges there).
double ansatz_constant(const OdeProblem& p) {
    if (p.sign == EndSign::positive) return bounded_positive_tail(p.cutoff, p.coeff, p.k, 0.0);
    return static_cast<double>(p.k) / p.coeff + 0.5;
}

// Max CR-equation residual dy/dt - dx/ds + x G over a grid on the end,
// for the ansatz y(s, t) = y_slope * t + y_offset with t-independent x.
// All derivatives are taken numerically.
double cr_residual_grid(const OdeProblem& p, double y_slope, double y_offset) {
    double c = ansatz_constant(p);
    double wall = p.sign == EndSign::positive ? p.cutoff.wall : -p.cutoff.wall;
    double dir = p.sign == EndSign::positive ? 1.0 : -1.0;
    const double ht = 1e-3;
    auto y_of = [&](double tt) { return y_slope * tt + y_offset; };
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) {
        double s = wall + dir * (10.0 * i / 200.0);
        double d = dir * s - p.cutoff.wall;
        auto f = [&](double ss) { return end_ode_solution(p, c, ss); };
        const double t = 0.3;
        double dy_dt = (y_of(t + ht) - y_of(t - ht)) / (2 * ht);
        double cr = dy_dt - stencil_derivative(f, s, 1e-3) +
                    p.coeff * p.cutoff.chi(d) * end_ode_solution(p, c, s);
        worst = std::max(worst, std::abs(cr));
    }
    return worst;
}

}  // namespace

double ansatz_residual(const OdeProblem& p, double y_slope) {
    return cr_residual_grid(p, y_slope, 0.0);
}

AnsatzReport verify_section_ansatz(const OdeProblem& p) {
    AnsatzReport rep;
    double c = ansatz_constant(p);
    double wall = p.sign == EndSign::positive ? p.cutoff.wall : -p.cutoff.wall;
    double dir = p.sign == EndSign::positive ? 1.0 : -1.0;
    const double ht = 1e-3;
    const double slope = -static_cast<double>(p.k);
    // transport equation dx/dt + dy/ds + x F, with F = 0 on the ends;
    // x is t-independent and y is s-independent, so both terms vanish
    for (int i = 0; i <= 100; ++i) {
        double s = wall + dir * (10.0 * i / 100.0);
        for (int j = 0; j < 8; ++j) {
            double t = j / 8.0;
            auto x_of = [&](double, double) { return end_ode_solution(p, c, s); };
            auto y_of = [&](double, double tt) { return slope * tt; };
            double dx_dt = (x_of(s, t + ht) - x_of(s, t - ht)) / (2 * ht);
            double dy_ds = (y_of(s + ht, t) - y_of(s - ht, t)) / (2 * ht);
            rep.residual_transport = std::max(rep.residual_transport, std::abs(dx_dt + dy_ds));
        }
    }
    rep.residual_cr = cr_residual_grid(p, slope, 0.0);
    rep.shift_delta = std::abs(cr_residual_grid(p, slope, 0.37) - rep.residual_cr);
    return rep;
}

ModuliShape moduli_descriptor(int m, int n, int k_inf, int k1, int k2) {
    if (m < 1 || n < 1) throw ShapeError("twist powers must be at least 1");
    if (k_inf != k1 + k2) return ModuliShape::empty;

    // shift-normalize into 0 <= k1 <= m, 0 <= k2 <= n
    bool found = false;
    int nk1 = 0, nk2 = 0;
    for (int t = -(std::abs(k1) / m + 1); t <= std::abs(k1) / m + 1; ++t) {
        int c1 = k1 + t * m, c2 = k2 + t * n;
        if (c1 >= 0 && c1 <= m && c2 >= 0 && c2 <= n) {
            found = true;
            nk1 = c1;
            nk2 = c2;
            break;
        }
    }
    if (!found) return ModuliShape::empty;
    int nk_inf = nk1 + nk2;

    // verify the end construction: bounded positive-end solution and the
    // two negative ends, which converge regardless of their constants
    CutoffProfile cp = default_cutoff();
    double c_inf = shoot_c_infinity(m, n, nk_inf, cp);
    OdeProblem pos{m + n, nk_inf, EndSign::positive, cp, 1e-9};
    Trajectory t_pos = solve_end_ode(pos, c_inf, cp.wall, cp.wall + 12.0, 200);
    if (std::abs(t_pos.x.back() - static_cast<double>(nk_inf) / (m + n)) > 1e-8)
        throw NumericError("positive end failed to settle", t_pos.x.back());
    const double c_neg = c_inf + 1.0;  // matching constants c1 = c2 > c_inf
    OdeProblem neg1{m, nk1, EndSign::negative, cp, 1e-9};
    OdeProblem neg2{n, nk2, EndSign::negative, cp, 1e-9};
    Trajectory t1 = solve_end_ode(neg1, c_neg, -cp.wall - 12.0, -cp.wall, 200);
    Trajectory t2 = solve_end_ode(neg2, c_neg, -cp.wall - 12.0, -cp.wall, 200);
    if (std::abs(t1.x.front() - static_cast<double>(nk1) / m) > 1e-4 ||
        std::abs(t2.x.front() - static_cast<double>(nk2) / n) > 1e-4)
        throw NumericError("negative end failed to converge", t1.x.front());
    return ModuliShape::circle;
}

CascadeSpec::CascadeSpec(int m_, int n_, int k_inf_, int k1_, int k2_, FixedEnd fe)
    : m(m_), n(n_), k_inf(k_inf_), k1(k1_), k2(k2_), fixed_end(fe) {
    if (k_inf != k1 + k2) throw ShapeError("cascade ends must satisfy k_inf = k1 + k2");
    if (k1 < 0 || k1 > m || k2 < 0 || k2 > n) throw ShapeError("cascade end slice out of range");
}

int count_cascades(const CascadeSpec& cs) {
    return moduli_descriptor(cs.m, cs.n, cs.k_inf, cs.k1, cs.k2) == ModuliShape::circle ? 1 : 0;
}

GradedF2Space interior_twist_space(int power) {
    std::vector<BasisVector> basis;
    for (int i = 1; i <= power - 1; ++i) {
        basis.push_back({BasisLabel::twist(BasisLabel::TwistKind::elliptic, i, power), 0});
        basis.push_back({BasisLabel::twist(BasisLabel::TwistKind::hyperbolic, i, power), 1});
    }
    return GradedF2Space(std::move(basis));
}

F2LinearMap coproduct_from_cascades(int m, int n) {
    GradedF2Space source = interior_twist_space(m + n);
    GradedF2Space left = interior_twist_space(m);
    GradedF2Space right = interior_twist_space(n);
    GradedF2Space target = tensor_space(left, right);
    F2Matrix mat(target.dim(), source.dim());

    const auto& assign = kCascadeEndAssignment;
    using TK = BasisLabel::TwistKind;
    for (int k_inf = 1; k_inf <= m + n - 1; ++k_inf) {
        for (int k1 = std::max(0, k_inf - n); k1 <= std::min(m, k_inf); ++k1) {
            int k2 = k_inf - k1;
            for (FixedEnd fe : {FixedEnd::infinity_end, FixedEnd::first, FixedEnd::second}) {
                if (count_cascades(CascadeSpec(m, n, k_inf, k1, k2, fe)) == 0) continue;
                TK in = fe == FixedEnd::infinity_end ? assign.fixed_positive
                                                     : assign.free_positive;
                TK out1 = fe == FixedEnd::first ? assign.fixed_negative : assign.free_negative;
                TK out2 = fe == FixedEnd::second ? assign.fixed_negative : assign.free_negative;
                if (k1 < 1 || k1 > m - 1 || k2 < 1 || k2 > n - 1)
                    continue;  // boundary slices resolve outside the twist block
                int col = source.index_of(BasisLabel::twist(in, k_inf, m + n));
                int row = target.index_of(BasisLabel::tensor(BasisLabel::twist(out1, k1, m),
                                                             BasisLabel::twist(out2, k2, n)));
                mat.flip(row, col);
            }
        }
    }
    return F2LinearMap(std::move(source), std::move(target), 0, std::move(mat));
}

}  // namespace twistfloer

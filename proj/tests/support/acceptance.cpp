#include "acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "oracles.hpp"
#include "twistfloer/indexcalc.hpp"
#include "twistfloer/moduli.hpp"
#include "twistfloer/nocross.hpp"
#include "twistfloer/structmaps.hpp"

namespace twistfloer::verification {

namespace {

struct Topology {
    const char* name;
    SurfaceSpec surface;
    TwistCurveSpec curve;
};

const Topology kClosedNonSep{"genus-2 closed, non-separating", {2, 0},
                             TwistCurveSpec::non_separating()};
const Topology kClosedSep{"genus-4 closed, separating (2,0|2,0)", {4, 0},
                          TwistCurveSpec::separating(2, 0, 2, 0)};

using Clock = std::chrono::steady_clock;

struct Checker {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why << what;
        }
    }
};

// ---- 1. decomposition dimensions ---------------------------------------

void criterion_dims(Checker& ck) {
    for (int m = 1; m <= 6; ++m) {
        FloerSpace fs = hf_space(kClosedNonSep.surface, kClosedNonSep.curve, m);
        int expected = 4 + 2 * (m - 1);
        ck.expect(fs.space.dim() == expected,
                  "dim HF at power " + std::to_string(m) + " is " +
                      std::to_string(fs.space.dim()) + ", expected " + std::to_string(expected));
    }
}

// ---- 2. product matrix ---------------------------------------------------

void criterion_product(Checker& ck) {
    for (const Topology& topo : {kClosedNonSep, kClosedSep}) {
        ComplementSurface cs = complement(topo.surface, topo.curve);
        GradedF2Space h = homology(cs);
        for (int m = 1; m + 1 <= 6; ++m) {
            for (int n = 1; m + n <= 6; ++n) {
                F2LinearMap prod = product_map(topo.surface, topo.curve, m, n);
                FloerSpace fm = hf_space(topo.surface, topo.curve, m);
                FloerSpace fn = hf_space(topo.surface, topo.curve, n);
                FloerSpace fmn = hf_space(topo.surface, topo.curve, m + n);
                const F2Matrix& mat = prod.matrix();

                // every entry with a twist-generator input or output is zero
                for (int col = 0; col < mat.cols(); ++col)
                    for (int row = 0; row < mat.rows(); ++row) {
                        bool twisty = prod.source().at(col).label.involves_twist() ||
                                      prod.target().at(row).label.involves_twist();
                        if (twisty && mat.get(row, col))
                            ck.expect(false, topo.name + std::string(": twist entry nonzero"));
                    }

                // a_i . b_i = included point class, per component
                for (std::size_t comp = 0; comp < cs.components.size(); ++comp) {
                    for (int i = 1; i <= cs.components[comp].genus; ++i) {
                        int ja = h.index_of(BasisLabel::morse(static_cast<int>(comp),
                                                              BasisLabel::MorseKind::a, i));
                        int jb = h.index_of(BasisLabel::morse(static_cast<int>(comp),
                                                              BasisLabel::MorseKind::b, i));
                        int col = ja * fn.space.dim() + jb;
                        F2Matrix expect = apply(iota(fmn), point_class(cs, static_cast<int>(comp)));
                        for (int row = 0; row < mat.rows(); ++row)
                            ck.expect(mat.get(row, col) == expect.get(row, 0),
                                      topo.name + std::string(": a.b is not the point class"));
                    }
                }

                // full matrix against the composition built entry by entry
                for (int jm = 0; jm < fm.space.dim(); ++jm)
                    for (int jn = 0; jn < fn.space.dim(); ++jn) {
                        int col = jm * fn.space.dim() + jn;
                        std::vector<int> expect(static_cast<std::size_t>(fmn.space.dim()), 0);
                        if (jm < fm.morse_dim && jn < fn.morse_dim) {
                            F2Matrix cap = intersection_product(cs, jm, jn);
                            for (int r = 0; r < h.dim(); ++r)
                                if (cap.get(r, 0)) expect[static_cast<std::size_t>(r)] = 1;
                        }
                        for (int row = 0; row < fmn.space.dim(); ++row)
                            ck.expect(mat.get(row, col) ==
                                          (row < fmn.morse_dim &&
                                           expect[static_cast<std::size_t>(row)]),
                                      topo.name + std::string(": product matrix mismatch at m=") +
                                          std::to_string(m) + " n=" + std::to_string(n));
                        if (!ck.ok) return;
                    }
            }
        }
    }
}

// ---- 3. coproduct rows ---------------------------------------------------

// independent expansion of the twist splitting formula into tensor-basis
// coordinates, with boundary slices resolved into the complement
std::vector<int> expected_coproduct_column(const FloerSpace& fm, const FloerSpace& fn,
                                           BasisLabel::TwistKind kind, int k) {
    using TK = BasisLabel::TwistKind;
    const int dn = fn.space.dim();
    std::vector<int> acc(static_cast<std::size_t>(fm.space.dim() * dn), 0);
    auto vector_of = [](const FloerSpace& fs, TK knd, int slice) {
        std::vector<int> v(static_cast<std::size_t>(fs.space.dim()), 0);
        if (slice >= 1 && slice <= fs.power - 1) {
            v[static_cast<std::size_t>(
                fs.space.index_of(BasisLabel::twist(knd, slice, fs.power)))] = 1;
        } else {
            F2Matrix cls = resolve_boundary_generator(knd, slice, fs.power, fs.complement);
            for (int r = 0; r < cls.rows(); ++r)
                if (cls.get(r, 0)) v[static_cast<std::size_t>(r)] = 1;  // morse block leads
        }
        return v;
    };
    auto add_term = [&](TK left, int i, TK right, int j) {
        std::vector<int> lv = vector_of(fm, left, i);
        std::vector<int> rv = vector_of(fn, right, j);
        for (std::size_t a = 0; a < lv.size(); ++a)
            for (std::size_t b = 0; b < rv.size(); ++b)
                if (lv[a] && rv[b]) acc[a * static_cast<std::size_t>(dn) + b] ^= 1;
    };
    for (int i = std::max(0, k - fn.power); i <= std::min(fm.power, k); ++i) {
        if (kind == TK::elliptic) {
            add_term(TK::elliptic, i, TK::elliptic, k - i);
        } else {
            add_term(TK::elliptic, i, TK::hyperbolic, k - i);
            add_term(TK::hyperbolic, i, TK::elliptic, k - i);
        }
    }
    return acc;
}

void criterion_coproduct_rows(Checker& ck) {
    using TK = BasisLabel::TwistKind;
    for (const Topology& topo : {kClosedNonSep, kClosedSep}) {
        for (int m = 1; m + 1 <= 8; ++m) {
            for (int n = 1; m + n <= 8; ++n) {
                F2LinearMap co = coproduct_map(topo.surface, topo.curve, m, n);
                FloerSpace fm = hf_space(topo.surface, topo.curve, m);
                FloerSpace fn = hf_space(topo.surface, topo.curve, n);
                FloerSpace fmn = hf_space(topo.surface, topo.curve, m + n);
                for (int k = 1; k <= m + n - 1; ++k) {
                    for (TK kind : {TK::elliptic, TK::hyperbolic}) {
                        int col = fmn.space.index_of(BasisLabel::twist(kind, k, m + n));
                        std::vector<int> expect = expected_coproduct_column(fm, fn, kind, k);
                        for (int row = 0; row < co.target().dim(); ++row)
                            ck.expect(co.matrix().get(row, col) ==
                                          (expect[static_cast<std::size_t>(row)] != 0),
                                      topo.name + std::string(": coproduct row mismatch at k=") +
                                          std::to_string(k) + " m=" + std::to_string(m) +
                                          " n=" + std::to_string(n));
                        if (!ck.ok) return;
                    }
                }
            }
        }
    }
}

// ---- 4. algebraic identities ----------------------------------------------

void criterion_identities(Checker& ck) {
    for (const Topology& topo : {kClosedNonSep, kClosedSep}) {
        for (int m = 1; m <= 5; ++m)
            for (int n = 1; m + n <= 6; ++n) {
                for (int p = 1; m + n + p <= 7; ++p) {
                    StructureMapReport assoc =
                        check_associativity(topo.surface, topo.curve, m, n, p);
                    ck.expect(assoc.all_pass(),
                              topo.name + std::string(": associativity fails at (") +
                                  std::to_string(m) + "," + std::to_string(n) + "," +
                                  std::to_string(p) + "): " + assoc.checks[0].counterexample);
                    StructureMapReport coassoc =
                        check_coassociativity(topo.surface, topo.curve, m, n, p);
                    ck.expect(coassoc.all_pass(),
                              topo.name +
                                  std::string(": coassociativity fails (boundary-generator "
                                              "identification falsified) at (") +
                                  std::to_string(m) + "," + std::to_string(n) + "," +
                                  std::to_string(p) + "): " + coassoc.checks[0].counterexample);
                    if (!ck.ok) return;
                }
                StructureMapReport cocomm =
                    check_cocommutativity(topo.surface, topo.curve, m, n);
                ck.expect(cocomm.all_pass(), topo.name +
                                                 std::string(": cocommutativity fails at (") +
                                                 std::to_string(m) + "," + std::to_string(n) +
                                                 ")");
                StructureMapReport boundary =
                    check_boundary_consistency(topo.surface, topo.curve, m, n);
                ck.expect(boundary.all_pass(),
                          topo.name + std::string(": boundary-generator identification "
                                                  "falsified at (") +
                              std::to_string(m) + "," + std::to_string(n) + ")");
                if (!ck.ok) return;
            }
    }
}

// ---- 5. crossing-section feasibility ---------------------------------------

void criterion_nocrossing(Checker& ck) {
    for (CrossingMode mode : {CrossingMode::product, CrossingMode::coproduct}) {
        for (int m = 1; m <= 4; ++m)
            for (int n = 1; n <= 4; ++n) {
                CrossingScenario sc;
                sc.mode = mode;
                sc.m = m;
                sc.n = n;
                sc.bound_q = 10;
                sc.parallelism = 4;
                CrossingReport rep = enumerate_crossing_configs(sc);
                ck.expect(rep.feasible_empty(),
                          std::string("crossing configurations survive for ") +
                              (mode == CrossingMode::product ? "product" : "coproduct") +
                              " m=" + std::to_string(m) + " n=" + std::to_string(n));
            }
    }
    // relaxed-inequality control: the horizontal class must reappear
    CrossingScenario control;
    control.mode = CrossingMode::product;
    control.m = 2;
    control.n = 3;
    control.bound_q = 10;
    control.relax_strict = true;
    control.parallelism = 4;
    CrossingReport rep = enumerate_crossing_configs(control);
    ck.expect(!rep.feasible_empty(), "relaxed control run found nothing");
    bool horizontal_found = false;
    for (const auto& [branch, cfg] : rep.surviving) {
        bool all_zero = true;
        for (const auto& c : cfg.slice_class) all_zero &= c.is_zero();
        horizontal_found |= all_zero;
    }
    ck.expect(horizontal_found, "relaxed control run lost the horizontal configuration");
}

// ---- 6. index calculus ------------------------------------------------------

void criterion_index(Checker& ck) {
    SectionIndexData twist_section;
    twist_section.positive_ends = {OrbitKind::hyperbolic};
    twist_section.negative_ends = {OrbitKind::elliptic, OrbitKind::elliptic};
    twist_section.topology = SectionTopology::closed_non_separating(2);
    twist_section.wrapping = Wrapping::single(0);
    ck.expect(fredholm_index(twist_section) == 1, "twist-region section index is not 1");

    for (int g : {2, 3, 4}) {
        ForcedWrappingVerdict v = force_zero_wrapping(SectionTopology::closed_non_separating(g), 0);
        ck.expect(v.forced_zero, "wrapping not forced to zero at genus " + std::to_string(g));
    }
    ForcedWrappingVerdict sep =
        force_zero_wrapping(SectionTopology::closed_separating(2, 2), 0);
    ck.expect(sep.forced_zero, "wrapping not forced to zero for the separating case");

    struct Case {
        SurfaceSpec s;
        TwistCurveSpec c;
        bool satisfied;
    };
    const Case table[10] = {
        {{2, 0}, TwistCurveSpec::non_separating(), true},
        {{3, 0}, TwistCurveSpec::non_separating(), true},
        {{1, 0}, TwistCurveSpec::non_separating(), false},
        {{1, 1}, TwistCurveSpec::non_separating(), true},
        {{1, 2}, TwistCurveSpec::non_separating(), true},
        {{4, 0}, TwistCurveSpec::separating(2, 0, 2, 0), true},
        {{3, 0}, TwistCurveSpec::separating(1, 0, 2, 0), false},
        {{2, 1}, TwistCurveSpec::separating(0, 1, 2, 0), true},
        {{1, 1}, TwistCurveSpec::separating(0, 1, 1, 0), false},
        {{0, 3}, TwistCurveSpec::separating(0, 2, 0, 1), true},
    };
    for (int i = 0; i < 10; ++i) {
        MonotonicityVerdict v = check_monotonicity(table[i].s, table[i].c);
        ck.expect(v.satisfied == table[i].satisfied,
                  "monotonicity table case " + std::to_string(i + 1) + " disagrees");
        ck.expect(v.iterate_weakly_monotone, "iterate monotonicity must hold unconditionally");
    }
}

// ---- 7. end-ODE reconstruction -----------------------------------------------

void criterion_ode(Checker& ck) {
    const CutoffProfile cp = default_cutoff();
    const int m = 2, n = 3, k_inf = 3;
    const double stationary = 3.0 / 5.0;

    double c_inf = shoot_c_infinity(m, n, k_inf, cp);
    OdeProblem pos{m + n, k_inf, EndSign::positive, cp, 1e-9};
    Trajectory tp = solve_end_ode(pos, c_inf, cp.wall, cp.wall + 30.0, 601);
    ck.expect(std::abs(tp.x.back() - stationary) < 1e-8,
              "positive end does not settle at 3/5");
    ck.expect(tp.max_residual < 1e-9, "positive-end residual above 1e-9");

    // the selected constant is isolated: nearby constants blow up
    for (double dc : {1e-3, -1e-3})
        ck.expect(std::abs(end_ode_solution(pos, c_inf + dc, cp.wall + 30.0) - stationary) > 1e3,
                  "perturbed constant fails to diverge");
    ck.expect(std::abs(shoot_c_infinity_bisection(m, n, k_inf, cp) - c_inf) < 1e-9,
              "bisection shoot disagrees with the quadrature value");

    // positive-end slope at the wall
    auto pslope = [&](double s) {
        return (end_ode_solution(pos, c_inf, s + 1e-4) - end_ode_solution(pos, c_inf, s - 1e-4)) /
               2e-4;
    };
    ck.expect(std::abs(pslope(cp.wall) + k_inf) < 1e-6, "positive-end slope at the wall");

    // negative ends: every split of k_inf = 3 converges regardless of the constant
    for (int k1 = std::max(0, k_inf - n); k1 <= std::min(m, k_inf); ++k1) {
        int k2 = k_inf - k1;
        OdeProblem neg1{m, k1, EndSign::negative, cp, 1e-9};
        OdeProblem neg2{n, k2, EndSign::negative, cp, 1e-9};
        for (double c : {c_inf + 1.0, 0.1}) {
            ck.expect(std::abs(end_ode_solution(neg1, c, -20.0) - double(k1) / m) < 1e-6,
                      "first negative end misses its limit for k1=" + std::to_string(k1));
            ck.expect(std::abs(end_ode_solution(neg2, c, -20.0) - double(k2) / n) < 1e-6,
                      "second negative end misses its limit for k2=" + std::to_string(k2));
        }
        Trajectory t1 = solve_end_ode(neg1, c_inf + 1.0, -cp.wall - 25.0, -cp.wall, 400);
        Trajectory t2 = solve_end_ode(neg2, c_inf + 1.0, -cp.wall - 25.0, -cp.wall, 400);
        ck.expect(t1.max_residual < 1e-9 && t2.max_residual < 1e-9,
                  "negative-end residual above 1e-9");
        auto nslope = [&](const OdeProblem& p, double c, double s) {
            return (end_ode_solution(p, c, s + 1e-4) - end_ode_solution(p, c, s - 1e-4)) / 2e-4;
        };
        ck.expect(std::abs(nslope(neg1, c_inf + 1.0, -cp.wall) + k1) < 1e-6,
                  "first negative-end slope at the wall");
        ck.expect(std::abs(nslope(neg2, c_inf + 1.0, -cp.wall) + k2) < 1e-6,
                  "second negative-end slope at the wall");
    }
}

// ---- 8. cascades against the coproduct ---------------------------------------

void criterion_cascades(Checker& ck) {
    for (int m = 1; m + 1 <= 8; ++m)
        for (int n = 1; m + n <= 8; ++n) {
            F2LinearMap from_cascades = coproduct_from_cascades(m, n);
            F2LinearMap co = coproduct_map(kClosedNonSep.surface, kClosedNonSep.curve, m, n);
            for (int col = 0; col < from_cascades.source().dim(); ++col) {
                int big_col = co.source().index_of(from_cascades.source().at(col).label);
                for (int row = 0; row < from_cascades.target().dim(); ++row) {
                    int big_row = co.target().index_of(from_cascades.target().at(row).label);
                    ck.expect(from_cascades.matrix().get(row, col) ==
                                  co.matrix().get(big_row, big_col),
                              "cascade twist block differs from the coproduct at m=" +
                                  std::to_string(m) + " n=" + std::to_string(n));
                }
            }
            if (!ck.ok) return;
        }
}

// ---- 9. oracle equivalence -----------------------------------------------------

void criterion_oracles(Checker& ck) {
    for (int h = 0; h <= 3; ++h) {
        for (int c = 1; c <= 4; ++c) {
            ComplementSurface cs;
            cs.components.push_back({h, c, 1, c >= 2 ? 2 : 1});
            GradedF2Space hh = homology(cs);
            oracle::CwDims dims = oracle::cw_homology_dims(oracle::cw_surface(h, c));
            ck.expect(hh.dim_in_degree(0) == dims.h0 && hh.dim_in_degree(1) == dims.h1 &&
                          hh.dim_in_degree(2) == dims.h2,
                      "homology dims disagree with the CW oracle at h=" + std::to_string(h) +
                          " c=" + std::to_string(c));

            // intersection table against the polygon chord oracle
            auto as_class1 = [](const BasisLabel& l) {
                const auto& m = l.as_morse();
                char kind = m.kind == BasisLabel::MorseKind::a   ? 'a'
                            : m.kind == BasisLabel::MorseKind::b ? 'b'
                                                                 : 'd';
                return oracle::Class1{kind, m.index};
            };
            int pt = hh.index_of(BasisLabel::point(0));
            for (int i = 0; i < hh.dim(); ++i)
                for (int j = 0; j < hh.dim(); ++j) {
                    if (hh.degree(i) != 1 || hh.degree(j) != 1) continue;
                    F2Matrix prod = intersection_product(cs, i, j);
                    int got = prod.get(pt, 0) ? 1 : 0;
                    int want = oracle::pairing_mod2(h, c, as_class1(hh.at(i).label),
                                                    as_class1(hh.at(j).label));
                    ck.expect(got == want, "intersection table disagrees with the chord oracle "
                                           "at h=" +
                                               std::to_string(h) + " c=" + std::to_string(c));
                }
        }
    }
}

CriterionResult run_one(const std::string& name, double budget,
                        const std::function<void(Checker&)>& body) {
    CriterionResult res;
    res.name = name;
    res.budget_seconds = budget;
    Checker ck;
    auto t0 = Clock::now();
    try {
        body(ck);
    } catch (const std::exception& e) {
        ck.expect(false, std::string("exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    res.pass = ck.ok && res.seconds < budget;
    res.detail = ck.ok ? (res.seconds < budget ? "" : "over time budget") : ck.why.str();
    return res;
}

}  // namespace

std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    out.push_back(run_one("1-decomposition-dims", 1.0, criterion_dims));
    out.push_back(run_one("2-product-matrix", 1.0, criterion_product));
    out.push_back(run_one("3-coproduct-rows", 1.0, criterion_coproduct_rows));
    out.push_back(run_one("4-algebraic-identities", 10.0, criterion_identities));
    out.push_back(run_one("5-no-crossing-certificates", 60.0, criterion_nocrossing));
    out.push_back(run_one("6-index-calculus", 1.0, criterion_index));
    out.push_back(run_one("7-ode-reconstruction", 5.0, criterion_ode));
    out.push_back(run_one("8-cascade-cross-check", 1.0, criterion_cascades));
    out.push_back(run_one("9-oracle-equivalence", 5.0, criterion_oracles));
    return out;
}

int run_and_print(std::ostream& os) {
    std::vector<CriterionResult> results = run_all();
    bool all = true;
    for (const auto& r : results) {
        all &= r.pass;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%7.3fs / %gs", r.seconds, r.budget_seconds);
        os << (r.pass ? "PASS" : "FAIL") << "  criterion-" << r.name << "  [" << timing << "]";
        if (!r.detail.empty()) os << "  " << r.detail;
        os << "\n";
    }
    os << (all ? "all criteria passed\n" : "criteria FAILED\n");
    return all ? 0 : 1;
}

}  // namespace twistfloer::verification

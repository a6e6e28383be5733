#include "twistfloer/nocross.hpp"

#include <algorithm>
#include <map>
#include <thread>
#include <tuple>

namespace twistfloer {

Rational local_energy_lhs(const H1ClassXD& c, const Rational& x, int m, int n) {
    return Rational(c.p) + x * Rational(m * c.q1 + n * c.q2);
}

Rational local_energy_lhs(long long p, long long q, const Rational& x, int m) {
    return Rational(p) + x * Rational(m * q);
}

H1ClassXD orbit_class(EndId end, int slice_index, int m, int n) {
    switch (end) {
        case EndId::first:
            if (slice_index < 0 || slice_index > m) throw ShapeError("first-end slice out of range");
            return {-slice_index, 1, 0};
        case EndId::second:
            if (slice_index < 0 || slice_index > n)
                throw ShapeError("second-end slice out of range");
            return {-slice_index, 0, 1};
        case EndId::infinity_end:
            if (slice_index < 0 || slice_index > m + n)
                throw ShapeError("combined-end slice out of range");
            return {-slice_index, 1, 1};
    }
    throw ShapeError("unknown end");
}

namespace {

struct EndSpec {
    int coeff;      // m, n, or m+n: the orbit slices run over 0..coeff
    bool positive;  // sign of the puncture in the matching equations
};

// End table per mode; the cylinder scenario has one positive and one
// negative end in the same mapping torus, both twisting with coefficient m.
std::array<EndSpec, 3> ends_for(CrossingMode mode, int m, int n) {
    switch (mode) {
        case CrossingMode::product:
            return {EndSpec{m, true}, EndSpec{n, true}, EndSpec{m + n, false}};
        case CrossingMode::coproduct:
            return {EndSpec{m, false}, EndSpec{n, false}, EndSpec{m + n, true}};
        case CrossingMode::cylinder:
            return {EndSpec{m, true}, EndSpec{m, false}, EndSpec{0, false}};
    }
    throw ShapeError("unknown crossing mode");
}

int end_count(CrossingMode mode) { return mode == CrossingMode::cylinder ? 2 : 3; }

H1ClassXD end_class(CrossingMode mode, int end_index, int slice, int m, int n) {
    if (mode == CrossingMode::cylinder) return {-slice, 1, 0};
    switch (end_index) {
        case 0: return orbit_class(EndId::first, slice, m, n);
        case 1: return orbit_class(EndId::second, slice, m, n);
        default: return orbit_class(EndId::infinity_end, slice, m, n);
    }
}

// twisting coefficient sum of a slice class
long long s_value(CrossingMode mode, const H1ClassXD& c, int m, int n) {
    if (mode == CrossingMode::cylinder) return static_cast<long long>(m) * c.q1;
    return static_cast<long long>(m) * c.q1 + static_cast<long long>(n) * c.q2;
}

// region of an end's orbit between the tested slices:
// 0 = outside the strip, 1 = at x = 0, 2 = strictly between, 3 = at x = 1
int region_of(int slice, int coeff) {
    if (slice < 0) return 0;
    if (slice == 0) return 1;
    if (slice == coeff) return 3;
    return 2;
}

struct Constraints {
    CrossingMode mode;
    int m, n, q_bound;
    bool relax;
};

// The local energy value at the four tested slices is p - eps*S, p + eps*S,
// (p+S) - eps*S, (p+S) + eps*S; positivity for all small eps > 0 is the
// lexicographic condition on (leading term, eps coefficient).
bool local_energy_ok(const Constraints& cn, int slice_idx, const H1ClassXD& c) {
    long long s = s_value(cn.mode, c, cn.m, cn.n);
    long long lead = slice_idx < 2 ? c.p : c.p + s;
    long long eps_coeff = (slice_idx % 2 == 0) ? -s : s;
    if (lead != 0) return lead > 0;
    return cn.relax ? eps_coeff >= 0 : eps_coeff > 0;
}

// Zero wrapping seen from the two sides of the strip: p = 0 below and
// above x = 0, p + (m q1 + n q2) = 0 below and above x = 1.
bool wrapping_ok(const Constraints& cn, int slice_idx, const H1ClassXD& c) {
    if (slice_idx < 2) return c.p == 0;
    return c.p + s_value(cn.mode, c, cn.m, cn.n) == 0;
}

bool q_bound_ok(const Constraints& cn, const H1ClassXD& c) {
    return std::abs(c.q1) <= cn.q_bound && std::abs(c.q2) <= cn.q_bound;
}

// Checks one configuration; returns the name of the first violated
// constraint, or an empty string when the configuration survives.
std::string check_config(const Constraints& cn, const CrossingConfig& cfg) {
    for (int i = 0; i < 4; ++i) {
        const H1ClassXD& c = cfg.slice_class[static_cast<std::size_t>(i)];
        const std::string tag = "@slice" + std::to_string(i);
        if (!cfg.crossed[static_cast<std::size_t>(i)]) {
            if (!c.is_zero()) return "empty_slice" + tag;
            continue;
        }
        if (!wrapping_ok(cn, i, c)) return "zero_wrapping" + tag;
        if (!local_energy_ok(cn, i, c)) return "local_energy" + tag;
        if (!q_bound_ok(cn, c)) return "q_bound" + tag;
    }
    return {};
}

using ConfigKey = std::tuple<int, int, int, int, int, long long, long long>;

ConfigKey key_of(const CrossingConfig& cfg) {
    int pattern = 0;
    for (int i = 0; i < 4; ++i) pattern = pattern * 2 + (cfg.crossed[static_cast<std::size_t>(i)] ? 1 : 0);
    return {cfg.wall, pattern, cfg.end_first, cfg.end_second, cfg.end_infinity,
            cfg.slice_class[0].q1, cfg.slice_class[0].q2};
}

struct BranchConstraintStats {
    std::uint64_t count = 0;
    CrossingConfig example;
    ConfigKey example_key;
};

struct WorkerResult {
    std::uint64_t configs_checked = 0;
    std::vector<std::pair<std::string, CrossingConfig>> surviving;
    std::map<std::pair<std::string, std::string>, BranchConstraintStats> refuted;
};

std::string branch_name(CrossingMode mode, int wall, const std::array<bool, 4>& crossed) {
    static const char* mode_names[] = {"product", "coproduct", "cylinder"};
    std::string s = mode_names[static_cast<int>(mode)];
    s += "/wall";
    s += std::to_string(wall);
    s += "/slices=";
    for (bool c : crossed) s += c ? '1' : '0';
    return s;
}

void record(WorkerResult& out, const Constraints& cn, const std::string& branch,
            const CrossingConfig& cfg) {
    ++out.configs_checked;
    std::string failed = check_config(cn, cfg);
    if (failed.empty()) {
        out.surviving.emplace_back(branch, cfg);
        return;
    }
    auto& stats = out.refuted[{branch, failed}];
    ConfigKey key = key_of(cfg);
    if (stats.count == 0 || key < stats.example_key) {
        stats.example = cfg;
        stats.example_key = key;
    }
    ++stats.count;
}

}  // namespace

CrossingReport enumerate_crossing_configs(const CrossingScenario& sc) {
    if (sc.bound_q < 1) throw ShapeError("crossing search bound must be at least 1");
    if (sc.m < 1 || sc.n < 1) throw ShapeError("twist powers must be at least 1");
    const Constraints cn{sc.mode, sc.m, sc.n, sc.bound_q, sc.relax_strict};
    const auto ends = ends_for(sc.mode, sc.m, sc.n);
    const int nends = end_count(sc.mode);

    // slice-meeting patterns: a crossing section meets both slices of one
    // wall; the other two flags range freely. Patterns meeting both walls
    // are enumerated under wall 0 only.
    std::vector<std::pair<int, std::array<bool, 4>>> patterns;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) patterns.push_back({0, {true, true, a == 1, b == 1}});
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            if (!(a == 1 && b == 1)) patterns.push_back({1, {a == 1, b == 1, true, true}});

    // flattened end-location combinations: -1 (outside) or a slice index
    std::vector<std::array<int, 3>> locations;
    {
        std::array<int, 3> loc{-1, -1, -1};
        auto push_all = [&](auto&& self, int e) -> void {
            if (e == nends) {
                locations.push_back(loc);
                return;
            }
            for (int s = -1; s <= ends[static_cast<std::size_t>(e)].coeff; ++s) {
                loc[static_cast<std::size_t>(e)] = s;
                self(self, e + 1);
            }
        };
        push_all(push_all, 0);
    }

    const int threads = std::max(1, sc.parallelism);
    std::vector<WorkerResult> results(static_cast<std::size_t>(threads));

    auto worker = [&](int tid) {
        WorkerResult& out = results[static_cast<std::size_t>(tid)];
        for (const auto& [wall, crossed] : patterns) {
            const std::string branch = branch_name(sc.mode, wall, crossed);
            for (std::size_t li = 0; li < locations.size(); ++li) {
                // split work over the location combinations
                if (static_cast<int>(li % static_cast<std::size_t>(threads)) != tid) continue;
                const auto& loc = locations[li];

                // matching deltas between consecutive slices: negative
                // punctures add their class, positive punctures subtract
                H1ClassXD delta[4];
                for (int e = 0; e < nends; ++e) {
                    int r = region_of(loc[static_cast<std::size_t>(e)],
                                      ends[static_cast<std::size_t>(e)].coeff);
                    if (r == 0) continue;
                    H1ClassXD c = end_class(sc.mode, e, loc[static_cast<std::size_t>(e)], sc.m, sc.n);
                    if (ends[static_cast<std::size_t>(e)].positive)
                        delta[r] = delta[r] - c;
                    else
                        delta[r] = delta[r] + c;
                }

                auto run_base = [&](const H1ClassXD& base) {
                    CrossingConfig cfg;
                    cfg.mode = sc.mode;
                    cfg.wall = wall;
                    cfg.crossed = crossed;
                    cfg.end_first = loc[0];
                    cfg.end_second = loc[1];
                    cfg.end_infinity = nends == 3 ? loc[2] : -1;
                    cfg.slice_class[0] = base;
                    for (int i = 1; i < 4; ++i)
                        cfg.slice_class[static_cast<std::size_t>(i)] =
                            cfg.slice_class[static_cast<std::size_t>(i - 1)] + delta[i];
                    record(out, cn, branch, cfg);
                };

                if (crossed[0]) {
                    // the class below the strip is free up to the wrapping
                    // condition p = 0 and the |q| bound
                    for (long long q1 = -sc.bound_q; q1 <= sc.bound_q; ++q1)
                        for (long long q2 = -sc.bound_q; q2 <= sc.bound_q; ++q2) {
                            if (sc.mode == CrossingMode::cylinder && q2 != 0) continue;
                            run_base({0, q1, q2});
                        }
                } else {
                    run_base({0, 0, 0});
                }
            }
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    CrossingReport report;
    report.scenario = sc;
    std::map<std::pair<std::string, std::string>, BranchConstraintStats> merged;
    for (const auto& r : results) {
        report.configs_checked += r.configs_checked;
        for (const auto& s : r.surviving) report.surviving.push_back(s);
        for (const auto& [k, v] : r.refuted) {
            auto& dst = merged[k];
            if (dst.count == 0 || v.example_key < dst.example_key) {
                dst.example = v.example;
                dst.example_key = v.example_key;
            }
            dst.count += v.count;
        }
    }
    std::sort(report.surviving.begin(), report.surviving.end(),
              [](const auto& a, const auto& b) {
                  return std::make_pair(a.first, key_of(a.second)) <
                         std::make_pair(b.first, key_of(b.second));
              });
    for (const auto& [k, v] : merged)
        report.refutations.push_back({k.first, k.second, v.count, v.example});
    return report;
}

SameSliceVerdict same_slice_check(int m, int n, int i, int j, int k) {
    if (i < 0 || i > m || j < 0 || j > n || k < 0 || k > m + n)
        throw ShapeError("end slice out of range");
    SameSliceVerdict v;
    if (k != i + j) {
        v.allowed = false;
        v.reason = "homology";
        // below all ends the slice class is the total puncture class,
        // which must vanish; k != i + j leaves this residue
        v.residual_class = orbit_class(EndId::first, i, m, n) +
                           orbit_class(EndId::second, j, m, n) -
                           orbit_class(EndId::infinity_end, k, m, n);
        return v;
    }
    const Rational xi(i, m), xj(j, n), xk(k, m + n);
    if (xi == xj) {  // then xk coincides as well since k = i + j
        v.allowed = true;
        v.reason = "ok";
        return v;
    }

    struct End {
        Rational x;
        H1ClassXD cls;
        bool positive;
    };
    const std::array<End, 3> ends{{{xi, orbit_class(EndId::first, i, m, n), true},
                                   {xj, orbit_class(EndId::second, j, m, n), true},
                                   {xk, orbit_class(EndId::infinity_end, k, m, n), false}}};

    std::vector<Rational> cuts{xi, xj, xk};
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    v.allowed = false;
    v.reason = "local-energy";
    for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
        const Rational lo = cuts[t], hi = cuts[t + 1];
        H1ClassXD cls;
        for (const auto& e : ends) {
            if (e.x <= lo) continue;  // only ends above the interval count
            cls = e.positive ? cls + e.cls : cls - e.cls;
        }
        if (cls.is_zero()) continue;
        long long slope = static_cast<long long>(m) * cls.q1 + static_cast<long long>(n) * cls.q2;
        // affine on the interval: negative somewhere iff negative at an endpoint
        Rational at_lo = Rational(cls.p) + lo * Rational(slope);
        Rational at_hi = Rational(cls.p) + hi * Rational(slope);
        if (at_lo < 0 || at_hi < 0) v.witnesses.push_back({lo, hi, cls, cls.p, slope});
    }
    return v;
}

}  // namespace twistfloer

#ifndef TWISTFLOER_NOCROSS_HPP
#define TWISTFLOER_NOCROSS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "twistfloer/errors.hpp"

namespace twistfloer {

using Rational = boost::rational<long long>;

/// Class in the first homology of the twist strip over the pair of pants:
/// p [S^1_y] + q1 [S^1_{t_1}] + q2 [S^1_{t_2}].
struct H1ClassXD {
    long long p = 0;
    long long q1 = 0;
    long long q2 = 0;

    H1ClassXD operator+(const H1ClassXD& r) const { return {p + r.p, q1 + r.q1, q2 + r.q2}; }
    H1ClassXD operator-(const H1ClassXD& r) const { return {p - r.p, q1 - r.q1, q2 - r.q2}; }
    bool operator==(const H1ClassXD& r) const = default;
    bool is_zero() const { return p == 0 && q1 == 0 && q2 == 0; }
};

/// Local energy form p + x (m q1 + n q2) of a slice class at slice
/// coordinate x. Non-horizontal sections meeting the slice have a
/// strictly positive value; horizontal sections give zero.
Rational local_energy_lhs(const H1ClassXD& c, const Rational& x, int m, int n);

/// Symplectization variant p + m x q (single twisting coefficient).
Rational local_energy_lhs(long long p, long long q, const Rational& x, int m);

/// The three cylindrical ends of the pair-of-pants bundle.
enum class EndId { first, second, infinity_end };

/// Homology class of the orbit at slice i of the given end: (-i, 1, 0)
/// for the first end, (-j, 0, 1) for the second, (-k, 1, 1) for the
/// end carrying the combined twisting. Throws on out-of-range slices.
H1ClassXD orbit_class(EndId end, int slice_index, int m, int n);

/// Which bundle the crossing search runs over: the product and coproduct
/// pair-of-pants bundles, or the symplectization of a single iterate.
enum class CrossingMode { product, coproduct, cylinder };

struct CrossingScenario {
    CrossingMode mode = CrossingMode::product;
    int m = 1;
    int n = 1;
    int bound_q = 10;       // |q| bound on every tested slice class
    bool relax_strict = false;  // control run: admit the horizontal equality case
    int parallelism = 1;
};

/// One enumerated configuration of a hypothetical crossing section: which
/// of the four tested slices (wall 0 below/above, wall 1 below/above) it
/// meets, the slice classes, and where its ends sit (-1 = outside the
/// twist strip, otherwise the slice index of the end's orbit).
struct CrossingConfig {
    CrossingMode mode = CrossingMode::product;
    int wall = 0;
    std::array<bool, 4> crossed{};
    std::array<H1ClassXD, 4> slice_class{};
    int end_first = -1;
    int end_second = -1;
    int end_infinity = -1;
};

struct RefutationSample {
    std::string branch;
    std::string constraint;
    std::uint64_t count = 0;
    CrossingConfig example;  // lexicographically smallest refuted config
};

struct CrossingReport {
    CrossingScenario scenario;
    std::uint64_t configs_checked = 0;
    std::vector<std::pair<std::string, CrossingConfig>> surviving;
    std::vector<RefutationSample> refutations;

    bool feasible_empty() const { return surviving.empty(); }
};

/// Exhaustively enumerate hypothetical crossing sections: puncture
/// placements for all ends, integer slice classes with |q| <= bound, and
/// slice-meeting patterns for both walls. Impose zero wrapping, the local
/// energy inequalities at every met slice, and the homological matching
/// equations between consecutive slices. Returns every surviving
/// configuration (expected: none) together with one representative
/// refuted configuration per (branch, failing constraint).
CrossingReport enumerate_crossing_configs(const CrossingScenario& sc);

/// Witness that a slice between two end values violates the local energy
/// bound: the open interval, the class met there, and the affine form
/// p + x * slope that is negative on (part of) the interval.
struct SameSliceWitness {
    Rational lo;
    Rational hi;
    H1ClassXD cls;
    long long affine_const = 0;  // p
    long long affine_slope = 0;  // m q1 + n q2
};

struct SameSliceVerdict {
    bool allowed = false;
    std::string reason;  // "ok", "homology", "local-energy"
    /// For homology exclusion: the nonzero class left over below all ends.
    H1ClassXD residual_class{};
    std::vector<SameSliceWitness> witnesses;
};

/// For a product-bundle section contained in the twist strip with ends at
/// slices i (first), j (second), k (combined): allowed only when k = i + j
/// and all three ends sit over the same coordinate (i n = j m). Otherwise
/// returns the violated matching relation or the slice intervals on which
/// the local energy form goes negative.
SameSliceVerdict same_slice_check(int m, int n, int i, int j, int k);

}  // namespace twistfloer

#endif

#ifndef TWISTFLOER_GF2_HPP
#define TWISTFLOER_GF2_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "twistfloer/errors.hpp"

namespace twistfloer {

/// Dense matrix over the two-element field, bit-packed row-major.
/// All arithmetic is mod 2; padding bits of the last word in each row are
/// kept at zero so whole-word comparison and xor are valid.
class F2Matrix {
  public:
    F2Matrix() = default;
    F2Matrix(int rows, int cols);

    static F2Matrix identity(int n);
    static F2Matrix zero(int rows, int cols) { return F2Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int r, int c) const;
    void set(int r, int c, bool v);
    void flip(int r, int c);

    /// Xor a whole row of `other` into row `r` of this matrix.
    /// Requires other.cols() == cols().
    void xor_row(int r, const F2Matrix& other, int other_row);

    bool is_zero() const;
    F2Matrix transposed() const;

    F2Matrix operator+(const F2Matrix& rhs) const;  // entrywise xor
    F2Matrix operator*(const F2Matrix& rhs) const;  // product mod 2
    bool operator==(const F2Matrix& rhs) const;
    bool operator!=(const F2Matrix& rhs) const { return !(*this == rhs); }

  private:
    int rows_ = 0;
    int cols_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;

    std::uint64_t* row_ptr(int r) { return bits_.data() + static_cast<std::size_t>(r) * words_per_row_; }
    const std::uint64_t* row_ptr(int r) const {
        return bits_.data() + static_cast<std::size_t>(r) * words_per_row_;
    }
    void check_index(int r, int c) const;
};

/// Rank over the two-element field, by Gaussian elimination.
int rank(const F2Matrix& m);

/// Label of a basis vector. Three kinds:
///  - morse:  a homology class of the twist-curve complement
///            (component index, kind in {a, b, d, pt}, running index);
///  - twist:  an elliptic/hyperbolic generator e^m_i or h^m_i;
///  - tensor: an ordered tuple of factor labels. Tensor labels are kept
///            flattened, so iterated tensor products associate on the nose.
class BasisLabel {
  public:
    enum class MorseKind : std::uint8_t { a, b, d, pt };
    enum class TwistKind : std::uint8_t { elliptic, hyperbolic };

    struct Morse {
        int component;
        MorseKind kind;
        int index;  // ignored for pt
        auto operator<=>(const Morse&) const = default;
    };
    struct Twist {
        TwistKind kind;
        int slice;
        int power;
        auto operator<=>(const Twist&) const = default;
    };

    static BasisLabel morse(int component, MorseKind kind, int index);
    static BasisLabel point(int component) { return morse(component, MorseKind::pt, 0); }
    static BasisLabel twist(TwistKind kind, int slice, int power);
    static BasisLabel tensor(const BasisLabel& left, const BasisLabel& right);

    bool is_morse() const { return std::holds_alternative<Morse>(data_); }
    bool is_twist() const { return std::holds_alternative<Twist>(data_); }
    bool is_tensor() const { return std::holds_alternative<Factors>(data_); }

    const Morse& as_morse() const { return std::get<Morse>(data_); }
    const Twist& as_twist() const { return std::get<Twist>(data_); }
    /// Flattened factor list of a tensor label.
    const std::vector<BasisLabel>& factors() const;

    /// True if this label, or any tensor factor of it, is a twist generator.
    bool involves_twist() const;

    std::string str() const;

    bool operator==(const BasisLabel& rhs) const;
    bool operator<(const BasisLabel& rhs) const;

  private:
    struct Factors {
        // shared immutable children keep copies cheap
        std::shared_ptr<const std::vector<BasisLabel>> list;
    };
    std::variant<Morse, Twist, Factors> data_;
};

struct BasisVector {
    BasisLabel label;
    int degree = 0;
};

/// Finite graded basis over the two-element field. Basis order is part of
/// the data; maps are matrices relative to the stored order.
class GradedF2Space {
  public:
    GradedF2Space() = default;
    explicit GradedF2Space(std::vector<BasisVector> basis);

    int dim() const { return static_cast<int>(basis_.size()); }
    const BasisVector& at(int i) const { return basis_.at(static_cast<std::size_t>(i)); }
    int degree(int i) const { return at(i).degree; }
    const std::vector<BasisVector>& basis() const { return basis_; }

    std::optional<int> find(const BasisLabel& label) const;
    int index_of(const BasisLabel& label) const;  // throws ShapeError if absent
    int dim_in_degree(int d) const;

    bool operator==(const GradedF2Space& rhs) const;
    bool operator!=(const GradedF2Space& rhs) const { return !(*this == rhs); }

  private:
    std::vector<BasisVector> basis_;
};

/// Tensor product of graded bases: ordered pairs in lexicographic order
/// (left index major), degrees add, labels flatten.
GradedF2Space tensor_space(const GradedF2Space& a, const GradedF2Space& b);

/// Degree-tagged matrix between graded bases. Columns are indexed by the
/// source basis, rows by the target basis. Construction checks that every
/// nonzero entry connects basis vectors whose degrees differ by exactly
/// degree_shift.
class F2LinearMap {
  public:
    F2LinearMap() = default;
    F2LinearMap(GradedF2Space source, GradedF2Space target, int degree_shift, F2Matrix matrix);

    static F2LinearMap identity(const GradedF2Space& s);
    static F2LinearMap zero(const GradedF2Space& source, const GradedF2Space& target,
                            int degree_shift);

    const GradedF2Space& source() const { return source_; }
    const GradedF2Space& target() const { return target_; }
    int degree_shift() const { return degree_shift_; }
    const F2Matrix& matrix() const { return matrix_; }

    bool operator==(const F2LinearMap& rhs) const;
    bool operator!=(const F2LinearMap& rhs) const { return !(*this == rhs); }

  private:
    GradedF2Space source_;
    GradedF2Space target_;
    int degree_shift_ = 0;
    F2Matrix matrix_;
};

/// compose(f, g): apply g first, then f. Requires g.target == f.source.
F2LinearMap compose(const F2LinearMap& f, const F2LinearMap& g);

/// Kronecker product over the two-element field; degree shifts add.
F2LinearMap tensor(const F2LinearMap& a, const F2LinearMap& b);

/// The swap isomorphism tensor_space(a, b) -> tensor_space(b, a).
F2LinearMap swap_map(const GradedF2Space& a, const GradedF2Space& b);

/// Apply a map to a coordinate column vector (dim(source) x 1).
F2Matrix apply(const F2LinearMap& f, const F2Matrix& column);

/// Column vector with a single 1 at `index`.
F2Matrix basis_column(int dim, int index);

/// Kronecker product of two column vectors.
F2Matrix tensor_column(const F2Matrix& a, const F2Matrix& b);

}  // namespace twistfloer

#endif

#include "twistfloer/gf2.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace twistfloer {

namespace {
constexpr int kWordBits = 64;
}

F2Matrix::F2Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw ShapeError("matrix dimensions must be nonnegative");
    words_per_row_ = (cols + kWordBits - 1) / kWordBits;
    bits_.assign(static_cast<std::size_t>(rows) * words_per_row_, 0);
}

F2Matrix F2Matrix::identity(int n) {
    F2Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

void F2Matrix::check_index(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ShapeError("matrix index out of range");
}

bool F2Matrix::get(int r, int c) const {
    check_index(r, c);
    return (row_ptr(r)[c / kWordBits] >> (c % kWordBits)) & 1u;
}

void F2Matrix::set(int r, int c, bool v) {
    check_index(r, c);
    std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    if (v)
        row_ptr(r)[c / kWordBits] |= mask;
    else
        row_ptr(r)[c / kWordBits] &= ~mask;
}

void F2Matrix::flip(int r, int c) {
    check_index(r, c);
    row_ptr(r)[c / kWordBits] ^= std::uint64_t{1} << (c % kWordBits);
}

void F2Matrix::xor_row(int r, const F2Matrix& other, int other_row) {
    if (other.cols_ != cols_) throw ShapeError("xor_row: column count mismatch");
    std::uint64_t* dst = row_ptr(r);
    const std::uint64_t* src = other.row_ptr(other_row);
    for (int w = 0; w < words_per_row_; ++w) dst[w] ^= src[w];
}

bool F2Matrix::is_zero() const {
    return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

F2Matrix F2Matrix::transposed() const {
    F2Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r, true);
    return t;
}

F2Matrix F2Matrix::operator+(const F2Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw ShapeError("matrix sum: shape mismatch");
    F2Matrix out = *this;
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] ^= rhs.bits_[i];
    return out;
}

F2Matrix F2Matrix::operator*(const F2Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw ShapeError("matrix product: inner dimension mismatch");
    F2Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        const std::uint64_t* arow = row_ptr(i);
        for (int k = 0; k < cols_; ++k) {
            if ((arow[k / kWordBits] >> (k % kWordBits)) & 1u) out.xor_row(i, rhs, k);
        }
    }
    return out;
}

bool F2Matrix::operator==(const F2Matrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && bits_ == rhs.bits_;
}

int rank(const F2Matrix& m) {
    F2Matrix work = m;
    int r = 0;
    for (int c = 0; c < work.cols() && r < work.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < work.rows(); ++i) {
            if (work.get(i, c)) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != r) {
            // swap rows by xor-ing twice; row ops stay mod 2
            work.xor_row(r, work, pivot);
            work.xor_row(pivot, work, r);
            work.xor_row(r, work, pivot);
        }
        for (int i = 0; i < work.rows(); ++i) {
            if (i != r && work.get(i, c)) work.xor_row(i, work, r);
        }
        ++r;
    }
    return r;
}

BasisLabel BasisLabel::morse(int component, MorseKind kind, int index) {
    BasisLabel l;
    l.data_ = Morse{component, kind, kind == MorseKind::pt ? 0 : index};
    return l;
}

BasisLabel BasisLabel::twist(TwistKind kind, int slice, int power) {
    BasisLabel l;
    l.data_ = Twist{kind, slice, power};
    return l;
}

BasisLabel BasisLabel::tensor(const BasisLabel& left, const BasisLabel& right) {
    auto list = std::make_shared<std::vector<BasisLabel>>();
    auto append = [&list](const BasisLabel& l) {
        if (l.is_tensor()) {
            const auto& fs = l.factors();
            list->insert(list->end(), fs.begin(), fs.end());
        } else {
            list->push_back(l);
        }
    };
    append(left);
    append(right);
    BasisLabel l;
    l.data_ = Factors{std::move(list)};
    return l;
}

const std::vector<BasisLabel>& BasisLabel::factors() const {
    return *std::get<Factors>(data_).list;
}

bool BasisLabel::involves_twist() const {
    if (is_twist()) return true;
    if (is_tensor()) {
        for (const auto& f : factors())
            if (f.involves_twist()) return true;
    }
    return false;
}

std::string BasisLabel::str() const {
    std::ostringstream os;
    if (is_morse()) {
        const auto& m = as_morse();
        switch (m.kind) {
            case MorseKind::a: os << "a" << m.index; break;
            case MorseKind::b: os << "b" << m.index; break;
            case MorseKind::d: os << "d" << m.index; break;
            case MorseKind::pt: os << "pt"; break;
        }
        os << "@c" << m.component;
    } else if (is_twist()) {
        const auto& t = as_twist();
        os << (t.kind == TwistKind::elliptic ? "e" : "h") << "^" << t.power << "_" << t.slice;
    } else {
        os << "(";
        const auto& fs = factors();
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (i) os << ")x(";
            os << fs[i].str();
        }
        os << ")";
    }
    return os.str();
}

bool BasisLabel::operator==(const BasisLabel& rhs) const {
    if (data_.index() != rhs.data_.index()) return false;
    if (is_morse()) return as_morse() == rhs.as_morse();
    if (is_twist()) return as_twist() == rhs.as_twist();
    return factors() == rhs.factors();
}

bool BasisLabel::operator<(const BasisLabel& rhs) const {
    if (data_.index() != rhs.data_.index()) return data_.index() < rhs.data_.index();
    if (is_morse()) return as_morse() < rhs.as_morse();
    if (is_twist()) return as_twist() < rhs.as_twist();
    const auto& a = factors();
    const auto& b = rhs.factors();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

GradedF2Space::GradedF2Space(std::vector<BasisVector> basis) : basis_(std::move(basis)) {
    std::set<BasisLabel> seen;
    for (const auto& bv : basis_) {
        if (!seen.insert(bv.label).second)
            throw ShapeError("duplicate basis label: " + bv.label.str());
        if (bv.degree < 0) throw ShapeError("negative degree on " + bv.label.str());
        // Primitive basis vectors live in surface or circle homology, so
        // their degree is capped at 2; tensor labels carry summed degrees.
        if (!bv.label.is_tensor() && bv.degree > 2)
            throw ShapeError("degree above 2 on primitive label " + bv.label.str());
    }
}

std::optional<int> GradedF2Space::find(const BasisLabel& label) const {
    for (int i = 0; i < dim(); ++i)
        if (basis_[static_cast<std::size_t>(i)].label == label) return i;
    return std::nullopt;
}

int GradedF2Space::index_of(const BasisLabel& label) const {
    auto i = find(label);
    if (!i) throw ShapeError("label not in basis: " + label.str());
    return *i;
}

int GradedF2Space::dim_in_degree(int d) const {
    int n = 0;
    for (const auto& bv : basis_)
        if (bv.degree == d) ++n;
    return n;
}

bool GradedF2Space::operator==(const GradedF2Space& rhs) const {
    if (dim() != rhs.dim()) return false;
    for (int i = 0; i < dim(); ++i) {
        if (!(basis_[static_cast<std::size_t>(i)].label ==
              rhs.basis_[static_cast<std::size_t>(i)].label) ||
            basis_[static_cast<std::size_t>(i)].degree !=
                rhs.basis_[static_cast<std::size_t>(i)].degree)
            return false;
    }
    return true;
}

GradedF2Space tensor_space(const GradedF2Space& a, const GradedF2Space& b) {
    std::vector<BasisVector> basis;
    basis.reserve(static_cast<std::size_t>(a.dim()) * static_cast<std::size_t>(b.dim()));
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j)
            basis.push_back({BasisLabel::tensor(a.at(i).label, b.at(j).label),
                             a.at(i).degree + b.at(j).degree});
    return GradedF2Space(std::move(basis));
}

F2LinearMap::F2LinearMap(GradedF2Space source, GradedF2Space target, int degree_shift,
                         F2Matrix matrix)
    : source_(std::move(source)),
      target_(std::move(target)),
      degree_shift_(degree_shift),
      matrix_(std::move(matrix)) {
    if (matrix_.rows() != target_.dim() || matrix_.cols() != source_.dim())
        throw ShapeError("linear map: matrix shape does not match bases");
    for (int r = 0; r < matrix_.rows(); ++r)
        for (int c = 0; c < matrix_.cols(); ++c)
            if (matrix_.get(r, c) && target_.degree(r) - source_.degree(c) != degree_shift_)
                throw ShapeError("linear map entry (" + target_.at(r).label.str() + ", " +
                                 source_.at(c).label.str() + ") violates degree shift");
}

F2LinearMap F2LinearMap::identity(const GradedF2Space& s) {
    return F2LinearMap(s, s, 0, F2Matrix::identity(s.dim()));
}

F2LinearMap F2LinearMap::zero(const GradedF2Space& source, const GradedF2Space& target,
                              int degree_shift) {
    return F2LinearMap(source, target, degree_shift, F2Matrix(target.dim(), source.dim()));
}

bool F2LinearMap::operator==(const F2LinearMap& rhs) const {
    return source_ == rhs.source_ && target_ == rhs.target_ &&
           degree_shift_ == rhs.degree_shift_ && matrix_ == rhs.matrix_;
}

F2LinearMap compose(const F2LinearMap& f, const F2LinearMap& g) {
    if (!(g.target() == f.source())) throw ShapeError("compose: g.target must equal f.source");
    return F2LinearMap(g.source(), f.target(), f.degree_shift() + g.degree_shift(),
                       f.matrix() * g.matrix());
}

F2LinearMap tensor(const F2LinearMap& a, const F2LinearMap& b) {
    GradedF2Space src = tensor_space(a.source(), b.source());
    GradedF2Space tgt = tensor_space(a.target(), b.target());
    F2Matrix m(tgt.dim(), src.dim());
    const int bs = b.source().dim();
    const int bt = b.target().dim();
    for (int ia = 0; ia < a.target().dim(); ++ia)
        for (int ja = 0; ja < a.source().dim(); ++ja) {
            if (!a.matrix().get(ia, ja)) continue;
            for (int ib = 0; ib < bt; ++ib)
                for (int jb = 0; jb < bs; ++jb)
                    if (b.matrix().get(ib, jb)) m.set(ia * bt + ib, ja * bs + jb, true);
        }
    return F2LinearMap(std::move(src), std::move(tgt), a.degree_shift() + b.degree_shift(),
                       std::move(m));
}

F2LinearMap swap_map(const GradedF2Space& a, const GradedF2Space& b) {
    GradedF2Space src = tensor_space(a, b);
    GradedF2Space tgt = tensor_space(b, a);
    F2Matrix m(tgt.dim(), src.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < b.dim(); ++j) m.set(j * a.dim() + i, i * b.dim() + j, true);
    return F2LinearMap(std::move(src), std::move(tgt), 0, std::move(m));
}

F2Matrix apply(const F2LinearMap& f, const F2Matrix& column) {
    if (column.cols() != 1 || column.rows() != f.source().dim())
        throw ShapeError("apply: expected a source-sized column vector");
    return f.matrix() * column;
}

F2Matrix basis_column(int dim, int index) {
    F2Matrix v(dim, 1);
    v.set(index, 0, true);
    return v;
}

F2Matrix tensor_column(const F2Matrix& a, const F2Matrix& b) {
    if (a.cols() != 1 || b.cols() != 1) throw ShapeError("tensor_column: expected column vectors");
    F2Matrix v(a.rows() * b.rows(), 1);
    for (int i = 0; i < a.rows(); ++i) {
        if (!a.get(i, 0)) continue;
        for (int j = 0; j < b.rows(); ++j)
            if (b.get(j, 0)) v.set(i * b.rows() + j, 0, true);
    }
    return v;
}

}  // namespace twistfloer

#include "twistfloer/structmaps.hpp"

namespace twistfloer {

namespace {

// Column in fs.space for the generator at the given slice: the genuine
// basis vector for interior slices, the resolved complement class pushed
// through the inclusion for slices 0 and power.
F2Matrix generator_column(const FloerSpace& fs, BasisLabel::TwistKind kind, int slice) {
    if (slice >= 1 && slice <= fs.power - 1) {
        return basis_column(fs.space.dim(),
                            fs.space.index_of(BasisLabel::twist(kind, slice, fs.power)));
    }
    F2Matrix resolved = resolve_boundary_generator(kind, slice, fs.power, fs.complement);
    return apply(iota(fs), resolved);
}

F2LinearMap column_map(const GradedF2Space& source, const GradedF2Space& target, int shift,
                       const std::vector<F2Matrix>& columns) {
    F2Matrix m(target.dim(), source.dim());
    for (int j = 0; j < source.dim(); ++j)
        for (int r = 0; r < target.dim(); ++r)
            if (columns[static_cast<std::size_t>(j)].get(r, 0)) m.set(r, j, true);
    return F2LinearMap(source, target, shift, std::move(m));
}

std::string first_difference(const F2LinearMap& lhs, const F2LinearMap& rhs) {
    const F2Matrix& a = lhs.matrix();
    const F2Matrix& b = rhs.matrix();
    for (int c = 0; c < a.cols(); ++c)
        for (int r = 0; r < a.rows(); ++r)
            if (a.get(r, c) != b.get(r, c))
                return lhs.source().at(c).label.str() + " -> " + lhs.target().at(r).label.str();
    return {};
}

IdentityCheck compare_maps(const std::string& name, const F2LinearMap& lhs,
                           const F2LinearMap& rhs) {
    IdentityCheck check;
    check.name = name;
    if (!(lhs.source() == rhs.source()) || !(lhs.target() == rhs.target())) {
        check.pass = false;
        check.counterexample = "source or target bases differ";
        return check;
    }
    check.pass = (lhs.matrix() == rhs.matrix());
    if (!check.pass) check.counterexample = first_difference(lhs, rhs);
    return check;
}

}  // namespace

F2LinearMap product_map(const SurfaceSpec& s, const TwistCurveSpec& c, int m, int n) {
    FloerSpace fm = hf_space(s, c, m);
    FloerSpace fn = hf_space(s, c, n);
    FloerSpace fmn = hf_space(s, c, m + n);
    F2LinearMap cap = intersection_map(fm.complement);
    return compose(iota(fmn), compose(cap, tensor(proj(fm), proj(fn))));
}

F2LinearMap coproduct_map(const SurfaceSpec& s, const TwistCurveSpec& c, int m, int n) {
    FloerSpace fmn = hf_space(s, c, m + n);
    FloerSpace fm = hf_space(s, c, m);
    FloerSpace fn = hf_space(s, c, n);
    GradedF2Space target = tensor_space(fm.space, fn.space);

    F2LinearMap include_left = iota(fm);
    F2LinearMap include_right = iota(fn);
    F2LinearMap diag = diagonal_coproduct_map(fmn.complement);
    F2LinearMap morse_part = compose(tensor(include_left, include_right), diag);

    std::vector<F2Matrix> columns;
    columns.reserve(static_cast<std::size_t>(fmn.space.dim()));
    for (int j = 0; j < fmn.space.dim(); ++j) {
        const BasisVector& bv = fmn.space.at(j);
        if (!fmn.is_twist_index(j)) {
            // leading block of the HF basis is the complement homology basis
            F2Matrix col(target.dim(), 1);
            for (int r = 0; r < target.dim(); ++r)
                if (morse_part.matrix().get(r, j)) col.set(r, 0, true);
            columns.push_back(std::move(col));
            continue;
        }
        const auto& tw = bv.label.as_twist();
        const int k = tw.slice;
        F2Matrix col(target.dim(), 1);
        auto accumulate = [&](const F2Matrix& left, const F2Matrix& right) {
            F2Matrix term = tensor_column(left, right);
            for (int r = 0; r < target.dim(); ++r)
                if (term.get(r, 0)) col.flip(r, 0);
        };
        using TK = BasisLabel::TwistKind;
        for (int i = std::max(0, k - n); i <= std::min(m, k); ++i) {
            if (tw.kind == TK::elliptic) {
                accumulate(generator_column(fm, TK::elliptic, i),
                           generator_column(fn, TK::elliptic, k - i));
            } else {
                accumulate(generator_column(fm, TK::elliptic, i),
                           generator_column(fn, TK::hyperbolic, k - i));
                accumulate(generator_column(fm, TK::hyperbolic, i),
                           generator_column(fn, TK::elliptic, k - i));
            }
        }
        columns.push_back(std::move(col));
    }

    return column_map(fmn.space, target, 0, columns);
}

StructureMapReport check_associativity(const SurfaceSpec& s, const TwistCurveSpec& c, int m,
                                       int n, int p) {
    F2LinearMap pm_mn = product_map(s, c, m, n);
    F2LinearMap pm_np = product_map(s, c, n, p);
    F2LinearMap id_m = F2LinearMap::identity(hf_space(s, c, m).space);
    F2LinearMap id_p = F2LinearMap::identity(hf_space(s, c, p).space);
    F2LinearMap lhs = compose(product_map(s, c, m + n, p), tensor(pm_mn, id_p));
    F2LinearMap rhs = compose(product_map(s, c, m, n + p), tensor(id_m, pm_np));

    StructureMapReport report;
    report.map = lhs;
    report.checks.push_back(compare_maps("associativity", lhs, rhs));
    return report;
}

StructureMapReport check_coassociativity(const SurfaceSpec& s, const TwistCurveSpec& c, int m,
                                         int n, int p) {
    F2LinearMap co_mn = coproduct_map(s, c, m, n);
    F2LinearMap co_np = coproduct_map(s, c, n, p);
    F2LinearMap id_m = F2LinearMap::identity(hf_space(s, c, m).space);
    F2LinearMap id_p = F2LinearMap::identity(hf_space(s, c, p).space);
    F2LinearMap lhs = compose(tensor(co_mn, id_p), coproduct_map(s, c, m + n, p));
    F2LinearMap rhs = compose(tensor(id_m, co_np), coproduct_map(s, c, m, n + p));

    StructureMapReport report;
    report.map = lhs;
    report.checks.push_back(compare_maps("coassociativity", lhs, rhs));
    return report;
}

StructureMapReport check_boundary_consistency(const SurfaceSpec& s, const TwistCurveSpec& c,
                                              int m, int n) {
    FloerSpace fmn = hf_space(s, c, m + n);
    FloerSpace fm = hf_space(s, c, m);
    FloerSpace fn = hf_space(s, c, n);
    GradedF2Space target = tensor_space(fm.space, fn.space);
    F2LinearMap push = compose(tensor(iota(fm), iota(fn)), diagonal_coproduct_map(fmn.complement));

    StructureMapReport report;
    report.map = coproduct_map(s, c, m, n);
    using TK = BasisLabel::TwistKind;
    for (int k : {0, m + n}) {
        for (TK kind : {TK::elliptic, TK::hyperbolic}) {
            // splitting formula at the boundary slice, every factor resolved
            F2Matrix lhs(target.dim(), 1);
            auto accumulate = [&](const F2Matrix& left, const F2Matrix& right) {
                F2Matrix term = tensor_column(left, right);
                for (int r = 0; r < target.dim(); ++r)
                    if (term.get(r, 0)) lhs.flip(r, 0);
            };
            for (int i = std::max(0, k - n); i <= std::min(m, k); ++i) {
                if (kind == TK::elliptic) {
                    accumulate(generator_column(fm, TK::elliptic, i),
                               generator_column(fn, TK::elliptic, k - i));
                } else {
                    accumulate(generator_column(fm, TK::elliptic, i),
                               generator_column(fn, TK::hyperbolic, k - i));
                    accumulate(generator_column(fm, TK::hyperbolic, i),
                               generator_column(fn, TK::elliptic, k - i));
                }
            }
            F2Matrix rhs = apply(push, resolve_boundary_generator(kind, k, m + n, fmn.complement));

            IdentityCheck check;
            check.name = std::string("boundary_consistency_") +
                         (kind == TK::elliptic ? "e" : "h") + "_" + std::to_string(k);
            check.pass = (lhs == rhs);
            if (!check.pass) check.counterexample = "slice " + std::to_string(k);
            report.checks.push_back(std::move(check));
        }
    }
    return report;
}

StructureMapReport check_cocommutativity(const SurfaceSpec& s, const TwistCurveSpec& c, int m,
                                         int n) {
    F2LinearMap co_mn = coproduct_map(s, c, m, n);
    F2LinearMap co_nm = coproduct_map(s, c, n, m);
    FloerSpace fm = hf_space(s, c, m);
    FloerSpace fn = hf_space(s, c, n);
    F2LinearMap swapped = compose(swap_map(fm.space, fn.space), co_mn);

    StructureMapReport report;
    report.map = co_mn;
    report.checks.push_back(compare_maps("cocommutativity", swapped, co_nm));
    return report;
}

}  // namespace twistfloer

#include "lietorus/eigen.hpp"

#include <algorithm>
#include <set>

namespace lietorus {

namespace {

// Monic minimal polynomial of m on the cyclic subspace generated by v.
CycPoly local_minimal_polynomial(const Mat& m, const Vec& v) {
    std::vector<Vec> krylov{v};
    SpanSolver span(krylov);
    Vec cur = v;
    while (true) {
        cur = m.apply(cur);
        auto coords = span.coordinates(cur);
        if (coords) {
            // cur = sum coords, with basis = reduced form of krylov; express in
            // terms of the original iterates instead
            auto sol = solve(Mat::from_columns(krylov), cur);
            CycPoly p(krylov.size() + 1);
            for (size_t i = 0; i < krylov.size(); ++i) p[i] = -(*sol)[i];
            p[krylov.size()] = CycNumber(1);
            return p;
        }
        krylov.push_back(cur);
        span = SpanSolver(krylov);
    }
}

CycPoly poly_lcm(const CycPoly& a, const CycPoly& b) {
    if (poly_is_zero(a)) return b;
    if (poly_is_zero(b)) return a;
    CycPoly g = poly_gcd(a, b);
    return poly_monic(poly_divmod(poly_mul(a, b), g).first);
}

}  // namespace

CycPoly minimal_polynomial(const Mat& m) {
    if (m.rows() != m.cols()) throw std::logic_error("minimal polynomial of non-square matrix");
    size_t n = m.rows();
    CycPoly mu{CycNumber(1)};
    for (size_t i = 0; i < n; ++i) {
        Vec e(n);
        e[i] = CycNumber(1);
        // skip vectors already annihilated by the current mu
        Vec img(n);
        {
            // evaluate mu(m) e without forming mu(m)
            Vec acc(n);
            Vec power = e;
            for (size_t k = 0; k < mu.size(); ++k) {
                add_scaled(acc, power, mu[k]);
                if (k + 1 < mu.size()) power = m.apply(power);
            }
            img = acc;
        }
        if (is_zero(img)) continue;
        mu = poly_lcm(mu, local_minimal_polynomial(m, e));
        if (poly_degree(mu) == static_cast<long>(n)) break;
    }
    return mu;
}

Mat restrict_operator(const Mat& op, const std::vector<Vec>& basis) {
    Mat b = Mat::from_columns(basis);
    Mat r(basis.size(), basis.size());
    SpanSolver span(basis);
    for (size_t j = 0; j < basis.size(); ++j) {
        Vec img = op.apply(basis[j]);
        auto sol = solve(b, img);
        if (!sol) throw std::logic_error("subspace is not invariant under operator");
        for (size_t i = 0; i < basis.size(); ++i) r(i, j) = (*sol)[i];
    }
    return r;
}

std::vector<EigenSpace> eigen_split(const Mat& op, const std::vector<Vec>& space,
                                    const std::vector<CycNumber>& extra_candidates) {
    if (space.empty()) return {};
    Mat r = restrict_operator(op, space);
    size_t d = space.size();

    CycPoly mu = minimal_polynomial(r);
    // candidate eigenvalues: supplied ones that are actually roots, plus the
    // discovered roots of what remains
    std::set<CycNumber> values;
    CycPoly rem = mu;
    for (const auto& cand : extra_candidates) {
        while (poly_degree(rem) > 0 && poly_eval(rem, cand).is_zero()) {
            values.insert(cand);
            rem = poly_divmod(rem, CycPoly{-cand, CycNumber(1)}).first;
        }
    }
    if (poly_degree(rem) > 0) {
        std::vector<CycNumber> roots;
        if (!poly_roots_in_domain(rem, roots)) {
            // either not split by our domain or genuinely non-semisimple
            CycPoly g = poly_gcd(mu, poly_derivative(mu));
            std::string what = poly_degree(g) > 0
                                   ? "operator is not semisimple"
                                   : "eigenvalues outside supported exact domain";
            throw not_diagonalizable(what, space[0]);
        }
        values.insert(roots.begin(), roots.end());
    }

    std::vector<EigenSpace> spaces;
    size_t total = 0;
    for (const auto& lam : values) {
        Mat shifted = r;
        for (size_t i = 0; i < d; ++i) shifted(i, i) -= lam;
        auto ker = kernel_basis(shifted);
        if (ker.empty()) continue;
        EigenSpace es;
        es.value = lam;
        for (const auto& k : ker) {
            Vec amb(space[0].size());
            for (size_t i = 0; i < d; ++i) add_scaled(amb, space[i], k[i]);
            es.basis.push_back(std::move(amb));
        }
        total += es.basis.size();
        spaces.push_back(std::move(es));
    }
    if (total != d) {
        // defective operator: witness is a vector outside the eigenspace sum
        std::vector<Vec> all;
        for (const auto& es : spaces) all.insert(all.end(), es.basis.begin(), es.basis.end());
        SpanSolver span(all);
        for (const auto& v : space)
            if (!span.contains(v)) throw not_diagonalizable("operator is not semisimple", v);
        throw not_diagonalizable("operator is not semisimple", space[0]);
    }
    return spaces;
}

std::vector<JointEigenSpace> joint_eigen_split(
    const std::vector<Mat>& ops, const std::vector<Vec>& space,
    const std::vector<std::vector<CycNumber>>& extra_candidates) {
    std::vector<JointEigenSpace> current{{Vec{}, space}};
    for (size_t k = 0; k < ops.size(); ++k) {
        std::vector<JointEigenSpace> next;
        for (const auto& cell : current) {
            auto split = eigen_split(ops[k], cell.basis,
                                     k < extra_candidates.size() ? extra_candidates[k]
                                                                 : std::vector<CycNumber>{});
            for (auto& es : split) {
                JointEigenSpace js;
                js.values = cell.values;
                js.values.push_back(es.value);
                js.basis = std::move(es.basis);
                next.push_back(std::move(js));
            }
        }
        current = std::move(next);
    }
    return current;
}

}  // namespace lietorus

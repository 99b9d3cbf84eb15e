#include "lietorus/linalg.hpp"

#include <stdexcept>

namespace lietorus {

bool is_zero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scaled(const Vec& v, const CycNumber& c) {
    Vec r = v;
    for (auto& x : r) x *= c;
    return r;
}

void add_scaled(Vec& acc, const Vec& v, const CycNumber& c) {
    if (c.is_zero()) return;
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += v[i] * c;
}

Mat Mat::identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = CycNumber(1);
    return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return Mat();
    Mat m(cols[0].size(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j)
        for (size_t i = 0; i < cols[j].size(); ++i) m(i, j) = cols[j][i];
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return Mat();
    Mat m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
    return m;
}

Vec Mat::column(size_t j) const {
    Vec v(rows_);
    for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Mat::row(size_t i) const {
    Vec v(cols_);
    for (size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::logic_error("matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const CycNumber& c = (*this)(i, k);
            if (c.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o(k, j).is_zero()) continue;
                r(i, j) += c * o(k, j);
            }
        }
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (cols_ != v.size()) throw std::logic_error("matrix apply shape mismatch");
    Vec r(rows_);
    for (size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (size_t i = 0; i < rows_; ++i) {
            if ((*this)(i, j).is_zero()) continue;
            r[i] += (*this)(i, j) * v[j];
        }
    }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Mat Mat::scaled_by(const CycNumber& c) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

Mat Mat::transposed() const {
    Mat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Mat Mat::pow(long e) const {
    if (e < 0) throw std::logic_error("negative matrix power");
    Mat acc = identity(rows_), base = *this;
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc = acc * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return acc;
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
        }
    return true;
}

namespace {

// In-place fraction-free-ish Gauss-Jordan; returns pivot columns.
std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        CycNumber inv = m(row, col).inverse();
        for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero()) continue;
            CycNumber f = m(r, col);
            for (size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

size_t rank(Mat m) { return rref(m).size(); }

CycNumber det(Mat m) {
    if (m.rows() != m.cols()) throw std::logic_error("det of non-square matrix");
    CycNumber d(1);
    size_t n = m.rows();
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && m(p, col).is_zero()) ++p;
        if (p == n) return CycNumber(0);
        if (p != col) {
            for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            d = -d;
        }
        d *= m(col, col);
        CycNumber inv = m(col, col).inverse();
        for (size_t r = col + 1; r < n; ++r) {
            if (m(r, col).is_zero()) continue;
            CycNumber f = m(r, col) * inv;
            for (size_t j = col; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return d;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = CycNumber(1);
    }
    auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

std::vector<Vec> kernel_basis(Mat m) {
    size_t n = m.cols();
    auto pivots = rref(m);
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vec v(n);
        v[free] = CycNumber(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(Mat m, Vec b) {
    size_t n = m.cols();
    Mat aug(m.rows(), n + 1);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // inconsistent
    Vec x(n);
    for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
    return x;
}

SpanSolver::SpanSolver(const std::vector<Vec>& spanning_vectors) {
    if (!spanning_vectors.empty()) ambient_ = spanning_vectors[0].size();
    for (const Vec& v : spanning_vectors) {
        Vec w = v;
        for (size_t b = 0; b < basis_.size(); ++b)
            if (!w[pivots_[b]].is_zero()) add_scaled(w, basis_[b], -w[pivots_[b]]);
        size_t p = 0;
        while (p < w.size() && w[p].is_zero()) ++p;
        if (p == w.size()) continue;
        CycNumber inv = w[p].inverse();
        for (auto& c : w) c *= inv;
        // keep reduced form: clear this pivot from earlier basis vectors
        for (size_t b = 0; b < basis_.size(); ++b)
            if (!basis_[b][p].is_zero()) add_scaled(basis_[b], w, -basis_[b][p]);
        basis_.push_back(std::move(w));
        pivots_.push_back(p);
    }
}

bool SpanSolver::contains(const Vec& v) const {
    Vec w = v;
    for (size_t b = 0; b < basis_.size(); ++b)
        if (!w[pivots_[b]].is_zero()) add_scaled(w, basis_[b], -w[pivots_[b]]);
    return is_zero(w);
}

std::optional<Vec> SpanSolver::coordinates(const Vec& v) const {
    Vec w = v;
    Vec coords(basis_.size());
    for (size_t b = 0; b < basis_.size(); ++b) {
        coords[b] = w[pivots_[b]];
        if (!coords[b].is_zero()) add_scaled(w, basis_[b], -coords[b]);
    }
    if (!is_zero(w)) return std::nullopt;
    return coords;
}

std::vector<Vec> grow_invariant_subspace(
    const std::vector<Vec>& seed, const std::vector<std::function<Vec(const Vec&)>>& ops) {
    SpanSolver span(seed);
    std::vector<Vec> frontier = span.basis();
    std::vector<Vec> all = span.basis();
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const Vec& v : frontier) {
            for (const auto& op : ops) {
                Vec w = op(v);
                if (!span.contains(w)) {
                    all.push_back(w);
                    span = SpanSolver(all);
                    next.push_back(std::move(w));
                }
            }
        }
        frontier = std::move(next);
    }
    return span.basis();
}

}  // namespace lietorus

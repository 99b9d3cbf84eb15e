#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lietorus/cyclotomic.hpp"

namespace lietorus {

using Vec = std::vector<CycNumber>;

bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const CycNumber& c);
void add_scaled(Vec& acc, const Vec& v, const CycNumber& c);

/// Dense matrix over the cyclotomic field, row major.
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Mat identity(size_t n);
    static Mat from_columns(const std::vector<Vec>& cols);
    static Mat from_rows(const std::vector<Vec>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    CycNumber& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const CycNumber& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Vec column(size_t j) const;
    Vec row(size_t i) const;

    Mat operator*(const Mat& o) const;
    Vec apply(const Vec& v) const;  // matrix * column vector
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled_by(const CycNumber& c) const;
    Mat transposed() const;
    Mat pow(long e) const;  // e >= 0

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool is_identity() const;

private:
    size_t rows_, cols_;
    std::vector<CycNumber> a_;
};

size_t rank(Mat m);
CycNumber det(Mat m);
std::optional<Mat> inverse(const Mat& m);
/// Basis of the right kernel {x : m x = 0}.
std::vector<Vec> kernel_basis(Mat m);
/// One solution of m x = b, if any.
std::optional<Vec> solve(Mat m, Vec b);

/// Row-reduced view of a fixed spanning set, for repeated membership and
/// coordinate queries against that span.
class SpanSolver {
public:
    SpanSolver() = default;
    explicit SpanSolver(const std::vector<Vec>& spanning_vectors);

    size_t dim() const { return basis_.size(); }
    size_t ambient() const { return ambient_; }
    bool contains(const Vec& v) const;
    /// Coordinates of v in terms of the original spanning vectors' reduced
    /// basis; nullopt when v is outside the span.
    std::optional<Vec> coordinates(const Vec& v) const;
    const std::vector<Vec>& basis() const { return basis_; }

private:
    size_t ambient_ = 0;
    std::vector<Vec> basis_;        // reduced, each with a unit pivot
    std::vector<size_t> pivots_;    // pivot position of each basis vector
};

/// Smallest subspace containing `seed` and closed under every operator in
/// `ops` (each op maps a vector to a vector in the same ambient space).
std::vector<Vec> grow_invariant_subspace(const std::vector<Vec>& seed,
                                         const std::vector<std::function<Vec(const Vec&)>>& ops);

}  // namespace lietorus

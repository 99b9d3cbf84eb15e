#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lietorus/cartan.hpp"
#include "lietorus/eigen.hpp"
#include "lietorus/linalg.hpp"

namespace lietorus {

/// Simple finite-dimensional Lie algebra in a Chevalley basis.
///
/// Basis order: h_1..h_l (simple coroots), then x_beta over positive roots in
/// (height, lex) order, then the corresponding negatives.  Structure constants
/// are integers; the invariant form is normalized so long roots have square
/// length 2.
class SimpleLieAlgebra {
public:
    explicit SimpleLieAlgebra(const CartanDatum& datum);

    const CartanDatum& datum() const { return datum_; }
    const RootSystem& roots() const { return roots_; }
    size_t dim() const { return dim_; }
    int rank() const { return datum_.rank; }
    const std::vector<std::string>& basis_labels() const { return labels_; }

    /// Basis index of the root vector x_root.
    size_t root_vector_index(size_t root_id) const { return datum_.rank + root_id; }
    /// Root id of basis index i, if i indexes a root vector.
    std::optional<size_t> root_of_basis_index(size_t i) const;

    using Sparse = std::vector<std::pair<size_t, CycNumber>>;
    const Sparse& bracket_basis(size_t i, size_t j) const { return table_[i * dim_ + j]; }
    Vec bracket(const Vec& x, const Vec& y) const;
    Mat ad(const Vec& x) const;

    const Mat& form() const { return form_; }
    CycNumber form_value(const Vec& x, const Vec& y) const;

    Vec basis_vector(size_t i) const;
    Vec coroot_vector(size_t root_id) const;  // h_alpha in the h_i basis slots

    /// Cartan subalgebra basis vectors h_1..h_l.
    std::vector<Vec> cartan_basis() const;

private:
    CartanDatum datum_;
    RootSystem roots_;
    size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Sparse> table_;
    Mat form_;
};

/// Builds g from a finite-type datum; throws on invalid input.
std::shared_ptr<const SimpleLieAlgebra> build_simple(const CartanDatum& datum);

struct AdDiagonalization {
    std::vector<Vec> subalgebra;  // the commuting elements
    struct WeightSpace {
        Vec weight;  // value of the functional on each element
        std::vector<Vec> basis;
    };
    std::vector<WeightSpace> spaces;
};

/// Joint weight-space decomposition of `ambient` (defaults to all of g) under
/// ad of the given commuting elements.  Eigenvalues must be exact (rational
/// or roots of unity); otherwise not_diagonalizable is thrown with a witness.
AdDiagonalization ad_diagonalize(const SimpleLieAlgebra& g, const std::vector<Vec>& elements,
                                 std::vector<Vec> ambient = {});

/// Enhanced root set of 1.6: the root coordinates of Delta^x, doubled short
/// roots when the family is B, and zero.
std::vector<std::vector<int>> enhanced_roots(const SimpleLieAlgebra& g);

}  // namespace lietorus

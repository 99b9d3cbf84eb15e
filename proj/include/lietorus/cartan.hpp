#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lietorus/cyclotomic.hpp"

namespace lietorus {

enum class Family { A, B, C, D, E, F, G };

Family family_from_char(char c);
char family_to_char(Family f);

/// Finite-type Cartan datum.  cartan[i][j] = <alpha_j, alpha_i^vee>.
struct CartanDatum {
    Family family;
    int rank;
    std::vector<std::vector<int>> cartan;

    static CartanDatum make(Family family, int rank);
    /// Symmetrizers d_i = (alpha_i, alpha_i)/2 normalized so long roots have
    /// square length 2.
    std::vector<Rational> symmetrizers() const;
    /// Throws if the symmetrized matrix is not positive definite.
    void validate() const;
    std::string name() const;
};

/// The finite root system of a Cartan datum.  Roots are integer coordinate
/// vectors in the simple-root basis; ids enumerate positives first (sorted by
/// height then lexicographically), then the negatives in the same order.
class RootSystem {
public:
    explicit RootSystem(const CartanDatum& datum);

    int rank() const { return rank_; }
    size_t num_positive() const { return positive_.size(); }
    size_t num_roots() const { return 2 * positive_.size(); }

    /// Coordinates of the positive representative (negative ids share the
    /// representative of their negation; use signed_coords for actual signs).
    const std::vector<int>& coords(size_t id) const;
    std::vector<int> signed_coords(size_t id) const;
    bool is_positive(size_t id) const { return id < positive_.size(); }
    size_t negation(size_t id) const;
    std::optional<size_t> find(const std::vector<int>& coords) const;
    long height(size_t id) const;

    /// (beta, beta) with long roots normalized to square length 2.
    const Rational& length2(size_t id) const;
    bool is_short(size_t id) const;
    bool simply_laced() const { return !two_lengths_; }
    size_t highest_root() const;        // id of the highest root
    size_t highest_short_root() const;  // id of the highest short root (= highest if one length)

    /// <beta, alpha_i^vee> for beta given by coordinates.
    long pairing_with_simple_coroot(const std::vector<int>& coords, int i) const;
    /// (alpha_i, alpha_j) of the normalized invariant form.
    const Rational& simple_form(int i, int j) const { return sym_[i][j]; }
    Rational root_form(size_t a, size_t b) const;  // (root_a, root_b)

    /// Chevalley structure constant N_{a,b} with [x_a, x_b] = N x_{a+b};
    /// requires a+b to be a root and a+b != 0.  Carter's extraspecial-pair
    /// normalization; constants are integers.
    Rational structure_constant(size_t a, size_t b) const;

    /// Coroot of root id expanded in simple coroots (integer coefficients).
    std::vector<Rational> coroot_coords(size_t id) const;

private:
    int rank_;
    std::vector<std::vector<int>> positive_;
    std::map<std::vector<int>, size_t> index_;
    std::vector<Rational> len2_;
    std::vector<std::vector<Rational>> sym_;
    bool two_lengths_ = false;
    Rational short_len2_;
    std::vector<std::vector<int>> cartan_;
    // extraspecial pair per non-simple positive root id
    std::vector<std::pair<size_t, size_t>> extraspecial_;
    mutable std::map<std::pair<size_t, size_t>, Rational> n_cache_;

    std::optional<size_t> sum_root(size_t a, size_t b) const;
    long chain_down(size_t a, size_t b) const;  // max k with b - k a a root
    Rational n_positive_pair(size_t a, size_t b) const;
    std::vector<int> negate(const std::vector<int>& c) const;
};

}  // namespace lietorus

#pragma once

#include "lietorus/central_ext.hpp"
#include "lietorus/cofinite_ideal.hpp"

namespace lietorus {

/// The twisted affine algebra L(g, sigma_0) = sum g_{k0bar} t_0^{k0} + C K
/// with bracket [X t^a, Y t^b] = [X,Y] t^{a+b} + (X,Y) a delta_{a+b,0} K.
class AffineAlgebra {
public:
    AffineAlgebra(std::shared_ptr<const SimpleLieAlgebra> g, const FiniteOrderAut& sigma0);

    const SimpleLieAlgebra& algebra() const { return *g_; }
    long order() const { return m0_; }
    /// Basis of the sigma_0-eigenspace g_{k0bar}.
    const std::vector<Vec>& slice(long k0) const;
    size_t slice_dim(long k0) const { return slice(k0).size(); }

    struct Element {
        std::map<long, Vec> loop;  // k0 -> vector in g
        CycNumber k_coeff;

        bool is_zero() const;
        Element& operator+=(const Element& o);
        Element scaled_by(const CycNumber& c) const;
        bool operator==(const Element& o) const;
    };

    Element bracket(const Element& a, const Element& b) const;

private:
    std::shared_ptr<const SimpleLieAlgebra> g_;
    long m0_;
    std::vector<std::vector<Vec>> slices_;  // index k0 mod m0
};

/// Per-variable evaluation points a_i = (a_i1, ..., a_iN_i), nonzero with
/// pairwise distinct m_i-th powers; index tuples run lexicographically.
class EvalData {
public:
    EvalData(std::vector<std::vector<CycNumber>> points, std::vector<long> orders);

    size_t nvars() const { return points_.size(); }
    long order(size_t i) const { return orders_[i]; }
    const std::vector<CycNumber>& points(size_t i) const { return points_[i]; }
    size_t count(size_t i) const { return points_[i].size(); }
    size_t total() const { return total_; }  // N = prod N_i

    /// The j-th index tuple I_j in lexicographic order (last index fastest).
    std::vector<size_t> index_tuple(size_t j) const;
    /// a_I^q for the j-th tuple.
    CycNumber point_power(size_t j, const std::vector<long>& q) const;

    /// The ideal I' generated by P_i' = prod_j (t_i^{m_i} - a_ij^{m_i}).
    CofiniteIdeal ideal_prime() const;

private:
    std::vector<std::vector<CycNumber>> points_;
    std::vector<long> orders_;
    size_t total_ = 1;
};

struct VandermondeCertificate {
    Mat matrix;               // N x N evaluation matrix
    CycNumber determinant;    // exact
    CycNumber factored_form;  // prod_i det(B_i D_i)^{N/N_i}
    bool invertible = false;
    bool factorization_matches = false;
};

/// Lemma 5.3 matrix for the residue vector k (0 <= k_i < m_i): entries
/// a_{1 i_1}^{l_1 m_1 + k_1} ... a_{n i_n}^{l_n m_n + k_n}, with the exact
/// determinant and its tensor-factorized closed form.
VandermondeCertificate vandermonde_matrix(const EvalData& data, const std::vector<long>& k);

/// The evaluation homomorphism phi of 5.4 on L' (loop + K (x) A(m), no
/// derivations): X t_0^{k0} t^k -> (X t_0^{k0} a_I^k)_I, K t^k -> (a_I^k K)_I.
std::vector<AffineAlgebra::Element> phi_eval(const LElement& x, const EvalData& data,
                                             const AffineAlgebra& affine);

struct Lemma55Report {
    struct ClassRank {
        long k0;
        std::vector<long> kres;
        size_t rank;      // of phi on the shift span T(k0bar, kbar)
        size_t expected;  // N * dim of the affine slice component
    };
    std::vector<ClassRank> surjectivity;
    bool surjective = true;
    struct KernelWindow {
        long k0;
        std::vector<long> kres;
        size_t kernel_dim;
        size_t ideal_window_dim;
        bool ideal_inside_kernel;
    };
    std::vector<KernelWindow> kernel;
    bool kernel_matches = true;
    bool d0_grade_preserved = true;
    bool pass = false;
};

/// Lemma 5.5 instance check over a window of d_0-grades |k0| <= k0_window and
/// per-variable shift exponents 0 <= q_i < window_i (window_i >= N_i).
Lemma55Report check_lemma_5_5(const std::shared_ptr<const JointGrading>& grading,
                              const EvalData& data, long k0_window,
                              const std::vector<long>& shift_window);

}  // namespace lietorus

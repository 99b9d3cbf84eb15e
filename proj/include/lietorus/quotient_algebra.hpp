#pragma once

#include "lietorus/central_ext.hpp"
#include "lietorus/cofinite_ideal.hpp"

namespace lietorus {

/// Basis element X t_0^{k0} t^{kres} u^mono of the loop part of L(A(m)/I),
/// with X the comp_index-th basis vector of the component at the residue of
/// (k0, kres).
struct QKey {
    long k0 = 0;
    std::vector<long> kres;  // 0 <= kres_i < m_i
    uint32_t comp_index = 0;
    uint32_t mono = 0;

    auto operator<=>(const QKey&) const = default;
};

/// Element of L(A(m)/I) + C d_0.
struct QElement {
    std::map<QKey, CycNumber> loop;
    Vec central;  // coefficients of K (x) (A(m)/I basis monomials)
    CycNumber d0;

    bool is_zero() const;
    QElement& operator+=(const QElement& o);
    QElement scaled_by(const CycNumber& c) const;
    void add_loop(const QKey& k, const CycNumber& c);
};

/// The finite-slice graded algebra L(A(m)/I) + C d_0 of Theorem 3.10.
class QuotientAlgebra {
public:
    QuotientAlgebra(std::shared_ptr<const JointGrading> grading, CofiniteIdeal ideal);

    const JointGrading& grading() const { return *grading_; }
    std::shared_ptr<const JointGrading> grading_ptr() const { return grading_; }
    const CofiniteIdeal& ideal() const { return ideal_; }
    const ZeroPartAnalysis& zero_part() const { return zpa_; }
    size_t n() const { return static_cast<size_t>(grading_->n()); }

    /// All loop basis keys at d_0-grade k0.
    std::vector<QKey> slice_keys(long k0) const;
    /// Loop dimension of the grade slice: sum_k dim g(k0bar,kbar) * dim A/I.
    size_t slice_dim(long k0) const;

    /// h(o)-weight of a key.
    const Vec& weight_of(const QKey& k) const;
    /// (weight, grade) height in the Q+ system of 3.5; >= 1 for roots.
    Rational root_height(const Vec& weight, long k0) const;

    QElement bracket_keys(const QKey& a, const QKey& b) const;
    QElement bracket(const QElement& a, const QElement& b) const;
    /// [d_0, x].
    QElement d0_bracket(const QElement& x) const;

    /// Classification of a key against the triangular decomposition: -1 for
    /// L^-, 0 for L^0, +1 for L^+.
    int triangular_sign(const QKey& k) const;

    /// Loop element X t^{kres} u^mono multiplied by an A(m)/I coefficient
    /// profile: expands f into basis monomials.
    QElement smear(const QKey& base, const CofiniteIdeal::QElem& f) const;

private:
    std::shared_ptr<const JointGrading> grading_;
    CofiniteIdeal ideal_;
    ZeroPartAnalysis zpa_;
    mutable std::map<std::pair<QKey, QKey>, QElement> bracket_cache_;
};

enum class RootSign { positive, negative, zero, not_root };

/// 3.5: alpha + k0 delta is positive iff k0 > 0, or k0 = 0 and alpha > 0 in
/// the lex order of the simple system; flags non-roots.
RootSign classify_root(const JointGrading& grading, const Vec& alpha, long k0);

}  // namespace lietorus

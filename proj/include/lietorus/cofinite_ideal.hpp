#pragma once

#include <optional>

#include "lietorus/linalg.hpp"
#include "lietorus/poly.hpp"

namespace lietorus {

/// Co-finite ideal I of A(m) = C[t_1^{+-m_1}, ..., t_n^{+-m_n}] generated by
/// one polynomial per variable, P_i univariate in u_i = t_i^{m_i}.  The
/// generators are supplied through their roots (in the u_i variable), so the
/// radical is computable; a raw-coefficient constructor exists but cannot be
/// radicalized.
///
/// A(m)/I elements are dense coefficient vectors over the monomial basis
/// u^e, 0 <= e_i < deg P_i, with e_1 fastest.
class CofiniteIdeal {
public:
    struct VarSpec {
        long m = 1;                                     // t_i-exponent step
        std::vector<std::pair<CycNumber, int>> roots;   // (a_ij, b_ij); P_i = prod (u - a^m)^b
    };

    explicit CofiniteIdeal(std::vector<VarSpec> vars);
    static CofiniteIdeal from_raw(std::vector<long> m, std::vector<CycPoly> generators);

    size_t nvars() const { return vars_.size(); }
    long var_order(size_t i) const { return vars_[i].m; }
    size_t var_degree(size_t i) const { return gens_[i].size() - 1; }
    const CycPoly& generator(size_t i) const { return gens_[i]; }
    bool roots_known() const { return roots_known_; }
    const std::vector<VarSpec>& specs() const { return vars_; }

    size_t quotient_dim() const { return qdim_; }

    using QElem = Vec;  // length quotient_dim()

    QElem zero() const { return QElem(qdim_); }
    QElem one() const;
    /// u^e as a quotient element; arbitrary integer exponents (Laurent).
    QElem u_monomial(const std::vector<long>& e) const;
    /// t^k for k in Gamma (m_i | k_i).
    QElem reduce_gamma(const std::vector<long>& k) const;
    QElem mul(const QElem& a, const QElem& b) const;
    /// Multiply by p(u_i) inside the quotient.
    QElem mul_poly(size_t var, const CycPoly& p, const QElem& a) const;
    /// Multiply by u_i^e (e may be negative).
    QElem mul_u_power(size_t var, long e, const QElem& a) const;

    /// Mixed-radix index of the basis monomial with exponents ebase.
    size_t index_of(const std::vector<size_t>& ebase) const;
    std::vector<size_t> exponents_of(size_t index) const;

    /// Evaluation at a point (per-variable values of t_i); an algebra
    /// character of A(m), factoring through A(m)/I iff each P_i vanishes.
    CycNumber evaluate(const QElem& a, const std::vector<CycNumber>& t_values) const;

    /// Squarefree ideal I' generated by the products over distinct roots.
    /// Throws when the roots are not known.
    CofiniteIdeal radical() const;

private:
    std::vector<VarSpec> vars_;
    std::vector<CycPoly> gens_;  // monic, in u_i
    bool roots_known_ = true;
    size_t qdim_ = 1;
    std::vector<Mat> mul_u_;      // per variable: multiplication by u_i on C[u]/(P_i)
    std::vector<Mat> mul_u_inv_;  // multiplication by u_i^{-1}

    CofiniteIdeal() = default;
    void finish();
};

/// I' of section 4: squarefree parts of the generators; I is contained in I'.
CofiniteIdeal radical_ideal(const CofiniteIdeal& ideal);

}  // namespace lietorus

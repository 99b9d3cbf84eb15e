#pragma once

#include "lietorus/loop_algebra.hpp"

namespace lietorus {

/// Element of Omega_A/dA in canonical form: finite sum of coefficient vectors
/// (c_0..c_n) at degrees (k_0,k), each vector standing for sum_i c_i
/// t_0^{k0} t^k K_i.  At a nonzero degree the single dA relation
/// sum_i k_i t_0^{k0} t^k K_i is quotiented out by zeroing the coefficient
/// along the last nonzero degree coordinate; degree zero is unreduced.
class CentralClass {
public:
    CentralClass() = default;
    explicit CentralClass(size_t nvars) : nvars_(nvars) {}

    size_t nvars() const { return nvars_; }
    const std::map<Deg, Vec>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds sum_i coeffs[i] t_0^{k0} t^k K_i and re-canonicalizes.
    void add(const Deg& degree, const Vec& coeffs);
    void add_single(const Deg& degree, size_t i, const CycNumber& c);

    CentralClass& operator+=(const CentralClass& o);
    friend CentralClass operator+(CentralClass a, const CentralClass& b) { return a += b; }
    CentralClass scaled_by(const CycNumber& c) const;
    bool operator==(const CentralClass& o) const;

private:
    size_t nvars_ = 0;  // n: number of t_1..t_n variables; vectors have n+1 slots
    std::map<Deg, Vec> terms_;
};

/// Element of the extended algebra LTtilde = LT + Z(m0,m) + Dbar.
struct ExtendedElement {
    LoopElement loop;
    CentralClass central;  // degrees restricted to Gamma_0 + Gamma
    Vec ders;              // coefficients of d_0..d_n

    explicit ExtendedElement(std::shared_ptr<const JointGrading> grading);
    std::shared_ptr<const JointGrading> grading() const { return loop.grading(); }
    bool is_zero() const;
    ExtendedElement& operator+=(const ExtendedElement& o);
    friend ExtendedElement operator+(ExtendedElement a, const ExtendedElement& b) {
        return a += b;
    }
    ExtendedElement scaled_by(const CycNumber& c) const;
    bool operator==(const ExtendedElement& o) const;

    /// Adds c t_0^{k0} t^k K_i; the degree must lie in Gamma_0 + Gamma.
    void add_central(const Deg& degree, size_t i, const CycNumber& c);
};

/// True when m_i | k_i for every coordinate.
bool degree_in_lattice(const AutFamily& family, const Deg& degree);

/// The 2-cocycle of 2.1(a): (X,Y) sum_i k_i t_0^{k0+l0} t^{k+l} K_i, summed
/// over term pairs (the central term carries the summed degree).
CentralClass cocycle(const LoopElement& x, const LoopElement& y);

/// Full bracket on LTtilde: loop brackets plus cocycle, derivations acting by
/// degree scalars, Z central under the loop part.
ExtendedElement ext_bracket(const ExtendedElement& a, const ExtendedElement& b);

/// Dimension of the central space Z(m0,m) at a lattice degree: n+1 at degree
/// zero, n elsewhere.  Degrees outside Gamma_0 + Gamma are rejected.
long center_dim(const AutFamily& family, const Deg& degree);

/// Element of the subquotient Ltilde = L + D of 3.1/3.2; the central part is
/// K (x) A(m), keyed by k in Gamma.
struct LElement {
    LoopElement loop;
    std::map<std::vector<long>, CycNumber> central;  // k (length n) -> coeff of K t^k
    Vec ders;                                        // d_0..d_n

    explicit LElement(std::shared_ptr<const JointGrading> grading);
    std::shared_ptr<const JointGrading> grading() const { return loop.grading(); }
    bool is_zero() const;
    LElement& operator+=(const LElement& o);
    friend LElement operator+(LElement a, const LElement& b) { return a += b; }
    LElement scaled_by(const CycNumber& c) const;
    bool operator==(const LElement& o) const;
    void add_central(const std::vector<long>& k, const CycNumber& c);
};

/// Bracket of 3.1 extended by the d_i rules: the central term of a loop pair
/// is (X,Y) k_0 delta_{k0+l0,0} K t^{k+l}.
LElement l_bracket(const LElement& a, const LElement& b);

/// The projection Phi of 3.2: loop fixed, t^k K_0 -> K t^k, other K_i and
/// positive t_0-degrees killed, d_i -> d_i.
LElement phi_project(const ExtendedElement& a);

/// Coordinate change on a central class: degrees (k_0,k) -> (k_0, B k) and
/// coefficient vectors transform by 1 (+) B, which is the unique action
/// compatible with d(t^k)t^s -> d(t^{Bk})t^{Bs}.
CentralClass change_coordinates_central(const std::vector<std::vector<long>>& B,
                                        const CentralClass& c);

/// Root of LTtilde: the functional alpha + delta(k_0,k) on htilde.
struct RootSpaceIndex {
    Vec alpha;   // values on the h(o) basis
    Deg degree;  // (k_0, k)
    bool is_real() const { return !is_zero(alpha); }  // null otherwise
};

/// Exact basis of the root space LTtilde_{alpha+delta(k0,k)}.
std::vector<ExtendedElement> root_space_basis(const std::shared_ptr<const JointGrading>& grading,
                                              const RootSpaceIndex& index);

}  // namespace lietorus

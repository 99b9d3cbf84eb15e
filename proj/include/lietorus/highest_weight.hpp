#pragma once

#include "lietorus/quotient_algebra.hpp"

namespace lietorus {

/// PBW monomial in lowering generators: weakly decreasing sequence of keys
/// (largest first), acting left to right on the top space.
using Monomial = std::vector<QKey>;
/// Sparse vector in M(N): (monomial, top-space index) -> coefficient.
using MVec = std::map<std::pair<Monomial, size_t>, CycNumber>;

/// Irreducible finite-dimensional module N for L^0 presented through a
/// quotient algebra: matrices for the zero-part loop keys, scalars for
/// K (x) A(m)/I and d_0, and the h(o)-weight lambda.
class ZeroPartModule {
public:
    /// One-dimensional character: x t^k u^e acts by lambda(x-part of h(o))
    /// times the evaluation of t^k u^e at the point; K t^k u^e acts by
    /// level times the same evaluation.
    static ZeroPartModule character(const QuotientAlgebra& q, Vec lambda_h, CycNumber level,
                                    CycNumber d0_value, std::vector<CycNumber> eval_point);
    /// User-supplied action matrices (validated).
    static ZeroPartModule from_matrices(const QuotientAlgebra& q, size_t dim,
                                        std::map<QKey, Mat> loop_actions, Vec central_scalars,
                                        Vec lambda_h, CycNumber d0_value);

    size_t dim() const { return dim_; }
    const Vec& lambda_h() const { return lambda_h_; }
    CycNumber level() const { return central_scalars_.empty() ? CycNumber(0) : central_scalars_[0]; }
    CycNumber d0_value() const { return d0_value_; }
    const Vec& central_scalars() const { return central_scalars_; }
    const Mat& action_of_key(const QKey& k) const;

    /// Exact validation: bracket relations on all zero-part key pairs,
    /// h~(o) scalars, and absolute irreducibility (Burnside closure).
    /// Throws std::invalid_argument with a witness description.
    void validate(const QuotientAlgebra& q) const;

private:
    size_t dim_ = 0;
    std::map<QKey, Mat> loop_actions_;
    Vec central_scalars_;  // per quotient monomial
    Vec lambda_h_;
    CycNumber d0_value_;
};

/// Weight spaces of the Verma module M(N) and its irreducible quotient V(N)
/// over L(A(m)/I) + C d_0, exact on every slice whose d_0-grade distance is
/// at most `depth` and whose Q+-height is at most `weight_height`.
class HighestWeightModule {
public:
    HighestWeightModule(std::shared_ptr<const QuotientAlgebra> q, ZeroPartModule n, long depth,
                        Rational weight_height);

    struct Slice {
        Vec weight;  // actual h(o)-weight
        long grade;  // d_0-grade distance from the top (>= 0)
        std::vector<Monomial> monomials;
        size_t m_dim = 0;  // monomials * dim N = Verma dimension
        std::vector<Vec> radical;
        SpanSolver radical_span;
        size_t v_dim = 0;  // m_dim - |radical| = V(N) dimension

        std::map<Monomial, size_t> monomial_index;
    };
    struct SliceKeyLess {
        bool operator()(const std::pair<long, Vec>& a, const std::pair<long, Vec>& b) const {
            if (a.first != b.first) return a.first < b.first;
            return VecLess{}(a.second, b.second);
        }
    };
    using SliceMap = std::map<std::pair<long, Vec>, Slice, SliceKeyLess>;

    const QuotientAlgebra& algebra() const { return *q_; }
    const ZeroPartModule& top() const { return n_; }
    long depth() const { return depth_; }
    Rational weight_height() const { return weight_height_; }
    const SliceMap& slices() const { return slices_; }
    const std::vector<QKey>& lowering_generators() const { return gens_minus_; }
    const std::vector<QKey>& raising_generators() const { return gens_plus_; }

    /// Module action of a generator / algebra element on an M(N) vector.
    MVec apply_key(const QKey& k, const MVec& v) const;
    MVec apply(const QElement& x, const MVec& v) const;

    /// Locates the slice a term belongs to (weight of the monomial).
    std::pair<long, Vec> slice_key_of(const Monomial& mono) const;
    /// Coordinates of v in a slice's (monomial x N) basis; throws when terms
    /// fall outside the slice.
    Vec slice_coordinates(const Slice& s, const MVec& v) const;
    /// True when v is zero in V(N) (i.e. lies in the radical of its slice).
    bool is_zero_in_vn(const MVec& v) const;
    /// True when the slice of (grade, weight) is inside the computed window.
    bool in_window(long grade, const Vec& weight) const;

private:
    std::shared_ptr<const QuotientAlgebra> q_;
    ZeroPartModule n_;
    long depth_;
    Rational weight_height_;
    std::vector<QKey> gens_minus_;  // descending
    std::vector<QKey> gens_plus_;   // descending
    SliceMap slices_;
    mutable std::map<std::tuple<QKey, Monomial, size_t>, MVec> act_cache_;

    MVec act_on_term(const QKey& g, const Monomial& mono, size_t ni) const;
    MVec apply_element_to_term(const QElement& x, const Monomial& mono, size_t ni) const;
    void build_slices();
    void compute_radical(Slice& s);
};

/// Builds V(N) slices; the zero-part module is validated first.
std::shared_ptr<HighestWeightModule> build_vn(std::shared_ptr<const QuotientAlgebra> q,
                                              ZeroPartModule n, long depth,
                                              Rational weight_height);

struct HypothesisReport {
    bool ok = true;
    std::string witness;
};

struct AnnihilationReport {
    bool ok = true;
    size_t checked = 0;
    size_t skipped_window = 0;
    std::vector<std::string> failures;
};

struct Thm310Report {
    HypothesisReport hypothesis;
    AnnihilationReport annihilation;
    bool pass = false;
};

/// Exact check that L(ideal) annihilates every computed slice of V(N); the
/// module must be built over an ideal contained in `ideal`.
AnnihilationReport check_ideal_annihilation(const HighestWeightModule& module,
                                            const CofiniteIdeal& ideal);

/// Theorem 3.10 instance check: L^0(I) N = 0 over a spanning set, then
/// (Proposition 3.9) L(I) annihilates every computed slice of V(N).  The
/// module must be built over an ideal contained in `ideal` (so that the
/// elements of L(I) are visible in the quotient).
Thm310Report check_thm_3_10(const HighestWeightModule& module, const CofiniteIdeal& ideal);

struct IntegrabilityReport {
    bool integrable_on_window = true;
    bool bound_exceeded = false;
    long max_index = 0;
    size_t checked = 0;
    size_t window_limited = 0;
    std::string witness;
};

/// Local nilpotency of real-root generators on every computed slice.
IntegrabilityReport check_integrability(const HighestWeightModule& module, long bound = 64);

struct Prop43Report {
    bool applicable = false;
    IntegrabilityReport integrability;
    AnnihilationReport annihilation;
    bool pass = false;
};

/// Proposition 4.3 instance check: for integrable V(N), L(I') annihilates the
/// computed slices, where I' is the radical of the build ideal.
Prop43Report check_prop_4_3(const HighestWeightModule& module, const CofiniteIdeal& ideal_prime,
                            long nilpotency_bound = 64);

}  // namespace lietorus

#pragma once

#include <map>
#include <string>

#include "lietorus/automorphism.hpp"

namespace lietorus {

/// Degree (k_0, k) in Z^{n+1}; index 0 is the t_0 exponent.
using Deg = std::vector<long>;

Deg deg_add(const Deg& a, const Deg& b);
Deg deg_neg(const Deg& a);
bool deg_is_zero(const Deg& a);
std::string deg_to_string(const Deg& a);

/// Comparator for weight vectors used in ordered maps.
struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

/// Element of the multiloop algebra LT: a finite sum of X t_0^{k0} t^k terms,
/// with each X in the component matching the degree residue.
class LoopElement {
public:
    LoopElement() = default;
    explicit LoopElement(std::shared_ptr<const JointGrading> grading)
        : grading_(std::move(grading)) {}

    const std::map<Deg, Vec>& terms() const { return terms_; }
    std::shared_ptr<const JointGrading> grading() const { return grading_; }
    bool is_zero() const;

    /// Adds v t_0^{k0} t^k; validates that v lies in the matching component.
    void add_term(const Deg& degree, const Vec& v);
    /// Trusted path for internally generated terms.
    void add_term_unchecked(const Deg& degree, const Vec& v);

    LoopElement& operator+=(const LoopElement& o);
    LoopElement& operator-=(const LoopElement& o);
    friend LoopElement operator+(LoopElement a, const LoopElement& b) { return a += b; }
    friend LoopElement operator-(LoopElement a, const LoopElement& b) { return a -= b; }
    LoopElement scaled_by(const CycNumber& c) const;
    bool operator==(const LoopElement& o) const;

private:
    std::shared_ptr<const JointGrading> grading_;
    std::map<Deg, Vec> terms_;
    void prune();
};

/// [a, b] in LT (centerless part; degrees add termwise).
LoopElement loop_bracket(const LoopElement& a, const LoopElement& b);

/// GL(n,Z) coordinate change on the t_1..t_n degrees: X t^k -> X t^{B k}.
/// Requires |det B| = 1 and compatibility with the twisting lattice (always
/// satisfied when the sigma_i for i >= 1 are trivial).
LoopElement change_coordinates(const std::vector<std::vector<long>>& B, const LoopElement& x);

/// Root-system data of the zero component g(0,0) under h(o), plus the weight
/// geometry shared by the axiom checker and the highest-weight machinery.
struct ZeroPartAnalysis {
    std::vector<Vec> h_o;
    Mat gram;      // invariant form on the h_o basis
    Mat gram_inv;  // defined when the form is nondegenerate on h(o)
    bool form_degenerate = false;

    std::vector<Vec> delta0;        // nonzero weights of g(0,0)
    std::vector<Vec> simple_roots;  // simple system for the lex-positive order
    bool two_lengths = false;
    bool type_B = false;  // rank-1 systems count as B_1 (BC convention)
    Vec highest_root;     // of Delta_0
    Vec highest_short;    // equals highest_root for one root length

    std::vector<Vec> delta_full;  // nonzero weights of all of g under h(o)
    Vec beta_max;                 // maximal weight of Delta(g, h(o))
    std::vector<Vec> enhanced;    // Delta_0,en without zero

    CycNumber weight_form(const Vec& a, const Vec& b) const;
    bool lex_positive(const Vec& w) const;
    bool in_enhanced(const Vec& w) const;
    /// Coordinates of w in the simple system (empty when outside the span).
    std::optional<Vec> simple_coords(const Vec& w) const;
};

ZeroPartAnalysis analyze_zero_part(const JointGrading& grading);

struct TorusReport {
    bool is_lie_torus = false;
    bool simple_zero_part = false;
    std::string zero_part_witness;  // empty when simple
    struct MFailure {
        std::vector<long> residue;
        Vec weight;
        std::string reason;
    };
    std::vector<MFailure> property_m_failures;
    bool enhanced_root_check = true;
    std::map<std::vector<long>, size_t> component_dims;
};

/// Lie-torus axioms 1.7(a)/(b) via the 1.8-style weight conditions.
TorusReport check_lie_torus(const JointGrading& grading);

struct Sl2Copy {
    bool ok = false;
    std::string failure;
    Vec e, f, h;  // vectors in g with [h,e]=2e, [h,f]=-2f, [e,f]=h
};

/// The sl2 copy of 1.8(d) attached to a nonzero weight of a component.
Sl2Copy sl2_copy(const JointGrading& grading, const std::vector<long>& residue, const Vec& alpha);

}  // namespace lietorus

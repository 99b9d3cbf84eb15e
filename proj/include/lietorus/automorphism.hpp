#pragma once

#include <map>
#include <memory>

#include "lietorus/simple_lie.hpp"

namespace lietorus {

/// Finite-order automorphism of g, stored as an explicit matrix over the
/// cyclotomic field in the Chevalley basis.
struct FiniteOrderAut {
    enum class Kind { diagram, inner, composite };
    Kind kind;
    long order = 1;  // exact multiplicative order
    Mat matrix;
};

/// Automorphism induced by a Dynkin-diagram symmetry (0-based permutation of
/// the nodes).  Rejects permutations that do not preserve the Cartan matrix.
FiniteOrderAut diagram_aut(const SimpleLieAlgebra& g, const std::vector<int>& node_permutation);

/// Inner torus automorphism: scales the Chevalley generator e_j by
/// zeta_m^{s_j}, extended multiplicatively over root coordinates; fixes h.
FiniteOrderAut inner_torus_aut(const SimpleLieAlgebra& g, const std::vector<long>& s, long m);

FiniteOrderAut identity_aut(const SimpleLieAlgebra& g);
FiniteOrderAut compose_auts(const SimpleLieAlgebra& g, const FiniteOrderAut& a,
                            const FiniteOrderAut& b);

/// Checks sigma([x,y]) = [sigma x, sigma y] on all basis pairs.
bool preserves_bracket(const SimpleLieAlgebra& g, const Mat& m);
/// Checks (sigma x, sigma y) = (x, y) on all basis pairs.
bool preserves_form(const SimpleLieAlgebra& g, const Mat& m);

/// The commuting family sigma_0, ..., sigma_n with its orders (m_0, m).
/// Validated at construction: each sigma preserves bracket and form, has the
/// stated exact order, and the family commutes (witness pair reported).
class AutFamily {
public:
    AutFamily(std::shared_ptr<const SimpleLieAlgebra> algebra, std::vector<FiniteOrderAut> auts);

    const SimpleLieAlgebra& algebra() const { return *algebra_; }
    std::shared_ptr<const SimpleLieAlgebra> algebra_ptr() const { return algebra_; }
    int n() const { return static_cast<int>(auts_.size()) - 1; }
    const std::vector<FiniteOrderAut>& auts() const { return auts_; }
    long order(int i) const { return auts_[static_cast<size_t>(i)].order; }
    std::vector<long> orders() const;

    /// Residue of an integer degree vector (k_0, k) in Lambda_0 x Lambda.
    std::vector<long> residue(const std::vector<long>& degree) const;

private:
    std::shared_ptr<const SimpleLieAlgebra> algebra_;
    std::vector<FiniteOrderAut> auts_;
};

/// One simultaneous eigenspace g(k0bar, kbar), with its ad-h(o) weight
/// decomposition.
struct GradingComponent {
    struct WeightBlock {
        Vec weight;  // values on the h(o) basis
        std::vector<Vec> basis;
    };
    std::vector<WeightBlock> blocks;
    std::vector<Vec> basis;  // concatenated block bases
    SpanSolver solver;       // membership / coordinates against `basis`

    size_t dim() const { return basis.size(); }
    /// Weight of flat basis index i.
    const Vec& weight_of(size_t i) const;
};

/// The joint grading of g by a commuting family, plus the fixed Cartan h(o).
class JointGrading {
public:
    explicit JointGrading(std::shared_ptr<const AutFamily> family);

    const AutFamily& family() const { return *family_; }
    std::shared_ptr<const AutFamily> family_ptr() const { return family_; }
    const SimpleLieAlgebra& algebra() const { return family_->algebra(); }
    int n() const { return family_->n(); }

    const std::vector<Vec>& h_o() const { return h_o_; }
    const std::map<std::vector<long>, GradingComponent>& components() const { return components_; }
    const GradingComponent& component(const std::vector<long>& residue) const;
    const GradingComponent& component_of_degree(const std::vector<long>& degree) const;

    /// True when the zero component's weight-zero part equals h(o) (i.e. the
    /// fixed Cartan is self-centralizing in g(0,0)).
    bool h_o_is_cartan() const { return h_o_is_cartan_; }

private:
    std::shared_ptr<const AutFamily> family_;
    std::vector<Vec> h_o_;
    std::map<std::vector<long>, GradingComponent> components_;
    bool h_o_is_cartan_ = false;
};

/// Builds the joint grading; throws on a non-commuting family with a witness
/// pair in the message.
std::shared_ptr<const JointGrading> joint_eigenspaces(std::shared_ptr<const AutFamily> family);

}  // namespace lietorus

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lietorus/linalg.hpp"
#include "lietorus/poly.hpp"

namespace lietorus {

/// Raised when an operator is not semisimple, or its eigenvalues escape the
/// supported exact domain (rationals and roots of unity); carries a witness.
class not_diagonalizable : public std::runtime_error {
public:
    not_diagonalizable(std::string what, Vec witness)
        : std::runtime_error(std::move(what)), witness(std::move(witness)) {}
    Vec witness;
};

/// Minimal polynomial of a square matrix (monic), by Krylov iteration.
CycPoly minimal_polynomial(const Mat& m);

struct EigenSpace {
    CycNumber value;
    std::vector<Vec> basis;  // vectors in the ambient space
};

/// Exact eigenspace split of `space` (a list of independent vectors spanning
/// an op-invariant subspace) under the ambient operator `op`.  Eigenvalues
/// are discovered from the minimal polynomial; `extra_candidates` are tried
/// first (cheap when the spectrum is known, e.g. roots of unity of a known
/// order).  Throws not_diagonalizable with a witness vector otherwise.
std::vector<EigenSpace> eigen_split(const Mat& op, const std::vector<Vec>& space,
                                    const std::vector<CycNumber>& extra_candidates = {});

struct JointEigenSpace {
    Vec values;  // one eigenvalue per operator
    std::vector<Vec> basis;
};

/// Simultaneous split under a commuting family, iterating eigen_split in
/// operator order (deterministic bases).
std::vector<JointEigenSpace> joint_eigen_split(
    const std::vector<Mat>& ops, const std::vector<Vec>& space,
    const std::vector<std::vector<CycNumber>>& extra_candidates = {});

/// Restriction R of `op` to span(basis): op * basis = basis * R.
/// Throws if the span is not invariant.
Mat restrict_operator(const Mat& op, const std::vector<Vec>& basis);

}  // namespace lietorus

#pragma once

#include <cstdint>
#include <random>

#include "lietorus/central_ext.hpp"

namespace lietorus {

/// Deterministic sampler for randomized property checks; every report records
/// the seed that drove it.
class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi);
    Rational rational(long num_bound = 3, long den_bound = 3);
    CycNumber cyc(long conductor);
    /// Random vector in the span of a component's basis (small coefficients).
    Vec component_vector(const GradingComponent& comp);
    /// Random degree with |k_i| <= bound_i.
    Deg degree(const std::vector<long>& bounds);
    /// Random loop element with up to max_terms terms in the degree box.
    LoopElement loop_element(const std::shared_ptr<const JointGrading>& grading,
                             const std::vector<long>& degree_bounds, int max_terms = 3);
    /// Random extended element (loop + lattice central part + derivations).
    ExtendedElement extended_element(const std::shared_ptr<const JointGrading>& grading,
                                     const std::vector<long>& degree_bounds, int max_terms = 3);

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace lietorus

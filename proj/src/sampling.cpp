#include "lietorus/sampling.hpp"

namespace lietorus {

long Sampler::integer(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Rational Sampler::rational(long num_bound, long den_bound) {
    Rational r(integer(-num_bound, num_bound), integer(1, den_bound));
    r.canonicalize();
    return r;
}

CycNumber Sampler::cyc(long conductor) {
    std::vector<Rational> c(static_cast<size_t>(euler_phi(conductor)));
    for (auto& x : c) x = rational();
    return CycNumber::from_coeffs(conductor, std::move(c));
}

Vec Sampler::component_vector(const GradingComponent& comp) {
    if (comp.dim() == 0) return {};
    Vec v(comp.basis[0].size());
    for (const auto& b : comp.basis) add_scaled(v, b, CycNumber(rational()));
    return v;
}

Deg Sampler::degree(const std::vector<long>& bounds) {
    Deg d(bounds.size());
    for (size_t i = 0; i < bounds.size(); ++i) d[i] = integer(-bounds[i], bounds[i]);
    return d;
}

LoopElement Sampler::loop_element(const std::shared_ptr<const JointGrading>& grading,
                                  const std::vector<long>& degree_bounds, int max_terms) {
    LoopElement x(grading);
    int terms = static_cast<int>(integer(1, max_terms));
    for (int t = 0; t < terms; ++t) {
        Deg d = degree(degree_bounds);
        Vec v = component_vector(grading->component_of_degree(d));
        if (!is_zero(v)) x.add_term_unchecked(d, v);
    }
    return x;
}

ExtendedElement Sampler::extended_element(const std::shared_ptr<const JointGrading>& grading,
                                          const std::vector<long>& degree_bounds, int max_terms) {
    ExtendedElement x(grading);
    x.loop = loop_element(grading, degree_bounds, max_terms);
    auto m = grading->family().orders();
    int cterms = static_cast<int>(integer(0, max_terms - 1));
    for (int t = 0; t < cterms; ++t) {
        Deg d(degree_bounds.size());
        for (size_t i = 0; i < d.size(); ++i)
            d[i] = m[i] * integer(-degree_bounds[i] / m[i], degree_bounds[i] / m[i]);
        x.add_central(d, static_cast<size_t>(integer(0, static_cast<long>(m.size()) - 1)),
                      CycNumber(rational()));
    }
    for (auto& c : x.ders) c = CycNumber(rational());
    return x;
}

}  // namespace lietorus

#include "lietorus/cofinite_ideal.hpp"

#include <stdexcept>

namespace lietorus {

CofiniteIdeal::CofiniteIdeal(std::vector<VarSpec> vars) {
    vars_ = std::move(vars);
    for (const auto& v : vars_) {
        if (v.m <= 0) throw std::invalid_argument("variable order must be positive");
        if (v.roots.empty()) throw std::invalid_argument("ideal generator needs at least one root");
        CycPoly p{CycNumber(1)};
        for (const auto& [a, b] : v.roots) {
            if (a.is_zero()) throw std::invalid_argument("evaluation roots must be nonzero");
            if (b <= 0) throw std::invalid_argument("root multiplicities must be positive");
            CycNumber am = a.pow(v.m);
            for (const auto& [a2, b2] : v.roots) {
                if (&a2 != &a && a2.pow(v.m) == am)
                    throw std::invalid_argument("coincident m-th powers among ideal roots");
            }
            CycPoly lin{-am, CycNumber(1)};
            for (int rep = 0; rep < b; ++rep) p = poly_mul(p, lin);
        }
        gens_.push_back(std::move(p));
    }
    roots_known_ = true;
    finish();
}

CofiniteIdeal CofiniteIdeal::from_raw(std::vector<long> m, std::vector<CycPoly> generators) {
    CofiniteIdeal ideal;
    if (m.size() != generators.size()) throw std::invalid_argument("size mismatch");
    for (size_t i = 0; i < m.size(); ++i) {
        VarSpec v;
        v.m = m[i];
        ideal.vars_.push_back(v);
        CycPoly p = poly_monic(generators[i]);
        if (poly_degree(p) < 1) throw std::invalid_argument("generator must be nonconstant");
        if (p[0].is_zero())
            throw std::invalid_argument("generator must have nonzero constant term");
        ideal.gens_.push_back(std::move(p));
    }
    ideal.roots_known_ = false;
    ideal.finish();
    return ideal;
}

void CofiniteIdeal::finish() {
    qdim_ = 1;
    for (size_t i = 0; i < gens_.size(); ++i) {
        size_t d = gens_[i].size() - 1;
        qdim_ *= d;
        Mat mu(d, d);
        for (size_t j = 0; j + 1 < d; ++j) mu(j + 1, j) = CycNumber(1);
        for (size_t j = 0; j < d; ++j) mu(j, d - 1) = -gens_[i][j];
        auto inv = inverse(mu);
        if (!inv) throw std::logic_error("u_i is not invertible modulo P_i");
        mul_u_.push_back(std::move(mu));
        mul_u_inv_.push_back(std::move(*inv));
    }
}

size_t CofiniteIdeal::index_of(const std::vector<size_t>& e) const {
    size_t idx = 0, stride = 1;
    for (size_t i = 0; i < e.size(); ++i) {
        idx += e[i] * stride;
        stride *= var_degree(i);
    }
    return idx;
}

std::vector<size_t> CofiniteIdeal::exponents_of(size_t index) const {
    std::vector<size_t> e(nvars());
    for (size_t i = 0; i < nvars(); ++i) {
        e[i] = index % var_degree(i);
        index /= var_degree(i);
    }
    return e;
}

CofiniteIdeal::QElem CofiniteIdeal::one() const {
    QElem v(qdim_);
    v[0] = CycNumber(1);
    return v;
}

CofiniteIdeal::QElem CofiniteIdeal::mul_u_power(size_t var, long e, const QElem& a) const {
    QElem r = a;
    const Mat& step = e >= 0 ? mul_u_[var] : mul_u_inv_[var];
    long reps = e >= 0 ? e : -e;
    for (long rep = 0; rep < reps; ++rep) {
        // apply per-variable matrix on the var-th coordinate of the tensor grid
        QElem next(qdim_);
        size_t d = var_degree(var);
        for (size_t idx = 0; idx < qdim_; ++idx) {
            if (r[idx].is_zero()) continue;
            auto exps = exponents_of(idx);
            size_t ev = exps[var];
            for (size_t j = 0; j < d; ++j) {
                if (step(j, ev).is_zero()) continue;
                auto e2 = exps;
                e2[var] = j;
                next[index_of(e2)] += step(j, ev) * r[idx];
            }
        }
        r = std::move(next);
    }
    return r;
}

CofiniteIdeal::QElem CofiniteIdeal::u_monomial(const std::vector<long>& e) const {
    if (e.size() != nvars()) throw std::invalid_argument("exponent length mismatch");
    QElem v = one();
    for (size_t i = 0; i < nvars(); ++i) v = mul_u_power(i, e[i], v);
    return v;
}

CofiniteIdeal::QElem CofiniteIdeal::reduce_gamma(const std::vector<long>& k) const {
    std::vector<long> e(nvars());
    for (size_t i = 0; i < nvars(); ++i) {
        if (k[i] % vars_[i].m != 0) throw std::invalid_argument("exponent outside Gamma");
        e[i] = k[i] / vars_[i].m;
    }
    return u_monomial(e);
}

CofiniteIdeal::QElem CofiniteIdeal::mul(const QElem& a, const QElem& b) const {
    QElem r(qdim_);
    for (size_t i = 0; i < qdim_; ++i) {
        if (a[i].is_zero()) continue;
        auto ei = exponents_of(i);
        for (size_t j = 0; j < qdim_; ++j) {
            if (b[j].is_zero()) continue;
            auto ej = exponents_of(j);
            // u^{ei+ej}: reduce coordinatewise
            QElem term(qdim_);
            term[0] = a[i] * b[j];
            std::vector<long> e(nvars());
            for (size_t v = 0; v < nvars(); ++v) e[v] = static_cast<long>(ei[v] + ej[v]);
            for (size_t v = 0; v < nvars(); ++v) term = mul_u_power(v, e[v], term);
            for (size_t t = 0; t < qdim_; ++t) r[t] += term[t];
        }
    }
    return r;
}

CofiniteIdeal::QElem CofiniteIdeal::mul_poly(size_t var, const CycPoly& p, const QElem& a) const {
    QElem r(qdim_);
    for (size_t deg = 0; deg < p.size(); ++deg) {
        if (p[deg].is_zero()) continue;
        QElem term = mul_u_power(var, static_cast<long>(deg), a);
        for (size_t t = 0; t < qdim_; ++t) r[t] += p[deg] * term[t];
    }
    return r;
}

CycNumber CofiniteIdeal::evaluate(const QElem& a, const std::vector<CycNumber>& t_values) const {
    CycNumber acc(0);
    for (size_t idx = 0; idx < qdim_; ++idx) {
        if (a[idx].is_zero()) continue;
        CycNumber term = a[idx];
        auto exps = exponents_of(idx);
        for (size_t v = 0; v < nvars(); ++v)
            term *= t_values[v].pow(vars_[v].m * static_cast<long>(exps[v]));
        acc += term;
    }
    return acc;
}

CofiniteIdeal CofiniteIdeal::radical() const {
    if (!roots_known_)
        throw std::invalid_argument("cannot radicalize an ideal with unfactored generators");
    std::vector<VarSpec> squarefree = vars_;
    for (auto& v : squarefree)
        for (auto& [a, b] : v.roots) b = 1;
    return CofiniteIdeal(std::move(squarefree));
}

CofiniteIdeal radical_ideal(const CofiniteIdeal& ideal) { return ideal.radical(); }

}  // namespace lietorus

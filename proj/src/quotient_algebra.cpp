#include "lietorus/quotient_algebra.hpp"

namespace lietorus {

bool QElement::is_zero() const {
    return loop.empty() && d0.is_zero() && lietorus::is_zero(central);
}

QElement& QElement::operator+=(const QElement& o) {
    for (const auto& [k, c] : o.loop) add_loop(k, c);
    if (central.size() < o.central.size()) central.resize(o.central.size());
    for (size_t i = 0; i < o.central.size(); ++i) central[i] += o.central[i];
    d0 += o.d0;
    return *this;
}

QElement QElement::scaled_by(const CycNumber& c) const {
    QElement r;
    if (c.is_zero()) {
        r.central.assign(central.size(), CycNumber(0));
        return r;
    }
    for (const auto& [k, v] : loop) r.loop.emplace(k, v * c);
    r.central = scaled(central, c);
    r.d0 = d0 * c;
    return r;
}

void QElement::add_loop(const QKey& k, const CycNumber& c) {
    auto it = loop.find(k);
    if (it == loop.end()) {
        if (!c.is_zero()) loop.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) loop.erase(it);
}

QuotientAlgebra::QuotientAlgebra(std::shared_ptr<const JointGrading> grading, CofiniteIdeal ideal)
    : grading_(std::move(grading)), ideal_(std::move(ideal)), zpa_(analyze_zero_part(*grading_)) {
    if (ideal_.nvars() != static_cast<size_t>(grading_->n()))
        throw std::invalid_argument("ideal variable count must equal n");
    for (size_t i = 0; i < ideal_.nvars(); ++i)
        if (ideal_.var_order(i) != grading_->family().order(static_cast<int>(i) + 1))
            throw std::invalid_argument("ideal variable orders must match the family orders m_i");
    if (zpa_.form_degenerate)
        throw std::invalid_argument("invariant form degenerate on h(o)");
}

std::vector<QKey> QuotientAlgebra::slice_keys(long k0) const {
    std::vector<QKey> keys;
    auto orders = grading_->family().orders();
    for (const auto& [res, comp] : grading_->components()) {
        if (res[0] != ((k0 % orders[0]) + orders[0]) % orders[0]) continue;
        QKey k;
        k.k0 = k0;
        k.kres.assign(res.begin() + 1, res.end());
        for (uint32_t b = 0; b < comp.dim(); ++b) {
            k.comp_index = b;
            for (uint32_t m = 0; m < ideal_.quotient_dim(); ++m) {
                k.mono = m;
                keys.push_back(k);
            }
        }
    }
    return keys;
}

size_t QuotientAlgebra::slice_dim(long k0) const {
    size_t d = 0;
    auto orders = grading_->family().orders();
    for (const auto& [res, comp] : grading_->components())
        if (res[0] == ((k0 % orders[0]) + orders[0]) % orders[0]) d += comp.dim();
    return d * ideal_.quotient_dim();
}

const Vec& QuotientAlgebra::weight_of(const QKey& k) const {
    std::vector<long> res(k.kres.size() + 1);
    auto orders = grading_->family().orders();
    res[0] = ((k.k0 % orders[0]) + orders[0]) % orders[0];
    for (size_t i = 0; i < k.kres.size(); ++i) res[i + 1] = k.kres[i];
    return grading_->component(res).weight_of(k.comp_index);
}

Rational QuotientAlgebra::root_height(const Vec& weight, long k0) const {
    // ht(alpha + k0 delta) over {alpha_0 = -beta + delta, simple alphas}:
    // alpha + k0 delta = k0 alpha_0 + (alpha + k0 beta)
    Vec shifted = weight;
    if (!zpa_.beta_max.empty()) add_scaled(shifted, zpa_.beta_max, CycNumber(k0));
    auto coords = zpa_.simple_coords(shifted);
    if (!coords) throw std::invalid_argument("weight outside the root lattice span");
    Rational h(k0);
    for (const auto& c : *coords) {
        if (!c.is_rational()) throw std::invalid_argument("irrational simple coordinates");
        h += c.rational_value();
    }
    return h;
}

int QuotientAlgebra::triangular_sign(const QKey& k) const {
    if (k.k0 != 0) return k.k0 > 0 ? 1 : -1;
    const Vec& w = weight_of(k);
    if (is_zero(w)) return 0;
    return zpa_.lex_positive(w) ? 1 : -1;
}

QElement QuotientAlgebra::smear(const QKey& base, const CofiniteIdeal::QElem& f) const {
    QElement r;
    r.central.assign(ideal_.quotient_dim(), CycNumber(0));
    QKey k = base;
    for (uint32_t m = 0; m < f.size(); ++m) {
        if (f[m].is_zero()) continue;
        k.mono = m;
        r.add_loop(k, f[m]);
    }
    return r;
}

QElement QuotientAlgebra::bracket_keys(const QKey& a, const QKey& b) const {
    auto cache_key = std::make_pair(a, b);
    auto cached = bracket_cache_.find(cache_key);
    if (cached != bracket_cache_.end()) return cached->second;

    const auto& g = grading_->algebra();
    auto orders = grading_->family().orders();
    auto res_of = [&](const QKey& k) {
        std::vector<long> r(k.kres.size() + 1);
        r[0] = ((k.k0 % orders[0]) + orders[0]) % orders[0];
        for (size_t i = 0; i < k.kres.size(); ++i) r[i + 1] = k.kres[i];
        return r;
    };
    const auto& ca = grading_->component(res_of(a));
    const auto& cb = grading_->component(res_of(b));
    const Vec& xa = ca.basis[a.comp_index];
    const Vec& xb = cb.basis[b.comp_index];

    QElement r;
    r.central.assign(ideal_.quotient_dim(), CycNumber(0));

    // loop part: [X,Y] t_0^{k0+l0} t^{ra+rb} u^{ma+mb}
    Vec w = g.bracket(xa, xb);
    long k0sum = a.k0 + b.k0;
    if (!is_zero(w)) {
        std::vector<long> rsum(a.kres.size());
        std::vector<long> overflow(a.kres.size());
        for (size_t i = 0; i < rsum.size(); ++i) {
            long m = orders[i + 1];
            long total = a.kres[i] + b.kres[i];
            rsum[i] = total % m;
            overflow[i] = total / m;  // 0 or 1
        }
        std::vector<long> sum_res(rsum.size() + 1);
        sum_res[0] = ((k0sum % orders[0]) + orders[0]) % orders[0];
        for (size_t i = 0; i < rsum.size(); ++i) sum_res[i + 1] = rsum[i];
        const auto& ct = grading_->component(sum_res);
        // coordinates with respect to the component's own basis
        auto coords = solve(Mat::from_columns(ct.basis), w);
        if (!coords) throw std::logic_error("bracket escaped the target component");
        // u^{ma} u^{mb} u^{overflow}
        auto ea = ideal_.exponents_of(a.mono);
        auto eb = ideal_.exponents_of(b.mono);
        CofiniteIdeal::QElem t = ideal_.one();
        for (size_t v = 0; v < rsum.size(); ++v)
            t = ideal_.mul_u_power(v, static_cast<long>(ea[v] + eb[v]) + overflow[v], t);
        QKey k;
        k.k0 = k0sum;
        k.kres = rsum;
        for (uint32_t bi = 0; bi < coords->size(); ++bi) {
            if ((*coords)[bi].is_zero()) continue;
            k.comp_index = bi;
            for (uint32_t m = 0; m < t.size(); ++m) {
                if (t[m].is_zero()) continue;
                k.mono = m;
                r.add_loop(k, (*coords)[bi] * t[m]);
            }
        }
    }

    // central term (X,Y) k_0 delta_{k0+l0,0} K t^{ra+rb} u^{ma+mb}
    if (k0sum == 0 && a.k0 != 0) {
        CycNumber val = g.form_value(xa, xb);
        if (!val.is_zero()) {
            val *= CycNumber(a.k0);
            std::vector<long> ksum(a.kres.size());
            for (size_t i = 0; i < ksum.size(); ++i) ksum[i] = a.kres[i] + b.kres[i];
            CofiniteIdeal::QElem t = ideal_.reduce_gamma(ksum);
            auto ea = ideal_.exponents_of(a.mono);
            auto eb = ideal_.exponents_of(b.mono);
            for (size_t v = 0; v < ksum.size(); ++v)
                t = ideal_.mul_u_power(v, static_cast<long>(ea[v] + eb[v]), t);
            for (size_t m = 0; m < t.size(); ++m) r.central[m] += val * t[m];
        }
    }

    bracket_cache_.emplace(std::move(cache_key), r);
    return r;
}

QElement QuotientAlgebra::d0_bracket(const QElement& x) const {
    QElement r;
    r.central.assign(ideal_.quotient_dim(), CycNumber(0));
    for (const auto& [k, c] : x.loop)
        if (k.k0 != 0) r.add_loop(k, c * CycNumber(k.k0));
    return r;
}

QElement QuotientAlgebra::bracket(const QElement& a, const QElement& b) const {
    QElement r;
    r.central.assign(ideal_.quotient_dim(), CycNumber(0));
    for (const auto& [ka, ca] : a.loop)
        for (const auto& [kb, cb] : b.loop) {
            QElement t = bracket_keys(ka, kb).scaled_by(ca * cb);
            r += t;
        }
    if (!a.d0.is_zero()) r += d0_bracket(b).scaled_by(a.d0);
    if (!b.d0.is_zero()) r += d0_bracket(a).scaled_by(-b.d0);
    return r;
}

RootSign classify_root(const JointGrading& grading, const Vec& alpha, long k0) {
    bool zero_alpha = is_zero(alpha);
    if (zero_alpha && k0 == 0) return RootSign::zero;
    // realizable: some component at the right t_0-residue carries the weight
    auto orders = grading.family().orders();
    long r0 = ((k0 % orders[0]) + orders[0]) % orders[0];
    bool found = false;
    for (const auto& [res, comp] : grading.components()) {
        if (res[0] != r0) continue;
        for (const auto& blk : comp.blocks)
            if (blk.weight == alpha) {
                found = true;
                break;
            }
        if (found) break;
    }
    if (!found) return RootSign::not_root;
    if (k0 != 0) return k0 > 0 ? RootSign::positive : RootSign::negative;
    auto z = analyze_zero_part(grading);
    return z.lex_positive(alpha) ? RootSign::positive : RootSign::negative;
}

}  // namespace lietorus

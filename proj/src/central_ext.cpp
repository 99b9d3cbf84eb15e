#include "lietorus/central_ext.hpp"

namespace lietorus {

namespace {

// canonical reduction of one coefficient vector against the dA relation
void reduce_against_relation(const Deg& degree, Vec& coeffs) {
    if (deg_is_zero(degree)) return;
    size_t pivot = degree.size();
    for (size_t i = degree.size(); i-- > 0;) {
        if (degree[i] != 0) {
            pivot = i;
            break;
        }
    }
    if (coeffs[pivot].is_zero()) return;
    CycNumber f = coeffs[pivot] * CycNumber(degree[pivot]).inverse();
    for (size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= f * CycNumber(degree[i]);
}

}  // namespace

void CentralClass::add(const Deg& degree, const Vec& coeffs) {
    if (coeffs.size() != nvars_ + 1)
        throw std::invalid_argument("central coefficient vector must have n+1 slots");
    Vec c = coeffs;
    reduce_against_relation(degree, c);
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
        if (!lietorus::is_zero(c)) terms_.emplace(degree, std::move(c));
        return;
    }
    it->second = it->second + c;
    if (lietorus::is_zero(it->second)) terms_.erase(it);
}

void CentralClass::add_single(const Deg& degree, size_t i, const CycNumber& c) {
    Vec v(nvars_ + 1);
    v[i] = c;
    add(degree, v);
}

CentralClass& CentralClass::operator+=(const CentralClass& o) {
    if (terms_.empty()) nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [d, v] : o.terms_) add(d, v);
    return *this;
}

CentralClass CentralClass::scaled_by(const CycNumber& c) const {
    CentralClass r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [d, v] : terms_) r.terms_.emplace(d, scaled(v, c));
    return r;
}

bool CentralClass::operator==(const CentralClass& o) const { return terms_ == o.terms_; }

ExtendedElement::ExtendedElement(std::shared_ptr<const JointGrading> grading)
    : loop(grading),
      central(static_cast<size_t>(grading->n())),
      ders(static_cast<size_t>(grading->n()) + 1) {}

bool ExtendedElement::is_zero() const {
    return loop.is_zero() && central.is_zero() && lietorus::is_zero(ders);
}

ExtendedElement& ExtendedElement::operator+=(const ExtendedElement& o) {
    loop += o.loop;
    central += o.central;
    for (size_t i = 0; i < ders.size(); ++i) ders[i] += o.ders[i];
    return *this;
}

ExtendedElement ExtendedElement::scaled_by(const CycNumber& c) const {
    ExtendedElement r(grading());
    r.loop = loop.scaled_by(c);
    r.central = central.scaled_by(c);
    r.ders = scaled(ders, c);
    return r;
}

bool ExtendedElement::operator==(const ExtendedElement& o) const {
    return loop == o.loop && central == o.central && ders == o.ders;
}

void ExtendedElement::add_central(const Deg& degree, size_t i, const CycNumber& c) {
    if (!degree_in_lattice(loop.grading()->family(), degree))
        throw std::invalid_argument("central degree outside Gamma_0 + Gamma");
    central.add_single(degree, i, c);
}

bool degree_in_lattice(const AutFamily& family, const Deg& degree) {
    auto m = family.orders();
    if (degree.size() != m.size()) throw std::invalid_argument("degree length mismatch");
    for (size_t i = 0; i < m.size(); ++i)
        if (degree[i] % m[i] != 0) return false;
    return true;
}

CentralClass cocycle(const LoopElement& x, const LoopElement& y) {
    auto grading = x.grading() ? x.grading() : y.grading();
    const auto& g = grading->algebra();
    CentralClass c(static_cast<size_t>(grading->n()));
    for (const auto& [dx, vx] : x.terms())
        for (const auto& [dy, vy] : y.terms()) {
            CycNumber val = g.form_value(vx, vy);
            if (val.is_zero()) continue;
            Deg sum = deg_add(dx, dy);
            if (!degree_in_lattice(grading->family(), sum))
                throw std::logic_error("cocycle escaped the lattice: form orthogonality violated");
            Vec coeffs(dx.size());
            for (size_t i = 0; i < dx.size(); ++i) coeffs[i] = val * CycNumber(dx[i]);
            c.add(sum, coeffs);
        }
    return c;
}

namespace {

LoopElement der_action_on_loop(const Vec& ders, const LoopElement& x) {
    LoopElement r(x.grading());
    for (const auto& [d, v] : x.terms()) {
        CycNumber f(0);
        for (size_t i = 0; i < ders.size(); ++i) f += ders[i] * CycNumber(d[i]);
        if (!f.is_zero()) r.add_term_unchecked(d, scaled(v, f));
    }
    return r;
}

CentralClass der_action_on_central(const Vec& ders, const CentralClass& c) {
    CentralClass r(c.nvars());
    for (const auto& [d, v] : c.terms()) {
        CycNumber f(0);
        for (size_t i = 0; i < ders.size(); ++i) f += ders[i] * CycNumber(d[i]);
        if (!f.is_zero()) r.add(d, scaled(v, f));
    }
    return r;
}

}  // namespace

ExtendedElement ext_bracket(const ExtendedElement& a, const ExtendedElement& b) {
    ExtendedElement r(a.grading() ? a.grading() : b.grading());
    r.loop = loop_bracket(a.loop, b.loop);
    r.loop += der_action_on_loop(a.ders, b.loop);
    r.loop -= der_action_on_loop(b.ders, a.loop);
    r.central = cocycle(a.loop, b.loop);
    r.central += der_action_on_central(a.ders, b.central);
    r.central += der_action_on_central(b.ders, a.central).scaled_by(CycNumber(-1));
    return r;
}

long center_dim(const AutFamily& family, const Deg& degree) {
    if (!degree_in_lattice(family, degree))
        throw std::invalid_argument("degree outside Gamma_0 + Gamma");
    long n = family.n();
    return deg_is_zero(degree) ? n + 1 : n;
}

LElement::LElement(std::shared_ptr<const JointGrading> grading)
    : loop(grading), ders(static_cast<size_t>(grading->n()) + 1) {}

bool LElement::is_zero() const {
    return loop.is_zero() && central.empty() && lietorus::is_zero(ders);
}

LElement& LElement::operator+=(const LElement& o) {
    loop += o.loop;
    for (const auto& [k, c] : o.central) add_central(k, c);
    for (size_t i = 0; i < ders.size(); ++i) ders[i] += o.ders[i];
    return *this;
}

LElement LElement::scaled_by(const CycNumber& c) const {
    LElement r(grading());
    r.loop = loop.scaled_by(c);
    if (!c.is_zero())
        for (const auto& [k, v] : central) r.central.emplace(k, v * c);
    r.ders = scaled(ders, c);
    return r;
}

bool LElement::operator==(const LElement& o) const {
    return loop == o.loop && central == o.central && ders == o.ders;
}

void LElement::add_central(const std::vector<long>& k, const CycNumber& c) {
    auto m = loop.grading()->family().orders();
    if (k.size() + 1 != m.size()) throw std::invalid_argument("central key must have length n");
    for (size_t i = 0; i < k.size(); ++i)
        if (k[i] % m[i + 1] != 0) throw std::invalid_argument("central key outside Gamma");
    auto it = central.find(k);
    if (it == central.end()) {
        if (!c.is_zero()) central.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) central.erase(it);
}

LElement l_bracket(const LElement& a, const LElement& b) {
    auto grading = a.grading() ? a.grading() : b.grading();
    const auto& g = grading->algebra();
    LElement r(grading);
    r.loop = loop_bracket(a.loop, b.loop);
    r.loop += der_action_on_loop(a.ders, b.loop);
    r.loop -= der_action_on_loop(b.ders, a.loop);
    // central term of 3.1(a): (X,Y) k_0 delta_{k0+l0,0} K t^{k+l}
    for (const auto& [dx, vx] : a.loop.terms())
        for (const auto& [dy, vy] : b.loop.terms()) {
            if (dx[0] + dy[0] != 0) continue;
            CycNumber val = g.form_value(vx, vy);
            if (val.is_zero()) continue;
            std::vector<long> k(dx.size() - 1);
            for (size_t i = 1; i < dx.size(); ++i) k[i - 1] = dx[i] + dy[i];
            r.add_central(k, val * CycNumber(dx[0]));
        }
    // derivations on the central part: [d_i, K t^k] = k_i K t^k (i >= 1)
    auto der_on_central = [](const Vec& ders, const std::map<std::vector<long>, CycNumber>& cen,
                             LElement& out, const CycNumber& sign) {
        for (const auto& [k, c] : cen) {
            CycNumber f(0);
            for (size_t i = 0; i < k.size(); ++i) f += ders[i + 1] * CycNumber(k[i]);
            if (!f.is_zero()) out.add_central(k, sign * f * c);
        }
    };
    der_on_central(a.ders, b.central, r, CycNumber(1));
    der_on_central(b.ders, a.central, r, CycNumber(-1));
    return r;
}

LElement phi_project(const ExtendedElement& a) {
    LElement r(a.grading());
    r.loop = a.loop;
    r.ders = a.ders;
    for (const auto& [d, v] : a.central.terms()) {
        if (d[0] != 0) continue;  // positive/negative t_0 degrees die
        if (v[0].is_zero()) continue;
        std::vector<long> k(d.begin() + 1, d.end());
        r.add_central(k, v[0]);
    }
    return r;
}

CentralClass change_coordinates_central(const std::vector<std::vector<long>>& B,
                                        const CentralClass& c) {
    size_t n = B.size();
    if (n != c.nvars()) throw std::invalid_argument("coordinate change dimension mismatch");
    CentralClass r(n);
    for (const auto& [d, v] : c.terms()) {
        Deg nd(d.size(), 0);
        nd[0] = d[0];
        Vec nv(v.size());
        nv[0] = v[0];
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                nd[i + 1] += B[i][j] * d[j + 1];
                nv[i + 1] += CycNumber(B[i][j]) * v[j + 1];
            }
        r.add(nd, nv);
    }
    return r;
}

std::vector<ExtendedElement> root_space_basis(const std::shared_ptr<const JointGrading>& grading,
                                              const RootSpaceIndex& index) {
    std::vector<ExtendedElement> basis;
    const auto& family = grading->family();
    size_t n1 = family.auts().size();
    const auto& comp = grading->component_of_degree(index.degree);

    auto loop_members = [&](const Vec& weight) {
        for (const auto& block : comp.blocks) {
            if (block.weight != weight) continue;
            for (const auto& v : block.basis) {
                ExtendedElement e(grading);
                e.loop.add_term(index.degree, v);
                basis.push_back(std::move(e));
            }
        }
    };

    if (index.is_real()) {
        loop_members(index.alpha);
        return basis;
    }
    Vec zero_weight(grading->h_o().size());
    loop_members(zero_weight);
    if (deg_is_zero(index.degree)) {
        // htilde: h(o) + all K_i + all d_i
        for (size_t i = 0; i < n1; ++i) {
            ExtendedElement e(grading);
            e.add_central(index.degree, i, CycNumber(1));
            basis.push_back(std::move(e));
        }
        for (size_t i = 0; i < n1; ++i) {
            ExtendedElement e(grading);
            e.ders[i] = CycNumber(1);
            basis.push_back(std::move(e));
        }
    } else if (degree_in_lattice(family, index.degree)) {
        // canonical central classes: the K_i with i != pivot survive the dA
        // reduction as independent classes
        size_t pivot = index.degree.size();
        for (size_t i = index.degree.size(); i-- > 0;)
            if (index.degree[i] != 0) {
                pivot = i;
                break;
            }
        for (size_t i = 0; i < n1; ++i) {
            if (i == pivot) continue;
            ExtendedElement e(grading);
            e.add_central(index.degree, i, CycNumber(1));
            basis.push_back(std::move(e));
        }
    }
    return basis;
}

}  // namespace lietorus

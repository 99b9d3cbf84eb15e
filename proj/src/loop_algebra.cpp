#include "lietorus/loop_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lietorus {

Deg deg_add(const Deg& a, const Deg& b) {
    Deg r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Deg deg_neg(const Deg& a) {
    Deg r = a;
    for (auto& v : r) v = -v;
    return r;
}

bool deg_is_zero(const Deg& a) {
    return std::all_of(a.begin(), a.end(), [](long v) { return v == 0; });
}

std::string deg_to_string(const Deg& a) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")";
    return os.str();
}

bool LoopElement::is_zero() const { return terms_.empty(); }

void LoopElement::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (lietorus::is_zero(it->second))
            it = terms_.erase(it);
        else
            ++it;
    }
}

void LoopElement::add_term(const Deg& degree, const Vec& v) {
    if (!grading_) throw std::logic_error("loop element without grading");
    const auto& comp = grading_->component_of_degree(degree);
    if (!comp.solver.contains(v))
        throw std::invalid_argument("vector does not lie in the component of degree " +
                                    deg_to_string(degree));
    add_term_unchecked(degree, v);
}

void LoopElement::add_term_unchecked(const Deg& degree, const Vec& v) {
    auto it = terms_.find(degree);
    if (it == terms_.end()) {
        if (!lietorus::is_zero(v)) terms_.emplace(degree, v);
        return;
    }
    it->second = it->second + v;
    if (lietorus::is_zero(it->second)) terms_.erase(it);
}

LoopElement& LoopElement::operator+=(const LoopElement& o) {
    if (!grading_) grading_ = o.grading_;
    if (o.grading_ && grading_ != o.grading_)
        throw std::invalid_argument("loop elements over different families");
    for (const auto& [d, v] : o.terms_) add_term_unchecked(d, v);
    return *this;
}

LoopElement& LoopElement::operator-=(const LoopElement& o) {
    return *this += o.scaled_by(CycNumber(-1));
}

LoopElement LoopElement::scaled_by(const CycNumber& c) const {
    LoopElement r(grading_);
    if (c.is_zero()) return r;
    for (const auto& [d, v] : terms_) r.terms_.emplace(d, scaled(v, c));
    return r;
}

bool LoopElement::operator==(const LoopElement& o) const { return terms_ == o.terms_; }

LoopElement loop_bracket(const LoopElement& a, const LoopElement& b) {
    if (a.grading() && b.grading() && a.grading() != b.grading())
        throw std::invalid_argument("loop bracket over mismatched families");
    auto grading = a.grading() ? a.grading() : b.grading();
    LoopElement r(grading);
    const auto& g = grading->algebra();
    for (const auto& [da, va] : a.terms())
        for (const auto& [db, vb] : b.terms()) {
            Vec w = g.bracket(va, vb);
            if (!is_zero(w)) r.add_term_unchecked(deg_add(da, db), w);
        }
    return r;
}

LoopElement change_coordinates(const std::vector<std::vector<long>>& B, const LoopElement& x) {
    size_t n = B.size();
    Mat bm(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) bm(i, j) = CycNumber(B[i][j]);
    CycNumber d = det(bm);
    if (!(d == CycNumber(1) || d == CycNumber(-1)))
        throw std::invalid_argument("coordinate change must be unimodular");

    LoopElement r(x.grading());
    for (const auto& [deg, v] : x.terms()) {
        if (deg.size() != n + 1) throw std::invalid_argument("degree length mismatch");
        Deg nd(deg.size(), 0);
        nd[0] = deg[0];
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) nd[i + 1] += B[i][j] * deg[j + 1];
        // stay honest about the twisting: the image must still be graded
        r.add_term(nd, v);
    }
    return r;
}

CycNumber ZeroPartAnalysis::weight_form(const Vec& a, const Vec& b) const {
    if (form_degenerate) throw std::logic_error("form degenerate on h(o)");
    Vec gb = gram_inv.apply(b);
    CycNumber acc(0);
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * gb[i];
    return acc;
}

bool ZeroPartAnalysis::lex_positive(const Vec& w) const {
    for (const auto& c : w) {
        int s = rational_sign(c);
        if (s != 0) return s > 0;
    }
    return false;
}

bool ZeroPartAnalysis::in_enhanced(const Vec& w) const {
    return std::find(enhanced.begin(), enhanced.end(), w) != enhanced.end();
}

std::optional<Vec> ZeroPartAnalysis::simple_coords(const Vec& w) const {
    if (simple_roots.empty()) return std::nullopt;
    return solve(Mat::from_columns(simple_roots), w);
}

ZeroPartAnalysis analyze_zero_part(const JointGrading& grading) {
    ZeroPartAnalysis z;
    z.h_o = grading.h_o();
    const auto& g = grading.algebra();
    size_t r = z.h_o.size();

    z.gram = Mat(r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) z.gram(i, j) = g.form_value(z.h_o[i], z.h_o[j]);
    auto inv = inverse(z.gram);
    if (!inv) {
        z.form_degenerate = true;
        return z;
    }
    z.gram_inv = *inv;

    const std::vector<long> zero_key(grading.family().auts().size(), 0);
    std::set<Vec, VecLess> delta0, delta_full;
    for (const auto& [key, comp] : grading.components()) {
        for (const auto& block : comp.blocks) {
            if (is_zero(block.weight)) continue;
            delta_full.insert(block.weight);
            if (key == zero_key) delta0.insert(block.weight);
        }
    }
    z.delta0.assign(delta0.begin(), delta0.end());
    z.delta_full.assign(delta_full.begin(), delta_full.end());

    // simple system of Delta_0 for the lex-positive order
    std::vector<Vec> positives;
    for (const auto& w : z.delta0)
        if (z.lex_positive(w)) positives.push_back(w);
    for (const auto& w : positives) {
        bool decomposable = false;
        for (const auto& u : positives) {
            if (decomposable) break;
            for (const auto& v : positives)
                if (u + v == w) {
                    decomposable = true;
                    break;
                }
        }
        if (!decomposable) z.simple_roots.push_back(w);
    }

    // lengths and the B_l recognition (rank 1 counts as B_1)
    std::set<CycNumber> lengths;
    for (const auto& w : z.delta0) lengths.insert(z.weight_form(w, w));
    z.two_lengths = lengths.size() > 1;
    CycNumber short_len = lengths.empty() ? CycNumber(0) : *lengths.begin();
    size_t n_short = 0;
    for (const auto& w : z.delta0)
        if (z.weight_form(w, w) == short_len) ++n_short;
    size_t rnk = z.simple_roots.size();
    z.type_B = rnk == 1 || (z.two_lengths && n_short == 2 * rnk);

    // highest root: maximal height in simple-root coordinates
    auto height_of = [&](const Vec& w) -> Rational {
        auto c = z.simple_coords(w);
        if (!c) return Rational(-1);
        Rational h(0);
        for (const auto& x : *c) {
            if (!x.is_rational()) return Rational(-1);
            h += x.rational_value();
        }
        return h;
    };
    Rational best(-1), best_short(-1);
    for (const auto& w : positives) {
        Rational h = height_of(w);
        if (h > best) {
            best = h;
            z.highest_root = w;
        }
        bool is_short = !z.two_lengths || z.weight_form(w, w) == short_len;
        if (is_short && h > best_short) {
            best_short = h;
            z.highest_short = w;
        }
    }

    z.enhanced = z.delta0;
    if (z.type_B) {
        for (const auto& w : z.delta0) {
            if (z.two_lengths && !(z.weight_form(w, w) == short_len)) continue;
            z.enhanced.push_back(w + w);
        }
    }

    // maximal weight of Delta(g, h(o)) in the lex order
    for (const auto& w : z.delta_full) {
        if (z.beta_max.empty() || VecLess{}(z.beta_max, w)) z.beta_max = w;
    }
    return z;
}

TorusReport check_lie_torus(const JointGrading& grading) {
    TorusReport report;
    const auto& g = grading.algebra();
    const std::vector<long> zero_key(grading.family().auts().size(), 0);
    const auto& zero = grading.component(zero_key);
    for (const auto& [key, comp] : grading.components()) report.component_dims[key] = comp.dim();

    // (a) g(0,0) simple: nonabelian, and every basis vector generates the
    // whole component as an ideal
    report.simple_zero_part = true;
    if (zero.dim() == 0) {
        report.simple_zero_part = false;
        report.zero_part_witness = "zero part not simple: zero component is trivial";
    } else {
        bool abelian = true;
        for (size_t i = 0; i < zero.dim() && abelian; ++i)
            for (size_t j = i + 1; j < zero.dim() && abelian; ++j)
                if (!is_zero(g.bracket(zero.basis[i], zero.basis[j]))) abelian = false;
        if (abelian) {
            report.simple_zero_part = false;
            report.zero_part_witness = "zero part not simple: zero component is abelian";
        } else {
            std::vector<std::function<Vec(const Vec&)>> ops;
            for (const auto& b : zero.basis)
                ops.push_back([&g, b](const Vec& v) { return g.bracket(b, v); });
            for (size_t i = 0; i < zero.dim(); ++i) {
                auto closure = grow_invariant_subspace({zero.basis[i]}, ops);
                if (closure.size() != zero.dim()) {
                    report.simple_zero_part = false;
                    report.zero_part_witness =
                        "zero part not simple: proper ideal generated by basis vector " +
                        std::to_string(i);
                    break;
                }
            }
        }
    }

    auto z = analyze_zero_part(grading);
    if (z.form_degenerate) {
        report.enhanced_root_check = false;
        report.is_lie_torus = false;
        if (report.zero_part_witness.empty())
            report.zero_part_witness = "invariant form degenerate on h(o)";
        return report;
    }

    // (b) per component: nonzero weight spaces one-dimensional, weights inside
    // the enhanced root set, top weight among the allowed highest weights
    std::vector<Vec> allowed_tops;
    if (!z.delta0.empty()) {
        allowed_tops.push_back(z.highest_root);
        if (z.two_lengths) allowed_tops.push_back(z.highest_short);
        if (z.type_B) allowed_tops.push_back(z.highest_short + z.highest_short);
    }
    for (const auto& [key, comp] : grading.components()) {
        Vec top;
        for (const auto& block : comp.blocks) {
            if (is_zero(block.weight)) continue;
            if (block.basis.size() > 1)
                report.property_m_failures.push_back(
                    {key, block.weight, "nonzero weight space has dimension > 1"});
            if (!z.in_enhanced(block.weight)) {
                report.property_m_failures.push_back(
                    {key, block.weight, "weight outside the enhanced root set"});
                report.enhanced_root_check = false;
            }
            if (top.empty() || VecLess{}(top, block.weight)) top = block.weight;
        }
        if (!top.empty() &&
            std::find(allowed_tops.begin(), allowed_tops.end(), top) == allowed_tops.end())
            report.property_m_failures.push_back(
                {key, top, "top weight is not an allowed highest weight"});
    }

    report.is_lie_torus = report.simple_zero_part && report.property_m_failures.empty();
    return report;
}

Sl2Copy sl2_copy(const JointGrading& grading, const std::vector<long>& residue, const Vec& alpha) {
    Sl2Copy out;
    const auto& g = grading.algebra();
    auto z = analyze_zero_part(grading);
    const auto& comp = grading.component(residue);
    std::vector<long> neg_res(residue.size());
    auto orders = grading.family().orders();
    for (size_t i = 0; i < residue.size(); ++i) neg_res[i] = (orders[i] - residue[i]) % orders[i];
    const auto& opp = grading.component(neg_res);

    const Vec* x = nullptr;
    for (const auto& block : comp.blocks)
        if (block.weight == alpha && !block.basis.empty()) x = &block.basis[0];
    if (!x) {
        out.failure = "empty weight space";
        return out;
    }
    Vec neg_alpha = scaled(alpha, CycNumber(-1));
    const Vec* y0 = nullptr;
    for (const auto& block : opp.blocks)
        if (block.weight == neg_alpha && !block.basis.empty()) y0 = &block.basis[0];
    if (!y0) {
        out.failure = "empty opposite weight space";
        return out;
    }
    Vec h = g.bracket(*x, *y0);
    // alpha(h): express h in the h(o) basis
    auto coords = solve(Mat::from_columns(z.h_o), h);
    if (!coords) {
        out.failure = "[x, y] is not in h(o)";
        return out;
    }
    CycNumber alpha_h(0);
    for (size_t i = 0; i < alpha.size(); ++i) alpha_h += alpha[i] * (*coords)[i];
    if (alpha_h.is_zero()) {
        out.failure = "alpha(h') = 0, cannot normalize";
        return out;
    }
    Vec y = scaled(*y0, CycNumber(2) * alpha_h.inverse());
    Vec hp = g.bracket(*x, y);
    if (g.bracket(hp, *x) != scaled(*x, CycNumber(2)) ||
        g.bracket(hp, y) != scaled(y, CycNumber(-2))) {
        out.failure = "sl2 relations fail after rescaling";
        return out;
    }
    out.ok = true;
    out.e = *x;
    out.f = y;
    out.h = hp;
    return out;
}

}  // namespace lietorus

#include "lietorus/highest_weight.hpp"

#include <sstream>

namespace lietorus {

namespace {

std::string key_to_string(const QKey& k) {
    std::ostringstream os;
    os << "(k0=" << k.k0 << ", kres=";
    for (size_t i = 0; i < k.kres.size(); ++i) os << (i ? "," : "") << k.kres[i];
    os << ", b=" << k.comp_index << ", mono=" << k.mono << ")";
    return os.str();
}

}  // namespace

ZeroPartModule ZeroPartModule::character(const QuotientAlgebra& q, Vec lambda_h, CycNumber level,
                                         CycNumber d0_value, std::vector<CycNumber> eval_point) {
    ZeroPartModule n;
    n.dim_ = 1;
    n.lambda_h_ = std::move(lambda_h);
    n.d0_value_ = std::move(d0_value);
    const auto& ideal = q.ideal();
    if (eval_point.size() != ideal.nvars())
        throw std::invalid_argument("evaluation point needs one value per variable");
    for (const auto& p : eval_point)
        if (p.is_zero()) throw std::invalid_argument("evaluation point must be nonzero");

    n.central_scalars_.resize(ideal.quotient_dim());
    for (size_t m = 0; m < ideal.quotient_dim(); ++m) {
        CofiniteIdeal::QElem e(ideal.quotient_dim());
        e[m] = CycNumber(1);
        n.central_scalars_[m] = level * ideal.evaluate(e, eval_point);
    }

    Mat h_o_cols = Mat::from_columns(q.zero_part().h_o);
    for (const QKey& k : q.slice_keys(0)) {
        if (q.triangular_sign(k) != 0) continue;
        // component vector at this key
        std::vector<long> res(k.kres.size() + 1, 0);
        for (size_t i = 0; i < k.kres.size(); ++i) res[i + 1] = k.kres[i];
        const Vec& v = q.grading().component(res).basis[k.comp_index];
        CycNumber lam(0);
        if (auto coords = solve(h_o_cols, v)) {
            for (size_t i = 0; i < coords->size(); ++i) lam += (*coords)[i] * n.lambda_h_[i];
        }
        // evaluation of t^{kres} u^{mono}
        CycNumber ev(1);
        auto exps = ideal.exponents_of(k.mono);
        for (size_t i = 0; i < k.kres.size(); ++i) {
            ev *= eval_point[i].pow(k.kres[i]);
            ev *= eval_point[i].pow(ideal.var_order(i) * static_cast<long>(exps[i]));
        }
        Mat a(1, 1);
        a(0, 0) = lam * ev;
        n.loop_actions_.emplace(k, std::move(a));
    }
    return n;
}

ZeroPartModule ZeroPartModule::from_matrices(const QuotientAlgebra& q, size_t dim,
                                             std::map<QKey, Mat> loop_actions,
                                             Vec central_scalars, Vec lambda_h,
                                             CycNumber d0_value) {
    ZeroPartModule n;
    n.dim_ = dim;
    n.loop_actions_ = std::move(loop_actions);
    n.central_scalars_ = std::move(central_scalars);
    n.lambda_h_ = std::move(lambda_h);
    n.d0_value_ = std::move(d0_value);
    if (n.central_scalars_.size() != q.ideal().quotient_dim())
        throw std::invalid_argument("central scalar vector has wrong length");
    for (const QKey& k : q.slice_keys(0)) {
        if (q.triangular_sign(k) != 0) continue;
        auto it = n.loop_actions_.find(k);
        if (it == n.loop_actions_.end())
            throw std::invalid_argument("missing action for zero-part key " + key_to_string(k));
        if (it->second.rows() != dim || it->second.cols() != dim)
            throw std::invalid_argument("action matrix has wrong shape");
    }
    return n;
}

const Mat& ZeroPartModule::action_of_key(const QKey& k) const {
    auto it = loop_actions_.find(k);
    if (it == loop_actions_.end())
        throw std::logic_error("no action stored for key " + key_to_string(k));
    return it->second;
}

void ZeroPartModule::validate(const QuotientAlgebra& q) const {
    std::vector<QKey> zero_keys;
    for (const QKey& k : q.slice_keys(0))
        if (q.triangular_sign(k) == 0) zero_keys.push_back(k);

    auto action_of_element = [&](const QElement& x) {
        Mat a(dim_, dim_);
        for (const auto& [k, c] : x.loop) {
            if (q.triangular_sign(k) != 0)
                throw std::logic_error("bracket of zero-part keys left the zero part");
            a = a + action_of_key(k).scaled_by(c);
        }
        CycNumber scal = x.d0 * d0_value_;
        for (size_t m = 0; m < x.central.size(); ++m) scal += x.central[m] * central_scalars_[m];
        for (size_t i = 0; i < dim_; ++i) a(i, i) += scal;
        return a;
    };

    // bracket relations
    for (size_t i = 0; i < zero_keys.size(); ++i)
        for (size_t j = i + 1; j < zero_keys.size(); ++j) {
            const Mat& ai = action_of_key(zero_keys[i]);
            const Mat& aj = action_of_key(zero_keys[j]);
            Mat comm = ai * aj - aj * ai;
            Mat want = action_of_element(q.bracket_keys(zero_keys[i], zero_keys[j]));
            if (!(comm == want))
                throw std::invalid_argument("action violates the bracket relation on keys " +
                                            key_to_string(zero_keys[i]) + ", " +
                                            key_to_string(zero_keys[j]));
        }

    // h~(o) acts by the stated scalars
    Mat h_o_cols = Mat::from_columns(q.zero_part().h_o);
    for (const QKey& k : zero_keys) {
        if (k.mono != 0) continue;
        if (!std::all_of(k.kres.begin(), k.kres.end(), [](long v) { return v == 0; })) continue;
        std::vector<long> res(k.kres.size() + 1, 0);
        const Vec& v = q.grading().component(res).basis[k.comp_index];
        auto coords = solve(h_o_cols, v);
        if (!coords) continue;
        CycNumber lam(0);
        for (size_t i = 0; i < coords->size(); ++i) lam += (*coords)[i] * lambda_h_[i];
        Mat want(dim_, dim_);
        for (size_t i = 0; i < dim_; ++i) want(i, i) = lam;
        if (!(action_of_key(k) == want))
            throw std::invalid_argument("h(o) does not act by lambda on " + key_to_string(k));
    }

    // absolute irreducibility: the generated unital algebra is all of End(N)
    std::vector<Vec> span_vectors;
    auto flatten = [&](const Mat& m) {
        Vec v(dim_ * dim_);
        for (size_t i = 0; i < dim_; ++i)
            for (size_t j = 0; j < dim_; ++j) v[i * dim_ + j] = m(i, j);
        return v;
    };
    std::vector<Mat> gens{Mat::identity(dim_)};
    for (const auto& [k, m] : loop_actions_) gens.push_back(m);
    std::vector<Mat> closure = gens;
    SpanSolver span(std::vector<Vec>{});
    {
        std::vector<Vec> flat;
        for (const auto& m : closure) flat.push_back(flatten(m));
        span = SpanSolver(flat);
    }
    bool grew = true;
    while (grew && span.dim() < dim_ * dim_) {
        grew = false;
        std::vector<Mat> next;
        for (const auto& a : closure)
            for (const auto& g : gens) {
                Mat p = a * g;
                Vec f = flatten(p);
                if (!span.contains(f)) {
                    std::vector<Vec> all;
                    for (const auto& b : span.basis()) all.push_back(b);
                    all.push_back(f);
                    span = SpanSolver(all);
                    next.push_back(p);
                    grew = true;
                }
            }
        closure.insert(closure.end(), next.begin(), next.end());
    }
    if (span.dim() != dim_ * dim_)
        throw std::invalid_argument("zero-part module is not absolutely irreducible");
}

HighestWeightModule::HighestWeightModule(std::shared_ptr<const QuotientAlgebra> q,
                                         ZeroPartModule n, long depth, Rational weight_height)
    : q_(std::move(q)), n_(std::move(n)), depth_(depth), weight_height_(std::move(weight_height)) {
    if (depth_ < 0) throw std::invalid_argument("depth must be nonnegative");
    n_.validate(*q_);
    // generator lists, descending key order
    for (long k0 = -depth_; k0 <= depth_; ++k0) {
        for (const QKey& k : q_->slice_keys(k0)) {
            int s = q_->triangular_sign(k);
            if (s == 0) continue;
            const Vec& w = q_->weight_of(k);
            Rational h = s < 0 ? q_->root_height(scaled(w, CycNumber(-1)), -k.k0)
                               : q_->root_height(w, k.k0);
            if (h <= 0) throw std::logic_error("generator with nonpositive height");
            if (h > weight_height_) continue;
            if (s < 0 && k.k0 <= 0) gens_minus_.push_back(k);
            if (s > 0 && k.k0 >= 0) gens_plus_.push_back(k);
        }
    }
    std::sort(gens_minus_.begin(), gens_minus_.end(), std::greater<QKey>());
    std::sort(gens_plus_.begin(), gens_plus_.end(), std::greater<QKey>());
    build_slices();
}

namespace {

// Enumerates weakly decreasing monomials over `gens` (strictly descending
// list) with total height <= height_budget and |total grade| <= grade_budget.
void enumerate_monomials(const std::vector<QKey>& gens, const std::vector<Rational>& heights,
                         size_t idx, Rational height_budget, long grade_budget, Monomial& current,
                         const std::function<void(const Monomial&)>& emit) {
    emit(current);
    for (size_t i = idx; i < gens.size(); ++i) {
        if (heights[i] > height_budget) continue;
        long g = std::abs(gens[i].k0);
        if (g > grade_budget) continue;
        current.push_back(gens[i]);
        enumerate_monomials(gens, heights, i, height_budget - heights[i], grade_budget - g,
                            current, emit);
        current.pop_back();
    }
}

}  // namespace

void HighestWeightModule::build_slices() {
    std::vector<Rational> heights;
    for (const QKey& k : gens_minus_)
        heights.push_back(q_->root_height(scaled(q_->weight_of(k), CycNumber(-1)), -k.k0));

    Monomial current;
    enumerate_monomials(
        gens_minus_, heights, 0, weight_height_, depth_, current, [&](const Monomial& mono) {
            auto key = slice_key_of(mono);
            auto [it, fresh] = slices_.try_emplace(key);
            Slice& s = it->second;
            if (fresh) {
                s.grade = key.first;
                s.weight = key.second;
            }
            s.monomial_index.emplace(mono, s.monomials.size());
            s.monomials.push_back(mono);
        });
    for (auto& [key, slice] : slices_) {
        slice.m_dim = slice.monomials.size() * n_.dim();
        compute_radical(slice);
    }
}

std::pair<long, Vec> HighestWeightModule::slice_key_of(const Monomial& mono) const {
    long grade = 0;
    Vec weight = n_.lambda_h();
    for (const QKey& k : mono) {
        grade -= k.k0;
        weight = weight + q_->weight_of(k);
    }
    return {grade, weight};
}

MVec HighestWeightModule::act_on_term(const QKey& g, const Monomial& mono, size_t ni) const {
    auto cache_key = std::make_tuple(g, mono, ni);
    auto cached = act_cache_.find(cache_key);
    if (cached != act_cache_.end()) return cached->second;

    MVec out;
    int sgn = q_->triangular_sign(g);
    if (mono.empty()) {
        if (sgn < 0) {
            out[{Monomial{g}, ni}] = CycNumber(1);
        } else if (sgn == 0) {
            const Mat& a = n_.action_of_key(g);
            for (size_t j = 0; j < n_.dim(); ++j)
                if (!a(j, ni).is_zero()) out[{Monomial{}, j}] = a(j, ni);
        }
        // positive generators kill the top space
    } else {
        const QKey& f = mono.front();
        if (sgn < 0 && !(g < f)) {
            Monomial m2;
            m2.reserve(mono.size() + 1);
            m2.push_back(g);
            m2.insert(m2.end(), mono.begin(), mono.end());
            out[{std::move(m2), ni}] = CycNumber(1);
        } else {
            Monomial rest(mono.begin() + 1, mono.end());
            MVec inner = act_on_term(g, rest, ni);
            out = apply_key(f, inner);
            QElement br = q_->bracket_keys(g, f);
            MVec t2 = apply_element_to_term(br, rest, ni);
            for (auto& [k, c] : t2) {
                auto it = out.find(k);
                if (it == out.end())
                    out.emplace(k, c);
                else {
                    it->second += c;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
    }
    act_cache_.emplace(std::move(cache_key), out);
    return out;
}

MVec HighestWeightModule::apply_key(const QKey& g, const MVec& v) const {
    MVec out;
    for (const auto& [term, c] : v) {
        MVec t = act_on_term(g, term.first, term.second);
        for (const auto& [k, tc] : t) {
            CycNumber add = tc * c;
            auto it = out.find(k);
            if (it == out.end()) {
                if (!add.is_zero()) out.emplace(k, add);
            } else {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

MVec HighestWeightModule::apply_element_to_term(const QElement& x, const Monomial& mono,
                                                size_t ni) const {
    MVec out;
    for (const auto& [k, c] : x.loop) {
        MVec t = act_on_term(k, mono, ni);
        for (const auto& [key, tc] : t) {
            CycNumber add = tc * c;
            auto it = out.find(key);
            if (it == out.end()) {
                if (!add.is_zero()) out.emplace(key, add);
            } else {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    CycNumber scal(0);
    for (size_t m = 0; m < x.central.size(); ++m) scal += x.central[m] * n_.central_scalars()[m];
    if (!x.d0.is_zero()) {
        CycNumber eig = n_.d0_value();
        for (const QKey& k : mono) eig += CycNumber(k.k0);
        scal += x.d0 * eig;
    }
    if (!scal.is_zero()) {
        auto it = out.find({mono, ni});
        if (it == out.end())
            out.emplace(std::make_pair(mono, ni), scal);
        else {
            it->second += scal;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

MVec HighestWeightModule::apply(const QElement& x, const MVec& v) const {
    MVec out;
    for (const auto& [term, c] : v) {
        MVec t = apply_element_to_term(x, term.first, term.second);
        for (const auto& [k, tc] : t) {
            CycNumber add = tc * c;
            auto it = out.find(k);
            if (it == out.end()) {
                if (!add.is_zero()) out.emplace(k, add);
            } else {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

void HighestWeightModule::compute_radical(Slice& s) {
    if (s.grade == 0 && s.weight == n_.lambda_h()) {
        // top slice: M and V(N) agree
        s.radical_span = SpanSolver(std::vector<Vec>{});
        s.v_dim = s.m_dim;
        return;
    }
    std::vector<Rational> heights;
    for (const QKey& k : gens_plus_) heights.push_back(q_->root_height(q_->weight_of(k), k.k0));
    Rational target_h = q_->root_height(n_.lambda_h() - s.weight, s.grade);

    std::vector<Monomial> raising;
    Monomial current;
    Vec drop = n_.lambda_h() - s.weight;
    enumerate_monomials(gens_plus_, heights, 0, target_h, s.grade, current,
                        [&](const Monomial& mono) {
                            if (mono.empty()) return;
                            long g = 0;
                            Vec w(drop.size());
                            for (const QKey& k : mono) {
                                g += k.k0;
                                w = w + q_->weight_of(k);
                            }
                            if (g == s.grade && w == drop) raising.push_back(mono);
                        });

    size_t cols = s.m_dim;
    std::vector<Vec> rows;
    for (const Monomial& word : raising) {
        // images of every slice basis vector under the raising word
        std::vector<Vec> images(cols, Vec(n_.dim()));
        for (size_t mi = 0; mi < s.monomials.size(); ++mi) {
            for (size_t ni = 0; ni < n_.dim(); ++ni) {
                MVec v{{{s.monomials[mi], ni}, CycNumber(1)}};
                for (size_t p = word.size(); p-- > 0;) v = apply_key(word[p], v);
                Vec at_top(n_.dim());
                for (const auto& [term, c] : v) {
                    if (!term.first.empty())
                        throw std::logic_error("raising word did not land on the top space");
                    at_top[term.second] += c;
                }
                images[mi * n_.dim() + ni] = std::move(at_top);
            }
        }
        for (size_t j = 0; j < n_.dim(); ++j) {
            Vec row(cols);
            for (size_t cidx = 0; cidx < cols; ++cidx) row[cidx] = images[cidx][j];
            rows.push_back(std::move(row));
        }
    }
    if (rows.empty()) {
        // no raising path back to the top: everything here is radical
        std::vector<Vec> rad;
        for (size_t i = 0; i < cols; ++i) {
            Vec v(cols);
            v[i] = CycNumber(1);
            rad.push_back(std::move(v));
        }
        s.radical = std::move(rad);
        s.radical_span = SpanSolver(s.radical);
        s.v_dim = 0;
        return;
    }
    s.radical = kernel_basis(Mat::from_rows(rows));
    s.radical_span = SpanSolver(s.radical);
    s.v_dim = s.m_dim - s.radical.size();
}

Vec HighestWeightModule::slice_coordinates(const Slice& s, const MVec& v) const {
    Vec coords(s.m_dim);
    for (const auto& [term, c] : v) {
        auto it = s.monomial_index.find(term.first);
        if (it == s.monomial_index.end())
            throw std::logic_error("vector has a term outside the slice");
        coords[it->second * n_.dim() + term.second] = c;
    }
    return coords;
}

bool HighestWeightModule::in_window(long grade, const Vec& weight) const {
    if (grade < 0 || grade > depth_) return false;
    Rational h;
    try {
        h = q_->root_height(n_.lambda_h() - weight, grade);
    } catch (const std::invalid_argument&) {
        return false;
    }
    return h >= 0 && h <= weight_height_;
}

bool HighestWeightModule::is_zero_in_vn(const MVec& v) const {
    if (v.empty()) return true;
    auto key = slice_key_of(v.begin()->first.first);
    // all terms must share the slice for the question to make sense
    auto it = slices_.find(key);
    if (it == slices_.end()) throw std::logic_error("vector outside the computed window");
    return it->second.radical_span.contains(slice_coordinates(it->second, v));
}

std::shared_ptr<HighestWeightModule> build_vn(std::shared_ptr<const QuotientAlgebra> q,
                                              ZeroPartModule n, long depth,
                                              Rational weight_height) {
    return std::make_shared<HighestWeightModule>(std::move(q), std::move(n), depth,
                                                 std::move(weight_height));
}

namespace {

// Spanning elements of L(ideal) visible in the module's quotient algebra:
// loop keys smeared by u^e P_i, and K (x) u^e P_i.
std::vector<std::pair<std::string, QElement>> ideal_spanning_elements(
    const HighestWeightModule& module, const CofiniteIdeal& ideal, bool zero_part_only) {
    const auto& q = module.algebra();
    const auto& build_ideal = q.ideal();
    std::vector<std::pair<std::string, QElement>> out;
    for (size_t var = 0; var < ideal.nvars(); ++var) {
        const CycPoly& gen = ideal.generator(var);
        for (size_t e = 0; e < build_ideal.quotient_dim(); ++e) {
            CofiniteIdeal::QElem mono(build_ideal.quotient_dim());
            mono[e] = CycNumber(1);
            CofiniteIdeal::QElem f = build_ideal.mul_poly(var, gen, mono);
            if (is_zero(f)) continue;
            // K (x) u^e P_var
            QElement kel;
            kel.central = f;
            std::ostringstream kd;
            kd << "K*u^" << e << "*P_" << var + 1;
            out.emplace_back(kd.str(), kel);
            // loop keys
            for (long k0 = -module.depth(); k0 <= module.depth(); ++k0) {
                if (zero_part_only && k0 != 0) continue;
                for (const QKey& k : q.slice_keys(k0)) {
                    if (k.mono != 0) continue;  // the smear covers the monomial directions
                    if (zero_part_only && q.triangular_sign(k) != 0) continue;
                    QElement el = q.smear(k, f);
                    if (el.is_zero()) continue;
                    std::ostringstream d;
                    d << "x" << key_to_string(k) << "*u^" << e << "*P_" << var + 1;
                    out.emplace_back(d.str(), el);
                }
            }
        }
    }
    return out;
}

}  // namespace

namespace {

// Target-slice classification: 0 = forced zero in M (above the top weight or
// outside the weight cone), 1 = computed, 2 = beyond the window.
int target_status(const HighestWeightModule& module, long grade, const Vec& weight) {
    if (grade < 0) return 0;
    Rational h;
    try {
        h = module.algebra().root_height(module.top().lambda_h() - weight, grade);
    } catch (const std::invalid_argument&) {
        return 0;  // outside the root-lattice span, unreachable from the top
    }
    if (h < 0) return 0;
    if (grade <= module.depth() && h <= module.weight_height()) return 1;
    return 2;
}

}  // namespace

AnnihilationReport check_ideal_annihilation(const HighestWeightModule& module,
                                            const CofiniteIdeal& ideal) {
    AnnihilationReport report;
    auto spanning = ideal_spanning_elements(module, ideal, /*zero_part_only=*/false);
    for (const auto& [key, slice] : module.slices()) {
        for (size_t mi = 0; mi < slice.monomials.size(); ++mi)
            for (size_t ni = 0; ni < module.top().dim(); ++ni) {
                MVec v{{{slice.monomials[mi], ni}, CycNumber(1)}};
                for (const auto& [desc, el] : spanning) {
                    int status = 1;
                    for (const auto& [k, c] : el.loop) {
                        Vec tw = slice.weight + module.algebra().weight_of(k);
                        long tg = slice.grade - k.k0;
                        status = std::max(status, target_status(module, tg, tw));
                    }
                    if (!el.central.empty() && !is_zero(el.central))
                        status = std::max(status, 1);  // scalar action stays in the slice
                    if (status == 2) {
                        ++report.skipped_window;
                        continue;
                    }
                    MVec image = module.apply(el, v);
                    ++report.checked;
                    bool ok = image.empty();
                    if (!ok) {
                        std::map<std::pair<long, Vec>, MVec, HighestWeightModule::SliceKeyLess>
                            parts;
                        for (const auto& [t, c] : image)
                            parts[module.slice_key_of(t.first)].emplace(t, c);
                        ok = true;
                        for (auto& [pk, pv] : parts) {
                            if (module.slices().count(pk) == 0) {
                                ok = false;  // nonzero mass on a forced-zero slice
                                continue;
                            }
                            if (!module.is_zero_in_vn(pv)) ok = false;
                        }
                    }
                    if (!ok) {
                        report.ok = false;
                        report.failures.push_back(
                            desc + " does not annihilate a vector in slice (grade " +
                            std::to_string(slice.grade) + ")");
                    }
                }
            }
    }
    return report;
}

Thm310Report check_thm_3_10(const HighestWeightModule& module, const CofiniteIdeal& ideal) {
    Thm310Report report;
    const auto& n = module.top();

    // hypothesis: L^0(I) N = 0
    for (const auto& [desc, el] : ideal_spanning_elements(module, ideal, /*zero_part_only=*/true)) {
        Mat a(n.dim(), n.dim());
        for (const auto& [k, c] : el.loop) a = a + n.action_of_key(k).scaled_by(c);
        CycNumber scal(0);
        for (size_t m = 0; m < el.central.size(); ++m) scal += el.central[m] * n.central_scalars()[m];
        for (size_t i = 0; i < n.dim(); ++i) a(i, i) += scal;
        bool zero = true;
        for (size_t i = 0; i < n.dim() && zero; ++i)
            for (size_t j = 0; j < n.dim(); ++j)
                if (!a(i, j).is_zero()) {
                    zero = false;
                    break;
                }
        if (!zero) {
            report.hypothesis.ok = false;
            report.hypothesis.witness = desc;
            break;
        }
    }
    if (!report.hypothesis.ok) return report;

    // Proposition 3.9: L(I) kills every computed slice of V(N)
    report.annihilation = check_ideal_annihilation(module, ideal);
    report.pass = report.hypothesis.ok && report.annihilation.ok;
    return report;
}

IntegrabilityReport check_integrability(const HighestWeightModule& module, long bound) {
    IntegrabilityReport report;
    std::vector<QKey> real_gens;
    for (const auto& k : module.lowering_generators())
        if (!is_zero(module.algebra().weight_of(k))) real_gens.push_back(k);
    for (const auto& k : module.raising_generators())
        if (!is_zero(module.algebra().weight_of(k))) real_gens.push_back(k);

    for (const auto& [key, slice] : module.slices()) {
        for (size_t mi = 0; mi < slice.monomials.size(); ++mi)
            for (size_t ni = 0; ni < module.top().dim(); ++ni) {
                for (const QKey& x : real_gens) {
                    MVec v{{{slice.monomials[mi], ni}, CycNumber(1)}};
                    long grade = slice.grade;
                    Vec weight = slice.weight;
                    bool resolved = false;
                    for (long b = 1; b <= bound; ++b) {
                        grade -= x.k0;
                        weight = weight + module.algebra().weight_of(x);
                        bool above_top = false;
                        try {
                            Rational h = module.algebra().root_height(
                                module.top().lambda_h() - weight, grade);
                            above_top = h < 0 || grade < 0;
                        } catch (const std::invalid_argument&) {
                            above_top = false;
                        }
                        if (!above_top && !module.in_window(grade, weight)) {
                            ++report.window_limited;
                            resolved = true;
                            break;
                        }
                        v = module.apply_key(x, v);
                        bool zero = v.empty() || (!above_top && module.is_zero_in_vn(v));
                        if (above_top && !v.empty())
                            throw std::logic_error("vector above the top weight is nonzero");
                        if (zero) {
                            report.max_index = std::max(report.max_index, b);
                            ++report.checked;
                            resolved = true;
                            break;
                        }
                    }
                    if (!resolved) {
                        report.bound_exceeded = true;
                        report.integrable_on_window = false;
                        if (report.witness.empty())
                            report.witness = "x" + key_to_string(x) + " on slice grade " +
                                             std::to_string(slice.grade);
                        return report;
                    }
                }
            }
    }
    return report;
}

Prop43Report check_prop_4_3(const HighestWeightModule& module, const CofiniteIdeal& ideal_prime,
                            long nilpotency_bound) {
    Prop43Report report;
    report.integrability = check_integrability(module, nilpotency_bound);
    report.applicable = report.integrability.integrable_on_window;
    if (!report.applicable) return report;
    report.annihilation = check_ideal_annihilation(module, ideal_prime);
    report.pass = report.annihilation.ok;
    return report;
}

}  // namespace lietorus

#pragma once

// Test-only oracles for the highest-weight machinery, computed by routes
// independent of the module-action engine: Verma dimensions by a counting DP
// over generator multisets, and V(N) dimensions by a transposition-normalizing
// evaluator that never builds PBW-sorted module vectors.

#include <map>

#include "lietorus/highest_weight.hpp"

namespace lietorus::oracle {

/// Number of weakly decreasing lowering monomials per (grade, weight), by an
/// unbounded-knapsack DP over the generator list.
inline std::map<std::pair<long, Vec>, long, HighestWeightModule::SliceKeyLess> pbw_counts(
    const QuotientAlgebra& q, const std::vector<QKey>& gens, const Vec& lambda, long depth,
    const Rational& height_bound) {
    std::map<std::pair<long, Vec>, long, HighestWeightModule::SliceKeyLess> state;
    state[{0, lambda}] = 1;
    for (const QKey& g : gens) {
        Vec w = q.weight_of(g);
        auto next = state;
        auto layer = state;
        while (!layer.empty()) {
            std::map<std::pair<long, Vec>, long, HighestWeightModule::SliceKeyLess> shifted;
            for (const auto& [key, c] : layer) {
                long grade = key.first - g.k0;
                Vec weight = key.second + w;
                if (grade > depth) continue;
                Rational ht = q.root_height(lambda - weight, grade);
                if (ht > height_bound) continue;
                shifted[{grade, weight}] += c;
            }
            for (const auto& [key, c] : shifted) next[key] += c;
            layer = std::move(shifted);
        }
        state = std::move(next);
    }
    return state;
}

/// Top component of word applied right-to-left to the top-space vector.
/// Positive parts are commuted rightward until they die on the top space;
/// once no positive part remains, any negative part drops below the top and
/// contributes nothing, while zero parts act by the stored matrices.
inline Vec top_component(const QuotientAlgebra& q, const ZeroPartModule& n,
                         std::vector<QElement> word, const Vec& nvec) {
    if (is_zero(nvec)) return Vec(nvec.size());
    if (word.empty()) return nvec;

    auto sign_part = [&](const QElement& x, int want) {
        QElement part;
        part.central.assign(x.central.size(), CycNumber(0));
        for (const auto& [k, c] : x.loop)
            if (q.triangular_sign(k) == want) part.add_loop(k, c);
        return part;
    };

    // rightmost entry carrying a positive part
    for (size_t p = word.size(); p-- > 0;) {
        QElement xpos = sign_part(word[p], 1);
        if (xpos.loop.empty()) continue;
        Vec out(nvec.size());
        // the non-positive remainder of this entry
        QElement xrest = word[p];
        for (const auto& [k, c] : xpos.loop) xrest.add_loop(k, -c);
        if (!xrest.is_zero()) {
            auto w = word;
            w[p] = xrest;
            Vec part = top_component(q, n, w, nvec);
            for (size_t i = 0; i < out.size(); ++i) out[i] += part[i];
        }
        if (p + 1 == word.size()) {
            // positive part lands on the top space: zero
        } else {
            // x_pos y = y x_pos + [x_pos, y]
            auto w1 = word;
            w1[p] = w1[p + 1];
            w1[p + 1] = xpos;
            Vec part1 = top_component(q, n, w1, nvec);
            auto w2 = word;
            w2[p] = q.bracket(xpos, w2[p + 1]);
            w2.erase(w2.begin() + static_cast<long>(p) + 1);
            Vec part2 = top_component(q, n, w2, nvec);
            for (size_t i = 0; i < out.size(); ++i) out[i] += part1[i] + part2[i];
        }
        return out;
    }

    // no positive parts anywhere: process from the right
    QElement x = word.back();
    word.pop_back();
    Vec out(nvec.size());
    CycNumber scal = x.d0 * n.d0_value();
    for (size_t m = 0; m < x.central.size(); ++m) scal += x.central[m] * n.central_scalars()[m];
    if (!scal.is_zero()) {
        Vec part = top_component(q, n, word, nvec);
        for (size_t i = 0; i < out.size(); ++i) out[i] += scal * part[i];
    }
    Vec transformed(nvec.size());
    bool any_zero = false;
    for (const auto& [k, c] : x.loop) {
        if (q.triangular_sign(k) == 0) {
            any_zero = true;
            add_scaled(transformed, n.action_of_key(k).apply(nvec), c);
        }
        // negative parts drop below the top and cannot come back
    }
    if (any_zero && !is_zero(transformed)) {
        Vec part = top_component(q, n, word, transformed);
        for (size_t i = 0; i < out.size(); ++i) out[i] += part[i];
    }
    return out;
}

/// Monomials over a descending one-sign generator list with exact degree
/// (k0_target, w_target); lowering lists target (-grade, -drop), raising
/// lists (+grade, +drop).
inline void exact_monomials(const QuotientAlgebra& q, const std::vector<QKey>& gens, size_t idx,
                            long k0_left, const Vec& w_left, bool lowering, Monomial& current,
                            std::vector<Monomial>& out) {
    if (k0_left == 0 && is_zero(w_left) && !current.empty()) out.push_back(current);
    Rational ht;
    try {
        ht = lowering ? q.root_height(scaled(w_left, CycNumber(-1)), -k0_left)
                      : q.root_height(w_left, k0_left);
    } catch (const std::invalid_argument&) {
        return;
    }
    if (ht <= 0) return;
    for (size_t i = idx; i < gens.size(); ++i) {
        const QKey& g = gens[i];
        current.push_back(g);
        exact_monomials(q, gens, i, k0_left - g.k0, w_left - q.weight_of(g), lowering, current,
                        out);
        current.pop_back();
    }
}

/// V(N) dimension of one slice by the independent pairing: rows are raising
/// words evaluated through top_component, columns the lowering monomials.
inline long vn_dim_oracle(const HighestWeightModule& module, long grade, const Vec& weight) {
    const auto& q = module.algebra();
    const auto& n = module.top();
    Vec drop = n.lambda_h() - weight;

    std::vector<Monomial> lowering, raising;
    Monomial cur;
    exact_monomials(q, module.lowering_generators(), 0, -grade, scaled(drop, CycNumber(-1)),
                    /*lowering=*/true, cur, lowering);
    exact_monomials(q, module.raising_generators(), 0, grade, drop, /*lowering=*/false, cur,
                    raising);
    bool is_top = grade == 0 && is_zero(drop);
    if (is_top) lowering.push_back(Monomial{});

    size_t cols = lowering.size() * n.dim();
    if (cols == 0) return 0;
    if (is_top) return static_cast<long>(n.dim());
    if (raising.empty()) return 0;

    std::vector<Vec> rows;
    auto as_element = [&](const QKey& k) {
        QElement e;
        e.central.assign(q.ideal().quotient_dim(), CycNumber(0));
        e.add_loop(k, CycNumber(1));
        return e;
    };
    for (const auto& rw : raising) {
        size_t base = rows.size();
        for (size_t j = 0; j < n.dim(); ++j) rows.emplace_back(cols);
        for (size_t li = 0; li < lowering.size(); ++li) {
            for (size_t ni = 0; ni < n.dim(); ++ni) {
                std::vector<QElement> word;
                for (const QKey& k : rw) word.push_back(as_element(k));
                for (const QKey& k : lowering[li]) word.push_back(as_element(k));
                Vec unit(n.dim());
                unit[ni] = CycNumber(1);
                Vec val = top_component(q, n, word, unit);
                for (size_t j = 0; j < n.dim(); ++j) rows[base + j][li * n.dim() + ni] = val[j];
            }
        }
    }
    return static_cast<long>(rank(Mat::from_rows(rows)));
}

}  // namespace lietorus::oracle

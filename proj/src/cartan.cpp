#include "lietorus/cartan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace lietorus {

Family family_from_char(char c) {
    switch (c) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        case 'E': return Family::E;
        case 'F': return Family::F;
        case 'G': return Family::G;
    }
    throw std::invalid_argument(std::string("unknown family '") + c + "'");
}

char family_to_char(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
        case Family::E: return 'E';
        case Family::F: return 'F';
        case Family::G: return 'G';
    }
    return '?';
}

CartanDatum CartanDatum::make(Family family, int rank) {
    auto chain = [&](int l) {
        std::vector<std::vector<int>> m(l, std::vector<int>(l, 0));
        for (int i = 0; i < l; ++i) m[i][i] = 2;
        for (int i = 0; i + 1 < l; ++i) m[i][i + 1] = m[i + 1][i] = -1;
        return m;
    };
    CartanDatum d;
    d.family = family;
    d.rank = rank;
    switch (family) {
        case Family::A:
            if (rank < 1) throw std::invalid_argument("A_l needs rank >= 1");
            d.cartan = chain(rank);
            break;
        case Family::B:
            // alpha_rank is the short root
            if (rank < 2) throw std::invalid_argument("B_l needs rank >= 2");
            d.cartan = chain(rank);
            d.cartan[rank - 1][rank - 2] = -2;
            break;
        case Family::C:
            if (rank < 2) throw std::invalid_argument("C_l needs rank >= 2");
            d.cartan = chain(rank);
            d.cartan[rank - 2][rank - 1] = -2;
            break;
        case Family::D:
            if (rank < 3) throw std::invalid_argument("D_l needs rank >= 3");
            d.cartan = chain(rank - 1);
            d.cartan.resize(rank);
            for (auto& row : d.cartan) row.resize(rank, 0);
            d.cartan[rank - 1][rank - 1] = 2;
            d.cartan[rank - 1][rank - 3] = d.cartan[rank - 3][rank - 1] = -1;
            break;
        case Family::E: {
            if (rank < 6 || rank > 8) throw std::invalid_argument("E_l needs rank in {6,7,8}");
            // Bourbaki: node 2 attaches to node 4 of the chain 1-3-4-5-...
            d.cartan.assign(rank, std::vector<int>(rank, 0));
            for (int i = 0; i < rank; ++i) d.cartan[i][i] = 2;
            auto link = [&](int i, int j) { d.cartan[i - 1][j - 1] = d.cartan[j - 1][i - 1] = -1; };
            link(1, 3);
            link(3, 4);
            link(4, 5);
            link(5, 6);
            if (rank >= 7) link(6, 7);
            if (rank == 8) link(7, 8);
            link(2, 4);
            break;
        }
        case Family::F:
            if (rank != 4) throw std::invalid_argument("F requires rank 4");
            d.cartan = chain(4);
            d.cartan[2][1] = -2;  // alpha_3, alpha_4 short
            break;
        case Family::G:
            if (rank != 2) throw std::invalid_argument("G requires rank 2");
            d.cartan = {{2, -3}, {-1, 2}};  // alpha_1 short
            break;
    }
    d.validate();
    return d;
}

std::vector<Rational> CartanDatum::symmetrizers() const {
    int l = rank;
    std::vector<Rational> dvec(l, Rational(0));
    std::vector<bool> seen(l, false);
    std::deque<int> queue{0};
    dvec[0] = 1;
    seen[0] = true;
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < l; ++j) {
            if (i == j || cartan[i][j] == 0 || seen[j]) continue;
            // d_i a_ij = d_j a_ji
            dvec[j] = dvec[i] * Rational(cartan[i][j]) / Rational(cartan[j][i]);
            seen[j] = true;
            queue.push_back(j);
        }
    }
    Rational maxd = dvec[0];
    for (const auto& x : dvec) {
        if (!seen[&x - &dvec[0]]) throw std::invalid_argument("Dynkin diagram not connected");
        if (x > maxd) maxd = x;
    }
    for (auto& x : dvec) x /= maxd;
    return dvec;
}

void CartanDatum::validate() const {
    int l = rank;
    for (int i = 0; i < l; ++i) {
        if (cartan[i][i] != 2) throw std::invalid_argument("Cartan diagonal must be 2");
        for (int j = 0; j < l; ++j) {
            if (i != j && cartan[i][j] > 0) throw std::invalid_argument("off-diagonal must be <= 0");
            if (i != j && ((cartan[i][j] == 0) != (cartan[j][i] == 0)))
                throw std::invalid_argument("Cartan zero pattern must be symmetric");
        }
    }
    // positive definiteness of the symmetrized matrix via leading minors
    auto dvec = symmetrizers();
    std::vector<std::vector<Rational>> s(l, std::vector<Rational>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) s[i][j] = dvec[i] * Rational(cartan[i][j]);
    for (int k = 1; k <= l; ++k) {
        std::vector<std::vector<Rational>> m(s.begin(), s.begin() + k);
        for (auto& row : m) row.resize(k);
        // fraction-free-ish elimination determinant
        Rational det(1);
        for (int c = 0; c < k; ++c) {
            int p = c;
            while (p < k && m[p][c] == 0) ++p;
            if (p == k) {
                det = 0;
                break;
            }
            if (p != c) {
                std::swap(m[p], m[c]);
                det = -det;
            }
            det *= m[c][c];
            for (int r = c + 1; r < k; ++r) {
                if (m[r][c] == 0) continue;
                Rational f = m[r][c] / m[c][c];
                for (int j = c; j < k; ++j) m[r][j] -= f * m[c][j];
            }
        }
        if (!(det > 0))
            throw std::invalid_argument("Cartan matrix is not of finite type (affine or indefinite)");
    }
}

std::string CartanDatum::name() const {
    return std::string(1, family_to_char(family)) + std::to_string(rank);
}

RootSystem::RootSystem(const CartanDatum& datum) : rank_(datum.rank), cartan_(datum.cartan) {
    auto dvec = datum.symmetrizers();
    sym_.assign(rank_, std::vector<Rational>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) sym_[i][j] = dvec[i] * Rational(cartan_[i][j]);

    // enumerate positive roots by height
    std::map<std::vector<int>, bool> found;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < rank_; ++i) {
        std::vector<int> e(rank_, 0);
        e[i] = 1;
        found[e] = true;
        queue.push_back(e);
    }
    while (!queue.empty()) {
        std::vector<int> beta = queue.front();
        queue.pop_front();
        for (int i = 0; i < rank_; ++i) {
            // p = how far the alpha_i-string through beta reaches down
            long p = 0;
            std::vector<int> down = beta;
            while (true) {
                down[i] -= 1;
                bool zero = std::all_of(down.begin(), down.end(), [](int v) { return v == 0; });
                if (zero || !found.count(down)) break;
                ++p;
            }
            long pairing = pairing_with_simple_coroot(beta, i);
            if (p - pairing >= 1) {
                std::vector<int> up = beta;
                up[i] += 1;
                if (!found.count(up)) {
                    found[up] = true;
                    queue.push_back(up);
                }
            }
        }
    }
    positive_.assign(found.size(), {});
    size_t idx = 0;
    for (auto& [c, _] : found) positive_[idx++] = c;
    std::sort(positive_.begin(), positive_.end(), [](const auto& a, const auto& b) {
        long ha = std::accumulate(a.begin(), a.end(), 0L);
        long hb = std::accumulate(b.begin(), b.end(), 0L);
        if (ha != hb) return ha < hb;
        return a < b;
    });
    for (size_t i = 0; i < positive_.size(); ++i) index_[positive_[i]] = i;

    len2_.resize(positive_.size());
    Rational minlen, maxlen;
    for (size_t i = 0; i < positive_.size(); ++i) {
        Rational v(0);
        for (int a = 0; a < rank_; ++a)
            for (int b = 0; b < rank_; ++b)
                v += Rational(positive_[i][a]) * sym_[a][b] * Rational(positive_[i][b]);
        len2_[i] = v;
        if (i == 0) minlen = maxlen = v;
        if (v < minlen) minlen = v;
        if (v > maxlen) maxlen = v;
    }
    two_lengths_ = minlen != maxlen;
    short_len2_ = minlen;

    // extraspecial pairs: for each non-simple positive gamma the special pair
    // (a, b), a < b, a + b = gamma with minimal a
    extraspecial_.assign(positive_.size(), {SIZE_MAX, SIZE_MAX});
    for (size_t g = 0; g < positive_.size(); ++g) {
        if (height(g) == 1) continue;
        for (size_t a = 0; a < positive_.size(); ++a) {
            std::vector<int> diff = positive_[g];
            bool ok = true;
            for (int i = 0; i < rank_; ++i) {
                diff[i] -= positive_[a][i];
                if (diff[i] < 0) ok = false;
            }
            if (!ok) continue;
            auto it = index_.find(diff);
            if (it == index_.end() || it->second <= a) continue;
            extraspecial_[g] = {a, it->second};
            break;  // ids scan in increasing order, first hit is minimal
        }
        if (extraspecial_[g].first == SIZE_MAX)
            throw std::logic_error("positive root with no special pair");
    }
}

const std::vector<int>& RootSystem::coords(size_t id) const {
    if (id < positive_.size()) return positive_[id];
    return positive_[id - positive_.size()];  // caller must negate; see negate()
}

std::vector<int> RootSystem::signed_coords(size_t id) const {
    std::vector<int> c = coords(id);
    if (!is_positive(id))
        for (auto& v : c) v = -v;
    return c;
}

std::vector<int> RootSystem::negate(const std::vector<int>& c) const {
    std::vector<int> r = c;
    for (auto& v : r) v = -v;
    return r;
}

size_t RootSystem::negation(size_t id) const {
    return id < positive_.size() ? id + positive_.size() : id - positive_.size();
}

std::optional<size_t> RootSystem::find(const std::vector<int>& c) const {
    auto it = index_.find(c);
    if (it != index_.end()) return it->second;
    it = index_.find(negate(c));
    if (it != index_.end()) return it->second + positive_.size();
    return std::nullopt;
}

long RootSystem::height(size_t id) const {
    const auto& c = positive_[id < positive_.size() ? id : id - positive_.size()];
    long h = std::accumulate(c.begin(), c.end(), 0L);
    return id < positive_.size() ? h : -h;
}

const Rational& RootSystem::length2(size_t id) const {
    return len2_[id < positive_.size() ? id : id - positive_.size()];
}

bool RootSystem::is_short(size_t id) const { return two_lengths_ && length2(id) == short_len2_; }

size_t RootSystem::highest_root() const { return positive_.size() - 1; }

size_t RootSystem::highest_short_root() const {
    if (!two_lengths_) return highest_root();
    for (size_t i = positive_.size(); i-- > 0;)
        if (len2_[i] == short_len2_) return i;
    throw std::logic_error("no short root");
}

long RootSystem::pairing_with_simple_coroot(const std::vector<int>& c, int i) const {
    long v = 0;
    for (int j = 0; j < rank_; ++j) v += static_cast<long>(cartan_[i][j]) * c[j];
    return v;
}

Rational RootSystem::root_form(size_t a, size_t b) const {
    const auto& ca = coords(a);
    const auto& cb = coords(b);
    Rational v(0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) v += Rational(ca[i]) * sym_[i][j] * Rational(cb[j]);
    if (is_positive(a) != is_positive(b)) return v == 0 ? v : Rational(-v);
    // coords() returns the positive representative; fix signs
    return v;
}

std::optional<size_t> RootSystem::sum_root(size_t a, size_t b) const {
    std::vector<int> s = coords(a);
    const auto& cb = coords(b);
    int sa = is_positive(a) ? 1 : -1, sb = is_positive(b) ? 1 : -1;
    for (int i = 0; i < rank_; ++i) s[i] = sa * s[i] + sb * cb[i];
    if (std::all_of(s.begin(), s.end(), [](int v) { return v == 0; })) return std::nullopt;
    return find(s);
}

long RootSystem::chain_down(size_t a, size_t b) const {
    // max k >= 0 with beta - k alpha a root
    std::vector<int> ca = coords(a), cb = coords(b);
    int sa = is_positive(a) ? 1 : -1, sb = is_positive(b) ? 1 : -1;
    for (int i = 0; i < rank_; ++i) {
        ca[i] *= sa;
        cb[i] *= sb;
    }
    long k = 0;
    while (true) {
        std::vector<int> probe = cb;
        for (int i = 0; i < rank_; ++i) probe[i] -= static_cast<int>(k + 1) * ca[i];
        if (std::all_of(probe.begin(), probe.end(), [](int v) { return v == 0; })) break;
        if (!find(probe)) break;
        ++k;
    }
    return k;
}

Rational RootSystem::structure_constant(size_t a, size_t b) const {
    auto key = std::make_pair(a, b);
    auto it = n_cache_.find(key);
    if (it != n_cache_.end()) return it->second;
    auto sum = sum_root(a, b);
    if (!sum) throw std::logic_error("structure_constant: a+b is not a root");

    Rational result;
    bool pa = is_positive(a), pb = is_positive(b);
    if (pa && pb) {
        result = n_positive_pair(a, b);
    } else if (!pa && !pb) {
        result = -structure_constant(negation(a), negation(b));
    } else {
        // rotate via (a, b, g), a + b + g = 0: N_{a,b} = (g,g)/(a,a) N_{b,g}
        //                                            = (g,g)/(b,b) N_{g,a}
        size_t g = negation(*sum);
        if (is_positive(*sum)) {
            result = root_form(g, g) / root_form(a, a) * structure_constant(b, g);
        } else {
            result = root_form(g, g) / root_form(b, b) * structure_constant(g, a);
        }
    }
    n_cache_[key] = result;
    return result;
}

Rational RootSystem::n_positive_pair(size_t a, size_t b) const {
    if (a == b) throw std::logic_error("structure constant of equal roots");
    if (a > b) return -structure_constant(b, a);
    size_t g = *sum_root(a, b);
    auto [a1, b1] = extraspecial_[g];
    if (a1 == a && b1 == b) return Rational(chain_down(a, b) + 1);

    // four-root identity on (a1, b1, -a, -b); the extraspecial pair has the
    // minimal first member, so the recursion grounds out
    Rational term2(0), term3(0);
    auto s2 = sum_root(b1, negation(a));
    if (s2) {
        term2 = structure_constant(b1, negation(a)) * structure_constant(a1, negation(b)) /
                root_form(*s2, *s2);
    }
    auto s3 = sum_root(negation(a), a1);
    if (s3) {
        term3 = structure_constant(negation(a), a1) * structure_constant(b1, negation(b)) /
                root_form(*s3, *s3);
    }
    Rational n1 = structure_constant(a1, b1);
    return root_form(g, g) * (term2 + term3) / n1;
}

std::vector<Rational> RootSystem::coroot_coords(size_t id) const {
    const auto& c = coords(id);
    int sign = is_positive(id) ? 1 : -1;
    std::vector<Rational> r(rank_);
    for (int j = 0; j < rank_; ++j)
        r[j] = Rational(sign * c[j]) * sym_[j][j] / length2(id);
    return r;
}

}  // namespace lietorus

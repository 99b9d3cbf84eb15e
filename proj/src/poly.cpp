#include "lietorus/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lietorus {

void poly_trim(CycPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

long poly_degree(const CycPoly& p) { return static_cast<long>(p.size()) - 1; }

bool poly_is_zero(const CycPoly& p) {
    for (const auto& c : p)
        if (!c.is_zero()) return false;
    return true;
}

CycPoly poly_add(const CycPoly& a, const CycPoly& b) {
    CycPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

CycPoly poly_sub(const CycPoly& a, const CycPoly& b) {
    CycPoly r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

CycPoly poly_mul(const CycPoly& a, const CycPoly& b) {
    if (a.empty() || b.empty()) return {};
    CycPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    poly_trim(r);
    return r;
}

CycPoly poly_scale(const CycPoly& a, const CycNumber& c) {
    if (c.is_zero()) return {};
    CycPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

std::pair<CycPoly, CycPoly> poly_divmod(const CycPoly& num, const CycPoly& den) {
    if (den.empty()) throw std::invalid_argument("polynomial division by zero");
    CycPoly r = num, q;
    poly_trim(r);
    if (r.size() >= den.size()) {
        q.assign(r.size() - den.size() + 1, CycNumber(0));
        CycNumber lead_inv = den.back().inverse();
        while (r.size() >= den.size()) {
            CycNumber c = r.back() * lead_inv;
            size_t shift = r.size() - den.size();
            q[shift] = c;
            for (size_t i = 0; i < den.size(); ++i) r[shift + i] -= c * den[i];
            poly_trim(r);
            if (r.empty()) break;
        }
    }
    poly_trim(q);
    return {q, r};
}

CycPoly poly_monic(const CycPoly& p) {
    CycPoly r = p;
    poly_trim(r);
    if (r.empty()) return r;
    CycNumber inv = r.back().inverse();
    for (auto& c : r) c *= inv;
    return r;
}

CycPoly poly_gcd(CycPoly a, CycPoly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        CycPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

CycPoly poly_derivative(const CycPoly& p) {
    if (p.size() <= 1) return {};
    CycPoly r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = CycNumber(static_cast<long>(i)) * p[i];
    poly_trim(r);
    return r;
}

CycNumber poly_eval(const CycPoly& p, const CycNumber& x) {
    CycNumber acc(0);
    for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

CycPoly poly_from_roots(const std::vector<CycNumber>& roots) {
    CycPoly r{CycNumber(1)};
    for (const auto& a : roots) r = poly_mul(r, CycPoly{-a, CycNumber(1)});
    return r;
}

namespace {

std::vector<mpz_class> divisors_of(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> d;
    mpz_class i = 1;
    while (i * i <= n) {
        if (n % i == 0) {
            d.push_back(i);
            if (i * i != n) d.push_back(n / i);
        }
        ++i;
    }
    return d;
}

// Rational roots of a polynomial with rational coefficients (no multiplicity
// logic here; callers deflate).
std::vector<CycNumber> rational_root_candidates(const CycPoly& p) {
    // clear denominators
    mpz_class den_lcm = 1;
    for (const auto& c : p) {
        if (!c.is_rational()) return {};
        mpz_class d = c.rational_value().get_den();
        den_lcm = den_lcm / gcd(den_lcm, d) * d;
    }
    std::vector<mpz_class> zc(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        Rational scaled = p[i].rational_value() * Rational(den_lcm);
        zc[i] = scaled.get_num();
    }
    size_t low = 0;
    while (low < zc.size() && zc[low] == 0) ++low;
    std::vector<CycNumber> cands{CycNumber(0)};
    if (low >= zc.size()) return cands;
    for (const auto& pn : divisors_of(zc[low]))
        for (const auto& qd : divisors_of(zc.back())) {
            Rational r(pn, qd);
            r.canonicalize();
            cands.push_back(CycNumber(r));
            cands.push_back(CycNumber(Rational(-r)));
        }
    return cands;
}

}  // namespace

bool poly_roots_in_domain(const CycPoly& p, std::vector<CycNumber>& roots_out,
                          CycPoly* remainder_out) {
    CycPoly rem = poly_monic(p);
    roots_out.clear();
    if (rem.empty()) throw std::invalid_argument("zero polynomial has every root");

    bool progress = true;
    while (poly_degree(rem) > 0 && progress) {
        progress = false;
        for (const auto& cand : rational_root_candidates(rem)) {
            while (poly_degree(rem) > 0 && poly_eval(rem, cand).is_zero()) {
                roots_out.push_back(cand);
                rem = poly_divmod(rem, CycPoly{-cand, CycNumber(1)}).first;
                progress = true;
            }
        }
        // Whole cyclotomic factors: Phi_d | rem picks up all primitive d-th
        // roots of unity at once.
        for (long d = 2; d <= kMaxConductor && poly_degree(rem) > 0; ++d) {
            if (euler_phi(d) > poly_degree(rem)) continue;
            const auto& phi_z = cyclotomic_polynomial(d);
            CycPoly phi(phi_z.size());
            for (size_t i = 0; i < phi_z.size(); ++i) phi[i] = CycNumber(Rational(phi_z[i]));
            while (poly_degree(rem) >= poly_degree(phi)) {
                auto [q, r] = poly_divmod(rem, phi);
                if (!poly_is_zero(r)) break;
                CycNumber zd = CycNumber::primitive_root(d);
                for (long j = 1; j <= d; ++j)
                    if (std::gcd(j, d) == 1) roots_out.push_back(zd.pow(j));
                rem = q;
                progress = true;
            }
        }
        // Individual roots of unity of modest order (covers factors with
        // non-rational coefficients, e.g. minimal polynomials of diagonal
        // automorphism matrices).
        for (long d = 1; d <= 66 && poly_degree(rem) > 0; ++d) {
            CycNumber zd = CycNumber::primitive_root(d);
            for (long j = 1; j <= d && poly_degree(rem) > 0; ++j) {
                if (std::gcd(j, d) != 1) continue;
                CycNumber cand = zd.pow(j);
                while (poly_degree(rem) > 0 && poly_eval(rem, cand).is_zero()) {
                    roots_out.push_back(cand);
                    rem = poly_divmod(rem, CycPoly{-cand, CycNumber(1)}).first;
                    progress = true;
                }
            }
        }
    }
    if (remainder_out) *remainder_out = rem;
    return poly_degree(rem) == 0;
}

}  // namespace lietorus

#include "lietorus/cyclotomic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace lietorus {

namespace {

using Poly = std::vector<Rational>;  // dense, constant term first

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

// Remainder of p modulo the monic polynomial q.
Poly rem(Poly p, const Poly& q) {
    trim(p);
    const size_t dq = q.size() - 1;
    while (p.size() > dq) {
        Rational lead = p.back();
        size_t shift = p.size() - 1 - dq;
        if (lead != 0) {
            for (size_t i = 0; i < dq; ++i) p[shift + i] -= lead * q[i];
        }
        p.pop_back();
        trim(p);
        if (p.size() <= dq) break;
    }
    return p;
}

Poly to_rational(const std::vector<mpz_class>& p) {
    Poly r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = Rational(p[i]);
    return r;
}

// Exact division of integer polynomials, num = den * quot assumed exact.
std::vector<mpz_class> div_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den) {
    std::vector<mpz_class> quot(num.size() - den.size() + 1, mpz_class(0));
    for (size_t k = quot.size(); k-- > 0;) {
        mpz_class c = num[k + den.size() - 1] / den.back();
        quot[k] = c;
        if (c != 0)
            for (size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
    }
    return quot;
}

std::mutex g_cyclo_mutex;
std::map<long, std::vector<mpz_class>> g_cyclo_cache;

// Solves A x = b over the rationals; A given column-major. Returns empty on
// inconsistency, otherwise one solution of length A_cols.
bool solve_rational(std::vector<std::vector<Rational>> cols, std::vector<Rational> b,
                    std::vector<Rational>& out) {
    const size_t ncols = cols.size();
    const size_t nrows = b.size();
    std::vector<size_t> pivot_col_of_row;
    std::vector<long> pivot_row_of_col(ncols, -1);
    size_t row = 0;
    for (size_t c = 0; c < ncols && row < nrows; ++c) {
        size_t p = row;
        while (p < nrows && cols[c][p] == 0) ++p;
        if (p == nrows) continue;
        for (size_t cc = 0; cc < ncols; ++cc) std::swap(cols[cc][p], cols[cc][row]);
        std::swap(b[p], b[row]);
        Rational inv = 1 / cols[c][row];
        for (size_t cc = 0; cc < ncols; ++cc) cols[cc][row] *= inv;
        b[row] *= inv;
        for (size_t r = 0; r < nrows; ++r) {
            if (r == row || cols[c][r] == 0) continue;
            Rational f = cols[c][r];
            for (size_t cc = 0; cc < ncols; ++cc) cols[cc][r] -= f * cols[cc][row];
            b[r] -= f * b[row];
        }
        pivot_row_of_col[c] = static_cast<long>(row);
        ++row;
    }
    for (size_t r = row; r < nrows; ++r)
        if (b[r] != 0) return false;
    out.assign(ncols, Rational(0));
    for (size_t c = 0; c < ncols; ++c)
        if (pivot_row_of_col[c] >= 0) out[c] = b[static_cast<size_t>(pivot_row_of_col[c])];
    return true;
}

}  // namespace

long euler_phi(long m) {
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<long> divisors(long m) {
    std::vector<long> d;
    for (long i = 1; i * i <= m; ++i) {
        if (m % i == 0) {
            d.push_back(i);
            if (i != m / i) d.push_back(m / i);
        }
    }
    std::sort(d.begin(), d.end());
    return d;
}

const std::vector<mpz_class>& cyclotomic_polynomial(long m) {
    std::lock_guard<std::mutex> lock(g_cyclo_mutex);
    auto it = g_cyclo_cache.find(m);
    if (it != g_cyclo_cache.end()) return it->second;

    // Phi_m = (x^m - 1) / prod_{d | m, d < m} Phi_d, computed recursively
    // without the lock re-entered (divisors are filled bottom-up).
    std::vector<long> pending{m};
    while (!pending.empty()) {
        long v = pending.back();
        if (g_cyclo_cache.count(v)) {
            pending.pop_back();
            continue;
        }
        bool ready = true;
        for (long d : divisors(v)) {
            if (d != v && !g_cyclo_cache.count(d)) {
                pending.push_back(d);
                ready = false;
            }
        }
        if (!ready) continue;
        pending.pop_back();
        std::vector<mpz_class> num(static_cast<size_t>(v) + 1, mpz_class(0));
        num[0] = -1;
        num[static_cast<size_t>(v)] = 1;
        for (long d : divisors(v))
            if (d != v) num = div_exact(num, g_cyclo_cache.at(d));
        g_cyclo_cache.emplace(v, std::move(num));
    }
    return g_cyclo_cache.at(m);
}

CycNumber CycNumber::primitive_root(long m) {
    if (m <= 0) throw conductor_error("primitive_root requires m >= 1");
    if (m > kMaxConductor) throw conductor_error("conductor bound exceeded");
    if (m == 1) return CycNumber(1);
    if (m == 2) return CycNumber(-1);
    CycNumber z;
    z.conductor_ = m;
    z.coeffs_.assign(static_cast<size_t>(euler_phi(m)), Rational(0));
    z.coeffs_[1] = 1;
    z.canonicalize();
    return z;
}

CycNumber CycNumber::from_coeffs(long conductor, std::vector<Rational> coeffs) {
    if (conductor <= 0) throw conductor_error("conductor must be positive");
    if (conductor > kMaxConductor) throw conductor_error("conductor bound exceeded");
    size_t want = static_cast<size_t>(euler_phi(conductor));
    if (coeffs.size() != want) throw std::invalid_argument("coefficient vector length != phi(M)");
    for (auto& c : coeffs) c.canonicalize();
    CycNumber v;
    v.conductor_ = conductor;
    v.coeffs_ = std::move(coeffs);
    v.canonicalize();
    return v;
}

bool CycNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycNumber::is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }

const Rational& CycNumber::rational_value() const {
    if (conductor_ != 1) throw std::logic_error("value is not rational");
    return coeffs_[0];
}

CycNumber CycNumber::lifted(const CycNumber& v, long target) {
    if (v.conductor_ == target) return v;
    if (target % v.conductor_ != 0) throw std::logic_error("invalid conductor lift");
    if (target > kMaxConductor) throw conductor_error("conductor bound exceeded");
    long step = target / v.conductor_;
    Poly p(static_cast<size_t>(v.coeffs_.size() - 1) * step + 1, Rational(0));
    for (size_t i = 0; i < v.coeffs_.size(); ++i) p[i * step] = v.coeffs_[i];
    p = rem(std::move(p), to_rational(cyclotomic_polynomial(target)));
    CycNumber r;
    r.conductor_ = target;
    r.coeffs_.assign(static_cast<size_t>(euler_phi(target)), Rational(0));
    for (size_t i = 0; i < p.size(); ++i) r.coeffs_[i] = p[i];
    return r;
}

void CycNumber::canonicalize() {
    // Descend to the least conductor dividing the current one at which the
    // value lives.  One prime at a time until stable.
    bool changed = true;
    while (changed && conductor_ > 1) {
        changed = false;
        long n = conductor_;
        std::vector<long> primes;
        for (long p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                primes.push_back(p);
                while (n % p == 0) n /= p;
            }
        }
        if (n > 1) primes.push_back(n);
        for (long p : primes) {
            long down = conductor_ / p;
            long step = p;
            size_t sub_dim = static_cast<size_t>(euler_phi(down));
            size_t dim = coeffs_.size();
            // Columns: zeta_M^{step*j} expressed in the power basis.
            std::vector<std::vector<Rational>> cols(sub_dim);
            Poly phi = to_rational(cyclotomic_polynomial(conductor_));
            for (size_t j = 0; j < sub_dim; ++j) {
                Poly mono(static_cast<size_t>(step) * j + 1, Rational(0));
                mono.back() = 1;
                mono = rem(std::move(mono), phi);
                cols[j].assign(dim, Rational(0));
                for (size_t i = 0; i < mono.size(); ++i) cols[j][i] = mono[i];
            }
            std::vector<Rational> sol;
            if (solve_rational(cols, coeffs_, sol)) {
                conductor_ = down;
                coeffs_ = std::move(sol);
                for (auto& c : coeffs_) c.canonicalize();
                changed = true;
                break;
            }
        }
    }
}

CycNumber CycNumber::operator-() const {
    CycNumber r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    if (conductor_ == 1 && o.conductor_ == 1) {
        coeffs_[0] += o.coeffs_[0];
        return *this;
    }
    long target = std::lcm(conductor_, o.conductor_);
    if (target > kMaxConductor) throw conductor_error("conductor bound exceeded");
    CycNumber a = lifted(*this, target), b = lifted(o, target);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) a.coeffs_[i] += b.coeffs_[i];
    a.canonicalize();
    return *this = std::move(a);
}

CycNumber& CycNumber::operator-=(const CycNumber& o) { return *this += -o; }

CycNumber& CycNumber::operator*=(const CycNumber& o) {
    if (conductor_ == 1 && o.conductor_ == 1) {
        coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    if (is_zero() || o.is_zero()) return *this = CycNumber();
    long target = std::lcm(conductor_, o.conductor_);
    if (target > kMaxConductor) throw conductor_error("conductor bound exceeded");
    CycNumber a = lifted(*this, target), b = lifted(o, target);
    Poly p = rem(mul(a.coeffs_, b.coeffs_), to_rational(cyclotomic_polynomial(target)));
    CycNumber r;
    r.conductor_ = target;
    r.coeffs_.assign(static_cast<size_t>(euler_phi(target)), Rational(0));
    for (size_t i = 0; i < p.size(); ++i) r.coeffs_[i] = p[i];
    r.canonicalize();
    return *this = std::move(r);
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw division_by_zero();
    if (conductor_ == 1) return CycNumber(Rational(1 / coeffs_[0]));
    // Extended Euclid in Q[x] against the cyclotomic polynomial, which is
    // irreducible over Q, so the gcd with any nonzero residue is 1.
    Poly r0 = to_rational(cyclotomic_polynomial(conductor_));
    Poly r1 = coeffs_;
    trim(r1);
    Poly s0{}, s1{Rational(1)};
    while (!r1.empty()) {
        // divide r0 by r1
        Poly q;
        Poly rr = r0;
        trim(rr);
        if (rr.size() >= r1.size()) {
            q.assign(rr.size() - r1.size() + 1, Rational(0));
            while (rr.size() >= r1.size() && !rr.empty()) {
                Rational c = rr.back() / r1.back();
                size_t shift = rr.size() - r1.size();
                q[shift] = c;
                for (size_t i = 0; i < r1.size(); ++i) rr[shift + i] -= c * r1[i];
                trim(rr);
            }
        }
        Poly s2 = s0;
        {
            Poly qs = mul(q, s1);
            if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
            for (size_t i = 0; i < qs.size(); ++i) s2[i] -= qs[i];
            trim(s2);
        }
        r0 = std::move(r1);
        r1 = std::move(rr);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd (a constant), s0 * this == r0 (mod Phi)
    Rational g = r0.empty() ? Rational(0) : r0[0];
    if (r0.size() != 1 || g == 0) throw std::logic_error("cyclotomic inverse: unexpected gcd");
    CycNumber r;
    r.conductor_ = conductor_;
    r.coeffs_.assign(coeffs_.size(), Rational(0));
    for (size_t i = 0; i < s0.size(); ++i) r.coeffs_[i] = s0[i] / g;
    r.canonicalize();
    return r;
}

CycNumber CycNumber::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    CycNumber base = *this, acc(1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return acc;
}

long CycNumber::multiplicative_order(long bound) const {
    CycNumber acc(1);
    for (long k = 1; k <= bound; ++k) {
        acc *= *this;
        if (acc.is_one()) return k;
    }
    return 0;
}

bool CycNumber::operator==(const CycNumber& o) const {
    return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
}

bool CycNumber::operator<(const CycNumber& o) const {
    if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        int c = mpq_cmp(coeffs_[i].get_mpq_t(), o.coeffs_[i].get_mpq_t());
        if (c != 0) return c < 0;
    }
    return false;
}

std::string CycNumber::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rational c = coeffs_[i];
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0)
            os << c;
        else {
            if (c != 1) os << c << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (conductor_ > 1) os << " (zeta " << conductor_ << ")";
    return os.str();
}

CycNumber CycNumber::parse(const std::string& text) {
    std::string body = text;
    long conductor = 1;
    auto paren = body.find('(');
    if (paren != std::string::npos) {
        std::string ann = body.substr(paren);
        body = body.substr(0, paren);
        auto zpos = ann.find("zeta");
        if (zpos == std::string::npos) throw std::invalid_argument("bad conductor annotation");
        conductor = std::stol(ann.substr(zpos + 4));
    }
    std::vector<Rational> coeffs(static_cast<size_t>(euler_phi(conductor)), Rational(0));
    size_t pos = 0;
    auto skip_ws = [&]() { while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) ++pos; };
    skip_ws();
    if (pos == body.size()) throw std::invalid_argument("empty cyclotomic literal");
    bool any = false;
    while (true) {
        skip_ws();
        if (pos >= body.size()) break;
        int sign = 1;
        if (body[pos] == '+' || body[pos] == '-') {
            sign = body[pos] == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (any) {
            throw std::invalid_argument("expected '+' or '-' between terms");
        }
        // coefficient (optional when the term is a bare power of z)
        Rational coeff(1);
        bool have_num = false;
        size_t start = pos;
        while (pos < body.size() &&
               (std::isdigit(static_cast<unsigned char>(body[pos])) || body[pos] == '/'))
            ++pos;
        if (pos > start) {
            coeff = Rational(body.substr(start, pos - start));
            coeff.canonicalize();
            have_num = true;
        }
        skip_ws();
        if (pos < body.size() && body[pos] == '*') {
            ++pos;
            skip_ws();
        }
        size_t power = 0;
        if (pos < body.size() && body[pos] == 'z') {
            ++pos;
            power = 1;
            if (pos < body.size() && body[pos] == '^') {
                ++pos;
                size_t s2 = pos;
                while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos]))) ++pos;
                power = static_cast<size_t>(std::stoul(body.substr(s2, pos - s2)));
            }
        } else if (!have_num) {
            throw std::invalid_argument("malformed term in cyclotomic literal");
        }
        if (power >= coeffs.size())
            throw std::invalid_argument("power exceeds phi(M) in cyclotomic literal");
        coeffs[power] += sign * coeff;
        any = true;
    }
    if (!any) throw std::invalid_argument("empty cyclotomic literal");
    return from_coeffs(conductor, std::move(coeffs));
}

std::complex<double> CycNumber::approx() const {
    std::complex<double> acc(0.0, 0.0);
    const double tau = 6.283185307179586476925287;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        double c = coeffs_[i].get_d();
        double ang = tau * static_cast<double>(i) / static_cast<double>(conductor_);
        acc += c * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

int rational_sign(const CycNumber& v) {
    if (!v.is_rational()) throw std::logic_error("sign of an irrational cyclotomic value");
    return sgn(v.rational_value());
}

std::ostream& operator<<(std::ostream& os, const CycNumber& v) { return os << v.to_string(); }

}  // namespace lietorus

#include "lietorus/automorphism.hpp"

#include <numeric>
#include <sstream>

namespace lietorus {

namespace {

long matrix_order(const Mat& m, long bound) {
    Mat acc = m;
    for (long k = 1; k <= bound; ++k) {
        if (acc.is_identity()) return k;
        acc = acc * m;
    }
    throw std::invalid_argument("matrix order exceeds bound " + std::to_string(bound));
}

}  // namespace

bool preserves_bracket(const SimpleLieAlgebra& g, const Mat& m) {
    for (size_t i = 0; i < g.dim(); ++i) {
        Vec mi = m.column(i);
        for (size_t j = i + 1; j < g.dim(); ++j) {
            Vec lhs(g.dim());
            for (const auto& [k, c] : g.bracket_basis(i, j)) add_scaled(lhs, m.column(k), c);
            if (lhs != g.bracket(mi, m.column(j))) return false;
        }
    }
    return true;
}

bool preserves_form(const SimpleLieAlgebra& g, const Mat& m) {
    for (size_t i = 0; i < g.dim(); ++i) {
        Vec mi = m.column(i);
        for (size_t j = i; j < g.dim(); ++j) {
            if (g.form_value(mi, m.column(j)) != g.form()(i, j)) return false;
        }
    }
    return true;
}

FiniteOrderAut diagram_aut(const SimpleLieAlgebra& g, const std::vector<int>& perm) {
    const int l = g.rank();
    if (static_cast<int>(perm.size()) != l)
        throw std::invalid_argument("permutation length must equal the rank");
    std::vector<bool> hit(l, false);
    for (int v : perm) {
        if (v < 0 || v >= l || hit[v]) throw std::invalid_argument("not a permutation");
        hit[v] = true;
    }
    const auto& cartan = g.datum().cartan;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            if (cartan[perm[i]][perm[j]] != cartan[i][j])
                throw std::invalid_argument("permutation is not a Dynkin-diagram symmetry");

    const auto& rs = g.roots();
    Mat m(g.dim(), g.dim());
    for (int i = 0; i < l; ++i) m(perm[i], i) = CycNumber(1);

    // image of each root vector, by induction on height
    std::vector<std::optional<Vec>> image(g.dim());
    auto image_of_root = [&](size_t root_id, auto&& self) -> const Vec& {
        size_t bi = g.root_vector_index(root_id);
        if (image[bi]) return *image[bi];
        auto coords = rs.signed_coords(root_id);
        long h = rs.height(root_id);
        if (h == 1 || h == -1) {
            std::vector<int> permuted(l, 0);
            for (int i = 0; i < l; ++i)
                if (coords[i] != 0) permuted[perm[i]] = coords[i];
            Vec v(g.dim());
            v[g.root_vector_index(*rs.find(permuted))] = CycNumber(1);
            image[bi] = std::move(v);
            return *image[bi];
        }
        // split off a simple root on the positive side of the chain
        int sign = h > 0 ? 1 : -1;
        for (int i = 0; i < l; ++i) {
            auto rest = coords;
            rest[i] -= sign;
            auto rest_id = rs.find(rest);
            if (!rest_id) continue;
            std::vector<int> simple(l, 0);
            simple[i] = sign;
            size_t simple_id = *rs.find(simple);
            Rational n = rs.structure_constant(simple_id, *rest_id);
            if (n == 0) continue;
            const Vec& a = self(simple_id, self);
            Vec b = self(*rest_id, self);  // copy: recursion may reallocate
            Vec v = scaled(g.bracket(a, b), CycNumber(Rational(1) / n));
            image[bi] = std::move(v);
            return *image[bi];
        }
        throw std::logic_error("root has no simple-root decomposition");
    };
    for (size_t r = 0; r < rs.num_roots(); ++r) {
        const Vec& img = image_of_root(r, image_of_root);
        for (size_t i = 0; i < g.dim(); ++i) m(i, g.root_vector_index(r)) = img[i];
    }

    long perm_order = 1;
    for (int i = 0; i < l; ++i) {
        int len = 1, j = perm[i];
        while (j != i) {
            j = perm[j];
            ++len;
        }
        perm_order = std::lcm(perm_order, static_cast<long>(len));
    }
    FiniteOrderAut aut;
    aut.kind = FiniteOrderAut::Kind::diagram;
    aut.matrix = std::move(m);
    aut.order = matrix_order(aut.matrix, perm_order);
    return aut;
}

FiniteOrderAut inner_torus_aut(const SimpleLieAlgebra& g, const std::vector<long>& s, long m) {
    if (m <= 0) throw std::invalid_argument("inner torus automorphism needs m >= 1");
    if (static_cast<int>(s.size()) != g.rank())
        throw std::invalid_argument("s-vector length must equal the rank");
    CycNumber zeta = CycNumber::primitive_root(m);
    Mat mat(g.dim(), g.dim());
    for (int i = 0; i < g.rank(); ++i) mat(i, i) = CycNumber(1);
    long g_all = m;
    const auto& rs = g.roots();
    for (size_t r = 0; r < rs.num_roots(); ++r) {
        auto coords = rs.signed_coords(r);
        long e = 0;
        for (int i = 0; i < g.rank(); ++i) e += s[static_cast<size_t>(i)] * coords[i];
        e = ((e % m) + m) % m;
        size_t bi = g.root_vector_index(r);
        mat(bi, bi) = zeta.pow(e);
    }
    for (long si : s) g_all = std::gcd(g_all, ((si % m) + m) % m);
    FiniteOrderAut aut;
    aut.kind = FiniteOrderAut::Kind::inner;
    aut.matrix = std::move(mat);
    aut.order = g_all == 0 ? 1 : m / g_all;
    return aut;
}

FiniteOrderAut identity_aut(const SimpleLieAlgebra& g) {
    return inner_torus_aut(g, std::vector<long>(static_cast<size_t>(g.rank()), 0), 1);
}

FiniteOrderAut compose_auts(const SimpleLieAlgebra& g, const FiniteOrderAut& a,
                            const FiniteOrderAut& b) {
    FiniteOrderAut c;
    c.kind = FiniteOrderAut::Kind::composite;
    c.matrix = a.matrix * b.matrix;
    c.order = matrix_order(c.matrix, std::lcm(a.order, b.order));
    (void)g;
    return c;
}

AutFamily::AutFamily(std::shared_ptr<const SimpleLieAlgebra> algebra,
                     std::vector<FiniteOrderAut> auts)
    : algebra_(std::move(algebra)), auts_(std::move(auts)) {
    if (auts_.size() < 2)
        throw std::invalid_argument("family needs sigma_0 and at least one sigma_i");
    for (size_t i = 0; i < auts_.size(); ++i) {
        const auto& a = auts_[i];
        if (!a.matrix.pow(a.order).is_identity())
            throw std::invalid_argument("stated order is not an identity power");
        for (long d = 1; d < a.order; ++d)
            if (a.order % d == 0 && a.matrix.pow(d).is_identity())
                throw std::invalid_argument("stated order is not exact");
        if (!preserves_bracket(*algebra_, a.matrix))
            throw std::invalid_argument("automorphism does not preserve the bracket");
        if (!preserves_form(*algebra_, a.matrix))
            throw std::invalid_argument("automorphism does not preserve the invariant form");
    }
    for (size_t i = 0; i < auts_.size(); ++i)
        for (size_t j = i + 1; j < auts_.size(); ++j)
            if (!(auts_[i].matrix * auts_[j].matrix == auts_[j].matrix * auts_[i].matrix)) {
                std::ostringstream os;
                os << "family does not commute: witness pair (sigma_" << i << ", sigma_" << j
                   << ")";
                throw std::invalid_argument(os.str());
            }
}

std::vector<long> AutFamily::orders() const {
    std::vector<long> m;
    for (const auto& a : auts_) m.push_back(a.order);
    return m;
}

std::vector<long> AutFamily::residue(const std::vector<long>& degree) const {
    if (degree.size() != auts_.size())
        throw std::invalid_argument("degree length must be n+1");
    std::vector<long> r(degree.size());
    for (size_t i = 0; i < degree.size(); ++i) {
        long m = auts_[i].order;
        r[i] = ((degree[i] % m) + m) % m;
    }
    return r;
}

const Vec& GradingComponent::weight_of(size_t i) const {
    size_t off = 0;
    for (const auto& b : blocks) {
        if (i < off + b.basis.size()) return b.weight;
        off += b.basis.size();
    }
    throw std::out_of_range("weight_of: index out of range");
}

JointGrading::JointGrading(std::shared_ptr<const AutFamily> family) : family_(std::move(family)) {
    const auto& g = family_->algebra();
    const auto& auts = family_->auts();

    // simultaneous eigenspaces, eigenvalues are roots of unity of known order
    std::vector<Mat> ops;
    std::vector<std::vector<CycNumber>> candidates;
    for (const auto& a : auts) {
        ops.push_back(a.matrix);
        std::vector<CycNumber> c;
        CycNumber z = CycNumber::primitive_root(a.order);
        for (long k = 0; k < a.order; ++k) c.push_back(z.pow(k));
        candidates.push_back(std::move(c));
    }
    std::vector<Vec> ambient;
    for (size_t i = 0; i < g.dim(); ++i) ambient.push_back(g.basis_vector(i));
    auto cells = joint_eigen_split(ops, ambient, candidates);

    // fixed Cartan h(o) = h ^ g(0,0): the sigma-fixed part of the Cartan span
    {
        std::vector<Vec> rows;
        for (const auto& a : auts) {
            Mat diff = a.matrix - Mat::identity(g.dim());
            Mat r = restrict_operator(diff, g.cartan_basis());  // h is preserved (checked below)
            for (size_t i = 0; i < r.rows(); ++i) rows.push_back(r.row(i));
        }
        Mat stacked = Mat::from_rows(rows);
        for (const auto& k : kernel_basis(stacked)) {
            Vec v(g.dim());
            for (int i = 0; i < g.rank(); ++i) add_scaled(v, g.basis_vector(i), k[i]);
            h_o_.push_back(std::move(v));
        }
    }

    std::vector<Mat> ad_h;
    for (const auto& h : h_o_) ad_h.push_back(g.ad(h));

    size_t total = 0;
    for (auto& cell : cells) {
        // eigenvalue tuple -> residue key
        std::vector<long> key(auts.size());
        for (size_t i = 0; i < auts.size(); ++i) {
            CycNumber z = CycNumber::primitive_root(auts[i].order);
            long k = -1;
            CycNumber p(1);
            for (long e = 0; e < auts[i].order; ++e) {
                if (p == cell.values[i]) {
                    k = e;
                    break;
                }
                p *= z;
            }
            if (k < 0) throw std::logic_error("eigenvalue is not a power of the primitive root");
            key[i] = k;
        }
        GradingComponent comp;
        for (auto& wcell : joint_eigen_split(ad_h, cell.basis)) {
            GradingComponent::WeightBlock block;
            block.weight = std::move(wcell.values);
            block.basis = std::move(wcell.basis);
            comp.blocks.push_back(std::move(block));
        }
        std::sort(comp.blocks.begin(), comp.blocks.end(), [](const auto& a, const auto& b) {
            return std::lexicographical_compare(a.weight.begin(), a.weight.end(),
                                                b.weight.begin(), b.weight.end());
        });
        for (const auto& b : comp.blocks)
            comp.basis.insert(comp.basis.end(), b.basis.begin(), b.basis.end());
        comp.solver = SpanSolver(comp.basis);
        total += comp.dim();
        components_.emplace(std::move(key), std::move(comp));
    }
    if (total != g.dim()) throw std::logic_error("joint eigenspaces do not fill the algebra");

    // is h(o) self-centralizing in g(0,0)?
    const auto& zero = component(std::vector<long>(auts.size(), 0));
    size_t zero_weight_dim = 0;
    for (const auto& b : zero.blocks)
        if (is_zero(b.weight)) zero_weight_dim += b.basis.size();
    h_o_is_cartan_ = zero_weight_dim == h_o_.size();
}

const GradingComponent& JointGrading::component(const std::vector<long>& residue) const {
    auto it = components_.find(residue);
    if (it == components_.end()) throw std::out_of_range("no component at residue");
    return it->second;
}

const GradingComponent& JointGrading::component_of_degree(const std::vector<long>& degree) const {
    return component(family_->residue(degree));
}

std::shared_ptr<const JointGrading> joint_eigenspaces(std::shared_ptr<const AutFamily> family) {
    return std::make_shared<JointGrading>(std::move(family));
}

}  // namespace lietorus

#include "lietorus/simple_lie.hpp"

#include <sstream>

namespace lietorus {

namespace {

std::string root_label(const RootSystem& roots, size_t id) {
    std::ostringstream os;
    os << "x[";
    auto c = roots.signed_coords(id);
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) os << ",";
        os << c[i];
    }
    os << "]";
    return os.str();
}

}  // namespace

SimpleLieAlgebra::SimpleLieAlgebra(const CartanDatum& datum)
    : datum_(datum), roots_(datum), dim_(datum.rank + roots_.num_roots()) {
    const int l = datum_.rank;
    labels_.reserve(dim_);
    for (int i = 0; i < l; ++i) labels_.push_back("h" + std::to_string(i + 1));
    for (size_t r = 0; r < roots_.num_roots(); ++r) labels_.push_back(root_label(roots_, r));

    table_.assign(dim_ * dim_, {});
    auto set_entry = [&](size_t i, size_t j, Sparse value) {
        Sparse neg;
        for (const auto& [k, c] : value) neg.emplace_back(k, -c);
        table_[i * dim_ + j] = std::move(value);
        table_[j * dim_ + i] = std::move(neg);
    };

    // [h_i, x_beta] = <beta, alpha_i^vee> x_beta
    for (int i = 0; i < l; ++i) {
        for (size_t r = 0; r < roots_.num_roots(); ++r) {
            long v = roots_.pairing_with_simple_coroot(roots_.signed_coords(r), i);
            if (v != 0) set_entry(i, root_vector_index(r), {{root_vector_index(r), CycNumber(v)}});
        }
    }
    // [x_beta, x_-beta] = h_beta (coroot); [x_a, x_b] = N_{a,b} x_{a+b}
    for (size_t a = 0; a < roots_.num_roots(); ++a) {
        for (size_t b = a + 1; b < roots_.num_roots(); ++b) {
            if (roots_.negation(a) == b) {
                // a < b, so a is the positive root here: [x_a, x_-a] = h_a
                auto cr = roots_.coroot_coords(a);
                Sparse h;
                for (int i = 0; i < l; ++i)
                    if (cr[i] != 0) h.emplace_back(i, CycNumber(cr[i]));
                set_entry(root_vector_index(a), root_vector_index(b), std::move(h));
                continue;
            }
            std::vector<int> sum = roots_.signed_coords(a);
            auto cb = roots_.signed_coords(b);
            for (int i = 0; i < l; ++i) sum[i] += cb[i];
            auto target = roots_.find(sum);
            if (!target) continue;
            Rational n = roots_.structure_constant(a, b);
            if (n.get_den() != 1)
                throw std::logic_error("non-integer Chevalley structure constant");
            if (n != 0)
                set_entry(root_vector_index(a), root_vector_index(b),
                          {{root_vector_index(*target), CycNumber(n)}});
        }
    }

    // invariant form: (h_i,h_j) = <a_i^vee, a_j^vee>, (x_b, x_-b) = 2/(b,b)
    form_ = Mat(dim_, dim_);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            Rational v = Rational(4) * roots_.simple_form(i, j) /
                         (roots_.simple_form(i, i) * roots_.simple_form(j, j));
            form_(i, j) = CycNumber(v);
        }
    for (size_t r = 0; r < roots_.num_roots(); ++r) {
        size_t nr = roots_.negation(r);
        form_(root_vector_index(r), root_vector_index(nr)) =
            CycNumber(Rational(2) / roots_.length2(r));
    }
}

std::optional<size_t> SimpleLieAlgebra::root_of_basis_index(size_t i) const {
    if (i < static_cast<size_t>(datum_.rank)) return std::nullopt;
    return i - datum_.rank;
}

Vec SimpleLieAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec r(dim_);
    for (size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            CycNumber c = x[i] * y[j];
            for (const auto& [k, v] : bracket_basis(i, j)) r[k] += c * v;
        }
    }
    return r;
}

Mat SimpleLieAlgebra::ad(const Vec& x) const {
    Mat m(dim_, dim_);
    for (size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j)
            for (const auto& [k, v] : bracket_basis(i, j)) m(k, j) += x[i] * v;
    }
    return m;
}

CycNumber SimpleLieAlgebra::form_value(const Vec& x, const Vec& y) const {
    CycNumber acc(0);
    for (size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero() || form_(i, j).is_zero()) continue;
            acc += x[i] * form_(i, j) * y[j];
        }
    }
    return acc;
}

Vec SimpleLieAlgebra::basis_vector(size_t i) const {
    Vec v(dim_);
    v[i] = CycNumber(1);
    return v;
}

Vec SimpleLieAlgebra::coroot_vector(size_t root_id) const {
    auto cr = roots_.coroot_coords(root_id);
    Vec v(dim_);
    for (int i = 0; i < datum_.rank; ++i) v[i] = CycNumber(cr[i]);
    return v;
}

std::vector<Vec> SimpleLieAlgebra::cartan_basis() const {
    std::vector<Vec> h;
    for (int i = 0; i < datum_.rank; ++i) h.push_back(basis_vector(i));
    return h;
}

std::shared_ptr<const SimpleLieAlgebra> build_simple(const CartanDatum& datum) {
    datum.validate();
    return std::make_shared<SimpleLieAlgebra>(datum);
}

AdDiagonalization ad_diagonalize(const SimpleLieAlgebra& g, const std::vector<Vec>& elements,
                                 std::vector<Vec> ambient) {
    if (ambient.empty())
        for (size_t i = 0; i < g.dim(); ++i) ambient.push_back(g.basis_vector(i));

    for (size_t i = 0; i < elements.size(); ++i)
        for (size_t j = i + 1; j < elements.size(); ++j)
            if (!is_zero(g.bracket(elements[i], elements[j])))
                throw std::invalid_argument("ad_diagonalize: elements do not commute");

    std::vector<Mat> ops;
    for (const auto& e : elements) ops.push_back(g.ad(e));

    AdDiagonalization out;
    out.subalgebra = elements;
    if (elements.empty()) {
        out.spaces.push_back({Vec{}, ambient});
        return out;
    }
    for (auto& cell : joint_eigen_split(ops, ambient)) {
        out.spaces.push_back({std::move(cell.values), std::move(cell.basis)});
    }
    // deterministic order: by weight tuple
    std::sort(out.spaces.begin(), out.spaces.end(),
              [](const auto& a, const auto& b) {
                  return std::lexicographical_compare(a.weight.begin(), a.weight.end(),
                                                      b.weight.begin(), b.weight.end());
              });
    return out;
}

std::vector<std::vector<int>> enhanced_roots(const SimpleLieAlgebra& g) {
    std::vector<std::vector<int>> out;
    const auto& rs = g.roots();
    for (size_t r = 0; r < rs.num_roots(); ++r) out.push_back(rs.signed_coords(r));
    if (g.datum().family == Family::B) {
        for (size_t r = 0; r < rs.num_roots(); ++r) {
            if (!rs.is_short(r)) continue;
            auto c = rs.signed_coords(r);
            for (auto& v : c) v *= 2;
            out.push_back(std::move(c));
        }
    }
    out.push_back(std::vector<int>(g.rank(), 0));
    return out;
}

}  // namespace lietorus

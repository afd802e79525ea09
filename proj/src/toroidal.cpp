#include "qtorus/toroidal.hpp"

#include "qtorus/error.hpp"

#include <set>
#include <sstream>

namespace qtorus {

ToroidalElement::ToroidalElement(QMatrixPtr q, std::size_t d)
    : q_(std::move(q)), d_(d), hc_(q_), der_(q_ ? q_->n() : 0) {
    if (d_ < 1)
        fail(ErrorCode::invalid_argument, "matrix size d must be positive");
}

ToroidalElement ToroidalElement::matrix_term(QMatrixPtr q, const Matrix& x, const Degree& a) {
    if (!x.is_square())
        fail(ErrorCode::invalid_operand, "matrix part must be square");
    ToroidalElement out(std::move(q), x.rows());
    out.add_matrix(a, x);
    return out;
}

ToroidalElement ToroidalElement::unit_term(QMatrixPtr q, std::size_t d, std::size_t i, std::size_t j,
                                           const Degree& a, const Cyclotomic& c) {
    if (i >= d || j >= d)
        fail(ErrorCode::invalid_argument, "matrix unit index out of range");
    Matrix x(d, d);
    x(i, j) = c;
    return matrix_term(std::move(q), x, a);
}

ToroidalElement ToroidalElement::central(QMatrixPtr q, std::size_t d, std::size_t i) {
    ToroidalElement out(q, d);
    out.add_hc1(HC1Element::central(q, i));
    return out;
}

ToroidalElement ToroidalElement::derivation(QMatrixPtr q, std::size_t d, std::size_t i) {
    ToroidalElement out(std::move(q), d);
    out.add_derivation(i, Cyclotomic(1L));
    return out;
}

ToroidalElement ToroidalElement::from_hc1(std::size_t d, const HC1Element& h) {
    ToroidalElement out(h.torus(), d);
    out.add_hc1(h);
    return out;
}

bool ToroidalElement::is_zero() const {
    if (!mat_.empty() || !hc_.is_zero())
        return false;
    for (const auto& c : der_)
        if (!c.is_zero())
            return false;
    return true;
}

void ToroidalElement::add_matrix(const Degree& a, const Matrix& x) {
    if (x.rows() != d_ || x.cols() != d_)
        fail(ErrorCode::invalid_operand, "matrix term has wrong size");
    if (a.size() != q_->n())
        fail(ErrorCode::invalid_degree, "degree does not match torus rank");
    if (x.is_zero())
        return;
    auto [it, inserted] = mat_.try_emplace(a, x);
    if (!inserted) {
        it->second += x;
        if (it->second.is_zero())
            mat_.erase(it);
    }
}

void ToroidalElement::add_hc1(const HC1Element& h) { hc_ += h; }

void ToroidalElement::add_derivation(std::size_t i, const Cyclotomic& c) {
    if (i >= der_.size())
        fail(ErrorCode::invalid_argument, "derivation index out of range");
    der_[i] += c;
}

void ToroidalElement::check_compatible(const ToroidalElement& o) const {
    if (d_ != o.d_)
        fail(ErrorCode::invalid_operand, "operands have different matrix sizes");
    require_same_torus(q_, o.q_);
}

ToroidalElement& ToroidalElement::operator+=(const ToroidalElement& o) {
    check_compatible(o);
    for (const auto& [a, x] : o.mat_)
        add_matrix(a, x);
    hc_ += o.hc_;
    for (std::size_t i = 0; i < der_.size(); ++i)
        der_[i] += o.der_[i];
    return *this;
}

ToroidalElement& ToroidalElement::operator-=(const ToroidalElement& o) { return *this += -o; }

ToroidalElement& ToroidalElement::operator*=(const Cyclotomic& c) {
    if (c.is_zero()) {
        mat_.clear();
        hc_ = HC1Element(q_);
        for (auto& k : der_)
            k = Cyclotomic();
        return *this;
    }
    for (auto& [a, x] : mat_)
        x *= c;
    hc_ *= c;
    for (auto& k : der_)
        k *= c;
    return *this;
}

ToroidalElement ToroidalElement::operator-() const {
    ToroidalElement out = *this;
    return out *= Cyclotomic(-1L);
}

bool operator==(const ToroidalElement& a, const ToroidalElement& b) {
    return a.d_ == b.d_ && a.mat_ == b.mat_ && a.hc_ == b.hc_ && a.der_ == b.der_;
}

std::string ToroidalElement::to_string() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        os << (first ? "" : " + ");
        first = false;
    };
    for (const auto& [a, x] : mat_) {
        sep();
        os << x.to_string() << "*t^" << a.to_string();
    }
    if (!hc_.is_zero()) {
        sep();
        os << hc_.to_string();
    }
    for (std::size_t i = 0; i < der_.size(); ++i)
        if (!der_[i].is_zero()) {
            sep();
            os << "(" << der_[i] << ")*d" << i + 1;
        }
    return os.str();
}

ToroidalElement bracket(const ToroidalElement& x, const ToroidalElement& y) {
    if (x.rank_d() != y.rank_d())
        fail(ErrorCode::invalid_operand, "operands have different matrix sizes");
    require_same_torus(x.torus(), y.torus());
    const QMatrixPtr& q = x.torus();
    const std::size_t n = q->n();
    ToroidalElement out(q, x.rank_d());

    for (const auto& [a, xa] : x.matpart())
        for (const auto& [b, yb] : y.matpart()) {
            const Degree ab = a + b;
            const Matrix xy = xa * yb;
            const Matrix yx = yb * xa;
            out.add_matrix(ab, sigma(*q, a, b) * xy - sigma(*q, b, a) * yx);
            const Cyclotomic tr = xy.trace();
            if (!tr.is_zero())
                out.add_hc1(normalize_pair(q, tr, a, b));
        }

    // [d_i, X (x) t^a] = a_i X (x) t^a and [d_i, h] scales h by its degree.
    for (std::size_t i = 0; i < n; ++i) {
        const Cyclotomic& kx = x.derpart()[i];
        const Cyclotomic& ky = y.derpart()[i];
        if (!kx.is_zero()) {
            for (const auto& [b, yb] : y.matpart())
                if (b[i] != 0)
                    out.add_matrix(b, (kx * Cyclotomic(static_cast<long>(b[i]))) * yb);
            out.add_hc1(kx * derivation_act(i, y.hcpart()));
        }
        if (!ky.is_zero()) {
            for (const auto& [a, xa] : x.matpart())
                if (a[i] != 0)
                    out.add_matrix(a, (-ky * Cyclotomic(static_cast<long>(a[i]))) * xa);
            out.add_hc1(-ky * derivation_act(i, x.hcpart()));
        }
    }
    return out;
}

ToroidalElement jacobi_residual(const ToroidalElement& x, const ToroidalElement& y, const ToroidalElement& z) {
    return bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y);
}

TorusElement total_trace(const ToroidalElement& x) {
    TorusElement tr(x.torus());
    for (const auto& [a, xa] : x.matpart())
        tr.add_term(a, xa.trace());
    return tr;
}

bool validate_membership(const ToroidalElement& x) { return split_center(total_trace(x)).first.is_zero(); }

namespace {

Matrix diagonal_part(const Matrix& x) {
    Matrix out(x.rows(), x.cols());
    for (std::size_t k = 0; k < x.rows(); ++k)
        out(k, k) = x(k, k);
    return out;
}

} // namespace

ToroidalElement cartan_component(const ToroidalElement& x) {
    ToroidalElement out(x.torus(), x.rank_d());
    const Degree zero(x.torus()->n());
    if (auto it = x.matpart().find(zero); it != x.matpart().end())
        out.add_matrix(zero, diagonal_part(it->second));
    out.add_hc1(x.hcpart().component(zero));
    for (std::size_t i = 0; i < x.derpart().size(); ++i)
        out.add_derivation(i, x.derpart()[i]);
    return out;
}

ToroidalElement root_component(const ToroidalElement& x, const Root& root) {
    const std::size_t d = x.rank_d();
    const QMatrixPtr& q = x.torus();
    if (root.m.size() != q->n())
        fail(ErrorCode::invalid_degree, "root degree does not match torus rank");
    ToroidalElement out(q, d);
    if (root.is_real()) {
        if (root.i >= d || root.j >= d)
            fail(ErrorCode::invalid_argument, "root index exceeds matrix size");
        if (auto it = x.matpart().find(root.m); it != x.matpart().end()) {
            Matrix e(d, d);
            e(root.i, root.j) = it->second(root.i, root.j);
            out.add_matrix(root.m, e);
        }
        return out;
    }
    if (root.m.is_zero())
        return cartan_component(x);
    if (auto it = x.matpart().find(root.m); it != x.matpart().end())
        out.add_matrix(root.m, diagonal_part(it->second));
    if (q->in_radf(root.m))
        out.add_hc1(x.hcpart().component(root.m));
    return out;
}

std::vector<Root> support_roots(const ToroidalElement& x) {
    const std::size_t d = x.rank_d();
    std::vector<Root> roots;
    std::set<Degree> null_degrees;
    for (const auto& [a, xa] : x.matpart()) {
        bool diag = false;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (!xa(i, j).is_zero()) {
                    if (i == j)
                        diag = true;
                    else
                        roots.push_back(Root::real(i, j, a));
                }
        if (diag && !a.is_zero())
            null_degrees.insert(a);
    }
    for (const auto& [key, c] : x.hcpart().terms())
        if (!key.second.is_zero())
            null_degrees.insert(key.second);
    for (const auto& m : null_degrees)
        roots.push_back(Root::null(m));
    return roots;
}

std::vector<ToroidalElement> cartan_basis(QMatrixPtr q, std::size_t d) {
    std::vector<ToroidalElement> basis;
    const Degree zero(q->n());
    for (std::size_t k = 0; k + 1 < d; ++k) {
        Matrix h(d, d);
        h(k, k) = Cyclotomic(1L);
        h(k + 1, k + 1) = Cyclotomic(-1L);
        basis.push_back(ToroidalElement::matrix_term(q, h, zero));
    }
    for (std::size_t i = 0; i < q->n(); ++i)
        basis.push_back(ToroidalElement::central(q, d, i));
    for (std::size_t i = 0; i < q->n(); ++i)
        basis.push_back(ToroidalElement::derivation(q, d, i));
    return basis;
}

} // namespace qtorus

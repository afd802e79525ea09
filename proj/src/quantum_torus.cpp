#include "qtorus/quantum_torus.hpp"

#include "qtorus/error.hpp"

#include <sstream>

namespace qtorus {

void require_same_torus(const QMatrixPtr& a, const QMatrixPtr& b) {
    if (!a || !b)
        fail(ErrorCode::invalid_operand, "element has no ambient torus");
    if (a != b && !(*a == *b))
        fail(ErrorCode::invalid_operand, "operands live over different quantum tori");
}

TorusElement::TorusElement(QMatrixPtr q) : q_(std::move(q)) {
    if (!q_)
        fail(ErrorCode::invalid_operand, "null torus");
}

TorusElement TorusElement::monomial(QMatrixPtr q, const Degree& a, const Cyclotomic& c) {
    TorusElement x(std::move(q));
    x.add_term(a, c);
    return x;
}

Cyclotomic TorusElement::coefficient(const Degree& a) const {
    auto it = terms_.find(a);
    return it == terms_.end() ? Cyclotomic() : it->second;
}

void TorusElement::add_term(const Degree& a, const Cyclotomic& c) {
    if (a.size() != q_->n())
        fail(ErrorCode::invalid_degree, "degree " + a.to_string() + " does not match torus rank");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(a, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
    require_same_torus(q_, o.q_);
    for (const auto& [a, c] : o.terms_)
        add_term(a, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
    require_same_torus(q_, o.q_);
    for (const auto& [a, c] : o.terms_)
        add_term(a, -c);
    return *this;
}

TorusElement& TorusElement::operator*=(const Cyclotomic& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [a, x] : terms_)
        x *= c;
    return *this;
}

TorusElement TorusElement::operator-() const {
    TorusElement out = *this;
    for (auto& [a, x] : out.terms_)
        x = -x;
    return out;
}

bool operator==(const TorusElement& a, const TorusElement& b) {
    if (a.terms_.size() != b.terms_.size())
        return false;
    auto it = b.terms_.begin();
    for (const auto& [deg, c] : a.terms_) {
        if (deg != it->first || c != it->second)
            return false;
        ++it;
    }
    return true;
}

std::string TorusElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c << ")*t^" << a.to_string();
    }
    return os.str();
}

TorusElement multiply(const TorusElement& x, const TorusElement& y) {
    require_same_torus(x.torus(), y.torus());
    const QMatrix& q = *x.torus();
    TorusElement out(x.torus());
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms())
            out.add_term(a + b, ca * cb * sigma(q, a, b));
    return out;
}

TorusElement commutator(const TorusElement& x, const TorusElement& y) {
    require_same_torus(x.torus(), y.torus());
    const QMatrix& q = *x.torus();
    TorusElement out(x.torus());
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            const std::int64_t sab = q.sigma_exponent(a, b);
            const std::int64_t sba = q.sigma_exponent(b, a);
            if (sab == sba)
                continue;
            out.add_term(a + b, ca * cb *
                                    (Cyclotomic::root_of_unity(q.conductor(), sab) -
                                     Cyclotomic::root_of_unity(q.conductor(), sba)));
        }
    return out;
}

TorusElement monomial_inverse(const QMatrixPtr& q, const Cyclotomic& c, const Degree& a) {
    if (c.is_zero())
        fail(ErrorCode::division_by_zero, "monomial_inverse: zero coefficient");
    return TorusElement::monomial(q, -a, c.inverse() * sigma(*q, a, a));
}

std::pair<TorusElement, TorusElement> split_center(const TorusElement& x) {
    TorusElement z(x.torus()), c(x.torus());
    for (const auto& [a, coef] : x.terms())
        (x.torus()->in_radf(a) ? z : c).add_term(a, coef);
    return {z, c};
}

} // namespace qtorus

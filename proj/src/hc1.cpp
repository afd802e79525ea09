#include "qtorus/hc1.hpp"

#include "qtorus/error.hpp"
#include "qtorus/linalg.hpp"

#include <sstream>

namespace qtorus {

namespace {

std::size_t pivot_index(const Degree& r) {
    for (std::size_t i = 0; i < r.size(); ++i)
        if (r[i] != 0)
            return i;
    return r.size();
}

} // namespace

HC1Element::HC1Element(QMatrixPtr q) : q_(std::move(q)) {
    if (!q_)
        fail(ErrorCode::invalid_operand, "null torus");
}

HC1Element HC1Element::central(QMatrixPtr q, std::size_t i) {
    HC1Element x(q);
    x.add_symbol(i, Degree(q->n()), Cyclotomic(1L));
    return x;
}

void HC1Element::add_basis(const Key& key, const Cyclotomic& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

void HC1Element::add_symbol(std::size_t i, const Degree& r, const Cyclotomic& c) {
    if (i >= q_->n())
        fail(ErrorCode::invalid_argument, "HC1 symbol index out of range");
    if (!q_->in_radf(r))
        fail(ErrorCode::invalid_operand, "HC1 symbol degree " + r.to_string() + " is not in rad f");
    if (c.is_zero())
        return;
    const std::size_t p = pivot_index(r);
    if (p == r.size() || i != p) {
        add_basis({i, r}, c);
        return;
    }
    // B_p = -(1/r_p) sum_{k != p} r_k B_k
    const Rational inv = Rational(-1) / Rational(static_cast<long>(r[p]));
    for (std::size_t k = 0; k < r.size(); ++k)
        if (k != p && r[k] != 0)
            add_basis({k, r}, c * Cyclotomic(inv * static_cast<long>(r[k])));
}

HC1Element HC1Element::component(const Degree& r) const {
    HC1Element out(q_);
    for (const auto& [key, c] : terms_)
        if (key.second == r)
            out.terms_.emplace(key, c);
    return out;
}

HC1Element& HC1Element::operator+=(const HC1Element& o) {
    if (q_ != o.q_ && !(*q_ == *o.q_))
        fail(ErrorCode::invalid_operand, "HC1 operands over different tori");
    for (const auto& [key, c] : o.terms_)
        add_basis(key, c);
    return *this;
}

HC1Element& HC1Element::operator-=(const HC1Element& o) { return *this += -o; }

HC1Element& HC1Element::operator*=(const Cyclotomic& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [key, x] : terms_)
        x *= c;
    return *this;
}

HC1Element HC1Element::operator-() const {
    HC1Element out = *this;
    for (auto& [key, x] : out.terms_)
        x = -x;
    return out;
}

bool operator==(const HC1Element& a, const HC1Element& b) {
    if (a.terms_.size() != b.terms_.size())
        return false;
    auto it = b.terms_.begin();
    for (const auto& [key, c] : a.terms_) {
        if (key != it->first || c != it->second)
            return false;
        ++it;
    }
    return true;
}

std::string HC1Element::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        os << (first ? "" : " + ") << "(" << c << ")*B" << key.first + 1 << key.second.to_string();
        first = false;
    }
    return os.str();
}

HC1Element normalize_pair(const QMatrixPtr& q, const Cyclotomic& c, const Degree& a, const Degree& b) {
    HC1Element out(q);
    const Degree r = a + b;
    if (!q->in_radf(r) || c.is_zero())
        return out;
    const Cyclotomic s = c * sigma(*q, a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            out.add_symbol(i, r, s * Cyclotomic(static_cast<long>(a[i])));
    return out;
}

std::size_t graded_dim(const QMatrix& q, const Degree& r) {
    if (!q.in_radf(r))
        return 0;
    return r.is_zero() ? q.n() : q.n() - 1;
}

namespace {

bool in_box(const Degree& a, std::int64_t bound) { return a.max_abs() <= bound; }

// Enumerates every degree in the box [-bound, bound]^n.
std::vector<Degree> box(std::size_t n, std::int64_t bound) {
    std::vector<Degree> out;
    Degree cur(n);
    for (std::size_t i = 0; i < n; ++i)
        cur[i] = -bound;
    while (true) {
        out.push_back(cur);
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++cur[i] <= bound)
                break;
            cur[i] = -bound;
        }
        if (i == n)
            break;
    }
    return out;
}

} // namespace

std::size_t bruteforce_dim(const QMatrix& q, const Degree& r, std::int64_t bound) {
    if (bound < 0)
        fail(ErrorCode::invalid_argument, "bruteforce_dim: bound must be non-negative");
    const std::size_t n = q.n();
    if (r.size() != n)
        fail(ErrorCode::invalid_degree, "degree does not match torus rank");
    // Column index of the tensor t^a (x) t^{r-a}, keyed by the first factor.
    std::map<Degree, std::size_t> column;
    const std::vector<Degree> cube = box(n, bound);
    for (const auto& a : cube)
        if (in_box(r - a, bound))
            column.emplace(a, column.size());

    SparseEchelon elim;
    auto add_entry = [](SparseEchelon::Row& row, std::size_t col, const Cyclotomic& c) {
        auto [it, inserted] = row.try_emplace(col, c);
        if (!inserted)
            it->second += c;
        if (it->second.is_zero())
            row.erase(it);
    };
    const Cyclotomic one(1L);
    for (const auto& [a, col] : column) {
        SparseEchelon::Row row;
        add_entry(row, col, one);
        add_entry(row, column.at(r - a), one);
        if (!row.empty())
            elim.insert(std::move(row));
    }
    auto root = [&](std::int64_t e) { return Cyclotomic::root_of_unity(q.conductor(), e); };
    for (const auto& a : cube)
        for (const auto& b : cube) {
            const Degree c = r - a - b;
            if (!in_box(c, bound))
                continue;
            // xy(x)z + yz(x)x + zx(x)y with x = t^a, y = t^b, z = t^c
            auto ab = column.find(a + b), bc = column.find(b + c), ca = column.find(c + a);
            if (ab == column.end() || bc == column.end() || ca == column.end())
                continue;
            SparseEchelon::Row row;
            add_entry(row, ab->second, root(q.sigma_exponent(a, b)));
            add_entry(row, bc->second, root(q.sigma_exponent(b, c)));
            add_entry(row, ca->second, root(q.sigma_exponent(c, a)));
            if (!row.empty())
                elim.insert(std::move(row));
        }
    // The commutator map t^a (x) t^b -> (sigma(a,b) - sigma(b,a)) t^r has rank
    // one on the quotient exactly when it is nonzero on some tensor.
    std::size_t commutator_rank = 0;
    for (const auto& [a, col] : column)
        if (q.sigma_exponent(a, r - a) != q.sigma_exponent(r - a, a)) {
            commutator_rank = 1;
            break;
        }
    const std::size_t quotient = column.size() - elim.rank();
    if (quotient < commutator_rank)
        fail(ErrorCode::internal_inconsistency, "commutator map does not vanish on J");
    return quotient - commutator_rank;
}

HC1Element derivation_act(std::size_t i, const HC1Element& x) {
    if (i >= x.torus()->n())
        fail(ErrorCode::invalid_argument, "derivation index out of range");
    HC1Element out(x.torus());
    for (const auto& [key, c] : x.terms())
        if (key.second[i] != 0)
            out.add_symbol(key.first, key.second, c * Cyclotomic(static_cast<long>(key.second[i])));
    return out;
}

} // namespace qtorus

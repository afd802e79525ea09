#include "qtorus/graded_modules.hpp"

#include "qtorus/error.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace qtorus {

namespace {

struct SparseOp {
    std::size_t rows = 0;
    std::vector<std::tuple<std::size_t, std::size_t, Cyclotomic>> entries;

    explicit SparseOp(const Matrix& m) : rows(m.rows()) {
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero())
                    entries.emplace_back(i, j, m(i, j));
    }

    Vector apply(const Vector& v) const {
        Vector out(rows);
        for (const auto& [i, j, c] : entries)
            if (!v[j].is_zero())
                out[i] += c * v[j];
        return out;
    }
};

Matrix direct_sum(const std::vector<Matrix>& blocks) {
    std::size_t size = 0;
    for (const auto& b : blocks)
        size += b.rows();
    Matrix out(size, size);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return out;
}

// M - (tr M / N) I, the projection gl_N -> sl_N.
Matrix traceless(Matrix m) {
    const Cyclotomic t = m.trace();
    if (t.is_zero())
        return m;
    const Cyclotomic shift = t / Cyclotomic(static_cast<long>(m.rows()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, i) -= shift;
    return m;
}

// Basis of sl_N: E_ij (i != j) in row-major order, then E_kk - E_{k+1,k+1}.
std::size_t sl_dim(std::size_t n) { return n * n - 1; }

Vector sl_coordinates(const Matrix& b) {
    const std::size_t n = b.rows();
    Vector out;
    out.reserve(sl_dim(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                out.push_back(b(i, j));
    Cyclotomic partial;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        partial += b(k, k);
        out.push_back(partial);
    }
    return out;
}

Matrix sl_basis_element(std::size_t n, std::size_t index) {
    const std::size_t off = n * (n - 1);
    if (index < off) {
        const std::size_t i = index / (n - 1);
        std::size_t j = index % (n - 1);
        if (j >= i)
            ++j;
        return Matrix::unit(n, n, i, j);
    }
    const std::size_t k = index - off;
    Matrix h = Matrix::unit(n, n, k, k);
    h(k + 1, k + 1) = Cyclotomic(-1L);
    return h;
}

Matrix adjoint_image(const Matrix& m) {
    const std::size_t n = m.rows();
    Matrix out(sl_dim(n), sl_dim(n));
    for (std::size_t c = 0; c < sl_dim(n); ++c) {
        const Vector col = sl_coordinates(lie_bracket(m, sl_basis_element(n, c)));
        for (std::size_t r = 0; r < col.size(); ++r)
            out(r, c) = col[r];
    }
    return out;
}

Matrix coroot(std::size_t d, std::size_t k) {
    Matrix h = Matrix::unit(d, d, k, k);
    h(k + 1, k + 1) = Cyclotomic(-1L);
    return h;
}

std::vector<Degree> box(std::size_t n, std::int64_t lo, std::int64_t hi) {
    std::vector<Degree> out;
    if (hi < lo)
        return out;
    Degree a(n);
    for (std::size_t j = 0; j < n; ++j)
        a[j] = lo;
    while (true) {
        out.push_back(a);
        std::size_t j = 0;
        while (j < n && a[j] == hi) {
            a[j] = lo;
            ++j;
        }
        if (j == n)
            break;
        ++a[j];
    }
    return out;
}

std::vector<Vector> columns_kernel(const Matrix& op, const std::vector<Vector>& basis, std::size_t dim) {
    Matrix m(dim, basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
        const Vector img = op * basis[c];
        for (std::size_t r = 0; r < dim; ++r)
            m(r, c) = img[r];
    }
    std::vector<Vector> out;
    for (const Vector& coeffs : nullspace(m)) {
        Vector v(dim);
        for (std::size_t c = 0; c < basis.size(); ++c)
            if (!coeffs[c].is_zero())
                v = add(v, scaled(basis[c], coeffs[c]));
        out.push_back(std::move(v));
    }
    return out;
}

void require_module_vector(const FinRep& rep, const Vector& v) {
    if (v.size() != rep.dim())
        fail(ErrorCode::invalid_argument, "vector length does not match the module dimension");
}

// Per-grade spans of the window closure.
class WindowClosure {
public:
    WindowClosure(const FinRep& rep, std::int64_t bound)
        : rep_(rep), grades_(box(rep.torus()->n(), -bound, bound)) {
        for (std::size_t g = 0; g < grades_.size(); ++g) {
            index_.emplace(grades_[g], g);
            spans_.emplace_back(rep.dim());
        }
    }

    const std::vector<Degree>& grades() const { return grades_; }
    const EchelonBasis& span(std::size_t g) const { return spans_[g]; }
    std::size_t index(const Degree& m) const {
        auto it = index_.find(m);
        if (it == index_.end())
            fail(ErrorCode::invalid_argument, "grade " + m.to_string() + " lies outside the window");
        return it->second;
    }

    // Adds v to slice g without closing up.
    void absorb(std::size_t g, const Vector& v) { spans_[g].insert(v); }

    void generate(const GradedVector& seed) {
        std::vector<std::pair<std::size_t, Vector>> queue;
        for (const auto& [m, w] : seed) {
            require_module_vector(rep_, w);
            const std::size_t g = index(m);
            if (!is_zero(w) && spans_[g].insert(w))
                queue.emplace_back(g, w);
        }
        const std::size_t full = rep_.dim();
        while (!queue.empty()) {
            auto [g, w] = std::move(queue.back());
            queue.pop_back();
            for (std::size_t h = 0; h < grades_.size(); ++h) {
                if (spans_[h].size() == full)
                    continue;
                for (const SparseOp& op : ops(grades_[h] - grades_[g])) {
                    Vector y = op.apply(w);
                    if (is_zero(y) || !spans_[h].insert(y))
                        continue;
                    queue.emplace_back(h, std::move(y));
                    if (spans_[h].size() == full)
                        break;
                }
            }
        }
    }

private:
    const std::vector<SparseOp>& ops(const Degree& a) {
        auto it = ops_.find(a);
        if (it != ops_.end())
            return it->second;
        std::vector<SparseOp> list;
        const std::size_t d = rep_.rank_d();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                SparseOp op(rep_.term(Matrix::unit(d, d, i, j), a));
                if (!op.entries.empty())
                    list.push_back(std::move(op));
            }
        return ops_.emplace(a, std::move(list)).first->second;
    }

    const FinRep& rep_;
    std::vector<Degree> grades_;
    std::map<Degree, std::size_t> index_;
    std::vector<EchelonBasis> spans_;
    std::map<Degree, std::vector<SparseOp>> ops_;
};

// Eigenvalues lambda(alpha_k^vee) of a joint weight vector, or empty.
std::vector<Rational> weight_of(const FinRep& rep, const Vector& w) {
    std::vector<Rational> values;
    if (is_zero(w))
        return values;
    std::size_t pivot = 0;
    while (w[pivot].is_zero())
        ++pivot;
    const std::size_t d = rep.rank_d();
    for (std::size_t k = 0; k + 1 < d; ++k) {
        const Vector hw = rep.term(coroot(d, k), Degree(rep.torus()->n())) * w;
        const Cyclotomic ratio = hw[pivot] / w[pivot];
        if (!ratio.is_rational() || scaled(w, ratio) != hw)
            return {};
        values.push_back(ratio.rational_value());
    }
    return values;
}

WindowReport window_report(const WindowClosure& c, std::int64_t bound, const Degree& seed_grade,
                           std::vector<Rational> seed_weight) {
    WindowReport r;
    r.bound = bound;
    r.seed_grade = seed_grade;
    r.seed_weight = std::move(seed_weight);
    for (std::size_t g = 0; g < c.grades().size(); ++g)
        r.dims.emplace(c.grades()[g], c.span(g).size());
    return r;
}

} // namespace

std::vector<RepPart> parse_rep_spec(const std::string& spec) {
    std::vector<RepPart> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, '+')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
                   item.end());
        RepPart part;
        std::string name = item;
        if (auto colon = item.find(':'); colon != std::string::npos) {
            name = item.substr(0, colon);
            const std::string idx = item.substr(colon + 1);
            if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](unsigned char ch) { return std::isdigit(ch); }))
                fail(ErrorCode::invalid_argument, "bad block index in representation '" + item + "'");
            part.block = std::stoul(idx);
        }
        if (name == "natural")
            part.kind = RepPart::Kind::natural;
        else if (name == "trivial")
            part.kind = RepPart::Kind::trivial;
        else if (name == "adjoint")
            part.kind = RepPart::Kind::adjoint;
        else if (name == "tensor")
            part.kind = RepPart::Kind::tensor;
        else
            fail(ErrorCode::invalid_argument, "unknown representation '" + item + "'");
        parts.push_back(part);
    }
    if (parts.empty())
        fail(ErrorCode::invalid_argument, "empty representation");
    return parts;
}

std::string to_string(const RepPart& part) {
    switch (part.kind) {
    case RepPart::Kind::trivial:
        return "trivial";
    case RepPart::Kind::tensor:
        return "tensor";
    case RepPart::Kind::natural:
        return "natural:" + std::to_string(part.block);
    case RepPart::Kind::adjoint:
        return "adjoint:" + std::to_string(part.block);
    }
    return "?";
}

FinRep::FinRep(Pullback pullback, std::size_t d, std::vector<RepPart> parts)
    : pullback_(std::move(pullback)), d_(d), parts_(std::move(parts)), dim_(0) {
    if (d_ == 0)
        fail(ErrorCode::invalid_argument, "matrix size d must be positive");
    if (parts_.empty())
        fail(ErrorCode::invalid_argument, "empty representation");
    for (std::size_t t = 0; t < pullback_.reps.size(); ++t)
        for (std::size_t b = 0; b < pullback_.reps[t].size(); ++b)
            blocks_.emplace_back(t, b);
    for (const RepPart& p : parts_) {
        if ((p.kind == RepPart::Kind::natural || p.kind == RepPart::Kind::adjoint) && p.block >= blocks_.size())
            fail(ErrorCode::invalid_argument, "block index " + std::to_string(p.block) + " out of range (" +
                                                  std::to_string(blocks_.size()) + " blocks)");
        switch (p.kind) {
        case RepPart::Kind::trivial:
            dim_ += 1;
            break;
        case RepPart::Kind::natural:
            dim_ += d_ * block(p.block).size();
            break;
        case RepPart::Kind::adjoint:
            dim_ += sl_dim(d_ * block(p.block).size());
            break;
        case RepPart::Kind::tensor: {
            std::size_t prod = 1;
            for (std::size_t b = 0; b < blocks_.size(); ++b)
                prod *= d_ * block(b).size();
            dim_ += prod;
            break;
        }
        }
    }
}

FinRep::FinRep(const FinRep& o)
    : pullback_(o.pullback_), d_(o.d_), parts_(o.parts_), blocks_(o.blocks_), dim_(o.dim_) {}

const MatrixRep& FinRep::block(std::size_t b) const {
    const auto [t, k] = blocks_[b];
    return pullback_.reps[t][k];
}

Matrix FinRep::block_monomial(std::size_t b, const Degree& a) const {
    const std::lock_guard<std::mutex> lock(cache_mutex_);
    auto key = std::make_pair(b, a);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(std::move(key), block(b).monomial(a)).first;
    return it->second;
}

Matrix FinRep::part_image(const RepPart& part, const Matrix& x, const Degree& a) const {
    switch (part.kind) {
    case RepPart::Kind::trivial:
        return Matrix(1, 1);
    case RepPart::Kind::natural:
        return traceless(kron(x, block_monomial(part.block, a)));
    case RepPart::Kind::adjoint:
        return adjoint_image(kron(x, block_monomial(part.block, a)));
    case RepPart::Kind::tensor: {
        std::vector<std::size_t> sizes;
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            sizes.push_back(d_ * block(b).size());
        std::size_t total = 1;
        for (auto s : sizes)
            total *= s;
        Matrix out(total, total);
        for (std::size_t b = 0; b < blocks_.size(); ++b) {
            std::size_t left = 1, right = 1;
            for (std::size_t c = 0; c < b; ++c)
                left *= sizes[c];
            for (std::size_t c = b + 1; c < sizes.size(); ++c)
                right *= sizes[c];
            const Matrix factor = traceless(kron(x, block_monomial(b, a)));
            out += kron(kron(Matrix::identity(left), factor), Matrix::identity(right));
        }
        return out;
    }
    }
    fail(ErrorCode::internal_inconsistency, "unknown representation kind");
}

Matrix FinRep::term(const Matrix& x, const Degree& a) const {
    if (x.rows() != d_ || x.cols() != d_)
        fail(ErrorCode::invalid_operand, "matrix size does not match d");
    if (a.size() != torus()->n())
        fail(ErrorCode::invalid_degree, "degree does not match torus rank");
    std::vector<Matrix> blocks;
    blocks.reserve(parts_.size());
    for (const RepPart& p : parts_)
        blocks.push_back(part_image(p, x, a));
    return direct_sum(blocks);
}

Matrix FinRep::act(const ToroidalElement& x) const {
    if (x.torus() != torus() && !(*x.torus() == *torus()))
        fail(ErrorCode::invalid_operand, "element lives on a different torus");
    if (x.rank_d() != d_)
        fail(ErrorCode::invalid_operand, "element has the wrong matrix size");
    for (const auto& k : x.derpart())
        if (!k.is_zero())
            fail(ErrorCode::not_in_domain, "derivations do not act on the finite module");
    Matrix out(dim_, dim_);
    for (const auto& [a, m] : x.matpart())
        out += term(m, a);
    return out;
}

std::vector<Degree> FinRep::span_degrees() const {
    const std::size_t n = torus()->n();
    std::vector<Degree> out{Degree(n)};
    for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t len =
            static_cast<std::int64_t>(pullback_.points.values[j].size()) * torus()->central_powers()[j];
        std::vector<Degree> next;
        for (const auto& a : out)
            for (std::int64_t s = 0; s < len; ++s) {
                Degree b = a;
                b[j] = s;
                next.push_back(b);
            }
        out = std::move(next);
    }
    return out;
}

FinRep make_rep(const QMatrixPtr& q, std::size_t d, const EvalPoints& pts, const std::string& spec) {
    return FinRep(build_pullback(q, pts), d, parse_rep_spec(spec));
}

GradedVector act(const FinRep& rep, const ToroidalElement& x, const GradedVector& v) {
    if (x.rank_d() != rep.rank_d())
        fail(ErrorCode::invalid_operand, "element has the wrong matrix size");
    const std::size_t n = rep.torus()->n();
    GradedVector out;
    auto accumulate = [&](const Degree& m, const Vector& y) {
        if (is_zero(y))
            return;
        auto [it, fresh] = out.emplace(m, y);
        if (!fresh)
            it->second = add(it->second, y);
    };
    for (const auto& [m, w] : v) {
        require_module_vector(rep, w);
        if (m.size() != n)
            fail(ErrorCode::invalid_degree, "grade does not match torus rank");
        for (const auto& [a, xa] : x.matpart())
            accumulate(m + a, rep.term(xa, a) * w);
        Cyclotomic grade;
        for (std::size_t i = 0; i < n; ++i)
            grade += x.derpart()[i] * Cyclotomic(static_cast<long>(m[i]));
        if (!grade.is_zero())
            accumulate(m, scaled(w, grade));
    }
    std::erase_if(out, [](const auto& kv) { return is_zero(kv.second); });
    return out;
}

namespace {

std::vector<Vector> upper_kernel(const FinRep& rep, const std::vector<Degree>& degrees) {
    const std::size_t d = rep.rank_d();
    std::vector<Matrix> maps;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            for (const auto& a : degrees)
                maps.push_back(rep.term(Matrix::unit(d, d, i, j), a));
    if (maps.empty()) {
        std::vector<Vector> all;
        for (std::size_t i = 0; i < rep.dim(); ++i) {
            Vector e(rep.dim());
            e[i] = Cyclotomic(1L);
            all.push_back(std::move(e));
        }
        return all;
    }
    return common_kernel(maps, rep.dim());
}

} // namespace

std::vector<Vector> vplus(const FinRep& rep) { return upper_kernel(rep, rep.span_degrees()); }

std::vector<Vector> vplus_cosets(const FinRep& rep) {
    return upper_kernel(rep, rep.torus()->radf().coset_representatives());
}

std::vector<WeightSpace> weight_spaces(const FinRep& rep, const std::vector<Vector>& subspace) {
    const std::size_t dim = rep.dim(), d = rep.rank_d(), n = rep.torus()->n();
    std::vector<Vector> start = subspace;
    if (start.empty())
        for (std::size_t i = 0; i < dim; ++i) {
            Vector e(dim);
            e[i] = Cyclotomic(1L);
            start.push_back(std::move(e));
        }
    for (const auto& v : start)
        require_module_vector(rep, v);
    std::vector<std::pair<std::vector<Rational>, std::vector<Vector>>> spaces{{{}, start}};
    const auto bound = static_cast<long>(dim);
    for (std::size_t k = 0; k + 1 < d; ++k) {
        const Matrix h = rep.term(coroot(d, k), Degree(n));
        std::vector<std::pair<std::vector<Rational>, std::vector<Vector>>> next;
        for (const auto& [values, basis] : spaces) {
            std::size_t found = 0;
            for (long lambda = -bound; lambda <= bound && found < basis.size(); ++lambda) {
                const Matrix shifted = h - Cyclotomic(lambda) * Matrix::identity(dim);
                auto eig = columns_kernel(shifted, basis, dim);
                if (eig.empty())
                    continue;
                found += eig.size();
                auto vals = values;
                vals.emplace_back(lambda);
                next.emplace_back(std::move(vals), std::move(eig));
            }
            if (found != basis.size())
                fail(ErrorCode::internal_inconsistency, "Cartan action is not diagonalizable with integral eigenvalues");
        }
        spaces = std::move(next);
    }
    std::vector<WeightSpace> out;
    for (auto& [values, basis] : spaces) {
        WeightSpace w;
        w.values = values;
        w.weight = d >= 2 ? Weight::from_coroot_values(n, values) : Weight::zero(1, n);
        w.basis = std::move(basis);
        out.push_back(std::move(w));
    }
    return out;
}

std::size_t integrability_index(const FinRep& rep, const Matrix& x, const Degree& a) {
    if (x.rows() != rep.rank_d() || x.cols() != rep.rank_d())
        fail(ErrorCode::invalid_operand, "matrix size does not match d");
    if (!x.pow(static_cast<std::int64_t>(rep.rank_d())).is_zero())
        fail(ErrorCode::invalid_argument, "matrix is not nilpotent");
    const Matrix m = rep.term(x, a);
    Matrix power = m;
    for (std::size_t k = 1; k <= rep.dim() + 1; ++k) {
        if (power.is_zero())
            return k;
        power = power * m;
    }
    fail(ErrorCode::not_integrable, "image of a nilpotent element is not nilpotent");
}

std::vector<Vector> lambda_series(const FinRep& rep, std::size_t beta, std::size_t j, const Vector& v,
                                  std::size_t truncation) {
    if (truncation < 1)
        fail(ErrorCode::invalid_truncation, "truncation must be at least 1");
    const std::size_t d = rep.rank_d(), n = rep.torus()->n();
    if (beta + 1 >= d)
        fail(ErrorCode::invalid_argument, "simple root index out of range");
    if (j >= n)
        fail(ErrorCode::invalid_argument, "direction index out of range");
    require_module_vector(rep, v);
    const Matrix h = coroot(d, beta);
    const std::int64_t period = rep.torus()->central_powers()[j];
    std::vector<Matrix> modes{Matrix()};
    for (std::size_t k = 1; k <= truncation; ++k)
        modes.push_back(rep.term(h, static_cast<std::int64_t>(k) * period * Degree::unit(n, j)));
    std::vector<Vector> series{v};
    for (std::size_t m = 1; m <= truncation; ++m) {
        Vector acc(rep.dim());
        for (std::size_t k = 1; k <= m; ++k)
            acc = add(acc, modes[k] * series[m - k]);
        series.push_back(scaled(acc, Cyclotomic(Rational(-1, static_cast<long>(m)))));
    }
    return series;
}

std::vector<LoopCheck> loop_checks(const FinRep& rep, std::size_t truncation) {
    if (truncation < 1)
        fail(ErrorCode::invalid_truncation, "truncation must be at least 1");
    const std::size_t d = rep.rank_d(), n = rep.torus()->n();
    std::vector<LoopCheck> out;
    for (const WeightSpace& w : weight_spaces(rep, vplus(rep)))
        for (const Vector& v : w.basis)
            for (std::size_t beta = 0; beta + 1 < d; ++beta)
                for (std::size_t j = 0; j < n; ++j) {
                    LoopCheck c;
                    c.beta = beta;
                    c.j = j;
                    c.lambda_value = w.values[beta];
                    const std::int64_t period = rep.torus()->central_powers()[j];
                    c.h_modes_vanish = true;
                    for (std::size_t k = 1; k <= truncation; ++k) {
                        const Degree a = static_cast<std::int64_t>(k) * period * Degree::unit(n, j);
                        if (!is_zero(rep.term(coroot(d, beta), a) * v))
                            c.h_modes_vanish = false;
                    }
                    const auto series = lambda_series(rep, beta, j, v, truncation);
                    c.lambda_modes_vanish = true;
                    c.bound_holds = true;
                    for (std::size_t m = 1; m <= truncation; ++m) {
                        const bool zero = is_zero(series[m]);
                        if (!zero)
                            c.lambda_modes_vanish = false;
                        if (!zero && Rational(static_cast<long>(m)) > c.lambda_value)
                            c.bound_holds = false;
                    }
                    c.forward = c.lambda_value != 0 || (c.h_modes_vanish && c.lambda_modes_vanish);
                    c.converse = !c.h_modes_vanish || c.lambda_value == 0;
                    out.push_back(std::move(c));
                }
    return out;
}

CentralOperator highest_central_operator(const FinRep& rep, std::size_t i, std::int64_t max_k) {
    const std::size_t d = rep.rank_d(), n = rep.torus()->n();
    if (i >= n)
        fail(ErrorCode::invalid_argument, "direction index out of range");
    if (max_k < 1)
        fail(ErrorCode::invalid_argument, "search bound must be positive");
    CentralOperator out;
    out.i = i;
    const auto vp = vplus(rep);
    out.vplus_dim = vp.size();
    if (vp.empty())
        return out;
    const std::int64_t period = rep.torus()->central_powers()[i];
    for (std::int64_t k = 1; k <= max_k; ++k)
        for (std::size_t h = 0; h + 1 < d; ++h) {
            const Degree a = k * period * Degree::unit(n, i);
            const Matrix z = rep.term(coroot(d, h), a);
            Matrix images(rep.dim(), vp.size());
            for (std::size_t c = 0; c < vp.size(); ++c) {
                const Vector y = z * vp[c];
                for (std::size_t r = 0; r < y.size(); ++r)
                    images(r, c) = y[r];
            }
            const std::size_t rk = rank(images);
            if (rk == vp.size()) {
                out.found = true;
                out.k = k;
                out.h = h;
                out.degree = a;
                out.rank = rk;
                return out;
            }
            out.rank = std::max(out.rank, rk);
        }
    return out;
}

WindowReport submodule_window(const FinRep& rep, const GradedVector& seed, std::int64_t bound) {
    if (bound < 0)
        fail(ErrorCode::invalid_argument, "window bound must be non-negative");
    WindowClosure closure(rep, bound);
    closure.generate(seed);
    Degree grade(rep.torus()->n());
    std::vector<Rational> weight;
    for (const auto& [m, w] : seed)
        if (!is_zero(w)) {
            grade = m;
            weight = weight_of(rep, w);
            break;
        }
    return window_report(closure, bound, grade, std::move(weight));
}

Decomposition decompose_window(const FinRep& rep, std::int64_t bound) {
    if (bound < 2)
        fail(ErrorCode::invalid_argument, "window bound must be at least 2");
    const std::size_t n = rep.torus()->n();
    std::vector<Degree> seeds = box(n, -1, 1);
    std::stable_sort(seeds.begin(), seeds.end(),
                     [](const Degree& a, const Degree& b) { return a.max_abs() < b.max_abs(); });
    const auto spaces = weight_spaces(rep, vplus(rep));
    const std::int64_t radius = std::max<std::int64_t>(bound - 2, 0);
    const auto offsets = box(n, -radius, radius);
    const auto shifts = box(n, -1, 1);

    // Same seed weight and the same slice dimensions after some grade shift.
    auto equivalent = [&](const WindowReport& a, const WindowReport& b) {
        if (a.seed_weight != b.seed_weight)
            return false;
        for (const Degree& s : shifts) {
            bool same = true;
            for (const Degree& off : offsets) {
                auto ia = a.dims.find(a.seed_grade + off), ib = b.dims.find(b.seed_grade + off + s);
                if (ia == a.dims.end() || ib == b.dims.end() || ia->second != ib->second) {
                    same = false;
                    break;
                }
            }
            if (same)
                return true;
        }
        return false;
    };

    WindowClosure total(rep, bound);
    std::size_t component_dims = 0;
    Decomposition out;
    out.bound = bound;
    std::vector<std::size_t> representatives;
    for (const Degree& m : seeds)
        for (const WeightSpace& w : spaces)
            for (const Vector& s : w.basis) {
                if (total.span(total.index(m)).contains(s))
                    continue;
                WindowClosure part(rep, bound);
                part.generate({{m, s}});
                out.components.push_back(window_report(part, bound, m, w.values));
                std::size_t cls = representatives.size();
                for (std::size_t r = 0; r < representatives.size(); ++r)
                    if (equivalent(out.components[representatives[r]], out.components.back())) {
                        cls = r;
                        break;
                    }
                if (cls == representatives.size())
                    representatives.push_back(out.components.size() - 1);
                out.class_of.push_back(cls);
                for (std::size_t g = 0; g < part.grades().size(); ++g) {
                    component_dims += part.span(g).size();
                    for (const Vector& r : part.span(g).rows())
                        total.absorb(g, r);
                }
            }
    out.classes = representatives.size();
    std::size_t union_dims = 0;
    out.covers_interior = true;
    for (std::size_t g = 0; g < total.grades().size(); ++g) {
        union_dims += total.span(g).size();
        if (total.grades()[g].max_abs() <= bound - 1 && total.span(g).size() != rep.dim())
            out.covers_interior = false;
    }
    out.direct = union_dims == component_dims;
    return out;
}

bool weyl_multiplicity_check(const FinRep& rep) {
    const std::size_t d = rep.rank_d(), n = rep.torus()->n();
    if (d < 2)
        return true;
    std::map<std::vector<Rational>, std::size_t> mult;
    for (const auto& w : weight_spaces(rep))
        mult[w.values] += w.basis.size();
    const auto roots = real_roots(d, n, 1);
    for (const auto& [values, count] : mult)
        for (const Degree& m : box(n, -1, 1)) {
            const Weight mu = Weight::from_coroot_values(n, values) + Weight::null_root(d, n, m);
            for (const Root& gamma : roots) {
                const Weight image = reflect(mu, gamma);
                std::vector<Rational> image_values;
                for (std::size_t k = 0; k + 1 < d; ++k)
                    image_values.push_back(simple_coroot_value(image, k));
                auto it = mult.find(image_values);
                if (it == mult.end() || it->second != count)
                    return false;
            }
        }
    return true;
}

} // namespace qtorus

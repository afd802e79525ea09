#pragma once

#include "qtorus/linalg.hpp"
#include "qtorus/toroidal.hpp"

#include <vector>

namespace qtorus {

/// Roots a_{j1}, ..., a_{jM_j} of Q_j(t_j) = prod_k (t_j^{N_j} - a_{jk}).
/// Values must be distinct, nonzero roots of unity.
struct EvalPoints {
    std::vector<std::vector<Cyclotomic>> values;

    std::size_t rank() const noexcept { return values.size(); }
    /// K = prod_j M_j.
    std::size_t tuple_count() const;
    /// All point tuples k in lexicographic order.
    std::vector<IntVector> tuples() const;
};

/// Throws invalid_points unless `pts` is usable with `q`.
void validate_points(const QMatrix& q, const EvalPoints& pts);

/// C_q / (t_j^{N_j} - a_j) for one point tuple, in the monomial basis
/// t^a, 0 <= a_j < N_j.
class FiberAlgebra {
public:
    FiberAlgebra(QMatrixPtr q, std::vector<Cyclotomic> values, IntVector point, std::int64_t field_conductor);

    const QMatrixPtr& torus() const noexcept { return q_; }
    const std::vector<Cyclotomic>& values() const noexcept { return values_; }
    const IntVector& point() const noexcept { return point_; }
    const IntVector& periods() const noexcept { return periods_; }
    std::int64_t field_conductor() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }

    Degree basis_degree(std::size_t index) const;
    std::size_t index_of(const Degree& reduced) const;
    /// t^c = coefficient * t^{basis(index)} in the fiber.
    std::pair<std::size_t, Cyclotomic> reduce(const Degree& c) const;

    Vector monomial(const Degree& a, const Cyclotomic& c = Cyclotomic(1L)) const;
    Vector one() const { return monomial(Degree(q_->n())); }
    Vector multiply(const Vector& x, const Vector& y) const;
    Vector image(const TorusElement& x) const;
    /// Matrix of left multiplication by x.
    Matrix left_matrix(const Vector& x) const;
    Matrix right_matrix(const Vector& x) const;

private:
    QMatrixPtr q_;
    std::vector<Cyclotomic> values_;
    IntVector point_;
    IntVector periods_;
    std::int64_t field_;
    std::size_t dim_;
    // basis_i * basis_j = table_[i*dim+j].second * basis(table_[i*dim+j].first)
    std::vector<std::pair<std::size_t, Cyclotomic>> table_;
};

/// Builds the fiber at point tuple k (0-based). field_conductor = 0 picks
/// lcm(2, M, orders of a_j) * lcm(N_j), which contains every root needed.
FiberAlgebra build_fiber(const QMatrixPtr& q, const EvalPoints& pts, const IntVector& k,
                         std::int64_t field_conductor = 0);

struct WedderburnReport {
    std::size_t dim = 0;
    std::size_t center_dim = 0;
    std::size_t blocks = 0;
    std::size_t size = 0;
    bool simple = false;
    std::vector<Vector> central_idempotents;
};

/// Center by solving xz = zx, then a splitting of the center into
/// primitive idempotents. Every block is M_size.
WedderburnReport wedderburn(const FiberAlgebra& f);

/// Images of t_1..t_n in an irreducible representation.
struct MatrixRep {
    QMatrixPtr torus;
    std::vector<Cyclotomic> values;
    IntVector periods;
    std::vector<Matrix> images;

    std::size_t size() const { return images.empty() ? 0 : images[0].rows(); }
    /// Image of t^a = t_1^{a_1} ... t_n^{a_n}.
    Matrix monomial(const Degree& a) const;
    Matrix image(const TorusElement& x) const;
};

/// True iff t_i t_j = q_ij t_j t_i and t_j^{N_j} = a_j I hold exactly.
bool verify_relations(const MatrixRep& rep);

/// Representation on F e for a primitive idempotent e; needs a simple fiber.
MatrixRep irreducible_rep(const FiberAlgebra& f);

/// One irreducible representation per Wedderburn block.
std::vector<MatrixRep> irreducible_reps(const FiberAlgebra& f);

/// The fibers and block representations at every point tuple.
struct Pullback {
    QMatrixPtr torus;
    EvalPoints points;
    std::vector<IntVector> tuples;
    std::vector<std::vector<MatrixRep>> reps;

    std::size_t dim_quotient() const;
};

Pullback build_pullback(const QMatrixPtr& q, const EvalPoints& pts, std::int64_t field_conductor = 0);

/// Rank of C_q/J -> (sum over point tuples of the fibers) on the monomial
/// basis t^a, 0 <= a_j < M_j N_j. Equals prod_j M_j N_j when the map is
/// an isomorphism.
std::size_t crt_rank(const QMatrixPtr& q, const EvalPoints& pts, std::int64_t field_conductor = 0);

/// X (x) t^a -> X (x) rep(t^a) for every block of every point tuple. The
/// HC_1 part is sent to zero when drop_central is set; otherwise any HC_1
/// or derivation part raises not_in_domain.
std::vector<Matrix> pi_tilde(const Pullback& p, const ToroidalElement& x, bool drop_central = false);

} // namespace qtorus

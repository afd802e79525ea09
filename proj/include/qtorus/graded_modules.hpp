#pragma once

#include "qtorus/fiber.hpp"
#include "qtorus/roots_weyl.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace qtorus {

/// One irreducible summand of a representation of the block sum of
/// sl_{d m_b}: trivial, natural or adjoint of block b, or the tensor
/// product of the natural representations of all blocks.
struct RepPart {
    enum class Kind { trivial, natural, adjoint, tensor };
    Kind kind = Kind::natural;
    std::size_t block = 0;
};

/// Parses "natural", "adjoint:1", "natural+trivial", "tensor".
std::vector<RepPart> parse_rep_spec(const std::string& spec);
std::string to_string(const RepPart& part);

/// Finite-dimensional tau(d,q)-module V = rho o pi_tilde, a direct sum of
/// the given parts. I (x) Z(C_q) and HC_1 act as zero.
class FinRep {
public:
    FinRep(Pullback pullback, std::size_t d, std::vector<RepPart> parts);
    FinRep(const FinRep& o);

    const QMatrixPtr& torus() const noexcept { return pullback_.torus; }
    const Pullback& pullback() const noexcept { return pullback_; }
    std::size_t rank_d() const noexcept { return d_; }
    std::size_t dim() const noexcept { return dim_; }
    const std::vector<RepPart>& parts() const noexcept { return parts_; }
    std::size_t block_count() const noexcept { return blocks_.size(); }

    /// rho(X (x) t^a).
    Matrix term(const Matrix& x, const Degree& a) const;
    /// rho of the matrix part; HC_1 acts as zero, derivations raise not_in_domain.
    Matrix act(const ToroidalElement& x) const;

    /// Degrees t^a, 0 <= a_j < M_j N_j: the images of X (x) t^a over these
    /// span the images over all of Z^n.
    std::vector<Degree> span_degrees() const;

private:
    Matrix block_monomial(std::size_t block, const Degree& a) const;
    Matrix part_image(const RepPart& part, const Matrix& x, const Degree& a) const;

    Pullback pullback_;
    std::size_t d_;
    std::vector<RepPart> parts_;
    const MatrixRep& block(std::size_t b) const;

    std::vector<std::pair<std::size_t, std::size_t>> blocks_; // (tuple, block) into pullback_.reps
    std::size_t dim_;
    mutable std::mutex cache_mutex_;
    mutable std::map<std::pair<std::size_t, Degree>, Matrix> cache_;
};

FinRep make_rep(const QMatrixPtr& q, std::size_t d, const EvalPoints& pts, const std::string& spec);

/// Element of Vbar (x) A_n: grade m -> vector of Vbar. Zero slices are dropped.
using GradedVector = std::map<Degree, Vector>;

/// (x (x) t^r)(w (x) t^m) = (rho(x (x) t^r) w) (x) t^{r+m}, d_i acts by m_i,
/// HC_1 acts as zero.
GradedVector act(const FinRep& rep, const ToroidalElement& x, const GradedVector& v);

/// {v : rho(E_ij (x) t^a) v = 0 for all i < j and all a}.
std::vector<Vector> vplus(const FinRep& rep);
/// Same kernel, with a running over coset representatives of Z^n / rad f.
/// Agrees with vplus when the pullback has a single block.
std::vector<Vector> vplus_cosets(const FinRep& rep);

struct WeightSpace {
    std::vector<Rational> values; ///< lambda(alpha_k^vee)
    Weight weight;
    std::vector<Vector> basis;
};

/// Joint eigenspaces of rho(h_k (x) 1), h_k = E_kk - E_{k+1,k+1}, on an
/// invariant subspace (all of Vbar when `subspace` is empty).
std::vector<WeightSpace> weight_spaces(const FinRep& rep, const std::vector<Vector>& subspace = {});

/// Least k with rho(X (x) t^a)^k = 0; X must be nilpotent.
std::size_t integrability_index(const FinRep& rep, const Matrix& x, const Degree& a);

/// Lambda_{beta,0} v, ..., Lambda_{beta,K} v for the loop algebra in t_j^{N_j}:
/// Lambda_m = -(1/m) sum_{k=1}^m H_k Lambda_{m-k}, H_k = rho(h_beta (x) t_j^{k N_j}).
std::vector<Vector> lambda_series(const FinRep& rep, std::size_t beta, std::size_t j, const Vector& v,
                                  std::size_t truncation);

struct LoopCheck {
    std::size_t beta = 0;
    std::size_t j = 0;
    Rational lambda_value;
    bool h_modes_vanish = false;      ///< (h_beta (x) t_j^{kN_j}) v = 0 for 1 <= k <= K
    bool lambda_modes_vanish = false; ///< Lambda_{beta,m} v = 0 for 1 <= m <= K
    bool bound_holds = false;         ///< Lambda_{beta,m} v = 0 for lambda_value < m <= K
    bool forward = false;             ///< lambda_value = 0 implies both vanishings
    bool converse = false;            ///< h modes vanish implies lambda_value = 0
};

/// Both directions of the loop-algebra criterion on a highest weight vector
/// of every weight space of vplus, for every simple root and direction j.
std::vector<LoopCheck> loop_checks(const FinRep& rep, std::size_t truncation);

struct CentralOperator {
    bool found = false;
    std::size_t i = 0;
    std::int64_t k = 0;
    std::size_t h = 0; ///< simple coroot index
    Degree degree;
    std::size_t rank = 0;
    std::size_t vplus_dim = 0;
};

/// Searches h_k (x) t_i^{k N_i}, 1 <= k <= max_k, for an operator that is
/// bijective on vplus.
CentralOperator highest_central_operator(const FinRep& rep, std::size_t i, std::int64_t max_k);

struct WindowReport {
    std::int64_t bound = 0;
    Degree seed_grade;
    std::vector<Rational> seed_weight;
    std::map<Degree, std::size_t> dims;
};

/// Closure of `seed` under all rho(E_ij (x) t^a) whose result stays in
/// the grades [-B, B]^n.
WindowReport submodule_window(const FinRep& rep, const GradedVector& seed, std::int64_t bound);

struct Decomposition {
    std::int64_t bound = 0;
    std::vector<WindowReport> components;
    std::vector<std::size_t> class_of;
    std::size_t classes = 0;
    bool direct = false;          ///< component slices are independent
    bool covers_interior = false; ///< slices in [-(B-1), B-1]^n are all of Vbar
};

/// Generates components from highest weight vectors in grades [-1, 1]^n and
/// groups them by seed weight and slice dimensions up to a grade shift in
/// [-1, 1]^n.
Decomposition decompose_window(const FinRep& rep, std::int64_t bound);

/// dim V_mu = dim V_{r mu} for every weight of Vbar (x) t^m, |m| <= 1, and
/// every real root alpha + delta_k with |k| <= 1.
bool weyl_multiplicity_check(const FinRep& rep);

} // namespace qtorus

#pragma once

#include "qtorus/hc1.hpp"
#include "qtorus/linalg.hpp"
#include "qtorus/quantum_torus.hpp"
#include "qtorus/roots_weyl.hpp"

#include <map>
#include <vector>

namespace qtorus {

/// Element of gl_d(C_q) + HC_1(C_q) + D, written as
/// sum_a X_a (x) t^a + h + sum_i k_i d_i. Elements of the trace-zero
/// subalgebra tau(d,q) are not enforced structurally; see validate_membership.
class ToroidalElement {
public:
    ToroidalElement(QMatrixPtr q, std::size_t d);

    static ToroidalElement matrix_term(QMatrixPtr q, const Matrix& x, const Degree& a);
    static ToroidalElement unit_term(QMatrixPtr q, std::size_t d, std::size_t i, std::size_t j, const Degree& a,
                                     const Cyclotomic& c = Cyclotomic(1L));
    static ToroidalElement central(QMatrixPtr q, std::size_t d, std::size_t i);
    static ToroidalElement derivation(QMatrixPtr q, std::size_t d, std::size_t i);
    static ToroidalElement from_hc1(std::size_t d, const HC1Element& h);

    const QMatrixPtr& torus() const noexcept { return q_; }
    std::size_t rank_d() const noexcept { return d_; }
    const std::map<Degree, Matrix>& matpart() const noexcept { return mat_; }
    const HC1Element& hcpart() const noexcept { return hc_; }
    const std::vector<Cyclotomic>& derpart() const noexcept { return der_; }
    bool is_zero() const;

    void add_matrix(const Degree& a, const Matrix& x);
    void add_hc1(const HC1Element& h);
    void add_derivation(std::size_t i, const Cyclotomic& c);

    ToroidalElement& operator+=(const ToroidalElement& o);
    ToroidalElement& operator-=(const ToroidalElement& o);
    ToroidalElement& operator*=(const Cyclotomic& c);
    friend ToroidalElement operator+(ToroidalElement a, const ToroidalElement& b) { return a += b; }
    friend ToroidalElement operator-(ToroidalElement a, const ToroidalElement& b) { return a -= b; }
    friend ToroidalElement operator*(const Cyclotomic& c, ToroidalElement a) { return a *= c; }
    ToroidalElement operator-() const;

    friend bool operator==(const ToroidalElement& a, const ToroidalElement& b);

    std::string to_string() const;

private:
    void check_compatible(const ToroidalElement& o) const;

    QMatrixPtr q_;
    std::size_t d_;
    std::map<Degree, Matrix> mat_;
    HC1Element hc_;
    std::vector<Cyclotomic> der_;
};

ToroidalElement bracket(const ToroidalElement& x, const ToroidalElement& y);

/// [[x,y],z] + [[y,z],x] + [[z,x],y].
ToroidalElement jacobi_residual(const ToroidalElement& x, const ToroidalElement& y, const ToroidalElement& z);

/// sum_a Tr(X_a) t^a.
TorusElement total_trace(const ToroidalElement& x);

/// True iff the matrix part lies in sl_d(C_q), i.e. its trace has no
/// component on rad f.
bool validate_membership(const ToroidalElement& x);

/// Projection onto the root space of `root`. For a null root delta_m the
/// space is diagonal (x) t^m, plus HC_1 in degree m when m is in rad f.
/// The null root delta_0 is not a root; it projects onto the Cartan part.
ToroidalElement root_component(const ToroidalElement& x, const Root& root);

/// Projection onto h = trace-zero diagonal (x) 1 + span c_i + span d_i.
/// Diagonal matrices at degree 0 with nonzero trace are kept here as well.
ToroidalElement cartan_component(const ToroidalElement& x);

/// Roots whose root spaces meet x, each listed once.
std::vector<Root> support_roots(const ToroidalElement& x);

/// E_kk - E_{k+1,k+1}, c_i, d_i: 2n + d - 1 elements.
std::vector<ToroidalElement> cartan_basis(QMatrixPtr q, std::size_t d);

} // namespace qtorus

#pragma once

#include <cstdint>
#include <vector>

namespace qtorus {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

// Integer row-reduction helpers. All arithmetic is overflow-checked; an
// overflow raises internal_inconsistency rather than wrapping.

/// Row-style Hermite normal form: the nonzero rows of the result are in
/// echelon form with positive pivots and entries above each pivot reduced
/// into [0, pivot). Zero rows are dropped. Canonical for the row lattice.
IntMatrix hermite_normal_form(IntMatrix rows, std::size_t ncols);

/// Basis (in Hermite form) of { x in Z^c : A x = 0 } for an r x c matrix A.
IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols);

/// Nonzero elementary divisors d_1 | d_2 | ... of the matrix.
IntVector smith_diagonal(IntMatrix a, std::size_t ncols);

/// Absolute determinant of a square matrix given by its Hermite form rows.
std::int64_t hnf_index(const IntMatrix& hnf);

/// Reduces v modulo the row lattice of a full-rank upper-triangular HNF:
/// result r satisfies 0 <= r_j < hnf[j][j] and v - r lies in the lattice.
IntVector reduce_mod_hnf(IntVector v, const IntMatrix& hnf);

/// True when v lies in the row lattice spanned by an HNF basis.
bool in_lattice(const IntVector& v, const IntMatrix& hnf);

} // namespace qtorus

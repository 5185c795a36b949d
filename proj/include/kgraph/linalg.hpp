#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kgraph/int_matrix.hpp"

namespace kgraph {

/// A = U * S * V with U, V unimodular and S diagonal, d1 | d2 | ... >= 0.
/// The inverses are carried along so that kernels and linear solves need no
/// further elimination: U_inv * A * V_inv = S.
struct SmithDecomposition {
  IntMatrix U, S, V;
  IntMatrix U_inv, V_inv;

  std::size_t rank() const;
  IntVector diagonal() const;
};

/// Pivots on a minimal-absolute-value entry at every stage to keep
/// intermediate coefficients small.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// Column-style Hermite form: the returned matrix has rank(A) columns that
/// generate the same subgroup as the columns of A; it is lower-echelon with
/// positive pivots, and in each pivot row the entries left of the pivot lie in
/// [0, pivot).
IntMatrix column_hermite_form(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& a);

/// A subgroup of Z^n, generated by the columns of a matrix.
class Lattice {
 public:
  explicit Lattice(std::size_t ambient_dimension);  // zero lattice
  explicit Lattice(IntMatrix generators);

  static Lattice zero(std::size_t n) { return Lattice(n); }
  static Lattice full(std::size_t n) { return Lattice(IntMatrix::identity(n)); }

  std::size_t ambient_dimension() const { return basis_.rows(); }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& generators() const { return generators_; }
  /// Canonical basis (column Hermite form).
  const IntMatrix& basis() const { return basis_; }

  bool contains(const IntVector& v) const;

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.basis_ == b.basis_;
  }

 private:
  IntMatrix generators_;
  IntMatrix basis_;
};

/// Z-basis of {x : A x = 0}.
Lattice kernel_basis(const IntMatrix& a);

/// The subgroup generated by the columns of A.
inline Lattice image_lattice(const IntMatrix& a) { return Lattice(a); }

/// Integer solution of A x = b, or nullopt when none exists.
std::optional<IntVector> solve(const IntMatrix& a, const IntVector& b);

/// inner is a subgroup of outer.
bool lattice_contains(const Lattice& outer, const Lattice& inner);

/// Intersection of two lattices in the same ambient space.
Lattice intersect(const Lattice& a, const Lattice& b);

struct AbelianGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // invariant factors, each >= 2, d1 | d2 | ...

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// e.g. "0", "Z", "Z^2 + Z/3 + Z/6"
std::string to_string(const AbelianGroup& g);

/// Z / B via the Smith form of B written in a basis of Z. Requires B <= Z.
AbelianGroup quotient_group(const Lattice& z, const Lattice& b);

}  // namespace kgraph

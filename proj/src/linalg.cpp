#include "kgraph/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

// Row and column operations applied to S, mirrored on the four transforms so
// that A = U S V and U_inv A V_inv = S hold after every step.
class SmithWorkspace {
 public:
  explicit SmithWorkspace(const IntMatrix& a)
      : d_{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()),
           IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())} {}

  IntMatrix& s() { return d_.S; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    d_.S.swap_rows(i, j);
    d_.U_inv.swap_rows(i, j);
    d_.U.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    d_.S.swap_cols(i, j);
    d_.V_inv.swap_cols(i, j);
    d_.V.swap_rows(i, j);
  }
  // row[dst] += c row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& c) {
    d_.S.add_row_multiple(dst, src, c);
    d_.U_inv.add_row_multiple(dst, src, c);
    d_.U.add_col_multiple(src, dst, -c);
  }
  // col[dst] += c col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer& c) {
    d_.S.add_col_multiple(dst, src, c);
    d_.V_inv.add_col_multiple(dst, src, c);
    d_.V.add_row_multiple(src, dst, -c);
  }
  void negate_row(std::size_t i) {
    d_.S.negate_row(i);
    d_.U_inv.negate_row(i);
    d_.U.negate_col(i);
  }

  SmithDecomposition release() { return std::move(d_); }

 private:
  SmithDecomposition d_;
};

bool smaller_abs(const Integer& a, const Integer& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0;
}

}  // namespace

std::size_t SmithDecomposition::rank() const {
  std::size_t r = 0;
  const std::size_t n = std::min(S.rows(), S.cols());
  while (r < n && sgn(S(r, r)) != 0) ++r;
  return r;
}

IntVector SmithDecomposition::diagonal() const {
  const std::size_t n = std::min(S.rows(), S.cols());
  IntVector d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = S(i, i);
  return d;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  SmithWorkspace ws(a);
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t steps = std::min(m, n);

  for (std::size_t t = 0; t < steps; ++t) {
    IntMatrix& s = ws.s();

    // Minimal nonzero |entry| of the trailing block becomes the pivot.
    auto move_min_to_pivot = [&]() -> bool {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (sgn(s(i, j)) != 0 &&
              (bi == m || smaller_abs(s(i, j), s(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == m) return false;
      ws.swap_rows(t, bi);
      ws.swap_cols(t, bj);
      return true;
    };

    if (!move_min_to_pivot()) break;

    for (;;) {
      bool dirty = false;
      Integer q;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(s(i, t)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        ws.add_row(i, t, -q);
        if (sgn(s(i, t)) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(s(t, j)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        ws.add_col(j, t, -q);
        if (sgn(s(t, j)) != 0) dirty = true;
      }
      if (dirty) {
        // A remainder smaller than the pivot survived; restart with it.
        move_min_to_pivot();
        continue;
      }
      // Row and column of the pivot are clear; enforce divisibility.
      std::size_t bad_row = m;
      for (std::size_t i = t + 1; i < m && bad_row == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (bad_row == m) break;
      ws.add_row(t, bad_row, Integer(1));
    }
    if (sgn(s(t, t)) < 0) ws.negate_row(t);
  }
  return ws.release();
}

namespace {

// Row-style Hermite form of the rows of m: upper echelon, positive pivots,
// entries above each pivot reduced into [0, pivot). Zero rows are dropped.
IntMatrix row_hermite_form(IntMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t r = 0;
  Integer q;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (;;) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (sgn(m(i, c)) != 0 && (best == rows || smaller_abs(m(i, c), m(best, c))))
          best = i;
      if (best == rows) break;
      m.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(m(i, c)) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
        m.add_row_multiple(i, r, -q);
        if (sgn(m(i, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(m(r, c)) == 0) continue;
    if (sgn(m(r, c)) < 0) m.negate_row(r);
    for (std::size_t i = 0; i < r; ++i) {
      mpz_fdiv_q(q.get_mpz_t(), m(i, c).get_mpz_t(), m(r, c).get_mpz_t());
      m.add_row_multiple(i, r, -q);
    }
    ++r;
  }
  return m.block(0, 0, r, cols);
}

}  // namespace

IntMatrix column_hermite_form(const IntMatrix& a) {
  return row_hermite_form(a.transpose()).transpose();
}

Integer determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(Errc::DimensionMismatch, "determinant of non-square matrix");
  }
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = t;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Lattice::Lattice(std::size_t ambient_dimension)
    : generators_(ambient_dimension, 0), basis_(ambient_dimension, 0) {}

Lattice::Lattice(IntMatrix generators)
    : generators_(std::move(generators)),
      basis_(column_hermite_form(generators_)) {}

bool Lattice::contains(const IntVector& v) const {
  if (v.size() != ambient_dimension()) {
    throw Error(Errc::DimensionMismatch, "vector outside ambient dimension");
  }
  return solve(basis_, v).has_value();
}

Lattice kernel_basis(const IntMatrix& a) {
  const SmithDecomposition snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  const std::size_t n = a.cols();
  // A x = 0  <=>  S (V x) = 0  <=>  (V x)_i = 0 for i < r.
  return Lattice(snf.V_inv.block(0, r, n, n - r));
}

std::optional<IntVector> solve(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) {
    throw Error(Errc::DimensionMismatch,
                "solve: " + std::to_string(a.rows()) + " rows vs rhs of length " +
                    std::to_string(b.size()));
  }
  const SmithDecomposition snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  const IntVector c = snf.U_inv * b;
  IntVector y(a.cols());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < r) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), snf.S(i, i).get_mpz_t()))
        return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), snf.S(i, i).get_mpz_t());
    } else if (sgn(c[i]) != 0) {
      return std::nullopt;
    }
  }
  return snf.V_inv * y;
}

bool lattice_contains(const Lattice& outer, const Lattice& inner) {
  if (outer.ambient_dimension() != inner.ambient_dimension()) {
    throw Error(Errc::DimensionMismatch, "lattices in different ambient spaces");
  }
  const IntMatrix& gens = inner.generators();
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    if (!solve(outer.generators(), gens.column(j))) return false;
  }
  return true;
}

Lattice intersect(const Lattice& a, const Lattice& b) {
  if (a.ambient_dimension() != b.ambient_dimension()) {
    throw Error(Errc::DimensionMismatch, "lattices in different ambient spaces");
  }
  // x = A s = B t  <=>  (s, t) in ker [A | -B]
  const IntMatrix& ba = a.basis();
  const IntMatrix& bb = b.basis();
  const Lattice k = kernel_basis(hstack(ba, Integer(-1) * bb));
  const IntMatrix s = k.basis().block(0, 0, ba.cols(), k.rank());
  return Lattice(ba * s);
}

std::string to_string(const AbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::ostringstream os;
  bool first = true;
  if (g.rank > 0) {
    os << 'Z';
    if (g.rank > 1) os << '^' << g.rank;
    first = false;
  }
  for (const auto& d : g.torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

AbelianGroup quotient_group(const Lattice& z, const Lattice& b) {
  if (!lattice_contains(z, b)) {
    throw Error(Errc::NotASubgroup, "quotient requires B to lie inside Z");
  }
  const IntMatrix& zb = z.basis();
  const IntMatrix& gens = b.generators();
  std::vector<IntVector> coords;
  coords.reserve(gens.cols());
  for (std::size_t j = 0; j < gens.cols(); ++j) {
    auto x = solve(zb, gens.column(j));
    if (!x) throw Error(Errc::NotASubgroup, "generator of B not in Z");
    coords.push_back(std::move(*x));
  }
  const IntMatrix rel = IntMatrix::from_columns(zb.cols(), coords);
  const SmithDecomposition snf = smith_normal_form(rel);
  AbelianGroup g;
  const std::size_t r = snf.rank();
  g.rank = zb.cols() - r;
  for (std::size_t i = 0; i < r; ++i)
    if (snf.S(i, i) != 1) g.torsion.push_back(snf.S(i, i));
  return g;
}

}  // namespace kgraph

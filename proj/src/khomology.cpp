#include "kgraph/khomology.hpp"

#include <algorithm>

#include "kgraph/error.hpp"

namespace kgraph {

namespace {

std::size_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::size_t out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::size_t index_of(const std::vector<std::vector<std::size_t>>& basis,
                     const std::vector<std::size_t>& tuple) {
  auto it = std::lower_bound(basis.begin(), basis.end(), tuple);
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace

ChainComplex::ChainComplex(std::size_t k, std::size_t vertices,
                           std::vector<IntMatrix> boundaries)
    : k_(k), n_(vertices), boundaries_(std::move(boundaries)) {
  if (boundaries_.size() != k_) {
    throw Error(Errc::DimensionMismatch, "expected one boundary map per degree 1..k");
  }
  for (std::size_t a = 1; a <= k_; ++a) {
    const IntMatrix& d = boundaries_[a - 1];
    if (d.rows() != dimension(a - 1) || d.cols() != dimension(a)) {
      throw Error(Errc::DimensionMismatch, "boundary d_" + std::to_string(a) + " has the wrong shape");
    }
  }
}

std::size_t ChainComplex::dimension(std::size_t a) const {
  return a > k_ ? 0 : binomial(k_, a) * n_;
}

IntMatrix ChainComplex::boundary(std::size_t a) const {
  if (a == 0) return IntMatrix(0, dimension(0));
  if (a > k_) return IntMatrix(dimension(k_), 0);
  return boundaries_[a - 1];
}

std::vector<std::vector<std::size_t>> ChainComplex::wedge_basis(std::size_t k, std::size_t a) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  // lexicographic enumeration of a-subsets of {0..k-1}
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == a) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < k; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

ChainComplex build_complex(const std::vector<IntMatrix>& transposed) {
  const std::size_t k = transposed.size();
  const std::size_t n = k == 0 ? 0 : transposed.front().rows();
  for (const IntMatrix& m : transposed) {
    if (m.rows() != n || m.cols() != n) {
      throw Error(Errc::DimensionMismatch, "connectivity matrices must be square of equal size");
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!(transposed[i] * transposed[j] == transposed[j] * transposed[i])) {
        throw Error(Errc::NonCommuting, "M_" + std::to_string(i + 1) + " and M_" +
                                            std::to_string(j + 1) + " do not commute");
      }

  const IntMatrix id = IntMatrix::identity(n);
  std::vector<IntMatrix> one_minus;
  one_minus.reserve(k);
  for (const IntMatrix& m : transposed) one_minus.push_back(id - m);

  std::vector<IntMatrix> boundaries;
  for (std::size_t a = 1; a <= k; ++a) {
    const auto src = ChainComplex::wedge_basis(k, a);
    const auto dst = ChainComplex::wedge_basis(k, a - 1);
    IntMatrix d(dst.size() * n, src.size() * n);
    for (std::size_t s = 0; s < src.size(); ++s) {
      const auto& tuple = src[s];
      for (std::size_t j = 0; j < tuple.size(); ++j) {
        std::vector<std::size_t> face = tuple;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
        const std::size_t t = index_of(dst, face);
        // (-1)^(j+1) with j one-based is + for the first position
        const long sign = j % 2 == 0 ? 1 : -1;
        const IntMatrix& block = one_minus[tuple[j]];
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v)
            if (sgn(block(u, v)) != 0) d(t * n + u, s * n + v) += sign * block(u, v);
      }
    }
    boundaries.push_back(std::move(d));
  }
  return ChainComplex(k, n, std::move(boundaries));
}

ChainComplex complex_of(const TwoGraph& g) {
  return build_complex({g.connectivity(Colour::Blue).transpose(),
                        g.connectivity(Colour::Red).transpose()});
}

std::vector<AbelianGroup> homology(const ChainComplex& c) {
  std::vector<AbelianGroup> out;
  for (std::size_t a = 0; a <= c.rank(); ++a) {
    out.push_back(quotient_group(kernel_basis(c.boundary(a)), image_lattice(c.boundary(a + 1))));
  }
  return out;
}

bool commutes(const ChainMap& j, const ChainComplex& source, const ChainComplex& target) {
  if (source.rank() != target.rank() || j.components.size() != source.rank() + 1) return false;
  for (std::size_t a = 1; a <= source.rank(); ++a) {
    if (!(j.components[a - 1] * source.boundary(a) == target.boundary(a) * j.components[a]))
      return false;
  }
  return true;
}

ChainMap chain_map(const TwoGraph& g, const VertexSet& h) {
  const TwoGraph gamma = restriction_graph(g, h);
  const std::size_t n = g.vertex_count();
  const std::size_t m = gamma.vertex_count();
  const auto members = h.members();  // gamma's vertex order is g's order on H

  ChainMap j;
  const std::size_t k = 2;
  for (std::size_t a = 0; a <= k; ++a) {
    const std::size_t wedges = binomial(k, a);
    IntMatrix c(wedges * n, wedges * m);
    for (std::size_t w = 0; w < wedges; ++w)
      for (std::size_t x = 0; x < m; ++x) c(w * n + members[x], w * m + x) = 1;
    j.components.push_back(std::move(c));
  }
  if (!commutes(j, complex_of(gamma), complex_of(g))) {
    throw Error(Errc::CrossCheckFailure, "chain map squares fail to commute for H = " + to_string(g, h));
  }
  return j;
}

H1Injectivity h1_injective(const ChainComplex& source, const ChainComplex& target,
                           const ChainMap& j) {
  if (source.rank() != 2 || target.rank() != 2) {
    throw Error(Errc::RankNotTwo, "H_1 injectivity is decided for 2-graphs only");
  }
  const Lattice cycles = kernel_basis(source.boundary(1));
  const IntMatrix& z = cycles.basis();  // D_1^source x r
  const IntMatrix image_z = j.components[1] * z;
  const IntMatrix d2 = target.boundary(2);

  // y with j1(Z y) in im d2  <=>  (y, w) in ker [j1 Z | -d2]
  const Lattice sol = kernel_basis(hstack(image_z, Integer(-1) * d2));
  const IntMatrix ys = sol.basis().block(0, 0, z.cols(), sol.rank());
  H1Injectivity out;
  out.pulled_back = Lattice(z * ys);

  const Lattice boundaries = image_lattice(source.boundary(2));
  const IntMatrix& pb = out.pulled_back.basis();
  for (std::size_t c = 0; c < pb.cols(); ++c) {
    IntVector a = pb.column(c);
    if (!boundaries.contains(a)) {
      out.injective = false;
      out.witness_image = j.components[1] * a;
      out.witness = std::move(a);
      break;
    }
  }
  return out;
}

H1Injectivity h1_map_injective(const TwoGraph& g, const VertexSet& h) {
  if (!is_saturated_hereditary(g, h)) {
    throw Error(Errc::NotSaturatedHereditary, to_string(g, h));
  }
  if (h.empty()) {
    throw Error(Errc::TrivialH, "H must be nonempty");
  }
  const ChainMap j = chain_map(g, h);
  return h1_injective(complex_of(restriction_graph(g, h)), complex_of(g), j);
}

KInvariants k1_of_two_graph(const TwoGraph& g) {
  const auto hs = homology(complex_of(g));
  return {hs[0], hs[1], hs[2]};
}

}  // namespace kgraph

#pragma once

// The canonical representation on holomorphic differentials of the Drinfeld
// curve, in the basis omega_{i,j} = x^i y^j / x^q dx, 0 <= i + j <= q - 2.
//
// g acts by pullback along g^{-1}, which sends omega_{i,j} to
//   (d x - b y)^i (-c x + a y)^j / x^q dx
// for g = [[a, b], [c, d]]. The action preserves the degree i + j, so the
// matrices are block diagonal with one (k+1)-square block W^k per degree k.
// Inside a block the basis runs omega_{k,0}, omega_{k-1,1}, ..., omega_{0,k}.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dcr/gfq.hpp"
#include "dcr/matfq.hpp"
#include "dcr/sampling.hpp"
#include "dcr/sl2.hpp"

namespace dcr::canrep {

using gfq::Elem;
using gfq::FieldPtr;
using matfq::Matrix;

struct DiffIndex {
  int i = 0;
  int j = 0;

  int degree() const { return i + j; }
  // Position inside its degree block.
  std::size_t block_position() const { return static_cast<std::size_t>(j); }
  friend bool operator==(const DiffIndex&, const DiffIndex&) = default;
};

std::size_t genus(std::uint32_t q);

// Degree ascending, i descending within a degree.
std::vector<DiffIndex> basis_indices(std::uint32_t q);

// Offset of block k in the assembled matrix: k(k+1)/2.
std::size_t block_offset(int k);

// Pascal row n mod p: C(n, 0), ..., C(n, n).
std::vector<Elem> binomial_row(const gfq::Field& f, std::size_t n);

// Coefficients of (u1 x + v1 y)^e1 (u2 x + v2 y)^e2, indexed by the exponent
// of y (so entry m multiplies x^{e1+e2-m} y^m).
std::vector<Elem> expand_linear_forms(const gfq::Field& f, Elem u1, Elem v1, std::size_t e1,
                                      Elem u2, Elem v2, std::size_t e2);

Matrix action_block(int k, const sl2::GroupElement& g);

struct GradedBlockMatrix {
  std::vector<Matrix> blocks;

  std::size_t dim() const;
  Matrix assembled() const;
};

GradedBlockMatrix action_full(const sl2::GroupElement& g);

// True iff every entry outside the degree blocks is zero.
bool is_block_diagonal(const Matrix& m, std::uint32_t q);

struct HomomorphismReport {
  bool exhaustive = false;
  std::uint64_t seed = 0;
  std::size_t pairs_checked = 0;
  std::size_t inverses_checked = 0;
  std::size_t block_diagonal_checked = 0;
};

// rho(g) rho(h) = rho(gh) over all pairs or policy.samples seeded pairs, and
// rho(g^{-1}) = rho(g)^{-1}. Throws HomomorphismViolation naming the pair.
HomomorphismReport verify_homomorphism(const FieldPtr& field, const SamplingPolicy& policy);

}  // namespace dcr::canrep

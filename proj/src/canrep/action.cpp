#include <string>

#include "dcr/canrep.hpp"
#include "dcr/error.hpp"

namespace dcr::canrep {

std::size_t genus(std::uint32_t q) { return std::size_t{q} * (q - 1) / 2; }

std::vector<DiffIndex> basis_indices(std::uint32_t q) {
  std::vector<DiffIndex> out;
  for (int k = 0; k <= static_cast<int>(q) - 2; ++k)
    for (int i = k; i >= 0; --i) out.push_back({i, k - i});
  return out;
}

std::size_t block_offset(int k) { return static_cast<std::size_t>(k) * (k + 1) / 2; }

std::vector<Elem> binomial_row(const gfq::Field& f, std::size_t n) {
  std::vector<Elem> row{1};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Elem> next(m + 1, 1);
    for (std::size_t i = 1; i < m; ++i) next[i] = f.add(row[i - 1], row[i]);
    row = std::move(next);
  }
  return row;
}

namespace {

// (u x + v y)^e, indexed by the exponent of y.
std::vector<Elem> power_of_linear_form(const gfq::Field& f, Elem u, Elem v, std::size_t e) {
  const auto binom = binomial_row(f, e);
  std::vector<Elem> out(e + 1);
  for (std::size_t m = 0; m <= e; ++m)
    out[m] = f.mul(binom[m], f.mul(f.pow(u, e - m), f.pow(v, m)));
  return out;
}

}  // namespace

std::vector<Elem> expand_linear_forms(const gfq::Field& f, Elem u1, Elem v1, std::size_t e1,
                                      Elem u2, Elem v2, std::size_t e2) {
  const auto a = power_of_linear_form(f, u1, v1, e1);
  const auto b = power_of_linear_form(f, u2, v2, e2);
  std::vector<Elem> out(e1 + e2 + 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  return out;
}

Matrix action_block(int k, const sl2::GroupElement& g) {
  const FieldPtr& field = g.field();
  const gfq::Field& f = *field;
  if (k < 0 || k > static_cast<int>(f.q()) - 2)
    throw IndexOutOfRange("degree " + std::to_string(k) + " outside [0, q-2]");
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  Matrix m(field, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t i = k - j;
    // omega_{i,j} -> (d x - b y)^i (-c x + a y)^j / x^q dx
    const auto col = expand_linear_forms(f, g.d(), f.neg(g.b()), i, f.neg(g.c()), g.a(), j);
    for (std::size_t row = 0; row < n; ++row) m(row, j) = col[row];
  }
  return m;
}

std::size_t GradedBlockMatrix::dim() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  return n;
}

Matrix GradedBlockMatrix::assembled() const {
  if (blocks.empty()) throw DimensionMismatch("no blocks to assemble");
  Matrix out(blocks.front().field(), dim(), dim());
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) out(off + r, off + c) = b(r, c);
    off += b.rows();
  }
  return out;
}

GradedBlockMatrix action_full(const sl2::GroupElement& g) {
  GradedBlockMatrix out;
  for (int k = 0; k <= static_cast<int>(g.field()->q()) - 2; ++k)
    out.blocks.push_back(action_block(k, g));
  return out;
}

bool is_block_diagonal(const Matrix& m, std::uint32_t q) {
  if (m.rows() != genus(q) || m.cols() != genus(q)) return false;
  std::vector<int> degree_of;
  for (const auto& idx : basis_indices(q)) degree_of.push_back(idx.degree());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (degree_of[r] != degree_of[c] && m(r, c) != 0) return false;
  return true;
}

namespace {

// Cache rho(g) for every g while |G| * dim^2 stays under this many entries.
constexpr std::size_t kCacheEntries = std::size_t{1} << 25;

bool product_matches(const GradedBlockMatrix& a, const GradedBlockMatrix& b,
                     const GradedBlockMatrix& ab) {
  for (std::size_t k = 0; k < a.blocks.size(); ++k)
    if (!(a.blocks[k] * b.blocks[k] == ab.blocks[k])) return false;
  return true;
}

}  // namespace

HomomorphismReport verify_homomorphism(const FieldPtr& field, const SamplingPolicy& policy) {
  const auto group = sl2::enumerate_group(field);
  const std::size_t dim = genus(field->q());
  const bool cached = group.size() * dim * dim <= kCacheEntries;
  std::vector<GradedBlockMatrix> rho;
  if (cached) {
    rho.reserve(group.size());
    for (const auto& g : group) rho.push_back(action_full(g));
  }
  auto rho_of = [&](std::size_t a, GradedBlockMatrix& scratch) -> const GradedBlockMatrix& {
    if (cached) return rho[a];
    scratch = action_full(group[a]);
    return scratch;
  };

  HomomorphismReport report;
  report.exhaustive = policy.exhaustive_for(group.size());
  report.seed = policy.seed;

  const std::size_t n = group.size();
  std::vector<std::pair<std::size_t, std::size_t>> sampled;
  if (!report.exhaustive) {
    Rng rng(policy.seed);
    for (std::size_t s = 0; s < policy.samples; ++s) {
      const std::size_t a = rng.below(n);
      sampled.emplace_back(a, rng.below(n));
    }
  }
  const std::size_t total = report.exhaustive ? n * n : sampled.size();
  auto pair_at = [&](std::size_t s) {
    return report.exhaustive ? std::pair{s / n, s % n} : sampled[s];
  };

  auto describe = [&](std::size_t a, std::size_t b) {
    return "g = " + group[a].serialize() + ", h = " + group[b].serialize();
  };
  constexpr std::size_t kChunk = 256;
  const std::size_t chunks = (total + kChunk - 1) / kChunk;
  parallel_for(chunks, [&](std::size_t chunk) {
    GradedBlockMatrix sa, sb;
    const std::size_t end = std::min(total, (chunk + 1) * kChunk);
    for (std::size_t s = chunk * kChunk; s < end; ++s) {
      const auto [a, b] = pair_at(s);
      if (!product_matches(rho_of(a, sa), rho_of(b, sb), action_full(group[a] * group[b])))
        throw HomomorphismViolation("rho(g)rho(h) != rho(gh) for " + describe(a, b));
    }
  });
  report.pairs_checked = total;

  // Every element when the cache fits, otherwise a seeded sample.
  std::vector<std::size_t> elements;
  if (cached || report.exhaustive || policy.samples >= group.size()) {
    elements.resize(group.size());
    for (std::size_t a = 0; a < group.size(); ++a) elements[a] = a;
  } else {
    Rng rng(~policy.seed);
    for (std::size_t s = 0; s < policy.samples; ++s) elements.push_back(rng.below(group.size()));
  }
  parallel_for(elements.size(), [&](std::size_t s) {
    const std::size_t a = elements[s];
    GradedBlockMatrix scratch;
    const auto& g = rho_of(a, scratch);
    if (!is_block_diagonal(g.assembled(), field->q()))
      throw HomomorphismViolation("rho(g) is not block diagonal for g = " + group[a].serialize());
    const auto inv = action_full(group[a].inverse());
    for (std::size_t k = 0; k < g.blocks.size(); ++k)
      if (!(inv.blocks[k] * g.blocks[k] == Matrix::identity(field, k + 1)))
        throw HomomorphismViolation("rho(g^-1) != rho(g)^-1 for g = " + group[a].serialize());
  });
  report.inverses_checked = elements.size();
  report.block_diagonal_checked = elements.size();
  return report;
}

}  // namespace dcr::canrep

#pragma once

// Decomposition of the canonical representation into the modules V^k and
// certificates for their indecomposability.
//
// V^k has basis x^k, x^{k-1} y, ..., y^k (index j <-> x^{k-j} y^j) and
// g = [[a, b], [c, d]] acts by x^{k-j} y^j -> (a x + c y)^{k-j} (b x + d y)^j.
//
// Indecomposability is certified twice:
//  * locality: End_L(V^k) = F id + K with K a nil ideal, so every
//    endomorphism is a unit or nilpotent;
//  * embedding: V^k embeds L-equivariantly into the group algebra F_q[L],
//    whose augmentation ideal is nilpotent (F_q[L] is local).
// The two routes must agree.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dcr/canrep.hpp"
#include "dcr/gfq.hpp"
#include "dcr/json.hpp"
#include "dcr/matfq.hpp"
#include "dcr/sampling.hpp"
#include "dcr/sl2.hpp"

namespace dcr::vkdecomp {

using gfq::Elem;
using gfq::FieldPtr;
using matfq::Matrix;
using matfq::Vector;

Matrix vk_matrix(int k, const sl2::GroupElement& g);

// T(x^{k-i} y^i) = (-1)^i omega_{i,k-i}: column i holds (-1)^i at block
// position k - i.
Matrix duality_intertwiner(const FieldPtr& field, int k);

struct IntertwiningReport {
  int k = 0;
  std::size_t generators_checked = 0;
  std::size_t samples_checked = 0;
  std::size_t hom_dim = 0;          // dim Hom_G(V^k, W^k) on generators
  bool hom_contains_t = false;      // T lies in that space
};

// T rho_V(g) = rho_W(g) T on every generator and on `samples` seeded group
// elements. Throws IntertwinerViolation naming g.
IntertwiningReport verify_intertwining(const FieldPtr& field, int k, std::uint64_t seed,
                                       std::size_t samples);

// Matrices of a in the F_p-basis acting by x^i -> (x + a)^i on 1, x, ..., x^k.
std::vector<Matrix> restrict_to_L(const FieldPtr& field, int k);

// restrict_to_L equals vk_matrix on every lower unitriangular element after
// setting y = 1 (a reversal of the basis).
bool restriction_matches_vk(const FieldPtr& field, int k);

// Basis of End_L(V^k), identity first.
std::vector<Matrix> endomorphism_algebra_over_L(const FieldPtr& field, int k);

struct LocalityCertificate {
  enum class Status { certified, inconclusive };

  int k = 0;
  std::vector<Matrix> endo_basis;
  std::vector<Elem> lambda;        // lambda(endo_basis[i])
  std::vector<Matrix> nil_ideal;   // basis of K = ker lambda
  std::size_t nil_exponent = 0;    // first e with K^e = 0
  Status status = Status::inconclusive;
  std::string reason;

  bool certified() const { return status == Status::certified; }
  // lambda extended linearly to coordinates in endo_basis.
  Elem evaluate(const gfq::Field& f, std::span<const Elem> coords) const;
};

LocalityCertificate locality_certificate(const FieldPtr& field, int k);

// Draws `samples` random elements of End_L(V^k) and checks each is a unit
// when lambda != 0 and nilpotent otherwise, with e - lambda(e) id nilpotent.
// Returns the number of units seen; throws Error on a counterexample.
std::size_t spot_check_certificate(const FieldPtr& field, const LocalityCertificate& cert,
                                   std::uint64_t seed, std::size_t samples);

// F_q[L] on the basis [b], b in encoding order.
struct GroupAlgebraL {
  FieldPtr field;
  std::vector<Elem> labels;
  std::vector<Matrix> generator_matrices;  // [b] -> [b + e], e in the F_p-basis
  std::vector<Vector> augmentation_basis;  // [b] - [0], b != 0

  Vector multiply(const Vector& u, const Vector& v) const;
};

GroupAlgebraL group_algebra_L(const FieldPtr& field);

struct AugmentationReport {
  std::size_t exponent = 0;          // first n with I^n = 0
  std::size_t expected = 0;          // r(p-1)+1
  std::vector<std::size_t> power_dims;  // dim I^1, dim I^2, ...
  bool passed() const { return exponent == expected; }
};

AugmentationReport augmentation_nilpotency_check(const GroupAlgebraL& algebra);

struct EmbeddingReport {
  int k = 0;
  std::optional<Matrix> map;  // q x (k+1): x^i -> -sum_b b^i [b]
  std::size_t rank = 0;
  bool injective = false;
  bool equivariant = false;      // with a acting on R by [b] -> [b - a]
  bool regular_equivariant = false;  // after [b] -> [-b], with [b] -> [b + a]
  bool submodule = false;
};

// Builds the map stage by stage (quotient by x^q - x, CRT components,
// evaluation, sign) and checks it. Throws ChainViolation naming the stage.
EmbeddingReport embed_vk_into_group_algebra(const FieldPtr& field, int k);

std::vector<std::uint32_t> base_p_digits(std::uint64_t n, std::uint32_t p);
std::set<std::uint64_t> digit_set_I(std::uint64_t n, std::uint32_t p);
bool is_simple(int k, std::uint32_t p);

struct Check {
  std::string name;
  bool passed = false;
  json::ordered detail;
};

struct SummandReport {
  int k = 0;
  std::size_t dim = 0;
  bool indecomposable = false;
  bool simple = false;
  LocalityCertificate certificate;
  std::optional<EmbeddingReport> embedding;
  std::size_t spot_checks = 0;
  bool routes_agree = false;
};

struct DecompositionReport {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  std::uint32_t q = 0;
  std::size_t genus = 0;
  std::uint64_t seed = 0;
  std::string policy;
  std::vector<SummandReport> summands;
  bool semisimple = false;
  std::optional<int> witness;
  std::vector<Check> checks;
  std::vector<std::pair<std::string, double>> timings_ms;

  bool certified() const;
};

// Runs every algebraic check; sub-failures are recorded, not thrown.
DecompositionReport verify_theorem(const FieldPtr& field, const SamplingPolicy& policy);

struct SemisimplicityVerdict {
  bool semisimple = false;
  std::optional<int> witness;  // least non-simple k
};

SemisimplicityVerdict semisimplicity_check(const DecompositionReport& report);
SemisimplicityVerdict semisimplicity_check(const FieldPtr& field);

// Fixed field order: q, genus, summands, semisimple, seed, checks
// (plus timings when requested).
json::ordered to_json(const DecompositionReport& report, bool include_timings = false);

}  // namespace dcr::vkdecomp

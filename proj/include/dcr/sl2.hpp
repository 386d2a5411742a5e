#pragma once

// The group SL_2(F_q), its transvection generators and the subgroup L of
// lower unitriangular matrices.

#include <cstddef>
#include <string>
#include <vector>

#include "dcr/gfq.hpp"

namespace dcr::sl2 {

using gfq::Elem;
using gfq::FieldPtr;

// [[a, b], [c, d]] with ad - bc = 1.
class GroupElement {
 public:
  // Throws DeterminantNotOne.
  static GroupElement make(FieldPtr field, Elem a, Elem b, Elem c, Elem d);
  static GroupElement identity(FieldPtr field);
  // [[1, a], [0, 1]]
  static GroupElement upper(FieldPtr field, Elem a);
  // [[1, 0], [a, 1]]
  static GroupElement lower(FieldPtr field, Elem a);

  const FieldPtr& field() const { return field_; }
  Elem a() const { return a_; }
  Elem b() const { return b_; }
  Elem c() const { return c_; }
  Elem d() const { return d_; }
  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }

  // Inverse via the adjugate [[d, -b], [-c, a]].
  GroupElement inverse() const;
  // Entrywise image under a field embedding (e.g. into GF(q^m)).
  GroupElement mapped(const gfq::Extension& ext) const;

  // "a b c d"
  std::string serialize() const;

  friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
  friend bool operator==(const GroupElement& g, const GroupElement& h);
  friend bool operator<(const GroupElement& g, const GroupElement& h);

 private:
  GroupElement(FieldPtr field, Elem a, Elem b, Elem c, Elem d)
      : field_(std::move(field)), a_(a), b_(b), c_(c), d_(d) {}

  FieldPtr field_;
  Elem a_, b_, c_, d_;
};

inline constexpr std::size_t kMaxGroupOrder = 1'000'000;

std::size_t group_order(std::uint32_t q);

// Every element once: first a != 0 (d solved), then a = 0. Throws TooLarge.
std::vector<GroupElement> enumerate_group(const FieldPtr& field);

struct GeneratorSet {
  enum class Kind { full_group, subgroup_L };
  std::vector<GroupElement> elements;
  Kind kind = Kind::full_group;
};

// {E12(e), E21(e) : e in the F_p-basis}, 2r transvections.
GeneratorSet generators(const FieldPtr& field);

// Breadth-first closure of a generating set under multiplication.
std::vector<GroupElement> closure(const GeneratorSet& gens);

struct SubgroupL {
  GeneratorSet gens;                  // lower(e) for e in the F_p-basis
  std::vector<GroupElement> elements;  // lower(a) for a in encoding order
  std::vector<Elem> labels;            // a for each element
};

// Also verifies a -> lower(a) is an isomorphism from (F_q, +) exhaustively.
SubgroupL subgroup_L(const FieldPtr& field);

}  // namespace dcr::sl2

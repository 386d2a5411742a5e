#include <deque>
#include <set>
#include <sstream>

#include "dcr/error.hpp"
#include "dcr/sl2.hpp"

namespace dcr::sl2 {

GroupElement GroupElement::make(FieldPtr field, Elem a, Elem b, Elem c, Elem d) {
  const gfq::Field& f = *field;
  for (Elem e : {a, b, c, d})
    if (e >= f.q()) throw IndexOutOfRange("matrix entry outside the field");
  if (f.sub(f.mul(a, d), f.mul(b, c)) != 1) throw DeterminantNotOne("determinant is not 1");
  return GroupElement(std::move(field), a, b, c, d);
}

GroupElement GroupElement::identity(FieldPtr field) {
  return GroupElement(std::move(field), 1, 0, 0, 1);
}

GroupElement GroupElement::upper(FieldPtr field, Elem a) {
  return GroupElement(std::move(field), 1, a, 0, 1);
}

GroupElement GroupElement::lower(FieldPtr field, Elem a) {
  return GroupElement(std::move(field), 1, 0, a, 1);
}

GroupElement GroupElement::inverse() const {
  const gfq::Field& f = *field_;
  return GroupElement(field_, d_, f.neg(b_), f.neg(c_), a_);
}

GroupElement GroupElement::mapped(const gfq::Extension& ext) const {
  gfq::require_same_field(*field_, *ext.base);
  return GroupElement(ext.ext, ext(a_), ext(b_), ext(c_), ext(d_));
}

std::string GroupElement::serialize() const {
  std::ostringstream out;
  out << a_ << ' ' << b_ << ' ' << c_ << ' ' << d_;
  return out.str();
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
  gfq::require_same_field(*g.field_, *h.field_);
  const gfq::Field& f = *g.field_;
  return GroupElement(g.field_, f.add(f.mul(g.a_, h.a_), f.mul(g.b_, h.c_)),
                      f.add(f.mul(g.a_, h.b_), f.mul(g.b_, h.d_)),
                      f.add(f.mul(g.c_, h.a_), f.mul(g.d_, h.c_)),
                      f.add(f.mul(g.c_, h.b_), f.mul(g.d_, h.d_)));
}

bool operator==(const GroupElement& g, const GroupElement& h) {
  return g.a_ == h.a_ && g.b_ == h.b_ && g.c_ == h.c_ && g.d_ == h.d_ &&
         g.field_->same_as(*h.field_);
}

bool operator<(const GroupElement& g, const GroupElement& h) {
  if (g.a_ != h.a_) return g.a_ < h.a_;
  if (g.b_ != h.b_) return g.b_ < h.b_;
  if (g.c_ != h.c_) return g.c_ < h.c_;
  return g.d_ < h.d_;
}

std::size_t group_order(std::uint32_t q) {
  const std::size_t n = q;
  return n * (n - 1) * (n + 1);
}

std::vector<GroupElement> enumerate_group(const FieldPtr& field) {
  const gfq::Field& f = *field;
  const std::uint32_t q = f.q();
  if (group_order(q) > kMaxGroupOrder)
    throw TooLarge("|SL_2(F_" + std::to_string(q) + ")| exceeds 10^6");
  std::vector<GroupElement> out;
  out.reserve(group_order(q));
  for (Elem a = 1; a < q; ++a) {
    const Elem a_inv = f.inv(a);
    for (Elem b = 0; b < q; ++b)
      for (Elem c = 0; c < q; ++c)
        out.push_back(GroupElement::make(field, a, b, c, f.mul(f.add(1, f.mul(b, c)), a_inv)));
  }
  for (Elem b = 1; b < q; ++b) {
    const Elem c = f.neg(f.inv(b));
    for (Elem d = 0; d < q; ++d) out.push_back(GroupElement::make(field, 0, b, c, d));
  }
  return out;
}

GeneratorSet generators(const FieldPtr& field) {
  GeneratorSet gens;
  gens.kind = GeneratorSet::Kind::full_group;
  for (Elem e : field->prime_basis()) gens.elements.push_back(GroupElement::upper(field, e));
  for (Elem e : field->prime_basis()) gens.elements.push_back(GroupElement::lower(field, e));
  return gens;
}

std::vector<GroupElement> closure(const GeneratorSet& gens) {
  if (gens.elements.empty()) throw Error("empty generating set");
  const FieldPtr& field = gens.elements.front().field();
  std::set<GroupElement> seen{GroupElement::identity(field)};
  std::deque<GroupElement> frontier{GroupElement::identity(field)};
  while (!frontier.empty()) {
    const GroupElement g = frontier.front();
    frontier.pop_front();
    for (const auto& s : gens.elements) {
      GroupElement h = g * s;
      if (seen.insert(h).second) frontier.push_back(std::move(h));
    }
  }
  return {seen.begin(), seen.end()};
}

SubgroupL subgroup_L(const FieldPtr& field) {
  const gfq::Field& f = *field;
  SubgroupL l;
  l.gens.kind = GeneratorSet::Kind::subgroup_L;
  for (Elem e : f.prime_basis()) l.gens.elements.push_back(GroupElement::lower(field, e));
  for (Elem a : f.elements()) {
    l.elements.push_back(GroupElement::lower(field, a));
    l.labels.push_back(a);
  }
  // All pairs when affordable; against the F_p-basis otherwise, which
  // suffices because the basis generates (F_q, +).
  const std::vector<Elem> partners = f.q() <= 1024 ? f.elements() : f.prime_basis();
  for (Elem a : f.elements())
    for (Elem b : partners)
      if (!(l.elements[a] * l.elements[b] == l.elements[f.add(a, b)]))
        throw Error("a -> [[1,0],[a,1]] is not additive");
  return l;
}

}  // namespace dcr::sl2

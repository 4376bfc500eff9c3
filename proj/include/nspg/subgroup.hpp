#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nspg/error.hpp"
#include "nspg/group.hpp"

namespace nspg {

// A subgroup of a parent group, stored as a sorted element list plus a
// membership mask. Construct through generated_subgroup() or
// SubgroupSet::from_elements(), both of which verify closure.
class SubgroupSet {
 public:
  static SubgroupSet from_elements(const FiniteGroup& parent, std::vector<Element> elements);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool is_normal() const noexcept { return normal_; }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole_group() const noexcept { return elements_.size() == parent_.order(); }
  bool contains(Element a) const noexcept { return a < member_.size() && member_[a]; }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) noexcept {
    return a.parent_.same_table(b.parent_) && a.elements_ == b.elements_;
  }

 private:
  SubgroupSet(FiniteGroup parent, std::vector<Element> elements);

  FiniteGroup parent_;
  std::vector<Element> elements_;
  std::vector<char> member_;
  bool normal_ = false;
};

namespace detail {

inline bool conjugation_closed(const FiniteGroup& g, const std::vector<char>& member,
                               const std::vector<Element>& elements) {
  for (Element x = 0; x < g.order(); ++x) {
    const Element x_inv = g.inverse(x);
    for (Element h : elements)
      if (!member[g.multiply(g.multiply(x, h), x_inv)]) return false;
  }
  return true;
}

}  // namespace detail

inline SubgroupSet::SubgroupSet(FiniteGroup parent, std::vector<Element> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)), member_(parent_.order(), 0) {
  for (Element a : elements_) member_[a] = 1;
  normal_ = detail::conjugation_closed(parent_, member_, elements_);
}

inline SubgroupSet SubgroupSet::from_elements(const FiniteGroup& parent,
                                              std::vector<Element> elements) {
  for (Element a : elements) parent.check_element(a);
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (elements.empty() || elements.front() != kIdentity)
    throw InvalidGroup("subgroup must contain the identity");
  if (parent.order() % elements.size() != 0)
    throw InvalidGroup("subset order does not divide the group order");
  std::vector<char> member(parent.order(), 0);
  for (Element a : elements) member[a] = 1;
  for (Element a : elements) {
    if (!member[parent.inverse(a)]) throw InvalidGroup("subset is not closed under inverses");
    for (Element b : elements)
      if (!member[parent.multiply(a, b)]) throw InvalidGroup("subset is not closed under products");
  }
  return SubgroupSet(parent, std::move(elements));
}

// Smallest subgroup containing `gens`: breadth-first right multiplication by
// the generators from the identity until no new element appears.
inline SubgroupSet generated_subgroup(const FiniteGroup& g, const std::vector<Element>& gens) {
  for (Element a : gens) g.check_element(a);
  std::vector<char> member(g.order(), 0);
  std::vector<Element> elements{kIdentity};
  member[kIdentity] = 1;
  std::deque<Element> frontier{kIdentity};
  while (!frontier.empty()) {
    const Element x = frontier.front();
    frontier.pop_front();
    for (Element s : gens) {
      const Element y = g.multiply(x, s);
      if (!member[y]) {
        member[y] = 1;
        elements.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  return SubgroupSet::from_elements(g, std::move(elements));
}

// Exhaustive conjugation test g h g^-1 in H.
inline bool is_normal(const FiniteGroup& g, const SubgroupSet& h) {
  if (!h.parent().same_table(g)) throw InvalidArgument("subgroup does not belong to this group");
  std::vector<char> member(g.order(), 0);
  for (Element a : h.elements()) member[a] = 1;
  return detail::conjugation_closed(g, member, h.elements());
}

// Greedy generating set: scan elements ascending, keep those not already
// generated. Not necessarily minimum; deterministic.
inline std::vector<Element> greedy_generators(const SubgroupSet& h) {
  std::vector<Element> gens;
  std::vector<char> reached(h.parent().order(), 0);
  reached[kIdentity] = 1;
  for (Element a : h.elements()) {
    if (reached[a]) continue;
    gens.push_back(a);
    const auto closure = generated_subgroup(h.parent(), gens);
    for (Element x : closure.elements()) reached[x] = 1;
  }
  return gens;
}

// "{e}" for the trivial subgroup, otherwise "<g1,g2,...>" in element labels.
inline std::string describe(const SubgroupSet& h) {
  if (h.is_trivial()) return "{e}";
  std::string s = "<";
  const auto gens = greedy_generators(h);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ',';
    s += h.parent().label(gens[i]);
  }
  return s + ">";
}

// Every subgroup of g, by join-closure of the cyclic subgroups. Sorted by
// order, then lexicographically by element list.
inline std::vector<SubgroupSet> all_subgroups(const FiniteGroup& g,
                                              std::size_t max_order = kDefaultMaxOrder) {
  if (g.order() > max_order)
    throw BudgetExceeded("subgroup enumeration: group order " + std::to_string(g.order()) +
                         " exceeds budget of " + std::to_string(max_order));
  std::set<std::vector<Element>> known;
  std::vector<std::vector<Element>> pending;
  for (Element a = 0; a < g.order(); ++a) {
    auto c = generated_subgroup(g, {a}).elements();
    if (known.insert(c).second) pending.push_back(std::move(c));
  }
  std::vector<std::vector<Element>> done;
  while (!pending.empty()) {
    auto next = std::move(pending.back());
    pending.pop_back();
    for (const auto& other : done) {
      std::vector<Element> gens = next;
      gens.insert(gens.end(), other.begin(), other.end());
      auto join = generated_subgroup(g, gens).elements();
      if (known.insert(join).second) pending.push_back(std::move(join));
    }
    done.push_back(std::move(next));
  }
  std::vector<std::vector<Element>> sorted(known.begin(), known.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<SubgroupSet> out;
  out.reserve(sorted.size());
  for (auto& s : sorted) out.push_back(SubgroupSet::from_elements(g, std::move(s)));
  return out;
}

// Normal subgroups only, including {e} and g itself.
inline std::vector<SubgroupSet> all_normal_subgroups(const FiniteGroup& g,
                                                     std::size_t max_order = kDefaultMaxOrder) {
  auto subs = all_subgroups(g, max_order);
  std::vector<SubgroupSet> out;
  for (auto& h : subs)
    if (h.is_normal()) out.push_back(std::move(h));
  return out;
}

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

// G/H together with the projection G -> G/H. Coset 0 is H; cosets are
// numbered in ascending order of their smallest element, which is also
// their representative.
struct QuotientGroup {
  FiniteGroup group;
  std::vector<std::size_t> projection;
  std::vector<Element> representatives;
  FiniteGroup source;
  SubgroupSet kernel;
};

// Partition of g into left cosets of h, numbered by smallest element.
inline std::vector<std::size_t> coset_partition(const FiniteGroup& g, const SubgroupSet& h,
                                                std::vector<Element>* representatives = nullptr) {
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(g.order(), unassigned);
  std::size_t next = 0;
  for (Element a = 0; a < g.order(); ++a) {
    if (coset[a] != unassigned) continue;
    for (Element x : h.elements()) coset[g.multiply(a, x)] = next;
    if (representatives) representatives->push_back(a);
    ++next;
  }
  return coset;
}

inline QuotientGroup quotient(const FiniteGroup& g, const SubgroupSet& h) {
  if (!is_normal(g, h)) throw InvalidArgument("quotient: subgroup " + describe(h) + " is not normal in " + g.name());
  std::vector<Element> reps;
  auto projection = coset_partition(g, h, &reps);
  const std::size_t index = reps.size();
  FiniteGroup::Table table(index, std::vector<Element>(index));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < index; ++i) {
    labels.push_back(i == 0 ? "H" : g.label(reps[i]) + "H");
    for (std::size_t j = 0; j < index; ++j)
      table[i][j] = Element(projection[g.multiply(reps[i], reps[j])]);
  }
  auto group = FiniteGroup::from_cayley_table(table, g.name() + "/" + describe(h), std::move(labels));
  return QuotientGroup{std::move(group), std::move(projection), std::move(reps), g, h};
}

// ---------------------------------------------------------------------------
// Structure recognition
// ---------------------------------------------------------------------------

struct StructureFlags {
  bool is_trivial = false;
  bool is_cyclic = false;
  bool is_p_group = false;  // |Q| = p^m with m >= 1
  std::uint64_t prime = 0;  // p when is_p_group
  bool is_cyclic_p_group_or_trivial = false;
  // Every non-identity element has order 2 (vacuously true when trivial).
  bool is_elementary_abelian_2 = false;
};

inline StructureFlags recognize(const FiniteGroup& q) {
  StructureFlags f;
  const std::size_t n = q.order();
  f.is_trivial = n == 1;
  f.is_elementary_abelian_2 = true;
  for (Element a = 0; a < n; ++a) {
    const std::size_t o = element_order(q, a);
    if (o == n) f.is_cyclic = true;
    if (a != kIdentity && o != 2) f.is_elementary_abelian_2 = false;
  }
  if (auto pp = prime_power(n)) {
    f.is_p_group = true;
    f.prime = pp->first;
  }
  f.is_cyclic_p_group_or_trivial = f.is_trivial || (f.is_cyclic && f.is_p_group);
  return f;
}

}  // namespace nspg

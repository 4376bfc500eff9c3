#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nspg/error.hpp"

namespace nspg {

// Index of a group element. The identity is always index 0.
using Element = std::uint32_t;
inline constexpr Element kIdentity = 0;

inline constexpr std::size_t kDefaultMaxOrder = 256;
inline constexpr std::size_t kDefaultMaxSymmetricDegree = 5;
// Associativity is verified exhaustively up to this order.
inline constexpr std::size_t kAssociativityCheckLimit = 256;

// ---------------------------------------------------------------------------
// Number theory helpers
// ---------------------------------------------------------------------------

inline bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Euler's totient by trial-division factorization.
inline std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("euler_phi: n must be positive");
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

// Returns (p, e) with n = p^e, e >= 1, or nullopt when n is not a prime power
// (n = 1 included).
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  if (n != 1) return std::nullopt;
  return std::pair{p, e};
}

// ---------------------------------------------------------------------------
// FiniteGroup
// ---------------------------------------------------------------------------

// A finite group given by a validated Cayley table. Immutable; copies share
// the underlying table.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<Element>>;

  // Validates `table` (Latin square, identity, associativity). If the
  // identity is not at index 0 the indices of 0 and the identity are swapped,
  // together with their labels. Empty `labels` means decimal indices.
  static FiniteGroup from_cayley_table(const Table& table, std::string name = {},
                                       std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return data_->order; }

  // Unchecked product; callers validate indices at API boundaries.
  Element multiply(Element a, Element b) const noexcept {
    return data_->table[static_cast<std::size_t>(a) * data_->order + b];
  }
  Element inverse(Element a) const noexcept { return data_->inverse[a]; }

  std::span<const Element> row(Element a) const noexcept {
    return {data_->table.data() + static_cast<std::size_t>(a) * data_->order, data_->order};
  }

  const std::string& name() const noexcept { return data_->name; }
  const std::string& label(Element a) const { return data_->labels.at(a); }
  const std::vector<std::string>& labels() const noexcept { return data_->labels; }

  Table table() const {
    Table t(order(), std::vector<Element>(order()));
    for (std::size_t a = 0; a < order(); ++a)
      for (std::size_t b = 0; b < order(); ++b) t[a][b] = multiply(Element(a), Element(b));
    return t;
  }

  bool contains(std::uint64_t a) const noexcept { return a < order(); }

  void check_element(std::uint64_t a) const {
    if (!contains(a))
      throw InvalidArgument("element index " + std::to_string(a) + " out of range for group " +
                            name() + " of order " + std::to_string(order()));
  }

  // True when both handles denote the same multiplication table.
  bool same_table(const FiniteGroup& other) const noexcept {
    return data_ == other.data_ || (data_->order == other.data_->order &&
                                    data_->table == other.data_->table);
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) noexcept {
    return a.same_table(b) && a.data_->labels == b.data_->labels;
  }

 private:
  struct Data {
    std::size_t order = 0;
    std::vector<Element> table;  // row-major, table[a * order + b] = a*b
    std::vector<Element> inverse;
    std::string name;
    std::vector<std::string> labels;
  };

  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

inline FiniteGroup FiniteGroup::from_cayley_table(const Table& table, std::string name,
                                                  std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw InvalidGroup("Cayley table is empty");
  if (n > std::numeric_limits<Element>::max()) throw InvalidGroup("Cayley table too large");
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n)
      throw InvalidGroup("Cayley table is not square (row " + std::to_string(a) + ")");
    for (Element x : table[a])
      if (x >= n) throw InvalidGroup("Cayley table entry " + std::to_string(x) + " out of range");
  }

  // Latin square.
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      if (seen[table[a][b]]) throw InvalidGroup("row " + std::to_string(a) + " is not a permutation");
      seen[table[a][b]] = 1;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t a = 0; a < n; ++a) {
      if (seen[table[a][b]])
        throw InvalidGroup("column " + std::to_string(b) + " is not a permutation");
      seen[table[a][b]] = 1;
    }
  }

  // Two-sided identity.
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (!identity) throw InvalidGroup("Cayley table has no identity element");

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  }
  if (labels.size() != n) throw InvalidGroup("label count does not match group order");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n)
    throw InvalidGroup("element labels are not distinct");

  // Renumber so that the identity is index 0.
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::swap(perm[0], perm[*identity]);
  std::swap(labels[0], labels[*identity]);

  auto data = std::make_shared<Data>();
  data->order = n;
  data->table.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) data->table[perm[a] * n + perm[b]] = perm[table[a][b]];

  const auto mul = [&](std::size_t a, std::size_t b) { return data->table[a * n + b]; };
  if (n <= kAssociativityCheckLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = mul(a, b);
        for (std::size_t c = 0; c < n; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            throw InvalidGroup("associativity fails for (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
      }
  }

  data->inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    // Latin property guarantees exactly one b with a*b = e.
    for (std::size_t b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        data->inverse[a] = Element(b);
        break;
      }
  }
  data->name = name.empty() ? "G" + std::to_string(n) : std::move(name);
  data->labels = std::move(labels);
  return FiniteGroup(std::move(data));
}

// Least k >= 1 with a^k = e.
inline std::size_t element_order(const FiniteGroup& g, std::uint64_t a) {
  g.check_element(a);
  std::size_t k = 1;
  for (Element x = Element(a); x != kIdentity; x = g.multiply(x, Element(a))) ++k;
  return k;
}

// a^k by square-and-multiply; a^0 = e.
inline Element element_power(const FiniteGroup& g, std::uint64_t a, std::uint64_t k) {
  g.check_element(a);
  Element result = kIdentity;
  Element base = Element(a);
  while (k > 0) {
    if (k & 1u) result = g.multiply(result, base);
    base = g.multiply(base, base);
    k >>= 1u;
  }
  return result;
}

// ---------------------------------------------------------------------------
// GroupSpec
// ---------------------------------------------------------------------------

enum class GroupFamily { cyclic, dihedral, symmetric, quaternion8, elementary_abelian, direct_product };

// Compact description of a concrete group. `n` is the parameter of
// Z_n, D_n (order 2n) and S_n; `p`, `k` describe E(p,k) = (Z_p)^k.
struct GroupSpec {
  GroupFamily family = GroupFamily::cyclic;
  std::size_t n = 1;
  std::size_t p = 0;
  std::size_t k = 0;
  std::vector<GroupSpec> factors;

  static GroupSpec cyclic(std::size_t n) { return {GroupFamily::cyclic, n, 0, 0, {}}; }
  static GroupSpec dihedral(std::size_t n) { return {GroupFamily::dihedral, n, 0, 0, {}}; }
  static GroupSpec symmetric(std::size_t n) { return {GroupFamily::symmetric, n, 0, 0, {}}; }
  static GroupSpec quaternion8() { return {GroupFamily::quaternion8, 0, 0, 0, {}}; }
  static GroupSpec elementary_abelian(std::size_t p, std::size_t k) {
    return {GroupFamily::elementary_abelian, 0, p, k, {}};
  }
  static GroupSpec direct_product(std::vector<GroupSpec> factors) {
    return {GroupFamily::direct_product, 0, 0, 0, std::move(factors)};
  }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;

  // Canonical string in the same grammar parse_group_spec accepts.
  std::string to_string() const {
    switch (family) {
      case GroupFamily::cyclic: return "Z" + std::to_string(n);
      case GroupFamily::dihedral: return "D" + std::to_string(n);
      case GroupFamily::symmetric: return "S" + std::to_string(n);
      case GroupFamily::quaternion8: return "Q8";
      case GroupFamily::elementary_abelian:
        return "E(" + std::to_string(p) + "," + std::to_string(k) + ")";
      case GroupFamily::direct_product: {
        std::string s;
        for (const auto& f : factors) {
          if (!s.empty()) s += 'x';
          s += f.to_string();
        }
        return s;
      }
    }
    return {};
  }
};

namespace detail {

inline std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

}  // namespace detail

// Order of the group a spec describes (saturating on overflow).
inline std::size_t spec_order(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::cyclic: return spec.n;
    case GroupFamily::dihedral: return detail::saturating_mul(2, spec.n);
    case GroupFamily::symmetric: {
      std::size_t r = 1;
      for (std::size_t i = 2; i <= spec.n; ++i) r = detail::saturating_mul(r, i);
      return r;
    }
    case GroupFamily::quaternion8: return 8;
    case GroupFamily::elementary_abelian: {
      std::size_t r = 1;
      for (std::size_t i = 0; i < spec.k; ++i) r = detail::saturating_mul(r, spec.p);
      return r;
    }
    case GroupFamily::direct_product: {
      std::size_t r = 1;
      for (const auto& f : spec.factors) r = detail::saturating_mul(r, spec_order(f));
      return r;
    }
  }
  return 0;
}

struct GroupBudget {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t max_symmetric_degree = kDefaultMaxSymmetricDegree;
};

namespace detail {

inline void validate_spec(const GroupSpec& spec, const GroupBudget& budget) {
  switch (spec.family) {
    case GroupFamily::cyclic:
    case GroupFamily::dihedral:
      if (spec.n == 0) throw InvalidArgument(spec.to_string() + ": parameter must be positive");
      break;
    case GroupFamily::symmetric:
      if (spec.n == 0) throw InvalidArgument(spec.to_string() + ": parameter must be positive");
      if (spec.n > budget.max_symmetric_degree)
        throw BudgetExceeded(spec.to_string() + ": symmetric degree exceeds budget of " +
                             std::to_string(budget.max_symmetric_degree));
      break;
    case GroupFamily::quaternion8: break;
    case GroupFamily::elementary_abelian:
      if (!is_prime(spec.p)) throw InvalidArgument(spec.to_string() + ": p must be prime");
      if (spec.k == 0) throw InvalidArgument(spec.to_string() + ": k must be positive");
      break;
    case GroupFamily::direct_product:
      if (spec.factors.empty()) throw InvalidArgument("direct product needs at least one factor");
      for (const auto& f : spec.factors) validate_spec(f, budget);
      break;
  }
  if (spec_order(spec) > budget.max_order)
    throw BudgetExceeded(spec.to_string() + ": order exceeds budget of " +
                         std::to_string(budget.max_order));
}

struct RawGroup {
  FiniteGroup::Table table;
  std::vector<std::string> labels;
};

inline RawGroup raw_cyclic(std::size_t n) {
  RawGroup g;
  g.table.assign(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    g.labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) g.table[a][b] = Element((a + b) % n);
  }
  return g;
}

// Rotations r^i at indices 0..n-1, reflections s r^i at n..2n-1.
inline RawGroup raw_dihedral(std::size_t n) {
  RawGroup g;
  const std::size_t order = 2 * n;
  const auto rot = [](std::size_t i) { return i == 0 ? std::string{} : i == 1 ? "r" : "r^" + std::to_string(i); };
  for (std::size_t i = 0; i < n; ++i) g.labels.push_back(i == 0 ? "e" : rot(i));
  for (std::size_t i = 0; i < n; ++i) g.labels.push_back("s" + rot(i));
  g.table.assign(order, std::vector<Element>(order));
  // (s^f1 r^i1)(s^f2 r^i2) = s^(f1+f2) r^((-1)^f2 i1 + i2)
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      const std::size_t f1 = a / n, i1 = a % n, f2 = b / n, i2 = b % n;
      const std::size_t twisted = f2 ? (n - i1) % n : i1;
      g.table[a][b] = Element(((f1 + f2) % 2) * n + (twisted + i2) % n);
    }
  return g;
}

inline std::string cycle_notation(const std::vector<int>& perm) {
  std::string s;
  std::vector<char> done(perm.size());
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == int(start)) continue;
    s += '(';
    std::size_t x = start;
    bool first = true;
    while (!done[x]) {
      done[x] = 1;
      if (!first) s += ' ';
      s += std::to_string(x + 1);
      first = false;
      x = std::size_t(perm[x]);
    }
    s += ')';
  }
  return s.empty() ? "()" : s;
}

// Permutations in lexicographic one-line order; (a*b)(x) = a(b(x)).
inline RawGroup raw_symmetric(std::size_t n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], Element(i));

  RawGroup g;
  const std::size_t order = perms.size();
  g.table.assign(order, std::vector<Element>(order));
  std::vector<int> c(n);
  for (std::size_t a = 0; a < order; ++a) {
    g.labels.push_back(cycle_notation(perms[a]));
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][std::size_t(perms[b][x])];
      g.table[a][b] = index.at(c);
    }
  }
  return g;
}

// Index 2u + s encodes (-1)^s * unit_u with units 1, i, j, k.
inline RawGroup raw_quaternion8() {
  // unit_product[u][v] = {sign, unit} for unit_u * unit_v.
  static constexpr std::pair<int, int> unit_product[4][4] = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  static const char* unit_names[4] = {"1", "i", "j", "k"};
  RawGroup g;
  g.table.assign(8, std::vector<Element>(8));
  for (int a = 0; a < 8; ++a) {
    g.labels.push_back(std::string(a % 2 ? "-" : "") + unit_names[a / 2]);
    for (int b = 0; b < 8; ++b) {
      const auto [sign, unit] = unit_product[a / 2][b / 2];
      g.table[std::size_t(a)][std::size_t(b)] = Element(2 * unit + ((a % 2 + b % 2 + sign) % 2));
    }
  }
  return g;
}

inline std::string tuple_label(const std::vector<std::string>& parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += parts[i];
  }
  return s + ")";
}

// Mixed-radix direct product, first factor most significant.
inline RawGroup raw_product(const std::vector<RawGroup>& parts) {
  std::vector<std::size_t> sizes;
  std::size_t order = 1;
  for (const auto& p : parts) {
    sizes.push_back(p.table.size());
    order *= p.table.size();
  }
  const auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(parts.size());
    for (std::size_t i = parts.size(); i-- > 0;) {
      d[i] = x % sizes[i];
      x /= sizes[i];
    }
    return d;
  };
  RawGroup g;
  g.table.assign(order, std::vector<Element>(order));
  for (std::size_t a = 0; a < order; ++a) {
    const auto da = digits(a);
    std::vector<std::string> parts_label;
    for (std::size_t i = 0; i < parts.size(); ++i) parts_label.push_back(parts[i].labels[da[i]]);
    g.labels.push_back(tuple_label(parts_label));
    for (std::size_t b = 0; b < order; ++b) {
      const auto db = digits(b);
      std::size_t c = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) c = c * sizes[i] + parts[i].table[da[i]][db[i]];
      g.table[a][b] = Element(c);
    }
  }
  return g;
}

inline RawGroup raw_group(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::cyclic: return raw_cyclic(spec.n);
    case GroupFamily::dihedral: return raw_dihedral(spec.n);
    case GroupFamily::symmetric: return raw_symmetric(spec.n);
    case GroupFamily::quaternion8: return raw_quaternion8();
    case GroupFamily::elementary_abelian: {
      RawGroup g = raw_product(std::vector<RawGroup>(spec.k, raw_cyclic(spec.p)));
      return g;
    }
    case GroupFamily::direct_product: {
      std::vector<RawGroup> parts;
      for (const auto& f : spec.factors) parts.push_back(raw_group(f));
      if (parts.size() == 1) return parts.front();
      return raw_product(parts);
    }
  }
  return {};
}

}  // namespace detail

// Deterministically builds and validates the group a spec describes.
inline FiniteGroup make_group(const GroupSpec& spec, const GroupBudget& budget = {}) {
  detail::validate_spec(spec, budget);
  auto raw = detail::raw_group(spec);
  return FiniteGroup::from_cayley_table(raw.table, spec.to_string(), std::move(raw.labels));
}

// Grammar (whitespace not allowed):
//   spec   := factor ( 'x' factor )*
//   factor := 'Z' num | 'D' num | 'S' num | 'Q8' | 'E(' num ',' num ')'
//   num    := [0-9]+
// A single factor parses to that family; two or more to a direct product.
// Parameter validity (positivity, primality) is checked by make_group.
inline GroupSpec parse_group_spec(std::string_view text) {
  std::size_t pos = 0;
  const auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("cannot parse group spec '" + std::string(text) + "' at offset " +
                      std::to_string(pos) + ": " + why);
  };
  const auto number = [&]() {
    const std::size_t start = pos;
    std::uint64_t v = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      if (v > (std::numeric_limits<std::uint32_t>::max)()) throw fail("number too large");
      v = v * 10 + std::uint64_t(text[pos] - '0');
      ++pos;
    }
    if (pos == start) throw fail("expected a number");
    return std::size_t(v);
  };
  const auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) throw fail(std::string("expected '") + c + "'");
    ++pos;
  };

  std::vector<GroupSpec> factors;
  for (;;) {
    if (pos >= text.size()) throw fail("expected a group factor");
    const char head = text[pos++];
    switch (head) {
      case 'Z': factors.push_back(GroupSpec::cyclic(number())); break;
      case 'D': factors.push_back(GroupSpec::dihedral(number())); break;
      case 'S': factors.push_back(GroupSpec::symmetric(number())); break;
      case 'Q':
        if (number() != 8) throw fail("only Q8 is supported");
        factors.push_back(GroupSpec::quaternion8());
        break;
      case 'E': {
        expect('(');
        const std::size_t p = number();
        expect(',');
        const std::size_t k = number();
        expect(')');
        factors.push_back(GroupSpec::elementary_abelian(p, k));
        break;
      }
      default: --pos; throw fail("unknown group family");
    }
    if (pos == text.size()) break;
    expect('x');
  }
  if (factors.size() == 1) return factors.front();
  return GroupSpec::direct_product(std::move(factors));
}

}  // namespace nspg

#include "mip/blackbox.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mip/arith.hpp"

namespace mip {

namespace {

IndexSet make_index_set(std::vector<char> mask) {
  IndexSet s;
  s.mask = std::move(mask);
  for (std::size_t g = 0; g < s.mask.size(); ++g)
    if (s.mask[g]) s.elems.push_back(static_cast<std::int32_t>(g));
  return s;
}

}  // namespace

BlackBoxGroup::BlackBoxGroup(std::int32_t n, std::vector<std::int32_t> table, bool validate)
    : n_(n), tab_(std::move(table)) {
  if (n_ <= 0 || tab_.size() != static_cast<std::size_t>(n_) * n_)
    throw std::runtime_error("table-format: table size does not match the declared order");
  if (validate) check_structure();
  build_inverses();
}

void BlackBoxGroup::check_structure() const {
  const std::size_t n = static_cast<std::size_t>(n_);
  for (std::int32_t v : tab_)
    if (v < 0 || v >= n_)
      throw std::runtime_error("table-format: entry out of range");
  for (std::size_t j = 0; j < n; ++j)
    if (tab_[j] != static_cast<std::int32_t>(j) || tab_[j * n] != static_cast<std::int32_t>(j))
      throw std::runtime_error("table-format: element 0 is not a two-sided identity");
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      std::int32_t v = tab_[i * n + j];
      if (seen[v]) throw std::runtime_error("table-format: not a latin square (row)");
      seen[v] = 1;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::int32_t v = tab_[i * n + j];
      if (seen[v]) throw std::runtime_error("table-format: not a latin square (column)");
      seen[v] = 1;
    }
  }
  auto assoc = [&](std::int32_t a, std::int32_t b, std::int32_t c) {
    return mul(mul(a, b), c) == mul(a, mul(b, c));
  };
  if (n_ <= 256) {
    for (std::int32_t a = 0; a < n_; ++a)
      for (std::int32_t b = 0; b < n_; ++b)
        for (std::int32_t c = 0; c < n_; ++c)
          if (!assoc(a, b, c))
            throw std::runtime_error("table-format: associativity fails");
  } else {
    SplitMix64 rng(0x5ba1ce0fu);
    for (int k = 0; k < 50000; ++k) {
      auto a = static_cast<std::int32_t>(rng.below(n));
      auto b = static_cast<std::int32_t>(rng.below(n));
      auto c = static_cast<std::int32_t>(rng.below(n));
      if (!assoc(a, b, c))
        throw std::runtime_error("table-format: associativity fails");
    }
  }
}

void BlackBoxGroup::build_inverses() {
  inv_.assign(n_, -1);
  for (std::int32_t a = 0; a < n_; ++a) {
    for (std::int32_t b = 0; b < n_; ++b)
      if (mul(a, b) == 0 && mul(b, a) == 0) {
        inv_[a] = b;
        break;
      }
    if (inv_[a] < 0) throw std::runtime_error("table-format: element without inverse");
  }
}

std::int32_t BlackBoxGroup::pow(std::int32_t a, std::uint64_t e) const {
  std::int32_t r = 0, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

BlackBoxGroup BlackBoxGroup::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "pgrouptable v1")
    throw std::runtime_error("table-format: missing 'pgrouptable v1' header");
  long long n = 0;
  if (!std::getline(in, line))
    throw std::runtime_error("table-format: missing order line");
  {
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key >> n) || key != "order" || n <= 0)
      throw std::runtime_error("table-format: bad order line");
  }
  std::vector<std::int32_t> tab;
  tab.reserve(static_cast<std::size_t>(n) * n);
  long long v;
  while (in >> v) tab.push_back(static_cast<std::int32_t>(v));
  if (tab.size() != static_cast<std::size_t>(n) * n)
    throw std::runtime_error("table-format: wrong number of entries");
  return BlackBoxGroup(static_cast<std::int32_t>(n), std::move(tab), true);
}

BlackBoxGroup BlackBoxGroup::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("io-error: cannot open " + path);
  return load(in);
}

void BlackBoxGroup::save(std::ostream& out) const {
  out << "pgrouptable v1\n";
  out << "order " << n_ << "\n";
  for (std::int32_t i = 0; i < n_; ++i) {
    const std::size_t row = static_cast<std::size_t>(i) * n_;
    for (std::int32_t j = 0; j < n_; ++j) {
      if (j) out << ' ';
      out << tab_[row + j];
    }
    out << '\n';
  }
}

void BlackBoxGroup::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("io-error: cannot write " + path);
  save(out);
}

std::uint64_t element_order(const BlackBoxGroup& G, std::int32_t g) {
  std::uint64_t k = 1;
  std::int32_t a = g;
  while (a != 0) {
    a = G.mul(a, g);
    ++k;
  }
  return k;
}

std::uint64_t group_exponent(const BlackBoxGroup& G) {
  std::uint64_t e = 1;
  for (std::int32_t g = 0; g < G.size(); ++g) e = std::max(e, element_order(G, g));
  return e;
}

std::int64_t group_prime(const BlackBoxGroup& G) {
  std::int64_t n = G.size();
  if (n < 2) throw std::runtime_error("not-a-p-group: trivial group has no defining prime");
  std::int64_t p = 0;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      p = d;
      break;
    }
  if (p == 0) p = n;
  while (n % p == 0) n /= p;
  if (n != 1) throw std::runtime_error("not-a-p-group: order has two prime divisors");
  return p;
}

IndexSet subgroup_generated(const BlackBoxGroup& G, const std::vector<std::int32_t>& gens) {
  std::vector<char> mask(G.size(), 0);
  std::deque<std::int32_t> work;
  mask[0] = 1;
  work.push_back(0);
  for (std::int32_t g : gens)
    if (!mask[g]) {
      mask[g] = 1;
      work.push_back(g);
    }
  while (!work.empty()) {
    std::int32_t a = work.front();
    work.pop_front();
    for (std::int32_t g : gens) {
      std::int32_t b = G.mul(a, g);
      if (!mask[b]) {
        mask[b] = 1;
        work.push_back(b);
      }
    }
  }
  return make_index_set(std::move(mask));
}

IndexSet derived_subgroup(const BlackBoxGroup& G) {
  std::vector<char> seen(G.size(), 0);
  std::vector<std::int32_t> gens;
  for (std::int32_t a = 0; a < G.size(); ++a)
    for (std::int32_t b = 0; b < G.size(); ++b) {
      std::int32_t c = G.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        if (c != 0) gens.push_back(c);
      }
    }
  return subgroup_generated(G, gens);
}

IndexSet center(const BlackBoxGroup& G) {
  std::vector<char> mask(G.size(), 0);
  for (std::int32_t a = 0; a < G.size(); ++a) {
    bool central = true;
    for (std::int32_t b = 0; b < G.size() && central; ++b)
      central = G.mul(a, b) == G.mul(b, a);
    mask[a] = central ? 1 : 0;
  }
  return make_index_set(std::move(mask));
}

IndexSet frattini_subgroup(const BlackBoxGroup& G) {
  std::int64_t p = group_prime(G);
  std::vector<char> seen(G.size(), 0);
  std::vector<std::int32_t> gens;
  auto add = [&](std::int32_t g) {
    if (!seen[g]) {
      seen[g] = 1;
      if (g != 0) gens.push_back(g);
    }
  };
  for (std::int32_t a = 0; a < G.size(); ++a) {
    add(G.pow(a, static_cast<std::uint64_t>(p)));
    for (std::int32_t b = 0; b < G.size(); ++b) add(G.commutator(a, b));
  }
  return subgroup_generated(G, gens);
}

bool is_abelian(const BlackBoxGroup& G) {
  for (std::int32_t a = 0; a < G.size(); ++a)
    for (std::int32_t b = a + 1; b < G.size(); ++b)
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

bool nilpotency_class_le2(const BlackBoxGroup& G) {
  IndexSet d = derived_subgroup(G);
  IndexSet z = center(G);
  for (std::int32_t g : d.elems)
    if (!z.contains(g)) return false;
  return true;
}

Quotient quotient(const BlackBoxGroup& G, const IndexSet& N) {
  for (std::int32_t s : N.elems)
    for (std::int32_t g = 0; g < G.size(); ++g)
      if (!N.contains(G.mul(G.mul(G.inv(g), s), g)))
        throw std::runtime_error("not-normal: subgroup is not normal");
  std::vector<std::int32_t> proj(G.size(), -1);
  std::vector<std::int32_t> reps;
  for (std::int32_t g = 0; g < G.size(); ++g) {
    if (proj[g] >= 0) continue;
    std::int32_t id = static_cast<std::int32_t>(reps.size());
    reps.push_back(g);
    for (std::int32_t s : N.elems) proj[G.mul(g, s)] = id;
  }
  const std::int32_t q = static_cast<std::int32_t>(reps.size());
  std::vector<std::int32_t> tab(static_cast<std::size_t>(q) * q);
  for (std::int32_t i = 0; i < q; ++i)
    for (std::int32_t j = 0; j < q; ++j)
      tab[static_cast<std::size_t>(i) * q + j] = proj[G.mul(reps[i], reps[j])];
  return Quotient{BlackBoxGroup(q, std::move(tab), false), std::move(proj), std::move(reps)};
}

int min_generators(const BlackBoxGroup& G) {
  if (G.size() == 1) return 0;
  std::int64_t p = group_prime(G);
  IndexSet phi = frattini_subgroup(G);
  std::uint64_t index = static_cast<std::uint64_t>(G.size()) / phi.size();
  return exact_log(index, static_cast<std::uint64_t>(p));
}

std::vector<int> abelian_type(const BlackBoxGroup& G) {
  if (!is_abelian(G)) throw std::runtime_error("internal: abelian_type on a nonabelian group");
  std::int64_t p = group_prime(G);
  std::vector<int> exps;
  BlackBoxGroup cur = G;
  while (cur.size() > 1) {
    std::int32_t best = 1;
    std::uint64_t best_ord = element_order(cur, 1);
    for (std::int32_t g = 2; g < cur.size(); ++g) {
      std::uint64_t o = element_order(cur, g);
      if (o > best_ord) {
        best_ord = o;
        best = g;
      }
    }
    exps.push_back(exact_log(best_ord, static_cast<std::uint64_t>(p)));
    cur = quotient(cur, subgroup_generated(cur, {best})).group;
  }
  return exps;
}

std::vector<std::int32_t> generating_set(const BlackBoxGroup& G) {
  if (G.size() == 1) return {};
  bool ppower = true;
  try {
    group_prime(G);
  } catch (const std::runtime_error&) {
    ppower = false;
  }
  std::vector<std::int32_t> gens;
  if (ppower) {
    // Grow through the Frattini quotient: each new generator must be a
    // non-generator escape, which keeps the sequence minimal.
    Quotient q = quotient(G, frattini_subgroup(G));
    IndexSet span = subgroup_generated(q.group, {});
    while (static_cast<std::int32_t>(span.size()) < q.group.size()) {
      for (std::int32_t g = 1; g < G.size(); ++g)
        if (!span.contains(q.proj[g])) {
          gens.push_back(g);
          break;
        }
      std::vector<std::int32_t> imgs;
      for (std::int32_t g : gens) imgs.push_back(q.proj[g]);
      span = subgroup_generated(q.group, imgs);
    }
    return gens;
  }
  IndexSet span = subgroup_generated(G, {});
  while (static_cast<std::int32_t>(span.size()) < G.size()) {
    for (std::int32_t g = 1; g < G.size(); ++g)
      if (!span.contains(g)) {
        gens.push_back(g);
        break;
      }
    span = subgroup_generated(G, gens);
  }
  return gens;
}

BlackBoxGroup relabel_with(const BlackBoxGroup& G, const std::vector<std::int32_t>& perm) {
  if (perm.size() != static_cast<std::size_t>(G.size()) || perm[0] != 0)
    throw std::runtime_error("invalid-permutation: must fix 0 and cover all elements");
  const std::size_t n = static_cast<std::size_t>(G.size());
  std::vector<std::int32_t> tab(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      tab[static_cast<std::size_t>(perm[i]) * n + perm[j]] =
          perm[G.mul(static_cast<std::int32_t>(i), static_cast<std::int32_t>(j))];
  return BlackBoxGroup(G.size(), std::move(tab), false);
}

BlackBoxGroup random_relabel(const BlackBoxGroup& G, std::uint64_t seed) {
  std::vector<std::int32_t> perm(G.size());
  std::iota(perm.begin(), perm.end(), 0);
  SplitMix64 rng(seed);
  for (std::size_t i = perm.size() - 1; i >= 2; --i) {
    std::size_t j = 1 + rng.below(i);  // uniform over 1..i
    std::swap(perm[i], perm[j]);
  }
  return relabel_with(G, perm);
}

}  // namespace mip

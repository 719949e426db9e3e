#include "mip/canon.hpp"

#include <algorithm>
#include <stdexcept>

#include "mip/arith.hpp"

namespace mip {

namespace {

// Shared scaffolding for the generating-pair scans.
struct PairScan {
  std::int64_t p;
  Quotient q;  // G/G'
  int m = 0, n1 = 0, n2 = 0;
  std::vector<std::uint64_t> ord_q;   // order of each class in G/G'
  std::vector<std::vector<char>> cyc; // cyc[c] = membership of <c> in G/G'
  std::uint64_t pn1 = 1, pn2 = 1;
  std::vector<std::vector<std::int32_t>> fibers;  // class -> elements above it
  std::vector<std::uint64_t> ord_g;               // element orders in G

  explicit PairScan(const BlackBoxGroup& G)
      : p(validate_family(G)), q(quotient(G, derived_subgroup(G))) {
    m = exact_log(static_cast<std::uint64_t>(G.size() / q.group.size()),
                  static_cast<std::uint64_t>(p));
    std::vector<int> type = abelian_type(q.group);
    if (type.size() != 2)
      throw std::runtime_error("not-2-generated: abelianization is not of rank 2");
    n1 = type[0];
    n2 = type[1];
    pn1 = ipow_checked(static_cast<std::uint64_t>(p), n1);
    pn2 = ipow_checked(static_cast<std::uint64_t>(p), n2);
    const std::int32_t qn = q.group.size();
    ord_q.resize(qn);
    cyc.assign(qn, {});
    for (std::int32_t c = 0; c < qn; ++c) {
      ord_q[c] = element_order(q.group, c);
      std::vector<char> mask(qn, 0);
      std::int32_t e = 0;
      do {
        mask[e] = 1;
        e = q.group.mul(e, c);
      } while (e != 0);
      cyc[c] = std::move(mask);
    }
    fibers.assign(qn, {});
    ord_g.resize(G.size());
    for (std::int32_t g = 0; g < G.size(); ++g) {
      ord_g[g] = element_order(G, g);
      fibers[q.proj[g]].push_back(g);
    }
  }

  bool pair_ok(std::int32_t c1, std::int32_t c2) const {
    if (ord_q[c1] != pn1 || ord_q[c2] != pn2) return false;
    // direct product: the two cyclic images intersect trivially (the order
    // product |<c1>| * |<c2>| = |Q| is then automatic)
    std::int32_t e = c2;
    while (e != 0) {
      if (cyc[c1][e]) return false;
      e = q.group.mul(e, c2);
    }
    return true;
  }
};

}  // namespace

std::int64_t validate_family(const BlackBoxGroup& G) {
  std::int64_t p = group_prime(G);
  if (!nilpotency_class_le2(G))
    throw std::runtime_error("class-too-large: derived subgroup is not central");
  if (min_generators(G) != 2)
    throw std::runtime_error("not-2-generated: minimal generating number is not 2");
  if (is_abelian(G))
    throw std::runtime_error("abelian-input: the classified family is nonabelian");
  return p;
}

void for_each_gpair(const BlackBoxGroup& G, const std::function<void(const GPair&)>& fn) {
  PairScan s(G);
  const std::int32_t qn = s.q.group.size();
  for (std::int32_t c1 = 0; c1 < qn; ++c1)
    for (std::int32_t c2 = 0; c2 < qn; ++c2) {
      if (!s.pair_ok(c1, c2)) continue;
      for (std::int32_t g1 : s.fibers[c1])
        for (std::int32_t g2 : s.fibers[c2])
          fn(GPair{g1, g2, s.ord_g[g1], s.ord_g[g2]});
    }
}

std::vector<GPair> gpairs(const BlackBoxGroup& G) {
  std::vector<GPair> out;
  for_each_gpair(G, [&](const GPair& p) { out.push_back(p); });
  return out;
}

CanonResult canonical_tuple_witness(const BlackBoxGroup& G) {
  PairScan s(G);
  const std::int32_t qn = s.q.group.size();
  // per-class maximum of element order over the fiber (first witness kept)
  std::vector<std::uint64_t> fiber_max(qn, 0);
  std::vector<std::int32_t> fiber_arg(qn, 0);
  for (std::int32_t c = 0; c < qn; ++c)
    for (std::int32_t g : s.fibers[c])
      if (s.ord_g[g] > fiber_max[c]) {
        fiber_max[c] = s.ord_g[g];
        fiber_arg[c] = g;
      }
  std::uint64_t best1 = 0, best2 = 0;
  std::int32_t w1 = -1, w2 = -1;
  for (std::int32_t c1 = 0; c1 < qn; ++c1)
    for (std::int32_t c2 = 0; c2 < qn; ++c2) {
      if (!s.pair_ok(c1, c2)) continue;
      std::uint64_t m1 = fiber_max[c1], m2 = fiber_max[c2];
      if (m1 > best1 || (m1 == best1 && m2 > best2)) {
        best1 = m1;
        best2 = m2;
        w1 = fiber_arg[c1];
        w2 = fiber_arg[c2];
      }
    }
  if (w1 < 0) throw std::runtime_error("internal: no generating pair found");
  const auto p = static_cast<std::uint64_t>(s.p);
  int o1 = exact_log(best1, p), o2 = exact_log(best2, p);
  Tuple5 t{s.p, s.m, s.n1, s.n2, s.m + s.n1 - o1, s.m + s.n2 - o2};
  if (!is_admissible(t))
    throw std::runtime_error("internal: classification produced a non-admissible tuple");
  return CanonResult{t, w1, w2};
}

Tuple5 canonical_tuple(const BlackBoxGroup& G) { return canonical_tuple_witness(G).tuple; }

bool relations_isomorphic(const BlackBoxGroup& H, const Tuple5& t) {
  if (!is_constructible(t))
    throw std::runtime_error("invalid-shape: tuple is not constructible");
  const auto p = static_cast<std::uint64_t>(t.p);
  std::uint64_t expected = ipow_checked(p, t.total());
  if (static_cast<std::uint64_t>(H.size()) != expected) return false;
  {
    std::uint64_t n = static_cast<std::uint64_t>(H.size());
    while (n % p == 0) n /= p;
    if (n != 1) return false;
  }
  const std::uint64_t pm = ipow_checked(p, t.m);
  const std::uint64_t pw1 = ipow_checked(p, t.n1), pw2 = ipow_checked(p, t.n2);
  const std::uint64_t pv1 = ipow_checked(p, t.s1), pv2 = ipow_checked(p, t.s2);

  // Generation happens in the Frattini quotient: a pair generates H iff its
  // images generate H/(H' H^p).
  Quotient fq = quotient(H, frattini_subgroup(H));
  if (static_cast<std::uint64_t>(fq.group.size()) != p * p) return false;
  const std::int32_t fn = fq.group.size();
  std::vector<char> gen2(static_cast<std::size_t>(fn) * fn, 0);
  for (std::int32_t u = 0; u < fn; ++u)
    for (std::int32_t v = 0; v < fn; ++v)
      gen2[static_cast<std::size_t>(u) * fn + v] =
          subgroup_generated(fq.group, {u, v}).size() == static_cast<std::size_t>(fn);

  std::vector<std::uint64_t> ord(H.size());
  for (std::int32_t g = 0; g < H.size(); ++g) ord[g] = element_order(H, g);
  std::vector<std::int32_t> cand(H.size());
  for (std::int32_t g = 0; g < H.size(); ++g) cand[g] = g;
  std::stable_sort(cand.begin(), cand.end(),
                   [&](std::int32_t a, std::int32_t b) { return ord[a] > ord[b]; });

  for (std::int32_t h1 : cand) {
    std::int32_t f1 = fq.proj[h1];
    for (std::int32_t h2 = 0; h2 < H.size(); ++h2) {
      if (!gen2[static_cast<std::size_t>(f1) * fn + fq.proj[h2]]) continue;
      std::int32_t a = H.commutator(h2, h1);
      if (H.mul(a, h1) != H.mul(h1, a) || H.mul(a, h2) != H.mul(h2, a)) continue;
      if (ord[a] > pm) continue;
      if (H.pow(h1, pw1) != H.pow(a, pv1)) continue;
      if (H.pow(h2, pw2) != H.pow(a, pv2)) continue;
      return true;
    }
  }
  return false;
}

namespace {

struct BruteContext {
  const BlackBoxGroup& G;
  const BlackBoxGroup& H;
  std::vector<std::int32_t> gens;
  std::vector<std::size_t> sub_sizes;       // |<g_1..g_k>| in G
  std::vector<std::int32_t> word_parent;    // BFS decomposition of G
  std::vector<std::int32_t> word_gen;
  std::vector<std::int32_t> bfs_order;
  std::vector<std::uint64_t> ord_g, ord_h;

  bool assign(std::vector<std::int32_t>& images, std::size_t level);
  bool check_full(const std::vector<std::int32_t>& images) const;
};

bool BruteContext::check_full(const std::vector<std::int32_t>& images) const {
  std::vector<std::int32_t> phi(G.size(), -1);
  std::vector<char> hit(H.size(), 0);
  phi[0] = 0;
  hit[0] = 1;
  for (std::int32_t g : bfs_order) {
    if (g == 0) continue;
    std::int32_t img = H.mul(phi[word_parent[g]], images[word_gen[g]]);
    if (hit[img]) return false;  // not injective
    phi[g] = img;
    hit[img] = 1;
  }
  // verifying phi(g * s) = phi(g) * psi(s) for all g and generators s extends
  // multiplicativity to arbitrary right factors by induction on word length
  for (std::int32_t g = 0; g < G.size(); ++g)
    for (std::size_t k = 0; k < gens.size(); ++k)
      if (phi[G.mul(g, gens[k])] != H.mul(phi[g], images[k])) return false;
  return true;
}

bool BruteContext::assign(std::vector<std::int32_t>& images, std::size_t level) {
  if (level == gens.size()) return check_full(images);
  for (std::int32_t h = 0; h < H.size(); ++h) {
    if (ord_h[h] != ord_g[gens[level]]) continue;
    images[level] = h;
    std::vector<std::int32_t> partial(images.begin(), images.begin() + level + 1);
    if (subgroup_generated(H, partial).size() != sub_sizes[level]) continue;
    if (assign(images, level + 1)) return true;
  }
  return false;
}

}  // namespace

bool brute_isomorphic(const BlackBoxGroup& G, const BlackBoxGroup& H, std::int32_t order_cap) {
  if (G.size() > order_cap || H.size() > order_cap)
    throw std::runtime_error("cap-exceeded: brute isomorphism search cap");
  if (G.size() != H.size()) return false;
  std::vector<std::uint64_t> og(G.size()), oh(H.size());
  for (std::int32_t g = 0; g < G.size(); ++g) og[g] = element_order(G, g);
  for (std::int32_t h = 0; h < H.size(); ++h) oh[h] = element_order(H, h);
  {
    std::vector<std::uint64_t> a = og, b = oh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  BruteContext ctx{G, H, generating_set(G), {}, {}, {}, {}, std::move(og), std::move(oh)};
  if (ctx.gens.empty()) return true;  // both trivial
  for (std::size_t k = 1; k <= ctx.gens.size(); ++k)
    ctx.sub_sizes.push_back(
        subgroup_generated(G, std::vector<std::int32_t>(ctx.gens.begin(), ctx.gens.begin() + k))
            .size());
  // BFS word decomposition over the generating sequence
  ctx.word_parent.assign(G.size(), -1);
  ctx.word_gen.assign(G.size(), -1);
  std::vector<std::int32_t> queue{0};
  std::vector<char> seen(G.size(), 0);
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::int32_t a = queue[head];
    for (std::size_t k = 0; k < ctx.gens.size(); ++k) {
      std::int32_t b = G.mul(a, ctx.gens[k]);
      if (!seen[b]) {
        seen[b] = 1;
        ctx.word_parent[b] = a;
        ctx.word_gen[b] = static_cast<std::int32_t>(k);
        queue.push_back(b);
      }
    }
  }
  ctx.bfs_order = queue;
  std::vector<std::int32_t> images(ctx.gens.size(), 0);
  return ctx.assign(images, 0);
}

}  // namespace mip

#include "mip/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "mip/arith.hpp"
#include "mip/canon.hpp"
#include "mip/parallel.hpp"
#include "mip/pgroup.hpp"

namespace mip {

Fingerprint fingerprint(const Tuple5& t, const FingerprintOptions& opt) {
  if (!is_admissible(t)) throw std::runtime_error("invalid-tuple: fingerprint needs an admissible tuple");
  PGroup2 G(t);
  Fingerprint fp;
  fp.p = t.p;
  fp.order_exp = t.total();
  fp.ab = G.abelianization_type();
  fp.exp_exp = exact_log(G.exponent(), static_cast<std::uint64_t>(t.p));

  const bool need_x = (t.p == 2) && !opt.drop_x;
  const std::uint64_t order = G.order();
  if (need_x && order > opt.x_order_cap)
    throw std::runtime_error(
        "cap-exceeded: squaring-chain kernels need |G| within the direct cap (drop-x to skip)");
  const std::uint64_t direct_cap = (t.p == 2) ? opt.direct_d_cap_p2 : opt.direct_d_cap_odd;
  const bool want_filtration = need_x || (!opt.formula_only && order <= direct_cap);

  if (want_filtration) {
    BlackBoxGroup table = G.multiplication_table(std::max(opt.table_cap, order));
    Filtration F = delta_powers(table, opt.algebra);
    fp.d = opt.formula_only ? jennings_dims_formula(G) : jennings_dims_direct(table, F);
    if (need_x) fp.x = squaring_kernel_sizes(table, F);
  } else {
    fp.d = jennings_dims_formula(G);
  }
  return fp;
}

Fingerprint fingerprint_from_table(const BlackBoxGroup& G, const FingerprintOptions& opt) {
  const std::int64_t p = validate_family(G);
  Fingerprint fp;
  fp.p = p;
  fp.order_exp = exact_log(static_cast<std::uint64_t>(G.size()), static_cast<std::uint64_t>(p));
  IndexSet der = derived_subgroup(G);
  std::vector<int> type = abelian_type(quotient(G, der).group);
  fp.ab = {type[0], type[1]};
  fp.exp_exp = exact_log(group_exponent(G), static_cast<std::uint64_t>(p));
  Filtration F = delta_powers(G, opt.algebra);
  fp.d = jennings_dims_direct(G, F);
  if (p == 2 && !opt.drop_x) {
    if (static_cast<std::uint64_t>(G.size()) > opt.x_order_cap)
      throw std::runtime_error("cap-exceeded: squaring-chain kernels need |G| within the direct cap");
    fp.x = squaring_kernel_sizes(G, F);
  }
  return fp;
}

int u_from_d(std::int64_t p, const std::vector<int>& d) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (p == 2 ? d[i] < 3 : d[i] == 0) return static_cast<int>(i);
  }
  return static_cast<int>(d.size());  // the next entry past the trim is zero
}

std::pair<int, int> u_invariant(const Tuple5& t) {
  if (!is_admissible(t)) throw std::runtime_error("invalid-tuple: u-invariant needs an admissible tuple");
  PGroup2 G(t);
  int u = u_from_d(t.p, jennings_dims_formula(G));
  int predicted = (t.p == 2) ? std::min(t.n2 - 1, std::min(t.s1, t.s2)) : t.s2;
  return {u, predicted};
}

std::string first_difference(const Fingerprint& a, const Fingerprint& b) {
  if (a.order_exp != b.order_exp || a.p != b.p) return "order";
  if (a.ab != b.ab) return "abelianization";
  if (a.exp_exp != b.exp_exp) return "exponent";
  if (a.d != b.d) return "d";
  if (a.x != b.x) return "x";
  return "none";
}

VerifyReport verify_injectivity(std::int64_t p, int max_total, const VerifyOptions& opt) {
  std::vector<Tuple5> tuples = enumerate_admissible(p, max_total);
  VerifyReport report;
  report.records.resize(tuples.size());
  parallel_for(tuples.size(), opt.threads, [&](std::size_t i) {
    TupleRecord rec;
    rec.t = tuples[i];
    rec.fp = fingerprint(tuples[i], opt.fp);
    rec.u = u_from_d(p, rec.fp.d);
    rec.u_predicted =
        (p == 2) ? std::min(tuples[i].n2 - 1, std::min(tuples[i].s1, tuples[i].s2))
                 : tuples[i].s2;
    report.records[i] = std::move(rec);
  });

  for (const TupleRecord& rec : report.records)
    if (rec.u != rec.u_predicted) ++report.u_failures;

  // collisions: group the records by fingerprint
  std::vector<std::size_t> idx(report.records.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const Fingerprint &fa = report.records[a].fp, &fb = report.records[b].fp;
    return std::tie(fa.order_exp, fa.ab, fa.exp_exp, fa.d, fa.x) <
           std::tie(fb.order_exp, fb.ab, fb.exp_exp, fb.d, fb.x);
  });
  for (std::size_t i = 0; i + 1 < idx.size(); ++i)
    for (std::size_t j = i + 1; j < idx.size(); ++j) {
      if (!(report.records[idx[i]].fp == report.records[idx[j]].fp)) break;
      auto a = std::min(idx[i], idx[j]), b = std::max(idx[i], idx[j]);
      report.collisions.emplace_back(a, b);
    }
  std::sort(report.collisions.begin(), report.collisions.end());

  // per-(m, n1, n2, s1) class: what separates each s2 pair
  std::map<std::tuple<int, int, int, int>, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    const Tuple5& t = report.records[i].t;
    classes[{t.m, t.n1, t.n2, t.s1}].push_back(i);
  }
  for (const auto& [key, members] : classes)
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        SeparationRecord sep;
        std::tie(sep.m, sep.n1, sep.n2, sep.s1) = key;
        sep.s2_a = report.records[members[a]].t.s2;
        sep.s2_b = report.records[members[b]].t.s2;
        sep.component =
            first_difference(report.records[members[a]].fp, report.records[members[b]].fp);
        report.separations.push_back(std::move(sep));
      }
  return report;
}

}  // namespace mip

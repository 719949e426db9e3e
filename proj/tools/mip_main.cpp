// Command-line front end: enumerate / construct / canonicalize / invariants /
// verify / figure, with deterministic text output.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mip/blackbox.hpp"
#include "mip/canon.hpp"
#include "mip/invariants.hpp"
#include "mip/params.hpp"
#include "mip/pgroup.hpp"

namespace {

using nlohmann::ordered_json;

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

ordered_json tuple_json(const mip::Tuple5& t) {
  return ordered_json::array({t.p, t.m, t.n1, t.n2, t.s1, t.s2});
}

int run_enumerate(std::int64_t p, int max_total, bool as_json) {
  for (const mip::Tuple5& t : mip::enumerate_admissible(p, max_total)) {
    if (as_json) {
      ordered_json j{{"p", t.p}, {"m", t.m},   {"n1", t.n1},
                     {"n2", t.n2}, {"s1", t.s1}, {"s2", t.s2}};
      std::cout << j.dump() << '\n';
    } else {
      std::cout << mip::to_csv(t) << '\n';
    }
  }
  return 0;
}

int run_construct(std::int64_t p, const std::string& tuple_csv, const std::string& out,
                  std::uint64_t table_cap) {
  mip::Tuple5 t = mip::tuple_from_csv(p, tuple_csv);
  mip::PGroup2 G(t);
  G.multiplication_table(table_cap).save_file(out);
  return 0;
}

int run_canonicalize(const std::string& in, bool scramble, std::uint64_t seed) {
  mip::BlackBoxGroup G = mip::BlackBoxGroup::load_file(in);
  if (scramble) G = mip::random_relabel(G, seed);
  mip::CanonResult r = mip::canonical_tuple_witness(G);
  std::cout << mip::to_csv(r.tuple) << '\n';
  std::cout << "witness g1=" << r.g1 << " g2=" << r.g2 << '\n';
  return 0;
}

void print_invariant_line(const mip::Fingerprint& fp) {
  std::uint64_t order = 1, expo = 1;
  for (int i = 0; i < fp.order_exp; ++i) order *= static_cast<std::uint64_t>(fp.p);
  for (int i = 0; i < fp.exp_exp; ++i) expo *= static_cast<std::uint64_t>(fp.p);
  std::cout << "order=" << order << " abelianization=" << fp.ab.first << ',' << fp.ab.second
            << " exponent=" << expo << " d=" << join_ints(fp.d) << " x=" << join_ints(fp.x)
            << '\n';
}

int run_invariants(const std::string& in, std::int64_t p, const std::string& tuple_csv,
                   bool formula_only) {
  mip::FingerprintOptions opt;
  opt.formula_only = formula_only;
  if (!in.empty()) {
    print_invariant_line(mip::fingerprint_from_table(mip::BlackBoxGroup::load_file(in), opt));
  } else {
    print_invariant_line(mip::fingerprint(mip::tuple_from_csv(p, tuple_csv), opt));
  }
  return 0;
}

int run_verify(std::int64_t p, int max_total, bool formula_only, bool drop_x,
               unsigned threads) {
  mip::VerifyOptions opt;
  opt.fp.formula_only = formula_only;
  opt.fp.drop_x = drop_x;
  opt.threads = threads;
  mip::VerifyReport rep = mip::verify_injectivity(p, max_total, opt);
  for (const mip::TupleRecord& rec : rep.records) {
    ordered_json j{{"record", "tuple"},
                   {"tuple", tuple_json(rec.t)},
                   {"order_exp", rec.fp.order_exp},
                   {"abelianization", {rec.fp.ab.first, rec.fp.ab.second}},
                   {"exponent_exp", rec.fp.exp_exp},
                   {"d", rec.fp.d},
                   {"x", rec.fp.x},
                   {"u", rec.u},
                   {"u_predicted", rec.u_predicted}};
    std::cout << j.dump() << '\n';
  }
  for (const auto& [a, b] : rep.collisions) {
    ordered_json j{{"record", "collision"},
                   {"a", tuple_json(rep.records[a].t)},
                   {"b", tuple_json(rep.records[b].t)}};
    std::cout << j.dump() << '\n';
  }
  for (const mip::SeparationRecord& s : rep.separations) {
    ordered_json j{{"record", "separation"},
                   {"shape", {s.m, s.n1, s.n2, s.s1}},
                   {"s2_pair", {s.s2_a, s.s2_b}},
                   {"component", s.component}};
    std::cout << j.dump() << '\n';
  }
  ordered_json summary{{"record", "summary"},
                       {"p", p},
                       {"max_total", max_total},
                       {"tuples", rep.records.size()},
                       {"collisions", rep.collisions.size()},
                       {"u_claim_failures", rep.u_failures}};
  std::cout << summary.dump() << '\n';
  return (rep.collisions.empty() && rep.u_failures == 0) ? 0 : 2;
}

int run_figure(std::int64_t p, int m, int n1, int n2, const std::string& svg_path) {
  auto pairs = mip::region(p, m, n1, n2);
  for (const auto& [s1, s2] : pairs) std::cout << s1 << ',' << s2 << '\n';
  if (!svg_path.empty()) {
    const int scale = 40, margin = 40;
    const int w = 2 * margin + scale * m, h = 2 * margin + scale * m;
    auto X = [&](int s) { return margin + s * scale; };
    auto Y = [&](int s) { return h - margin - s * scale; };
    std::ofstream svg(svg_path);
    if (!svg) throw std::runtime_error("io-error: cannot write " + svg_path);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\">\n";
    svg << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(m) << "\" y2=\""
        << Y(0) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(0) << "\" y2=\""
        << Y(m) << "\" stroke=\"black\"/>\n";
    for (int s = 0; s <= m; ++s) {
      svg << "<line x1=\"" << X(s) << "\" y1=\"" << Y(0) - 3 << "\" x2=\"" << X(s)
          << "\" y2=\"" << Y(0) + 3 << "\" stroke=\"black\"/>\n";
      svg << "<text x=\"" << X(s) << "\" y=\"" << Y(0) + 16
          << "\" font-size=\"10\" text-anchor=\"middle\">" << s << "</text>\n";
      svg << "<line x1=\"" << X(0) - 3 << "\" y1=\"" << Y(s) << "\" x2=\"" << X(0) + 3
          << "\" y2=\"" << Y(s) << "\" stroke=\"black\"/>\n";
      svg << "<text x=\"" << X(0) - 8 << "\" y=\"" << Y(s) + 3
          << "\" font-size=\"10\" text-anchor=\"end\">" << s << "</text>\n";
    }
    for (const auto& [s1, s2] : pairs)
      svg << "<circle cx=\"" << X(s1) << "\" cy=\"" << Y(s2) << "\" r=\"4\"/>\n";
    svg << "</svg>\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonical parameters and group-algebra invariants for two-generator "
               "p-groups of class at most 2"};
  app.require_subcommand(1);

  std::int64_t p = 2;
  int max_total = 3;
  bool as_json = false, as_csv = false;
  auto* cmd_enum = app.add_subcommand("enumerate", "list admissible parameter tuples");
  cmd_enum->add_option("--p", p, "prime")->required();
  cmd_enum->add_option("--max-total", max_total, "bound on m+n1+n2")->required();
  cmd_enum->add_flag("--json", as_json, "one JSON object per line");
  cmd_enum->add_flag("--csv", as_csv, "one CSV line per tuple (default)");

  std::string tuple_csv, out_path, in_path;
  std::uint64_t table_cap = 4096;
  auto* cmd_con = app.add_subcommand("construct", "write the multiplication table of a tuple");
  cmd_con->add_option("--p", p, "prime")->required();
  cmd_con->add_option("--tuple", tuple_csv, "m,n1,n2,s1,s2")->required();
  cmd_con->add_option("--out", out_path, "output table file")->required();
  cmd_con->add_option("--table-cap", table_cap, "largest allowed order");

  std::uint64_t seed = 1;
  auto* cmd_canon = app.add_subcommand("canonicalize", "canonical tuple of a table file");
  cmd_canon->add_option("--in", in_path, "table file")->required();
  auto* seed_opt = cmd_canon->add_option("--seed", seed, "scramble the table first");

  bool formula_only = false, drop_x = false;
  auto* cmd_inv = app.add_subcommand("invariants", "fingerprint of a tuple or table");
  auto* inv_in = cmd_inv->add_option("--in", in_path, "table file");
  auto* inv_p = cmd_inv->add_option("--p", p, "prime (with --tuple)");
  auto* inv_tuple = cmd_inv->add_option("--tuple", tuple_csv, "m,n1,n2,s1,s2");
  cmd_inv->add_flag("--formula-only", formula_only, "closed-form dimension quotients");
  inv_tuple->needs(inv_p);
  inv_in->excludes(inv_tuple);

  unsigned threads = 0;
  auto* cmd_ver = app.add_subcommand("verify", "fingerprint sweep and collision report");
  cmd_ver->add_option("--p", p, "prime")->required();
  cmd_ver->add_option("--max-total", max_total, "bound on m+n1+n2")->required();
  cmd_ver->add_flag("--formula-only", formula_only, "closed-form dimension quotients");
  cmd_ver->add_flag("--drop-x", drop_x, "omit squaring-chain kernel sizes");
  cmd_ver->add_option("--threads", threads, "worker threads (default: all)");

  int m = 1, n1 = 1, n2 = 1;
  std::string svg_path;
  auto* cmd_fig = app.add_subcommand("figure", "admissible (s1,s2) region of a shape");
  cmd_fig->add_option("--p", p, "prime")->required();
  cmd_fig->add_option("--m", m, "exponent of |G'|")->required();
  cmd_fig->add_option("--n1", n1, "first abelianization exponent")->required();
  cmd_fig->add_option("--n2", n2, "second abelianization exponent")->required();
  cmd_fig->add_option("--svg", svg_path, "also write an SVG scatter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (cmd_enum->parsed()) {
      if (as_json && as_csv) throw std::runtime_error("invalid-flags: pick one of --json/--csv");
      return run_enumerate(p, max_total, as_json);
    }
    if (cmd_con->parsed()) return run_construct(p, tuple_csv, out_path, table_cap);
    if (cmd_canon->parsed()) return run_canonicalize(in_path, seed_opt->count() > 0, seed);
    if (cmd_inv->parsed()) {
      if (in_path.empty() && tuple_csv.empty())
        throw std::runtime_error("invalid-flags: need --in or --tuple");
      return run_invariants(in_path, p, tuple_csv, formula_only);
    }
    if (cmd_ver->parsed()) return run_verify(p, max_total, formula_only, drop_x, threads);
    if (cmd_fig->parsed()) return run_figure(p, m, n1, n2, svg_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

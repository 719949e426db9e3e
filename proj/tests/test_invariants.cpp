#include "doctest.h"
#include "mip/canon.hpp"
#include "mip/invariants.hpp"
#include "mip/pgroup.hpp"

using namespace mip;

TEST_CASE("fingerprints of the order-8 pair differ only in the kernel sizes") {
  Fingerprint q8 = fingerprint(Tuple5{2, 1, 1, 1, 0, 0});
  Fingerprint d8 = fingerprint(Tuple5{2, 1, 1, 1, 0, 1});
  CHECK(q8.order_exp == d8.order_exp);
  CHECK(q8.ab == d8.ab);
  CHECK(q8.exp_exp == d8.exp_exp);
  CHECK(q8.d == d8.d);
  CHECK(q8.x != d8.x);
  CHECK(first_difference(q8, d8) == "x");
  REQUIRE(!q8.x.empty());
  CHECK(q8.x[0] == 1);
  CHECK(d8.x[0] == 3);
}

TEST_CASE("the order-16 pair with equal dimension data") {
  Fingerprint a = fingerprint(Tuple5{2, 1, 2, 1, 1, 0});
  Fingerprint b = fingerprint(Tuple5{2, 1, 2, 1, 1, 1});
  CHECK(a.d == b.d);
  CHECK(a.exp_exp == b.exp_exp);
  CHECK(first_difference(a, b) == "x");
  CHECK(a.x[0] == 1);
  CHECK(b.x[0] == 2);
}

TEST_CASE("fingerprints are relabeling invariants") {
  for (const Tuple5& t : {Tuple5{2, 1, 2, 1, 1, 1}, Tuple5{3, 1, 2, 1, 1, 0}}) {
    Fingerprint from_tuple = fingerprint(t);
    BlackBoxGroup tab = PGroup2(t).multiplication_table();
    for (std::uint64_t seed : {4u, 9u}) {
      Fingerprint from_table = fingerprint_from_table(random_relabel(tab, seed));
      CHECK(from_table == from_tuple);
    }
  }
}

TEST_CASE("formula-only fingerprints agree with the direct path") {
  FingerprintOptions formula;
  formula.formula_only = true;
  for (std::int64_t p : {2, 3}) {
    for (const Tuple5& t : enumerate_admissible(p, 5)) {
      CHECK(fingerprint(t) == fingerprint(t, formula));
    }
  }
}

TEST_CASE("u-invariant claims") {
  CHECK(u_invariant(Tuple5{3, 1, 1, 1, 0, 0}) == std::pair<int, int>{0, 0});
  CHECK(u_invariant(Tuple5{2, 1, 1, 1, 0, 0}) == std::pair<int, int>{0, 0});
  CHECK(u_invariant(Tuple5{3, 2, 2, 2, 1, 1}) == std::pair<int, int>{1, 1});
  CHECK(u_invariant(Tuple5{2, 2, 2, 2, 1, 1}) == std::pair<int, int>{1, 1});
  for (std::int64_t p : {2, 3}) {
    for (const Tuple5& t : enumerate_admissible(p, 6)) {
      auto [u, predicted] = u_invariant(t);
      CHECK(u == predicted);
    }
  }
}

TEST_CASE("injectivity sweeps at unit-test scale") {
  VerifyReport r3 = verify_injectivity(3, 6);
  CHECK(r3.collisions.empty());
  CHECK(r3.u_failures == 0);
  VerifyReport r2 = verify_injectivity(2, 6);
  CHECK(r2.collisions.empty());
  CHECK(r2.u_failures == 0);
  for (const SeparationRecord& s : r2.separations) CHECK(s.component != "none");
}

TEST_CASE("dropping the kernel sizes exposes exactly the order-8 collision") {
  VerifyOptions opt;
  opt.fp.drop_x = true;
  VerifyReport r = verify_injectivity(2, 3, opt);
  REQUIRE(r.collisions.size() == 1);
  auto [a, b] = r.collisions[0];
  CHECK(r.records[a].t == Tuple5{2, 1, 1, 1, 0, 0});
  CHECK(r.records[b].t == Tuple5{2, 1, 1, 1, 0, 1});
  REQUIRE(r.separations.size() >= 1);
}

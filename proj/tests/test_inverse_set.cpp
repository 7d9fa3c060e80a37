#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invcorr/fixtures.hpp"
#include "invcorr/morita.hpp"
#include "invcorr/set_ops.hpp"

using namespace invcorr;

namespace {

RightSet mul_pairing_set(SgPtr t) {
  // same action as the canonical set but pairing <s|s'> = s s'
  RightSet u = semigroup_as_right_set(t);
  for (Idx a = 0; a < u.size; ++a) {
    for (Idx b = 0; b < u.size; ++b) {
      u.pairing[static_cast<size_t>(a) * u.size + b] = t->mul(a, b);
    }
  }
  return u;
}

RightSet double_carrier(const RightSet& u) {
  // two indistinguishable copies of every element: regular but not inverse
  RightSet w;
  w.sg = u.sg;
  w.size = 2 * u.size;
  const Idx nt = w.sg->size();
  w.action.resize(static_cast<size_t>(w.size) * nt);
  w.pairing.resize(static_cast<size_t>(w.size) * w.size);
  for (Idx a = 0; a < w.size; ++a) {
    Idx base = a % u.size, copy = a / u.size;
    for (Idx t = 0; t < nt; ++t) {
      w.action[static_cast<size_t>(a) * nt + t] =
          copy * u.size + u.act(base, t);
    }
    for (Idx b = 0; b < w.size; ++b) {
      w.pairing[static_cast<size_t>(a) * w.size + b] =
          u.pair(base, b % u.size);
    }
  }
  return w;
}

}  // namespace

TEST_CASE("canonical right set passes everything") {
  for (const auto& f : fixture_semigroups()) {
    RightSet u = semigroup_as_right_set(f.sg);
    CHECK(check_right_regular(u).ok());
    auto inv = check_right_inverse(u);
    CHECK(inv.passed);
    CHECK(is_right_full(u));
  }
}

TEST_CASE("product pairing: fine on a semilattice, R-iii fails on Z3") {
  RightSet e2 = mul_pairing_set(fx_E2());
  CHECK(check_right_regular(e2).ok());
  CHECK(check_right_inverse(e2).passed);

  // on Z2 the product pairing coincides with the canonical one, since
  // every element is self-inverse
  RightSet z2 = mul_pairing_set(fx_Z2());
  CHECK(z2.pairing == semigroup_as_right_set(fx_Z2()).pairing);
  CHECK(check_right_regular(z2).ok());

  // on Z3 it breaks: 1*<1|1> = 1+1+1 = 0 != 1
  RightSet z3 = mul_pairing_set(fx_Z3());
  auto rep = check_right_regular(z3);
  CHECK_FALSE(rep.ok());
  bool riii_at_one = false;
  for (const auto& v : rep.violations) {
    if (v.axiom == "R-iii" && v.witness == std::vector<Idx>{1}) {
      riii_at_one = true;
    }
  }
  CHECK(riii_at_one);
}

TEST_CASE("empty carrier is vacuously an inverse set") {
  RightSet u{fx_E2(), 0, {}, {}};
  CHECK(check_right_regular(u).ok());
  CHECK(check_right_inverse(u).passed);
  CHECK_FALSE(is_right_full(u));
}

TEST_CASE("regular pairing violating R-iv over the trivial group") {
  // two points, pairing constantly e
  RightSet u{fx_trivial(), 2, {0, 1}, {0, 0, 0, 0}};
  CHECK(check_right_regular(u).ok());
  auto inv = check_right_inverse(u);
  CHECK_FALSE(inv.passed);
  CHECK(inv.witness == std::vector<Idx>{0, 1});
  CHECK(inv.conditions == std::array<bool, 4>{false, false, false, false});
}

TEST_CASE("doubled carriers are regular but never inverse") {
  for (const auto& f : fixture_semigroups()) {
    if (f.sg->size() == 0) {
      continue;
    }
    RightSet w = double_carrier(semigroup_as_right_set(f.sg));
    CHECK(check_right_regular(w).ok());
    CHECK_FALSE(check_right_inverse(w).passed);
  }
}

TEST_CASE("fullness") {
  CHECK(is_right_full(semigroup_as_right_set(fx_I2())));
  RightSet singleton{fx_E2(), 1, {0, 0}, {0}};
  CHECK(check_right_regular(singleton).ok());
  CHECK_FALSE(is_right_full(singleton));
}

TEST_CASE("left canonical set and mirrors") {
  for (const auto& f : fixture_semigroups()) {
    LeftSet u = semigroup_as_left_set(f.sg);
    CHECK(check_left_regular(u).ok());
    CHECK(check_left_inverse(u).passed);
    CHECK(is_left_full(u));
  }
}

TEST_CASE("left pairing basics") {
  for (const auto& f : fixture_semigroups()) {
    LeftSet u = semigroup_as_left_set(f.sg);
    const auto& s = *f.sg;
    for (Idx a = 0; a < u.size; ++a) {
      CHECK(s.is_idempotent(u.pair(a, a)));
      for (Idx b = 0; b < u.size; ++b) {
        for (Idx x = 0; x < s.size(); ++x) {
          CHECK(u.pair(a, u.act(x, b)) == s.mul(u.pair(a, b), s.star(x)));
        }
      }
    }
  }
}

TEST_CASE("non-degeneracy lemma on inverse fixtures") {
  for (const auto& f : fixture_semigroups()) {
    RightSet u = semigroup_as_right_set(f.sg);
    for (Idx a = 0; a < u.size; ++a) {
      for (Idx b = 0; b < u.size; ++b) {
        if (u.pair(a, a) == u.pair(b, b) && u.pair(a, a) == u.pair(a, b)) {
          CHECK(a == b);
        }
        bool same_rows = true;
        for (Idx c = 0; c < u.size; ++c) {
          same_rows = same_rows && u.pair(a, c) == u.pair(b, c);
        }
        if (same_rows) {
          CHECK(a == b);
        }
      }
    }
  }
}

TEST_CASE("identity morita passes the checker") {
  for (const auto& f : fixture_semigroups()) {
    auto m = identity_morita(f.sg);
    auto rep = check_partial_morita(m);
    CHECK(rep.ok());
    CHECK(rep.morita());
  }
}

TEST_CASE("enlargement: whole semigroup gives the identity equivalence") {
  for (const auto& f : fixture_semigroups()) {
    if (f.sg->size() == 0) {
      continue;
    }
    std::vector<Idx> whole(f.sg->size());
    for (Idx i = 0; i < f.sg->size(); ++i) {
      whole[i] = i;
    }
    auto enl = enlargement_set(f.sg, whole);
    auto rep = check_partial_morita(enl.morita);
    CHECK(rep.morita());
    CHECK(enl.morita.size == f.sg->size());
  }
}

TEST_CASE("enlargement: I2 over a small idempotent subsemigroup") {
  auto i2 = fx_I2();
  // {empty, id} fails the precondition: id*s*id = s escapes the subset
  Idx id = *i2->identity();
  CHECK_THROWS_AS(enlargement_set(i2, std::vector<Idx>{0, id}), InputError);

  // {empty, restriction of id to the first point} works; element 1 in the
  // canonical enumeration is 0 -> 0
  auto enl = enlargement_set(i2, std::vector<Idx>{0, 1});
  auto rep = check_partial_morita(enl.morita);
  CHECK(rep.ok());
  CHECK(rep.left_full);
  CHECK(enl.morita.size == 3);  // empty, 0->0, 1->0
  // STS only reaches rank <= 1 maps, so not right full
  CHECK_FALSE(rep.right_full);
}

TEST_CASE("enlargement: E2 over its zero") {
  auto enl = enlargement_set(fx_E2(), std::vector<Idx>{0});
  CHECK(enl.morita.size == 1);
  auto rep = check_partial_morita(enl.morita);
  CHECK(rep.ok());
  CHECK(rep.left_full);
  CHECK_FALSE(rep.right_full);
}

TEST_CASE("enlargement rejects subsemigroups with TST outside T") {
  // T = {id} inside Z2: TST = Z2 which is not inside T
  CHECK_THROWS_AS(enlargement_set(fx_Z2(), std::vector<Idx>{0}), InputError);
}

TEST_CASE("direct sum of B2 sets") {
  RightSet b2 = semigroup_as_right_set(fx_B2());
  auto sum = direct_sum(b2, b2);
  CHECK(sum.set.size == 2 * b2.size - 1);
  CHECK(check_right_regular(sum.set).ok());
  CHECK(check_right_inverse(sum.set).passed);
  // cross pairings hit the zero
  Idx zero = *fx_B2()->zero();
  CHECK(sum.set.pair(sum.from_first[1], sum.from_second[1]) == zero);

  // summing with the singleton zero set gives the original back
  RightSet point{fx_B2(), 1, {0, 0, 0, 0, 0}, {0}};
  CHECK(check_right_inverse(point).passed);
  auto sum2 = direct_sum(b2, point);
  CHECK(sum2.set.size == b2.size);
  auto iso = find_set_isomorphism(sum2.set, b2);
  CHECK(iso.has_value());
}

TEST_CASE("direct sum requires a zero") {
  RightSet z2 = semigroup_as_right_set(fx_Z2());
  CHECK_THROWS_AS(direct_sum(z2, z2), InputError);
}

TEST_CASE("presheaf set over E2") {
  PresheafInput in;
  in.semilattice = fx_E2();
  in.part_sizes = {1, 1};  // U_0 = {y}, U_1 = {x}
  in.restrictions[{0, 0}] = {0};
  in.restrictions[{1, 1}] = {0};
  in.restrictions[{0, 1}] = {0};  // sigma_{0,1}(x) = y
  auto ps = presheaf_set(in);
  CHECK(ps.set.size == 2);
  CHECK(check_left_inverse(ps.set).passed);
}

TEST_CASE("presheaf with empty parts") {
  PresheafInput in;
  in.semilattice = fx_E2();
  in.part_sizes = {0, 0};
  in.restrictions[{0, 0}] = {};
  in.restrictions[{1, 1}] = {};
  in.restrictions[{0, 1}] = {};
  auto ps = presheaf_set(in);
  CHECK(ps.set.size == 0);
}

TEST_CASE("presheaf rejects non-functorial restrictions") {
  PresheafInput in;
  in.semilattice = fx_E3();
  in.part_sizes = {2, 1, 1};
  in.restrictions[{0, 0}] = {0, 1};
  in.restrictions[{1, 1}] = {0};
  in.restrictions[{2, 2}] = {0};
  in.restrictions[{0, 1}] = {0};
  in.restrictions[{1, 2}] = {0};
  in.restrictions[{0, 2}] = {1};  // disagrees with the composite
  CHECK_THROWS_AS(presheaf_set(in), InputError);
}

TEST_CASE("partial bijection biset") {
  auto b11 = partial_bijection_biset(1, 1);
  CHECK(b11.morita.size == 2);
  CHECK(check_partial_morita(b11.morita).ok());

  auto b12 = partial_bijection_biset(1, 2);
  CHECK(b12.morita.size == 3);
  CHECK(check_partial_morita(b12.morita).ok());

  auto b22 = partial_bijection_biset(2, 2);
  CHECK(b22.morita.size == 7);
  CHECK(check_partial_morita(b22.morita).morita());

  CHECK_THROWS_AS(partial_bijection_biset(4, 1), BudgetError);
}

TEST_CASE("set order matches the natural order on the canonical set") {
  for (const auto& f : fixture_semigroups()) {
    RightSet u = semigroup_as_right_set(f.sg);
    for (Idx a = 0; a < u.size; ++a) {
      CHECK(set_order(u, a, a));
      for (Idx b = 0; b < u.size; ++b) {
        CHECK(set_order(u, a, b) == natural_order(*f.sg, a, b));
      }
    }
  }
}

TEST_CASE("set order monotonicity") {
  for (const auto& f : fixture_semigroups()) {
    RightSet u = semigroup_as_right_set(f.sg);
    for (Idx a = 0; a < u.size; ++a) {
      for (Idx b = 0; b < u.size; ++b) {
        if (!set_order(u, a, b)) {
          continue;
        }
        for (Idx t = 0; t < f.sg->size(); ++t) {
          CHECK(set_order(u, u.act(a, t), u.act(b, t)));
        }
        for (Idx a2 = 0; a2 < u.size; ++a2) {
          for (Idx b2 = 0; b2 < u.size; ++b2) {
            if (set_order(u, a2, b2)) {
              CHECK(natural_order(*f.sg, u.pair(a, a2), u.pair(b, b2)));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("check_map and set isomorphisms") {
  RightSet u = semigroup_as_right_set(fx_B2());
  std::vector<Idx> id(u.size);
  for (Idx i = 0; i < u.size; ++i) {
    id[i] = i;
  }
  CHECK(check_map({u, u, id, MapKind::Both}).ok());

  auto iso = find_set_isomorphism(u, u);
  REQUIRE(iso.has_value());

  // U vs U + U differ already in size
  auto sum = direct_sum(u, u);
  CHECK_FALSE(find_set_isomorphism(u, sum.set).has_value());
}

TEST_CASE("a declared kind is re-checked") {
  RightSet u = semigroup_as_right_set(fx_E2());
  // constant map to the top is not equivariant
  SetMap bad{u, u, {1, 1}, MapKind::RightTMap};
  CHECK_FALSE(check_map(bad).ok());
}

TEST_CASE("left set isomorphism smoke test") {
  for (SgPtr g : {fx_Z2(), fx_Z3()}) {
    LeftSet canon = semigroup_as_left_set(g);
    auto iso = find_left_set_isomorphism(canon, canon);
    CHECK(iso.has_value());
  }
}

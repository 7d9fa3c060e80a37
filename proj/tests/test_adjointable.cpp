#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invcorr/adjointable.hpp"
#include "invcorr/fixtures.hpp"
#include "invcorr/set_ops.hpp"

using namespace invcorr;

namespace {

std::vector<Idx> compose(const std::vector<Idx>& f,
                         const std::vector<Idx>& g) {
  std::vector<Idx> h(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    h[i] = f[g[i]];
  }
  return h;
}

std::vector<RightSet> small_fixture_sets() {
  std::vector<RightSet> sets;
  for (const auto& f : fixture_semigroups()) {
    sets.push_back(semigroup_as_right_set(f.sg));
  }
  RightSet b2 = semigroup_as_right_set(fx_B2());
  sets.push_back(direct_sum(b2, b2).set);
  return sets;
}

}  // namespace

TEST_CASE("rank one maps in the canonical set are left translations") {
  for (SgPtr t : {fx_E2(), fx_Z2(), fx_B2(), fx_I2()}) {
    RightSet u = semigroup_as_right_set(t);
    for (Idx v = 0; v < u.size; ++v) {
      for (Idx w = 0; w < u.size; ++w) {
        AdjointableMap f = rank_one(u, u, v, w);
        Idx translator = t->mul(v, t->star(w));
        for (Idx x = 0; x < u.size; ++x) {
          CHECK(f.fwd[x] == t->mul(translator, x));
        }
      }
    }
  }
}

TEST_CASE("omega_{u,u} is idempotent and omega satisfies the sandwich") {
  RightSet u = semigroup_as_right_set(fx_B2());
  for (Idx a = 0; a < u.size; ++a) {
    AdjointableMap f = rank_one(u, u, a, a);
    CHECK(compose(f.fwd, f.fwd) == f.fwd);
    for (Idx b = 0; b < u.size; ++b) {
      AdjointableMap g = rank_one(u, u, a, b);
      AdjointableMap gdag = adjoint(g);
      CHECK(compose(g.fwd, compose(gdag.fwd, g.fwd)) == g.fwd);
      CHECK(is_adjoint_pair(u, u, g));
    }
  }
}

TEST_CASE("omega_{vt,u} equals omega_{v,ut*}") {
  RightSet u = semigroup_as_right_set(fx_I2());
  const auto& t = *fx_I2();
  for (Idx v = 0; v < u.size; ++v) {
    for (Idx w = 0; w < u.size; ++w) {
      for (Idx x = 0; x < t.size(); ++x) {
        auto lhs = rank_one(u, u, u.act(v, x), w);
        auto rhs = rank_one(u, u, v, u.act(w, t.star(x)));
        CHECK(lhs.fwd == rhs.fwd);
      }
    }
  }
}

TEST_CASE("K of the canonical set is the semigroup itself") {
  for (SgPtr t : {fx_E2(), fx_Z2(), fx_E3(), fx_B2(), fx_I2()}) {
    RightSet u = semigroup_as_right_set(t);
    auto k = enumerate_K(u, u);
    CHECK(k.size() == static_cast<size_t>(t->size()));
    auto ks = K_semigroup(u);
    CHECK(isomorphic(*ks.k.sg, *t));
  }
}

TEST_CASE("K of an empty source is empty") {
  RightSet empty{fx_E2(), 0, {}, {}};
  RightSet v = semigroup_as_right_set(fx_E2());
  CHECK(enumerate_K(empty, v).empty());
  CHECK(enumerate_K(v, empty).empty());
}

TEST_CASE("K size is bounded by the square of the carrier") {
  for (const auto& u : small_fixture_sets()) {
    CHECK(enumerate_K(u, u).size() <=
          static_cast<size_t>(u.size) * static_cast<size_t>(u.size));
  }
}

TEST_CASE("L of the E2 and Z2 canonical sets") {
  RightSet e2 = semigroup_as_right_set(fx_E2());
  auto le2 = enumerate_L(e2, e2);
  CHECK(le2.size() == 2);  // identity and the zero map
  auto lsg = L_semigroup(e2);
  CHECK(isomorphic(*lsg.sg, *fx_E2()));

  RightSet z2 = semigroup_as_right_set(fx_Z2());
  auto lz2 = enumerate_L(z2, z2);
  CHECK(lz2.size() == 2);  // the two left translations
  CHECK(isomorphic(*L_semigroup(z2).sg, *fx_Z2()));
}

TEST_CASE("K is contained in L") {
  for (const auto& u : small_fixture_sets()) {
    auto l = L_semigroup(u);
    for (const auto& f : enumerate_K(u, u)) {
      CHECK(l.index_of(f.fwd) >= 0);
    }
  }
}

TEST_CASE("L contains the identity as its identity element") {
  RightSet u = semigroup_as_right_set(fx_B2());
  auto l = L_semigroup(u);
  std::vector<Idx> id(u.size);
  for (Idx i = 0; i < u.size; ++i) {
    id[i] = i;
  }
  Idx idx = l.index_of(id);
  REQUIRE(idx >= 0);
  CHECK(l.sg->identity() == idx);
}

TEST_CASE("idempotents of K(E2-as-set) are the zero map and the identity") {
  RightSet e2 = semigroup_as_right_set(fx_E2());
  auto k = K_semigroup(e2);
  REQUIRE(k.k.sg->idempotents.size() == 2);
  CHECK(k.k.maps[k.k.sg->idempotents[0]].fwd == std::vector<Idx>{0, 0});
  CHECK(k.k.maps[k.k.sg->idempotents[1]].fwd == std::vector<Idx>{0, 1});
}

TEST_CASE("K and L theorems on every fixture set") {
  for (const auto& u : small_fixture_sets()) {
    auto kc = K_semigroup(u);  // all theorem assertions live inside
    CHECK(kc.k.sg->size() <= kc.ambient_l.sg->size());
  }
}

TEST_CASE("empty set: L is trivial, K is empty") {
  RightSet empty{fx_E2(), 0, {}, {}};
  auto l = L_semigroup(empty);
  CHECK(l.sg->size() == 1);
  auto k = K_semigroup(empty);
  CHECK(k.k.sg->size() == 0);
}

TEST_CASE("adjoint is an involution and reverses composition") {
  RightSet u = semigroup_as_right_set(fx_I2());
  auto l = L_semigroup(u);
  for (const auto& f : l.maps) {
    CHECK(adjoint(adjoint(f)) == f);
  }
  for (const auto& f : l.maps) {
    for (const auto& g : l.maps) {
      // (f g)dag = gdag fdag
      auto fg = compose(f.fwd, g.fwd);
      Idx fg_idx = l.index_of(fg);
      REQUIRE(fg_idx >= 0);
      CHECK(l.maps[fg_idx].adj == compose(g.adj, f.adj));
    }
  }
}

TEST_CASE("adjoint of a rank one swaps its legs; idempotents are self adjoint") {
  RightSet u = semigroup_as_right_set(fx_B2());
  for (Idx v = 0; v < u.size; ++v) {
    for (Idx w = 0; w < u.size; ++w) {
      CHECK(adjoint(rank_one(u, u, v, w)) == rank_one(u, u, w, v));
    }
  }
  auto l = L_semigroup(u);
  for (Idx i = 0; i < l.sg->size(); ++i) {
    if (l.sg->is_idempotent(i)) {
      CHECK(l.maps[i].adj == l.maps[i].fwd);
    }
  }
}

TEST_CASE("composition lemmas for omega") {
  RightSet u = semigroup_as_right_set(fx_I2());
  auto l = L_semigroup(u);
  for (const auto& phi : l.maps) {
    for (Idx v = 0; v < u.size; ++v) {
      for (Idx w = 0; w < u.size; ++w) {
        // phi omega_{v,w} = omega_{phi(v),w}
        CHECK(compose(phi.fwd, rank_one(u, u, v, w).fwd) ==
              rank_one(u, u, phi.fwd[v], w).fwd);
        // omega_{v,w} phi = omega_{v,phid(w)}
        CHECK(compose(rank_one(u, u, v, w).fwd, phi.fwd) ==
              rank_one(u, u, v, phi.adj[w]).fwd);
      }
    }
  }
}

TEST_CASE("idempotents of L commute with diagonal rank ones") {
  for (SgPtr t : {fx_E3(), fx_B2()}) {
    RightSet u = semigroup_as_right_set(t);
    auto l = L_semigroup(u);
    for (Idx i = 0; i < l.sg->size(); ++i) {
      if (!l.sg->is_idempotent(i)) {
        continue;
      }
      for (Idx a = 0; a < u.size; ++a) {
        auto om = rank_one(u, u, a, a).fwd;
        CHECK(compose(l.maps[i].fwd, om) == compose(om, l.maps[i].fwd));
      }
    }
  }
}

TEST_CASE("phid phi against omega: idempotent and commuting") {
  RightSet u = semigroup_as_right_set(fx_B2());
  auto l = L_semigroup(u);
  for (const auto& phi : l.maps) {
    auto pp = compose(phi.adj, phi.fwd);
    for (Idx a = 0; a < u.size; ++a) {
      auto om = rank_one(u, u, a, a).fwd;
      auto prod = compose(pp, om);
      CHECK(compose(prod, prod) == prod);
      CHECK(prod == compose(om, pp));
    }
  }
}

TEST_CASE("values of idempotent maps are reached through the pairing") {
  RightSet u = semigroup_as_right_set(fx_I2());
  auto l = L_semigroup(u);
  for (Idx i = 0; i < l.sg->size(); ++i) {
    if (!l.sg->is_idempotent(i)) {
      continue;
    }
    const auto& phi = l.maps[i];
    for (Idx a = 0; a < u.size; ++a) {
      Idx pa = phi.fwd[a];
      CHECK(pa == u.act(a, u.pair(a, pa)));
      CHECK(pa == u.act(a, u.pair(pa, a)));
      CHECK(pa == u.act(a, u.pair(pa, pa)));
    }
  }
}

TEST_CASE("morita_from_set") {
  // the canonical set recovers the identity equivalence up to isomorphism
  RightSet e3 = semigroup_as_right_set(fx_E3());
  auto sm = morita_from_set(e3);
  CHECK(isomorphic(*sm.morita.left, *fx_E3()));
  CHECK(isomorphic(*sm.morita.right, *fx_E3()));

  RightSet empty{fx_E2(), 0, {}, {}};
  auto esm = morita_from_set(empty);
  CHECK(esm.morita.size == 0);
  CHECK(esm.morita.left->size() == 0);
  CHECK(esm.morita.right->size() == 0);

  RightSet b2 = semigroup_as_right_set(fx_B2());
  auto bsm = morita_from_set(direct_sum(b2, b2).set);
  CHECK(check_partial_morita(bsm.morita).morita());
}

TEST_CASE("L(U,V) and K(U,V) are partial Morita equivalences") {
  RightSet e2 = semigroup_as_right_set(fx_E2());
  RightSet e2sum = direct_sum(e2, e2).set;
  auto pm = adjointable_biset(e2, e2sum, false);
  CHECK(check_partial_morita(pm).ok());
  auto pk = adjointable_biset(e2, e2sum, true);
  CHECK(check_partial_morita(pk).ok());
}

TEST_CASE("budget exhaustion raises") {
  RightSet u = semigroup_as_right_set(fx_I2());
  Budget tiny{3};
  CHECK_THROWS_AS(enumerate_L(u, u, tiny), BudgetError);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invcorr/bicategory.hpp"
#include "invcorr/fixtures.hpp"
#include "invcorr/set_ops.hpp"

using namespace invcorr;

namespace {

PartialMorita whole_enlargement(SgPtr s) {
  std::vector<Idx> whole(s->size());
  for (Idx i = 0; i < s->size(); ++i) {
    whole[i] = i;
  }
  return enlargement_set(s, whole).morita;
}

std::vector<PartialMorita> fixture_moritas() {
  std::vector<PartialMorita> out;
  for (const auto& f : fixture_semigroups()) {
    out.push_back(identity_morita(f.sg));
  }
  out.push_back(enlargement_set(fx_E2(), {0}).morita);
  out.push_back(enlargement_set(fx_E3(), {0, 1}).morita);
  out.push_back(enlargement_set(fx_I2(), {0, 1}).morita);
  out.push_back(partial_bijection_biset(1, 1).morita);
  out.push_back(partial_bijection_biset(1, 2).morita);
  out.push_back(partial_bijection_biset(2, 2).morita);
  out.push_back(morita_from_set(semigroup_as_right_set(fx_B2())).morita);
  return out;
}

}  // namespace

TEST_CASE("opposite of the identity is the identity up to isomorphism") {
  for (SgPtr t : {fx_E2(), fx_Z2(), fx_B2()}) {
    auto m = identity_morita(t);
    auto o = opposite(m);
    CHECK(check_partial_morita(o).morita());
    auto iso = find_correspondence_isomorphism(from_morita(o), from_morita(m));
    CHECK(iso.has_value());
  }
}

TEST_CASE("double opposite is the original") {
  for (const auto& m : fixture_moritas()) {
    auto oo = opposite(opposite(m));
    CHECK(oo.left_action == m.left_action);
    CHECK(oo.right_action == m.right_action);
    CHECK(oo.left_pairing == m.left_pairing);
    CHECK(oo.right_pairing == m.right_pairing);
  }
}

TEST_CASE("opposite of an enlargement passes the checker") {
  auto enl = enlargement_set(fx_E3(), {0, 1});
  auto o = opposite(enl.morita);
  CHECK(check_partial_morita(o).ok());
  CHECK_FALSE(check_partial_morita(o).morita());
}

TEST_CASE("unitors") {
  for (SgPtr t : {fx_E2(), fx_Z2(), fx_B2()}) {
    Correspondence c = identity_correspondence(t);
    auto lam = left_unitor(c);
    auto rho = right_unitor(c);
    // on the identity correspondence both unitors are the multiplication
    for (Idx a = 0; a < t->size(); ++a) {
      for (Idx b = 0; b < t->size(); ++b) {
        CHECK(lam.map[lam.product.cls(a, b)] == t->mul(a, b));
        CHECK(rho.map[rho.product.cls(a, b)] == t->mul(a, b));
      }
    }
  }
}

TEST_CASE("left unitor needs non-degeneracy") {
  RightSet b2 = semigroup_as_right_set(fx_B2());
  Correspondence degenerate;
  degenerate.left_sg = fx_E2();
  degenerate.right = b2;
  degenerate.left_action.resize(static_cast<size_t>(b2.size) * 2);
  for (Idx u = 0; u < b2.size; ++u) {
    Idx zu = fx_B2()->mul(0, u);
    degenerate.left_action[static_cast<size_t>(u) * 2 + 0] = zu;
    degenerate.left_action[static_cast<size_t>(u) * 2 + 1] = zu;
  }
  CHECK_THROWS_AS(left_unitor(degenerate), InputError);
}

TEST_CASE("triangle and pentagon on identity chains") {
  for (SgPtr t : {fx_E2(), fx_Z2()}) {
    Correspondence id = identity_correspondence(t);
    check_triangle(id, id);
    check_pentagon(id, id, id, id);
  }
}

TEST_CASE("pentagon on a mixed chain") {
  // enlargement E3 <- {0,1}, then opposite back, then identity, then a
  // hom correspondence
  auto enl = enlargement_set(fx_E3(), {0, 1});
  Correspondence c1 = from_morita(enl.morita);           // T01 -> E3
  Correspondence c2 = from_morita(opposite(enl.morita)); // E3 -> T01
  Correspondence c3 = identity_correspondence(c2.right.sg);
  SemigroupHom embed{c2.right.sg, fx_E3(), {0, 1}};
  REQUIRE(check_hom(embed));
  Correspondence c4 = from_hom(embed).corr;
  check_pentagon(c1, c2, c3, c4);
  check_triangle(c1, c2);
  check_triangle(c2, c4);
}

TEST_CASE("unitor naturality") {
  Correspondence id = identity_correspondence(fx_E2());
  std::vector<Idx> sigma{0, 1};
  check_unitor_naturality(id, id, sigma);
}

TEST_CASE("associator naturality with a non-identity map") {
  Correspondence id = identity_correspondence(fx_E2());
  // sigma1 is the unitor isomorphism E2 (x) E2 -> E2
  auto rho = right_unitor(id);
  Correspondence big = rho.product.corr;
  std::vector<Idx> ident{0, 1};
  check_associator_naturality(big, id, id, id, id, id, rho.map, ident,
                              ident);
}

TEST_CASE("tensor of maps is functorial beyond identities") {
  Correspondence id = identity_correspondence(fx_E2());
  auto rho = right_unitor(id);
  Correspondence big = rho.product.corr;  // E2 (x) E2
  auto back = invert_corr_map(big, id, rho.map);

  auto t_big = tensor(big, id);
  auto t_small = tensor(id, id);
  std::vector<Idx> ident{0, 1};
  auto down = tensor_map(t_big, t_small, rho.map, ident);
  auto up = tensor_map(t_small, t_big, back, ident);
  // (back o rho) (x) id is the identity on the big tensor
  for (Idx x = 0; x < t_big.corr.size(); ++x) {
    CHECK(up[down[x]] == x);
  }
}

TEST_CASE("check_morita verdicts") {
  for (const auto& f : fixture_semigroups()) {
    CHECK(check_morita(identity_correspondence(f.sg)).verdict ==
          MoritaVerdict::Morita);
  }
  // enlargement with STS strictly smaller
  auto enl = enlargement_set(fx_E2(), {0});
  CHECK(check_morita(enl.morita).verdict == MoritaVerdict::PartialOnly);

  // theta with a missing preimage and no section: NEITHER
  Correspondence c;
  c.left_sg = fx_trivial();
  c.right = semigroup_as_right_set(fx_Z2());
  c.left_action = {0, 1};
  CHECK(check_morita(c).verdict == MoritaVerdict::Neither);
}

TEST_CASE("morita_to_certificate and back") {
  for (const auto& m : fixture_moritas()) {
    auto verdict = check_morita(m).verdict;
    if (verdict != MoritaVerdict::Morita) {
      CHECK_THROWS_AS(morita_to_certificate(m), InputError);
      continue;
    }
    auto cert = morita_to_certificate(m);
    auto back = certificate_to_morita(cert);
    CHECK(check_partial_morita(back).morita());
    // round trip is isomorphic to the original as a correspondence, and
    // the left pairing is then unique
    auto iso =
        find_correspondence_isomorphism(from_morita(back), from_morita(m));
    CHECK(iso.has_value());
    CHECK(back.left_pairing == m.left_pairing);
  }
}

TEST_CASE("invalid certificates are rejected") {
  auto m = identity_morita(fx_E2());
  auto cert = morita_to_certificate(m);
  auto broken = cert;
  // break iota1: constant map is no longer surjective
  std::fill(broken.iota1.begin(), broken.iota1.end(), 0);
  CHECK_THROWS_AS(certificate_to_morita(broken), InputError);
}

TEST_CASE("morita equivalence is an equivalence relation on fixtures") {
  // reflexive: identity; symmetric: opposite; transitive: tensor
  auto m1 = whole_enlargement(fx_E3());
  CHECK(check_partial_morita(m1).morita());
  auto sym = opposite(m1);
  CHECK(check_partial_morita(sym).morita());
  auto trans = tensor_partial_morita(m1, sym);
  CHECK(check_partial_morita(trans.morita).morita());
}

TEST_CASE("invertible correspondence maps") {
  Correspondence id = identity_correspondence(fx_B2());
  auto rho = right_unitor(id);
  auto inv = invert_corr_map(rho.product.corr, id, rho.map);
  for (Idx x = 0; x < id.size(); ++x) {
    CHECK(rho.map[inv[x]] == x);
  }
  // non-surjective maps are rejected: embed the one-point hom
  // correspondence into the identity correspondence of E2
  auto small = from_hom({fx_E2(), fx_E2(), {0, 0}}).corr;
  Correspondence big = identity_correspondence(fx_E2());
  std::vector<Idx> incl{0};
  REQUIRE(check_corr_map(small, big, incl).ok());
  CHECK_THROWS_AS(invert_corr_map(small, big, incl), InputError);
}

TEST_CASE("Morita iff equivalence on the fixture family") {
  for (const auto& m : fixture_moritas()) {
    bool is_morita = check_morita(m).verdict == MoritaVerdict::Morita;
    bool has_cert;
    try {
      morita_to_certificate(m);
      has_cert = true;
    } catch (const InputError&) {
      has_cert = false;
    }
    CHECK(is_morita == has_cert);
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "invcorr/bicategory.hpp"
#include "invcorr/fixtures.hpp"
#include "invcorr/io.hpp"
#include "invcorr/verify.hpp"

using namespace invcorr;

TEST_CASE("semigroup round trip through text") {
  for (const auto& f : fixture_semigroups()) {
    std::string text = semigroup_to_text(f.name + "-copy", *f.sg);
    Workspace ws;
    auto loaded = load_text(ws, text, "fallback");
    CHECK(loaded.kind == FileKind::Semigroup);
    CHECK(loaded.name == f.name + "-copy");
    CHECK(*ws.semigroup(loaded.name) == *f.sg);
  }
}

TEST_CASE("fixture names resolve in set files") {
  Workspace ws;
  auto loaded = load_text(ws,
                          R"({"name": "u", "semigroup": "E2", "size": 2,
                              "action": [0,0,0,1], "pairing": [0,0,0,1]})",
                          "x");
  CHECK(loaded.kind == FileKind::Set);
  const RightSet& u = ws.sets.at("u");
  CHECK(u.sg == fx_E2());
  CHECK(check_right_inverse(u).passed);
}

TEST_CASE("nested and flat tables are both accepted") {
  Workspace ws1, ws2;
  load_text(ws1, R"({"name":"a","order":2,"table":[0,0,0,1]})", "a");
  load_text(ws2, R"({"name":"a","order":2,"table":[[0,0],[0,1]]})", "a");
  CHECK(*ws1.semigroup("a") == *ws2.semigroup("a"));
}

TEST_CASE("inv is recomputed, never trusted") {
  // a file has no slot for inv at all; recognition computes it
  Workspace ws;
  load_text(ws, R"({"name":"z","order":2,"table":[0,1,1,0]})", "z");
  CHECK(ws.semigroup("z")->inv == std::vector<Idx>{0, 1});
}

TEST_CASE("parse errors carry line and column") {
  Workspace ws;
  try {
    load_text(ws, "{\n  \"order\": oops\n}", "x");
    FAIL("expected a parse error");
  } catch (const InputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("PARSE_ERROR") != std::string::npos);
    CHECK(msg.find("line 2") != std::string::npos);
  }
}

TEST_CASE("out of range entries are input errors") {
  Workspace ws;
  CHECK_THROWS_AS(
      load_text(ws, R"({"name":"x","order":2,"table":[0,0,0,7]})", "x"),
      InputError);
  CHECK_THROWS_AS(
      load_text(ws,
                R"({"name":"u","semigroup":"E2","size":1,
                    "action":[0,0],"pairing":[9]})",
                "u"),
      InputError);
}

TEST_CASE("duplicate names are rejected") {
  Workspace ws;
  load_text(ws, R"({"name":"dup","order":1,"table":[0]})", "a");
  CHECK_THROWS_AS(load_text(ws, R"({"name":"dup","order":1,"table":[0]})",
                            "b"),
                  InputError);
}

TEST_CASE("left set files round trip") {
  LeftSet u = semigroup_as_left_set(fx_E3());
  std::string text = left_set_to_text("e3left", u, "E3");
  Workspace ws;
  auto loaded = load_text(ws, text, "x");
  CHECK(loaded.kind == FileKind::Set);
  const LeftSet& back = ws.left_sets.at("e3left");
  CHECK(back.action == u.action);
  CHECK(back.pairing == u.pairing);
  CHECK(check_left_inverse(back).passed);
}

TEST_CASE("morita files round trip") {
  auto m = identity_morita(fx_B2());
  std::string text = morita_to_text("b2m", m);
  Workspace ws;
  auto loaded = load_text(ws, text, "x");
  CHECK(loaded.kind == FileKind::Morita);
  const PartialMorita& back = ws.moritas.at("b2m");
  CHECK(back.left_action == m.left_action);
  CHECK(back.right_pairing == m.right_pairing);
  CHECK(check_partial_morita(back).morita());
}

TEST_CASE("correspondence files round trip") {
  auto c = identity_correspondence(fx_E3());
  std::string text = correspondence_to_text("e3c", c);
  Workspace ws;
  auto loaded = load_text(ws, text, "x");
  CHECK(loaded.kind == FileKind::Correspondence);
  CHECK(check_correspondence(ws.correspondences.at("e3c")).ok());
}

TEST_CASE("mcalister files validate their axioms at load") {
  Workspace ws;
  auto loaded = load_text(
      ws, R"({"name":"p1","semigroup":"E2","index_size":1,"p":[1]})", "x");
  CHECK(loaded.kind == FileKind::McAlister);
  CHECK(ws.mcalisters.at("p1").full);
  CHECK_THROWS_AS(
      load_text(ws,
                R"({"name":"p2","semigroup":"Z2","index_size":1,"p":[1]})",
                "x"),
      InputError);
}

TEST_CASE("hom files validate multiplicativity") {
  Workspace ws;
  load_text(ws, R"({"name":"h","source":"Z2","target":"I2","map":[5,6]})",
            "x");
  CHECK(check_hom(ws.homs.at("h")));
  CHECK_THROWS_AS(
      load_text(ws,
                R"({"name":"h2","source":"Z2","target":"E2","map":[0,1]})",
                "x"),
      InputError);
}

TEST_CASE("presheaf files build left sets") {
  Workspace ws;
  auto loaded = load_text(ws,
                          R"({"name":"ps","semigroup":"E2",
                              "part_sizes":[1,1],
                              "restrictions":[
                                {"e":0,"f":0,"map":[0]},
                                {"e":1,"f":1,"map":[0]},
                                {"e":0,"f":1,"map":[0]}]})",
                          "x");
  CHECK(loaded.kind == FileKind::Presheaf);
  CHECK(ws.left_sets.at("ps").size == 2);
}

TEST_CASE("verify suite passes end to end") {
  VerifyOptions opt;
  auto results = verify_theorems(opt);
  CHECK(results.size() > 100);
  for (const auto& r : results) {
    CAPTURE(r.scope + "/" + r.name + " @ " + r.subject);
    CHECK(r.passed);
  }
}

TEST_CASE("verify detects an injected mutation") {
  Workspace ws;
  MulTable t = fx_B2()->base;
  t.tab[7] = (t.tab[7] + 1) % 5;
  auto rec = recognize_inverse(t);
  bool detected = !rec.ok();
  if (!detected) {
    ws.semigroups.emplace(
        "B2", std::make_shared<const InverseSemigroup>(std::move(*rec.sg)));
    VerifyOptions opt;
    opt.include_builtin = false;
    opt.scope = "core";
    detected = !all_passed(verify_theorems(opt, &ws));
  }
  CHECK(detected);
}

TEST_CASE("mutation sweep smoke test") {
  auto outcome = mutation_sweep(60, 12345);
  CHECK(outcome.samples == 60);
  CHECK(outcome.detected >= 57);  // the acceptance bar is 95%
}

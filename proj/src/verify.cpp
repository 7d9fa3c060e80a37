#include "invcorr/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "invcorr/bicategory.hpp"
#include "invcorr/fixtures.hpp"
#include "invcorr/multiplier.hpp"

namespace invcorr {

namespace {

struct Suite {
  std::vector<TheoremResult> results;
  std::string scope;
  bool enabled = false;

  void run(const std::string& name, const std::string& subject,
           const std::function<void()>& fn) {
    if (!enabled) {
      return;
    }
    TheoremResult r{scope, name, subject, true, ""};
    try {
      fn();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = e.what();
    }
    results.push_back(std::move(r));
  }
};

void fail(const std::string& msg) { throw InternalError(msg); }

void require(bool cond, const std::string& msg) {
  if (!cond) {
    fail(msg);
  }
}

std::string tuple_text(const std::vector<Idx>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    out += (i ? "," : "") + std::to_string(v[i]);
  }
  return out + ")";
}

void require_report(const CheckReport& rep, const std::string& what) {
  if (!rep.ok()) {
    fail(what + " violated at " + rep.violations.front().axiom + " " +
         tuple_text(rep.violations.front().witness));
  }
}

// ---- core checks ---------------------------------------------------------

void core_semigroup_checks(Suite& s, const std::string& name,
                           const InverseSemigroup& sg) {
  s.run("associativity and recognition", name, [&] {
    require(check_associative(sg.base), "table is not associative");
    require(recognize_inverse(sg.base).ok(), "recognition failed");
  });
  s.run("star identities", name, [&] {
    for (Idx a = 0; a < sg.size(); ++a) {
      require(sg.star(sg.star(a)) == a, "s** != s");
      for (Idx b = 0; b < sg.size(); ++b) {
        require(sg.star(sg.mul(a, b)) == sg.mul(sg.star(b), sg.star(a)),
                "(st)* != t*s*");
      }
    }
  });
  s.run("natural order", name, [&] {
    for (Idx a = 0; a < sg.size(); ++a) {
      require(natural_order(sg, a, a), "order not reflexive");
      for (Idx b = 0; b < sg.size(); ++b) {
        bool ab = natural_order(sg, a, b);
        if (ab && natural_order(sg, b, a)) {
          require(a == b, "order not antisymmetric");
        }
        if (!ab) {
          continue;
        }
        require(natural_order(sg, sg.star(a), sg.star(b)),
                "order not star-monotone");
        for (Idx c = 0; c < sg.size(); ++c) {
          require(natural_order(sg, sg.mul(a, c), sg.mul(b, c)),
                  "order not right compatible");
          require(natural_order(sg, sg.mul(c, a), sg.mul(c, b)),
                  "order not left compatible");
          if (natural_order(sg, b, c)) {
            require(natural_order(sg, a, c), "order not transitive");
          }
        }
      }
    }
  });
  s.run("right cancellation", name, [&] {
    for (Idx a = 0; a < sg.size(); ++a) {
      for (Idx b = 0; b < sg.size(); ++b) {
        if (sg.mul(a, sg.star(a)) == sg.mul(a, sg.star(b)) &&
            sg.mul(a, sg.star(b)) == sg.mul(b, sg.star(b))) {
          require(a == b, "triple equality does not cancel");
        }
      }
    }
  });
  s.run("ideal idempotents commute", name, [&] {
    for (Idx x = 0; x < sg.size(); ++x) {
      auto ideal = ideal_closure(sg, {x});
      for (Idx e : sg.idempotents) {
        for (Idx f : ideal) {
          if (sg.is_idempotent(f)) {
            require(sg.mul(e, f) == sg.mul(f, e),
                    "E(S) and E(I) do not commute");
          }
        }
      }
    }
  });
  s.run("essential sides agree", name, [&] {
    for (Idx x = 0; x < sg.size(); ++x) {
      is_essential_ideal(sg, ideal_closure(sg, {x}));  // asserts agreement
    }
  });
}

void fixture_integrity(Suite& s, const std::string& name,
                       const InverseSemigroup& sg) {
  const FixtureInfo* info = nullptr;
  for (const auto& f : fixture_semigroups()) {
    if (f.name == name) {
      info = &f;
    }
  }
  if (!info) {
    return;
  }
  s.run("fixture integrity", name, [&] {
    require(sg.size() == info->sg->size(), "order changed");
    require(static_cast<Idx>(sg.idempotents.size()) == info->n_idempotents,
            "idempotent count changed");
    require(sg.identity().has_value() == info->has_identity,
            "identity presence changed");
    require(sg.zero().has_value() == info->has_zero,
            "zero presence changed");
    bool group = sg.identity().has_value();
    if (group) {
      for (Idx a = 0; a < sg.size() && group; ++a) {
        group = sg.mul(a, sg.star(a)) == *sg.identity();
      }
    }
    require(group == info->is_group, "group-ness changed");
  });
}

// ---- set checks ----------------------------------------------------------

void set_checks(Suite& s, const std::string& name, const RightSet& u) {
  s.run("right regular axioms", name,
        [&] { require_report(check_right_regular(u), "regular axiom"); });
  s.run("four inverse conditions agree", name, [&] {
    // check_right_inverse asserts agreement internally
    require(check_right_inverse(u).passed, "set is not inverse");
  });
  s.run("pairing basics", name, [&] {
    for (Idx a = 0; a < u.size; ++a) {
      require(u.sg->is_idempotent(u.pair(a, a)), "<u|u> not idempotent");
      for (Idx b = 0; b < u.size; ++b) {
        for (Idx t = 0; t < u.sg->size(); ++t) {
          require(u.pair(u.act(a, t), b) ==
                      u.sg->mul(u.sg->star(t), u.pair(a, b)),
                  "<ut|v> != t*<u|v>");
        }
      }
    }
  });
  s.run("non-degeneracy", name, [&] {
    for (Idx a = 0; a < u.size; ++a) {
      for (Idx b = 0; b < u.size; ++b) {
        bool same = true;
        for (Idx c = 0; c < u.size; ++c) {
          same = same && u.pair(a, c) == u.pair(b, c);
        }
        if (same) {
          require(a == b, "distinct points with equal pairing rows");
        }
      }
    }
  });
  s.run("set order", name, [&] {
    for (Idx a = 0; a < u.size; ++a) {
      require(set_order(u, a, a), "set order not reflexive");
      for (Idx b = 0; b < u.size; ++b) {
        if (set_order(u, a, b) && set_order(u, b, a)) {
          require(a == b, "set order not antisymmetric");
        }
        for (Idx c = 0; c < u.size; ++c) {
          if (set_order(u, a, b) && set_order(u, b, c)) {
            require(set_order(u, a, c), "set order not transitive");
          }
        }
      }
    }
  });
}

void left_set_checks(Suite& s, const std::string& name, const LeftSet& u) {
  s.run("left regular axioms", name,
        [&] { require_report(check_left_regular(u), "regular axiom"); });
  s.run("four inverse conditions agree", name,
        [&] { require(check_left_inverse(u).passed, "set is not inverse"); });
}

void canonical_set_integrity(Suite& s, const std::string& name,
                             const RightSet& u, const Budget& budget) {
  s.run("canonical set integrity", name, [&] {
    require(is_right_full(u), "canonical set lost fullness");
    auto k = enumerate_K(u, u);
    require(static_cast<Idx>(k.size()) == u.sg->size(),
            "K(T) has the wrong size");
    auto l = L_semigroup(u, budget);
    std::vector<Idx> id(u.size);
    for (Idx i = 0; i < u.size; ++i) {
      id[i] = i;
    }
    require(l.index_of(id) >= 0, "identity missing from L");
  });
}

void morita_checks(Suite& s, const std::string& name,
                   const PartialMorita& m) {
  s.run("partial Morita axioms", name, [&] {
    auto rep = check_partial_morita(m);
    require(rep.ok(), "partial Morita checker failed");
  });
  s.run("opposite involution", name, [&] {
    auto o = opposite(m);
    require(check_partial_morita(o).ok(), "opposite fails the checker");
    auto oo = opposite(o);
    require(oo.left_action == m.left_action &&
                oo.right_action == m.right_action &&
                oo.left_pairing == m.left_pairing &&
                oo.right_pairing == m.right_pairing,
            "double opposite differs");
  });
}

void mcalister_checks(Suite& s, const std::string& name,
                      const McAlisterFn& pm, const Budget& budget,
                      const McAlisterFn* declared) {
  s.run("MF axioms", name, [&] {
    auto again = check_mcalister(pm.t, pm.index_size, pm.p);
    require(again.fn.has_value(), "MF axioms fail");
    if (declared) {
      require(again.fn->full == declared->full, "(MF5) flag changed");
    }
  });
  s.run("Rees constructions", name, [&] {
    auto up = inverse_set_from_p(pm);  // asserts gamma, ~, and fullness
    require(up.im.sg->size() >= 0, "unreachable");
  });
  s.run("IM matches K(U_p)", name, [&] {
    require(im_matches_k_up(pm, budget), "IM and K(U_p) differ");
  });
}

}  // namespace

std::vector<std::pair<std::string, RightSet>> fixture_right_sets() {
  std::vector<std::pair<std::string, RightSet>> out;
  for (const auto& f : fixture_semigroups()) {
    out.emplace_back(f.name + "-as-set", semigroup_as_right_set(f.sg));
  }
  RightSet b2 = semigroup_as_right_set(fx_B2());
  out.emplace_back("B2-sum", direct_sum(b2, b2).set);
  RightSet e2 = semigroup_as_right_set(fx_E2());
  out.emplace_back("E2-sum", direct_sum(e2, e2).set);
  return out;
}

std::vector<std::pair<std::string, PartialMorita>> fixture_moritas() {
  std::vector<std::pair<std::string, PartialMorita>> out;
  for (const auto& f : fixture_semigroups()) {
    out.emplace_back("id-" + f.name, identity_morita(f.sg));
  }
  out.emplace_back("enl-E2-zero", enlargement_set(fx_E2(), {0}).morita);
  out.emplace_back("enl-E3-01", enlargement_set(fx_E3(), {0, 1}).morita);
  out.emplace_back("enl-I2-01", enlargement_set(fx_I2(), {0, 1}).morita);
  out.emplace_back("bij-1-1", partial_bijection_biset(1, 1).morita);
  out.emplace_back("bij-1-2", partial_bijection_biset(1, 2).morita);
  out.emplace_back("bij-2-2", partial_bijection_biset(2, 2).morita);
  out.emplace_back(
      "kmorita-B2", morita_from_set(semigroup_as_right_set(fx_B2())).morita);
  return out;
}

std::vector<std::pair<std::string, McAlisterFn>> fixture_mcalisters() {
  std::vector<std::pair<std::string, McAlisterFn>> out;
  out.emplace_back("mf-E2-unit",
                   require_mcalister(fx_E2(), 1, {1}, "fixture"));
  out.emplace_back("mf-T1-square",
                   require_mcalister(fx_trivial(), 2, {0, 0, 0, 0},
                                     "fixture"));
  out.emplace_back("mf-B2-units",
                   require_mcalister(fx_B2(), 2, {1, 2, 3, 4}, "fixture"));
  out.emplace_back("mf-E2-zero",
                   require_mcalister(fx_E2(), 1, {0}, "fixture"));
  return out;
}

std::vector<TheoremResult> verify_theorems(const VerifyOptions& opt,
                                           const Workspace* extra) {
  auto in_scope = [&](const char* s1, const char* s2) {
    return opt.scope == "all" || opt.scope == s1 || opt.scope == s2;
  };
  auto fixture_selected = [&](const std::string& name) {
    if (opt.fixtures.empty()) {
      return true;
    }
    for (const auto& f : opt.fixtures) {
      if (name == f || name.rfind(f + "-", 0) == 0) {
        return true;
      }
    }
    return false;
  };

  std::vector<TheoremResult> results;
  const Budget& budget = opt.budget;

  // core ---------------------------------------------------------------
  {
    Suite s{{}, "core", in_scope("core", "semigroup-core")};
    if (opt.include_builtin) {
      for (const auto& f : fixture_semigroups()) {
        if (!fixture_selected(f.name)) {
          continue;
        }
        core_semigroup_checks(s, f.name, *f.sg);
        fixture_integrity(s, f.name, *f.sg);
      }
    }
    if (extra) {
      for (const auto& [name, sg] : extra->semigroups) {
        core_semigroup_checks(s, name, *sg);
        fixture_integrity(s, name, *sg);
      }
    }
    results.insert(results.end(), s.results.begin(), s.results.end());
  }

  // sets ---------------------------------------------------------------
  {
    Suite s{{}, "sets", in_scope("sets", "inverse-set")};
    if (opt.include_builtin) {
      for (const auto& [name, u] : fixture_right_sets()) {
        if (!fixture_selected(name)) {
          continue;
        }
        set_checks(s, name, u);
        if (name.size() > 7 &&
            name.substr(name.size() - 7) == "-as-set") {
          canonical_set_integrity(s, name, u, budget);
        }
      }
      for (const auto& [name, m] : fixture_moritas()) {
        if (fixture_selected(name)) {
          morita_checks(s, name, m);
        }
      }
    }
    if (extra) {
      for (const auto& [name, u] : extra->sets) {
        set_checks(s, name, u);
      }
      for (const auto& [name, u] : extra->left_sets) {
        left_set_checks(s, name, u);
      }
      for (const auto& [name, m] : extra->moritas) {
        morita_checks(s, name, m);
      }
    }
    results.insert(results.end(), s.results.begin(), s.results.end());
  }

  // adjointable ----------------------------------------------------------
  {
    Suite s{{}, "adjointable", in_scope("adjointable", "adjointable")};
    auto kl = [&](const std::string& name, const RightSet& u) {
      s.run("K and L theorems", name, [&] {
        K_semigroup(u, budget);  // all assertions internal
      });
    };
    if (opt.include_builtin) {
      for (const auto& [name, u] : fixture_right_sets()) {
        if (fixture_selected(name)) {
          kl(name, u);
        }
      }
      s.run("L(U,V) partial Morita structure", "E2 pair", [&] {
        RightSet e2 = semigroup_as_right_set(fx_E2());
        RightSet sum = direct_sum(e2, e2).set;
        adjointable_biset(e2, sum, false, budget);
        adjointable_biset(e2, sum, true, budget);
      });
    }
    if (extra) {
      for (const auto& [name, u] : extra->sets) {
        kl(name, u);
      }
    }
    results.insert(results.end(), s.results.begin(), s.results.end());
  }

  // correspondence ---------------------------------------------------------
  {
    Suite s{{}, "correspondence", in_scope("correspondence", "tensor")};
    if (opt.include_builtin) {
      s.run("identity correspondences", "fixtures", [&] {
        for (const auto& f : fixture_semigroups()) {
          if (!fixture_selected(f.name)) {
            continue;
          }
          auto c = identity_correspondence(f.sg);
          require_report(check_correspondence(c), "correspondence axiom");
          require(is_non_degenerate(c), "identity became degenerate");
        }
      });
      s.run("tensor soundness", "small pairs", [&] {
        for (SgPtr t : {fx_E2(), fx_Z2()}) {
          auto c = identity_correspondence(t);
          tensor(c, c);  // all well-definedness assertions internal
        }
        auto enl = from_morita(enlargement_set(fx_E3(), {0, 1}).morita);
        tensor(enl, identity_correspondence(enl.right.sg));
      });
      s.run("recover partial Morita round trip", "B2", [&] {
        auto sm = morita_from_set(semigroup_as_right_set(fx_B2()), budget);
        auto rec = recover_partial_morita(from_morita(sm.morita), budget);
        require(rec.ok, "recovery failed");
        require(rec.morita.left_pairing == sm.morita.left_pairing,
                "left pairing not reproduced");
      });
    }
    if (extra) {
      for (const auto& [name, c] : extra->correspondences) {
        s.run("correspondence axioms", name, [&] {
          require_report(check_correspondence(c), "correspondence axiom");
        });
      }
    }
    results.insert(results.end(), s.results.begin(), s.results.end());
  }

  // bicategory -------------------------------------------------------------
  {
    Suite s{{}, "bicategory", in_scope("bicategory", "bicategory-morita")};
    if (opt.include_builtin) {
      s.run("coherence", "identity chain on E2", [&] {
        auto id = identity_correspondence(fx_E2());
        check_triangle(id, id);
        check_pentagon(id, id, id, id);
      });
      s.run("coherence", "mixed chain", [&] {
        auto enl = enlargement_set(fx_E3(), {0, 1});
        Correspondence c1 = from_morita(enl.morita);
        Correspondence c2 = from_morita(opposite(enl.morita));
        Correspondence c3 = identity_correspondence(c2.right.sg);
        check_pentagon(c1, c2, c3, c3);
        check_triangle(c1, c2);
      });
      s.run("Morita iff equivalence", "fixture moritas", [&] {
        for (const auto& [name, m] : fixture_moritas()) {
          if (!fixture_selected(name)) {
            continue;
          }
          bool is_morita =
              check_morita(m, budget).verdict == MoritaVerdict::Morita;
          bool has_cert = true;
          try {
            auto cert = morita_to_certificate(m, budget);
            certificate_to_morita(cert, budget);
          } catch (const InputError&) {
            has_cert = false;
          }
          require(is_morita == has_cert,
                  "certificate existence disagrees with the verdict at " +
                      name);
        }
      });
    }
    results.insert(results.end(), s.results.begin(), s.results.end());
  }

  // multiplier ---------------------------------------------------------------
  {
    Suite s{{}, "multiplier", in_scope("multiplier", "multiplier")};
    if (opt.include_builtin) {
      s.run("M(S) = S iff identity", "fixtures", [&] {
        for (const auto& f : fixture_semigroups()) {
          if (!fixture_selected(f.name)) {
            continue;
          }
          auto m = multiplier(f.sg, budget);
          require((m.carrier.sg->size() == f.sg->size()) == f.has_identity,
                  "multiplier size disagrees with identity presence at " +
                      f.name);
        }
      });
      s.run("Kasparov analogue", "small sets", [&] {
        for (SgPtr t : {fx_E2(), fx_Z2(), fx_E3()}) {
          verify_kasparov(semigroup_as_right_set(t), budget);
        }
      });
      s.run("idealizer of K in L", "B2", [&] {
        auto kc = K_semigroup(semigroup_as_right_set(fx_B2()), budget);
        std::vector<Idx> members(kc.in_l);
        std::sort(members.begin(), members.end());
        auto ideal = idealizer(*kc.ambient_l.sg, members);
        require(static_cast<Idx>(ideal.size()) == kc.ambient_l.sg->size(),
                "idealizer of K(U) is smaller than L(U)");
      });
    }
    results.insert(results.end(), s.results.begin(), s.results.end());
  }

  // rees -----------------------------------------------------------------
  {
    Suite s{{}, "rees", in_scope("rees", "rees")};
    if (opt.include_builtin) {
      auto declared = fixture_mcalisters();
      for (const auto& [name, pm] : declared) {
        if (!fixture_selected(name)) {
          continue;
        }
        const McAlisterFn* decl = nullptr;
        for (const auto& [n2, p2] : declared) {
          if (n2 == name) {
            decl = &p2;
          }
        }
        mcalister_checks(s, name, pm, budget, decl);
      }
      s.run("round trips", "canonical sets", [&] {
        for (SgPtr t : {fx_E2(), fx_Z2(), fx_E3()}) {
          auto rep = roundtrip_checks(semigroup_as_right_set(t), budget);
          require(rep.up_of_pu_isomorphic_to_u, "U_{p_U} differs from U");
          require(rep.im_isomorphic_to_k_up, "IM differs from K(U_p)");
          require(rep.im_over_u_isomorphic_to_k, "IM(T,U,p_U) differs "
                                                 "from K(U)");
        }
      });
      s.run("gamma minimality (bounded)", "small functions", [&] {
        auto v1 = gamma_minimal_bounded(
            require_mcalister(fx_E2(), 1, {1}, "fixture"));
        require(v1.has_value() && *v1, "gamma not minimal");
        auto v2 = gamma_minimal_bounded(
            require_mcalister(fx_trivial(), 2, {0, 0, 0, 0}, "fixture"));
        require(v2.has_value() && *v2, "gamma not minimal");
      });
    }
    if (extra) {
      for (const auto& [name, pm] : extra->mcalisters) {
        const McAlisterFn* decl = nullptr;
        for (const auto& [n2, p2] : fixture_mcalisters()) {
          if (n2 == name) {
            decl = &p2;
          }
        }
        // keep a local copy alive for the check
        auto declared_copy =
            decl ? std::optional<McAlisterFn>(*decl) : std::nullopt;
        mcalister_checks(s, name, pm, budget,
                         declared_copy ? &*declared_copy : nullptr);
      }
    }
    results.insert(results.end(), s.results.begin(), s.results.end());
  }

  return results;
}

bool all_passed(const std::vector<TheoremResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const TheoremResult& r) { return r.passed; });
}

MutationOutcome mutation_sweep(int samples, unsigned seed,
                               const Budget& budget) {
  // mutation targets: fixture semigroup tables, canonical set tables,
  // fixture mcalister tables
  struct Target {
    std::string name;
    char kind;  // 'g' semigroup, 'a' set action, 'p' set pairing, 'm' p
    size_t cells;
    Idx value_bound;
  };
  std::vector<Target> targets;
  for (const auto& f : fixture_semigroups()) {
    if (f.sg->size() > 1) {  // one-element tables have no alternative value
      targets.push_back(
          {f.name, 'g', f.sg->base.tab.size(), f.sg->size()});
    }
  }
  auto sets = fixture_right_sets();
  for (const auto& [name, u] : sets) {
    if (u.size > 1) {
      targets.push_back({name, 'a', u.action.size(), u.size});
    }
    if (u.sg->size() > 1) {
      targets.push_back({name, 'p', u.pairing.size(), u.sg->size()});
    }
  }
  auto mfs = fixture_mcalisters();
  for (const auto& [name, pm] : mfs) {
    if (pm.t->size() > 1 && pm.index_size > 0) {
      targets.push_back({name, 'm', pm.p.size(), pm.t->size()});
    }
  }

  std::vector<size_t> weights;
  size_t total = 0;
  for (const auto& t : targets) {
    total += t.cells * (t.value_bound - 1);
    weights.push_back(total);
  }

  std::mt19937 rng(seed);
  MutationOutcome out;
  for (int i = 0; i < samples; ++i) {
    size_t pick = std::uniform_int_distribution<size_t>(0, total - 1)(rng);
    size_t ti = std::lower_bound(weights.begin(), weights.end(), pick + 1) -
                weights.begin();
    const Target& target = targets[ti];
    size_t cell =
        std::uniform_int_distribution<size_t>(0, target.cells - 1)(rng);
    Idx delta =
        std::uniform_int_distribution<Idx>(1, target.value_bound - 1)(rng);

    ++out.samples;
    bool detected = false;
    try {
      Workspace ws;
      VerifyOptions opt;
      opt.include_builtin = false;
      opt.budget = budget;
      if (target.kind == 'g') {
        MulTable t = fixture_by_name(target.name)->base;
        t.tab[cell] = (t.tab[cell] + delta) % target.value_bound;
        auto rec = recognize_inverse(t);
        if (!rec.ok()) {
          detected = true;
        } else {
          ws.semigroups.emplace(
              target.name,
              std::make_shared<const InverseSemigroup>(std::move(*rec.sg)));
          opt.scope = "core";
          detected = !all_passed(verify_theorems(opt, &ws));
        }
      } else if (target.kind == 'a' || target.kind == 'p') {
        RightSet u;
        for (const auto& [name, su] : sets) {
          if (name == target.name) {
            u = su;
          }
        }
        auto& table = target.kind == 'a' ? u.action : u.pairing;
        table[cell] = (table[cell] + delta) % target.value_bound;
        ws.sets.emplace(target.name, std::move(u));
        opt.scope = "sets";
        detected = !all_passed(verify_theorems(opt, &ws));
      } else {
        McAlisterFn pm;
        for (const auto& [name, fn] : mfs) {
          if (name == target.name) {
            pm = fn;
          }
        }
        pm.p[cell] = (pm.p[cell] + delta) % target.value_bound;
        auto check = check_mcalister(pm.t, pm.index_size, pm.p);
        if (!check.fn) {
          detected = true;
        } else {
          ws.mcalisters.emplace(target.name, std::move(*check.fn));
          opt.scope = "rees";
          detected = !all_passed(verify_theorems(opt, &ws));
        }
      }
    } catch (const std::exception&) {
      detected = true;
    }
    if (detected) {
      ++out.detected;
    }
  }
  return out;
}

}  // namespace invcorr

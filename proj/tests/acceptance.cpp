// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "invcorr/bicategory.hpp"
#include "invcorr/fixtures.hpp"
#include "invcorr/multiplier.hpp"
#include "invcorr/verify.hpp"

using namespace invcorr;

namespace {

struct Criterion {
  int number;
  const char* name;
  double limit_s;
  bool passed = false;
  std::string detail;
};

// ---- generators -----------------------------------------------------------

std::vector<SgPtr> generator_fixtures() {
  return {fx_E2(), fx_Z2(), fx_E3(), fx_I2(), fx_B2()};
}

// action-closed subset of the canonical right set, re-indexed
RightSet subset_set(const RightSet& u, std::vector<Idx> seed) {
  std::vector<bool> in(u.size, false);
  std::vector<Idx> queue = seed;
  for (Idx x : seed) {
    in[x] = true;
  }
  while (!queue.empty()) {
    Idx x = queue.back();
    queue.pop_back();
    for (Idx t = 0; t < u.sg->size(); ++t) {
      Idx y = u.act(x, t);
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Idx> carrier;
  std::vector<Idx> pos(u.size, -1);
  for (Idx x = 0; x < u.size; ++x) {
    if (in[x]) {
      pos[x] = static_cast<Idx>(carrier.size());
      carrier.push_back(x);
    }
  }
  RightSet out;
  out.sg = u.sg;
  out.size = static_cast<Idx>(carrier.size());
  out.action.resize(static_cast<size_t>(out.size) * u.sg->size());
  out.pairing.resize(static_cast<size_t>(out.size) * out.size);
  for (Idx a = 0; a < out.size; ++a) {
    for (Idx t = 0; t < u.sg->size(); ++t) {
      out.action[static_cast<size_t>(a) * u.sg->size() + t] =
          pos[u.act(carrier[a], t)];
    }
    for (Idx b = 0; b < out.size; ++b) {
      out.pairing[static_cast<size_t>(a) * out.size + b] =
          u.pair(carrier[a], carrier[b]);
    }
  }
  return out;
}

RightSet doubled(const RightSet& u) {
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

// right regular sets of order <= 8 over the five named fixtures
std::vector<RightSet> generated_regular_sets(int minimum) {
  std::vector<RightSet> out;
  std::mt19937 rng(7321);
  auto bases = generator_fixtures();
  while (static_cast<int>(out.size()) < minimum) {
    for (SgPtr t : bases) {
      RightSet canon = semigroup_as_right_set(t);
      std::vector<Idx> seed;
      for (Idx x = 0; x < canon.size; ++x) {
        if (rng() % 3 == 0) {
          seed.push_back(x);
        }
      }
      RightSet sub = subset_set(canon, seed);
      if (sub.size <= 8) {
        out.push_back(sub);
      }
      if (sub.size >= 1 && sub.size <= 4) {
        out.push_back(doubled(sub));
      }
    }
  }
  return out;
}

// every hom between two small fixtures, by brute force
std::vector<SemigroupHom> all_homs(SgPtr a, SgPtr b) {
  std::vector<SemigroupHom> out;
  std::vector<Idx> map(a->size(), 0);
  while (true) {
    SemigroupHom h{a, b, map};
    if (check_hom(h)) {
      out.push_back(h);
    }
    Idx pos = 0;
    while (pos < a->size() && ++map[pos] == b->size()) {
      map[pos++] = 0;
    }
    if (pos == a->size()) {
      break;
    }
  }
  return out;
}

struct PoolEntry {
  std::string kind;
  Correspondence corr;
};

std::vector<PoolEntry> correspondence_pool() {
  std::vector<PoolEntry> pool;
  for (SgPtr t : {fx_E2(), fx_Z2(), fx_E3(), fx_B2()}) {
    pool.push_back({"identity", identity_correspondence(t)});
  }
  for (auto& [name, m] : fixture_moritas()) {
    pool.push_back({"morita:" + name, from_morita(m)});
    pool.push_back({"opposite:" + name, from_morita(opposite(m))});
  }
  for (auto [a, b] : std::vector<std::pair<SgPtr, SgPtr>>{
           {fx_E2(), fx_E2()},
           {fx_E2(), fx_E3()},
           {fx_E3(), fx_E2()},
           {fx_Z2(), fx_E2()},
           {fx_Z2(), fx_I2()}}) {
    for (const auto& h : all_homs(a, b)) {
      pool.push_back({"hom", from_hom(h).corr});
    }
  }
  return pool;
}

bool composable(const Correspondence& a, const Correspondence& b) {
  return same_semigroup(a.right.sg, b.left_sg);
}

// ---- criterion 9 machinery -------------------------------------------------

// Exhaustive enumeration of left inverse G-set structures on carriers of
// size <= max_m for a cyclic group G: a generator action table determines
// the action, then the pairing is searched with propagation over L-i,
// L-ii, and the diagonal instances of L-iii.
int classify_group_sets(SgPtr g, Idx max_m, int* found) {
  const Idx n = g->size();
  const Idx gen = n > 1 ? 1 : 0;
  LeftSet canonical = semigroup_as_left_set(g);
  int bad = 0;
  for (Idx m = 1; m <= max_m; ++m) {
    std::vector<Idx> a_tab(m, 0);
    auto handle_action = [&]() {
      // a^(n+1) = a elementwise makes the powers a consistent action
      std::vector<Idx> cur(a_tab);
      for (Idx k = 1; k <= n; ++k) {
        for (Idx x = 0; x < m; ++x) {
          cur[x] = a_tab[cur[x]];
        }
      }
      if (cur != a_tab) {
        return;
      }
      // tables for every group element as powers of the generator
      std::vector<std::vector<Idx>> act(n);
      std::vector<Idx> e_tab(m);
      for (Idx x = 0; x < m; ++x) {
        e_tab[x] = x;
      }
      for (Idx k = 0; k < n; ++k) {
        for (Idx x = 0; x < m; ++x) {
          e_tab[x] = a_tab[e_tab[x]];
        }
      }
      act[0] = e_tab;
      Idx gidx = 0;
      std::vector<Idx> cur3 = e_tab;
      for (Idx k = 1; k < n; ++k) {
        gidx = g->mul(gidx, gen);
        for (Idx x = 0; x < m; ++x) {
          cur3[x] = a_tab[cur3[x]];
        }
        act[gidx] = cur3;
      }

      // cells: diagonal first for fast pruning through L-iii
      std::vector<Idx> cells;
      for (Idx x = 0; x < m; ++x) {
        cells.push_back(x * m + x);
      }
      for (Idx x = 0; x < m; ++x) {
        for (Idx y = 0; y < m; ++y) {
          if (x != y) {
            cells.push_back(x * m + y);
          }
        }
      }
      std::vector<Idx> pairing(static_cast<size_t>(m) * m, -1);
      auto fill = [&](auto&& self, size_t ci) -> void {
        while (ci < cells.size() && pairing[cells[ci]] >= 0) {
          ++ci;
        }
        if (ci == cells.size()) {
          LeftSet candidate;
          candidate.sg = g;
          candidate.size = m;
          candidate.action.resize(static_cast<size_t>(m) * n);
          for (Idx x = 0; x < m; ++x) {
            for (Idx s = 0; s < n; ++s) {
              candidate.action[static_cast<size_t>(x) * n + s] = act[s][x];
            }
          }
          candidate.pairing = pairing;
          if (!check_left_regular(candidate).ok() ||
              !check_left_inverse(candidate).passed) {
            return;
          }
          ++*found;
          if (!find_left_set_isomorphism(candidate, canonical)) {
            ++bad;
          }
          return;
        }
        Idx u = cells[ci] / m, v = cells[ci] % m;
        for (Idx gv = 0; gv < n; ++gv) {
          if (u == v && act[gv][u] != u) {
            continue;  // L-iii
          }
          std::vector<std::pair<Idx, Idx>> undo;
          bool ok = true;
          auto assign = [&](Idx cell, Idx val) {
            if (pairing[cell] >= 0) {
              return pairing[cell] == val;
            }
            pairing[cell] = val;
            undo.emplace_back(cell, val);
            return true;
          };
          ok = assign(cells[ci], gv);
          for (size_t k = 0; ok && k < undo.size(); ++k) {
            auto [cell, val] = undo[k];
            Idx uu = cell / m, vv = cell % m;
            ok = assign(vv * m + uu, g->star(val));
            for (Idx s = 0; s < n && ok; ++s) {
              ok = assign(act[s][uu] * m + vv, g->mul(s, val)) &&
                   assign(uu * m + act[s][vv], g->mul(val, g->star(s)));
            }
          }
          if (ok) {
            self(self, ci + 1);
          }
          for (auto& [cell, val] : undo) {
            pairing[cell] = -1;
          }
        }
      };
      fill(fill, 0);
    };
    auto enumerate = [&](auto&& self, Idx pos) -> void {
      if (pos == m) {
        handle_action();
        return;
      }
      for (Idx v = 0; v < m; ++v) {
        a_tab[pos] = v;
        self(self, pos + 1);
      }
    };
    enumerate(enumerate, 0);
  }
  return bad;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria;
  auto run = [&](int number, const char* name, double limit_s,
                 const std::function<std::string()>& body) {
    Criterion c{number, name, limit_s, false, {}};
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.detail = body();
      c.passed = true;
    } catch (const std::exception& e) {
      c.detail = e.what();
      c.passed = false;
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (c.passed && secs > limit_s) {
      c.passed = false;
      c.detail = "over time limit";
    }
    std::printf("ACCEPTANCE %2d %-24s %s  (%.2fs%s%s)\n", number, name,
                c.passed ? "PASS" : "FAIL", secs,
                c.detail.empty() ? "" : "; ", c.detail.c_str());
    std::fflush(stdout);
    criteria.push_back(c);
  };

  run(1, "axiom-equivalence", 10.0, [] {
    auto sets = generated_regular_sets(200);
    int checked = 0;
    for (const auto& u : sets) {
      if (!check_right_regular(u).ok()) {
        throw InternalError("generator produced a non-regular set");
      }
      check_right_inverse(u);  // four-way agreement asserted inside
      ++checked;
    }
    if (checked < 200) {
      throw InternalError("fewer than 200 generated sets");
    }
    return std::to_string(checked) + " sets";
  });

  run(2, "K-L-theorems", 60.0, [] {
    int count = 0;
    for (const auto& [name, u] : fixture_right_sets()) {
      K_semigroup(u);  // recognition, inv = adjoint, ideal, E(K) inside
      ++count;
    }
    return std::to_string(count) + " fixture sets";
  });

  run(3, "L(U,V)-structure", 60.0, [] {
    int pairs = 0;
    std::mt19937 rng(991);
    for (SgPtr t : generator_fixtures()) {
      RightSet canon = semigroup_as_right_set(t);
      std::vector<RightSet> sets{canon};
      for (int i = 0; i < 3; ++i) {
        std::vector<Idx> seed;
        for (Idx x = 0; x < canon.size; ++x) {
          if (rng() % 2) {
            seed.push_back(x);
          }
        }
        sets.push_back(subset_set(canon, seed));
      }
      for (const auto& u : sets) {
        adjointable_biset(u, canon, false);
        adjointable_biset(u, canon, true);
        ++pairs;
      }
    }
    if (pairs < 20) {
      throw InternalError("fewer than 20 pairs");
    }
    return std::to_string(pairs) + " pairs";
  });

  run(4, "tensor-soundness", 30.0, [] {
    auto pool = correspondence_pool();
    int tensors = 0;
    for (size_t i = 0; i < pool.size() && tensors < 60; ++i) {
      for (size_t j = 0; j < pool.size() && tensors < 60; ++j) {
        if (!composable(pool[i].corr, pool[j].corr)) {
          continue;
        }
        tensor(pool[i].corr, pool[j].corr);  // all assertions internal
        ++tensors;
      }
    }
    if (tensors < 50) {
      throw InternalError("fewer than 50 composable pairs");
    }
    int hom_pairs = 0;
    for (auto chain : std::vector<std::array<SgPtr, 3>>{
             {fx_Z2(), fx_E2(), fx_E3()},
             {fx_E2(), fx_E3(), fx_E2()},
             {fx_E2(), fx_E2(), fx_E2()}}) {
      auto [a, b, c] = chain;
      for (const auto& h1 : all_homs(a, b)) {
        for (const auto& h2 : all_homs(b, c)) {
          auto u1 = from_hom(h1);
          auto u2 = from_hom(h2);
          std::vector<Idx> comp(a->size());
          for (Idx s = 0; s < a->size(); ++s) {
            comp[s] = h2.map[h1.map[s]];
          }
          auto u12 = from_hom({a, c, comp});
          auto tp = tensor(u1.corr, u2.corr);
          std::vector<Idx> pos(c->size(), -1);
          for (size_t k = 0; k < u12.carrier.size(); ++k) {
            pos[u12.carrier[k]] = static_cast<Idx>(k);
          }
          std::vector<Idx> iso(tp.corr.size(), -1);
          for (Idx x = 0; x < tp.m1; ++x) {
            for (Idx y = 0; y < tp.m2; ++y) {
              Idx img = pos[c->mul(h2.map[u1.carrier[x]], u2.carrier[y])];
              Idx cl = tp.cls(x, y);
              if (iso[cl] >= 0 && iso[cl] != img) {
                throw InternalError("hom-tensor map ill-defined");
              }
              iso[cl] = img;
            }
          }
          if (!check_corr_map(tp.corr, u12.corr, iso).ok() ||
              !is_surjective(iso, u12.corr.size())) {
            throw InternalError("tensor of homs differs from composite");
          }
          ++hom_pairs;
        }
      }
    }
    if (hom_pairs < 10) {
      throw InternalError("fewer than 10 hom pairs");
    }
    return std::to_string(tensors) + " tensors, " +
           std::to_string(hom_pairs) + " hom pairs";
  });

  run(5, "bicategory-coherence", 30.0, [] {
    auto pool = correspondence_pool();
    int chains = 0;
    std::set<std::string> mixes;
    for (size_t i = 0; i < pool.size() && chains < 12; ++i) {
      for (size_t j = 0; j < pool.size() && chains < 12; ++j) {
        if (!composable(pool[i].corr, pool[j].corr)) {
          continue;
        }
        for (size_t k = 0; k < pool.size() && chains < 12; ++k) {
          if (!composable(pool[j].corr, pool[k].corr)) {
            continue;
          }
          for (size_t l = 0; l < pool.size() && chains < 12; ++l) {
            if (!composable(pool[k].corr, pool[l].corr)) {
              continue;
            }
            std::string mix = pool[i].kind + "|" + pool[j].kind + "|" +
                              pool[k].kind + "|" + pool[l].kind;
            if (!mixes.insert(mix).second) {
              continue;
            }
            check_pentagon(pool[i].corr, pool[j].corr, pool[k].corr,
                           pool[l].corr);
            check_triangle(pool[i].corr, pool[j].corr);
            ++chains;
          }
        }
      }
    }
    if (chains < 10) {
      throw InternalError("fewer than 10 chains");
    }
    return std::to_string(chains) + " chains";
  });

  run(6, "morita-iff-equivalence", 60.0, [] {
    int count = 0;
    for (const auto& [name, m] : fixture_moritas()) {
      bool is_morita = check_morita(m).verdict == MoritaVerdict::Morita;
      bool has_cert = true;
      try {
        auto cert = morita_to_certificate(m);
        auto back = certificate_to_morita(cert);
        if (!find_correspondence_isomorphism(from_morita(back),
                                             from_morita(m))) {
          throw InternalError("round trip not isomorphic at " + name);
        }
        if (back.left_pairing != m.left_pairing) {
          throw InternalError("left pairing not unique at " + name);
        }
      } catch (const InputError&) {
        has_cert = false;
      }
      if (is_morita != has_cert) {
        throw InternalError("verdict and certificate disagree at " + name);
      }
      ++count;
    }
    return std::to_string(count) + " equivalences";
  });

  run(7, "multiplier", 60.0, [] {
    for (const auto& f : fixture_semigroups()) {
      auto m = multiplier(f.sg);
      if (f.has_identity && !isomorphic(*m.carrier.sg, *f.sg)) {
        throw InternalError("M(S) differs from S at " + f.name);
      }
      if (!f.has_identity && m.carrier.sg->size() == f.sg->size()) {
        throw InternalError("M(S) failed to grow at " + f.name);
      }
    }
    int kasparov = 0;
    for (const auto& [name, u] : fixture_right_sets()) {
      verify_kasparov(u);
      ++kasparov;
    }
    // essential-ideal injectivity biconditional over lambda(B2) in M(B2)
    auto mb2 = multiplier(fx_B2());
    auto ext = extend_hom(identity_correspondence(fx_B2()), mb2.carrier.sg,
                          mb2.embedding);
    std::vector<std::vector<Idx>> tabs;
    for (Idx s = 0; s < mb2.carrier.sg->size(); ++s) {
      tabs.push_back(ext.theta(s));
    }
    std::sort(tabs.begin(), tabs.end());
    if (std::adjacent_find(tabs.begin(), tabs.end()) != tabs.end()) {
      throw InternalError("injective theta extended non-injectively");
    }
    auto constant = from_hom({fx_B2(), fx_E2(), {0, 0, 0, 0, 0}});
    auto ext2 = extend_hom(constant.corr, mb2.carrier.sg, mb2.embedding);
    std::vector<std::vector<Idx>> tabs2;
    for (Idx s = 0; s < mb2.carrier.sg->size(); ++s) {
      tabs2.push_back(ext2.theta(s));
    }
    std::sort(tabs2.begin(), tabs2.end());
    if (std::adjacent_find(tabs2.begin(), tabs2.end()) == tabs2.end()) {
      throw InternalError("non-injective theta extended injectively");
    }
    return std::to_string(kasparov) + " Kasparov witnesses";
  });

  run(8, "rees-roundtrips", 30.0, [] {
    for (const auto& [name, u] : fixture_right_sets()) {
      auto rep = roundtrip_checks(u);
      if (!rep.up_of_pu_isomorphic_to_u || !rep.im_isomorphic_to_k_up) {
        throw InternalError("roundtrip failed at " + name);
      }
      if (rep.right_full && !rep.im_over_u_isomorphic_to_k) {
        throw InternalError("IM chain failed at " + name);
      }
    }
    for (const auto& [name, pm] : fixture_mcalisters()) {
      if (!im_matches_k_up(pm)) {
        throw InternalError("IM vs K(U_p) failed at " + name);
      }
    }
    auto collapse =
        inverse_rees(require_mcalister(fx_trivial(), 2, {0, 0, 0, 0}, "p"));
    if (collapse.sg->size() != 1) {
      throw InternalError("trivial-group square did not collapse");
    }
    return "all fixture sets and functions";
  });

  run(9, "group-classification", 30.0, [] {
    int total_found = 0;
    for (SgPtr g : {fx_Z2(), fx_Z3()}) {
      int found = 0;
      int bad = classify_group_sets(g, 6, &found);
      if (bad != 0) {
        throw InternalError("a left inverse group-set is not the group");
      }
      if (found == 0) {
        throw InternalError("enumeration found no inverse sets");
      }
      total_found += found;
    }
    return std::to_string(total_found) +
           " nonempty inverse sets, each the group itself";
  });

  run(10, "mutation-sensitivity", 120.0, [] {
    auto outcome = mutation_sweep(500, 20240817);
    double rate = 100.0 * outcome.detected / outcome.samples;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%d/%d detected (%.1f%%)",
                  outcome.detected, outcome.samples, rate);
    if (outcome.detected * 100 < outcome.samples * 95) {
      throw InternalError(buf);
    }
    return std::string(buf);
  });

  int failures = 0;
  for (const auto& c : criteria) {
    failures += c.passed ? 0 : 1;
  }
  if (failures) {
    std::printf("%d of %zu acceptance criteria FAILED\n", failures,
                criteria.size());
    return 1;
  }
  std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return 0;
}

#include "invcorr/adjointable.hpp"

#include <algorithm>
#include <map>

namespace invcorr {

AdjointableMap adjoint(const AdjointableMap& f) { return {f.adj, f.fwd}; }

AdjointableMap rank_one(const RightSet& target, const RightSet& source,
                        Idx v, Idx u) {
  AdjointableMap f;
  f.fwd.resize(source.size);
  f.adj.resize(target.size);
  for (Idx x = 0; x < source.size; ++x) {
    f.fwd[x] = target.act(v, source.pair(u, x));
  }
  for (Idx y = 0; y < target.size; ++y) {
    f.adj[y] = source.act(u, target.pair(v, y));
  }
  return f;
}

bool is_adjoint_pair(const RightSet& source, const RightSet& target,
                     const AdjointableMap& f) {
  if (f.fwd.size() != static_cast<size_t>(source.size) ||
      f.adj.size() != static_cast<size_t>(target.size)) {
    return false;
  }
  for (Idx u = 0; u < source.size; ++u) {
    for (Idx v = 0; v < target.size; ++v) {
      if (source.pair(f.adj[v], u) != target.pair(v, f.fwd[u])) {
        return false;
      }
    }
  }
  return true;
}

std::vector<AdjointableMap> enumerate_K(const RightSet& source,
                                        const RightSet& target) {
  std::map<std::vector<Idx>, AdjointableMap> dedup;
  for (Idx v = 0; v < target.size; ++v) {
    for (Idx u = 0; u < source.size; ++u) {
      AdjointableMap f = rank_one(target, source, v, u);
      dedup.emplace(f.fwd, f);
    }
  }
  std::vector<AdjointableMap> out;
  out.reserve(dedup.size());
  for (auto& [key, f] : dedup) {
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

// Equivariant maps U -> V by propagation: fixing phi(u) forces
// phi(u*t) = phi(u)*t along the whole orbit of u.
void equivariant_maps(const RightSet& u, const RightSet& v,
                      std::vector<Idx>& phi, Idx next, long long& nodes,
                      const Budget& budget,
                      std::vector<std::vector<Idx>>& out) {
  while (next < u.size && phi[next] >= 0) {
    ++next;
  }
  if (next == u.size) {
    out.push_back(phi);
    return;
  }
  const Idx nt = u.sg->size();
  for (Idx cand = 0; cand < v.size; ++cand) {
    if (++nodes > budget.nodes) {
      throw BudgetError("enumerate_L: SIZE_LIMIT, search budget exhausted");
    }
    std::vector<std::pair<Idx, Idx>> assigned;
    bool ok = true;
    auto assign = [&](Idx a, Idx b) {
      if (phi[a] >= 0) {
        return phi[a] == b;
      }
      phi[a] = b;
      assigned.emplace_back(a, b);
      return true;
    };
    ok = assign(next, cand);
    for (size_t k = 0; ok && k < assigned.size(); ++k) {
      auto [a, b] = assigned[k];
      for (Idx t = 0; t < nt && ok; ++t) {
        ok = assign(u.act(a, t), v.act(b, t));
      }
    }
    if (ok) {
      equivariant_maps(u, v, phi, next + 1, nodes, budget, out);
    }
    for (auto& [a, b] : assigned) {
      phi[a] = -1;
    }
  }
}

// Solve the adjoint pointwise; nullopt when some point has no solution.
// Two solutions at one point would contradict non-degeneracy.
std::optional<std::vector<Idx>> solve_adjoint(const RightSet& u,
                                              const RightSet& v,
                                              const std::vector<Idx>& phi,
                                              long long& nodes,
                                              const Budget& budget) {
  std::vector<Idx> adj(v.size, -1);
  for (Idx w = 0; w < v.size; ++w) {
    for (Idx cand = 0; cand < u.size; ++cand) {
      if (++nodes > budget.nodes) {
        throw BudgetError("enumerate_L: SIZE_LIMIT, search budget exhausted");
      }
      bool fits = true;
      for (Idx x = 0; x < u.size && fits; ++x) {
        fits = u.pair(cand, x) == v.pair(w, phi[x]);
      }
      if (fits) {
        if (adj[w] >= 0) {
          throw InternalError(
              "enumerate_L: two adjoint candidates at one point");
        }
        adj[w] = cand;
      }
    }
    if (adj[w] < 0) {
      return std::nullopt;
    }
  }
  return adj;
}

}  // namespace

std::vector<AdjointableMap> enumerate_L(const RightSet& source,
                                        const RightSet& target,
                                        const Budget& budget) {
  std::vector<std::vector<Idx>> cands;
  std::vector<Idx> phi(source.size, -1);
  long long nodes = 0;
  equivariant_maps(source, target, phi, 0, nodes, budget, cands);
  std::vector<AdjointableMap> out;
  for (auto& f : cands) {
    if (auto adj = solve_adjoint(source, target, f, nodes, budget)) {
      out.push_back({std::move(f), std::move(*adj)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const AdjointableMap& a, const AdjointableMap& b) {
              return a.fwd < b.fwd;
            });
  return out;
}

Idx MapSemigroup::index_of(const std::vector<Idx>& fwd) const {
  auto it = std::lower_bound(
      maps.begin(), maps.end(), fwd,
      [](const AdjointableMap& m, const std::vector<Idx>& f) {
        return m.fwd < f;
      });
  if (it == maps.end() || it->fwd != fwd) {
    return -1;
  }
  return static_cast<Idx>(it - maps.begin());
}

namespace {

std::vector<Idx> compose_tables(const std::vector<Idx>& f,
                                const std::vector<Idx>& g) {
  // apply g first
  std::vector<Idx> h(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    h[i] = f[g[i]];
  }
  return h;
}

MapSemigroup semigroup_of_maps(std::vector<AdjointableMap> maps,
                               const char* what,
                               const Budget& budget = {}) {
  MapSemigroup out;
  out.maps = std::move(maps);
  const Idx n = static_cast<Idx>(out.maps.size());
  if (static_cast<long long>(n) * n > budget.nodes) {
    throw BudgetError(std::string(what) +
                      ": SIZE_LIMIT, composition table exceeds the budget");
  }
  MulTable t;
  t.n = n;
  t.tab.resize(static_cast<size_t>(n) * n);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      Idx c = out.index_of(compose_tables(out.maps[a].fwd, out.maps[b].fwd));
      if (c < 0) {
        throw InternalError(std::string(what) +
                            ": not closed under composition");
      }
      t.tab[static_cast<size_t>(a) * n + b] = c;
    }
  }
  RecognizeResult rec = recognize_inverse(t);
  if (!rec.ok()) {
    throw InternalError(std::string(what) +
                        ": composition table is not an inverse semigroup");
  }
  out.sg = std::make_shared<const InverseSemigroup>(std::move(*rec.sg));
  // the recognized generalized inverse of every map must be its adjoint
  for (Idx a = 0; a < n; ++a) {
    Idx ad = out.index_of(out.maps[a].adj);
    if (ad < 0 || out.sg->star(a) != ad) {
      throw InternalError(std::string(what) +
                          ": generalized inverse differs from adjoint");
    }
  }
  return out;
}

}  // namespace

MapSemigroup L_semigroup(const RightSet& u, const Budget& budget) {
  RightSet uu = require_right_inverse_set(u, "L_semigroup");
  return semigroup_of_maps(enumerate_L(uu, uu, budget), "L_semigroup",
                           budget);
}

CompactSemigroup K_semigroup(const RightSet& u, const Budget& budget) {
  CompactSemigroup out;
  RightSet uu = require_right_inverse_set(u, "K_semigroup");
  out.k = semigroup_of_maps(enumerate_K(uu, uu), "K_semigroup", budget);
  out.ambient_l = L_semigroup(u, budget);
  out.in_l.resize(out.k.maps.size());
  std::vector<Idx> members;
  for (size_t i = 0; i < out.k.maps.size(); ++i) {
    Idx pos = out.ambient_l.index_of(out.k.maps[i].fwd);
    if (pos < 0) {
      throw InternalError("K_semigroup: rank-one map missing from L(U)");
    }
    out.in_l[i] = pos;
    members.push_back(pos);
  }
  if (!is_two_sided_ideal(*out.ambient_l.sg, members)) {
    throw InternalError("K_semigroup: K(U) is not an ideal of L(U)");
  }
  // idempotents are exactly the diagonal rank-one maps
  std::vector<Idx> diag;
  for (Idx a = 0; a < u.size; ++a) {
    diag.push_back(out.k.index_of(rank_one(u, u, a, a).fwd));
  }
  std::sort(diag.begin(), diag.end());
  diag.erase(std::unique(diag.begin(), diag.end()), diag.end());
  if (diag != out.k.sg->idempotents) {
    throw InternalError(
        "K_semigroup: E(K(U)) differs from the diagonal rank-one maps");
  }
  return out;
}

SetAsMorita morita_from_set(const RightSet& u, const Budget& budget) {
  SetAsMorita out;
  CompactSemigroup kc = K_semigroup(u, budget);
  out.k = std::move(kc.k);
  out.ideal = subsemigroup(u.sg, pairing_image(u.pairing));

  PartialMorita& m = out.morita;
  m.left = out.k.sg;
  m.right = out.ideal.sg;
  m.size = u.size;
  const Idx nk = m.left->size();
  const Idx ni = m.right->size();
  m.left_action.resize(static_cast<size_t>(m.size) * nk);
  m.right_action.resize(static_cast<size_t>(m.size) * ni);
  m.left_pairing.resize(static_cast<size_t>(m.size) * m.size);
  m.right_pairing.resize(static_cast<size_t>(m.size) * m.size);
  for (Idx a = 0; a < m.size; ++a) {
    for (Idx k = 0; k < nk; ++k) {
      m.left_action[static_cast<size_t>(a) * nk + k] = out.k.maps[k].fwd[a];
    }
    for (Idx i = 0; i < ni; ++i) {
      m.right_action[static_cast<size_t>(a) * ni + i] =
          u.act(a, out.ideal.to_parent[i]);
    }
    for (Idx b = 0; b < m.size; ++b) {
      Idx om = out.k.index_of(rank_one(u, u, a, b).fwd);
      if (om < 0) {
        throw InternalError("morita_from_set: rank-one map not in K(U)");
      }
      m.left_pairing[static_cast<size_t>(a) * m.size + b] = om;
      Idx rp = out.ideal.from_parent[u.pair(a, b)];
      if (rp < 0) {
        throw InternalError("morita_from_set: pairing escaped its ideal");
      }
      m.right_pairing[static_cast<size_t>(a) * m.size + b] = rp;
    }
  }
  auto rep = check_partial_morita(m);
  if (!rep.morita()) {
    throw InternalError("morita_from_set: checker rejected the result");
  }
  return out;
}

PartialMorita adjointable_biset(const RightSet& u, const RightSet& v,
                                bool compact_only, const Budget& budget) {
  if (!same_semigroup(u.sg, v.sg)) {
    throw InputError("adjointable_biset: sets over different semigroups");
  }
  MapSemigroup left = compact_only
                          ? semigroup_of_maps(enumerate_K(v, v), "K(V)", budget)
                          : L_semigroup(v, budget);
  MapSemigroup right = compact_only
                           ? semigroup_of_maps(enumerate_K(u, u), "K(U)", budget)
                           : L_semigroup(u, budget);
  std::vector<AdjointableMap> carrier =
      compact_only ? enumerate_K(u, v) : enumerate_L(u, v, budget);

  PartialMorita m;
  m.left = left.sg;
  m.right = right.sg;
  m.size = static_cast<Idx>(carrier.size());
  const Idx nl = m.left->size();
  const Idx nr = m.right->size();
  m.left_action.resize(static_cast<size_t>(m.size) * nl);
  m.right_action.resize(static_cast<size_t>(m.size) * nr);
  m.left_pairing.resize(static_cast<size_t>(m.size) * m.size);
  m.right_pairing.resize(static_cast<size_t>(m.size) * m.size);
  auto index_in = [&](const std::vector<Idx>& fwd) {
    for (size_t i = 0; i < carrier.size(); ++i) {
      if (carrier[i].fwd == fwd) {
        return static_cast<Idx>(i);
      }
    }
    throw InternalError("adjointable_biset: composite escaped the carrier");
  };
  for (Idx a = 0; a < m.size; ++a) {
    for (Idx p = 0; p < nl; ++p) {
      m.left_action[static_cast<size_t>(a) * nl + p] =
          index_in(compose_tables(left.maps[p].fwd, carrier[a].fwd));
    }
    for (Idx q = 0; q < nr; ++q) {
      m.right_action[static_cast<size_t>(a) * nr + q] =
          index_in(compose_tables(carrier[a].fwd, right.maps[q].fwd));
    }
    for (Idx b = 0; b < m.size; ++b) {
      Idx lp = left.index_of(compose_tables(carrier[a].fwd, carrier[b].adj));
      Idx rp =
          right.index_of(compose_tables(carrier[a].adj, carrier[b].fwd));
      if (lp < 0 || rp < 0) {
        throw InternalError("adjointable_biset: pairing escaped");
      }
      m.left_pairing[static_cast<size_t>(a) * m.size + b] = lp;
      m.right_pairing[static_cast<size_t>(a) * m.size + b] = rp;
    }
  }
  auto rep = check_partial_morita(m);
  if (!rep.ok()) {
    throw InternalError("adjointable_biset: checker rejected the result");
  }
  return m;
}

}  // namespace invcorr

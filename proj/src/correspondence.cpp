#include "invcorr/correspondence.hpp"

#include <algorithm>
#include <map>

#include "invcorr/union_find.hpp"

namespace invcorr {

std::vector<Idx> Correspondence::theta(Idx s) const {
  std::vector<Idx> f(right.size);
  for (Idx u = 0; u < right.size; ++u) {
    f[u] = lact(s, u);
  }
  return f;
}

CheckReport check_correspondence(const Correspondence& c) {
  CheckReport rep = check_right_regular(c.right);
  if (!rep.ok()) {
    return rep;
  }
  if (!check_right_inverse(c.right).passed) {
    rep.add("RIGHT_INVERSE", {});
    return rep;
  }
  const Idx ns = c.left_sg->size();
  if (c.left_action.size() != static_cast<size_t>(c.size()) * ns) {
    rep.add("LEFT_ACTION_SHAPE", {});
    return rep;
  }
  for (Idx x : c.left_action) {
    if (x < 0 || x >= c.size()) {
      rep.add("LEFT_ACTION_SHAPE", {});
      return rep;
    }
  }
  const InverseSemigroup& s = *c.left_sg;
  for (Idx u = 0; u < c.size(); ++u) {
    for (Idx a = 0; a < ns; ++a) {
      for (Idx b = 0; b < ns; ++b) {
        if (c.lact(a, c.lact(b, u)) != c.lact(s.mul(a, b), u)) {
          rep.add("LEFT_ACTION_LAW", {u, a, b});
        }
      }
      for (Idx t = 0; t < c.right.sg->size(); ++t) {
        if (c.lact(a, c.right.act(u, t)) != c.right.act(c.lact(a, u), t)) {
          rep.add("MIXED_ASSOCIATIVITY", {u, a, t});
        }
      }
      for (Idx v = 0; v < c.size(); ++v) {
        if (c.right.pair(v, c.lact(a, u)) !=
            c.right.pair(c.lact(s.star(a), v), u)) {
          rep.add("ADJOINTABILITY", {v, a, u});
        }
      }
    }
  }
  return rep;
}

Correspondence require_correspondence(Correspondence c,
                                      const std::string& what) {
  if (!check_correspondence(c).ok()) {
    throw InputError(what + ": not an inverse correspondence");
  }
  return c;
}

bool is_non_degenerate(const Correspondence& c) {
  std::vector<bool> hit(c.size(), false);
  for (Idx s = 0; s < c.left_sg->size(); ++s) {
    for (Idx u = 0; u < c.size(); ++u) {
      hit[c.lact(s, u)] = true;
    }
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

Correspondence identity_correspondence(SgPtr s) {
  return from_morita(identity_morita(std::move(s)));
}

Correspondence from_morita(const PartialMorita& m) {
  Correspondence c;
  c.left_sg = m.left;
  c.right = m.right_set();
  c.left_action = m.left_action;
  return c;
}

HomCorrespondence from_hom(const SemigroupHom& theta) {
  if (!check_hom(theta)) {
    throw InputError("from_hom: not a homomorphism");
  }
  const InverseSemigroup& s = *theta.source;
  const InverseSemigroup& t = *theta.target;
  std::vector<bool> in(t.size(), false);
  for (Idx a = 0; a < s.size(); ++a) {
    for (Idx x = 0; x < t.size(); ++x) {
      in[t.mul(theta.map[a], x)] = true;
    }
  }
  HomCorrespondence out;
  std::vector<Idx> pos(t.size(), -1);
  for (Idx x = 0; x < t.size(); ++x) {
    if (in[x]) {
      pos[x] = static_cast<Idx>(out.carrier.size());
      out.carrier.push_back(x);
    }
  }
  Correspondence& c = out.corr;
  c.left_sg = theta.source;
  c.right.sg = theta.target;
  c.right.size = static_cast<Idx>(out.carrier.size());
  const Idx m = c.right.size;
  c.right.action.resize(static_cast<size_t>(m) * t.size());
  c.right.pairing.resize(static_cast<size_t>(m) * m);
  c.left_action.resize(static_cast<size_t>(m) * s.size());
  for (Idx i = 0; i < m; ++i) {
    Idx u = out.carrier[i];
    for (Idx x = 0; x < t.size(); ++x) {
      c.right.action[static_cast<size_t>(i) * t.size() + x] =
          pos[t.mul(u, x)];
    }
    for (Idx j = 0; j < m; ++j) {
      c.right.pairing[static_cast<size_t>(i) * m + j] =
          t.mul(t.star(u), out.carrier[j]);
    }
    for (Idx a = 0; a < s.size(); ++a) {
      c.left_action[static_cast<size_t>(i) * s.size() + a] =
          pos[t.mul(theta.map[a], u)];
    }
  }
  return out;
}

RecoverResult recover_partial_morita(const Correspondence& c,
                                     const Budget& budget) {
  RecoverResult out;
  Correspondence cc = require_correspondence(c, "recover_partial_morita");
  const InverseSemigroup& s = *cc.left_sg;
  std::vector<AdjointableMap> k = enumerate_K(cc.right, cc.right);
  const Idx nk = static_cast<Idx>(k.size());
  auto k_index = [&](const std::vector<Idx>& fwd) -> Idx {
    for (Idx i = 0; i < nk; ++i) {
      if (k[i].fwd == fwd) {
        return i;
      }
    }
    return -1;
  };

  // fibers of theta over K(U)
  std::vector<std::vector<Idx>> theta_of(s.size());
  for (Idx a = 0; a < s.size(); ++a) {
    theta_of[a] = cc.theta(a);
  }
  std::vector<std::vector<Idx>> fiber(nk);
  for (Idx a = 0; a < s.size(); ++a) {
    Idx ki = k_index(theta_of[a]);
    if (ki >= 0) {
      fiber[ki].push_back(a);
    }
  }
  for (Idx i = 0; i < nk; ++i) {
    if (fiber[i].empty()) {
      out.reason = "NOT_PARTIAL_MORITA: some rank-one map has no preimage";
      return out;
    }
  }

  // composition actions of S on K indices
  std::vector<std::vector<Idx>> lmul(s.size(), std::vector<Idx>(nk)),
      rmul(s.size(), std::vector<Idx>(nk));
  for (Idx a = 0; a < s.size(); ++a) {
    for (Idx i = 0; i < nk; ++i) {
      std::vector<Idx> lt(cc.size()), rt(cc.size());
      for (Idx u = 0; u < cc.size(); ++u) {
        lt[u] = theta_of[a][k[i].fwd[u]];
        rt[u] = k[i].fwd[theta_of[a][u]];
      }
      lmul[a][i] = k_index(lt);
      rmul[a][i] = k_index(rt);
      if (lmul[a][i] < 0 || rmul[a][i] < 0) {
        throw InternalError("recover_partial_morita: K(U) not an ideal");
      }
    }
  }

  // section sigma: K -> S with sigma(theta(s) k) = s sigma(k) and
  // sigma(k theta(s)) = sigma(k) s; unique if it exists
  std::vector<Idx> sigma(nk, -1);
  long long nodes = 0;
  auto propagate = [&](auto&& self, Idx start) -> bool {
    std::vector<Idx> queue{start};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      Idx i = queue[qi];
      for (Idx a = 0; a < s.size(); ++a) {
        for (int side = 0; side < 2; ++side) {
          Idx j = side == 0 ? lmul[a][i] : rmul[a][i];
          Idx val = side == 0 ? s.mul(a, sigma[i]) : s.mul(sigma[i], a);
          if (sigma[j] < 0) {
            sigma[j] = val;
            queue.push_back(j);
          } else if (sigma[j] != val) {
            return false;
          }
        }
      }
    }
    (void)self;
    return true;
  };
  auto search = [&](auto&& self, Idx next) -> bool {
    while (next < nk && sigma[next] >= 0) {
      ++next;
    }
    if (next == nk) {
      return true;
    }
    for (Idx cand : fiber[next]) {
      if (++nodes > budget.nodes) {
        throw BudgetError("recover_partial_morita: SIZE_LIMIT");
      }
      std::vector<Idx> snapshot = sigma;
      sigma[next] = cand;
      if (propagate(propagate, next) && self(self, next + 1)) {
        return true;
      }
      sigma = snapshot;
    }
    return false;
  };
  if (nk > 0 && !search(search, 0)) {
    out.reason =
        "NOT_PARTIAL_MORITA: no ideal section of theta over K(U) exists";
    return out;
  }

  // sigma must be injective and its image a two-sided ideal
  std::vector<Idx> ideal(sigma);
  std::sort(ideal.begin(), ideal.end());
  if (std::adjacent_find(ideal.begin(), ideal.end()) != ideal.end()) {
    out.reason = "NOT_PARTIAL_MORITA: section not injective";
    return out;
  }
  if (!is_two_sided_ideal(s, ideal)) {
    out.reason = "NOT_PARTIAL_MORITA: section image is not an ideal";
    return out;
  }

  PartialMorita& m = out.morita;
  m.left = cc.left_sg;
  m.right = cc.right.sg;
  m.size = cc.size();
  m.left_action = cc.left_action;
  m.right_action = cc.right.action;
  m.right_pairing = cc.right.pairing;
  m.left_pairing.resize(static_cast<size_t>(m.size) * m.size);
  for (Idx a = 0; a < m.size; ++a) {
    for (Idx b = 0; b < m.size; ++b) {
      Idx ki = k_index(rank_one(cc.right, cc.right, a, b).fwd);
      if (ki < 0) {
        throw InternalError("recover_partial_morita: missing rank one");
      }
      m.left_pairing[static_cast<size_t>(a) * m.size + b] = sigma[ki];
    }
  }
  if (!check_partial_morita(m).ok()) {
    throw InternalError(
        "recover_partial_morita: recovered structure failed the checker");
  }
  out.ok = true;
  out.ideal = std::move(ideal);
  return out;
}

namespace {

void require_middle_match(const Correspondence& a, const Correspondence& b) {
  if (!same_semigroup(a.right.sg, b.left_sg)) {
    throw InputError("tensor: MIDDLE_MISMATCH");
  }
}

}  // namespace

TensorProduct tensor(const Correspondence& a, const Correspondence& b) {
  require_middle_match(a, b);
  require_correspondence(a, "tensor (left factor)");
  require_correspondence(b, "tensor (right factor)");
  TensorProduct out;
  out.m1 = a.size();
  out.m2 = b.size();
  const Idx total = out.m1 * out.m2;
  UnionFind uf(total);
  auto id = [&](Idx u, Idx v) { return u * out.m2 + v; };
  const Idx nt = a.right.sg->size();
  for (Idx u = 0; u < out.m1; ++u) {
    for (Idx t = 0; t < nt; ++t) {
      for (Idx v = 0; v < out.m2; ++v) {
        uf.unite(id(a.right.act(u, t), v), id(u, b.lact(t, v)));
      }
    }
  }
  Idx classes = 0;
  out.class_of = uf.classes(&classes);
  out.reps.assign(classes, {-1, -1});
  for (Idx u = 0; u < out.m1; ++u) {
    for (Idx v = 0; v < out.m2; ++v) {
      if (out.reps[out.cls(u, v)].first < 0) {
        out.reps[out.cls(u, v)] = {u, v};
      }
    }
  }

  Correspondence& c = out.corr;
  c.left_sg = a.left_sg;
  c.right.sg = b.right.sg;
  c.right.size = classes;
  const Idx nr = c.right.sg->size();
  const Idx ns = c.left_sg->size();
  c.right.action.assign(static_cast<size_t>(classes) * nr, -1);
  c.right.pairing.assign(static_cast<size_t>(classes) * classes, -1);
  c.left_action.assign(static_cast<size_t>(classes) * ns, -1);

  // every representative must give the same value; quotient operations
  // are provably well-defined, so disagreement is an internal
  // inconsistency
  auto put = [&](std::vector<Idx>& table, size_t pos, Idx val,
                 const char* what) {
    if (table[pos] >= 0 && table[pos] != val) {
      throw InternalError(std::string("tensor: ") + what +
                          " not well-defined on classes");
    }
    table[pos] = val;
  };
  for (Idx u = 0; u < out.m1; ++u) {
    for (Idx v = 0; v < out.m2; ++v) {
      Idx cl = out.cls(u, v);
      for (Idx r = 0; r < nr; ++r) {
        put(c.right.action, static_cast<size_t>(cl) * nr + r,
            out.cls(u, b.right.act(v, r)), "right action");
      }
      for (Idx x = 0; x < ns; ++x) {
        put(c.left_action, static_cast<size_t>(cl) * ns + x,
            out.cls(a.lact(x, u), v), "left action");
      }
      for (Idx u2 = 0; u2 < out.m1; ++u2) {
        for (Idx v2 = 0; v2 < out.m2; ++v2) {
          Idx cl2 = out.cls(u2, v2);
          // <u x v | u2 x v2> = <v | <u|u2>_U v2>_V
          Idx val = b.right.pair(v, b.lact(a.right.pair(u, u2), v2));
          put(c.right.pairing, static_cast<size_t>(cl) * classes + cl2, val,
              "right pairing");
        }
      }
    }
  }

  if (!check_right_inverse(c.right).passed) {
    throw InternalError("tensor: result is not a right inverse set");
  }
  if (!check_correspondence(c).ok()) {
    throw InternalError("tensor: result is not an inverse correspondence");
  }
  if (is_non_degenerate(a) && !is_non_degenerate(c)) {
    throw InternalError("tensor: non-degeneracy failed to propagate");
  }
  return out;
}

CheckReport check_corr_map(const Correspondence& a, const Correspondence& b,
                           const std::vector<Idx>& map) {
  CheckReport rep;
  if (!same_semigroup(a.left_sg, b.left_sg) ||
      !same_semigroup(a.right.sg, b.right.sg)) {
    rep.add("SAME_SEMIGROUPS", {});
    return rep;
  }
  if (map.size() != static_cast<size_t>(a.size())) {
    rep.add("MAP_SHAPE", {});
    return rep;
  }
  for (Idx x : map) {
    if (x < 0 || x >= b.size()) {
      rep.add("MAP_SHAPE", {});
      return rep;
    }
  }
  for (Idx u = 0; u < a.size(); ++u) {
    for (Idx v = 0; v < a.size(); ++v) {
      if (b.right.pair(map[u], map[v]) != a.right.pair(u, v)) {
        rep.add("RIGHT_PAIRING_PRESERVING", {u, v});
      }
    }
    for (Idx s = 0; s < a.left_sg->size(); ++s) {
      if (map[a.lact(s, u)] != b.lact(s, map[u])) {
        rep.add("LEFT_S_MAP", {s, u});
      }
    }
  }
  if (rep.ok()) {
    // pairing preserving maps out of an inverse set are injective
    std::vector<bool> seen(b.size(), false);
    for (Idx x : map) {
      if (seen[x]) {
        throw InternalError("check_corr_map: correspondence map not "
                            "injective");
      }
      seen[x] = true;
    }
  }
  return rep;
}

bool is_surjective(const std::vector<Idx>& map, Idx target_size) {
  std::vector<bool> hit(target_size, false);
  for (Idx x : map) {
    hit[x] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

std::vector<Idx> tensor_map(const TensorProduct& src,
                            const TensorProduct& dst,
                            const std::vector<Idx>& sigma1,
                            const std::vector<Idx>& sigma2) {
  if (sigma1.size() != static_cast<size_t>(src.m1) ||
      sigma2.size() != static_cast<size_t>(src.m2)) {
    throw InputError("tensor_map: factor maps have the wrong shape");
  }
  std::vector<Idx> out(src.corr.size(), -1);
  for (Idx u = 0; u < src.m1; ++u) {
    for (Idx v = 0; v < src.m2; ++v) {
      Idx from = src.cls(u, v);
      Idx to = dst.cls(sigma1[u], sigma2[v]);
      if (out[from] >= 0 && out[from] != to) {
        throw InternalError("tensor_map: not well-defined on classes");
      }
      out[from] = to;
    }
  }
  return out;
}

MoritaTensor tensor_partial_morita(const PartialMorita& m1,
                                   const PartialMorita& m2,
                                   const Budget& budget) {
  MoritaTensor out;
  Correspondence c1 = from_morita(m1);
  Correspondence c2 = from_morita(m2);
  out.tensor = tensor(c1, c2);
  RecoverResult rec = recover_partial_morita(out.tensor.corr, budget);
  if (!rec.ok) {
    throw InternalError(
        "tensor_partial_morita: tensor of partial Moritas did not recover (" +
        rec.reason + ")");
  }
  out.morita = std::move(rec.morita);

  // W = { s in I | <u'|su>_U in J for all u, u' }
  std::vector<Idx> ideal_i = pairing_image(m1.left_pairing);
  std::vector<Idx> ideal_j = pairing_image(m2.left_pairing);
  std::vector<bool> in_j(m2.left->size(), false);
  for (Idx x : ideal_j) {
    in_j[x] = true;
  }
  std::vector<Idx> w;
  for (Idx s : ideal_i) {
    bool all_in = true;
    for (Idx u = 0; u < m1.size && all_in; ++u) {
      for (Idx v = 0; v < m1.size && all_in; ++v) {
        all_in = in_j[m1.rpair(v, m1.lact(s, u))];
      }
    }
    if (all_in) {
      w.push_back(s);
    }
  }
  if (w != rec.ideal) {
    throw InternalError(
        "tensor_partial_morita: recovered ideal differs from W");
  }
  out.ideal = std::move(w);

  // <u2 x v2 | u1 x v1>_left = <u2 <v2|v1>_left | u1>_left
  for (Idx u2 = 0; u2 < m1.size; ++u2) {
    for (Idx v2 = 0; v2 < m2.size; ++v2) {
      for (Idx u1 = 0; u1 < m1.size; ++u1) {
        for (Idx v1 = 0; v1 < m2.size; ++v1) {
          Idx lhs = out.morita.lpair(out.tensor.cls(u2, v2),
                                     out.tensor.cls(u1, v1));
          Idx rhs = m1.lpair(m1.ract(u2, m2.lpair(v2, v1)), u1);
          if (lhs != rhs) {
            throw InternalError(
                "tensor_partial_morita: left pairing formula failed");
          }
        }
      }
    }
  }
  return out;
}

}  // namespace invcorr

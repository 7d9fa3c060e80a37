#include "invcorr/set_ops.hpp"

#include <algorithm>

namespace invcorr {

Enlargement enlargement_set(const SgPtr& s,
                            const std::vector<Idx>& t_members) {
  if (!is_inverse_subsemigroup(*s, t_members)) {
    throw InputError("enlargement_set: not an inverse subsemigroup");
  }
  std::vector<bool> in_t(s->size(), false);
  for (Idx t : t_members) {
    in_t[t] = true;
  }
  for (Idx t1 : t_members) {
    for (Idx x = 0; x < s->size(); ++x) {
      for (Idx t2 : t_members) {
        if (!in_t[s->mul(s->mul(t1, x), t2)]) {
          throw InputError("enlargement_set: PRECONDITION_FAILED, TST not in T");
        }
      }
    }
  }

  Enlargement out;
  out.t_sub = subsemigroup(s, t_members);

  std::vector<bool> in_carrier(s->size(), false);
  for (Idx t : t_members) {
    for (Idx x = 0; x < s->size(); ++x) {
      in_carrier[s->mul(t, x)] = true;
    }
  }
  for (Idx x = 0; x < s->size(); ++x) {
    if (in_carrier[x]) {
      out.carrier.push_back(x);
    }
  }
  std::vector<Idx> pos(s->size(), -1);
  for (size_t i = 0; i < out.carrier.size(); ++i) {
    pos[out.carrier[i]] = static_cast<Idx>(i);
  }

  PartialMorita& m = out.morita;
  m.left = out.t_sub.sg;
  m.right = s;
  m.size = static_cast<Idx>(out.carrier.size());
  m.left_action.resize(static_cast<size_t>(m.size) * m.left->size());
  m.right_action.resize(static_cast<size_t>(m.size) * m.right->size());
  m.left_pairing.resize(static_cast<size_t>(m.size) * m.size);
  m.right_pairing.resize(static_cast<size_t>(m.size) * m.size);
  for (Idx i = 0; i < m.size; ++i) {
    Idx u = out.carrier[i];
    for (Idx a = 0; a < m.left->size(); ++a) {
      Idx p = s->mul(out.t_sub.to_parent[a], u);
      m.left_action[static_cast<size_t>(i) * m.left->size() + a] = pos[p];
    }
    for (Idx x = 0; x < s->size(); ++x) {
      m.right_action[static_cast<size_t>(i) * s->size() + x] =
          pos[s->mul(u, x)];
    }
    for (Idx j = 0; j < m.size; ++j) {
      Idx v = out.carrier[j];
      Idx lp = s->mul(u, s->star(v));  // u1 u2* lands in T
      if (out.t_sub.from_parent[lp] < 0) {
        throw InternalError("enlargement_set: left pairing escaped T");
      }
      m.left_pairing[static_cast<size_t>(i) * m.size + j] =
          out.t_sub.from_parent[lp];
      m.right_pairing[static_cast<size_t>(i) * m.size + j] =
          s->mul(s->star(u), v);
    }
  }
  return out;
}

DirectSum direct_sum(const RightSet& u, const RightSet& v) {
  if (!same_semigroup(u.sg, v.sg)) {
    throw InputError("direct_sum: sets live over different semigroups");
  }
  auto zero = u.sg->zero();
  if (!zero) {
    throw InputError("direct_sum: NO_ZERO");
  }
  if (u.size == 0 || v.size == 0) {
    throw InputError("direct_sum: summands must be nonempty");
  }
  for (const RightSet* w : {&u, &v}) {
    if (!is_right_inverse_set(*w)) {
      throw InputError("direct_sum: summand is not a right inverse set");
    }
  }
  // the zero orbit u*0 is a single element in each summand
  auto zero_of = [&](const RightSet& w) {
    Idx z = w.act(0, *zero);
    for (Idx a = 0; a < w.size; ++a) {
      if (w.act(a, *zero) != z) {
        throw InternalError("direct_sum: zero orbit not constant");
      }
    }
    return z;
  };
  Idx zu = zero_of(u);
  Idx zv = zero_of(v);

  DirectSum out;
  out.from_first.resize(u.size);
  out.from_second.resize(v.size);
  for (Idx a = 0; a < u.size; ++a) {
    out.from_first[a] = a;
  }
  Idx next = u.size;
  for (Idx b = 0; b < v.size; ++b) {
    out.from_second[b] = b == zv ? zu : next++;
  }

  RightSet& w = out.set;
  w.sg = u.sg;
  w.size = next;
  const Idx nt = w.sg->size();
  w.action.resize(static_cast<size_t>(w.size) * nt);
  w.pairing.assign(static_cast<size_t>(w.size) * w.size, *zero);
  for (Idx a = 0; a < u.size; ++a) {
    for (Idx t = 0; t < nt; ++t) {
      w.action[static_cast<size_t>(out.from_first[a]) * nt + t] =
          out.from_first[u.act(a, t)];
    }
    for (Idx b = 0; b < u.size; ++b) {
      w.pairing[static_cast<size_t>(out.from_first[a]) * w.size +
                out.from_first[b]] = u.pair(a, b);
    }
  }
  for (Idx a = 0; a < v.size; ++a) {
    for (Idx t = 0; t < nt; ++t) {
      Idx img = out.from_second[v.act(a, t)];
      Idx row = out.from_second[a];
      if (w.action[static_cast<size_t>(row) * nt + t] != img &&
          a == zv) {
        throw InternalError("direct_sum: glued zero acts inconsistently");
      }
      w.action[static_cast<size_t>(row) * nt + t] = img;
    }
    for (Idx b = 0; b < v.size; ++b) {
      Idx r = out.from_second[a], c = out.from_second[b];
      Idx val = v.pair(a, b);
      if ((a == zv || b == zv) &&
          w.pairing[static_cast<size_t>(r) * w.size + c] != val) {
        throw InternalError("direct_sum: glued zero pairs inconsistently");
      }
      w.pairing[static_cast<size_t>(r) * w.size + c] = val;
    }
  }
  return out;
}

PresheafSet presheaf_set(const PresheafInput& in) {
  const InverseSemigroup& e = *in.semilattice;
  for (Idx x = 0; x < e.size(); ++x) {
    if (!e.is_idempotent(x)) {
      throw InputError("presheaf_set: semigroup has a non-idempotent");
    }
  }
  if (static_cast<Idx>(in.part_sizes.size()) != e.size()) {
    throw InputError("presheaf_set: one part per idempotent required");
  }
  auto leq = [&](Idx a, Idx b) { return e.mul(a, b) == a; };
  auto sigma = [&](Idx lo, Idx hi) -> const std::vector<Idx>& {
    auto it = in.restrictions.find({lo, hi});
    if (it == in.restrictions.end() ||
        static_cast<Idx>(it->second.size()) != in.part_sizes[hi]) {
      throw InputError("presheaf_set: missing or malformed restriction");
    }
    return it->second;
  };
  // (i) identity restrictions
  for (Idx x = 0; x < e.size(); ++x) {
    const auto& id = sigma(x, x);
    for (Idx k = 0; k < in.part_sizes[x]; ++k) {
      if (id[k] != k) {
        throw InputError("presheaf_set: identity restriction violated");
      }
    }
  }
  // (ii) composition
  for (Idx a = 0; a < e.size(); ++a) {
    for (Idx b = 0; b < e.size(); ++b) {
      if (!leq(a, b)) {
        continue;
      }
      for (Idx c = 0; c < e.size(); ++c) {
        if (!leq(b, c)) {
          continue;
        }
        const auto& ab = sigma(a, b);
        const auto& bc = sigma(b, c);
        const auto& ac = sigma(a, c);
        for (Idx k = 0; k < in.part_sizes[c]; ++k) {
          if (ab[bc[k]] != ac[k]) {
            throw InputError("presheaf_set: composition law violated");
          }
        }
      }
    }
  }

  PresheafSet out;
  std::vector<std::vector<Idx>> global(e.size());
  for (Idx x = 0; x < e.size(); ++x) {
    global[x].resize(in.part_sizes[x]);
    for (Idx k = 0; k < in.part_sizes[x]; ++k) {
      global[x][k] = static_cast<Idx>(out.carrier.size());
      out.carrier.emplace_back(x, k);
    }
  }
  const Idx m = static_cast<Idx>(out.carrier.size());

  // (iii) the largest agreement idempotent for every pair
  std::vector<Idx> pairing(static_cast<size_t>(m) * m);
  for (Idx i = 0; i < m; ++i) {
    auto [e1, k1] = out.carrier[i];
    for (Idx j = 0; j < m; ++j) {
      auto [e2, k2] = out.carrier[j];
      std::vector<Idx> agree;
      for (Idx x = 0; x < e.size(); ++x) {
        if (leq(x, e1) && leq(x, e2) &&
            sigma(x, e1)[k1] == sigma(x, e2)[k2]) {
          agree.push_back(x);
        }
      }
      Idx best = -1;
      for (Idx cand : agree) {
        bool top = true;
        for (Idx other : agree) {
          top = top && leq(other, cand);
        }
        if (top) {
          best = cand;
          break;
        }
      }
      if (best < 0) {
        throw InputError("presheaf_set: CONDITION_III_FAILS at pair (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
      }
      pairing[static_cast<size_t>(i) * m + j] = best;
    }
  }

  LeftSet& set = out.set;
  set.sg = in.semilattice;
  set.size = m;
  set.pairing = std::move(pairing);
  set.action.resize(static_cast<size_t>(m) * e.size());
  for (Idx i = 0; i < m; ++i) {
    auto [e1, k1] = out.carrier[i];
    for (Idx f = 0; f < e.size(); ++f) {
      Idx lo = e.mul(f, e1);
      set.action[static_cast<size_t>(i) * e.size() + f] =
          global[lo][sigma(lo, e1)[k1]];
    }
  }
  if (!check_left_regular(set).ok() || !check_left_inverse(set).passed) {
    throw InternalError("presheaf_set: construction failed the left axioms");
  }
  return out;
}

BijBiset partial_bijection_biset(Idx nx, Idx ny) {
  if (nx < 0 || ny < 0 || nx > 3 || ny > 3) {
    throw BudgetError("partial_bijection_biset: SIZE_LIMIT");
  }
  BijBiset out;
  out.carrier = enumerate_partial_bijections(nx, ny);
  auto iy = symmetric_inverse_monoid(ny);
  auto ix = symmetric_inverse_monoid(nx);
  auto find_in = [](const std::vector<PartialBij>& elems,
                    const PartialBij& u) {
    auto it = std::find(elems.begin(), elems.end(), u);
    if (it == elems.end()) {
      throw InternalError("partial_bijection_biset: element escaped");
    }
    return static_cast<Idx>(it - elems.begin());
  };

  PartialMorita& m = out.morita;
  m.left = iy.sg;
  m.right = ix.sg;
  m.size = static_cast<Idx>(out.carrier.size());
  m.left_action.resize(static_cast<size_t>(m.size) * m.left->size());
  m.right_action.resize(static_cast<size_t>(m.size) * m.right->size());
  m.left_pairing.resize(static_cast<size_t>(m.size) * m.size);
  m.right_pairing.resize(static_cast<size_t>(m.size) * m.size);
  for (Idx i = 0; i < m.size; ++i) {
    const PartialBij& u = out.carrier[i];
    for (Idx g = 0; g < m.left->size(); ++g) {
      m.left_action[static_cast<size_t>(i) * m.left->size() + g] =
          find_in(out.carrier, compose(iy.elems[g], u));
    }
    for (Idx h = 0; h < m.right->size(); ++h) {
      m.right_action[static_cast<size_t>(i) * m.right->size() + h] =
          find_in(out.carrier, compose(u, ix.elems[h]));
    }
    for (Idx j = 0; j < m.size; ++j) {
      const PartialBij& v = out.carrier[j];
      m.left_pairing[static_cast<size_t>(i) * m.size + j] =
          find_in(iy.elems, compose(u, inverse_of(v)));
      m.right_pairing[static_cast<size_t>(i) * m.size + j] =
          find_in(ix.elems, compose(inverse_of(u), v));
    }
  }
  return out;
}

bool set_order(const RightSet& u, Idx a, Idx b) {
  const InverseSemigroup& t = *u.sg;
  bool c1 = u.act(b, u.pair(a, a)) == a;
  bool c2 = false;
  for (Idx e : t.idempotents) {
    c2 = c2 || u.act(b, e) == a;
  }
  bool c3 = u.act(a, u.pair(a, b)) == a;
  // idempotents of K(U): deduplicated rank-one maps that square to
  // themselves
  bool c4 = false;
  std::vector<Idx> f(u.size);
  for (Idx w = 0; w < u.size && !c4; ++w) {
    for (Idx x = 0; x < u.size && !c4; ++x) {
      for (Idx y = 0; y < u.size; ++y) {
        f[y] = u.act(w, u.pair(x, y));
      }
      bool idem = true;
      for (Idx y = 0; y < u.size && idem; ++y) {
        idem = f[f[y]] == f[y];
      }
      c4 = idem && f[b] == a;
    }
  }
  if (c1 != c2 || c1 != c3 || c1 != c4) {
    throw InternalError("set_order: equivalent conditions disagree");
  }
  return c1;
}

CheckReport check_map(const SetMap& m) {
  CheckReport rep;
  if (!same_semigroup(m.source.sg, m.target.sg)) {
    rep.add("SAME_SEMIGROUP", {});
    return rep;
  }
  if (m.map.size() != static_cast<size_t>(m.source.size)) {
    rep.add("MAP_SHAPE", {});
    return rep;
  }
  for (Idx x : m.map) {
    if (x < 0 || x >= m.target.size) {
      rep.add("MAP_SHAPE", {});
      return rep;
    }
  }
  bool want_tmap =
      m.kind == MapKind::RightTMap || m.kind == MapKind::Both;
  bool want_pairing =
      m.kind == MapKind::PairingPreserving || m.kind == MapKind::Both;
  if (want_tmap) {
    for (Idx a = 0; a < m.source.size; ++a) {
      for (Idx t = 0; t < m.source.sg->size(); ++t) {
        if (m.map[m.source.act(a, t)] != m.target.act(m.map[a], t)) {
          rep.add("RIGHT_T_MAP", {a, t});
        }
      }
    }
  }
  if (want_pairing) {
    for (Idx a = 0; a < m.source.size; ++a) {
      for (Idx b = 0; b < m.source.size; ++b) {
        if (m.target.pair(m.map[a], m.map[b]) != m.source.pair(a, b)) {
          rep.add("PAIRING_PRESERVING", {a, b});
        }
      }
    }
  }
  return rep;
}

namespace {

// backtracking over pairing-compatible injections; pairings are the only
// constraint, equivariance is a theorem re-checked afterwards
template <typename PairA, typename PairB>
bool extend_pairing_iso(Idx m, PairA&& pa, PairB&& pb,
                        std::vector<Idx>& map, std::vector<bool>& used,
                        Idx next) {
  if (next == m) {
    return true;
  }
  for (Idx cand = 0; cand < m; ++cand) {
    if (used[cand]) {
      continue;
    }
    bool ok = true;
    for (Idx x = 0; x <= next && ok; ++x) {
      Idx img = x == next ? cand : map[x];
      ok = pb(cand, img) == pa(next, x) && pb(img, cand) == pa(x, next);
    }
    if (!ok) {
      continue;
    }
    map[next] = cand;
    used[cand] = true;
    if (extend_pairing_iso(m, pa, pb, map, used, next + 1)) {
      return true;
    }
    used[cand] = false;
    map[next] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Idx>> find_set_isomorphism(const RightSet& a,
                                                     const RightSet& b) {
  if (!same_semigroup(a.sg, b.sg) || a.size != b.size) {
    return std::nullopt;
  }
  // fingerprint filter: multisets of diagonal pairings must agree
  std::vector<Idx> da(a.size), db(b.size);
  for (Idx x = 0; x < a.size; ++x) {
    da[x] = a.pair(x, x);
    db[x] = b.pair(x, x);
  }
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) {
    return std::nullopt;
  }
  std::vector<Idx> map(a.size, -1);
  std::vector<bool> used(b.size, false);
  auto pa = [&](Idx x, Idx y) { return a.pair(x, y); };
  auto pb = [&](Idx x, Idx y) { return b.pair(x, y); };
  if (!extend_pairing_iso(a.size, pa, pb, map, used, 0)) {
    return std::nullopt;
  }
  // pairing preserving surjections are isomorphisms: T-map and injective
  SetMap check{a, b, map, MapKind::Both};
  if (!check_map(check).ok()) {
    throw InternalError("find_set_isomorphism: found map is not a T-map");
  }
  return map;
}

std::optional<std::vector<Idx>> find_left_set_isomorphism(const LeftSet& a,
                                                          const LeftSet& b) {
  if (!same_semigroup(a.sg, b.sg) || a.size != b.size) {
    return std::nullopt;
  }
  std::vector<Idx> sa(a.size), sb(b.size);
  for (Idx x = 0; x < a.size; ++x) {
    sa[x] = a.pair(x, x);
    sb[x] = b.pair(x, x);
  }
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) {
    return std::nullopt;
  }
  std::vector<Idx> map(a.size, -1);
  std::vector<bool> used(b.size, false);
  auto pa = [&](Idx x, Idx y) { return a.pair(x, y); };
  auto pb = [&](Idx x, Idx y) { return b.pair(x, y); };
  if (!extend_pairing_iso(a.size, pa, pb, map, used, 0)) {
    return std::nullopt;
  }
  for (Idx u = 0; u < a.size; ++u) {
    for (Idx s = 0; s < a.sg->size(); ++s) {
      if (map[a.act(s, u)] != b.act(s, map[u])) {
        throw InternalError(
            "find_left_set_isomorphism: found map is not an S-map");
      }
    }
  }
  return map;
}

}  // namespace invcorr

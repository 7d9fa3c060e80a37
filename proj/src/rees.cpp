#include "invcorr/rees.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "invcorr/correspondence.hpp"
#include "invcorr/set_ops.hpp"
#include "invcorr/union_find.hpp"

namespace invcorr {

McAlisterCheck check_mcalister(SgPtr t, Idx index_size, std::vector<Idx> p) {
  McAlisterCheck out;
  const Idx k = index_size;
  if (k < 0 || p.size() != static_cast<size_t>(k) * k) {
    out.report.add("SHAPE", {});
    return out;
  }
  for (Idx x : p) {
    if (x < 0 || x >= t->size()) {
      out.report.add("SHAPE", {});
      return out;
    }
  }
  auto at = [&](Idx i, Idx j) { return p[static_cast<size_t>(i) * k + j]; };
  for (Idx i = 0; i < k; ++i) {
    if (!t->is_idempotent(at(i, i))) {
      out.report.add("MF1", {i});
    }
    for (Idx j = 0; j < k; ++j) {
      if (t->mul(t->mul(at(i, i), at(i, j)), at(j, j)) != at(i, j)) {
        out.report.add("MF2", {i, j});
      }
      if (t->star(at(i, j)) != at(j, i)) {
        out.report.add("MF3", {i, j});
      }
      for (Idx l = 0; l < k; ++l) {
        if (!natural_order(*t, t->mul(at(i, j), at(j, l)), at(i, l))) {
          out.report.add("MF4", {i, j, l});
        }
      }
    }
  }
  if (!out.report.ok()) {
    return out;
  }
  McAlisterFn fn{std::move(t), k, std::move(p), false};
  fn.full = true;
  for (Idx e : fn.t->idempotents) {
    bool dominated = false;
    for (Idx i = 0; i < k && !dominated; ++i) {
      dominated = natural_order(*fn.t, e, fn.at(i, i));
    }
    if (!dominated) {
      fn.full = false;
      break;
    }
  }
  out.fn = std::move(fn);
  return out;
}

McAlisterFn require_mcalister(SgPtr t, Idx index_size, std::vector<Idx> p,
                              const std::string& what) {
  auto c = check_mcalister(std::move(t), index_size, std::move(p));
  if (!c.fn) {
    throw InputError(what + ": not a partial McAlister function (" +
                     c.report.violations.front().axiom + ")");
  }
  return std::move(*c.fn);
}

Idx ReesMatrix::index_of(Idx j, Idx t, Idx i) const {
  std::array<Idx, 3> key{j, t, i};
  auto it = std::lower_bound(elems.begin(), elems.end(), key);
  if (it == elems.end() || *it != key) {
    return -1;
  }
  return static_cast<Idx>(it - elems.begin());
}

ReesMatrix regular_rees(const McAlisterFn& pm) {
  ReesMatrix out;
  out.pm = pm;
  const InverseSemigroup& t = *pm.t;
  for (Idx j = 0; j < pm.index_size; ++j) {
    for (Idx x = 0; x < t.size(); ++x) {
      for (Idx i = 0; i < pm.index_size; ++i) {
        if (t.mul(t.mul(pm.at(j, j), x), pm.at(i, i)) == x) {
          out.elems.push_back({j, x, i});
        }
      }
    }
  }
  std::sort(out.elems.begin(), out.elems.end());
  const Idx n = static_cast<Idx>(out.elems.size());
  out.table.n = n;
  out.table.tab.resize(static_cast<size_t>(n) * n);
  for (Idx a = 0; a < n; ++a) {
    auto [j2, t2, i2] = out.elems[a];
    for (Idx b = 0; b < n; ++b) {
      auto [j1, t1, i1] = out.elems[b];
      Idx prod = t.mul(t.mul(t2, pm.at(i2, j1)), t1);
      Idx c = out.index_of(j2, prod, i1);
      if (c < 0) {
        throw InternalError("regular_rees: product left the carrier");
      }
      out.table.tab[static_cast<size_t>(a) * n + b] = c;
    }
  }
  if (!check_associative(out.table)) {
    throw InternalError("regular_rees: product is not associative");
  }
  // regular: (i, t*, j) is a generalized inverse of (j, t, i)
  for (Idx a = 0; a < n; ++a) {
    auto [j, x, i] = out.elems[a];
    Idx b = out.index_of(i, t.star(x), j);
    if (b < 0 || out.table.at(out.table.at(a, b), a) != a ||
        out.table.at(out.table.at(b, a), b) != b) {
      throw InternalError("regular_rees: not regular");
    }
  }
  return out;
}

InverseRees inverse_rees(const McAlisterFn& pm) {
  InverseRees out;
  out.rm = regular_rees(pm);
  const InverseSemigroup& t = *pm.t;
  const Idx n = out.rm.table.n;

  auto related = [&](Idx a, Idx b) {
    auto [j1, t1, i1] = out.rm.elems[a];
    auto [j2, t2, i2] = out.rm.elems[b];
    return t.mul(t.mul(pm.at(j1, j2), t2), pm.at(i2, i1)) == t1 &&
           t.mul(t.mul(pm.at(j2, j1), t1), pm.at(i1, i2)) == t2;
  };
  // gamma must be an equivalence relation compatible with the product
  for (Idx a = 0; a < n; ++a) {
    if (!related(a, a)) {
      throw InternalError("inverse_rees: gamma not reflexive");
    }
    for (Idx b = 0; b < n; ++b) {
      if (related(a, b) != related(b, a)) {
        throw InternalError("inverse_rees: gamma not symmetric");
      }
      for (Idx c = 0; c < n; ++c) {
        if (related(a, b) && related(b, c) && !related(a, c)) {
          throw InternalError("inverse_rees: gamma not transitive");
        }
        if (related(a, b)) {
          if (!related(out.rm.table.at(a, c), out.rm.table.at(b, c)) ||
              !related(out.rm.table.at(c, a), out.rm.table.at(c, b))) {
            throw InternalError("inverse_rees: gamma not a congruence");
          }
        }
      }
    }
  }

  UnionFind uf(n);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = a + 1; b < n; ++b) {
      if (related(a, b)) {
        uf.unite(a, b);
      }
    }
  }
  Idx classes = 0;
  out.gamma_class = uf.classes(&classes);
  out.reps.assign(classes, {-1, -1, -1});
  for (Idx a = 0; a < n; ++a) {
    if (out.reps[out.gamma_class[a]][0] < 0) {
      out.reps[out.gamma_class[a]] = out.rm.elems[a];
    }
  }
  MulTable q;
  q.n = classes;
  q.tab.assign(static_cast<size_t>(classes) * classes, -1);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      Idx& slot = q.tab[static_cast<size_t>(out.gamma_class[a]) * classes +
                        out.gamma_class[b]];
      Idx val = out.gamma_class[out.rm.table.at(a, b)];
      if (slot >= 0 && slot != val) {
        throw InternalError("inverse_rees: quotient not well-defined");
      }
      slot = val;
    }
  }
  RecognizeResult rec = recognize_inverse(q);
  if (!rec.ok()) {
    throw InternalError("inverse_rees: quotient is not inverse");
  }
  out.sg = std::make_shared<const InverseSemigroup>(std::move(*rec.sg));
  // the generalized inverse of [j,t,i] is [i,t*,j]
  for (Idx a = 0; a < n; ++a) {
    auto [j, x, i] = out.rm.elems[a];
    Idx b = out.rm.index_of(i, t.star(x), j);
    if (out.sg->star(out.gamma_class[a]) != out.gamma_class[b]) {
      throw InternalError("inverse_rees: [i,t*,j] is not the inverse");
    }
  }
  return out;
}

UpSet inverse_set_from_p(const McAlisterFn& pm) {
  UpSet out;
  out.im = inverse_rees(pm);
  const InverseSemigroup& t = *pm.t;
  for (Idx j = 0; j < pm.index_size; ++j) {
    for (Idx x = 0; x < t.size(); ++x) {
      if (t.mul(pm.at(j, j), x) == x) {
        out.prime.emplace_back(j, x);
      }
    }
  }
  const Idx np = static_cast<Idx>(out.prime.size());
  auto prime_index = [&](Idx j, Idx x) {
    auto it = std::lower_bound(out.prime.begin(), out.prime.end(),
                               std::make_pair(j, x));
    if (it == out.prime.end() || *it != std::make_pair(j, x)) {
      throw InternalError("inverse_set_from_p: element left the carrier");
    }
    return static_cast<Idx>(it - out.prime.begin());
  };

  auto similar = [&](Idx a, Idx b) {
    auto [j1, t1] = out.prime[a];
    auto [j2, t2] = out.prime[b];
    return t1 == t.mul(pm.at(j1, j2), t2) && t2 == t.mul(pm.at(j2, j1), t1);
  };
  for (Idx a = 0; a < np; ++a) {
    if (!similar(a, a)) {
      throw InternalError("inverse_set_from_p: ~ not reflexive");
    }
    for (Idx b = 0; b < np; ++b) {
      if (similar(a, b) != similar(b, a)) {
        throw InternalError("inverse_set_from_p: ~ not symmetric");
      }
      for (Idx c = 0; c < np; ++c) {
        if (similar(a, b) && similar(b, c) && !similar(a, c)) {
          throw InternalError("inverse_set_from_p: ~ not transitive");
        }
      }
    }
  }
  UnionFind uf(np);
  for (Idx a = 0; a < np; ++a) {
    for (Idx b = a + 1; b < np; ++b) {
      if (similar(a, b)) {
        uf.unite(a, b);
      }
    }
  }
  Idx classes = 0;
  out.cls = uf.classes(&classes);
  out.reps.assign(classes, {-1, -1});
  for (Idx a = 0; a < np; ++a) {
    if (out.reps[out.cls[a]].first < 0) {
      out.reps[out.cls[a]] = out.prime[a];
    }
  }

  PartialMorita& m = out.morita;
  m.left = out.im.sg;
  m.right = pm.t;
  m.size = classes;
  const Idx nim = m.left->size();
  const Idx nt = t.size();
  m.left_action.assign(static_cast<size_t>(classes) * nim, -1);
  m.right_action.assign(static_cast<size_t>(classes) * nt, -1);
  m.left_pairing.assign(static_cast<size_t>(classes) * classes, -1);
  m.right_pairing.assign(static_cast<size_t>(classes) * classes, -1);
  auto put = [&](std::vector<Idx>& table, size_t pos, Idx val,
                 const char* what) {
    if (table[pos] >= 0 && table[pos] != val) {
      throw InternalError(std::string("inverse_set_from_p: ") + what +
                          " not well-defined");
    }
    table[pos] = val;
  };
  const Idx rm_n = out.im.rm.table.n;
  for (Idx a = 0; a < np; ++a) {
    auto [j1, t1] = out.prime[a];
    Idx ca = out.cls[a];
    for (Idx x = 0; x < nt; ++x) {
      put(m.right_action, static_cast<size_t>(ca) * nt + x,
          out.cls[prime_index(j1, t.mul(t1, x))], "right action");
    }
    for (Idx r = 0; r < rm_n; ++r) {
      auto [j2, t2, i2] = out.im.rm.elems[r];
      Idx val =
          out.cls[prime_index(j2, t.mul(t.mul(t2, pm.at(i2, j1)), t1))];
      put(m.left_action,
          static_cast<size_t>(ca) * nim + out.im.gamma_class[r], val,
          "left action");
    }
    for (Idx b = 0; b < np; ++b) {
      auto [j2, t2] = out.prime[b];
      Idx cb = out.cls[b];
      // <[j2,t2] | [j1,t1]>_right = t2* p(j2,j1) t1
      put(m.right_pairing, static_cast<size_t>(cb) * classes + ca,
          t.mul(t.mul(t.star(t2), pm.at(j2, j1)), t1), "right pairing");
      // <[j2,t2] | [j1,t1]>_left = [j2, t2 t1*, j1]
      Idx rm_idx = out.im.rm.index_of(j2, t.mul(t2, t.star(t1)), j1);
      if (rm_idx < 0) {
        throw InternalError("inverse_set_from_p: left pairing escaped");
      }
      put(m.left_pairing, static_cast<size_t>(cb) * classes + ca,
          out.im.gamma_class[rm_idx], "left pairing");
    }
  }
  auto rep = check_partial_morita(m);
  if (!rep.ok()) {
    throw InternalError("inverse_set_from_p: checker rejected U_p");
  }
  if (!rep.left_full) {
    throw InternalError("inverse_set_from_p: U_p is not left full");
  }
  if (pm.full && !rep.right_full) {
    throw InternalError(
        "inverse_set_from_p: (MF5) holds but U_p is not right full");
  }
  out.set = m.right_set();
  return out;
}

McAlisterFn mcalister_from_set(const RightSet& u) {
  RightSet uu = require_right_inverse_set(u, "mcalister_from_set");
  auto check = check_mcalister(uu.sg, uu.size, uu.pairing);
  if (!check.fn) {
    throw InternalError(
        "mcalister_from_set: a right pairing failed the MF axioms");
  }
  if (check.fn->full != is_right_full(uu)) {
    throw InternalError(
        "mcalister_from_set: (MF5) disagrees with right fullness");
  }
  return std::move(*check.fn);
}

namespace {

// sigma: class of (j,t) in U_{p_U} -> u*t in U
std::vector<Idx> up_to_set_map(const UpSet& up, const RightSet& u) {
  std::vector<Idx> sigma(up.set.size, -1);
  for (size_t a = 0; a < up.prime.size(); ++a) {
    auto [j, x] = up.prime[a];
    Idx val = u.act(j, x);
    Idx cl = up.cls[a];
    if (sigma[cl] >= 0 && sigma[cl] != val) {
      throw InternalError("roundtrip: [u,t] -> ut not well-defined");
    }
    sigma[cl] = val;
  }
  for (Idx x : sigma) {
    if (x < 0) {
      throw InternalError("roundtrip: unreached class");
    }
  }
  return sigma;
}

}  // namespace

RoundtripReport roundtrip_checks(const RightSet& u, const Budget& budget) {
  RoundtripReport out;
  RightSet uu = require_right_inverse_set(u, "roundtrip_checks");
  out.right_full = is_right_full(uu);
  McAlisterFn pu = mcalister_from_set(uu);
  UpSet up = inverse_set_from_p(pu);

  // (a) U_{p_U} = U via [u, t] -> ut
  std::vector<Idx> sigma = up_to_set_map(up, uu);
  SetMap as_map{up.set, uu, sigma, MapKind::Both};
  out.up_of_pu_isomorphic_to_u =
      check_map(as_map).ok() && is_surjective(sigma, uu.size);

  // (b) IM(T, U, p_U) = K(U_{p_U}) through the left action
  out.im_isomorphic_to_k_up = im_matches_k_up(pu, budget);

  // (c) for right-full U, the chain closes: IM(T, U, p_U) = K(U) via
  // conjugation by sigma
  if (out.up_of_pu_isomorphic_to_u) {
    std::vector<Idx> sigma_inv(uu.size, -1);
    for (Idx c = 0; c < up.set.size; ++c) {
      sigma_inv[sigma[c]] = c;
    }
    auto k = K_semigroup(uu, budget);
    std::vector<Idx> hom(up.im.sg->size(), -1);
    bool ok = up.im.sg->size() == k.k.sg->size();
    for (Idx im = 0; im < up.im.sg->size() && ok; ++im) {
      std::vector<Idx> table(uu.size);
      for (Idx x = 0; x < uu.size; ++x) {
        table[x] = sigma[up.morita.lact(im, sigma_inv[x])];
      }
      hom[im] = k.k.index_of(table);
      ok = hom[im] >= 0;
    }
    if (ok) {
      SemigroupHom h{up.im.sg, k.k.sg, hom};
      std::vector<Idx> image(hom);
      std::sort(image.begin(), image.end());
      ok = check_hom(h) &&
           std::adjacent_find(image.begin(), image.end()) == image.end();
    }
    out.im_over_u_isomorphic_to_k = ok;
  }
  return out;
}

bool im_matches_k_up(const McAlisterFn& pm, const Budget& budget) {
  UpSet up = inverse_set_from_p(pm);
  auto k = K_semigroup(up.set, budget);
  if (up.im.sg->size() != k.k.sg->size()) {
    return false;
  }
  // each IM element acts on U_p; the action table must be a rank-one map
  std::vector<Idx> hom(up.im.sg->size());
  for (Idx im = 0; im < up.im.sg->size(); ++im) {
    std::vector<Idx> table(up.set.size);
    for (Idx x = 0; x < up.set.size; ++x) {
      table[x] = up.morita.lact(im, x);
    }
    hom[im] = k.k.index_of(table);
    if (hom[im] < 0) {
      return false;
    }
  }
  SemigroupHom h{up.im.sg, k.k.sg, hom};
  std::vector<Idx> image(hom);
  std::sort(image.begin(), image.end());
  return check_hom(h) &&
         std::adjacent_find(image.begin(), image.end()) == image.end();
}

std::optional<bool> gamma_minimal_bounded(const McAlisterFn& pm,
                                          Idx max_order, Idx max_lattice) {
  ReesMatrix rm = regular_rees(pm);
  const Idx n = rm.table.n;
  if (n > max_order) {
    return std::nullopt;
  }
  if (n == 0) {
    return true;
  }
  auto mul = [&](Idx a, Idx b) { return rm.table.at(a, b); };

  // congruence closure of a seed partition
  auto close = [&](UnionFind uf) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Idx a = 0; a < n; ++a) {
        for (Idx b = a + 1; b < n; ++b) {
          if (uf.find(a) != uf.find(b)) {
            continue;
          }
          for (Idx c = 0; c < n; ++c) {
            changed |= uf.unite(mul(a, c), mul(b, c));
            changed |= uf.unite(mul(c, a), mul(c, b));
          }
        }
      }
    }
    return uf.classes();
  };

  std::set<std::vector<Idx>> lattice;
  {
    UnionFind trivial(n);
    lattice.insert(trivial.classes());
  }
  std::vector<std::vector<Idx>> principal;
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = a + 1; b < n; ++b) {
      UnionFind uf(n);
      uf.unite(a, b);
      principal.push_back(close(std::move(uf)));
    }
  }
  std::vector<std::vector<Idx>> frontier(lattice.begin(), lattice.end());
  while (!frontier.empty()) {
    if (static_cast<Idx>(lattice.size()) > max_lattice) {
      return std::nullopt;
    }
    std::vector<std::vector<Idx>> next;
    for (const auto& cong : frontier) {
      for (const auto& p : principal) {
        UnionFind uf(n);
        for (Idx x = 0; x < n; ++x) {
          for (Idx y = x + 1; y < n; ++y) {
            if (cong[x] == cong[y] || p[x] == p[y]) {
              uf.unite(x, y);
            }
          }
        }
        auto joined = close(std::move(uf));
        if (lattice.insert(joined).second) {
          next.push_back(std::move(joined));
        }
      }
    }
    frontier = std::move(next);
  }

  // gamma as a partition of RM
  InverseRees im = inverse_rees(pm);
  for (const auto& cong : lattice) {
    // quotient table
    Idx classes = *std::max_element(cong.begin(), cong.end()) + 1;
    MulTable q;
    q.n = classes;
    q.tab.assign(static_cast<size_t>(classes) * classes, 0);
    for (Idx a = 0; a < n; ++a) {
      for (Idx b = 0; b < n; ++b) {
        q.tab[static_cast<size_t>(cong[a]) * classes + cong[b]] =
            cong[mul(a, b)];
      }
    }
    if (!recognize_inverse(q).ok()) {
      continue;
    }
    // inverse congruence: gamma must refine it
    for (Idx a = 0; a < n; ++a) {
      for (Idx b = 0; b < n; ++b) {
        if (im.gamma_class[a] == im.gamma_class[b] && cong[a] != cong[b]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace invcorr

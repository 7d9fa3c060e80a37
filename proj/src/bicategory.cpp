#include "invcorr/bicategory.hpp"

#include <algorithm>

namespace invcorr {

PartialMorita opposite(const PartialMorita& m) {
  PartialMorita o;
  o.left = m.right;
  o.right = m.left;
  o.size = m.size;
  const Idx nt = o.left->size();
  const Idx ns = o.right->size();
  o.left_action.resize(static_cast<size_t>(o.size) * nt);
  o.right_action.resize(static_cast<size_t>(o.size) * ns);
  o.left_pairing.resize(static_cast<size_t>(o.size) * o.size);
  o.right_pairing.resize(static_cast<size_t>(o.size) * o.size);
  for (Idx u = 0; u < o.size; ++u) {
    for (Idx t = 0; t < nt; ++t) {
      o.left_action[static_cast<size_t>(u) * nt + t] =
          m.ract(u, m.right->star(t));
    }
    for (Idx s = 0; s < ns; ++s) {
      o.right_action[static_cast<size_t>(u) * ns + s] =
          m.lact(m.left->star(s), u);
    }
    for (Idx v = 0; v < o.size; ++v) {
      o.left_pairing[static_cast<size_t>(u) * o.size + v] = m.rpair(u, v);
      o.right_pairing[static_cast<size_t>(u) * o.size + v] = m.lpair(u, v);
    }
  }
  auto rep_m = check_partial_morita(m);
  auto rep_o = check_partial_morita(o);
  if (rep_m.ok() && !rep_o.ok()) {
    throw InternalError("opposite: mirror failed the checker");
  }
  if (rep_m.morita() != rep_o.morita()) {
    throw InternalError("opposite: Morita verdict not preserved");
  }
  return o;
}

namespace {

std::vector<Idx> identity_map(Idx n) {
  std::vector<Idx> id(n);
  for (Idx i = 0; i < n; ++i) {
    id[i] = i;
  }
  return id;
}

// collapse a class map computed on representatives, checking consistency
struct ClassMap {
  std::vector<Idx> map;
  explicit ClassMap(Idx n) : map(n, -1) {}
  void put(Idx from, Idx to, const char* what) {
    if (map[from] >= 0 && map[from] != to) {
      throw InternalError(std::string(what) + ": not well-defined");
    }
    map[from] = to;
  }
};

void require_iso(const Correspondence& a, const Correspondence& b,
                 const std::vector<Idx>& map, const char* what) {
  if (!check_corr_map(a, b, map).ok()) {
    throw InternalError(std::string(what) +
                        ": not a correspondence map");
  }
  if (!is_surjective(map, b.size())) {
    throw InternalError(std::string(what) + ": not surjective");
  }
}

}  // namespace

UnitorResult left_unitor(const Correspondence& c) {
  if (!is_non_degenerate(c)) {
    throw InputError("left_unitor: DEGENERATE correspondence");
  }
  UnitorResult out{tensor(identity_correspondence(c.left_sg), c), {}};
  ClassMap cm(out.product.corr.size());
  for (Idx s = 0; s < c.left_sg->size(); ++s) {
    for (Idx u = 0; u < c.size(); ++u) {
      cm.put(out.product.cls(s, u), c.lact(s, u), "left_unitor");
    }
  }
  out.map = std::move(cm.map);
  require_iso(out.product.corr, c, out.map, "left_unitor");
  return out;
}

UnitorResult right_unitor(const Correspondence& c) {
  UnitorResult out{tensor(c, identity_correspondence(c.right.sg)), {}};
  ClassMap cm(out.product.corr.size());
  for (Idx u = 0; u < c.size(); ++u) {
    for (Idx t = 0; t < c.right.sg->size(); ++t) {
      cm.put(out.product.cls(u, t), c.right.act(u, t), "right_unitor");
    }
  }
  out.map = std::move(cm.map);
  require_iso(out.product.corr, c, out.map, "right_unitor");
  return out;
}

AssociatorResult associator(const Correspondence& u1,
                            const Correspondence& u2,
                            const Correspondence& u3) {
  AssociatorResult out{
      TensorProduct{}, TensorProduct{}, tensor(u2, u3), tensor(u1, u2), {}};
  out.left_nested = tensor(u1, out.inner_right.corr);
  out.right_nested = tensor(out.inner_left.corr, u3);
  ClassMap cm(out.left_nested.corr.size());
  for (Idx a = 0; a < u1.size(); ++a) {
    for (Idx b = 0; b < u2.size(); ++b) {
      for (Idx c = 0; c < u3.size(); ++c) {
        cm.put(out.left_nested.cls(a, out.inner_right.cls(b, c)),
               out.right_nested.cls(out.inner_left.cls(a, b), c),
               "associator");
      }
    }
  }
  out.map = std::move(cm.map);
  require_iso(out.left_nested.corr, out.right_nested.corr, out.map,
              "associator");
  return out;
}

void check_triangle(const Correspondence& a, const Correspondence& b) {
  Correspondence unit = identity_correspondence(a.right.sg);
  auto assoc = associator(a, unit, b);
  auto lam = left_unitor(b);
  auto rho = right_unitor(a);
  auto ab = tensor(a, b);
  // 1_a (x) lambda_b : A (x) (T (x) B) -> A (x) B
  auto path1 = tensor_map(assoc.left_nested, ab, identity_map(a.size()),
                          lam.map);
  // (rho_a (x) 1_b) o alpha
  auto step2 = tensor_map(assoc.right_nested, ab, rho.map,
                          identity_map(b.size()));
  for (Idx x = 0; x < assoc.left_nested.corr.size(); ++x) {
    if (path1[x] != step2[assoc.map[x]]) {
      throw InternalError("check_triangle: triangle does not commute");
    }
  }
}

void check_pentagon(const Correspondence& u1, const Correspondence& u2,
                    const Correspondence& u3, const Correspondence& u4) {
  auto cd = tensor(u3, u4);
  auto bcd = tensor(u2, cd.corr);
  auto lhs = tensor(u1, bcd.corr);

  // short side
  auto a1 = associator(u1, u2, cd.corr);
  auto a2 = associator(a1.inner_left.corr, u3, u4);

  // long side
  auto a3 = associator(u2, u3, u4);
  auto mid = tensor(u1, a3.right_nested.corr);
  auto step1 = tensor_map(lhs, mid, identity_map(u1.size()), a3.map);
  auto bc = tensor(u2, u3);
  auto a4 = associator(u1, bc.corr, u4);
  auto abc = associator(u1, u2, u3);
  auto final_obj = tensor(abc.right_nested.corr, u4);
  auto step3 = tensor_map(a4.right_nested, final_obj, abc.map,
                          identity_map(u4.size()));

  if (a2.right_nested.corr.size() != final_obj.corr.size()) {
    throw InternalError("check_pentagon: object mismatch");
  }
  for (Idx x = 0; x < lhs.corr.size(); ++x) {
    Idx shrt = a2.map[a1.map[x]];
    Idx lng = step3[a4.map[step1[x]]];
    if (shrt != lng) {
      throw InternalError("check_pentagon: pentagon does not commute");
    }
  }
}

void check_unitor_naturality(const Correspondence& a,
                             const Correspondence& b,
                             const std::vector<Idx>& sigma) {
  if (!check_corr_map(a, b, sigma).ok()) {
    throw InputError("check_unitor_naturality: sigma is not a map");
  }
  auto rho_a = right_unitor(a);
  auto rho_b = right_unitor(b);
  auto id_t = identity_map(a.right.sg->size());
  auto top = tensor_map(rho_a.product, rho_b.product, sigma, id_t);
  for (Idx x = 0; x < rho_a.product.corr.size(); ++x) {
    if (sigma[rho_a.map[x]] != rho_b.map[top[x]]) {
      throw InternalError("right unitor naturality square broken");
    }
  }
  if (is_non_degenerate(a) && is_non_degenerate(b)) {
    auto lam_a = left_unitor(a);
    auto lam_b = left_unitor(b);
    auto id_s = identity_map(a.left_sg->size());
    auto side = tensor_map(lam_a.product, lam_b.product, id_s, sigma);
    for (Idx x = 0; x < lam_a.product.corr.size(); ++x) {
      if (sigma[lam_a.map[x]] != lam_b.map[side[x]]) {
        throw InternalError("left unitor naturality square broken");
      }
    }
  }
}

void check_associator_naturality(
    const Correspondence& u1, const Correspondence& u2,
    const Correspondence& u3, const Correspondence& v1,
    const Correspondence& v2, const Correspondence& v3,
    const std::vector<Idx>& sigma1, const std::vector<Idx>& sigma2,
    const std::vector<Idx>& sigma3) {
  if (!check_corr_map(u1, v1, sigma1).ok() ||
      !check_corr_map(u2, v2, sigma2).ok() ||
      !check_corr_map(u3, v3, sigma3).ok()) {
    throw InputError("check_associator_naturality: bad component map");
  }
  auto au = associator(u1, u2, u3);
  auto av = associator(v1, v2, v3);
  // down the left: sigma1 (x) (sigma2 (x) sigma3)
  auto inner_down = tensor_map(au.inner_right, av.inner_right, sigma2,
                               sigma3);
  auto left_down = tensor_map(au.left_nested, av.left_nested, sigma1,
                              inner_down);
  // down the right: (sigma1 (x) sigma2) (x) sigma3
  auto pair_down = tensor_map(au.inner_left, av.inner_left, sigma1, sigma2);
  auto right_down = tensor_map(au.right_nested, av.right_nested, pair_down,
                               sigma3);
  for (Idx x = 0; x < au.left_nested.corr.size(); ++x) {
    if (av.map[left_down[x]] != right_down[au.map[x]]) {
      throw InternalError("associator naturality square broken");
    }
  }
}

const char* verdict_name(MoritaVerdict v) {
  switch (v) {
    case MoritaVerdict::Morita:
      return "MORITA";
    case MoritaVerdict::PartialOnly:
      return "PARTIAL_ONLY";
    case MoritaVerdict::Neither:
      return "NEITHER";
  }
  return "?";
}

MoritaCheck check_morita(const Correspondence& c, const Budget& budget) {
  Correspondence cc = require_correspondence(c, "check_morita");
  std::vector<AdjointableMap> k = enumerate_K(cc.right, cc.right);
  std::vector<std::vector<Idx>> theta;
  for (Idx s = 0; s < cc.left_sg->size(); ++s) {
    theta.push_back(cc.theta(s));
  }
  auto sorted_theta = theta;
  std::sort(sorted_theta.begin(), sorted_theta.end());
  bool injective = std::adjacent_find(sorted_theta.begin(),
                                      sorted_theta.end()) ==
                   sorted_theta.end();
  std::vector<std::vector<Idx>> k_tables;
  k_tables.reserve(k.size());
  for (const auto& f : k) {
    k_tables.push_back(f.fwd);
  }
  sorted_theta.erase(std::unique(sorted_theta.begin(), sorted_theta.end()),
                     sorted_theta.end());
  bool onto_k = sorted_theta == k_tables;  // both sorted
  bool right_full = is_right_full(cc.right);

  if (injective && onto_k && right_full) {
    return {MoritaVerdict::Morita, ""};
  }
  std::string detail;
  if (!injective) {
    detail = "theta is not injective on S";
  } else if (!onto_k) {
    detail = "theta image differs from K(U)";
  } else {
    detail = "not right full";
  }
  auto rec = recover_partial_morita(cc, budget);
  if (rec.ok) {
    return {MoritaVerdict::PartialOnly, detail};
  }
  return {MoritaVerdict::Neither, detail + "; " + rec.reason};
}

MoritaCheck check_morita(const PartialMorita& m, const Budget& budget) {
  auto out =
      check_morita(from_morita(require_partial_morita(m, "check_morita")),
                   budget);
  if (out.verdict == MoritaVerdict::Neither) {
    throw InternalError(
        "check_morita: a valid partial Morita equivalence came out NEITHER");
  }
  return out;
}

EquivalenceCertificate morita_to_certificate(const PartialMorita& m,
                                             const Budget& budget) {
  if (check_morita(m, budget).verdict != MoritaVerdict::Morita) {
    throw InputError("morita_to_certificate: NOT_MORITA");
  }
  EquivalenceCertificate cert;
  cert.u = from_morita(m);
  cert.v = from_morita(opposite(m));
  cert.uv = tensor(cert.u, cert.v);
  cert.vu = tensor(cert.v, cert.u);

  // u (x) ~u' -> <u|u'>_left, and ~u (x) u' -> <u|u'>_right; fullness
  // makes the targets all of S and T
  ClassMap i1(cert.uv.corr.size());
  ClassMap i2(cert.vu.corr.size());
  for (Idx u = 0; u < m.size; ++u) {
    for (Idx v = 0; v < m.size; ++v) {
      i1.put(cert.uv.cls(u, v), m.lpair(u, v), "iota1");
      i2.put(cert.vu.cls(u, v), m.rpair(u, v), "iota2");
    }
  }
  cert.iota1 = std::move(i1.map);
  cert.iota2 = std::move(i2.map);
  require_iso(cert.uv.corr, identity_correspondence(m.left), cert.iota1,
              "iota1");
  require_iso(cert.vu.corr, identity_correspondence(m.right), cert.iota2,
              "iota2");
  return cert;
}

PartialMorita certificate_to_morita(const EquivalenceCertificate& cert,
                                    const Budget& budget) {
  const Correspondence& u = cert.u;
  const Correspondence& v = cert.v;
  if (!is_non_degenerate(u) || !is_non_degenerate(v)) {
    throw InputError("certificate_to_morita: CERT_INVALID, degenerate leg");
  }
  if (!check_corr_map(cert.uv.corr, identity_correspondence(u.left_sg),
                      cert.iota1)
           .ok() ||
      !is_surjective(cert.iota1, u.left_sg->size())) {
    throw InputError("certificate_to_morita: CERT_INVALID, iota1");
  }
  if (!check_corr_map(cert.vu.corr, identity_correspondence(v.left_sg),
                      cert.iota2)
           .ok() ||
      !is_surjective(cert.iota2, v.left_sg->size())) {
    throw InputError("certificate_to_morita: CERT_INVALID, iota2");
  }

  // Phi: V -> U with <Phi(w)|x>_U = iota2(w (x) x), pointwise unique
  std::vector<Idx> phi(v.size(), -1);
  for (Idx w = 0; w < v.size(); ++w) {
    for (Idx cand = 0; cand < u.size(); ++cand) {
      bool fits = true;
      for (Idx x = 0; x < u.size() && fits; ++x) {
        fits = u.right.pair(cand, x) == cert.iota2[cert.vu.cls(w, x)];
      }
      if (fits) {
        if (phi[w] >= 0) {
          throw InternalError("certificate_to_morita: Phi ambiguous");
        }
        phi[w] = cand;
      }
    }
    if (phi[w] < 0) {
      throw InputError(
          "certificate_to_morita: CERT_INVALID, Phi has no value at some "
          "point");
    }
  }
  if (!is_surjective(phi, u.size())) {
    throw InternalError("certificate_to_morita: Phi not surjective");
  }

  // theta_U is injective by right cancellation through the certificate
  auto mc = check_morita(u, budget);
  if (mc.verdict != MoritaVerdict::Morita) {
    throw InternalError(
        "certificate_to_morita: verified certificate but theta is not an "
        "isomorphism onto K(U) with right fullness (" + mc.detail + ")");
  }
  auto rec = recover_partial_morita(u, budget);
  if (!rec.ok || rec.ideal.size() != static_cast<size_t>(u.left_sg->size())) {
    throw InternalError(
        "certificate_to_morita: Morita structure not recoverable");
  }
  return rec.morita;
}

std::vector<Idx> invert_corr_map(const Correspondence& a,
                                 const Correspondence& b,
                                 const std::vector<Idx>& map) {
  if (!check_corr_map(a, b, map).ok()) {
    throw InputError("invert_corr_map: not a correspondence map");
  }
  if (!is_surjective(map, b.size())) {
    throw InputError("invert_corr_map: not surjective, hence not invertible");
  }
  std::vector<Idx> inv(b.size(), -1);
  for (Idx x = 0; x < a.size(); ++x) {
    inv[map[x]] = x;
  }
  if (!check_corr_map(b, a, inv).ok()) {
    throw InternalError("invert_corr_map: the inverse is not a map");
  }
  return inv;
}

std::optional<std::vector<Idx>> find_correspondence_isomorphism(
    const Correspondence& a, const Correspondence& b) {
  if (!same_semigroup(a.left_sg, b.left_sg) ||
      !same_semigroup(a.right.sg, b.right.sg) || a.size() != b.size()) {
    return std::nullopt;
  }
  const Idx m = a.size();
  std::vector<Idx> map(m, -1);
  std::vector<bool> used(m, false);
  auto rec = [&](auto&& self, Idx next) -> bool {
    while (next < m && map[next] >= 0) {
      ++next;
    }
    if (next == m) {
      return true;
    }
    for (Idx cand = 0; cand < m; ++cand) {
      if (used[cand]) {
        continue;
      }
      // propagate equivariance over the left and right actions
      std::vector<std::pair<Idx, Idx>> assigned;
      bool ok = true;
      auto assign = [&](Idx from, Idx to) {
        if (map[from] >= 0) {
          return map[from] == to;
        }
        if (used[to]) {
          return false;
        }
        // pairing rows against everything already assigned
        for (const auto& [f2, t2] : assigned) {
          if (a.right.pair(from, f2) != b.right.pair(to, t2) ||
              a.right.pair(f2, from) != b.right.pair(t2, to)) {
            return false;
          }
        }
        for (Idx f2 = 0; f2 < m; ++f2) {
          if (map[f2] >= 0 &&
              (a.right.pair(from, f2) != b.right.pair(to, map[f2]) ||
               a.right.pair(f2, from) != b.right.pair(map[f2], to))) {
            return false;
          }
        }
        if (a.right.pair(from, from) != b.right.pair(to, to)) {
          return false;
        }
        map[from] = to;
        used[to] = true;
        assigned.emplace_back(from, to);
        return true;
      };
      ok = assign(next, cand);
      for (size_t k = 0; ok && k < assigned.size(); ++k) {
        auto [f, t] = assigned[k];
        for (Idx s = 0; s < a.left_sg->size() && ok; ++s) {
          ok = assign(a.lact(s, f), b.lact(s, t));
        }
        for (Idx r = 0; r < a.right.sg->size() && ok; ++r) {
          ok = assign(a.right.act(f, r), b.right.act(t, r));
        }
      }
      if (ok && self(self, next + 1)) {
        return true;
      }
      for (auto& [f, t] : assigned) {
        map[f] = -1;
        used[t] = false;
      }
    }
    return false;
  };
  if (!rec(rec, 0)) {
    return std::nullopt;
  }
  if (!check_corr_map(a, b, map).ok()) {
    return std::nullopt;
  }
  return map;
}

}  // namespace invcorr

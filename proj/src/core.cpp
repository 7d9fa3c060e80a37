#include "invcorr/core.hpp"

#include <algorithm>
#include <numeric>

namespace invcorr {

bool MulTable::well_formed() const {
  if (n < 0 || tab.size() != static_cast<size_t>(n) * n) {
    return false;
  }
  for (Idx x : tab) {
    if (x < 0 || x >= n) {
      return false;
    }
  }
  return true;
}

std::optional<std::array<Idx, 3>> associativity_witness(const MulTable& t) {
  for (Idx a = 0; a < t.n; ++a) {
    for (Idx b = 0; b < t.n; ++b) {
      Idx ab = t.at(a, b);
      for (Idx c = 0; c < t.n; ++c) {
        if (t.at(ab, c) != t.at(a, t.at(b, c))) {
          return std::array<Idx, 3>{a, b, c};
        }
      }
    }
  }
  return std::nullopt;
}

bool check_associative(const MulTable& t) {
  return !associativity_witness(t).has_value();
}

std::optional<Idx> InverseSemigroup::identity() const {
  for (Idx e : idempotents) {
    bool ok = true;
    for (Idx s = 0; s < size() && ok; ++s) {
      ok = mul(e, s) == s && mul(s, e) == s;
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

std::optional<Idx> InverseSemigroup::zero() const {
  for (Idx z : idempotents) {
    bool ok = true;
    for (Idx s = 0; s < size() && ok; ++s) {
      ok = mul(z, s) == z && mul(s, z) == z;
    }
    if (ok) {
      return z;
    }
  }
  return std::nullopt;
}

const char* recognize_error_name(RecognizeError e) {
  switch (e) {
    case RecognizeError::NotAssociative:
      return "NOT_ASSOCIATIVE";
    case RecognizeError::NotRegular:
      return "NOT_REGULAR";
    case RecognizeError::NotUnique:
      return "NOT_UNIQUE";
  }
  return "?";
}

RecognizeResult recognize_inverse(const MulTable& t) {
  if (!t.well_formed()) {
    throw InputError("recognize_inverse: malformed table");
  }
  if (!check_associative(t)) {
    return {std::nullopt, RecognizeFailure{RecognizeError::NotAssociative, -1}};
  }

  const Idx n = t.n;
  std::vector<Idx> inv(n, -1);
  std::optional<RecognizeFailure> failure;
  bool regular = true;
  for (Idx s = 0; s < n && !failure; ++s) {
    Idx count = 0;
    for (Idx x = 0; x < n; ++x) {
      if (t.at(t.at(s, x), s) == s && t.at(t.at(x, s), x) == x) {
        inv[s] = x;
        ++count;
      }
    }
    if (count == 0) {
      regular = false;
      failure = RecognizeFailure{RecognizeError::NotRegular, s};
    } else if (count > 1) {
      failure = RecognizeFailure{RecognizeError::NotUnique, s};
    }
  }

  // Independent recognition: regular with commuting idempotents.
  bool regular2 = true;
  for (Idx s = 0; s < n && regular2; ++s) {
    bool has = false;
    for (Idx x = 0; x < n && !has; ++x) {
      has = t.at(t.at(s, x), s) == s && t.at(t.at(x, s), x) == x;
    }
    regular2 = has;
  }
  bool idem_commute = true;
  for (Idx e = 0; e < t.n && idem_commute; ++e) {
    if (t.at(e, e) != e) {
      continue;
    }
    for (Idx f = 0; f < t.n && idem_commute; ++f) {
      if (t.at(f, f) == f) {
        idem_commute = t.at(e, f) == t.at(f, e);
      }
    }
  }
  if (regular != regular2) {
    throw InternalError("recognize_inverse: regularity scans disagree");
  }
  bool inverse_by_criterion = regular2 && idem_commute;
  if (inverse_by_criterion != !failure.has_value()) {
    throw InternalError(
        "recognize_inverse: uniqueness scan and idempotent-commutation "
        "criterion disagree");
  }
  if (failure) {
    return {std::nullopt, failure};
  }

  InverseSemigroup sg;
  sg.base = t;
  sg.inv = std::move(inv);
  for (Idx e = 0; e < n; ++e) {
    if (t.at(e, e) == e) {
      sg.idempotents.push_back(e);
    }
  }
  return {std::move(sg), std::nullopt};
}

InverseSemigroup require_inverse(const MulTable& t, const std::string& what) {
  RecognizeResult r = recognize_inverse(t);
  if (!r.ok()) {
    throw InputError(what + ": not an inverse semigroup (" +
                     recognize_error_name(r.failure->reason) + ")");
  }
  return std::move(*r.sg);
}

SgPtr make_semigroup(const MulTable& t, const std::string& what) {
  return std::make_shared<const InverseSemigroup>(require_inverse(t, what));
}

bool natural_order(const InverseSemigroup& s, Idx a, Idx b) {
  // (i) a = b(a*a)   (ii) a = be, e idempotent
  // (iii) a = (aa*)b (iv) a = fb, f idempotent
  bool c1 = s.mul(b, s.mul(s.star(a), a)) == a;
  bool c3 = s.mul(s.mul(a, s.star(a)), b) == a;
  bool c2 = false, c4 = false;
  for (Idx e : s.idempotents) {
    c2 = c2 || s.mul(b, e) == a;
    c4 = c4 || s.mul(e, b) == a;
  }
  if (c1 != c2 || c1 != c3 || c1 != c4) {
    throw InternalError("natural_order: equivalent conditions disagree");
  }
  return c1;
}

std::vector<Idx> ideal_closure(const InverseSemigroup& s,
                               const std::vector<Idx>& seed) {
  std::vector<bool> in(s.size(), false);
  std::vector<Idx> queue;
  for (Idx x : seed) {
    if (x < 0 || x >= s.size()) {
      throw InputError("ideal_closure: seed element out of range");
    }
    if (!in[x]) {
      in[x] = true;
      queue.push_back(x);
    }
  }
  while (!queue.empty()) {
    Idx t = queue.back();
    queue.pop_back();
    for (Idx x = 0; x < s.size(); ++x) {
      for (Idx p : {s.mul(x, t), s.mul(t, x)}) {
        if (!in[p]) {
          in[p] = true;
          queue.push_back(p);
        }
      }
    }
  }
  std::vector<Idx> out;
  for (Idx x = 0; x < s.size(); ++x) {
    if (in[x]) {
      out.push_back(x);
    }
  }
  return out;
}

bool is_two_sided_ideal(const InverseSemigroup& s,
                        const std::vector<Idx>& members) {
  std::vector<bool> in(s.size(), false);
  for (Idx x : members) {
    in[x] = true;
  }
  for (Idx t : members) {
    for (Idx x = 0; x < s.size(); ++x) {
      if (!in[s.mul(x, t)] || !in[s.mul(t, x)]) {
        return false;
      }
    }
  }
  return true;
}

bool is_subsemigroup(const InverseSemigroup& s,
                     const std::vector<Idx>& members) {
  std::vector<bool> in(s.size(), false);
  for (Idx x : members) {
    in[x] = true;
  }
  for (Idx a : members) {
    for (Idx b : members) {
      if (!in[s.mul(a, b)]) {
        return false;
      }
    }
  }
  return true;
}

bool is_inverse_subsemigroup(const InverseSemigroup& s,
                             const std::vector<Idx>& members) {
  if (!is_subsemigroup(s, members)) {
    return false;
  }
  std::vector<bool> in(s.size(), false);
  for (Idx x : members) {
    in[x] = true;
  }
  for (Idx a : members) {
    if (!in[s.star(a)]) {
      return false;
    }
  }
  return true;
}

bool is_essential_ideal(const InverseSemigroup& s,
                        const std::vector<Idx>& ideal) {
  if (!is_two_sided_ideal(s, ideal)) {
    throw InputError("is_essential_ideal: not a two-sided ideal");
  }
  auto right = [&] {
    for (Idx a = 0; a < s.size(); ++a) {
      for (Idx b = a + 1; b < s.size(); ++b) {
        bool same = true;
        for (Idx t : ideal) {
          if (s.mul(a, t) != s.mul(b, t)) {
            same = false;
            break;
          }
        }
        if (same) {
          return false;
        }
      }
    }
    return true;
  }();
  auto left = [&] {
    for (Idx a = 0; a < s.size(); ++a) {
      for (Idx b = a + 1; b < s.size(); ++b) {
        bool same = true;
        for (Idx t : ideal) {
          if (s.mul(t, a) != s.mul(t, b)) {
            same = false;
            break;
          }
        }
        if (same) {
          return false;
        }
      }
    }
    return true;
  }();
  if (left != right) {
    throw InternalError("is_essential_ideal: sided formulations disagree");
  }
  return right;
}

SubSemigroup subsemigroup(const SgPtr& parent, std::vector<Idx> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Idx x : members) {
    if (x < 0 || x >= parent->size()) {
      throw InputError("subsemigroup: member out of range");
    }
  }
  if (!is_subsemigroup(*parent, members)) {
    throw InputError("subsemigroup: not closed under multiplication");
  }
  SubSemigroup out;
  out.to_parent = members;
  out.from_parent.assign(parent->size(), -1);
  for (size_t i = 0; i < members.size(); ++i) {
    out.from_parent[members[i]] = static_cast<Idx>(i);
  }
  MulTable t;
  t.n = static_cast<Idx>(members.size());
  t.tab.resize(static_cast<size_t>(t.n) * t.n);
  for (Idx a = 0; a < t.n; ++a) {
    for (Idx b = 0; b < t.n; ++b) {
      Idx p = parent->mul(members[a], members[b]);
      t.tab[static_cast<size_t>(a) * t.n + b] = out.from_parent[p];
    }
  }
  out.sg = make_semigroup(t, "subsemigroup");
  return out;
}

bool check_hom(const SemigroupHom& h) {
  if (h.map.size() != static_cast<size_t>(h.source->size())) {
    return false;
  }
  for (Idx x : h.map) {
    if (x < 0 || x >= h.target->size()) {
      return false;
    }
  }
  for (Idx a = 0; a < h.source->size(); ++a) {
    for (Idx b = 0; b < h.source->size(); ++b) {
      if (h.map[h.source->mul(a, b)] !=
          h.target->mul(h.map[a], h.map[b])) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Per-element invariant vector used to prune the isomorphism search.
struct ElementInvariant {
  bool idem;
  bool self_inverse;
  Idx downset;     // |{t : t <= s}|
  Idx ideal_size;  // |ideal generated by s|
  auto operator<=>(const ElementInvariant&) const = default;
};

std::vector<ElementInvariant> element_invariants(const InverseSemigroup& s) {
  std::vector<ElementInvariant> out(s.size());
  for (Idx a = 0; a < s.size(); ++a) {
    ElementInvariant& v = out[a];
    v.idem = s.is_idempotent(a);
    v.self_inverse = s.star(a) == a;
    v.downset = 0;
    for (Idx b = 0; b < s.size(); ++b) {
      if (natural_order(s, b, a)) {
        ++v.downset;
      }
    }
    v.ideal_size = static_cast<Idx>(ideal_closure(s, {a}).size());
  }
  return out;
}

bool full_hom_check(const InverseSemigroup& a, const InverseSemigroup& b,
                    const std::vector<Idx>& map) {
  for (Idx x = 0; x < a.size(); ++x) {
    for (Idx y = 0; y < a.size(); ++y) {
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) {
        return false;
      }
    }
  }
  return true;
}

bool extend_iso(const InverseSemigroup& a, const InverseSemigroup& b,
                const std::vector<ElementInvariant>& ia,
                const std::vector<ElementInvariant>& ib,
                std::vector<Idx>& map, std::vector<bool>& used, Idx next) {
  if (next == a.size()) {
    return full_hom_check(a, b, map);
  }
  for (Idx cand = 0; cand < b.size(); ++cand) {
    if (used[cand] || ia[next] != ib[cand]) {
      continue;
    }
    // prune: products against the mapped prefix must be consistent
    bool ok = true;
    for (Idx x = 0; x <= next && ok; ++x) {
      Idx other = x == next ? cand : map[x];
      Idx p1 = a.mul(next, x), p2 = a.mul(x, next);
      if (p1 <= next && (p1 == next ? cand : map[p1]) != b.mul(cand, other)) {
        ok = false;
      }
      if (p2 <= next && (p2 == next ? cand : map[p2]) != b.mul(other, cand)) {
        ok = false;
      }
    }
    if (!ok) {
      continue;
    }
    map[next] = cand;
    used[cand] = true;
    if (extend_iso(a, b, ia, ib, map, used, next + 1)) {
      return true;
    }
    used[cand] = false;
    map[next] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Idx>> find_isomorphism(const InverseSemigroup& a,
                                                 const InverseSemigroup& b) {
  if (a.size() != b.size() ||
      a.idempotents.size() != b.idempotents.size()) {
    return std::nullopt;
  }
  auto ia = element_invariants(a);
  auto ib = element_invariants(b);
  auto sa = ia;
  auto sb = ib;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) {
    return std::nullopt;
  }
  std::vector<Idx> map(a.size(), -1);
  std::vector<bool> used(b.size(), false);
  if (!extend_iso(a, b, ia, ib, map, used, 0)) {
    return std::nullopt;
  }
  return map;
}

bool isomorphic(const InverseSemigroup& a, const InverseSemigroup& b) {
  return find_isomorphism(a, b).has_value();
}

bool restrict_hom_ideal_agreement(const SemigroupHom& theta,
                                  const std::vector<Idx>& ideal1,
                                  const std::vector<Idx>& ideal2) {
  if (!check_hom(theta)) {
    throw InputError("restrict_hom_ideal_agreement: not a homomorphism");
  }
  const InverseSemigroup& s = *theta.source;
  for (const auto* ideal : {&ideal1, &ideal2}) {
    if (!is_two_sided_ideal(s, *ideal)) {
      throw InputError("restrict_hom_ideal_agreement: not a two-sided ideal");
    }
  }
  auto image = [&](const std::vector<Idx>& ideal) {
    std::vector<Idx> im;
    for (Idx x : ideal) {
      im.push_back(theta.map[x]);
    }
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  };
  auto im1 = image(ideal1);
  auto im2 = image(ideal2);
  if (im1.size() != ideal1.size() || im2.size() != ideal2.size()) {
    throw InputError("restrict_hom_ideal_agreement: restriction not injective");
  }
  if (im1 != im2) {
    throw InputError("restrict_hom_ideal_agreement: images differ");
  }
  std::vector<Idx> s1 = ideal1, s2 = ideal2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  return s1 == s2;
}

}  // namespace invcorr

#include "invcorr/morita.hpp"

namespace invcorr {

RightSet PartialMorita::right_set() const {
  return RightSet{right, size, right_action, right_pairing};
}

LeftSet PartialMorita::left_set() const {
  return LeftSet{left, size, left_action, left_pairing};
}

MoritaReport check_partial_morita(const PartialMorita& m) {
  MoritaReport rep;
  RightSet rs = m.right_set();
  LeftSet ls = m.left_set();
  if (!rs.well_formed() || !ls.well_formed()) {
    rep.structure.add("WELL_FORMED", {});
    return rep;
  }
  for (Idx u = 0; u < m.size; ++u) {
    for (Idx s = 0; s < m.left->size(); ++s) {
      for (Idx t = 0; t < m.right->size(); ++t) {
        if (m.lact(s, m.ract(u, t)) != m.ract(m.lact(s, u), t)) {
          rep.structure.add("BISET_LAW", {u, s, t});
        }
      }
    }
  }
  for (Idx a = 0; a < m.size; ++a) {
    for (Idx b = 0; b < m.size; ++b) {
      for (Idx c = 0; c < m.size; ++c) {
        if (m.lact(m.lpair(a, b), c) != m.ract(a, m.rpair(b, c))) {
          rep.structure.add("COMPATIBILITY", {a, b, c});
        }
      }
    }
  }
  rep.left_regular = check_left_regular(ls);
  rep.right_regular = check_right_regular(rs);
  if (!rep.structure.ok() || !rep.left_regular.ok() ||
      !rep.right_regular.ok()) {
    return rep;
  }
  rep.left_inverse = check_left_inverse(ls).passed;
  rep.right_inverse = check_right_inverse(rs).passed;
  if (!rep.left_inverse || !rep.right_inverse) {
    throw InternalError(
        "check_partial_morita: compatible regular pairings failed the "
        "inverse conditions");
  }
  rep.left_full = is_left_full(ls);
  rep.right_full = is_right_full(rs);
  return rep;
}

PartialMorita require_partial_morita(PartialMorita m,
                                     const std::string& what) {
  if (!check_partial_morita(m).ok()) {
    throw InputError(what + ": not a partial Morita equivalence");
  }
  return m;
}

PartialMorita identity_morita(SgPtr s) {
  PartialMorita m;
  m.left = s;
  m.right = s;
  m.size = s->size();
  const Idx n = m.size;
  m.left_action.resize(static_cast<size_t>(n) * n);
  m.right_action.resize(static_cast<size_t>(n) * n);
  m.left_pairing.resize(static_cast<size_t>(n) * n);
  m.right_pairing.resize(static_cast<size_t>(n) * n);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      // lact(x, a) sits at [a][x]
      m.left_action[static_cast<size_t>(a) * n + b] = s->mul(b, a);
      m.right_action[static_cast<size_t>(a) * n + b] = s->mul(a, b);
      m.left_pairing[static_cast<size_t>(a) * n + b] =
          s->mul(a, s->star(b));
      m.right_pairing[static_cast<size_t>(a) * n + b] =
          s->mul(s->star(a), b);
    }
  }
  return m;
}

}  // namespace invcorr

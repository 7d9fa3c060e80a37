#include "invcorr/inverse_set.hpp"

#include <algorithm>

namespace invcorr {

namespace {

bool table_ok(const std::vector<Idx>& tab, size_t expect, Idx bound) {
  if (tab.size() != expect) {
    return false;
  }
  return std::all_of(tab.begin(), tab.end(),
                     [&](Idx x) { return x >= 0 && x < bound; });
}

}  // namespace

bool RightSet::well_formed() const {
  return sg && size >= 0 &&
         table_ok(action, static_cast<size_t>(size) * sg->size(), size) &&
         table_ok(pairing, static_cast<size_t>(size) * size, sg->size());
}

bool LeftSet::well_formed() const {
  return sg && size >= 0 &&
         table_ok(action, static_cast<size_t>(size) * sg->size(), size) &&
         table_ok(pairing, static_cast<size_t>(size) * size, sg->size());
}

CheckReport check_right_regular(const RightSet& u) {
  CheckReport rep;
  if (!u.well_formed()) {
    rep.add("WELL_FORMED", {});
    return rep;
  }
  const InverseSemigroup& t = *u.sg;
  for (Idx a = 0; a < u.size; ++a) {
    for (Idx x = 0; x < t.size(); ++x) {
      for (Idx y = 0; y < t.size(); ++y) {
        if (u.act(u.act(a, x), y) != u.act(a, t.mul(x, y))) {
          rep.add("ACTION_LAW", {a, x, y});
        }
      }
    }
  }
  for (Idx a = 0; a < u.size; ++a) {
    for (Idx b = 0; b < u.size; ++b) {
      for (Idx x = 0; x < t.size(); ++x) {
        if (u.pair(a, u.act(b, x)) != t.mul(u.pair(a, b), x)) {
          rep.add("R-i", {a, b, x});
        }
      }
      if (t.star(u.pair(a, b)) != u.pair(b, a)) {
        rep.add("R-ii", {a, b});
      }
    }
    if (u.act(a, u.pair(a, a)) != a) {
      rep.add("R-iii", {a});
    }
  }
  return rep;
}

CheckReport check_left_regular(const LeftSet& u) {
  CheckReport rep;
  if (!u.well_formed()) {
    rep.add("WELL_FORMED", {});
    return rep;
  }
  const InverseSemigroup& s = *u.sg;
  for (Idx a = 0; a < u.size; ++a) {
    for (Idx x = 0; x < s.size(); ++x) {
      for (Idx y = 0; y < s.size(); ++y) {
        if (u.act(x, u.act(y, a)) != u.act(s.mul(x, y), a)) {
          rep.add("ACTION_LAW", {a, x, y});
        }
      }
    }
  }
  for (Idx a = 0; a < u.size; ++a) {
    for (Idx b = 0; b < u.size; ++b) {
      for (Idx x = 0; x < s.size(); ++x) {
        if (u.pair(u.act(x, a), b) != s.mul(x, u.pair(a, b))) {
          rep.add("L-i", {a, b, x});
        }
      }
      if (s.star(u.pair(a, b)) != u.pair(b, a)) {
        rep.add("L-ii", {a, b});
      }
    }
    if (u.act(u.pair(a, a), a) != a) {
      rep.add("L-iii", {a});
    }
  }
  return rep;
}

namespace {

// rank-one diagonal x -> a<a|x> as a table
std::vector<Idx> right_omega_diag(const RightSet& u, Idx a) {
  std::vector<Idx> f(u.size);
  for (Idx x = 0; x < u.size; ++x) {
    f[x] = u.act(a, u.pair(a, x));
  }
  return f;
}

InverseCheck four_conditions_right(const RightSet& u) {
  const InverseSemigroup& t = *u.sg;
  InverseCheck out;
  auto& c = out.conditions;
  c = {true, true, true, true};
  std::array<std::vector<Idx>, 4> wit;
  for (Idx a = 0; a < u.size; ++a) {
    for (Idx b = 0; b < u.size; ++b) {
      if (c[0] && a != b && u.act(a, u.pair(b, a)) == a &&
          u.act(b, u.pair(a, b)) == b) {
        c[0] = false;
        wit[0] = {a, b};
      }
      if (c[1] && a != b && u.pair(a, a) == u.pair(b, b) &&
          u.pair(a, a) == u.pair(a, b)) {
        c[1] = false;
        wit[1] = {a, b};
      }
      if (c[2] && u.act(a, u.pair(a, b)) !=
                      u.act(b, t.mul(u.pair(b, a), u.pair(a, b)))) {
        c[2] = false;
        wit[2] = {a, b};
      }
    }
  }
  std::vector<std::vector<Idx>> diag(u.size);
  for (Idx a = 0; a < u.size; ++a) {
    diag[a] = right_omega_diag(u, a);
  }
  for (Idx a = 0; a < u.size && c[3]; ++a) {
    for (Idx b = 0; b < u.size && c[3]; ++b) {
      for (Idx x = 0; x < u.size; ++x) {
        if (diag[a][diag[b][x]] != diag[b][diag[a][x]]) {
          c[3] = false;
          wit[3] = {a, b};
          break;
        }
      }
    }
  }
  if (c[0] != c[1] || c[0] != c[2] || c[0] != c[3]) {
    throw InternalError(
        "check_right_inverse: the four equivalent conditions disagree");
  }
  out.passed = c[0];
  if (!out.passed) {
    out.witness = wit[0];
  }
  return out;
}

}  // namespace

InverseCheck check_right_inverse(const RightSet& u) {
  if (!check_right_regular(u).ok()) {
    throw InputError("check_right_inverse: NOT_REGULAR");
  }
  return four_conditions_right(u);
}

InverseCheck check_left_inverse(const LeftSet& u) {
  if (!check_left_regular(u).ok()) {
    throw InputError("check_left_inverse: NOT_REGULAR");
  }
  const InverseSemigroup& s = *u.sg;
  InverseCheck out;
  auto& c = out.conditions;
  c = {true, true, true, true};
  std::array<std::vector<Idx>, 4> wit;
  for (Idx a = 0; a < u.size; ++a) {
    for (Idx b = 0; b < u.size; ++b) {
      if (c[0] && a != b && u.act(u.pair(a, b), a) == a &&
          u.act(u.pair(b, a), b) == b) {
        c[0] = false;
        wit[0] = {a, b};
      }
      if (c[1] && a != b && u.pair(a, a) == u.pair(b, b) &&
          u.pair(a, a) == u.pair(a, b)) {
        c[1] = false;
        wit[1] = {a, b};
      }
      if (c[2] && u.act(u.pair(b, a), a) !=
                      u.act(s.mul(u.pair(b, a), u.pair(a, b)), b)) {
        c[2] = false;
        wit[2] = {a, b};
      }
    }
  }
  // left rank-one diagonals: x -> <x|a>a
  std::vector<std::vector<Idx>> diag(u.size);
  for (Idx a = 0; a < u.size; ++a) {
    diag[a].resize(u.size);
    for (Idx x = 0; x < u.size; ++x) {
      diag[a][x] = u.act(u.pair(x, a), a);
    }
  }
  for (Idx a = 0; a < u.size && c[3]; ++a) {
    for (Idx b = 0; b < u.size && c[3]; ++b) {
      for (Idx x = 0; x < u.size; ++x) {
        if (diag[a][diag[b][x]] != diag[b][diag[a][x]]) {
          c[3] = false;
          wit[3] = {a, b};
          break;
        }
      }
    }
  }
  if (c[0] != c[1] || c[0] != c[2] || c[0] != c[3]) {
    throw InternalError(
        "check_left_inverse: the four equivalent conditions disagree");
  }
  out.passed = c[0];
  if (!out.passed) {
    out.witness = wit[0];
  }
  return out;
}

bool is_right_inverse_set(const RightSet& u) {
  return check_right_regular(u).ok() && four_conditions_right(u).passed;
}

bool is_left_inverse_set(const LeftSet& u) {
  if (!check_left_regular(u).ok()) {
    return false;
  }
  return check_left_inverse(u).passed;
}

RightSet require_right_inverse_set(RightSet u, const std::string& what) {
  if (!is_right_inverse_set(u)) {
    throw InputError(what + ": not a right inverse set");
  }
  return u;
}

std::vector<Idx> pairing_image(const std::vector<Idx>& pairing) {
  std::vector<Idx> im(pairing);
  std::sort(im.begin(), im.end());
  im.erase(std::unique(im.begin(), im.end()), im.end());
  return im;
}

bool is_right_full(const RightSet& u) {
  return static_cast<Idx>(pairing_image(u.pairing).size()) == u.sg->size();
}

bool is_left_full(const LeftSet& u) {
  return static_cast<Idx>(pairing_image(u.pairing).size()) == u.sg->size();
}

RightSet semigroup_as_right_set(SgPtr t) {
  RightSet u;
  u.sg = std::move(t);
  u.size = u.sg->size();
  u.action.resize(static_cast<size_t>(u.size) * u.size);
  u.pairing.resize(static_cast<size_t>(u.size) * u.size);
  for (Idx a = 0; a < u.size; ++a) {
    for (Idx b = 0; b < u.size; ++b) {
      u.action[static_cast<size_t>(a) * u.size + b] = u.sg->mul(a, b);
      u.pairing[static_cast<size_t>(a) * u.size + b] =
          u.sg->mul(u.sg->star(a), b);
    }
  }
  return u;
}

LeftSet semigroup_as_left_set(SgPtr s) {
  LeftSet u;
  u.sg = std::move(s);
  u.size = u.sg->size();
  u.action.resize(static_cast<size_t>(u.size) * u.size);
  u.pairing.resize(static_cast<size_t>(u.size) * u.size);
  for (Idx a = 0; a < u.size; ++a) {
    for (Idx x = 0; x < u.size; ++x) {
      // act(x, a) is stored at [a][x]
      u.action[static_cast<size_t>(a) * u.size + x] = u.sg->mul(x, a);
      u.pairing[static_cast<size_t>(a) * u.size + x] =
          u.sg->mul(a, u.sg->star(x));
    }
  }
  return u;
}

bool same_semigroup(const SgPtr& a, const SgPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace invcorr

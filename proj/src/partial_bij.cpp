#include "invcorr/partial_bij.hpp"

#include <algorithm>

namespace invcorr {

PartialBij identity_bij(Idx n) {
  PartialBij u{n, n, std::vector<Idx>(n)};
  for (Idx i = 0; i < n; ++i) {
    u.img[i] = i;
  }
  return u;
}

PartialBij empty_bij(Idx dom, Idx cod) {
  return PartialBij{dom, cod, std::vector<Idx>(dom, -1)};
}

PartialBij inverse_of(const PartialBij& u) {
  PartialBij v = empty_bij(u.cod_size, u.dom_size);
  for (Idx x = 0; x < u.dom_size; ++x) {
    if (u.defined(x)) {
      v.img[u.img[x]] = x;
    }
  }
  return v;
}

PartialBij compose(const PartialBij& f, const PartialBij& g) {
  if (g.cod_size != f.dom_size) {
    throw InputError("compose: partial bijections not composable");
  }
  PartialBij h = empty_bij(g.dom_size, f.cod_size);
  for (Idx x = 0; x < g.dom_size; ++x) {
    if (g.defined(x) && f.defined(g.img[x])) {
      h.img[x] = f.img[g.img[x]];
    }
  }
  return h;
}

std::string to_string(const PartialBij& u) {
  std::string s = "{";
  bool first = true;
  for (Idx x = 0; x < u.dom_size; ++x) {
    if (u.defined(x)) {
      if (!first) {
        s += ",";
      }
      first = false;
      s += std::to_string(x) + ">" + std::to_string(u.img[x]);
    }
  }
  return s + "}";
}

std::vector<PartialBij> enumerate_partial_bijections(Idx dom, Idx cod) {
  std::vector<PartialBij> out;
  for (unsigned mask = 0; mask < (1u << dom); ++mask) {
    std::vector<Idx> points;
    for (Idx x = 0; x < dom; ++x) {
      if (mask & (1u << x)) {
        points.push_back(x);
      }
    }
    if (static_cast<Idx>(points.size()) > cod) {
      continue;
    }
    // image tuples = injective words over the codomain, lexicographic
    std::vector<Idx> tuple(points.size(), -1);
    std::vector<bool> taken(cod, false);
    auto rec = [&](auto&& self, size_t pos) -> void {
      if (pos == points.size()) {
        PartialBij u = empty_bij(dom, cod);
        for (size_t i = 0; i < points.size(); ++i) {
          u.img[points[i]] = tuple[i];
        }
        out.push_back(std::move(u));
        return;
      }
      for (Idx y = 0; y < cod; ++y) {
        if (!taken[y]) {
          taken[y] = true;
          tuple[pos] = y;
          self(self, pos + 1);
          taken[y] = false;
        }
      }
    };
    rec(rec, 0);
  }
  return out;
}

SymmetricInverseMonoid symmetric_inverse_monoid(Idx n) {
  if (n < 0 || n > 4) {
    throw BudgetError("symmetric_inverse_monoid: SIZE_LIMIT, n must be <= 4");
  }
  SymmetricInverseMonoid out;
  out.elems = enumerate_partial_bijections(n, n);
  const Idx m = static_cast<Idx>(out.elems.size());
  // keep the canonical enumeration order; look indices up via a sorted view
  std::vector<std::pair<PartialBij, Idx>> sorted;
  for (Idx i = 0; i < m; ++i) {
    sorted.emplace_back(out.elems[i], i);
  }
  std::sort(sorted.begin(), sorted.end());
  auto index_of = [&](const PartialBij& u) {
    auto it = std::lower_bound(
        sorted.begin(), sorted.end(), u,
        [](const auto& p, const PartialBij& v) { return p.first < v; });
    return it->second;
  };
  MulTable t;
  t.n = m;
  t.tab.resize(static_cast<size_t>(m) * m);
  for (Idx a = 0; a < m; ++a) {
    for (Idx b = 0; b < m; ++b) {
      t.tab[static_cast<size_t>(a) * m + b] =
          index_of(compose(out.elems[a], out.elems[b]));
    }
  }
  out.sg = make_semigroup(t, "symmetric_inverse_monoid");
  return out;
}

}  // namespace invcorr

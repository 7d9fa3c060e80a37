#include "invcorr/fixtures.hpp"

#include "invcorr/partial_bij.hpp"

namespace invcorr {

namespace {

SgPtr from_table(Idx n, std::vector<Idx> tab, const char* name) {
  return make_semigroup(MulTable{n, std::move(tab)}, name);
}

SgPtr chain_semilattice(Idx n, const char* name) {
  std::vector<Idx> tab(static_cast<size_t>(n) * n);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      tab[static_cast<size_t>(a) * n + b] = std::min(a, b);
    }
  }
  return from_table(n, std::move(tab), name);
}

SgPtr cyclic_group(Idx n, const char* name) {
  std::vector<Idx> tab(static_cast<size_t>(n) * n);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      tab[static_cast<size_t>(a) * n + b] = (a + b) % n;
    }
  }
  return from_table(n, std::move(tab), name);
}

}  // namespace

SgPtr fx_E2() {
  static SgPtr s = chain_semilattice(2, "E2");
  return s;
}

SgPtr fx_E3() {
  static SgPtr s = chain_semilattice(3, "E3");
  return s;
}

SgPtr fx_Z2() {
  static SgPtr s = cyclic_group(2, "Z2");
  return s;
}

SgPtr fx_Z3() {
  static SgPtr s = cyclic_group(3, "Z3");
  return s;
}

SgPtr fx_B2() {
  // 0, e11, e12, e21, e22 with eij*ekl = eil when j == k, else 0
  static SgPtr s = from_table(5,
                              {
                                  0, 0, 0, 0, 0,  //
                                  0, 1, 2, 0, 0,  //
                                  0, 0, 0, 1, 2,  //
                                  0, 3, 4, 0, 0,  //
                                  0, 0, 0, 3, 4,  //
                              },
                              "B2");
  return s;
}

SgPtr fx_I1() {
  static SgPtr s = symmetric_inverse_monoid(1).sg;
  return s;
}

SgPtr fx_I2() {
  static SgPtr s = symmetric_inverse_monoid(2).sg;
  return s;
}

SgPtr fx_trivial() {
  static SgPtr s = from_table(1, {0}, "T1");
  return s;
}

MulTable left_zero_table(Idx n) {
  MulTable t;
  t.n = n;
  t.tab.resize(static_cast<size_t>(n) * n);
  for (Idx a = 0; a < n; ++a) {
    for (Idx b = 0; b < n; ++b) {
      t.tab[static_cast<size_t>(a) * n + b] = a;
    }
  }
  return t;
}

const std::vector<FixtureInfo>& fixture_semigroups() {
  static const std::vector<FixtureInfo> fixtures = [] {
    std::vector<FixtureInfo> out;
    auto add = [&](const std::string& name, SgPtr sg, bool is_group) {
      FixtureInfo info;
      info.name = name;
      info.n_idempotents = static_cast<Idx>(sg->idempotents.size());
      info.has_identity = sg->identity().has_value();
      info.has_zero = sg->zero().has_value();
      info.is_group = is_group;
      info.sg = std::move(sg);
      out.push_back(std::move(info));
    };
    add("E2", fx_E2(), false);
    add("E3", fx_E3(), false);
    add("Z2", fx_Z2(), true);
    add("Z3", fx_Z3(), true);
    add("B2", fx_B2(), false);
    add("I1", fx_I1(), false);
    add("I2", fx_I2(), false);
    add("T1", fx_trivial(), true);
    return out;
  }();
  return fixtures;
}

SgPtr fixture_by_name(const std::string& name) {
  for (const auto& f : fixture_semigroups()) {
    if (f.name == name) {
      return f.sg;
    }
  }
  throw InputError("unknown fixture: " + name);
}

}  // namespace invcorr

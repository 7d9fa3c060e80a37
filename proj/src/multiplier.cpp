#include "invcorr/multiplier.hpp"

#include <algorithm>

namespace invcorr {

MultiplierSemigroup multiplier(SgPtr s, const Budget& budget) {
  MultiplierSemigroup out;
  out.base = s;
  RightSet canon = semigroup_as_right_set(s);
  out.carrier = L_semigroup(canon, budget);
  out.embedding.resize(s->size());
  for (Idx a = 0; a < s->size(); ++a) {
    std::vector<Idx> lam(s->size());
    for (Idx x = 0; x < s->size(); ++x) {
      lam[x] = s->mul(a, x);
    }
    Idx pos = out.carrier.index_of(lam);
    if (pos < 0) {
      throw InternalError("multiplier: lambda_s is missing from L(S)");
    }
    out.embedding[a] = pos;
  }
  // lambda is an injective homomorphism onto an essential two-sided ideal
  SemigroupHom lam{s, out.carrier.sg, out.embedding};
  if (!check_hom(lam)) {
    throw InternalError("multiplier: lambda is not a homomorphism");
  }
  std::vector<Idx> image(out.embedding);
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) {
    throw InternalError("multiplier: lambda is not injective");
  }
  if (!is_two_sided_ideal(*out.carrier.sg, image)) {
    throw InternalError("multiplier: lambda(S) is not a two-sided ideal");
  }
  if (!is_essential_ideal(*out.carrier.sg, image)) {
    throw InternalError("multiplier: lambda(S) is not essential");
  }
  if (s->size() > 0 && !out.carrier.sg->identity().has_value()) {
    throw InternalError("multiplier: M(S) lacks an identity element");
  }
  return out;
}

Correspondence extend_hom(const Correspondence& c, const SgPtr& s_tilde,
                          const std::vector<Idx>& embed_of_s) {
  Correspondence cc = require_correspondence(c, "extend_hom");
  if (!is_non_degenerate(cc)) {
    throw InputError("extend_hom: NOT_NON_DEGENERATE");
  }
  const InverseSemigroup& s = *cc.left_sg;
  const InverseSemigroup& st = *s_tilde;
  if (embed_of_s.size() != static_cast<size_t>(s.size())) {
    throw InputError("extend_hom: embedding has the wrong shape");
  }
  std::vector<Idx> back(st.size(), -1);
  for (Idx a = 0; a < s.size(); ++a) {
    Idx x = embed_of_s[a];
    if (x < 0 || x >= st.size() || back[x] >= 0) {
      throw InputError("extend_hom: embedding not injective");
    }
    back[x] = a;
  }
  {
    SemigroupHom em{cc.left_sg, s_tilde, embed_of_s};
    if (!check_hom(em)) {
      throw InputError("extend_hom: embedding is not a homomorphism");
    }
  }
  std::vector<Idx> image(embed_of_s);
  std::sort(image.begin(), image.end());
  if (!is_two_sided_ideal(st, image)) {
    throw InputError("extend_hom: NOT_IDEAL");
  }

  Correspondence out;
  out.left_sg = s_tilde;
  out.right = cc.right;
  out.left_action.assign(static_cast<size_t>(cc.size()) * st.size(), -1);
  // theta~(s0)(theta(s) u) := theta(s0 s)(u), over every representation
  for (Idx s0 = 0; s0 < st.size(); ++s0) {
    for (Idx a = 0; a < s.size(); ++a) {
      Idx prod = back[st.mul(s0, embed_of_s[a])];
      if (prod < 0) {
        throw InternalError("extend_hom: ideal product escaped S");
      }
      for (Idx u = 0; u < cc.size(); ++u) {
        Idx point = cc.lact(a, u);
        Idx val = cc.lact(prod, u);
        Idx& slot =
            out.left_action[static_cast<size_t>(point) * st.size() + s0];
        if (slot >= 0 && slot != val) {
          throw InternalError("extend_hom: extension not well-defined");
        }
        slot = val;
      }
    }
  }
  for (Idx x : out.left_action) {
    if (x < 0) {
      throw InternalError("extend_hom: non-degeneracy left a point "
                          "unreached");
    }
  }
  // the extension is a correspondence again and restricts to theta
  Correspondence checked = require_correspondence(out, "extend_hom result");
  for (Idx a = 0; a < s.size(); ++a) {
    for (Idx u = 0; u < cc.size(); ++u) {
      if (checked.lact(embed_of_s[a], u) != cc.lact(a, u)) {
        throw InternalError("extend_hom: extension does not restrict to "
                            "theta");
      }
    }
  }
  return checked;
}

std::vector<Idx> idealizer(const InverseSemigroup& ambient,
                           const std::vector<Idx>& members) {
  if (!is_subsemigroup(ambient, members)) {
    throw InputError("idealizer: NOT_SUBSEMIGROUP");
  }
  std::vector<bool> in(ambient.size(), false);
  for (Idx x : members) {
    in[x] = true;
  }
  std::vector<Idx> out;
  for (Idx a = 0; a < ambient.size(); ++a) {
    bool keeps = true;
    for (Idx m : members) {
      keeps = keeps && in[ambient.mul(a, m)] && in[ambient.mul(m, a)];
    }
    if (keeps) {
      out.push_back(a);
    }
  }
  return out;
}

KasparovWitness verify_kasparov(const RightSet& u, const Budget& budget) {
  KasparovWitness out;
  out.l = L_semigroup(u, budget);
  out.k = K_semigroup(u, budget);
  out.mk = multiplier(out.k.k.sg, budget);

  // the inclusion K(U) -> L(U) as a correspondence from K(U)
  Correspondence incl;
  incl.left_sg = out.k.k.sg;
  incl.right = u;
  incl.left_action.resize(static_cast<size_t>(u.size) *
                          out.k.k.sg->size());
  for (Idx i = 0; i < out.k.k.sg->size(); ++i) {
    for (Idx x = 0; x < u.size; ++x) {
      incl.left_action[static_cast<size_t>(x) * out.k.k.sg->size() + i] =
          out.k.k.maps[i].fwd[x];
    }
  }
  Correspondence extended =
      extend_hom(incl, out.mk.carrier.sg, out.mk.embedding);

  // the extension lands in L(U) elementwise and is an isomorphism
  out.iso.resize(out.mk.carrier.sg->size());
  for (Idx mkel = 0; mkel < out.mk.carrier.sg->size(); ++mkel) {
    Idx img = out.l.index_of(extended.theta(mkel));
    if (img < 0) {
      throw InternalError("verify_kasparov: extension left L(U)");
    }
    out.iso[mkel] = img;
  }
  SemigroupHom h{out.mk.carrier.sg, out.l.sg, out.iso};
  if (!check_hom(h)) {
    throw InternalError("verify_kasparov: extension is not a homomorphism");
  }
  std::vector<Idx> image(out.iso);
  std::sort(image.begin(), image.end());
  image.erase(std::unique(image.begin(), image.end()), image.end());
  if (image.size() != out.iso.size() ||
      static_cast<Idx>(image.size()) != out.l.sg->size()) {
    throw InternalError("verify_kasparov: extension is not bijective");
  }
  // it extends the canonical embedding
  for (size_t i = 0; i < out.k.k.maps.size(); ++i) {
    if (out.iso[out.mk.embedding[i]] != out.k.in_l[i]) {
      throw InternalError(
          "verify_kasparov: isomorphism does not extend the embedding");
    }
  }
  return out;
}

}  // namespace invcorr

#include "amalgam/regularity.hpp"

namespace amalgam {

namespace {

bool same_factors(NormalForm const& g, NormalForm const& h) {
  if (g.length() != h.length()) {
    return false;
  }
  for (std::size_t i = 0; i < g.length(); ++i) {
    if (g.syllables[i].side != h.syllables[i].side) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::optional<CosetOfC> principal_system_solve(AmalgamContext const& ctx,
                                               NormalForm const& g,
                                               NormalForm const& h) {
  std::size_t const k = g.length();
  if (k == 0 || !same_factors(g, h)) {
    return std::nullopt;
  }
  auto const& p = g.syllables;
  auto const& q = h.syllables;
  // D_{i,i} = p_{k-i+1} D_{i-1,i-1} q_{k-i+1}^-1 ∩ C, D_{0,0} = C.
  CosetOfC cur = whole_c(ctx, p[k - 1].side);
  for (std::size_t j = k; j-- > 0;) {
    Side s = p[j].side;
    auto next = shift(ctx, move_to(ctx, cur, s), p[j].word, invert(q[j].word));
    if (!next) {
      return std::nullopt;
    }
    cur = std::move(*next);
  }
  // Pull D_{k,k} back down the chain: D_{i-1,k} = p^-1 D_{i,k} q.
  for (std::size_t j = 0; j < k; ++j) {
    Side s = p[j].side;
    auto next = shift(ctx, move_to(ctx, cur, s), invert(p[j].word), q[j].word);
    if (!next) {
      throw std::logic_error("principal system back-substitution left C");
    }
    cur = std::move(*next);
  }
  return cur;
}

std::optional<Word> propagate_system(AmalgamContext const& ctx,
                                     NormalForm const& g, NormalForm const& h,
                                     Word c, Side c_side) {
  std::size_t const k = g.length();
  if (k == 0 || !same_factors(g, h)) {
    return std::nullopt;
  }
  for (std::size_t j = k; j-- > 0;) {
    Side s = g.syllables[j].side;
    Word moved = ctx.move(c, c_side, s);
    c = concat(g.syllables[j].word, moved, invert(h.syllables[j].word));
    c_side = s;
    if (!contains(ctx.subgroup(s), c)) {
      return std::nullopt;
    }
  }
  return c;
}

RegularityReport classify(AmalgamContext const& ctx, NormalForm const& g) {
  Word none(ctx.ambient());
  RegularityReport r{RegularityReport::Verdict::Regular,
                     RegularityReport::Witness::None, none, none, none, {}};
  std::size_t const l = g.length();
  if (l >= 2) {
    auto e = principal_system_solve(ctx, g, g);
    if (!e) {
      throw std::logic_error("E_{g,g} is empty but always contains 1");
    }
    if (!e->subgroup.trivial()) {
      r.verdict = RegularityReport::Verdict::Singular;
      r.kind = RegularityReport::Witness::BadPair;
      r.element = ctx.embed(e->subgroup.basis().front(), e->side);
      r.reason = "g c g^-1 lies in C for the nontrivial c = "
                 + r.element.to_string();
    } else {
      r.reason = "the bad-pair system of g has only the trivial solution";
    }
    return r;
  }
  if (l == 1) {
    Side s = g.syllables[0].side;
    Word f = concat(ctx.move(g.head, g.head_side, s), g.syllables[0].word);
    auto const& c = ctx.subgroup(s);
    auto meet = pullback(conjugate_graph(c, f), c);
    if (!meet.trivial()) {
      r.verdict = RegularityReport::Verdict::Singular;
      r.kind = RegularityReport::Witness::Normalizer;
      r.element = ctx.embed(meet.basis().front(), s);
      r.reason = std::string("g lies in the generalized normalizer of C in ")
                 + side_name(s) + ": " + r.element.to_string()
                 + " is in C and in C^g";
    } else {
      r.reason = std::string("C ∩ C^g is trivial in ") + side_name(s);
    }
    return r;
  }
  for (Side s : {Side::A, Side::B}) {
    Word c = ctx.move(g.head, g.head_side, s);
    if (auto w = ctx.z_index(s).find(c)) {
      r.verdict = RegularityReport::Verdict::Singular;
      r.kind = RegularityReport::Witness::ZSet;
      r.element = ctx.embed(w->target, s);
      r.t = ctx.embed(w->t, s);
      r.conjugator = ctx.embed(w->conjugator, s);
      r.reason = std::string("c is in Z_") + side_name(s) + "(C): conjugate in C to "
                 + (w->target.empty() ? std::string("1") : w->target.to_string())
                 + ", which t = " + w->t.to_string() + " conjugates back into C";
      return r;
    }
  }
  r.reason = "c lies outside Z_A(C) and Z_B(C)";
  return r;
}

RegularityReport classify(AmalgamContext const& ctx, Word const& raw,
                          RepPolicy const& policy) {
  return classify(ctx, normal_form(ctx, raw, policy));
}

char const* cr_class_name(CRClass c) noexcept {
  switch (c) {
    case CRClass::CRgt1:
      return "CR>1";
    case CRClass::CR0:
      return "CR0";
    case CRClass::CR1:
      return "CR1";
    case CRClass::NotCR:
      break;
  }
  return "not-CR";
}

CRMembership cr_membership(AmalgamContext const& ctx, Word const& raw,
                           RepPolicy const& policy) {
  CRMembership out;
  CyclicForm partial = cyclic_form(ctx, raw, policy, false);
  if (partial.form.length() > 1) {
    for (auto& perm : cyclic_permutations(ctx, partial.form, policy)) {
      if (classify(ctx, perm.form).regular()) {
        out.cls = CRClass::CRgt1;
        out.regular_form = CyclicForm{std::move(perm.form),
                                      concat(partial.conjugator, perm.conjugator),
                                      true};
        return out;
      }
    }
    return out;
  }
  CyclicForm full = cyclic_form(ctx, raw, policy, true);
  if (full.form.length() == 1) {
    out.cls = CRClass::CR1;
    return out;
  }
  if (classify(ctx, full.form).regular()) {
    out.cls = CRClass::CR0;
    out.regular_form = std::move(full);
  }
  return out;
}

}  // namespace amalgam

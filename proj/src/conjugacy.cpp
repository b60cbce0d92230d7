#include "amalgam/conjugacy.hpp"

#include <unordered_map>

#include "amalgam/regularity.hpp"

namespace amalgam {

namespace {

using Tag = ConjugacyOutcome::Tag;

ConjugacyOutcome verified(AmalgamContext const& ctx, Word const& u,
                          Word const& v, Word z, RepPolicy const& policy,
                          std::string reason) {
  if (normal_form(ctx, conjugate(u, z), policy) != normal_form(ctx, v, policy)) {
    throw std::logic_error("conjugator failed normal-form verification");
  }
  return {Tag::Conjugate, std::move(z), std::move(reason)};
}

ConjugacyOutcome no(AmalgamContext const& ctx, std::string reason) {
  return {Tag::NotConjugate, Word(ctx.ambient()), std::move(reason)};
}

// Case l0 >= 2 with a regular cyclic permutation of g.  Returns nothing when
// g has no regular permutation.
std::optional<ConjugacyOutcome> regular_search(AmalgamContext const& ctx,
                                               CyclicForm const& g,
                                               CyclicForm const& h,
                                               RepPolicy const& policy) {
  auto g_perms = cyclic_permutations(ctx, g.form, policy);
  CyclicPermutation const* regular = nullptr;
  for (auto const& perm : g_perms) {
    if (classify(ctx, perm.form).regular()) {
      regular = &perm;
      break;
    }
  }
  if (!regular) {
    return std::nullopt;
  }
  NormalForm const& gp = regular->form;
  Word a_g = concat(g.conjugator, regular->conjugator);
  Side s1 = gp.syllables.front().side;
  bool saw_infinite = false;
  for (auto const& perm : cyclic_permutations(ctx, h.form, policy)) {
    auto e = principal_system_solve(ctx, gp, perm.form);
    if (!e) {
      continue;
    }
    saw_infinite = saw_infinite || !e->subgroup.trivial();
    Word c = e->rep;
    auto ck = propagate_system(ctx, gp, perm.form, c, e->side);
    if (!ck) {
      throw std::logic_error("principal system solution does not propagate");
    }
    // Closing equation c_g c_k = c c_h.
    Word lhs = concat(ctx.move(gp.head, gp.head_side, s1), *ck);
    Word rhs = concat(ctx.move(c, e->side, s1),
                      ctx.move(perm.form.head, perm.form.head_side, s1));
    if (lhs != rhs) {
      continue;
    }
    Word z = concat(concat(a_g, ctx.embed(c, e->side)), invert(perm.conjugator),
                    invert(h.conjugator));
    return ConjugacyOutcome{Tag::Conjugate, std::move(z),
                            "regular cyclic permutation; principal system solved"};
  }
  if (saw_infinite) {
    return ConjugacyOutcome{Tag::Undecided, Word(ctx.ambient()),
                            "principal system has infinitely many solutions"};
  }
  return ConjugacyOutcome{
      Tag::NotConjugate, Word(ctx.ambient()),
      "no cyclic permutation satisfies the principal system and closing equation"};
}

}  // namespace

char const* tag_name(ConjugacyOutcome::Tag tag) noexcept {
  switch (tag) {
    case Tag::Conjugate:
      return "conjugate";
    case Tag::NotConjugate:
      return "not-conjugate";
    case Tag::Undecided:
      break;
  }
  return "undecided";
}

ConjugacyOutcome conjugacy_search(AmalgamContext const& ctx, Word const& u,
                                  Word const& v, RepPolicy const& policy) {
  CyclicForm cu = cyclic_form(ctx, u, policy, true);
  CyclicForm cv = cyclic_form(ctx, v, policy, true);
  std::size_t l = cu.form.length();
  if (l != cv.form.length()) {
    return no(ctx, "cyclic lengths differ: " + std::to_string(l) + " and "
                       + std::to_string(cv.form.length()));
  }

  if (l == 1) {
    Side s = cu.form.syllables[0].side;
    if (cv.form.syllables[0].side != s) {
      return no(ctx, "cyclically reduced forms lie in different factors");
    }
    Word fu = concat(cu.form.head, cu.form.syllables[0].word);
    Word fv = concat(cv.form.head, cv.form.syllables[0].word);
    auto zf = free_conjugacy(fu, fv);
    if (!zf) {
      return no(ctx, std::string("not conjugate in factor ") + side_name(s));
    }
    Word z = concat(cu.conjugator, ctx.embed(*zf, s), invert(cv.conjugator));
    return verified(ctx, u, v, std::move(z), policy,
                    std::string("conjugate in factor ") + side_name(s));
  }

  if (l >= 2) {
    if (auto out = regular_search(ctx, cu, cv, policy)) {
      if (out->tag == Tag::Conjugate) {
        return verified(ctx, u, v, out->conjugator, policy, out->reason);
      }
      return *out;
    }
    if (auto out = regular_search(ctx, cv, cu, policy)) {
      if (out->tag == Tag::Conjugate) {
        return verified(ctx, u, v, invert(out->conjugator), policy, out->reason);
      }
      return *out;
    }
    return {Tag::Undecided, Word(ctx.ambient()),
            "no cyclic permutation of u or v is regular (black hole)"};
  }

  // l0 = 0: both are conjugate into C.
  Word cu_a = ctx.move(cu.form.head, cu.form.head_side, Side::A);
  Word cv_a = ctx.move(cv.form.head, cv.form.head_side, Side::A);
  auto finish = [&](Word const& zc, Side s, std::string reason) {
    Word z = concat(cu.conjugator, ctx.embed(zc, s), invert(cv.conjugator));
    return verified(ctx, u, v, std::move(z), policy, std::move(reason));
  };
  if (classify(ctx, cu.form).regular() || classify(ctx, cv.form).regular()) {
    auto const& ca = ctx.subgroup(Side::A);
    auto zc = free_conjugacy(express_in_basis(ca, cu_a), express_in_basis(ca, cv_a));
    if (!zc) {
      return no(ctx, "regular elements of C that are not conjugate in C");
    }
    return finish(substitute(*zc, ca.basis(), ctx.alphabet(Side::A)), Side::A,
                  "regular elements of C conjugate in C");
  }
  for (Side mal : {Side::A, Side::B}) {
    if (!ctx.malnormal(mal)) {
      continue;
    }
    Side s = other(mal);
    auto zf = free_conjugacy(ctx.move(cu_a, Side::A, s), ctx.move(cv_a, Side::A, s));
    if (!zf) {
      return no(ctx, std::string("C is malnormal in ") + side_name(mal)
                         + " and the elements are not conjugate in "
                         + side_name(s));
    }
    return finish(*zf, s, std::string("C is malnormal in ") + side_name(mal)
                              + "; conjugate in " + side_name(s));
  }
  return {Tag::Undecided, Word(ctx.ambient()),
          "both elements are singular elements of C and C is malnormal in "
          "neither factor"};
}

std::vector<Word> words_up_to(AlphabetPtr const& al, std::size_t n) {
  std::vector<Word> out{Word(al)};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t code = 0; code < 2 * al->size(); ++code) {
        Letter l = Letter::from_code(code);
        if (!out[i].empty() && out[i].back().cancels(l)) {
          continue;
        }
        auto raw = out[i].letters();
        raw.push_back(l);
        out.push_back(Word::unchecked(al, std::move(raw)));
      }
    }
    begin = end;
  }
  return out;
}

std::optional<Word> brute_conjugacy_oracle(AmalgamContext const& ctx,
                                           Word const& u, Word const& v,
                                           std::size_t bound,
                                           RepPolicy const& policy) {
  auto key = [&](Word const& w) { return render(normal_form(ctx, w, policy)); };
  std::unordered_map<std::string, Word> left;
  for (auto const& z1 : words_up_to(ctx.ambient(), (bound + 1) / 2)) {
    left.emplace(key(conjugate(u, z1)), z1);
  }
  for (auto const& z2 : words_up_to(ctx.ambient(), bound / 2)) {
    auto it = left.find(key(conjugate(v, invert(z2))));
    if (it != left.end()) {
      return concat(it->second, z2);
    }
  }
  return std::nullopt;
}

}  // namespace amalgam

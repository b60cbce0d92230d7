#include "amalgam/normal_form.hpp"

#include <sstream>

namespace amalgam {

namespace {

Word letters_of(AlphabetPtr const& al, std::string_view name, long exponent) {
  auto idx = al->find(name);
  return Word::power(al, *idx, exponent);
}

bool names_are(Alphabet const& al, std::vector<std::string> const& expected) {
  return al.names() == expected;
}

// If w is `first letter^k` with k a nonzero multiple of p, returns k.
std::optional<long> match_pattern(Word const& w, std::uint32_t first,
                                  std::uint32_t power, long p) {
  if (w.size() < 2 || w[0] != Letter{first, 1}) {
    return std::nullopt;
  }
  Letter l = w[1];
  if (l.index != power) {
    return std::nullopt;
  }
  for (std::size_t i = 2; i < w.size(); ++i) {
    if (w[i] != l) {
      return std::nullopt;
    }
  }
  long k = static_cast<long>(w.size() - 1);
  if (k % p != 0) {
    return std::nullopt;
  }
  return l.sign > 0 ? k : -k;
}

// Drops empty syllables and merges neighbours from the same factor.
std::vector<Syllable> tidy(std::vector<Syllable> in) {
  std::vector<Syllable> out;
  for (auto& s : in) {
    if (s.word.empty()) {
      continue;
    }
    if (!out.empty() && out.back().side == s.side) {
      out.back().word = concat(out.back().word, s.word);
      if (out.back().word.empty()) {
        out.pop_back();
      }
      continue;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

RepPolicy RepPolicy::paper_example_one(AmalgamContext const& ctx, long p) {
  if (p < 2) {
    throw std::invalid_argument("paper-ex1 policy needs p >= 2");
  }
  auto const& x = ctx.alphabet(Side::A);
  auto const& y = ctx.alphabet(Side::B);
  bool ok = names_are(*x, {"a", "b", "d"}) && names_are(*y, {"x", "y", "z"});
  if (ok) {
    Word ap = letters_of(x, "a", p);
    Word b = letters_of(x, "b", 1);
    Word xw = letters_of(y, "x", 1);
    Word yp = letters_of(y, "y", p);
    auto expected_a = GeneratingTuple::build(x, {ap, b});
    auto expected_b = GeneratingTuple::build(y, {xw, yp});
    ok = ctx.basis(Side::A) == expected_a.basis()
         && ctx.basis(Side::B) == expected_b.basis()
         && ctx.transfer(ap, Side::A) == xw && ctx.transfer(b, Side::A) == yp;
  }
  if (!ok) {
    throw std::invalid_argument(
        "paper-ex1 policy requires the presentation A: a b d; B: x y z; "
        "C: a^p = x; C: b = y^p with p = " + std::to_string(p));
  }
  return RepPolicy(Kind::AdversarialExampleOne, p);
}

std::string RepPolicy::name() const {
  if (kind_ == Kind::Canonical) {
    return "canonical";
  }
  return "paper-ex1:" + std::to_string(p_);
}

CosetSplit split(AmalgamContext const& ctx, Side side, Word const& w,
                 RepPolicy const& policy) {
  auto [rep, head] = coset_rep(ctx.subgroup(side), w);
  if (policy.kind() == RepPolicy::Kind::AdversarialExampleOne && !rep.empty()) {
    auto const& al = ctx.alphabet(side);
    // A: C d a^k -> b^-k d a^k;  B: C z y^k -> x^-k z y^k.
    auto lead = *al->find(side == Side::A ? "d" : "z");
    auto power = *al->find(side == Side::A ? "a" : "y");
    auto other_gen = *al->find(side == Side::A ? "b" : "x");
    if (auto k = match_pattern(rep, static_cast<std::uint32_t>(lead),
                               static_cast<std::uint32_t>(power), policy.p())) {
      rep = concat(Word::power(al, other_gen, -*k), rep);
      head = concat(w, invert(rep));
    }
  }
  return {std::move(head), std::move(rep)};
}

std::vector<Syllable> syllable_decompose(AmalgamContext const& ctx,
                                         Word const& raw) {
  if (raw.alphabet() != ctx.ambient()) {
    throw AlphabetMismatch();
  }
  std::vector<Syllable> out;
  std::vector<Letter> block;
  Side current = Side::A;
  auto flush = [&] {
    if (!block.empty()) {
      out.push_back({current, Word::unchecked(ctx.alphabet(current), block)});
      block.clear();
    }
  };
  for (Letter l : raw.letters()) {
    Side s = ctx.side_of(l);
    if (s != current) {
      flush();
      current = s;
    }
    block.push_back(ctx.local(l));
  }
  flush();
  return out;
}

Word to_word(AmalgamContext const& ctx, std::vector<Syllable> const& syllables) {
  std::vector<Letter> raw;
  for (auto const& s : syllables) {
    Word e = ctx.embed(s.word, s.side);
    raw.insert(raw.end(), e.letters().begin(), e.letters().end());
  }
  return Word(ctx.ambient(), raw);
}

Word to_word(AmalgamContext const& ctx, NormalForm const& nf) {
  return concat(ctx.embed(nf.head, nf.head_side), to_word(ctx, nf.syllables));
}

NormalForm reduced_form(AmalgamContext const& ctx,
                        std::vector<Syllable> const& syllables) {
  std::vector<Syllable> cur = tidy(syllables);
  NormalForm result{Side::A, Word(ctx.alphabet(Side::A)), {}};
  while (true) {
    std::size_t i = 0;
    while (i < cur.size() && !contains(ctx.subgroup(cur[i].side), cur[i].word)) {
      ++i;
    }
    if (i == cur.size()) {
      break;
    }
    Side s = cur[i].side;
    if (cur.size() == 1) {
      result.head = ctx.move(cur[i].word, s, Side::A);
      cur.clear();
      break;
    }
    // g_{i-1} c_i g_{i+1} with c_i rewritten on the other side.
    Word merged = ctx.transfer_by_generators(cur[i].word, s);
    std::size_t lo = i;
    std::size_t hi = i + 1;
    if (i > 0) {
      merged = concat(cur[i - 1].word, merged);
      lo = i - 1;
    }
    if (i + 1 < cur.size()) {
      merged = concat(merged, cur[i + 1].word);
      hi = i + 2;
    }
    std::vector<Syllable> next(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(lo));
    next.push_back({other(s), std::move(merged)});
    next.insert(next.end(), cur.begin() + static_cast<std::ptrdiff_t>(hi), cur.end());
    cur = tidy(std::move(next));
  }
  result.syllables = std::move(cur);
  if (!result.syllables.empty()) {
    result.head_side = result.syllables.front().side;
    result.head = Word(ctx.alphabet(result.head_side));
  }
  return result;
}

NormalForm normal_form(AmalgamContext const& ctx, Word const& raw,
                       RepPolicy const& policy, std::vector<std::size_t>* trace) {
  return normal_form(ctx, syllable_decompose(ctx, raw), policy, trace);
}

NormalForm normal_form(AmalgamContext const& ctx,
                       std::vector<Syllable> const& syllables,
                       RepPolicy const& policy, std::vector<std::size_t>* trace) {
  std::vector<Syllable> reps;  // built right to left
  Side carry_side = Side::A;
  Word carry(ctx.alphabet(Side::A));
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) {
    Side s = it->side;
    // The carried c_{j+1} is rewritten through the given generators.
    Word w = carry.empty()        ? it->word
             : carry_side == s     ? concat(it->word, carry)
                                   : concat(it->word,
                                            ctx.transfer_by_generators(carry, carry_side));
    if (!reps.empty() && reps.back().side == s) {
      w = concat(w, reps.back().word);
      reps.pop_back();
    }
    auto [head, rep] = split(ctx, s, w, policy);
    if (trace) {
      trace->push_back(head.size());
    }
    carry = std::move(head);
    carry_side = s;
    if (!rep.empty()) {
      reps.push_back({s, std::move(rep)});
    }
  }
  Side head_side = reps.empty() ? Side::A : reps.back().side;
  return NormalForm{head_side, ctx.move(carry, carry_side, head_side),
                    std::vector<Syllable>(reps.rbegin(), reps.rend())};
}

CyclicForm cyclic_form(AmalgamContext const& ctx, Word const& raw,
                       RepPolicy const& policy, bool allow_cmsp) {
  CyclicForm cf{normal_form(ctx, raw, policy), Word(ctx.ambient()), true};
  while (true) {
    auto const& syl = cf.form.syllables;
    std::size_t k = syl.size();
    if (k == 0) {
      return cf;
    }
    if (k == 1) {
      if (!allow_cmsp) {
        cf.complete = false;
        return cf;
      }
      Side s = syl[0].side;
      Word f = concat(ctx.move(cf.form.head, cf.form.head_side, s), syl[0].word);
      auto hit = conjugacy_into(ctx.subgroup(s), f);
      if (!hit) {
        return cf;
      }
      // f = z^-1 t z, so raw = conj z^-1 t z conj^-1.
      cf.conjugator = concat(cf.conjugator, ctx.embed(invert(hit->conjugator), s));
      cf.form = normal_form(ctx, ctx.embed(hit->target, s), policy);
      return cf;
    }
    if (syl.front().side != syl.back().side) {
      return cf;
    }
    // g ~ p_k g p_k^-1 = p_k c p_1 ... p_{k-1}.
    Word pk = ctx.embed(syl.back().word, syl.back().side);
    Word g = to_word(ctx, cf.form);
    cf.conjugator = concat(cf.conjugator, invert(pk));
    cf.form = normal_form(ctx, concat(pk, g, invert(pk)), policy);
  }
}

std::vector<CyclicPermutation> cyclic_permutations(AmalgamContext const& ctx,
                                                   NormalForm const& g,
                                                   RepPolicy const& policy) {
  std::vector<CyclicPermutation> out;
  out.push_back({g, Word(ctx.ambient())});
  Word gw = to_word(ctx, g);
  Word z = ctx.embed(g.head, g.head_side);
  for (std::size_t j = 1; j < g.syllables.size(); ++j) {
    z = concat(z, ctx.embed(g.syllables[j - 1].word, g.syllables[j - 1].side));
    out.push_back({normal_form(ctx, conjugate(gw, z), policy), z});
  }
  return out;
}

std::string render(NormalForm const& nf) {
  std::ostringstream out;
  out << (nf.head.empty() ? std::string("1") : nf.head.to_string());
  for (auto const& s : nf.syllables) {
    out << " | " << side_name(s.side) << ": " << s.word.to_string();
  }
  return out.str();
}

}  // namespace amalgam

// Runs the acceptance criteria and prints one line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "amalgam/bench.hpp"
#include "amalgam/cli.hpp"
#include "amalgam/conjugacy.hpp"
#include "amalgam/regularity.hpp"
#include "testkit.hpp"

using namespace support;

namespace {

using Clock = std::chrono::steady_clock;
using Tag = ConjugacyOutcome::Tag;

struct Outcome {
  bool pass;
  std::string detail;
};

AmalgamContext const& ctx1() {
  static AmalgamContext ctx = load_context_file(fixture_path("ex1.group"));
  return ctx;
}

// Relator u_i v_i^-1 or its inverse, in ambient letters.
Word random_relator(std::mt19937& rng, AmalgamContext const& ctx) {
  std::uniform_int_distribution<std::size_t> pick(0, ctx.pairs().size() - 1);
  auto const& pair = ctx.pairs()[pick(rng)];
  Word r = concat(ctx.embed(pair.u, Side::A), invert(ctx.embed(pair.v, Side::B)));
  return std::bernoulli_distribution()(rng) ? r : invert(r);
}

Word insert_at(Word const& w, std::size_t pos, Word const& piece) {
  auto letters = w.letters();
  std::vector<Letter> head(letters.begin(), letters.begin() + static_cast<long>(pos));
  std::vector<Letter> tail(letters.begin() + static_cast<long>(pos), letters.end());
  return concat(Word(w.alphabet(), head), piece, Word(w.alphabet(), tail));
}

Outcome criterion1() {
  auto const& ctx = ctx1();
  std::ostringstream detail;
  bool pass = load_context(example_one_text(2)).pairs().size() == ctx.pairs().size();
  std::size_t bound = 0;
  for (long m = 1; m <= 5; ++m) {
    auto reports = bench_paper_ex1(2, m);
    std::size_t expect = std::size_t{1} << (2 * m);
    auto const& adv = reports[0];
    auto const& can = reports[1];
    pass = pass && adv.final_head == expect && can.final_head <= can.bound;
    // The harness builds its own context; cross-check it on the fixture file.
    std::vector<std::size_t> trace;
    Word g = parse_word(adv.input, ctx.ambient());
    NormalForm nf = normal_form(ctx, g, RepPolicy::paper_example_one(ctx, 2), &trace);
    pass = pass && nf.head.size() == expect && trace == adv.trace;
    bound = can.bound;
    detail << " m=" << m << ":" << adv.final_head << "/" << can.final_head;
  }
  detail << " (adversarial/canonical head, canonical bound for m=5: " << bound << ")";
  return {pass, detail.str()};
}

Outcome criterion2() {
  AmalgamContext ctx = load_context_file(fixture_path("ex2.group"));
  bool pass = true;
  std::ostringstream detail;
  for (long n = 1; n <= 4; ++n) {
    Word by = parse_word("b y", ctx.ambient());
    Word power(ctx.ambient());
    for (long i = 0; i < n; ++i) {
      power = concat(power, by);
    }
    Word g = conjugate(parse_word("a", ctx.ambient()), power);
    NormalForm lhs = normal_form(ctx, g);
    NormalForm rhs = normal_form(ctx, Word::power(ctx.ambient(), 0, 1L << n));
    bool ok = lhs == rhs;
    pass = pass && ok;
    detail << " n=" << n << (ok ? " ok" : " MISMATCH");
  }
  return {pass, detail.str()};
}

Outcome criterion3() {
  auto const& ctx = ctx1();
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> inserts(0, 5);
  std::size_t failures = 0;
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 12, ctx.ambient());
    Word w2 = w;
    for (int k = inserts(rng); k > 0; --k) {
      std::uniform_int_distribution<std::size_t> pos(0, w2.size());
      w2 = insert_at(w2, pos(rng), random_relator(rng, ctx));
    }
    for (auto const& policy : {RepPolicy::canonical(), RepPolicy::paper_example_one(ctx, 2)}) {
      if (normal_form(ctx, w, policy) != normal_form(ctx, w2, policy)) {
        ++failures;
      }
    }
  }
  return {failures == 0, " 300 words x 2 policies, failures: " + std::to_string(failures)};
}

Outcome criterion4() {
  auto const& ctx = ctx1();
  std::mt19937 rng(4);
  std::uniform_int_distribution<std::size_t> len(1, 3);
  // Factor words spelling C-words of length <= 6, per side.
  std::vector<Word> c_factor[2];
  for (Side s : {Side::A, Side::B}) {
    auto const& sub = ctx.subgroup(s);
    for (auto const& w : ball(sub.basis_alphabet(), 6)) {
      c_factor[static_cast<int>(s)].push_back(
          substitute(w, sub.basis(), ctx.alphabet(s)));
    }
  }
  auto const small_a = c_words(ctx, Side::A, 2);
  auto const small_b = c_words(ctx, Side::B, 2);
  std::size_t mismatches = 0;
  std::size_t pairs = 0;
  std::size_t nonempty = 0;
  std::size_t infinite = 0;
  while (pairs < 60) {
    NormalForm g = normal_form(ctx, random_element(rng, ctx, len(rng), 2));
    if (g.length() == 0) {
      continue;
    }
    NormalForm h = g;
    std::uniform_int_distribution<int> mode(0, 2);
    switch (mode(rng)) {
      case 0: {  // h in C g C, so E is nonempty
        Word c1 = small_a[rng() % small_a.size()];
        Word c2 = small_b[rng() % small_b.size()];
        h = normal_form(ctx, concat(c1, to_word(ctx, g), c2));
        break;
      }
      case 1:
        h = normal_form(ctx, random_element(rng, ctx, g.length(), 2));
        break;
      default:
        break;
    }
    if (h.length() != g.length()) {
      continue;
    }
    ++pairs;
    Side s = g.syllables.back().side;
    auto e = principal_system_solve(ctx, g, h);
    if (e) {
      ++nonempty;
      infinite += e->subgroup.trivial() ? 0 : 1;
    }
    for (auto const& c : c_factor[static_cast<int>(s)]) {
      bool brute = brute_ps_solvable(ctx, g, h, ctx.embed(c, s));
      bool fast = e && coset_contains(move_to(ctx, *e, s), c);
      if (brute != fast) {
        ++mismatches;
      }
    }
  }
  std::ostringstream detail;
  detail << " " << pairs << " pairs (" << nonempty << " with E nonempty, " << infinite
         << " infinite), C-words up to length 6, mismatches: " << mismatches;
  return {mismatches == 0, detail.str()};
}

// Alternating products of 0..3 syllables of letter length 1..2.
std::vector<Word> small_elements(AmalgamContext const& ctx) {
  std::vector<Word> pieces[2];
  for (Side s : {Side::A, Side::B}) {
    for (auto const& w : ball(ctx.alphabet(s), 2)) {
      if (!w.empty()) {
        pieces[static_cast<int>(s)].push_back(ctx.embed(w, s));
      }
    }
  }
  std::vector<Word> out{Word(ctx.ambient())};
  std::function<void(Word const&, Side, int)> grow = [&](Word const& w, Side s, int left) {
    if (left == 0) {
      return;
    }
    for (auto const& p : pieces[static_cast<int>(s)]) {
      Word next = concat(w, p);
      out.push_back(next);
      grow(next, other(s), left - 1);
    }
  };
  grow(Word(ctx.ambient()), Side::A, 3);
  grow(Word(ctx.ambient()), Side::B, 3);
  return out;
}

Outcome criterion5() {
  auto const& ctx = ctx1();
  bool spots = !classify(ctx, parse_word("a", ctx.ambient())).regular()
               && !classify(ctx, parse_word("b", ctx.ambient())).regular()
               && classify(ctx, parse_word("d", ctx.ambient())).regular();
  BlackHoleOracle oracle(ctx, 3, 5);
  std::unordered_map<std::string, bool> seen;
  std::size_t disagreements = 0;
  std::size_t singular = 0;
  std::string first_bad;
  for (auto const& g : small_elements(ctx)) {
    NormalForm nf = normal_form(ctx, g);
    auto [it, fresh] = seen.emplace(render(nf), false);
    if (!fresh) {
      continue;
    }
    bool fast = !classify(ctx, nf).regular();
    bool brute = oracle.singular(g);
    singular += fast ? 1 : 0;
    if (fast != brute) {
      ++disagreements;
      if (first_bad.empty()) {
        first_bad = " first: " + render(nf);
      }
    }
  }
  std::ostringstream detail;
  detail << " spot checks " << (spots ? "ok" : "FAILED") << "; " << seen.size()
         << " elements, " << singular << " singular, disagreements: " << disagreements
         << first_bad;
  return {spots && disagreements == 0, detail.str()};
}

Outcome criterion6() {
  auto const& ctx = ctx1();
  std::mt19937 rng(6);
  std::uniform_int_distribution<std::size_t> syl(1, 2);
  std::size_t found = 0;
  std::size_t built = 0;
  while (built < 200) {
    NormalForm g = normal_form(ctx, random_element(rng, ctx, 2 * syl(rng), 2));
    if (g.length() < 2 || g.syllables.front().side == g.syllables.back().side
        || !classify(ctx, g).regular()) {
      continue;
    }
    ++built;
    Word gw = to_word(ctx, g);
    Word z = random_word(rng, 4, ctx.ambient());
    Word v = conjugate(gw, z);
    auto out = conjugacy_search(ctx, gw, v);
    if (out.tag == Tag::Conjugate
        && normal_form(ctx, conjugate(gw, out.conjugator)) == normal_form(ctx, v)) {
      ++found;
    }
  }
  std::size_t negatives = 0;
  std::size_t wrong = 0;
  std::uniform_int_distribution<std::size_t> any(1, 3);
  while (negatives < 200) {
    Word u = random_element(rng, ctx, any(rng), 2);
    Word v = random_element(rng, ctx, any(rng), 2);
    if (brute_conjugacy_oracle(ctx, u, v, 6)) {
      continue;
    }
    ++negatives;
    if (conjugacy_search(ctx, u, v).tag == Tag::Conjugate) {
      ++wrong;
    }
  }
  std::ostringstream detail;
  detail << " conjugate pairs found: " << found << "/200; oracle-negative pairs "
         << "answered conjugate: " << wrong << "/200";
  return {found == 200 && wrong == 0, detail.str()};
}

Outcome criterion7() {
  AmalgamContext ctx = load_context_file(fixture_path("malnormal.group"));
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> syl(0, 4);
  std::size_t undecided = 0;
  for (int i = 0; i < 100; ++i) {
    Word u = random_element(rng, ctx, syl(rng), 2);
    Word v = std::bernoulli_distribution()(rng)
                 ? conjugate(u, random_word(rng, 4, ctx.ambient()))
                 : random_element(rng, ctx, syl(rng), 2);
    if (conjugacy_search(ctx, u, v).tag == Tag::Undecided) {
      ++undecided;
    }
  }
  std::size_t checked = 0;
  std::size_t singular = 0;
  std::uniform_int_distribution<std::size_t> longer(2, 5);
  while (checked < 500) {
    NormalForm g = normal_form(ctx, random_element(rng, ctx, longer(rng), 2));
    if (g.length() < 2) {
      continue;
    }
    ++checked;
    singular += classify(ctx, g).regular() ? 0 : 1;
  }
  std::ostringstream detail;
  detail << " undecided: " << undecided << "/100; singular among " << checked
         << " elements with l >= 2: " << singular;
  return {undecided == 0 && singular == 0, detail.str()};
}

Outcome criterion8() {
  auto const& ctx = ctx1();
  Word u = parse_word("a^2", ctx.ambient());
  Word v = parse_word("a^-1 a^2 a", ctx.ambient());
  bool undecided = conjugacy_search(ctx, u, v).tag == Tag::Undecided;
  std::ostringstream sink;
  int code = run_command({"conj", "-g", fixture_path("ex1.group"), "-u", "a^2", "-v",
                          "a^-1 a^2 a"},
                         sink, sink);
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::size_t> syl(0, 3);
  std::size_t confirmed = 0;
  std::size_t wrong = 0;
  while (confirmed < 200) {
    Word g = random_element(rng, ctx, syl(rng), 2);
    Word h = conjugate(g, random_word(rng, 3, ctx.ambient()));
    if (!brute_conjugacy_oracle(ctx, g, h, 3)) {
      continue;
    }
    ++confirmed;
    if (conjugacy_search(ctx, g, h).tag == Tag::NotConjugate) {
      ++wrong;
    }
  }
  std::ostringstream detail;
  detail << " (a^2, a^-1 a^2 a): " << (undecided ? "undecided" : "DECIDED")
         << ", exit " << code << "; not-conjugate on " << confirmed
         << " confirmed conjugate pairs: " << wrong;
  return {undecided && code == exit_code::kUndecided && wrong == 0, detail.str()};
}

struct Criterion {
  int number;
  Outcome (*run)();
  double limit_seconds;  // 0 for none
};

}  // namespace

int main() {
  Criterion const all[] = {{1, criterion1, 10}, {2, criterion2, 10}, {3, criterion3, 0},
                           {4, criterion4, 0},  {5, criterion5, 0},  {6, criterion6, 60},
                           {7, criterion7, 0},  {8, criterion8, 0}};
  int failed = 0;
  for (auto const& c : all) {
    auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (std::exception const& e) {
      out = {false, std::string(" exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_time = c.limit_seconds == 0 || secs < c.limit_seconds;
    bool pass = out.pass && in_time;
    failed += pass ? 0 : 1;
    std::printf("criterion %d: %s -%s [%.2f s%s]\n", c.number, pass ? "PASS" : "FAIL",
                out.detail.c_str(), secs,
                in_time ? "" : ", over the time limit");
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}

#include <random>
#include <set>

#include "amalgam/stallings.hpp"
#include "catch_amalgamated.hpp"

using namespace amalgam;

namespace {

AlphabetPtr abd() {
  static AlphabetPtr a = Alphabet::make({"a", "b", "d"});
  return a;
}
AlphabetPtr xyz() {
  static AlphabetPtr a = Alphabet::make({"x", "y", "z"});
  return a;
}

Word w(std::string_view text) { return parse_word(text, abd()); }

GeneratingTuple sub(std::initializer_list<std::string_view> gens,
                    AlphabetPtr const& al = abd()) {
  std::vector<Word> words;
  for (auto g : gens) {
    words.push_back(parse_word(g, al));
  }
  return GeneratingTuple::build(al, words);
}

Word random_word(std::mt19937& rng, std::size_t max_len, AlphabetPtr const& al) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::uint32_t> idx(0, static_cast<std::uint32_t>(al->size() - 1));
  std::bernoulli_distribution sign;
  std::vector<Letter> raw;
  std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) {
    raw.push_back(Letter{idx(rng), static_cast<std::int8_t>(sign(rng) ? 1 : -1)});
  }
  return Word(al, raw);
}

// Random product of at most `factors` generators and their inverses.
Word random_member(std::mt19937& rng, GeneratingTuple const& g, int factors) {
  std::uniform_int_distribution<int> count(0, factors);
  std::uniform_int_distribution<std::size_t> pick(0, g.generators().size() - 1);
  std::bernoulli_distribution sign;
  Word out(g.alphabet());
  for (int i = count(rng); i > 0; --i) {
    Word const& x = g.generators()[pick(rng)];
    out = concat(out, sign(rng) ? x : invert(x));
  }
  return out;
}

// All words of length <= n over the alphabet.
std::vector<Word> ball(AlphabetPtr const& al, std::size_t n) {
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
        out.push_back(Word::unchecked(al, raw));
      }
    }
    begin = end;
  }
  return out;
}

// Elements of <gens> reachable as products of at most `factors` generators.
std::set<std::vector<Letter>> enumerate_subgroup(GeneratingTuple const& g,
                                                 int factors) {
  std::set<std::vector<Letter>> seen{{}};
  std::vector<Word> frontier{Word(g.alphabet())};
  for (int i = 0; i < factors; ++i) {
    std::vector<Word> next;
    for (auto const& u : frontier) {
      for (auto const& x : g.generators()) {
        for (auto const& y : {x, invert(x)}) {
          Word v = concat(u, y);
          if (seen.insert(v.letters()).second) {
            next.push_back(v);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

}  // namespace

TEST_CASE("build folds the rose") {
  auto c = sub({"a^2", "b"});
  CHECK(c.graph().num_states() == 2);
  CHECK(c.graph().edges().size() == 3);
  CHECK(c.graph().rank() == 2);
  CHECK(c.graph().follow(0, Letter{1, 1}) == 0);
  CHECK(c.graph().follow(0, Letter{0, 1}) == 1);
  CHECK(c.graph().follow(1, Letter{0, 1}) == 0);

  auto single = sub({"a"});
  CHECK(single.graph().num_states() == 1);
  CHECK(single.graph().edges().size() == 1);
  auto dup = sub({"a", "a^-1"});
  CHECK(dup.graph().num_states() == 1);
  CHECK(dup.graph().edges().size() == 1);
  CHECK(dup.basis() == std::vector<Word>{w("a")});
  CHECK(sub({"a"}).basis() == std::vector<Word>{w("a")});

  auto trivial = sub({""});
  CHECK(trivial.trivial());
  CHECK(trivial.graph().num_states() == 1);
}

TEST_CASE("membership agrees with enumeration") {
  auto c = sub({"a^2", "b"});
  CHECK(contains(c, w("a^2 b")));
  CHECK_FALSE(contains(c, w("a")));
  CHECK(contains(c, w("")));
  // Products of at most one generator: the only length-1 members are b, b^-1.
  auto small = enumerate_subgroup(c, 1);
  for (auto const& u : ball(abd(), 1)) {
    bool in_oracle = small.count(u.letters()) > 0 || u.empty();
    if (u.size() == 1) {
      CHECK(contains(c, u) == in_oracle);
    }
  }
  // Exhaustive cross-check in the 3-ball against products of <= 6 generators,
  // which reach every member of length <= 3 here.
  auto oracle = enumerate_subgroup(sub({"a b", "b a^-1", "d^2 a"}), 6);
  auto h = sub({"a b", "b a^-1", "d^2 a"});
  for (auto const& u : ball(abd(), 3)) {
    if (oracle.count(u.letters())) {
      CHECK(contains(h, u));
    }
  }
}

TEST_CASE("coset representatives") {
  auto c = sub({"a^2", "b"});
  auto r1 = coset_rep(c, w("b^3"));
  CHECK(r1.rep.empty());
  CHECK(r1.head == w("b^3"));
  auto r2 = coset_rep(c, w("d a^4"));
  CHECK(r2.rep == w("d a^4"));
  CHECK(r2.head.empty());
  auto r3 = coset_rep(c, w("b^2 d"));
  CHECK(r3.rep == w("d"));
  CHECK(r3.head == w("b^2"));
}

TEST_CASE("basis and expressions") {
  auto c = sub({"a^2", "b"});
  REQUIRE(c.basis().size() == 2);
  CHECK(c.basis()[0] == w("b"));
  CHECK(c.basis()[1] == w("a^2"));
  auto e = express_in_basis(c, w("a^2 b"));
  CHECK(e.to_string() == "s2 s1");
  CHECK(express_in_basis(c, w("")).empty());
  CHECK(express_in_basis(c, w("b^-1")).to_string() == "s1^-1");
  CHECK(express_in_generators(c, w("a^2 b a^2")).to_string() == "t1 t2 t1");
  CHECK(express_in_generators(c, w("")).empty());
  auto ab = sub({"a b", "b"});
  auto ea = express_in_generators(ab, w("a"));
  CHECK(ea.to_string() == "t1 t2^-1");
  CHECK_THROWS_AS(express_in_basis(c, w("a")), NotAMember);
  CHECK_THROWS_AS(express_in_generators(c, w("d")), NotAMember);
}

TEST_CASE("pullback") {
  auto i = pullback(sub({"a^2", "b"}), sub({"a^3"}));
  CHECK(contains(i, w("a^6")));
  CHECK_FALSE(contains(i, w("a^2")));
  CHECK_FALSE(contains(i, w("a^3")));
  CHECK(i.basis() == std::vector<Word>{w("a^6")});
  auto c = sub({"a^2", "b"});
  auto self = pullback(c, c);
  CHECK(self.graph().num_states() == c.graph().num_states());
  CHECK(self.basis() == c.basis());
  CHECK(pullback(sub({"a"}), sub({"b"})).trivial());
}

TEST_CASE("conjugate graphs") {
  auto b = conjugate_graph(sub({"b"}), w("a"));
  CHECK(b.basis() == std::vector<Word>{w("a^-1 b a")});
  auto c = sub({"a^2", "b"});
  auto cz = conjugate_graph(c, w("b a^2"));
  CHECK(cz.basis() == c.basis());
  auto inter = pullback(conjugate_graph(c, w("a")), c);
  CHECK(contains(inter, w("a^2")));
  CHECK_FALSE(contains(inter, w("a^-1 b a")));
  CHECK(inter.basis() == std::vector<Word>{w("a^2")});
}

TEST_CASE("coset intersection") {
  auto k = sub({"a^2", "b"});
  auto l = sub({"a^2"});
  auto r = coset_intersection(k, w("d"), l, w("d"));
  REQUIRE(r);
  CHECK(r->element == w("d"));
  CHECK(r->subgroup.basis() == std::vector<Word>{w("a^2")});

  auto self = coset_intersection(k, w("b d a"), k, w("b d a"));
  REQUIRE(self);
  CHECK(self->element == coset_rep(k, w("d a")).rep);

  CHECK_FALSE(coset_intersection(sub({"a"}), w("b"), sub({"a"}), w("d")));

  auto kb = coset_intersection(k, w("b"), l, w("b"));
  REQUIRE(kb);
  CHECK(contains(l, concat(kb->element, w("b^-1"))));
  CHECK(contains(k, concat(kb->element, w("b^-1"))));
}

TEST_CASE("conjugacy into a subgroup") {
  auto c = sub({"a^2", "b"});
  auto r = conjugacy_into(c, w("a^-1 b a"));
  REQUIRE(r);
  CHECK(r->target == w("b"));
  CHECK(r->conjugator == w("a"));
  CHECK_FALSE(conjugacy_into(c, w("d")));
  auto cb = sub({"x", "y^2"}, xyz());
  auto y2 = parse_word("y^2", xyz());
  auto r2 = conjugacy_into(cb, y2);
  REQUIRE(r2);
  CHECK(r2->target == y2);
  CHECK(r2->conjugator.empty());
  // y^-1 x y loops only at the middle state of the y-cycle.
  auto yxy = parse_word("y^-1 x y", xyz());
  auto r3 = conjugacy_into(cb, yxy);
  REQUIRE(r3);
  CHECK(conjugate(r3->target, r3->conjugator) == yxy);
  CHECK(contains(cb, r3->target));
}

TEST_CASE("double transversals and malnormality") {
  auto c = sub({"a^2", "b"});
  CHECK(double_transversal(c) == std::vector<Word>{w(""), w("a")});
  CHECK(double_transversal(sub({"b"})) == std::vector<Word>{w("")});
  CHECK(double_transversal(sub({"a", "b", "d"})) == std::vector<Word>{w("")});
  CHECK(is_malnormal(sub({"b"})));
  CHECK_FALSE(is_malnormal(c));
  CHECK(is_malnormal(sub({"a", "b", "d"})));
  auto ab = Alphabet::make({"a", "b"});
  CHECK(is_malnormal(sub({"b"}, ab)));
  CHECK_FALSE(is_malnormal(sub({"a^2", "b"}, ab)));
}

TEST_CASE("z subgroups and the z set") {
  auto c = sub({"a^2", "b"});
  auto za = z_subgroup(c, w("a"));
  CHECK(contains(za, w("a^2")));
  CHECK_FALSE(contains(za, w("b")));
  CHECK(z_subgroup(c, w("")).basis() == c.basis());
  CHECK(z_subgroup(sub({"b"}), w("a")).trivial());

  CHECK(in_generalized_normalizer(c, w("a")));
  CHECK_FALSE(in_generalized_normalizer(c, w("d")));
  CHECK(in_generalized_normalizer(c, w("b a^2")));

  CHECK(in_z_set(c, w("a^2")));
  CHECK_FALSE(in_z_set(c, w("b")));
  CHECK(in_z_set(c, w("b a^4 b^-1")));
  CHECK_FALSE(in_z_set(sub({"b"}), w("b^3")));
  CHECK_THROWS_AS(in_z_set(c, w("a")), NotAMember);

  ZSetIndex index(c);
  auto wit = index.find(w("b a^2 b^-1"));
  REQUIRE(wit);
  CHECK(wit->t == w("a"));
  CHECK(conjugate(wit->target, wit->conjugator) == w("b a^2 b^-1"));
  CHECK(contains(z_subgroup(c, wit->t), wit->target));
}

TEST_CASE("stallings properties") {
  std::mt19937 rng(2024);
  std::vector<GeneratingTuple> subs{
      sub({"a^2", "b"}), sub({"a b", "b"}), sub({"a b a^-1", "d^2", "b d"}),
      sub({"a^3 b", "b^-2 a", "d a d^-1"}), sub({"b"})};
  for (auto const& h : subs) {
    CHECK(h.graph().check_invariants());
    for (int i = 0; i < 100; ++i) {
      Word m = random_member(rng, h, 6);
      REQUIRE(contains(h, m));
      CHECK(substitute(express_in_generators(h, m), h.generators(), h.alphabet()) == m);
      CHECK(substitute(express_in_basis(h, m), h.basis(), h.alphabet()) == m);

      Word u = random_word(rng, 8, abd());
      auto cr = coset_rep(h, u);
      CHECK(concat(cr.head, cr.rep) == u);
      CHECK(contains(h, cr.head));
      CHECK(cr.rep.size() <= u.size());
      CHECK(cr.head.size() <= u.size() + 2 * h.graph().diameter());
      CHECK(coset_rep(h, concat(m, u)).rep == cr.rep);
    }
  }
}

TEST_CASE("coset representatives are shortest in their coset") {
  auto h = sub({"a^2", "b", "d a d"});
  auto words = ball(abd(), 4);
  for (auto const& u : words) {
    auto rep = coset_rep(h, u).rep;
    // Any r in the coset H u with |r| < |rep| would be a ball element with
    // the same canonical representative.
    for (auto const& r : words) {
      if (r.size() >= rep.size()) {
        break;
      }
      CHECK_FALSE(contains(h, concat(r, invert(u))));
    }
  }
}

TEST_CASE("pullback and conjugate graphs agree with membership") {
  std::mt19937 rng(99);
  std::vector<GeneratingTuple> subs{sub({"a^2", "b"}), sub({"a^3", "b a"}),
                                    sub({"a b", "b d"}), sub({"d^2", "a"})};
  for (auto const& g1 : subs) {
    for (auto const& g2 : subs) {
      auto p = pullback(g1, g2);
      CHECK(p.graph().check_invariants());
      for (int i = 0; i < 100; ++i) {
        Word u = random_word(rng, 8, abd());
        if (i % 2 == 0) {
          u = random_member(rng, g1, 4);
        }
        CHECK(contains(p, u) == (contains(g1, u) && contains(g2, u)));
      }
    }
    for (int i = 0; i < 30; ++i) {
      Word z = random_word(rng, 5, abd());
      auto cz = conjugate_graph(g1, z);
      CHECK(cz.graph().check_invariants());
      Word m = random_member(rng, g1, 4);
      CHECK(contains(cz, conjugate(m, z)));
      Word u = random_word(rng, 6, abd());
      CHECK(contains(cz, u) == contains(g1, concat(z, u, invert(z))));
    }
  }
}

TEST_CASE("double transversal soundness and completeness") {
  std::vector<GeneratingTuple> subs{sub({"a^2", "b"}), sub({"a^2", "b a b^-1"}),
                                    sub({"a^3", "d"}), sub({"a b a", "d"})};
  auto words = ball(abd(), 5);
  for (auto const& h : subs) {
    auto t = double_transversal(h);
    REQUIRE(!t.empty());
    CHECK(t.front().empty());
    for (auto const& ti : t) {
      CHECK(in_generalized_normalizer(h, ti));
    }
    for (auto const& u : words) {
      if (!in_generalized_normalizer(h, u)) {
        continue;
      }
      bool covered = std::any_of(t.begin(), t.end(), [&](Word const& ti) {
        return same_double_coset(h, ti, u);
      });
      CHECK(covered);
    }
  }
}

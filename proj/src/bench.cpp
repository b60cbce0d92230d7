#include "amalgam/bench.hpp"

#include <chrono>
#include <cmath>
#include <random>

#include "amalgam/presentation.hpp"

namespace amalgam {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kMaxHead = 1 << 22;

void check(bool ok, std::string const& message) {
  if (!ok) {
    throw BenchParameterError(message);
  }
}

std::vector<double> ratios(std::vector<std::size_t> const& trace) {
  std::vector<double> out;
  for (std::size_t i = 1; i < trace.size(); ++i) {
    out.push_back(trace[i - 1] == 0 ? 0.0
                                    : static_cast<double>(trace[i])
                                          / static_cast<double>(trace[i - 1]));
  }
  return out;
}

BenchReport run_nf(AmalgamContext const& ctx, Word const& input,
                   RepPolicy const& policy, std::string subcase) {
  BenchReport r;
  r.subcase = std::move(subcase);
  r.policy = policy.name();
  r.input = input.to_string();
  r.input_length = input.size();
  r.k = syllable_decompose(ctx, input).size();
  r.bound = input.size() + 2 * ctx.max_diameter();
  auto start = Clock::now();
  NormalForm nf = normal_form(ctx, input, policy, &r.trace);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.final_head = nf.head.size();
  r.growth = ratios(r.trace);
  return r;
}

}  // namespace

std::string example_one_text(long p) {
  return "A: a b d\nB: x y z\nC: a^" + std::to_string(p) + " = x\nC: b = y^"
         + std::to_string(p) + "\n";
}

std::string example_two_text(long p) {
  return "A: a b\nB: x y\nC: a = y^-1 x y\nC: b^-1 a b = x^" + std::to_string(p)
         + "\n";
}

std::vector<BenchReport> bench_paper_ex1(long p, long m) {
  check(p >= 2 && m >= 1, "paper-ex1 needs p >= 2 and m >= 1");
  check(2.0 * static_cast<double>(m) * std::log2(static_cast<double>(p))
            <= std::log2(kMaxHead),
        "paper-ex1: p^(2m) exceeds 2^22");
  AmalgamContext ctx = load_context(example_one_text(p));
  Word zd = parse_word("z d", ctx.ambient());
  Word g(ctx.ambient());
  for (long i = 0; i < m; ++i) {
    g = concat(g, zd);
  }
  g = concat(g, parse_word("x", ctx.ambient()));
  return {run_nf(ctx, g, RepPolicy::paper_example_one(ctx, p), "paper-ex1"),
          run_nf(ctx, g, RepPolicy::canonical(), "paper-ex1")};
}

BenchReport bench_paper_ex2(long p, long n) {
  check(p >= 2 && n >= 1, "paper-ex2 needs p >= 2 and n >= 1");
  check(static_cast<double>(n) * std::log2(static_cast<double>(p))
            <= std::log2(kMaxHead),
        "paper-ex2: p^n exceeds 2^22");
  AmalgamContext ctx = load_context(example_two_text(p));
  Word by = parse_word("b y", ctx.ambient());
  Word power(ctx.ambient());
  for (long i = 0; i < n; ++i) {
    power = concat(power, by);
  }
  Word g = conjugate(parse_word("a", ctx.ambient()), power);
  BenchReport r = run_nf(ctx, g, RepPolicy::canonical(), "paper-ex2");
  long target = 1;
  for (long i = 0; i < n; ++i) {
    target *= p;
  }
  auto start = Clock::now();
  NormalForm lhs = normal_form(ctx, g);
  NormalForm rhs = normal_form(ctx, Word::power(ctx.ambient(), 0, target));
  r.seconds += std::chrono::duration<double>(Clock::now() - start).count();
  r.identity_holds = lhs == rhs;
  return r;
}

BenchReport bench_random(AmalgamContext const& ctx, std::size_t length,
                         std::size_t samples, std::uint32_t seed) {
  check(length >= 1 && length <= 10000, "random: length must be in 1..10000");
  check(samples >= 1 && samples <= 100000, "random: samples must be in 1..100000");
  std::mt19937 rng(seed);
  auto const& al = ctx.ambient();
  std::uniform_int_distribution<std::uint32_t> idx(
      0, static_cast<std::uint32_t>(al->size() - 1));
  std::bernoulli_distribution sign;
  BenchReport r;
  r.subcase = "random";
  r.policy = RepPolicy::canonical().name();
  r.input_length = length;
  r.samples = samples;
  r.bound = length + 2 * ctx.max_diameter();
  auto start = Clock::now();
  for (std::size_t i = 0; i < samples; ++i) {
    std::vector<Letter> raw;
    while (raw.size() < length) {
      Letter l{idx(rng), static_cast<std::int8_t>(sign(rng) ? 1 : -1)};
      if (raw.empty() || !raw.back().cancels(l)) {
        raw.push_back(l);
      }
    }
    Word w = Word::unchecked(al, std::move(raw));
    std::vector<std::size_t> trace;
    NormalForm nf = normal_form(ctx, w, RepPolicy::canonical(), &trace);
    r.k = std::max(r.k, syllable_decompose(ctx, w).size());
    r.final_head = std::max(r.final_head, nf.head.size());
    for (auto t : trace) {
      if (r.trace.empty() || t > r.trace.front()) {
        r.trace = {t};
      }
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return r;
}

}  // namespace amalgam

#ifndef AMALGAM_BENCH_HPP_
#define AMALGAM_BENCH_HPP_

// Head-length growth experiments for the normal form sweep.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "amalgam/normal_form.hpp"

namespace amalgam {

// A: a b d; B: x y z; C: a^p = x; C: b = y^p.
std::string example_one_text(long p);
// A: a b; B: x y; C: a = y^-1 x y; C: b^-1 a b = x^p.
std::string example_two_text(long p);

struct BenchReport {
  std::string subcase;
  std::string policy;
  std::string input;
  std::size_t input_length = 0;
  std::size_t k = 0;  // sweep steps (syllables of the input)
  std::vector<std::size_t> trace;
  std::vector<double> growth;  // trace[i] / trace[i-1]
  std::size_t final_head = 0;
  std::size_t bound = 0;  // |input| + M, M = 2 * max diameter
  std::optional<bool> identity_holds;  // paper-ex2 only
  std::size_t samples = 0;              // random only
  double seconds = 0;
};

// Raised for parameters outside the supported ranges.
class BenchParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// g = (z d)^m x under the adversarial policy, then under canonical.
std::vector<BenchReport> bench_paper_ex1(long p, long m);
// (b y)^-n a (b y)^n against a^(p^n).
BenchReport bench_paper_ex2(long p, long n);
// Random words of the given letter length over the ambient alphabet.
BenchReport bench_random(AmalgamContext const& ctx, std::size_t length,
                         std::size_t samples, std::uint32_t seed);

}  // namespace amalgam

#endif  // AMALGAM_BENCH_HPP_

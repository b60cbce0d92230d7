#include "amalgam/context.hpp"

#include <algorithm>

namespace amalgam {

struct AmalgamContext::Validated {
  AlphabetPtr x;
  AlphabetPtr y;
  AlphabetPtr g;
  std::vector<GeneratorPair> pairs;
  GeneratingTuple ca;
  GeneratingTuple cb;
  std::vector<Word> phi;  // basis(ca) -> words over Y
  std::vector<Word> psi;  // basis(cb) -> words over X
};

namespace {

std::vector<std::string> joined_names(Alphabet const& x, Alphabet const& y) {
  std::vector<std::string> names = x.names();
  for (auto const& n : y.names()) {
    if (x.find(n)) {
      throw InvalidPresentation(InvalidPresentation::npos,
                                "generator '" + n + "' appears in both factors");
    }
    names.push_back(n);
  }
  return names;
}

// Image of every basis element of `from` under the map sending the i-th
// generator of `from` to targets[i].
std::vector<Word> basis_table(GeneratingTuple const& from,
                              std::vector<Word> const& targets,
                              AlphabetPtr const& target_alphabet) {
  std::vector<Word> table;
  for (auto const& b : from.basis()) {
    table.push_back(
        substitute(express_in_generators(from, b), targets, target_alphabet));
  }
  return table;
}

void check_pairing(GeneratingTuple const& from, std::vector<Word> const& table,
                   std::vector<Word> const& sources,
                   std::vector<Word> const& targets,
                   AlphabetPtr const& target_alphabet, char const* map_name) {
  for (std::size_t i = 0; i < sources.size(); ++i) {
    Word image = substitute(express_in_basis(from, sources[i]), table,
                            target_alphabet);
    if (image != targets[i]) {
      throw InvalidPresentation(
          i, std::string("pairing does not extend to an isomorphism: ")
                 + map_name + "(" + sources[i].to_string() + ") = "
                 + (image.empty() ? "1" : image.to_string()) + " but C-line "
                 + std::to_string(i + 1) + " requires "
                 + targets[i].to_string());
    }
  }
}

}  // namespace

AmalgamContext::AmalgamContext(AlphabetPtr x, AlphabetPtr y,
                               std::vector<GeneratorPair> pairs)
    : AmalgamContext([&] {
        Validated v;
        v.g = Alphabet::make(joined_names(*x, *y));
        if (pairs.empty()) {
          throw InvalidPresentation(InvalidPresentation::npos,
                                    "at least one C-line is required");
        }
        std::vector<Word> us;
        std::vector<Word> vs;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          if (pairs[i].u.alphabet() != x || pairs[i].v.alphabet() != y) {
            throw AlphabetMismatch();
          }
          if (pairs[i].u.empty() || pairs[i].v.empty()) {
            throw InvalidPresentation(
                i, "C-line " + std::to_string(i + 1) + " pairs a trivial word");
          }
          us.push_back(pairs[i].u);
          vs.push_back(pairs[i].v);
        }
        v.ca = GeneratingTuple::build(x, us);
        v.cb = GeneratingTuple::build(y, vs);
        v.phi = basis_table(v.ca, vs, y);
        v.psi = basis_table(v.cb, us, x);
        check_pairing(v.ca, v.phi, us, vs, y, "phi");
        check_pairing(v.cb, v.psi, vs, us, x, "psi");
        v.x = std::move(x);
        v.y = std::move(y);
        v.pairs = std::move(pairs);
        return v;
      }()) {}

AmalgamContext::AmalgamContext(Validated v)
    : x_(std::move(v.x)),
      y_(std::move(v.y)),
      g_(std::move(v.g)),
      pairs_(std::move(v.pairs)),
      a_{v.ca, std::move(v.phi), {}, ZSetIndex(v.ca)},
      b_{v.cb, std::move(v.psi), {}, ZSetIndex(v.cb)},
      max_diameter_(std::max(v.ca.graph().diameter(), v.cb.graph().diameter())) {
  for (auto const& p : pairs_) {
    a_.generator_images.push_back(p.v);
    b_.generator_images.push_back(p.u);
  }
}

Word AmalgamContext::transfer(Word const& c, Side from) const {
  auto const& s = side(from);
  return substitute(express_in_basis(s.subgroup, c), s.basis_images,
                    alphabet(other(from)));
}

Word AmalgamContext::transfer_by_generators(Word const& c, Side from) const {
  auto const& s = side(from);
  return substitute(express_in_generators(s.subgroup, c), s.generator_images,
                    alphabet(other(from)));
}

Word AmalgamContext::embed(Word const& factor_word, Side s) const {
  if (factor_word.alphabet() != alphabet(s)) {
    throw AlphabetMismatch();
  }
  std::uint32_t offset = s == Side::A ? 0 : static_cast<std::uint32_t>(x_->size());
  std::vector<Letter> raw;
  raw.reserve(factor_word.size());
  for (Letter l : factor_word.letters()) {
    raw.push_back(Letter{l.index + offset, l.sign});
  }
  return Word::unchecked(g_, std::move(raw));
}

AmalgamContext build_context(AlphabetPtr x, AlphabetPtr y,
                             std::vector<GeneratorPair> pairs) {
  return AmalgamContext(std::move(x), std::move(y), std::move(pairs));
}

}  // namespace amalgam

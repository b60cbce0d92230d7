#include "amalgam/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace amalgam {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back().cancels(l)) {
    out.pop_back();
  } else {
    out.push_back(l);
  }
}

void check_same(Word const& u, Word const& v) {
  if (u.alphabet() != v.alphabet()) {
    throw AlphabetMismatch();
  }
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i])) {
      throw MalformedInput("invalid generator name '" + names_[i] + "'");
    }
    if (!index_.emplace(names_[i], i).second) {
      throw MalformedInput("duplicate generator name '" + names_[i] + "'");
    }
  }
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> names) {
  return std::shared_ptr<const Alphabet>(new Alphabet(std::move(names)));
}

std::shared_ptr<const Alphabet> Alphabet::numbered(std::string_view prefix,
                                                   std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    names.push_back(std::string(prefix) + std::to_string(i));
  }
  return make(std::move(names));
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

bool Alphabet::valid_name(std::string_view name) noexcept {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Word::Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

Word::Word(AlphabetPtr alphabet, std::span<Letter const> raw)
    : alphabet_(std::move(alphabet)) {
  letters_.reserve(raw.size());
  for (Letter l : raw) {
    if (l.index >= alphabet_->size() || (l.sign != 1 && l.sign != -1)) {
      throw MalformedInput("letter index " + std::to_string(l.index)
                           + " out of range for alphabet of size "
                           + std::to_string(alphabet_->size()));
    }
    push_reduced(letters_, l);
  }
}

Word::Word(AlphabetPtr alphabet, std::initializer_list<Letter> raw)
    : Word(std::move(alphabet), std::span<Letter const>(raw.begin(), raw.size())) {}

Word Word::unchecked(AlphabetPtr alphabet, std::vector<Letter> letters) {
  Word result(std::move(alphabet));
  result.letters_ = std::move(letters);
  return result;
}

Word Word::power(AlphabetPtr alphabet, std::size_t index, long exponent) {
  std::vector<Letter> raw(static_cast<std::size_t>(std::abs(exponent)),
                          Letter{static_cast<std::uint32_t>(index),
                                 static_cast<std::int8_t>(exponent < 0 ? -1 : 1)});
  return Word(std::move(alphabet), raw);
}

Word Word::prefix(std::size_t n) const {
  Word result(alphabet_);
  result.letters_.assign(letters_.begin(),
                         letters_.begin() + static_cast<std::ptrdiff_t>(n));
  return result;
}

Word Word::suffix_from(std::size_t n) const {
  Word result(alphabet_);
  result.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(n),
                         letters_.end());
  return result;
}

Word Word::rotated(std::size_t n) const {
  std::vector<Letter> raw(letters_);
  std::rotate(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(n),
              raw.end());
  return Word(alphabet_, raw);
}

std::string Word::to_string() const {
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < letters_.size()) {
    std::size_t j = i;
    while (j < letters_.size() && letters_[j] == letters_[i]) {
      ++j;
    }
    long exponent = static_cast<long>(j - i) * letters_[i].sign;
    if (!first) {
      out << ' ';
    }
    first = false;
    out << alphabet_->name(letters_[i].index);
    if (exponent != 1) {
      out << '^' << exponent;
    }
    i = j;
  }
  return out.str();
}

bool operator<(Word const& a, Word const& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a.letters_ < b.letters_;
}

Word free_reduce(std::span<Letter const> raw, AlphabetPtr const& alphabet) {
  return Word(alphabet, raw);
}

Word concat(Word const& u, Word const& v) {
  check_same(u, v);
  std::vector<Letter> raw;
  raw.reserve(u.size() + v.size());
  raw = u.letters();
  for (Letter l : v.letters()) {
    push_reduced(raw, l);
  }
  return Word::unchecked(u.alphabet(), std::move(raw));
}

Word concat(Word const& u, Word const& v, Word const& w) {
  return concat(concat(u, v), w);
}

Word invert(Word const& u) {
  std::vector<Letter> raw;
  raw.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) {
    raw.push_back(it->inverse());
  }
  return Word::unchecked(u.alphabet(), std::move(raw));
}

Word conjugate(Word const& h, Word const& g) {
  return concat(invert(g), h, g);
}

CyclicReduction cyclic_reduce(Word const& w) {
  auto const& l = w.letters();
  std::size_t i = 0;
  std::size_t j = l.size();
  while (j - i >= 2 && l[i].cancels(l[j - 1])) {
    ++i;
    --j;
  }
  std::vector<Letter> core(l.begin() + static_cast<std::ptrdiff_t>(i),
                           l.begin() + static_cast<std::ptrdiff_t>(j));
  return {Word(w.alphabet(), core), w.prefix(i)};
}

Word least_rotation(Word const& w) {
  std::size_t n = w.size();
  std::size_t best = 0;
  auto const& l = w.letters();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      Letter a = l[(r + k) % n];
      Letter b = l[(best + k) % n];
      if (a != b) {
        if (a < b) {
          best = r;
        }
        break;
      }
    }
  }
  return w.rotated(best);
}

std::optional<Word> free_conjugacy(Word const& u, Word const& v) {
  check_same(u, v);
  auto [cu, ku] = cyclic_reduce(u);
  auto [cv, kv] = cyclic_reduce(v);
  if (cu.size() != cv.size()) {
    return std::nullopt;
  }
  if (cu.empty()) {
    return Word(u.alphabet());
  }
  if (least_rotation(cu).letters() != least_rotation(cv).letters()) {
    return std::nullopt;
  }
  std::size_t n = cu.size();
  for (std::size_t j = 0; j < n; ++j) {
    bool match = true;
    for (std::size_t k = 0; k < n && match; ++k) {
      match = cu[(j + k) % n] == cv[k];
    }
    if (match) {
      // cv = cu[:j]^-1 cu cu[:j]
      Word z = concat(ku, cu.prefix(j), invert(kv));
      return z;
    }
  }
  return std::nullopt;
}

Word substitute(Word const& w, std::span<Word const> table,
                AlphabetPtr const& target) {
  if (table.size() != w.alphabet()->size()) {
    throw MalformedInput("substitution table is not total on the alphabet");
  }
  std::vector<Letter> raw;
  for (Letter l : w.letters()) {
    Word const& image = table[l.index];
    if (image.alphabet() != target) {
      throw AlphabetMismatch();
    }
    if (l.sign > 0) {
      for (Letter x : image.letters()) {
        push_reduced(raw, x);
      }
    } else {
      auto const& il = image.letters();
      for (auto it = il.rbegin(); it != il.rend(); ++it) {
        push_reduced(raw, it->inverse());
      }
    }
  }
  return Word::unchecked(target, std::move(raw));
}

Word parse_word(std::string_view text, AlphabetPtr const& alphabet) {
  std::vector<Letter> raw;
  std::size_t i = 0;
  auto is_space = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
  };
  bool identity_token = false;
  std::size_t tokens = 0;
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i]) && text[i] != '^') {
      ++i;
    }
    std::string_view name = text.substr(start, i - start);
    ++tokens;
    if (name == "1" && (i == text.size() || text[i] != '^')) {
      identity_token = true;
      continue;
    }
    if (!Alphabet::valid_name(name)) {
      throw WordSyntaxError(start + 1, "invalid token '" + std::string(name)
                                           + "' at column "
                                           + std::to_string(start + 1));
    }
    auto index = alphabet->find(name);
    if (!index) {
      throw WordSyntaxError(start + 1, "unknown generator '" + std::string(name)
                                           + "' at column "
                                           + std::to_string(start + 1));
    }
    long exponent = 1;
    if (i < text.size() && text[i] == '^') {
      std::size_t estart = ++i;
      while (i < text.size() && !is_space(text[i])) {
        ++i;
      }
      std::string_view digits = text.substr(estart, i - estart);
      if (!digits.empty() && digits.front() == '+') {
        digits.remove_prefix(1);
      }
      auto [ptr, ec] = std::from_chars(digits.data(),
                                       digits.data() + digits.size(), exponent);
      if (digits.empty() || ec != std::errc()
          || ptr != digits.data() + digits.size() || exponent == 0) {
        throw WordSyntaxError(estart + 1, "bad exponent '"
                                              + std::string(digits)
                                              + "' at column "
                                              + std::to_string(estart + 1));
      }
    }
    Letter l{static_cast<std::uint32_t>(*index),
             static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
    for (long k = 0; k < std::abs(exponent); ++k) {
      push_reduced(raw, l);
    }
  }
  if (identity_token && tokens > 1) {
    throw WordSyntaxError(1, "'1' must stand alone");
  }
  return Word(alphabet, raw);
}

}  // namespace amalgam

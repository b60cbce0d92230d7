#include "amalgam/presentation.hpp"

#include <fstream>
#include <sstream>

namespace amalgam {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// Names on an A:/B: line; `offset` is the 0-based column of `body`.
AlphabetPtr parse_names(std::string_view body, std::size_t line,
                        std::size_t offset) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < body.size()) {
    if (is_space(body[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < body.size() && !is_space(body[i])) {
      ++i;
    }
    std::string name(body.substr(start, i - start));
    if (!Alphabet::valid_name(name)) {
      throw PresentationSyntaxError(line, offset + start + 1,
                                    "invalid generator name '" + name + "'");
    }
    for (auto const& n : names) {
      if (n == name) {
        throw PresentationSyntaxError(line, offset + start + 1,
                                      "duplicate generator name '" + name + "'");
      }
    }
    names.push_back(std::move(name));
  }
  if (names.empty()) {
    throw PresentationSyntaxError(line, offset + 1, "no generators listed");
  }
  return Alphabet::make(std::move(names));
}

Word parse_at(std::string_view text, AlphabetPtr const& al, std::size_t line,
              std::size_t offset) {
  try {
    return parse_word(text, al);
  } catch (WordSyntaxError const& e) {
    std::string msg = e.what();
    // Drop the word-relative column suffix; the file position replaces it.
    auto at = msg.rfind(" at column ");
    if (at != std::string::npos) {
      msg.erase(at);
    }
    throw PresentationSyntaxError(line, offset + e.column(), msg);
  }
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::size_t first = 0;
    while (first < line.size() && is_space(line[first])) {
      ++first;
    }
    if (first == line.size()) {
      continue;
    }
    if (first + 1 >= line.size() || line[first + 1] != ':'
        || (line[first] != 'A' && line[first] != 'B' && line[first] != 'C')) {
      throw PresentationSyntaxError(line_no, first + 1,
                                    "expected 'A:', 'B:' or 'C:'");
    }
    char kind = line[first];
    std::size_t body_at = first + 2;
    std::string_view body = line.substr(body_at);
    if (kind == 'A' || kind == 'B') {
      AlphabetPtr& slot = kind == 'A' ? p.x : p.y;
      if (slot) {
        throw PresentationSyntaxError(line_no, first + 1,
                                      std::string("second ") + kind + ": line");
      }
      slot = parse_names(body, line_no, body_at);
      continue;
    }
    if (!p.x || !p.y) {
      throw PresentationSyntaxError(line_no, first + 1,
                                    "C: line before both A: and B: lines");
    }
    std::size_t eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw PresentationSyntaxError(line_no, body_at + 1,
                                    "expected 'X-word = Y-word'");
    }
    if (body.find('=', eq + 1) != std::string_view::npos) {
      throw PresentationSyntaxError(line_no, body_at + body.find('=', eq + 1) + 1,
                                    "more than one '='");
    }
    Word u = parse_at(body.substr(0, eq), p.x, line_no, body_at);
    Word v = parse_at(body.substr(eq + 1), p.y, line_no, body_at + eq + 1);
    p.pairs.push_back({std::move(u), std::move(v)});
    p.pair_lines.push_back(line_no);
  }
  if (!p.x || !p.y) {
    throw PresentationSyntaxError(line_no, 1, "missing A: or B: line");
  }
  return p;
}

std::string print_presentation(Presentation const& p) {
  std::ostringstream out;
  auto names = [&](Alphabet const& al) {
    for (std::size_t i = 0; i < al.size(); ++i) {
      out << (i ? " " : "") << al.name(i);
    }
  };
  out << "A: ";
  names(*p.x);
  out << "\nB: ";
  names(*p.y);
  out << '\n';
  for (auto const& pair : p.pairs) {
    out << "C: " << pair.u.to_string() << " = " << pair.v.to_string() << '\n';
  }
  return out.str();
}

AmalgamContext load_context(std::string_view text) {
  Presentation p = parse_presentation(text);
  try {
    return build_context(p.x, p.y, p.pairs);
  } catch (InvalidPresentation const& e) {
    if (e.pair_index() == InvalidPresentation::npos) {
      throw;
    }
    throw InvalidPresentation(e.pair_index(),
                              "line " + std::to_string(p.pair_lines[e.pair_index()])
                                  + ": " + e.what());
  }
}

AmalgamContext load_context_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw MalformedInput("cannot read group file '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_context(buf.str());
}

}  // namespace amalgam

#include "amalgam/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "amalgam/bench.hpp"
#include "amalgam/conjugacy.hpp"
#include "amalgam/presentation.hpp"
#include "amalgam/regularity.hpp"

namespace amalgam {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string group;
  std::string word;
  std::string u;
  std::string v;
  std::string policy = "canonical";
  std::string subcase;
  bool trace = false;
  bool json = false;
  bool modified = false;
  std::optional<std::size_t> oracle;
  long p = 2;
  long m = 1;
  long n = 1;
  std::size_t length = 20;
  std::size_t samples = 100;
  std::uint32_t seed = 1;
};

// One command's answer, printed either as text lines or as a flat JSON object.
struct Result {
  std::string verdict = "ok";
  std::optional<NormalForm> nf;
  std::string head;
  std::string conjugator;
  std::vector<std::size_t> trace;
  std::string reason;
  Json extra = Json::object();
  std::vector<std::string> text;
  int code = exit_code::kOk;
};

std::string show(Word const& w) { return w.empty() ? "1" : w.to_string(); }

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw MalformedInput("cannot read group file " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RepPolicy parse_policy(AmalgamContext const& ctx, std::string const& text) {
  if (text == "canonical") {
    return RepPolicy::canonical();
  }
  std::string const prefix = "paper-ex1";
  if (text.rfind(prefix, 0) != 0) {
    throw MalformedInput("unknown policy '" + text + "'");
  }
  long p = 0;
  if (text == prefix) {
    // The exponent of the first X-word, a^p.
    p = static_cast<long>(ctx.pairs().front().u.size());
  } else if (text.size() > prefix.size() + 1 && text[prefix.size()] == ':') {
    std::string digits = text.substr(prefix.size() + 1);
    if (!std::all_of(digits.begin(), digits.end(),
                     [](unsigned char ch) { return std::isdigit(ch); })
        || digits.size() > 9) {
      throw MalformedInput("bad policy parameter in '" + text + "'");
    }
    p = std::stol(digits);
  } else {
    throw MalformedInput("unknown policy '" + text + "'");
  }
  return RepPolicy::paper_example_one(ctx, p);
}

std::string join(std::vector<std::size_t> const& xs) {
  std::string out;
  for (auto x : xs) {
    out += (out.empty() ? "" : " ") + std::to_string(x);
  }
  return out;
}

std::string join(std::vector<Word> const& ws) {
  std::string out;
  for (auto const& w : ws) {
    out += (out.empty() ? "" : ", ") + show(w);
  }
  return out;
}

Json word_list(std::vector<Word> const& ws) {
  Json out = Json::array();
  for (auto const& w : ws) {
    out.push_back(w.to_string());
  }
  return out;
}

Result cmd_validate(Options const& o) {
  std::string text = read_file(o.group);
  Presentation pres = parse_presentation(text);
  AmalgamContext ctx = load_context(text);
  Result r;
  r.verdict = "valid";
  std::size_t rank = ctx.basis(Side::A).size();
  r.reason = "C is free of rank " + std::to_string(rank) + "; M = "
             + std::to_string(2 * ctx.max_diameter());
  r.extra["rank"] = rank;
  r.extra["M"] = 2 * ctx.max_diameter();
  r.text.push_back("valid");
  std::istringstream lines(print_presentation(pres));
  for (std::string line; std::getline(lines, line);) {
    r.text.push_back(line);
  }
  r.text.push_back("rank of C: " + std::to_string(rank));
  r.text.push_back("M: " + std::to_string(2 * ctx.max_diameter()));
  return r;
}

Result cmd_nf(Options const& o) {
  AmalgamContext ctx = load_context_file(o.group);
  RepPolicy policy = parse_policy(ctx, o.policy);
  Word w = parse_word(o.word, ctx.ambient());
  Result r;
  std::vector<std::size_t> trace;
  r.nf = normal_form(ctx, w, policy, &trace);
  r.text.push_back(render(*r.nf));
  if (o.trace) {
    r.trace = trace;
    r.text.push_back("trace: " + join(trace));
  }
  r.reason = "policy " + policy.name();
  return r;
}

Result cmd_reduce(Options const& o) {
  AmalgamContext ctx = load_context_file(o.group);
  Word w = parse_word(o.word, ctx.ambient());
  Result r;
  r.nf = reduced_form(ctx, syllable_decompose(ctx, w));
  r.text.push_back(render(*r.nf));
  r.reason = "syllable length " + std::to_string(r.nf->length());
  return r;
}

Result cmd_cyclic(Options const& o) {
  AmalgamContext ctx = load_context_file(o.group);
  RepPolicy policy = parse_policy(ctx, o.policy);
  Word w = parse_word(o.word, ctx.ambient());
  CyclicForm cf = cyclic_form(ctx, w, policy, !o.modified);
  Result r;
  bool reduced = cf.complete || cf.form.length() != 1;
  r.verdict = reduced ? "cyclically-reduced" : "partial";
  r.nf = cf.form;
  r.conjugator = cf.conjugator.to_string();
  r.reason = "cyclic length " + std::to_string(cf.form.length());
  if (!reduced) {
    r.reason += "; conjugacy into C was not checked";
  }
  r.text.push_back(render(cf.form));
  r.text.push_back("conjugator: " + show(cf.conjugator));
  r.text.push_back(r.reason);
  return r;
}

char const* witness_name(RegularityReport::Witness w) {
  switch (w) {
    case RegularityReport::Witness::BadPair:
      return "bad-pair";
    case RegularityReport::Witness::Normalizer:
      return "normalizer";
    case RegularityReport::Witness::ZSet:
      return "z-set";
    case RegularityReport::Witness::None:
      break;
  }
  return "none";
}

Result cmd_classify(Options const& o) {
  AmalgamContext ctx = load_context_file(o.group);
  RepPolicy policy = parse_policy(ctx, o.policy);
  Word w = parse_word(o.word, ctx.ambient());
  Result r;
  r.nf = normal_form(ctx, w, policy);
  RegularityReport rep = classify(ctx, *r.nf);
  CRMembership cr = cr_membership(ctx, w, policy);
  r.verdict = rep.regular() ? "regular" : "singular";
  r.reason = rep.reason;
  r.conjugator = rep.conjugator.to_string();
  r.extra["witness_kind"] = witness_name(rep.kind);
  r.extra["witness"] = rep.element.to_string();
  r.extra["t"] = rep.t.to_string();
  r.extra["cr_class"] = cr_class_name(cr.cls);
  r.text.push_back(r.verdict);
  r.text.push_back("normal form: " + render(*r.nf));
  if (!rep.regular()) {
    r.text.push_back(std::string("witness (") + witness_name(rep.kind)
                     + "): " + show(rep.element));
    if (rep.kind == RegularityReport::Witness::ZSet) {
      r.text.push_back("t: " + show(rep.t));
      r.text.push_back("conjugator: " + show(rep.conjugator));
    }
  }
  r.text.push_back("reason: " + rep.reason);
  r.text.push_back(std::string("conjugacy class: ") + cr_class_name(cr.cls));
  return r;
}

Result cmd_transversal(Options const& o) {
  AmalgamContext ctx = load_context_file(o.group);
  Result r;
  for (Side s : {Side::A, Side::B}) {
    std::string name = side_name(s);
    r.extra["transversal_" + name] = word_list(ctx.transversal(s));
    r.extra["malnormal_" + name] = ctx.malnormal(s);
    r.text.push_back(name + ": " + join(ctx.transversal(s)));
    r.text.push_back("malnormal in " + name + ": "
                     + (ctx.malnormal(s) ? "yes" : "no"));
  }
  r.reason = "double transversals of C with the trivial coset first";
  return r;
}

Result cmd_conj(Options const& o) {
  AmalgamContext ctx = load_context_file(o.group);
  RepPolicy policy = parse_policy(ctx, o.policy);
  Word u = parse_word(o.u, ctx.ambient());
  Word v = parse_word(o.v, ctx.ambient());
  ConjugacyOutcome out = conjugacy_search(ctx, u, v, policy);
  if (out.tag == ConjugacyOutcome::Tag::Undecided && o.oracle) {
    if (auto z = brute_conjugacy_oracle(ctx, u, v, *o.oracle, policy)) {
      out = {ConjugacyOutcome::Tag::Conjugate, *z,
             "found by bounded search up to length " + std::to_string(*o.oracle)
                 + " after: " + out.reason};
    } else {
      out.reason += "; bounded search up to length " + std::to_string(*o.oracle)
                    + " found no conjugator";
    }
  }
  Result r;
  r.verdict = tag_name(out.tag);
  r.reason = out.reason;
  r.text.push_back(r.verdict);
  if (out.tag == ConjugacyOutcome::Tag::Conjugate) {
    r.conjugator = out.conjugator.to_string();
    r.text.push_back("conjugator: " + show(out.conjugator));
  }
  r.text.push_back("reason: " + out.reason);
  if (out.tag == ConjugacyOutcome::Tag::Undecided) {
    r.code = exit_code::kUndecided;
  }
  return r;
}

Json report_json(BenchReport const& b) {
  Json j;
  j["subcase"] = b.subcase;
  j["policy"] = b.policy;
  j["input"] = b.input;
  j["input_length"] = b.input_length;
  j["k"] = b.k;
  j["trace"] = b.trace;
  j["growth"] = b.growth;
  j["final_head"] = b.final_head;
  j["bound"] = b.bound;
  j["within_bound"] = b.final_head <= b.bound;
  if (b.identity_holds) {
    j["identity_holds"] = *b.identity_holds;
  }
  if (b.samples) {
    j["samples"] = b.samples;
  }
  j["seconds"] = b.seconds;
  return j;
}

std::vector<std::string> report_text(BenchReport const& b) {
  std::vector<std::string> out;
  std::ostringstream line;
  line << b.subcase << " [" << b.policy << "]";
  if (!b.input.empty()) {
    line << " input: " << b.input;
  }
  out.push_back(line.str());
  if (b.samples) {
    out.push_back("  samples: " + std::to_string(b.samples) + " of length "
                  + std::to_string(b.input_length));
  } else {
    out.push_back("  |input| = " + std::to_string(b.input_length)
                  + ", k = " + std::to_string(b.k));
  }
  if (!b.trace.empty() && !b.samples) {
    out.push_back("  trace: " + join(b.trace));
    std::ostringstream g;
    g << std::fixed << std::setprecision(2);
    for (auto x : b.growth) {
      g << ' ' << x;
    }
    out.push_back("  growth:" + g.str());
  }
  out.push_back("  " + std::string(b.samples ? "max head: " : "final head: ")
                + std::to_string(b.final_head) + " (|input| + M = "
                + std::to_string(b.bound) + ")");
  if (b.identity_holds) {
    out.push_back(std::string("  identity: ") + (*b.identity_holds ? "holds" : "FAILS"));
  }
  std::ostringstream t;
  t << "  time: " << std::scientific << std::setprecision(3) << b.seconds << " s";
  out.push_back(t.str());
  return out;
}

Result cmd_bench(Options const& o) {
  std::vector<BenchReport> reports;
  if (o.subcase == "paper-ex1") {
    reports = bench_paper_ex1(o.p, o.m);
  } else if (o.subcase == "paper-ex2") {
    reports.push_back(bench_paper_ex2(o.p, o.n));
  } else {
    AmalgamContext ctx = o.group.empty() ? load_context(example_one_text(2))
                                         : load_context_file(o.group);
    reports.push_back(bench_random(ctx, o.length, o.samples, o.seed));
  }
  Result r;
  r.trace = reports.front().trace;
  r.reason = "head = " + std::to_string(reports.front().final_head);
  if (reports.front().identity_holds) {
    r.verdict = *reports.front().identity_holds ? "identity-holds" : "identity-fails";
  }
  r.extra["reports"] = Json::array();
  for (auto const& b : reports) {
    r.extra["reports"].push_back(report_json(b));
    for (auto& line : report_text(b)) {
      r.text.push_back(std::move(line));
    }
  }
  return r;
}

Json to_json(Result const& r) {
  Json j;
  j["verdict"] = r.verdict;
  j["normal_form"] = Json::array();
  if (r.nf) {
    for (auto const& s : r.nf->syllables) {
      j["normal_form"].push_back({{"side", side_name(s.side)}, {"word", s.word.to_string()}});
    }
  }
  j["head"] = r.nf ? r.nf->head.to_string() : r.head;
  j["conjugator"] = r.conjugator;
  j["trace"] = r.trace;
  j["reason"] = r.reason;
  for (auto const& [key, value] : r.extra.items()) {
    j[key] = value;
  }
  return j;
}

}  // namespace

int run_command(std::vector<std::string> const& args, std::ostream& out,
                std::ostream& err) {
  Options o;
  CLI::App app{"Normal forms and conjugacy in amalgamated free products of free groups",
               "amalgam"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "JSON output"); };
  auto group = [&](CLI::App* sub) {
    sub->add_option("-g,--group", o.group, "group file")->required();
  };
  auto word = [&](CLI::App* sub) {
    sub->add_option("-w,--word", o.word, "word, e.g. \"a^2 b^-1 d\"")->required();
  };
  auto policy = [&](CLI::App* sub) {
    sub->add_option("--policy", o.policy, "canonical | paper-ex1 | paper-ex1:P");
  };

  auto* validate = app.add_subcommand("validate", "parse and validate a group file");
  group(validate);
  common(validate);

  auto* nf = app.add_subcommand("nf", "normal form");
  group(nf);
  word(nf);
  policy(nf);
  nf->add_flag("--trace", o.trace, "report |c_j| after each sweep step");
  common(nf);

  auto* reduce = app.add_subcommand("reduce", "reduced form");
  group(reduce);
  word(reduce);
  common(reduce);

  auto* cyclic = app.add_subcommand("cyclic", "cyclically reduced form");
  group(cyclic);
  word(cyclic);
  policy(cyclic);
  cyclic->add_flag("--modified", o.modified, "skip the conjugacy-into-C check");
  common(cyclic);

  auto* cls = app.add_subcommand("classify", "regular or singular");
  group(cls);
  word(cls);
  policy(cls);
  common(cls);

  auto* transversal = app.add_subcommand("transversal", "double transversals of C");
  group(transversal);
  common(transversal);

  auto* conj = app.add_subcommand("conj", "conjugacy search");
  group(conj);
  conj->add_option("-u", o.u, "first word")->required();
  conj->add_option("-v", o.v, "second word")->required();
  policy(conj);
  conj->add_option("--oracle", o.oracle,
                   "on undecided, search conjugators up to this length");
  common(conj);

  auto* bench = app.add_subcommand("bench", "head-length growth experiments");
  bench->add_option("subcase", o.subcase, "paper-ex1 | paper-ex2 | random")
      ->required()
      ->check(CLI::IsMember({"paper-ex1", "paper-ex2", "random"}));
  bench->add_option("-g,--group", o.group, "group file for random");
  bench->add_option("--p", o.p, "p");
  bench->add_option("--m", o.m, "m for paper-ex1");
  bench->add_option("--n", o.n, "n for paper-ex2");
  bench->add_option("--length", o.length, "word length for random");
  bench->add_option("--samples", o.samples, "sample count for random");
  bench->add_option("--seed", o.seed, "seed for random");
  common(bench);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  auto fail = [&](int code, std::string const& message) {
    err << "error: " << message << '\n';
    if (o.json) {
      Result r;
      r.verdict = "error";
      r.reason = message;
      out << to_json(r).dump(2) << '\n';
    }
    return code;
  };

  try {
    Result r;
    if (validate->parsed()) {
      r = cmd_validate(o);
    } else if (nf->parsed()) {
      r = cmd_nf(o);
    } else if (reduce->parsed()) {
      r = cmd_reduce(o);
    } else if (cyclic->parsed()) {
      r = cmd_cyclic(o);
    } else if (cls->parsed()) {
      r = cmd_classify(o);
    } else if (transversal->parsed()) {
      r = cmd_transversal(o);
    } else if (conj->parsed()) {
      r = cmd_conj(o);
    } else {
      r = cmd_bench(o);
    }
    if (o.json) {
      out << to_json(r).dump(2) << '\n';
    } else {
      for (auto const& line : r.text) {
        out << line << '\n';
      }
    }
    return r.code;
  } catch (InvalidPresentation const& e) {
    return fail(exit_code::kInvalidPresentation, e.what());
  } catch (std::invalid_argument const& e) {
    return fail(exit_code::kUsage, e.what());
  } catch (std::exception const& e) {
    return fail(1, std::string("internal error: ") + e.what());
  }
}

}  // namespace amalgam

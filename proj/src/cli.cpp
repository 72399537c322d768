#include "palsub/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "palsub/classify.hpp"
#include "palsub/corpus.hpp"
#include "palsub/decompose.hpp"
#include "palsub/errors.hpp"
#include "palsub/serialize.hpp"

namespace palsub::cli {

namespace {

enum class Command { Analyze, Classify, Derive, Decompose, Generate, Examples };

struct RunConfig {
  Command command = Command::Examples;
  std::string literal;  // positional word or morphism literal
  std::string spec;
  std::string seed;
  std::string outer;
  std::string example;
  std::string file;
  std::string at;
  std::size_t n = 4096;
  std::size_t depth = 12;
  std::size_t cmp_len = 4096;
  std::optional<std::size_t> bound;
  std::size_t marker_bound = 64;
  std::optional<std::size_t> verify_length;
  bool finite_defect = false;
  std::string format = "json";
};

// Resolves --spec/--seed/--outer, --example or --file into a word spec.
MorphicWordSpec load_spec(const RunConfig& c) {
  const int sources = !c.spec.empty() + !c.example.empty() + !c.file.empty();
  if (sources != 1)
    throw ParseError("exactly one of --spec, --example or --file is required", 1, 0);
  if (!c.example.empty()) return load_example_spec(c.example);

  std::size_t line = 1;
  std::string text = c.file.empty() ? c.spec : read_literal_file(c.file, line);
  if (text.find('@') != std::string::npos) return parse_spec(text, line);

  Morphism inner = parse_morphism(text, nullptr, line);
  Letter seed = 0;
  if (!c.seed.empty()) {
    auto s = inner.domain().find(c.seed);
    if (!s) throw ParseError("seed '" + c.seed + "' is not in the alphabet", 1, 0);
    seed = *s;
  }
  std::optional<Morphism> outer;
  if (!c.outer.empty()) outer = parse_morphism(c.outer, &inner.domain());
  return MorphicWordSpec(std::move(inner), seed, std::move(outer));
}

void emit(std::ostream& out, const Json& j, const RunConfig& c) {
  if (c.format == "json") {
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : j.items())
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

int analyze(const RunConfig& c, std::ostream& out) {
  const bool positional = !c.literal.empty();
  if (positional && (!c.spec.empty() || !c.example.empty() || !c.file.empty()))
    throw ParseError("give either a word literal or a spec, not both", 1, 0);
  std::optional<Word> word;
  if (positional) {
    word = parse_word(c.literal);
  } else if (!c.file.empty()) {
    std::size_t line = 1;
    std::string text = read_literal_file(c.file, line);
    if (text.find("->") == std::string::npos) {
      try {
        word = parse_word(text);
      } catch (const ParseError& e) {
        throw ParseError("bad word literal", line, e.column());
      }
    }
  }
  if (!word) {
    MorphicWordSpec spec = load_spec(c);
    word = spec.prefix(c.n);
  }
  emit(out, analysis_json(word->view(), word->alphabet()), c);
  return kOk;
}

int classify_cmd(const RunConfig& c, std::ostream& out) {
  std::optional<Morphism> f;
  if (!c.example.empty()) {
    f = load_example_morphism(c.example);
  } else if (!c.file.empty()) {
    std::size_t line = 1;
    std::string text = read_literal_file(c.file, line);
    f = parse_morphism(text, nullptr, line);
  } else if (!c.literal.empty()) {
    f = parse_morphism(c.literal);
  } else {
    throw ParseError("classify needs a morphism literal", 1, 0);
  }
  Json j = to_json(classify(*f, c.bound));
  if (c.format == "json") {
    out << j.dump(2) << '\n';
    return kOk;
  }
  out << "morphism: " << format_morphism(*f) << '\n';
  out << "P: " << (j["in_P"].get<bool>() ? "yes" : "no") << '\n';
  out << "extended P: " << (j["in_extended_P"].get<bool>() ? "yes" : "no") << '\n';
  out << "P_ret: " << (j["in_P_ret"].get<bool>() ? "yes (marker " + j["marker"].get<std::string>() + ")" : "no")
      << '\n';
  out << "P': " << j["in_P_prime"].get<std::string>() << '\n';
  return kOk;
}

int derive(const RunConfig& c, std::ostream& out) {
  auto spec = std::make_shared<MorphicWordSpec>(load_spec(c));
  Word u = c.at.empty() ? spec->prefix(1) : parse_word(spec->alphabet(), c.at);
  DerivationLimits limits;
  limits.initial_length = c.n;
  auto result = derived_word(spec, u, limits);
  emit(out, to_json(result.structure), c);
  return kOk;
}

int decompose(const RunConfig& c, std::ostream& out) {
  MorphicWordSpec spec = load_spec(c);
  DecomposeOptions options;
  options.depth = c.depth;
  options.cmp_len = c.cmp_len;
  options.conjugator_bound = c.bound;
  options.marker_bound = c.marker_bound;
  DecompositionCertificate cert =
      c.finite_defect ? decompose_finite_defect(spec, options) : decompose_rich(spec, options);
  Json j = to_json(cert);
  if (c.verify_length) j["reverification"] = to_json(verify_certificate(cert, *c.verify_length));
  if (c.format == "json") {
    out << j.dump(2) << '\n';
  } else {
    out << "status: " << j["status"].get<std::string>() << '\n';
    out << "m: " << cert.m << "\nn: " << cert.n << '\n';
    out << "h: " << format_morphism(cert.h) << '\n';
    out << "g: " << format_morphism(cert.g) << '\n';
    if (cert.ret_factor) out << "ret_factor: " << format_morphism(*cert.ret_factor) << '\n';
    for (const auto& check : cert.verification.checks)
      out << "check " << check.name << ": " << (check.passed ? "pass" : "FAIL " + check.detail) << '\n';
  }
  return cert.status == CertificateStatus::Failed ? kDomainError : kOk;
}

int generate(const RunConfig& c, std::ostream& out) {
  MorphicWordSpec spec = load_spec(c);
  Word w = spec.prefix(c.n);
  if (c.format == "json")
    out << Json{{"length", w.size()}, {"prefix", w.str()}}.dump(2) << '\n';
  else
    out << w.str() << '\n';
  return kOk;
}

int examples(const RunConfig& c, std::ostream& out) {
  Json list = Json::array();
  for (const auto& e : examples_corpus())
    list.push_back(Json{{"name", e.name},
                        {"kind", e.kind == CorpusEntry::Kind::Spec ? "spec" : "morphism"},
                        {"literal", e.literal},
                        {"description", e.description}});
  if (c.format == "json") {
    out << list.dump(2) << '\n';
  } else {
    for (const auto& e : examples_corpus()) out << e.name << "  " << e.literal << "  " << e.description << '\n';
  }
  return kOk;
}

void add_spec_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--spec", c.spec, "substitution rules, or a full spec literal rules@seed[|outer]");
  sub->add_option("--seed", c.seed, "seed letter (default: first letter)");
  sub->add_option("--outer", c.outer, "outer morphism rules");
  sub->add_option("--example", c.example, "bundled example name");
  sub->add_option("--file", c.file, "read the literal from a file");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Palindromic factors, return words and class P decompositions of morphic words"};
  app.require_subcommand(1);
  app.add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "text"}));
  app.fallthrough();

  auto* analyze_cmd = app.add_subcommand("analyze", "palindromic factor count, defect and richness");
  analyze_cmd->add_option("word", c.literal, "word literal");
  add_spec_options(analyze_cmd, c);
  analyze_cmd->add_option("-n", c.n, "prefix length for specs")->check(CLI::PositiveNumber);

  auto* classify_sub = app.add_subcommand("classify", "membership in P, extended P, P_ret and P'");
  classify_sub->add_option("morphism", c.literal, "morphism literal");
  classify_sub->add_option("--example", c.example, "bundled morphism name");
  classify_sub->add_option("--file", c.file, "read the literal from a file");
  classify_sub->add_option("--bound", c.bound, "conjugator and marker search bound")->check(CLI::PositiveNumber);

  auto* derive_cmd = app.add_subcommand("derive", "first returns and derived word at a prefix");
  add_spec_options(derive_cmd, c);
  derive_cmd->add_option("--at", c.at, "prefix to return to (default: first letter)");
  derive_cmd->add_option("-n", c.n, "initial prefix length inspected")->check(CLI::PositiveNumber);

  auto* decompose_cmd = app.add_subcommand("decompose", "certificate for y = g(x) with x = h(x)");
  add_spec_options(decompose_cmd, c);
  decompose_cmd->add_option("--depth", c.depth, "maximum derivation depth")->check(CLI::PositiveNumber);
  decompose_cmd->add_option("--cmp-len", c.cmp_len, "prefix length for equality and richness checks")
      ->check(CLI::PositiveNumber);
  decompose_cmd->add_option("--bound", c.bound, "conjugator search bound")->check(CLI::PositiveNumber);
  decompose_cmd->add_option("--marker-bound", c.marker_bound, "longest palindromic prefix tried")
      ->check(CLI::PositiveNumber);
  decompose_cmd->add_flag("--finite-defect", c.finite_defect, "reduce a finite-defect word through P_ret first");
  decompose_cmd->add_option("--verify", c.verify_length, "re-verify the certificate at this length")
      ->check(CLI::PositiveNumber);

  auto* generate_cmd = app.add_subcommand("generate", "prefix of a morphic word");
  add_spec_options(generate_cmd, c);
  generate_cmd->add_option("-n", c.n, "prefix length");

  auto* examples_cmd = app.add_subcommand("examples", "list the bundled examples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  if (analyze_cmd->parsed()) c.command = Command::Analyze;
  if (classify_sub->parsed()) c.command = Command::Classify;
  if (derive_cmd->parsed()) c.command = Command::Derive;
  if (decompose_cmd->parsed()) c.command = Command::Decompose;
  if (generate_cmd->parsed()) c.command = Command::Generate;
  if (examples_cmd->parsed()) c.command = Command::Examples;

  try {
    switch (c.command) {
      case Command::Analyze: return analyze(c, out);
      case Command::Classify: return classify_cmd(c, out);
      case Command::Derive: return derive(c, out);
      case Command::Decompose: return decompose(c, out);
      case Command::Generate: return generate(c, out);
      case Command::Examples: return examples(c, out);
    }
  } catch (const ParseError& e) {
    err << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error[" << to_string(e.kind()) << "]: " << e.what() << '\n';
    if (c.command == Command::Decompose)
      out << Json{{"status", "failed"}, {"reason", e.what()}, {"error", to_string(e.kind())}}.dump(2) << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace palsub::cli

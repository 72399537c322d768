#include "palsub/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "palsub/errors.hpp"

namespace palsub {

std::string format_morphism(const Morphism& f) {
  std::string out;
  for (Letter a = 0; a < f.domain().size(); ++a) {
    if (a) out += ';';
    out += f.domain().name(a) + "->" + f.image(a).str();
  }
  return out;
}

namespace {

struct Rule {
  std::string letter;
  std::string image;
  std::size_t column;  // 1-based column of the image
};

std::vector<Rule> split_rules(std::string_view text, std::size_t line, std::size_t offset) {
  std::vector<Rule> rules;
  std::size_t pos = 0;
  if (text.empty()) throw ParseError("empty morphism literal", line, offset + 1);
  while (pos <= text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view rule = text.substr(pos, end - pos);
    const std::size_t col = offset + pos + 1;
    if (rule.empty()) {
      if (end == text.size() && !rules.empty()) break;  // trailing ';'
      throw ParseError("empty rule", line, col);
    }
    for (std::size_t i = 0; i < rule.size(); ++i)
      if (std::isspace(static_cast<unsigned char>(rule[i])))
        throw ParseError("whitespace is not allowed in literals", line, col + i);
    if (rule.size() < 4 || rule.substr(1, 2) != "->")
      throw ParseError("expected rule of the form x->image", line, col);
    rules.push_back({std::string(1, rule[0]), std::string(rule.substr(3)), col + 3});
    pos = end + 1;
  }
  return rules;
}

Alphabet infer_codomain(const std::vector<Rule>& rules, const Alphabet& domain) {
  std::set<char> chars;
  for (const auto& r : rules) chars.insert(r.image.begin(), r.image.end());
  const bool inside_domain = std::all_of(chars.begin(), chars.end(), [&](char c) {
    return domain.find(std::string_view(&c, 1)).has_value();
  });
  if (inside_domain) return domain;
  const bool digits = std::all_of(chars.begin(), chars.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (digits) return Alphabet(static_cast<std::size_t>(*chars.rbegin() - '0') + 1);
  std::vector<std::string> names;
  for (char c : chars) names.emplace_back(1, c);
  return Alphabet(std::move(names));
}

}  // namespace

Morphism parse_morphism(std::string_view literal, const Alphabet* domain, std::size_t line,
                        std::size_t column_offset) {
  const auto rules = split_rules(literal, line, column_offset);
  std::optional<Alphabet> dom;
  if (domain) {
    dom = *domain;
  } else {
    std::vector<std::string> names;
    for (const auto& r : rules) {
      if (std::find(names.begin(), names.end(), r.letter) != names.end())
        throw ParseError("duplicate rule for '" + r.letter + "'", line, r.column - 3);
      names.push_back(r.letter);
    }
    dom.emplace(std::move(names));
  }
  const Alphabet codomain = infer_codomain(rules, *dom);

  std::vector<std::optional<Word>> images(dom->size());
  for (const auto& r : rules) {
    auto a = dom->find(r.letter);
    if (!a) throw ParseError("letter '" + r.letter + "' is not in the domain", line, r.column - 3);
    if (images[*a]) throw ParseError("duplicate rule for '" + r.letter + "'", line, r.column - 3);
    try {
      images[*a] = parse_word(codomain, r.image);
    } catch (const ParseError& e) {
      throw ParseError("bad image for '" + r.letter + "'", line, r.column + e.column() - 1);
    }
  }
  std::vector<Word> out;
  for (Letter a = 0; a < dom->size(); ++a) {
    if (!images[a])
      throw ParseError("missing rule for '" + dom->name(a) + "'", line, column_offset + literal.size());
    out.push_back(std::move(*images[a]));
  }
  return Morphism(*dom, codomain, std::move(out));
}

std::string format_spec(const MorphicWordSpec& spec) {
  std::string out = format_morphism(spec.inner()) + "@" + spec.inner().domain().name(spec.seed());
  if (spec.outer()) out += "|" + format_morphism(*spec.outer());
  return out;
}

MorphicWordSpec parse_spec(std::string_view literal, std::size_t line) {
  const std::size_t at = literal.find('@');
  if (at == std::string_view::npos)
    throw ParseError("spec literal needs '@<seed>'", line, literal.size() + 1);
  Morphism inner = parse_morphism(literal.substr(0, at), nullptr, line, 0);
  const std::size_t bar = literal.find('|', at);
  std::string_view seed = literal.substr(at + 1, bar == std::string_view::npos ? std::string_view::npos : bar - at - 1);
  if (seed.size() != 1) throw ParseError("seed must be a single letter", line, at + 2);
  auto s = inner.domain().find(seed);
  if (!s) throw ParseError("seed '" + std::string(seed) + "' is not in the alphabet", line, at + 2);
  std::optional<Morphism> outer;
  if (bar != std::string_view::npos)
    outer = parse_morphism(literal.substr(bar + 1), &inner.domain(), line, bar + 1);
  return MorphicWordSpec(std::move(inner), *s, std::move(outer));
}

std::string read_literal_file(const std::string& path, std::size_t& line) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::string text;
  line = 0;
  for (std::string current; std::getline(in, current);) {
    ++line;
    auto first = current.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = current.find_last_not_of(" \t\r");
    return current.substr(first, last - first + 1);
  }
  throw ParseError("file '" + path + "' holds no literal", line, 0);
}

// -------------------------------------------------------------------- JSON

Json to_json(const Morphism& f) {
  Json j = Json::object();
  for (Letter a = 0; a < f.domain().size(); ++a) j[f.domain().name(a)] = f.image(a).str();
  return j;
}

Json to_json(const PalindromicSplit& s) {
  Json q = Json::array();
  for (const auto& w : s.q) q.push_back(w.str());
  return Json{{"p", s.p.str()}, {"q", q}};
}

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

std::string_view side_name(Side s) { return s == Side::Right ? "right" : "left"; }

}  // namespace

Json to_json(const ClassificationResult& r) {
  Json pp = nullptr;
  if (r.p_prime_witness) {
    const auto& w = *r.p_prime_witness;
    pp = Json{{"u", w.conjugator.u.str()},
              {"side", side_name(w.conjugator.side)},
              {"conjugate", to_json(w.conjugate)},
              {"split", to_json(w.split)}};
  }
  return Json{{"in_P", r.in_p},
              {"P_witness", optional_json(r.p_witness)},
              {"in_extended_P", r.in_extended_p},
              {"extended_P_witness", optional_json(r.extended_p_witness)},
              {"in_P_ret", r.in_p_ret},
              {"marker", r.marker ? Json(r.marker->str()) : Json(nullptr)},
              {"in_P_prime", r.in_p_prime == PPrimeVerdict::Yes ? "yes" : "no_up_to_bound"},
              {"P_prime_witness", pp},
              {"search_bound", r.search_bound}};
}

Json to_json(const RichnessReport& r) {
  std::string_view verdict = r.verdict == RichnessVerdict::Rich             ? "rich"
                             : r.verdict == RichnessVerdict::RichUpToLength ? "rich_up_to_length"
                                                                            : "not_rich";
  Json w = nullptr;
  if (r.witness)
    w = Json{{"palindrome", r.witness->palindrome.str()},
             {"complete_return", r.witness->complete_return.str()},
             {"position", r.witness->position}};
  return Json{{"verdict", verdict}, {"witness", w}, {"checked_length", r.checked_length}};
}

Json to_json(const ReturnStructure& r) {
  Json returns = Json::array();
  for (const auto& w : r.returns) returns.push_back(w.str());
  Json f_u = Json::object();
  for (std::size_t i = 0; i < r.returns.size(); ++i) f_u[Alphabet::default_name(i)] = r.returns[i].str();
  return Json{{"prefix_u", r.u.str()},
              {"returns", returns},
              {"derived_prefix", r.derived_prefix.str()},
              {"f_u", f_u},
              {"stability", {{"n1", r.stability.n1}, {"n2", r.stability.n2}}}};
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return Json{{"length", r.length}, {"all_passed", r.all_passed()}, {"checks", checks}};
}

Json to_json(const DecompositionCertificate& c) {
  Json chain = Json::array();
  for (std::size_t k = 0; k < c.chain.size(); ++k)
    chain.push_back(Json{{"level", k + 1},
                         {"alphabet_size", c.chain[k].domain().size()},
                         {"g", to_json(c.chain[k])}});
  Json stability = Json::array();
  for (const auto& s : c.stability) stability.push_back(Json{{"n1", s.n1}, {"n2", s.n2}});
  return Json{
      {"status", to_string(c.status)},
      {"reason", c.reason.empty() ? Json(nullptr) : Json(c.reason)},
      {"y", format_spec(c.y)},
      {"ret_prefix", c.ret_prefix ? Json(c.ret_prefix->str()) : Json(nullptr)},
      {"ret_factor", optional_json(c.ret_factor)},
      {"chain", chain},
      {"m", c.m},
      {"n", c.n},
      {"cmp_len", c.cmp_len},
      {"h", to_json(c.h)},
      {"g", to_json(c.g)},
      {"x", format_spec(c.x)},
      {"verification",
       {{"prefix_match_length", c.verification.find("prefix_match") &&
                                        c.verification.find("prefix_match")->passed
                                    ? c.verification.length
                                    : 0},
        {"h_primitive", c.h_primitive},
        {"h_classification", to_json(c.h_classification)},
        {"g_classification", to_json(c.g_classification)},
        {"x_rich_up_to", c.x_rich_up_to ? Json(*c.x_rich_up_to) : Json(nullptr)},
        {"stability_records", stability},
        {"checks", to_json(c.verification)}}}};
}

Json analysis_json(std::span<const Letter> w, const Alphabet& alphabet) {
  const std::size_t pal = eertree_count(w).back();
  RichnessReport r = richness_check(w, alphabet);
  Json witness = nullptr;
  if (r.witness)
    witness = Json{{"palindrome", r.witness->palindrome.str()},
                   {"complete_return", r.witness->complete_return.str()},
                   {"position", r.witness->position}};
  return Json{{"length", w.size()},
              {"pal_count", pal},
              {"defect", w.size() + 1 - pal},
              {"rich_up_to_length", !r.violated()},
              {"witness", witness}};
}

}  // namespace palsub

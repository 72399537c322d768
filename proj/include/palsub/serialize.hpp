#pragma once

// Text literals and JSON output.
//
//   word      acab                      one character per letter
//   morphism  a->ac;b->acab;c->ab       rules in domain order
//   spec      a->ac;b->acab;c->ab@a     inner substitution, '@', seed
//             0->01;1->001@0|0->ac;1->ab  optional '|' and outer morphism

#include <string>
#include <string_view>

#include "json.hpp"
#include "palsub/classify.hpp"
#include "palsub/decompose.hpp"
#include "palsub/derived.hpp"
#include "palsub/palindromes.hpp"

namespace palsub {

using Json = nlohmann::ordered_json;

std::string format_morphism(const Morphism& f);

/// Domain letters come from `domain` when given (every letter needs exactly
/// one rule), otherwise from the rule order. The codomain is the domain when
/// every image letter belongs to it, the anonymous alphabet 0..max for
/// all-digit images, and the sorted set of image characters otherwise.
/// `column_offset` shifts reported error columns.
Morphism parse_morphism(std::string_view literal, const Alphabet* domain = nullptr,
                        std::size_t line = 1, std::size_t column_offset = 0);

std::string format_spec(const MorphicWordSpec& spec);
MorphicWordSpec parse_spec(std::string_view literal, std::size_t line = 1);

/// Parses a literal read from a file: surrounding whitespace is dropped and
/// errors report the line of the first non-blank line.
std::string read_literal_file(const std::string& path, std::size_t& line);

Json to_json(const Morphism& f);
Json to_json(const PalindromicSplit& s);
Json to_json(const ClassificationResult& r);
Json to_json(const RichnessReport& r);
Json to_json(const ReturnStructure& r);
Json to_json(const VerificationReport& r);
Json to_json(const DecompositionCertificate& c);

/// {"length", "pal_count", "defect", "rich_up_to_length", "witness"}.
Json analysis_json(std::span<const Letter> w, const Alphabet& alphabet);

}  // namespace palsub

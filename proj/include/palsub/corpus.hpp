#pragma once

// Bundled example words and morphisms.

#include <string>
#include <vector>

#include "palsub/morphic_word.hpp"

namespace palsub {

struct CorpusEntry {
  enum class Kind { Spec, Morphism };

  std::string name;
  Kind kind;
  std::string literal;
  std::string description;
};

const std::vector<CorpusEntry>& examples_corpus();

/// Throws ErrorKind::InvalidArgument for unknown names or morphism entries.
MorphicWordSpec load_example_spec(const std::string& name);
Morphism load_example_morphism(const std::string& name);

}  // namespace palsub

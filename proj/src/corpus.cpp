#include "palsub/corpus.hpp"

#include "palsub/errors.hpp"
#include "palsub/serialize.hpp"

namespace palsub {

const std::vector<CorpusEntry>& examples_corpus() {
  using K = CorpusEntry::Kind;
  static const std::vector<CorpusEntry> corpus{
      {"thue-morse", K::Spec, "0->01;1->10@0", "Thue-Morse word; palindromic with infinite defect"},
      {"labbe", K::Spec, "a->ac;b->acab;c->ab@a", "rich fixed point not fixed by any P' substitution"},
      {"labbe-shift2", K::Spec, "a->ab;b->acac;c->ac@a", "second shift of labbe, fixed by a class P morphism"},
      {"tau", K::Spec, "b->ccb;c->cb@c", "rich word; labbe with the letter a deleted"},
      {"derived-labbe", K::Spec, "0->01;1->001@0", "derived word of labbe at its first letter"},
      {"fibonacci", K::Spec, "0->01;1->0@0", "Fibonacci word; equal to its own derived word at 0"},
      {"blondin-masse", K::Spec, "a->abbab;b->abb@a", "fixed point of a morphism conjugate to a class P one"},
      {"p-composite", K::Morphism, "0->01;1->01011", "composition of two class P morphisms, in P' only"},
      {"p-ret-not-p", K::Morphism, "0->001;1->0010", "P_ret with marker 00100, not in P"},
      {"conjugate-left", K::Morphism, "0->001;1->0010010010010", "conjugate to conjugate-right by u=0010010"},
      {"conjugate-right", K::Morphism, "0->010;1->0100100010010", "conjugate to conjugate-left"},
  };
  return corpus;
}

namespace {

const CorpusEntry& find_entry(const std::string& name, CorpusEntry::Kind kind) {
  for (const auto& e : examples_corpus())
    if (e.name == name) {
      if (e.kind != kind)
        throw Error(ErrorKind::InvalidArgument,
                    "example '" + name + "' is a " +
                        (e.kind == CorpusEntry::Kind::Spec ? "word spec" : "morphism"));
      return e;
    }
  throw Error(ErrorKind::InvalidArgument, "unknown example '" + name + "'");
}

}  // namespace

MorphicWordSpec load_example_spec(const std::string& name) {
  return parse_spec(find_entry(name, CorpusEntry::Kind::Spec).literal);
}

Morphism load_example_morphism(const std::string& name) {
  return parse_morphism(find_entry(name, CorpusEntry::Kind::Morphism).literal);
}

}  // namespace palsub

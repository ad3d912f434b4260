#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "disco/index_set.hpp"

namespace disco {

// Fixed morphological attribute schema. Every token carries a value for
// every attribute ("undef" when not annotated) so that all tokens have the
// same number of labels to predict.
inline constexpr std::array<const char*, 7> kMorphAttrs = {
    "case", "degree", "gender", "mood", "number", "person", "tense"};
inline constexpr const char* kUndef = "undef";
inline constexpr const char* kVirtualRoot = "VROOT";

struct Token {
  int index = 0;  // 1-based position in the sentence
  std::string form;
  std::string pos = kUndef;
  std::array<std::string, kMorphAttrs.size()> morph;  // aligned with kMorphAttrs
  std::string deplabel = kUndef;

  Token() { morph.fill(kUndef); }
  Token(int idx, std::string f, std::string p = kUndef)
      : index(idx), form(std::move(f)), pos(std::move(p)) {
    morph.fill(kUndef);
  }

  const std::string& morph_value(const std::string& attr) const;
  void set_morph(const std::string& attr, const std::string& value);

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;

  int size() const { return static_cast<int>(tokens.size()); }
  const Token& at(int index) const { return tokens.at(index - 1); }  // 1-based
  Token& at(int index) { return tokens.at(index - 1); }

  bool operator==(const Sentence&) const = default;
};

struct Constituent {
  std::string label;
  IndexSet yield;
  int head = 0;  // token index, 0 = unassigned

  Constituent() = default;
  Constituent(std::string l, IndexSet y, int h = 0)
      : label(std::move(l)), yield(std::move(y)), head(h) {}

  bool discontinuous() const { return !yield.contiguous(); }
  bool operator==(const Constituent&) const = default;
};

// A (possibly discontinuous) constituency tree: a sentence plus a set of
// labelled yields. Constituents with equal yields form a unary chain; within
// such a chain the vector stores the parent before the child.
struct Tree {
  Sentence sentence;
  std::vector<Constituent> constituents;

  int size() const { return sentence.size(); }
  const Constituent* root() const;  // constituent with yield {1..n}, if any

  // deterministic order: by (min, size desc, bits), chain order preserved
  void canonicalize();

  bool operator==(const Tree& other) const;
};

struct TreeViolation {
  std::string what;
  std::optional<Constituent> offender;
};

// Checks every Tree invariant; returns the first violation found.
std::optional<TreeViolation> validate_tree(const Tree& tree);

// Inserts a VROOT constituent over {1..n} unless a constituent already
// covers the whole sentence.
void ensure_virtual_root(Tree& tree);

// Merges unary chains (constituents with identical yields) into a single
// constituent labelled "Xtop+...+Xbottom"; expand_unaries inverts exactly.
// Literal '+' in labels is escaped as "\+".
Tree collapse_unaries(const Tree& tree);
Tree expand_unaries(const Tree& tree);

std::string join_unary_labels(const std::vector<std::string>& top_down);
std::vector<std::string> split_unary_labels(const std::string& collapsed);

}  // namespace disco

#include "disco/tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace disco {

const std::string& Token::morph_value(const std::string& attr) const {
  for (size_t a = 0; a < kMorphAttrs.size(); ++a)
    if (attr == kMorphAttrs[a]) return morph[a];
  throw std::invalid_argument("unknown morphological attribute: " + attr);
}

void Token::set_morph(const std::string& attr, const std::string& value) {
  for (size_t a = 0; a < kMorphAttrs.size(); ++a) {
    if (attr == kMorphAttrs[a]) {
      morph[a] = value;
      return;
    }
  }
  throw std::invalid_argument("unknown morphological attribute: " + attr);
}

const Constituent* Tree::root() const {
  int n = size();
  for (const auto& c : constituents)
    if (c.yield.size() == n && c.yield.min() == 1 && c.yield.max() == n) return &c;
  return nullptr;
}

void Tree::canonicalize() {
  std::stable_sort(constituents.begin(), constituents.end(),
                   [](const Constituent& a, const Constituent& b) {
                     if (a.yield.min() != b.yield.min()) return a.yield.min() < b.yield.min();
                     if (a.yield.size() != b.yield.size()) return a.yield.size() > b.yield.size();
                     if (!(a.yield == b.yield)) return a.yield < b.yield;
                     return false;  // equal yields: keep chain order
                   });
}

bool Tree::operator==(const Tree& other) const {
  if (!(sentence == other.sentence)) return false;
  Tree a = *this, b = other;
  a.canonicalize();
  b.canonicalize();
  return a.constituents == b.constituents;
}

std::optional<TreeViolation> validate_tree(const Tree& tree) {
  int n = tree.size();
  if (n == 0) return TreeViolation{"sentence is empty", std::nullopt};
  for (int i = 0; i < n; ++i) {
    if (tree.sentence.tokens[i].index != i + 1)
      return TreeViolation{"token indexes are not exactly 1..n", std::nullopt};
  }
  for (const auto& c : tree.constituents) {
    if (c.yield.empty()) return TreeViolation{"empty yield", c};
    if (c.yield.max() > n || c.yield.min() < 1)
      return TreeViolation{"yield index outside 1..n", c};
    if (c.head != 0 && !c.yield.contains(c.head))
      return TreeViolation{"head outside yield", c};
  }
  for (size_t i = 0; i < tree.constituents.size(); ++i) {
    for (size_t j = i + 1; j < tree.constituents.size(); ++j) {
      const auto& a = tree.constituents[i];
      const auto& b = tree.constituents[j];
      if (a.label == b.label && a.yield == b.yield)
        return TreeViolation{"duplicate constituent (same label and yield)", a};
      if (!a.yield.intersects(b.yield)) continue;
      if (!a.yield.contains_all(b.yield) && !b.yield.contains_all(a.yield))
        return TreeViolation{"overlapping non-nested yields", b};
    }
  }
  int full = 0;
  for (const auto& c : tree.constituents)
    if (c.yield.size() == n) ++full;
  if (full == 0) return TreeViolation{"no constituent covers the whole sentence", std::nullopt};
  // several full-yield constituents are fine only as a unary chain over the root
  return std::nullopt;
}

void ensure_virtual_root(Tree& tree) {
  if (tree.root() != nullptr) return;
  Constituent root(kVirtualRoot, IndexSet::range(1, tree.size()));
  tree.constituents.insert(tree.constituents.begin(), std::move(root));
}

std::string join_unary_labels(const std::vector<std::string>& top_down) {
  std::string out;
  for (size_t i = 0; i < top_down.size(); ++i) {
    if (i > 0) out += '+';
    for (char ch : top_down[i]) {
      if (ch == '+' || ch == '\\') out += '\\';
      out += ch;
    }
  }
  return out;
}

std::vector<std::string> split_unary_labels(const std::string& collapsed) {
  std::vector<std::string> out;
  std::string cur;
  for (size_t i = 0; i < collapsed.size(); ++i) {
    char ch = collapsed[i];
    if (ch == '\\' && i + 1 < collapsed.size()) {
      cur += collapsed[++i];
    } else if (ch == '+') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

Tree collapse_unaries(const Tree& tree) {
  Tree out;
  out.sentence = tree.sentence;
  // group chain members by yield, preserving parent-before-child order
  std::map<IndexSet, std::vector<const Constituent*>> chains;
  std::vector<IndexSet> order;
  for (const auto& c : tree.constituents) {
    auto [it, fresh] = chains.try_emplace(c.yield);
    if (fresh) order.push_back(c.yield);
    it->second.push_back(&c);
  }
  // keep the original vector order of first occurrence
  std::vector<const std::vector<const Constituent*>*> grouped;
  for (const auto& c : tree.constituents) {
    auto& chain = chains[c.yield];
    if (chain.front() == &c) grouped.push_back(&chain);
  }
  for (const auto* chain : grouped) {
    if (chain->size() == 1) {
      out.constituents.push_back(*chain->front());
      continue;
    }
    std::vector<std::string> labels;
    int head = 0;
    for (const Constituent* c : *chain) {
      labels.push_back(c->label);
      if (c->head != 0) head = c->head;
    }
    out.constituents.emplace_back(join_unary_labels(labels), chain->front()->yield, head);
  }
  return out;
}

Tree expand_unaries(const Tree& tree) {
  Tree out;
  out.sentence = tree.sentence;
  for (const auto& c : tree.constituents) {
    auto labels = split_unary_labels(c.label);
    for (const auto& label : labels)
      out.constituents.emplace_back(label, c.yield, c.head);
  }
  return out;
}

}  // namespace disco

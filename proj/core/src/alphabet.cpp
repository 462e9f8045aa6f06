#include "chanorder/alphabet.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace chanorder {

Symbol::Symbol(Kind kind, std::string name, std::vector<Symbol> children)
    : kind_(kind), name_(std::move(name)), children_(std::move(children)) {}

Symbol Symbol::atom(std::string name) { return Symbol(Kind::kAtom, std::move(name), {}); }

Symbol Symbol::left(Symbol inner) { return Symbol(Kind::kLeft, {}, {std::move(inner)}); }

Symbol Symbol::right(Symbol inner) { return Symbol(Kind::kRight, {}, {std::move(inner)}); }

Symbol Symbol::pair(Symbol first, Symbol second) {
  std::vector<Symbol> kids;
  kids.reserve(2);
  kids.push_back(std::move(first));
  kids.push_back(std::move(second));
  return Symbol(Kind::kPair, {}, std::move(kids));
}

const std::string& Symbol::name() const {
  if (kind_ != Kind::kAtom) throw std::logic_error("Symbol::name: not an atom");
  return name_;
}

const Symbol& Symbol::inner() const {
  if (kind_ != Kind::kLeft && kind_ != Kind::kRight) {
    throw std::logic_error("Symbol::inner: not a tagged symbol");
  }
  return children_[0];
}

const Symbol& Symbol::first() const {
  if (kind_ != Kind::kPair) throw std::logic_error("Symbol::first: not a pair");
  return children_[0];
}

const Symbol& Symbol::second() const {
  if (kind_ != Kind::kPair) throw std::logic_error("Symbol::second: not a pair");
  return children_[1];
}

std::string Symbol::to_string() const {
  switch (kind_) {
    case Kind::kAtom:
      return name_;
    case Kind::kLeft:
      return "L:" + children_[0].to_string();
    case Kind::kRight:
      return "R:" + children_[0].to_string();
    case Kind::kPair:
      return "(" + children_[0].to_string() + "," + children_[1].to_string() + ")";
  }
  return {};
}

bool Symbol::operator==(const Symbol& other) const {
  return kind_ == other.kind_ && name_ == other.name_ && children_ == other.children_;
}

bool Symbol::operator<(const Symbol& other) const {
  if (kind_ != other.kind_) return kind_ < other.kind_;
  if (name_ != other.name_) return name_ < other.name_;
  return std::lexicographical_compare(children_.begin(), children_.end(),
                                      other.children_.begin(), other.children_.end());
}

std::vector<Symbol> default_labels(std::size_t n) {
  std::vector<Symbol> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(Symbol::atom(std::to_string(i)));
  return out;
}

std::vector<Symbol> sum_labels(const std::vector<Symbol>& y1, const std::vector<Symbol>& y2) {
  std::vector<Symbol> out;
  out.reserve(y1.size() + y2.size());
  for (const Symbol& s : y1) out.push_back(Symbol::left(s));
  for (const Symbol& s : y2) out.push_back(Symbol::right(s));
  return out;
}

std::vector<Symbol> product_labels(const std::vector<Symbol>& y1, const std::vector<Symbol>& y2) {
  std::vector<Symbol> out;
  out.reserve(y1.size() * y2.size());
  for (const Symbol& a : y1) {
    for (const Symbol& b : y2) out.push_back(Symbol::pair(a, b));
  }
  return out;
}

bool all_distinct(const std::vector<Symbol>& labels) {
  std::vector<Symbol> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

}  // namespace chanorder

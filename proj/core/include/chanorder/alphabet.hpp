#ifndef CHANORDER_ALPHABET_HPP
#define CHANORDER_ALPHABET_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace chanorder {

/// Output-alphabet symbol. Plain channels use atoms; channel sums tag each
/// side's symbols left/right, and channel products pair them, so composite
/// alphabets stay self-describing.
class Symbol {
 public:
  enum class Kind { kAtom, kLeft, kRight, kPair };

  static Symbol atom(std::string name);
  static Symbol left(Symbol inner);
  static Symbol right(Symbol inner);
  static Symbol pair(Symbol first, Symbol second);

  Kind kind() const { return kind_; }
  const std::string& name() const;    // kAtom
  const Symbol& inner() const;        // kLeft / kRight
  const Symbol& first() const;        // kPair
  const Symbol& second() const;       // kPair

  std::string to_string() const;

  bool operator==(const Symbol& other) const;
  bool operator!=(const Symbol& other) const { return !(*this == other); }
  bool operator<(const Symbol& other) const;

 private:
  Symbol(Kind kind, std::string name, std::vector<Symbol> children);

  Kind kind_;
  std::string name_;
  std::vector<Symbol> children_;
};

/// Atoms "1".."n".
std::vector<Symbol> default_labels(std::size_t n);

/// Disjoint union Y1 + Y2: left-tagged Y1 symbols followed by right-tagged
/// Y2 symbols.
std::vector<Symbol> sum_labels(const std::vector<Symbol>& y1, const std::vector<Symbol>& y2);

/// Cartesian product Y1 x Y2 in row-major order (the Y2 index varies fastest).
std::vector<Symbol> product_labels(const std::vector<Symbol>& y1, const std::vector<Symbol>& y2);

bool all_distinct(const std::vector<Symbol>& labels);

}  // namespace chanorder

#endif  // CHANORDER_ALPHABET_HPP

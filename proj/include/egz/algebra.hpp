// Element and sequence arithmetic over Z_2^d, text serialization, and
// canonical forms under the joint action of GL(d,2) and item permutation.

#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace egz {

// Number of Z_2 factors. The cap keeps elements in a machine word and the
// dense DP tables of the engine within desk-scale memory.
class Dimension {
 public:
  static constexpr int kMax = 40;

  explicit Dimension(int d) : d_(d) {
    if (d < 1 || d > kMax)
      throw std::invalid_argument("Dimension: d must be in [1, " +
                                  std::to_string(kMax) + "], got " +
                                  std::to_string(d));
  }

  int value() const noexcept { return d_; }
  // 2^d, the group order.
  std::uint64_t order() const noexcept { return std::uint64_t{1} << d_; }

  friend bool operator==(Dimension a, Dimension b) noexcept {
    return a.d_ == b.d_;
  }
  friend bool operator!=(Dimension a, Dimension b) noexcept {
    return a.d_ != b.d_;
  }

 private:
  int d_;
};

// A vector in Z_2^d. Coordinate i (1-based) is stored in bit i-1.
class Element {
 public:
  Element(Dimension dim, std::uint64_t bits) : bits_(bits), dim_(dim) {
    if (bits >= dim.order())
      throw std::invalid_argument("Element: bits out of range for dimension");
  }

  static Element zero(Dimension dim) { return Element(dim, 0); }

  // Standard basis vector e_i, 1 <= i <= d.
  static Element basis(Dimension dim, int i) {
    if (i < 1 || i > dim.value())
      throw std::invalid_argument("Element::basis: index out of range");
    return Element(dim, std::uint64_t{1} << (i - 1));
  }

  static Element all_ones(Dimension dim) {
    return Element(dim, dim.order() - 1);
  }

  std::uint64_t bits() const noexcept { return bits_; }
  Dimension dim() const noexcept { return dim_; }
  bool is_zero() const noexcept { return bits_ == 0; }

  friend bool operator==(const Element& a, const Element& b) noexcept {
    return a.dim_ == b.dim_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const Element& a, const Element& b) noexcept {
    return !(a == b);
  }

 private:
  std::uint64_t bits_;
  Dimension dim_;
};

// Group law: bitwise XOR. Every element is its own inverse.
Element add(const Element& a, const Element& b);

// A finite sequence over Z_2^d, positions indexed from 0. Duplicates are
// permitted; a sequence is a multiset with positions. Treat instances as
// immutable once shared between threads.
class ZSequence {
 public:
  explicit ZSequence(Dimension dim) : dim_(dim) {}

  ZSequence(Dimension dim, const std::vector<Element>& items) : dim_(dim) {
    bits_.reserve(items.size());
    for (const Element& e : items) push_back(e);
  }

  static ZSequence from_bits(Dimension dim, const std::vector<std::uint64_t>& bits) {
    ZSequence s(dim);
    s.bits_.reserve(bits.size());
    for (std::uint64_t b : bits) {
      if (b >= dim.order())
        throw std::invalid_argument("ZSequence: item out of range for dimension");
      s.bits_.push_back(b);
    }
    return s;
  }

  Dimension dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  Element at(std::size_t i) const {
    if (i >= bits_.size()) throw std::out_of_range("ZSequence::at");
    return Element(dim_, bits_[i]);
  }
  std::uint64_t bits_at(std::size_t i) const { return bits_.at(i); }

  // Raw item bits, one word per position.
  const std::vector<std::uint64_t>& raw() const noexcept { return bits_; }

  void push_back(const Element& e) {
    if (e.dim() != dim_)
      throw std::invalid_argument("ZSequence: dimension mismatch on append");
    bits_.push_back(e.bits());
  }
  void push_back_bits(std::uint64_t b) {
    if (b >= dim_.order())
      throw std::invalid_argument("ZSequence: item out of range for dimension");
    bits_.push_back(b);
  }

  friend bool operator==(const ZSequence& a, const ZSequence& b) noexcept {
    return a.dim_ == b.dim_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const ZSequence& a, const ZSequence& b) noexcept {
    return !(a == b);
  }

 private:
  Dimension dim_;
  std::vector<std::uint64_t> bits_;
};

// XOR of all items; the empty sequence sums to zero.
Element seq_sum(const ZSequence& s);

bool is_zero_sum(const ZSequence& s);

// --- text serialization -----------------------------------------------
//
// Format: first line "d=<dim>", then one element per line as a d-character
// bitstring whose leftmost character is coordinate 1. '#' starts a comment
// line; blank lines are ignored.

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  int line_number;
};

ZSequence parse_sequence(std::istream& in);
ZSequence parse_sequence(const std::string& text);
std::string render_element(const Element& e);
std::string render_sequence(const ZSequence& s);

// --- canonical forms ---------------------------------------------------
//
// Two sequences get equal keys iff one can be carried to the other by an
// invertible linear map applied to all items plus a permutation of
// positions. The key embeds the exact minimal image, so equality of keys
// decides orbit equality; cheap orbit invariants lead the byte string so
// unequal keys usually differ early.

struct CanonicalKey {
  std::string bytes;

  friend bool operator==(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes == b.bytes;
  }
  friend bool operator!=(const CanonicalKey& a, const CanonicalKey& b) {
    return !(a == b);
  }
  friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes < b.bytes;
  }
};

CanonicalKey canonical_key(const ZSequence& s);

// The minimal sorted item list over the GL(d,2) orbit of s. Exposed for
// tests and for search code that wants the representative itself.
std::vector<std::uint64_t> canonical_image(const ZSequence& s);

}  // namespace egz

template <>
struct std::hash<egz::CanonicalKey> {
  std::size_t operator()(const egz::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes);
  }
};

#ifndef SGTREE_CHAIN_HPP_
#define SGTREE_CHAIN_HPP_

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgtree {

// Capacity large enough for every chain met while exploring to genus `gamma`:
// the highest index ever written is the Frobenius position m+s < c+m.
constexpr int chain_capacity_for(int gamma) { return 3 * gamma + 4; }

// Bit chain encoding the right-generators descendant of a semigroup, indexed
// from the multiplicity: bit j talks about the integer m+j.  The significant
// length equals the conductor; bits at and beyond it stay zero.
class RgdChain {
 public:
  RgdChain() = default;

  explicit RgdChain(int capacity) : bits_(static_cast<std::size_t>(capacity), 0) {}

  RgdChain(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) bits_.push_back(static_cast<std::uint8_t>(b != 0));
    len_ = static_cast<int>(bits_.size());
  }

  int len() const { return len_; }
  int capacity() const { return static_cast<int>(bits_.size()); }

  bool test(int j) const {
    return j < capacity() && bits_[static_cast<std::size_t>(j)] != 0;
  }

  void set(int j, bool v) {
    if (j >= capacity()) bits_.resize(static_cast<std::size_t>(j) + 1, 0);
    bits_[static_cast<std::size_t>(j)] = v ? 1 : 0;
    if (v && j >= len_) len_ = j + 1;
  }

  // Declares the significant length (the conductor); clears anything beyond.
  void set_len(int c) {
    if (c > capacity()) bits_.resize(static_cast<std::size_t>(c), 0);
    for (int j = c; j < len_; ++j) bits_[static_cast<std::size_t>(j)] = 0;
    len_ = c;
  }

  const std::uint8_t* data() const { return bits_.data(); }
  std::uint8_t* data() { return bits_.data(); }

  // Renders the first `len` bits, optionally with the conductor marker '|'
  // inserted before index c-m (m bits remain to its right).
  std::string str(int m, bool marker = false) const {
    std::string out;
    out.reserve(static_cast<std::size_t>(len_) + 1);
    for (int j = 0; j < len_; ++j) {
      if (marker && j == len_ - m) out += '|';
      out += test(j) ? '1' : '0';
    }
    return out;
  }

  // Accepts plain "01101" as well as the marked form "011|01".
  static RgdChain parse(const std::string& text) {
    RgdChain chain;
    for (char ch : text) {
      if (ch == '|') continue;
      if (ch != '0' && ch != '1')
        throw std::invalid_argument("chain must be over {0,1}: " + text);
      chain.bits_.push_back(static_cast<std::uint8_t>(ch == '1'));
    }
    chain.len_ = static_cast<int>(chain.bits_.size());
    return chain;
  }

 private:
  std::vector<std::uint8_t> bits_;
  int len_ = 0;
};

}  // namespace sgtree

#endif  // SGTREE_CHAIN_HPP_

#ifndef SGTREE_GAP_SET_HPP_
#define SGTREE_GAP_SET_HPP_

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sgtree {

// A numerical semigroup given by its finite set of gaps, kept strictly
// increasing.  The complement of the gaps in the nonnegative integers must be
// closed under addition; validate() checks this up to twice the largest gap.
class GapSet {
 public:
  GapSet() = default;

  explicit GapSet(std::vector<int> gaps) : gaps_(std::move(gaps)) {
    validate();
  }

  const std::vector<int>& gaps() const { return gaps_; }
  bool empty() const { return gaps_.empty(); }
  int genus() const { return static_cast<int>(gaps_.size()); }

  // Conductor: one past the largest gap.  The empty set (trivial semigroup)
  // has conductor 0 but is rejected everywhere a node is expected.
  int conductor() const { return gaps_.empty() ? 0 : gaps_.back() + 1; }

  int frobenius() const {
    if (gaps_.empty()) throw std::invalid_argument("empty gap set has no Frobenius number");
    return gaps_.back();
  }

  // Smallest nonzero nongap.
  int multiplicity() const {
    int x = 1;
    for (int gap : gaps_) {
      if (gap != x) break;
      ++x;
    }
    return x;
  }

  bool contains(int x) const {
    return std::binary_search(gaps_.begin(), gaps_.end(), x);
  }

  // Membership table of the semigroup on [0, bound).
  std::vector<char> members(int bound) const {
    std::vector<char> mem(static_cast<std::size_t>(bound), 1);
    for (int gap : gaps_) {
      if (gap < bound) mem[static_cast<std::size_t>(gap)] = 0;
    }
    return mem;
  }

  bool operator==(const GapSet& other) const { return gaps_ == other.gaps_; }
  bool operator<(const GapSet& other) const { return gaps_ < other.gaps_; }

  // Renders as "{1,2,4}"; the empty set renders as "{}".
  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < gaps_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(gaps_[i]);
    }
    out += '}';
    return out;
  }

  static GapSet parse(const std::string& text) {
    std::size_t lo = text.find('{');
    std::size_t hi = text.rfind('}');
    if (lo == std::string::npos || hi == std::string::npos || hi < lo)
      throw std::invalid_argument("gap set must be brace-delimited: " + text);
    std::vector<int> gaps;
    std::string body = text.substr(lo + 1, hi - lo - 1);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t next = body.find(',', pos);
      if (next == std::string::npos) next = body.size();
      std::string tok = body.substr(pos, next - pos);
      if (!tok.empty()) gaps.push_back(std::stoi(tok));
      pos = next + 1;
    }
    return GapSet(std::move(gaps));
  }

 private:
  void validate() const {
    for (std::size_t i = 0; i < gaps_.size(); ++i) {
      if (gaps_[i] <= 0) throw std::invalid_argument("gaps must be positive");
      if (i && gaps_[i] <= gaps_[i - 1])
        throw std::invalid_argument("gaps must be strictly increasing");
    }
    if (!gaps_.empty() && gaps_[0] != 1)
      throw std::invalid_argument("a nonempty gap set must contain 1");
    // Closure of the complement under addition, decidable below 2*max(gaps).
    int bound = gaps_.empty() ? 0 : 2 * gaps_.back() + 1;
    std::vector<char> mem = members(bound);
    for (int x = 1; x < bound; ++x) {
      if (!mem[static_cast<std::size_t>(x)]) continue;
      for (int y = x; x + y < bound; ++y) {
        if (!mem[static_cast<std::size_t>(y)]) continue;
        if (!mem[static_cast<std::size_t>(x + y)])
          throw std::invalid_argument("complement not closed under addition: " +
                                      std::to_string(x) + "+" + std::to_string(y));
      }
    }
  }

  std::vector<int> gaps_;
};

}  // namespace sgtree

#endif  // SGTREE_GAP_SET_HPP_

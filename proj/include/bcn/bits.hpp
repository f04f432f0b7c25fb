#ifndef BCN_BITS_HPP
#define BCN_BITS_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bcn {

/// Fixed-length bit sequence. The tag keeps state, input and output vectors
/// from being mixed up at call sites; element 0 is the first declared
/// variable.
template <class Tag>
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size, bool value = false) : bits_(size, value) {}
  BitVector(std::initializer_list<int> bits) {
    bits_.reserve(bits.size());
    for (int b : bits) bits_.push_back(b != 0);
  }

  /// Parses "0101"-style text; character i becomes element i.
  static BitVector from_string(std::string_view text) {
    BitVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != '0' && text[i] != '1')
        throw std::invalid_argument("expected a string of 0/1 characters, got '" +
                                    std::string(text) + "'");
      v.bits_[i] = text[i] == '1';
    }
    return v;
  }

  /// Element i maps to bit i of the integer (oracle encoding).
  static BitVector from_index(std::uint64_t index, std::size_t size) {
    BitVector v(size);
    for (std::size_t i = 0; i < size; ++i) v.bits_[i] = ((index >> i) & 1U) != 0;
    return v;
  }

  std::uint64_t to_index() const {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) index |= std::uint64_t{1} << i;
    return index;
  }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) s[i] = '1';
    return s;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool value) { bits_[i] = value; }
  void flip(std::size_t i) { bits_[i] = !bits_[i]; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<bool> bits_;
};

struct StateTag {};
struct InputTag {};
struct OutputTag {};

using StateVector = BitVector<StateTag>;
using InputVector = BitVector<InputTag>;
using OutputVector = BitVector<OutputTag>;

}  // namespace bcn

#endif  // BCN_BITS_HPP

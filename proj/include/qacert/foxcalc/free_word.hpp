#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qacert {

struct Letter {
  std::size_t generator;  // 0-based; printed as a1, a2, ...
  int exponent;           // +1 or -1
  auto operator<=>(const Letter&) const = default;
};

/// Word in the free group on generators a1, a2, ... Stored exactly as written;
/// free reduction happens on demand.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(std::vector<Letter> letters);

  static FreeWord generator(std::size_t g, int exponent = 1);

  /// Whitespace-separated letters "a3", "a3^-1", "a3^k"; parenthesized groups
  /// "( ... )^k" are expanded. "1" or an empty string is the identity.
  static FreeWord parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord reduced() const;
  bool is_reduced() const;
  FreeWord inverse() const;
  /// w^k for any integer k (w^0 is the identity).
  FreeWord power(long k) const;

  /// Exponent sum of every generator below `generators`.
  std::vector<long> exponent_sums(std::size_t generators) const;
  /// 1 + the largest generator index used (0 for the identity).
  std::size_t generator_bound() const;

  /// Letter-by-letter concatenation, no reduction.
  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  auto operator<=>(const FreeWord&) const = default;

  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
};

/// Reduced product of two reduced words.
FreeWord reduced_product(const FreeWord& a, const FreeWord& b);

}  // namespace qacert

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sidonplex {

using Int = std::int64_t;

/// Strictly increasing, nonempty list of nonnegative integers.
class Sequence {
 public:
  Sequence() = delete;
  explicit Sequence(std::vector<Int> terms);
  Sequence(std::initializer_list<Int> terms) : Sequence(std::vector<Int>(terms)) {}

  std::span<const Int> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  Int operator[](std::size_t i) const { return terms_[i]; }
  Int front() const noexcept { return terms_.front(); }
  Int back() const noexcept { return terms_.back(); }

  /// Position of `value` among the terms; throws IndexOutOfRange if absent.
  std::size_t index_of(Int value) const;

  std::string str() const;  // "0,1,3"

  friend bool operator==(const Sequence&, const Sequence&) = default;
  friend auto operator<=>(const Sequence&, const Sequence&) = default;

 private:
  std::vector<Int> terms_;
};

/// Parses "0,2,7" (whitespace tolerated).
Sequence parse_sequence(std::string_view text);

using Triple = std::array<Int, 3>;

/// Two distinct admissible triples with equal alternating sum a-b+c mod N.
/// `first` is the lexicographically smaller triple.
struct CollisionPair {
  Triple first;
  Triple second;
  Int residue;

  friend bool operator==(const CollisionPair&, const CollisionPair&) = default;
};

bool verify_sidon(const Sequence& seq);

/// Throws ModulusTooSmall for N < 2.
bool verify_sidon_mod(const Sequence& seq, Int modulus);

/// Appends `count` greedy terms, each the least integer keeping the sequence
/// Sidon. Starting from (0) this is the Mian-Chowla sequence.
Sequence greedy_extend(const Sequence& seq, std::size_t count);

/// max(2, 2*a_n + 1): every modulus from here on keeps the Sidon property.
Int n_zero(const Sequence& seq);

/// Least N >= 2 for which the sequence is Sidon modulo N (exhaustive scan).
Int n_double_zero(const Sequence& seq);

/// Every unordered pair of triples (a,b,c) != (a',b',c') with a!=b, b!=c
/// (a == c allowed) and a-b+c == a'-b'+c' (mod N), ordered by residue and
/// then by canonical representative.
std::vector<CollisionPair> alternating_collisions(const Sequence& seq, Int modulus);

/// Admissible triples: a != b and b != c, in lexicographic order.
std::vector<Triple> admissible_triples(const Sequence& seq);

}  // namespace sidonplex

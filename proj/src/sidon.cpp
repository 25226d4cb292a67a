#include "sidonplex/sidon.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "sidonplex/error.hpp"

namespace sidonplex {

Sequence::Sequence(std::vector<Int> terms) : terms_(std::move(terms)) {
  if (terms_.empty()) throw Error(ErrorKind::InvalidArgument, "sequence must have at least one term");
  if (terms_.front() < 0) throw Error(ErrorKind::InvalidArgument, "sequence terms must be nonnegative");
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (terms_[i] <= terms_[i - 1])
      throw Error(ErrorKind::InvalidArgument, "sequence must be strictly increasing");
  }
}

std::size_t Sequence::index_of(Int value) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), value);
  if (it == terms_.end() || *it != value)
    throw Error(ErrorKind::IndexOutOfRange, std::to_string(value) + " is not a term of " + str());
  return static_cast<std::size_t>(it - terms_.begin());
}

std::string Sequence::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) os << (i ? "," : "") << terms_[i];
  return os.str();
}

Sequence parse_sequence(std::string_view text) {
  std::vector<Int> terms;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto token = text.substr(pos, comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    Int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
      throw Error(ErrorKind::Parse, "bad sequence term '" + std::string(token) + "'");
    terms.push_back(value);
    pos = comma + 1;
  }
  return Sequence(std::move(terms));
}

namespace {

Int mod(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

bool pair_sums_distinct(const Sequence& seq, Int modulus) {
  std::unordered_set<Int> seen;
  const auto t = seq.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i; j < t.size(); ++j) {
      Int s = t[i] + t[j];
      if (modulus > 0) s = mod(s, modulus);
      if (!seen.insert(s).second) return false;
    }
  }
  return true;
}

void require_sidon(const Sequence& seq) {
  if (!verify_sidon(seq)) throw Error(ErrorKind::InputNotSidon, "(" + seq.str() + ") is not a Sidon sequence");
}

}  // namespace

bool verify_sidon(const Sequence& seq) { return pair_sums_distinct(seq, 0); }

bool verify_sidon_mod(const Sequence& seq, Int modulus) {
  if (modulus < 2) throw Error(ErrorKind::ModulusTooSmall, "modulus must be at least 2, got " + std::to_string(modulus));
  return pair_sums_distinct(seq, modulus);
}

Sequence greedy_extend(const Sequence& seq, std::size_t count) {
  require_sidon(seq);
  std::vector<Int> terms(seq.terms().begin(), seq.terms().end());
  std::unordered_set<Int> sums;
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i; j < terms.size(); ++j) sums.insert(terms[i] + terms[j]);

  for (std::size_t added = 0; added < count; ++added) {
    for (Int candidate = terms.back() + 1;; ++candidate) {
      bool ok = !sums.contains(2 * candidate);
      for (std::size_t i = 0; ok && i < terms.size(); ++i) ok = !sums.contains(terms[i] + candidate);
      if (!ok) continue;
      for (Int t : terms) sums.insert(t + candidate);
      sums.insert(2 * candidate);
      terms.push_back(candidate);
      break;
    }
  }
  return Sequence(std::move(terms));
}

Int n_zero(const Sequence& seq) {
  require_sidon(seq);
  if (seq.size() < 2) throw Error(ErrorKind::InvalidArgument, "n_zero needs at least two terms");
  return std::max<Int>(2, 2 * seq.back() + 1);
}

Int n_double_zero(const Sequence& seq) {
  require_sidon(seq);
  // A Sidon sequence stays Sidon modulo every N >= 2*a_n + 1, so the scan ends.
  for (Int n = 2;; ++n)
    if (verify_sidon_mod(seq, n)) return n;
}

std::vector<Triple> admissible_triples(const Sequence& seq) {
  std::vector<Triple> out;
  for (Int a : seq.terms())
    for (Int b : seq.terms())
      for (Int c : seq.terms())
        if (a != b && b != c) out.push_back({a, b, c});
  return out;
}

std::vector<CollisionPair> alternating_collisions(const Sequence& seq, Int modulus) {
  if (!verify_sidon_mod(seq, modulus))
    throw Error(ErrorKind::NotSidonModN, "(" + seq.str() + ") is not Sidon modulo " + std::to_string(modulus));

  std::map<Int, std::vector<Triple>> buckets;
  for (const Triple& t : admissible_triples(seq)) buckets[mod(t[0] - t[1] + t[2], modulus)].push_back(t);

  std::vector<CollisionPair> out;
  for (const auto& [residue, triples] : buckets) {
    for (std::size_t i = 0; i < triples.size(); ++i) {
      for (std::size_t j = i + 1; j < triples.size(); ++j) {
        const Triple& x = triples[i];
        const Triple& y = triples[j];
        // Sidon mod N forces distinct first and last terms in a collision.
        if (x[0] == y[0] || x[2] == y[2])
          throw std::logic_error("collision with shared end term under Sidon mod N");
        out.push_back(CollisionPair{x, y, residue});
      }
    }
  }
  return out;
}

}  // namespace sidonplex

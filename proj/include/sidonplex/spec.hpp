#pragma once

#include <array>
#include <string>
#include <vector>

#include "sidonplex/link_graph.hpp"
#include "sidonplex/sidon.hpp"

namespace sidonplex {

/// Input of the complex: for each vertex colour k = 1,2,3 (index k-1) a
/// sequence, a modulus, a face-label bijection and a link-vertex colouring
/// tau_k : parity -> {1,2,3} \ {k}.
struct ComplexSpec {
  std::vector<Sequence> sequences;
  std::array<Int, 3> moduli{};
  std::array<Sigma, 3> sigmas;
  std::array<Tau, 3> taus{};

  /// +1 when tau_k is increasing, -1 otherwise.
  int sign(int colour) const;
  std::array<int, 3> signs() const { return {sign(1), sign(2), sign(3)}; }
  /// Number of face labels, n + 1.
  std::size_t label_count() const { return sequences.empty() ? 0 : sequences.front().size(); }

  friend bool operator==(const ComplexSpec&, const ComplexSpec&) = default;
};

struct SpecReport {
  bool valid = true;
  std::vector<std::string> violations;
};

SpecReport validate_spec(const ComplexSpec& spec);
/// Throws InvalidSpec listing the violations.
void require_valid(const ComplexSpec& spec);

/// Coloured link L_k of the spec, built as S_{r_k}(a^k) with sigma_k, tau_k.
LinkGraph spec_link(const ComplexSpec& spec, int colour);

/// Same sequences, moduli and sigmas; tau_k reversed where the sign differs.
ComplexSpec with_signs(const ComplexSpec& spec, const std::array<int, 3>& signs);

/// (0,1,3) three times, moduli 8, sigma_k = (0 1 2)^(k-1), increasing taus.
ComplexSpec mk_spec();
/// One sequence repeated, every modulus N00, identity sigmas, increasing taus.
ComplexSpec modular_spec(const Sequence& seq);
/// modular_spec((0,1,3)): every link is the Heawood graph.
ComplexSpec heawood_spec();
/// Explicit moduli with identity sigmas and increasing taus.
ComplexSpec uniform_spec(const Sequence& seq, const std::array<Int, 3>& moduli);

/// The increasing bijection {0,1} -> {1,2,3} \ {colour}.
Tau increasing_tau(int colour);

}  // namespace sidonplex

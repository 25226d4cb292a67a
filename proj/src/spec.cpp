#include "sidonplex/spec.hpp"

#include <sstream>

#include "sidonplex/error.hpp"

namespace sidonplex {

Tau increasing_tau(int colour) {
  Tau t{};
  int i = 0;
  for (int c = 1; c <= 3; ++c)
    if (c != colour) t[static_cast<std::size_t>(i++)] = c;
  return t;
}

int ComplexSpec::sign(int colour) const {
  const Tau& t = taus.at(static_cast<std::size_t>(colour - 1));
  return t[0] < t[1] ? 1 : -1;
}

SpecReport validate_spec(const ComplexSpec& spec) {
  SpecReport report;
  auto fail = [&](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };
  if (spec.sequences.size() != 3) {
    fail("expected three sequences, got " + std::to_string(spec.sequences.size()));
    return report;
  }
  const std::size_t len = spec.sequences[0].size();
  if (len < 2) fail("sequences need at least two terms");
  for (int k = 1; k <= 3; ++k) {
    const auto i = static_cast<std::size_t>(k - 1);
    const Sequence& seq = spec.sequences[i];
    const std::string tag = "colour " + std::to_string(k) + ": ";
    if (seq.size() != len) fail(tag + "sequence length differs from colour 1");
    if (spec.moduli[i] < 2) {
      fail(tag + "modulus below 2");
    } else if (!verify_sidon_mod(seq, spec.moduli[i])) {
      std::ostringstream os;
      os << tag << '(' << seq.str() << ") is not Sidon modulo " << spec.moduli[i];
      fail(os.str());
    }
    const Sigma& sigma = spec.sigmas[i];
    std::vector<bool> hit(len, false);
    bool ok = sigma.size() == len;
    for (int s : sigma) {
      if (!ok) break;
      if (s < 0 || static_cast<std::size_t>(s) >= len || hit[static_cast<std::size_t>(s)]) ok = false;
      else hit[static_cast<std::size_t>(s)] = true;
    }
    if (!ok) fail(tag + "sigma is not a bijection onto the labels");
    const Tau& tau = spec.taus[i];
    if (tau[0] == tau[1] || tau[0] == k || tau[1] == k || tau[0] < 1 || tau[0] > 3 || tau[1] < 1 || tau[1] > 3)
      fail(tag + "tau is not a bijection onto the other two colours");
  }
  return report;
}

void require_valid(const ComplexSpec& spec) {
  auto report = validate_spec(spec);
  if (report.valid) return;
  std::string msg;
  for (const auto& v : report.violations) msg += (msg.empty() ? "" : "; ") + v;
  throw Error(ErrorKind::InvalidSpec, msg);
}

LinkGraph spec_link(const ComplexSpec& spec, int colour) {
  if (colour < 1 || colour > 3) throw Error(ErrorKind::InvalidArgument, "vertex colour must be 1, 2 or 3");
  const auto i = static_cast<std::size_t>(colour - 1);
  return build_link(spec.sequences.at(i), spec.moduli[i], spec.sigmas[i], spec.taus[i]);
}

ComplexSpec with_signs(const ComplexSpec& spec, const std::array<int, 3>& signs) {
  ComplexSpec out = spec;
  for (int k = 1; k <= 3; ++k) {
    auto& t = out.taus[static_cast<std::size_t>(k - 1)];
    if (out.sign(k) != signs[static_cast<std::size_t>(k - 1)]) std::swap(t[0], t[1]);
  }
  return out;
}

namespace {

Sigma identity_sigma(std::size_t len) {
  Sigma s(len);
  for (std::size_t i = 0; i < len; ++i) s[i] = static_cast<int>(i);
  return s;
}

}  // namespace

ComplexSpec uniform_spec(const Sequence& seq, const std::array<Int, 3>& moduli) {
  ComplexSpec spec;
  spec.sequences = {seq, seq, seq};
  spec.moduli = moduli;
  for (int k = 1; k <= 3; ++k) {
    spec.sigmas[static_cast<std::size_t>(k - 1)] = identity_sigma(seq.size());
    spec.taus[static_cast<std::size_t>(k - 1)] = increasing_tau(k);
  }
  return spec;
}

ComplexSpec modular_spec(const Sequence& seq) {
  Int n = n_double_zero(seq);
  return uniform_spec(seq, {n, n, n});
}

ComplexSpec heawood_spec() { return modular_spec({0, 1, 3}); }

ComplexSpec mk_spec() {
  ComplexSpec spec = uniform_spec({0, 1, 3}, {8, 8, 8});
  // sigma_k = c^(k-1) with c the cycle 0 -> 1 -> 2 -> 0.
  for (int k = 1; k <= 3; ++k)
    for (int r = 0; r < 3; ++r)
      spec.sigmas[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(r)] = (r + k - 1) % 3;
  return spec;
}

}  // namespace sidonplex

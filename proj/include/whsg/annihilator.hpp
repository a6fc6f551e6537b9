#pragma once

#include <json.hpp>
#include <vector>

#include "whsg/testfn.hpp"

namespace whsg {

/// Mother (x-0.1)^p (0.9-x)^p normalized to unit integral.
TestFunction default_mother(int p);

struct AnnihilatorConfig {
  int K = 4;
  Real epsilon = 1e-2L;
  Real a0 = 1.25L;
  TestFunction mother = default_mother(6);
};

struct BlockRecord {
  int k = 0;
  Real a_k = 0;
  Real a_k1 = 0;
  Real gamma = 0;
  Real lambda = 0;
  TestFunction f_k;
  Real norm_fk = 0;
  Real bound = 0;             // epsilon / (2^{k+1} a_{k+1}^k)
  Real moment_closed = 0;     // (-1)^k k! I gamma ((a_{k+1}-a_k)/a0)^{k+1}
  Real moment_exact = 0;      // exact integral of x^k f_k
};

struct AnnihilatorResult {
  TestFunction f;
  TestFunction mother;
  std::vector<BlockRecord> blocks;
  Real I = 0;
  std::vector<Real> moment_defects;  // relative, orders 0..K
  Real l2_distance = 0;              // ||f - g|| from the block norms
  bool mirrored = false;
};

/// Smallest a_k + 2^m (m >= 0) whose width w satisfies, strictly, both
///   w^{k+3/2} / a^k > c a0^{k+3/2} ||g^(k)||   and
///   w^{k+1/2} / a^k > c a0^{k+1/2} ||g^(k)||,   c = |lambda| 2^{k+1} / (eps |I| k!),
/// where a = a_k + w.  The second form is the one equivalent to the block
/// norm bound.  Returns a_k + 1 when lambda = 0.
Real choose_interval(int k, Real a_k, Real lambda, Real I, Real deriv_norm, const AnnihilatorConfig& config);

/// f_k(x) = gamma g^(k)(a0 (x - a_k)/(a_{k+1} - a_k)) with
/// gamma = (-1)^k lambda / (k! I) (a0/(a_{k+1} - a_k))^{k+1}.
BlockRecord build_block(int k, Real a_k, Real a_k1, Real lambda, const AnnihilatorConfig& config);

/// g + f_0 + ... + f_K with moments 0..K cancelled.
AnnihilatorResult annihilate(const AnnihilatorConfig& config);

/// Mirror image of annihilate(): support in (-a_{K+1}, 0).
AnnihilatorResult annihilate_negative(const AnnihilatorConfig& config);

/// {K, epsilon, I, blocks:[...], moment_defects:[...], l2_distance}.
nlohmann::json annihilator_report(const AnnihilatorResult& result, const AnnihilatorConfig& config);

}  // namespace whsg

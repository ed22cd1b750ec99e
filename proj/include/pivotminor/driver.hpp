#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pivotminor/decomposition.hpp"
#include "pivotminor/extraction.hpp"

namespace pivotminor {

struct ConstantsBundle {
  int k = 0;
  int L = 0;
  double alpha = 0;       // pipeline degree fraction, a power of two
  double alpha_hole = 0;  // hole-mode degree fraction for L
  double eps0 = 0;        // hole-mode pair fraction
  double eps = 0;         // target pair fraction for the whole graph
  double delta = 0;       // measured restriction fraction

  /// Checks 4·alpha ≤ alpha_hole, alpha < 1/(8k), and the three eps bounds (strict).
  Verdict validate() const;
  bool operator==(const ConstantsBundle&) const = default;
};

/// Largest alpha = 2^-t with 4·alpha ≤ alpha_hole(L) and alpha < 1/(8k); eps is
/// 0.99 times the minimum of delta/12, (1-4(k+3)alpha)·delta/240, eps0·delta/12.
ConstantsBundle make_constants(int k, double delta);

struct PipelineOptions {
  /// Degree fraction handed to restriction_finder; 0 means 1/L.
  double restriction_alpha = 0;
};

struct RunReport {
  std::string fingerprint;
  int n = 0;
  int k = 0;
  ConstantsBundle constants;
  std::vector<std::string> trace;  // one line per stage
  std::optional<Certificate> certificate;
  double frac_a = 0;  // |A|/n for pure pairs
  double frac_b = 0;
  int witness_ops = 0;
  bool ok = false;
  std::string diagnostic;
  double wall_ms = 0;
};

/// Restriction, connected piece or pure pair, skeleton, tree split, then the
/// sweep on the side the restriction chose. Never returns an unverified
/// certificate; `ok` is false when no stage produced one.
RunReport strong_eh_pipeline(const Graph& g, int k, const PipelineOptions& options = {});

}  // namespace pivotminor

#pragma once

#include <string>
#include <variant>
#include <vector>

#include "pivotminor/graph.hpp"
#include "pivotminor/pivot.hpp"

namespace pivotminor {

/// An induced cycle given in cyclic order.
struct Hole {
  VertexSet order;
  bool operator==(const Hole&) const = default;
};

using Certificate = std::variant<PurePair, Witness, Hole>;

/// Checks the embedded object against g: pure pairs via verify_pure_pair,
/// witnesses via verify_ck_witness, holes as induced cycles of length at
/// least max(5, min_hole).
Verdict verify_certificate(const Graph& g, const Certificate& c, int min_hole = 5);

std::string_view certificate_type(const Certificate& c);

/// Raised when a sweep cannot produce a certificate. Under the documented
/// constants this does not happen; it is reachable in best-effort mode.
class SweepFailure : public Error {
 public:
  using Error::Error;
};

/// Vertex classes at window i over the path labelled 1..s. The window is
/// U⁰ = {i, ..., i+width-1}; U⁻ lies before it and U⁺ after it.
struct SweepState {
  int i = 0;
  int s = 0;
  int width = 0;
  VertexSet a, b;
  VertexSet c[2];  // c[0] is C¹ (m⁻ odd), c[1] is C² (m⁻ even)
  VertexSet d[2];  // d[0] is D¹ (m⁺ ≡ k), d[1] is D² (m⁺ ≡ k+1)
  std::vector<int> m_minus;  // by vertex id; 0 when undefined
  std::vector<int> m_plus;   // by vertex id; 0 when undefined
};

/// Builds the classes at window i (1 ≤ i ≤ s-width+1) and checks that they
/// partition V together with the path. For the pivot-mode sweep width = k.
SweepState build_sweep_state(const Graph& g, std::span<const Vertex> path, int i, int width);

/// Checks that `path` is an induced path dominating g.
Verdict check_dominating_path(const Graph& g, std::span<const Vertex> path);

struct SweepOptions {
  /// When false the constant inequalities are not enforced (degree bound and
  /// path validity still are); the sweep may then fail with SweepFailure.
  bool enforce_constants = true;
};

struct SweepResult {
  Certificate certificate;
  std::string clause;  // which clause produced it
};

/// Pure pair with both sides ≥ eps·n, or a witness to C_k.
SweepResult sweep_pivot_mode(const Graph& g, std::span<const Vertex> path, int k, double alpha, double eps,
                             const SweepOptions& options = {});

/// Anticomplete pure pair with both sides ≥ eps·n, or a hole of length ≥ L.
SweepResult sweep_hole_mode(const Graph& g, std::span<const Vertex> path, int L, double alpha, double eps,
                            const SweepOptions& options = {});

/// Default hole-mode constants: alpha = 1/(8(L+2)), eps = 1/48.
double hole_mode_alpha(int L);
inline constexpr double kHoleModeEps = 1.0 / 48;

}  // namespace pivotminor

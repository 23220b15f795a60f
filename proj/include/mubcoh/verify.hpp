#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mubcoh/types.hpp"

namespace mubcoh {

/// Default seeds, one per claim, so repeated runs are bit-identical.
inline constexpr std::uint64_t kQubitBoundSeed = 42;
inline constexpr std::uint64_t kXStateSeed = 7;
inline constexpr std::uint64_t kBellFormsSeed = 1;

inline constexpr std::uint64_t kDefaultSamples = 10000;
inline constexpr std::uint64_t kDefaultGridPoints = 21;
inline constexpr Real kDefaultVerifyTol = 1e-12;

struct VerifyOptions {
  std::uint64_t samples = kDefaultSamples;
  std::uint64_t seed = 0;
  Real tolerance = kDefaultVerifyTol;
  /// Perturbation added to one closed form per sample; nonzero only in
  /// negative-control runs, which must then report passed = false.
  Real inject = 0.0;
};

struct GridVerifyOptions {
  std::uint64_t grid_points = kDefaultGridPoints;
  Real tolerance = kDefaultVerifyTol;
  Real inject = 0.0;
};

/// Outcome of one randomized or grid sweep. Invariant: passed is exactly
/// max_deviation <= tolerance. With samples = 0 the sweep is vacuous:
/// max_deviation = 0, passed = true, and details say so.
struct VerificationReport {
  std::string claim_id;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Real max_deviation = 0.0;
  Real tolerance = 0.0;
  bool passed = false;
  std::string details;
};

/// claim "qubit-bound": on uniform Bloch-ball points the three closed-form
/// coherences match conjugation, their squares sum to twice the squared
/// Bloch norm (hence stay below 2), with equality on unit-sphere points
/// (samples/10 of them).
VerificationReport verify_qubit_bound(const VerifyOptions& opt);

/// claim "xstate-equality": each one-coupling dimension-3 family has the
/// same coherence in all three Fourier-type bases, on `samples` physical
/// and `samples` unrestricted parameter draws per family.
VerificationReport verify_xstate_equality(const VerifyOptions& opt);

/// claim "bell-forms": correlation-diagonal two-qubit states expressed in
/// the three product bases reproduce the shared corner/inner pattern, the
/// closed forms match conjugation on physical draws, and each closed form
/// equals max(|a|, |b|) of its two components.
VerificationReport verify_bell_forms(const VerifyOptions& opt);

/// claim "werner-isotropic": along both one-parameter families the
/// coherence is the same in all three product bases and matches the known
/// absolute-value expression, on uniform parameter grids.
VerificationReport verify_werner_isotropic(const GridVerifyOptions& opt);

struct AllVerifyOptions {
  std::uint64_t samples = kDefaultSamples;
  /// When absent every claim uses its own default seed.
  std::optional<std::uint64_t> seed;
  std::uint64_t grid_points = kDefaultGridPoints;
  Real tolerance = kDefaultVerifyTol;
  Real inject = 0.0;
};

/// Runs the four claims in a fixed order.
std::vector<VerificationReport> verify_all(const AllVerifyOptions& opt);

}  // namespace mubcoh

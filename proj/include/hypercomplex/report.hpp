#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hypercomplex/random.hpp"

namespace hypercomplex {

using Json = nlohmann::ordered_json;

/// One failing trial: the sampled inputs, the relation that broke and both of
/// its sides, all in canonical text form.
struct Witness {
  std::uint64_t trial = 0;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string relation;
  std::string lhs;
  std::string rhs;

  [[nodiscard]] Json to_json() const;
};

struct IdentityReport {
  static constexpr std::size_t max_witnesses = 10;

  std::string identity;
  std::string algebra;
  std::uint64_t trials = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
  /// Lowest-numbered failing trials, at most max_witnesses of them.
  std::vector<Witness> witnesses;

  [[nodiscard]] Json to_json() const;
  [[nodiscard]] std::string to_text() const;
};

struct SweepOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  unsigned workers = 1;
};

/// Runs one check per trial index, each on trial_stream(seed, index). A check
/// returns a witness when the trial fails. Trials are split into contiguous
/// blocks across workers; counts add and witnesses are merged by trial index,
/// so the report does not depend on the worker count.
using TrialCheck = std::function<std::optional<Witness>(SplitMix64& rng, std::uint64_t trial)>;

[[nodiscard]] IdentityReport run_sweep(std::string identity, std::string algebra, const SweepOptions& options,
                                       const TrialCheck& check);

}  // namespace hypercomplex

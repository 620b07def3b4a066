#include "hypercomplex/report.hpp"

#include <algorithm>
#include <exception>
#include <sstream>
#include <thread>

namespace hypercomplex {

Json Witness::to_json() const {
  Json inputs_json = Json::object();
  for (const auto& [name, text] : inputs) inputs_json[name] = text;
  Json out;
  out["trial"] = trial;
  out["inputs"] = std::move(inputs_json);
  out["relation"] = relation;
  out["lhs"] = lhs;
  out["rhs"] = rhs;
  return out;
}

Json IdentityReport::to_json() const {
  Json out;
  out["identity"] = identity;
  out["algebra"] = algebra;
  out["trials"] = trials;
  out["failures"] = failures;
  out["seed"] = seed;
  Json list = Json::array();
  for (const auto& w : witnesses) list.push_back(w.to_json());
  out["witnesses"] = std::move(list);
  return out;
}

std::string IdentityReport::to_text() const {
  std::ostringstream os;
  os << "identity: " << identity << '\n'
     << "algebra:  " << algebra << '\n'
     << "trials:   " << trials << '\n'
     << "failures: " << failures << '\n'
     << "seed:     " << seed << '\n';
  for (const auto& w : witnesses) {
    os << "witness (trial " << w.trial << ", " << w.relation << ")\n";
    for (const auto& [name, text] : w.inputs) os << "  " << name << " = " << text << '\n';
    os << "  lhs = " << w.lhs << '\n' << "  rhs = " << w.rhs << '\n';
  }
  return os.str();
}

namespace {

struct Partial {
  std::uint64_t failures = 0;
  std::vector<Witness> witnesses;
  std::exception_ptr error;
};

void run_block(std::uint64_t begin, std::uint64_t end, std::uint64_t seed, const TrialCheck& check, Partial& out) {
  try {
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      SplitMix64 rng = trial_stream(seed, trial);
      if (auto w = check(rng, trial)) {
        ++out.failures;
        if (out.witnesses.size() < IdentityReport::max_witnesses) {
          w->trial = trial;
          out.witnesses.push_back(std::move(*w));
        }
      }
    }
  } catch (...) {
    out.error = std::current_exception();
  }
}

}  // namespace

IdentityReport run_sweep(std::string identity, std::string algebra, const SweepOptions& options,
                         const TrialCheck& check) {
  IdentityReport report;
  report.identity = std::move(identity);
  report.algebra = std::move(algebra);
  report.trials = options.trials;
  report.seed = options.seed;

  const std::uint64_t workers =
      std::clamp<std::uint64_t>(options.workers, 1, std::max<std::uint64_t>(1, options.trials));
  std::vector<Partial> partials(workers);
  if (workers == 1) {
    run_block(0, options.trials, options.seed, check, partials[0]);
  } else {
    std::vector<std::thread> threads;
    const std::uint64_t block = (options.trials + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(options.trials, w * block);
      const std::uint64_t end = std::min(options.trials, begin + block);
      threads.emplace_back(run_block, begin, end, options.seed, std::cref(check), std::ref(partials[w]));
    }
    for (auto& t : threads) t.join();
  }

  for (auto& p : partials) {
    if (p.error) std::rethrow_exception(p.error);
    report.failures += p.failures;
    for (auto& w : p.witnesses) report.witnesses.push_back(std::move(w));
  }
  std::sort(report.witnesses.begin(), report.witnesses.end(),
            [](const Witness& a, const Witness& b) { return a.trial < b.trial; });
  if (report.witnesses.size() > IdentityReport::max_witnesses) report.witnesses.resize(IdentityReport::max_witnesses);
  return report;
}

}  // namespace hypercomplex

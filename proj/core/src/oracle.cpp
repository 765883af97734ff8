#include "ncca/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "ncca/error.hpp"

namespace ncca {

namespace {

void check_size(std::size_t n, const OracleLimits& limits) {
  if (n < 3) throw InvalidInput("the oracle needs at least 3 cells");
  if (n > static_cast<std::size_t>(limits.max_cells) || n > 31)
    throw ResourceLimit("the oracle is capped at " + std::to_string(std::min(limits.max_cells, 31)) +
                        " cells; got " + std::to_string(n));
}

// Next state of the state encoded by `s` (cell 0 = bit n-1), computed from
// the rotated neighbours so every cell is read with one shift.
struct Stepper {
  int n;
  std::uint32_t full;
  std::vector<std::uint8_t> rules;  // rules[i] for cell i

  explicit Stepper(const RuleVector& rv) : n(static_cast<int>(rv.size())) {
    full = n == 32 ? ~0u : ((1u << n) - 1u);
    for (auto r : rv.rules()) rules.push_back(r.wolfram());
  }

  std::uint32_t operator()(std::uint32_t s) const {
    // Bit position p holds cell n-1-p; its left neighbour is cell n-2-p, i.e. position p+1.
    const std::uint32_t left = ((s >> 1) | (s << (n - 1))) & full;
    const std::uint32_t right = ((s << 1) | (s >> (n - 1))) & full;
    std::uint32_t next = 0;
    for (int i = 0; i < n; ++i) {
      const int p = n - 1 - i;
      const unsigned rmt = (((left >> p) & 1u) << 2) | (((s >> p) & 1u) << 1) | ((right >> p) & 1u);
      next |= static_cast<std::uint32_t>((rules[static_cast<std::size_t>(i)] >> rmt) & 1u) << p;
    }
    return next;
  }
};

bool conserves(const Stepper& step) {
  const std::uint32_t count = 1u << step.n;
  for (std::uint32_t s = 0; s < count; ++s)
    if (__builtin_popcount(step(s)) != __builtin_popcount(s)) return false;
  return true;
}

}  // namespace

bool brute_force_is_ncca(const RuleVector& rv, const OracleLimits& limits) {
  check_size(rv.size(), limits);
  return conserves(Stepper(rv));
}

std::vector<std::uint32_t> StateTransitionGraph::non_reachable() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < size(); ++s)
    if (!reachable(s)) out.push_back(s);
  return out;
}

std::vector<std::uint32_t> StateTransitionGraph::reachable_states() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < size(); ++s)
    if (reachable(s)) out.push_back(s);
  return out;
}

StateTransitionGraph build_stg(const RuleVector& rv, const OracleLimits& limits) {
  check_size(rv.size(), limits);
  const Stepper step(rv);
  StateTransitionGraph g;
  g.n = step.n;
  const std::uint32_t count = 1u << step.n;
  g.successor.resize(count);
  g.predecessor_count.assign(count, 0);
  for (std::uint32_t s = 0; s < count; ++s) {
    g.successor[s] = step(s);
    ++g.predecessor_count[g.successor[s]];
  }
  return g;
}

Census count_ncca_vectors(int n, const CensusOptions& options) {
  if (n < 3) throw InvalidInput("census needs n >= 3");
  Census census;
  census.n = n;
  if (options.alphabet.empty()) {
    for (auto w : kNumberConservingRules) census.alphabet.emplace_back(w);
  } else {
    census.alphabet = options.alphabet;
  }
  const std::uint64_t a = census.alphabet.size();
  const double work = std::pow(static_cast<double>(a), n) * std::ldexp(1.0, n) * n;
  if (n > 31 || work > options.work_budget)
    throw ResourceLimit("census work estimate " + std::to_string(work) + " exceeds the budget of " +
                        std::to_string(options.work_budget));
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= a;

  unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(total, 1)));

  auto vector_at = [&](std::uint64_t idx) {
    std::vector<RuleTable> rules(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
      rules[static_cast<std::size_t>(i)] = census.alphabet[idx % a];
      idx /= a;
    }
    return RuleVector(std::move(rules));
  };

  struct Partial {
    std::uint64_t count = 0;
    std::vector<std::uint64_t> listed;
  };
  std::vector<Partial> parts(jobs);
  auto work_range = [&](unsigned j) {
    const std::uint64_t begin = total * j / jobs;
    const std::uint64_t end = total * (j + 1) / jobs;
    Partial& p = parts[j];
    for (std::uint64_t idx = begin; idx < end; ++idx) {
      if (!conserves(Stepper(vector_at(idx)))) continue;
      ++p.count;
      if (p.listed.size() <= options.max_listed) p.listed.push_back(idx);
    }
  };
  if (jobs == 1) {
    work_range(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work_range, j);
    for (auto& t : threads) t.join();
  }

  for (const auto& p : parts) census.count += p.count;
  if (census.count <= options.max_listed) {
    std::vector<RuleVector> listed;
    for (const auto& p : parts)
      for (auto idx : p.listed) listed.push_back(vector_at(idx));
    census.accepted_vectors = std::move(listed);
  }
  return census;
}

}  // namespace ncca

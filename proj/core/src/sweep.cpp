#include "adapt_meter/sweep.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <limits>

#include "adapt_meter/error.hpp"

namespace adapt_meter {

std::vector<VariabilitySlot> enumerate_slots(const ProcessModel& process,
                                             const AnalysisConfig& config) {
  std::vector<VariabilitySlot> slots;
  for (const VisitedActivity& visited : iter_activities(process)) {
    if (!is_join_point(*visited.activity, config)) continue;
    for (AdviceType type : kAllAdviceTypes) slots.push_back({visited.path, type});
  }
  return slots;
}

VariabilityProfile profile_from_slots(std::span<const VariabilitySlot> slots) {
  std::vector<JoinPointBinding> bindings;
  bindings.reserve(slots.size());
  for (const VariabilitySlot& slot : slots) {
    bindings.push_back({"sweep", std::string(to_string(slot.advice_type)),
                        slot.path, slot.advice_type});
  }
  return make_profile(std::move(bindings));
}

SweepCase sweep_case(const ProcessModel& process,
                     std::span<const VariabilitySlot> order,
                     const AnalysisConfig& config) {
  SweepCase result;
  result.order.assign(order.begin(), order.end());
  result.series.reserve(order.size() + 1);
  for (std::size_t k = 0; k <= order.size(); ++k) {
    const auto profile = profile_from_slots(order.first(k));
    result.series.push_back(
        {static_cast<int>(k), process_adaptability(process, profile, config).pam});
  }
  return result;
}

std::uint64_t SlotShuffler::below(std::uint64_t bound) {
  // Reject the top partial bucket so every residue is equally likely.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return draw % bound;
}

std::vector<VariabilitySlot> SlotShuffler::shuffle(
    std::span<const VariabilitySlot> slots) {
  std::vector<VariabilitySlot> out(slots.begin(), slots.end());
  for (std::size_t i = out.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(below(i));
    std::swap(out[i - 1], out[j]);
  }
  return out;
}

namespace {

// min(n!, cap) without overflow.
std::uint64_t capped_factorial(std::size_t n, std::uint64_t cap) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n && f < cap; ++i) f *= i;
  return std::min(f, cap);
}

}  // namespace

SweepResult run_sweep(const ProcessModel& process, int num_cases,
                      std::uint64_t seed, const AnalysisConfig& config) {
  if (num_cases < 1) {
    throw Error(ErrorCode::kInvalidConfig,
                "number of sweep cases must be >= 1, got " + std::to_string(num_cases));
  }
  config.validate();
  const auto slots = enumerate_slots(process, config);

  const auto wanted = static_cast<std::uint64_t>(num_cases);
  const bool want_distinct = capped_factorial(slots.size(), wanted) >= wanted;
  SlotShuffler shuffler(seed);
  std::vector<std::vector<VariabilitySlot>> orders;
  orders.reserve(wanted);
  while (orders.size() < wanted) {
    auto order = shuffler.shuffle(slots);
    if (want_distinct &&
        std::find(orders.begin(), orders.end(), order) != orders.end()) {
      continue;
    }
    orders.push_back(std::move(order));
  }

  std::vector<std::future<SweepCase>> pending;
  pending.reserve(orders.size());
  for (const auto& order : orders) {
    pending.push_back(std::async(std::launch::async, [&process, &order, &config] {
      return sweep_case(process, order, config);
    }));
  }

  SweepResult result;
  result.process_name = process.name();
  result.slot_count = static_cast<int>(slots.size());
  result.seed = seed;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    SweepCase c = pending[i].get();
    c.case_id = static_cast<int>(i);
    result.cases.push_back(std::move(c));
  }
  return result;
}

std::vector<SweepEnvelope> exhaustive_sweep(const ProcessModel& process,
                                            const AnalysisConfig& config) {
  config.validate();
  const auto slots = enumerate_slots(process, config);
  if (slots.size() > static_cast<std::size_t>(kMaxExhaustiveSlots)) {
    throw Error(ErrorCode::kTooManySlots,
                "exhaustive sweep supports at most " +
                    std::to_string(kMaxExhaustiveSlots) + " slots, process has " +
                    std::to_string(slots.size()));
  }
  const std::size_t n = slots.size();
  std::vector<SweepEnvelope> envelopes(n + 1);
  std::vector<double> sums(n + 1, 0.0);
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (std::size_t k = 0; k <= n; ++k) {
    envelopes[k].count = static_cast<int>(k);
    envelopes[k].min_pam = std::numeric_limits<double>::infinity();
    envelopes[k].max_pam = -std::numeric_limits<double>::infinity();
  }

  std::vector<VariabilitySlot> subset;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(slots[i]);
    }
    const double pam =
        process_adaptability(process, profile_from_slots(subset), config).pam;
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    envelopes[k].min_pam = std::min(envelopes[k].min_pam, pam);
    envelopes[k].max_pam = std::max(envelopes[k].max_pam, pam);
    sums[k] += pam;
    ++counts[k];
  }
  for (std::size_t k = 0; k <= n; ++k) {
    // Clamp away summation rounding when every subset has the same PAM.
    envelopes[k].mean_pam =
        std::clamp(sums[k] / static_cast<double>(counts[k]), envelopes[k].min_pam,
                   envelopes[k].max_pam);
  }
  return envelopes;
}

}  // namespace adapt_meter

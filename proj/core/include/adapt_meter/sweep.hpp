#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "adapt_meter/metrics.hpp"
#include "adapt_meter/process_model.hpp"

namespace adapt_meter {

// One free advice position: an advice type at a join point.
struct VariabilitySlot {
  ActivityPath path;
  AdviceType advice_type = AdviceType::kBefore;

  friend bool operator==(const VariabilitySlot&, const VariabilitySlot&) = default;
};

struct SweepPoint {
  int count = 0;
  double pam = 0.0;
};

struct SweepCase {
  int case_id = 0;
  std::vector<VariabilitySlot> order;
  std::vector<SweepPoint> series;  // counts 0..order.size()
};

struct SweepResult {
  std::string process_name;
  int slot_count = 0;
  std::uint64_t seed = 0;
  std::vector<SweepCase> cases;
};

struct SweepEnvelope {
  int count = 0;
  double min_pam = 0.0;
  double mean_pam = 0.0;
  double max_pam = 0.0;
};

inline constexpr int kMaxExhaustiveSlots = 12;

// Join points in pre-order, each expanded to before/around/after.
std::vector<VariabilitySlot> enumerate_slots(const ProcessModel& process,
                                             const AnalysisConfig& config);

// Profile holding exactly the given slots (one binding each).
VariabilityProfile profile_from_slots(std::span<const VariabilitySlot> slots);

// PAM after placing the first k slots of `order`, for k = 0..order.size().
SweepCase sweep_case(const ProcessModel& process,
                     std::span<const VariabilitySlot> order,
                     const AnalysisConfig& config);

// `num_cases` seeded random placement orders. Orders are pairwise distinct
// whenever the slot count admits that many permutations. Deterministic in
// (process, num_cases, seed, config).
SweepResult run_sweep(const ProcessModel& process, int num_cases,
                      std::uint64_t seed, const AnalysisConfig& config);

// min/mean/max PAM over every k-subset of slots, k = 0..slots.
// Throws Error(kTooManySlots) above kMaxExhaustiveSlots.
std::vector<SweepEnvelope> exhaustive_sweep(const ProcessModel& process,
                                            const AnalysisConfig& config);

// Fisher-Yates driven by mt19937_64 with rejection sampling, so a seed yields
// the same order on every platform and standard library.
class SlotShuffler {
 public:
  explicit SlotShuffler(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

  std::vector<VariabilitySlot> shuffle(std::span<const VariabilitySlot> slots);

 private:
  std::mt19937_64 engine_;
};

}  // namespace adapt_meter

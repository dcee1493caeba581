#ifndef NCODE_CHANNEL_HPP
#define NCODE_CHANNEL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncode/ncode.hpp"

namespace ncode {

/// Counter-based deterministic randomness: every draw is a pure function of
/// (seed, stream, counter) through two rounds of the splitmix64 finalizer.
/// Trials can therefore run in any order, or in parallel, with identical
/// results.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, std::uint64_t stream);
    std::uint64_t word(std::uint64_t counter) const;
    /// Uniform in [0, 1).
    double uniform(std::uint64_t counter) const;
    bool bernoulli(double p, std::uint64_t counter) const;

  private:
    std::uint64_t key_;
};

struct ChannelConfig {
    double flip_probability = 0.0;
    std::uint64_t seed = 0;
    int trials = 1;
    DecodeMethod decoder = DecodeMethod::CosetLeader;

    void validate() const;
};

/// Flip each bit independently with probability p; deterministic in
/// (seed, trial).
NWord bsc_corrupt(const NWord& sent, const ChannelConfig& cfg, std::uint64_t trial);
BitWord bsc_corrupt_word(const BitWord& sent, double p, const CounterRng& rng, std::uint64_t counter_base);

/// Error pattern of exactly the requested weight, positions drawn without
/// replacement; deterministic in (seed, trial).
NWord exact_weight_error(const std::vector<LinearCode>& comps, const NTuple& weights, const ChannelConfig& cfg,
                         std::uint64_t trial);
NWord exact_weight_error(const NCode& nc, const NTuple& weights, const ChannelConfig& cfg, std::uint64_t trial);

struct TrialRecord {
    NWord sent, received, decoded;
    std::vector<bool> success;   // per component: decoded part == sent part
    std::vector<int> injected;   // per component: bits flipped by the channel
};

struct ComponentStats {
    int component = 0;  // 1-based
    long trials = 0;
    long successes = 0;
    double rate = 0.0;
    double mean_injected_errors = 0.0;
};

struct ExperimentSummary {
    std::vector<ComponentStats> components;
    /// Header "component,trials,successes,rate,mean_injected_errors".
    std::string to_csv() const;
};

ExperimentSummary summarize(const std::vector<TrialRecord>& records);

enum class ErrorModel { Bernoulli, ExactWeight };

struct TrialOptions {
    ErrorModel model = ErrorModel::Bernoulli;
    NTuple exact_weights;  // used by ExactWeight
};

/// Random messages, channel corruption, decode, per-component bookkeeping.
/// The component-list overloads also accept a single code.
std::vector<TrialRecord> run_trial_records(const std::vector<LinearCode>& comps, const ChannelConfig& cfg,
                                           const TrialOptions& opts = {});
std::vector<TrialRecord> run_trial_records(const NCode& nc, const ChannelConfig& cfg, const TrialOptions& opts = {});
ExperimentSummary run_trials(const std::vector<LinearCode>& comps, const ChannelConfig& cfg,
                             const TrialOptions& opts = {});
ExperimentSummary run_trials(const NCode& nc, const ChannelConfig& cfg, const TrialOptions& opts = {});

struct SweepResult {
    long patterns = 0;
    long corrected = 0;
    bool all_corrected() const { return corrected == patterns; }
};

/// Every error pattern of the given weight against every codeword.
SweepResult exhaustive_pattern_sweep(const LinearCode& code, int weight,
                                     TiePolicy policy = TiePolicy::EarliestSupport);

/// Which components belong to which customer; everything unassigned is a
/// decoy slot filled with a random valid codeword.
struct SlotAssignment {
    struct Customer {
        std::string id;
        std::vector<int> slots;  // 0-based component indices
    };
    std::vector<Customer> customers;

    std::vector<int> decoy_slots(const NCode& nc) const;
    void validate(const NCode& nc) const;
};

struct MultiplexTrial {
    std::map<std::string, std::vector<BitWord>> recovered;  // per customer, per slot
    bool all_exact = false;
    TrialRecord record;
};

/// One send/corrupt/decode round: each customer encodes its payload into its
/// slots, decoys carry random codewords, and every customer decodes only its
/// own slots.
MultiplexTrial multiplex_roundtrip(const NCode& nc, const SlotAssignment& assign,
                                   const std::map<std::string, std::vector<BitWord>>& payloads,
                                   const ChannelConfig& cfg, std::uint64_t trial = 0);

}  // namespace ncode

#endif

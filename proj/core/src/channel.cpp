#include "ncode/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ncode {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(splitmix64(seed) ^ splitmix64(~stream)) {}

std::uint64_t CounterRng::word(std::uint64_t counter) const { return splitmix64(key_ ^ splitmix64(counter)); }

double CounterRng::uniform(std::uint64_t counter) const {
    return static_cast<double>(word(counter) >> 11) * 0x1.0p-53;
}

bool CounterRng::bernoulli(double p, std::uint64_t counter) const { return uniform(counter) < p; }

void ChannelConfig::validate() const {
    if (flip_probability < 0.0 || flip_probability > 1.0) throw input_error("flip probability must be in [0, 1]");
    if (trials < 1) throw input_error("need at least one trial");
}

BitWord bsc_corrupt_word(const BitWord& sent, double p, const CounterRng& rng, std::uint64_t counter_base) {
    BitWord out = sent;
    for (int i = 0; i < sent.size(); ++i)
        if (rng.bernoulli(p, counter_base + i)) out.set(i, !out.bit(i));
    return out;
}

NWord bsc_corrupt(const NWord& sent, const ChannelConfig& cfg, std::uint64_t trial) {
    cfg.validate();
    NWord out;
    for (int c = 0; c < sent.count(); ++c) {
        CounterRng rng(cfg.seed, /*stream=*/0x100 + c);
        out.parts.push_back(bsc_corrupt_word(sent.parts[c], cfg.flip_probability, rng, trial << 8));
    }
    return out;
}

NWord exact_weight_error(const std::vector<LinearCode>& comps, const NTuple& weights, const ChannelConfig& cfg,
                         std::uint64_t trial) {
    if (weights.values.size() != comps.size()) throw input_error("one error weight per component required");
    NWord out;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        const int n = comps[c].n();
        const int w = weights.values[c];
        if (w < 0 || w > n) throw input_error("error weight out of range for component " + std::to_string(c + 1));
        CounterRng rng(cfg.seed, /*stream=*/0x200 + c);
        // Partial Fisher-Yates over the positions, driven by counter draws.
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[i] = i;
        BitWord e(n);
        for (int i = 0; i < w; ++i) {
            const std::uint64_t r = rng.word((trial << 8) + i);
            const int j = i + static_cast<int>(r % (n - i));
            std::swap(pos[i], pos[j]);
            e.set(pos[i], true);
        }
        out.parts.push_back(e);
    }
    return out;
}

NWord exact_weight_error(const NCode& nc, const NTuple& weights, const ChannelConfig& cfg, std::uint64_t trial) {
    return exact_weight_error(nc.components(), weights, cfg, trial);
}

std::string ExperimentSummary::to_csv() const {
    std::string out = "component,trials,successes,rate,mean_injected_errors\n";
    char line[128];
    for (const auto& c : components) {
        std::snprintf(line, sizeof(line), "%d,%ld,%ld,%.6f,%.6f\n", c.component, c.trials, c.successes, c.rate,
                      c.mean_injected_errors);
        out += line;
    }
    return out;
}

ExperimentSummary summarize(const std::vector<TrialRecord>& records) {
    ExperimentSummary out;
    if (records.empty()) return out;
    const int comps = records[0].sent.count();
    out.components.resize(comps);
    std::vector<long> injected(comps, 0);
    for (const auto& rec : records)
        for (int c = 0; c < comps; ++c) {
            out.components[c].trials++;
            if (rec.success[c]) out.components[c].successes++;
            injected[c] += rec.injected[c];
        }
    for (int c = 0; c < comps; ++c) {
        auto& s = out.components[c];
        s.component = c + 1;
        s.rate = static_cast<double>(s.successes) / static_cast<double>(s.trials);
        s.mean_injected_errors = static_cast<double>(injected[c]) / static_cast<double>(s.trials);
    }
    return out;
}

namespace {

NWord random_messages(const std::vector<LinearCode>& comps, const ChannelConfig& cfg, std::uint64_t trial) {
    NWord msg;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        CounterRng rng(cfg.seed, /*stream=*/0x300 + c);
        const int k = comps[c].k();
        BitWord m(k);
        for (int i = 0; i < k; ++i) m.set(i, rng.word((trial << 8) + i) & 1);
        msg.parts.push_back(m);
    }
    return msg;
}

NWord decode_received(const std::vector<LinearCode>& comps, const NWord& received, DecodeMethod method,
                      std::vector<StandardArray>& tables) {
    NWord out;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        const auto& comp = comps[c];
        if (method == DecodeMethod::CosetLeader) {
            if (tables.size() <= static_cast<std::size_t>(c)) tables.emplace_back(comp);
            out.parts.push_back(coset_decode(tables[c], received.parts[c]).codeword);
        } else if (method == DecodeMethod::NearestNeighbor) {
            out.parts.push_back(nearest_neighbor_decode(comp, received.parts[c]).codeword);
        } else {
            // Pseudo best approximation from the generator rows, with basis fallback.
            auto r = pseudo_best_approx_search(comp, received.parts[c]);
            out.parts.push_back(r.word ? *r.word : received.parts[c]);
        }
    }
    return out;
}

}  // namespace

std::vector<TrialRecord> run_trial_records(const std::vector<LinearCode>& comps, const ChannelConfig& cfg,
                                           const TrialOptions& opts) {
    cfg.validate();
    if (comps.empty()) throw input_error("need at least one component");
    std::vector<TrialRecord> records;
    records.reserve(cfg.trials);
    std::vector<StandardArray> tables;  // built lazily, shared across trials
    for (int t = 0; t < cfg.trials; ++t) {
        TrialRecord rec;
        NWord msg = random_messages(comps, cfg, t);
        rec.sent = NWord();
        for (int c = 0; c < static_cast<int>(comps.size()); ++c) rec.sent.parts.push_back(comps[c].encode(msg.parts[c]));
        if (opts.model == ErrorModel::Bernoulli) {
            rec.received = bsc_corrupt(rec.sent, cfg, t);
        } else {
            rec.received = rec.sent ^ exact_weight_error(comps, opts.exact_weights, cfg, t);
        }
        rec.decoded = decode_received(comps, rec.received, cfg.decoder, tables);
        for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
            rec.success.push_back(rec.decoded.parts[c] == rec.sent.parts[c]);
            rec.injected.push_back(hamming_distance(rec.received.parts[c], rec.sent.parts[c]));
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<TrialRecord> run_trial_records(const NCode& nc, const ChannelConfig& cfg, const TrialOptions& opts) {
    return run_trial_records(nc.components(), cfg, opts);
}

ExperimentSummary run_trials(const std::vector<LinearCode>& comps, const ChannelConfig& cfg,
                             const TrialOptions& opts) {
    return summarize(run_trial_records(comps, cfg, opts));
}

ExperimentSummary run_trials(const NCode& nc, const ChannelConfig& cfg, const TrialOptions& opts) {
    return summarize(run_trial_records(nc, cfg, opts));
}

SweepResult exhaustive_pattern_sweep(const LinearCode& code, int weight, TiePolicy policy) {
    StandardArray table(code, policy);
    SweepResult out;
    std::vector<int> pos(weight);
    for (int i = 0; i < weight; ++i) pos[i] = i;
    const auto& words = code.codewords();
    while (true) {
        BitWord e(code.n());
        for (int p : pos) e.set(p, true);
        for (const auto& w : words) {
            ++out.patterns;
            if (coset_decode(table, w ^ e).codeword == w) ++out.corrected;
        }
        int i = weight - 1;
        while (i >= 0 && pos[i] == code.n() - weight + i) --i;
        if (i < 0) break;
        ++pos[i];
        for (int j = i + 1; j < weight; ++j) pos[j] = pos[j - 1] + 1;
    }
    return out;
}

std::vector<int> SlotAssignment::decoy_slots(const NCode& nc) const {
    std::vector<bool> used(nc.count(), false);
    for (const auto& cust : customers)
        for (int s : cust.slots) {
            if (s < 0 || s >= nc.count())
                throw input_error("assignment references component " + std::to_string(s + 1) + " of " +
                                  std::to_string(nc.count()));
            used[s] = true;
        }
    std::vector<int> decoys;
    for (int i = 0; i < nc.count(); ++i)
        if (!used[i]) decoys.push_back(i);
    return decoys;
}

void SlotAssignment::validate(const NCode& nc) const {
    std::vector<bool> used(nc.count(), false);
    for (const auto& cust : customers) {
        if (cust.slots.empty()) throw input_error("customer " + cust.id + " has no slots");
        for (int s : cust.slots) {
            if (s < 0 || s >= nc.count())
                throw input_error("assignment references component " + std::to_string(s + 1) + " of " +
                                  std::to_string(nc.count()));
            if (used[s]) throw input_error("component " + std::to_string(s + 1) + " assigned twice");
            used[s] = true;
        }
    }
}

MultiplexTrial multiplex_roundtrip(const NCode& nc, const SlotAssignment& assign,
                                   const std::map<std::string, std::vector<BitWord>>& payloads,
                                   const ChannelConfig& cfg, std::uint64_t trial) {
    cfg.validate();
    assign.validate(nc);
    MultiplexTrial out;
    NWord msg;
    for (int c = 0; c < nc.count(); ++c) msg.parts.push_back(BitWord(nc.component(c).k()));
    for (const auto& cust : assign.customers) {
        auto it = payloads.find(cust.id);
        if (it == payloads.end()) throw input_error("no payload for customer " + cust.id);
        if (it->second.size() != cust.slots.size())
            throw input_error("customer " + cust.id + ": payload count does not match slot count");
        for (std::size_t i = 0; i < cust.slots.size(); ++i) msg.parts[cust.slots[i]] = it->second[i];
    }
    // Decoys carry uniformly random valid codewords.
    for (int d : assign.decoy_slots(nc)) {
        CounterRng rng(cfg.seed, /*stream=*/0x400 + d);
        const int k = nc.component(d).k();
        BitWord m(k);
        for (int i = 0; i < k; ++i) m.set(i, rng.word((trial << 8) + i) & 1);
        msg.parts[d] = m;
    }
    TrialRecord rec;
    rec.sent = n_encode(nc, msg);
    rec.received = bsc_corrupt(rec.sent, cfg, trial);
    rec.decoded = rec.received;  // only assigned slots are decoded below
    out.all_exact = true;
    for (const auto& cust : assign.customers) {
        std::vector<BitWord> got;
        for (int s : cust.slots) {
            const auto& comp = nc.component(s);
            DecodeResult dr = cfg.decoder == DecodeMethod::NearestNeighbor
                                  ? nearest_neighbor_decode(comp, rec.received.parts[s])
                                  : coset_decode(StandardArray(comp), rec.received.parts[s]);
            rec.decoded.parts[s] = dr.codeword;
            got.push_back(dr.message);
            if (dr.message != msg.parts[s]) out.all_exact = false;
        }
        out.recovered[cust.id] = std::move(got);
    }
    for (int c = 0; c < nc.count(); ++c) {
        rec.success.push_back(rec.decoded.parts[c] == rec.sent.parts[c]);
        rec.injected.push_back(hamming_distance(rec.received.parts[c], rec.sent.parts[c]));
    }
    out.record = std::move(rec);
    return out;
}

}  // namespace ncode

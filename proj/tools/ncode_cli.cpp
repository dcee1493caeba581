// Command line front end: define codes in JSON files, encode/decode words,
// classify composite codes, and run seeded channel simulations.
//
// Exit codes: 0 success, 2 malformed input, 3 resource cap exceeded.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ncode/channel.hpp"
#include "ncode/classify.hpp"
#include "ncode/codedef.hpp"
#include "ncode/decoder.hpp"
#include "ncode/ncode.hpp"

namespace {

using namespace ncode;

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;

NWord parse_parts(const std::string& text, const CodeBundle& bundle, bool message_lengths) {
    NWord w = NWord::from_string(text);
    if (w.count() != static_cast<int>(bundle.components.size()))
        throw input_error("expected " + std::to_string(bundle.components.size()) + " ':'-separated parts, got " +
                          std::to_string(w.count()));
    for (int i = 0; i < w.count(); ++i) {
        const auto& comp = bundle.components[i];
        const int want = message_lengths ? comp.k() : comp.n();
        if (w.parts[i].size() != want)
            throw input_error("component " + std::to_string(i + 1) + ": part length " +
                              std::to_string(w.parts[i].size()) + " != " + std::to_string(want));
    }
    return w;
}

int cmd_encode(const std::string& spec_path, const std::string& message) {
    const CodeBundle bundle = load_code_bundle(spec_path);
    const NWord msg = parse_parts(message, bundle, /*message_lengths=*/true);
    NWord out;
    for (std::size_t i = 0; i < bundle.components.size(); ++i)
        out.parts.push_back(bundle.components[i].encode(msg.parts[i]));
    std::cout << out.to_string() << '\n';
    return 0;
}

int cmd_decode(const std::string& spec_path, const std::string& received_text, const std::string& method,
               const std::string& basis_path) {
    const CodeBundle bundle = load_code_bundle(spec_path);
    const NWord received = parse_parts(received_text, bundle, /*message_lengths=*/false);
    NWord codeword, message;
    if (method == "coset" || method == "nn") {
        for (std::size_t i = 0; i < bundle.components.size(); ++i) {
            const auto& comp = bundle.components[i];
            DecodeResult r = method == "coset" ? coset_decode(StandardArray(comp), received.parts[i])
                                               : nearest_neighbor_decode(comp, received.parts[i]);
            codeword.parts.push_back(r.codeword);
            message.parts.push_back(r.message);
        }
    } else if (method == "pba") {
        std::vector<std::vector<BitWord>> bases;
        if (!basis_path.empty()) {
            bases = load_bases(basis_path, bundle);
        } else {
            for (const auto& comp : bundle.components) {
                std::vector<BitWord> rows;
                for (int r = 0; r < comp.generator().rows(); ++r) rows.push_back(comp.generator().row(r));
                bases.push_back(std::move(rows));
            }
        }
        for (std::size_t i = 0; i < bundle.components.size(); ++i) {
            const auto& comp = bundle.components[i];
            const auto& b = received.parts[i];
            std::optional<BitWord> word = comp.contains(b) ? std::optional<BitWord>(b)
                                                           : pseudo_best_approx(comp, bases[i], b);
            if (!word) word = pseudo_best_approx_search(comp, bases[i], b).word;
            if (!word)
                throw input_error("component " + std::to_string(i + 1) +
                                  ": no basis in the budget yields a nonzero approximation");
            codeword.parts.push_back(*word);
            message.parts.push_back(comp.message_of(*word));
        }
    } else {
        throw input_error("unknown method \"" + method + "\" (use coset, nn or pba)");
    }
    std::cout << "codeword: " << codeword.to_string() << '\n';
    std::cout << "message: " << message.to_string() << '\n';
    std::cout << "error: " << (codeword ^ received).to_string() << '\n';
    std::cout << "method: " << method << '\n';
    std::cout << "distance: " << hamming_n_distance(codeword, received).to_string() << '\n';
    return 0;
}

int cmd_classify(const std::string& spec_path, bool as_json) {
    const CodeBundle bundle = load_code_bundle(spec_path);
    if (bundle.components.size() < 2)
        throw input_error(spec_path + ": classification needs a composite code with >= 2 components");
    const ClassificationReport report = classify_all(bundle.to_ncode());
    std::cout << (as_json ? report.to_json() + "\n" : report.to_text());
    return 0;
}

int cmd_info(const std::string& spec_path, bool emit_dual, bool list_words) {
    const CodeBundle bundle = load_code_bundle(spec_path);
    for (std::size_t i = 0; i < bundle.components.size(); ++i) {
        const auto& comp = bundle.components[i];
        const Capability cap = comp.capability();
        std::cout << "component " << (i + 1) << ": n=" << comp.n() << " k=" << comp.k() << " d=" << cap.d
                  << " t=" << cap.t << " s=" << cap.s << " family=" << to_string(comp.family());
        if (comp.family() == CodeFamily::Cyclic)
            std::cout << " g=" << comp.gen_poly().to_string() << " h=" << comp.check_poly().to_string();
        std::cout << '\n';
        if (list_words) {
            // Classic table order: messages by weight, then position of the ones.
            std::vector<BitWord> msgs;
            for (std::uint64_t m = 0; m < (1ull << comp.k()); ++m) msgs.push_back(BitWord(comp.k(), m));
            std::stable_sort(msgs.begin(), msgs.end(), [](const BitWord& a, const BitWord& b) {
                if (a.weight() != b.weight()) return a.weight() < b.weight();
                return b < a;  // earliest ones first
            });
            for (const auto& m : msgs) std::cout << "  " << comp.encode(m).to_string() << '\n';
        }
    }
    if (emit_dual) {
        std::vector<LinearCode> duals;
        for (const auto& comp : bundle.components) duals.push_back(dual(comp));
        const std::string name = bundle.name.empty() ? "dual" : bundle.name + "-dual";
        std::cout << (bundle.composite ? bundle_to_definition(duals, name) : code_to_definition(duals[0], name))
                  << '\n';
    }
    return 0;
}

int cmd_simulate(const std::string& spec_path, double p, int trials, std::uint64_t seed, const std::string& decoder,
                 const std::string& csv_path, const std::string& exact_weights) {
    const CodeBundle bundle = load_code_bundle(spec_path);

    ChannelConfig cfg;
    cfg.flip_probability = p;
    cfg.trials = trials;
    cfg.seed = seed;
    if (decoder == "coset")
        cfg.decoder = DecodeMethod::CosetLeader;
    else if (decoder == "nn")
        cfg.decoder = DecodeMethod::NearestNeighbor;
    else if (decoder == "pba")
        cfg.decoder = DecodeMethod::PseudoBestApprox;
    else
        throw input_error("unknown decoder \"" + decoder + "\"");

    TrialOptions opts;
    if (!exact_weights.empty()) {
        opts.model = ErrorModel::ExactWeight;
        std::vector<int> w;
        std::size_t pos = 0;
        while (pos <= exact_weights.size()) {
            std::size_t next = exact_weights.find(':', pos);
            w.push_back(std::stoi(exact_weights.substr(pos, next - pos)));
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        opts.exact_weights = NTuple(std::move(w));
    }

    const ExperimentSummary summary = run_trials(bundle.components, cfg, opts);
    const std::string csv = summary.to_csv();
    if (csv_path.empty()) {
        std::cout << csv;
    } else {
        std::ofstream out(csv_path, std::ios::binary);
        if (!out) throw input_error(csv_path + ": cannot open for writing");
        out << csv;
    }
    return 0;
}

int cmd_demo_multiplex(const std::string& spec_path, const std::string& assign_path, double p, int trials,
                       std::uint64_t seed) {
    const CodeBundle bundle = load_code_bundle(spec_path);
    if (bundle.components.size() < 2) throw input_error("multiplexing needs a composite code");
    NCode nc = bundle.to_ncode();

    std::ifstream in(assign_path);
    if (!in) throw input_error(assign_path + ": cannot open file");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw input_error(assign_path + ": " + e.what());
    }
    SlotAssignment assign;
    std::map<std::string, std::vector<BitWord>> payloads;
    if (!j.contains("customers") || !j["customers"].is_array())
        throw input_error(assign_path + ": missing \"customers\" array");
    for (const auto& jc : j["customers"]) {
        SlotAssignment::Customer cust;
        cust.id = jc.at("id").get<std::string>();
        std::vector<BitWord> msgs;
        for (const auto& s : jc.at("slots")) cust.slots.push_back(s.get<int>() - 1);  // file uses 1-based slots
        for (const auto& m : jc.at("messages")) msgs.push_back(BitWord::from_string(m.get<std::string>()));
        payloads[cust.id] = std::move(msgs);
        assign.customers.push_back(std::move(cust));
    }

    ChannelConfig cfg;
    cfg.flip_probability = p;
    cfg.seed = seed;
    cfg.trials = trials;
    std::map<std::string, int> exact;
    for (int t = 0; t < trials; ++t) {
        MultiplexTrial trial = multiplex_roundtrip(nc, assign, payloads, cfg, t);
        for (const auto& cust : assign.customers) {
            bool ok = true;
            const auto& got = trial.recovered[cust.id];
            for (std::size_t i = 0; i < cust.slots.size(); ++i)
                if (got[i] != payloads[cust.id][i]) ok = false;
            if (ok) ++exact[cust.id];
            if (t == 0) {
                std::cout << "customer " << cust.id << " slots";
                for (int s : cust.slots) std::cout << ' ' << (s + 1);
                std::cout << " recovered";
                for (const auto& m : got) std::cout << ' ' << m.to_string();
                std::cout << '\n';
            }
        }
    }
    for (const auto& cust : assign.customers)
        std::cout << "customer " << cust.id << " exact-recovery " << exact[cust.id] << "/" << trials << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary linear block codes, composite codes, decoding and channel experiments"};
    app.require_subcommand(1);

    std::string spec_path, message, received, basis_path, csv_path, assign_path, exact_weights;
    std::string method = "coset", decoder = "coset";
    bool as_json = false, emit_dual = false, list_words = false;
    double p = 0.0;
    int trials = 1000;
    std::uint64_t seed = 1;

    auto* enc = app.add_subcommand("encode", "encode a message (parts joined with ':')");
    enc->add_option("spec", spec_path, "code definition file")->required();
    enc->add_option("message", message, "message bits, one part per component")->required();

    auto* dec = app.add_subcommand("decode", "decode a received word");
    dec->add_option("spec", spec_path)->required();
    dec->add_option("received", received)->required();
    dec->add_option("--method", method, "coset | nn | pba")->capture_default_str();
    dec->add_option("--basis", basis_path, "basis file for --method pba");

    auto* cls = app.add_subcommand("classify", "structural classification of a composite code");
    cls->add_option("spec", spec_path)->required();
    cls->add_flag("--json", as_json, "machine-readable output");

    auto* inf = app.add_subcommand("info", "parameters, distance, capability");
    inf->add_option("spec", spec_path)->required();
    inf->add_flag("--dual", emit_dual, "emit the dual code as a definition document");
    inf->add_flag("--list", list_words, "list codewords in table order");

    auto* sim = app.add_subcommand("simulate", "seeded channel simulation, CSV summary");
    sim->add_option("spec", spec_path)->required();
    sim->add_option("--p", p, "bit flip probability")->capture_default_str();
    sim->add_option("--trials", trials)->capture_default_str();
    sim->add_option("--seed", seed)->capture_default_str();
    sim->add_option("--decoder", decoder, "coset | nn | pba")->capture_default_str();
    sim->add_option("--csv", csv_path, "write the summary to this file");
    sim->add_option("--exact-weight", exact_weights, "inject exactly w errors per component, e.g. \"2\" or \"1:0:2\"");

    auto* mux = app.add_subcommand("demo-multiplex", "per-customer slots over a composite code");
    mux->add_option("spec", spec_path)->required();
    mux->add_option("--assign", assign_path, "assignment file (customers, slots, messages)")->required();
    mux->add_option("--p", p)->capture_default_str();
    mux->add_option("--trials", trials)->capture_default_str();
    mux->add_option("--seed", seed)->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (enc->parsed()) return cmd_encode(spec_path, message);
        if (dec->parsed()) return cmd_decode(spec_path, received, method, basis_path);
        if (cls->parsed()) return cmd_classify(spec_path, as_json);
        if (inf->parsed()) return cmd_info(spec_path, emit_dual, list_words);
        if (sim->parsed()) return cmd_simulate(spec_path, p, trials, seed, decoder, csv_path, exact_weights);
        if (mux->parsed()) return cmd_demo_multiplex(spec_path, assign_path, p, trials, seed);
    } catch (const cap_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return 0;
}

#include "ncode/codedef.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ncode {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& context, const std::string& what) {
    throw input_error(context + ": " + what);
}

BitMatrix rows_field(const json& j, const std::string& context) {
    if (!j.contains("rows")) fail(context, "missing field \"rows\"");
    const auto& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) fail(context + ".rows", "expected a non-empty array of bit strings");
    std::vector<std::string> strs;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_string()) fail(context + ".rows[" + std::to_string(i) + "]", "expected a bit string");
        strs.push_back(rows[i].get<std::string>());
    }
    try {
        return BitMatrix::from_strings(strs);
    } catch (const input_error& e) {
        fail(context + ".rows", e.what());
    }
}

int int_field(const json& j, const std::string& key, const std::string& context) {
    if (!j.contains(key)) fail(context, "missing field \"" + key + "\"");
    if (!j.at(key).is_number_integer()) fail(context + "." + key, "expected an integer");
    return j.at(key).get<int>();
}

BinPoly poly_field(const json& j, const std::string& context) {
    if (!j.contains("g")) fail(context, "missing field \"g\"");
    const auto& g = j.at("g");
    try {
        if (g.is_string()) return BinPoly::from_string(g.get<std::string>());
        if (g.is_array()) {
            std::vector<std::uint8_t> coeffs;
            for (const auto& v : g) {
                if (!v.is_number_integer()) fail(context + ".g", "coefficient list must hold integers 0/1");
                coeffs.push_back(static_cast<std::uint8_t>(v.get<int>()));
            }
            return BinPoly(std::move(coeffs));
        }
    } catch (const input_error& e) {
        fail(context + ".g", e.what());
    }
    fail(context + ".g", "expected \"x^k+...\" string or ascending coefficient list");
}

LinearCode parse_code(const json& j, const std::string& context) {
    if (!j.is_object()) fail(context, "expected an object");
    if (!j.contains("kind")) fail(context, "missing field \"kind\"");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "generator") return LinearCode::from_generator(rows_field(j, context));
        if (kind == "parity") return LinearCode::from_parity(rows_field(j, context));
        if (kind == "repetition") return repetition_code(int_field(j, "n", context));
        if (kind == "parity_check") return parity_check_code(int_field(j, "n", context));
        if (kind == "hamming") {
            const int m = int_field(j, "m", context);
            return j.contains("rows") ? hamming_code(m, rows_field(j, context)) : hamming_code(m);
        }
        if (kind == "cyclic") return cyclic_from_poly(poly_field(j, context), int_field(j, "n", context));
    } catch (const input_error& e) {
        const std::string what = e.what();
        // Keep the position prefix if a nested helper already added one.
        if (what.rfind(context, 0) == 0) throw;
        fail(context, what);
    }
    fail(context + ".kind", "unknown kind \"" + kind + "\"");
}

}  // namespace

NCode CodeBundle::to_ncode() const {
    std::vector<LinearCode> comps = components;
    return compose(std::move(comps));
}

CodeBundle parse_code_bundle(const std::string& json_text, const std::string& context) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(context, e.what());
    }
    if (!j.is_object()) fail(context, "expected a JSON object");
    CodeBundle bundle;
    if (j.contains("name")) bundle.name = j.at("name").get<std::string>();
    if (j.contains("components")) {
        bundle.composite = true;
        const auto& comps = j.at("components");
        if (!comps.is_array() || comps.empty()) fail(context + ".components", "expected a non-empty array");
        for (std::size_t i = 0; i < comps.size(); ++i)
            bundle.components.push_back(parse_code(comps[i], context + ".components[" + std::to_string(i) + "]"));
    } else {
        bundle.components.push_back(parse_code(j, context));
    }
    return bundle;
}

CodeBundle load_code_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_code_bundle(ss.str(), path);
}

namespace {

json code_json(const LinearCode& code, const std::string& name) {
    json j;
    if (!name.empty()) j["name"] = name;
    switch (code.family()) {
        case CodeFamily::Repetition:
            j["kind"] = "repetition";
            j["n"] = code.n();
            return j;
        case CodeFamily::ParityCheck:
            j["kind"] = "parity_check";
            j["n"] = code.n();
            return j;
        case CodeFamily::Cyclic: {
            j["kind"] = "cyclic";
            j["g"] = code.gen_poly().to_string();
            j["n"] = code.n();
            return j;
        }
        default: break;
    }
    j["kind"] = "generator";
    std::vector<std::string> rows;
    for (int r = 0; r < code.generator().rows(); ++r) rows.push_back(code.generator().row(r).to_string());
    j["rows"] = rows;
    return j;
}

}  // namespace

std::string code_to_definition(const LinearCode& code, const std::string& name) {
    return code_json(code, name).dump(2);
}

std::string bundle_to_definition(const std::vector<LinearCode>& codes, const std::string& name) {
    json j;
    if (!name.empty()) j["name"] = name;
    j["components"] = json::array();
    for (const auto& c : codes) j["components"].push_back(code_json(c, ""));
    return j.dump(2);
}

std::vector<std::vector<BitWord>> load_bases(const std::string& path, const CodeBundle& bundle) {
    std::ifstream in(path);
    if (!in) throw input_error(path + ": cannot open file");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        fail(path, e.what());
    }
    auto parse_one = [&](const json& arr, const std::string& context) {
        if (!arr.is_array() || arr.empty()) fail(context, "expected a non-empty array of bit strings");
        std::vector<BitWord> basis;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (!arr[i].is_string()) fail(context + "[" + std::to_string(i) + "]", "expected a bit string");
            basis.push_back(BitWord::from_string(arr[i].get<std::string>()));
        }
        return basis;
    };
    std::vector<std::vector<BitWord>> bases;
    if (j.contains("bases")) {
        const auto& arr = j.at("bases");
        if (!arr.is_array()) fail(path + ".bases", "expected an array");
        for (std::size_t i = 0; i < arr.size(); ++i)
            bases.push_back(parse_one(arr[i], path + ".bases[" + std::to_string(i) + "]"));
    } else if (j.contains("basis")) {
        bases.push_back(parse_one(j.at("basis"), path + ".basis"));
    } else {
        fail(path, "expected \"basis\" or \"bases\"");
    }
    if (bases.size() != bundle.components.size())
        fail(path, "have " + std::to_string(bases.size()) + " bases for " +
                       std::to_string(bundle.components.size()) + " components");
    return bases;
}

}  // namespace ncode

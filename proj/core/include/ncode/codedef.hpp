#ifndef NCODE_CODEDEF_HPP
#define NCODE_CODEDEF_HPP

#include <string>
#include <vector>

#include "ncode/ncode.hpp"

namespace ncode {

/// A parsed code definition file. Single-code files describe one component;
/// composite files carry a "components" array.
///
/// Document format (JSON):
///   {"name": "...", "kind": "generator" | "parity" | "repetition" |
///    "parity_check" | "hamming" | "cyclic", ...kind-specific fields...}
/// kind-specific fields:
///   generator / parity: "rows": ["1011", ...]  (standard or general form)
///   repetition / parity_check: "n": length
///   hamming: "m": parameter, optional "rows" for an explicit check matrix
///   cyclic: "g": "x^3+x^2+1" or ascending coefficient list [1,0,1,1], "n": length
/// Composite: {"name": "...", "components": [<code object>, ...]}
struct CodeBundle {
    std::string name;
    std::vector<LinearCode> components;
    bool composite = false;  // written with a "components" array

    NCode to_ncode() const;  // requires >= 2 components
};

/// Parse a definition document; `context` prefixes error messages (a path).
CodeBundle parse_code_bundle(const std::string& json_text, const std::string& context);
CodeBundle load_code_bundle(const std::string& path);

/// Emit a definition document for a code (used by `info --dual`).
std::string code_to_definition(const LinearCode& code, const std::string& name);
std::string bundle_to_definition(const std::vector<LinearCode>& codes, const std::string& name);

/// Basis file for pseudo-best-approximation decoding:
///   {"bases": [["0101", "1011"], ...]} with one list per component, or
///   {"basis": ["0101", "1011"]} for single-code files.
std::vector<std::vector<BitWord>> load_bases(const std::string& path, const CodeBundle& bundle);

}  // namespace ncode

#endif

#pragma once

// Automaton JSON and Graphviz export.
//
// {"alphabet": ["a","b"], "states": [0,1], "start": [0], "accept": [1],
//  "transitions": [{"from":0,"on":"a","to":1}, ...]}
//
// Keys are emitted in that order and every array is sorted. Keys starting
// with "x-" are extensions: kept verbatim by the closure module and ignored
// here.

#include <string>
#include <string_view>

#include "json.hpp"

#include "crosskit/automaton.hpp"

namespace crosskit {

using ordered_json = nlohmann::ordered_json;

ordered_json automaton_to_json(const Nfa& a);
/// Throws SchemaError naming the offending JSON pointer.
Nfa automaton_from_json(const nlohmann::json& j);

/// Two-space indented document with a trailing newline.
std::string to_json(const Nfa& a);
/// Parses text; malformed JSON is a SchemaError at "".
Nfa from_json(std::string_view text);
/// Parses text into a JSON value, mapping syntax errors to SchemaError.
nlohmann::json parse_json_text(std::string_view text);

std::string to_dot(const Nfa& a);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace crosskit

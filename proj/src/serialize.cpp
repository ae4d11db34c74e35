#include "crosskit/serialize.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

#include "crosskit/error.hpp"

namespace crosskit {

ordered_json automaton_to_json(const Nfa& a) {
  ordered_json j;
  j["alphabet"] = ordered_json::array();
  for (Symbol s : a.alphabet()) j["alphabet"].push_back(symbol_utf8(s));
  j["states"] = ordered_json::array();
  for (State s = 0; s < a.num_states(); ++s) j["states"].push_back(s);
  j["start"] = ordered_json::array();
  for (State s : a.starts()) j["start"].push_back(s);
  j["accept"] = ordered_json::array();
  for (State s = 0; s < a.num_states(); ++s)
    if (a.is_accepting(s)) j["accept"].push_back(s);
  // Edge sets are ordered by (symbol, target) per source state.
  j["transitions"] = ordered_json::array();
  for (State s = 0; s < a.num_states(); ++s) {
    for (const auto& [sym, t] : a.edges(s)) {
      ordered_json e;
      e["from"] = s;
      e["on"] = symbol_utf8(sym);
      e["to"] = t;
      j["transitions"].push_back(std::move(e));
    }
  }
  return j;
}

namespace {

const nlohmann::json& member(const nlohmann::json& j, const char* key, const std::string& path) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path + "/" + key, "missing key");
  return *it;
}

const nlohmann::json& array_member(const nlohmann::json& j, const char* key) {
  const auto& v = member(j, key, "");
  if (!v.is_array()) throw SchemaError(std::string("/") + key, "expected an array");
  return v;
}

std::int64_t state_name(const nlohmann::json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "state names are integers");
  return v.get<std::int64_t>();
}

Symbol symbol_name(const nlohmann::json& v, const std::string& path) {
  if (!v.is_string()) throw SchemaError(path, "symbols are one-character strings");
  try {
    return parse_symbol(v.get<std::string>());
  } catch (const Error& e) {
    throw SchemaError(path, e.what());
  }
}

}  // namespace

Nfa automaton_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("", "expected an object");
  for (const auto& [key, value] : j.items()) {
    static const std::set<std::string> known{"alphabet", "states", "start", "accept", "transitions"};
    if (!known.count(key) && key.rfind("x-", 0) != 0) throw SchemaError("/" + key, "unknown key");
  }

  SymbolSet alphabet;
  const auto& alpha = array_member(j, "alphabet");
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const auto path = "/alphabet/" + std::to_string(i);
    if (!alphabet.insert(symbol_name(alpha[i], path)).second) throw SchemaError(path, "duplicate symbol");
  }
  if (alphabet.size() > kMaxAlphabet) throw SchemaError("/alphabet", "more than 64 symbols");

  // Names need not be contiguous; they are renumbered in ascending order.
  std::map<std::int64_t, State> index;
  const auto& states = array_member(j, "states");
  for (std::size_t i = 0; i < states.size(); ++i) {
    const auto path = "/states/" + std::to_string(i);
    if (!index.emplace(state_name(states[i], path), 0).second) throw SchemaError(path, "duplicate state");
  }
  Nfa out(alphabet);
  for (auto& [name, id] : index) id = out.add_state(false);
  auto lookup = [&index](const nlohmann::json& v, const std::string& path) {
    auto it = index.find(state_name(v, path));
    if (it == index.end()) throw SchemaError(path, "unknown state");
    return it->second;
  };

  const auto& start = array_member(j, "start");
  for (std::size_t i = 0; i < start.size(); ++i) {
    const auto path = "/start/" + std::to_string(i);
    const State s = lookup(start[i], path);
    if (out.starts().count(s)) throw SchemaError(path, "duplicate start state");
    out.add_start(s);
  }
  const auto& accept = array_member(j, "accept");
  for (std::size_t i = 0; i < accept.size(); ++i) {
    const auto path = "/accept/" + std::to_string(i);
    const State s = lookup(accept[i], path);
    if (out.is_accepting(s)) throw SchemaError(path, "duplicate accept state");
    out.set_accepting(s, true);
  }

  const auto& trans = array_member(j, "transitions");
  for (std::size_t i = 0; i < trans.size(); ++i) {
    const auto path = "/transitions/" + std::to_string(i);
    const auto& t = trans[i];
    if (!t.is_object()) throw SchemaError(path, "expected an object");
    for (const auto& [key, value] : t.items()) {
      if (key != "from" && key != "on" && key != "to") throw SchemaError(path + "/" + key, "unknown key");
    }
    const State from = lookup(member(t, "from", path), path + "/from");
    const Symbol on = symbol_name(member(t, "on", path), path + "/on");
    const State to = lookup(member(t, "to", path), path + "/to");
    if (!alphabet.count(on)) throw SchemaError(path + "/on", "symbol outside the alphabet");
    if (out.edges(from).count({on, to})) throw SchemaError(path, "duplicate transition");
    out.add_transition(from, on, to);
  }
  return out;
}

std::string to_json(const Nfa& a) { return automaton_to_json(a).dump(2) + "\n"; }

nlohmann::json parse_json_text(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("malformed JSON: ") + e.what());
  }
}

Nfa from_json(std::string_view text) { return automaton_from_json(parse_json_text(text)); }

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const Nfa& a) {
  std::ostringstream os;
  os << "digraph automaton {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=circle];\n";
  for (State s = 0; s < a.num_states(); ++s) {
    os << "  " << s << " [label=\"" << s << "\"";
    if (a.is_accepting(s)) os << ", shape=doublecircle";
    os << "];\n";
  }
  for (State s : a.starts()) {
    os << "  start" << s << " [shape=point];\n";
    os << "  start" << s << " -> " << s << ";\n";
  }
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& [sym, t] : a.edges(s))
      os << "  " << s << " -> " << t << " [label=\"" << dot_escape(symbol_utf8(sym)) << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << text;
}

}  // namespace crosskit

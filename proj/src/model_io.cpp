#include "fuzzyts/model_io.hpp"

#include <map>
#include <set>
#include <sstream>

#include "fuzzyts/error.hpp"

namespace fuzzyts {

namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

struct Line {
  std::size_t number = 0;
  std::vector<Token> tokens;
};

// Splits text into non-empty lines of whitespace-separated tokens, dropping comments.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Line& line, const Token& tok, const std::string& message) {
  throw ParseError(line.number, tok.column, message);
}

void require_arity(const Line& line, std::size_t expected, std::string_view keyword, std::string_view shape) {
  if (line.tokens.size() != expected)
    fail(line, line.tokens.front(),
         "'" + std::string(keyword) + "' expects " + std::string(shape) + ", got " +
             std::to_string(line.tokens.size() - 1) + " field(s)");
}

Degree parse_degree_token(const Line& line, const Token& tok) {
  try {
    return Degree::parse(tok.text);
  } catch (const Error& e) {
    fail(line, tok, e.what());
  }
}

// Name -> index resolution with positioned diagnostics.
class Names {
 public:
  explicit Names(std::string kind) : kind_(std::move(kind)) {}

  void declare(const Line& line, const Token& tok) {
    if (!is_valid_identifier(tok.text)) fail(line, tok, "invalid " + kind_ + " identifier '" + std::string(tok.text) + "'");
    if (!seen_.emplace(std::string(tok.text)).second) fail(line, tok, "duplicate " + kind_ + " '" + std::string(tok.text) + "'");
  }
  void require(const Line& line, const Token& tok) const {
    if (!seen_.contains(std::string(tok.text))) fail(line, tok, "unknown " + kind_ + " '" + std::string(tok.text) + "'");
  }
  bool empty() const { return seen_.empty(); }

 private:
  std::string kind_;
  std::set<std::string> seen_;
};

StateIndex resolve(const Fts& f, const Line& line, const Token& tok, std::string_view side) {
  if (auto s = f.find_state(tok.text)) return *s;
  fail(line, tok, "unknown " + std::string(side) + " state '" + std::string(tok.text) + "'");
}

}  // namespace

FuzzyAutomaton Model::automaton() const {
  if (!final_set) throw Error("model '" + name + "' has no final states");
  return FuzzyAutomaton(system, *final_set);
}

Model parse_model(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, 1, "empty model: expected 'system NAME'");

  const Line& header = lines.front();
  if (header.tokens.front().text != "system") fail(header, header.tokens.front(), "expected 'system NAME' header");
  require_arity(header, 2, "system", "a name");

  const Line* states_line = nullptr;
  const Line* labels_line = nullptr;
  const Line* init_line = nullptr;
  std::vector<const Line*> trans_lines, final_lines;

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    const Token& key = line.tokens.front();
    auto once = [&](const Line*& slot) {
      if (slot) fail(line, key, "'" + std::string(key.text) + "' given twice (first on line " + std::to_string(slot->number) + ")");
      slot = &line;
    };
    if (key.text == "states:") once(states_line);
    else if (key.text == "labels:") once(labels_line);
    else if (key.text == "init:") once(init_line);
    else if (key.text == "trans:") trans_lines.push_back(&line);
    else if (key.text == "final:") final_lines.push_back(&line);
    else if (key.text == "system") fail(line, key, "only one system per file");
    else fail(line, key, "unknown directive '" + std::string(key.text) + "'");
  }

  if (!states_line) throw ParseError(header.number, 1, "no states: missing 'states:' line");
  if (!labels_line) throw ParseError(header.number, 1, "missing 'labels:' line");
  if (!init_line) throw ParseError(header.number, 1, "missing init: no 'init:' line");

  Names states("state"), labels("label");
  FtsBuilder b;
  for (std::size_t i = 1; i < states_line->tokens.size(); ++i) {
    states.declare(*states_line, states_line->tokens[i]);
    b.add_state(std::string(states_line->tokens[i].text));
  }
  if (states.empty()) fail(*states_line, states_line->tokens.front(), "no states");
  for (std::size_t i = 1; i < labels_line->tokens.size(); ++i) {
    labels.declare(*labels_line, labels_line->tokens[i]);
    b.add_label(std::string(labels_line->tokens[i].text));
  }
  require_arity(*init_line, 2, "init:", "one state");
  states.require(*init_line, init_line->tokens[1]);
  b.set_init(std::string(init_line->tokens[1].text));

  std::map<std::tuple<std::string_view, std::string_view, std::string_view>, std::size_t> triples;
  for (const Line* line : trans_lines) {
    require_arity(*line, 5, "trans:", "SRC LABEL DEGREE DST");
    const auto& t = line->tokens;
    states.require(*line, t[1]);
    labels.require(*line, t[2]);
    const Degree d = parse_degree_token(*line, t[3]);
    states.require(*line, t[4]);
    auto [it, fresh] = triples.emplace(std::make_tuple(t[1].text, t[2].text, t[4].text), line->number);
    if (!fresh)
      fail(*line, t[1], "duplicate transition triple (first on line " + std::to_string(it->second) + ")");
    b.add_transition(t[1].text, t[2].text, d, t[4].text);
  }

  Model model{std::string(header.tokens[1].text), b.build(), std::nullopt};

  if (!final_lines.empty()) {
    std::vector<FuzzyEntry> entries;
    std::map<std::string_view, std::size_t> seen;
    for (const Line* line : final_lines) {
      require_arity(*line, 3, "final:", "STATE DEGREE");
      const auto& t = line->tokens;
      states.require(*line, t[1]);
      auto [it, fresh] = seen.emplace(t[1].text, line->number);
      if (!fresh) fail(*line, t[1], "duplicate final state (first on line " + std::to_string(it->second) + ")");
      entries.push_back({model.system.state(t[1].text), parse_degree_token(*line, t[2])});
    }
    model.final_set = FuzzySet(model.system.num_states(), std::move(entries));
  }
  return model;
}

std::string serialize_model(std::string_view name, const Fts& f) {
  return serialize_model(Model{std::string(name), f, std::nullopt});
}

std::string serialize_model(const Model& model) {
  const Fts& f = model.system;
  std::ostringstream out;
  out << "system " << model.name << '\n';
  out << "states:";
  for (const auto& s : f.states()) out << ' ' << s;
  out << "\nlabels:";
  for (const auto& a : f.labels()) out << ' ' << a;
  out << "\ninit: " << f.state_name(f.init()) << '\n';
  for (StateIndex s = 0; s < f.num_states(); ++s)
    for (LabelIndex a = 0; a < f.num_labels(); ++a)
      for (const auto& [t, d] : f.delta(s, a).entries())
        out << "trans: " << f.state_name(s) << ' ' << f.label_name(a) << ' ' << d << ' ' << f.state_name(t) << '\n';
  if (model.final_set) {
    // An all-zero final set still marks the model as an automaton.
    if (model.final_set->empty()) out << "final: " << f.state_name(f.init()) << " 0\n";
    for (const auto& [q, d] : model.final_set->entries()) out << "final: " << f.state_name(q) << ' ' << d << '\n';
  }
  return out.str();
}

Relation parse_relation(std::string_view text, const Fts& left, const Fts& right) {
  Relation r(left.num_states(), right.num_states());
  std::map<StatePair, std::size_t> seen;
  for (const Line& line : tokenize(text)) {
    const Token& key = line.tokens.front();
    if (key.text != "rel:") fail(line, key, "expected 'rel: LEFT RIGHT'");
    require_arity(line, 3, "rel:", "LEFT RIGHT");
    const StateIndex s = resolve(left, line, line.tokens[1], "left");
    const StateIndex t = resolve(right, line, line.tokens[2], "right");
    auto [it, fresh] = seen.emplace(StatePair{s, t}, line.number);
    if (!fresh) fail(line, line.tokens[1], "duplicate pair (first on line " + std::to_string(it->second) + ")");
    r.insert(s, t);
  }
  return r;
}

std::string serialize_relation(const Relation& r, const Fts& left, const Fts& right) {
  std::string out;
  for (auto [s, t] : r.pairs()) out += "rel: " + left.state_name(s) + " " + right.state_name(t) + "\n";
  return out;
}

StateMap parse_state_map(std::string_view text, const Fts& domain, const Fts& codomain) {
  std::vector<std::optional<StateIndex>> images(domain.num_states());
  std::vector<std::size_t> defined_on(domain.num_states(), 0);
  std::size_t last_line = 1;
  for (const Line& line : tokenize(text)) {
    const Token& key = line.tokens.front();
    last_line = line.number;
    if (key.text != "map:") fail(line, key, "expected 'map: LEFT -> RIGHT'");
    require_arity(line, 4, "map:", "LEFT -> RIGHT");
    if (line.tokens[2].text != "->") fail(line, line.tokens[2], "expected '->'");
    const StateIndex s = resolve(domain, line, line.tokens[1], "domain");
    const StateIndex t = resolve(codomain, line, line.tokens[3], "codomain");
    if (images[s]) fail(line, line.tokens[1], "state mapped twice (first on line " + std::to_string(defined_on[s]) + ")");
    images[s] = t;
    defined_on[s] = line.number;
  }
  std::vector<StateIndex> total;
  for (StateIndex s = 0; s < domain.num_states(); ++s) {
    if (!images[s]) throw ParseError(last_line, 1, "partial map: no image for state '" + domain.state_name(s) + "'");
    total.push_back(*images[s]);
  }
  return StateMap(codomain.num_states(), std::move(total));
}

std::string serialize_state_map(const StateMap& map, const Fts& domain, const Fts& codomain) {
  std::string out;
  for (StateIndex s = 0; s < map.domain_size(); ++s)
    out += "map: " + domain.state_name(s) + " -> " + codomain.state_name(map(s)) + "\n";
  return out;
}

}  // namespace fuzzyts

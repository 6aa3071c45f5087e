#include "fuzzyts/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "fuzzyts/algebra.hpp"
#include "fuzzyts/bisim.hpp"
#include "fuzzyts/error.hpp"
#include "fuzzyts/language.hpp"
#include "fuzzyts/model_io.hpp"

namespace fuzzyts::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

// Usage or input problem; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Outcome {
  bool result = true;
  Json report = Json::object();  // command-specific fields
  std::string text;              // human-readable report
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError(path + ": cannot read file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError(path + ": cannot write file");
  out << content;
  if (!out) throw UsageError(path + ": write failed");
}

// Runs `fn`, prefixing library diagnostics with the file or flag they came from.
template <typename Fn>
auto attributed(const std::string& origin, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw UsageError(origin + ": " + e.what());
  }
}

Model load_model(const std::string& path) {
  const std::string text = read_file(path);
  return attributed(path, [&] { return parse_model(text); });
}

const Fts& plain_system(const Model& m, const std::string& path, std::string_view command) {
  if (m.is_automaton())
    throw UsageError(path + ": '" + std::string(command) +
                     "' builds a new system and needs a plain FTS, but the model has final states");
  return m.system;
}

Json names_of(const Fts& f, std::span<const StateIndex> states) {
  Json arr = Json::array();
  for (StateIndex s : states) arr.push_back(f.state_name(s));
  return arr;
}

std::string brace(const Fts& f, std::span<const StateIndex> states) {
  std::string out = "{";
  for (std::size_t i = 0; i < states.size(); ++i) out += (i ? "," : "") + f.state_name(states[i]);
  return out + "}";
}

// Renders a witness; `left`/`right` name the systems the pair lives in and
// `blocks` (optional) resolves block indices.
std::pair<Json, std::string> render_witness(const Witness& w, const Fts& left, const Fts& right,
                                            const BlockDecomposition* blocks) {
  Json j;
  j["kind"] = std::string(to_string(w.kind));
  j["left"] = left.state_name(w.left);
  j["right"] = right.state_name(w.right);
  j["label"] = w.label ? Json(left.label_name(*w.label)) : Json(nullptr);
  std::ostringstream text;
  text << to_string(w.kind) << " at pair (" << left.state_name(w.left) << "," << right.state_name(w.right) << ")";
  if (w.label) text << " label " << left.label_name(*w.label);

  if (w.state) {
    const bool on_left = w.kind == FailureKind::kLeftOutside || w.kind == FailureKind::kLeftUnmatched;
    const std::string& name = on_left ? left.state_name(*w.state) : right.state_name(*w.state);
    j["state"] = name;
    text << " state " << name;
  } else {
    j["state"] = nullptr;
  }
  if (w.block && blocks) {
    const Block& b = blocks->blocks.at(*w.block);
    j["block"] = Json{{"index", *w.block}, {"left", names_of(left, b.left)}, {"right", names_of(right, b.right)}};
    text << " block " << brace(left, b.left) << "/" << brace(right, b.right);
  } else if (w.block) {
    j["block"] = Json{{"index", *w.block}};
    text << " block #" << *w.block;
  } else {
    j["block"] = nullptr;
  }
  j["leftDegree"] = w.left_degree.to_string();
  j["rightDegree"] = w.right_degree.to_string();
  text << ": " << w.left_degree << " vs " << w.right_degree;
  return {j, text.str()};
}

Json relation_json(const Relation& r, const Fts& left, const Fts& right) {
  Json arr = Json::array();
  for (auto [s, t] : r.pairs()) arr.push_back(Json::array({left.state_name(s), right.state_name(t)}));
  return arr;
}

std::string model_summary(const Model& m) {
  std::ostringstream out;
  out << "system " << m.name << " (" << (m.is_automaton() ? "fuzzy automaton" : "fts") << "): "
      << m.system.num_states() << " states, " << m.system.num_labels() << " labels, "
      << m.system.num_transitions() << " transitions";
  return out.str();
}

struct Options {
  bool json = false;
  std::string model_a, model_b, state, word, relation, map, output;
  std::size_t max_len = 0;
  std::size_t cap = kDefaultNaiveCap;
  bool strong = false, naive = false, print_relation = false;
};

Outcome cmd_validate(const Options& o, Json& inputs) {
  inputs["model"] = o.model_a;
  const Model m = load_model(o.model_a);
  Outcome out;
  out.report["system"] = m.name;
  out.report["automaton"] = m.is_automaton();
  out.report["states"] = m.system.num_states();
  out.report["labels"] = m.system.num_labels();
  out.report["transitions"] = m.system.num_transitions();
  out.text = "valid: " + model_summary(m) + "\n";
  return out;
}

Outcome cmd_lang(const Options& o, Json& inputs) {
  inputs["model"] = o.model_a;
  inputs["state"] = o.state;
  inputs["word"] = o.word;
  const Model m = load_model(o.model_a);
  const StateIndex s = attributed("--state", [&] { return m.system.state(o.state); });
  const Word w = attributed("--word", [&] { return parse_word(m.system, o.word); });
  const Degree d = lang_degree(m.system, s, w);
  Outcome out;
  out.report["degree"] = d.to_string();
  out.text = d.to_string() + "\n";
  return out;
}

Outcome cmd_lang_table(const Options& o, Json& inputs) {
  inputs["model"] = o.model_a;
  inputs["state"] = o.state;
  inputs["maxLen"] = o.max_len;
  const Model m = load_model(o.model_a);
  const StateIndex s = attributed("--state", [&] { return m.system.state(o.state); });
  Outcome out;
  Json rows = Json::array();
  for (const auto& [w, d] : lang_table(m.system, s, o.max_len)) {
    const std::string word = format_word(m.system, w);
    rows.push_back(Json{{"word", word}, {"degree", d.to_string()}});
    out.text += d.to_string() + " " + word + "\n";
  }
  out.report["table"] = std::move(rows);
  return out;
}

Outcome cmd_accept(const Options& o, Json& inputs) {
  inputs["model"] = o.model_a;
  inputs["word"] = o.word;
  const Model m = load_model(o.model_a);
  if (!m.is_automaton()) throw UsageError(o.model_a + ": 'accept' needs a fuzzy automaton (no final lines)");
  const Word w = attributed("--word", [&] { return parse_word(m.system, o.word); });
  const Degree d = accept_degree(m.automaton(), w);
  Outcome out;
  out.report["degree"] = d.to_string();
  out.text = d.to_string() + "\n";
  return out;
}

Outcome report_verdict(const Verdict& v, const Fts& left, const Fts& right, const BlockDecomposition* blocks,
                       std::string_view pass_text, std::string_view fail_text) {
  Outcome out;
  out.result = v.holds;
  if (v.holds) {
    out.report["witness"] = nullptr;
    out.text = std::string(pass_text) + "\n";
  } else {
    auto [j, text] = render_witness(*v.witness, left, right, blocks);
    out.report["witness"] = std::move(j);
    out.text = std::string(fail_text) + ": " + text + "\n";
  }
  return out;
}

Outcome cmd_check_bisim(const Options& o, Json& inputs) {
  inputs["left"] = o.model_a;
  inputs["right"] = o.model_b;
  inputs["relation"] = o.relation;
  const Model a = load_model(o.model_a);
  const Model b = load_model(o.model_b);
  const std::string rel_text = read_file(o.relation);
  const Relation r = attributed(o.relation, [&] { return parse_relation(rel_text, a.system, b.system); });
  attributed(o.model_b, [&] { require_same_labels(a.system, b.system); return 0; });

  if (o.naive) {
    const bool holds = attributed("--naive", [&] { return check_bisimulation_naive(a.system, b.system, r, o.cap); });
    Outcome out;
    out.result = holds;
    out.report["mode"] = "naive";
    out.report["witness"] = nullptr;
    out.text = holds ? "bisimulation (naive enumeration)\n" : "not a bisimulation (naive enumeration)\n";
    return out;
  }
  if (o.strong) {
    Outcome out = report_verdict(check_strong_bisimulation(a.system, b.system, r), a.system, b.system, nullptr,
                                 "strong bisimulation", "not a strong bisimulation");
    out.report["mode"] = "strong";
    return out;
  }
  const BlockDecomposition d = decompose(r);
  const bool automata = a.is_automaton() && b.is_automaton();
  const Verdict v = automata ? check_automaton_bisimulation(a.automaton(), b.automaton(), r)
                             : check_bisimulation(a.system, b.system, r);
  Outcome out = report_verdict(v, a.system, b.system, &d, "bisimulation", "not a bisimulation");
  out.report["mode"] = automata ? "automaton" : "correlational";
  return out;
}

Outcome cmd_bisimilar(const Options& o, Json& inputs) {
  inputs["left"] = o.model_a;
  inputs["right"] = o.model_b;
  const Model a = load_model(o.model_a);
  const Model b = load_model(o.model_b);
  attributed(o.model_b, [&] { require_same_labels(a.system, b.system); return 0; });
  const auto iterates = bisimilarity_iterates(a.system, b.system);
  const Relation& bisim = iterates.back();
  const StateIndex s0 = a.system.init(), t0 = b.system.init();

  Outcome out;
  out.result = bisim.contains(s0, t0);
  out.report["iterations"] = iterates.size() - 1;
  const std::string pair = "(" + a.system.state_name(s0) + "," + b.system.state_name(t0) + ")";
  if (out.result) {
    out.report["witness"] = nullptr;
    out.text = "bisimilar: " + pair + "\n";
  } else {
    Json w;
    w["kind"] = std::string(to_string(FailureKind::kAbsentPair));
    w["left"] = a.system.state_name(s0);
    w["right"] = b.system.state_name(t0);
    out.text = "not bisimilar: absent-pair " + pair;
    if (auto why = explain_non_bisimilar(a.system, b.system, s0, t0)) {
      const BlockDecomposition d = decompose(iterates[why->iteration]);
      auto [cause, text] = render_witness(why->cause, a.system, b.system, &d);
      w["round"] = why->iteration;
      w["cause"] = std::move(cause);
      out.text += "; removed in round " + std::to_string(why->iteration + 1) + ": " + text;
    }
    out.text += "\n";
    out.report["witness"] = std::move(w);
  }
  if (o.print_relation) {
    out.report["relation"] = relation_json(bisim, a.system, b.system);
    out.text += serialize_relation(bisim, a.system, b.system);
  }
  return out;
}

std::string classes_text(const QuotientFts& q, const Fts& original) {
  std::string out;
  for (StateIndex c = 0; c < q.quotient.num_states(); ++c)
    out += q.quotient.state_name(c) + " = " + brace(original, q.classes[c]) + "\n";
  return out;
}

Json classes_json(const QuotientFts& q, const Fts& original) {
  Json j = Json::object();
  for (StateIndex c = 0; c < q.quotient.num_states(); ++c) j[q.quotient.state_name(c)] = names_of(original, q.classes[c]);
  return j;
}

Outcome write_quotient(const Options& o, const Model& m, const QuotientFts& q, std::string_view suffix,
                       std::string_view verb) {
  write_file(o.output, serialize_model(m.name + std::string(suffix), q.quotient));
  Outcome out;
  out.report["states"] = q.quotient.num_states();
  out.report["classes"] = classes_json(q, m.system);
  out.text = std::string(verb) + ": " + std::to_string(m.system.num_states()) + " -> " +
             std::to_string(q.quotient.num_states()) + " states, written to " + o.output + "\n" +
             classes_text(q, m.system);
  return out;
}

Outcome cmd_minimize(const Options& o, Json& inputs) {
  inputs["model"] = o.model_a;
  inputs["output"] = o.output;
  const Model m = load_model(o.model_a);
  const QuotientFts q = minimize(plain_system(m, o.model_a, "minimize"));
  return write_quotient(o, m, q, "/~", "minimized");
}

Outcome cmd_quotient(const Options& o, Json& inputs) {
  inputs["model"] = o.model_a;
  inputs["relation"] = o.relation;
  inputs["output"] = o.output;
  const Model m = load_model(o.model_a);
  const Fts& f = plain_system(m, o.model_a, "quotient");
  const std::string rel_text = read_file(o.relation);
  const Relation r = attributed(o.relation, [&] { return parse_relation(rel_text, f, f); });
  const QuotientFts q = attributed(o.relation, [&] { return quotient(f, r); });
  Outcome out = write_quotient(o, m, q, "/R", "quotient");
  out.report["bisimulation"] = check_bisimulation(f, f, r).holds;
  return out;
}

Outcome cmd_compose(const Options& o, Json& inputs) {
  inputs["left"] = o.model_a;
  inputs["right"] = o.model_b;
  inputs["output"] = o.output;
  const Model a = load_model(o.model_a);
  const Model b = load_model(o.model_b);
  const Fts composed =
      parallel_compose(plain_system(a, o.model_a, "compose"), plain_system(b, o.model_b, "compose"));
  write_file(o.output, serialize_model(a.name + "|" + b.name, composed));
  Outcome out;
  out.report["states"] = composed.num_states();
  out.report["labels"] = composed.num_labels();
  out.report["transitions"] = composed.num_transitions();
  out.text = "composed: " + std::to_string(composed.num_states()) + " states, " +
             std::to_string(composed.num_transitions()) + " transitions, written to " + o.output + "\n";
  return out;
}

Outcome cmd_subsystem(const Options& o, Json& inputs) {
  inputs["left"] = o.model_a;
  inputs["right"] = o.model_b;
  const Model a = load_model(o.model_a);
  const Model b = load_model(o.model_b);
  Outcome out;
  out.result = attributed(o.model_b, [&] { return is_subsystem(a.system, b.system); });
  out.text = out.result ? "subsystem\n" : "not a subsystem\n";
  return out;
}

struct MapInputs {
  Model a, b;
  StateMap map;
};

MapInputs load_map_inputs(const Options& o, Json& inputs) {
  inputs["left"] = o.model_a;
  inputs["right"] = o.model_b;
  inputs["map"] = o.map;
  Model a = load_model(o.model_a);
  Model b = load_model(o.model_b);
  attributed(o.model_b, [&] { require_same_labels(a.system, b.system); return 0; });
  const std::string map_text = read_file(o.map);
  StateMap map = attributed(o.map, [&] { return parse_state_map(map_text, a.system, b.system); });
  return {std::move(a), std::move(b), std::move(map)};
}

Outcome cmd_hom_check(const Options& o, Json& inputs) {
  const MapInputs in = load_map_inputs(o, inputs);
  return report_verdict(check_homomorphism(in.a.system, in.b.system, in.map), in.a.system, in.b.system, nullptr,
                        "homomorphism", "not a homomorphism");
}

Outcome cmd_hom_image(const Options& o, Json& inputs) {
  const MapInputs in = load_map_inputs(o, inputs);
  inputs["output"] = o.output;
  const Fts& f1 = plain_system(in.a, o.model_a, "hom-image");
  const Fts& f2 = plain_system(in.b, o.model_b, "hom-image");
  const Verdict v = check_homomorphism(f1, f2, in.map);
  if (!v) {
    return report_verdict(v, f1, f2, nullptr, "", "not a homomorphism");
  }
  const Fts image = hom_image(f1, f2, in.map);
  write_file(o.output, serialize_model("f(" + in.a.name + ")", image));
  Outcome out;
  out.report["witness"] = nullptr;
  out.report["states"] = image.num_states();
  out.text = "image: " + std::to_string(image.num_states()) + " states, written to " + o.output + "\n";
  return out;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fuzzy transition systems: languages, bisimulation, and system algebra", "fuzzyts"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Print a machine-readable JSON report");

  std::map<CLI::App*, std::function<Outcome(const Options&, Json&)>> handlers;
  auto sub = [&](const std::string& name, const std::string& help, auto handler) {
    CLI::App* s = app.add_subcommand(name, help);
    handlers[s] = handler;
    return s;
  };

  auto* validate = sub("validate", "Parse and validate a model file", cmd_validate);
  validate->add_option("model", o.model_a, "Model file")->required();

  auto* lang = sub("lang", "Fuzzy language degree of a word from a state", cmd_lang);
  lang->add_option("model", o.model_a, "Model file")->required();
  lang->add_option("--state", o.state, "Start state")->required();
  lang->add_option("--word", o.word, "Space-separated labels; '-' is the empty word")->required();

  auto* table = sub("lang-table", "All nonzero words up to a length bound", cmd_lang_table);
  table->add_option("model", o.model_a, "Model file")->required();
  table->add_option("--state", o.state, "Start state")->required();
  table->add_option("--max-len", o.max_len, "Maximum word length")->required();

  auto* accept = sub("accept", "Acceptance degree of a word by a fuzzy automaton", cmd_accept);
  accept->add_option("model", o.model_a, "Automaton model file")->required();
  accept->add_option("--word", o.word, "Space-separated labels; '-' is the empty word")->required();

  auto* check = sub("check-bisim", "Check that a relation is a bisimulation", cmd_check_bisim);
  check->add_option("left", o.model_a, "Left model file")->required();
  check->add_option("right", o.model_b, "Right model file")->required();
  check->add_option("--relation", o.relation, "Relation file")->required();
  auto* strong = check->add_flag("--strong", o.strong, "Check per-transition (strong) matching");
  check->add_flag("--naive", o.naive, "Use exhaustive correlational-pair enumeration")->excludes(strong);
  check->add_option("--cap", o.cap, "State cap for --naive (cost 2^(|S1|+|S2|))")->capture_default_str();

  auto* bisimilar = sub("bisimilar", "Decide bisimilarity of the initial states", cmd_bisimilar);
  bisimilar->add_option("left", o.model_a, "Left model file")->required();
  bisimilar->add_option("right", o.model_b, "Right model file")->required();
  bisimilar->add_flag("--print-relation", o.print_relation, "Print the bisimilarity relation");

  auto* min = sub("minimize", "Quotient by self-bisimilarity", cmd_minimize);
  min->add_option("model", o.model_a, "Model file")->required();
  min->add_option("-o,--output", o.output, "Output model file")->required();

  auto* compose = sub("compose", "Parallel composition", cmd_compose);
  compose->add_option("left", o.model_a, "Left model file")->required();
  compose->add_option("right", o.model_b, "Right model file")->required();
  compose->add_option("-o,--output", o.output, "Output model file")->required();

  auto* quot = sub("quotient", "Quotient by an equivalence relation", cmd_quotient);
  quot->add_option("model", o.model_a, "Model file")->required();
  quot->add_option("--relation", o.relation, "Equivalence relation file")->required();
  quot->add_option("-o,--output", o.output, "Output model file")->required();

  auto* subsys = sub("subsystem", "Test whether LEFT is a subsystem of RIGHT", cmd_subsystem);
  subsys->add_option("left", o.model_a, "Candidate subsystem")->required();
  subsys->add_option("right", o.model_b, "Enclosing system")->required();

  auto* hom = sub("hom-check", "Check that a state map is a homomorphism", cmd_hom_check);
  hom->add_option("left", o.model_a, "Domain model file")->required();
  hom->add_option("right", o.model_b, "Codomain model file")->required();
  hom->add_option("--map", o.map, "Map file")->required();

  auto* image = sub("hom-image", "Homomorphism image", cmd_hom_image);
  image->add_option("left", o.model_a, "Domain model file")->required();
  image->add_option("right", o.model_b, "Codomain model file")->required();
  image->add_option("--map", o.map, "Map file")->required();
  image->add_option("-o,--output", o.output, "Output model file")->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App* chosen = app.get_subcommands().front();
  Json report;
  report["schemaVersion"] = kSchemaVersion;
  report["command"] = chosen->get_name();
  Json inputs = Json::object();
  try {
    Outcome outcome = handlers.at(chosen)(o, inputs);
    report["inputs"] = std::move(inputs);
    report["result"] = outcome.result;
    for (auto& [key, value] : outcome.report.items()) report[key] = value;
    if (o.json)
      out << report.dump(2) << "\n";
    else
      out << outcome.text;
    return outcome.result ? kExitTrue : kExitFalse;
  } catch (const UsageError& e) {
    report["inputs"] = std::move(inputs);
    report["error"] = e.what();
    if (o.json) out << report.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    report["inputs"] = std::move(inputs);
    report["error"] = e.what();
    if (o.json) out << report.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace fuzzyts::cli

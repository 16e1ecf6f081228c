#include <fstream>
#include <sstream>

#include "hyperign/errors.h"
#include "hyperign/proofsys.h"

namespace hyperign {

using nlohmann::json;

namespace {

using K = ProofError::Kind;

ProofError fail(K k, int line, std::string msg) { return ProofError{k, line, std::move(msg)}; }

// Formula of a cited, already checked line; nullopt if no such label.
const Formula* cited(const std::map<int, const Formula*>& seen, int label) {
  auto it = seen.find(label);
  return it == seen.end() ? nullptr : it->second;
}

std::optional<ProofError> check_axiom(const Catalog& cat, const ProofLine& ln, const AxiomStep& a) {
  const Schema* s = cat.axiom(a.name);
  if (!s) return fail(K::BadAxiomInstance, ln.index, "no axiom '" + a.name + "' in " + std::string(to_string(cat.system)));
  if (a.cpl) {
    for (const auto& m : s->pattern.metavars()) {
      if (!a.sub.count(m)) {
        return fail(K::BadAxiomInstance, ln.index, a.name + ": substitution lacks " + m);
      }
    }
    if (!side_condition_holds(*s, a.sub)) {
      return fail(K::BadAxiomInstance, ln.index, a.name + ": side condition fails");
    }
    const Formula inst = instantiate(s->pattern, a.sub);
    bool ok = false;
    try {
      ok = taut(Formula::Imp(inst, ln.formula));
    } catch (const TooManyAtoms& e) {
      return fail(K::NotTaut, ln.index, e.what());
    }
    if (!ok) {
      return fail(K::BadAxiomInstance, ln.index,
                  "line does not follow propositionally from " + a.name + " instance " + print(inst));
    }
    return std::nullopt;
  }
  auto sub = match(*s, ln.formula);
  if (!sub) return fail(K::BadAxiomInstance, ln.index, "not an instance of " + a.name);
  for (const auto& [m, g] : a.sub) {
    auto it = sub->find(m);
    if (it == sub->end() || it->second != g) {
      return fail(K::BadAxiomInstance, ln.index, a.name + ": " + m + " does not match the given substitution");
    }
  }
  return std::nullopt;
}

std::optional<ProofError> check_rule(const Catalog& cat, const ProofLine& ln, const RuleStep& r,
                                     const std::map<int, const Formula*>& seen) {
  std::vector<Formula> prem;
  for (int i : r.from) {
    if (i >= ln.index) return fail(K::ForwardReference, ln.index, "cites line " + std::to_string(i));
    const Formula* f = cited(seen, i);
    if (!f) {
      return fail(K::BadRuleApplication, ln.index, "cites missing line " + std::to_string(i));
    }
    prem.push_back(*f);
  }
  if (r.name == "CPL") {
    Formula body = ln.formula;
    if (!prem.empty()) {
      Formula conj = prem.front();
      for (std::size_t i = 1; i < prem.size(); ++i) conj = Formula::And(conj, prem[i]);
      body = Formula::Imp(conj, ln.formula);
    }
    bool ok = false;
    try {
      ok = taut(body);
    } catch (const TooManyAtoms& e) {
      return fail(K::BadRuleApplication, ln.index, e.what());
    }
    if (!ok) return fail(K::BadRuleApplication, ln.index, "premises do not entail the line propositionally");
    return std::nullopt;
  }
  const Rule* rule = cat.rule(r.name);
  if (!rule) {
    return fail(K::BadRuleApplication, ln.index,
                "no rule '" + r.name + "' in " + std::string(to_string(cat.system)));
  }
  if (!match_rule(*rule, prem, ln.formula)) {
    return fail(K::BadRuleApplication, ln.index, "not an application of " + r.name);
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(ProofError::Kind k) {
  switch (k) {
    case K::BadAxiomInstance: return "BadAxiomInstance";
    case K::BadMP: return "BadMP";
    case K::BadRuleApplication: return "BadRuleApplication";
    case K::NotTaut: return "NotTaut";
    case K::ForwardReference: return "ForwardReference";
    case K::BadIndex: return "BadIndex";
    case K::GoalMismatch: return "GoalMismatch";
  }
  return "?";
}

std::string ProofError::describe() const {
  return std::string(to_string(kind)) + " at line " + std::to_string(line) + ": " + message;
}

std::optional<ProofError> check_proof(const Proof& proof, System system) {
  const Catalog& cat = list_schemata(system);
  const Language lang = language_of(system);
  std::map<int, const Formula*> seen;
  int prev = 0;
  for (const ProofLine& ln : proof.lines) {
    if (ln.index <= prev) {
      return fail(K::BadIndex, ln.index,
                  "label " + std::to_string(ln.index) + " does not follow " + std::to_string(prev));
    }
    prev = ln.index;
    if (const Formula* bad = first_foreign(ln.formula, lang)) {
      return fail(K::BadAxiomInstance, ln.index,
                  "operator " + std::string(op_symbol(bad->op())) + " outside " + std::string(to_string(lang)));
    }
    std::optional<ProofError> err;
    if (const auto* a = std::get_if<AxiomStep>(&ln.by)) {
      err = check_axiom(cat, ln, *a);
    } else if (std::holds_alternative<TautStep>(ln.by)) {
      try {
        if (!taut(ln.formula)) err = fail(K::NotTaut, ln.index, "not a tautology");
      } catch (const TooManyAtoms& e) {
        err = fail(K::NotTaut, ln.index, e.what());
      }
    } else if (const auto* mp = std::get_if<MPStep>(&ln.by)) {
      if (mp->minor >= ln.index || mp->major >= ln.index) {
        err = fail(K::ForwardReference, ln.index, "modus ponens cites a later line");
      } else {
        const Formula* a = cited(seen, mp->minor);
        const Formula* b = cited(seen, mp->major);
        if (!a || !b) {
          err = fail(K::BadMP, ln.index, "modus ponens cites a missing line");
        } else if (*b != Formula::Imp(*a, ln.formula)) {
          err = fail(K::BadMP, ln.index,
                     "line " + std::to_string(mp->major) + " is not line " + std::to_string(mp->minor) +
                         " -> this line");
        }
      }
    } else {
      err = check_rule(cat, ln, std::get<RuleStep>(ln.by), seen);
    }
    if (err) return err;
    seen.emplace(ln.index, &ln.formula);
  }
  if (proof.lines.empty()) return fail(K::GoalMismatch, 0, "empty proof");
  if (proof.goal && proof.lines.back().formula != *proof.goal) {
    return fail(K::GoalMismatch, proof.lines.back().index, "last line is not the goal " + print(*proof.goal));
  }
  return std::nullopt;
}

// JSON.

namespace {

Formula parse_field(const json& j, Language lang, const std::string& what) {
  if (!j.is_string()) throw FormatError(what + " must be a formula string");
  try {
    return parse(j.get<std::string>(), lang);
  } catch (const Error& e) {
    throw FormatError(what + ": " + e.what());
  }
}

std::vector<int> int_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw FormatError(what + " must be an array of line numbers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw FormatError(what + " must be an array of line numbers");
    out.push_back(x.get<int>());
  }
  return out;
}

Justification by_from_json(const json& j, Language lang, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "TAUT") return TautStep{};
    throw FormatError(where + ": unknown justification " + j.dump());
  }
  if (!j.is_object()) throw FormatError(where + ": justification must be a string or object");
  if (j.contains("axiom")) {
    AxiomStep a;
    a.name = j.at("axiom").get<std::string>();
    if (j.contains("sub")) {
      for (const auto& [k, v] : j.at("sub").items()) a.sub.emplace(k, parse_field(v, lang, where + " sub " + k));
    }
    a.cpl = j.value("cpl", false);
    return a;
  }
  if (j.contains("mp")) {
    auto v = int_list(j.at("mp"), where + " mp");
    if (v.size() != 2) throw FormatError(where + ": mp needs exactly two line numbers");
    return MPStep{v[0], v[1]};
  }
  if (j.contains("rule")) {
    RuleStep r;
    r.name = j.at("rule").get<std::string>();
    if (j.contains("from")) r.from = int_list(j.at("from"), where + " from");
    return r;
  }
  throw FormatError(where + ": unknown justification " + j.dump());
}

json by_to_json(const Justification& by) {
  if (const auto* a = std::get_if<AxiomStep>(&by)) {
    json j{{"axiom", a->name}};
    if (!a->sub.empty()) {
      json sub = json::object();
      for (const auto& [k, v] : a->sub) sub[k] = print(v);
      j["sub"] = sub;
    }
    if (a->cpl) j["cpl"] = true;
    return j;
  }
  if (std::holds_alternative<TautStep>(by)) return "TAUT";
  if (const auto* mp = std::get_if<MPStep>(&by)) return json{{"mp", {mp->minor, mp->major}}};
  const auto& r = std::get<RuleStep>(by);
  return json{{"rule", r.name}, {"from", r.from}};
}

}  // namespace

Proof proof_from_json(const json& j, System fallback) {
  try {
    Proof p;
    p.system = fallback;
    const json* lines = &j;
    if (j.is_object()) {
      if (j.contains("system")) {
        auto s = system_from_string(j.at("system").get<std::string>());
        if (!s) throw FormatError("unknown system " + j.at("system").dump());
        p.system = *s;
      }
      lines = &j.at("lines");
    }
    const Language lang = language_of(p.system);
    if (j.is_object() && j.contains("goal")) p.goal = parse_field(j.at("goal"), lang, "goal");
    if (!lines->is_array()) throw FormatError("proof lines must be an array");
    for (const auto& l : *lines) {
      if (!l.is_object()) throw FormatError("proof line must be an object");
      ProofLine ln{l.at("i").get<int>(), Formula::Atom("_"), TautStep{}, l.value("note", "")};
      const std::string where = "line " + std::to_string(ln.index);
      ln.formula = parse_field(l.at("f"), lang, where);
      ln.by = by_from_json(l.at("by"), lang, where);
      p.lines.push_back(std::move(ln));
    }
    return p;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed proof: ") + e.what());
  }
}

json proof_to_json(const Proof& p) {
  std::string sys(to_string(p.system));
  for (char& c : sys) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  json j{{"system", sys}};
  if (p.goal) j["goal"] = print(*p.goal);
  json lines = json::array();
  for (const auto& ln : p.lines) {
    json l{{"i", ln.index}, {"f", print(ln.formula)}, {"by", by_to_json(ln.by)}};
    if (!ln.note.empty()) l["note"] = ln.note;
    lines.push_back(std::move(l));
  }
  j["lines"] = std::move(lines);
  return j;
}

Proof load_proof(std::string_view text, System fallback) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return proof_from_json(j, fallback);
}

Proof load_proof_file(const std::filesystem::path& path, System fallback) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return load_proof(ss.str(), fallback);
}

std::string save_proof(const Proof& p) { return proof_to_json(p).dump(2); }

}  // namespace hyperign

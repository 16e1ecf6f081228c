#include "hyperign/semantics.h"

#include <algorithm>
#include <bit>
#include <cctype>
#include <unordered_set>

#include "hyperign/errors.h"

namespace hyperign {

std::string_view to_string(System s) {
  switch (s) {
    case System::IW: return "IW";
    case System::IU: return "IU";
    case System::DI: return "DI";
    case System::HIW: return "HIW";
    case System::HIU: return "HIU";
    case System::HDI: return "HDI";
  }
  return "?";
}

std::optional<System> system_from_string(std::string_view s) {
  std::string lower;
  for (char c : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (System sys : kAllSystems) {
    std::string name;
    for (char c : to_string(sys)) name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (name == lower) return sys;
  }
  return std::nullopt;
}

Language language_of(System s) {
  switch (s) {
    case System::IW: return Language::ClassicIW;
    case System::IU: return Language::ClassicIU;
    case System::DI: return Language::ClassicID;
    case System::HIW: return Language::IW;
    case System::HIU: return Language::IU;
    case System::HDI: return Language::IDG;
  }
  return Language::IW;
}

bool is_hyper(System s) { return s == System::HIW || s == System::HIU || s == System::HDI; }

Op ignorance_op(System s) {
  switch (s) {
    case System::IW:
    case System::HIW: return Op::IgnW;
    case System::IU:
    case System::HIU: return Op::IgnU;
    case System::DI:
    case System::HDI: return Op::IgnD;
  }
  return Op::IgnW;
}

namespace {

void check_language(const Formula& f, const EvalConfig& cfg) {
  const Language lang = language_of(cfg.system);
  if (const Formula* bad = first_foreign(f, lang)) {
    throw LanguageMismatch("operator " + std::string(op_symbol(bad->op())) + " is not part of " +
                           std::string(to_string(lang)) + " (system " +
                           std::string(to_string(cfg.system)) + ")");
  }
}

const Topics* required_topics(const Model& m, const EvalConfig& cfg) {
  const Topics* t = topics_of(m);
  if (is_hyper(cfg.system) && !t) throw MissingTopics();
  return t;
}

// Reference evaluator: each case transcribes one truth clause.
class PointEvaluator {
 public:
  PointEvaluator(const KripkeModel& k, const Topics* topics, const EvalConfig& cfg)
      : k_(k), topics_(topics), cfg_(cfg), hyper_(is_hyper(cfg.system)) {}

  bool holds(std::size_t w, const Formula& f) const {
    switch (f.op()) {
      case Op::Atom:
        return (k_.extension(f.name()) >> w) & 1U;
      case Op::Not:
        return !holds(w, f.arg());
      case Op::And:
        return holds(w, f.lhs()) && holds(w, f.rhs());
      case Op::Or:
        return holds(w, f.lhs()) || holds(w, f.rhs());
      case Op::Imp:
        return !holds(w, f.lhs()) || holds(w, f.rhs());
      case Op::Iff:
        return holds(w, f.lhs()) == holds(w, f.rhs());
      case Op::Box: {
        for (std::size_t v = 0; v < k_.size(); ++v) {
          if (cfg_.box_over_successors && !k_.related(w, v)) continue;
          if (!holds(v, f.arg())) return false;
        }
        return true;
      }
      case Op::IgnW: {
        if (hyper_ && !grasped(f.arg())) return true;
        bool some_true = false;
        bool some_false = false;
        for (std::size_t v = 0; v < k_.size(); ++v) {
          if (!k_.related(w, v)) continue;
          (holds(v, f.arg()) ? some_true : some_false) = true;
        }
        return some_true && some_false;
      }
      case Op::IgnU: {
        if (hyper_ && !grasped(f.arg())) return true;
        if (!holds(w, f.arg())) return false;
        for (std::size_t v = 0; v < k_.size(); ++v) {
          if (k_.related(w, v) && !holds(v, f.arg())) return true;
        }
        return false;
      }
      case Op::IgnD: {
        if (hyper_ && !grasped(f.arg())) return false;
        if (!holds(w, f.arg())) return false;
        for (std::size_t v = 0; v < k_.size(); ++v) {
          if (v == w && !cfg_.disbelief_counts_self) continue;
          if (k_.related(w, v) && holds(v, f.arg())) return false;
        }
        return true;
      }
      case Op::Grasp:
        return grasped(f.arg());
    }
    return false;
  }

 private:
  bool grasped(const Formula& f) const { return grasps(*topics_, vars(f)); }

  const KripkeModel& k_;
  const Topics* topics_;
  const EvalConfig& cfg_;
  bool hyper_;
};

// Set-at-a-time evaluator over a Model.
class SetEvaluator {
 public:
  SetEvaluator(const KripkeModel& k, const Topics* topics, const EvalConfig& cfg)
      : k_(k), topics_(topics), cfg_(cfg), hyper_(is_hyper(cfg.system)), all_(k.all()) {}

  WorldSet ext(const Formula& f) const {
    switch (f.op()) {
      case Op::Atom: return k_.extension(f.name()) & all_;
      case Op::Not: return all_ & ~ext(f.arg());
      case Op::And: return ext(f.lhs()) & ext(f.rhs());
      case Op::Or: return ext(f.lhs()) | ext(f.rhs());
      case Op::Imp: return (all_ & ~ext(f.lhs())) | ext(f.rhs());
      case Op::Iff: return all_ & ~(ext(f.lhs()) ^ ext(f.rhs()));
      case Op::Grasp: return grasped(f.arg()) ? all_ : 0;
      default: break;
    }
    const WorldSet e = ext(f.arg());
    const bool g = !hyper_ || f.op() == Op::Box || grasped(f.arg());
    WorldSet out = 0;
    for (std::size_t w = 0; w < k_.size(); ++w) {
      const WorldSet s = k_.successors(w);
      const WorldSet bit = WorldSet{1} << w;
      bool in = false;
      switch (f.op()) {
        case Op::Box:
          in = cfg_.box_over_successors ? (s & ~e) == 0 : e == all_;
          break;
        case Op::IgnW:
          in = !g || ((s & e) && (s & ~e));
          break;
        case Op::IgnU:
          in = !g || ((e & bit) && (s & ~e));
          break;
        case Op::IgnD: {
          const WorldSet others = cfg_.disbelief_counts_self ? s : (s & ~bit);
          in = g && (e & bit) && (others & e) == 0;
          break;
        }
        default:
          break;
      }
      if (in) out |= bit;
    }
    return out;
  }

 private:
  bool grasped(const Formula& f) const { return grasps(*topics_, vars(f)); }

  const KripkeModel& k_;
  const Topics* topics_;
  const EvalConfig& cfg_;
  bool hyper_;
  WorldSet all_;
};

void trace_into(const PointEvaluator& ev, std::size_t w, const Formula& f,
                std::vector<TraceEntry>& out, std::unordered_set<Formula>& seen) {
  if (f.op() != Op::Atom) {
    trace_into(ev, w, f.lhs(), out, seen);
    if (is_binary(f.op())) trace_into(ev, w, f.rhs(), out, seen);
  }
  if (seen.insert(f).second) out.push_back({f, ev.holds(w, f)});
}

}  // namespace

bool eval(const Model& m, std::string_view world, const Formula& f, const EvalConfig& cfg) {
  const KripkeModel& k = frame_of(m);
  const std::size_t w = k.index_of(world);
  check_language(f, cfg);
  const Topics* t = required_topics(m, cfg);
  return PointEvaluator(k, t, cfg).holds(w, f);
}

WorldSet truth_set(const Model& m, const Formula& f, const EvalConfig& cfg) {
  check_language(f, cfg);
  const Topics* t = required_topics(m, cfg);
  return SetEvaluator(frame_of(m), t, cfg).ext(f);
}

bool valid_in(const Model& m, const Formula& f, const EvalConfig& cfg) {
  return truth_set(m, f, cfg) == frame_of(m).all();
}

bool grasp_formula_truth(const Model& m, std::string_view world, const Formula& f,
                         const EvalConfig& cfg) {
  check_language(f, cfg);
  switch (cfg.system) {
    case System::HIW: return eval(m, world, Formula::Not(Formula::IgnW(bar(f))), cfg);
    case System::HIU: return eval(m, world, Formula::Not(Formula::IgnU(bar(f))), cfg);
    case System::HDI: return eval(m, world, Formula::Grasp(f), cfg);
    default:
      throw LanguageMismatch("grasping is only expressible in HIW, HIU and HDI");
  }
}

std::vector<TraceEntry> eval_trace(const Model& m, std::string_view world, const Formula& f,
                                   const EvalConfig& cfg) {
  const KripkeModel& k = frame_of(m);
  const std::size_t w = k.index_of(world);
  check_language(f, cfg);
  PointEvaluator ev(k, required_topics(m, cfg), cfg);
  std::vector<TraceEntry> out;
  std::unordered_set<Formula> seen;
  trace_into(ev, w, f, out, seen);
  return out;
}

}  // namespace hyperign

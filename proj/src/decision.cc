#include "hyperign/decision.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <stdexcept>
#include <thread>

#include "hyperign/errors.h"

namespace hyperign {

std::string_view to_string(Verdict v) {
  return v == Verdict::ValidUpToBound ? "VALID_UP_TO_BOUND" : "COUNTERMODEL";
}

std::string_view to_string(Principle p) {
  switch (p) {
    case Principle::LO_IMP: return "LO_IMP";
    case Principle::LO_NEC: return "LO_NEC";
    case Principle::LO_RE: return "LO_RE";
  }
  return "?";
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

// Lowest index in [lo, hi) whose model falsifies f, or kNone. Gives up
// early once `best` drops below the current position.
std::uint64_t scan(const ModelSpace& space, const CompiledFormula& cf, std::uint64_t lo,
                   std::uint64_t hi, const std::atomic<std::uint64_t>& best) {
  PackedModel pm;
  for (std::uint64_t i = lo; i < hi; ++i) {
    if ((i & 1023U) == 0 && best.load(std::memory_order_relaxed) < i) return kNone;
    space.packed_at(i, pm);
    if (!cf.valid(pm)) return i;
  }
  return kNone;
}

}  // namespace

CountermodelReport bounded_valid(const Formula& f, const EvalConfig& cfg, const SearchBounds& b) {
  if (b.max_worlds < 1) throw BoundsError("max_worlds must be at least 1");
  const std::set<std::string> fv = vars(f);
  const std::set<std::string> atom_set = b.atoms.value_or(fv);
  if (!std::includes(atom_set.begin(), atom_set.end(), fv.begin(), fv.end())) {
    throw BoundsError("search atoms do not cover the formula's variables");
  }
  const std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  const TopicMode mode = b.topic_mode.value_or(is_hyper(cfg.system) ? TopicMode::Grasp : TopicMode::None);
  const CompiledFormula cf(f, atoms, cfg);
  const ModelSpace space(atoms, b.max_worlds, mode);
  const std::uint64_t total = space.size();

  std::atomic<std::uint64_t> best{kNone};
  const int threads = std::max(1, std::min<int>(b.threads, static_cast<int>(std::min<std::uint64_t>(total, 64))));
  if (threads == 1) {
    best = scan(space, cf, 0, total, best);
  } else {
    // Interleaved blocks keep small models (low indices) spread across
    // workers; the minimum index wins regardless of finishing order.
    const std::uint64_t block = 4096;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::uint64_t lo = static_cast<std::uint64_t>(t) * block; lo < total;
             lo += static_cast<std::uint64_t>(threads) * block) {
          if (best.load() < lo) return;
          const std::uint64_t hit = scan(space, cf, lo, std::min(total, lo + block), best);
          if (hit != kNone) {
            std::uint64_t cur = best.load();
            while (hit < cur && !best.compare_exchange_weak(cur, hit)) {
            }
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  CountermodelReport r;
  const std::uint64_t idx = best.load();
  if (idx == kNone) {
    r.models_checked = total;
    return r;
  }
  r.verdict = Verdict::Countermodel;
  r.models_checked = idx + 1;
  PackedModel pm;
  space.packed_at(idx, pm);
  const WorldSet falsified = all_worlds(pm.worlds) & ~cf.truth_set(pm);
  Model m = unpack(pm, atoms);
  const WorldId world = frame_of(m).world(static_cast<std::size_t>(std::countr_zero(falsified)));
  if (eval(m, world, f, cfg)) {
    throw std::logic_error("countermodel does not re-check: " + print(f) + " at " + world);
  }
  r.witness = Witness{std::move(m), world};
  return r;
}

std::vector<RuleCheck> check_rule_preservation(const std::string& rule_name, const EvalConfig& cfg,
                                               const std::vector<std::vector<Formula>>& instances,
                                               const SearchBounds& b) {
  const Catalog& cat = list_schemata(cfg.system);
  const Rule* rule = cat.rule(rule_name);
  if (!rule) throw Error("no rule '" + rule_name + "' in " + std::string(to_string(cfg.system)));
  std::vector<RuleCheck> out;
  for (const auto& prem : instances) {
    if (prem.size() != rule->premises.size()) {
      throw PremiseNotCertified(rule_name + " takes " + std::to_string(rule->premises.size()) + " premise(s)");
    }
    Substitution sub;
    for (std::size_t i = 0; i < prem.size(); ++i) {
      auto s = match(rule->premises[i], prem[i]);
      if (!s) throw PremiseNotCertified(print(prem[i]) + " does not have the form " + print(rule->premises[i]));
      for (auto& [k, v] : *s) {
        auto [it, fresh] = sub.emplace(k, v);
        if (!fresh && it->second != v) throw PremiseNotCertified("premises bind " + k + " inconsistently");
      }
      if (!taut(prem[i]) && bounded_valid(prem[i], cfg, b).verdict != Verdict::ValidUpToBound) {
        throw PremiseNotCertified(print(prem[i]) + " is neither a tautology nor valid up to the bound");
      }
    }
    Formula concl = instantiate(rule->conclusion, sub);
    out.push_back(RuleCheck{prem, concl, bounded_valid(concl, cfg, b)});
  }
  return out;
}

std::pair<Formula, Formula> omniscience_instance(Principle p, System s) {
  const Op I = ignorance_op(s);
  const Formula P = Formula::Atom("p");
  const Formula Q = Formula::Atom("q");
  auto notI = [&](const Formula& f) { return Formula::Not(Formula::Unary(I, f)); };
  const Formula em_p = Formula::Or(P, Formula::Not(P));
  const Formula em_q = Formula::Or(Q, Formula::Not(Q));
  switch (p) {
    case Principle::LO_IMP: {
      const Formula contra = Formula::And(P, Formula::Not(P));
      return {Formula::Imp(contra, Q), Formula::Imp(notI(contra), notI(Q))};
    }
    case Principle::LO_NEC:
      return {em_p, notI(em_p)};
    case Principle::LO_RE:
      return {Formula::Iff(em_p, em_q), Formula::Iff(notI(em_p), notI(em_q))};
  }
  throw std::logic_error("bad principle");
}

Verdict expected_verdict(Principle p, System s) {
  switch (p) {
    case Principle::LO_IMP: return Verdict::Countermodel;
    case Principle::LO_NEC:
      return (s == System::IW || s == System::IU) ? Verdict::ValidUpToBound : Verdict::Countermodel;
    case Principle::LO_RE:
      return is_hyper(s) ? Verdict::Countermodel : Verdict::ValidUpToBound;
  }
  return Verdict::Countermodel;
}

OmniscienceReport refute_omniscience(Principle p, const EvalConfig& cfg, const SearchBounds& b) {
  auto [premise, query] = omniscience_instance(p, cfg.system);
  if (!taut(premise)) throw PremiseNotCertified(print(premise) + " is not a tautology");
  CountermodelReport r = bounded_valid(query, cfg, b);
  return OmniscienceReport{p, cfg.system, premise, query, expected_verdict(p, cfg.system), std::move(r)};
}

}  // namespace hyperign

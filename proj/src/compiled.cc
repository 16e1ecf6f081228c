#include <algorithm>
#include <unordered_map>

#include "hyperign/errors.h"
#include "hyperign/semantics.h"

namespace hyperign {

namespace {

struct Flattener {
  const std::vector<std::string>& atoms;
  std::unordered_map<Formula, std::uint32_t>& memo;

  template <class Steps>
  std::uint32_t flatten(const Formula& f, Steps& steps) {
    if (auto it = memo.find(f); it != memo.end()) return it->second;
    typename Steps::value_type s{f.op()};
    if (f.op() == Op::Atom) {
      auto it = std::find(atoms.begin(), atoms.end(), f.name());
      if (it == atoms.end()) throw BoundsError("atom '" + f.name() + "' outside the evaluation atoms");
      s.a = static_cast<std::uint32_t>(it - atoms.begin());
      s.var_mask = std::uint64_t{1} << s.a;
    } else {
      s.a = flatten(f.lhs(), steps);
      s.var_mask = steps[s.a].var_mask;
      if (is_binary(f.op())) {
        s.b = flatten(f.rhs(), steps);
        s.var_mask |= steps[s.b].var_mask;
      }
    }
    steps.push_back(s);
    const auto idx = static_cast<std::uint32_t>(steps.size() - 1);
    memo.emplace(f, idx);
    return idx;
  }
};

}  // namespace

CompiledFormula::CompiledFormula(const Formula& f, const std::vector<std::string>& atoms,
                                 const EvalConfig& cfg)
    : cfg_(cfg) {
  if (atoms.size() > 64) throw BoundsError("at most 64 atoms can be compiled");
  const Language lang = language_of(cfg.system);
  if (const Formula* bad = first_foreign(f, lang)) {
    throw LanguageMismatch("operator " + std::string(op_symbol(bad->op())) + " is not part of " +
                           std::string(to_string(lang)));
  }
  std::unordered_map<Formula, std::uint32_t> memo;
  Flattener{atoms, memo}.flatten(f, steps_);
}

WorldSet CompiledFormula::truth_set(const PackedModel& m) const {
  const bool hyper = is_hyper(cfg_.system);
  if (hyper && !m.has_topics) throw MissingTopics();
  const WorldSet all = all_worlds(m.worlds);
  // Steps are in postorder, so children are always computed first.
  WorldSet buf[256];
  std::vector<WorldSet> heap;
  WorldSet* ext = buf;
  if (steps_.size() > 256) {
    heap.resize(steps_.size());
    ext = heap.data();
  }
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    const Step& s = steps_[i];
    WorldSet r = 0;
    switch (s.op) {
      case Op::Atom: r = m.val[s.a] & all; break;
      case Op::Not: r = all & ~ext[s.a]; break;
      case Op::And: r = ext[s.a] & ext[s.b]; break;
      case Op::Or: r = ext[s.a] | ext[s.b]; break;
      case Op::Imp: r = (all & ~ext[s.a]) | ext[s.b]; break;
      case Op::Iff: r = all & ~(ext[s.a] ^ ext[s.b]); break;
      case Op::Grasp: r = (steps_[s.a].var_mask & ~m.grasped) == 0 ? all : 0; break;
      case Op::Box: {
        const WorldSet e = ext[s.a];
        if (!cfg_.box_over_successors) {
          r = e == all ? all : 0;
        } else {
          for (std::size_t w = 0; w < m.worlds; ++w) {
            if ((m.succ[w] & ~e) == 0) r |= WorldSet{1} << w;
          }
        }
        break;
      }
      case Op::IgnW:
      case Op::IgnU:
      case Op::IgnD: {
        const WorldSet e = ext[s.a];
        const bool g = !hyper || (steps_[s.a].var_mask & ~m.grasped) == 0;
        if (hyper && !g) {
          r = s.op == Op::IgnD ? 0 : all;
          break;
        }
        for (std::size_t w = 0; w < m.worlds; ++w) {
          const WorldSet succ = m.succ[w];
          const WorldSet bit = WorldSet{1} << w;
          bool in;
          if (s.op == Op::IgnW) {
            in = (succ & e) && (succ & ~e);
          } else if (s.op == Op::IgnU) {
            in = (e & bit) && (succ & ~e);
          } else {
            const WorldSet others = cfg_.disbelief_counts_self ? succ : (succ & ~bit);
            in = (e & bit) && (others & e) == 0;
          }
          if (in) r |= bit;
        }
        break;
      }
    }
    ext[i] = r;
  }
  return ext[steps_.size() - 1];
}

}  // namespace hyperign

#include <unordered_map>
#include <vector>

#include "hyperign/errors.h"
#include "hyperign/proofsys.h"

namespace hyperign {

namespace {

constexpr std::size_t kMaxLetters = 20;

// Propositional skeleton: atoms and maximal modal subformulas become
// letters, identical subformulas share one.
struct Skeleton {
  struct Step {
    Op op;
    std::uint32_t a = 0, b = 0;
  };
  std::vector<Step> steps;
  std::unordered_map<Formula, std::uint32_t> letters;

  std::uint32_t add(const Formula& f) {
    if (f.op() == Op::Atom || is_modal(f.op())) {
      auto [it, fresh] = letters.emplace(f, static_cast<std::uint32_t>(letters.size()));
      if (fresh && letters.size() > kMaxLetters) throw TooManyAtoms(letters.size());
      steps.push_back({Op::Atom, it->second});
      return static_cast<std::uint32_t>(steps.size() - 1);
    }
    Step s{f.op(), add(f.lhs())};
    if (is_binary(f.op())) s.b = add(f.rhs());
    steps.push_back(s);
    return static_cast<std::uint32_t>(steps.size() - 1);
  }
};

// Bit j of kLow[i] is bit i of j, for the six letters that vary inside
// one 64-wide word.
constexpr std::uint64_t kLow[6] = {0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL,
                                   0xF0F0F0F0F0F0F0F0ULL, 0xFF00FF00FF00FF00ULL,
                                   0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};

}  // namespace

bool taut(const Formula& f) {
  Skeleton sk;
  sk.add(f);
  const std::size_t n = sk.letters.size();
  const std::uint64_t live = n >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1U << n)) - 1);
  const std::uint64_t words = n > 6 ? (std::uint64_t{1} << (n - 6)) : 1;
  std::vector<std::uint64_t> v(sk.steps.size());
  for (std::uint64_t w = 0; w < words; ++w) {
    for (std::size_t i = 0; i < sk.steps.size(); ++i) {
      const auto& s = sk.steps[i];
      switch (s.op) {
        case Op::Atom:
          v[i] = s.a < 6 ? kLow[s.a] : (((w >> (s.a - 6)) & 1U) ? ~std::uint64_t{0} : 0);
          break;
        case Op::Not: v[i] = ~v[s.a]; break;
        case Op::And: v[i] = v[s.a] & v[s.b]; break;
        case Op::Or: v[i] = v[s.a] | v[s.b]; break;
        case Op::Imp: v[i] = ~v[s.a] | v[s.b]; break;
        case Op::Iff: v[i] = ~(v[s.a] ^ v[s.b]); break;
        default: break;
      }
    }
    if ((~v.back() & live) != 0) return false;
  }
  return true;
}

}  // namespace hyperign

// Seeded random formulas, topic lattices and models for fuzzing and
// property tests.

#ifndef HYPERIGN_GENERATE_H_
#define HYPERIGN_GENERATE_H_

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hyperign/model.h"
#include "hyperign/semantics.h"
#include "hyperign/syntax.h"
#include "hyperign/topic.h"

namespace hyperign {

class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }
  int uniform(int lo, int hi);  // inclusive
  bool coin(double p = 0.5);

  // Random formula of depth at most max_depth using only operators of
  // `lang` and atoms from `atoms`.
  Formula formula(Language lang, int max_depth, const std::vector<std::string>& atoms);

  // Random finite join semilattice with 1..max_elements elements (a
  // union-closed family of bitsets, shuffled under opaque ids), random
  // kappa and a random assignment for `atoms`.
  TopicModel topic_model(int max_elements, const std::set<std::string>& atoms);

  GraspSet grasp_set(const std::set<std::string>& atoms);

  KripkeModel kripke(int max_worlds, const std::set<std::string>& atoms);

  // Plain Kripke model for classic systems; for topic-sensitive ones a
  // grasp set or (with probability lattice_p) a full random lattice.
  Model model(System system, int max_worlds, const std::set<std::string>& atoms,
              double lattice_p = 0.5, int max_elements = 5);

 private:
  std::mt19937_64 rng_;
};

}  // namespace hyperign

#endif  // HYPERIGN_GENERATE_H_

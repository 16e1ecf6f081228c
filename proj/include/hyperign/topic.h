// Finite topic models: a join semilattice of topics with a designated
// "grasped" topic kappa, plus an assignment of topics to atoms.

#ifndef HYPERIGN_TOPIC_H_
#define HYPERIGN_TOPIC_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "hyperign/syntax.h"

namespace hyperign {

using TopicId = std::string;

// Dense fusion table over opaque topic ids. Construction checks shape
// (ids unique, table square, every entry/kappa/assignment a known id);
// the semilattice laws are checked separately by validate().
class TopicModel {
 public:
  TopicModel(std::vector<TopicId> elements,
             const std::vector<std::vector<TopicId>>& fusion, TopicId kappa,
             std::map<std::string, TopicId> assign);

  std::size_t size() const { return elements_.size(); }
  const std::vector<TopicId>& elements() const { return elements_; }
  const TopicId& element(std::size_t i) const { return elements_.at(i); }
  std::size_t index_of(const TopicId& id) const;  // UnknownTopicError

  std::size_t fuse(std::size_t a, std::size_t b) const { return table_[a * size() + b]; }
  std::size_t kappa() const { return kappa_; }
  const std::map<std::string, TopicId>& assignment() const { return assign_; }
  std::optional<std::size_t> topic_index(const std::string& atom) const;

  // Fusion table as ids, row-major, in element order.
  std::vector<std::vector<TopicId>> fusion_table() const;

  bool operator==(const TopicModel& other) const;

 private:
  std::vector<TopicId> elements_;
  std::vector<std::size_t> table_;
  std::size_t kappa_;
  std::map<std::string, TopicId> assign_;
  std::map<std::string, std::size_t> assign_index_;
};

// The grasped-atom shorthand. It denotes the two-point lattice
// {grasped < ungrasped} with kappa the lower point.
struct GraspSet {
  std::set<std::string> grasped;

  bool operator==(const GraspSet& other) const = default;
};

using Topics = std::variant<TopicModel, GraspSet>;

struct Violation {
  enum class Law { Idempotence, Commutativity, Associativity };
  Law law;
  std::vector<TopicId> at;

  std::string describe() const;
};

// Exhaustive check of the three semilattice laws; empty iff all hold.
std::vector<Violation> validate(const TopicModel& tm);

// Fusion of t(p) over vars(f). Throws EmptyVarError, UnassignedAtomError.
TopicId topic_of(const Formula& f, const TopicModel& tm);
std::size_t topic_index_of(const std::set<std::string>& atoms, const TopicModel& tm);

// a is part of b iff a + b = b. Throws UnknownTopicError.
bool parthood(const TopicId& a, const TopicId& b, const TopicModel& tm);

// Atoms whose topic is part of kappa.
GraspSet grasp_collapse(const TopicModel& tm);

// The two-point lattice a GraspSet stands for, over the given atoms.
TopicModel expand(const GraspSet& g, const std::set<std::string>& atoms);

// Whether the fused topic of `atoms` is part of kappa.
bool grasps(const Topics& topics, const std::set<std::string>& atoms);

}  // namespace hyperign

#endif  // HYPERIGN_TOPIC_H_

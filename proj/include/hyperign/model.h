// Kripke models, topic-sensitive models, their JSON file format, and the
// exhaustive enumeration used by bounded countermodel search.

#ifndef HYPERIGN_MODEL_H_
#define HYPERIGN_MODEL_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hyperign/topic.h"
#include "json.hpp"

namespace hyperign {

using WorldId = std::string;
// Bitset over world indices; models are limited to 64 worlds.
using WorldSet = std::uint64_t;
inline constexpr std::size_t kMaxWorlds = 64;

inline WorldSet all_worlds(std::size_t n) {
  return n >= 64 ? ~WorldSet{0} : ((WorldSet{1} << n) - 1);
}

// K-model: no frame conditions on the relation. Atoms missing from the
// valuation are false everywhere.
class KripkeModel {
 public:
  KripkeModel(std::vector<WorldId> worlds,
              const std::vector<std::pair<WorldId, WorldId>>& relation,
              const std::map<std::string, std::vector<WorldId>>& valuation);

  std::size_t size() const { return worlds_.size(); }
  const std::vector<WorldId>& worlds() const { return worlds_; }
  const WorldId& world(std::size_t i) const { return worlds_.at(i); }
  std::size_t index_of(std::string_view world) const;  // WorldNotFound

  WorldSet all() const { return all_worlds(size()); }
  WorldSet successors(std::size_t i) const { return succ_[i]; }
  bool related(std::size_t i, std::size_t j) const { return (succ_[i] >> j) & 1U; }
  WorldSet extension(const std::string& atom) const;
  const std::map<std::string, WorldSet>& valuation() const { return val_; }

  std::vector<std::pair<WorldId, WorldId>> relation_pairs() const;

  bool operator==(const KripkeModel& other) const = default;

 private:
  std::vector<WorldId> worlds_;
  std::vector<WorldSet> succ_;
  std::map<std::string, WorldSet> val_;
};

struct TopicSensitiveModel {
  KripkeModel base;
  Topics topics;

  bool operator==(const TopicSensitiveModel& other) const = default;
};

using Model = std::variant<KripkeModel, TopicSensitiveModel>;

const KripkeModel& frame_of(const Model& m);
// Null for plain Kripke models.
const Topics* topics_of(const Model& m);

// JSON file format:
//   {"worlds": [...], "relation": [[u, v], ...], "valuation": {"p": [...]},
//    "topics": {"grasped": [...]}
//            | {"elements": [...], "fusion": [[...]], "kappa": k, "assign": {...}}}
// "topics" is optional. Loading validates world references, the
// semilattice laws and (for full lattices) that every valuated atom has
// a topic.
Model model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const Model& m);
Model load_model(std::string_view text);
Model load_model_file(const std::filesystem::path& path);
std::string save_model(const Model& m);

// Compact model used on hot paths. Atoms are referred to by index into
// an externally fixed atom list.
struct PackedModel {
  std::size_t worlds = 0;
  std::vector<WorldSet> succ;
  std::vector<WorldSet> val;
  // Grasped atoms as a bitmask over atom indices; meaningful only when
  // the model carries topics.
  std::uint64_t grasped = 0;
  bool has_topics = false;
};

enum class TopicMode { None, Grasp };

// All models over a fixed atom list with 1..max_worlds worlds named
// w1..wn, without isomorphism reduction. Ordering: fewer worlds first;
// within a size the relation counts up from the empty one, while
// valuations and grasp sets count down from "everything true/grasped".
// Indices partition the space, so disjoint ranges can be scanned
// independently.
class ModelSpace {
 public:
  ModelSpace(std::vector<std::string> atoms, int max_worlds, TopicMode mode);

  std::uint64_t size() const { return total_; }
  const std::vector<std::string>& atoms() const { return atoms_; }
  int max_worlds() const { return max_worlds_; }
  TopicMode mode() const { return mode_; }

  void packed_at(std::uint64_t index, PackedModel& out) const;
  Model at(std::uint64_t index) const;

  // Count for a given world count.
  std::uint64_t block_size(int n) const;

 private:
  std::vector<std::string> atoms_;
  int max_worlds_;
  TopicMode mode_;
  std::vector<std::uint64_t> block_start_;
  std::uint64_t total_ = 0;
};

ModelSpace enumerate_models(const std::set<std::string>& atoms, int max_worlds,
                            TopicMode mode);

// Conversions between the two representations.
Model unpack(const PackedModel& pm, const std::vector<std::string>& atoms);
PackedModel pack(const Model& m, const std::vector<std::string>& atoms);

}  // namespace hyperign

#endif  // HYPERIGN_MODEL_H_

#include "hyperign/model.h"

#include <algorithm>
#include <set>

#include "hyperign/errors.h"

namespace hyperign {

KripkeModel::KripkeModel(std::vector<WorldId> worlds,
                         const std::vector<std::pair<WorldId, WorldId>>& relation,
                         const std::map<std::string, std::vector<WorldId>>& valuation)
    : worlds_(std::move(worlds)) {
  if (worlds_.empty()) throw ValidationError("model needs at least one world");
  if (worlds_.size() > kMaxWorlds) {
    throw ValidationError("model has " + std::to_string(worlds_.size()) +
                          " worlds, limit is " + std::to_string(kMaxWorlds));
  }
  if (std::set<WorldId>(worlds_.begin(), worlds_.end()).size() != worlds_.size()) {
    throw ValidationError("duplicate world id");
  }
  auto resolve = [&](const WorldId& w) {
    auto it = std::find(worlds_.begin(), worlds_.end(), w);
    if (it == worlds_.end()) throw ValidationError("reference to unknown world '" + w + "'");
    return static_cast<std::size_t>(it - worlds_.begin());
  };
  succ_.assign(worlds_.size(), 0);
  for (const auto& [u, v] : relation) succ_[resolve(u)] |= WorldSet{1} << resolve(v);
  for (const auto& [atom, ws] : valuation) {
    WorldSet s = 0;
    for (const auto& w : ws) s |= WorldSet{1} << resolve(w);
    val_[atom] = s;
  }
}

std::size_t KripkeModel::index_of(std::string_view world) const {
  auto it = std::find(worlds_.begin(), worlds_.end(), world);
  if (it == worlds_.end()) throw WorldNotFound(std::string(world));
  return static_cast<std::size_t>(it - worlds_.begin());
}

WorldSet KripkeModel::extension(const std::string& atom) const {
  auto it = val_.find(atom);
  return it == val_.end() ? 0 : it->second;
}

std::vector<std::pair<WorldId, WorldId>> KripkeModel::relation_pairs() const {
  std::vector<std::pair<WorldId, WorldId>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (related(i, j)) out.emplace_back(worlds_[i], worlds_[j]);
    }
  }
  return out;
}

const KripkeModel& frame_of(const Model& m) {
  if (const auto* k = std::get_if<KripkeModel>(&m)) return *k;
  return std::get<TopicSensitiveModel>(m).base;
}

const Topics* topics_of(const Model& m) {
  if (const auto* t = std::get_if<TopicSensitiveModel>(&m)) return &t->topics;
  return nullptr;
}

Model unpack(const PackedModel& pm, const std::vector<std::string>& atoms) {
  std::vector<WorldId> worlds;
  for (std::size_t i = 0; i < pm.worlds; ++i) worlds.push_back("w" + std::to_string(i + 1));
  std::vector<std::pair<WorldId, WorldId>> rel;
  for (std::size_t i = 0; i < pm.worlds; ++i) {
    for (std::size_t j = 0; j < pm.worlds; ++j) {
      if ((pm.succ[i] >> j) & 1U) rel.emplace_back(worlds[i], worlds[j]);
    }
  }
  std::map<std::string, std::vector<WorldId>> val;
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    auto& ext = val[atoms[a]];
    for (std::size_t i = 0; i < pm.worlds; ++i) {
      if ((pm.val[a] >> i) & 1U) ext.push_back(worlds[i]);
    }
  }
  KripkeModel base(std::move(worlds), rel, val);
  if (!pm.has_topics) return base;
  GraspSet g;
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    if ((pm.grasped >> a) & 1U) g.grasped.insert(atoms[a]);
  }
  return TopicSensitiveModel{std::move(base), std::move(g)};
}

PackedModel pack(const Model& m, const std::vector<std::string>& atoms) {
  const KripkeModel& k = frame_of(m);
  PackedModel pm;
  pm.worlds = k.size();
  for (std::size_t i = 0; i < k.size(); ++i) pm.succ.push_back(k.successors(i));
  for (const auto& a : atoms) pm.val.push_back(k.extension(a));
  if (const Topics* t = topics_of(m)) {
    pm.has_topics = true;
    // A full lattice is reduced to the atoms whose topic sits below kappa.
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      if (grasps(*t, {atoms[a]})) pm.grasped |= std::uint64_t{1} << a;
    }
  }
  return pm;
}

}  // namespace hyperign

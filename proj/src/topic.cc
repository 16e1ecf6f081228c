#include "hyperign/topic.h"

#include <algorithm>

#include "hyperign/errors.h"

namespace hyperign {

TopicModel::TopicModel(std::vector<TopicId> elements,
                       const std::vector<std::vector<TopicId>>& fusion,
                       TopicId kappa, std::map<std::string, TopicId> assign)
    : elements_(std::move(elements)), assign_(std::move(assign)) {
  if (elements_.empty()) throw ValidationError("topic model has no elements");
  {
    std::set<TopicId> seen(elements_.begin(), elements_.end());
    if (seen.size() != elements_.size()) throw ValidationError("duplicate topic id");
  }
  const std::size_t n = elements_.size();
  if (fusion.size() != n) throw ValidationError("fusion table must have one row per topic");
  auto resolve = [&](const TopicId& id) {
    auto it = std::find(elements_.begin(), elements_.end(), id);
    if (it == elements_.end()) throw ValidationError("unknown topic '" + id + "'");
    return static_cast<std::size_t>(it - elements_.begin());
  };
  table_.reserve(n * n);
  for (const auto& row : fusion) {
    if (row.size() != n) throw ValidationError("fusion table must be square");
    for (const auto& id : row) table_.push_back(resolve(id));
  }
  kappa_ = resolve(kappa);
  for (const auto& [atom, id] : assign_) assign_index_[atom] = resolve(id);
}

std::size_t TopicModel::index_of(const TopicId& id) const {
  auto it = std::find(elements_.begin(), elements_.end(), id);
  if (it == elements_.end()) throw UnknownTopicError(id);
  return static_cast<std::size_t>(it - elements_.begin());
}

std::optional<std::size_t> TopicModel::topic_index(const std::string& atom) const {
  auto it = assign_index_.find(atom);
  if (it == assign_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<TopicId>> TopicModel::fusion_table() const {
  std::vector<std::vector<TopicId>> out(size());
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) out[a].push_back(elements_[fuse(a, b)]);
  }
  return out;
}

bool TopicModel::operator==(const TopicModel& other) const {
  return elements_ == other.elements_ && table_ == other.table_ &&
         kappa_ == other.kappa_ && assign_ == other.assign_;
}

std::string Violation::describe() const {
  std::string s;
  switch (law) {
    case Law::Idempotence: s = "idempotence"; break;
    case Law::Commutativity: s = "commutativity"; break;
    case Law::Associativity: s = "associativity"; break;
  }
  s += " fails at (";
  for (std::size_t i = 0; i < at.size(); ++i) s += (i ? "," : "") + at[i];
  return s + ")";
}

std::vector<Violation> validate(const TopicModel& tm) {
  std::vector<Violation> out;
  const std::size_t n = tm.size();
  auto id = [&](std::size_t i) { return tm.element(i); };
  for (std::size_t a = 0; a < n; ++a) {
    if (tm.fuse(a, a) != a) out.push_back({Violation::Law::Idempotence, {id(a)}});
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (tm.fuse(a, b) != tm.fuse(b, a)) {
        out.push_back({Violation::Law::Commutativity, {id(a), id(b)}});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (tm.fuse(tm.fuse(a, b), c) != tm.fuse(a, tm.fuse(b, c))) {
          out.push_back({Violation::Law::Associativity, {id(a), id(b), id(c)}});
        }
      }
    }
  }
  return out;
}

std::size_t topic_index_of(const std::set<std::string>& atoms, const TopicModel& tm) {
  if (atoms.empty()) throw EmptyVarError();
  std::optional<std::size_t> acc;
  for (const auto& a : atoms) {
    auto t = tm.topic_index(a);
    if (!t) throw UnassignedAtomError(a);
    acc = acc ? tm.fuse(*acc, *t) : *t;
  }
  return *acc;
}

TopicId topic_of(const Formula& f, const TopicModel& tm) {
  return tm.element(topic_index_of(vars(f), tm));
}

bool parthood(const TopicId& a, const TopicId& b, const TopicModel& tm) {
  const std::size_t ia = tm.index_of(a);
  const std::size_t ib = tm.index_of(b);
  return tm.fuse(ia, ib) == ib;
}

GraspSet grasp_collapse(const TopicModel& tm) {
  GraspSet g;
  const std::size_t k = tm.kappa();
  for (const auto& [atom, id] : tm.assignment()) {
    if (tm.fuse(tm.index_of(id), k) == k) g.grasped.insert(atom);
  }
  return g;
}

TopicModel expand(const GraspSet& g, const std::set<std::string>& atoms) {
  // "b" is kappa and sits below "a".
  std::map<std::string, TopicId> assign;
  for (const auto& p : atoms) assign[p] = g.grasped.count(p) ? "b" : "a";
  for (const auto& p : g.grasped) assign[p] = "b";
  return TopicModel({"a", "b"}, {{"a", "a"}, {"a", "b"}}, "b", std::move(assign));
}

bool grasps(const Topics& topics, const std::set<std::string>& atoms) {
  if (atoms.empty()) throw EmptyVarError();
  if (const auto* g = std::get_if<GraspSet>(&topics)) {
    return std::includes(g->grasped.begin(), g->grasped.end(), atoms.begin(), atoms.end());
  }
  const auto& tm = std::get<TopicModel>(topics);
  const std::size_t k = tm.kappa();
  return tm.fuse(topic_index_of(atoms, tm), k) == k;
}

}  // namespace hyperign

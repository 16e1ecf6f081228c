#include "hyperign/generate.h"

#include <algorithm>
#include <map>

namespace hyperign {

int Generator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool Generator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

Formula Generator::formula(Language lang, int max_depth, const std::vector<std::string>& atoms) {
  if (max_depth <= 0 || coin(0.25)) return Formula::Atom(atoms[uniform(0, static_cast<int>(atoms.size()) - 1)]);
  static constexpr struct {
    Op op;
    int weight;
  } kChoices[] = {{Op::Not, 3},  {Op::And, 2},  {Op::Or, 2},   {Op::Imp, 2},  {Op::Iff, 1},  {Op::Box, 2},
                  {Op::IgnW, 3}, {Op::IgnU, 3}, {Op::IgnD, 3}, {Op::Grasp, 2}};
  int total = 0;
  for (const auto& c : kChoices) total += admits(lang, c.op) ? c.weight : 0;
  int pick = uniform(0, total - 1);
  Op op = Op::Not;
  for (const auto& c : kChoices) {
    if (!admits(lang, c.op)) continue;
    if (pick < c.weight) {
      op = c.op;
      break;
    }
    pick -= c.weight;
  }
  if (is_unary(op)) return Formula::Unary(op, formula(lang, max_depth - 1, atoms));
  Formula lhs = formula(lang, max_depth - 1, atoms);
  return Formula::Binary(op, std::move(lhs), formula(lang, max_depth - 1, atoms));
}

TopicModel Generator::topic_model(int max_elements, const std::set<std::string>& atoms) {
  std::vector<unsigned> family;
  for (;;) {
    std::set<unsigned> closed;
    const int gens = uniform(1, 3);
    for (int i = 0; i < gens; ++i) closed.insert(static_cast<unsigned>(uniform(0, 7)));
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<unsigned> now(closed.begin(), closed.end());
      for (unsigned a : now) {
        for (unsigned b : now) grew |= closed.insert(a | b).second;
      }
    }
    if (static_cast<int>(closed.size()) <= max_elements) {
      family.assign(closed.begin(), closed.end());
      break;
    }
  }
  std::shuffle(family.begin(), family.end(), rng_);
  const std::size_t n = family.size();
  std::vector<TopicId> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("t" + std::to_string(i));
  auto id_of = [&](unsigned set) {
    return ids[std::find(family.begin(), family.end(), set) - family.begin()];
  };
  std::vector<std::vector<TopicId>> fusion(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) fusion[a].push_back(id_of(family[a] | family[b]));
  }
  std::map<std::string, TopicId> assign;
  for (const auto& p : atoms) assign[p] = ids[uniform(0, static_cast<int>(n) - 1)];
  TopicId kappa = ids[uniform(0, static_cast<int>(n) - 1)];
  return TopicModel(std::move(ids), fusion, std::move(kappa), std::move(assign));
}

GraspSet Generator::grasp_set(const std::set<std::string>& atoms) {
  GraspSet g;
  for (const auto& p : atoms) {
    if (coin()) g.grasped.insert(p);
  }
  return g;
}

KripkeModel Generator::kripke(int max_worlds, const std::set<std::string>& atoms) {
  const int n = uniform(1, max_worlds);
  std::vector<WorldId> worlds;
  for (int i = 1; i <= n; ++i) worlds.push_back("w" + std::to_string(i));
  std::vector<std::pair<WorldId, WorldId>> rel;
  for (const auto& u : worlds) {
    for (const auto& v : worlds) {
      if (coin()) rel.emplace_back(u, v);
    }
  }
  std::map<std::string, std::vector<WorldId>> val;
  for (const auto& p : atoms) {
    auto& ext = val[p];
    for (const auto& w : worlds) {
      if (coin()) ext.push_back(w);
    }
  }
  return KripkeModel(std::move(worlds), rel, val);
}

Model Generator::model(System system, int max_worlds, const std::set<std::string>& atoms,
                       double lattice_p, int max_elements) {
  KripkeModel k = kripke(max_worlds, atoms);
  if (!is_hyper(system)) return k;
  if (coin(lattice_p)) return TopicSensitiveModel{std::move(k), topic_model(max_elements, atoms)};
  return TopicSensitiveModel{std::move(k), grasp_set(atoms)};
}

}  // namespace hyperign

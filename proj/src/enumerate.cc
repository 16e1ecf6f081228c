#include <set>

#include "hyperign/errors.h"
#include "hyperign/model.h"

namespace hyperign {

namespace {

constexpr int kMaxIndexBits = 62;

std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
}

}  // namespace

ModelSpace::ModelSpace(std::vector<std::string> atoms, int max_worlds, TopicMode mode)
    : atoms_(std::move(atoms)), max_worlds_(max_worlds), mode_(mode) {
  if (max_worlds_ < 1) throw BoundsError("max_worlds must be at least 1");
  if (atoms_.empty()) throw BoundsError("enumeration needs at least one atom");
  if (std::set<std::string>(atoms_.begin(), atoms_.end()).size() != atoms_.size()) {
    throw BoundsError("duplicate atom in enumeration");
  }
  const int a = static_cast<int>(atoms_.size());
  for (int n = 1; n <= max_worlds_; ++n) {
    const int bits = n * n + n * a + (mode_ == TopicMode::Grasp ? a : 0);
    if (bits > kMaxIndexBits) {
      throw BoundsError("model space too large at " + std::to_string(n) + " worlds");
    }
    block_start_.push_back(total_);
    const std::uint64_t block = std::uint64_t{1} << bits;
    if (total_ > (std::uint64_t{1} << kMaxIndexBits) - block) {
      throw BoundsError("model space too large");
    }
    total_ += block;
  }
}

std::uint64_t ModelSpace::block_size(int n) const {
  const int a = static_cast<int>(atoms_.size());
  return std::uint64_t{1} << (n * n + n * a + (mode_ == TopicMode::Grasp ? a : 0));
}

void ModelSpace::packed_at(std::uint64_t index, PackedModel& out) const {
  if (index >= total_) throw BoundsError("model index out of range");
  int n = max_worlds_;
  while (block_start_[n - 1] > index) --n;
  std::uint64_t local = index - block_start_[n - 1];

  const int a = static_cast<int>(atoms_.size());
  const int grasp_bits = mode_ == TopicMode::Grasp ? a : 0;
  const int val_bits = n * a;

  const std::uint64_t gcode = local & low_mask(grasp_bits);
  local >>= grasp_bits;
  const std::uint64_t vcode = low_mask(val_bits) - (local & low_mask(val_bits));
  local >>= val_bits;
  const std::uint64_t rcode = local;

  out.worlds = static_cast<std::size_t>(n);
  out.succ.assign(n, 0);
  for (int i = 0; i < n; ++i) out.succ[i] = (rcode >> (i * n)) & low_mask(n);
  out.val.assign(a, 0);
  for (int k = 0; k < a; ++k) out.val[k] = (vcode >> (k * n)) & low_mask(n);
  out.has_topics = mode_ == TopicMode::Grasp;
  out.grasped = out.has_topics ? low_mask(grasp_bits) - gcode : 0;
}

Model ModelSpace::at(std::uint64_t index) const {
  PackedModel pm;
  packed_at(index, pm);
  return unpack(pm, atoms_);
}

ModelSpace enumerate_models(const std::set<std::string>& atoms, int max_worlds, TopicMode mode) {
  return ModelSpace(std::vector<std::string>(atoms.begin(), atoms.end()), max_worlds, mode);
}

}  // namespace hyperign

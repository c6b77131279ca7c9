#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "spherescope/group.hpp"

namespace spherescope {

inline constexpr std::uint64_t kDefaultVertexBudget = 50'000'000;

// The ball B_N around the identity: canonical key -> exact word length.
// Adjacency is never stored; neighbours are recomputed through the model.
class BallTable {
 public:
  BallTable(std::shared_ptr<const GroupModel> model, int radius,
            std::unordered_map<ElementKey, std::uint16_t> lengths,
            std::vector<std::uint64_t> sphere_sizes);

  const GroupModel& model() const { return *model_; }
  std::shared_ptr<const GroupModel> model_ptr() const { return model_; }
  int radius() const { return radius_; }
  std::uint64_t size() const { return lengths_.size(); }

  bool contains(const ElementKey& g) const { return lengths_.count(g) != 0; }

  // Exact word distance from the identity. Throws not_in_ball.
  int length_of(const ElementKey& g) const;

  // |S_n| for 0 <= n <= N. Throws out_of_range.
  std::uint64_t sphere_size(int n) const;
  // |B_n| for 0 <= n <= N.
  std::uint64_t ball_size(int n) const;
  const std::vector<std::uint64_t>& sphere_sizes() const { return sphere_sizes_; }

  // Keys with min_len <= |g| <= max_len, sorted bytewise (the canonical
  // report order).
  std::vector<ElementKey> keys_with_length_in(int min_len, int max_len) const;
  std::vector<ElementKey> keys_at(int n) const { return keys_with_length_in(n, n); }

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& [key, len] : lengths_) f(key, static_cast<int>(len));
  }

  template <typename F>
  void for_each_neighbor(const ElementKey& g, F&& f) const {
    for (int i = 0; i < model_->generator_count(); ++i) {
      ElementKey h = model_->apply(g, i);
      auto it = lengths_.find(h);
      if (it != lengths_.end()) f(h, static_cast<int>(it->second), i);
    }
  }

 private:
  std::shared_ptr<const GroupModel> model_;
  int radius_;
  std::unordered_map<ElementKey, std::uint16_t> lengths_;
  std::vector<std::uint64_t> sphere_sizes_;
};

// Level-synchronous BFS out to radius N. Throws BudgetExceeded when the
// table would grow past `budget` vertices.
BallTable build_ball(std::shared_ptr<const GroupModel> model, int radius,
                     std::uint64_t budget = kDefaultVertexBudget);

int word_length(const BallTable& b, const ElementKey& g);
std::uint64_t sphere_size(const BallTable& b, int n);

// Versioned binary cache. Records are sorted by key, so a save/load/save
// round trip is byte-identical.
void save_ball(const BallTable& b, const std::string& path);
BallTable load_ball(const std::string& path);

}  // namespace spherescope

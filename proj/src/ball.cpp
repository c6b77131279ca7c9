#include "spherescope/ball.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "spherescope/byte_io.hpp"
#include "spherescope/errors.hpp"

namespace spherescope {

namespace {
constexpr char kCacheMagic[4] = {'S', 'S', 'B', 'L'};
constexpr std::uint32_t kCacheVersion = 1;
}  // namespace

BallTable::BallTable(std::shared_ptr<const GroupModel> model, int radius,
                     std::unordered_map<ElementKey, std::uint16_t> lengths,
                     std::vector<std::uint64_t> sphere_sizes)
    : model_(std::move(model)),
      radius_(radius),
      lengths_(std::move(lengths)),
      sphere_sizes_(std::move(sphere_sizes)) {}

int BallTable::length_of(const ElementKey& g) const {
  auto it = lengths_.find(g);
  if (it == lengths_.end())
    fail(Errc::not_in_ball, "element " + model_->describe(g) + " is outside B_" + std::to_string(radius_));
  return static_cast<int>(it->second);
}

std::uint64_t BallTable::sphere_size(int n) const {
  if (n < 0 || n > radius_)
    fail(Errc::out_of_range, "sphere index " + std::to_string(n) + " not in [0," + std::to_string(radius_) + "]");
  return sphere_sizes_[static_cast<std::size_t>(n)];
}

std::uint64_t BallTable::ball_size(int n) const {
  if (n < 0 || n > radius_)
    fail(Errc::out_of_range, "ball index " + std::to_string(n) + " not in [0," + std::to_string(radius_) + "]");
  std::uint64_t total = 0;
  for (int i = 0; i <= n; ++i) total += sphere_sizes_[static_cast<std::size_t>(i)];
  return total;
}

std::vector<ElementKey> BallTable::keys_with_length_in(int min_len, int max_len) const {
  std::vector<ElementKey> out;
  for (const auto& [key, len] : lengths_)
    if (static_cast<int>(len) >= min_len && static_cast<int>(len) <= max_len) out.push_back(key);
  std::sort(out.begin(), out.end());
  return out;
}

BallTable build_ball(std::shared_ptr<const GroupModel> model, int radius, std::uint64_t budget) {
  if (radius < 0) fail(Errc::invalid_parameter, "ball radius must be >= 0");
  if (budget == 0) fail(Errc::invalid_parameter, "vertex budget must be positive");

  std::unordered_map<ElementKey, std::uint16_t> lengths;
  std::vector<std::uint64_t> spheres;
  std::vector<ElementKey> frontier{model->identity()};
  lengths.emplace(model->identity(), 0);
  spheres.push_back(1);
  if (lengths.size() > budget) throw BudgetExceeded(-1, budget);

  int gens = model->generator_count();
  for (int level = 1; level <= radius; ++level) {
    std::vector<ElementKey> next;
    for (const ElementKey& g : frontier) {
      for (int i = 0; i < gens; ++i) {
        ElementKey h = model->apply(g, i);
        auto [it, inserted] = lengths.emplace(std::move(h), static_cast<std::uint16_t>(level));
        if (inserted) {
          if (lengths.size() > budget) throw BudgetExceeded(level - 1, budget);
          next.push_back(it->first);
        }
      }
    }
    spheres.push_back(next.size());
    frontier = std::move(next);
  }
  return BallTable(std::move(model), radius, std::move(lengths), std::move(spheres));
}

int word_length(const BallTable& b, const ElementKey& g) { return b.length_of(g); }

std::uint64_t sphere_size(const BallTable& b, int n) { return b.sphere_size(n); }

void save_ball(const BallTable& b, const std::string& path) {
  std::string out;
  out.append(kCacheMagic, 4);
  bytes::put_u32(out, kCacheVersion);
  const std::string& spec = b.model().spec();
  bytes::put_u32(out, static_cast<std::uint32_t>(spec.size()));
  out += spec;
  bytes::put_u32(out, static_cast<std::uint32_t>(b.radius()));
  bytes::put_u64(out, b.size());

  std::vector<ElementKey> keys = b.keys_with_length_in(0, b.radius());
  for (const ElementKey& k : keys) {
    bytes::put_u32(out, static_cast<std::uint32_t>(k.size()));
    out += k;
    bytes::put_u16(out, static_cast<std::uint16_t>(b.length_of(k)));
  }

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) fail(Errc::io_error, "cannot open '" + path + "' for writing");
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) fail(Errc::io_error, "short write to '" + path + "'");
}

BallTable load_ball(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(Errc::io_error, "cannot open ball cache '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  std::string in = ss.str();

  std::size_t pos = 0;
  if (in.size() < 4 || in.compare(0, 4, kCacheMagic, 4) != 0)
    fail(Errc::cache_format, "'" + path + "' is not a ball cache");
  pos = 4;
  std::uint32_t version = bytes::get_u32(in, pos);
  if (version != kCacheVersion)
    fail(Errc::cache_format, "unsupported cache version " + std::to_string(version));
  std::uint32_t spec_len = bytes::get_u32(in, pos);
  if (pos + spec_len > in.size()) fail(Errc::cache_format, "truncated model spec");
  std::string spec = in.substr(pos, spec_len);
  pos += spec_len;
  int radius = static_cast<int>(bytes::get_u32(in, pos));
  std::uint64_t count = bytes::get_u64(in, pos);

  auto model = make_model(spec);
  std::unordered_map<ElementKey, std::uint16_t> lengths;
  lengths.reserve(static_cast<std::size_t>(count));
  std::vector<std::uint64_t> spheres(static_cast<std::size_t>(radius) + 1, 0);
  ElementKey prev;
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint32_t key_len = bytes::get_u32(in, pos);
    if (pos + key_len > in.size()) fail(Errc::cache_format, "truncated key record");
    ElementKey key = in.substr(pos, key_len);
    pos += key_len;
    std::uint16_t len = bytes::get_u16(in, pos);
    if (static_cast<int>(len) > radius) fail(Errc::cache_format, "length exceeds cache radius");
    if (i > 0 && !(prev < key)) fail(Errc::cache_format, "cache records not strictly sorted");
    spheres[len] += 1;
    lengths.emplace(key, len);
    prev = std::move(key);
  }
  if (pos != in.size()) fail(Errc::cache_format, "trailing bytes in cache");
  if (lengths.size() != count) fail(Errc::cache_format, "duplicate keys in cache");
  auto id_it = lengths.find(model->identity());
  if (id_it == lengths.end() || id_it->second != 0)
    fail(Errc::cache_format, "cache is missing the identity record");
  return BallTable(std::move(model), radius, std::move(lengths), std::move(spheres));
}

}  // namespace spherescope

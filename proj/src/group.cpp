#include "spherescope/group.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "spherescope/byte_io.hpp"
#include "spherescope/errors.hpp"

namespace spherescope {

namespace {

using bytes::get_i32;
using bytes::put_i32;
using bytes::read_i32_at;
using bytes::write_i32_at;

std::vector<std::string> letter_names(int count) {
  std::vector<std::string> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    if (count <= 26)
      out.push_back(std::string(1, static_cast<char>('a' + i)));
    else
      out.push_back("g" + std::to_string(i + 1));
  }
  return out;
}

// --- Z^d: coordinate vector, key = d little-endian i32 ------------------

class ZdModel final : public GroupModel {
 public:
  ZdModel(Info info, int d) : GroupModel(std::move(info)), d_(d) {}

  ElementKey identity() const override { return ElementKey(static_cast<std::size_t>(4 * d_), '\0'); }

  ElementKey apply(const ElementKey& g, int gen) const override {
    int axis = gen / 2;
    int delta = (gen % 2 == 0) ? +1 : -1;
    ElementKey out = g;
    write_i32_at(out, static_cast<std::size_t>(4 * axis),
                 read_i32_at(g, static_cast<std::size_t>(4 * axis)) + delta);
    return out;
  }

  ElementKey invert(const ElementKey& g) const override {
    ElementKey out = g;
    for (int i = 0; i < d_; ++i)
      write_i32_at(out, static_cast<std::size_t>(4 * i),
                   -read_i32_at(g, static_cast<std::size_t>(4 * i)));
    return out;
  }

  std::string describe(const ElementKey& g) const override {
    std::string out = "(";
    for (int i = 0; i < d_; ++i) {
      if (i) out += ",";
      out += std::to_string(read_i32_at(g, static_cast<std::size_t>(4 * i)));
    }
    return out + ")";
  }

 private:
  int d_;
};

// --- Heisenberg: triple (a,b,c) for [[1,a,c],[0,1,b],[0,0,1]] ------------
// Right multiplication: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b').

class HeisenbergModel final : public GroupModel {
 public:
  explicit HeisenbergModel(Info info) : GroupModel(std::move(info)) {}

  ElementKey identity() const override { return ElementKey(12, '\0'); }

  ElementKey apply(const ElementKey& g, int gen) const override {
    std::int32_t a = read_i32_at(g, 0), b = read_i32_at(g, 4), c = read_i32_at(g, 8);
    switch (gen) {
      case 0: ++a; break;            // x
      case 1: --a; break;            // x^-1
      case 2: ++b; c += a; break;    // y
      case 3: --b; c -= a; break;    // y^-1
      case 4: ++c; break;            // z
      case 5: --c; break;            // z^-1
      default: fail(Errc::out_of_range, "generator index");
    }
    ElementKey out;
    out.reserve(12);
    put_i32(out, a);
    put_i32(out, b);
    put_i32(out, c);
    return out;
  }

  ElementKey invert(const ElementKey& g) const override {
    std::int32_t a = read_i32_at(g, 0), b = read_i32_at(g, 4), c = read_i32_at(g, 8);
    ElementKey out;
    out.reserve(12);
    put_i32(out, -a);
    put_i32(out, -b);
    put_i32(out, a * b - c);
    return out;
  }

  std::string describe(const ElementKey& g) const override {
    return "(" + std::to_string(read_i32_at(g, 0)) + "," + std::to_string(read_i32_at(g, 4)) +
           "," + std::to_string(read_i32_at(g, 8)) + ")";
  }
};

// --- Z2 wr Z: lamp set over Z plus head, key = head then sorted lamps ----

struct Lamp2State {
  std::int32_t head = 0;
  std::vector<std::int32_t> lamps;  // sorted, distinct
};

Lamp2State decode_lamp2(const ElementKey& g) {
  Lamp2State st;
  std::size_t pos = 0;
  st.head = get_i32(g, pos);
  while (pos < g.size()) st.lamps.push_back(get_i32(g, pos));
  return st;
}

ElementKey encode_lamp2(const Lamp2State& st) {
  ElementKey out;
  out.reserve(4 + 4 * st.lamps.size());
  put_i32(out, st.head);
  for (auto p : st.lamps) put_i32(out, p);
  return out;
}

class Lamplighter2Model final : public GroupModel {
 public:
  explicit Lamplighter2Model(Info info) : GroupModel(std::move(info)) {}

  ElementKey identity() const override { return ElementKey(4, '\0'); }

  ElementKey apply(const ElementKey& g, int gen) const override {
    if (gen == 1 || gen == 2) {  // t / t^-1: move the head only
      ElementKey out = g;
      write_i32_at(out, 0, read_i32_at(g, 0) + (gen == 1 ? 1 : -1));
      return out;
    }
    // a: toggle the lamp under the head
    Lamp2State st = decode_lamp2(g);
    auto it = std::lower_bound(st.lamps.begin(), st.lamps.end(), st.head);
    if (it != st.lamps.end() && *it == st.head)
      st.lamps.erase(it);
    else
      st.lamps.insert(it, st.head);
    return encode_lamp2(st);
  }

  ElementKey invert(const ElementKey& g) const override {
    Lamp2State st = decode_lamp2(g);
    for (auto& p : st.lamps) p -= st.head;
    st.head = -st.head;
    return encode_lamp2(st);
  }

  std::string describe(const ElementKey& g) const override {
    Lamp2State st = decode_lamp2(g);
    std::string out = "lamps{";
    for (std::size_t i = 0; i < st.lamps.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(st.lamps[i]);
    }
    return out + "} head=" + std::to_string(st.head);
  }
};

// --- Z wr Z: integer lamp values over Z plus head ------------------------

struct WzzState {
  std::int32_t head = 0;
  std::vector<std::pair<std::int32_t, std::int32_t>> lamps;  // (pos, value!=0) sorted by pos
};

WzzState decode_wzz(const ElementKey& g) {
  WzzState st;
  std::size_t pos = 0;
  st.head = get_i32(g, pos);
  while (pos < g.size()) {
    std::int32_t p = get_i32(g, pos);
    std::int32_t v = get_i32(g, pos);
    st.lamps.emplace_back(p, v);
  }
  return st;
}

ElementKey encode_wzz(const WzzState& st) {
  ElementKey out;
  out.reserve(4 + 8 * st.lamps.size());
  put_i32(out, st.head);
  for (auto [p, v] : st.lamps) {
    put_i32(out, p);
    put_i32(out, v);
  }
  return out;
}

class ZwrZModel final : public GroupModel {
 public:
  explicit ZwrZModel(Info info) : GroupModel(std::move(info)) {}

  ElementKey identity() const override { return ElementKey(4, '\0'); }

  ElementKey apply(const ElementKey& g, int gen) const override {
    if (gen == 2 || gen == 3) {
      ElementKey out = g;
      write_i32_at(out, 0, read_i32_at(g, 0) + (gen == 2 ? 1 : -1));
      return out;
    }
    WzzState st = decode_wzz(g);
    int delta = (gen == 0) ? +1 : -1;
    auto it = std::lower_bound(st.lamps.begin(), st.lamps.end(), st.head,
                               [](const auto& e, std::int32_t h) { return e.first < h; });
    if (it != st.lamps.end() && it->first == st.head) {
      it->second += delta;
      if (it->second == 0) st.lamps.erase(it);
    } else {
      st.lamps.insert(it, {st.head, delta});
    }
    return encode_wzz(st);
  }

  ElementKey invert(const ElementKey& g) const override {
    WzzState st = decode_wzz(g);
    for (auto& [p, v] : st.lamps) {
      p -= st.head;
      v = -v;
    }
    st.head = -st.head;
    return encode_wzz(st);
  }

  std::string describe(const ElementKey& g) const override {
    WzzState st = decode_wzz(g);
    std::string out = "lamps{";
    for (std::size_t i = 0; i < st.lamps.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(st.lamps[i].first) + ":" + std::to_string(st.lamps[i].second);
    }
    return out + "} head=" + std::to_string(st.head);
  }
};

// --- Z2 wr Z^2: lamp set over the grid plus head -------------------------

struct Lamp2Z2State {
  std::int32_t hx = 0, hy = 0;
  std::vector<std::pair<std::int32_t, std::int32_t>> lamps;  // sorted lexicographically
};

Lamp2Z2State decode_l2z2(const ElementKey& g) {
  Lamp2Z2State st;
  std::size_t pos = 0;
  st.hx = get_i32(g, pos);
  st.hy = get_i32(g, pos);
  while (pos < g.size()) {
    std::int32_t x = get_i32(g, pos);
    std::int32_t y = get_i32(g, pos);
    st.lamps.emplace_back(x, y);
  }
  return st;
}

ElementKey encode_l2z2(const Lamp2Z2State& st) {
  ElementKey out;
  out.reserve(8 + 8 * st.lamps.size());
  put_i32(out, st.hx);
  put_i32(out, st.hy);
  for (auto [x, y] : st.lamps) {
    put_i32(out, x);
    put_i32(out, y);
  }
  return out;
}

class Lamplighter2Z2Model final : public GroupModel {
 public:
  explicit Lamplighter2Z2Model(Info info) : GroupModel(std::move(info)) {}

  ElementKey identity() const override { return ElementKey(8, '\0'); }

  ElementKey apply(const ElementKey& g, int gen) const override {
    if (gen != 0) {
      ElementKey out = g;
      switch (gen) {
        case 1: write_i32_at(out, 0, read_i32_at(g, 0) + 1); break;  // t1
        case 2: write_i32_at(out, 0, read_i32_at(g, 0) - 1); break;  // t1^-1
        case 3: write_i32_at(out, 4, read_i32_at(g, 4) + 1); break;  // t2
        case 4: write_i32_at(out, 4, read_i32_at(g, 4) - 1); break;  // t2^-1
        default: fail(Errc::out_of_range, "generator index");
      }
      return out;
    }
    Lamp2Z2State st = decode_l2z2(g);
    std::pair<std::int32_t, std::int32_t> h{st.hx, st.hy};
    auto it = std::lower_bound(st.lamps.begin(), st.lamps.end(), h);
    if (it != st.lamps.end() && *it == h)
      st.lamps.erase(it);
    else
      st.lamps.insert(it, h);
    return encode_l2z2(st);
  }

  ElementKey invert(const ElementKey& g) const override {
    Lamp2Z2State st = decode_l2z2(g);
    for (auto& [x, y] : st.lamps) {
      x -= st.hx;
      y -= st.hy;
    }
    st.hx = -st.hx;
    st.hy = -st.hy;
    return encode_l2z2(st);
  }

  std::string describe(const ElementKey& g) const override {
    Lamp2Z2State st = decode_l2z2(g);
    std::string out = "lamps{";
    for (std::size_t i = 0; i < st.lamps.size(); ++i) {
      if (i) out += ",";
      out += "(" + std::to_string(st.lamps[i].first) + "," + std::to_string(st.lamps[i].second) + ")";
    }
    return out + "} head=(" + std::to_string(st.hx) + "," + std::to_string(st.hy) + ")";
  }
};

// --- Free group: reduced word, one byte per letter ------------------------
// Letter byte: 2*gen | (1 if inverse). Normal form is the reduced word, so
// apply is push-or-cancel on the last letter.

class FreeModel final : public GroupModel {
 public:
  explicit FreeModel(Info info) : GroupModel(std::move(info)) {}

  ElementKey identity() const override { return {}; }

  ElementKey apply(const ElementKey& g, int gen) const override {
    int letter = gen / 2;
    int inv = gen % 2;
    char b = static_cast<char>((letter << 1) | inv);
    char opposite = static_cast<char>((letter << 1) | (1 - inv));
    if (!g.empty() && g.back() == opposite) return g.substr(0, g.size() - 1);
    return g + b;
  }

  ElementKey invert(const ElementKey& g) const override {
    ElementKey out;
    out.reserve(g.size());
    for (auto it = g.rbegin(); it != g.rend(); ++it)
      out.push_back(static_cast<char>(static_cast<unsigned char>(*it) ^ 1u));
    return out;
  }

  std::string describe(const ElementKey& g) const override {
    if (g.empty()) return "e";
    std::string out;
    for (char c : g) {
      auto b = static_cast<unsigned char>(c);
      if (!out.empty()) out += ' ';
      out += generator_name((b >> 1) * 2 + (b & 1));
    }
    return out;
  }
};

GroupModel::Info paired_info(std::string name, std::string spec, const std::vector<std::string>& base,
                             EndHint hint) {
  GroupModel::Info info;
  info.name = std::move(name);
  info.spec = std::move(spec);
  info.hint = hint;
  for (const auto& b : base) {
    int i = static_cast<int>(info.gen_names.size());
    info.gen_names.push_back(b);
    info.gen_names.push_back(b + "^-1");
    info.inverse.push_back(i + 1);
    info.inverse.push_back(i);
  }
  return info;
}

long parse_param(const std::string& spec, const std::string& arg) {
  if (arg.empty()) fail(Errc::invalid_parameter, "'" + spec + "' needs a numeric parameter");
  for (char c : arg)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      fail(Errc::invalid_parameter, "bad parameter '" + arg + "' in '" + spec + "'");
  return std::stol(arg);
}

}  // namespace

GroupModel::GroupModel(Info info) : info_(std::move(info)) {
  for (int i = 0; i < generator_count(); ++i)
    if (info_.inverse[static_cast<std::size_t>(i)] >= i) base_.push_back(i);
}

const std::string& GroupModel::generator_name(int i) const {
  if (i < 0 || i >= generator_count()) fail(Errc::out_of_range, "generator index");
  return info_.gen_names[static_cast<std::size_t>(i)];
}

int GroupModel::inverse_generator(int i) const {
  if (i < 0 || i >= generator_count()) fail(Errc::out_of_range, "generator index");
  return info_.inverse[static_cast<std::size_t>(i)];
}

std::shared_ptr<const GroupModel> make_model(const std::string& spec) {
  std::string head = spec, arg;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    head = spec.substr(0, colon);
    arg = spec.substr(colon + 1);
  }

  if (head == "z") {
    if (!arg.empty()) fail(Errc::invalid_parameter, "'z' takes no parameter");
    return std::make_shared<ZdModel>(paired_info("Z", "z", {"t"}, EndHint::two), 1);
  }
  if (head == "zd") {
    long d = parse_param(spec, arg);
    if (d < 1) fail(Errc::invalid_parameter, "zd needs d >= 1");
    if (d > 64) fail(Errc::invalid_parameter, "zd supports d <= 64");
    auto info = paired_info("Z^" + std::to_string(d), "zd:" + std::to_string(d),
                            letter_names(static_cast<int>(d)), d == 1 ? EndHint::two : EndHint::one);
    return std::make_shared<ZdModel>(std::move(info), static_cast<int>(d));
  }
  if (head == "heisenberg") {
    if (arg == "xy") {
      return std::make_shared<HeisenbergModel>(
          paired_info("Heisenberg(x,y)", "heisenberg:xy", {"x", "y"}, EndHint::one));
    }
    if (arg == "xyz") {
      return std::make_shared<HeisenbergModel>(
          paired_info("Heisenberg(x,y,z)", "heisenberg:xyz", {"x", "y", "z"}, EndHint::one));
    }
    fail(Errc::invalid_parameter, "heisenberg generating set must be 'xy' or 'xyz'");
  }
  if (head == "lamplighter2") {
    if (!arg.empty()) fail(Errc::invalid_parameter, "'lamplighter2' takes no parameter");
    GroupModel::Info info;
    info.name = "Z2 wr Z";
    info.spec = "lamplighter2";
    info.hint = EndHint::one;
    info.gen_names = {"a", "t", "t^-1"};
    info.inverse = {0, 2, 1};  // a is an involution
    return std::make_shared<Lamplighter2Model>(std::move(info));
  }
  if (head == "zwrz") {
    if (!arg.empty()) fail(Errc::invalid_parameter, "'zwrz' takes no parameter");
    return std::make_shared<ZwrZModel>(paired_info("Z wr Z", "zwrz", {"a", "t"}, EndHint::one));
  }
  if (head == "lamplighter2_z2") {
    if (!arg.empty()) fail(Errc::invalid_parameter, "'lamplighter2_z2' takes no parameter");
    GroupModel::Info info;
    info.name = "Z2 wr Z^2";
    info.spec = "lamplighter2_z2";
    info.hint = EndHint::one;
    info.gen_names = {"a", "t1", "t1^-1", "t2", "t2^-1"};
    info.inverse = {0, 2, 1, 4, 3};
    return std::make_shared<Lamplighter2Z2Model>(std::move(info));
  }
  if (head == "free") {
    long k = parse_param(spec, arg);
    if (k < 1) fail(Errc::invalid_parameter, "free needs k >= 1");
    if (k > 64) fail(Errc::invalid_parameter, "free supports k <= 64");
    auto info = paired_info("F_" + std::to_string(k), "free:" + std::to_string(k),
                            letter_names(static_cast<int>(k)), k == 1 ? EndHint::two : EndHint::infinite);
    return std::make_shared<FreeModel>(std::move(info));
  }
  fail(Errc::unknown_model_spec, "unknown model spec '" + spec + "'");
}

GeneratorMap map_generators(const Presentation& p, const GroupModel& m) {
  const auto& base = m.base_generators();
  if (p.generators.size() != base.size())
    fail(Errc::invalid_parameter,
         "presentation has " + std::to_string(p.generators.size()) + " generators, model '" +
             m.spec() + "' has " + std::to_string(base.size()));
  GeneratorMap map;
  for (std::size_t k = 0; k < base.size(); ++k) map[p.generators[k]] = base[k];
  return map;
}

ElementKey trace_word(const GroupModel& m, const std::vector<std::string>& names,
                      const GeneratorMap& map, const Word& w, const ElementKey& start) {
  ElementKey g = start;
  for (const Letter& l : w) {
    const std::string& name = names.at(static_cast<std::size_t>(l.gen));
    auto it = map.find(name);
    if (it == map.end()) fail(Errc::unmapped_letter, "generator '" + name + "' is not mapped");
    int gen = it->second;
    if (l.sign < 0) gen = m.inverse_generator(gen);
    g = m.apply(g, gen);
  }
  return g;
}

bool relator_holds(const GroupModel& m, const GeneratorMap& map, const Presentation& p,
                   const Word& w) {
  return trace_word(m, p.generators, map, w, m.identity()) == m.identity();
}

std::string key_to_hex(const ElementKey& k) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(k.size() * 2);
  for (char c : k) {
    auto b = static_cast<unsigned char>(c);
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

const char* end_hint_name(EndHint h) {
  switch (h) {
    case EndHint::one: return "1";
    case EndHint::two: return "2";
    case EndHint::infinite: return "infinity";
    case EndHint::unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace spherescope

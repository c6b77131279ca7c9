#include "spherescope/theorem.hpp"

#include <algorithm>
#include <random>

#include "spherescope/errors.hpp"

namespace spherescope {

int relator_loop_span(const BallTable& b, const std::vector<std::string>& names,
                      const GeneratorMap& map, const Word& w, const ElementKey& base) {
  if (!b.contains(base)) fail(Errc::not_in_ball, "loop base point is outside the ball");
  const GroupModel& m = b.model();
  ElementKey v = base;
  int lo = b.length_of(v), hi = lo;
  for (const Letter& l : w) {
    const std::string& name = names.at(static_cast<std::size_t>(l.gen));
    auto it = map.find(name);
    if (it == map.end()) fail(Errc::unmapped_letter, "generator '" + name + "' is not mapped");
    int gen = it->second;
    if (l.sign < 0) gen = m.inverse_generator(gen);
    v = m.apply(v, gen);
    if (!b.contains(v))
      fail(Errc::loop_exits_ball, "loop from " + m.describe(base) + " leaves B_" +
                                      std::to_string(b.radius()) + " at " + m.describe(v));
    int len = b.length_of(v);
    lo = std::min(lo, len);
    hi = std::max(hi, len);
  }
  return hi - lo;
}

TheoremReport verify_theorem(const BallTable& b, const Presentation& p, int n_max,
                             const VerifyOptions& opts) {
  const GroupModel& m = b.model();
  GeneratorMap map = map_generators(p, m);

  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (!relator_holds(m, map, p, p.relators[i]))
      fail(Errc::relator_does_not_hold,
           "relator '" + p.relator_text[i] + "' does not hold in model '" + m.spec() + "'");
  }
  if (m.end_hint() != EndHint::one)
    fail(Errc::invalid_parameter, "model '" + m.spec() + "' is not one-ended (hint: " +
                                      end_hint_name(m.end_hint()) + ")");

  TheoremReport rep;
  rep.model_name = m.name();
  rep.model_spec = m.spec();
  rep.ball_radius = b.radius();
  rep.relators = p.relator_text;
  for (const Word& w : p.relators) rep.relator_lengths.push_back(static_cast<int>(w.size()));
  rep.radius_bound = theorem_radius(p);
  rep.n_max = n_max;
  rep.seed = opts.seed;

  int r = rep.radius_bound;
  SphereScan scan = scan_connected_spheres(b, r, n_max, opts.guard);
  rep.guard = scan.guard;
  for (const auto& row : scan.rows) rep.component_counts.push_back(row.component_count);
  rep.spheres_connected = scan.all_connected;
  rep.first_disconnected = scan.first_disconnected.value_or(-1);

  // Span checks. Base points are restricted so that the whole loop is
  // guaranteed to stay inside the ball: every loop vertex is within
  // floor(|w|/2) of the base along the shorter arc.
  int max_w = max_relator_length(p);
  rep.span_bound = max_w / 2;
  rep.base_radius = b.radius() - (max_w + 1) / 2;
  if (rep.base_radius < 0)
    fail(Errc::guard_violation, "ball too small for span checks on these relators");

  std::vector<ElementKey> bases = b.keys_with_length_in(0, rep.base_radius);
  rep.span_exhaustive = bases.size() <= opts.sample_cap;
  if (!rep.span_exhaustive) {
    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
    std::vector<ElementKey> sample;
    sample.reserve(opts.sample_cap);
    for (std::uint64_t i = 0; i < opts.sample_cap; ++i)
      sample.push_back(bases[pick(rng)]);
    bases = std::move(sample);
  }

  rep.per_relator_max_span.assign(p.relators.size(), 0);
  rep.span_ok = true;
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    int& worst = rep.per_relator_max_span[i];
    int bound_i = static_cast<int>(p.relators[i].size()) / 2;
    for (const ElementKey& g : bases) {
      int span = relator_loop_span(b, p.generators, map, p.relators[i], g);
      worst = std::max(worst, span);
      if (span > bound_i) rep.span_ok = false;
    }
    rep.max_span = std::max(rep.max_span, worst);
    rep.span_samples += bases.size();
  }

  rep.pass = rep.spheres_connected && rep.span_ok;
  return rep;
}

}  // namespace spherescope

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spherescope/presentation.hpp"

namespace spherescope {

// Number of ends the group is known to have. Metadata only: analyses use it
// as a sanity gate, never as a computed quantity.
enum class EndHint { one, two, infinite, unknown };

const char* end_hint_name(EndHint h);

// Canonical element key: a deterministic byte encoding of the element's
// normal form. Two keys are equal iff the group elements are equal, so keys
// double as hash-map keys and as the reproducible sort order for reports.
using ElementKey = std::string;

// Group arithmetic behind a uniform key-based interface. The generating set
// is symmetric and finite; generator i has a paired inverse generator
// (possibly i itself for involutions).
class GroupModel {
 public:
  struct Info {
    std::string name;                      // human-readable, e.g. "Z^2"
    std::string spec;                      // canonical spec string, e.g. "zd:2"
    std::vector<std::string> gen_names;    // one per generator, inverses named g^-1
    std::vector<int> inverse;              // pairing i <-> inverse[i]
    EndHint hint = EndHint::unknown;
  };

  explicit GroupModel(Info info);
  virtual ~GroupModel() = default;

  const std::string& name() const { return info_.name; }
  const std::string& spec() const { return info_.spec; }
  int generator_count() const { return static_cast<int>(info_.gen_names.size()); }
  const std::string& generator_name(int i) const;
  int inverse_generator(int i) const;
  EndHint end_hint() const { return info_.hint; }

  // Base generators: one representative per {s, s^-1} pair, in declaration
  // order. Presentation alphabets map onto these positionally.
  const std::vector<int>& base_generators() const { return base_; }

  virtual ElementKey identity() const = 0;
  virtual ElementKey apply(const ElementKey& g, int gen) const = 0;
  virtual ElementKey invert(const ElementKey& g) const = 0;
  virtual std::string describe(const ElementKey& g) const = 0;

 private:
  Info info_;
  std::vector<int> base_;
};

// Accepted specs: z | zd:<d> | heisenberg:xy | heisenberg:xyz | lamplighter2
// | zwrz | lamplighter2_z2 | free:<k>.
std::shared_ptr<const GroupModel> make_model(const std::string& spec);

// Presentation-generator name -> model generator index (the positive one of
// the pair). Built positionally: k-th presentation generator to k-th base
// generator; counts must agree.
using GeneratorMap = std::map<std::string, int>;

GeneratorMap map_generators(const Presentation& p, const GroupModel& m);

// Applies w letter by letter starting at `start`. Letters with sign -1 use
// the paired inverse generator. Throws unmapped_letter for names missing
// from the map.
ElementKey trace_word(const GroupModel& m, const std::vector<std::string>& names,
                      const GeneratorMap& map, const Word& w, const ElementKey& start);

bool relator_holds(const GroupModel& m, const GeneratorMap& map, const Presentation& p,
                   const Word& w);

std::string key_to_hex(const ElementKey& k);

}  // namespace spherescope

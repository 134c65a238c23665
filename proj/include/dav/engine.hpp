#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dav/automorphism.hpp"
#include "dav/group.hpp"
#include "dav/products.hpp"
#include "dav/sequence.hpp"

namespace dav {

enum class Kind { Small, Large };

inline const char* kind_name(Kind k) { return k == Kind::Small ? "small" : "large"; }

// One enumeration level: all sequences of length k in play (product-one free
// for the small constant, atoms for the large one) and their orbit
// representatives. Representatives are the lexicographically least members
// of their orbits, listed in ascending order.
struct LevelStats {
  int k = 0;
  std::uint64_t count = 0;
  std::uint64_t classes = 0;
  std::vector<Sequence> reps;
};

// Serialized level data with a group fingerprint; the on-disk cache format.
struct CacheData {
  std::string fingerprint;
  Kind kind = Kind::Small;
  std::vector<LevelStats> levels;

  bool terminated() const { return !levels.empty() && levels.back().count == 0; }
};

struct EngineOptions {
  int threads = 1;
  int max_level = 0;  // 0 = run to termination
  std::uint64_t memory_cap = 4ull << 30;
  const AutomorphismGroup* aut = nullptr;  // override for testing
  const CacheData* resume = nullptr;
};

struct DavenportReport {
  std::string group_name;
  std::optional<GapId> gap_id;
  int order = 0;
  std::string fingerprint;
  Kind kind = Kind::Small;
  int constant = 0;
  bool complete = true;
  std::vector<LevelStats> levels;  // k = 1 .. first empty level
  double wall_seconds = 0;
  int threads = 1;
  int max_level = 0;
  std::uint64_t memory_cap = 0;

  std::uint64_t total_count() const;
  std::uint64_t total_classes() const;
};

DavenportReport davenport(const Group& g, Kind kind, const EngineOptions& opt = {});
DavenportReport small_davenport(const Group& g, const EngineOptions& opt = {});
DavenportReport large_davenport(const Group& g, const EngineOptions& opt = {});

// The recursive decomposability predicate: s (product-one, of length k) is a
// product of at least two atoms, witnessed against complete atom level sets.
bool decomposable(const Group& g, const Sequence& s, const std::vector<SequenceSet>& atom_levels);

// Full level set as the union of the representatives' orbits.
SequenceSet expand_orbits(const AutomorphismGroup& aut, const std::vector<Sequence>& reps);

}  // namespace dav

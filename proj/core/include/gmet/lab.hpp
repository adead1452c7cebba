#pragma once

#include "gmet/graph.hpp"
#include "gmet/minors.hpp"
#include "gmet/spectral.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gmet {

uint64_t mix64(uint64_t x);

// Counter-based generator: every draw is hash(seed, stream, counter), so
// parallel samplers stay deterministic without shared state.
struct CounterRng {
  uint64_t key = 0;
  uint64_t ctr = 0;

  CounterRng(uint64_t seed, uint64_t stream) : key(mix64(seed ^ mix64(stream ^ 0x9E3779B97F4A7C15ULL))) {}
  uint64_t next() { return mix64(key ^ mix64(ctr++)); }
  // Uniform in [0, bound).
  uint64_t next_below(uint64_t bound) { return next() % bound; }
};

enum class Family { Path, Cycle, Star, RandomTree, RandomConnected, Multipartite, K4 };

struct FamilySpec {
  Family family = Family::Path;
  int n = 0;
  std::vector<int> parts;  // Multipartite only
  double edge_prob = 0.0;  // RandomConnected; 0 means the 2 ln(n)/n default
  uint64_t seed = 0;
};

// Unit-weight graph; deterministic given the spec (random families are
// seeded-deterministic).
WeightedGraph generate_family(const FamilySpec& spec);
std::string family_id(const FamilySpec& spec);

enum class WeightLaw { UniformUnit, Tenths, Exponential };
const char* law_name(WeightLaw law);

// Dyadic (or tenths) rational weights, a pure function of (g, seed, law).
std::vector<Rat> random_weighting(const WeightedGraph& g, uint64_t seed, WeightLaw law);

struct SampleRecord {
  uint64_t seed = 0;
  std::string graph_id;
  Inertia inertia;
};

struct ExperimentReport {
  std::string kind;  // "weak" | "strong" | "lp"
  std::string law;
  int n = 0;
  int samples = 0;
  int bound = 0;  // weak: floor((n+1)/3); strong: threes; lp: 1
  std::vector<SampleRecord> records;
  int max_iplus = 0;
  std::vector<int> violation_samples;
  long long wall_ms = 0;

  // strong scan only
  bool minor_checked = false;
  bool minor_present = false;
  int threes = 0;
  bool search_gap = false;

  // lp scan only
  double p = 0.0;
  int dim = 0;
  int count_exceeding = 0;
  double fraction_exceeding = 0.0;

  std::string to_json_string(bool pretty = false) const;
};

// Appends one JSON line to an NDJSON file, creating it if needed.
void persist_record(const std::string& path, const std::string& json_line);

// Serialized reproduction data for a sampled weighted graph.
std::string violation_json(const std::string& kind, const WeightedGraph& g, uint64_t seed,
                           int sample_index, const Inertia& inertia, int bound);

// Random connected graphs with seeded weightings; flags samples whose i_plus
// exceeds floor((n+1)/3) and persists them with full reproduction data.
ExperimentReport weak_conjecture_scan(int n, int samples, uint64_t seed,
                                      WeightLaw law = WeightLaw::UniformUnit,
                                      const std::string& persist_path = "");

// Fixed topology, sampled weightings (plus the unit weighting, plus the
// adversarial K_{2,3} weighting when threes = 1 and a subdivision exists),
// against the K_{2,3,...,3} minor test with `threes` threes.
ExperimentReport strong_conjecture_scan(const WeightedGraph& g, int samples, uint64_t seed,
                                        int threes, WeightLaw law = WeightLaw::UniformUnit,
                                        int minor_cap = kDefaultMinorCap,
                                        const std::string& persist_path = "");

// Seeded point sets in [0,1]^dim under l_p; records how often i_plus > 1.
ExperimentReport lp_embeddable_scan(int n, int dim, double p, int samples, uint64_t seed,
                                    const std::string& persist_path = "");

}  // namespace gmet

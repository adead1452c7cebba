#pragma once

#include "gmet/graph.hpp"
#include "gmet/metric.hpp"
#include "gmet/splits.hpp"

#include <array>
#include <optional>
#include <vector>

namespace gmet {

inline constexpr int kDefaultMinorCap = 12;

// Witness of a K_{2,3} subdivision. Pattern vertices 1..3 form the 3-side,
// 4..5 the 2-side; paths are listed for the pattern edges (1,4), (1,5),
// (2,4), (2,5), (3,4), (3,5) and are internally vertex-disjoint.
struct MinorCertificate {
  std::array<int, 5> branch{};
  std::vector<std::vector<int>> paths;
};

// Exhaustive branch-vertex + disjoint-path search, candidates by descending
// degree, path search by iterative deepening. Since K_{2,3} has maximum
// degree 3, a subdivision exists exactly when the minor does.
std::optional<MinorCertificate> has_k23_subdivision(const WeightedGraph& g);

bool certificate_valid(const WeightedGraph& g, const MinorCertificate& cert);

// Brute-force minor test: positive exits through subgraph embedding, the rest
// recurses over vertex deletions and edge contractions with memoization.
// Throws if |V(g)| exceeds cap.
bool has_minor(const WeightedGraph& g, const WeightedGraph& pattern, int cap = kDefaultMinorCap);

// The 5x5 unweighted K_{2,3} distance matrix (2s within sides, 1s across).
const RatMatrix& k23_distance_pattern();

struct DistanceMinorWitness {
  std::vector<int> indices;   // five host indices, ascending
  std::vector<int> two_side;  // the two of them playing the K_{2,3} 2-side
  Rat c;
  Rat lambda0;
  std::vector<Rat> lambda;    // per split of decompose(m), canonical order
};

// Searches every 5-subset and side assignment for nonnegative lambda with
// lambda0 * M0 + sum lambda_S * delta(S) = c * D_{K23} on the subset,
// via exact LP feasibility. The witness is normalized so lambda0 = 1 when
// possible, which makes c the scale of the embedded copy.
std::optional<DistanceMinorWitness> k23_distance_minor_test(const RatMatrix& m,
                                                            int split_cap = kDefaultSplitCap);

struct AdversarialWeighting {
  std::vector<Rat> weights;  // parallel to g.edges
  MinorCertificate cert;
};

// If g has a K_{2,3} subdivision: weight each subdivision path to total
// length 1 and every other edge heavily, so the branch vertices induce the
// exact K_{2,3} distance matrix and i_plus(D) >= 2 by interlacing.
std::optional<AdversarialWeighting> adversarial_weighting_k23(const WeightedGraph& g);

}  // namespace gmet

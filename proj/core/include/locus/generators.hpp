#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "locus/square.hpp"

namespace locus {

enum class Family { AllPosets, RandomPoset, Chain, BooleanAlgebra, FiniteTopology };

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

struct GenSpec {
  Family family = Family::AllPosets;
  /// Points of the poset or space; chain length; number of atoms.
  std::size_t max_size = 3;
  /// Frames drawn by the random families.
  std::size_t count = 0;
  std::uint64_t seed = 0;
  std::size_t max_elements = kMaxEnumerableElements;
  double edge_probability = 0.35;

  /// Squares, chains and triangles are exhaustive over frames up to this size.
  std::size_t square_max_elements = 8;
  /// Chains and triangles are exhaustive over frames up to this size.
  std::size_t chain_max_elements = 5;
  std::size_t triangle_max_elements = 4;
  /// Seeded draws from the frames above the exhaustive bounds.
  std::size_t random_squares = 200;
  std::size_t random_chains = 100;
  std::size_t random_triangles = 100;

  friend bool operator==(const GenSpec&, const GenSpec&) = default;
};

void to_json(nlohmann::json& j, const GenSpec& spec);

/// Deterministic across platforms: mt19937_64 output is fixed by the
/// standard but the standard distributions are not, so values are derived
/// from the raw engine output directly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t next();
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [0, n); n > 0.
  std::size_t below(std::size_t n);
  bool chance(double p) { return uniform() < p; }

  template <class T>
  void shuffle(std::vector<T>& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Strict order on points 0..n-1 as bitmasks: above[i] holds j when i < j.
struct Poset {
  std::size_t n = 0;
  std::vector<std::uint32_t> above;

  bool less(std::size_t i, std::size_t j) const { return (above[i] >> j) & 1U; }
};

/// One representative per isomorphism class of n-point posets, in canonical order.
std::vector<Poset> unlabeled_posets(std::size_t n);
/// Transitive closure of a relation given as successor masks. Assumes acyclic.
Poset close_poset(std::size_t n, std::vector<std::uint32_t> succ);

/// Down-set lattice of the poset; elements labelled by their maximal points
/// ("a", "bc", ...), with "0" and "1" for the extremes.
FramePtr downset_frame(const Poset& p, std::string name);
/// The lattice of a finite topology given by its open sets (bitmasks over
/// `points` points). Opens must contain 0 and the full set and be closed
/// under union and intersection.
FramePtr topology_frame(std::size_t points, std::vector<std::uint32_t> opens, std::string name);

/// The n-element chain 0 < a < b < ... < 1.
FramePtr chain_frame(std::size_t n);
/// 2^atoms, the down-sets of an antichain.
FramePtr boolean_frame(std::size_t atoms);

/// all-posets: every poset of 0..max_size points, frames above max_elements dropped.
/// chain / boolean-algebra: every size 1..max_size.
/// random-poset / finite-topology: `count` seeded draws, rejection-sampled
/// down to max_elements.
std::vector<FramePtr> gen_frames(const GenSpec& spec);

/// Every dense sublocale, in enumeration order. Contains the Booleanization and L.
std::vector<Sublocale> gen_dense_sublocales(const FiniteFrame& frame);

struct MapSearch {
  /// Stop after this many maps; 0 means no limit.
  std::size_t limit = 0;
  /// When set, candidate values are tried in a seeded random order.
  std::optional<std::uint64_t> seed;
  /// Abandon the search after this many tree nodes; 0 means no limit.
  std::size_t node_budget = 0;
};

/// Localic maps src -> tgt by backtracking over meet-preserving tables; the
/// adjoint is validated for each complete table. Deterministic for a given search.
std::vector<LocalicMap> gen_maps(const FramePtr& src, const FramePtr& tgt, const MapSearch& search = {});

/// Every square over f: dense S in L and dense T in M with f[S] contained in T.
std::vector<DenseSquare> gen_squares(const LocalicMap& f);
/// Every chain over f: dense S in R in L and T in U in M with f[R] in U and f[S] in T.
std::vector<SquareChain> gen_chains(const LocalicMap& f);
/// Every triangle over f then phi, the middle vertical shared.
std::vector<SquareTriangle> gen_triangles(const LocalicMap& f, const LocalicMap& phi);

}  // namespace locus

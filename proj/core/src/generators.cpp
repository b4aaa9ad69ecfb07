#include "locus/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

namespace locus {

namespace {

constexpr std::size_t kMaxUnlabeledPoints = 7;
constexpr std::size_t kMaxDrawAttempts = 10000;

std::string point_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "p" + std::to_string(i);
}

std::string points_label(std::uint32_t mask) {
  std::string out;
  for (std::size_t i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1U) out += point_name(i);
  }
  return out;
}

bool mask_order(std::uint32_t a, std::uint32_t b) {
  if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
  return a < b;
}

// A lattice of subsets ordered by inclusion, labelled by `label`.
template <class Label>
FramePtr subset_frame(std::vector<std::uint32_t> sets, std::string name, Label label) {
  std::sort(sets.begin(), sets.end(), mask_order);
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (i != j && (sets[i] & ~sets[j]) == 0) order.emplace_back(i, j);
    }
  }
  const std::uint32_t full = sets.empty() ? 0 : sets.back();
  std::vector<std::string> labels;
  for (std::uint32_t s : sets) {
    if (s == full) {
      labels.push_back("1");
    } else if (s == 0) {
      labels.push_back("0");
    } else {
      labels.push_back(label(s));
    }
  }
  return make_frame(sets.size(), order, std::move(labels), std::move(name));
}

std::vector<std::uint32_t> downsets(const Poset& p, std::size_t cap) {
  std::vector<std::uint32_t> below(p.n, 0);
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) {
      if (p.less(j, i)) below[i] |= 1U << j;
    }
  }
  std::vector<std::uint32_t> out;
  const std::uint32_t limit = p.n == 32 ? 0xFFFFFFFFU : (1U << p.n) - 1;
  for (std::uint64_t m = 0; m <= limit; ++m) {
    const auto mask = static_cast<std::uint32_t>(m);
    bool closed = true;
    for (std::size_t i = 0; i < p.n && closed; ++i) {
      if (((mask >> i) & 1U) && (below[i] & ~mask) != 0) closed = false;
    }
    if (!closed) continue;
    out.push_back(mask);
    if (cap != 0 && out.size() > cap) break;
  }
  return out;
}

std::uint32_t maximal_points(const Poset& p, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < p.n; ++i) {
    if (!((mask >> i) & 1U)) continue;
    if ((p.above[i] & mask) == 0) out |= 1U << i;
  }
  return out;
}

std::uint64_t relation_code(const Poset& p, const std::vector<std::size_t>& perm) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < p.n; ++i) {
    for (std::size_t j = 0; j < p.n; ++j) {
      if (p.less(i, j)) code |= std::uint64_t{1} << (perm[i] * p.n + perm[j]);
    }
  }
  return code;
}

std::uint64_t canonical_code(const Poset& p) {
  std::vector<std::size_t> perm(p.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = relation_code(p, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, relation_code(p, perm));
  return best;
}

Poset decode(std::size_t n, std::uint64_t code) {
  Poset p{n, std::vector<std::uint32_t>(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if ((code >> (i * n + j)) & 1U) p.above[i] |= 1U << j;
    }
  }
  return p;
}

Poset draw_poset(Rng& rng, const GenSpec& spec) {
  const std::size_t n = 1 + rng.below(std::max<std::size_t>(spec.max_size, 1));
  std::vector<std::uint32_t> succ(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.chance(spec.edge_probability)) succ[i] |= 1U << j;
    }
  }
  return close_poset(n, std::move(succ));
}

std::vector<std::uint32_t> draw_topology(Rng& rng, const GenSpec& spec, std::size_t& points) {
  points = 1 + rng.below(std::max<std::size_t>(spec.max_size, 1));
  const std::uint32_t full = (1U << points) - 1;
  std::set<std::uint32_t> opens{0, full};
  const std::size_t subbase = 1 + rng.below(points + 1);
  for (std::size_t s = 0; s < subbase; ++s) {
    std::uint32_t u = 0;
    for (std::size_t i = 0; i < points; ++i) {
      if (rng.chance(0.5)) u |= 1U << i;
    }
    opens.insert(u);
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint32_t> current(opens.begin(), opens.end());
    for (std::uint32_t a : current) {
      for (std::uint32_t b : current) {
        grew |= opens.insert(a | b).second;
        grew |= opens.insert(a & b).second;
      }
    }
    if (opens.size() > spec.max_elements) break;
  }
  return {opens.begin(), opens.end()};
}

// Induced frames of every dense sublocale of a frame, built once per frame.
struct DenseLayer {
  std::vector<Sublocale> dense;
  std::vector<InducedFrame> induced;

  explicit DenseLayer(const FiniteFrame& frame) : dense(gen_dense_sublocales(frame)) {
    for (const auto& s : dense) induced.push_back(induced_frame(s));
  }
};

std::string square_name(const LocalicMap& f, const Sublocale& s, const Sublocale& t) {
  return f.name() + " S=" + describe(s) + " T=" + describe(t);
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::AllPosets:
      return "all-posets";
    case Family::RandomPoset:
      return "random-poset";
    case Family::Chain:
      return "chain";
    case Family::BooleanAlgebra:
      return "boolean-algebra";
    case Family::FiniteTopology:
      return "finite-topology";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::AllPosets, Family::RandomPoset, Family::Chain, Family::BooleanAlgebra,
                   Family::FiniteTopology}) {
    if (to_string(f) == name) return f;
  }
  if (name == "all-posets-up-to") return Family::AllPosets;
  return std::nullopt;
}

void to_json(nlohmann::json& j, const GenSpec& spec) {
  j = nlohmann::json{{"family", std::string(to_string(spec.family))},
                     {"max_size", spec.max_size},
                     {"count", spec.count},
                     {"seed", spec.seed},
                     {"max_elements", spec.max_elements},
                     {"edge_probability", spec.edge_probability},
                     {"square_max_elements", spec.square_max_elements},
                     {"chain_max_elements", spec.chain_max_elements},
                     {"triangle_max_elements", spec.triangle_max_elements},
                     {"random_squares", spec.random_squares},
                     {"random_chains", spec.random_chains},
                     {"random_triangles", spec.random_triangles}};
}

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::size_t Rng::below(std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t reject_from = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = next();
  while (x >= reject_from) x = next();
  return static_cast<std::size_t>(x % bound);
}

Poset close_poset(std::size_t n, std::vector<std::uint32_t> succ) {
  succ.resize(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((succ[i] >> k) & 1U) succ[i] |= succ[k];
    }
  }
  return Poset{n, std::move(succ)};
}

std::vector<Poset> unlabeled_posets(std::size_t n) {
  if (n > kMaxUnlabeledPoints) {
    throw LocusError(ErrorKind::FrameTooLarge, "unlabeled posets are enumerated up to " +
                                                   std::to_string(kMaxUnlabeledPoints) + " points");
  }
  // Every poset has a linear extension, so relations i < j with i < j as
  // integers cover every isomorphism class.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::set<std::uint64_t> codes;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    std::vector<std::uint32_t> succ(n, 0);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((m >> b) & 1U) succ[pairs[b].first] |= 1U << pairs[b].second;
    }
    Poset p = close_poset(n, succ);
    if (p.above != succ) continue;  // not transitive; its closure is met elsewhere
    codes.insert(canonical_code(p));
  }
  std::vector<Poset> out;
  for (std::uint64_t c : codes) out.push_back(decode(n, c));
  return out;
}

FramePtr downset_frame(const Poset& p, std::string name) {
  return subset_frame(downsets(p, 0), std::move(name),
                      [&](std::uint32_t s) { return points_label(maximal_points(p, s)); });
}

FramePtr topology_frame(std::size_t points, std::vector<std::uint32_t> opens, std::string name) {
  const std::uint32_t full = (1U << points) - 1;
  std::set<std::uint32_t> unique(opens.begin(), opens.end());
  if (!unique.contains(0) || !unique.contains(full)) {
    throw LocusError(ErrorKind::InvalidInput, "topology '" + name + "' lacks the empty or the full set");
  }
  for (std::uint32_t a : unique) {
    for (std::uint32_t b : unique) {
      if (!unique.contains(a | b) || !unique.contains(a & b)) {
        throw LocusError(ErrorKind::InvalidInput, "opens of '" + name + "' are not closed under union and intersection");
      }
    }
  }
  return subset_frame({unique.begin(), unique.end()}, std::move(name), points_label);
}

FramePtr chain_frame(std::size_t n) {
  if (n == 0) throw LocusError(ErrorKind::InvalidInput, "a chain needs at least one element");
  std::vector<std::uint32_t> succ(n - 1, 0);
  for (std::size_t i = 0; i + 1 < n - 1; ++i) succ[i] = 1U << (i + 1);
  return downset_frame(close_poset(n - 1, succ), "C" + std::to_string(n));
}

FramePtr boolean_frame(std::size_t atoms) {
  return downset_frame(Poset{atoms, std::vector<std::uint32_t>(atoms, 0)}, "B" + std::to_string(atoms));
}

std::vector<FramePtr> gen_frames(const GenSpec& spec) {
  std::vector<FramePtr> out;
  switch (spec.family) {
    case Family::AllPosets:
      for (std::size_t n = 0; n <= spec.max_size; ++n) {
        const auto posets = unlabeled_posets(n);
        for (std::size_t k = 0; k < posets.size(); ++k) {
          if (downsets(posets[k], spec.max_elements).size() > spec.max_elements) continue;
          out.push_back(downset_frame(posets[k], "P" + std::to_string(n) + "." + std::to_string(k)));
        }
      }
      break;
    case Family::Chain:
      for (std::size_t n = 1; n <= spec.max_size && n <= spec.max_elements; ++n) out.push_back(chain_frame(n));
      break;
    case Family::BooleanAlgebra:
      for (std::size_t n = 1; n <= spec.max_size && (std::size_t{1} << n) <= spec.max_elements; ++n) {
        out.push_back(boolean_frame(n));
      }
      break;
    case Family::RandomPoset: {
      Rng rng(spec.seed);
      for (std::size_t i = 0; i < spec.count; ++i) {
        for (std::size_t attempt = 0;; ++attempt) {
          if (attempt == kMaxDrawAttempts) {
            throw LocusError(ErrorKind::InvalidInput, "no poset frame within " + std::to_string(spec.max_elements) +
                                                          " elements after " + std::to_string(attempt) + " draws");
          }
          Poset p = draw_poset(rng, spec);
          if (downsets(p, spec.max_elements).size() > spec.max_elements) continue;
          out.push_back(downset_frame(p, "R" + std::to_string(i)));
          break;
        }
      }
      break;
    }
    case Family::FiniteTopology: {
      Rng rng(spec.seed);
      for (std::size_t i = 0; i < spec.count; ++i) {
        for (std::size_t attempt = 0;; ++attempt) {
          if (attempt == kMaxDrawAttempts) {
            throw LocusError(ErrorKind::InvalidInput, "no topology within " + std::to_string(spec.max_elements) +
                                                          " opens after " + std::to_string(attempt) + " draws");
          }
          std::size_t points = 0;
          auto opens = draw_topology(rng, spec, points);
          if (opens.size() > spec.max_elements) continue;
          out.push_back(topology_frame(points, std::move(opens), "X" + std::to_string(i)));
          break;
        }
      }
      break;
    }
  }
  return out;
}

std::vector<Sublocale> gen_dense_sublocales(const FiniteFrame& frame) {
  std::vector<Sublocale> out;
  for (const auto& s : enumerate_sublocales(frame)) {
    if (is_dense(s)) out.push_back(s);
  }
  return out;
}

std::vector<LocalicMap> gen_maps(const FramePtr& src, const FramePtr& tgt, const MapSearch& search) {
  const FiniteFrame& a = *src;
  const FiniteFrame& b = *tgt;
  std::vector<ElementId> order;
  for (ElementId x : a.elements()) order.push_back(x);
  // Ascending linear extension: every meet of x with an earlier element is assigned before x.
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId x, ElementId y) { return a.down_set(x).size() < a.down_set(y).size(); });
  std::vector<ElementId> values;
  for (ElementId y : b.elements()) values.push_back(y);

  std::optional<Rng> rng;
  if (search.seed) rng.emplace(*search.seed);

  std::vector<LocalicMap> out;
  std::vector<ElementId> table(a.size());
  std::size_t nodes = 0;
  bool stop = false;

  auto consistent = [&](std::size_t pos, ElementId v) {
    const ElementId x = order[pos];
    if (x == a.top() && v != b.top()) return false;
    for (std::size_t q = 0; q < pos; ++q) {
      const ElementId y = order[q];
      if (table[a.meet(x, y).index] != b.meet(v, table[y.index])) return false;
    }
    return true;
  };

  auto descend = [&](auto&& self, std::size_t pos) -> void {
    if (stop) return;
    if (search.node_budget != 0 && ++nodes > search.node_budget) {
      stop = true;
      return;
    }
    if (pos == order.size()) {
      std::string name = a.name() + "->" + b.name() + "#" + std::to_string(out.size());
      if (auto m = try_build_map(src, tgt, table, std::move(name))) {
        out.push_back(std::move(*m));
        if (search.limit != 0 && out.size() >= search.limit) stop = true;
      }
      return;
    }
    std::vector<ElementId> candidates = values;
    if (rng) rng->shuffle(candidates);
    for (ElementId v : candidates) {
      if (!consistent(pos, v)) continue;
      table[order[pos].index] = v;
      self(self, pos + 1);
      if (stop) return;
    }
  };
  descend(descend, 0);
  return out;
}

std::vector<DenseSquare> gen_squares(const LocalicMap& f) {
  DenseLayer left(*f.source());
  DenseLayer right(*f.target());
  std::vector<DenseSquare> out;
  for (std::size_t i = 0; i < left.dense.size(); ++i) {
    const Sublocale img = image(f, left.dense[i]);
    for (std::size_t j = 0; j < right.dense.size(); ++j) {
      if (!img.subset_of(right.dense[j])) continue;
      out.push_back(square_from_induced(f, left.induced[i], right.induced[j],
                                        square_name(f, left.dense[i], right.dense[j])));
    }
  }
  return out;
}

std::vector<SquareChain> gen_chains(const LocalicMap& f) {
  const auto left = gen_dense_sublocales(*f.source());
  const auto right = gen_dense_sublocales(*f.target());
  std::vector<SquareChain> out;
  for (const auto& r : left) {
    const Sublocale fr = image(f, r);
    for (const auto& u : right) {
      if (!fr.subset_of(u)) continue;
      for (const auto& s : left) {
        if (!s.subset_of(r)) continue;
        const Sublocale fs = image(f, s);
        for (const auto& t : right) {
          if (!t.subset_of(u) || !fs.subset_of(t)) continue;
          std::string name = square_name(f, s, t) + " R=" + describe(r) + " U=" + describe(u);
          out.push_back(chain_from_sublocales(f, s, r, t, u, std::move(name)));
        }
      }
    }
  }
  return out;
}

std::vector<SquareTriangle> gen_triangles(const LocalicMap& f, const LocalicMap& phi) {
  if (f.target().get() != phi.source().get()) {
    throw LocusError(ErrorKind::MixedFrames, "cannot paste '" + phi.name() + "' after '" + f.name() + "'");
  }
  DenseLayer one(*f.source());
  DenseLayer two(*f.target());
  DenseLayer three(*phi.target());
  std::vector<SquareTriangle> out;
  for (std::size_t i = 0; i < one.dense.size(); ++i) {
    const Sublocale fi = image(f, one.dense[i]);
    for (std::size_t j = 0; j < two.dense.size(); ++j) {
      if (!fi.subset_of(two.dense[j])) continue;
      const Sublocale pj = image(phi, two.dense[j]);
      for (std::size_t k = 0; k < three.dense.size(); ++k) {
        if (!pj.subset_of(three.dense[k])) continue;
        DenseSquare first = square_from_induced(f, one.induced[i], two.induced[j],
                                                square_name(f, one.dense[i], two.dense[j]));
        DenseSquare second = square_from_induced(phi, two.induced[j], three.induced[k],
                                                 square_name(phi, two.dense[j], three.dense[k]));
        std::string name = first.name() + " ; " + phi.name() + " U=" + describe(three.dense[k]);
        out.emplace_back(std::move(first), std::move(second), std::move(name));
      }
    }
  }
  return out;
}

}  // namespace locus

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "locus/element_set.hpp"
#include "locus/error.hpp"

namespace locus {

/// A finite frame: a finite distributive lattice together with its Heyting
/// implication. Immutable once built; all operation tables are precomputed.
class FiniteFrame {
 public:
  std::size_t size() const { return size_; }
  const std::string& name() const { return name_; }
  const std::string& label(ElementId a) const { return labels_[a.index]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ElementId> find(std::string_view label) const;

  ElementId bottom() const { return bottom_; }
  ElementId top() const { return top_; }
  ElementSet elements() const { return ElementSet::first_n(size_); }

  bool leq(ElementId a, ElementId b) const { return up_[a.index].contains(b); }
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  /// {x : a <= x}
  ElementSet up_set(ElementId a) const { return up_[a.index]; }
  /// {x : x <= a}
  ElementSet down_set(ElementId a) const { return down_[a.index]; }

  ElementId meet(ElementId a, ElementId b) const { return at(meet_, a, b); }
  ElementId join(ElementId a, ElementId b) const { return at(join_, a, b); }
  /// Heyting implication a -> b: the largest x with x & a <= b.
  ElementId implies(ElementId a, ElementId b) const { return at(impl_, a, b); }
  ElementId pseudocomplement(ElementId a) const { return implies(a, bottom_); }

  /// Empty meet is top.
  ElementId meet_of(ElementSet xs) const;
  /// Empty join is bottom.
  ElementId join_of(ElementSet xs) const;

  /// {x -> s : x in L}
  ElementSet implies_image(ElementId s) const { return implies_into_[s.index]; }

  bool is_dense(ElementId a) const { return pseudocomplement(a) == bottom_; }
  bool is_complemented(ElementId a) const { return join(a, pseudocomplement(a)) == top_; }
  bool is_point(ElementId p) const;
  bool is_boolean() const;

  bool admits_enumeration() const { return size_ <= kMaxEnumerableElements; }

  /// Covering pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<ElementId, ElementId>> covers() const;

 private:
  friend FiniteFrame build_frame(std::size_t, std::span<const std::pair<std::size_t, std::size_t>>,
                                 std::vector<std::string>, std::string);

  FiniteFrame() = default;

  ElementId at(const std::vector<std::uint8_t>& table, ElementId a, ElementId b) const {
    return ElementId{table[a.index * size_ + b.index]};
  }

  std::size_t size_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::uint8_t> meet_;
  std::vector<std::uint8_t> join_;
  std::vector<std::uint8_t> impl_;
  std::vector<ElementSet> implies_into_;
  ElementId bottom_;
  ElementId top_;
};

using FramePtr = std::shared_ptr<const FiniteFrame>;

/// Builds a frame on n elements from any generating order relation; the
/// reflexive-transitive closure is taken first. Missing labels default to the
/// element index.
///
/// Throws LocusError with NotAPartialOrder (cycle), NotALattice (a pair without
/// a unique meet or join) or NotDistributive (witness triple).
FiniteFrame build_frame(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> order,
                        std::vector<std::string> labels = {}, std::string name = {});

FramePtr make_frame(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> order,
                    std::vector<std::string> labels = {}, std::string name = {});

}  // namespace locus

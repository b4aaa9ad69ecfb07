#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "locus/frame.hpp"

namespace locus {

/// A sublocale of a finite frame: a set of elements containing top, closed
/// under meets and under x -> (-) for every x in the frame.
///
/// Sublocales are lightweight views; the owning frame must outlive them.
class Sublocale {
 public:
  /// Throws NotASublocale when `members` fails the closure conditions.
  Sublocale(const FiniteFrame& frame, ElementSet members);

  /// Skips validation. For results that are sublocales by construction.
  static Sublocale trusted(const FiniteFrame& frame, ElementSet members) { return Sublocale(&frame, members); }

  const FiniteFrame& frame() const { return *frame_; }
  ElementSet members() const { return members_; }
  bool contains(ElementId x) const { return members_.contains(x); }
  std::size_t size() const { return members_.size(); }
  /// True for O = {top}.
  bool is_void() const { return members_ == ElementSet::single(frame_->top()); }
  bool is_whole() const { return members_ == frame_->elements(); }

  /// Throws MixedFrames if the two sublocales live in different frames.
  bool subset_of(const Sublocale& other) const;

  friend bool operator==(const Sublocale& a, const Sublocale& b) {
    return a.frame_ == b.frame_ && a.members_ == b.members_;
  }

 private:
  Sublocale(const FiniteFrame* frame, ElementSet members) : frame_(frame), members_(members) {}

  const FiniteFrame* frame_;
  ElementSet members_;
};

bool is_sublocale(const FiniteFrame& frame, ElementSet candidate);

Sublocale void_sublocale(const FiniteFrame& frame);
Sublocale whole_sublocale(const FiniteFrame& frame);
/// c(a) = {x : a <= x}
Sublocale closed_sublocale(const FiniteFrame& frame, ElementId a);
/// o(a) = {a -> x : x in L}
Sublocale open_sublocale(const FiniteFrame& frame, ElementId a);

/// c(meet of S)
Sublocale closure(const Sublocale& s);
/// Dense iff bottom is a member.
bool is_dense(const Sublocale& s);

/// {x -> 0 : x in L}, the least dense sublocale.
Sublocale booleanization(const FiniteFrame& frame);

/// Intersection.
Sublocale meet(const Sublocale& a, const Sublocale& b);
/// All meets of subsets of the union.
Sublocale join(const Sublocale& a, const Sublocale& b);
/// Meet of a family; the empty family gives the whole frame. Throws MixedFrames.
Sublocale sublocale_meet(const FiniteFrame& frame, std::span<const Sublocale> family);
/// Join of a family; the empty family gives O. Throws MixedFrames.
Sublocale sublocale_join(const FiniteFrame& frame, std::span<const Sublocale> family);

/// nu_S(a): the least member of S above a.
ElementId nucleus(const Sublocale& s, ElementId a);

/// The points (meet-irreducible elements other than top).
ElementSet point_set(const FiniteFrame& frame);
/// Top together with every meet of the given points. Throws NotASublocale if
/// some member of `points` is not a point.
Sublocale sublocale_of_points(const FiniteFrame& frame, ElementSet points);
/// The points contained in S. S is the meet closure of them.
ElementSet points_of(const Sublocale& s);

/// S meets the Booleanization only in O.
bool is_nowhere_dense(const Sublocale& s);

/// Every sublocale of `frame`, each once, ordered by cardinality then bitmask.
/// Filters all subsets containing top. Throws FrameTooLarge above 16 elements.
std::vector<Sublocale> enumerate_sublocales(const FiniteFrame& frame);

/// Least T with S v T = L (co-Heyting difference L \ S). Enumerates.
Sublocale supplement(const Sublocale& s);

/// Supplement is the whole frame.
bool is_rare(const Sublocale& s);
/// The Booleanization is rare.
bool is_dense_in_itself(const FiniteFrame& frame);

/// The coframe S(L) materialised once, for repeated supplement and
/// enumeration queries over the same frame.
class SublocaleSpace {
 public:
  explicit SublocaleSpace(const FiniteFrame& frame);

  const FiniteFrame& frame() const { return *frame_; }
  const std::vector<Sublocale>& all() const { return all_; }
  std::size_t size() const { return all_.size(); }

  Sublocale supplement(const Sublocale& s) const;
  /// Has a complement in S(L); if it does, the complement is the supplement.
  bool is_complemented(const Sublocale& s) const;
  std::vector<Sublocale> dense() const;
  std::vector<Sublocale> nowhere_dense() const;
  /// Members of S(L) contained in `s`.
  std::vector<Sublocale> below(const Sublocale& s) const;

 private:
  const FiniteFrame* frame_;
  std::vector<Sublocale> all_;
};

/// A sublocale S viewed as a frame in its own right: the order is inherited,
/// meets agree with the ambient meets, joins and implication are recomputed
/// inside S. Element i of `frame` is ambient element `to_ambient[i]`.
struct InducedFrame {
  FramePtr frame;
  const FiniteFrame* ambient = nullptr;
  std::vector<ElementId> to_ambient;
  ElementSet members;

  ElementId lift(ElementId inner) const { return to_ambient[inner.index]; }
  ElementSet lift(ElementSet inner) const;
  /// A sublocale of S is a sublocale of L contained in S.
  Sublocale lift(const Sublocale& inner) const;
  /// Inverse of lift; throws NotASublocale if `outer` is not contained in S
  /// or is not a sublocale of S.
  Sublocale restrict(const Sublocale& outer) const;
  std::optional<ElementId> restrict(ElementId outer) const;
};

InducedFrame induced_frame(const Sublocale& s, std::string name = {});

/// Join of the S-nowhere dense sublocales of S (S dense), as a sublocale of L.
Sublocale nd_join(const Sublocale& dense_s);

/// Labels of the members sorted lexicographically (the serialized form).
std::vector<std::string> sorted_labels(const Sublocale& s);
/// "{a,b,1}" in element-index order, for diagnostics.
std::string describe(const Sublocale& s);
std::string describe(const FiniteFrame& frame, ElementSet set);

}  // namespace locus

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "locus/sublocale.hpp"

namespace locus {

struct MapDefect {
  ErrorKind kind;
  std::string detail;
};

/// A meet-preserving map between finite frames whose left adjoint (the frame
/// homomorphism f*) preserves finite meets.
class LocalicMap {
 public:
  const FramePtr& source() const { return source_; }
  const FramePtr& target() const { return target_; }
  const std::string& name() const { return name_; }

  ElementId operator()(ElementId x) const { return table_[x.index]; }
  /// f*(y) = meet of {x : y <= f(x)}
  ElementId adjoint(ElementId y) const { return adjoint_[y.index]; }

  const std::vector<ElementId>& table() const { return table_; }
  const std::vector<ElementId>& adjoint_table() const { return adjoint_; }

 private:
  friend std::optional<LocalicMap> try_build_map(FramePtr, FramePtr, std::vector<ElementId>, std::string,
                                                 MapDefect*);

  LocalicMap() = default;

  FramePtr source_;
  FramePtr target_;
  std::string name_;
  std::vector<ElementId> table_;
  std::vector<ElementId> adjoint_;
};

/// Like build_map, but reports a defect instead of throwing.
std::optional<LocalicMap> try_build_map(FramePtr source, FramePtr target, std::vector<ElementId> table,
                                        std::string name = {}, MapDefect* defect = nullptr);

/// Validates meet preservation (top included), derives the adjoint and
/// validates that it preserves top and binary meets.
/// Throws NotMeetPreserving or AdjointNotFrameHom with a witness.
LocalicMap build_map(FramePtr source, FramePtr target, std::vector<ElementId> table, std::string name = {});

LocalicMap identity_map(const FramePtr& frame);
/// second after first
LocalicMap compose(const LocalicMap& second, const LocalicMap& first, std::string name = {});
/// The embedding of a sublocale, viewed as its own frame, into the ambient frame.
LocalicMap inclusion_map(const InducedFrame& sub, const FramePtr& ambient, std::string name = {});
/// f restricted to the induced frames of S and T; requires f[S] contained in T.
LocalicMap restrict_map(const LocalicMap& f, const InducedFrame& s, const InducedFrame& t, std::string name = {});

/// The adjoint sends only bottom to bottom.
bool is_dense_map(const LocalicMap& m);
/// The map sends dense elements of its source to dense elements of its target.
bool is_skeletal(const LocalicMap& m);
/// The adjoint sends dense elements of the target to dense elements of the source.
bool is_skeletal_adjoint(const LocalicMap& m);
/// a v f*(b) = 1 implies f(a) v b = 1.
bool is_weakly_closed_adjoint(const LocalicMap& m);
/// f(x v f*(y)) = f(x) v y.
bool is_closed_map(const LocalicMap& m);
/// Every nonzero y in the target has a nonzero z <= y with f*(z) = 0.
bool is_nowhere_dense_adjoint(const LocalicMap& m);
bool is_injective(const LocalicMap& m);
bool is_surjective(const LocalicMap& m);

/// f[A] = {f(a) : a in A}. Throws NotASublocale if the image fails the closure
/// conditions (it never should for a valid map).
Sublocale image(const LocalicMap& m, const Sublocale& a);

/// f_{-1}[B]: the largest A in S(source) with f[A] contained in B, computed
/// as the join of every enumerated sublocale whose image lies in B.
Sublocale preimage(const LocalicMap& m, const Sublocale& b);
Sublocale preimage(const LocalicMap& m, const Sublocale& b, const SublocaleSpace& source_space);

/// f_{-1}[B] as the meet closure of the source points p with f(p) in B. Agrees
/// with the enumerating preimage and needs no enumeration.
Sublocale preimage_via_points(const LocalicMap& m, const Sublocale& b);
Sublocale preimage_via_points(const LocalicMap& m, const Sublocale& b, ElementSet source_points);

/// Every sublocale of the target is an image f[A].
bool is_image_surjective(const LocalicMap& m, const SublocaleSpace& source_space, const SublocaleSpace& target_space);

/// Same source, target and table.
bool same_map(const LocalicMap& a, const LocalicMap& b);

}  // namespace locus

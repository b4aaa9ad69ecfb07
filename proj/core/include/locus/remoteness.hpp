#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "locus/sublocale.hpp"

namespace locus {

/// The pair (L, S) with S a dense sublocale of L.
class RemoteContext {
 public:
  /// Throws NotDense. `space` (S(L)) may be shared by contexts over the same
  /// frame; it is built here when omitted and the frame admits enumeration.
  explicit RemoteContext(const Sublocale& dense, std::shared_ptr<const SublocaleSpace> space = nullptr);

  const FiniteFrame& frame() const { return dense_.frame(); }
  const Sublocale& dense_sublocale() const { return dense_; }

  /// S-dense members of S. For dense S the pseudocomplement in S agrees with
  /// the one in L, so this is {x in S : x* = 0}.
  ElementSet dense_elements() const { return s_dense_; }

  /// S(L); throws FrameTooLarge when the frame is too big to enumerate.
  const SublocaleSpace& space() const;
  std::shared_ptr<const SublocaleSpace> shared_space() const { return space_; }

  /// L \ S; throws FrameTooLarge like space().
  const Sublocale& remainder() const;

 private:
  Sublocale dense_;
  ElementSet s_dense_;
  std::shared_ptr<const SublocaleSpace> space_;
  std::optional<Sublocale> remainder_;
};

/// T misses c(x) for every S-dense x in S. The default predicate.
bool is_remote_from(const RemoteContext& ctx, const Sublocale& t);
/// T is contained in o(x) for every S-dense x in S.
bool is_remote_from_open(const RemoteContext& ctx, const Sublocale& t);
/// nu_T(x) = 1 for every S-dense x in S.
bool is_remote_from_nucleus(const RemoteContext& ctx, const Sublocale& t);

/// The defining predicate, evaluated literally: S(S) is enumerated under S's
/// induced frame structure, the S-nowhere dense members are kept, and T must
/// miss the closure in L of each of them.
class RemotenessOracle {
 public:
  explicit RemotenessOracle(const RemoteContext& ctx);

  bool is_remote(const Sublocale& t) const;

  const InducedFrame& induced() const { return induced_; }
  const SublocaleSpace& inner_space() const { return *inner_space_; }
  /// S-nowhere dense members of S(S), lifted into L.
  const std::vector<Sublocale>& s_nowhere_dense() const { return s_nowhere_dense_; }
  /// S-dense elements computed with the pseudocomplement of the induced frame.
  ElementSet s_dense_elements() const { return s_dense_; }
  /// Nd(S): join in S(L) of the S-nowhere dense sublocales of S.
  Sublocale nd() const;

 private:
  const FiniteFrame* frame_;
  InducedFrame induced_;
  std::shared_ptr<const SublocaleSpace> inner_space_;
  std::vector<Sublocale> s_nowhere_dense_;
  ElementSet closure_bases_;  // distinct values of the meet of N
  ElementSet s_dense_;
};

bool is_remote_from_oracle(const RemoteContext& ctx, const Sublocale& t);

/// T is contained in L \ S and is remote from S.
bool is_star_remote_from(const RemoteContext& ctx, const Sublocale& t);

std::vector<Sublocale> remote_set(const RemoteContext& ctx);
std::vector<Sublocale> star_remote_set(const RemoteContext& ctx);

/// {a : a v x = 1 for every dense x in S}
ElementSet rmt_elements(const RemoteContext& ctx);
/// {a : c(a) passes the oracle}
ElementSet rmt_elements_oracle(const RemoteContext& ctx, const RemotenessOracle& oracle);
ElementSet star_rmt_elements(const RemoteContext& ctx);
ElementSet star_rmt_elements_oracle(const RemoteContext& ctx, const RemotenessOracle& oracle);

/// Largest sublocale remote from S.
Sublocale rs(const RemoteContext& ctx);
/// Join of the sublocales *remote from S.
Sublocale star_rs(const RemoteContext& ctx);

/// The remote sublocales of L itself: those missing every nowhere dense
/// sublocale. Only the maximal nowhere dense sublocales need checking, since
/// nowhere density is inherited by sub-sublocales.
class RemoteFamily {
 public:
  explicit RemoteFamily(const SublocaleSpace& space);

  bool contains(const Sublocale& t) const;
  std::vector<Sublocale> members() const;

 private:
  const SublocaleSpace* space_;
  std::vector<ElementSet> maximal_nowhere_dense_;
};

bool is_remote(const Sublocale& t);

}  // namespace locus

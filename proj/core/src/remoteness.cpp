#include "locus/remoteness.hpp"

namespace locus {

namespace {

bool misses_closed_above(const FiniteFrame& f, const Sublocale& t, ElementId x) {
  return (t.members() & f.up_set(x)) == ElementSet::single(f.top());
}

void require_same_frame(const RemoteContext& ctx, const Sublocale& t) {
  if (&t.frame() != &ctx.frame()) {
    throw LocusError(ErrorKind::MixedFrames, "sublocale is not in the context frame '" + ctx.frame().name() + "'");
  }
}

}  // namespace

RemoteContext::RemoteContext(const Sublocale& dense, std::shared_ptr<const SublocaleSpace> space)
    : dense_(dense), space_(std::move(space)) {
  if (!is_dense(dense_)) throw LocusError(ErrorKind::NotDense, describe(dense_) + " does not contain bottom");
  const FiniteFrame& f = dense_.frame();
  for (ElementId x : dense_.members()) {
    if (f.is_dense(x)) s_dense_.insert(x);
  }
  if (space_ && &space_->frame() != &f) throw LocusError(ErrorKind::MixedFrames, "shared S(L) of another frame");
  if (!space_ && f.admits_enumeration()) space_ = std::make_shared<const SublocaleSpace>(f);
  if (space_) remainder_ = space_->supplement(dense_);
}

const SublocaleSpace& RemoteContext::space() const {
  if (!space_) throw LocusError(ErrorKind::FrameTooLarge, "S(L) of '" + frame().name() + "' is not enumerable");
  return *space_;
}

const Sublocale& RemoteContext::remainder() const {
  if (!remainder_) throw LocusError(ErrorKind::FrameTooLarge, "L \\ S of '" + frame().name() + "' needs S(L)");
  return *remainder_;
}

bool is_remote_from(const RemoteContext& ctx, const Sublocale& t) {
  require_same_frame(ctx, t);
  for (ElementId x : ctx.dense_elements()) {
    if (!misses_closed_above(ctx.frame(), t, x)) return false;
  }
  return true;
}

bool is_remote_from_open(const RemoteContext& ctx, const Sublocale& t) {
  require_same_frame(ctx, t);
  for (ElementId x : ctx.dense_elements()) {
    if (!t.subset_of(open_sublocale(ctx.frame(), x))) return false;
  }
  return true;
}

bool is_remote_from_nucleus(const RemoteContext& ctx, const Sublocale& t) {
  require_same_frame(ctx, t);
  for (ElementId x : ctx.dense_elements()) {
    if (nucleus(t, x) != ctx.frame().top()) return false;
  }
  return true;
}

RemotenessOracle::RemotenessOracle(const RemoteContext& ctx)
    : frame_(&ctx.frame()), induced_(induced_frame(ctx.dense_sublocale())) {
  const FiniteFrame& inner = *induced_.frame;
  inner_space_ = std::make_shared<const SublocaleSpace>(inner);
  const Sublocale inner_boolean = booleanization(inner);
  const ElementSet inner_void = ElementSet::single(inner.top());
  for (const auto& n : inner_space_->all()) {
    if ((n.members() & inner_boolean.members()) != inner_void) continue;
    Sublocale lifted = induced_.lift(n);
    s_nowhere_dense_.push_back(lifted);
    closure_bases_.insert(ctx.frame().meet_of(lifted.members()));
  }
  for (ElementId x : inner.elements()) {
    if (inner.pseudocomplement(x) == inner.bottom()) s_dense_.insert(induced_.lift(x));
  }
}

bool RemotenessOracle::is_remote(const Sublocale& t) const {
  if (&t.frame() != frame_) throw LocusError(ErrorKind::MixedFrames, "sublocale is not in the oracle frame");
  // closure(N) = c(meet N), so only the distinct meets matter.
  for (ElementId base : closure_bases_) {
    if (!misses_closed_above(*frame_, t, base)) return false;
  }
  return true;
}

Sublocale RemotenessOracle::nd() const { return sublocale_join(*frame_, s_nowhere_dense_); }

bool is_remote_from_oracle(const RemoteContext& ctx, const Sublocale& t) {
  return RemotenessOracle(ctx).is_remote(t);
}

bool is_star_remote_from(const RemoteContext& ctx, const Sublocale& t) {
  return t.subset_of(ctx.remainder()) && is_remote_from(ctx, t);
}

std::vector<Sublocale> remote_set(const RemoteContext& ctx) {
  std::vector<Sublocale> out;
  for (const auto& t : ctx.space().all()) {
    if (is_remote_from(ctx, t)) out.push_back(t);
  }
  return out;
}

std::vector<Sublocale> star_remote_set(const RemoteContext& ctx) {
  std::vector<Sublocale> out;
  for (const auto& t : ctx.space().all()) {
    if (is_star_remote_from(ctx, t)) out.push_back(t);
  }
  return out;
}

ElementSet rmt_elements(const RemoteContext& ctx) {
  const FiniteFrame& f = ctx.frame();
  ElementSet out;
  for (ElementId a : f.elements()) {
    bool ok = true;
    for (ElementId x : ctx.dense_elements()) {
      if (f.join(a, x) != f.top()) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(a);
  }
  return out;
}

ElementSet rmt_elements_oracle(const RemoteContext& ctx, const RemotenessOracle& oracle) {
  const FiniteFrame& f = ctx.frame();
  ElementSet out;
  for (ElementId a : f.elements()) {
    if (oracle.is_remote(closed_sublocale(f, a))) out.insert(a);
  }
  return out;
}

ElementSet star_rmt_elements(const RemoteContext& ctx) {
  const FiniteFrame& f = ctx.frame();
  ElementSet out;
  for (ElementId a : rmt_elements(ctx)) {
    if (closed_sublocale(f, a).subset_of(ctx.remainder())) out.insert(a);
  }
  return out;
}

ElementSet star_rmt_elements_oracle(const RemoteContext& ctx, const RemotenessOracle& oracle) {
  const FiniteFrame& f = ctx.frame();
  ElementSet out;
  for (ElementId a : f.elements()) {
    Sublocale c = closed_sublocale(f, a);
    if (c.subset_of(ctx.remainder()) && oracle.is_remote(c)) out.insert(a);
  }
  return out;
}

Sublocale rs(const RemoteContext& ctx) { return sublocale_join(ctx.frame(), remote_set(ctx)); }

Sublocale star_rs(const RemoteContext& ctx) { return sublocale_join(ctx.frame(), star_remote_set(ctx)); }

RemoteFamily::RemoteFamily(const SublocaleSpace& space) : space_(&space) {
  std::vector<Sublocale> nd = space.nowhere_dense();
  for (const auto& n : nd) {
    bool maximal = true;
    for (const auto& other : nd) {
      if (n.members() != other.members() && n.members().subset_of(other.members())) {
        maximal = false;
        break;
      }
    }
    if (maximal) maximal_nowhere_dense_.push_back(n.members());
  }
}

bool RemoteFamily::contains(const Sublocale& t) const {
  const ElementSet void_set = ElementSet::single(space_->frame().top());
  for (ElementSet n : maximal_nowhere_dense_) {
    if ((t.members() & n) != void_set) return false;
  }
  return true;
}

std::vector<Sublocale> RemoteFamily::members() const {
  std::vector<Sublocale> out;
  for (const auto& t : space_->all()) {
    if (contains(t)) out.push_back(t);
  }
  return out;
}

bool is_remote(const Sublocale& t) {
  SublocaleSpace space(t.frame());
  return RemoteFamily(space).contains(t);
}

}  // namespace locus

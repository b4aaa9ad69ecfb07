#include "locus/theorems.hpp"

#include <algorithm>
#include <array>

namespace locus {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::HypothesesNotMet:
      return "hypotheses-not-met";
    case Verdict::Fail:
      return "fail";
  }
  return "?";
}

std::string_view to_string(Scope s) {
  switch (s) {
    case Scope::Frame:
      return "frame";
    case Scope::Context:
      return "context";
    case Scope::Square:
      return "square";
    case Scope::Chain:
      return "chain";
    case Scope::Triangle:
      return "triangle";
  }
  return "?";
}

std::string_view to_string(Group g) {
  switch (g) {
    case Group::RemoteFrom:
      return "remote-from";
    case Group::Booleanization:
      return "booleanization";
    case Group::Squares:
      return "squares";
    case Group::Preservation:
      return "preservation";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Analyses

ContextAnalysis::ContextAnalysis(const FrameAnalysis& frame, const Sublocale& dense)
    : frame_(&frame),
      ctx_(dense, frame.shared_space()),
      oracle_(ctx_),
      rs_(void_sublocale(dense.frame())),
      star_rs_(rs_),
      nd_(rs_) {
  const SublocaleSpace& space = frame.space();
  const FiniteFrame& f = frame.frame();
  const Sublocale& rest = ctx_.remainder();
  remote_.resize(space.size());
  star_remote_.resize(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    const Sublocale& t = space.all()[i];
    remote_[i] = oracle_.is_remote(t);
    star_remote_[i] = remote_[i] && t.subset_of(rest);
    if (remote_[i]) remote_set_.push_back(t);
    if (star_remote_[i]) star_remote_set_.push_back(t);
  }
  for (ElementId a : f.elements()) {
    std::size_t i = frame.index_of(closed_sublocale(f, a));
    if (remote_[i]) rmt_.insert(a);
    if (star_remote_[i]) star_rmt_.insert(a);
  }
  rs_ = sublocale_join(f, remote_set_);
  star_rs_ = sublocale_join(f, star_remote_set_);
  nd_ = oracle_.nd();

  const SublocaleSpace& inner = oracle_.inner_space();
  RemoteFamily family(inner);
  inner_remote_.resize(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) {
    inner_remote_[i] = family.contains(inner.all()[i]);
    inner_index_.emplace(inner.all()[i].members().bits(), i);
  }
}

bool ContextAnalysis::remote(const Sublocale& t) const { return remote_[frame_->index_of(t)]; }
bool ContextAnalysis::star_remote(const Sublocale& t) const { return star_remote_[frame_->index_of(t)]; }

bool ContextAnalysis::inner_remote(const Sublocale& inner) const {
  if (&inner.frame() != induced().frame.get()) {
    throw LocusError(ErrorKind::MixedFrames, "sublocale is not in the induced frame of " + describe(dense()));
  }
  return inner_remote_[inner_index_.at(inner.members().bits())];
}

FrameAnalysis::FrameAnalysis(FramePtr frame)
    : frame_(std::move(frame)),
      space_(std::make_shared<const SublocaleSpace>(*frame_)),
      booleanization_(locus::booleanization(*frame_)),
      points_(point_set(*frame_)) {
  const auto& all = space_->all();
  RemoteFamily family(*space_);
  remote_in_l_.resize(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    index_.emplace(all[i].members().bits(), i);
    remote_in_l_[i] = family.contains(all[i]);
  }
  for (const auto& s : all) {
    if (is_dense(s)) contexts_.push_back(std::make_unique<ContextAnalysis>(*this, s));
  }
}

std::size_t FrameAnalysis::index_of(const Sublocale& t) const {
  if (&t.frame() != frame_.get()) {
    throw LocusError(ErrorKind::MixedFrames, "sublocale is not in frame '" + frame_->name() + "'");
  }
  return index_.at(t.members().bits());
}

const ContextAnalysis& FrameAnalysis::context(const Sublocale& dense) const {
  for (const auto& c : contexts_) {
    if (c->dense() == dense) return *c;
  }
  throw LocusError(ErrorKind::NotDense, describe(dense) + " is not a dense sublocale of '" + frame_->name() + "'");
}

SquareAnalysis::SquareAnalysis(const DenseSquare& sq, const FrameAnalysis& l, const FrameAnalysis& m)
    : sq_(&sq), lc_(&l.context(sq.alpha_image())), mc_(&m.context(sq.omega_image())) {
  if (l.frame_ptr() != sq.f().source() || m.frame_ptr() != sq.f().target()) {
    throw LocusError(ErrorKind::MixedFrames, "square '" + sq.name() + "' is not over the analysed frames");
  }
  const auto& ls = l.space().all();
  const auto& ms = m.space().all();
  images_.reserve(ls.size());
  image_index_.reserve(ls.size());
  for (const auto& a : ls) {
    images_.push_back(image(sq.f(), a));
    image_index_.push_back(m.index_of(images_.back()));
  }
  preimages_.reserve(ms.size());
  preimage_index_.reserve(ms.size());
  for (const auto& b : ms) {
    preimages_.push_back(preimage_via_points(sq.f(), b, l.points()));
    preimage_index_.push_back(l.index_of(preimages_.back()));
  }

  adjoint_condition_ = locus::adjoint_condition(sq);
  g_skeletal_ = is_skeletal(sq.g());
  g_star_skeletal_ = is_skeletal_adjoint(sq.g());
  f_star_weakly_closed_ = is_weakly_closed_adjoint(sq.f());
  takes_remainder_ = images_[l.index_of(lc_->remainder())].subset_of(mc_->remainder());
  omega_complemented_ = m.space().is_complemented(sq.omega_image());
  preimage_of_t_is_s_ = preimages_[m.index_of(sq.omega_image())] == sq.alpha_image();
  f_image_surjective_ = true;
  for (std::size_t j = 0; j < ms.size(); ++j) {
    if (image_index_[preimage_index_[j]] != j) {
      f_image_surjective_ = false;
      break;
    }
  }
  f_surjective_ = is_surjective(sq.f());
  g_surjective_ = is_surjective(sq.g());

  f_remote_preserving_ = true;
  f_star_remote_preserving_ = true;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (lc_->remote(i) && !mc_->remote(image_index_[i])) f_remote_preserving_ = false;
    if (lc_->star_remote(i) && !mc_->star_remote(image_index_[i])) f_star_remote_preserving_ = false;
  }
}

ChainAnalysis::ChainAnalysis(const SquareChain& chain, const FrameAnalysis& l, const FrameAnalysis& m)
    : chain_(&chain),
      outer_(chain.outer(), l, m),
      rc_(chain.upper().alpha_image()),
      uc_(chain.upper().omega_image()) {
  RemotenessOracle r_oracle(rc_);
  RemotenessOracle u_oracle(uc_);
  const auto& rs = rc_.space().all();
  r_remote_.resize(rs.size());
  r_star_remote_.resize(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) {
    r_remote_[i] = r_oracle.is_remote(rs[i]);
    r_star_remote_[i] = r_remote_[i] && rs[i].subset_of(rc_.remainder());
    if (!r_remote_[i]) continue;
    Sublocale img = image(chain.phi(), rs[i]);
    bool remote = u_oracle.is_remote(img);
    if (!remote) phi_remote_preserving_ = false;
    if (r_star_remote_[i] && !(remote && img.subset_of(uc_.remainder()))) phi_star_remote_preserving_ = false;
  }
}

TriangleAnalysis::TriangleAnalysis(const SquareTriangle& tri, const FrameAnalysis& a, const FrameAnalysis& b,
                                   const FrameAnalysis& c)
    : tri_(&tri), first_(tri.first(), a, b), second_(tri.second(), b, c), composite_(tri.composite(), a, c) {}

// ---------------------------------------------------------------------------
// Checks

namespace {

using Outcome = CheckOutcome;

std::string d(const Sublocale& s) { return describe(s); }

std::string el(const FiniteFrame& f, ElementId x) { return f.label(x); }

// a v x = 1 for every S-dense x in S.
bool joins_to_top(const ContextAnalysis& c, ElementId a) {
  const FiniteFrame& f = c.frame();
  for (ElementId x : c.ctx().dense_elements()) {
    if (f.join(a, x) != f.top()) return false;
  }
  return true;
}

Sublocale closure_supplement(const ContextAnalysis& c, const Sublocale& s) {
  return c.frame_analysis().space().supplement(closure(s));
}

// Frame scope ---------------------------------------------------------------

Outcome remotesets_boolean(const FrameAnalysis& fa) {
  if (!fa.frame().is_boolean() || fa.frame().size() < 2) return Outcome::skip();
  const ContextAnalysis& c = fa.whole_context();
  const auto& all = fa.space().all();
  bool strict = false;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (c.star_remote(i) && !c.remote(i)) return Outcome::fail(d(all[i]) + " is *remote but not remote from L");
    if (c.remote(i) && !c.star_remote(i)) strict = true;
  }
  if (!strict) return Outcome::fail("*remote and remote sublocales coincide for S = L");
  return Outcome::pass();
}

Outcome rare_denseinitself(const FrameAnalysis& fa) {
  bool boolean_supplements_dense = true;
  std::string witness = "none";
  for (const auto& b : fa.space().all()) {
    InducedFrame bi = induced_frame(b);
    if (!bi.frame->is_boolean()) continue;
    if (!is_dense(fa.space().supplement(b))) {
      boolean_supplements_dense = false;
      witness = d(b);
      break;
    }
  }
  bool bl_rare = fa.space().supplement(fa.booleanization()).is_whole();
  if (boolean_supplements_dense != bl_rare) {
    return Outcome::fail("every Boolean sublocale has a dense supplement: " +
                         std::string(boolean_supplements_dense ? "yes" : "no, " + witness) +
                         "; BL rare: " + (bl_rare ? "yes" : "no"));
  }
  return Outcome::pass();
}

Outcome rempropbl(const FrameAnalysis& fa) {
  const ContextAnalysis& c = fa.boolean_context();
  for (std::size_t i = 0; i < fa.space().size(); ++i) {
    if (!c.remote(i)) return Outcome::fail(d(fa.space().all()[i]) + " is not remote from BL");
  }
  return Outcome::pass();
}

Outcome lislarge(const FrameAnalysis& fa) {
  const Sublocale& rs = fa.boolean_context().rs();
  if (!rs.is_whole()) return Outcome::fail("Rs(L x BL) = " + d(rs));
  return Outcome::pass();
}

Outcome obsremotefrom(const FrameAnalysis& fa) {
  const ContextAnalysis& c = fa.whole_context();
  const auto& all = fa.space().all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (c.remote(i) != fa.remote_in_l(i)) {
      return Outcome::fail(d(all[i]) + (c.remote(i) ? " is remote from L but not remote in L"
                                                     : " is remote in L but not remote from L"));
    }
  }
  Sublocale whole = whole_sublocale(fa.frame());
  if (fa.remote_in_l(whole) != fa.frame().is_boolean()) {
    return Outcome::fail(std::string("L remote in L: ") + (fa.remote_in_l(whole) ? "yes" : "no") +
                         ", L Boolean: " + (fa.frame().is_boolean() ? "yes" : "no"));
  }
  if (!fa.frame().is_boolean() && !fa.boolean_context().remote(whole)) {
    return Outcome::fail("L is not remote from BL");
  }
  return Outcome::pass();
}

Outcome blnotremote(const FrameAnalysis& fa) {
  if (fa.frame().is_boolean()) return Outcome::skip();
  if (fa.boolean_context().rs() == fa.booleanization()) return Outcome::fail("Rs(L x BL) = BL");
  return Outcome::pass();
}

Outcome rempropblstar(const FrameAnalysis& fa) {
  const ContextAnalysis& c = fa.boolean_context();
  const auto& all = fa.space().all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    bool inside = all[i].subset_of(c.remainder());
    if (c.star_remote(i) != inside) {
      return Outcome::fail(d(all[i]) + (inside ? " lies in L \\ BL but is not *remote"
                                               : " is *remote but not inside L \\ BL"));
    }
  }
  return Outcome::pass();
}

Outcome obsremotefromstar(const FrameAnalysis& fa) {
  const ContextAnalysis& c = fa.boolean_context();
  Sublocale whole = whole_sublocale(fa.frame());
  bool dii = is_dense_in_itself(fa.frame());
  if (dii != c.star_remote(whole)) {
    return Outcome::fail(std::string("dense in itself: ") + (dii ? "yes" : "no") +
                         ", L *remote from BL: " + (c.star_remote(whole) ? "yes" : "no"));
  }
  if (!dii && c.star_remote_set().size() == c.remote_set().size()) {
    return Outcome::fail("not dense in itself, yet *Srem(L x BL) = Srem(L x BL)");
  }
  return Outcome::pass();
}

Outcome rsdense(const FrameAnalysis& fa) {
  const ContextAnalysis& c = fa.boolean_context();
  if (!(c.star_rs() == c.remainder())) {
    return Outcome::fail("*Rs(L x BL) = " + d(c.star_rs()) + ", L \\ BL = " + d(c.remainder()));
  }
  return Outcome::pass();
}

// Context scope -------------------------------------------------------------

Outcome opendensefrom(const ContextAnalysis& c) {
  const auto& all = c.frame_analysis().space().all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Sublocale& a = all[i];
    std::array<bool, 4> v{c.remote(i), is_remote_from(c.ctx(), a), is_remote_from_open(c.ctx(), a),
                          is_remote_from_nucleus(c.ctx(), a)};
    if (!std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; })) {
      std::string bits;
      for (bool b : v) bits += b ? '1' : '0';
      return Outcome::fail("A = " + d(a) + ": oracle/closed/open/nucleus = " + bits);
    }
  }
  return Outcome::pass();
}

Outcome bland_l1(const ContextAnalysis& c) {
  if (!c.remote(void_sublocale(c.frame()))) return Outcome::fail("O is not remote");
  return Outcome::pass();
}

Outcome bland_l4(const ContextAnalysis& c) {
  const auto& all = c.frame_analysis().space().all();
  for (std::size_t j = 0; j < all.size(); ++j) {
    if (!c.remote(j)) continue;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (!c.remote(i) && all[i].subset_of(all[j])) {
        return Outcome::fail(d(all[i]) + " inside remote " + d(all[j]) + " is not remote");
      }
    }
  }
  return Outcome::pass();
}

Outcome ndsremotefrom(const ContextAnalysis& c) {
  Sublocale t = closure_supplement(c, c.nd());
  if (!c.remote(t)) return Outcome::fail("L \\ cl(Nd(S)) = " + d(t) + " is not remote");
  return Outcome::pass();
}

Outcome remotesets(const ContextAnalysis& c) {
  const auto& all = c.frame_analysis().space().all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (c.star_remote(i) && !c.remote(i)) return Outcome::fail(d(all[i]) + " is *remote but not remote");
  }
  return Outcome::pass();
}

Outcome rare(const ContextAnalysis& c) {
  if (!c.remainder().is_whole()) return Outcome::skip();
  const auto& all = c.frame_analysis().space().all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (c.star_remote(i) != c.remote(i)) return Outcome::fail(d(all[i]) + " separates *Srem from Srem");
  }
  return Outcome::pass();
}

Outcome sremandsremls(const ContextAnalysis& c) {
  const FrameAnalysis& fa = c.frame_analysis();
  for (std::size_t i = 0; i < fa.space().size(); ++i) {
    if (fa.remote_in_l(i) && !c.remote(i)) {
      return Outcome::fail(d(fa.space().all()[i]) + " is remote in L but not remote from S");
    }
  }
  return Outcome::pass();
}

Outcome rems(const ContextAnalysis& c) {
  const auto& all = c.frame_analysis().space().all();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!all[i].subset_of(c.dense())) continue;
    bool inner = c.inner_remote(c.induced().restrict(all[i]));
    if (inner != c.remote(i)) {
      return Outcome::fail(d(all[i]) + (inner ? " is remote in S but not remote from S"
                                              : " is remote from S but not remote in S"));
    }
  }
  return Outcome::pass();
}

Outcome sublocale_1(const ContextAnalysis& c) {
  for (ElementId a : c.frame().elements()) {
    if (c.rmt().contains(a) != joins_to_top(c, a)) {
      return Outcome::fail("a = " + el(c.frame(), a) + ": in Rmt " + (c.rmt().contains(a) ? "yes" : "no"));
    }
  }
  return Outcome::pass();
}

Outcome sublocale_2(const ContextAnalysis& c) {
  const FiniteFrame& f = c.frame();
  for (ElementId a : f.elements()) {
    if (!closed_sublocale(f, a).subset_of(c.remainder())) continue;
    if (c.star_rmt().contains(a) != joins_to_top(c, a)) {
      return Outcome::fail("a = " + el(f, a) + ": in *Rmt " + (c.star_rmt().contains(a) ? "yes" : "no"));
    }
  }
  return Outcome::pass();
}

Outcome blisremote(const ContextAnalysis& c) {
  if (!c.remote(c.frame_analysis().booleanization())) return Outcome::fail("BL is not remote from S");
  return Outcome::pass();
}

Outcome sremlemma(const ContextAnalysis& c) {
  const FrameAnalysis& fa = c.frame_analysis();
  for (const auto& a : c.remote_set()) {
    Sublocale cut = meet(a, c.dense());
    if (!fa.remote_in_l(cut)) return Outcome::fail("A = " + d(a) + ", A n S = " + d(cut) + " is not remote in L");
  }
  return Outcome::pass();
}

Outcome rsbl(const ContextAnalysis& c) {
  Sublocale cut = meet(c.rs(), c.dense());
  if (!(cut == c.frame_analysis().booleanization())) return Outcome::fail("Rs n S = " + d(cut));
  return Outcome::pass();
}

Outcome sisbl(const ContextAnalysis& c) {
  bool s_remote = c.remote(c.dense());
  bool s_is_bl = c.dense() == c.frame_analysis().booleanization();
  bool l_remote = c.remote(whole_sublocale(c.frame()));
  if (s_remote != s_is_bl || s_is_bl != l_remote) {
    return Outcome::fail(std::string("S remote ") + (s_remote ? "1" : "0") + ", S = BL " + (s_is_bl ? "1" : "0") +
                         ", L remote " + (l_remote ? "1" : "0"));
  }
  return Outcome::pass();
}

Outcome rsnd(const ContextAnalysis& c) {
  bool equal = c.rs() == closure_supplement(c, c.nd());
  Sublocale inner = c.induced().restrict(c.nd());
  bool s_nowhere_dense = is_nowhere_dense(inner);
  if (equal != s_nowhere_dense) {
    return Outcome::fail("Nd(S) = " + d(c.nd()) + ": Rs = L \\ cl(Nd) " + (equal ? "yes" : "no") +
                         ", S-nowhere dense " + (s_nowhere_dense ? "yes" : "no"));
  }
  return Outcome::pass();
}

Outcome rsjoin(const ContextAnalysis& c) {
  if (!c.remote(c.rs())) return Outcome::fail("Rs = " + d(c.rs()) + " is not remote");
  if (!c.star_remote(c.star_rs())) return Outcome::fail("*Rs = " + d(c.star_rs()) + " is not *remote");
  return Outcome::pass();
}

Outcome gammapreservation_1(const ContextAnalysis& c) {
  const SublocaleSpace& inner = c.oracle().inner_space();
  for (std::size_t i = 0; i < inner.size(); ++i) {
    const Sublocale& a = inner.all()[i];
    bool lifted = c.remote(c.induced().lift(a));
    if (c.inner_remote(i) != lifted) {
      return Outcome::fail("A = " + d(c.induced().lift(a)) + ": remote in S " + (c.inner_remote(i) ? "yes" : "no") +
                           ", alpha[A] remote from S " + (lifted ? "yes" : "no"));
    }
  }
  return Outcome::pass();
}

Outcome gammapreservation_2(const ContextAnalysis& c) {
  LocalicMap alpha = inclusion_map(c.induced(), c.frame_analysis().frame_ptr(), "alpha");
  ElementSet inner_points = point_set(*c.induced().frame);
  for (const auto& a : c.remote_set()) {
    Sublocale back = preimage_via_points(alpha, a, inner_points);
    if (!c.inner_remote(back)) {
      return Outcome::fail("A = " + d(a) + ", alpha_-1[A] = " + d(c.induced().lift(back)) + " is not remote in S");
    }
  }
  return Outcome::pass();
}

// Square scope --------------------------------------------------------------

std::string where(const SquareAnalysis& sq) {
  return "S = " + d(sq.square().alpha_image()) + ", T = " + d(sq.square().omega_image());
}

// f[A] in Srem(M x T) for every A in Srem(L x S); `star` for the starred sets.
Outcome images_stay_remote(const SquareAnalysis& sq, bool star) {
  const auto& ls = sq.lf().space().all();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    bool in = star ? sq.lc().star_remote(i) : sq.lc().remote(i);
    if (!in) continue;
    std::size_t j = sq.image_index(i);
    bool out = star ? sq.mc().star_remote(j) : sq.mc().remote(j);
    if (!out) return Outcome::fail(where(sq) + ", A = " + d(ls[i]) + ", f[A] = " + d(sq.images()[i]));
  }
  return Outcome::pass();
}

// f(x) in Rmt(M x T) for every x in Rmt(L x S).
Outcome elements_stay_remote(const SquareAnalysis& sq, bool star) {
  const FiniteFrame& l = sq.square().l();
  const FiniteFrame& m = sq.square().m();
  ElementSet src = star ? sq.lc().star_rmt() : sq.lc().rmt();
  ElementSet dst = star ? sq.mc().star_rmt() : sq.mc().rmt();
  for (ElementId x : src) {
    ElementId y = sq.square().f()(x);
    if (!dst.contains(y)) return Outcome::fail(where(sq) + ", x = " + el(l, x) + ", f(x) = " + el(m, y));
  }
  return Outcome::pass();
}

Outcome beta_1(const SquareAnalysis& sq) {
  if (!sq.g_star_skeletal() || !sq.adjoint_condition()) return Outcome::skip();
  return images_stay_remote(sq, false);
}

Outcome beta_2(const SquareAnalysis& sq) {
  if (!sq.g_star_skeletal() || !sq.adjoint_condition() || !sq.f_star_weakly_closed()) return Outcome::skip();
  return elements_stay_remote(sq, false);
}

Outcome betastar_1(const SquareAnalysis& sq) {
  if (!sq.g_star_skeletal() || !sq.adjoint_condition() || !sq.takes_remainder()) return Outcome::skip();
  return images_stay_remote(sq, true);
}

Outcome betastar_2(const SquareAnalysis& sq) {
  if (!sq.g_star_skeletal() || !sq.adjoint_condition() || !sq.takes_remainder() || !sq.f_star_weakly_closed()) {
    return Outcome::skip();
  }
  return elements_stay_remote(sq, true);
}

// f[A] in Srem(M x T) implies A in Srem(L x S), for every A in S(L).
Outcome images_reflect(const SquareAnalysis& sq, bool star) {
  const auto& ls = sq.lf().space().all();
  for (std::size_t i = 0; i < ls.size(); ++i) {
    std::size_t j = sq.image_index(i);
    bool out = star ? sq.mc().star_remote(j) : sq.mc().remote(j);
    bool in = star ? sq.lc().star_remote(i) : sq.lc().remote(i);
    if (out && !in) return Outcome::fail(where(sq) + ", A = " + d(ls[i]) + ", f[A] = " + d(sq.images()[i]));
  }
  return Outcome::pass();
}

Outcome elements_reflect(const SquareAnalysis& sq, bool star) {
  const FiniteFrame& l = sq.square().l();
  ElementSet src = star ? sq.lc().star_rmt() : sq.lc().rmt();
  ElementSet dst = star ? sq.mc().star_rmt() : sq.mc().rmt();
  for (ElementId x : l.elements()) {
    if (dst.contains(sq.square().f()(x)) && !src.contains(x)) {
      return Outcome::fail(where(sq) + ", x = " + el(l, x) + ", f(x) = " + el(sq.square().m(), sq.square().f()(x)));
    }
  }
  return Outcome::pass();
}

Outcome beta1_1(const SquareAnalysis& sq) {
  if (!sq.g_skeletal()) return Outcome::skip();
  return images_reflect(sq, false);
}

Outcome beta1_2(const SquareAnalysis& sq) {
  if (!sq.g_skeletal()) return Outcome::skip();
  return elements_reflect(sq, false);
}

bool beta1star_hypotheses(const SquareAnalysis& sq) {
  return sq.g_skeletal() && sq.omega_complemented() && sq.preimage_of_t_is_s();
}

Outcome beta1star_1(const SquareAnalysis& sq) {
  if (!beta1star_hypotheses(sq)) return Outcome::skip();
  return images_reflect(sq, true);
}

Outcome beta1star_2(const SquareAnalysis& sq) {
  if (!beta1star_hypotheses(sq)) return Outcome::skip();
  return elements_reflect(sq, true);
}

// f_{-1}[B] in Srem(L x S) for every B in Srem(M x T).
Outcome preimages_stay_remote(const SquareAnalysis& sq, bool star) {
  const auto& ms = sq.mf().space().all();
  for (std::size_t j = 0; j < ms.size(); ++j) {
    bool in = star ? sq.mc().star_remote(j) : sq.mc().remote(j);
    if (!in) continue;
    std::size_t i = sq.preimage_index(j);
    bool out = star ? sq.lc().star_remote(i) : sq.lc().remote(i);
    if (!out) return Outcome::fail(where(sq) + ", B = " + d(ms[j]) + ", f_-1[B] = " + d(sq.preimages()[j]));
  }
  return Outcome::pass();
}

// f*(y) in Rmt(L x S) for every y in Rmt(M x T).
Outcome adjoint_stays_remote(const SquareAnalysis& sq, bool star) {
  const FiniteFrame& m = sq.square().m();
  ElementSet src = star ? sq.mc().star_rmt() : sq.mc().rmt();
  ElementSet dst = star ? sq.lc().star_rmt() : sq.lc().rmt();
  for (ElementId y : src) {
    ElementId x = sq.square().f().adjoint(y);
    if (!dst.contains(x)) return Outcome::fail(where(sq) + ", y = " + el(m, y) + ", f*(y) = " + el(sq.square().l(), x));
  }
  return Outcome::pass();
}

Outcome for_1(const SquareAnalysis& sq) {
  if (!sq.g_skeletal()) return Outcome::skip();
  return preimages_stay_remote(sq, false);
}

Outcome for_2(const SquareAnalysis& sq) {
  if (!sq.g_skeletal()) return Outcome::skip();
  return adjoint_stays_remote(sq, false);
}

bool forstar_hypotheses(const SquareAnalysis& sq) {
  return sq.g_skeletal() && sq.preimage_of_t_is_s() && sq.omega_complemented();
}

Outcome forstar_1(const SquareAnalysis& sq) {
  if (!forstar_hypotheses(sq)) return Outcome::skip();
  return preimages_stay_remote(sq, true);
}

Outcome forstar_2(const SquareAnalysis& sq) {
  if (!forstar_hypotheses(sq)) return Outcome::skip();
  return adjoint_stays_remote(sq, true);
}

// f_{-1}[B] in Srem(L x S) implies B in Srem(M x T), for every B in S(M).
Outcome preimages_reflect(const SquareAnalysis& sq, bool star) {
  const auto& ms = sq.mf().space().all();
  for (std::size_t j = 0; j < ms.size(); ++j) {
    std::size_t i = sq.preimage_index(j);
    bool pre = star ? sq.lc().star_remote(i) : sq.lc().remote(i);
    bool b = star ? sq.mc().star_remote(j) : sq.mc().remote(j);
    if (pre && !b) return Outcome::fail(where(sq) + ", B = " + d(ms[j]) + ", f_-1[B] = " + d(sq.preimages()[j]));
  }
  return Outcome::pass();
}

// f*(y) in Rmt(L x S) implies y in Rmt(M x T), for every y in M.
Outcome adjoint_reflects(const SquareAnalysis& sq, bool star) {
  const FiniteFrame& m = sq.square().m();
  ElementSet src = star ? sq.lc().star_rmt() : sq.lc().rmt();
  ElementSet dst = star ? sq.mc().star_rmt() : sq.mc().rmt();
  for (ElementId y : m.elements()) {
    ElementId x = sq.square().f().adjoint(y);
    if (src.contains(x) && !dst.contains(y)) {
      return Outcome::fail(where(sq) + ", y = " + el(m, y) + ", f*(y) = " + el(sq.square().l(), x));
    }
  }
  return Outcome::pass();
}

bool for1_hypotheses(const SquareAnalysis& sq) {
  return sq.g_star_skeletal() && sq.adjoint_condition() && sq.f_image_surjective();
}

Outcome for1_1(const SquareAnalysis& sq) {
  if (!for1_hypotheses(sq)) return Outcome::skip();
  return preimages_reflect(sq, false);
}

Outcome for1_2(const SquareAnalysis& sq) {
  if (!for1_hypotheses(sq) || !sq.takes_remainder()) return Outcome::skip();
  return preimages_reflect(sq, true);
}

bool for1star_hypotheses(const SquareAnalysis& sq) {
  bool a = sq.f_star_weakly_closed() && sq.g_surjective();
  bool b = sq.adjoint_condition() && sq.f_surjective();
  return sq.g_star_skeletal() && (a || b);
}

Outcome for1star_1(const SquareAnalysis& sq) {
  if (!for1star_hypotheses(sq)) return Outcome::skip();
  return adjoint_reflects(sq, false);
}

Outcome for1star_2(const SquareAnalysis& sq) {
  if (!for1star_hypotheses(sq) || !sq.takes_remainder()) return Outcome::skip();
  return adjoint_reflects(sq, true);
}

Outcome gammaremotepreserving(const SquareAnalysis& sq) {
  if (!sq.adjoint_condition()) return Outcome::skip();
  const FrameAnalysis& lf = sq.lf();
  const ContextAnalysis& mc = sq.mc();
  std::size_t bl = lf.index_of(lf.booleanization());
  std::size_t rs = lf.index_of(sq.lc().rs());
  std::array<bool, 4> v{sq.f_remote_preserving(), mc.remote(sq.image_index(bl)), mc.remote(sq.image_index(rs)),
                        sq.images()[rs].subset_of(mc.rs())};
  if (!std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; })) {
    std::string bits;
    for (bool b : v) bits += b ? '1' : '0';
    return Outcome::fail(where(sq) + ": statements 1-4 = " + bits);
  }
  return Outcome::pass();
}

Outcome stargammaremotepreserving(const SquareAnalysis& sq) {
  if (!sq.adjoint_condition()) return Outcome::skip();
  const FrameAnalysis& lf = sq.lf();
  std::size_t srs = lf.index_of(sq.lc().star_rs());
  std::array<bool, 3> v{sq.f_star_remote_preserving(), sq.mc().star_remote(sq.image_index(srs)),
                        sq.images()[srs].subset_of(sq.mc().star_rs())};
  if (!std::all_of(v.begin(), v.end(), [&](bool b) { return b == v[0]; })) {
    std::string bits;
    for (bool b : v) bits += b ? '1' : '0';
    return Outcome::fail(where(sq) + ": statements 1-3 = " + bits);
  }
  return Outcome::pass();
}

// g[BS] is a remote sublocale of T.
bool g_preserves_remote(const SquareAnalysis& sq) {
  const DenseSquare& s = sq.square();
  Sublocale img = image(s.g(), booleanization(s.s()));
  const ContextAnalysis& mc = sq.mc();
  if (&s.t() == mc.induced().frame.get()) return mc.inner_remote(img);
  SublocaleSpace t_space(s.t());
  return RemoteFamily(t_space).contains(img);
}

Outcome remotepreservation(const SquareAnalysis& sq) {
  if (!sq.adjoint_condition()) return Outcome::skip();
  bool g_rp = g_preserves_remote(sq);
  if (sq.f_remote_preserving() != g_rp) {
    return Outcome::fail(where(sq) + ": f-remote preserving " + (sq.f_remote_preserving() ? "yes" : "no") +
                         ", g[BS] remote in T " + (g_rp ? "yes" : "no"));
  }
  return Outcome::pass();
}

// Chain scope ---------------------------------------------------------------

std::string where(const ChainAnalysis& ch) {
  return where(ch.outer()) + ", R = " + d(ch.chain().lower().alpha_image()) +
         ", U = " + d(ch.chain().lower().omega_image());
}

Outcome theta_keeps_remote(const ChainAnalysis& ch, bool star) {
  const auto& rs = ch.rc().space().all();
  const ContextAnalysis& lc = ch.outer().lc();
  for (std::size_t i = 0; i < rs.size(); ++i) {
    bool in = star ? ch.r_star_remote(i) : ch.r_remote(i);
    if (!in) continue;
    Sublocale img = image(ch.chain().theta(), rs[i]);
    bool out = star ? lc.star_remote(img) : lc.remote(img);
    if (!out) return Outcome::fail(where(ch) + ", A = " + d(rs[i]) + ", theta[A] = " + d(img));
  }
  return Outcome::pass();
}

Outcome bvl(const ChainAnalysis& ch) { return theta_keeps_remote(ch, false); }
Outcome starbvl(const ChainAnalysis& ch) { return theta_keeps_remote(ch, true); }

Outcome gfremote(const ChainAnalysis& ch) {
  if (!ch.outer().f_remote_preserving()) return Outcome::skip();
  if (!ch.phi_remote_preserving()) return Outcome::fail(where(ch) + ": g is f- but not phi-remote preserving");
  return Outcome::pass();
}

Outcome obsfremote(const ChainAnalysis& ch) {
  if (!ch.outer().square().alpha_image().is_whole() || !ch.phi_remote_preserving()) return Outcome::skip();
  if (!ch.outer().f_remote_preserving()) return Outcome::fail(where(ch) + ": g is phi- but not f-remote preserving");
  return Outcome::pass();
}

Outcome starobsgfremote(const ChainAnalysis& ch) {
  if (!ch.outer().f_star_remote_preserving()) return Outcome::skip();
  const SquareChain& c = ch.chain();
  const DenseSquare& up = c.upper();
  if (!(preimage(c.phi(), up.omega_image(), ch.rc().space()) == up.alpha_image())) return Outcome::skip();
  if (!is_image_surjective(c.phi(), ch.rc().space(), ch.uc().space())) return Outcome::skip();
  if (!ch.phi_star_remote_preserving()) {
    return Outcome::fail(where(ch) + ": g is f-*remote but not phi-*remote preserving");
  }
  return Outcome::pass();
}

// Triangle scope ------------------------------------------------------------

std::string where(const TriangleAnalysis& t) {
  return "first " + where(t.first()) + "; second " + where(t.second());
}

Outcome tfg_1(const TriangleAnalysis& t) {
  if (!t.first().f_remote_preserving() || !t.second().f_remote_preserving()) return Outcome::skip();
  if (!t.composite().f_remote_preserving()) return Outcome::fail(where(t) + ": composite is not remote preserving");
  return Outcome::pass();
}

Outcome tfgstar_1(const TriangleAnalysis& t) {
  if (!t.first().f_star_remote_preserving() || !t.second().f_star_remote_preserving()) return Outcome::skip();
  if (!t.composite().f_star_remote_preserving()) {
    return Outcome::fail(where(t) + ": composite is not *remote preserving");
  }
  return Outcome::pass();
}

Outcome tfg_2(const TriangleAnalysis& t) {
  if (!t.composite().f_remote_preserving() || !is_skeletal(t.triangle().second().g())) return Outcome::skip();
  if (!t.first().f_remote_preserving()) return Outcome::fail(where(t) + ": first square is not remote preserving");
  return Outcome::pass();
}

Outcome tfg_3(const TriangleAnalysis& t) {
  if (!t.composite().f_remote_preserving()) return Outcome::skip();
  const SquareAnalysis& first = t.first();
  const FrameAnalysis& lf = first.lf();
  const Sublocale& f_bl = first.images()[lf.index_of(lf.booleanization())];
  for (const auto& a : first.mc().remote_set()) {
    if (!a.subset_of(f_bl)) return Outcome::skip();
  }
  if (!t.second().f_remote_preserving()) return Outcome::fail(where(t) + ": second square is not remote preserving");
  return Outcome::pass();
}

std::vector<TheoremCheck> build_registry() {
  using S = Scope;
  using G = Group;
  return {
      {"opendensefrom", S::Context, G::RemoteFrom, "oracle, closed, open and nucleus remoteness agree",
       ContextRunner{opendensefrom}},
      {"BLandL-1", S::Context, G::RemoteFrom, "O is remote from S", ContextRunner{bland_l1}},
      {"BLandL-4", S::Context, G::RemoteFrom, "remoteness from S passes to sub-sublocales", ContextRunner{bland_l4}},
      {"NDSremotefrom", S::Context, G::RemoteFrom, "L \\ cl(Nd(S)) is remote from S", ContextRunner{ndsremotefrom}},
      {"remotesets", S::Context, G::RemoteFrom, "*Srem(L x S) is contained in Srem(L x S)",
       ContextRunner{remotesets}},
      {"remotesets-boolean", S::Frame, G::RemoteFrom, "non-void Boolean L: *Srem(L x L) is strictly smaller",
       FrameRunner{remotesets_boolean}},
      {"rare", S::Context, G::RemoteFrom, "S dense and rare: *Srem(L x S) = Srem(L x S)", ContextRunner{rare}},
      {"rare-denseinitself", S::Frame, G::RemoteFrom,
       "every Boolean sublocale has a dense supplement iff BL is rare", FrameRunner{rare_denseinitself}},
      {"SRemandSRemLS", S::Context, G::RemoteFrom, "Srem(L) is contained in Srem(L x S)",
       ContextRunner{sremandsremls}},
      {"remS", S::Context, G::RemoteFrom, "S(S) n Srem(L x S) = Srem(S)", ContextRunner{rems}},
      {"sublocale-1", S::Context, G::RemoteFrom, "a in Rmt(L x S) iff a v x = 1 for all dense x in S",
       ContextRunner{sublocale_1}},
      {"sublocale-2", S::Context, G::RemoteFrom,
       "c(a) in L \\ S: a in *Rmt(L x S) iff a v x = 1 for all dense x in S", ContextRunner{sublocale_2}},
      {"BLisremote", S::Context, G::Booleanization, "BL is remote from S", ContextRunner{blisremote}},
      {"rempropBL", S::Frame, G::Booleanization, "Srem(L x BL) = S(L)", FrameRunner{rempropbl}},
      {"obsremotefrom", S::Frame, G::Booleanization, "Srem(L x L) = Srem(L); L in Srem(L) iff L Boolean",
       FrameRunner{obsremotefrom}},
      {"SisBL", S::Context, G::Booleanization, "S in Srem(L x S) iff S = BL iff L is remote from S",
       ContextRunner{sisbl}},
      {"Lislarge", S::Frame, G::Booleanization, "Rs(L x BL) = L", FrameRunner{lislarge}},
      {"SRemLemma", S::Context, G::Booleanization, "A in Srem(L x S) gives A n S in Srem(L)",
       ContextRunner{sremlemma}},
      {"Rsjoin", S::Context, G::Booleanization, "Rs(L x S) is remote and *Rs(L x S) is *remote from S",
       ContextRunner{rsjoin}},
      {"RsBL", S::Context, G::Booleanization, "Rs(L x S) n S = BL", ContextRunner{rsbl}},
      {"BLnotremote", S::Frame, G::Booleanization, "non-Boolean L: Rs(L x BL) is not BL", FrameRunner{blnotremote}},
      {"RsNd", S::Context, G::Booleanization, "Rs(L x S) = L \\ cl(Nd(S)) iff Nd(S) is S-nowhere dense",
       ContextRunner{rsnd}},
      {"rempropBLstar", S::Frame, G::Booleanization, "*Srem(L x BL) = {T : T in L \\ BL}",
       FrameRunner{rempropblstar}},
      {"obsremotefromstar", S::Frame, G::Booleanization,
       "L dense in itself iff L is *remote from BL; otherwise *Srem(L x BL) is smaller",
       FrameRunner{obsremotefromstar}},
      {"RsDense", S::Frame, G::Booleanization, "*Rs(L x BL) = L \\ BL", FrameRunner{rsdense}},
      {"beta-1", S::Square, G::Squares, "g* skeletal, f*w = ag*: f[Srem(L x S)] in Srem(M x T)",
       SquareRunner{beta_1}},
      {"beta-2", S::Square, G::Squares, "g* skeletal, f*w = ag*, f* weakly closed: f[Rmt(L x S)] in Rmt(M x T)",
       SquareRunner{beta_2}},
      {"betastar-1", S::Square, G::Squares, "as beta-1 with remainders kept: f[*Srem(L x S)] in *Srem(M x T)",
       SquareRunner{betastar_1}},
      {"betastar-2", S::Square, G::Squares, "as beta-2 with remainders kept: f[*Rmt(L x S)] in *Rmt(M x T)",
       SquareRunner{betastar_2}},
      {"beta1-1", S::Square, G::Squares, "g skeletal: f[A] in Srem(M x T) gives A in Srem(L x S)",
       SquareRunner{beta1_1}},
      {"beta1-2", S::Square, G::Squares, "g skeletal: f(x) in Rmt(M x T) gives x in Rmt(L x S)",
       SquareRunner{beta1_2}},
      {"beta1star-1", S::Square, G::Squares,
       "g skeletal, w[T] complemented, f_-1[w[T]] = a[S]: f[A] in *Srem(M x T) gives A in *Srem(L x S)",
       SquareRunner{beta1star_1}},
      {"beta1star-2", S::Square, G::Squares,
       "g skeletal, w[T] complemented, f_-1[w[T]] = a[S]: f(x) in *Rmt(M x T) gives x in *Rmt(L x S)",
       SquareRunner{beta1star_2}},
      {"for-1", S::Square, G::Squares, "g skeletal: f_-1[Srem(M x T)] in Srem(L x S)", SquareRunner{for_1}},
      {"for-2", S::Square, G::Squares, "g skeletal: f*[Rmt(M x T)] in Rmt(L x S)", SquareRunner{for_2}},
      {"forstar-1", S::Square, G::Squares,
       "g skeletal, f_-1[w[T]] = a[S], w[T] complemented: f_-1[*Srem(M x T)] in *Srem(L x S)",
       SquareRunner{forstar_1}},
      {"forstar-2", S::Square, G::Squares,
       "g skeletal, f_-1[w[T]] = a[S], w[T] complemented: f*[*Rmt(M x T)] in *Rmt(L x S)",
       SquareRunner{forstar_2}},
      {"for1-1", S::Square, G::Squares,
       "g* skeletal, ag* = f*w, f[-] surjective: f_-1[B] in Srem(L x S) gives B in Srem(M x T)",
       SquareRunner{for1_1}},
      {"for1-2", S::Square, G::Squares, "as for1-1 with remainders kept, for *Srem", SquareRunner{for1_2}},
      {"for1star-1", S::Square, G::Squares,
       "g* skeletal and (f* weakly closed, g onto) or (ag* = f*w, f onto): f*(y) in Rmt(L x S) gives y in Rmt(M x T)",
       SquareRunner{for1star_1}},
      {"for1star-2", S::Square, G::Squares, "as for1star-1 with remainders kept, for *Rmt",
       SquareRunner{for1star_2}},
      {"gammaremotepreserving", S::Square, G::Preservation,
       "f*w = ag*: f-remote preserving iff f[BL] remote iff f[Rs] remote iff f[Rs] in Rs(M x T)",
       SquareRunner{gammaremotepreserving}},
      {"stargammaremotepreserving", S::Square, G::Preservation,
       "f*w = ag*: f-*remote preserving iff f[*Rs] *remote iff f[*Rs] in *Rs(M x T)",
       SquareRunner{stargammaremotepreserving}},
      {"gammapreservationlemma-1", S::Context, G::Preservation, "A in Srem(S) iff a[A] in Srem(L x S)",
       ContextRunner{gammapreservation_1}},
      {"gammapreservationlemma-2", S::Context, G::Preservation, "A in Srem(L x S) gives a_-1[A] in Srem(S)",
       ContextRunner{gammapreservation_2}},
      {"remotepreservation", S::Square, G::Preservation,
       "f*w = ag*: f-remote preserving iff g preserves remote sublocales", SquareRunner{remotepreservation}},
      {"bvl", S::Chain, G::Preservation, "theta[Srem(R x S)] in Srem(L x S)", ChainRunner{bvl}},
      {"starbvl", S::Chain, G::Preservation, "theta[*Srem(R x S)] in *Srem(L x S)", ChainRunner{starbvl}},
      {"gfremote", S::Chain, G::Preservation, "f-remote preserving gives phi-remote preserving",
       ChainRunner{gfremote}},
      {"obsfremote", S::Chain, G::Preservation, "a[S] = L and phi-remote preserving give f-remote preserving",
       ChainRunner{obsfremote}},
      {"starobsgfremote", S::Chain, G::Preservation,
       "f-*remote preserving, i[S] = phi_-1[k[T]], phi[-] onto: phi-*remote preserving",
       ChainRunner{starobsgfremote}},
      {"tfg-1", S::Triangle, G::Preservation, "both squares remote preserving: the composite is",
       TriangleRunner{tfg_1}},
      {"tfgstar-1", S::Triangle, G::Preservation, "both squares *remote preserving: the composite is",
       TriangleRunner{tfgstar_1}},
      {"tfg-2", S::Triangle, G::Preservation, "composite remote preserving, second top map skeletal: first is",
       TriangleRunner{tfg_2}},
      {"tfg-3", S::Triangle, G::Preservation,
       "composite remote preserving, Srem of the middle context inside f[BL]: second is", TriangleRunner{tfg_3}},
  };
}

template <class Analysis, class Runner>
void run_scope(std::vector<ReportRow>& rows, Scope scope, const Analysis& a, const std::string& frame_name,
               const std::string& s_description) {
  for (const auto& check : registry()) {
    if (check.scope != scope) continue;
    Outcome out = std::get<Runner>(check.runner)(a);
    rows.push_back({std::string(check.id), frame_name, s_description, out.verdict, std::move(out.witness)});
  }
}

std::string square_frames(const DenseSquare& sq) { return sq.l().name() + "->" + sq.m().name(); }

}  // namespace

const std::vector<TheoremCheck>& registry() {
  static const std::vector<TheoremCheck> checks = build_registry();
  return checks;
}

const TheoremCheck* find_check(std::string_view id) {
  for (const auto& c : registry()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

bool glob_match(std::string_view pattern, std::string_view text) {
  std::size_t p = 0, t = 0, star = std::string_view::npos, mark = 0;
  while (t < text.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == text[t])) {
      ++p;
      ++t;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = t;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      t = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<ReportRow> check_context(const ContextAnalysis& ctx, bool with_frame_checks) {
  std::vector<ReportRow> rows;
  const std::string& name = ctx.frame().name();
  if (with_frame_checks) run_scope<FrameAnalysis, FrameRunner>(rows, Scope::Frame, ctx.frame_analysis(), name, "");
  run_scope<ContextAnalysis, ContextRunner>(rows, Scope::Context, ctx, name, describe(ctx.dense()));
  return rows;
}

std::vector<ReportRow> check_square(const SquareAnalysis& sq) {
  std::vector<ReportRow> rows;
  for (const auto& check : registry()) {
    if (check.scope != Scope::Square || check.group != Group::Squares) continue;
    Outcome out = std::get<SquareRunner>(check.runner)(sq);
    rows.push_back({std::string(check.id), square_frames(sq.square()), sq.square().name(), out.verdict,
                    std::move(out.witness)});
  }
  return rows;
}

std::vector<ReportRow> check_preservation(const SquareAnalysis& sq, const ChainAnalysis* chain) {
  std::vector<ReportRow> rows;
  for (const auto& check : registry()) {
    if (check.group != Group::Preservation) continue;
    if (check.scope == Scope::Square) {
      Outcome out = std::get<SquareRunner>(check.runner)(sq);
      rows.push_back({std::string(check.id), square_frames(sq.square()), sq.square().name(), out.verdict,
                      std::move(out.witness)});
    } else if (check.scope == Scope::Chain && chain != nullptr) {
      Outcome out = std::get<ChainRunner>(check.runner)(*chain);
      rows.push_back({std::string(check.id), square_frames(chain->chain().outer()), chain->chain().name(),
                      out.verdict, std::move(out.witness)});
    }
  }
  return rows;
}

std::vector<ReportRow> check_triangle(const TriangleAnalysis& tri) {
  std::vector<ReportRow> rows;
  const DenseSquare& c = tri.triangle().composite();
  run_scope<TriangleAnalysis, TriangleRunner>(rows, Scope::Triangle, tri,
                                              c.l().name() + "->" + tri.triangle().first().m().name() + "->" +
                                                  c.m().name(),
                                              tri.triangle().name());
  return rows;
}

}  // namespace locus

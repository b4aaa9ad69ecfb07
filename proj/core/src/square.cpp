#include "locus/square.hpp"

namespace locus {

namespace {

Sublocale full_image(const LocalicMap& m) { return image(m, whole_sublocale(*m.source())); }

void require_arrow(bool ok, const std::string& what) {
  if (!ok) throw LocusError(ErrorKind::MixedFrames, what);
}

// Checks second.first == other_second.other_first elementwise on the shared source.
void require_commutes(const LocalicMap& a2, const LocalicMap& a1, const LocalicMap& b2, const LocalicMap& b1,
                      const std::string& face) {
  const FiniteFrame& src = *a1.source();
  for (ElementId x : src.elements()) {
    if (a2(a1(x)) != b2(b1(x))) {
      throw LocusError(ErrorKind::NotCommuting, face + " fails at " + src.label(x) + ": " +
                                                    a2.target()->label(a2(a1(x))) + " vs " +
                                                    b2.target()->label(b2(b1(x))));
    }
  }
}

}  // namespace

void require_dense_injective(const LocalicMap& m, const std::string& role) {
  if (!is_injective(m)) throw LocusError(ErrorKind::NotDenseInjective, role + " '" + m.name() + "' is not injective");
  const FiniteFrame& tgt = *m.target();
  if (!full_image(m).contains(tgt.bottom())) {
    throw LocusError(ErrorKind::NotDenseInjective, role + " '" + m.name() + "' misses bottom " + tgt.label(tgt.bottom()));
  }
}

DenseSquare::DenseSquare(LocalicMap g, LocalicMap f, LocalicMap alpha, LocalicMap omega, std::string name)
    : g_(std::move(g)),
      f_(std::move(f)),
      alpha_(std::move(alpha)),
      omega_(std::move(omega)),
      name_(std::move(name)),
      alpha_image_(full_image(alpha_)),
      omega_image_(full_image(omega_)) {
  require_arrow(alpha_.source() == g_.source(), "alpha and g have different sources");
  require_arrow(omega_.source() == g_.target(), "omega does not start at the target of g");
  require_arrow(alpha_.target() == f_.source(), "alpha does not end at the source of f");
  require_arrow(omega_.target() == f_.target(), "omega and f have different targets");
  require_dense_injective(alpha_, "alpha");
  require_dense_injective(omega_, "omega");
  require_commutes(f_, alpha_, omega_, g_, "f.alpha = omega.g");
}

DenseSquare square_from_sublocales(const LocalicMap& f, const Sublocale& s, const Sublocale& t, std::string name) {
  return square_from_induced(f, induced_frame(s), induced_frame(t), std::move(name));
}

DenseSquare square_from_induced(const LocalicMap& f, const InducedFrame& si, const InducedFrame& ti,
                                std::string name) {
  LocalicMap alpha = inclusion_map(si, f.source(), "alpha");
  LocalicMap omega = inclusion_map(ti, f.target(), "omega");
  LocalicMap g = restrict_map(f, si, ti, "g");
  return DenseSquare(std::move(g), f, std::move(alpha), std::move(omega), std::move(name));
}

bool adjoint_condition(const DenseSquare& sq) {
  for (ElementId y : sq.t().elements()) {
    if (sq.f().adjoint(sq.omega()(y)) != sq.alpha()(sq.g().adjoint(y))) return false;
  }
  return true;
}

bool takes_remainder(const DenseSquare& sq, const SublocaleSpace& l_space, const SublocaleSpace& m_space) {
  Sublocale l_rest = l_space.supplement(sq.alpha_image());
  Sublocale m_rest = m_space.supplement(sq.omega_image());
  return image(sq.f(), l_rest).subset_of(m_rest);
}

bool takes_remainder(const DenseSquare& sq) {
  return takes_remainder(sq, SublocaleSpace(sq.l()), SublocaleSpace(sq.m()));
}

bool is_f_remote_preserving(const DenseSquare& sq, const RemoteContext& lc, const RemoteContext& mc) {
  for (const auto& a : remote_set(lc)) {
    if (!is_remote_from(mc, image(sq.f(), a))) return false;
  }
  return true;
}

bool is_f_remote_preserving(const DenseSquare& sq) {
  return is_f_remote_preserving(sq, RemoteContext(sq.alpha_image()), RemoteContext(sq.omega_image()));
}

bool is_f_star_remote_preserving(const DenseSquare& sq, const RemoteContext& lc, const RemoteContext& mc) {
  for (const auto& a : star_remote_set(lc)) {
    if (!is_star_remote_from(mc, image(sq.f(), a))) return false;
  }
  return true;
}

bool is_f_star_remote_preserving(const DenseSquare& sq) {
  return is_f_star_remote_preserving(sq, RemoteContext(sq.alpha_image()), RemoteContext(sq.omega_image()));
}

SquareChain::SquareChain(LocalicMap g, LocalicMap f, LocalicMap i, LocalicMap k, LocalicMap phi, LocalicMap theta,
                         LocalicMap sigma, std::string name)
    : upper_(g, phi, i, k, name + "/upper"),
      lower_(phi, f, theta, sigma, name + "/lower"),
      outer_(g, f, compose(theta, i, "alpha"), compose(sigma, k, "omega"), name) {}

SquareChain chain_from_sublocales(const LocalicMap& f, const Sublocale& s, const Sublocale& r, const Sublocale& t,
                                  const Sublocale& u, std::string name) {
  if (!s.subset_of(r) || !t.subset_of(u)) {
    throw LocusError(ErrorKind::InvalidInput, "middle layer must contain the top layer");
  }
  InducedFrame ri = induced_frame(r);
  InducedFrame ui = induced_frame(u);
  InducedFrame si = induced_frame(ri.restrict(s));
  InducedFrame ti = induced_frame(ui.restrict(t));
  LocalicMap phi = restrict_map(f, ri, ui, "phi");
  LocalicMap theta = inclusion_map(ri, f.source(), "theta");
  LocalicMap sigma = inclusion_map(ui, f.target(), "sigma");
  LocalicMap i = inclusion_map(si, ri.frame, "i");
  LocalicMap k = inclusion_map(ti, ui.frame, "k");
  LocalicMap g = restrict_map(phi, si, ti, "g");
  return SquareChain(std::move(g), f, std::move(i), std::move(k), std::move(phi), std::move(theta), std::move(sigma),
                     std::move(name));
}

namespace {

DenseSquare paste(const DenseSquare& first, const DenseSquare& second, const std::string& name) {
  if (!same_map(first.omega(), second.alpha())) {
    throw LocusError(ErrorKind::MixedFrames, "squares '" + first.name() + "' and '" + second.name() +
                                                 "' do not share a vertical");
  }
  return DenseSquare(compose(second.g(), first.g(), "t"), compose(second.f(), first.f(), "t"), first.alpha(),
                     second.omega(), name);
}

}  // namespace

SquareTriangle::SquareTriangle(DenseSquare first, DenseSquare second, std::string name)
    : first_(std::move(first)), second_(std::move(second)), composite_(paste(first_, second_, name)) {}

}  // namespace locus

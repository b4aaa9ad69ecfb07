#pragma once

#include <string>

#include "locus/localic_map.hpp"
#include "locus/remoteness.hpp"

namespace locus {

/// A commuting square
///
///   S --g--> T
///   |alpha   |omega
///   L --f--> M
///
/// with dense injective verticals.
class DenseSquare {
 public:
  /// Throws MixedFrames when the arrows do not line up, NotDenseInjective for
  /// a bad vertical and NotCommuting (with a witness in S) when f.alpha != omega.g.
  DenseSquare(LocalicMap g, LocalicMap f, LocalicMap alpha, LocalicMap omega, std::string name = {});

  const FiniteFrame& s() const { return *g_.source(); }
  const FiniteFrame& t() const { return *g_.target(); }
  const FiniteFrame& l() const { return *f_.source(); }
  const FiniteFrame& m() const { return *f_.target(); }

  const LocalicMap& g() const { return g_; }
  const LocalicMap& f() const { return f_; }
  const LocalicMap& alpha() const { return alpha_; }
  const LocalicMap& omega() const { return omega_; }
  const std::string& name() const { return name_; }

  /// alpha[S], a dense sublocale of L.
  const Sublocale& alpha_image() const { return alpha_image_; }
  /// omega[T], a dense sublocale of M.
  const Sublocale& omega_image() const { return omega_image_; }

 private:
  LocalicMap g_;
  LocalicMap f_;
  LocalicMap alpha_;
  LocalicMap omega_;
  std::string name_;
  Sublocale alpha_image_;
  Sublocale omega_image_;
};

/// Injective with an image containing bottom. Throws NotDenseInjective.
void require_dense_injective(const LocalicMap& m, const std::string& role);

/// The square whose verticals are the inclusions of dense S in L and dense T
/// in M, with g the restriction of f. Throws InvalidInput if f[S] is not
/// contained in T.
DenseSquare square_from_sublocales(const LocalicMap& f, const Sublocale& s, const Sublocale& t, std::string name = {});
/// As above with the induced frames supplied, so squares built from the same
/// InducedFrame share their vertical.
DenseSquare square_from_induced(const LocalicMap& f, const InducedFrame& s, const InducedFrame& t,
                                std::string name = {});

/// f* . omega == alpha . g*
bool adjoint_condition(const DenseSquare& sq);

/// f[L \ alpha[S]] is contained in M \ omega[T].
bool takes_remainder(const DenseSquare& sq, const SublocaleSpace& l_space, const SublocaleSpace& m_space);
bool takes_remainder(const DenseSquare& sq);

/// f[S_rem(L x S)] is contained in S_rem(M x T).
bool is_f_remote_preserving(const DenseSquare& sq, const RemoteContext& lc, const RemoteContext& mc);
bool is_f_remote_preserving(const DenseSquare& sq);
/// f[*S_rem(L x S)] is contained in *S_rem(M x T).
bool is_f_star_remote_preserving(const DenseSquare& sq, const RemoteContext& lc, const RemoteContext& mc);
bool is_f_star_remote_preserving(const DenseSquare& sq);

/// Two stacked squares
///
///   S ---------g--------> T
///   |  i \           / k  |
///   |     R --phi--> U    |
///   |  theta /   \ sigma  |
///   L ---------f--------> M
///
/// with alpha = theta.i and omega = sigma.k.
class SquareChain {
 public:
  /// Every face is validated; throws NotCommuting on the first that fails.
  SquareChain(LocalicMap g, LocalicMap f, LocalicMap i, LocalicMap k, LocalicMap phi, LocalicMap theta,
              LocalicMap sigma, std::string name = {});

  const DenseSquare& outer() const { return outer_; }
  /// S, T over R, U with phi on the bottom.
  const DenseSquare& upper() const { return upper_; }
  /// R, U over L, M.
  const DenseSquare& lower() const { return lower_; }

  const LocalicMap& i() const { return upper_.alpha(); }
  const LocalicMap& k() const { return upper_.omega(); }
  const LocalicMap& phi() const { return upper_.f(); }
  const LocalicMap& theta() const { return lower_.alpha(); }
  const LocalicMap& sigma() const { return lower_.omega(); }
  const std::string& name() const { return outer_.name(); }

 private:
  DenseSquare upper_;
  DenseSquare lower_;
  DenseSquare outer_;
};

/// S in R in L dense, T in U in M dense, f[R] in U, f[S] in T.
SquareChain chain_from_sublocales(const LocalicMap& f, const Sublocale& s, const Sublocale& r, const Sublocale& t,
                                  const Sublocale& u, std::string name = {});

/// Two squares pasted side by side, first then second, together with their
/// composite. In the top row this is the triangle t = phi.f; the bottom row
/// carries the extensions of f, phi and t.
class SquareTriangle {
 public:
  /// Throws MixedFrames unless first's right vertical is second's left vertical.
  SquareTriangle(DenseSquare first, DenseSquare second, std::string name = {});

  const DenseSquare& first() const { return first_; }
  const DenseSquare& second() const { return second_; }
  const DenseSquare& composite() const { return composite_; }
  const std::string& name() const { return composite_.name(); }

 private:
  DenseSquare first_;
  DenseSquare second_;
  DenseSquare composite_;
};

}  // namespace locus

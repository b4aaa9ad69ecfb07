#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "locus/generators.hpp"

namespace locus {

enum class Verdict { Pass, HypothesesNotMet, Fail };
enum class Scope { Frame, Context, Square, Chain, Triangle };
/// Which family of statements a check belongs to.
enum class Group { RemoteFrom, Booleanization, Squares, Preservation };

std::string_view to_string(Verdict v);
std::string_view to_string(Scope s);
std::string_view to_string(Group g);

struct CheckOutcome {
  Verdict verdict = Verdict::Pass;
  std::string witness;

  static CheckOutcome pass() { return {}; }
  static CheckOutcome skip() { return {Verdict::HypothesesNotMet, {}}; }
  static CheckOutcome fail(std::string w) { return {Verdict::Fail, std::move(w)}; }
};

class FrameAnalysis;

/// Everything the checks need about one pair (L, S), computed once.
class ContextAnalysis {
 public:
  ContextAnalysis(const FrameAnalysis& frame, const Sublocale& dense);
  ContextAnalysis(const ContextAnalysis&) = delete;
  ContextAnalysis& operator=(const ContextAnalysis&) = delete;

  const FrameAnalysis& frame_analysis() const { return *frame_; }
  const FiniteFrame& frame() const { return ctx_.frame(); }
  const Sublocale& dense() const { return ctx_.dense_sublocale(); }
  const RemoteContext& ctx() const { return ctx_; }
  const RemotenessOracle& oracle() const { return oracle_; }
  /// S as a frame in its own right.
  const InducedFrame& induced() const { return oracle_.induced(); }

  bool remote(std::size_t index) const { return remote_[index]; }
  bool star_remote(std::size_t index) const { return star_remote_[index]; }
  bool remote(const Sublocale& t) const;
  bool star_remote(const Sublocale& t) const;
  const std::vector<Sublocale>& remote_set() const { return remote_set_; }
  const std::vector<Sublocale>& star_remote_set() const { return star_remote_set_; }
  ElementSet rmt() const { return rmt_; }
  ElementSet star_rmt() const { return star_rmt_; }
  const Sublocale& rs() const { return rs_; }
  const Sublocale& star_rs() const { return star_rs_; }
  const Sublocale& remainder() const { return ctx_.remainder(); }
  const Sublocale& nd() const { return nd_; }

  /// S_rem(S): remote sublocales of S viewed as a frame, indexed like oracle().inner_space().
  bool inner_remote(std::size_t index) const { return inner_remote_[index]; }
  bool inner_remote(const Sublocale& inner) const;

 private:
  const FrameAnalysis* frame_;
  RemoteContext ctx_;
  RemotenessOracle oracle_;
  std::vector<char> remote_;
  std::vector<char> star_remote_;
  std::vector<Sublocale> remote_set_;
  std::vector<Sublocale> star_remote_set_;
  ElementSet rmt_;
  ElementSet star_rmt_;
  Sublocale rs_;
  Sublocale star_rs_;
  Sublocale nd_;
  std::vector<char> inner_remote_;
  std::unordered_map<std::uint64_t, std::size_t> inner_index_;
};

/// Everything the checks need about one frame L, including every dense context.
class FrameAnalysis {
 public:
  explicit FrameAnalysis(FramePtr frame);
  FrameAnalysis(const FrameAnalysis&) = delete;
  FrameAnalysis& operator=(const FrameAnalysis&) = delete;

  const FramePtr& frame_ptr() const { return frame_; }
  const FiniteFrame& frame() const { return *frame_; }
  const SublocaleSpace& space() const { return *space_; }
  const std::shared_ptr<const SublocaleSpace>& shared_space() const { return space_; }
  const Sublocale& booleanization() const { return booleanization_; }
  ElementSet points() const { return points_; }

  /// Position of t in space().all().
  std::size_t index_of(const Sublocale& t) const;
  /// t is a remote sublocale of L.
  bool remote_in_l(const Sublocale& t) const { return remote_in_l_[index_of(t)]; }
  bool remote_in_l(std::size_t index) const { return remote_in_l_[index]; }

  const std::vector<std::unique_ptr<ContextAnalysis>>& contexts() const { return contexts_; }
  /// The context for a dense sublocale of L. Throws NotDense.
  const ContextAnalysis& context(const Sublocale& dense) const;
  const ContextAnalysis& boolean_context() const { return context(booleanization_); }
  const ContextAnalysis& whole_context() const { return context(whole_sublocale(*frame_)); }

 private:
  FramePtr frame_;
  std::shared_ptr<const SublocaleSpace> space_;
  Sublocale booleanization_;
  ElementSet points_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::vector<char> remote_in_l_;
  std::vector<std::unique_ptr<ContextAnalysis>> contexts_;
};

/// A square with the analyses of both of its contexts.
class SquareAnalysis {
 public:
  SquareAnalysis(const DenseSquare& sq, const FrameAnalysis& l, const FrameAnalysis& m);

  const DenseSquare& square() const { return *sq_; }
  const ContextAnalysis& lc() const { return *lc_; }
  const ContextAnalysis& mc() const { return *mc_; }
  const FrameAnalysis& lf() const { return lc_->frame_analysis(); }
  const FrameAnalysis& mf() const { return mc_->frame_analysis(); }

  /// f[A] for every A in S(L), by index.
  const std::vector<Sublocale>& images() const { return images_; }
  /// f_{-1}[B] for every B in S(M), by index.
  const std::vector<Sublocale>& preimages() const { return preimages_; }

  bool adjoint_condition() const { return adjoint_condition_; }
  bool g_skeletal() const { return g_skeletal_; }
  bool g_star_skeletal() const { return g_star_skeletal_; }
  bool f_star_weakly_closed() const { return f_star_weakly_closed_; }
  bool takes_remainder() const { return takes_remainder_; }
  bool omega_complemented() const { return omega_complemented_; }
  /// f_{-1}[omega[T]] = alpha[S]
  bool preimage_of_t_is_s() const { return preimage_of_t_is_s_; }
  bool f_image_surjective() const { return f_image_surjective_; }
  bool f_surjective() const { return f_surjective_; }
  bool g_surjective() const { return g_surjective_; }
  bool f_remote_preserving() const { return f_remote_preserving_; }
  bool f_star_remote_preserving() const { return f_star_remote_preserving_; }

  /// Position of f[A] in S(M), for A at position i of S(L).
  std::size_t image_index(std::size_t i) const { return image_index_[i]; }
  /// Position of f_{-1}[B] in S(L), for B at position j of S(M).
  std::size_t preimage_index(std::size_t j) const { return preimage_index_[j]; }

 private:
  const DenseSquare* sq_;
  const ContextAnalysis* lc_;
  const ContextAnalysis* mc_;
  std::vector<Sublocale> images_;
  std::vector<Sublocale> preimages_;
  bool adjoint_condition_;
  bool g_skeletal_;
  bool g_star_skeletal_;
  bool f_star_weakly_closed_;
  bool takes_remainder_;
  bool omega_complemented_;
  bool preimage_of_t_is_s_;
  bool f_image_surjective_;
  bool f_surjective_;
  bool g_surjective_;
  bool f_remote_preserving_;
  bool f_star_remote_preserving_;
  std::vector<std::size_t> image_index_;
  std::vector<std::size_t> preimage_index_;
};

/// A chain with its outer square analysed and the middle contexts
/// (R, i[S]) and (U, k[T]) evaluated.
class ChainAnalysis {
 public:
  ChainAnalysis(const SquareChain& chain, const FrameAnalysis& l, const FrameAnalysis& m);

  const SquareChain& chain() const { return *chain_; }
  const SquareAnalysis& outer() const { return outer_; }
  const RemoteContext& rc() const { return rc_; }
  const RemoteContext& uc() const { return uc_; }
  /// Indexed like rc().space().all().
  bool r_remote(std::size_t i) const { return r_remote_[i]; }
  bool r_star_remote(std::size_t i) const { return r_star_remote_[i]; }
  /// g is phi-remote preserving.
  bool phi_remote_preserving() const { return phi_remote_preserving_; }
  bool phi_star_remote_preserving() const { return phi_star_remote_preserving_; }

 private:
  const SquareChain* chain_;
  SquareAnalysis outer_;
  RemoteContext rc_;
  RemoteContext uc_;
  std::vector<char> r_remote_;
  std::vector<char> r_star_remote_;
  bool phi_remote_preserving_ = true;
  bool phi_star_remote_preserving_ = true;
};

class TriangleAnalysis {
 public:
  TriangleAnalysis(const SquareTriangle& tri, const FrameAnalysis& a, const FrameAnalysis& b, const FrameAnalysis& c);

  const SquareTriangle& triangle() const { return *tri_; }
  const SquareAnalysis& first() const { return first_; }
  const SquareAnalysis& second() const { return second_; }
  const SquareAnalysis& composite() const { return composite_; }

 private:
  const SquareTriangle* tri_;
  SquareAnalysis first_;
  SquareAnalysis second_;
  SquareAnalysis composite_;
};

using FrameRunner = CheckOutcome (*)(const FrameAnalysis&);
using ContextRunner = CheckOutcome (*)(const ContextAnalysis&);
using SquareRunner = CheckOutcome (*)(const SquareAnalysis&);
using ChainRunner = CheckOutcome (*)(const ChainAnalysis&);
using TriangleRunner = CheckOutcome (*)(const TriangleAnalysis&);

struct TheoremCheck {
  std::string_view id;
  Scope scope;
  Group group;
  std::string_view summary;
  std::variant<FrameRunner, ContextRunner, SquareRunner, ChainRunner, TriangleRunner> runner;
};

/// Every check, in a fixed order. Ids are unique.
const std::vector<TheoremCheck>& registry();
const TheoremCheck* find_check(std::string_view id);

/// Shell-style match with * and ?.
bool glob_match(std::string_view pattern, std::string_view text);

struct ReportRow {
  std::string statement_id;
  std::string frame_name;
  std::string s_description;
  Verdict verdict;
  std::string witness;
};

/// Context-scoped checks of the RemoteFrom and Booleanization groups on one
/// context, plus the frame-scoped ones when `with_frame_checks`.
std::vector<ReportRow> check_context(const ContextAnalysis& ctx, bool with_frame_checks = true);
/// The Squares group.
std::vector<ReportRow> check_square(const SquareAnalysis& sq);
/// Square-scoped Preservation checks, and the chain-scoped ones when a chain is given.
std::vector<ReportRow> check_preservation(const SquareAnalysis& sq, const ChainAnalysis* chain = nullptr);
std::vector<ReportRow> check_triangle(const TriangleAnalysis& tri);

}  // namespace locus

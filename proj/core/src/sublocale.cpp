#include "locus/sublocale.hpp"

#include <algorithm>
#include <sstream>

namespace locus {

namespace {

void require_same_frame(const Sublocale& a, const Sublocale& b) {
  if (&a.frame() != &b.frame()) {
    throw LocusError(ErrorKind::MixedFrames,
                     "sublocales of '" + a.frame().name() + "' and '" + b.frame().name() + "'");
  }
}

void require_enumerable(const FiniteFrame& frame) {
  if (!frame.admits_enumeration()) {
    throw LocusError(ErrorKind::FrameTooLarge, "frame '" + frame.name() + "' has " + std::to_string(frame.size()) +
                                                   " elements; enumeration needs at most " +
                                                   std::to_string(kMaxEnumerableElements));
  }
}

// Adds top and closes under binary meets.
ElementSet close_under_meets(const FiniteFrame& frame, ElementSet xs) {
  xs.insert(frame.top());
  ElementSet frontier = xs;
  while (!frontier.empty()) {
    ElementSet fresh;
    for (ElementId a : frontier) {
      for (ElementId b : xs) {
        ElementId m = frame.meet(a, b);
        if (!xs.contains(m)) fresh.insert(m);
      }
    }
    xs |= fresh;
    frontier = fresh;
  }
  return xs;
}

bool sublocale_order(const Sublocale& a, const Sublocale& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members().bits() < b.members().bits();
}

}  // namespace

Sublocale::Sublocale(const FiniteFrame& frame, ElementSet members) : frame_(&frame), members_(members) {
  if (!members.subset_of(frame.elements()) || !is_sublocale(frame, members)) {
    throw LocusError(ErrorKind::NotASublocale, describe(frame, members) + " in '" + frame.name() + "'");
  }
}

bool Sublocale::subset_of(const Sublocale& other) const {
  require_same_frame(*this, other);
  return members_.subset_of(other.members_);
}

bool is_sublocale(const FiniteFrame& frame, ElementSet candidate) {
  if (!candidate.subset_of(frame.elements()) || !candidate.contains(frame.top())) return false;
  for (ElementId s : candidate) {
    if (!frame.implies_image(s).subset_of(candidate)) return false;
  }
  for (ElementId s : candidate) {
    for (ElementId t : candidate) {
      if (t <= s) continue;
      if (!candidate.contains(frame.meet(s, t))) return false;
    }
  }
  return true;
}

Sublocale void_sublocale(const FiniteFrame& frame) {
  return Sublocale::trusted(frame, ElementSet::single(frame.top()));
}

Sublocale whole_sublocale(const FiniteFrame& frame) { return Sublocale::trusted(frame, frame.elements()); }

Sublocale closed_sublocale(const FiniteFrame& frame, ElementId a) {
  return Sublocale::trusted(frame, frame.up_set(a));
}

Sublocale open_sublocale(const FiniteFrame& frame, ElementId a) {
  ElementSet members;
  for (ElementId x : frame.elements()) members.insert(frame.implies(a, x));
  return Sublocale::trusted(frame, members);
}

Sublocale closure(const Sublocale& s) {
  const FiniteFrame& f = s.frame();
  return closed_sublocale(f, f.meet_of(s.members()));
}

bool is_dense(const Sublocale& s) { return s.contains(s.frame().bottom()); }

Sublocale booleanization(const FiniteFrame& frame) {
  ElementSet members;
  for (ElementId x : frame.elements()) members.insert(frame.pseudocomplement(x));
  return Sublocale::trusted(frame, members);
}

Sublocale meet(const Sublocale& a, const Sublocale& b) {
  require_same_frame(a, b);
  return Sublocale::trusted(a.frame(), a.members() & b.members());
}

Sublocale join(const Sublocale& a, const Sublocale& b) {
  require_same_frame(a, b);
  return Sublocale::trusted(a.frame(), close_under_meets(a.frame(), a.members() | b.members()));
}

Sublocale sublocale_meet(const FiniteFrame& frame, std::span<const Sublocale> family) {
  ElementSet acc = frame.elements();
  for (const auto& s : family) {
    if (&s.frame() != &frame) throw LocusError(ErrorKind::MixedFrames, "family member not in '" + frame.name() + "'");
    acc &= s.members();
  }
  return Sublocale::trusted(frame, acc);
}

Sublocale sublocale_join(const FiniteFrame& frame, std::span<const Sublocale> family) {
  ElementSet acc;
  for (const auto& s : family) {
    if (&s.frame() != &frame) throw LocusError(ErrorKind::MixedFrames, "family member not in '" + frame.name() + "'");
    acc |= s.members();
  }
  return Sublocale::trusted(frame, close_under_meets(frame, acc));
}

ElementId nucleus(const Sublocale& s, ElementId a) {
  const FiniteFrame& f = s.frame();
  return f.meet_of(s.members() & f.up_set(a));
}

ElementSet point_set(const FiniteFrame& frame) {
  ElementSet out;
  for (ElementId x : frame.elements()) {
    if (frame.is_point(x)) out.insert(x);
  }
  return out;
}

Sublocale sublocale_of_points(const FiniteFrame& frame, ElementSet points) {
  if (!points.subset_of(point_set(frame))) {
    throw LocusError(ErrorKind::NotASublocale, describe(frame, points) + " are not all points of '" + frame.name() + "'");
  }
  return Sublocale::trusted(frame, close_under_meets(frame, points));
}

ElementSet points_of(const Sublocale& s) { return s.members() & point_set(s.frame()); }

bool is_nowhere_dense(const Sublocale& s) {
  const FiniteFrame& f = s.frame();
  return (s.members() & booleanization(f).members()) == ElementSet::single(f.top());
}

std::vector<Sublocale> enumerate_sublocales(const FiniteFrame& frame) {
  require_enumerable(frame);
  const std::size_t n = frame.size();
  const unsigned top = frame.top().index;
  // Candidates are the subsets of the non-top elements, each with top added.
  const std::uint64_t others = (n == 1) ? 0 : (std::uint64_t{1} << (n - 1)) - 1;
  std::vector<Sublocale> out;
  for (std::uint64_t m = 0;; ++m) {
    std::uint64_t low = m & ((std::uint64_t{1} << top) - 1);
    std::uint64_t high = (m >> top) << (top + 1);
    ElementSet candidate{low | high | (std::uint64_t{1} << top)};
    if (is_sublocale(frame, candidate)) out.push_back(Sublocale::trusted(frame, candidate));
    if (m == others) break;
  }
  std::sort(out.begin(), out.end(), sublocale_order);
  return out;
}

SublocaleSpace::SublocaleSpace(const FiniteFrame& frame) : frame_(&frame), all_(enumerate_sublocales(frame)) {}

Sublocale SublocaleSpace::supplement(const Sublocale& s) const {
  if (&s.frame() != frame_) throw LocusError(ErrorKind::MixedFrames, "supplement taken in the wrong frame");
  // all_ is ordered by cardinality, so the first hit is the least one.
  for (const auto& t : all_) {
    if (join(s, t).is_whole()) return t;
  }
  throw LocusError(ErrorKind::InvalidInput, "no supplement found for " + describe(s));
}

bool SublocaleSpace::is_complemented(const Sublocale& s) const { return meet(s, supplement(s)).is_void(); }

std::vector<Sublocale> SublocaleSpace::dense() const {
  std::vector<Sublocale> out;
  for (const auto& s : all_) {
    if (is_dense(s)) out.push_back(s);
  }
  return out;
}

std::vector<Sublocale> SublocaleSpace::nowhere_dense() const {
  std::vector<Sublocale> out;
  for (const auto& s : all_) {
    if (is_nowhere_dense(s)) out.push_back(s);
  }
  return out;
}

std::vector<Sublocale> SublocaleSpace::below(const Sublocale& s) const {
  std::vector<Sublocale> out;
  for (const auto& t : all_) {
    if (t.subset_of(s)) out.push_back(t);
  }
  return out;
}

Sublocale supplement(const Sublocale& s) { return SublocaleSpace(s.frame()).supplement(s); }

bool is_rare(const Sublocale& s) { return supplement(s).is_whole(); }

bool is_dense_in_itself(const FiniteFrame& frame) { return is_rare(booleanization(frame)); }

ElementSet InducedFrame::lift(ElementSet inner) const {
  ElementSet out;
  for (ElementId x : inner) out.insert(to_ambient[x.index]);
  return out;
}

Sublocale InducedFrame::lift(const Sublocale& inner) const {
  if (&inner.frame() != frame.get()) throw LocusError(ErrorKind::MixedFrames, "lift of a foreign sublocale");
  return Sublocale::trusted(*ambient, lift(inner.members()));
}

std::optional<ElementId> InducedFrame::restrict(ElementId outer) const {
  for (std::size_t i = 0; i < to_ambient.size(); ++i) {
    if (to_ambient[i] == outer) return ElementId{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

Sublocale InducedFrame::restrict(const Sublocale& outer) const {
  if (&outer.frame() != ambient) throw LocusError(ErrorKind::MixedFrames, "restrict of a foreign sublocale");
  if (!outer.members().subset_of(members)) {
    throw LocusError(ErrorKind::NotASublocale, describe(outer) + " is not contained in the ambient sublocale");
  }
  ElementSet inner;
  for (ElementId x : outer.members()) inner.insert(*restrict(x));
  return Sublocale(*frame, inner);
}

InducedFrame induced_frame(const Sublocale& s, std::string name) {
  const FiniteFrame& ambient = s.frame();
  InducedFrame out;
  out.ambient = &ambient;
  out.members = s.members();
  std::vector<std::string> labels;
  for (ElementId x : s.members()) {
    out.to_ambient.push_back(x);
    labels.push_back(ambient.label(x));
  }
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < out.to_ambient.size(); ++i) {
    for (std::size_t j = 0; j < out.to_ambient.size(); ++j) {
      if (i != j && ambient.leq(out.to_ambient[i], out.to_ambient[j])) order.emplace_back(i, j);
    }
  }
  if (name.empty()) name = ambient.name() + describe(s);
  out.frame = make_frame(out.to_ambient.size(), order, std::move(labels), std::move(name));
  return out;
}

Sublocale nd_join(const Sublocale& dense_s) {
  if (!is_dense(dense_s)) throw LocusError(ErrorKind::NotDense, describe(dense_s) + " does not contain bottom");
  InducedFrame inner = induced_frame(dense_s);
  SublocaleSpace space(*inner.frame);
  std::vector<Sublocale> lifted;
  for (const auto& n : space.nowhere_dense()) lifted.push_back(inner.lift(n));
  return sublocale_join(dense_s.frame(), lifted);
}

std::vector<std::string> sorted_labels(const Sublocale& s) {
  std::vector<std::string> out;
  for (ElementId x : s.members()) out.push_back(s.frame().label(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::string describe(const FiniteFrame& frame, ElementSet set) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (ElementId x : set) {
    if (x.index >= frame.size()) break;
    if (!first) out << ",";
    out << frame.label(x);
    first = false;
  }
  out << "}";
  return out.str();
}

std::string describe(const Sublocale& s) { return describe(s.frame(), s.members()); }

}  // namespace locus

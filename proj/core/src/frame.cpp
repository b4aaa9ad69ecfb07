#include "locus/frame.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace locus {

namespace {

std::string triple(const std::vector<std::string>& labels, std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream out;
  out << "(" << labels[a] << ", " << labels[b] << ", " << labels[c] << ")";
  return out.str();
}

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::FrameTooLarge: return "FrameTooLarge";
    case ErrorKind::MixedFrames: return "MixedFrames";
    case ErrorKind::NotASublocale: return "NotASublocale";
    case ErrorKind::NotDense: return "NotDense";
    case ErrorKind::NotMeetPreserving: return "NotMeetPreserving";
    case ErrorKind::AdjointNotFrameHom: return "AdjointNotFrameHom";
    case ErrorKind::NotDenseInjective: return "NotDenseInjective";
    case ErrorKind::NotCommuting: return "NotCommuting";
  }
  return "Unknown";
}

LocusError::LocusError(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

std::optional<ElementId> FiniteFrame::find(std::string_view label) const {
  for (std::size_t i = 0; i < size_; ++i) {
    if (labels_[i] == label) return ElementId{static_cast<std::uint32_t>(i)};
  }
  return std::nullopt;
}

ElementId FiniteFrame::meet_of(ElementSet xs) const {
  ElementId acc = top_;
  for (ElementId x : xs) acc = meet(acc, x);
  return acc;
}

ElementId FiniteFrame::join_of(ElementSet xs) const {
  ElementId acc = bottom_;
  for (ElementId x : xs) acc = join(acc, x);
  return acc;
}

bool FiniteFrame::is_point(ElementId p) const {
  if (p == top_) return false;
  for (ElementId a : elements()) {
    if (leq(a, p)) continue;
    for (ElementId b : elements()) {
      if (!leq(b, p) && leq(meet(a, b), p)) return false;
    }
  }
  return true;
}

bool FiniteFrame::is_boolean() const {
  for (ElementId a : elements()) {
    if (!is_complemented(a)) return false;
  }
  return true;
}

std::vector<std::pair<ElementId, ElementId>> FiniteFrame::covers() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (ElementId a : elements()) {
    for (ElementId b : up_set(a)) {
      if (a == b) continue;
      // b covers a iff the open interval (a, b) is empty
      ElementSet between = (up_set(a) & down_set(b)) - ElementSet::single(a) - ElementSet::single(b);
      if (between.empty()) out.emplace_back(a, b);
    }
  }
  return out;
}

FiniteFrame build_frame(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> order,
                        std::vector<std::string> labels, std::string name) {
  if (n == 0) throw LocusError(ErrorKind::InvalidInput, "a frame needs at least one element");
  if (n > kMaxElements) {
    throw LocusError(ErrorKind::FrameTooLarge,
                     std::to_string(n) + " elements exceeds the cap of " + std::to_string(kMaxElements));
  }
  if (labels.empty()) {
    labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  }
  if (labels.size() != n) {
    throw LocusError(ErrorKind::InvalidInput, "expected " + std::to_string(n) + " labels, got " +
                                                  std::to_string(labels.size()));
  }
  {
    std::set<std::string> seen;
    for (const auto& l : labels) {
      if (!seen.insert(l).second) throw LocusError(ErrorKind::InvalidInput, "duplicate label '" + l + "'");
    }
  }

  FiniteFrame f;
  f.size_ = n;
  f.name_ = std::move(name);
  f.labels_ = std::move(labels);
  const auto id = [](std::size_t i) { return ElementId{static_cast<std::uint32_t>(i)}; };

  f.up_.assign(n, ElementSet{});
  for (std::size_t i = 0; i < n; ++i) f.up_[i].insert(id(i));
  for (auto [a, b] : order) {
    if (a >= n || b >= n) {
      throw LocusError(ErrorKind::InvalidInput, "order pair (" + std::to_string(a) + ", " + std::to_string(b) +
                                                    ") references an index >= " + std::to_string(n));
    }
    f.up_[a].insert(id(b));
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (f.up_[i].contains(id(k))) f.up_[i] |= f.up_[k];
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (f.up_[a].contains(id(b)) && f.up_[b].contains(id(a))) {
        throw LocusError(ErrorKind::NotAPartialOrder,
                         "cycle through " + f.labels_[a] + " and " + f.labels_[b]);
      }
    }
  }
  f.down_.assign(n, ElementSet{});
  for (std::size_t a = 0; a < n; ++a) {
    for (ElementId b : f.up_[a]) f.down_[b.index].insert(id(a));
  }

  const auto greatest = [&](ElementSet candidates) -> std::optional<ElementId> {
    for (ElementId m : candidates) {
      if (candidates.subset_of(f.down_[m.index])) return m;
    }
    return std::nullopt;
  };
  const auto least = [&](ElementSet candidates) -> std::optional<ElementId> {
    for (ElementId m : candidates) {
      if (candidates.subset_of(f.up_[m.index])) return m;
    }
    return std::nullopt;
  };

  f.meet_.assign(n * n, 0);
  f.join_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto m = greatest(f.down_[a] & f.down_[b]);
      if (!m) throw LocusError(ErrorKind::NotALattice, "no meet for (" + f.labels_[a] + ", " + f.labels_[b] + ")");
      auto j = least(f.up_[a] & f.up_[b]);
      if (!j) throw LocusError(ErrorKind::NotALattice, "no join for (" + f.labels_[a] + ", " + f.labels_[b] + ")");
      f.meet_[a * n + b] = f.meet_[b * n + a] = static_cast<std::uint8_t>(m->index);
      f.join_[a * n + b] = f.join_[b * n + a] = static_cast<std::uint8_t>(j->index);
    }
  }
  f.bottom_ = *least(f.elements());
  f.top_ = *greatest(f.elements());

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        ElementId lhs = f.meet(id(a), f.join(id(b), id(c)));
        ElementId rhs = f.join(f.meet(id(a), id(b)), f.meet(id(a), id(c)));
        if (lhs != rhs) {
          throw LocusError(ErrorKind::NotDistributive,
                           "a & (b | c) != (a & b) | (a & c) at " + triple(f.labels_, a, b, c));
        }
      }
    }
  }

  // Descending linear extension: larger down-sets first.
  std::vector<std::size_t> descending(n);
  std::iota(descending.begin(), descending.end(), 0);
  std::stable_sort(descending.begin(), descending.end(),
                   [&](std::size_t x, std::size_t y) { return f.down_[x].size() > f.down_[y].size(); });

  f.impl_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x : descending) {
        if (f.leq(f.meet(id(x), id(a)), id(b))) {
          f.impl_[a * n + b] = static_cast<std::uint8_t>(x);
          break;
        }
      }
    }
  }
  f.implies_into_.assign(n, ElementSet{});
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t x = 0; x < n; ++x) f.implies_into_[s].insert(f.implies(id(x), id(s)));
  }
  return f;
}

FramePtr make_frame(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> order,
                    std::vector<std::string> labels, std::string name) {
  return std::make_shared<const FiniteFrame>(build_frame(n, order, std::move(labels), std::move(name)));
}

}  // namespace locus

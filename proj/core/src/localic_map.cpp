#include "locus/localic_map.hpp"

namespace locus {

namespace {

std::string pair_witness(const FiniteFrame& f, ElementId a, ElementId b) {
  return "(" + f.label(a) + ", " + f.label(b) + ")";
}

void require_source(const LocalicMap& m, const Sublocale& a) {
  if (&a.frame() != m.source().get()) {
    throw LocusError(ErrorKind::MixedFrames, "sublocale is not in the source of map '" + m.name() + "'");
  }
}

}  // namespace

std::optional<LocalicMap> try_build_map(FramePtr source, FramePtr target, std::vector<ElementId> table,
                                        std::string name, MapDefect* defect) {
  auto fail = [&](ErrorKind kind, auto&& detail) -> std::optional<LocalicMap> {
    if (defect) *defect = MapDefect{kind, detail()};
    return std::nullopt;
  };
  if (!source || !target) {
    return fail(ErrorKind::InvalidInput, [&] { return "map '" + name + "' lacks a source or target"; });
  }
  const FiniteFrame& src = *source;
  const FiniteFrame& tgt = *target;
  if (table.size() != src.size()) {
    return fail(ErrorKind::InvalidInput, [&] {
      return "map '" + name + "' has " + std::to_string(table.size()) + " entries for a source of " +
             std::to_string(src.size());
    });
  }
  for (ElementId y : table) {
    if (y.index >= tgt.size()) {
      return fail(ErrorKind::InvalidInput, [&] { return "map '" + name + "' leaves the target"; });
    }
  }
  if (table[src.top().index] != tgt.top()) {
    return fail(ErrorKind::NotMeetPreserving, [&] {
      return "map '" + name + "' sends top " + src.label(src.top()) + " to " + tgt.label(table[src.top().index]);
    });
  }
  for (ElementId a : src.elements()) {
    for (ElementId b : src.elements()) {
      if (b < a) continue;
      if (table[src.meet(a, b).index] != tgt.meet(table[a.index], table[b.index])) {
        return fail(ErrorKind::NotMeetPreserving, [&] { return "map '" + name + "' at " + pair_witness(src, a, b); });
      }
    }
  }

  std::vector<ElementId> adjoint(tgt.size());
  for (ElementId y : tgt.elements()) {
    ElementSet above;
    for (ElementId x : src.elements()) {
      if (tgt.leq(y, table[x.index])) above.insert(x);
    }
    adjoint[y.index] = src.meet_of(above);
  }
  if (adjoint[tgt.top().index] != src.top()) {
    return fail(ErrorKind::AdjointNotFrameHom, [&] {
      return "adjoint of '" + name + "' sends top to " + src.label(adjoint[tgt.top().index]);
    });
  }
  for (ElementId a : tgt.elements()) {
    for (ElementId b : tgt.elements()) {
      if (b < a) continue;
      if (adjoint[tgt.meet(a, b).index] != src.meet(adjoint[a.index], adjoint[b.index])) {
        return fail(ErrorKind::AdjointNotFrameHom,
                    [&] { return "adjoint of '" + name + "' at " + pair_witness(tgt, a, b); });
      }
    }
  }

  LocalicMap m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.name_ = std::move(name);
  m.table_ = std::move(table);
  m.adjoint_ = std::move(adjoint);
  return m;
}

LocalicMap build_map(FramePtr source, FramePtr target, std::vector<ElementId> table, std::string name) {
  MapDefect defect{};
  auto m = try_build_map(std::move(source), std::move(target), std::move(table), std::move(name), &defect);
  if (!m) throw LocusError(defect.kind, defect.detail);
  return std::move(*m);
}

LocalicMap identity_map(const FramePtr& frame) {
  std::vector<ElementId> table;
  for (ElementId x : frame->elements()) table.push_back(x);
  return build_map(frame, frame, std::move(table), "id");
}

LocalicMap compose(const LocalicMap& second, const LocalicMap& first, std::string name) {
  if (first.target().get() != second.source().get()) {
    throw LocusError(ErrorKind::MixedFrames, "cannot compose '" + second.name() + "' after '" + first.name() + "'");
  }
  std::vector<ElementId> table;
  for (ElementId x : first.source()->elements()) table.push_back(second(first(x)));
  if (name.empty()) name = second.name() + "." + first.name();
  return build_map(first.source(), second.target(), std::move(table), std::move(name));
}

LocalicMap inclusion_map(const InducedFrame& sub, const FramePtr& ambient, std::string name) {
  if (sub.ambient != ambient.get()) throw LocusError(ErrorKind::MixedFrames, "inclusion into the wrong frame");
  return build_map(sub.frame, ambient, sub.to_ambient, std::move(name));
}

LocalicMap restrict_map(const LocalicMap& f, const InducedFrame& s, const InducedFrame& t, std::string name) {
  if (s.ambient != f.source().get() || t.ambient != f.target().get()) {
    throw LocusError(ErrorKind::MixedFrames, "restriction of '" + f.name() + "' to foreign sublocales");
  }
  std::vector<ElementId> table;
  for (ElementId x : s.frame->elements()) {
    auto y = t.restrict(f(s.lift(x)));
    if (!y) {
      throw LocusError(ErrorKind::InvalidInput, "'" + f.name() + "' sends " + f.source()->label(s.lift(x)) +
                                                    " outside the target sublocale");
    }
    table.push_back(*y);
  }
  return build_map(s.frame, t.frame, std::move(table), std::move(name));
}

bool is_dense_map(const LocalicMap& m) {
  const FiniteFrame& tgt = *m.target();
  for (ElementId y : tgt.elements()) {
    if (y != tgt.bottom() && m.adjoint(y) == m.source()->bottom()) return false;
  }
  return true;
}

bool is_skeletal(const LocalicMap& m) {
  const FiniteFrame& src = *m.source();
  for (ElementId x : src.elements()) {
    if (src.is_dense(x) && !m.target()->is_dense(m(x))) return false;
  }
  return true;
}

bool is_skeletal_adjoint(const LocalicMap& m) {
  const FiniteFrame& tgt = *m.target();
  for (ElementId y : tgt.elements()) {
    if (tgt.is_dense(y) && !m.source()->is_dense(m.adjoint(y))) return false;
  }
  return true;
}

bool is_weakly_closed_adjoint(const LocalicMap& m) {
  const FiniteFrame& src = *m.source();
  const FiniteFrame& tgt = *m.target();
  for (ElementId a : src.elements()) {
    for (ElementId b : tgt.elements()) {
      if (src.join(a, m.adjoint(b)) == src.top() && tgt.join(m(a), b) != tgt.top()) return false;
    }
  }
  return true;
}

bool is_closed_map(const LocalicMap& m) {
  const FiniteFrame& src = *m.source();
  const FiniteFrame& tgt = *m.target();
  for (ElementId x : src.elements()) {
    for (ElementId y : tgt.elements()) {
      if (m(src.join(x, m.adjoint(y))) != tgt.join(m(x), y)) return false;
    }
  }
  return true;
}

bool is_nowhere_dense_adjoint(const LocalicMap& m) {
  const FiniteFrame& tgt = *m.target();
  for (ElementId x : tgt.elements()) {
    if (x == tgt.bottom()) continue;
    bool found = false;
    for (ElementId y : tgt.down_set(x)) {
      if (y != tgt.bottom() && m.adjoint(y) == m.source()->bottom()) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_injective(const LocalicMap& m) {
  ElementSet seen;
  for (ElementId y : m.table()) {
    if (seen.contains(y)) return false;
    seen.insert(y);
  }
  return true;
}

bool is_surjective(const LocalicMap& m) {
  ElementSet seen;
  for (ElementId y : m.table()) seen.insert(y);
  return seen == m.target()->elements();
}

Sublocale image(const LocalicMap& m, const Sublocale& a) {
  require_source(m, a);
  ElementSet out;
  for (ElementId x : a.members()) out.insert(m(x));
  return Sublocale(*m.target(), out);
}

Sublocale preimage(const LocalicMap& m, const Sublocale& b, const SublocaleSpace& source_space) {
  if (&b.frame() != m.target().get()) {
    throw LocusError(ErrorKind::MixedFrames, "sublocale is not in the target of map '" + m.name() + "'");
  }
  if (&source_space.frame() != m.source().get()) {
    throw LocusError(ErrorKind::MixedFrames, "S(source) of another frame");
  }
  std::vector<Sublocale> inside;
  for (const auto& a : source_space.all()) {
    if (image(m, a).subset_of(b)) inside.push_back(a);
  }
  return sublocale_join(*m.source(), inside);
}

Sublocale preimage(const LocalicMap& m, const Sublocale& b) {
  return preimage(m, b, SublocaleSpace(*m.source()));
}

Sublocale preimage_via_points(const LocalicMap& m, const Sublocale& b, ElementSet source_points) {
  if (&b.frame() != m.target().get()) {
    throw LocusError(ErrorKind::MixedFrames, "sublocale is not in the target of map '" + m.name() + "'");
  }
  ElementSet kept;
  for (ElementId p : source_points) {
    if (b.contains(m(p))) kept.insert(p);
  }
  return sublocale_of_points(*m.source(), kept);
}

Sublocale preimage_via_points(const LocalicMap& m, const Sublocale& b) {
  return preimage_via_points(m, b, point_set(*m.source()));
}

bool is_image_surjective(const LocalicMap& m, const SublocaleSpace& source_space, const SublocaleSpace& target_space) {
  for (const auto& b : target_space.all()) {
    if (!(image(m, preimage(m, b, source_space)) == b)) return false;
  }
  return true;
}

bool same_map(const LocalicMap& a, const LocalicMap& b) {
  return a.source() == b.source() && a.target() == b.target() && a.table() == b.table();
}

}  // namespace locus

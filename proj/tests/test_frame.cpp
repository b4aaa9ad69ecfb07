#include <gtest/gtest.h>

#include <algorithm>

#include "support/frames.hpp"
#include "support/oracle.hpp"

using namespace fixtures;
using locus::ElementId;
using locus::ErrorKind;
using locus::LocusError;

namespace {

ErrorKind build_error(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> order) {
  try {
    locus::build_frame(n, order);
  } catch (const LocusError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a LocusError";
  return ErrorKind::InvalidInput;
}

std::vector<locus::FramePtr> property_frames() {
  auto frames = small_frames(4);
  auto more = random_frames(40, 16, 11);
  frames.insert(frames.end(), more.begin(), more.end());
  return frames;
}

}  // namespace

TEST(FrameBuild, ChainOfThree) {
  auto f = c3();
  ElementId m = el(f, "m");
  EXPECT_EQ(f->size(), 3U);
  EXPECT_EQ(f->meet(m, m), m);
  EXPECT_EQ(f->implies(m, f->bottom()), f->bottom());
  EXPECT_EQ(f->label(f->bottom()), "0");
  EXPECT_EQ(f->label(f->top()), "1");
}

TEST(FrameBuild, Diamond) {
  auto f = b2();
  EXPECT_EQ(f->meet(el(f, "a"), el(f, "b")), f->bottom());
  EXPECT_EQ(f->join(el(f, "a"), el(f, "b")), f->top());
}

TEST(FrameBuild, PentagonIsNotDistributive) {
  // 0 < a < c < 1, 0 < b < 1
  EXPECT_EQ(build_error(5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}), ErrorKind::NotDistributive);
}

TEST(FrameBuild, DiamondM3IsNotDistributive) {
  EXPECT_EQ(build_error(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}), ErrorKind::NotDistributive);
}

TEST(FrameBuild, CycleIsNotAPartialOrder) {
  EXPECT_EQ(build_error(3, {{0, 1}, {1, 2}, {2, 1}}), ErrorKind::NotAPartialOrder);
}

TEST(FrameBuild, TwoMaximalElementsIsNotALattice) {
  EXPECT_EQ(build_error(3, {{0, 1}, {0, 2}}), ErrorKind::NotALattice);
}

TEST(FrameBuild, CoverOrFullRelationGiveTheSameFrame) {
  auto covers = locus::build_frame(4, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 3}});
  auto full = locus::build_frame(
      4, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 3}, {0, 2}, {0, 3}, {1, 3}, {2, 2}});
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) EXPECT_EQ(covers.leq({a}, {b}), full.leq({a}, {b}));
  }
}

TEST(Heyting, Examples) {
  auto f = c3();
  EXPECT_EQ(f->implies(el(f, "m"), el(f, "0")), el(f, "0"));
  auto b = b2();
  EXPECT_EQ(b->implies(el(b, "a"), el(b, "0")), el(b, "b"));
  for (const auto& frame : {c3(), b2(), c4()}) {
    for (ElementId a : frame->elements()) EXPECT_EQ(frame->implies(a, a), frame->top());
  }
}

TEST(Pseudocomplement, Examples) {
  auto f = c3();
  EXPECT_EQ(f->pseudocomplement(el(f, "m")), el(f, "0"));
  EXPECT_EQ(f->pseudocomplement(f->bottom()), f->top());
  auto b = b2();
  EXPECT_EQ(b->pseudocomplement(el(b, "a")), el(b, "b"));
}

TEST(ElementPredicates, ChainOfThree) {
  auto f = c3();
  ElementId m = el(f, "m");
  EXPECT_TRUE(f->is_dense(m));
  EXPECT_FALSE(f->is_complemented(m));
  EXPECT_TRUE(f->is_point(m));
}

TEST(ElementPredicates, TopOfAnyFrame) {
  for (const auto& f : {c2(), c3(), c4(), b2(), one()}) {
    EXPECT_TRUE(f->is_dense(f->top()));
    EXPECT_TRUE(f->is_complemented(f->top()));
    EXPECT_FALSE(f->is_point(f->top()));
  }
}

TEST(ElementPredicates, Diamond) {
  auto f = b2();
  ElementId a = el(f, "a");
  EXPECT_FALSE(f->is_dense(a));
  EXPECT_TRUE(f->is_complemented(a));
  EXPECT_TRUE(f->is_point(a));
}

TEST(ElementPredicates, Boolean) {
  EXPECT_TRUE(b2()->is_boolean());
  EXPECT_FALSE(c3()->is_boolean());
  EXPECT_TRUE(c2()->is_boolean());
}

TEST(SetOperations, Examples) {
  auto f = c3();
  EXPECT_EQ(f->meet_of({}), f->top());
  auto b = b2();
  EXPECT_EQ(b->meet_of(set(b, {"a", "b"})), b->bottom());
  auto c = c4();
  EXPECT_EQ(c->join_of(set(c, {"a", "b"})), el(c, "b"));
  EXPECT_EQ(c->join_of({}), c->bottom());
}

TEST(FrameProperties, TablesMatchScanningOracle) {
  for (const auto& f : property_frames()) {
    oracle::Lattice o(*f);
    ASSERT_EQ(static_cast<int>(f->bottom().index), o.bottom()) << f->name();
    ASSERT_EQ(static_cast<int>(f->top().index), o.top()) << f->name();
    for (ElementId a : f->elements()) {
      for (ElementId b : f->elements()) {
        int ia = static_cast<int>(a.index), ib = static_cast<int>(b.index);
        ASSERT_EQ(static_cast<int>(f->meet(a, b).index), o.meet(ia, ib)) << f->name();
        ASSERT_EQ(static_cast<int>(f->join(a, b).index), o.join(ia, ib)) << f->name();
        ASSERT_EQ(static_cast<int>(f->implies(a, b).index), o.imp(ia, ib)) << f->name();
      }
    }
  }
}

TEST(FrameProperties, Adjunction) {
  for (const auto& f : property_frames()) {
    for (ElementId a : f->elements()) {
      for (ElementId b : f->elements()) {
        ElementId ab = f->implies(a, b);
        for (ElementId x : f->elements()) {
          ASSERT_EQ(f->leq(x, ab), f->leq(f->meet(x, a), b)) << f->name();
        }
      }
    }
  }
}

TEST(FrameProperties, DoubleNegationIsMonotoneAndInflationary) {
  for (const auto& f : property_frames()) {
    auto nn = [&](ElementId a) { return f->pseudocomplement(f->pseudocomplement(a)); };
    for (ElementId a : f->elements()) {
      ASSERT_TRUE(f->leq(a, nn(a)));
      for (ElementId b : f->elements()) {
        if (f->leq(a, b)) {
          ASSERT_TRUE(f->leq(nn(a), nn(b)));
        }
      }
    }
  }
}

TEST(FrameProperties, DistributiveBothWays) {
  for (const auto& f : property_frames()) {
    for (ElementId a : f->elements()) {
      for (ElementId b : f->elements()) {
        for (ElementId c : f->elements()) {
          ASSERT_EQ(f->meet(a, f->join(b, c)), f->join(f->meet(a, b), f->meet(a, c)));
          ASSERT_EQ(f->join(a, f->meet(b, c)), f->meet(f->join(a, b), f->join(a, c)));
        }
      }
    }
  }
}

TEST(FrameProperties, BoundsAndOrder) {
  for (const auto& f : property_frames()) {
    for (ElementId x : f->elements()) {
      ASSERT_TRUE(f->leq(f->bottom(), x));
      ASSERT_TRUE(f->leq(x, f->top()));
    }
  }
}

TEST(FrameProperties, SetMeetAndJoinIgnoreOrder) {
  oracle::SplitMix rng(20260101);
  for (const auto& f : property_frames()) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<ElementId> xs;
      locus::ElementSet set;
      for (ElementId x : f->elements()) {
        if (rng.next() & 1U) {
          xs.push_back(x);
          set.insert(x);
        }
      }
      for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[rng.below(i)]);
      ElementId m = f->top(), j = f->bottom();
      for (ElementId x : xs) {
        m = f->meet(m, x);
        j = f->join(j, x);
      }
      ASSERT_EQ(f->meet_of(set), m);
      ASSERT_EQ(f->join_of(set), j);
    }
  }
}

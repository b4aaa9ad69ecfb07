#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "locus/suite.hpp"
#include "support/frames.hpp"
#include "support/oracle.hpp"

using namespace fixtures;
using locus::Family;
using locus::GenSpec;

namespace {

// Isomorphism classes of n-point posets, by brute force over relations and
// relabelings.
std::size_t count_posets(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  std::set<std::uint32_t> classes;
  for (std::uint32_t rel = 0; rel < (1U << pairs.size()); ++rel) {
    auto less = [&](int i, int j) {
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (pairs[k] == std::pair{i, j}) return ((rel >> k) & 1U) != 0;
      }
      return false;
    };
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      for (int j = 0; j < n && ok; ++j) {
        if (less(i, j) && less(j, i)) ok = false;
        for (int k = 0; k < n && ok; ++k) {
          if (less(i, j) && less(j, k) && !less(i, k)) ok = false;
        }
      }
    }
    if (!ok) continue;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint32_t best = UINT32_MAX;
    do {
      std::uint32_t code = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i != j && less(perm[i], perm[j])) code |= 1U << (i * n + j);
        }
      }
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    classes.insert(best);
  }
  return classes.size();
}

GenSpec spec_of(Family family, std::size_t max_size, std::size_t count = 0, std::uint64_t seed = 0) {
  GenSpec spec;
  spec.family = family;
  spec.max_size = max_size;
  spec.count = count;
  spec.seed = seed;
  return spec;
}

std::vector<std::string> fingerprint(const std::vector<FramePtr>& frames) {
  std::vector<std::string> out;
  for (const auto& f : frames) {
    std::string s = f->name() + ":";
    for (auto [a, b] : f->covers()) s += f->label(a) + "<" + f->label(b) + ",";
    out.push_back(s);
  }
  return out;
}

}  // namespace

TEST(Frames, ChainAndBooleanFamilies) {
  auto chains = locus::gen_frames(spec_of(Family::Chain, 3));
  ASSERT_EQ(chains.size(), 3U);
  EXPECT_EQ(chains.back()->size(), 3U);
  EXPECT_EQ(chains.back()->covers().size(), 2U);
  auto booleans = locus::gen_frames(spec_of(Family::BooleanAlgebra, 2));
  ASSERT_EQ(booleans.size(), 2U);
  EXPECT_EQ(booleans.back()->size(), 4U);
  EXPECT_TRUE(booleans.back()->is_boolean());
}

TEST(Frames, UnlabeledPosetCountsMatchBruteForce) {
  for (int n = 0; n <= 4; ++n) {
    EXPECT_EQ(locus::unlabeled_posets(static_cast<std::size_t>(n)).size(), count_posets(n)) << n;
  }
  EXPECT_EQ(locus::unlabeled_posets(3).size(), 5U);
}

TEST(Frames, AllPosetsEmitsOneFramePerPoset) {
  auto frames = locus::gen_frames(spec_of(Family::AllPosets, 3));
  EXPECT_EQ(frames.size(), 1U + 1U + 2U + 5U);
  std::size_t three_points = 0;
  for (const auto& f : frames) {
    if (f->name().rfind("P3.", 0) == 0) ++three_points;
  }
  EXPECT_EQ(three_points, 5U);
  EXPECT_EQ(locus::gen_frames(spec_of(Family::AllPosets, 4)).size(), 25U);
}

TEST(Frames, EveryFrameRebuildsFromItsCovers) {
  std::vector<FramePtr> frames = small_frames(4);
  for (auto family : {Family::RandomPoset, Family::FiniteTopology}) {
    auto more = locus::gen_frames(spec_of(family, 5, 30, 99));
    frames.insert(frames.end(), more.begin(), more.end());
  }
  for (const auto& f : frames) {
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (auto [a, b] : f->covers()) order.emplace_back(a.index, b.index);
    auto rebuilt = locus::build_frame(f->size(), order);
    for (auto a : f->elements()) {
      for (auto b : f->elements()) ASSERT_EQ(rebuilt.leq(a, b), f->leq(a, b));
    }
  }
}

TEST(Frames, RandomFamiliesAreDeterministicAndCapped) {
  for (auto family : {Family::RandomPoset, Family::FiniteTopology}) {
    auto spec = spec_of(family, 6, 40, 1234);
    spec.max_elements = 12;
    auto a = locus::gen_frames(spec);
    auto b = locus::gen_frames(spec);
    EXPECT_EQ(a.size(), 40U);
    EXPECT_EQ(fingerprint(a), fingerprint(b));
    for (const auto& f : a) EXPECT_LE(f->size(), 12U);
    spec.seed = 1235;
    EXPECT_NE(fingerprint(locus::gen_frames(spec)), fingerprint(a));
  }
}

TEST(DenseSublocales, Examples) {
  auto f = c3();
  auto dense = locus::gen_dense_sublocales(*f);
  ASSERT_EQ(dense.size(), 2U);
  EXPECT_NE(std::find(dense.begin(), dense.end(), locus::booleanization(*f)), dense.end());
  EXPECT_NE(std::find(dense.begin(), dense.end(), locus::whole_sublocale(*f)), dense.end());
  auto b = b2();
  oracle::Lattice o(*b);
  std::size_t expected = 0;
  for (oracle::Mask s : o.sublocales()) expected += oracle::has(s, o.bottom()) ? 1 : 0;
  EXPECT_EQ(locus::gen_dense_sublocales(*b).size(), expected);
}

TEST(DenseSublocales, MatchOracleAndContainBooleanization) {
  for (const auto& f : small_frames(4)) {
    if (f->size() > 10) continue;
    oracle::Lattice o(*f);
    std::vector<oracle::Mask> expected;
    for (oracle::Mask s : o.sublocales()) {
      if (oracle::has(s, o.bottom())) expected.push_back(s);
    }
    std::vector<oracle::Mask> got;
    for (const auto& s : locus::gen_dense_sublocales(*f)) got.push_back(s.members().bits());
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected) << f->name();
    EXPECT_TRUE(std::binary_search(got.begin(), got.end(), o.booleanization()));
  }
}

TEST(Maps, SeededSearchIsDeterministic) {
  auto frames = small_frames(4);
  locus::MapSearch search;
  search.limit = 3;
  search.seed = 42;
  for (const auto& a : frames) {
    if (a->size() < 8) continue;
    for (const auto& b : frames) {
      if (b->size() < 8) continue;
      auto x = locus::gen_maps(a, b, search);
      auto y = locus::gen_maps(a, b, search);
      ASSERT_EQ(x.size(), y.size());
      for (std::size_t i = 0; i < x.size(); ++i) ASSERT_TRUE(locus::same_map(x[i], y[i]));
    }
  }
}

TEST(Squares, EnumerationMatchesDefinitionAndRevalidates) {
  for (const auto& a : small_frames(3)) {
    for (const auto& b : small_frames(3)) {
      for (const auto& f : locus::gen_maps(a, b)) {
        std::size_t expected = 0;
        for (const auto& s : locus::gen_dense_sublocales(*a)) {
          for (const auto& t : locus::gen_dense_sublocales(*b)) expected += locus::image(f, s).subset_of(t) ? 1 : 0;
        }
        auto squares = locus::gen_squares(f);
        ASSERT_EQ(squares.size(), expected);
        for (const auto& sq : squares) {
          locus::DenseSquare again(sq.g(), sq.f(), sq.alpha(), sq.omega());
          EXPECT_TRUE(locus::is_dense(again.alpha_image()));
          EXPECT_TRUE(locus::is_dense(again.omega_image()));
        }
      }
    }
  }
}

TEST(Squares, ChainsAndTrianglesRevalidate) {
  auto frames = small_frames(2);
  for (const auto& a : frames) {
    for (const auto& b : frames) {
      for (const auto& f : locus::gen_maps(a, b)) {
        for (const auto& ch : locus::gen_chains(f)) {
          EXPECT_NO_THROW(locus::SquareChain(ch.outer().g(), ch.outer().f(), ch.i(), ch.k(), ch.phi(), ch.theta(),
                                             ch.sigma()));
        }
        for (const auto& c : frames) {
          for (const auto& phi : locus::gen_maps(b, c)) {
            for (const auto& tri : locus::gen_triangles(f, phi)) {
              EXPECT_NO_THROW(locus::SquareTriangle(tri.first(), tri.second()));
            }
          }
        }
      }
    }
  }
}

TEST(Squares, SuiteCorpusCountsMatchGenerators) {
  GenSpec spec = spec_of(Family::AllPosets, 3);
  spec.random_squares = 0;
  spec.random_chains = 0;
  spec.random_triangles = 0;
  auto frames = locus::gen_frames(spec);
  std::size_t squares = 0, chains = 0, triangles = 0;
  for (const auto& a : frames) {
    for (const auto& b : frames) {
      for (const auto& f : locus::gen_maps(a, b)) {
        squares += locus::gen_squares(f).size();
        if (a->size() <= spec.chain_max_elements && b->size() <= spec.chain_max_elements) {
          chains += locus::gen_chains(f).size();
        }
        if (a->size() > spec.triangle_max_elements || b->size() > spec.triangle_max_elements) continue;
        for (const auto& c : frames) {
          if (c->size() > spec.triangle_max_elements) continue;
          for (const auto& phi : locus::gen_maps(b, c)) triangles += locus::gen_triangles(f, phi).size();
        }
      }
    }
  }
  locus::SuiteOptions options;
  options.spec = spec;
  options.jobs = 1;
  auto report = locus::run_suite(options);
  EXPECT_EQ(report.corpus.squares, squares);
  EXPECT_EQ(report.corpus.chains, chains);
  EXPECT_EQ(report.corpus.triangles, triangles);
}

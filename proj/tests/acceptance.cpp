// Acceptance run. Prints one line per criterion and exits nonzero if any fails.
//   acceptance <path-to-locus-cli> <scratch-dir>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "locus/suite.hpp"
#include "support/frames.hpp"
#include "support/oracle.hpp"

namespace {

using locus::Family;
using locus::Sublocale;
using oracle::Mask;

// Wall-time budgets, single-threaded, in seconds.
constexpr double kBudget1 = 120;
constexpr double kBudget2 = 300;
constexpr double kBudget4 = 600;

struct Line {
  bool pass = true;
  std::string detail;
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << " s";
  return os.str();
}

locus::SuiteOptions tier_one(std::string filter) {
  locus::SuiteOptions o;
  o.spec.family = Family::AllPosets;
  o.spec.max_size = 4;
  o.filter = std::move(filter);
  o.jobs = 1;
  return o;
}

std::vector<locus::FramePtr> tier_one_frames() {
  locus::GenSpec spec;
  spec.family = Family::AllPosets;
  spec.max_size = 4;
  return locus::gen_frames(spec);
}

// Fails the line unless every listed check has zero failures and, when
// `need_pass`, at least one instance whose hypotheses held.
void require_clean(const locus::SuiteReport& report, const std::vector<std::string>& ids, bool need_pass, Line& line,
                   const std::string& tag) {
  for (const auto& id : ids) {
    const auto* t = report.find(id);
    if (t == nullptr) {
      line.pass = false;
      line.detail += " " + tag + ":" + id + " missing";
      continue;
    }
    if (t->fail != 0) {
      line.pass = false;
      line.detail += " " + tag + ":" + id + " failed " + std::to_string(t->fail);
      if (!t->witnesses.empty()) line.detail += " (" + t->witnesses.front().witness + ")";
    }
    if (need_pass && t->pass == 0) {
      line.pass = false;
      line.detail += " " + tag + ":" + id + " has no instance with its hypotheses met";
    }
  }
}

std::size_t total_passes(const locus::SuiteReport& report, const std::vector<std::string>& ids) {
  std::size_t n = 0;
  for (const auto& id : ids) {
    if (const auto* t = report.find(id)) n += t->pass;
  }
  return n;
}

Line criterion1() {
  Timer timer;
  Line line;
  std::size_t triples = 0, discrepancies = 0;
  for (const auto& f : tier_one_frames()) {
    oracle::Lattice o(*f);
    auto space = std::make_shared<const locus::SublocaleSpace>(*f);
    for (const auto& s : space->dense()) {
      locus::RemoteContext ctx(s, space);
      locus::RemotenessOracle lib(ctx);
      for (const auto& t : space->all()) {
        ++triples;
        bool a = locus::is_remote_from(ctx, t);
        bool b = locus::is_remote_from_open(ctx, t);
        bool c = locus::is_remote_from_nucleus(ctx, t);
        bool d = lib.is_remote(t);
        bool e = o.remote(s.members().bits(), t.members().bits());
        if (a != b || a != c || a != d || a != e) {
          if (discrepancies++ == 0) {
            line.detail += " first at " + f->name() + " S=" + locus::describe(s) + " T=" + locus::describe(t);
          }
        }
      }
    }
  }
  double secs = timer.seconds();
  line.pass = discrepancies == 0 && triples > 0 && secs < kBudget1;
  line.detail = std::to_string(triples) + " (L,S,T) triples, " + std::to_string(discrepancies) +
                " discrepancies, " + fmt_seconds(secs) + line.detail;
  return line;
}

const std::vector<std::string> kStructure = {"rempropBL", "rempropBLstar", "RsBL", "RsDense", "SisBL", "RsNd"};

Line criterion2(const locus::SuiteReport& full) {
  Timer timer;
  Line line;
  require_clean(full, kStructure, true, line, "all-posets");
  locus::SuiteOptions random;
  random.spec.family = Family::RandomPoset;
  random.spec.max_size = 6;
  random.spec.count = 200;
  random.spec.seed = 2024;
  random.spec.max_elements = 12;
  random.jobs = 1;
  std::size_t passes = total_passes(full, kStructure), frames = 0;
  // One run per check keeps the square tiers out of the random corpus.
  for (const auto& id : kStructure) {
    random.filter = id;
    auto drawn = locus::run_suite(random);
    require_clean(drawn, {id}, true, line, "random");
    passes += total_passes(drawn, {id});
    frames = drawn.corpus.frames;
  }
  if (frames != 200) {
    line.pass = false;
    line.detail += " random corpus has " + std::to_string(frames) + " frames";
  }
  double secs = timer.seconds();
  if (secs >= kBudget2) line.pass = false;
  line.detail = std::to_string(full.corpus.frames) + "+" + std::to_string(frames) + " frames, " +
                std::to_string(passes) + " passing instances, " + fmt_seconds(secs) + line.detail;
  return line;
}

const std::vector<std::string> kContainment = {"remotesets", "SRemandSRemLS", "remS", "BLandL-4", "rare",
                                               "NDSremotefrom"};

Line criterion3(const locus::SuiteReport& full) {
  Line line;
  require_clean(full, kContainment, false, line, "all-posets");
  const auto* rare = full.find("rare");
  std::size_t rare_cases = rare ? rare->pass + rare->fail : 0;
  line.detail = std::to_string(total_passes(full, kContainment)) + " passing instances, " +
                std::to_string(rare_cases) + " dense-and-rare contexts" + line.detail;
  return line;
}

Line criterion4(const locus::SuiteReport& full, double secs) {
  Line line;
  std::vector<std::string> ids;
  for (const auto& c : locus::registry()) {
    if (c.group == locus::Group::Squares || c.group == locus::Group::Preservation) ids.emplace_back(c.id);
  }
  require_clean(full, ids, true, line, "check");
  std::size_t least = SIZE_MAX;
  std::string least_id;
  for (const auto& id : ids) {
    const auto* t = full.find(id);
    if (t && t->pass < least) {
      least = t->pass;
      least_id = id;
    }
  }
  if (secs >= kBudget4) line.pass = false;
  const auto& c = full.corpus;
  line.detail = std::to_string(ids.size()) + " checks over " + std::to_string(c.squares) + " squares, " +
                std::to_string(c.chains) + " chains, " + std::to_string(c.triangles) + " triangles; fewest passes " +
                std::to_string(least) + " (" + least_id + "), " + fmt_seconds(secs) + line.detail;
  return line;
}

Line criterion5() {
  Line line;
  std::size_t cases = 0;
  auto fail = [&](const std::string& what) {
    if (line.pass) line.detail = " first: " + what;
    line.pass = false;
  };
  auto frames = tier_one_frames();
  for (const auto& f : frames) {
    locus::SublocaleSpace space(*f);
    const auto& all = space.all();
    auto bl = locus::booleanization(*f);
    // coframe distributivity
    for (const auto& a : all) {
      for (const auto& b : all) {
        for (const auto& c : all) {
          ++cases;
          if (locus::join(a, locus::meet(b, c)) != locus::meet(locus::join(a, b), locus::join(a, c))) {
            fail(f->name() + " join over meet");
          }
        }
      }
    }
    for (auto a : f->elements()) {
      ++cases;
      auto ca = locus::closed_sublocale(*f, a);
      auto oa = locus::open_sublocale(*f, a);
      if (locus::meet(ca, oa) != locus::void_sublocale(*f) || locus::join(ca, oa) != locus::whole_sublocale(*f)) {
        fail(f->name() + " c/o complement at " + f->label(a));
      }
      if (locus::is_nowhere_dense(ca) != f->is_dense(a)) fail(f->name() + " c(a) nowhere dense at " + f->label(a));
    }
    for (const auto& s : all) {
      for (auto a : f->elements()) {
        ++cases;
        auto na = locus::nucleus(s, a);
        if (!f->leq(a, na) || locus::nucleus(s, na) != na || !s.contains(na)) fail(f->name() + " nucleus law");
        for (auto b : f->elements()) {
          if (locus::nucleus(s, f->meet(a, b)) != f->meet(na, locus::nucleus(s, b))) fail(f->name() + " nucleus meet");
        }
      }
      if (!locus::is_dense(s)) continue;
      ++cases;
      if (!bl.subset_of(s)) fail(f->name() + " BL not below a dense sublocale");
      auto inner = locus::induced_frame(s);
      if (inner.lift(locus::booleanization(*inner.frame)) != bl) fail(f->name() + " BS != BL");
    }
    if (!locus::is_dense(bl)) fail(f->name() + " BL not dense");
  }
  // Galois adjunction over every map between frames of at most 8 elements.
  for (const auto& a : frames) {
    if (a->size() > 8) continue;
    locus::SublocaleSpace as(*a);
    for (const auto& b : frames) {
      if (b->size() > 8) continue;
      locus::SublocaleSpace bs(*b);
      for (const auto& f : locus::gen_maps(a, b)) {
        std::vector<Sublocale> images, preimages;
        for (const auto& x : as.all()) images.push_back(locus::image(f, x));
        for (const auto& y : bs.all()) preimages.push_back(locus::preimage(f, y, as));
        for (std::size_t i = 0; i < images.size(); ++i) {
          for (std::size_t j = 0; j < preimages.size(); ++j) {
            ++cases;
            if (images[i].subset_of(bs.all()[j]) != as.all()[i].subset_of(preimages[j])) {
              fail(f.source()->name() + "->" + f.target()->name() + " image/preimage adjunction");
            }
          }
        }
      }
    }
  }
  line.detail = std::to_string(cases) + " cases" + line.detail;
  return line;
}

// Expected values are label sets frozen from the oracle; the library must
// reproduce them after the oracle does.
struct KnownValue {
  std::string what;
  std::vector<std::string> expected;
  Mask from_oracle;
  Sublocale from_library;
};

Mask labels_to_mask(const locus::FiniteFrame& f, const std::vector<std::string>& labels) {
  Mask m = 0;
  for (const auto& l : labels) m |= oracle::bit(static_cast<int>(f.find(l)->index));
  return m;
}

Line criterion6() {
  Line line;
  auto c3 = fixtures::c3();
  auto c4 = fixtures::c4();
  auto b2 = fixtures::b2();
  oracle::Lattice o3(*c3), o4(*c4), ob(*b2);

  auto join_where = [](const oracle::Lattice& o, auto keep) {
    Mask acc = oracle::bit(o.top());
    for (Mask t : o.sublocales()) {
      if (keep(t)) acc = o.join_subl(acc, t);
    }
    return acc;
  };
  Mask c3_all = o3.all(), c3_bl = o3.booleanization();
  Mask rs_oracle = join_where(o3, [&](Mask t) { return o3.remote(c3_all, t); });
  Mask star_rs_oracle = join_where(o3, [&](Mask t) { return o3.star_remote(c3_bl, t); });
  Mask nd_oracle = join_where(o3, [&](Mask t) { return o3.s_nowhere_dense(c3_all, t); });
  Mask nd4_oracle = join_where(o4, [&](Mask t) { return o4.s_nowhere_dense(o4.all(), t); });

  locus::RemoteContext c3_whole(locus::whole_sublocale(*c3));
  locus::RemoteContext c3_boolean(locus::booleanization(*c3));
  auto m = fixtures::el(c3, "m");
  auto a = fixtures::el(c4, "a");

  std::vector<KnownValue> values = {
      {"BC3", {"0", "1"}, c3_bl, locus::booleanization(*c3)},
      {"BC4", {"0", "1"}, o4.booleanization(), locus::booleanization(*c4)},
      {"BB2", {"0", "a", "b", "1"}, ob.booleanization(), locus::booleanization(*b2)},
      {"supplement(BC3)", {"m", "1"}, o3.supplement(c3_bl), locus::supplement(locus::booleanization(*c3))},
      {"supplement(c(m))", {"0", "1"}, o3.supplement(o3.closed(static_cast<int>(m.index))),
       locus::supplement(locus::closed_sublocale(*c3, m))},
      {"C4 o(a)", {"0", "1"}, o4.open(static_cast<int>(a.index)), locus::open_sublocale(*c4, a)},
      {"C4 c(a)", {"a", "b", "1"}, o4.closed(static_cast<int>(a.index)), locus::closed_sublocale(*c4, a)},
      {"rs(C3 x L)", {"0", "1"}, rs_oracle, locus::rs(c3_whole)},
      {"*Rs(C3 x BL)", {"m", "1"}, star_rs_oracle, locus::star_rs(c3_boolean)},
      {"Nd(C3)", {"m", "1"}, nd_oracle, locus::nd_join(locus::whole_sublocale(*c3))},
      {"Nd(C4)", {"a", "b", "1"}, nd4_oracle, locus::nd_join(locus::whole_sublocale(*c4))},
  };
  std::size_t checked = 0;
  for (const auto& v : values) {
    const auto& f = v.from_library.frame();
    Mask expected = labels_to_mask(f, v.expected);
    ++checked;
    if (v.from_oracle != expected) {
      line.pass = false;
      line.detail += " oracle disagrees on " + v.what;
    } else if (v.from_library.members().bits() != expected) {
      line.pass = false;
      line.detail += " library disagrees on " + v.what;
    }
  }

  auto count_check = [&](const std::string& what, std::size_t expected, std::size_t oracle_value,
                         std::size_t library_value) {
    ++checked;
    if (oracle_value != expected) {
      line.pass = false;
      line.detail += " oracle disagrees on " + what;
    } else if (library_value != expected) {
      line.pass = false;
      line.detail += " library disagrees on " + what;
    }
  };
  count_check("|S(C3)|", 4, o3.sublocales().size(), locus::enumerate_sublocales(*c3).size());
  count_check("|S(C4)|", 8, o4.sublocales().size(), locus::enumerate_sublocales(*c4).size());
  count_check("|S(B2)|", 4, ob.sublocales().size(), locus::enumerate_sublocales(*b2).size());

  // remote_set(C3 x L) = {O, BC3}
  std::vector<Mask> remote_oracle;
  for (Mask t : o3.sublocales()) {
    if (o3.remote(c3_all, t)) remote_oracle.push_back(t);
  }
  std::vector<Mask> remote_library;
  for (const auto& t : locus::remote_set(c3_whole)) remote_library.push_back(t.members().bits());
  std::vector<Mask> remote_expected = {labels_to_mask(*c3, {"1"}), labels_to_mask(*c3, {"0", "1"})};
  for (auto* v : {&remote_oracle, &remote_library, &remote_expected}) std::sort(v->begin(), v->end());
  ++checked;
  if (remote_oracle != remote_expected) {
    line.pass = false;
    line.detail += " oracle disagrees on remote_set(C3 x L)";
  } else if (remote_library != remote_expected) {
    line.pass = false;
    line.detail += " library disagrees on remote_set(C3 x L)";
  }

  // nu_BC3(m) = 1, nu_c(a)(0) = a in C4
  ++checked;
  if (locus::nucleus(locus::booleanization(*c3), m) != c3->top() ||
      locus::nucleus(locus::closed_sublocale(*c4, a), c4->bottom()) != a) {
    line.pass = false;
    line.detail += " nucleus values";
  }
  // C3 is not dense in itself; B2 is Boolean so every sublocale is remote from L.
  ++checked;
  if (locus::is_dense_in_itself(*c3) || locus::remote_set(locus::RemoteContext(locus::whole_sublocale(*b2))) !=
                                            locus::enumerate_sublocales(*b2)) {
    line.pass = false;
    line.detail += " C3 density or B2 remote set";
  }
  line.detail = std::to_string(checked) + " known values" + line.detail;
  return line;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Line criterion7(const std::string& cli, const std::filesystem::path& scratch) {
  Line line;
  std::filesystem::create_directories(scratch);
  std::vector<std::filesystem::path> outs;
  for (const char* jobs : {"1", "1", "8", "8"}) {
    auto out = scratch / ("report_" + std::to_string(outs.size()) + "_j" + jobs + ".json");
    std::filesystem::remove(out);
    std::string cmd = "\"" + cli + "\" suite --family all-posets --max-size 4 --json --jobs " + jobs + " --out \"" +
                      out.string() + "\" >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    if (rc != 0) {
      line.pass = false;
      line.detail += " run with --jobs " + std::string(jobs) + " exited " + std::to_string(rc);
    }
    outs.push_back(out);
  }
  std::string first = slurp(outs.front());
  if (first.empty()) {
    line.pass = false;
    line.detail += " empty report";
  }
  for (std::size_t i = 1; i < outs.size(); ++i) {
    if (slurp(outs[i]) != first) {
      line.pass = false;
      line.detail += " " + outs[i].filename().string() + " differs from " + outs.front().filename().string();
    }
  }
  line.detail = std::to_string(outs.size()) + " reports of " + std::to_string(first.size()) + " bytes" + line.detail;
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <locus-cli> <scratch-dir>\n";
    return 2;
  }
  bool ok = true;
  auto print = [&](int n, const Line& line) {
    ok = ok && line.pass;
    std::cout << "criterion " << n << ": " << (line.pass ? "PASS" : "FAIL") << "  " << line.detail << std::endl;
  };
  print(1, criterion1());
  Timer full_timer;
  auto full = locus::run_suite(tier_one("*"));
  double full_secs = full_timer.seconds();
  print(2, criterion2(full));
  print(3, criterion3(full));
  print(4, criterion4(full, full_secs));
  print(5, criterion5());
  print(6, criterion6());
  print(7, criterion7(argv[1], argv[2]));
  return ok ? 0 : 1;
}

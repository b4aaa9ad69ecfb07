#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "locus/theorems.hpp"

namespace locus {

struct SuiteOptions {
  GenSpec spec;
  /// Glob over check ids.
  std::string filter = "*";
  /// Worker threads; 0 means hardware concurrency.
  unsigned jobs = 0;
  /// Failure witnesses kept per check.
  std::size_t max_witnesses = 5;
};

struct CheckTally {
  std::string id;
  Scope scope = Scope::Frame;
  Group group = Group::RemoteFrom;
  std::size_t pass = 0;
  std::size_t hypotheses_not_met = 0;
  std::size_t fail = 0;
  /// The first failures in corpus order.
  std::vector<ReportRow> witnesses;

  std::size_t total() const { return pass + hypotheses_not_met + fail; }
};

struct CorpusStats {
  std::size_t frames = 0;
  std::size_t contexts = 0;
  std::size_t maps = 0;
  std::size_t squares = 0;
  std::size_t random_squares = 0;
  std::size_t chains = 0;
  std::size_t random_chains = 0;
  std::size_t triangles = 0;
  std::size_t random_triangles = 0;
};

struct SuiteReport {
  GenSpec spec;
  std::string filter;
  CorpusStats corpus;
  /// FNV-1a over the frames, maps and instance descriptors, in corpus order.
  std::uint64_t corpus_hash = 0;
  std::vector<CheckTally> checks;
  /// Not part of the serialized report.
  double wall_seconds = 0;

  std::size_t failures() const;
  const CheckTally* find(std::string_view id) const;
};

/// Builds the corpus described by `options.spec`, runs every check whose id
/// matches the filter and tallies the verdicts. The result does not depend on
/// the number of jobs.
SuiteReport run_suite(const SuiteOptions& options);

/// {"schema": 1, ...}, keys sorted, two-space indent, trailing newline.
std::string report_json(const SuiteReport& report);
/// Aligned table with one line per check.
std::string report_text(const SuiteReport& report);

}  // namespace locus

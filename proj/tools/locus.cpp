// locus: validate documents, run the check suite, answer questions about a frame.
//
// Exit codes: 0 success, 1 a check failed, 2 bad input.

#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "locus/json_io.hpp"
#include "locus/query.hpp"
#include "locus/suite.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

int run_validate(const std::string& path) {
  locus::Document doc = locus::load_document_file(path);
  std::cout << "ok: " << locus::to_string(doc.kind) << ", " << doc.frames.size() << " frame(s), " << doc.maps.size()
            << " map(s)\n";
  return kOk;
}

int run_query(const std::string& path, const std::vector<std::string>& words) {
  locus::Document doc = locus::load_document_file(path);
  if (!doc.primary_frame) throw locus::LocusError(locus::ErrorKind::InvalidInput, path + " holds no frame");
  std::string question;
  for (const auto& w : words) question += (question.empty() ? "" : " ") + w;
  std::cout << locus::answer_query(doc.primary_frame, question).dump() << "\n";
  return kOk;
}

int run_suite(const locus::SuiteOptions& options, const std::string& out, bool json_stdout) {
  locus::SuiteReport report = locus::run_suite(options);
  std::string json = locus::report_json(report);
  if (!out.empty()) {
    std::ofstream file(out, std::ios::binary);
    if (!file) throw locus::LocusError(locus::ErrorKind::InvalidInput, "cannot write " + out);
    file << json;
  }
  std::cout << (json_stdout ? json : locus::report_text(report));
  std::cerr << "wall time: " << report.wall_seconds << " s\n";
  return report.failures() == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Remoteness checks on finite frames"};
  app.require_subcommand(1);

  std::string path;
  auto* validate = app.add_subcommand("validate", "Check a frame, map, square or chain document");
  validate->add_option("file", path, "JSON document")->required();

  std::vector<std::string> question;
  auto* query = app.add_subcommand("query", "Answer a question about the frame in a document");
  query->add_option("file", path, "JSON document")->required();
  query->add_option("question", question,
                    "booleanization | sublocale-count | dense-in-itself? | remote-set S=X | star-remote-set S=X | "
                    "rs S=X | star-rs S=X | nd S=X | rare? A=X")
      ->required();

  locus::SuiteOptions options;
  std::string family = "all-posets";
  std::string out;
  bool json_stdout = false;
  options.jobs = std::max(1U, std::thread::hardware_concurrency());
  options.spec.max_size = 4;
  options.spec.count = 50;
  auto* suite = app.add_subcommand("suite", "Run the checks over a generated corpus");
  suite->add_option("--family", family, "all-posets, random-poset, chain, boolean-algebra, finite-topology")
      ->capture_default_str();
  suite->add_option("--max-size", options.spec.max_size, "Points, chain length or atoms")->capture_default_str();
  suite->add_option("--seed", options.spec.seed)->capture_default_str();
  suite->add_option("--count", options.spec.count, "Frames drawn by the random families")->capture_default_str();
  suite->add_option("--max-elements", options.spec.max_elements, "Drop frames larger than this")
      ->capture_default_str();
  suite->add_option("--edge-probability", options.spec.edge_probability)->capture_default_str();
  suite->add_option("--square-max-elements", options.spec.square_max_elements)->capture_default_str();
  suite->add_option("--chain-max-elements", options.spec.chain_max_elements)->capture_default_str();
  suite->add_option("--triangle-max-elements", options.spec.triangle_max_elements)->capture_default_str();
  suite->add_option("--random-squares", options.spec.random_squares)->capture_default_str();
  suite->add_option("--random-chains", options.spec.random_chains)->capture_default_str();
  suite->add_option("--random-triangles", options.spec.random_triangles)->capture_default_str();
  suite->add_option("--filter", options.filter, "Glob over check ids")->capture_default_str();
  suite->add_option("--jobs", options.jobs, "Worker threads")->envname("LOCUS_JOBS")->check(CLI::PositiveNumber);
  suite->add_option("--max-witnesses", options.max_witnesses)->capture_default_str();
  suite->add_option("--out", out, "Write the JSON report here");
  suite->add_flag("--json", json_stdout, "Print the JSON report instead of the table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*validate) return run_validate(path);
    if (*query) return run_query(path, question);
    auto parsed = locus::parse_family(family);
    if (!parsed) throw locus::LocusError(locus::ErrorKind::InvalidInput, "unknown family \"" + family + "\"");
    options.spec.family = *parsed;
    return run_suite(options, out, json_stdout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
}

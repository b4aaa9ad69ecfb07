#include "locus/query.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

#include "locus/json_io.hpp"
#include "locus/remoteness.hpp"

namespace locus {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw LocusError(ErrorKind::InvalidInput, what); }

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

Sublocale parse_sublocale(const FiniteFrame& frame, std::string text) {
  if (text == "L") return whole_sublocale(frame);
  if (text == "BL") return booleanization(frame);
  if (!text.empty() && (text.front() == '{' || text.front() == '[')) text.erase(0, 1);
  if (!text.empty() && (text.back() == '}' || text.back() == ']')) text.pop_back();
  nlohmann::json labels = nlohmann::json::array();
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    item = trim(item);
    if (item.size() >= 2 && item.front() == '"' && item.back() == '"') item = item.substr(1, item.size() - 2);
    if (!item.empty()) labels.push_back(item);
  }
  return sublocale_from_json(frame, labels);
}

// "name KEY=value" -> value; the key must be the one expected.
Sublocale argument(const FiniteFrame& frame, const std::string& rest, std::string_view key, std::string_view question) {
  std::string prefix = std::string(key) + "=";
  if (rest.rfind(prefix, 0) != 0) invalid("question \"" + std::string(question) + "\" needs " + prefix + "<sublocale>");
  return parse_sublocale(frame, trim(std::string_view(rest).substr(prefix.size())));
}

}  // namespace

nlohmann::json answer_query(const FramePtr& frame, std::string_view question) {
  std::string q = trim(question);
  auto space = q.find(' ');
  std::string head = q.substr(0, space);
  std::string rest = space == std::string::npos ? std::string() : trim(std::string_view(q).substr(space + 1));

  auto no_argument = [&] {
    if (!rest.empty()) invalid("question \"" + head + "\" takes no argument");
  };
  auto context = [&] { return RemoteContext(argument(*frame, rest, "S", head)); };

  if (head == "booleanization") {
    no_argument();
    return sublocale_to_json(booleanization(*frame));
  }
  if (head == "sublocale-count") {
    no_argument();
    return enumerate_sublocales(*frame).size();
  }
  if (head == "dense-in-itself?") {
    no_argument();
    return is_dense_in_itself(*frame);
  }
  if (head == "rare?") return is_rare(argument(*frame, rest, "A", head));
  if (head == "remote-set") return sublocales_to_json(remote_set(context()));
  if (head == "star-remote-set") return sublocales_to_json(star_remote_set(context()));
  if (head == "rs") return sublocale_to_json(rs(context()));
  if (head == "star-rs") return sublocale_to_json(star_rs(context()));
  if (head == "nd") return sublocale_to_json(nd_join(argument(*frame, rest, "S", head)));
  invalid("unknown question \"" + head + "\"");
}

}  // namespace locus

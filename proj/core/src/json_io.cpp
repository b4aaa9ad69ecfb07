#include "locus/json_io.hpp"

#include <algorithm>
#include <fstream>

#include <nlohmann/json.hpp>

namespace locus {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what) { throw LocusError(ErrorKind::InvalidInput, what); }

const json& field(const json& doc, const char* key, const std::string& where) {
  if (!doc.is_object()) invalid(where + " is not an object");
  auto it = doc.find(key);
  if (it == doc.end()) invalid(where + " has no \"" + key + "\"");
  return *it;
}

std::string string_field(const json& doc, const char* key, const std::string& where) {
  const json& v = field(doc, key, where);
  if (!v.is_string()) invalid(where + " field \"" + key + "\" is not a string");
  return v.get<std::string>();
}

ElementId element(const FiniteFrame& frame, const json& label, const std::string& where) {
  if (!label.is_string()) invalid(where + ": labels must be strings");
  auto id = frame.find(label.get<std::string>());
  if (!id) invalid(where + ": no element \"" + label.get<std::string>() + "\" in " + frame.name());
  return *id;
}

const FramePtr& frame_named(const FrameTable& frames, const std::string& name, const std::string& where) {
  auto it = frames.find(name);
  if (it == frames.end()) invalid(where + ": unknown frame \"" + name + "\"");
  return it->second;
}

const LocalicMap& map_named(const MapTable& maps, const json& doc, const char* key, const std::string& where) {
  std::string name = string_field(doc, key, where);
  auto it = maps.find(name);
  if (it == maps.end()) invalid(where + ": unknown map \"" + name + "\" for " + key);
  return it->second;
}

void load_frames(const json& list, Document& out) {
  if (!list.is_array()) invalid("\"frames\" is not an array");
  for (const json& f : list) {
    FramePtr frame = frame_from_json(f);
    if (!out.frames.emplace(frame->name(), frame).second) invalid("duplicate frame \"" + frame->name() + "\"");
    if (!out.primary_frame) out.primary_frame = frame;
  }
}

void load_maps(const json& list, Document& out) {
  if (!list.is_array()) invalid("\"maps\" is not an array");
  for (const json& m : list) {
    LocalicMap map = map_from_json(m, out.frames);
    std::string name = map.name();
    if (!out.maps.emplace(name, std::move(map)).second) invalid("duplicate map \"" + name + "\"");
  }
}

}  // namespace

FramePtr frame_from_json(const json& doc) {
  const std::string where = "frame document";
  std::string name = string_field(doc, "name", where);
  const json& elements = field(doc, "elements", where);
  const json& leq = field(doc, "leq", where);
  if (!elements.is_array()) invalid(where + " \"elements\" is not an array");
  if (!leq.is_array()) invalid(where + " \"leq\" is not an array");

  std::vector<std::string> labels;
  std::map<std::string, std::size_t, std::less<>> index;
  for (const json& e : elements) {
    if (!e.is_string()) invalid(name + ": element labels must be strings");
    std::string label = e.get<std::string>();
    if (!index.emplace(label, labels.size()).second) invalid(name + ": duplicate element \"" + label + "\"");
    labels.push_back(std::move(label));
  }
  if (labels.empty()) invalid(name + ": a frame has at least one element");
  if (labels.size() > kMaxElements) {
    throw LocusError(ErrorKind::FrameTooLarge, name + ": " + std::to_string(labels.size()) + " elements, at most " +
                                                   std::to_string(kMaxElements));
  }

  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (const json& pair : leq) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      invalid(name + ": \"leq\" entries are [label, label] pairs");
    }
    auto a = index.find(pair[0].get<std::string>());
    auto b = index.find(pair[1].get<std::string>());
    if (a == index.end()) invalid(name + ": leq mentions unknown element \"" + pair[0].get<std::string>() + "\"");
    if (b == index.end()) invalid(name + ": leq mentions unknown element \"" + pair[1].get<std::string>() + "\"");
    order.emplace_back(a->second, b->second);
  }
  const std::size_t n = labels.size();
  return make_frame(n, order, std::move(labels), std::move(name));
}

json frame_to_json(const FiniteFrame& frame) {
  json leq = json::array();
  for (auto [a, b] : frame.covers()) leq.push_back({frame.label(a), frame.label(b)});
  return {{"name", frame.name()}, {"elements", frame.labels()}, {"leq", std::move(leq)}};
}

LocalicMap map_from_json(const json& doc, const FrameTable& frames) {
  const std::string where = "map document";
  std::string source_name = string_field(doc, "source", where);
  std::string target_name = string_field(doc, "target", where);
  std::string name = doc.contains("name") ? string_field(doc, "name", where) : source_name + "->" + target_name;
  const FramePtr& source = frame_named(frames, source_name, name);
  const FramePtr& target = frame_named(frames, target_name, name);
  const json& table = field(doc, "table", where);
  if (!table.is_object()) invalid(name + ": \"table\" is not an object");

  std::vector<std::optional<ElementId>> values(source->size());
  for (const auto& [key, value] : table.items()) {
    auto x = source->find(key);
    if (!x) invalid(name + ": table key \"" + key + "\" is not an element of " + source->name());
    values[x->index] = element(*target, value, name);
  }
  std::vector<ElementId> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i]) {
      invalid(name + ": table has no entry for \"" + source->label(ElementId{static_cast<std::uint32_t>(i)}) + "\"");
    }
    out.push_back(*values[i]);
  }
  return build_map(source, target, std::move(out), std::move(name));
}

json map_to_json(const LocalicMap& map) {
  json table = json::object();
  for (ElementId x : map.source()->elements()) table[map.source()->label(x)] = map.target()->label(map(x));
  return {{"name", map.name()},
          {"source", map.source()->name()},
          {"target", map.target()->name()},
          {"table", std::move(table)}};
}

json sublocale_to_json(const Sublocale& s) { return sorted_labels(s); }

json sublocales_to_json(const std::vector<Sublocale>& family) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(family.size());
  for (const auto& s : family) rows.push_back(sorted_labels(s));
  std::sort(rows.begin(), rows.end());
  return rows;
}

Sublocale sublocale_from_json(const FiniteFrame& frame, const json& labels) {
  if (!labels.is_array()) invalid("a sublocale is an array of labels");
  ElementSet members;
  for (const json& l : labels) members.insert(element(frame, l, "sublocale"));
  return Sublocale(frame, members);
}

std::string_view to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Frame:
      return "frame";
    case DocumentKind::Map:
      return "map";
    case DocumentKind::Square:
      return "square";
    case DocumentKind::Chain:
      return "chain";
    case DocumentKind::Bundle:
      return "bundle";
  }
  return "?";
}

Document load_document(const json& doc) {
  if (!doc.is_object()) invalid("document is not a JSON object");
  Document out;
  if (doc.contains("leq")) {
    out.kind = DocumentKind::Frame;
    out.primary_frame = frame_from_json(doc);
    out.frames.emplace(out.primary_frame->name(), out.primary_frame);
    return out;
  }
  if (doc.contains("table")) {
    out.kind = DocumentKind::Map;
    if (doc.contains("frames")) load_frames(doc["frames"], out);
    LocalicMap map = map_from_json(doc, out.frames);
    std::string name = map.name();
    out.maps.emplace(name, std::move(map));
    return out;
  }
  if (!doc.contains("frames")) invalid("unrecognised document: expected a frame, a map or a bundle with \"frames\"");
  load_frames(doc["frames"], out);
  if (doc.contains("maps")) load_maps(doc["maps"], out);
  out.kind = DocumentKind::Bundle;
  if (doc.contains("square")) {
    const json& sq = doc["square"];
    out.kind = DocumentKind::Square;
    out.square.emplace(map_named(out.maps, sq, "g", "square"), map_named(out.maps, sq, "f", "square"),
                       map_named(out.maps, sq, "alpha", "square"), map_named(out.maps, sq, "omega", "square"),
                       sq.contains("name") ? string_field(sq, "name", "square") : std::string("square"));
  } else if (doc.contains("chain")) {
    const json& ch = doc["chain"];
    out.kind = DocumentKind::Chain;
    out.chain.emplace(map_named(out.maps, ch, "g", "chain"), map_named(out.maps, ch, "f", "chain"),
                      map_named(out.maps, ch, "i", "chain"), map_named(out.maps, ch, "k", "chain"),
                      map_named(out.maps, ch, "phi", "chain"), map_named(out.maps, ch, "theta", "chain"),
                      map_named(out.maps, ch, "sigma", "chain"),
                      ch.contains("name") ? string_field(ch, "name", "chain") : std::string("chain"));
  }
  return out;
}

Document load_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open " + path);
  json doc = json::parse(in, nullptr, false);
  if (doc.is_discarded()) invalid(path + " is not valid JSON");
  return load_document(doc);
}

}  // namespace locus

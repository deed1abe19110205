#include "arcsys/io.hpp"

#include <cctype>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace arcsys {

using nlohmann::json;

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

json class_json(const ArcClass& c) {
  json j;
  j["n"] = c.n;
  j["side"] = std::string(1, side_letter(c.side));
  j["seq"] = c.seq;
  if (!c.joins_p_q()) {
    SurfaceSpec s(c.n);
    j["from"] = s.label(c.from);
    j["to"] = s.label(c.to);
  }
  return j;
}

ArcClass class_of(const json& j, int n_default = -1) {
  if (!j.is_object()) throw std::invalid_argument("class record must be an object");
  int n = j.contains("n") ? j.at("n").get<int>() : n_default;
  if (n < 2) throw std::invalid_argument("class record needs n >= 2");
  SurfaceSpec s(n);
  ArcClass c;
  c.n = n;
  c.side = parse_side(j.at("side").get<std::string>());
  c.seq = j.at("seq").get<std::vector<int>>();
  if (j.contains("from")) c.from = s.parse_puncture(j.at("from").get<std::string>());
  if (j.contains("to")) c.to = s.parse_puncture(j.at("to").get<std::string>());
  ArcClass r = reduce_between(s, c.from, c.to, c.side, c.seq);
  if (!(r == c)) throw std::invalid_argument("class " + to_string(c) + " is not in normal form");
  if (!is_realizable(c)) throw std::invalid_argument("class " + to_string(c) + " is not a simple arc");
  return c;
}

ArcSystem system_of(const json& j) {
  if (j.value("kind", "") != "arc-system") throw std::invalid_argument("not an arc-system document");
  int n = j.at("n").get<int>();
  SurfaceSpec s(n);
  std::vector<ArcClass> classes;
  for (const auto& c : j.at("classes")) classes.push_back(class_of(c, n));
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  if (!labels.empty() && labels.size() != classes.size()) throw std::invalid_argument("labels do not match classes");
  for (const auto& c : classes)
    if (c.n != n) throw std::invalid_argument("class on a different surface");
  ArcSystem sys = make_system(s, std::move(classes), std::move(labels));
  if (j.contains("matrix") && j.at("matrix").get<std::vector<std::vector<int>>>() != sys.matrix)
    throw std::invalid_argument("stored intersection matrix disagrees with the classes");
  return sys;
}

AnnularDiagram diagram_of(const json& j) {
  if (j.value("kind", "") != "annular-diagram") throw std::invalid_argument("not an annular-diagram document");
  AnnularDiagram d;
  d.map.vertex_count = j.at("vertex_count").get<int>();
  for (const auto& x : j.at("darts")) {
    d.map.vertex.push_back(x.at("vertex").get<int>());
    d.map.opposite.push_back(x.at("opposite").get<int>());
    d.map.next.push_back(x.at("next").get<int>());
  }
  auto b = j.at("boundary").get<std::vector<int>>();
  if (b.size() != 2) throw std::invalid_argument("boundary needs two darts");
  d.boundary = {b[0], b[1]};
  d.map.check();
  return d;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

template <class F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

ArcClass parse_class_text(int n, const std::string& text) {
  SurfaceSpec s(n);
  std::string t = trim(text);
  Puncture from = Puncture::p(), to = Puncture::q();
  if (auto arrow = t.find("->"); arrow != std::string::npos) {
    std::size_t space = t.find_first_of(" \t", arrow);
    if (space == std::string::npos) throw std::invalid_argument("missing class after endpoints in '" + text + "'");
    from = s.parse_puncture(trim(t.substr(0, arrow)));
    to = s.parse_puncture(trim(t.substr(arrow + 2, space - arrow - 2)));
    t = trim(t.substr(space));
  }
  std::string compact;
  for (char ch : t)
    if (!std::isspace(static_cast<unsigned char>(ch)) && ch != '(' && ch != ')') compact += ch;
  if (compact.size() < 3) throw std::invalid_argument("cannot parse class '" + text + "'");
  Side side = parse_side(compact.substr(0, 1));
  std::size_t open = compact.find('['), close = compact.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    throw std::invalid_argument("cannot parse class '" + text + "'");
  std::string head = compact.substr(1, open - 1);
  if (!(head.empty() || head == ",")) throw std::invalid_argument("cannot parse class '" + text + "'");
  std::vector<int> seq;
  const std::string inner = compact.substr(open + 1, close - open - 1);
  if (!inner.empty() && inner.back() == ',') throw std::invalid_argument("empty gap in '" + text + "'");
  std::stringstream body(inner);
  std::string item;
  while (std::getline(body, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty gap in '" + text + "'");
    std::size_t used = 0;
    int g = 0;
    try {
      g = std::stoi(item, &used);
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("bad gap '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad gap '" + item + "'");
    seq.push_back(g);
  }
  return reduce_between(s, from, to, side, seq);
}

std::string class_to_json(const ArcClass& c) { return class_json(c).dump(); }

std::string system_to_json(const ArcSystem& sys) {
  json j;
  j["kind"] = "arc-system";
  j["n"] = sys.surface.n();
  j["classes"] = json::array();
  for (const auto& c : sys.classes) {
    json x = class_json(c);
    x.erase("n");
    j["classes"].push_back(x);
  }
  if (!sys.labels.empty()) j["labels"] = sys.labels;
  j["matrix"] = sys.matrix;
  return j.dump(2);
}

std::string diagram_to_json(const AnnularDiagram& d) {
  json j;
  j["kind"] = "annular-diagram";
  j["vertex_count"] = d.map.vertex_count;
  j["darts"] = json::array();
  for (int x = 0; x < d.map.dart_count(); ++x)
    j["darts"].push_back({{"vertex", d.map.vertex[x]}, {"opposite", d.map.opposite[x]}, {"next", d.map.next[x]}});
  j["boundary"] = {d.boundary[0], d.boundary[1]};
  return j.dump(2);
}

Document parse_document(const std::string& text) {
  json j = parse_json(text);
  return guarded([&]() -> Document {
    if (!j.is_object()) throw std::invalid_argument("document must be a JSON object");
    std::string kind = j.value("kind", "");
    if (kind == "arc-system") return system_of(j);
    if (kind == "annular-diagram") return diagram_of(j);
    if (kind.empty() || kind == "arc-class") return class_of(j);
    throw std::invalid_argument("unknown document kind '" + kind + "'");
  });
}

ArcClass class_from_json(const std::string& text) {
  json j = parse_json(text);
  return guarded([&] { return class_of(j); });
}

ArcSystem system_from_json(const std::string& text) {
  json j = parse_json(text);
  return guarded([&] { return system_of(j); });
}

AnnularDiagram diagram_from_json(const std::string& text) {
  json j = parse_json(text);
  return guarded([&] { return diagram_of(j); });
}

}  // namespace arcsys

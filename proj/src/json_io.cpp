#include "callan/json_io.hpp"

#include <algorithm>

#include <json.hpp>

#include "callan/error.hpp"

namespace callan {

namespace {

using ojson = nlohmann::ordered_json;

ojson element_json(const Element& e) {
  if (const auto* b = std::get_if<Bar>(&e)) {
    return ojson{{"bar", ojson{{"color", b->color == Color::blue ? "blue" : "red"}, {"label", b->label}}}};
  }
  const auto& p = std::get<CallanPair>(e);
  return ojson{{"pair", ojson{{"blue", p.blue}, {"red", p.red}, {"extra", p.extra}}}};
}

ojson sequence_json(int m, int k, int n, const std::vector<Element>& elements) {
  ojson out{{"m", m}, {"k", k}, {"n", n}, {"elements", ojson::array()}};
  for (const auto& e : elements) out["elements"].push_back(element_json(e));
  return out;
}

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::parse, what); }

std::vector<int> block(const ojson& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) parse_fail(std::string("pair needs array \"") + key + "\"");
  std::vector<int> out;
  for (const auto& x : j[key]) {
    if (!x.is_number_integer()) parse_fail("block entries must be integers");
    out.push_back(x.get<int>());
  }
  std::sort(out.begin(), out.end());
  return out;
}

int integer(const ojson& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) parse_fail(std::string("missing integer \"") + key + "\"");
  return j[key].get<int>();
}

Element parse_element(const ojson& j) {
  if (!j.is_object() || j.size() != 1) parse_fail("element must be {\"bar\":...} or {\"pair\":...}");
  if (j.contains("bar")) {
    const auto& b = j["bar"];
    if (!b.is_object() || !b.contains("color") || !b["color"].is_string()) parse_fail("bar needs a color");
    const auto color = b["color"].get<std::string>();
    if (color != "blue" && color != "red") parse_fail("bar color must be blue or red");
    return Bar{color == "blue" ? Color::blue : Color::red, integer(b, "label")};
  }
  if (j.contains("pair")) {
    const auto& p = j["pair"];
    if (!p.is_object()) parse_fail("pair must be an object");
    bool extra = false;
    if (p.contains("extra")) {
      if (!p["extra"].is_boolean()) parse_fail("pair \"extra\" must be boolean");
      extra = p["extra"].get<bool>();
    }
    return CallanPair{block(p, "blue"), block(p, "red"), extra};
  }
  parse_fail("element must be {\"bar\":...} or {\"pair\":...}");
}

struct Parsed {
  int m, k, n;
  std::vector<Element> elements;
  ojson doc;
};

Parsed parse_sequence(const std::string& text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    parse_fail(std::string("malformed JSON: ") + ex.what());
  }
  if (!doc.is_object()) parse_fail("top level must be an object");
  Parsed p{integer(doc, "m"), integer(doc, "k"), integer(doc, "n"), {}, doc};
  if (!doc.contains("elements") || !doc["elements"].is_array()) parse_fail("missing \"elements\" array");
  for (const auto& e : doc["elements"]) p.elements.push_back(parse_element(e));
  return p;
}

}  // namespace

std::string to_json(const MBarredSequence& s) { return sequence_json(s.m, s.k, s.n, s.elements).dump(); }

MBarredSequence parse_mbarred(const std::string& text) {
  auto p = parse_sequence(text);
  if (p.doc.contains("form")) parse_fail("expected an m-barred sequence, got form " + p.doc["form"].dump());
  return {p.m, p.k, p.n, std::move(p.elements)};
}

std::string to_json(const CallanSequence& s) {
  std::vector<Element> elements(s.pairs.begin(), s.pairs.end());
  return sequence_json(s.shift, s.k, s.n, elements).dump();
}

std::string to_json(const DumontPermutation& p) { return ojson{{"dumont", p.values}}.dump(); }

std::string to_json(const PsiIntermediate& s) {
  ojson out{{"form", "psi-b"}};
  const ojson body = sequence_json(s.m, s.k, s.n, s.elements);
  for (const auto& [key, value] : body.items()) out[key] = value;
  return out.dump();
}

PsiIntermediate parse_psi_intermediate(const std::string& text) {
  auto p = parse_sequence(text);
  if (!p.doc.contains("form") || p.doc["form"] != "psi-b") parse_fail("expected \"form\":\"psi-b\"");
  return {p.m, p.k, p.n, std::move(p.elements)};
}

bool is_psi_intermediate_json(const std::string& text) {
  try {
    const auto doc = ojson::parse(text);
    return doc.is_object() && doc.contains("form") && doc["form"] == "psi-b";
  } catch (const nlohmann::json::exception&) {
    return false;
  }
}

}  // namespace callan

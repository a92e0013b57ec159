#include "ordercraft/io.hpp"

#include <fstream>
#include <sstream>

namespace oc {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    fail(ErrorCode::InvalidInput, std::string(what) + ": " + e.what());
  }
}

std::vector<Element> elements_of(const Json& j) {
  std::vector<Element> out;
  for (const auto& v : j) out.push_back(v.get<Element>());
  return out;
}

std::string triple_name(TripleClass t) { return "R" + std::to_string(static_cast<int>(t)); }

TripleClass parse_triple(const std::string& s) {
  if (s.size() == 2 && s[0] == 'R' && s[1] >= '1' && s[1] <= '5') return static_cast<TripleClass>(s[1] - '0');
  fail(ErrorCode::InvalidInput, "unknown triple class '" + s + "'");
}

std::string role_name(FamilyRole r) {
  switch (r) {
    case FamilyRole::All: return "all";
    case FamilyRole::Ideals: return "ideals";
    case FamilyRole::Custom: return "custom";
  }
  return "custom";
}

FamilyRole parse_role(const std::string& s) {
  if (s == "all") return FamilyRole::All;
  if (s == "ideals") return FamilyRole::Ideals;
  if (s == "custom") return FamilyRole::Custom;
  fail(ErrorCode::InvalidInput, "unknown family role '" + s + "'");
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json to_json(const Poset& p) {
  Json pairs = Json::array();
  for (auto [a, b] : transitive_reduction(p)) pairs.push_back({a, b});
  Json j{{"version", 1}, {"n", p.size()}, {"relation", {{"kind", "covers"}, {"pairs", pairs}}}};
  if (p.has_labels()) j["labels"] = p.labels();
  return j;
}

Poset poset_from_json(const Json& j) {
  return guarded("poset", [&] {
    if (!j.is_object()) fail(ErrorCode::InvalidInput, "poset must be an object");
    if (j.value("version", 1) != 1) fail(ErrorCode::InvalidInput, "unsupported poset version");
    const auto n = j.at("n").get<std::int64_t>();
    if (n < 0) fail(ErrorCode::InvalidInput, "negative n");
    const auto& rel = j.at("relation");
    const std::string kind = rel.at("kind").get<std::string>();
    if (kind != "covers" && kind != "leq") fail(ErrorCode::InvalidInput, "unknown relation kind '" + kind + "'");
    std::vector<Pair> pairs;
    for (const auto& pr : rel.at("pairs")) {
      if (!pr.is_array() || pr.size() != 2) fail(ErrorCode::InvalidInput, "pairs must have two entries");
      const auto a = pr[0].get<std::int64_t>(), b = pr[1].get<std::int64_t>();
      if (a < 0 || b < 0 || a >= n || b >= n) fail(ErrorCode::IndexOutOfRange, "pair outside 0.." + std::to_string(n - 1));
      pairs.emplace_back(static_cast<Element>(a), static_cast<Element>(b));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n)) fail(ErrorCode::ArityMismatch, "label count differs from n");
    return build(static_cast<std::size_t>(n), kind == "covers" ? RelationKind::Covers : RelationKind::Leq, pairs, std::move(labels));
  });
}

Json to_json(const DownSetFamily& f) {
  Json sets = Json::array();
  for (const auto& s : f.sets) sets.push_back(members(s));
  return Json{{"host", to_json(f.host)}, {"sets", sets}, {"role", role_name(f.role)}};
}

DownSetFamily family_from_json(const Json& j) {
  return guarded("downset family", [&] {
    DownSetFamily f;
    f.host = poset_from_json(j.at("host"));
    for (const auto& s : j.at("sets")) {
      auto xs = elements_of(s);
      for (Element x : xs) {
        if (x >= f.host.size()) fail(ErrorCode::IndexOutOfRange, "set member outside host");
      }
      f.sets.push_back(bits_of(f.host.size(), xs));
    }
    f.role = parse_role(j.value("role", std::string("custom")));
    return f;
  });
}

Json to_json(const MapFlags& f) {
  return Json{{"order_preserving", f.order_preserving}, {"order_embedding", f.order_embedding},
              {"join_preserving", f.join_preserving},   {"meet_preserving", f.meet_preserving},
              {"lattice_hom", f.lattice_hom},           {"injective", f.injective},
              {"surjective", f.surjective}};
}

MapFlags flags_from_json(const Json& j) {
  return guarded("flags", [&] {
    MapFlags f;
    f.order_preserving = j.at("order_preserving").get<bool>();
    f.order_embedding = j.at("order_embedding").get<bool>();
    f.join_preserving = j.at("join_preserving").get<bool>();
    f.meet_preserving = j.at("meet_preserving").get<bool>();
    f.lattice_hom = j.at("lattice_hom").get<bool>();
    f.injective = j.at("injective").get<bool>();
    f.surjective = j.at("surjective").get<bool>();
    return f;
  });
}

Json to_json(const MapWitness& w) {
  return Json{{"source", to_json(w.source)}, {"target", to_json(w.target)}, {"table", w.table}, {"certified", to_json(w.certified)}};
}

MapWitness witness_from_json(const Json& j) {
  return guarded("map witness", [&] {
    MapWitness w;
    w.source = poset_from_json(j.at("source"));
    w.target = poset_from_json(j.at("target"));
    w.table = elements_of(j.at("table"));
    if (w.table.size() != w.source.size()) fail(ErrorCode::ArityMismatch, "table length differs from source size");
    for (Element v : w.table) {
      if (v >= w.target.size()) fail(ErrorCode::IndexOutOfRange, "table value outside target");
    }
    w.certified = flags_from_json(j.at("certified"));
    return w;
  });
}

Json to_json(const Certificate& c) {
  Json payload{{"host", to_json(c.host)}, {"elements", c.elements}, {"param", c.param}};
  if (c.map) payload["map"] = to_json(*c.map);
  if (c.classification) payload["classification"] = classification_name(*c.classification);
  if (c.triple_class) payload["triple_class"] = triple_name(*c.triple_class);
  if (c.stalled_at) payload["stalled_at"] = *c.stalled_at;
  Json evidence = Json::array();
  for (const auto& a : c.evidence) evidence.push_back({{"name", a.name}, {"holds", a.holds}});
  return Json{{"kind", kind_name(c.kind)}, {"payload", payload}, {"evidence", evidence}};
}

Certificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    Certificate c;
    c.kind = parse_kind(j.at("kind").get<std::string>());
    const auto& p = j.at("payload");
    c.host = poset_from_json(p.at("host"));
    c.elements = elements_of(p.at("elements"));
    c.param = p.at("param").get<std::size_t>();
    if (p.contains("map")) c.map = witness_from_json(p.at("map"));
    if (p.contains("classification")) c.classification = parse_classification(p.at("classification").get<std::string>());
    if (p.contains("triple_class")) c.triple_class = parse_triple(p.at("triple_class").get<std::string>());
    if (p.contains("stalled_at")) c.stalled_at = p.at("stalled_at").get<std::size_t>();
    for (const auto& a : j.at("evidence")) c.evidence.push_back({a.at("name").get<std::string>(), a.at("holds").get<bool>()});
    return c;
  });
}

Json to_json(const FamilySpec& s) {
  Json j{{"family", s.family}, {"params", s.params}, {"with_bottom", s.with_bottom}};
  if (!s.scheme.empty()) j["scheme"] = s.scheme;
  return j;
}

FamilySpec spec_from_json(const Json& j) {
  return guarded("family spec", [&] {
    FamilySpec s;
    s.family = j.at("family").get<std::string>();
    if (j.contains("params")) s.params = j.at("params").get<std::map<std::string, std::int64_t>>();
    s.with_bottom = j.value("with_bottom", false);
    s.scheme = j.value("scheme", std::string());
    return s;
  });
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return guarded("file", [&] { return Json::parse(buf.str()); });
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  out << text;
}

std::string to_dot(const Poset& p, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n  rankdir=BT;\n";
  for (Element x = 0; x < p.size(); ++x) out << "  n" << x << " [label=" << dot_quote(p.label(x)) << "];\n";
  for (auto [a, b] : transitive_reduction(p)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace oc

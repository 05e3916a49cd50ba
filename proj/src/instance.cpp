#include "misap/instance.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace misap {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::runtime_error("instance format: " + msg);
}

void expect(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

std::vector<ElementId> id_list(const json& j, const char* what) {
  expect(j.is_array(), std::string(what) + " must be an array");
  std::vector<ElementId> out;
  for (const auto& v : j) {
    expect(v.is_number_unsigned(), std::string(what) + " entries must be nonnegative ints");
    out.push_back(v.get<ElementId>());
  }
  return out;
}

std::vector<std::pair<int, int>> pair_list(const json& j, const char* what) {
  expect(j.is_array(), std::string(what) + " must be an array");
  std::vector<std::pair<int, int>> out;
  for (const auto& v : j) {
    expect(v.is_array() && v.size() == 2, std::string(what) + " entries must be pairs");
    out.push_back({v[0].get<int>(), v[1].get<int>()});
  }
  return out;
}

}  // namespace

MatroidDescription MatroidDescription::uniform(std::size_t n, int k) {
  return MatroidDescription(json{{"family", "uniform"}, {"n", n}, {"k", k}});
}

MatroidDescription MatroidDescription::partition(
    std::size_t n, const std::vector<std::vector<ElementId>>& blocks,
    const std::vector<int>& capacities) {
  return MatroidDescription(json{{"family", "partition"},
                                 {"n", n},
                                 {"blocks", blocks},
                                 {"capacities", capacities}});
}

MatroidDescription MatroidDescription::laminar(std::size_t n,
                                               const std::vector<LaminarSet>& sets) {
  json js = json::array();
  for (const auto& s : sets)
    js.push_back(json{{"elements", s.elements}, {"capacity", s.capacity}});
  return MatroidDescription(json{{"family", "laminar"}, {"n", n}, {"sets", js}});
}

MatroidDescription MatroidDescription::graphic(
    std::size_t num_vertices, const std::vector<std::pair<int, int>>& edges) {
  return MatroidDescription(
      json{{"family", "graphic"}, {"vertices", num_vertices}, {"edges", edges}});
}

MatroidDescription MatroidDescription::transversal(
    std::size_t n, std::size_t num_right, const std::vector<std::vector<int>>& adj) {
  return MatroidDescription(
      json{{"family", "transversal"}, {"n", n}, {"right", num_right}, {"adj", adj}});
}

MatroidDescription MatroidDescription::gammoid(
    std::size_t num_vertices, const std::vector<std::pair<int, int>>& arcs,
    const std::vector<int>& sources, const std::vector<int>& ground_vertices) {
  return MatroidDescription(json{{"family", "gammoid"},
                                 {"vertices", num_vertices},
                                 {"arcs", arcs},
                                 {"sources", sources},
                                 {"ground", ground_vertices}});
}

MatroidDescription MatroidDescription::direct_sum(
    const std::vector<MatroidDescription>& components) {
  json comps = json::array();
  for (const auto& c : components) comps.push_back(c.to_json());
  return MatroidDescription(json{{"family", "direct_sum"}, {"components", comps}});
}

MatroidDescription MatroidDescription::restriction(const MatroidDescription& base,
                                                   const std::vector<ElementId>& keep) {
  return MatroidDescription(
      json{{"family", "restriction"}, {"base", base.to_json()}, {"keep", keep}});
}

MatroidDescription MatroidDescription::contraction(const MatroidDescription& base,
                                                   const std::vector<ElementId>& out) {
  return MatroidDescription(
      json{{"family", "contraction"}, {"base", base.to_json()}, {"out", out}});
}

MatroidDescription MatroidDescription::from_json(const json& j) {
  expect(j.is_object() && j.contains("family") && j["family"].is_string(),
         "matroid needs a 'family' tag");
  MatroidDescription d(j);
  d.build();  // validates eagerly
  return d;
}

std::string MatroidDescription::family() const {
  expect(!j_.is_null(), "matroid description is empty");
  return j_.at("family").get<std::string>();
}

std::size_t MatroidDescription::ground_size() const {
  const std::string fam = family();
  if (fam == "uniform" || fam == "partition" || fam == "laminar" || fam == "transversal")
    return j_.at("n").get<std::size_t>();
  if (fam == "graphic") return j_.at("edges").size();
  if (fam == "gammoid") return j_.at("ground").size();
  if (fam == "direct_sum") {
    std::size_t total = 0;
    for (const auto& c : j_.at("components"))
      total += MatroidDescription(c).ground_size();
    return total;
  }
  if (fam == "restriction") return j_.at("keep").size();
  if (fam == "contraction")
    return MatroidDescription(j_.at("base")).ground_size() - j_.at("out").size();
  fail("unknown matroid family '" + fam + "'");
}

MatroidPtr MatroidDescription::build() const {
  const std::string fam = family();
  try {
    if (fam == "uniform")
      return make_uniform_matroid(j_.at("n").get<std::size_t>(), j_.at("k").get<int>());
    if (fam == "partition") {
      std::vector<std::vector<ElementId>> blocks;
      for (const auto& b : j_.at("blocks")) blocks.push_back(id_list(b, "block"));
      return make_partition_matroid(j_.at("n").get<std::size_t>(), blocks,
                                    j_.at("capacities").get<std::vector<int>>());
    }
    if (fam == "laminar") {
      std::vector<LaminarSet> sets;
      for (const auto& s : j_.at("sets"))
        sets.push_back({id_list(s.at("elements"), "laminar set"),
                        s.at("capacity").get<int>()});
      return make_laminar_matroid(j_.at("n").get<std::size_t>(), sets);
    }
    if (fam == "graphic")
      return make_graphic_matroid(j_.at("vertices").get<std::size_t>(),
                                  pair_list(j_.at("edges"), "edges"));
    if (fam == "transversal")
      return make_transversal_matroid(j_.at("n").get<std::size_t>(),
                                      j_.at("right").get<std::size_t>(),
                                      j_.at("adj").get<std::vector<std::vector<int>>>());
    if (fam == "gammoid")
      return make_gammoid(j_.at("vertices").get<std::size_t>(),
                          pair_list(j_.at("arcs"), "arcs"),
                          j_.at("sources").get<std::vector<int>>(),
                          j_.at("ground").get<std::vector<int>>());
    if (fam == "direct_sum") {
      std::vector<MatroidPtr> comps;
      for (const auto& c : j_.at("components"))
        comps.push_back(MatroidDescription(c).build());
      return make_direct_sum(comps);
    }
    if (fam == "restriction") {
      MatroidPtr base = MatroidDescription(j_.at("base")).build();
      auto keep = id_list(j_.at("keep"), "keep");
      return make_reindexed_minor(base, keep, ElementSet(base->universe()));
    }
    if (fam == "contraction") {
      MatroidPtr base = MatroidDescription(j_.at("base")).build();
      auto out = id_list(j_.at("out"), "out");
      ElementSet outset(base->universe());
      for (ElementId e : out) {
        expect(e < base->universe(), "contraction: element out of range");
        outset.insert(e);
      }
      std::vector<ElementId> keep;
      for (ElementId e = 0; e < base->universe(); ++e)
        if (!outset.test(e)) keep.push_back(e);
      return make_reindexed_minor(base, keep, outset);
    }
  } catch (const json::exception& e) {
    fail("bad '" + fam + "' description: " + e.what());
  } catch (const std::invalid_argument& e) {
    fail("bad '" + fam + "' description: " + e.what());
  }
  fail("unknown matroid family '" + fam + "'");
}

json InstanceFile::to_json() const {
  return json{{"version", version},
              {"matroid", matroid.to_json()},
              {"parts", parts},
              {"metadata", metadata.is_null() ? json::object() : metadata}};
}

InstanceFile InstanceFile::from_json(const json& j) {
  expect(j.is_object(), "instance must be a JSON object");
  expect(j.contains("version") && j["version"].is_number_integer(),
         "missing 'version' field");
  int v = j["version"].get<int>();
  expect(v == 1, "unsupported version " + std::to_string(v));
  expect(j.contains("matroid"), "missing 'matroid' field");
  expect(j.contains("parts"), "missing 'parts' field");

  InstanceFile f;
  f.version = v;
  f.matroid = MatroidDescription::from_json(j["matroid"]);
  expect(j["parts"].is_array(), "'parts' must be an array");
  for (const auto& p : j["parts"]) f.parts.push_back(id_list(p, "part"));
  f.metadata = j.value("metadata", json::object());
  f.build();  // validate the partition-instance invariants up front
  return f;
}

std::string InstanceFile::serialize() const { return to_json().dump(2) + "\n"; }

InstanceFile InstanceFile::parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("JSON parse error: ") + e.what());
  }
  return from_json(j);
}

void InstanceFile::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot open '" + path + "' for writing");
  out << serialize();
}

InstanceFile InstanceFile::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

PartitionInstance InstanceFile::build() const {
  return PartitionInstance::create(matroid.build(), parts);
}

}  // namespace misap

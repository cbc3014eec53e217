#include "rtile/fixtures.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rtile/adversary.hpp"
#include "rtile/graph_io.hpp"
#include "rtile/oracles.hpp"
#include "rtile/pattern.hpp"

namespace rtile {

using nlohmann::json;

namespace {

std::string fnv_hex(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(h));
  return buffer;
}

std::string field(const json& params, const char* name) {
  return params.contains(name) ? params.at(name).get<std::string>() : std::string("-");
}

VertexSet set_of(std::size_t n, const json& list) {
  VertexSet s(n);
  for (const auto& v : list) {
    const auto x = v.get<std::size_t>();
    if (x >= n) throw std::invalid_argument("fixture vertex out of range");
    s.insert(static_cast<Vertex>(x));
  }
  return s;
}

PatternStats pattern_of(const json& params) {
  return PatternStats(parse_graph(params.at("pattern").get<std::string>()));
}

json evaluate(std::string_view op, const json& params, double budget) {
  if (op == "m2_density") return pattern_of(params).m2().to_string();
  if (op == "exact_rt") {
    const auto r = exact_rt(pattern_of(params), parse_graph(params.at("host").get<std::string>()), budget);
    if (r.exact) return r.upper;
    return json{{"lower", r.lower}, {"upper", r.upper}};
  }
  if (op == "good_copy_count") {
    const ColouredGraph g = parse_coloured_graph(params.at("host").get<std::string>());
    return good_copy_count(g, pattern_of(params), set_of(g.order(), params.at("a")),
                           set_of(g.order(), params.at("b")), budget);
  }
  if (op == "richness_decide") {
    const auto v = richness_decide(parse_graph(params.at("host").get<std::string>()), pattern_of(params),
                                   params.at("s").get<std::size_t>(), budget);
    return json{{"rich", v.rich},
                {"mode", v.mode == RichnessMode::exhaustive ? "exhaustive" : "sampled"}};
  }
  if (op == "aux_degree_check") {
    const auto n = params.at("n").get<std::size_t>();
    const VertexSet a = set_of(n, params.at("a"));
    const PatternStats h = pattern_of(params);
    const auto aux = build_aux_hypergraph(n, a, a.complement(), h, budget);
    const auto report = aux_degree_check(aux, h);
    json delta = json::array();
    for (const auto& row : report.rows) delta.push_back(row.delta);
    return json{{"edges", aux.edge_count()}, {"delta", delta}, {"pass", report.all_pass()}};
  }
  if (op == "clique_count")
    return count_cliques(parse_graph(params.at("host").get<std::string>()),
                         params.at("r").get<std::size_t>(), budget);
  throw std::invalid_argument("unknown fixture op '" + std::string(op) + "'");
}

}  // namespace

std::string fixture_key(std::string_view op, std::string_view params_json) {
  const json params = json::parse(params_json);
  return std::string(op) + "/" + fnv_hex(field(params, "host")) + "/" +
         fnv_hex(field(params, "pattern")) + "/" + fnv_hex(params.dump());
}

std::string evaluate_fixture(std::string_view op, std::string_view params_json, double budget) {
  return evaluate(op, json::parse(params_json), budget).dump();
}

FixtureEntry make_fixture(std::string op, std::string label, std::string params_json, double budget) {
  FixtureEntry entry;
  entry.params = json::parse(params_json).dump();
  entry.key = fixture_key(op, entry.params);
  entry.value = evaluate_fixture(op, entry.params, budget);
  entry.op = std::move(op);
  entry.label = std::move(label);
  return entry;
}

std::vector<FixtureEntry> default_fixture_corpus(double budget) {
  std::vector<FixtureEntry> out;
  auto pattern_text = [](const char* name) { return format_graph(named_pattern(name).graph()); };
  auto add = [&](const char* op, std::string label, const json& params) {
    out.push_back(make_fixture(op, std::move(label), params.dump(), budget));
  };

  for (const char* name : {"k2", "k3", "k4", "k5", "p3", "p4", "c4", "c5", "matching-2"})
    add("m2_density", std::string("m2(") + name + ")", {{"pattern", pattern_text(name)}});

  const std::pair<const char*, std::size_t> rt_cases[] = {
      {"k2", 3}, {"k2", 4}, {"k2", 5}, {"k2", 6}, {"k3", 5}, {"k3", 6},
      {"k3", 7}, {"p3", 4}, {"p3", 5}, {"p3", 6}};
  for (auto [name, n] : rt_cases)
    add("exact_rt", "Rt(" + std::string(name) + ",K" + std::to_string(n) + ")",
        {{"pattern", pattern_text(name)}, {"host", format_graph(Graph::complete(n))}});

  const json a6 = {0, 1, 2};
  const json b6 = {3, 4, 5};
  add("good_copy_count", "good(K6 all red,k3)",
      {{"pattern", pattern_text("k3")},
       {"host", format_coloured_graph(ColouredGraph::monochromatic(Graph::complete(6), Colour::red))},
       {"a", a6}, {"b", b6}});
  add("good_copy_count", "good(K6 all blue,k3)",
      {{"pattern", pattern_text("k3")},
       {"host", format_coloured_graph(ColouredGraph::monochromatic(Graph::complete(6), Colour::blue))},
       {"a", a6}, {"b", b6}});
  add("good_copy_count", "good(empty6,k3)",
      {{"pattern", pattern_text("k3")},
       {"host", format_coloured_graph(ColouredGraph::monochromatic(Graph(6), Colour::red))},
       {"a", a6}, {"b", b6}});
  AdversarySpec uniform;
  uniform.seed = 7;
  add("good_copy_count", "good(K5 uniform seed 7,k3)",
      {{"pattern", pattern_text("k3")},
       {"host", format_coloured_graph(colour_with(Graph::complete(5), uniform))},
       {"a", {0, 1}}, {"b", {2, 3, 4}}});

  add("richness_decide", "rich(K4,k3,s=2)",
      {{"pattern", pattern_text("k3")}, {"host", format_graph(Graph::complete(4))}, {"s", 2}});
  add("richness_decide", "rich(K5,k3,s=2)",
      {{"pattern", pattern_text("k3")}, {"host", format_graph(Graph::complete(5))}, {"s", 2}});
  add("richness_decide", "rich(K6,k3,s=3)",
      {{"pattern", pattern_text("k3")}, {"host", format_graph(Graph::complete(6))}, {"s", 3}});

  const std::pair<const char*, std::size_t> aux_cases[] = {{"k3", 4}, {"k3", 6}, {"k3", 8}, {"p4", 6}};
  for (auto [name, n] : aux_cases) {
    json a = json::array();
    for (std::size_t v = 0; v < n / 2; ++v) a.push_back(v);
    add("aux_degree_check", "aux(" + std::string(name) + ",n=" + std::to_string(n) + ")",
        {{"pattern", pattern_text(name)}, {"n", n}, {"a", a}});
  }

  add("clique_count", "K3 in K10", {{"host", format_graph(Graph::complete(10))}, {"r", 3}});
  Graph near = Graph::complete(9);
  Graph k9_minus(9);
  for (const Edge& e : near.edges())
    if (!(e.u % 2 == 0 && e.v == e.u + 1)) k9_minus.add_edge(e.u, e.v);
  add("clique_count", "K3 in K9 minus a matching", {{"host", format_graph(k9_minus)}, {"r", 3}});
  return out;
}

namespace {

std::string file_name(const std::string& key) {
  std::string out = key;
  std::replace(out.begin(), out.end(), '/', '_');
  return out + ".json";
}

}  // namespace

void write_fixtures(const std::string& dir, const std::vector<FixtureEntry>& entries) {
  std::filesystem::create_directories(dir);
  for (const auto& e : entries) {
    json j;
    j["key"] = e.key;
    j["op"] = e.op;
    j["label"] = e.label;
    j["params"] = json::parse(e.params);
    j["value"] = json::parse(e.value);
    std::ofstream out(std::filesystem::path(dir) / file_name(e.key));
    if (!out) throw std::runtime_error("cannot write fixture in " + dir);
    out << j.dump(2) << "\n";
  }
}

std::vector<FixtureEntry> read_fixtures(const std::string& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& item : std::filesystem::directory_iterator(dir))
    if (item.is_regular_file() && item.path().extension() == ".json") files.push_back(item.path());
  std::sort(files.begin(), files.end());
  std::vector<FixtureEntry> out;
  for (const auto& path : files) {
    std::ifstream in(path);
    const json j = json::parse(in);
    FixtureEntry e;
    e.key = j.at("key").get<std::string>();
    e.op = j.at("op").get<std::string>();
    e.label = j.value("label", "");
    e.params = j.at("params").dump();
    e.value = j.at("value").dump();
    out.push_back(std::move(e));
  }
  return out;
}

FixtureReport verify_fixtures(const std::string& dir, double budget) {
  FixtureReport report;
  if (!std::filesystem::is_directory(dir)) {
    report.errors.push_back(dir + ": not a directory");
    return report;
  }
  std::vector<FixtureEntry> entries;
  try {
    entries = read_fixtures(dir);
  } catch (const std::exception& e) {
    report.errors.push_back(dir + ": " + e.what());
    return report;
  }
  if (entries.empty()) report.warnings.push_back("no fixtures found in " + dir + "; zero checked");
  for (const auto& e : entries) {
    ++report.checked;
    try {
      if (fixture_key(e.op, e.params) != e.key) {
        report.errors.push_back(e.key + ": key does not match op and params");
        continue;
      }
      const json expected = json::parse(e.value);
      const json actual = json::parse(evaluate_fixture(e.op, e.params, budget));
      if (expected != actual) report.mismatches.push_back(e.key);
    } catch (const std::exception& ex) {
      report.errors.push_back(e.key + ": " + ex.what());
    }
  }
  return report;
}

}  // namespace rtile

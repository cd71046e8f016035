#include "rigid/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rigid/error.hpp"
#include "rigid/random.hpp"

namespace rigid {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports "at line L, column C".
    throw InputError(std::string("syntax error: ") + e.what());
  }
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw InputError(path + ": expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path + "." + key + ": missing");
  return *it;
}

int as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw InputError(path + ": expected an integer");
  return v.get<int>();
}

double as_number(const json& v, const std::string& path) {
  if (!v.is_number()) throw InputError(path + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw InputError(path + ": not finite");
  return x;
}

void check_format(const json& root) {
  auto it = root.find("format");
  if (it != root.end() && (!it->is_number_integer() || it->get<int>() != kFileFormatVersion)) {
    throw InputError("format: unsupported version (expected " + std::to_string(kFileFormatVersion) + ")");
  }
}

Configuration parse_points(const json& vertices, int dimension, const std::string& path) {
  if (!vertices.is_array()) throw InputError(path + ": expected an array");
  if (vertices.empty()) throw InputError(path + ": at least one vertex is required");
  Eigen::MatrixXd pts(static_cast<Eigen::Index>(vertices.size()), dimension);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string vp = path + "[" + std::to_string(i) + "]";
    const json& v = vertices[i];
    if (!v.is_array() || static_cast<int>(v.size()) != dimension) {
      throw InputError(vp + ": expected " + std::to_string(dimension) + " coordinates");
    }
    for (int k = 0; k < dimension; ++k) {
      pts(static_cast<Eigen::Index>(i), k) = as_number(v[static_cast<std::size_t>(k)], vp + "[" + std::to_string(k) + "]");
    }
  }
  return Configuration(dimension, std::move(pts));
}

json points_json(const Configuration& p) {
  json out = json::array();
  for (int i = 0; i < p.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < p.dimension(); ++k) row.push_back(p.points()(i, k));
    out.push_back(std::move(row));
  }
  return out;
}

struct ParsedMembers {
  std::vector<Member> members;
  std::optional<std::map<VertexPair, double>> stress;
};

ParsedMembers parse_members(const json& members, int vertex_count, const std::string& path) {
  if (!members.is_array()) throw InputError(path + ": expected an array");
  ParsedMembers out;
  std::map<VertexPair, double> stress;
  std::size_t stressed = 0;
  for (std::size_t k = 0; k < members.size(); ++k) {
    const std::string mp = path + "[" + std::to_string(k) + "]";
    const json& m = members[k];
    const int i = as_int(field(m, "i", mp), mp + ".i");
    const int j = as_int(field(m, "j", mp), mp + ".j");
    for (const auto& [idx, name] : {std::pair{i, ".i"}, std::pair{j, ".j"}}) {
      if (idx < 0 || idx >= vertex_count) {
        throw InputError(mp + name + ": index " + std::to_string(idx) + " out of range [0, " +
                         std::to_string(vertex_count) + ")");
      }
    }
    if (i == j) throw InputError(mp + ": member joins vertex " + std::to_string(i) + " to itself");
    MemberKind kind = MemberKind::Bar;
    if (auto it = m.find("kind"); it != m.end()) {
      if (!it->is_string()) throw InputError(mp + ".kind: expected a string");
      const auto parsed = parse_member_kind(it->get<std::string>());
      if (!parsed) {
        throw InputError(mp + ".kind: unknown kind \"" + it->get<std::string>() + "\" (expected bar, cable or strut)");
      }
      kind = *parsed;
    }
    const VertexPair e(i, j);
    for (const Member& prev : out.members) {
      if (prev.ends == e) throw InputError(mp + ": duplicate member {" + std::to_string(e.first()) + "," + std::to_string(e.second()) + "}");
    }
    out.members.push_back({e, kind});
    if (auto it = m.find("stress"); it != m.end() && !it->is_null()) {
      stress.emplace(e, as_number(*it, mp + ".stress"));
      ++stressed;
    }
  }
  if (stressed != 0 && stressed != members.size()) {
    throw InputError(path + ": stress given on " + std::to_string(stressed) + " of " +
                     std::to_string(members.size()) + " members; give it on all or none");
  }
  if (stressed != 0) out.stress = std::move(stress);
  return out;
}

json members_json(const TensegrityGraph& g, const std::optional<Stress>& stress) {
  json out = json::array();
  for (const Member& m : g.members()) {
    json rec = {{"i", m.ends.first()}, {"j", m.ends.second()}, {"kind", std::string(to_string(m.kind))}};
    if (stress) rec["stress"] = stress->at(m.ends);
    out.push_back(std::move(rec));
  }
  return out;
}

json stress_json(const Stress& s) {
  json out = json::array();
  for (const auto& [e, w] : s.values()) out.push_back({{"i", e.first()}, {"j", e.second()}, {"value", w}});
  return out;
}

Stress parse_stress(const json& arr, const std::string& path) {
  if (!arr.is_array()) throw InputError(path + ": expected an array");
  std::map<VertexPair, double> values;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string sp = path + "[" + std::to_string(k) + "]";
    const VertexPair e(as_int(field(arr[k], "i", sp), sp + ".i"), as_int(field(arr[k], "j", sp), sp + ".j"));
    values[e] = as_number(field(arr[k], "value", sp), sp + ".value");
  }
  return Stress(std::move(values));
}

}  // namespace

ParsedFramework parse_framework(std::string_view text) {
  const json root = parse_json(text);
  if (!root.is_object()) throw InputError("top level: expected an object");
  check_format(root);
  const int dimension = as_int(field(root, "dimension", "$"), "dimension");
  if (dimension < 1) throw InputError("dimension: must be positive");
  Configuration p = parse_points(field(root, "vertices", "$"), dimension, "vertices");
  const int n = p.size();
  ParsedMembers pm = parse_members(field(root, "members", "$"), n, "members");
  Framework f(TensegrityGraph(n, std::move(pm.members)), std::move(p));
  std::optional<Stress> stress;
  if (pm.stress) stress = Stress(std::move(*pm.stress));
  return {std::move(f), std::move(stress)};
}

std::string write_framework(const Framework& f, const std::optional<Stress>& stress) {
  if (stress) stress->require_keyed_by(f.graph());
  json root = {{"format", kFileFormatVersion},
               {"dimension", f.dimension()},
               {"vertices", points_json(f.configuration())},
               {"members", members_json(f.graph(), stress)}};
  return root.dump(2) + "\n";
}

std::string write_certificate(const Certificate& c) {
  json root = {{"format", kFileFormatVersion},
               {"check", std::string(to_string(c.check))},
               {"verdict", std::string(to_string(c.verdict))},
               {"dimension", c.dimension},
               {"fingerprint", c.fingerprint},
               {"graph", {{"vertex_count", c.graph.vertex_count()}, {"members", members_json(c.graph, std::nullopt)}}},
               {"ranks",
                {{"rigidity", c.witness ? json(c.witness->rigidity_rank) : json(nullptr)},
                 {"stress", c.witness ? json(c.witness->stress_rank) : json(nullptr)},
                 {"expected_rigidity", c.expected_rigidity_rank},
                 {"expected_stress", c.expected_stress_rank}}},
               {"tolerance",
                {{"rank_threshold_factor", c.tolerance.rank_threshold_factor}, {"psd_slack", c.tolerance.psd_slack}}},
               {"rng", std::string(SeededRandomSource::kAlgorithm)},
               {"seed", c.seed},
               {"trials", c.trials},
               {"reason", c.reason}};
  if (c.witness) {
    root["witness"] = {{"vertices", points_json(c.witness->configuration)}, {"stress", stress_json(c.witness->stress)}};
  } else {
    root["witness"] = nullptr;
  }
  return root.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text) {
  const json root = parse_json(text);
  if (!root.is_object()) throw InputError("top level: expected an object");
  check_format(root);
  Certificate c;
  const json& check = field(root, "check", "$");
  const json& verdict = field(root, "verdict", "$");
  if (!check.is_string() || !parse_check_kind(check.get<std::string>())) throw InputError("check: unknown check");
  if (!verdict.is_string() || !parse_verdict(verdict.get<std::string>())) throw InputError("verdict: unknown verdict");
  c.check = *parse_check_kind(check.get<std::string>());
  c.verdict = *parse_verdict(verdict.get<std::string>());
  c.dimension = as_int(field(root, "dimension", "$"), "dimension");
  if (c.dimension < 1) throw InputError("dimension: must be positive");
  const json& graph = field(root, "graph", "$");
  const int n = as_int(field(graph, "vertex_count", "graph"), "graph.vertex_count");
  if (n < 1) throw InputError("graph.vertex_count: must be positive");
  c.graph = TensegrityGraph(n, parse_members(field(graph, "members", "graph"), n, "graph.members").members);
  c.fingerprint = graph_fingerprint(c.graph);
  if (auto it = root.find("fingerprint"); it != root.end() && it->is_string() && it->get<std::string>() != c.fingerprint) {
    throw InputError("fingerprint: does not match the embedded graph");
  }
  const json& ranks = field(root, "ranks", "$");
  c.expected_rigidity_rank = as_int(field(ranks, "expected_rigidity", "ranks"), "ranks.expected_rigidity");
  c.expected_stress_rank = as_int(field(ranks, "expected_stress", "ranks"), "ranks.expected_stress");
  const json& tol = field(root, "tolerance", "$");
  c.tolerance.rank_threshold_factor = as_number(field(tol, "rank_threshold_factor", "tolerance"), "tolerance.rank_threshold_factor");
  c.tolerance.psd_slack = as_number(field(tol, "psd_slack", "tolerance"), "tolerance.psd_slack");
  const json& seed = field(root, "seed", "$");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) throw InputError("seed: expected an integer");
  c.seed = seed.get<std::uint64_t>();
  c.trials = as_int(field(root, "trials", "$"), "trials");
  if (auto it = root.find("reason"); it != root.end() && it->is_string()) c.reason = it->get<std::string>();
  if (auto it = root.find("witness"); it != root.end() && !it->is_null()) {
    Configuration p = parse_points(field(*it, "vertices", "witness"), c.dimension, "witness.vertices");
    Stress s = parse_stress(field(*it, "stress", "witness"), "witness.stress");
    const int r = field(ranks, "rigidity", "ranks").is_null() ? 0 : as_int(field(ranks, "rigidity", "ranks"), "ranks.rigidity");
    const int sr = field(ranks, "stress", "ranks").is_null() ? 0 : as_int(field(ranks, "stress", "ranks"), "ranks.stress");
    c.witness = Witness{std::move(p), std::move(s), r, sr};
  }
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write");
  out << contents;
  if (!out) throw InputError(path + ": write failed");
}

}  // namespace rigid

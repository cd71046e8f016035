#include "rigid/cli.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rigid/combine.hpp"
#include "rigid/error.hpp"
#include "rigid/generators.hpp"
#include "rigid/io.hpp"
#include "rigid/svg.hpp"

namespace rigid {

namespace {

using nlohmann::json;

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

ParsedFramework load(const std::string& path) {
  try {
    return parse_framework(read_file(path));
  } catch (const RigidityError& e) {
    const std::string msg = e.what();
    if (msg.rfind(path + ":", 0) == 0) throw;
    throw InputError(path + ": " + msg);
  }
}

std::vector<std::pair<int, int>> parse_shared(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InputError("--shared: expected a:b pairs, got \"" + item + "\"");
    try {
      std::size_t used_a = 0;
      std::size_t used_b = 0;
      const std::string a = item.substr(0, colon);
      const std::string b = item.substr(colon + 1);
      const int ia = std::stoi(a, &used_a);
      const int ib = std::stoi(b, &used_b);
      if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(item);
      pairs.emplace_back(ia, ib);
    } catch (const std::logic_error&) {
      throw InputError("--shared: bad pair \"" + item + "\"");
    }
  }
  if (pairs.empty()) throw InputError("--shared: no pairs given");
  return pairs;
}

std::string join_shared(const std::vector<std::pair<int, int>>& pairs) {
  std::string s;
  for (const auto& [a, b] : pairs) s += (s.empty() ? "" : ",") + std::to_string(a) + ":" + std::to_string(b);
  return s;
}

int worst(int a, int b) { return std::max(a, b); }

}  // namespace

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::CertifiedYes: return kExitYes;
    case Verdict::CertifiedNo:
    case Verdict::ProbablyNo: return kExitNo;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Certify local, global and universal rigidity of frameworks and tensegrities", "rigid"};
  app.require_subcommand(1);

  std::string output;
  std::uint64_t seed = 1;
  int trials = 8;
  double tol = 1e-10;

  auto* certify = app.add_subcommand("certify", "Stress-rank certificate of generic global rigidity (bars)");
  std::vector<std::string> certify_files;
  std::optional<int> dim;
  int jobs = 1;
  certify->add_option("files", certify_files, "Framework files")->required();
  certify->add_option("--dim", dim, "Dimension (default: the file's)");
  certify->add_option("--seed", seed, "Random seed");
  certify->add_option("--trials", trials, "Random configurations to try")->check(CLI::PositiveNumber);
  certify->add_option("--tol", tol, "Relative rank threshold factor")->check(CLI::PositiveNumber);
  certify->add_option("--jobs", jobs, "Files certified concurrently")->check(CLI::PositiveNumber);
  certify->add_option("-o,--output", output, "Write the certificate here instead of stdout");

  auto* certify2d = app.add_subcommand("certify2d", "Combinatorial planar certificate (redundant rigidity + 3-connectivity)");
  std::string file;
  certify2d->add_option("file", file, "Framework file")->required();
  certify2d->add_option("-o,--output", output, "Output path");

  auto* superstable = app.add_subcommand("superstable", "Check super stability of a tensegrity with its stress");
  superstable->add_option("file", file, "Tensegrity file with a stress on every member")->required();
  superstable->add_option("--tol", tol, "Relative rank threshold factor")->check(CLI::PositiveNumber);
  superstable->add_option("-o,--output", output, "Output path");

  std::string file2;
  std::string shared_text;
  std::vector<int> pair_arg;
  std::string framework_out;
  auto* combine = app.add_subcommand("combine", "Glue two bar frameworks on d+1 vertices and erase a common bar");
  combine->add_option("first", file, "First framework")->required();
  combine->add_option("second", file2, "Second framework")->required();
  combine->add_option("--shared", shared_text, "Shared vertices as first:second,...")->required();
  combine->add_option("--erase-bar", pair_arg, "Bar to erase, in the first framework's indices")->expected(2)->required();
  combine->add_option("--seed", seed, "Random seed");
  combine->add_option("--tol", tol, "Relative rank threshold factor")->check(CLI::PositiveNumber);
  combine->add_option("--framework-out", framework_out, "Also write the combined framework file here");
  combine->add_option("-o,--output", output, "Output path");

  auto* superimpose = app.add_subcommand("superimpose", "Superimpose two super stable tensegrities");
  superimpose->add_option("first", file, "First tensegrity (with stress)")->required();
  superimpose->add_option("second", file2, "Second tensegrity (with stress)")->required();
  superimpose->add_option("--shared", shared_text, "Shared vertices as first:second,...")->required();
  superimpose->add_option("--cancel", pair_arg, "Cable/strut pair to cancel, in the first tensegrity's indices")
      ->expected(2)
      ->required();
  superimpose->add_option("--framework-out", framework_out, "Also write the tensegrity with its stress here");
  superimpose->add_option("--tol", tol, "Relative rank threshold factor")->check(CLI::PositiveNumber);
  superimpose->add_option("-o,--output", output, "Output path");

  auto* pebble = app.add_subcommand("pebble", "Planar generic rigidity by the (2,3) pebble game");
  pebble->add_option("file", file, "Framework file")->required();

  auto* generate = app.add_subcommand("generate", "Write a built-in example framework");
  std::string name;
  std::string part = "first";
  bool list = false;
  int gen_dim = 2;
  generate->add_option("name", name, "Example name, complete:N or bipartite:A:B");
  generate->add_flag("--list", list, "List example names");
  generate->add_option("--part", part, "For glue instances: first, second or shared")
      ->check(CLI::IsMember({"first", "second", "shared"}));
  generate->add_option("--dim", gen_dim, "Dimension for complete/bipartite")->check(CLI::PositiveNumber);
  generate->add_option("--seed", seed, "Seed for complete/bipartite configurations");
  generate->add_option("-o,--output", output, "Output path");

  auto* svg = app.add_subcommand("export-svg", "Draw a framework as SVG");
  svg->add_option("file", file, "Framework file")->required();
  svg->add_option("-o,--output", output, "SVG path")->required();

  auto* verify = app.add_subcommand("verify-certificate", "Replay a certificate from its seed and tolerances");
  verify->add_option("file", file, "Certificate file, or a combine/superimpose result")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInputError;
  }

  const NumericTolerance numeric{tol, NumericTolerance{}.psd_slack};

  try {
    if (certify->parsed()) {
      const std::size_t count = certify_files.size();
      std::vector<std::optional<Certificate>> results(count);
      std::vector<std::string> errors(count);
      std::atomic<std::size_t> next{0};
      auto work = [&] {
        for (std::size_t k = next++; k < count; k = next++) {
          try {
            const ParsedFramework pf = load(certify_files[k]);
            results[k] = certify_generic_global_rigidity(pf.framework.graph(), dim.value_or(pf.framework.dimension()),
                                                         trials, seed, numeric);
          } catch (const RigidityError& e) {
            errors[k] = e.what();
          }
        }
      };
      const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), count);
      std::vector<std::thread> pool;
      for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
      work();
      for (auto& th : pool) th.join();

      int code = kExitYes;
      std::vector<std::string> docs;
      for (std::size_t k = 0; k < count; ++k) {
        if (!results[k]) {
          err << "error: " << errors[k] << "\n";
          code = worst(code, kExitInputError);
          continue;
        }
        docs.push_back(write_certificate(*results[k]));
        err << certify_files[k] << ": " << to_string(results[k]->verdict) << "\n";
        code = worst(code, exit_code_for(results[k]->verdict));
      }
      if (count == 1) {
        if (!docs.empty()) emit(docs.front(), output, out);
      } else {
        std::string joined = "[\n";
        for (std::size_t k = 0; k < docs.size(); ++k) joined += docs[k] + (k + 1 < docs.size() ? ",\n" : "");
        emit(joined + "]\n", output, out);
      }
      return code;
    }

    if (certify2d->parsed()) {
      const Certificate c = certify_global_rigidity_2d_combinatorial(load(file).framework.graph());
      emit(write_certificate(c), output, out);
      return exit_code_for(c.verdict);
    }

    if (superstable->parsed()) {
      const ParsedFramework pf = load(file);
      if (!pf.stress) throw InputError(file + ": members carry no stress");
      const Certificate c = check_super_stability(pf.framework, *pf.stress, numeric);
      emit(write_certificate(c), output, out);
      return exit_code_for(c.verdict);
    }

    if (combine->parsed()) {
      const ParsedFramework a = load(file);
      const ParsedFramework b = load(file2);
      const SharedVertexMap shared(a.framework.vertex_count(), b.framework.vertex_count(), parse_shared(shared_text));
      const VertexPair bar(pair_arg[0], pair_arg[1]);
      const double coord_tol = std::max(default_tolerance(a.framework.configuration()),
                                        default_tolerance(b.framework.configuration()));
      const CombineResult r = combine_erase_bar(a.framework, b.framework, shared, bar, seed, coord_tol, numeric);
      const Certificate c = certify_with_witness(r.framework, r.witness, numeric);
      const VertexPair erased(shared.from_first(bar.first()), shared.from_first(bar.second()));
      json doc = {{"format", kFileFormatVersion},
                  {"framework", json::parse(write_framework(r.framework, r.witness))},
                  {"shared", join_shared(shared.pairs())},
                  {"erased_bar", {erased.first(), erased.second()}},
                  {"erased_bar_stress", r.erased_bar_stress},
                  {"witness_rank", r.witness_rank},
                  {"expected_rank", r.expected_rank},
                  {"union_fallback", r.union_fallback},
                  {"status", std::string(to_string(r.status))},
                  {"reason", r.reason},
                  {"certificate", json::parse(write_certificate(c))}};
      emit(doc.dump(2) + "\n", output, out);
      if (!framework_out.empty()) write_file(framework_out, write_framework(r.framework));
      return r.status == Verdict::CertifiedYes ? exit_code_for(c.verdict) : exit_code_for(r.status);
    }

    if (superimpose->parsed()) {
      const ParsedFramework a = load(file);
      const ParsedFramework b = load(file2);
      if (!a.stress || !b.stress) throw InputError("superimpose: both inputs need a stress on every member");
      const SharedVertexMap shared(a.framework.vertex_count(), b.framework.vertex_count(), parse_shared(shared_text));
      const double coord_tol = std::max(default_tolerance(a.framework.configuration()),
                                        default_tolerance(b.framework.configuration()));
      const SuperimposeResult r = superimpose_tensegrities(a.framework, *a.stress, b.framework, *b.stress, shared,
                                                           VertexPair(pair_arg[0], pair_arg[1]), coord_tol, numeric);
      const Certificate c = check_super_stability(r.framework, r.stress, numeric);
      json doc = {{"format", kFileFormatVersion},
                  {"framework", json::parse(write_framework(r.framework, r.stress))},
                  {"certificate", json::parse(write_certificate(c))}};
      if (!framework_out.empty()) write_file(framework_out, write_framework(r.framework, r.stress));
      emit(doc.dump(2) + "\n", output, out);
      return exit_code_for(c.verdict);
    }

    if (pebble->parsed()) {
      const bool rigid = pebble_game_rigid_2d(load(file).framework.graph());
      out << (rigid ? "rigid" : "flexible") << "\n";
      return rigid ? kExitYes : kExitNo;
    }

    if (generate->parsed()) {
      const ExampleRegistry& reg = paper_examples();
      if (list) {
        for (const auto& [key, ex] : reg.frameworks) out << key << "\n";
        for (const auto& [key, ex] : reg.glue_instances) out << key << " (glue: --part first|second|shared)\n";
        out << "complete:N\nbipartite:A:B\n";
        return kExitYes;
      }
      if (name.empty()) throw InputError("generate: give an example name or --list");
      if (name.rfind("complete:", 0) == 0 || name.rfind("bipartite:", 0) == 0) {
        std::vector<int> sizes;
        std::stringstream ss(name.substr(name.find(':') + 1));
        std::string tok;
        while (std::getline(ss, tok, ':')) {
          try {
            sizes.push_back(std::stoi(tok));
          } catch (const std::logic_error&) {
            throw InputError("generate: bad size \"" + tok + "\"");
          }
        }
        const bool complete = name[0] == 'c';
        if (sizes.size() != (complete ? 1u : 2u)) throw InputError("generate: bad size list in \"" + name + "\"");
        const TensegrityGraph g = complete ? complete_graph(sizes[0]) : complete_bipartite(sizes[0], sizes[1]);
        SeededRandomSource rng(seed);
        emit(write_framework(Framework(g, random_configuration(g.vertex_count(), gen_dim, rng))), output, out);
        return kExitYes;
      }
      if (auto it = reg.frameworks.find(name); it != reg.frameworks.end()) {
        emit(write_framework(it->second.framework, it->second.stress), output, out);
        return kExitYes;
      }
      if (auto it = reg.glue_instances.find(name); it != reg.glue_instances.end()) {
        const GlueInstance& g = it->second;
        if (part == "shared") {
          emit(join_shared(g.shared) + "\n", output, out);
        } else if (part == "first") {
          emit(write_framework(g.first, g.first_stress), output, out);
        } else {
          emit(write_framework(g.second, g.second_stress), output, out);
        }
        return kExitYes;
      }
      throw InputError("generate: unknown example \"" + name + "\" (see --list)");
    }

    if (svg->parsed()) {
      export_svg(load(file).framework, output);
      return kExitYes;
    }

    if (verify->parsed()) {
      // combine and superimpose wrap their certificate in a larger document.
      std::string text = read_file(file);
      const json doc = json::parse(text, nullptr, false);
      if (doc.is_object() && doc.contains("certificate")) text = doc["certificate"].dump();
      const Certificate stored = parse_certificate(text);
      const Certificate again = replay(stored);
      bool same = again.verdict == stored.verdict;
      if (same && stored.witness && again.witness) {
        same = stored.witness->rigidity_rank == again.witness->rigidity_rank &&
               stored.witness->stress_rank == again.witness->stress_rank;
      }
      out << "replayed " << to_string(stored.check) << ": " << to_string(again.verdict)
          << (same ? " (matches)" : " (MISMATCH, stored " + std::string(to_string(stored.verdict)) + ")") << "\n";
      return same ? kExitYes : kExitNo;
    }
  } catch (const RigidityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  err << app.help();
  return kExitInputError;
}

}  // namespace rigid

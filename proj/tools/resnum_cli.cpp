// Command-line front end: compute, classify, verify, gen, enum, catalog.
#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "resnum/bounds.hpp"
#include "resnum/catalog.hpp"
#include "resnum/classify.hpp"
#include "resnum/edge_list.hpp"
#include "resnum/enumerate.hpp"
#include "resnum/error.hpp"
#include "resnum/families.hpp"
#include "resnum/graph6.hpp"
#include "resnum/kernels.hpp"
#include "resnum/report.hpp"

namespace {

using namespace resnum;

constexpr int kExitInput = 2;
constexpr int kExitCap = 3;
constexpr int kExitTheorem = 4;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge: return kExitCap;
    case ErrorKind::TheoremViolation: return kExitTheorem;
    default: return kExitInput;
  }
}

std::string read_all(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(ErrorKind::MalformedLine, "cannot open input file " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

bool looks_like_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    return line.compare(start, 2, "n ") == 0 || line.compare(start, 2, "n\t") == 0;
  }
  return false;
}

std::vector<Graph> load_graphs(const std::string& path, const std::string& format) {
  const std::string text = read_all(path);
  const bool edge_list = format == "edgelist" || (format.empty() && looks_like_edge_list(text));
  if (edge_list) return {parse_edge_list(text).graph};
  std::istringstream in(text);
  return read_graph6_stream(in);
}

Res3Catalog obtain_catalog(const std::string& fixture) {
  if (!fixture.empty()) return load_res3_catalog(fixture);
  if (std::filesystem::exists(RESNUM_DEFAULT_FIXTURE)) return load_res3_catalog(RESNUM_DEFAULT_FIXTURE);
  return build_res3_catalog();
}

std::vector<std::size_t> parse_params(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != item.size()) raise(ErrorKind::InvalidFamilyParam, "bad parameter '" + item + "'");
    out.push_back(static_cast<std::size_t>(value));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolving number, graph invariants and the res-3 catalog"};
  app.require_subcommand(1);

  std::string isa = "auto";
  app.add_option("--isa", isa, "Kernel variant: auto, scalar, avx2, neon")
      ->check(CLI::IsMember({"auto", "scalar", "avx2", "neon"}));

  std::string input;
  std::string format;
  bool want_dim = false;
  bool want_updim = false;
  auto* compute = app.add_subcommand("compute", "Resolving number and invariants as JSON");
  compute->add_option("--input", input, "Input file, '-' for stdin")->required();
  compute->add_option("--format", format, "graph6 or edgelist (default: detect)")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  compute->add_flag("--dim", want_dim, "Also compute the metric dimension");
  compute->add_flag("--updim", want_updim, "Also compute the upper dimension");

  std::string fixture;
  auto* classify = app.add_subcommand("classify", "Structural category for res <= 3");
  classify->add_option("--input", input, "Input file, '-' for stdin")->required();
  classify->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
  classify->add_option("--fixture", fixture, "res-3 catalog fixture");

  std::string prop = "all";
  auto* verify = app.add_subcommand("verify", "Check every applicable bound");
  verify->add_option("--input", input, "Input file, '-' for stdin")->required();
  verify->add_option("--format", format)->check(CLI::IsMember({"graph6", "edgelist"}));
  verify->add_option("--prop", prop, "Proposition id or 'all'");

  std::string family_name;
  std::string params;
  auto* gen = app.add_subcommand("gen", "Generate a named family member as graph6");
  gen->add_option("--family", family_name,
                  "path, cycle, complete, star, spider, gab, wheel, pendant-cycle, "
                  "triangle-tripod, witness")
      ->required();
  gen->add_option("--params", params, "Comma-separated parameters")->required();

  std::size_t enum_n = 0;
  std::optional<std::size_t> max_deg;
  std::optional<std::size_t> min_girth;
  bool trees = false;
  bool include_disconnected = false;
  std::uint64_t seed = 0;
  auto* enumerate = app.add_subcommand("enum", "Isomorph-free graph6 stream");
  enumerate->add_option("--n", enum_n, "Order")->required();
  enumerate->add_option("--max-deg", max_deg, "Maximum degree");
  enumerate->add_option("--min-girth", min_girth, "Minimum girth");
  enumerate->add_flag("--trees", trees, "Trees only");
  enumerate->add_flag("--all", include_disconnected, "Include disconnected graphs");
  enumerate->add_option("--seed", seed, "Exploration order seed (output is seed-independent)");

  std::size_t catalog_res = 3;
  std::string write_path;
  auto* catalog = app.add_subcommand("catalog", "Derive the res-3 catalog and compare with a fixture");
  catalog->add_option("--res", catalog_res, "Resolving number (only 3 is supported)");
  catalog->add_option("--fixture", fixture, "Fixture to validate byte for byte");
  catalog->add_option("--write", write_path, "Write the derived fixture here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (isa == "scalar") kernels::set_active_isa(kernels::Isa::Scalar);
    if (isa == "avx2") kernels::set_active_isa(kernels::Isa::Avx2);
    if (isa == "neon") kernels::set_active_isa(kernels::Isa::Neon);

    if (*compute) {
      for (const Graph& g : load_graphs(input, format)) {
        std::cout << compute_report(g, {.dim = want_dim, .updim = want_updim}).dump() << '\n';
      }
    } else if (*classify) {
      const Res3Catalog cat = obtain_catalog(fixture);
      for (const Graph& g : load_graphs(input, format)) {
        std::cout << classify_report(classify_res(g, &cat)).dump() << '\n';
      }
    } else if (*verify) {
      std::optional<PropId> only;
      if (prop != "all") {
        only = parse_prop_id(prop);
        if (!only) raise(ErrorKind::MalformedLine, "unknown proposition id '" + prop + "'");
      }
      for (const Graph& g : load_graphs(input, format)) {
        require_connected(g, "verify");
        const DistanceMatrix dm = distance_matrix(g);
        const InvariantSummary inv = invariant_summary(g, dm);
        const std::size_t res = resolving_number(g, dm).res;
        const auto verdicts = only ? verify_bound(*only, g, inv, res) : verify_bounds(g, inv, res);
        std::cout << verdicts_json(verdicts).dump() << '\n';
      }
    } else if (*gen) {
      std::cout << write_graph6(generate(parse_family(family_name, parse_params(params)))) << '\n';
    } else if (*enumerate) {
      EnumConstraints c;
      c.n = enum_n;
      c.max_degree = max_deg;
      c.min_girth = min_girth;
      c.trees_only = trees;
      c.connected_only = !include_disconnected;
      c.exploration_seed = seed;
      enumerate_graphs(c, [](const Graph& g) { std::cout << write_graph6(g) << '\n'; });
    } else if (*catalog) {
      if (catalog_res != 3) raise(ErrorKind::NotApplicable, "only the res = 3 catalog can be derived");
      const Res3Catalog derived = build_res3_catalog();
      Json summary = catalog_summary(derived);
      int rc = 0;
      if (!fixture.empty()) {
        std::ifstream in(fixture, std::ios::binary);
        if (!in) raise(ErrorKind::CatalogMissing, "cannot open fixture " + fixture);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        const bool match = buffer.str() == derived.fixture_text();
        summary["fixture"] = fixture;
        summary["fixture_match"] = match;
        if (!match) rc = kExitInput;
      }
      if (!write_path.empty()) {
        std::ofstream out(write_path, std::ios::binary);
        out << derived.fixture_text();
        summary["written"] = write_path;
      }
      std::cout << summary.dump() << '\n';
      return rc;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}

// Copyright 2026 The domipoly Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.
//
//   domipoly poly [FILE] [--petersen] [--format F] [--output poly|json|table]
//   domipoly gamma [FILE] [--petersen] [--format F] [--json]
//   domipoly catalog -n N -k K [-o PATH] [--graph6]
//   domipoly classify CATALOG [--json]
//   domipoly verify-paper [--catalog PATH] [--json]
//
// Exit codes: 0 ok, 2 bad input, 3 capacity exceeded, 4 verification failed.

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "domipoly/alignment.hpp"
#include "domipoly/catalog.hpp"
#include "domipoly/domination.hpp"
#include "domipoly/equivalence.hpp"
#include "domipoly/formats.hpp"
#include "domipoly/graph.hpp"
#include "domipoly/verify.hpp"
#include "json.hpp"

namespace {

using namespace domipoly;

constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitVerify = 4;

struct GraphInput {
  std::string path;  // empty or "-" means stdin
  bool petersen = false;
  std::string format = "auto";
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("input", in.path, "graph file (graph6 lines or edge list); stdin if omitted");
  cmd->add_flag("--petersen", in.petersen, "use the built-in Petersen graph");
  cmd->add_option("--format", in.format, "input format")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path, 0);
  return read_all(f);
}

std::vector<Graph> load_graphs(const GraphInput& in) {
  if (in.petersen) {
    if (!in.path.empty()) throw ParseError("--petersen and an input file are exclusive", 0);
    return {petersen()};
  }
  const std::string text = in.path.empty() || in.path == "-" ? read_all(std::cin)
                                                             : read_file(in.path);
  InputFormat f = InputFormat::kAuto;
  if (in.format == "graph6") f = InputFormat::kGraph6;
  if (in.format == "edgelist") f = InputFormat::kEdgeList;
  return parse_graphs(text, f);
}

int cmd_poly(const GraphInput& in, const std::string& output) {
  for (const Graph& g : load_graphs(in)) {
    const DominationPolynomial p = domination_polynomial(g);
    if (output == "json") {
      std::cout << to_json(p).dump() << '\n';
    } else if (output == "table") {
      std::cout << "i\td(G,i)\n";
      for (int i = 0; i <= p.order(); ++i) std::cout << i << '\t' << p[i] << '\n';
    } else {
      std::cout << p.to_string() << '\n';
    }
  }
  return 0;
}

int cmd_gamma(const GraphInput& in, bool json) {
  for (const Graph& g : load_graphs(in)) {
    const GammaFamily fam = gamma_sets(g);
    if (json) {
      nlohmann::json sets = nlohmann::json::array();
      for (VertexSet s : fam.sets) {
        std::vector<int> labels;
        for (Vertex v : s) labels.push_back(v + 1);
        sets.push_back(labels);
      }
      std::cout << nlohmann::json{{"gamma", fam.gamma}, {"count", fam.sets.size()}, {"sets", sets}}
                       .dump()
                << '\n';
      continue;
    }
    std::cout << "gamma=" << fam.gamma << ", count=" << fam.sets.size() << '\n';
    for (VertexSet s : fam.sets) std::cout << s.to_string_one_based() << '\n';
  }
  return 0;
}

int cmd_catalog(int n, int k, const std::string& out_path, bool graph6_only) {
  Catalog c = generate_regular(n, k);
  if (n == 10 && k == 3) {
    AlignmentResult r = align_to_paper(c);
    if (!r.exact()) std::cerr << "published-table disagreements:\n" << r.diff();
    c = std::move(r.catalog);
  }
  std::ostringstream buf;
  if (graph6_only) {
    write_graph6_lines(buf, c);
  } else {
    write_catalog(buf, c);
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << buf.str();
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError("cannot write " + out_path, 0);
    f << buf.str();
  }
  return 0;
}

int cmd_classify(const std::string& path, bool json) {
  const Catalog c = path == "-" ? read_catalog(std::cin) : load_catalog(path);
  const auto classes = partition_by_polynomial(c.entries);
  if (json) {
    std::cout << to_json(classes, c.entries).dump(2) << '\n';
  } else {
    std::cout << class_table(classes, c.entries);
  }
  return 0;
}

int cmd_verify(const std::string& catalog_path, bool json) {
  Catalog c;
  try {
    c = catalog_path.empty() ? generate_regular(10, 3) : load_catalog(catalog_path);
  } catch (const Error& e) {
    // A catalog that does not load is a failed verification, not bad usage.
    Ledger l;
    l.items.push_back({"CAT", "catalog loads and revalidates", Status::kFail, e.what()});
    std::cout << (json ? l.json().dump(2) + "\n" : l.table());
    return kExitVerify;
  }
  const Ledger l = verify_paper(c);
  std::cout << (json ? l.json().dump(2) + "\n" : l.table());
  return l.ok() ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"domination polynomials of graphs"};
  app.require_subcommand(1);

  GraphInput poly_in;
  std::string poly_output = "poly";
  auto* poly = app.add_subcommand("poly", "print the domination polynomial");
  add_graph_input(poly, poly_in);
  poly->add_option("--output", poly_output, "output format")
      ->check(CLI::IsMember({"poly", "json", "table"}));

  GraphInput gamma_in;
  bool gamma_json = false;
  auto* gamma = app.add_subcommand("gamma", "print the domination number and all minimum dominating sets");
  add_graph_input(gamma, gamma_in);
  gamma->add_flag("--json", gamma_json, "JSON output");

  int cat_n = 0;
  int cat_k = 0;
  std::string cat_out;
  bool cat_graph6 = false;
  auto* catalog = app.add_subcommand("catalog", "generate all k-regular graphs on n vertices");
  catalog->add_option("-n", cat_n, "order")->required();
  catalog->add_option("-k", cat_k, "degree")->required();
  catalog->add_option("-o,--output", cat_out, "output path (stdout if omitted)");
  catalog->add_flag("--graph6", cat_graph6, "write bare graph6 lines instead of JSONL");

  std::string cls_path;
  bool cls_json = false;
  auto* classify = app.add_subcommand("classify", "partition a catalog by domination polynomial");
  classify->add_option("catalog", cls_path, "catalog file (JSONL); - for stdin")->required();
  classify->add_flag("--json", cls_json, "JSON output");

  std::string ver_catalog;
  bool ver_json = false;
  auto* verify = app.add_subcommand("verify-paper", "check the cubic order-10 results");
  verify->add_option("--catalog", ver_catalog, "use this catalog instead of generating one");
  verify->add_flag("--json", ver_json, "JSON ledger");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*poly) return cmd_poly(poly_in, poly_output);
    if (*gamma) return cmd_gamma(gamma_in, gamma_json);
    if (*catalog) return cmd_catalog(cat_n, cat_k, cat_out, cat_graph6);
    if (*classify) return cmd_classify(cls_path, cls_json);
    if (*verify) return cmd_verify(ver_catalog, ver_json);
  } catch (const CapacityError& e) {
    std::cerr << "domipoly: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const ParseError& e) {
    std::cerr << "domipoly: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "domipoly: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}

#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gammaext/catalog.hpp"
#include "gammaext/connectivity.hpp"
#include "gammaext/element_set.hpp"
#include "gammaext/errors.hpp"
#include "gammaext/extensions.hpp"
#include "gammaext/laws.hpp"
#include "gammaext/matrix_io.hpp"
#include "gammaext/matroid.hpp"

namespace {

using gammaext::BinaryMatroid;
using gammaext::ElementSet;
using nlohmann::json;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw gammaext::Error("cannot open '" + path + "'");
    }
    buf << in.rdbuf();
  }
  return buf.str();
}

// Files are taken as-is (raw): CLI pipelines legitimately produce coloops
// (splitting by one element, extending by a single x), and every subcommand
// below is defined on such matroids too. Zero columns still error out.
BinaryMatroid load_matroid(const std::string& path) {
  const gammaext::ParsedMatrix parsed = gammaext::parse_matrix(read_input(path));
  return BinaryMatroid::create_raw(parsed.matrix, parsed.labels);
}

json matrix_json(const gammaext::Gf2Matrix& m, const std::vector<std::string>& labels) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.n_rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.n_cols(); ++c) {
      row.push_back(m.get(r, c) ? 1 : 0);
    }
    rows.push_back(std::move(row));
  }
  return json{{"labels", labels}, {"rows", m.n_rows()}, {"cols", m.n_cols()}, {"matrix", rows}};
}

json sets_json(const std::vector<ElementSet>& sets) {
  json out = json::array();
  for (const ElementSet& s : sets) {
    out.push_back(s.members());
  }
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// The CLI renders γ labels as a fresh sequence g1, g2, … (the library default
// "g<x label>" is only used by API callers who want speaking names).
std::vector<std::string> sequential_gammas(std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    names.push_back("g" + std::to_string(i));
  }
  return names;
}

std::pair<std::size_t, std::size_t> parse_catalog_arg(const std::string& arg) {
  const auto comma = arg.find(',');
  auto parse_one = [&](const std::string& piece) -> std::size_t {
    if (piece.empty() || piece.size() > 2) {
      throw gammaext::Error("malformed --catalog '" + arg + "' (expected 'r,n')");
    }
    std::size_t v = 0;
    for (const char c : piece) {
      if (c < '0' || c > '9') {
        throw gammaext::Error("malformed --catalog '" + arg + "' (expected 'r,n')");
      }
      v = v * 10 + static_cast<std::size_t>(c - '0');
    }
    return v;
  };
  if (comma == std::string::npos) {
    throw gammaext::Error("malformed --catalog '" + arg + "' (expected 'r,n')");
  }
  return {parse_one(arg.substr(0, comma)), parse_one(arg.substr(comma + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary matroid toolkit: GF(2) matrix files, gamma-extensions, splitting, "
               "connectivity and law sweeps"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  int exit_code = 0;
  std::string file = "-";
  std::string file2;
  std::string x_csv;
  std::string y_csv;
  std::string law;
  std::string catalog_arg;
  std::string mode_name = "paper";
  std::string emit_name;
  std::size_t k = 0;

  auto* rank_cmd = app.add_subcommand("rank", "rank of the matrix file's vector matroid");
  rank_cmd->add_option("file", file, "matrix file ('-' = stdin)");
  rank_cmd->callback([&] {
    const BinaryMatroid m = load_matroid(file);
    if (as_json) {
      emit(json{{"rank", m.rank()}});
    } else {
      std::cout << "rank: " << m.rank() << '\n';
    }
  });

  auto* circuits_cmd = app.add_subcommand("circuits", "all circuits, sorted");
  circuits_cmd->add_option("file", file, "matrix file ('-' = stdin)");
  circuits_cmd->callback([&] {
    const BinaryMatroid m = load_matroid(file);
    const auto cs = gammaext::circuits(m);
    if (as_json) {
      emit(json{{"count", cs.size()}, {"circuits", sets_json(cs)}});
      return;
    }
    std::cout << "circuits: " << cs.size() << '\n';
    for (const ElementSet& c : cs) {
      std::cout << c.to_string() << '\n';
    }
  });

  auto* cocircuits_cmd = app.add_subcommand("cocircuits", "all cocircuits, sorted");
  cocircuits_cmd->add_option("file", file, "matrix file ('-' = stdin)");
  cocircuits_cmd->callback([&] {
    const BinaryMatroid m = load_matroid(file);
    const auto cs = gammaext::cocircuits(m);
    if (as_json) {
      emit(json{{"count", cs.size()}, {"cocircuits", sets_json(cs)}});
      return;
    }
    std::cout << "cocircuits: " << cs.size() << '\n';
    for (const ElementSet& c : cs) {
      std::cout << c.to_string() << '\n';
    }
  });

  auto* girth_cmd = app.add_subcommand("girth", "minimum circuit and cocircuit sizes");
  girth_cmd->add_option("file", file, "matrix file ('-' = stdin)");
  girth_cmd->callback([&] {
    const BinaryMatroid m = load_matroid(file);
    const std::size_t g = gammaext::girth(m);
    const std::size_t cg = gammaext::cogirth(m);
    if (as_json) {
      json out;
      out["girth"] = g == SIZE_MAX ? json() : json(g);
      out["cogirth"] = cg == SIZE_MAX ? json() : json(cg);
      emit(out);
      return;
    }
    std::cout << "girth: ";
    if (g == SIZE_MAX) {
      std::cout << "none";
    } else {
      std::cout << g;
    }
    std::cout << "\ncogirth: ";
    if (cg == SIZE_MAX) {
      std::cout << "none";
    } else {
      std::cout << cg;
    }
    std::cout << '\n';
  });

  auto* components_cmd = app.add_subcommand("components", "connected components, sorted");
  components_cmd->add_option("file", file, "matrix file ('-' = stdin)");
  components_cmd->callback([&] {
    const BinaryMatroid m = load_matroid(file);
    const auto comps = gammaext::components(m);
    if (as_json) {
      emit(json{{"count", comps.size()}, {"components", sets_json(comps)}});
      return;
    }
    std::cout << "components: " << comps.size() << '\n';
    for (const ElementSet& c : comps) {
      std::cout << c.to_string() << '\n';
    }
  });

  auto* conn_cmd = app.add_subcommand("connectivity", "k-connectivity verdict and witness");
  conn_cmd->add_option("file", file, "matrix file ('-' = stdin)");
  conn_cmd->add_option("--k", k, "connectivity order (k >= 2)")->required();
  conn_cmd->add_option("--mode", mode_name, "paper | cumulative")
      ->check(CLI::IsMember({"paper", "cumulative"}));
  conn_cmd->callback([&] {
    const BinaryMatroid m = load_matroid(file);
    const auto mode = mode_name == "cumulative" ? gammaext::ConnectivityMode::cumulative
                                                : gammaext::ConnectivityMode::paper;
    const bool connected = gammaext::is_k_connected(m, k, mode);
    std::optional<gammaext::Separation> witness;
    if (!connected) {
      // Lowest failing order: paper mode only checks k-1, cumulative all j <= k-1.
      const std::size_t j_from = mode == gammaext::ConnectivityMode::cumulative ? 1 : k - 1;
      for (std::size_t j = j_from; j <= k - 1 && !witness; ++j) {
        witness = gammaext::find_separation(m, j);
      }
    }
    if (as_json) {
      json out{{"k", k}, {"mode", mode_name}, {"connected", connected}};
      out["separation"] =
          witness ? json{{"order", witness->order},
                         {"side_a", witness->side_a.members()},
                         {"side_b", witness->side_b.members()}}
                  : json();
      emit(out);
      return;
    }
    std::cout << k << "-connected: " << (connected ? "true" : "false") << '\n';
    if (witness) {
      std::cout << "separation: " << witness->side_a.to_string() << '|'
                << witness->side_b.to_string() << " order=" << witness->order << '\n';
    }
  });

  auto* gamma_cmd = app.add_subcommand("gamma-ext", "emit the extension matrix A^X");
  gamma_cmd->add_option("file", file, "matrix file ('-' = stdin)");
  gamma_cmd->add_option("--x", x_csv, "comma-separated independent set")->required();
  gamma_cmd->callback([&] {
    const BinaryMatroid m = load_matroid(file);
    const ElementSet x = ElementSet::from_csv(x_csv);
    const gammaext::GammaExtension g =
        gammaext::gamma_extension(m, x, sequential_gammas(x.size()));
    if (as_json) {
      json pairing = json::array();
      for (const auto& [x_label, gamma] : g.pairing) {
        pairing.push_back(json::array({x_label, gamma}));
      }
      json out = matrix_json(g.matrix, g.matrix_labels);
      out["pairing"] = std::move(pairing);
      emit(out);
      return;
    }
    std::cout << gammaext::render_matrix(g.matrix, g.matrix_labels);
  });

  auto* split_cmd = app.add_subcommand("split", "emit the splitting matrix A_Y");
  split_cmd->add_option("file", file, "matrix file ('-' = stdin)");
  split_cmd->add_option("--y", y_csv, "comma-separated subset of the ground set")->required();
  split_cmd->callback([&] {
    const BinaryMatroid m = load_matroid(file);
    const ElementSet y = ElementSet::from_csv(y_csv);
    const gammaext::Gf2Matrix a = gammaext::splitting_matrix(m, y);
    if (as_json) {
      emit(matrix_json(a, m.labels()));
      return;
    }
    std::cout << gammaext::render_matrix(a, m.labels());
  });

  auto* sum_cmd = app.add_subcommand("direct-sum", "emit the standard form of a block-diagonal sum");
  sum_cmd->add_option("file", file, "first matrix file")->required();
  sum_cmd->add_option("file2", file2, "second matrix file")->required();
  sum_cmd->callback([&] {
    const BinaryMatroid sum = gammaext::direct_sum(load_matroid(file), load_matroid(file2));
    if (as_json) {
      emit(matrix_json(sum.representation(), sum.labels()));
      return;
    }
    std::cout << gammaext::render_matrix(sum.representation(), sum.labels());
  });

  auto* compose_cmd =
      app.add_subcommand("compose-check", "splitting(parallel-extension, Γ) = gamma-extension?");
  compose_cmd->add_option("file", file, "matrix file ('-' = stdin)");
  compose_cmd->add_option("--x", x_csv, "comma-separated independent set")->required();
  compose_cmd->callback([&] {
    const BinaryMatroid m = load_matroid(file);
    const bool ok = gammaext::compose_check(m, ElementSet::from_csv(x_csv));
    if (as_json) {
      emit(json{{"x", ElementSet::from_csv(x_csv).members()}, {"pass", ok}});
    } else {
      std::cout << "compose-check: " << (ok ? "pass" : "fail") << '\n';
    }
    if (!ok) {
      exit_code = 1;
    }
  });

  auto* verify_cmd = app.add_subcommand("verify", "sweep one law over an enumerated catalog");
  verify_cmd->add_option("--law", law, "law to check")
      ->required()
      ->check(CLI::IsMember({"2.1", "2.2", "2.3", "2.4", "2.6", "2.7"}));
  verify_cmd->add_option("--catalog", catalog_arg, "catalog slice 'r,n'")->required();
  verify_cmd->add_option("--k", k, "connectivity order for laws 2.3 and 2.6");
  verify_cmd->callback([&] {
    const auto [r, n] = parse_catalog_arg(catalog_arg);
    const auto pool = gammaext::enumerate_matroids(r, n);
    gammaext::SweepOptions options;
    if (verify_cmd->count("--k") > 0) {
      options.k = k;
    }
    const gammaext::SweepResult result = gammaext::sweep_law(law, pool, options);
    if (as_json) {
      json failures = json::array();
      for (const gammaext::LawReport& f : result.failures) {
        failures.push_back(json{{"law_id", f.law_id},
                                {"instance", f.instance},
                                {"verdict", std::string(to_string(f.verdict))},
                                {"counterexample", f.counterexample ? json(*f.counterexample)
                                                                    : json()}});
      }
      emit(json{{"law", result.law_id},
                {"pass", result.passed},
                {"fail", result.failed},
                {"precondition_unmet", result.precondition_unmet},
                {"failures", failures}});
    } else {
      for (const gammaext::LawReport& f : result.failures) {
        std::cout << f.to_tsv_line() << '\n';
      }
      std::cout << result.summary() << '\n';
    }
    if (result.failed > 0) {
      exit_code = 1;
    }
  });

  auto* catalog_cmd = app.add_subcommand("catalog", "list named fixtures or emit one");
  catalog_cmd->add_option("--emit", emit_name, "fixture name to emit as a matrix file");
  catalog_cmd->callback([&] {
    if (!emit_name.empty()) {
      const BinaryMatroid m = gammaext::named(emit_name);
      if (as_json) {
        emit(matrix_json(m.representation(), m.labels()));
      } else {
        std::cout << gammaext::render_matrix(m.representation(), m.labels());
      }
      return;
    }
    const auto entries = gammaext::named_entries();
    if (as_json) {
      json out = json::array();
      for (const gammaext::CatalogEntry& e : entries) {
        out.push_back(json{{"name", e.name},
                           {"rank", e.matroid.rank()},
                           {"size", e.matroid.size()},
                           {"tags", e.tags}});
      }
      emit(out);
      return;
    }
    for (const gammaext::CatalogEntry& e : entries) {
      std::cout << e.name << '\t' << "rank=" << e.matroid.rank() << '\t'
                << "size=" << e.matroid.size() << '\t';
      for (std::size_t i = 0; i < e.tags.size(); ++i) {
        std::cout << (i == 0 ? "" : ",") << e.tags[i];
      }
      std::cout << '\n';
    }
  });

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const gammaext::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_code;
}

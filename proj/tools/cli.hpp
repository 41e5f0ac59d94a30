#pragma once

// Command-line frontend: blocks, paths, decompose, svg.
// Exit codes: 0 success, 2 config error, 3 cross-check mismatch, 4 budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <qtl/qtl.hpp>

namespace qtl::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kConfig = 2, kMismatch = 3, kBudget = 4 };

/// Bad command-line input that is not a Params violation.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  int l = 0;
  int e = 0;
  std::string kappa;
  std::optional<int> n;
  std::string lambda;
  std::string mu;
  std::string format = "table";
  std::string out;
  std::size_t budget = kDefaultClosureBudget;
  std::string oracle = "on";
};

inline std::vector<int> parse_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ConfigError(std::string("--") + what + ": '" + item + "' is not an integer");
    }
    if (used != item.size()) throw ConfigError(std::string("--") + what + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError(std::string("--") + what + " is empty");
  return out;
}

inline Params make_params(const RunConfig& cfg) {
  if (cfg.kappa.empty()) throw ConfigError("--kappa is required");
  return Params::make(cfg.l, cfg.e, parse_list(cfg.kappa, "kappa"));
}

inline std::optional<Point> parse_point(const Params& p, const std::string& text, const char* what) {
  if (text.empty()) return std::nullopt;
  Point pt(parse_list(text, what));
  if (pt.size() != p.l())
    throw ConfigError(std::string("--") + what + " must have l = " + std::to_string(p.l()) + " entries");
  if (!pt.nonnegative()) throw ConfigError(std::string("--") + what + " must be nonnegative");
  return pt;
}

/// n from --n, or from the given points; all must agree.
inline int resolve_n(const RunConfig& cfg, const std::vector<Point>& pts) {
  std::optional<int> n = cfg.n;
  for (const Point& p : pts) {
    if (n && *n != p.total())
      throw ConfigError("sizes disagree: " + p.to_string() + " has " + std::to_string(p.total()) + " boxes, n = " +
                        std::to_string(*n));
    n = p.total();
  }
  if (!n) throw ConfigError("--n is required");
  if (*n < 0) throw ConfigError("--n must be nonnegative");
  return *n;
}

inline std::string params_line(const Params& p, int n) {
  std::string k;
  for (std::size_t i = 0; i < p.kappa().size(); ++i) k += (i ? "," : "") + std::to_string(p.kappa()[i]);
  return "l=" + std::to_string(p.l()) + " e=" + std::to_string(p.e()) + " kappa=(" + k + ") n=" + std::to_string(n);
}

inline std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline std::string cmd_blocks(const RunConfig& cfg) {
  const Params p = make_params(cfg);
  const int n = resolve_n(cfg, {});
  const Geometry g(p);
  const auto bs = blocks(g, n);
  if (cfg.format == "json") {
    Json list = Json::array();
    for (const Block& b : bs) {
      Json members = Json::array();
      Json residues = Json::array();
      for (const Point& m : b.members) {
        members.push_back(to_json(m));
        residues.push_back(residue_multiset(p, m));
      }
      list.push_back(Json{{"members", members}, {"regular", b.regular}, {"residues", residues}});
    }
    return Json{{"params", to_json(p)}, {"n", n}, {"blocks", list}}.dump(2) + "\n";
  }
  std::string out = params_line(p, n) + "\n";
  for (std::size_t k = 0; k < bs.size(); ++k) {
    const Block& b = bs[k];
    out += "block " + std::to_string(k + 1) + " (" + (b.is_regular() ? "regular" : "singular") + ", " +
           std::to_string(b.members.size()) + " members)\n";
    for (std::size_t i = 0; i < b.members.size(); ++i)
      out += "  " + b.members[i].to_string() + "  residues " + join(residue_multiset(p, b.members[i])) +
             (b.regular[i] ? "" : "  singular") + "\n";
  }
  return out;
}

inline std::string cmd_paths(const RunConfig& cfg) {
  const Params p = make_params(cfg);
  const auto lambda = parse_point(p, cfg.lambda, "lambda");
  const auto mu = parse_point(p, cfg.mu, "mu");
  if (!lambda || !mu) throw ConfigError("paths needs --lambda and --mu");
  const int n = resolve_n(cfg, {*lambda, *mu});
  const Geometry g(p);
  const PathEngine engine(g, cfg.budget);
  const auto found = engine.paths_between(*lambda, *mu);
  const LaurentPoly total = engine.graded_path_count(*lambda, *mu);
  if (cfg.format == "json") {
    Json list = Json::array();
    for (const auto& wp : found) list.push_back(to_json(g, wp.path));
    return Json{{"params", to_json(p)},       {"n", n}, {"lambda", to_json(*lambda)}, {"mu", to_json(*mu)},
                {"paths", list},              {"graded_count", to_json(total)}}
               .dump(2) +
           "\n";
  }
  std::string out = params_line(p, n) + "\n";
  out += "paths from the origin to " + lambda->to_string() + " in the closure of " + mu->to_string() + ": " +
         std::to_string(found.size()) + "\n";
  for (const auto& wp : found) {
    const DegreeTrace t = degree_trace(g, wp.path);
    out += "  " + wp.path.to_string() + "  degrees " + join(t.steps) + "  total " + std::to_string(t.total) + "\n";
  }
  out += "graded count: " + total.to_string() + "\n";
  return out;
}

inline std::string matrix_table(const std::vector<Point>& members, const std::map<PointPair, LaurentPoly>& m) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""};
  for (const Point& mu : members) head.push_back(mu.to_string());
  cells.push_back(head);
  for (const Point& lambda : members) {
    std::vector<std::string> row{lambda.to_string()};
    for (const Point& mu : members) {
      auto it = m.find({lambda, mu});
      row.push_back(it == m.end() ? "." : it->second.to_string());
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    std::string line = " ";
    for (std::size_t c = 0; c < row.size(); ++c) line += " " + row[c] + std::string(width[c] - row[c].size(), ' ');
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

/// Writes every report; a cross-check mismatch is recorded in the report and
/// flagged through mismatch rather than thrown.
inline std::string cmd_decompose(const RunConfig& cfg, bool& mismatch) {
  const Params p = make_params(cfg);
  const auto lambda = parse_point(p, cfg.lambda, "lambda");
  const auto mu = parse_point(p, cfg.mu, "mu");
  if (lambda && mu && lambda->total() != mu->total()) throw ConfigError("--lambda and --mu have different sizes");
  std::vector<Point> given;
  if (lambda) given.push_back(*lambda);
  if (mu) given.push_back(*mu);
  const int n = resolve_n(cfg, given);
  const Geometry g(p);
  std::vector<Block> selected;
  if (!given.empty()) {
    selected.push_back(block_of(g, given.front()));
    if (given.size() == 2 && !selected.front().contains(given.back()))
      throw ConfigError(lambda->to_string() + " and " + mu->to_string() + " lie in different blocks");
  } else {
    selected = blocks(g, n);
  }
  const SoergelEngine soergel(g);
  const PathEngine paths(g, cfg.budget);
  std::vector<BlockReport> reports;
  std::vector<DecompositionMatrix> matrices;
  for (const Block& b : selected) {
    if (!b.is_regular()) {
      matrices.push_back(standard_dims_only(b, paths));
      reports.push_back(make_report(b, &matrices.back(), "singular block"));
      continue;
    }
    matrices.push_back(decomposition_matrix(b, soergel, paths));
    std::string verdict = "oracle off";
    if (cfg.oracle == "on") {
      verdict = "ok";
      if (auto diff = compare_matrices(matrices.back(), kn_oracle(b, paths))) {
        verdict = "mismatch: " + *diff;
        mismatch = true;
      }
    }
    reports.push_back(make_report(b, &matrices.back(), verdict));
  }
  if (cfg.format == "json") {
    Json list = Json::array();
    for (const auto& r : reports) list.push_back(to_json(r));
    return Json{{"params", to_json(p)}, {"n", n}, {"blocks", list}}.dump(2) + "\n";
  }
  std::string out = params_line(p, n) + "\n";
  for (std::size_t k = 0; k < selected.size(); ++k) {
    const Block& b = selected[k];
    const DecompositionMatrix& dm = matrices[k];
    out += "block " + std::to_string(k + 1) + " (" + (b.is_regular() ? "regular" : "singular") + ", " +
           std::to_string(b.members.size()) + " members), cross-check: " + reports[k].cross_check + "\n";
    if (b.is_regular()) {
      out += " decomposition numbers d(lambda, mu), rows lambda, columns mu\n" + matrix_table(b.members, dm.entries);
      out += " simple characters Dim L_mu(lambda)\n" + matrix_table(b.members, dm.characters);
    }
    out += " standard dimensions Dim Delta_mu(lambda)\n" + matrix_table(b.members, dm.standard_dims);
  }
  return out;
}

inline std::string cmd_svg(const RunConfig& cfg) {
  const Params p = make_params(cfg);
  const auto lambda = parse_point(p, cfg.lambda, "lambda");
  const auto mu = parse_point(p, cfg.mu, "mu");
  std::vector<Point> given;
  if (lambda) given.push_back(*lambda);
  if (mu) given.push_back(*mu);
  const int n = resolve_n(cfg, given);
  if (p.l() > 3) throw RankTooHigh("SVG output supports l <= 3, got l = " + std::to_string(p.l()));
  const Geometry g(p);
  std::vector<PathWord> words;
  if (lambda && mu) {
    const PathEngine engine(g, cfg.budget);
    for (const auto& wp : engine.paths_between(*lambda, *mu)) words.push_back(wp.path);
  } else if (mu || lambda) {
    words.push_back(distinguished_path(p, mu ? *mu : *lambda));
  }
  return render_svg(g, words, n);
}

inline void add_common(CLI::App* sub, RunConfig& cfg, bool selectors) {
  sub->add_option("--l", cfg.l, "number of components")->required();
  sub->add_option("--e", cfg.e, "quantum characteristic")->required();
  sub->add_option("--kappa", cfg.kappa, "multicharge, comma separated")->required();
  sub->add_option("--n", cfg.n, "number of boxes");
  if (selectors) {
    sub->add_option("--lambda", cfg.lambda, "column lengths, comma separated");
    sub->add_option("--mu", cfg.mu, "column lengths, comma separated");
  }
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json", "svg"}));
  sub->add_option("--out", cfg.out, "write output to this file");
  sub->add_option("--budget", cfg.budget, "reflection closure budget");
  sub->add_option("--oracle", cfg.oracle, "cross-check against the Kleshchev-Nash oracle")
      ->check(CLI::IsMember({"on", "off"}));
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graded decomposition numbers of quiver Temperley-Lieb algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  CLI::App* blocks_cmd = app.add_subcommand("blocks", "list the blocks of TL_n");
  CLI::App* paths_cmd = app.add_subcommand("paths", "enumerate paths from lambda in the closure of mu");
  CLI::App* decompose_cmd = app.add_subcommand("decompose", "decomposition matrix of a block, or of all blocks");
  CLI::App* svg_cmd = app.add_subcommand("svg", "draw paths and the hyperplane arrangement");
  add_common(blocks_cmd, cfg, false);
  add_common(paths_cmd, cfg, true);
  add_common(decompose_cmd, cfg, true);
  add_common(svg_cmd, cfg, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kConfig;
  }

  try {
    std::string text;
    bool mismatch = false;
    if (svg_cmd->parsed()) {
      if (cfg.format != "table" && cfg.format != "svg") throw ConfigError("svg only writes --format svg");
      text = cmd_svg(cfg);
    } else {
      if (cfg.format == "svg") throw ConfigError("--format svg is only available for the svg command");
      if (blocks_cmd->parsed()) text = cmd_blocks(cfg);
      if (paths_cmd->parsed()) text = cmd_paths(cfg);
      if (decompose_cmd->parsed()) text = cmd_decompose(cfg, mismatch);
    }
    if (cfg.out.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) throw ConfigError("cannot open " + cfg.out + " for writing");
      file << text;
    }
    if (mismatch) {
      err << "cross-check failed: the Soergel route and the oracle disagree\n";
      return kMismatch;
    }
    return kOk;
  } catch (const InvalidParams& e) {
    err << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const RankTooHigh& e) {
    err << "error: " << e.what() << "\n";
    return kConfig;
  } catch (const InternalMismatch& e) {
    err << "cross-check failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const ClosureBudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace qtl::cli

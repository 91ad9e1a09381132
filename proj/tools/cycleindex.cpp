// cycleindex: command-line front end for the cycle-space index library.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cycleindex/cycleindex.hpp"

namespace ci = cycleindex;
namespace ku = cycleindex::kuramoto;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int {
  kOk = 0,
  kFailure = 1,
  kParse = 2,
  kNotConnected = 3,
  kDisagreement = 4,
  kSingularCycleForm = 5,
  kNotAFixedPoint = 6,
  kDegenerateWeight = 7,
};

struct Disagreement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_code(ci::ErrorCode code) {
  switch (code) {
    case ci::ErrorCode::FormatError:
    case ci::ErrorCode::DuplicateEdge:
    case ci::ErrorCode::SelfLoop:
    case ci::ErrorCode::InvalidArgument:
      return kParse;
    case ci::ErrorCode::NotConnected:
      return kNotConnected;
    case ci::ErrorCode::SingularCycleForm:
      return kSingularCycleForm;
    case ci::ErrorCode::NotAFixedPoint:
      return kNotAFixedPoint;
    case ci::ErrorCode::DegenerateWeight:
      return kDegenerateWeight;
    default:
      return kFailure;
  }
}

enum class Format { Text, Json, Csv };

struct Globals {
  Format format = Format::Text;
  std::uint64_t seed = 1;
  std::optional<double> tol;
};

// FNV-1a, 64 bit.
class Digest {
 public:
  void add(std::string_view bytes) {
    for (unsigned char c : bytes) {
      hash_ ^= c;
      hash_ *= 0x100000001b3ULL;
    }
    hash_ ^= 0xff;
    hash_ *= 0x100000001b3ULL;
  }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
    return buf;
  }

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ci::Error(ci::ErrorCode::FormatError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<double> parse_column(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string token = line.substr(first, last - first + 1);
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || !std::isfinite(value)) {
      throw ci::Error(ci::ErrorCode::FormatError,
                      what + " line " + std::to_string(line_no) + ": bad number '" + token + "'");
    }
    out.push_back(value);
  }
  return out;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

struct Report {
  std::string command;
  std::string digest;
  json results = json::object();
  std::optional<Table> table;
  std::vector<std::string> text;
  std::vector<std::string> warnings;
  double elapsed_ms = 0.0;
};

// Shortest round-trip form unless a precision is given.
std::string number(double x, int digits = 0) {
  if (std::isnan(x)) return "nan";
  char buf[40];
  if (digits > 0) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
  }
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string cell(const json& v, bool compact) {
  if (v.is_null()) return compact ? "" : "-";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_float()) return number(v.get<double>(), compact ? 0 : 10);
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string inertia_text(const ci::Inertia& in) {
  return "(" + std::to_string(in.n_plus) + ", " + std::to_string(in.n_zero) + ", " +
         std::to_string(in.n_minus) + ")";
}

json inertia_json(const ci::Inertia& in) {
  return {{"n_plus", in.n_plus}, {"n_zero", in.n_zero}, {"n_minus", in.n_minus}};
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_array()) {
    std::string joined;
    for (std::size_t i = 0; i < j.size(); ++i) joined += (i ? " " : "") + cell(j[i], true);
    out.emplace_back(prefix, joined);
  } else {
    out.emplace_back(prefix, cell(j, true));
  }
}

std::string render(const Report& r, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json: {
      json doc;
      doc["command"] = r.command;
      doc["input_digest"] = r.digest;
      doc["results"] = r.results;
      doc["timing"] = {{"elapsed_ms", r.elapsed_ms}};
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      if (r.table) {
        for (std::size_t i = 0; i < r.table->columns.size(); ++i)
          out << (i ? "," : "") << r.table->columns[i];
        out << '\n';
        for (const auto& row : r.table->rows) {
          for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << cell(row[i], true);
          out << '\n';
        }
      } else {
        std::vector<std::pair<std::string, std::string>> kv;
        flatten(r.results, "", kv);
        out << "key,value\n";
        for (const auto& [k, v] : kv) out << k << ',' << v << '\n';
      }
      break;
    }
    case Format::Text: {
      for (const auto& line : r.text) out << line << '\n';
      if (r.table) {
        std::vector<std::size_t> width;
        for (const auto& c : r.table->columns) width.push_back(c.size());
        std::vector<std::vector<std::string>> cells;
        for (const auto& row : r.table->rows) {
          auto& dst = cells.emplace_back();
          for (std::size_t i = 0; i < row.size(); ++i) {
            dst.push_back(cell(row[i], false));
            width[i] = std::max(width[i], dst.back().size());
          }
        }
        auto emit = [&](const std::vector<std::string>& fields) {
          for (std::size_t i = 0; i < fields.size(); ++i) {
            out << (i ? "  " : "");
            out << std::string(width[i] - fields[i].size(), ' ') << fields[i];
          }
          out << '\n';
        };
        emit(r.table->columns);
        for (const auto& c : cells) emit(c);
      }
      break;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------

struct IndexArgs {
  std::string graph;
  std::string method = "cycles";
};

Report cmd_index(const IndexArgs& a, const Globals& g) {
  Report r;
  const auto source = read_file(a.graph);
  Digest d;
  d.add("index");
  d.add(source);
  d.add(a.method);
  r.digest = d.hex();

  const auto graph = ci::load_graph(source);
  const double tol = g.tol.value_or(ci::kInertiaTol);
  if (!ci::is_connected(graph)) throw ci::Error(ci::ErrorCode::NotConnected, "graph is not connected");

  r.results["vertices"] = graph.num_vertices();
  r.results["edges"] = graph.num_edges();
  r.results["method"] = a.method;
  r.text.push_back("vertices " + std::to_string(graph.num_vertices()) + ", edges " +
                   std::to_string(graph.num_edges()));

  std::optional<ci::CycleIndex> cycles;
  std::optional<ci::Inertia> direct;
  if (a.method != "direct") cycles = ci::index_via_cycles(graph, tol);
  if (a.method != "cycles") direct = ci::oracle::brute_force_index(graph, tol);

  if (cycles) {
    r.results["cycles"] = inertia_json(cycles->laplacian);
    r.results["cycle_form"] = inertia_json(cycles->cycle_form);
    r.results["degenerate"] = cycles->degenerate;
    r.text.push_back("inertia (cycles)  (n+, n0, n-) = " + inertia_text(cycles->laplacian));
    r.text.push_back("cycle form Z      (n+, n0, n-) = " + inertia_text(cycles->cycle_form));
  }
  if (direct) {
    r.results["direct"] = inertia_json(*direct);
    r.text.push_back("inertia (direct)  (n+, n0, n-) = " + inertia_text(*direct));
  }
  const auto& primary = cycles ? cycles->laplacian : *direct;
  r.results["n_plus"] = primary.n_plus;
  r.results["stable"] = primary.n_plus == 0;

  if (cycles && direct) {
    if (!(cycles->laplacian == *direct)) {
      throw Disagreement("cycle-space inertia " + inertia_text(cycles->laplacian) +
                         " differs from direct eigensolve " + inertia_text(*direct));
    }
    const auto bounds = ci::index_bounds(graph);
    r.results["agree"] = true;
    r.results["bounds"] = {{"lower", bounds.lower}, {"upper", bounds.upper}};
    r.results["negative_edges"] = cycles->negative_edges;
    r.results["cycle_rank"] = cycles->cycle_rank;
    r.text.push_back("methods agree");
    r.text.push_back("bounds " + std::to_string(bounds.lower) + " <= n+ <= " +
                     std::to_string(bounds.upper));
    r.text.push_back("negative edges " + std::to_string(cycles->negative_edges) +
                     ", cycle rank " + std::to_string(cycles->cycle_rank));
  }
  r.text.push_back(primary.n_plus == 0 ? "stable" : "unstable, n+ = " + std::to_string(primary.n_plus));
  return r;
}

Report cmd_detred(const std::string& path, const Globals& g) {
  Report r;
  const auto source = read_file(path);
  Digest d;
  d.add("detred");
  d.add(source);
  r.digest = d.hex();

  const auto graph = ci::load_graph(source);
  const double rel = g.tol.value_or(1e-8);
  const auto rep = ci::detred_identity_check(graph, rel);
  r.results["lhs"] = rep.lhs;
  r.results["rhs"] = rep.rhs;
  r.results["ratio"] = rep.ratio;
  r.results["abs_ratio"] = std::abs(rep.ratio);
  r.results["sign_factor"] = rep.sign_factor;
  r.results["magnitude_match"] = rep.magnitude_match;
  r.results["cycle_rank"] = ci::cycle_rank(graph);
  r.text.push_back("det_red(L)/N          = " + number(rep.lhs));
  r.text.push_back("det(Z) * prod(gamma)  = " + number(rep.rhs));
  r.text.push_back("|ratio|               = " + number(std::abs(rep.ratio)));
  r.text.push_back("sign factor           = " + std::to_string(rep.sign_factor));
  if (!rep.magnitude_match) {
    throw Disagreement("|det_red(L)/N| and |det(Z) prod(gamma)| differ: ratio " +
                       number(rep.ratio));
  }
  return r;
}

Report cmd_ring_table(const std::vector<std::size_t>& n_list, const Globals& g) {
  Report r;
  Digest d;
  d.add("ring-table");
  for (auto n : n_list) d.add(std::to_string(n));
  r.digest = d.hex();

  const double tol = g.tol.value_or(1e-12);
  Table t{{"n", "zeta_star", "normalized_link", "omega_wrap", "is_long"}, {}};
  json rows = json::array();
  for (auto n : n_list) {
    const auto a = ku::longest_stable_link(n, tol);
    if (!a.first_root_is_longest) {
      r.warnings.push_back("n=" + std::to_string(n) +
                           ": a later root of h_n gives a longer link than the first");
    }
    t.rows.push_back({n, a.zeta_star, a.normalized_link, a.omega_wrap, a.is_long});
    rows.push_back({{"n", n},
                    {"zeta_star", a.zeta_star},
                    {"normalized_link", a.normalized_link},
                    {"omega_wrap", a.omega_wrap},
                    {"is_long", a.is_long},
                    {"first_root_is_longest", a.first_root_is_longest}});
  }
  r.results["rows"] = rows;
  r.table = std::move(t);
  return r;
}

struct ScanArgs {
  std::size_t n = 9;
  double zeta_min = 0.0;
  double zeta_max = std::numbers::pi / 2;
  std::size_t steps = 1000;
};

Report cmd_ring_scan(const ScanArgs& a) {
  Report r;
  Digest d;
  d.add("ring-scan");
  d.add(std::to_string(a.n));
  d.add(number(a.zeta_min));
  d.add(number(a.zeta_max));
  d.add(std::to_string(a.steps));
  r.digest = d.hex();

  Table t{{"zeta", "h_n", "omega_wrap", "cos_wrap", "pole"}, {}};
  json rows = json::array();
  for (const auto& row : ku::ring_scan(a.n, a.zeta_min, a.zeta_max, a.steps)) {
    const json h = row.pole ? json(nullptr) : json(row.h);
    t.rows.push_back({row.zeta, h, row.omega_wrap, row.cos_wrap, row.pole});
    rows.push_back({{"zeta", row.zeta},
                    {"h_n", h},
                    {"omega_wrap", row.omega_wrap},
                    {"cos_wrap", row.cos_wrap},
                    {"pole", row.pole}});
  }
  r.results["n"] = a.n;
  r.results["rows"] = rows;
  r.table = std::move(t);
  return r;
}

struct ClassifyArgs {
  std::string graph;
  std::string theta;
  std::string omega;
  double residual_tol = ku::kResidualTol;
};

std::vector<double> by_vertex(const std::vector<double>& column,
                              const std::vector<unsigned long long>& labels,
                              const std::string& what) {
  if (column.size() != labels.size()) {
    throw ci::Error(ci::ErrorCode::InvalidArgument,
                    what + " has " + std::to_string(column.size()) + " entries for " +
                        std::to_string(labels.size()) + " vertices");
  }
  std::vector<double> out(labels.size());
  for (std::size_t v = 0; v < labels.size(); ++v) {
    if (labels[v] >= column.size()) {
      throw ci::Error(ci::ErrorCode::InvalidArgument,
                      what + ": vertex ids must be 0..N-1, found " + std::to_string(labels[v]));
    }
    out[v] = column[labels[v]];
  }
  return out;
}

Report cmd_classify(const ClassifyArgs& a, const Globals& g) {
  Report r;
  const auto graph_src = read_file(a.graph);
  const auto theta_src = read_file(a.theta);
  const auto omega_src = a.omega.empty() ? std::string() : read_file(a.omega);
  Digest d;
  d.add("classify");
  d.add(graph_src);
  d.add(theta_src);
  d.add(omega_src);
  d.add(number(a.residual_tol));
  r.digest = d.hex();

  const auto lg = ci::load_labelled_graph(graph_src);
  const auto n = lg.graph.num_vertices();
  const auto theta = by_vertex(parse_column(theta_src, "theta"), lg.labels, "theta");
  const auto omega = a.omega.empty() ? std::vector<double>(n, 0.0)
                                     : by_vertex(parse_column(omega_src, "omega"), lg.labels, "omega");

  const ku::PhaseConfiguration pc{theta, omega, lg.graph};
  const auto residual = ku::fixed_point_residual(pc);
  const auto c = ku::classify_fixed_point(pc, a.residual_tol, g.tol.value_or(ci::kInertiaTol));

  Table t{{"tail", "head", "coupling", "jacobian_weight", "long"}, {}};
  json edges = json::array();
  json long_links = json::array();
  for (std::size_t e = 0; e < lg.graph.num_edges(); ++e) {
    const auto& ge = lg.graph.edge(e);
    const double w = c.jacobian.edge(e).weight;
    const auto tail = lg.labels[ge.tail];
    const auto head = lg.labels[ge.head];
    t.rows.push_back({tail, head, ge.weight, w, w < 0.0});
    edges.push_back({{"tail", tail}, {"head", head}, {"coupling", ge.weight},
                     {"jacobian_weight", w}, {"long", w < 0.0}});
    if (w < 0.0) long_links.push_back({tail, head});
  }
  const double worst = residual.size() ? residual.cwiseAbs().maxCoeff() : 0.0;
  r.results["unstable_dim"] = c.unstable_dim;
  r.results["zero_modes"] = c.zero_modes;
  r.results["stable"] = c.unstable_dim == 0;
  r.results["residual_max"] = worst;
  r.results["long_links"] = long_links;
  r.results["edges"] = edges;
  r.text.push_back("unstable dimension " + std::to_string(c.unstable_dim) + ", zero modes " +
                   std::to_string(c.zero_modes) + ", residual " + number(worst, 3));
  r.text.push_back(std::to_string(long_links.size()) + " long link(s)");
  r.table = std::move(t);
  return r;
}

Report cmd_cover(const std::string& path) {
  Report r;
  const auto source = read_file(path);
  Digest d;
  d.add("cover");
  d.add(source);
  r.digest = d.hex();

  const auto lg = ci::load_labelled_graph(source);
  const auto& graph = lg.graph;
  const auto cover = ci::build_cover(graph);
  const auto pp = ci::build_projections(cover);
  const auto& tree = cover.tree;
  const auto c = tree.num_vertices() - graph.num_vertices();

  json edges = json::array();
  json phi = json::array();
  for (std::size_t v = 0; v < tree.num_vertices(); ++v) phi.push_back(lg.labels[cover.phi[v]]);
  Table t{{"tail", "head", "weight", "phi_tail", "phi_head", "graph_edge"}, {}};
  for (std::size_t e = 0; e < tree.num_edges(); ++e) {
    const auto& te = tree.edge(e);
    const auto ptail = lg.labels[cover.phi[te.tail]];
    const auto phead = lg.labels[cover.phi[te.head]];
    t.rows.push_back({te.tail, te.head, te.weight, ptail, phead, cover.edge_correspondence[e]});
    edges.push_back({te.tail, te.head, te.weight});
  }
  r.results["tree_vertices"] = tree.num_vertices();
  r.results["tree_edges"] = tree.num_edges();
  r.results["graph_vertices"] = graph.num_vertices();
  r.results["cycle_rank"] = c;
  r.results["edges"] = edges;
  r.results["phi"] = phi;
  r.results["duplicates"] = cover.duplicates;
  r.results["restriction_exact"] = ci::laplacian_restriction_check(graph, cover, pp);

  // Text form is an edge list of T with the covering map as comments.
  r.text.push_back("# |V(T)| = " + std::to_string(tree.num_vertices()) + ", |E(T)| = " +
                   std::to_string(tree.num_edges()) + ", |V(T)| - |V(G)| = " + std::to_string(c) +
                   " = C");
  for (std::size_t v = 0; v < tree.num_vertices(); ++v) {
    r.text.push_back("# phi(" + std::to_string(v) + ") = " + std::to_string(lg.labels[cover.phi[v]]));
  }
  for (std::size_t e = 0; e < tree.num_edges(); ++e) {
    const auto& te = tree.edge(e);
    r.text.push_back(std::to_string(te.tail) + " " + std::to_string(te.head) + " " +
                     number(te.weight) + "  # edge " + std::to_string(cover.edge_correspondence[e]) +
                     " of G");
  }
  return r;
}

Report cmd_selftest(std::size_t count, const Globals& g) {
  Report r;
  Digest d;
  d.add("selftest");
  d.add(std::to_string(g.seed));
  d.add(std::to_string(count));
  r.digest = d.hex();

  std::mt19937_64 rng(g.seed);
  const double tol = g.tol.value_or(ci::kInertiaTol);
  std::size_t degenerate = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const auto graph = ci::oracle::random_connected_graph({}, rng);
    const auto cycles = ci::index_via_cycles(graph, tol);
    const auto direct = ci::oracle::brute_force_index(graph, tol);
    if (!(cycles.laplacian == direct)) {
      throw Disagreement("instance " + std::to_string(i) + ": cycles " +
                         inertia_text(cycles.laplacian) + " vs direct " + inertia_text(direct));
    }
    if (cycles.degenerate) ++degenerate;
  }
  r.results["seed"] = g.seed;
  r.results["instances"] = count;
  r.results["agree"] = count;
  r.results["degenerate"] = degenerate;
  r.text.push_back(std::to_string(count) + "/" + std::to_string(count) +
                   " random graphs agree (seed " + std::to_string(g.seed) + ")");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed-graph Laplacian index via the cycle space"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals globals;
  std::string format = "text";
  double tol = 0.0;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--seed", globals.seed, "Seed for randomised self-test mode")->capture_default_str();
  auto* tol_opt = app.add_option("--tol", tol, "Numerical tolerance for the selected command")
                      ->check(CLI::PositiveNumber);

  IndexArgs index_args;
  auto* index = app.add_subcommand("index", "Inertia of the Laplacian");
  index->add_option("graph,--graph-file", index_args.graph, "Graph file")->required();
  index->add_option("--method", index_args.method, "cycles, direct or both")
      ->check(CLI::IsMember({"cycles", "direct", "both"}))
      ->capture_default_str();

  std::string detred_graph;
  auto* detred = app.add_subcommand("detred", "Reduced determinant against det(Z) prod(gamma)");
  detred->add_option("graph,--graph-file", detred_graph, "Graph file")->required();

  std::vector<std::size_t> n_list{3, 4, 5, 10, 20, 30, 40, 50};
  auto* table = app.add_subcommand("ring-table", "Longest stable link on rings");
  table->add_option("--n-list", n_list, "Ring sizes, comma separated")
      ->delimiter(',')
      ->check(CLI::Range(std::size_t{3}, std::size_t{100000}))
      ->capture_default_str();

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("ring-scan", "Sample h_n and the wrap frequency");
  scan->add_option("--n", scan_args.n, "Ring size")->check(CLI::Range(std::size_t{3}, std::size_t{100000}))->capture_default_str();
  scan->add_option("--zeta-min", scan_args.zeta_min)->capture_default_str();
  scan->add_option("--zeta-max", scan_args.zeta_max)->capture_default_str();
  scan->add_option("--steps", scan_args.steps)->check(CLI::PositiveNumber)->capture_default_str();

  ClassifyArgs classify_args;
  auto* classify = app.add_subcommand("classify", "Stability of a Kuramoto fixed point");
  classify->add_option("--graph-file", classify_args.graph, "Coupling graph")->required();
  classify->add_option("--theta-file", classify_args.theta, "Phases, one per line")->required();
  classify->add_option("--omega-file", classify_args.omega, "Natural frequencies (default 0)");
  classify->add_option("--residual-tol", classify_args.residual_tol)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::string cover_graph;
  auto* cover = app.add_subcommand("cover", "Dump the covering tree T");
  cover->add_option("graph,--graph-file", cover_graph, "Graph file")->required();

  std::size_t selftest_count = 200;
  auto* selftest = app.add_subcommand("selftest", "Compare both index methods on random graphs");
  selftest->add_option("--count", selftest_count)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  globals.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Text;
  if (*tol_opt) globals.tol = tol;

  const auto t0 = std::chrono::steady_clock::now();
  try {
    Report report;
    if (*index) {
      report = cmd_index(index_args, globals);
    } else if (*detred) {
      report = cmd_detred(detred_graph, globals);
    } else if (*table) {
      report = cmd_ring_table(n_list, globals);
    } else if (*scan) {
      report = cmd_ring_scan(scan_args);
    } else if (*classify) {
      report = cmd_classify(classify_args, globals);
    } else if (*cover) {
      report = cmd_cover(cover_graph);
    } else {
      report = cmd_selftest(selftest_count, globals);
    }
    report.command = app.get_subcommands().front()->get_name();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const auto text = render(report, globals.format);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
    std::cout << text;
    return kOk;
  } catch (const ci::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const Disagreement& e) {
    std::cerr << "error: method disagreement: " << e.what() << '\n';
    return kDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}

#include "nesto/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "nesto/buildset.hpp"
#include "nesto/errors.hpp"
#include "nesto/gamma_engine.hpp"
#include "nesto/graph.hpp"
#include "nesto/json_io.hpp"
#include "nesto/moves.hpp"
#include "nesto/nested.hpp"
#include "nesto/parallel.hpp"
#include "nesto/poset.hpp"
#include "nesto/verify.hpp"

namespace nesto::cli {
namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<LabeledGraph> load_graph(const RunConfig& c) {
  if (c.graph_path.empty()) return std::nullopt;
  return parse_graph(read_input(c.graph_path));
}

BuildingSet load_building_set(const RunConfig& c) {
  if (!c.graph_path.empty() && !c.buildset_path.empty()) throw ParseError("give either --graph or --buildset, not both");
  if (auto g = load_graph(c)) return graphical_building_set(*g);
  if (c.buildset_path.empty()) throw ParseError("this command needs --graph or --buildset");
  Json j;
  try {
    j = Json::parse(read_input(c.buildset_path));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return building_set_from_json(j);
}

LabeledGraph require_graph(const RunConfig& c) {
  if (!c.buildset_path.empty()) throw ParseError("this command takes --graph only");
  auto g = load_graph(c);
  if (!g) throw ParseError("this command needs --graph");
  return *g;
}

void require_format(const RunConfig& c, bool dot_ok) {
  if (c.format == Format::dot && !dot_ok) throw ParseError("--format dot is only available for poset");
}

Execution execution(const RunConfig& c) { return c.jobs == 1 ? Execution::serial : Execution::parallel; }

const char* engine_name(Engine e) {
  switch (e) {
    case Engine::incremental: return "incremental";
    case Engine::oracle: return "oracle";
    case Engine::both: return "both";
  }
  return "?";
}

int cmd_gamma(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_format(c, false);
  const BuildingSet b = load_building_set(c);
  std::optional<IntPolynomial> fast, slow;
  if (c.engine != Engine::oracle) fast = gamma_incremental(b);
  if (c.engine != Engine::incremental) slow = gamma_oracle(b);
  const bool agree = !fast || !slow || *fast == *slow;
  const IntPolynomial& shown = fast ? *fast : *slow;

  if (c.format == Format::json) {
    Json j;
    j["engine"] = engine_name(c.engine);
    if (fast) j["incremental"] = to_json(*fast);
    if (slow) j["oracle"] = to_json(*slow);
    j["gamma"] = to_json(shown);
    if (c.engine == Engine::both) j["agree"] = agree;
    out << j.dump(2) << '\n';
  } else if (c.engine == Engine::both) {
    if (agree)
      out << "gamma = " << shown.to_string() << "; engines agree\n";
    else
      out << "incremental gamma = " << fast->to_string() << "; oracle gamma = " << slow->to_string()
          << "; engines disagree\n";
  } else {
    out << "gamma = " << shown.to_string() << '\n';
  }
  if (!agree) {
    err << "error: engine mismatch\n";
    return exit_code::engine_mismatch;
  }
  return exit_code::ok;
}

int cmd_fvector(const RunConfig& c, std::ostream& out) {
  require_format(c, false);
  const BuildingSet b = load_building_set(c);
  EnumerationLimits limits;
  limits.override_cap = c.override_cap;
  const FaceCensus census = enumerate_nested_sets(b, limits);
  const IntPolynomial f = f_polynomial(census);
  const IntPolynomial h = f_to_h(f, census.dimension);
  const IntPolynomial g = h_to_gamma(h, census.dimension);
  if (c.format == Format::json) {
    Json j;
    j["dimension"] = census.dimension;
    j["census"] = to_json(census);
    j["f"] = to_json(f);
    j["h"] = to_json(h);
    j["gamma"] = to_json(g);
    out << j.dump(2) << '\n';
  } else {
    out << "dimension = " << census.dimension << '\n'
        << "f = " << f.to_string() << '\n'
        << "h = " << h.to_string() << '\n'
        << "gamma = " << g.to_string() << '\n';
  }
  return exit_code::ok;
}

int cmd_buildset(const RunConfig& c, std::ostream& out) {
  require_format(c, false);
  const BuildingSet b = load_building_set(c);
  if (c.format == Format::json) {
    Json j = to_json(b);
    j["size"] = b.size();
    j["dimension"] = b.dimension();
    j["connected"] = b.connected();
    j["flag"] = b.is_flag();
    out << j.dump(2) << '\n';
  } else {
    out << b.to_string() << '\n'
        << "size = " << b.size() << '\n'
        << "dimension = " << b.dimension() << '\n'
        << "connected = " << (b.connected() ? "yes" : "no") << '\n'
        << "flag = " << (b.is_flag() ? "yes" : "no") << '\n';
  }
  return exit_code::ok;
}

int cmd_moves(const RunConfig& c, std::ostream& out) {
  require_format(c, false);
  const LabeledGraph g = require_graph(c);
  GammaMemo memo;
  const IntPolynomial before = gamma_incremental(graphical_building_set(g), memo);
  auto gamma_of = [&](const LabeledGraph& h) { return gamma_incremental(graphical_building_set(h), memo); };
  const auto shifts = enumerate_tree_shifts(g);
  const auto flosses = enumerate_flossing(g);

  if (c.format == Format::json) {
    Json j;
    j["gamma"] = to_json(before);
    j["wiener"] = wiener_index(g);
    Json js = Json::array(), jf = Json::array();
    for (const auto& m : shifts) {
      const LabeledGraph h = apply_tree_shift(g, m);
      js.push_back({{"move", m.to_string()}, {"result", format_graph(h)}, {"gamma", to_json(gamma_of(h))},
                    {"wiener", wiener_index(h)}});
    }
    for (const auto& m : flosses) {
      const LabeledGraph h = apply_flossing(g, m);
      jf.push_back({{"move", m.to_string()}, {"r", m.r}, {"result", format_graph(h)}, {"gamma", to_json(gamma_of(h))},
                    {"wiener", wiener_index(h)}});
    }
    j["tree_shifts"] = js;
    j["flossing"] = jf;
    out << j.dump(2) << '\n';
    return exit_code::ok;
  }
  out << "gamma = " << before.to_string() << "; wiener = " << wiener_index(g) << '\n';
  out << shifts.size() << " tree shift(s)\n";
  for (const auto& m : shifts) {
    const LabeledGraph h = apply_tree_shift(g, m);
    out << "  " << m.to_string() << "  gamma = " << gamma_of(h).to_string() << "; wiener = " << wiener_index(h) << '\n';
  }
  out << flosses.size() << " flossing move(s)\n";
  for (const auto& m : flosses) {
    const LabeledGraph h = apply_flossing(g, m);
    out << "  " << m.to_string() << "  gamma = " << gamma_of(h).to_string() << "; wiener = " << wiener_index(h) << '\n';
  }
  return exit_code::ok;
}

void check_cap(const RunConfig& c, int n, const char* flag) {
  if (n > hard_max_n && !c.override_cap)
    throw CapExceeded(std::string(flag) + " " + std::to_string(n) + " exceeds " + std::to_string(hard_max_n) +
                      "; pass --override-cap to proceed");
}

int cmd_poset(const RunConfig& c, std::ostream& out, std::ostream& err) {
  if (c.n < 1) throw ParseError("poset needs --n >= 1");
  check_cap(c, c.n, "--n");
  const TreePoset p = build_poset(c.n, execution(c));
  const PosetReport report = check_poset(p);
  switch (c.format) {
    case Format::dot: out << poset_to_dot(p); break;
    case Format::json: {
      Json j = to_json(p);
      Json checks = Json::array();
      for (const auto& k : report.checks) checks.push_back({{"name", k.name}, {"passed", k.passed}, {"detail", k.detail}});
      j["checks"] = checks;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::text: {
      out << p.nodes.size() << " trees on " << p.n << " vertices\n";
      for (std::size_t i = 0; i < p.nodes.size(); ++i)
        out << "  #" << i << " " << p.nodes[i].code << "  leaves = " << p.nodes[i].leaf_count
            << "  gamma = " << p.nodes[i].gamma.to_string() << '\n';
      out << p.shift_edges.size() << " shift edge(s)\n";
      for (const auto& e : p.shift_edges) out << "  #" << e.from << " -> #" << e.to << '\n';
      out << p.floss_edges.size() << " floss edge(s)\n";
      for (const auto& e : p.floss_edges) out << "  #" << e.from << " -> #" << e.to << '\n';
      for (const auto& k : report.checks)
        out << (k.passed ? "PASS  " : "FAIL  ") << k.name << (k.detail.empty() ? "" : "  " + k.detail) << '\n';
      break;
    }
  }
  if (!report.passed()) {
    err << "error: shift order checks failed\n";
    return exit_code::verification;
  }
  return exit_code::ok;
}

int cmd_wiener(const RunConfig& c, std::ostream& out) {
  require_format(c, false);
  const LabeledGraph g = require_graph(c);
  if (c.format == Format::json)
    out << Json{{"wiener", wiener_index(g)}}.dump() << '\n';
  else
    out << wiener_index(g) << '\n';
  return exit_code::ok;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  require_format(c, false);
  if (c.max_n < 2) throw ParseError("verify needs --max-n >= 2");
  check_cap(c, c.max_n, "--max-n");
  VerifyOptions opts;
  opts.max_tree_n = c.max_n;
  opts.seed = c.seed;
  opts.exec = execution(c);
  const auto results = run_all_suites(opts);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (c.format == Format::json) {
    Json j = Json::array();
    for (const auto& r : results)
      j.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    out << j.dump(2) << '\n';
  } else {
    out << format_suite_table(results);
  }
  if (!ok) {
    err << "error: verification failed\n";
    return exit_code::verification;
  }
  return exit_code::ok;
}

int dispatch(const RunConfig& c, std::ostream& out, std::ostream& err) {
  switch (c.command) {
    case Command::gamma: return cmd_gamma(c, out, err);
    case Command::fvector: return cmd_fvector(c, out);
    case Command::buildset: return cmd_buildset(c, out);
    case Command::moves: return cmd_moves(c, out);
    case Command::poset: return cmd_poset(c, out, err);
    case Command::wiener: return cmd_wiener(c, out);
    case Command::verify: return cmd_verify(c, out, err);
  }
  throw InternalError("unknown command");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  set_worker_count(config.jobs);
  try {
    return dispatch(config, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::cap;
  } catch (const VerificationFailure& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::verification;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::internal;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::domain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code::internal;
  }
}

std::string exit_code_help() {
  return "Exit codes:\n"
         "  0  success, every requested check passed\n"
         "  1  internal error\n"
         "  2  usage error or malformed input\n"
         "  3  size cap exceeded (see --override-cap)\n"
         "  4  incremental and oracle engines disagree\n"
         "  5  verification failure\n"
         "  6  input outside the domain of the command (disconnected graph, ground set too large, ...)\n";
}

}  // namespace nesto::cli

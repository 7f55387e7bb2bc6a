// eulercount: exact counting of Eulerian circuits, orientations and orbs,
// plus the gadget reductions between them.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eulercount/counting.hpp"
#include "eulercount/errors.hpp"
#include "eulercount/number_theory.hpp"
#include "eulercount/reduction.hpp"

namespace ec = eulercount;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

class Report {
 public:
  void add(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, const ec::Count& value) { add(std::move(key), value.get_str()); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, std::uint64_t value) { add(std::move(key), std::to_string(value)); }

  void print(std::ostream& out, bool json) const {
    if (json) {
      nlohmann::ordered_json obj;
      for (const auto& [k, v] : fields_) obj[k] = v;
      out << obj.dump() << '\n';
    } else {
      for (const auto& [k, v] : fields_) out << k << ": " << v << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ec::InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw ec::InputError("cannot write " + path);
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// argv without the program name and without --threads, which must not change
// the report.
std::string command_echo(int argc, char** argv) {
  std::string out;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--threads") {
      ++i;
      continue;
    }
    if (a.rfind("--threads=", 0) == 0) continue;
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

std::string residues_text(const ec::ResidueSystem& rs) {
  std::string out;
  for (const auto& r : rs) {
    if (!out.empty()) out += ' ';
    out += std::to_string(r.modulus) + ":" + std::to_string(r.residue);
  }
  return out;
}

ec::OrbEngine orb_engine(const std::string& name) {
  return name == "bundled" ? ec::OrbEngine::bundled : ec::OrbEngine::naive;
}

std::uint64_t parse_prime_option(const std::string& text) {
  if (text == "auto") return 0;
  try {
    std::size_t used = 0;
    const auto p = std::stoull(text, &used);
    if (used == text.size()) return p;
  } catch (const std::exception&) {
  }
  throw ec::InputError("--p expects a prime or 'auto', got '" + text + "'");
}

ec::VertexId default_root(const ec::Multigraph& g) {
  const auto s = ec::support(g);
  return s.empty() ? 1 : s.front();
}

struct Global {
  unsigned threads = 1;
  std::uint64_t budget = ec::kUnlimitedBudget;
  bool json = false;

  ec::EngineOptions engine() const { return {threads, budget}; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting of Eulerian circuits, orientations and orbs"};
  app.require_subcommand(1);
  app.fallthrough();

  Global global;
  app.add_option("--threads", global.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", global.budget, "Search node budget");
  app.add_flag("--json", global.json, "Print the report as one JSON object");

  Report report;
  std::function<void()> action;

  std::string graph_path, cnf_path, out_path, policy_name, p_text = "auto", sweep;
  std::string circuit_engine, orientation_engine, orb_engine_name, recover_engine;
  ec::VertexId root = 0;
  std::uint64_t p = 0, lemma_n = 0;
  bool held_out = false, perturb = false;

  auto load_graph = [&] {
    const auto text = read_file(graph_path);
    report.add("input", digest(text));
    return ec::parse_graph(text);
  };
  auto load_cnf = [&] {
    const auto text = read_file(cnf_path);
    report.add("input", digest(text));
    return ec::parse_dimacs(text);
  };

  // count-circuits
  auto* circuits = app.add_subcommand("count-circuits", "Count Eulerian circuits");
  circuits->add_option("graph", graph_path)->required();
  circuits->add_option("--root", root);
  circuits->add_option("--engine", circuit_engine)->check(CLI::IsMember({"orb", "brute"}))->default_val("orb");
  circuits->callback([&] {
    action = [&] {
      const auto g = load_graph();
      report.add("engine", circuit_engine);
      if (circuit_engine == "brute") {
        report.add("circuits", ec::brute_force_circuits(g, global.engine()));
      } else {
        const auto r = root ? root : default_root(g);
        report.add("root", std::uint64_t{r});
        report.add("circuits", ec::count_circuits_undirected(g, r, global.engine()));
      }
    };
  });

  // count-orientations
  auto* orientations = app.add_subcommand("count-orientations", "Count Eulerian orientations");
  orientations->add_option("graph", graph_path)->required();
  orientations->add_option("--engine", orientation_engine)
      ->check(CLI::IsMember({"naive", "bundled"}))
      ->default_val("naive");
  orientations->callback([&] {
    action = [&] {
      const auto g = load_graph();
      report.add("engine", orientation_engine);
      report.add("orientations",
                 ec::count_eulerian_orientations(g, global.engine(), orb_engine(orientation_engine)));
    };
  });

  // count-orbs
  auto* orbs = app.add_subcommand("count-orbs", "Count orbs rooted at a vertex");
  orbs->add_option("graph", graph_path)->required();
  orbs->add_option("--root", root)->required();
  orbs->add_option("--engine", orb_engine_name)->check(CLI::IsMember({"naive", "bundled"}))->default_val("naive");
  orbs->callback([&] {
    action = [&] {
      const auto g = load_graph();
      report.add("engine", orb_engine_name);
      report.add("root", std::uint64_t{root});
      report.add("orbs", ec::count_orbs(g, root, orb_engine(orb_engine_name), global.engine()));
    };
  });

  // gadget gp
  auto* gadget = app.add_subcommand("gadget", "Build reduction gadgets");
  gadget->require_subcommand(1);
  auto* gp = gadget->add_subcommand("gp", "p-fold edge duplication plus a doubly attached vertex 0");
  gp->add_option("graph", graph_path)->required();
  gp->add_option("--p", p)->required();
  gp->add_option("-o,--output", out_path)->required();
  gp->callback([&] {
    action = [&] {
      const auto g = load_graph();
      const auto gadget_graph = ec::build_gp(g, p);
      const auto text = ec::serialize_graph(gadget_graph.graph, gadget_graph.comment_lines());
      write_file(out_path, text);
      report.add("p", p);
      report.add("vertices", std::uint64_t{gadget_graph.graph.vertex_count() + 1});
      report.add("edges", std::uint64_t{gadget_graph.graph.edge_count()});
      report.add("output", out_path);
      report.add("output_digest", digest(text));
    };
  });

  // reduce recover-n
  auto* reduce = app.add_subcommand("reduce", "Run reductions end to end");
  reduce->require_subcommand(1);
  auto* recover = reduce->add_subcommand("recover-n", "Recover the orientation count from orb counts");
  recover->add_option("graph", graph_path)->required();
  recover->add_option("--policy", policy_name)
      ->check(CLI::IsMember({"small-primes", "paper-range"}))
      ->default_val("small-primes");
  recover->add_option("--engine", recover_engine)
      ->check(CLI::IsMember({"naive", "bundled"}))
      ->default_val("bundled");
  recover->add_flag("--check", held_out, "Verify against one extra prime");
  recover->add_flag("--perturb-oracle", perturb, "Add 1 to every oracle answer (exercises --check)");
  recover->callback([&] {
    action = [&] {
      const auto g = load_graph();
      const auto engine = orb_engine(recover_engine);
      const ec::EngineOptions inner{1, global.budget};
      ec::OrbOracle oracle = [&](const ec::Multigraph& h, ec::VertexId r) -> ec::Count {
        return ec::count_orbs(h, r, engine, inner) + (perturb ? 1 : 0);
      };
      ec::RecoveryOptions opts{policy_name == "paper-range" ? ec::PrimePolicy::between_m_and_2m
                                                            : ec::PrimePolicy::small_primes,
                               held_out, global.threads};
      const auto r = ec::recover_orientation_count(g, oracle, opts);
      report.add("engine", recover_engine);
      report.add("policy", policy_name);
      report.add("orientations", r.n_orientations);
      report.add("residues", residues_text(r.residues));
      std::string values;
      for (std::size_t i = 0; i < r.oracle_values.size(); ++i) {
        if (i) values += ' ';
        values += std::to_string(r.residues[i].modulus) + ":" + r.oracle_values[i].get_str();
      }
      report.add("orbs_per_prime", values);
      if (r.check_prime) report.add("check_prime", r.check_prime);
    };
  });

  // nae gadget / nae verify
  auto* nae = app.add_subcommand("nae", "NAE-3SAT gadget and verification");
  nae->require_subcommand(1);
  auto* nae_gadget = nae->add_subcommand("gadget", "Write the Eulerian gadget of a CNF");
  nae_gadget->add_option("cnf", cnf_path)->required();
  nae_gadget->add_option("--p", p_text)->default_val("auto");
  nae_gadget->add_option("-o,--output", out_path)->required();
  nae_gadget->callback([&] {
    action = [&] {
      const auto cnf = load_cnf();
      const auto gadget_graph = ec::build_nae_gadget(cnf, parse_prime_option(p_text));
      const auto text = ec::serialize_graph(gadget_graph.graph, gadget_graph.comment_lines());
      write_file(out_path, text);
      report.add("p", gadget_graph.p);
      report.add("vertices", std::uint64_t{gadget_graph.graph.vertex_count()});
      report.add("edges", std::uint64_t{gadget_graph.graph.edge_count()});
      report.add("output", out_path);
      report.add("output_digest", digest(text));
    };
  });
  auto* nae_verify = nae->add_subcommand("verify", "Compare orientation and NAE counts");
  nae_verify->add_option("cnf", cnf_path)->required();
  nae_verify->add_option("--p", p_text)->default_val("auto");
  nae_verify->callback([&] {
    action = [&] {
      const auto cnf = load_cnf();
      const auto r = ec::verify_nae_congruence(cnf, parse_prime_option(p_text), global.engine());
      report.add("engine", std::string("bundled"));
      report.add("p", r.p);
      report.add("orientations", r.eo_count);
      report.add("nae", r.nae_count);
      report.add("unanimous", r.unanimous_count);
      report.add("congruent", r.congruent);
      report.add("exact", r.exact_special);
    };
  });

  // lemma1
  auto* lemma = app.add_subcommand("lemma1", "Prime product bound: primes in (n, n^2) versus n! 2^n");
  auto* n_opt = lemma->add_option("--n", lemma_n);
  auto* sweep_opt = lemma->add_option("--sweep", sweep, "Range A..B");
  n_opt->excludes(sweep_opt);
  lemma->callback([&] {
    if (!*n_opt && !*sweep_opt) throw CLI::RequiredError("--n or --sweep");
    action = [&] {
      if (*n_opt) {
        const auto r = ec::prime_product_bound(lemma_n);
        report.add("n", r.n);
        report.add("product", r.product);
        report.add("bound", r.bound);
        report.add("holds", r.holds);
        return;
      }
      const auto dots = sweep.find("..");
      std::uint64_t lo = 0, hi = 0;
      try {
        if (dots == std::string::npos) throw std::invalid_argument(sweep);
        lo = std::stoull(sweep.substr(0, dots));
        hi = std::stoull(sweep.substr(dots + 2));
      } catch (const std::exception&) {
        throw ec::InputError("--sweep expects A..B, got '" + sweep + "'");
      }
      if (lo > hi) throw ec::InputError("--sweep range is empty");
      std::string failures;
      for (std::uint64_t n = lo; n <= hi; ++n)
        if (!ec::prime_product_bound(n).holds) failures += (failures.empty() ? "" : " ") + std::to_string(n);
      report.add("range", std::to_string(lo) + ".." + std::to_string(hi));
      report.add("checked", hi - lo + 1);
      report.add("holds", failures.empty());
      report.add("failures", failures.empty() ? std::string("none") : failures);
    };
  });

  // census
  auto* census = app.add_subcommand("census", "Partition the orbs of G_p by type");
  census->add_option("graph", graph_path)->required();
  census->add_option("--p", p)->required();
  census->callback([&] {
    action = [&] {
      const auto g = load_graph();
      const auto types = ec::type_census(g, p, global.engine());
      const auto s = ec::summarize_census(types, p);
      const ec::Count expected = ec::count_eulerian_orientations(g)
                                 << static_cast<mp_bitcnt_t>(g.vertex_count());
      report.add("p", p);
      report.add("orbs", s.total);
      report.add("classes", std::uint64_t{s.class_count});
      report.add("special_total", s.special_total);
      report.add("special_expected", expected);
      report.add("nonspecial_not_divisible", std::uint64_t{s.nonspecial_not_divisible});
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Error& e) {
    app.exit(e);
    return kExitInput;
  } catch (const ec::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }

  report.add("command", command_echo(argc, argv));
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    action();
  } catch (const ec::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kExitInput;
  } catch (const ec::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    code = kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    code = kExitInternal;
  }
  if (code != kExitOk) return code;

  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  char seconds[32];
  std::snprintf(seconds, sizeof seconds, "%.6f", elapsed.count());
  report.add("seconds", std::string(seconds));
  report.print(std::cout, global.json);
  return kExitOk;
}

#include "nfai/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "nfai/certificates.hpp"
#include "nfai/decision.hpp"
#include "nfai/hardness.hpp"
#include "nfai/oracle.hpp"
#include "nfai/products.hpp"
#include "nfai/relations.hpp"
#include "nfai/text_format.hpp"

namespace nfai::cli {

namespace {

constexpr int kExitError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
  if (!file) throw InputError("cannot write " + path);
}

std::string format_word(const Bundle& bundle, const Word& w) {
  const auto& names = bundle[0].letter_names();
  std::string s;
  for (const Letter x : w) {
    s += ' ';
    s += names.empty() ? std::to_string(x) : names[x];
  }
  return s;
}

Construction construction_arg(const std::string& name) {
  if (auto c = parse_construction(name)) return *c;
  throw CLI::ValidationError("--construction",
                             "unknown construction '" + name +
                                 "' (direct, nodding, echoing, catchup, leapfrog)");
}

// ---------------------------------------------------------------------------

struct ProductArgs {
  std::string bundle;
  std::string construction;
  std::string output;
  bool accessible = false;
};

int cmd_product(const ProductArgs& a, std::ostream& out, std::ostream& err) {
  const Construction c = construction_arg(a.construction);
  const Bundle bundle = parse_bundle(read_file(a.bundle));
  AccessiblePart part = accessible_part(c, bundle);
  const AnyAutomaton result = a.accessible ? std::move(part.automaton) : full_product(c, bundle);
  write_output(a.output, serialize_automaton(result), out);
  err << stats_csv_header() << '\n' << stats_csv_row(part.stats) << '\n';
  return 0;
}

struct DecideArgs {
  std::string bundle;
  std::string construction = "nodding";
};

int cmd_decide(const DecideArgs& a, std::ostream& out) {
  const Construction c = construction_arg(a.construction);
  const Bundle bundle = parse_bundle(read_file(a.bundle));
  const Decision d = decide_over(*make_product_space(c, bundle));
  if (d.empty) {
    out << "EMPTY\n";
  } else {
    Word w = *d.witness();
    if (c == Construction::echoing) w = oracle::restriction(w, 0, bundle.k());
    out << "NONEMPTY" << format_word(bundle, w) << '\n';
  }
  out << "explored_states " << d.explored_states << " explored_transitions "
      << d.explored_transitions << '\n';
  return d.empty ? 1 : 0;
}

struct CertifyArgs {
  std::string bundle;
  std::string output;
};

int cmd_certify(const CertifyArgs& a, std::ostream& out) {
  const Bundle bundle = parse_bundle(read_file(a.bundle));
  const Certificate cert = certify(bundle);
  write_output(a.output, serialize_certificate(bundle, cert), out);
  if (!a.output.empty() && a.output != "-") {
    out << (std::holds_alternative<StaggeredCut>(cert) ? "EMPTY" : "NONEMPTY") << ' '
        << (std::holds_alternative<StaggeredCut>(cert) ? "cut" : "pathset") << " written to "
        << a.output << '\n';
  }
  return 0;
}

struct VerifyArgs {
  std::string bundle;
  std::string certificate;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Bundle bundle = parse_bundle(read_file(a.bundle));
  const CertificateFile file = parse_certificate(read_file(a.certificate));
  const CertificateCheck check = check_certificate(bundle, file);
  if (check.accepted) {
    out << "ACCEPTED " << check.kind << '\n';
    return 0;
  }
  out << "REJECTED " << check.kind << ": " << check.message << '\n';
  return 1;
}

struct OracleArgs {
  std::string bundle;
  std::size_t max_len = 8;
};

int cmd_oracle(const OracleArgs& a, std::ostream& out) {
  const Bundle bundle = parse_bundle(read_file(a.bundle));
  const auto search = oracle::bounded_intersection_search(bundle, a.max_len);
  if (search.witness) {
    out << "WITNESS" << format_word(bundle, *search.witness) << '\n';
    return 0;
  }
  out << (search.exhausted ? "EMPTY\n" : "NONE up to length " + std::to_string(a.max_len) + "\n");
  return 1;
}

// ---------------------------------------------------------------------------
// gen

UndirectedGraph graph_arg(const std::string& spec) {
  constexpr std::string_view kRandom = "random:";
  if (spec.rfind(kRandom, 0) != 0) return parse_graph(read_file(spec));
  std::vector<std::string> parts;
  std::stringstream ss(spec.substr(kRandom.size()));
  for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
  if (parts.size() != 3) throw CLI::ValidationError("--graph", "expected random:n,p,seed");
  try {
    return random_graph(std::stoull(parts[0]), std::stod(parts[1]), std::stoull(parts[2]));
  } catch (const std::logic_error&) {
    throw CLI::ValidationError("--graph", "expected random:n,p,seed");
  }
}

struct GenArgs {
  std::string graph;
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t alphabet = 2;
  double density = 0.5;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string output;
};

// ---------------------------------------------------------------------------
// rs

struct RsArgs {
  std::string bundle;
  std::string relation;
  std::string output;
  std::string relation_output;
};

// ---------------------------------------------------------------------------
// bench

std::string join_record_error(const BenchRecord& r) {
  return "instance " + std::to_string(r.instance_id) + " " + std::string(to_string(r.construction)) +
         ": " + *r.bound_violation;
}

struct BenchArgs {
  BenchConfig config;
  std::vector<std::string> constructions{"nodding", "direct"};
  bool omit_timing = false;
  std::string output;
};

int cmd_bench(BenchArgs& a, std::ostream& out, std::ostream& err) {
  a.config.constructions.clear();
  for (const auto& name : a.constructions) a.config.constructions.push_back(construction_arg(name));
  const auto records = run_bench(a.config);
  std::string csv = bench_csv_header() + "\n";
  for (const auto& r : records) csv += bench_csv_row(r, a.omit_timing) + "\n";
  write_output(a.output, csv, out);
  int status = 0;
  for (const auto& r : records) {
    if (r.bound_violation) {
      err << "bound violation: " << join_record_error(r) << '\n';
      status = 1;
    }
  }
  return status;
}

}  // namespace

// ---------------------------------------------------------------------------

Bundle bench_instance(std::size_t k, std::size_t alphabet, std::size_t n, double density,
                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Nfa> automata;
  automata.reserve(k);
  for (std::size_t i = 0; i < k; ++i) automata.push_back(random_nfa(n, alphabet, density, rng()));
  return Bundle(std::move(automata));
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.seeds.empty()) throw InputError("bench needs at least one --seed");
  struct Instance {
    std::size_t k, alphabet, n;
    double density;
    std::uint64_t seed;
  };
  std::vector<Instance> instances;
  for (const auto k : config.ks) {
    for (const auto l : config.alphabets) {
      for (const auto n : config.ns) {
        for (const auto d : config.densities) {
          for (const auto s : config.seeds) instances.push_back({k, l, n, d, s});
        }
      }
    }
  }
  const std::uint64_t budget = config.budget == 0 ? default_state_budget() : config.budget;
  const std::size_t per = config.constructions.size();
  std::vector<BenchRecord> records(instances.size() * per);

  auto work = [&](std::size_t id) {
    const Instance& inst = instances[id];
    const Bundle bundle = bench_instance(inst.k, inst.alphabet, inst.n, inst.density, inst.seed);
    const std::size_t mk = m_leq_k(bundle);
    for (std::size_t j = 0; j < per; ++j) {
      const Construction c = config.constructions[j];
      BenchRecord& r = records[id * per + j];
      r.instance_id = id;
      r.construction = c;
      r.k = inst.k;
      r.alphabet = inst.alphabet;
      r.n = inst.n;
      r.m = bundle.max_transitions();
      const auto space = make_product_space(c, bundle);
      if (space->layout().size() > budget) {
        r.answer = "SKIP";
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      const ExploreCounts counts = explore(*space);
      r.wall_time_ns = static_cast<std::uint64_t>(
          std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                               start)
              .count());
      r.states_accessible = counts.states;
      r.transitions_accessible = counts.transitions;
      r.answer = counts.any_final ? "NONEMPTY" : "EMPTY";
      const SizeBound bound = size_bound(c, bundle, mk);
      if (counts.states > bound.states) {
        r.bound_violation = "states " + std::to_string(counts.states) + " > " +
                            std::to_string(bound.states);
      } else if (counts.transitions > bound.transitions) {
        r.bound_violation = "transitions " + std::to_string(counts.transitions) + " > " +
                            std::to_string(bound.transitions);
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(config.workers, 1, instances.size() + 1);
  if (workers == 1) {
    for (std::size_t id = 0; id < instances.size(); ++id) work(id);
    return records;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t id = next++; id < instances.size(); id = next++) {
        try {
          work(id);
        } catch (...) {
          const std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::string bench_csv_header() {
  return "instance_id,construction,k,l,n,m,states_accessible,transitions_accessible,wall_time_ns,"
         "answer";
}

std::string bench_csv_row(const BenchRecord& r, bool omit_timing) {
  std::ostringstream s;
  s << r.instance_id << ',' << to_string(r.construction) << ',' << r.k << ',' << r.alphabet << ','
    << r.n << ',' << r.m << ',';
  if (r.answer == "SKIP") {
    s << ",,,SKIP";
    return s.str();
  }
  s << r.states_accessible << ',' << r.transitions_accessible << ',';
  if (!omit_timing) s << r.wall_time_ns;
  s << ',' << r.answer;
  return s.str();
}

// ---------------------------------------------------------------------------

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse product constructions and certified emptiness checks for NFA intersection",
               "nfai"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "nfai 0.1.0");
  // Options under a [bench] section of the file apply to the bench subcommand.
  app.set_config("--config", "", "TOML or INI file with subcommand options");
  app.fallthrough();

  ProductArgs product_args;
  auto* product = app.add_subcommand("product", "Build a product automaton");
  product->add_option("-c,--construction", product_args.construction, "Product construction")
      ->required();
  product->add_flag("--accessible", product_args.accessible, "Keep only the accessible part");
  product->add_option("-o,--output", product_args.output, "Output file (default stdout)");
  product->add_option("bundle", product_args.bundle, "Bundle file")->required();

  DecideArgs decide_args;
  auto* decide = app.add_subcommand("decide", "Decide intersection emptiness");
  decide->add_option("-c,--construction", decide_args.construction,
                     "Product searched (default nodding)");
  decide->add_option("bundle", decide_args.bundle, "Bundle file")->required();

  CertifyArgs certify_args;
  auto* certify_cmd = app.add_subcommand("certify", "Decide and emit a certificate");
  certify_cmd->add_option("-o,--output", certify_args.output, "Certificate file (default stdout)");
  certify_cmd->add_option("bundle", certify_args.bundle, "Bundle file")->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Check a certificate against a bundle");
  verify->add_option("bundle", verify_args.bundle, "Bundle file")->required();
  verify->add_option("certificate", verify_args.certificate, "Certificate file")->required();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* gen_clique = gen->add_subcommand("clique", "Clique-reduction bundle");
  gen_clique->add_option("--graph", gen_args.graph, "Graph file or random:n,p,seed")->required();
  gen_clique->add_option("--k", gen_args.k, "Clique size (>= 3)")->required();
  gen_clique->add_option("-o,--output", gen_args.output, "Output file (default stdout)");
  auto* gen_random = gen->add_subcommand("random", "Random NFA bundle");
  gen_random->add_option("--k", gen_args.k, "Number of automata")->required();
  gen_random->add_option("--n", gen_args.n, "States per automaton")->required();
  gen_random->add_option("--alphabet", gen_args.alphabet, "Alphabet size");
  gen_random->add_option("--density", gen_args.density, "Fraction of possible transitions")
      ->check(CLI::Range(0.0, 1.0));
  gen_random->add_option("--seed", gen_args.seed, "Random seed")->required();
  gen_random->add_option("-o,--output", gen_args.output, "Output file (default stdout)");
  auto* gen_graph = gen->add_subcommand("graph", "Random graph G(n, p)");
  gen_graph->add_option("--n", gen_args.n, "Vertices")->required();
  gen_graph->add_option("--p", gen_args.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen_graph->add_option("--seed", gen_args.seed, "Random seed")->required();
  gen_graph->add_option("-o,--output", gen_args.output, "Output file (default stdout)");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Accessible-part sizes of several constructions");
  bench->add_option("--k", bench_args.config.ks, "Numbers of automata")->delimiter(',');
  bench->add_option("--alphabet", bench_args.config.alphabets, "Alphabet sizes")->delimiter(',');
  bench->add_option("--n", bench_args.config.ns, "States per automaton")->delimiter(',');
  bench->add_option("--density", bench_args.config.densities, "Transition densities")
      ->delimiter(',');
  bench->add_option("--seed", bench_args.config.seeds, "Instance seeds")
      ->delimiter(',')
      ->required();
  bench->add_option("--construction", bench_args.constructions, "Constructions to measure")
      ->delimiter(',');
  bench->add_option("--workers", bench_args.config.workers, "Concurrent instances")
      ->check(CLI::PositiveNumber);
  bench->add_option("--budget", bench_args.config.budget, "State budget (default from env)");
  bench->add_flag("--omit-timing", bench_args.omit_timing, "Leave wall_time_ns empty");
  bench->add_option("-o,--output", bench_args.output, "CSV file (default stdout)");

  OracleArgs oracle_args;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force bounded witness search");
  oracle_cmd->add_option("--max-len", oracle_args.max_len, "Longest word tried");
  oracle_cmd->add_option("bundle", oracle_args.bundle, "Bundle file")->required();

  RsArgs rs_args;
  auto* rs = app.add_subcommand("rs", "Relation satisfaction over k-tape automata");
  rs->require_subcommand(1);
  auto* rs_decide = rs->add_subcommand("decide", "Is some tuple of accepted words related?");
  rs_decide->add_option("bundle", rs_args.bundle, "Bundle file")->required();
  rs_decide->add_option("relation", rs_args.relation, "k-tape automaton file")->required();
  auto* rs_to_ie_cmd = rs->add_subcommand("to-ie", "Reduce to a (k+1)-way intersection bundle");
  rs_to_ie_cmd->add_option("bundle", rs_args.bundle, "Bundle file")->required();
  rs_to_ie_cmd->add_option("relation", rs_args.relation, "k-tape automaton file")->required();
  rs_to_ie_cmd->add_option("-o,--output", rs_args.output, "Output file (default stdout)");
  auto* rs_from_ie = rs->add_subcommand("from-ie", "Fold the last automaton into a relation");
  rs_from_ie->add_option("bundle", rs_args.bundle, "Bundle file with at least 3 automata")
      ->required();
  rs_from_ie->add_option("-o,--output", rs_args.output, "Bundle output (default stdout)");
  rs_from_ie->add_option("--relation-output", rs_args.relation_output, "Relation output file")
      ->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*product) return cmd_product(product_args, out, err);
    if (*decide) return cmd_decide(decide_args, out);
    if (*certify_cmd) return cmd_certify(certify_args, out);
    if (*verify) return cmd_verify(verify_args, out);
    if (*oracle_cmd) return cmd_oracle(oracle_args, out);
    if (*bench) return cmd_bench(bench_args, out, err);
    if (*gen_clique) {
      const UndirectedGraph g = graph_arg(gen_args.graph);
      write_output(gen_args.output, serialize_bundle(clique_to_dfas(g, gen_args.k)), out);
      return 0;
    }
    if (*gen_random) {
      const Bundle b =
          bench_instance(gen_args.k, gen_args.alphabet, gen_args.n, gen_args.density, gen_args.seed);
      write_output(gen_args.output, serialize_bundle(b), out);
      return 0;
    }
    if (*gen_graph) {
      write_output(gen_args.output, serialize_graph(random_graph(gen_args.n, gen_args.p, gen_args.seed)),
                   out);
      return 0;
    }
    if (*rs_decide || *rs_to_ie_cmd) {
      RsInstance instance{parse_bundle(read_file(rs_args.bundle)),
                          parse_multitape(read_file(rs_args.relation))};
      if (*rs_to_ie_cmd) {
        write_output(rs_args.output, serialize_bundle(rs_to_ie(instance)), out);
        return 0;
      }
      const bool sat = decide_rs(instance);
      out << (sat ? "SATISFIABLE\n" : "UNSATISFIABLE\n");
      return sat ? 0 : 1;
    }
    if (*rs_from_ie) {
      const RsInstance instance = ie_to_rs(parse_bundle(read_file(rs_args.bundle)));
      write_output(rs_args.relation_output, serialize_multitape(instance.relation), out);
      write_output(rs_args.output, serialize_bundle(instance.automata), out);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (set NFAI_STATE_BUDGET to raise it)\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  err << app.help();
  return kExitError;
}

}  // namespace nfai::cli

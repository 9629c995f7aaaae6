#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "polyesf/json_io.hpp"
#include "polyesf/necklace.hpp"
#include "polyesf/samplers.hpp"
#include "polyesf/verify.hpp"

namespace {

using namespace polyesf;

constexpr const char* kSchema = "polyesf/1";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    const int value = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer list: " + text);
    out.push_back(value);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

std::vector<BigRational> parse_rational_list(const std::string& text) {
  std::vector<BigRational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw std::invalid_argument("empty rational list");
  return out;
}

uint64_t resolve_seed(const std::string& seed_text) {
  if (!seed_text.empty()) return std::stoull(seed_text);
  std::random_device rd;
  return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

long resolve_capacity(long flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("POLYESF_CAPACITY")) {
    const long parsed = std::strtol(env, nullptr, 10);
    if (parsed > 0) return parsed;
  }
  return kDefaultEnumerationCapacity;
}

void print_row(const std::string& left, const std::string& right, size_t width) {
  std::cout << "  " << left << std::string(left.size() < width ? width - left.size() : 1, ' ')
            << right << "\n";
}

std::string partition_cell(const Json& j) {
  return to_string(partition_from_json(j));
}

// Human table rendering for --pretty; JSON stays the machine format.
void emit_table(const Json& p) {
  const std::string command = p.at("command");
  if (command == "enumerate" || command == "esf" || command == "sample" ||
      command == "necklace-check") {
    const char* list_key = command == "enumerate"   ? "partitions"
                           : command == "esf"       ? "distribution"
                           : command == "sample"    ? "histogram"
                                                    : "checks";
    std::vector<std::pair<std::string, std::string>> rows;
    size_t width = 0;
    for (const auto& item : p.at(list_key)) {
      std::string left, right;
      if (item.contains("partition")) {
        left = partition_cell(item.at("partition"));
      } else if (item.contains("cycle_structure")) {
        left = item.at("cycle_structure").dump();
      }
      if (item.contains("multi")) right = "multi=" + item.at("multi").get<std::string>();
      if (item.contains("mass")) right = "mass=" + item.at("mass").get<std::string>();
      if (item.contains("count"))
        right = "count=" + item.at("count").dump() + "  freq=" +
                item.at("frequency").dump();
      if (item.contains("status")) right += "  " + item.at("status").get<std::string>();
      width = std::max(width, left.size());
      rows.emplace_back(std::move(left), std::move(right));
    }
    for (const auto& [key, value] : p.items())
      if (!value.is_array() && !value.is_object())
        std::cout << key << "=" << (value.is_string() ? value.get<std::string>()
                                                      : value.dump())
                  << "  ";
    std::cout << "\n";
    for (const auto& [left, right] : rows) print_row(left, right, width + 2);
    return;
  }
  if (command == "necklaces") {
    std::cout << "q=" << p.at("q") << " ell=" << p.at("ell") << " count="
              << p.at("count") << "\n";
    for (const auto& item : p.at("necklaces")) {
      std::string word;
      for (const auto& c : item.at("word")) word += c.dump();
      print_row(word, "period=" + item.at("period").dump(), 12);
    }
    return;
  }
  if (command == "verify") {
    std::cout << "status=" << p.at("status").get<std::string>() << " seed="
              << p.at("seed") << "\n";
    for (const auto& item : p.at("checks")) {
      std::string right = item.at("status").get<std::string>() + "  (" +
                          item.at("instances").dump() + " instances, " +
                          item.at("seconds").dump() + "s)";
      if (item.contains("detail")) right += "  " + item.at("detail").get<std::string>();
      print_row(item.at("check").get<std::string>(), right, 20);
    }
    return;
  }
  std::cout << p.dump(2) << "\n";  // fallback, still readable
}

void emit(const Json& payload, bool pretty) {
  if (pretty)
    emit_table(payload);
  else
    std::cout << payload.dump() << "\n";
}

// ------------------------------------------------------------ subcommands

int cmd_enumerate(const std::string& n_text, int q, long capacity, bool pretty) {
  const std::vector<int> n_list = parse_int_list(n_text);

  std::vector<ColoredPartition> partitions;
  Json header;
  if (n_list.size() == 1 && q > 0) {
    partitions = enumerate_all_colored_partitions(n_list[0], q, capacity);
    header = Json{{"n", n_list[0]}, {"q", q}};
  } else {
    partitions = enumerate_colored_partitions(n_list, capacity);
    header = Json{{"n", n_list}, {"q", static_cast<int>(n_list.size())}};
  }

  Json items = Json::array();
  for (const auto& A : partitions)
    items.push_back(Json{{"partition", partition_to_json(A)},
                         {"multi", to_string(multinomial_coefficient(A))}});

  Json out{{"schema", kSchema}, {"command", "enumerate"}};
  out.update(header);
  out["count"] = partitions.size();
  out["partitions"] = std::move(items);
  emit(out, pretty);
  return kExitOk;
}

int cmd_moment(const std::string& method, const std::string& spec_path, long samples,
               const std::string& seed_text, long capacity, bool pretty) {
  Json spec;
  if (spec_path == "-") {
    std::cin >> spec;
  } else {
    std::ifstream in(spec_path);
    if (!in) throw std::invalid_argument("cannot open problem file: " + spec_path);
    in >> spec;
  }
  const MomentProblem problem = moment_problem_from_json(spec);

  Json out{{"schema", kSchema},
           {"command", "moment"},
           {"method", method},
           {"problem", moment_problem_to_json(problem)}};

  if (method == "theorem") {
    out["value"] = to_string(moment_via_theorem(problem, capacity));
  } else if (method == "matrix") {
    out["value"] = to_string(moment_via_matrix_sum(problem, capacity));
  } else if (method == "recursion") {
    out["value"] = to_string(moment_via_recursion(problem));
  } else if (method == "gamma") {
    out["value"] = to_string(gamma_moment(problem, capacity));
  } else if (method == "mc") {
    const uint64_t seed = resolve_seed(seed_text);
    RandomSource rng(seed);
    const MonteCarloEstimate est = monte_carlo_moment(problem, samples, rng);
    out["seed"] = seed;
    out["samples"] = est.samples;
    out["estimate"] = est.estimate;
    out["std_error"] = est.std_error;
  } else {
    throw std::invalid_argument("unknown method: " + method);
  }
  emit(out, pretty);
  return kExitOk;
}

int cmd_esf(int n, int q, const std::string& theta_text, const std::string& p_text,
            const std::string& conditional_text, bool check_consistency, long capacity,
            bool pretty) {
  const BigRational theta = parse_rational(theta_text);

  Json out{{"schema", kSchema}, {"command", "esf"}, {"theta", to_string(theta)}};
  int exit_code = kExitOk;

  if (!conditional_text.empty()) {
    const std::vector<int> n_vec = parse_int_list(conditional_text);
    if (n > 0) {
      int total = 0;
      for (int x : n_vec) total += x;
      if (total != n)
        throw std::invalid_argument("--conditional entries must sum to --n");
    }
    out["conditional"] = n_vec;
    out["distribution"] =
        distribution_to_json(esf_conditional(n_vec, theta, capacity));
  } else {
    std::vector<BigRational> p;
    if (!p_text.empty()) {
      p = parse_rational_list(p_text);
    } else {
      if (q < 1) throw std::invalid_argument("need --q or --p");
      p.assign(q, BigRational(1) / q);
    }
    if (q > 0 && static_cast<int>(p.size()) != q)
      throw std::invalid_argument("--p length must match --q");
    const EsfParams params(theta, p);

    Json p_json = Json::array();
    for (const auto& pj : params.p) p_json.push_back(to_string(pj));
    out["n"] = n;
    out["p"] = std::move(p_json);
    out["distribution"] = distribution_to_json(esf_distribution(n, params, capacity));

    if (check_consistency) {
      const bool consistent = n < 1 || verify_consistency(n, params, capacity);
      out["consistent"] = consistent;
      if (!consistent) exit_code = kExitVerifyFailure;
    }
  }
  emit(out, pretty);
  return exit_code;
}

int cmd_sample(const std::string& kind, int T, const std::string& theta_text,
               const std::string& p_text, long runs, const std::string& seed_text,
               bool compare_exact, long capacity, bool pretty) {
  if (runs < 1) throw std::invalid_argument("--runs must be >= 1");
  const BigRational theta_exact = parse_rational(theta_text);
  const uint64_t seed = resolve_seed(seed_text);
  RandomSource rng(seed);

  Json out{{"schema", kSchema}, {"command", "sample"},   {"sampler", kind},
           {"T", T},            {"theta", to_string(theta_exact)}, {"runs", runs},
           {"seed", seed}};

  if (kind == "perm") {
    std::map<IntegerPartition, long> counts;
    for (long r = 0; r < runs; ++r)
      counts[cycle_structure(
          sample_theta_biased_permutation(T, to_double(theta_exact), rng))] += 1;

    Json hist = Json::array();
    for (const auto& [lambda, count] : counts)
      hist.push_back(Json{{"cycle_structure", integer_partition_to_json(lambda)},
                          {"count", count},
                          {"frequency", static_cast<double>(count) / runs}});
    out["histogram"] = std::move(hist);

    if (compare_exact) {
      double tv = 0.0;
      for (const auto& lambda : enumerate_integer_partitions(T)) {
        const double exact = to_double(classical_esf_mass(lambda, theta_exact));
        auto it = counts.find(lambda);
        const double freq =
            it == counts.end() ? 0.0 : static_cast<double>(it->second) / runs;
        tv += std::abs(freq - exact);
      }
      out["tv_distance"] = tv / 2.0;
    }
    emit(out, pretty);
    return kExitOk;
  }

  std::vector<BigRational> p_exact;
  if (!p_text.empty()) {
    p_exact = parse_rational_list(p_text);
  } else {
    throw std::invalid_argument("--p is required for colored samplers");
  }
  const EsfParams exact_params(theta_exact, p_exact);
  const SamplerParams params = SamplerParams::from_exact(exact_params);

  Json p_json = Json::array();
  for (const auto& pj : p_exact) p_json.push_back(to_string(pj));
  out["p"] = std::move(p_json);

  EmpiricalHistogram hist;
  hist.runs = runs;
  for (long r = 0; r < runs; ++r) {
    const ColoredPartition A = kind == "hoppe"
                                   ? sample_hoppe_partition(T, params, rng)
                                   : sample_crp_partition(T, params, rng);
    hist.counts[A] += 1;
  }

  Json hist_json = Json::array();
  for (const auto& [A, count] : hist.counts)
    hist_json.push_back(Json{{"partition", partition_to_json(A)},
                             {"count", count},
                             {"frequency", static_cast<double>(count) / runs}});
  out["histogram"] = std::move(hist_json);

  if (compare_exact)
    out["tv_distance"] =
        total_variation(hist, esf_distribution(T, exact_params, capacity));

  emit(out, pretty);
  return kExitOk;
}

int cmd_necklaces(int q, int ell, long capacity, bool pretty) {
  Json items = Json::array();
  for (const auto& nu : enumerate_necklaces(q, ell, capacity)) {
    std::vector<int> word = nu.word;
    for (int& c : word) c += 1;  // display characters as 1..q
    items.push_back(Json{{"word", word}, {"period", nu.period}});
  }
  Json out{{"schema", kSchema}, {"command", "necklaces"}, {"q", q},
           {"ell", ell},        {"count", items.size()},  {"necklaces", std::move(items)}};
  emit(out, pretty);
  return kExitOk;
}

int cmd_necklace_check(const std::string& n_text, long capacity, bool pretty) {
  const std::vector<int> n_vec = parse_int_list(n_text);
  Json items = Json::array();
  bool all_pass = true;
  for (const auto& A : enumerate_colored_partitions(n_vec, capacity)) {
    const BigRational direct = multinomial_coefficient(A);
    const BigRational via = multinomial_via_necklaces(A, capacity);
    const bool pass = direct == via;
    all_pass &= pass;
    items.push_back(Json{{"partition", partition_to_json(A)},
                         {"multi", to_string(direct)},
                         {"necklace_sum", to_string(via)},
                         {"status", pass ? "pass" : "fail"}});
  }
  Json out{{"schema", kSchema},
           {"command", "necklace-check"},
           {"n", n_vec},
           {"status", all_pass ? "pass" : "fail"},
           {"checks", std::move(items)}};
  emit(out, pretty);
  return all_pass ? kExitOk : kExitVerifyFailure;
}

int cmd_verify(const std::vector<std::string>& only, int n_max, long runs, long samples,
               const std::string& seed_text, bool inject_fault, long capacity,
               bool pretty) {
  VerifyOptions opts;
  opts.capacity = capacity;
  if (!seed_text.empty()) opts.seed = std::stoull(seed_text);
  if (n_max > 0) opts.clamp_total(n_max);
  if (runs > 0) opts.sampler_runs = runs;
  if (samples > 0) opts.mc_samples = samples;
  opts.inject_fault = inject_fault;

  std::vector<std::string> selected = only.empty() ? check_names() : only;

  Json checks = Json::array();
  bool all_pass = true;
  for (const auto& name : selected) {
    const CheckResult r = run_check(name, opts);
    all_pass &= r.passed;
    std::cerr << (r.passed ? "[pass] " : "[FAIL] ") << r.name << " (" << r.instances
              << " instances, " << r.seconds << "s)"
              << (r.detail.empty() ? "" : ": " + r.detail) << "\n";
    Json entry{{"check", r.name},
               {"statement", r.statement},
               {"instances", r.instances},
               {"status", r.passed ? "pass" : "fail"},
               {"seconds", r.seconds}};
    if (!r.detail.empty()) entry["detail"] = r.detail;
    checks.push_back(std::move(entry));
  }

  Json out{{"schema", kSchema},
           {"command", "verify"},
           {"seed", opts.seed},
           {"status", all_pass ? "pass" : "fail"},
           {"checks", std::move(checks)}};
  emit(out, pretty);
  return all_pass ? kExitOk : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polychromatic Ewens sampling formula toolkit"};
  app.require_subcommand(1);

  app.fallthrough();  // global flags may follow the subcommand
  long capacity_flag = 0;
  bool pretty = false;
  app.add_option("--capacity", capacity_flag,
                 "enumeration size limit (default 10^7, or POLYESF_CAPACITY)");
  app.add_flag("--pretty", pretty, "render a human table instead of JSON");

  // enumerate
  std::string en_n;
  int en_q = 0;
  auto* enumerate = app.add_subcommand("enumerate", "list colored partitions");
  enumerate->add_option("--n", en_n, "color budget, e.g. 2,1 (or a total with --q)")
      ->required();
  enumerate->add_option("--q", en_q, "color count when --n is a total");

  // moment
  std::string mo_method = "theorem", mo_spec, mo_seed;
  long mo_samples = 1'000'000;
  auto* moment = app.add_subcommand("moment", "exact or Monte Carlo Dirichlet moments");
  moment->add_option("--method", mo_method, "theorem|matrix|recursion|gamma|mc");
  moment->add_option("--spec", mo_spec, "problem JSON file ('-' for stdin)")->required();
  moment->add_option("--samples", mo_samples, "Monte Carlo sample count");
  moment->add_option("--seed", mo_seed, "Monte Carlo seed");

  // esf
  int esf_n = 0, esf_q = 0;
  std::string esf_theta = "1", esf_p, esf_conditional;
  bool esf_consistency = false;
  auto* esf = app.add_subcommand("esf", "exact polychromatic Ewens distributions");
  esf->add_option("--n", esf_n, "total size");
  esf->add_option("--q", esf_q, "color count");
  esf->add_option("--theta", esf_theta, "rate parameter, exact rational")->required();
  esf->add_option("--p", esf_p, "color probabilities, e.g. 1/2,1/2");
  esf->add_option("--conditional", esf_conditional,
                  "color budget for the conditional law, e.g. 3,2");
  esf->add_flag("--verify-consistency", esf_consistency,
                "also check one-step deletion consistency");

  // sample
  std::string sa_kind, sa_theta = "1", sa_p, sa_seed;
  int sa_T = 0;
  long sa_runs = 1000;
  bool sa_compare = false;
  auto* sample = app.add_subcommand("sample", "stochastic simulators");
  sample->add_option("kind", sa_kind, "hoppe|crp|perm")->required();
  sample->add_option("--T", sa_T, "steps / degree")->required();
  sample->add_option("--theta", sa_theta, "rate parameter");
  sample->add_option("--p", sa_p, "color probabilities");
  sample->add_option("--runs", sa_runs, "number of simulations");
  sample->add_option("--seed", sa_seed, "RNG seed (generated and echoed if absent)");
  sample->add_flag("--compare-exact", sa_compare,
                   "report total-variation distance to the exact law");

  // necklaces
  int ne_q = 0, ne_ell = 0;
  auto* necklaces = app.add_subcommand("necklaces", "enumerate necklaces with periods");
  necklaces->add_option("--q", ne_q, "alphabet size")->required();
  necklaces->add_option("--ell", ne_ell, "word length")->required();

  // necklace-check
  std::string nc_n;
  auto* necklace_check = app.add_subcommand(
      "necklace-check", "verify the necklace fiber identity per partition");
  necklace_check->add_option("--n", nc_n, "color budget, e.g. 2,2")->required();

  // verify
  std::vector<std::string> ve_only;
  int ve_n_max = 0;
  long ve_runs = 0, ve_samples = 0;
  std::string ve_seed;
  bool ve_fault = false;
  auto* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--only", ve_only, "run only the named checks")
      ->transform(CLI::IsMember(check_names()));
  verify->add_option("--n-max", ve_n_max, "clamp every enumeration bound");
  verify->add_option("--runs", ve_runs, "sampler runs per configuration");
  verify->add_option("--samples", ve_samples, "Monte Carlo samples");
  verify->add_option("--seed", ve_seed, "suite seed");
  verify->add_flag("--inject-fault", ve_fault)->group("");  // negative control

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const long capacity = resolve_capacity(capacity_flag);
  try {
    if (*enumerate) return cmd_enumerate(en_n, en_q, capacity, pretty);
    if (*moment)
      return cmd_moment(mo_method, mo_spec, mo_samples, mo_seed, capacity, pretty);
    if (*esf)
      return cmd_esf(esf_n, esf_q, esf_theta, esf_p, esf_conditional, esf_consistency,
                     capacity, pretty);
    if (*sample)
      return cmd_sample(sa_kind, sa_T, sa_theta, sa_p, sa_runs, sa_seed, sa_compare,
                        capacity, pretty);
    if (*necklaces) return cmd_necklaces(ne_q, ne_ell, capacity, pretty);
    if (*necklace_check) return cmd_necklace_check(nc_n, capacity, pretty);
    if (*verify)
      return cmd_verify(ve_only, ve_n_max, ve_runs, ve_samples, ve_seed, ve_fault,
                        capacity, pretty);
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

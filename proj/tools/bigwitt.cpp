#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "bigwitt/cft.hpp"
#include "bigwitt/duality.hpp"
#include "bigwitt/io.hpp"
#include "bigwitt/ptypical.hpp"
#include "bigwitt/witt.hpp"
#include "checks.hpp"

namespace {

using namespace bigwitt;
using io::json;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kDisagreement = 2;

struct Flags {
  std::string job_path;
  // pair
  bool algebraic = false;
  bool geometric = false;
  bool both = false;
  // pi1, lang-census
  std::optional<unsigned> n, d, s;
  std::optional<std::uint64_t> q;
  bool oracle = false;
  std::optional<std::uint64_t> pairs;
  // selftest, lang-census
  std::optional<std::string> suite;
  std::optional<std::uint64_t> seed;
  double scale = 1.0;
};

json read_job(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidInput, "cannot open job file " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
  json j = json::parse(text);
  if (!j.is_object()) fail(ErrorKind::InvalidInput, "job must be a JSON object");
  return j;
}

const json& need(const json& job, const char* key) {
  if (!job.contains(key)) fail(ErrorKind::InvalidInput, std::string("job is missing \"") + key + "\"");
  return job.at(key);
}

template <typename T>
T pick(const std::optional<T>& flag, const json& job, const char* key) {
  if (flag) return *flag;
  const json& v = need(job, key);
  if (!v.is_number_unsigned()) fail(ErrorKind::InvalidInput, std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<T>();
}

std::vector<WittElement> witt_args(const Ring& ring, const json& job, std::size_t count) {
  const json& args = need(job, "args");
  if (!args.is_array() || args.size() != count) {
    fail(ErrorKind::InvalidInput, "\"args\" must hold " + std::to_string(count) + " series");
  }
  std::vector<WittElement> out;
  for (const auto& a : args) out.emplace_back(io::series_from_json(ring, a));
  return out;
}

json run_witt(const std::string& cmd, const json& job) {
  const Ring& ring = io::ring_from_json(need(job, "ring"));
  if (cmd == "add") {
    const auto a = witt_args(ring, job, 2);
    return json{{"result", io::to_json(witt_add(a[0], a[1]).series())}};
  }
  if (cmd == "neg") return json{{"result", io::to_json(witt_neg(witt_args(ring, job, 1)[0]).series())}};
  if (cmd == "mul") {
    const auto a = witt_args(ring, job, 2);
    return json{{"result", io::to_json(witt_mul(a[0], a[1]).series())}};
  }
  if (cmd == "coords") return json{{"result", io::to_json(witt_coordinates(witt_args(ring, job, 1)[0]))}};
  if (cmd == "from-coords") {
    return json{{"result", io::to_json(from_coordinates(io::coordinates_from_json(ring, need(job, "coords"))).series())}};
  }
  // decompose
  const OneVarComponentFamily fam = decompose(witt_args(ring, job, 1)[0]);
  json comps = json::array();
  for (const auto& [nu, c] : fam.components) comps.push_back(json{{"nu", nu.exponents()}, {"component", io::to_json(c.series())}});
  return json{{"result", comps}};
}

json run_ah_exp(const json& job) {
  const Ring& ring = io::ring_from_json(need(job, "ring"));
  const unsigned j = job.contains("j") ? need(job, "j").get<unsigned>() : 1;
  const unsigned d = need(job, "d").get<unsigned>();
  if (j == 0 || d == 0) fail(ErrorKind::InvalidInput, "j and d must be positive");
  if (job.contains("vector")) {
    return json{{"result", io::to_json(artin_hasse_exp(io::pwitt_from_json(ring, job.at("vector")), j, d).series())}};
  }
  return json{{"result", io::to_json(artin_hasse_exp(io::element_from_json(ring, need(job, "x")), j, d).series())}};
}

int run_pair(const Flags& flags, const json& job, json& out) {
  const Ring& ring = io::ring_from_json(need(job, "ring"));
  TruncatedSeries fs = io::series_from_json(ring, need(job, "f"));
  fs.set_exact(true);
  const FormalWittElement f(fs);
  const WittElement g(io::series_from_json(ring.residue_field(), need(job, "g")));
  const bool both = flags.both || (flags.algebraic && flags.geometric);
  const bool algebraic = both || flags.algebraic || !flags.geometric;
  const bool geometric = both || flags.geometric;
  std::optional<RingElement> a, b;
  if (algebraic) {
    a = job.contains("d") ? cartier_pair(f, g, job.at("d").get<unsigned>()) : cartier_pair(f, g);
    out["algebraic"] = io::to_json(*a);
  }
  if (geometric) {
    b = job.contains("m") ? geometric_pair(f, g, job.at("m").get<unsigned>()) : geometric_pair(f, g);
    out["geometric"] = io::to_json(*b);
  }
  if (a && b) {
    out["agree"] = *a == *b;
    if (!(*a == *b)) return kDisagreement;
  }
  return kOk;
}

int run_pi1(const Flags& flags, const json& job, json& out) {
  const unsigned n = pick(flags.n, job, "n");
  const std::uint64_t q = pick(flags.q, job, "q");
  const unsigned d = pick(flags.d, job, "d");
  const bool oracle = flags.oracle || (job.contains("oracle") && job.at("oracle").get<bool>());
  const AbelianGroupStructure formula = pi1_truncated(n, q, d);
  if (!oracle) {
    out = io::to_json(formula);
    return kOk;
  }
  const auto brute = brute_force_structure(enumerate_lambda(Ring::get(Field::of_order(q), 1), n, d), witt_add);
  AbelianGroupStructure shown;
  shown.factors = brute.factors;
  shown.order = brute.order;
  out = io::to_json(shown);
  if (brute.factors != formula.factors) {
    out["formula"] = io::to_json(formula);
    return kDisagreement;
  }
  return kOk;
}

int run_census(const Flags& flags, const json& job, json& out) {
  const unsigned n = pick(flags.n, job, "n");
  const std::uint64_t q = pick(flags.q, job, "q");
  const unsigned s = pick(flags.s, job, "s");
  const unsigned d = pick(flags.d, job, "d");
  const std::uint64_t pairs = flags.pairs ? *flags.pairs : job.value("pairs", std::uint64_t{200000});
  const std::uint64_t seed = flags.seed ? *flags.seed : job.value("seed", std::uint64_t{1});
  const LangCensus c = lang_kernel_census(n, q, s, d, pairs, seed);
  out = io::to_json(c);
  return c.ok() ? kOk : kDisagreement;
}

int run_selftest(const Flags& flags, const json& job, json& out) {
  const std::string name = flags.suite ? *flags.suite : job.value("suite", std::string("all"));
  checks::CheckOptions opts;
  opts.seed = flags.seed ? *flags.seed : job.value("seed", std::uint64_t{1});
  opts.scale = job.contains("scale") ? job.at("scale").get<double>() : flags.scale;
  if (!(opts.scale > 0)) fail(ErrorKind::InvalidInput, "scale must be positive");
  json results = json::array();
  bool pass = true;
  for (const auto& c : checks::suite(name)) {
    const checks::CheckResult r = checks::run_check(c, opts);
    results.push_back(json{{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    pass = pass && r.pass;
  }
  out = json{{"suite", name}, {"seed", opts.seed}, {"results", results}, {"pass", pass}};
  return pass ? kOk : kDisagreement;
}

bool needs_payload(const std::string& cmd) {
  return cmd != "pi1" && cmd != "lang-census" && cmd != "selftest";
}

int dispatch(const std::string& cmd, const Flags& flags, const json& job, json& out) {
  if (job.contains("command") && job.at("command") != cmd) {
    fail(ErrorKind::InvalidInput, "job command \"" + job.at("command").get<std::string>() + "\" does not match " + cmd);
  }
  if (cmd == "add" || cmd == "neg" || cmd == "mul" || cmd == "coords" || cmd == "from-coords" || cmd == "decompose") {
    out = run_witt(cmd, job);
    return kOk;
  }
  if (cmd == "ah-exp") {
    out = run_ah_exp(job);
    return kOk;
  }
  if (cmd == "pair") return run_pair(flags, job, out);
  if (cmd == "pi1") return run_pi1(flags, job, out);
  if (cmd == "lang-census") return run_census(flags, job, out);
  if (cmd == "selftest") return run_selftest(flags, job, out);
  fail(ErrorKind::InvalidInput, "unknown command \"" + cmd + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Big Witt vectors over F_q[eps]/(eps^nil): JSON batch front end"};
  app.set_version_flag("--version", std::string("bigwitt schema ") + io::kSchemaVersion);
  Flags flags;
  app.add_option("--job", flags.job_path, "job file; '-' or omitted reads stdin");
  app.require_subcommand(0, 1);
  for (const char* name : {"add", "neg", "mul", "coords", "from-coords", "decompose", "ah-exp"}) {
    app.add_subcommand(name)->fallthrough();
  }
  auto* pair = app.add_subcommand("pair", "Cartier pairing <f, g>")->fallthrough();
  pair->add_flag("--algebraic", flags.algebraic, "(f * g)(1)");
  pair->add_flag("--geometric", flags.geometric, "resultant route");
  pair->add_flag("--both", flags.both, "both routes; exit 2 on mismatch");
  auto* pi1 = app.add_subcommand("pi1", "truncated abelian fundamental group of affine space")->fallthrough();
  pi1->add_option("--n", flags.n);
  pi1->add_option("--q", flags.q);
  pi1->add_option("--d", flags.d);
  pi1->add_flag("--oracle", flags.oracle, "brute-force path, cross-checked against the formula");
  auto* census = app.add_subcommand("lang-census", "kernel of the Lang map")->fallthrough();
  census->add_option("--n", flags.n);
  census->add_option("--q", flags.q);
  census->add_option("--s", flags.s);
  census->add_option("--d", flags.d);
  census->add_option("--pairs", flags.pairs, "endomorphism pair budget");
  census->add_option("--seed", flags.seed);
  auto* self = app.add_subcommand("selftest", "module property suites")->fallthrough();
  self->add_option("--suite", flags.suite)->check(CLI::IsMember(checks::suite_names()));
  self->add_option("--seed", flags.seed);
  self->add_option("--scale", flags.scale, "sample count multiplier");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cout << io::error_json(ErrorKind::InvalidInput, e.what()).dump() << "\n";
    return kInputError;
  }

  json out;
  int code = kOk;
  try {
    std::string cmd;
    if (!app.get_subcommands().empty()) cmd = app.get_subcommands().front()->get_name();
    const bool read = !flags.job_path.empty() || cmd.empty() || needs_payload(cmd);
    const json job = read ? read_job(flags.job_path) : json::object();
    if (cmd.empty()) {
      if (!job.contains("command")) fail(ErrorKind::InvalidInput, "no subcommand and no \"command\" in the job");
      cmd = job.at("command").get<std::string>();
    }
    code = dispatch(cmd, flags, job, out);
  } catch (const Error& e) {
    out = io::error_json(e.kind(), e.detail());
    code = kInputError;
  } catch (const json::exception& e) {
    out = io::error_json(ErrorKind::InvalidInput, e.what());
    code = kInputError;
  }
  std::cout << out.dump() << "\n";
  return code;
}

// freeconv: command-line front end for the free-convolution library.
// Exit codes: 0 success, 1 numeric/contract failure, 2 usage or parse error.

#include <complex>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "freeconv/acceptance.hpp"
#include "freeconv/chains.hpp"
#include "freeconv/finiten.hpp"
#include "freeconv/json_io.hpp"
#include "freeconv/noncrossing.hpp"
#include "freeconv/sampler.hpp"
#include "freeconv/transforms.hpp"
#include "freeconv/triplets.hpp"

namespace {

using freeconv::cd;
using nlohmann::json;

// CSV numbers print with '.' decimal in any locale; streams stay unimbued.
std::string num(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + " must be a nonempty list");
  return out;
}

std::string cycle_label(const std::vector<int>& type) {
  std::string s;
  for (std::size_t i = 0; i < type.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(type[i]);
  }
  return s;
}

// --- nc ------------------------------------------------------------------

int run_nc(int n) {
  if (n < 1 || n > freeconv::kNoncrossingCap)
    throw std::invalid_argument("nc degree must be between 1 and " +
                                std::to_string(freeconv::kNoncrossingCap));
  std::cout << "n,noncrossing,simple_chains\n";
  for (int k = 1; k <= n; ++k) {
    std::cout << k << ',' << freeconv::enumerate_noncrossing(k).size() << ',';
    if (k <= freeconv::kChainDegreeCap)
      std::cout << freeconv::count_simple_chains(freeconv::Permutation::long_cycle(k));
    std::cout << '\n';
  }
  return 0;
}

// --- series ---------------------------------------------------------------

int run_series(const std::string& op, const std::string& moments_text,
               const std::string& series_text, const std::string& second_text) {
  auto need = [](const std::string& text, const char* flag) -> json {
    if (text.empty())
      throw std::invalid_argument(std::string("this series operation needs ") + flag);
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("invalid JSON: " + text);
    return j;
  };

  if (op == "s-from-moments") {
    auto m = freeconv::moments_from_json(need(moments_text, "--moments"));
    std::cout << freeconv::series_to_json(freeconv::s_from_moments(m)) << '\n';
    return 0;
  }
  if (op == "moments-from-s") {
    auto s = freeconv::series_from_json(need(series_text, "--series"));
    std::cout << freeconv::moments_to_json(freeconv::moments_from_s(s)) << '\n';
    return 0;
  }
  if (op == "free-cumulants") {
    auto m = freeconv::moments_from_json(need(moments_text, "--moments"));
    auto kappa = freeconv::free_cumulants_from_moments(m);
    json out = json::array();
    for (std::size_t k = 1; k < kappa.size(); ++k)
      out.push_back(json::array({kappa[k].real(), kappa[k].imag()}));
    std::cout << json{{"cumulants", out}} << '\n';
    return 0;
  }
  if (op == "boxtimes" || op == "boxplus") {
    auto a = freeconv::moments_from_json(need(moments_text, "--moments"));
    auto b = freeconv::moments_from_json(need(second_text, "--with"));
    auto c = op == "boxtimes" ? freeconv::boxtimes(a, b) : freeconv::boxplus(a, b);
    std::cout << freeconv::moments_to_json(c) << '\n';
    return 0;
  }
  throw std::invalid_argument(
      "unknown series operation '" + op +
      "' (expected s-from-moments, moments-from-s, free-cumulants, boxtimes, boxplus)");
}

// --- map -------------------------------------------------------------------

int run_map(const std::string& name, const std::string& triplet_text) {
  freeconv::TripletVariant t = freeconv::triplet_from_string(triplet_text);

  auto classical = [&]() -> const freeconv::AddClassicalTriplet& {
    if (const auto* p = std::get_if<freeconv::AddClassicalTriplet>(&t)) return *p;
    throw std::invalid_argument("map " + name + " takes an add-classical triplet");
  };

  if (name == "lambda") {
    std::cout << freeconv::triplet_to_json(freeconv::lambda_map(classical())) << '\n';
    return 0;
  }
  if (name == "estar") {
    std::cout << freeconv::triplet_to_json(freeconv::estar_map(classical())) << '\n';
    return 0;
  }
  if (name == "eboxplus") {
    if (const auto* p = std::get_if<freeconv::AddFreeTriplet>(&t)) {
      std::cout << freeconv::triplet_to_json(freeconv::eboxplus_map(*p)) << '\n';
      return 0;
    }
    throw std::invalid_argument("map eboxplus takes an add-free triplet");
  }
  if (name == "gamma") {
    if (const auto* p = std::get_if<freeconv::MultFreeTriplet>(&t)) {
      std::cout << freeconv::triplet_to_json(freeconv::gamma_map(*p)) << '\n';
      return 0;
    }
    throw std::invalid_argument("map gamma takes a mult-free triplet");
  }
  if (name == "diagram") {
    std::cout << "commutes: " << (freeconv::diagram_check(classical()) ? "true" : "false")
              << '\n';
    return 0;
  }
  throw std::invalid_argument("unknown map '" + name +
                              "' (expected lambda, estar, eboxplus, gamma, diagram)");
}

// --- moments ----------------------------------------------------------------

int run_moments(const std::string& triplet_text, int order) {
  freeconv::TripletVariant t = freeconv::triplet_from_string(triplet_text);

  if (const auto* mf = std::get_if<freeconv::MultFreeTriplet>(&t)) {
    if (order < 1 || order > freeconv::kChainDegreeCap)
      throw std::invalid_argument("moment order must be between 1 and " +
                                  std::to_string(freeconv::kChainDegreeCap));
    freeconv::MomentSequence via_series =
        freeconv::moments_from_s(freeconv::s_series_from_triplet(*mf, order + 4));
    std::cout << "k,chain_re,chain_im,series_re,series_im\n";
    for (int k = 1; k <= order; ++k) {
      cd chain = freeconv::moments_from_triplet(*mf, freeconv::Permutation::long_cycle(k));
      cd series = via_series.moment(k);
      std::cout << k << ',' << num(chain.real()) << ',' << num(chain.imag()) << ','
                << num(series.real()) << ',' << num(series.imag()) << '\n';
    }
    return 0;
  }
  if (const auto* mc = std::get_if<freeconv::MultClassicalTriplet>(&t)) {
    if (order < 1 || order > 64)
      throw std::invalid_argument("Fourier order must be between 1 and 64");
    std::cout << "k,char_re,char_im\n";
    for (int k = 1; k <= order; ++k) {
      cd v = freeconv::char_function(*mc, k);
      std::cout << k << ',' << num(v.real()) << ',' << num(v.imag()) << '\n';
    }
    return 0;
  }
  throw std::invalid_argument("moments takes a mult-free or mult-classical triplet");
}

// --- finite-n ----------------------------------------------------------------

int run_finite_n(const std::string& triplet_text, const std::string& cycle_text,
                 const std::string& n_text) {
  freeconv::TripletVariant t = freeconv::triplet_from_string(triplet_text);
  const auto* mf = std::get_if<freeconv::MultFreeTriplet>(&t);
  if (!mf) throw std::invalid_argument("finite-n takes a mult-free triplet");

  std::vector<int> type = parse_int_list(cycle_text, "--cycle");
  int degree = 0;
  for (int c : type) {
    if (c < 1) throw std::invalid_argument("--cycle entries must be positive");
    degree += c;
  }
  if (degree > freeconv::kFinitenCap)
    throw std::invalid_argument("total cycle length is capped at " +
                                std::to_string(freeconv::kFinitenCap));
  const freeconv::Permutation sigma = freeconv::Permutation::from_cycle_type(type);
  const double ell = static_cast<double>(type.size());

  const cd limit = freeconv::limit_trace_moments(*mf, sigma);
  std::cout << "N,exact_re,exact_im,limit_re,limit_im\n";
  for (int N : parse_int_list(n_text, "--N")) {
    if (N < 1) throw std::invalid_argument("--N entries must be positive");
    cd exact = freeconv::exact_trace_moments(freeconv::gamma_n(*mf, N), sigma) /
               std::pow(static_cast<double>(N), ell);
    std::cout << N << ',' << num(exact.real()) << ',' << num(exact.imag()) << ','
              << num(limit.real()) << ',' << num(limit.imag()) << '\n';
  }
  return 0;
}

// --- sample ------------------------------------------------------------------

int run_sample(const std::string& model_text, std::uint64_t samples, int steps,
               std::uint64_t seed, int kmax, const std::string& cycles_text) {
  freeconv::ModelVariant model = freeconv::model_from_string(model_text);
  const bool unitary = std::holds_alternative<freeconv::UnitaryModel>(model);
  if (kmax < 0) throw std::invalid_argument("--kmax must be nonnegative");
  if (kmax == 0 && cycles_text.empty()) kmax = 4;

  std::cout << "k,estimate_re,estimate_im,stderr\n";

  freeconv::SampleConfig cfg;
  cfg.n_samples = samples;
  cfg.brownian_steps = steps;
  cfg.seed = seed;
  if (unitary)
    cfg.model = std::get<freeconv::UnitaryModel>(model);
  else
    cfg.model = std::get<freeconv::HermitianModel>(model);

  if (kmax > 0) {
    freeconv::EmpiricalMoments em = freeconv::empirical_spectral_moments(cfg, kmax);
    for (int k = 1; k <= kmax; ++k) {
      const auto i = static_cast<std::size_t>(k - 1);
      std::cout << k << ',' << num(em.estimates[i].real()) << ',' << num(em.estimates[i].imag())
                << ',' << num(em.stderrs[i]) << '\n';
    }
  }

  if (!cycles_text.empty()) {
    std::vector<std::vector<int>> types;
    std::stringstream ss(cycles_text);
    std::string group;
    while (std::getline(ss, group, ';')) types.push_back(parse_int_list(group, "--cycles"));

    if (unitary) {
      freeconv::EmpiricalMoments em = freeconv::empirical_cycle_products(
          std::get<freeconv::UnitaryModel>(model), types, samples, steps, seed);
      for (std::size_t c = 0; c < types.size(); ++c)
        std::cout << cycle_label(types[c]) << ',' << num(em.estimates[c].real()) << ','
                  << num(em.estimates[c].imag()) << ',' << num(em.stderrs[c]) << '\n';
    } else {
      for (const auto& type : types) {
        freeconv::EmpiricalMoments em = freeconv::empirical_trace_products(cfg, type);
        std::cout << cycle_label(type) << ',' << num(em.estimates[0].real()) << ','
                  << num(em.estimates[0].imag()) << ',' << num(em.stderrs[0]) << '\n';
      }
    }
  }

  json summary = {{"model_kind", unitary ? "unitary" : "hermitian"},
                  {"samples", samples},
                  {"steps", steps},
                  {"seed", seed}};
  std::cout << "# " << summary << '\n';
  return 0;
}

// --- verify -------------------------------------------------------------------

int run_verify(bool full, bool as_json, std::uint64_t seed, int threads) {
  freeconv::acceptance::Options opt;
  opt.full = full;
  opt.seed = seed;
  opt.threads = threads;

  if (!as_json)
    std::cout << "acceptance gate (" << (full ? "full" : "fast") << " tier, seed " << seed
              << ")\n";
  auto results = freeconv::acceptance::run_all(opt, as_json ? nullptr : &std::cout);

  int failed = 0;
  for (const auto& r : results)
    if (!r.pass) ++failed;

  if (as_json) {
    json criteria = json::array();
    for (const auto& r : results)
      criteria.push_back({{"key", r.key},
                          {"pass", r.pass},
                          {"seconds", r.seconds},
                          {"detail", r.detail}});
    json report = {{"tier", full ? "full" : "fast"},
                   {"seed", seed},
                   {"criteria", criteria},
                   {"passed", static_cast<int>(results.size()) - failed},
                   {"failed", failed}};
    std::cout << report.dump(2) << '\n';
  } else {
    if (failed == 0)
      std::cout << "all criteria passed\n";
    else
      std::cout << failed << " criteria failed (" << results.size() << " total)\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free-convolution semigroups, Weingarten calculus, and matrix models"};
  app.require_subcommand(1);

  // nc
  int nc_n = 0;
  CLI::App* nc = app.add_subcommand("nc", "noncrossing partition and simple chain counts");
  nc->add_option("n", nc_n, "largest degree to tabulate")->required();

  // series
  std::string series_op, series_moments, series_series, series_with;
  CLI::App* series = app.add_subcommand("series", "moment / S-transform dictionary");
  series->add_option("op", series_op,
                     "s-from-moments | moments-from-s | free-cumulants | boxtimes | boxplus")
      ->required();
  series->add_option("--moments", series_moments, "moment sequence JSON");
  series->add_option("--series", series_series, "series JSON");
  series->add_option("--with", series_with, "second moment sequence JSON (boxtimes/boxplus)");

  // map
  std::string map_name, map_triplet;
  CLI::App* map = app.add_subcommand("map", "semigroup homomorphisms on triplets");
  map->add_option("name", map_name, "lambda | estar | eboxplus | gamma | diagram")->required();
  map->add_option("--triplet", map_triplet, "triplet JSON")->required();

  // moments
  std::string mom_triplet;
  int mom_order = 6;
  CLI::App* moments = app.add_subcommand("moments", "moment table from a triplet");
  moments->add_option("--triplet", mom_triplet, "triplet JSON")->required();
  moments->add_option("--order", mom_order, "highest moment order (default 6)");

  // finite-n
  std::string fn_triplet, fn_cycle, fn_ns;
  CLI::App* finite_n = app.add_subcommand("finite-n", "exact vs limit trace moments");
  finite_n->add_option("--triplet", fn_triplet, "mult-free triplet JSON")->required();
  finite_n->add_option("--cycle", fn_cycle, "cycle type, e.g. 1 or 2,1")->required();
  finite_n->add_option("--N", fn_ns, "comma-separated dimensions, e.g. 2,4,8")->required();

  // sample
  std::string sm_model, sm_cycles;
  std::uint64_t sm_samples = 1000, sm_seed = 0;
  int sm_steps = 200, sm_kmax = 0;
  CLI::App* sample = app.add_subcommand("sample", "Monte Carlo moments of a matrix model");
  sample->add_option("--model", sm_model, "model JSON")->required();
  sample->add_option("--samples", sm_samples, "number of samples (default 1000)");
  sample->add_option("--steps", sm_steps, "Brownian steps (default 200)");
  sample->add_option("--seed", sm_seed, "RNG seed (default 0)");
  sample->add_option("--kmax", sm_kmax, "spectral moment orders 1..kmax");
  sample->add_option("--cycles", sm_cycles, "cycle types, e.g. '1;2;1,1'");

  // verify
  bool vf_full = false, vf_fast = false, vf_json = false;
  std::uint64_t vf_seed = 1;
  int vf_threads = 0;
  CLI::App* verify = app.add_subcommand("verify", "run the acceptance gate");
  verify->add_flag("--full", vf_full, "overnight tier (10x Monte Carlo samples)");
  verify->add_flag("--fast", vf_fast, "desk tier (default)");
  verify->add_flag("--json", vf_json, "machine-readable report");
  verify->add_option("--seed", vf_seed, "RNG seed (default 1)");
  verify->add_option("--threads", vf_threads, "worker threads (default: ambient)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(nc)) return run_nc(nc_n);
    if (app.got_subcommand(series))
      return run_series(series_op, series_moments, series_series, series_with);
    if (app.got_subcommand(map)) return run_map(map_name, map_triplet);
    if (app.got_subcommand(moments)) return run_moments(mom_triplet, mom_order);
    if (app.got_subcommand(finite_n)) return run_finite_n(fn_triplet, fn_cycle, fn_ns);
    if (app.got_subcommand(sample))
      return run_sample(sm_model, sm_samples, sm_steps, sm_seed, sm_kmax, sm_cycles);
    if (app.got_subcommand(verify)) {
      if (vf_full && vf_fast) throw std::invalid_argument("choose one of --fast / --full");
      return run_verify(vf_full, vf_json, vf_seed, vf_threads);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

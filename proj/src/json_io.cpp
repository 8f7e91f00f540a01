#include "freeconv/json_io.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace freeconv {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) fail("invalid JSON: " + text);
  return j;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) fail(std::string(what) + " must be a JSON object");
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      fail(std::string("unknown key '") + item.key() + "' in " + what);
}

double get_number(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) fail(std::string("'") + key + "' must be a number");
  return j[key].get<double>();
}

bool get_bool(const json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_boolean()) fail(std::string("'") + key + "' must be a boolean");
  return j[key].get<bool>();
}

AtomicMeasure get_levy(const json& j, Space space) {
  if (!j.contains("levy")) return AtomicMeasure::zero(space);
  const json& lv = j["levy"];
  if (!lv.is_array()) fail("'levy' must be an array of [location, weight] pairs");
  std::vector<Atom> atoms;
  for (const json& entry : lv) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      fail("each 'levy' entry must be a [location, weight] number pair");
    atoms.push_back({entry[0].get<double>(), entry[1].get<double>()});
  }
  return space == Space::kRealLine ? AtomicMeasure::real_line(std::move(atoms))
                                   : AtomicMeasure::circle(std::move(atoms));
}

Idempotent get_idempotent(const json& j) {
  if (!j.contains("idempotent")) return Idempotent::trivial();
  const json& v = j["idempotent"];
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return Idempotent::infinite();
    fail("'idempotent' must be a positive integer or \"inf\"");
  }
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() < 1)
    fail("'idempotent' must be a positive integer or \"inf\"");
  return Idempotent::finite(v.get<std::uint64_t>());
}

json levy_to_json(const AtomicMeasure& m) {
  json out = json::array();
  for (const Atom& at : m.atoms()) out.push_back(json::array({at.location, at.weight}));
  return out;
}

json pairs_to_json(const std::vector<cd>& v) {
  json out = json::array();
  for (cd c : v) out.push_back(json::array({c.real(), c.imag()}));
  return out;
}

std::vector<cd> pairs_from_json(const json& arr, const char* what) {
  if (!arr.is_array()) fail(std::string("'") + what + "' must be an array of [re, im] pairs");
  std::vector<cd> out;
  for (const json& entry : arr) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number())
      fail(std::string("each '") + what + "' entry must be a [re, im] number pair");
    out.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return out;
}

}  // namespace

TripletVariant triplet_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail("triplet JSON must be an object with a string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "add-classical") {
    check_keys(j, {"kind", "drift", "gauss", "levy"}, "an add-classical triplet");
    return AddClassicalTriplet(get_number(j, "drift", 0.0), get_number(j, "gauss", 0.0),
                               get_levy(j, Space::kRealLine));
  }
  if (kind == "add-free") {
    check_keys(j, {"kind", "drift", "gauss", "levy"}, "an add-free triplet");
    return AddFreeTriplet(get_number(j, "drift", 0.0), get_number(j, "gauss", 0.0),
                          get_levy(j, Space::kRealLine));
  }
  if (kind == "mult-classical") {
    check_keys(j, {"kind", "drift", "gauss", "levy", "idempotent"}, "a mult-classical triplet");
    return MultClassicalTriplet(get_number(j, "drift", 0.0), get_number(j, "gauss", 0.0),
                                get_levy(j, Space::kCircle), get_idempotent(j));
  }
  if (kind == "mult-free") {
    check_keys(j, {"kind", "drift", "gauss", "levy", "haar"}, "a mult-free triplet");
    return MultFreeTriplet(get_number(j, "drift", 0.0), get_number(j, "gauss", 0.0),
                           get_levy(j, Space::kCircle), get_bool(j, "haar", false));
  }
  fail("unknown triplet kind '" + kind + "'");
}

TripletVariant triplet_from_string(const std::string& text) {
  return triplet_from_json(parse_text(text));
}

nlohmann::json triplet_to_json(const TripletVariant& t) {
  json out;
  if (const auto* ac = std::get_if<AddClassicalTriplet>(&t)) {
    out["kind"] = "add-classical";
    out["drift"] = ac->eta;
    out["gauss"] = ac->a;
    out["levy"] = levy_to_json(ac->levy);
  } else if (const auto* af = std::get_if<AddFreeTriplet>(&t)) {
    out["kind"] = "add-free";
    out["drift"] = af->eta;
    out["gauss"] = af->a;
    out["levy"] = levy_to_json(af->levy);
  } else if (const auto* mc = std::get_if<MultClassicalTriplet>(&t)) {
    out["kind"] = "mult-classical";
    out["drift"] = mc->omega_angle;
    out["gauss"] = mc->b;
    out["levy"] = levy_to_json(mc->levy);
    if (mc->idempotent.is_infinite)
      out["idempotent"] = "inf";
    else
      out["idempotent"] = mc->idempotent.m;
  } else {
    const auto& mf = std::get<MultFreeTriplet>(t);
    out["kind"] = "mult-free";
    out["drift"] = mf.omega_angle;
    out["gauss"] = mf.b;
    out["levy"] = levy_to_json(mf.levy);
    out["haar"] = mf.haar;
  }
  return out;
}

ModelVariant model_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail("model JSON must be an object with a string 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (!j.contains("N") || !j["N"].is_number_integer() || j["N"].get<long long>() < 1)
    fail("model JSON needs a positive integer 'N'");
  const int N = j["N"].get<int>();

  if (kind == "hermitian") {
    if (j.contains("triplet")) {
      check_keys(j, {"kind", "N", "triplet"}, "a hermitian model");
      TripletVariant t = triplet_from_json(j["triplet"]);
      if (!std::holds_alternative<AddFreeTriplet>(t))
        fail("a hermitian model takes an add-free triplet");
      return pi_n(std::get<AddFreeTriplet>(t), N);
    }
    check_keys(j, {"kind", "N", "eta", "gauss", "levy"}, "a hermitian model");
    return HermitianModel(N, get_number(j, "eta", 0.0), get_number(j, "gauss", 0.0),
                          get_levy(j, Space::kRealLine));
  }
  if (kind == "unitary") {
    if (j.contains("triplet")) {
      check_keys(j, {"kind", "N", "triplet"}, "a unitary model");
      TripletVariant t = triplet_from_json(j["triplet"]);
      if (!std::holds_alternative<MultFreeTriplet>(t))
        fail("a unitary model takes a mult-free triplet");
      return gamma_n(std::get<MultFreeTriplet>(t), N);
    }
    check_keys(j, {"kind", "N", "y0", "alpha", "beta", "levy", "haar"}, "a unitary model");
    return UnitaryModel(N, get_number(j, "y0", 0.0), get_number(j, "alpha", 0.0),
                        get_number(j, "beta", 0.0), get_levy(j, Space::kCircle),
                        get_bool(j, "haar", false));
  }
  fail("unknown model kind '" + kind + "'");
}

ModelVariant model_from_string(const std::string& text) {
  return model_from_json(parse_text(text));
}

nlohmann::json series_to_json(const TruncatedSeries& s) {
  json out;
  out["order"] = s.order();
  out["coeffs"] = pairs_to_json(s.coeffs());
  return out;
}

TruncatedSeries series_from_json(const json& j) {
  check_keys(j, {"order", "coeffs"}, "a series");
  if (!j.contains("order") || !j["order"].is_number_integer() || j["order"].get<int>() < 0)
    fail("series JSON needs a nonnegative integer 'order'");
  if (!j.contains("coeffs")) fail("series JSON needs 'coeffs'");
  return TruncatedSeries(j["order"].get<int>(), pairs_from_json(j["coeffs"], "coeffs"));
}

nlohmann::json moments_to_json(const MomentSequence& m) {
  json out;
  out["order"] = m.order();
  out["moments"] = pairs_to_json(m.m);
  return out;
}

MomentSequence moments_from_json(const json& j) {
  check_keys(j, {"order", "moments"}, "a moment sequence");
  if (!j.contains("moments")) fail("moment JSON needs 'moments'");
  MomentSequence m = make_moment_sequence(pairs_from_json(j["moments"], "moments"));
  if (j.contains("order") && j["order"].get<int>() != m.order())
    fail("'order' disagrees with the length of 'moments'");
  return m;
}

nlohmann::json element_to_json(const GroupAlgebraElement& x) {
  json out = json::array();
  for (std::uint64_t r = 0; r < x.dim(); ++r) {
    cd c = x.coeff_by_rank(r);
    if (c == cd(0.0)) continue;
    Permutation p = perm_unrank(x.degree(), r);
    out.push_back({{"perm", p.one_line()}, {"re", c.real()}, {"im", c.imag()}});
  }
  return out;
}

}  // namespace freeconv

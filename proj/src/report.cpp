#include "ratext/report.hpp"

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace ratext {

std::string ratext_version() { return "1.0.0"; }

std::string end_sign_str(const EndSign& s) {
  if (s.sign == 0) return "0";
  std::string core = s.sign > 0 ? "+" : "-";
  return s.zero_limit ? "0" + core : core;
}

EndSign end_sign_from_str(std::string_view s) {
  if (s == "0") return EndSign{0, false};
  if (s == "+") return EndSign{1, false};
  if (s == "-") return EndSign{-1, false};
  if (s == "0+") return EndSign{1, true};
  if (s == "0-") return EndSign{-1, true};
  throw std::invalid_argument("bad end-sign string: " + std::string(s));
}

namespace {

BigRational json_rational(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field: ") + key);
  auto v = parse_rational(j.at(key).get<std::string>());
  if (!v) throw std::invalid_argument(std::string("not an exact rational: ") + key);
  return *v;
}

}  // namespace

Json params_to_json(FamilyId f, const ParameterSet& p) {
  Json j;
  if (f == FamilyId::HDPT) {
    j["alpha"] = rat_str(p.alpha);
    j["beta"] = rat_str(p.beta);
  } else {
    j["a"] = rat_str(p.a);
    j["b"] = rat_str(p.b);
  }
  return j;
}

ParameterSet params_from_json(FamilyId f, const Json& j) {
  if (f == FamilyId::HDPT)
    return make_params_unchecked(f, json_rational(j, "alpha"), json_rational(j, "beta"));
  return make_params_unchecked(f, json_rational(j, "a"), json_rational(j, "b"));
}

Json spec_to_json(const ExtensionSpec& spec) {
  Json j = params_to_json(spec.family, spec.params);
  j["family"] = family_name(spec.family);
  j["n"] = spec.n;
  return j;
}

ExtensionSpec spec_from_json(const Json& j) {
  auto fam = family_from_name(j.at("family").get<std::string>());
  if (!fam) throw std::invalid_argument("unknown family: " + j.at("family").get<std::string>());
  ExtensionSpec spec;
  spec.family = *fam;
  spec.params = params_from_json(*fam, j);
  spec.n = j.at("n").get<int>();
  return spec;
}

Json certificate_to_json(const RegularityCertificate& cert) {
  Json j;
  j["node_count"] = cert.node_count;
  j["signs"] = Json{{"left", end_sign_str(cert.left_sign)}, {"right", end_sign_str(cert.right_sign)}};
  j["sector"] = sector_name(cert.sector.cls);
  if (cert.sector.hrm_case != 0) j["hrm_case"] = cert.sector.hrm_case;
  j["verdict"] = cert.certified ? "certified-regular" : "rejected";
  j["isospectral_kind"] = cert.quasi ? "quasi" : "strict";
  if (cert.reciprocal_is_ground) j["reciprocal_is_ground"] = true;
  return j;
}

RegularityCertificate certificate_from_json(const Json& j) {
  RegularityCertificate cert;
  cert.node_count = j.at("node_count").get<int>();
  cert.left_sign = end_sign_from_str(j.at("signs").at("left").get<std::string>());
  cert.right_sign = end_sign_from_str(j.at("signs").at("right").get<std::string>());
  auto sec = sector_from_name(j.at("sector").get<std::string>());
  if (!sec) throw std::invalid_argument("unknown sector: " + j.at("sector").get<std::string>());
  cert.sector.cls = *sec;
  cert.sector.left = cert.left_sign;
  cert.sector.right = cert.right_sign;
  cert.sector.hrm_case = j.value("hrm_case", 0);
  cert.certified = j.at("verdict").get<std::string>() == "certified-regular";
  cert.quasi = j.at("isospectral_kind").get<std::string>() == "quasi";
  cert.reciprocal_is_ground = j.value("reciprocal_is_ground", false);
  return cert;
}

Json rational_function_to_json(const RationalFunction& rf) {
  Json num = Json::array(), den = Json::array();
  for (const auto& c : rf.num().coeffs()) num.push_back(rat_str(c));
  for (const auto& c : rf.den().coeffs()) den.push_back(rat_str(c));
  Json j;
  j["variable"] = std::string(1, rf.var());
  j["numerator"] = num;
  j["denominator"] = den;
  return j;
}

RationalFunction rational_function_from_json(const Json& j, char var) {
  auto coeffs = [&](const char* key) {
    std::vector<BigRational> v;
    for (const auto& item : j.at(key)) {
      auto q = parse_rational(item.get<std::string>());
      if (!q) throw std::invalid_argument("not an exact rational coefficient");
      v.push_back(*q);
    }
    return v;
  };
  return RationalFunction(Poly(coeffs("numerator"), var), Poly(coeffs("denominator"), var));
}

void atomic_write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path dir = target.parent_path();
  if (dir.empty()) dir = ".";
  fs::path tmp = dir / (target.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace ratext

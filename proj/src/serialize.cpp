#include "mi/serialize.hpp"

namespace mi {

namespace {

Int int_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw InputError(std::string("expected an integer for ") + what);
}

Rat rat_from_json(const Json& j, const char* what) {
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw InputError(std::string("expected a rational \"p/q\" for ") + what);
}

long long small_int(const Int& v) { return v.convert_to<long long>(); }

Json gens_array(const std::vector<ExponentVector>& gens) {
  Json out = Json::array();
  for (const auto& g : gens) {
    Json row = Json::array();
    for (const auto& e : g) row.push_back(small_int(e));
    out.push_back(std::move(row));
  }
  return out;
}

} // namespace

Json ideal_json(const MonomialIdeal& a) {
  Json j;
  j["vars"] = a.dim();
  j["gens"] = gens_array(a.gens());
  return j;
}

MonomialIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens"))
    throw InputError("ideal JSON needs \"vars\" and \"gens\"");
  int vars = j.at("vars").get<int>();
  if (!j.at("gens").is_array() || j.at("gens").empty())
    throw InputError("gens must be nonempty");
  std::vector<ExponentVector> gens;
  for (const auto& row : j.at("gens")) {
    if (!row.is_array()) throw InputError("each generator must be an exponent array");
    ExponentVector g;
    for (const auto& e : row) g.push_back(int_from_json(e, "gens"));
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(vars, std::move(gens));
}

Json divisor_json(const SncDivisor& d) {
  Json j;
  j["vars"] = d.dim;
  Json coeffs = Json::array();
  for (const auto& c : d.coeffs) coeffs.push_back(format_rat(c));
  j["coeffs"] = std::move(coeffs);
  if (d.principal) {
    Json p;
    Json expo = Json::array();
    for (const auto& e : d.principal->first) expo.push_back(small_int(e));
    p["exponent"] = std::move(expo);
    p["weight"] = format_rat(d.principal->second);
    j["principal"] = std::move(p);
  }
  return j;
}

SncDivisor divisor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("coeffs"))
    throw InputError("divisor JSON needs \"vars\" and \"coeffs\"");
  SncDivisor d;
  d.dim = j.at("vars").get<int>();
  for (const auto& c : j.at("coeffs")) d.coeffs.push_back(rat_from_json(c, "coeffs"));
  if (j.contains("principal")) {
    const auto& p = j.at("principal");
    ExponentVector u;
    for (const auto& e : p.at("exponent")) u.push_back(int_from_json(e, "exponent"));
    d.principal = {std::move(u), rat_from_json(p.at("weight"), "weight")};
  }
  return d;
}

Json family_json(const GradedFamily& f) {
  Json j;
  j["vars"] = f.dim();
  switch (f.kind()) {
    case FamilyKind::powers:
      j["kind"] = "powers";
      j["base"] = ideal_json(f.base());
      break;
    case FamilyKind::polytope: {
      j["kind"] = "polytope";
      Json facets = Json::array();
      for (const auto& face : f.region().facets()) {
        Json row;
        Json normal = Json::array();
        for (const auto& x : face.normal) normal.push_back(small_int(x));
        row["normal"] = std::move(normal);
        row["offset"] = format_rat(face.offset);
        facets.push_back(std::move(row));
      }
      j["facets"] = std::move(facets);
      break;
    }
    case FamilyKind::table: {
      j["kind"] = "table";
      Json members = Json::array();
      for (const auto& m : f.members()) members.push_back(ideal_json(m));
      j["members"] = std::move(members);
      j["extend"] = f.extend_products() ? "products" : "none";
      if (f.stride() != 1) j["stride"] = small_int(f.stride());
      break;
    }
  }
  return j;
}

GradedFamily family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("kind"))
    throw InputError("family JSON needs \"vars\" and \"kind\"");
  int vars = j.at("vars").get<int>();
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "powers") {
    auto base = ideal_from_json(j.at("base"));
    if (base.dim() != vars) throw InputError("family base dimension mismatch");
    return GradedFamily::powers(std::move(base));
  }
  if (kind == "polytope") {
    std::vector<Facet> facets;
    if (!j.contains("facets") || !j.at("facets").is_array() || j.at("facets").empty())
      throw InputError("polytope family needs a nonempty \"facets\" array");
    for (const auto& row : j.at("facets")) {
      Facet f;
      for (const auto& x : row.at("normal")) f.normal.push_back(int_from_json(x, "normal"));
      f.offset = rat_from_json(row.at("offset"), "offset");
      facets.push_back(std::move(f));
    }
    return GradedFamily::polytope(NewtonRegion::from_facets(vars, std::move(facets)));
  }
  if (kind == "table") {
    std::vector<MonomialIdeal> members;
    for (const auto& m : j.at("members")) {
      members.push_back(ideal_from_json(m));
      if (members.back().dim() != vars) throw InputError("table member dimension mismatch");
    }
    bool extend = j.contains("extend") && j.at("extend").get<std::string>() == "products";
    auto f = GradedFamily::table(std::move(members), extend);
    if (j.contains("stride")) {
      Int stride = int_from_json(j.at("stride"), "stride");
      f = f.reindexed(stride);
    }
    return f;
  }
  throw InputError("unknown family kind: " + kind);
}

Json report_json(const VerificationReport& r) {
  Json j;
  j["check"] = r.check;
  j["trials"] = r.trials;
  if (r.vacuous > 0) j["vacuous"] = r.vacuous;
  if (r.inconclusive > 0) j["inconclusive"] = r.inconclusive;
  Json v = Json::array();
  for (const auto& violation : r.violations) {
    Json entry = Json::parse(violation.detail);
    entry["trial"] = violation.trial;
    v.push_back(std::move(entry));
  }
  j["violations"] = std::move(v);
  j["seed"] = r.seed;
  j["status"] = r.passed() ? "PASS" : "FAIL";
  return j;
}

Json asymptotic_json(const AsymptoticResult& r) {
  Json j;
  j["ideal"] = ideal_json(r.ideal);
  j["k0"] = small_int(r.k0);
  j["certified"] = r.certified;
  Json chain = Json::array();
  for (const auto& [k, jk] : r.chain) {
    Json entry;
    entry["k"] = small_int(k);
    entry["ideal"] = ideal_json(jk);
    chain.push_back(std::move(entry));
  }
  j["chain"] = std::move(chain);
  return j;
}

Json volume_json(const VolumeEstimate& v) {
  Json j;
  Json seq = Json::array();
  for (const auto& [k, col, norm] : v.sequence) {
    Json entry;
    entry["k"] = small_int(k);
    entry["colength"] = small_int(col);
    entry["normalized"] = format_rat(norm);
    seq.push_back(std::move(entry));
  }
  j["sequence"] = std::move(seq);
  if (v.exact_limit) j["exact_limit"] = format_rat(*v.exact_limit);
  j["bracket_low"] = format_rat(v.bracket_low);
  j["bracket_high"] = format_rat(v.bracket_high);
  Json chain = Json::array();
  for (const auto& [k, e] : v.multiplicity_chain) {
    Json entry;
    entry["k"] = small_int(k);
    entry["normalized_multiplicity"] = format_rat(e);
    chain.push_back(std::move(entry));
  }
  j["multiplicity_chain"] = std::move(chain);
  return j;
}

Json fujita_json(const FujitaCertificate& c) {
  Json j;
  j["p"] = small_int(c.p);
  j["achieved"] = format_rat(c.achieved);
  j["target"] = format_rat(c.target);
  j["epsilon"] = format_rat(c.epsilon);
  j["reached"] = c.reached;
  Json truncated;
  truncated["kind"] = "powers";
  truncated["base"] = ideal_json(c.truncation_base);
  j["truncated_family"] = std::move(truncated);
  j["asymptotic_ideal"] = ideal_json(c.asymptotic_ideal);
  j["base_ideal_contained"] = c.base_ideal_contained;
  return j;
}

std::string ext_json_value(const ExtRat& e) { return format_ext(e); }

} // namespace mi

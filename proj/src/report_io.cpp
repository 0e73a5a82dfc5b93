#include "rrmono/report_io.hpp"

#include <sstream>

#include "rrmono/errors.hpp"

namespace rrmono {

using nlohmann::json;

namespace {

EuClass eu_class_from(const std::string& s) {
  for (EuClass c : {EuClass::Parameter, EuClass::MiddleClass, EuClass::NeighborClass,
                    EuClass::ThreeGenerator, EuClass::General})
    if (s == to_string(c)) return c;
  throw InputError("unknown class name in report: " + s);
}

template <class T>
std::string join(const std::vector<T>& v, const std::string& sep) {
  std::ostringstream os;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) os << sep;
    os << v[k];
  }
  return os.str();
}

}  // namespace

json report_to_json(const AnalysisReport& R) {
  json j;
  j["schema"] = 1;
  j["d"] = R.d;
  j["A"] = R.A;  // already sorted ascending
  j["r_J"] = R.r_J;
  j["reg_rees"] = R.regR;
  j["reg_fiber"] = R.regF;
  j["s"] = R.s;
  j["s_star"] = R.s_star;
  j["s_ini"] = R.s_ini;
  j["e"] = R.e;
  j["eu_equal"] = R.eu_equal;
  j["eu_class"] = to_string(R.eu_class);
  json cls = json::array();
  for (EuClass c : R.classes) cls.push_back(to_string(c));
  j["classes"] = cls;
  j["invariance"] = R.invariance;
  j["is_cm"] = R.is_cm;
  j["is_buchsbaum"] = R.is_buchsbaum;
  j["h1"] = R.h1;
  if (!R.rr_generators.empty()) {
    json rr = json::array();
    for (const RRGenerators& g : R.rr_generators) {
      json e;
      e["n"] = g.n;
      e["t_used"] = g.t_used;
      json gens = json::array();
      for (const Monomial2& m : g.gens) gens.push_back({m.i, m.j});
      e["gens"] = gens;
      rr.push_back(e);
    }
    j["rr_generators"] = rr;
  }
  return j;
}

AnalysisReport report_from_json(const json& j) {
  if (!j.contains("schema") || j.at("schema").get<Int>() != 1)
    throw InputError("unsupported report schema");
  AnalysisReport R;
  R.d = j.at("d").get<Int>();
  R.A = j.at("A").get<std::vector<Int>>();
  R.r_J = j.at("r_J").get<Int>();
  R.regR = j.at("reg_rees").get<Int>();
  R.regF = j.at("reg_fiber").get<Int>();
  R.s = j.at("s").get<Int>();
  R.s_star = j.at("s_star").get<Int>();
  R.s_ini = j.at("s_ini").get<Int>();
  R.e = j.at("e").get<Int>();
  R.eu_equal = j.at("eu_equal").get<bool>();
  R.eu_class = eu_class_from(j.at("eu_class").get<std::string>());
  R.classes.clear();
  for (const auto& c : j.at("classes")) R.classes.push_back(eu_class_from(c.get<std::string>()));
  R.invariance = j.at("invariance").get<bool>();
  R.is_cm = j.at("is_cm").get<bool>();
  R.is_buchsbaum = j.at("is_buchsbaum").get<bool>();
  R.h1 = j.at("h1").get<std::vector<Int>>();
  if (j.contains("rr_generators")) {
    for (const auto& e : j.at("rr_generators")) {
      RRGenerators g;
      g.n = e.at("n").get<Int>();
      g.t_used = e.at("t_used").get<Int>();
      for (const auto& m : e.at("gens"))
        g.gens.push_back({m.at(0).get<Int>(), m.at(1).get<Int>()});
      R.rr_generators.push_back(std::move(g));
    }
  }
  return R;
}

std::string report_human(const AnalysisReport& R) {
  std::ostringstream os;
  os << "ideal            " << to_string(ideal_of(GeneratorSet(R.d, R.A))) << "\n";
  os << "d                " << R.d << "\n";
  os << "A                {" << join(R.A, ", ") << "}\n";
  os << "e (multiplicity) " << R.e << "\n";
  os << "r_J              " << R.r_J << "   (J = (x^" << R.d << ", y^" << R.d << "))\n";
  os << "reg R            " << R.regR << "\n";
  os << "reg F            " << R.regF << "\n";
  os << "s                " << R.s << "\n";
  os << "s*               " << R.s_star << "\n";
  os << "s*_ini           " << R.s_ini << "\n";
  std::vector<std::string> cls;
  for (EuClass c : R.classes) cls.push_back(to_string(c));
  os << "class            " << to_string(R.eu_class) << "  [" << join(cls, ", ") << "]\n";
  os << "reg R = reg F    " << (R.eu_equal ? "yes" : "no") << "\n";
  os << "invariance       " << (R.invariance ? "yes (s* < r_J)" : "no") << "\n";
  os << "Cohen-Macaulay   " << (R.is_cm ? "yes" : "no") << "\n";
  os << "Buchsbaum        " << (R.is_buchsbaum ? "yes" : "no") << "\n";
  os << "h1 (n=1..)       [" << join(R.h1, ", ") << "]\n";
  for (const RRGenerators& g : R.rr_generators) {
    os << "closure n=" << g.n << " (t=" << g.t_used << ") ";
    std::vector<std::string> gens;
    for (const Monomial2& m : g.gens) gens.push_back(to_string(m));
    os << join(gens, ", ") << "\n";
  }
  return os.str();
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  return out + "\"";
}

std::string csv_header() {
  return "d,A,r_J,reg_rees,reg_fiber,s,s_star,s_ini,e,eu_class,classes,eu_equal,"
         "invariance,is_cm,is_buchsbaum,h1";
}

std::string csv_row(const AnalysisReport& R) {
  std::vector<std::string> cls;
  for (EuClass c : R.classes) cls.push_back(to_string(c));
  std::ostringstream os;
  os << R.d << ',' << csv_escape(join(R.A, " ")) << ',' << R.r_J << ',' << R.regR
     << ',' << R.regF << ',' << R.s << ',' << R.s_star << ',' << R.s_ini << ','
     << R.e << ',' << to_string(R.eu_class) << ',' << csv_escape(join(cls, " "))
     << ',' << (R.eu_equal ? 1 : 0) << ',' << (R.invariance ? 1 : 0) << ','
     << (R.is_cm ? 1 : 0) << ',' << (R.is_buchsbaum ? 1 : 0) << ','
     << csv_escape(join(R.h1, " "));
  return os.str();
}

}  // namespace rrmono

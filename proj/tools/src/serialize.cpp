#include "dcorr/tools/serialize.hpp"

#include <sstream>

#include "dcorr/errors.hpp"

namespace dcorr::tools {

namespace {

const json& field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw UsageError(std::string("missing field '") + key + "'");
  return obj.at(key);
}

int as_int(const json& v, const char* what) {
  if (!v.is_number_integer()) throw UsageError(std::string(what) + " must be an integer");
  return v.get<int>();
}

BigRational as_rational(const json& v) {
  if (!v.is_string()) throw UsageError("rational values are strings");
  return parse_rational(v.get<std::string>());
}

}  // namespace

json laurent_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"exps_x2", e}, {"val", to_string(c)}});
  return out;
}

LaurentPoly laurent_from_json(const VarTablePtr& vars, const json& terms) {
  if (!terms.is_array()) throw UsageError("polynomial must be a term array");
  LaurentPoly p(vars);
  for (const auto& t : terms) {
    const json& e = field(t, "exps_x2");
    if (!e.is_array() || e.size() != vars->size()) throw UsageError("exps_x2 has the wrong length");
    Exponents exps;
    for (const auto& x : e) exps.push_back(as_int(x, "exponent"));
    BigRational c = as_rational(field(t, "val"));
    if (c == 0) throw UsageError("zero coefficient in a stored term");
    p.add_term(exps, c);
  }
  return p;
}

json to_json(const HalfSeries& s, const std::optional<EvalPoint>& point) {
  json doc;
  json names = json::array();
  for (const auto& d : s.vars()->descriptors()) names.push_back(d.name);
  doc["variables"] = names;
  doc["order_x2"] = s.order_x2() ? json(*s.order_x2()) : json(nullptr);
  json terms = json::array();
  for (const auto& [e, c] : s.terms())
    terms.push_back({{"q_x2", e}, {"coeff", {{"num", laurent_to_json(c.num())}, {"den", laurent_to_json(c.den())}}}});
  doc["terms"] = terms;
  if (point) {
    json pts = json::array();
    for (std::size_t i = 0; i < point->values.size(); ++i)
      pts.push_back({{"name", point->names[i]}, {"sqrt", to_string(point->values[i])}});
    doc["point"] = pts;
  }
  return doc;
}

HalfSeries series_from_json(const json& doc) {
  const json& names = field(doc, "variables");
  if (!names.is_array()) throw UsageError("variables must be an array");
  std::vector<VarDesc> descs;
  for (const auto& n : names) {
    if (!n.is_string() || n.get<std::string>().empty()) throw UsageError("variable names are nonempty strings");
    const std::string name = n.get<std::string>();
    descs.push_back({name, name[0] == 'z' ? VarKind::Z : VarKind::T});
  }
  VarTablePtr vars = VarTable::make(std::move(descs));
  const json& ord = field(doc, "order_x2");
  std::optional<int> order;
  if (!ord.is_null()) {
    order = as_int(ord, "order_x2");
  }
  const json& terms = field(doc, "terms");
  if (!terms.is_array()) throw UsageError("terms must be an array");
  int low = 0;
  for (const auto& t : terms) low = std::min(low, as_int(field(t, "q_x2"), "q_x2"));
  HalfSeries s(vars, order, low);
  for (const auto& t : terms) {
    const int e = as_int(field(t, "q_x2"), "q_x2");
    if (order && e > *order) throw UsageError("term above the stated order");
    const json& c = field(t, "coeff");
    LaurentPoly num = laurent_from_json(vars, field(c, "num"));
    LaurentPoly den = laurent_from_json(vars, field(c, "den"));
    if (num.is_zero()) throw UsageError("zero coefficient in a stored term");
    s.add_term(e, RatFunc::reduce(std::move(num), std::move(den)));
  }
  return s;
}

std::optional<EvalPoint> point_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("point")) return std::nullopt;
  EvalPoint p;
  for (const auto& e : doc.at("point")) {
    const json& name = field(e, "name");
    if (!name.is_string()) throw UsageError("point names are strings");
    p.names.push_back(name.get<std::string>());
    p.values.push_back(as_rational(field(e, "sqrt")));
  }
  return p;
}

std::string q_power(int q_x2) { return "q^{" + HalfInt::from_x2(q_x2).str() + "}"; }

std::string to_text(const HalfSeries& s, const std::optional<EvalPoint>& point) {
  std::ostringstream out;
  out << "variables:";
  for (const auto& d : s.vars()->descriptors()) out << ' ' << d.name;
  out << '\n';
  if (point) {
    out << "point:";
    for (std::size_t i = 0; i < point->values.size(); ++i)
      out << ' ' << point->names[i] << "^{1/2}=" << to_string(point->values[i]);
    out << '\n';
  }
  out << "order: " << (s.order_x2() ? HalfInt::from_x2(*s.order_x2()).str() : std::string("exact")) << '\n';
  for (const auto& [e, c] : s.terms()) out << q_power(e) << ": " << c.str() << '\n';
  return out.str();
}

}  // namespace dcorr::tools

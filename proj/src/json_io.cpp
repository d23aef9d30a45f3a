#include "qheis/json_io.hpp"

namespace qheis {

Json scalar_to_json(const Scalar& s) {
  if (s.mode() == QMode::numeric) return rat_str(s.rat());
  Json j = Json::object();
  for (const auto& [e, c] : s.laur().terms()) j[std::to_string(e)] = rat_str(c);
  return j;
}

Scalar scalar_from_json(const Json& j, QMode mode) {
  if (j.is_string()) {
    const Rational r = rat_parse(j.get<std::string>());
    return Scalar::from_rational(mode, r);
  }
  if (j.is_number_integer()) return Scalar::from_rational(mode, Rational(j.get<long>()));
  if (j.is_object()) {
    QLaurent l;
    for (const auto& [key, val] : j.items())
      l.add_term(std::stol(key), rat_parse(val.get<std::string>()));
    return Scalar::laurent(l);
  }
  fail(Errc::bad_argument, "scalar JSON must be a string or an exponent map");
}

Json qparam_to_json(const QParam& q) {
  Json j;
  j["mode"] = q.mode == QMode::numeric ? "numeric" : "symbolic";
  if (q.mode == QMode::numeric) j["value"] = rat_str(q.value);
  return j;
}

QParam qparam_from_json(const Json& j) {
  const std::string mode = j.at("mode").get<std::string>();
  if (mode == "symbolic") return QParam::symbolic();
  if (mode == "numeric") {
    QParam q = QParam::numeric(rat_parse(j.at("value").get<std::string>()));
    validate_q(q);
    return q;
  }
  fail(Errc::bad_argument, "qparam mode must be 'numeric' or 'symbolic'");
}

Json unipoly_to_json(const UniPoly& p) {
  Json arr = Json::array();
  for (int i = 0; i <= p.degree(); ++i) arr.push_back(scalar_to_json(p.coeff(i)));
  return arr;
}

UniPoly unipoly_from_json(const Json& j, QMode mode) {
  std::vector<Scalar> cs;
  for (const auto& c : j) cs.push_back(scalar_from_json(c, mode));
  return UniPoly::from_coeffs(std::move(cs));
}

Json element_to_json(const AlgebraElement& e) {
  Json j;
  j["q"] = qparam_to_json(e.qparam());
  Json terms = Json::array();
  for (const auto& [jj, p] : e.terms()) {
    Json t;
    t["j"] = jj;
    t["p"] = unipoly_to_json(p);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

AlgebraElement element_from_json(const Json& j) {
  const QParam q = qparam_from_json(j.at("q"));
  AlgebraElement e(q);
  for (const auto& t : j.at("terms"))
    e = e + AlgebraElement::monomial(q, t.at("j").get<int>(),
                                     unipoly_from_json(t.at("p"), q.mode));
  return e;
}

Json bipoly_to_json(const BiPoly& b) {
  Json terms = Json::array();
  for (const auto& [k, c] : b.terms()) {
    Json t;
    t["l"] = k.l;
    t["m"] = k.m;
    t["c"] = scalar_to_json(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

BiPoly bipoly_from_json(const Json& j, QMode mode) {
  BiPoly b;
  for (const auto& t : j.at("terms"))
    b.add_term(MonoLM{t.at("l").get<int>(), t.at("m").get<int>()},
               scalar_from_json(t.at("c"), mode));
  return b;
}

Json tripoly_to_json(const TriPoly& p) {
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) {
    Json t;
    t["x"] = k.x;
    t["l"] = k.l;
    t["m"] = k.m;
    t["c"] = scalar_to_json(c);
    terms.push_back(std::move(t));
  }
  Json j;
  j["terms"] = std::move(terms);
  return j;
}

TriPoly tripoly_from_json(const Json& j, QMode mode) {
  TriPoly p;
  for (const auto& t : j.at("terms"))
    p.add_term(MonoXLM{t.at("x").get<int>(), t.at("l").get<int>(), t.at("m").get<int>()},
               scalar_from_json(t.at("c"), mode));
  return p;
}

Json curveset_to_json(const CurveSet& cs) {
  Json j;
  j["m"] = cs.m;
  j["n"] = cs.n;
  j["s"] = cs.s;
  j["t"] = cs.t;
  Json deltas = Json::array();
  for (const auto& d : cs.delta) deltas.push_back(bipoly_to_json(d));
  j["delta"] = std::move(deltas);
  j["Delta"] = tripoly_to_json(cs.Delta);
  return j;
}

Json report_to_json(const VerificationReport& rep) {
  Json j;
  j["commuting"] = rep.commuting;
  j["pass"] = rep.pass;
  Json residuals = Json::array();
  for (const auto& r : rep.residuals) {
    Json t;
    t["i"] = r.i;
    t["delta"] = bipoly_to_json(r.delta);
    t["residual"] = element_to_json(r.residual);
    t["zero"] = r.zero;
    residuals.push_back(std::move(t));
  }
  j["residuals"] = std::move(residuals);
  Json checks;
  checks["lambda_leading"] = rep.checks.lambda_leading;
  checks["mu_leading"] = rep.checks.mu_leading;
  checks["x_degree_le_s"] = rep.checks.x_degree_le_s;
  checks["some_delta_nonzero"] = rep.checks.some_delta_nonzero;
  checks["q_degree_in_range"] =
      rep.checks.q_degree_in_range ? Json(*rep.checks.q_degree_in_range) : Json(nullptr);
  checks["coeffs_integral"] =
      rep.checks.coeffs_integral ? Json(*rep.checks.coeffs_integral) : Json(nullptr);
  j["checks"] = std::move(checks);
  j["curves"] = curveset_to_json(rep.curves);
  return j;
}

Json window_to_json(const LaurentWindow& w) {
  Json j;
  j["lo"] = w.lo;
  Json cs = Json::array();
  for (const auto& c : w.coeffs) cs.push_back(scalar_to_json(c));
  j["coeffs"] = std::move(cs);
  j["trusted"] = Json::array({w.t_lo, w.t_hi});
  return j;
}

Json kernel_report_to_json(const KernelReport& rep) {
  Json j;
  j["d_max"] = rep.d_max;
  j["d_min"] = rep.d_min;
  j["n_max"] = rep.n_max;
  j["n_min"] = rep.n_min;
  j["dim"] = rep.dim;
  j["lower"] = rep.lower;
  j["upper"] = rep.upper;
  return j;
}

} // namespace qheis

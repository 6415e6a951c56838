#include "dca/json_io.hpp"

#include <bit>
#include <stdexcept>

namespace dca {

namespace {

Json integer_to_json(const Integer& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() &&
      n <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(n);
  return n.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer or integer string");
}

Json rational_to_json(const Rational& r) {
  return Json::array({integer_to_json(numerator(r)), integer_to_json(denominator(r))});
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected [num, den]");
  return Rational(integer_from_json(j[0]), integer_from_json(j[1]));
}

}  // namespace

Json to_json(const Scalar& s) {
  Json terms = Json::array();
  for (const auto& [w, c] : s.terms()) {
    Json t;
    t["re"] = rational_to_json(c.re);
    t["im"] = rational_to_json(c.im);
    Json cexp = Json::array(), sexp = Json::array();
    for (int p = 1; p <= w.angle_count(); ++p) {
      cexp.push_back(w.cos_exp(p));
      sexp.push_back(w.sin_exp(p));
    }
    t["c"] = cexp;
    t["s"] = sexp;
    t["eps"] = w.has_epsilon() ? 1 : 0;
    terms.push_back(t);
  }
  return terms;
}

Scalar scalar_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("scalar: expected an array of terms");
  Scalar out;
  for (const auto& t : j) {
    Scalar mono(GaussianRational(rational_from_json(t.at("re")), rational_from_json(t.at("im"))));
    const auto& cexp = t.at("c");
    const auto& sexp = t.at("s");
    if (cexp.size() != sexp.size()) throw std::invalid_argument("scalar: c/s length mismatch");
    for (std::size_t p = 0; p < cexp.size(); ++p) {
      const int pi = static_cast<int>(p) + 1;
      for (std::uint32_t e = 0; e < cexp[p].get<std::uint32_t>(); ++e)
        mono *= Scalar::cos_half(pi);
      for (std::uint32_t e = 0; e < sexp[p].get<std::uint32_t>(); ++e)
        mono *= Scalar::sin_half(pi);
    }
    if (t.value("eps", 0) != 0) mono *= Scalar::epsilon();
    out += mono;
  }
  return out;
}

Json to_json(const CliffordElement& c) {
  Json blades = Json::array();
  for (const auto& [b, s] : c.terms()) {
    Json entry;
    Json word = Json::array();
    for (BladeMask rest = b; rest;) {
      const int gen = std::countr_zero(rest);
      rest &= rest - 1;
      word.push_back(blade_token(gen));
    }
    entry["word"] = word;
    entry["coeff"] = to_json(s);
    blades.push_back(entry);
  }
  return Json{{"blades", blades}, {"m", c.dim()}};
}

CliffordElement clifford_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  CliffordElement out(m);
  for (const auto& entry : j.at("blades")) {
    CliffordElement blade = CliffordElement::scalar(m, scalar_from_json(entry.at("coeff")));
    for (const auto& tok : entry.at("word")) {
      const int gen = blade_token_parse(tok.get<std::string>());
      const int coord = gen / 2 + 1;
      blade = blade * (gen % 2 == 0 ? CliffordElement::fwd(coord, m)
                                    : CliffordElement::bwd(coord, m));
    }
    out += blade;
  }
  return out;
}

namespace {

Json exponents_to_json(std::uint64_t packed, int m) {
  Json a = Json::array();
  for (int j = 0; j < m; ++j) a.push_back(mi::get(packed, j));
  return a;
}

std::uint64_t exponents_from_json(const Json& j, int m) {
  if (static_cast<int>(j.size()) != m) throw std::invalid_argument("exponent array length mismatch");
  std::uint64_t packed = 0;
  for (int i = 0; i < m; ++i) packed = mi::with(packed, i, j[i].get<std::uint32_t>());
  return packed;
}

Json mask_to_json(std::uint32_t mask, int m) {
  Json a = Json::array();
  for (int j = 0; j < m; ++j)
    if (mask & (1u << j)) a.push_back(j + 1);
  return a;
}

std::uint32_t mask_from_json(const Json& j) {
  std::uint32_t mask = 0;
  for (const auto& idx : j) mask |= 1u << (idx.get<int>() - 1);
  return mask;
}

}  // namespace

Json to_json(const PolyState& f) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : f.terms())
    terms.push_back(Json{{"alpha", exponents_to_json(alpha, f.dim())}, {"coeff", to_json(c)}});
  return Json{{"m", f.dim()}, {"terms", terms}};
}

PolyState poly_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  PolyState out(m);
  for (const auto& t : j.at("terms"))
    out.add_term(exponents_from_json(t.at("alpha"), m), clifford_from_json(t.at("coeff")));
  return out;
}

Json to_json(const DistState& d) {
  Json terms = Json::array();
  for (const auto& [beta, c] : d.terms())
    terms.push_back(Json{{"beta", exponents_to_json(beta, d.dim())}, {"coeff", to_json(c)}});
  return Json{{"m", d.dim()}, {"terms", terms}};
}

DistState dist_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  DistState out(m);
  for (const auto& t : j.at("terms"))
    out.add_term(exponents_from_json(t.at("beta"), m), clifford_from_json(t.at("coeff")));
  return out;
}

Json to_json(const OperatorElement& a) {
  Json terms = Json::array();
  for (const auto& [w, s] : a.terms()) {
    terms.push_back(Json{{"xi", exponents_to_json(w.xi, a.dim())},
                         {"del", exponents_to_json(w.del, a.dim())},
                         {"r", mask_to_json(w.r, a.dim())},
                         {"t", mask_to_json(w.t, a.dim())},
                         {"coeff", to_json(s)}});
  }
  return Json{{"m", a.dim()}, {"terms", terms}};
}

OperatorElement operator_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  OperatorElement out(m);
  for (const auto& t : j.at("terms")) {
    OpWord w;
    w.xi = exponents_from_json(t.at("xi"), m);
    w.del = exponents_from_json(t.at("del"), m);
    w.r = mask_from_json(t.at("r"));
    w.t = mask_from_json(t.at("t"));
    out.add_term(w, scalar_from_json(t.at("coeff")));
  }
  return out;
}

Json to_json(const RtElement& a) {
  Json terms = Json::array();
  for (const auto& [w, s] : a.terms())
    terms.push_back(Json{{"r", mask_to_json(w.r, a.dim())},
                         {"t", mask_to_json(w.t, a.dim())},
                         {"coeff", to_json(s)}});
  return Json{{"m", a.dim()}, {"terms", terms}};
}

RtElement rt_from_json(const Json& j) {
  const int m = j.at("m").get<int>();
  RtElement out(m);
  for (const auto& t : j.at("terms"))
    out.add_term(RtWord{mask_from_json(t.at("r")), mask_from_json(t.at("t"))},
                 scalar_from_json(t.at("coeff")));
  return out;
}

Json to_json(const SpinElement& s) {
  Json factors = Json::array();
  for (const auto& f : s.factors()) {
    Json coords = Json::array();
    for (const auto& c : f.coords) coords.push_back(to_json(c));
    factors.push_back(coords);
  }
  return Json{{"factors", factors},
              {"family", s.family() == Family::R ? "R" : "T"},
              {"value", to_json(s.value())}};
}

SpinElement spin_from_json(const Json& j) {
  const Family fam = j.at("family").get<std::string>() == "T" ? Family::T : Family::R;
  const RtElement value = rt_from_json(j.at("value"));
  const auto& factors = j.at("factors");
  if (factors.empty()) return SpinElement::unchecked(fam, value);
  std::vector<RtVector> fs;
  for (const auto& coords : factors) {
    RtVector v;
    v.family = fam;
    for (const auto& c : coords) v.coords.push_back(scalar_from_json(c));
    fs.push_back(std::move(v));
  }
  SpinElement s = SpinElement::from_factors(fam, std::move(fs), value.dim());
  if (!(s.value() == value)) throw std::invalid_argument("factor list does not match value");
  return s;
}

AngleSpec parse_angle_spec(const std::string& text) {
  AngleSpec spec;
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
  if (t == "sym") {
    spec.symbolic = true;
    return spec;
  }
  if (t.size() < 2 || t.substr(t.size() - 2) != "pi")
    throw std::invalid_argument("angle must be 'sym' or a rational multiple of pi like '1/3pi'");
  t = t.substr(0, t.size() - 2);
  if (t.empty() || t == "+") t = "1";
  if (t == "-") t = "-1";
  const auto slash = t.find('/');
  if (slash == std::string::npos) {
    spec.multiple_of_pi = Rational(Integer(t));
  } else {
    spec.multiple_of_pi = Rational(Integer(t.substr(0, slash)), Integer(t.substr(slash + 1)));
  }
  return spec;
}

}  // namespace dca

#include "deborder/serialize.hpp"

#include <json.hpp>

namespace deborder {

using nlohmann::json;

const char* to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Polynomial: return "polynomial";
    case DocumentKind::Border: return "border";
    case DocumentKind::Waring: return "waring";
    case DocumentKind::Report: return "report";
  }
  return "?";
}

DocumentKind kind_of(const Document& doc) { return static_cast<DocumentKind>(doc.index()); }

namespace {

constexpr int kVersion = 1;

[[noreturn]] void fail(const std::string& what, const json& where) {
  throw ParseError(what, where.dump().substr(0, 200));
}

const json& field(const json& obj, const char* name) {
  if (!obj.is_object()) fail(std::string("expected an object holding '") + name + "'", obj);
  auto it = obj.find(name);
  if (it == obj.end()) fail(std::string("missing field '") + name + "'", obj);
  return *it;
}

unsigned as_unsigned(const json& j) {
  if (!j.is_number_unsigned()) fail("expected a non-negative integer", j);
  const auto v = j.get<std::uint64_t>();
  if (v > 1u << 20) fail("integer out of range", j);
  return static_cast<unsigned>(v);
}

std::uint64_t as_u64(const json& j) {
  if (!j.is_number_unsigned()) fail("expected a non-negative integer", j);
  return j.get<std::uint64_t>();
}

bool as_bool(const json& j) {
  if (!j.is_boolean()) fail("expected a boolean", j);
  return j.get<bool>();
}

json write(const Rational& q) { return to_string(q); }

Rational read_rational(const json& j) {
  if (!j.is_string()) fail("rational must be a string \"p/q\"", j);
  return parse_rational(j.get<std::string>());
}

json write(const EpsPoly& p) {
  json out = json::array();
  const auto& c = p.coefficients();
  for (std::size_t e = 0; e < c.size(); ++e)
    if (!is_zero(c[e])) out.push_back(json::array({e, write(c[e])}));
  return out;
}

EpsPoly read_eps_poly(const json& j) {
  if (!j.is_array()) fail("eps-polynomial must be an array of [exponent, coefficient]", j);
  std::vector<Rational> c;
  long last = -1;
  for (const auto& entry : j) {
    if (!entry.is_array() || entry.size() != 2) fail("eps-polynomial entry must be a pair", entry);
    const unsigned e = as_unsigned(entry[0]);
    if (static_cast<long>(e) <= last) fail("eps-polynomial exponents must be strictly ascending", j);
    last = e;
    const Rational q = read_rational(entry[1]);
    if (is_zero(q)) fail("eps-polynomial entry with zero coefficient", entry);
    c.resize(e + 1);
    c[e] = q;
  }
  return EpsPoly::from_coefficients(std::move(c));
}

json write(const EpsScalar& s) { return json{{"num", write(s.num())}, {"den", write(s.den())}}; }

EpsScalar read_eps(const json& j) {
  const EpsPoly den = read_eps_poly(field(j, "den"));
  if (den.is_zero()) fail("eps-scalar with zero denominator", j);
  return EpsScalar(read_eps_poly(field(j, "num")), den);
}

template <class S>
S read_scalar(const json& j);
template <>
Rational read_scalar<Rational>(const json& j) { return read_rational(j); }
template <>
EpsScalar read_scalar<EpsScalar>(const json& j) { return read_eps(j); }

json write(const HomoPoly<Rational>& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"exps", m.exps()}, {"coef", write(c)}});
  return json{{"nvars", p.nvars()}, {"degree", p.degree()}, {"terms", terms}};
}

HomoPoly<Rational> read_poly(const json& j) {
  const unsigned n = as_unsigned(field(j, "nvars"));
  const unsigned d = as_unsigned(field(j, "degree"));
  if (n == 0) fail("polynomial needs at least one variable", j);
  HomoPoly<Rational> p(n, d);
  const json& terms = field(j, "terms");
  if (!terms.is_array()) fail("terms must be an array", terms);
  for (const auto& t : terms) {
    const json& exps = field(t, "exps");
    if (!exps.is_array() || exps.size() != n) fail("exponent vector length differs from nvars", t);
    std::vector<unsigned> e;
    unsigned total = 0;
    for (const auto& x : exps) {
      e.push_back(as_unsigned(x));
      total += e.back();
    }
    if (total != d) fail("term degree differs from the polynomial degree", t);
    const Rational c = read_rational(field(t, "coef"));
    if (is_zero(c)) fail("zero coefficient", t);
    const Monomial m(std::move(e));
    if (!is_zero(p.coefficient(m))) fail("duplicate monomial", t);
    p.add_term(m, c);
  }
  return p;
}

template <class S>
json write(const Decomposition<S>& d) {
  json summands = json::array();
  for (const auto& s : d.summands()) {
    json coefs = json::array();
    for (const auto& c : s.form.coefs()) coefs.push_back(write(c));
    summands.push_back({{"weight", write(s.weight)}, {"form", {{"coefs", coefs}}}});
  }
  return json{{"nvars", d.nvars()}, {"degree", d.degree()}, {"summands", summands}};
}

template <class S>
Decomposition<S> read_decomposition(const json& j) {
  const unsigned n = as_unsigned(field(j, "nvars"));
  const unsigned d = as_unsigned(field(j, "degree"));
  if (n == 0) fail("decomposition needs at least one variable", j);
  Decomposition<S> out(n, d);
  const json& summands = field(j, "summands");
  if (!summands.is_array()) fail("summands must be an array", summands);
  for (const auto& s : summands) {
    S w = read_scalar<S>(field(s, "weight"));
    if (is_zero(w)) fail("zero weight", s);
    const json& coefs = field(field(s, "form"), "coefs");
    if (!coefs.is_array() || coefs.size() != n) fail("form length differs from nvars", s);
    std::vector<S> c;
    for (const auto& x : coefs) c.push_back(read_scalar<S>(x));
    auto form = LinearForm<S>::nonzero(std::move(c));
    if (!form) fail("zero linear form", s);
    out.add(std::move(w), std::move(*form));
  }
  return out;
}

json write(const ReportDocument& r) {
  json trace = json::array();
  for (const auto& t : r.report.trace)
    trace.push_back({{"case", to_string(t.tag)}, {"rank", t.rank}, {"degree", t.degree}, {"i", t.i}, {"k", t.k}});
  json flags{{"seed", r.config.seed},
             {"base_threshold", r.config.base_threshold},
             {"strengthened", r.config.strengthened},
             {"y_size", r.config.y_size ? json(*r.config.y_size) : json(nullptr)},
             {"jobs", r.config.jobs}};
  return json{{"achieved_rank", r.report.achieved_rank},
              {"input_rank", r.report.input_rank},
              {"degree", r.report.degree},
              {"rank_bound", r.report.rank_bound.get_str()},
              {"verified", r.report.verified},
              {"trace", trace},
              {"flags", flags}};
}

CaseTag read_case(const json& j) {
  if (j == "LOCAL") return CaseTag::Local;
  if (j == "NONLOCAL") return CaseTag::Nonlocal;
  if (j == "BASE") return CaseTag::Base;
  fail("unknown trace case", j);
}

ReportDocument read_report(const json& j) {
  ReportDocument r;
  r.report.achieved_rank = as_unsigned(field(j, "achieved_rank"));
  r.report.input_rank = as_unsigned(field(j, "input_rank"));
  r.report.degree = as_unsigned(field(j, "degree"));
  const json& bound = field(j, "rank_bound");
  if (!bound.is_string() || bound.get<std::string>().empty() ||
      bound.get<std::string>().find_first_not_of("0123456789") != std::string::npos)
    fail("rank_bound must be a decimal string", bound);
  r.report.rank_bound = Integer(bound.get<std::string>());
  r.report.verified = as_bool(field(j, "verified"));
  const json& trace = field(j, "trace");
  if (!trace.is_array()) fail("trace must be an array", trace);
  for (const auto& t : trace)
    r.report.trace.push_back({read_case(field(t, "case")), as_unsigned(field(t, "rank")),
                              as_unsigned(field(t, "degree")), as_unsigned(field(t, "i")),
                              as_unsigned(field(t, "k"))});
  const json& flags = field(j, "flags");
  r.config.seed = as_u64(field(flags, "seed"));
  r.config.base_threshold = as_unsigned(field(flags, "base_threshold"));
  r.config.strengthened = as_bool(field(flags, "strengthened"));
  const json& y = field(flags, "y_size");
  if (!y.is_null()) r.config.y_size = as_unsigned(y);
  r.config.jobs = as_unsigned(field(flags, "jobs"));
  return r;
}

}  // namespace

std::string serialize_rational(const Rational& q) { return write(q).dump(); }
std::string serialize_eps(const EpsScalar& s) { return write(s).dump(); }

std::string serialize(const Document& doc) {
  const json payload = std::visit([](const auto& v) { return write(v); }, doc);
  json env{{"kind", to_string(kind_of(doc))}, {"version", kVersion}, {"payload", payload}};
  return env.dump();
}

Document parse_document(const std::string& text) {
  json env;
  try {
    env = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError("malformed JSON", e.what());
  }
  const json& kind = field(env, "kind");
  const json& version = field(env, "version");
  if (!version.is_number_integer() || version.get<long>() != kVersion) fail("unsupported version", version);
  const json& payload = field(env, "payload");
  try {
    if (kind == "polynomial") return read_poly(payload);
    if (kind == "border") return read_decomposition<EpsScalar>(payload);
    if (kind == "waring") return read_decomposition<Rational>(payload);
    if (kind == "report") return read_report(payload);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), e.witness());
  }
  fail("unknown document kind", kind);
}

}  // namespace deborder

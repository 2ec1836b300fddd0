#include "latgate/report.hpp"

#include "latgate/error.hpp"
#include "latgate/json_io.hpp"

namespace latgate {

using nlohmann::json;

namespace {

json const& field(json const& j, char const* name, std::string const& where) {
  if (!j.is_object() || !j.contains(name)) {
    throw Error(ErrorCode::kParseError,
                where + ": missing field \"" + name + "\"");
  }
  return j.at(name);
}

template <typename T>
T get(json const& j, char const* name, std::string const& where) {
  json const& v = field(j, name, where);
  try {
    return v.get<T>();
  } catch (json::exception const&) {
    throw Error(ErrorCode::kParseError,
                where + "." + name + ": unexpected value " + v.dump());
  }
}

template <typename T>
std::optional<T> get_optional(json const& j, char const* name,
                              std::string const& where) {
  if (!j.contains(name) || j.at(name).is_null()) return std::nullopt;
  return get<T>(j, name, where);
}

json sequence_to_json(ExactSequence const& s) {
  json terms = json::array();
  for (SequenceTerm const& t : s.terms) {
    terms.push_back({{"label", t.label}, {"rank", t.rank}});
  }
  return {{"name", s.name},
          {"terms", std::move(terms)},
          {"alternating_sum", s.alternating_sum()}};
}

ExactSequence sequence_from_json(json const& j, std::string const& where) {
  ExactSequence s;
  s.name = get<std::string>(j, "name", where);
  json const& terms = field(j, "terms", where);
  if (!terms.is_array()) {
    throw Error(ErrorCode::kParseError, where + ".terms: expected an array");
  }
  for (json const& t : terms) {
    s.terms.push_back({get<std::string>(t, "label", where),
                       get<long>(t, "rank", where)});
  }
  return s;
}

json certificate_to_json(SurgeryCertificate const& c) {
  return {{"b1_before", c.b1_before},
          {"b2_before", c.b2_before},
          {"b2_after", c.b2_after},
          {"before", sequence_to_json(c.before)},
          {"after", sequence_to_json(c.after)},
          {"ok", c.ok()}};
}

SurgeryCertificate certificate_from_json(json const& j,
                                         std::string const& where) {
  SurgeryCertificate c;
  c.b1_before = get<long>(j, "b1_before", where);
  c.b2_before = get<long>(j, "b2_before", where);
  c.b2_after = get<long>(j, "b2_after", where);
  c.before = sequence_from_json(field(j, "before", where), where + ".before");
  c.after = sequence_from_json(field(j, "after", where), where + ".after");
  return c;
}

VerdictKind verdict_from_string(std::string const& s,
                                std::string const& where) {
  for (VerdictKind v : {VerdictKind::kRealizable, VerdictKind::kForbidden,
                        VerdictKind::kNotApplicable}) {
    if (to_string(v) == s) return v;
  }
  throw Error(ErrorCode::kParseError, where + ": unknown verdict " + s);
}

json moduli_to_json(ModuliReport const& m) {
  json out{{"verdict", to_string(m.verdict)},
           {"reason", m.reason},
           {"sw_number_nonzero", m.sw_number_nonzero},
           {"extension_forces_vanishing", m.extension_forces_vanishing}};
  out["virtual_dim"] = m.virtual_dim ? json(*m.virtual_dim) : json(nullptr);
  out["based_dim"] = m.based_dim ? json(*m.based_dim) : json(nullptr);
  out["k"] = m.k ? json(*m.k) : json(nullptr);
  out["c1_squared"] =
      m.c1_squared ? integer_to_json(*m.c1_squared) : json(nullptr);
  out["boundary"] = m.boundary ? json(*m.boundary) : json(nullptr);
  out["sw_boundary_number"] =
      m.sw_boundary_number ? json(*m.sw_boundary_number) : json(nullptr);
  json ledger = json::array();
  for (SurgeryCertificate const& c : m.surgery) {
    ledger.push_back(certificate_to_json(c));
  }
  out["surgery"] = std::move(ledger);
  return out;
}

ModuliReport moduli_from_json(json const& j) {
  std::string const where = "moduli";
  ModuliReport m;
  m.verdict = verdict_from_string(get<std::string>(j, "verdict", where), where);
  m.reason = get<std::string>(j, "reason", where);
  m.sw_number_nonzero = get<bool>(j, "sw_number_nonzero", where);
  m.extension_forces_vanishing =
      get<bool>(j, "extension_forces_vanishing", where);
  m.virtual_dim = get_optional<long>(j, "virtual_dim", where);
  m.based_dim = get_optional<long>(j, "based_dim", where);
  m.k = get_optional<long>(j, "k", where);
  if (j.contains("c1_squared") && !j.at("c1_squared").is_null()) {
    m.c1_squared = integer_from_json(j.at("c1_squared"), "moduli.c1_squared");
  }
  m.boundary = get_optional<std::string>(j, "boundary", where);
  m.sw_boundary_number = get_optional<int>(j, "sw_boundary_number", where);
  json const& ledger = field(j, "surgery", where);
  for (std::size_t i = 0; i < ledger.size(); ++i) {
    m.surgery.push_back(certificate_from_json(
        ledger[i], "moduli.surgery[" + std::to_string(i) + "]"));
  }
  return m;
}

json elkies_to_json(ElkiesSection const& e) {
  return {{"form_id", e.form_id},
          {"n", e.n},
          {"m", integer_to_json(e.m)},
          {"k", e.k},
          {"minimizer", vector_to_json(e.minimizer)},
          {"count_minimizers", e.count_minimizers},
          {"verdict", e.verdict},
          {"unit_vector_count", e.unit_vector_count},
          {"mod8_ok", e.mod8_ok}};
}

ElkiesSection elkies_from_json(json const& j) {
  std::string const where = "analysis.elkies";
  ElkiesSection e;
  e.form_id = get<std::string>(j, "form_id", where);
  e.n = get<long>(j, "n", where);
  e.m = integer_from_json(field(j, "m", where), where + ".m");
  e.k = get<long>(j, "k", where);
  e.minimizer = vector_from_json(field(j, "minimizer", where),
                                 where + ".minimizer");
  e.count_minimizers = get<std::size_t>(j, "count_minimizers", where);
  e.verdict = get<std::string>(j, "verdict", where);
  e.unit_vector_count = get<std::size_t>(j, "unit_vector_count", where);
  e.mod8_ok = get<bool>(j, "mod8_ok", where);
  return e;
}

json analysis_to_json(FormAnalysis const& a) {
  json out{{"validation", a.validation},
           {"determinant", integer_to_json(a.determinant)},
           {"unimodular", a.unimodular},
           {"definiteness", a.definiteness},
           {"parity", a.parity},
           {"char_base", vector_to_json(a.char_base)}};
  out["signature"] = a.signature ? json(*a.signature) : json(nullptr);
  out["elkies"] = a.elkies ? elkies_to_json(*a.elkies) : json(nullptr);
  out["note"] = a.note ? json(*a.note) : json(nullptr);
  return out;
}

FormAnalysis analysis_from_json(json const& j) {
  std::string const where = "analysis";
  FormAnalysis a;
  a.validation = get<std::string>(j, "validation", where);
  a.determinant =
      integer_from_json(field(j, "determinant", where), "analysis.determinant");
  a.unimodular = get<bool>(j, "unimodular", where);
  a.definiteness = get<std::string>(j, "definiteness", where);
  a.parity = get<std::string>(j, "parity", where);
  a.signature = get_optional<long>(j, "signature", where);
  a.char_base =
      vector_from_json(field(j, "char_base", where), "analysis.char_base");
  if (j.contains("elkies") && !j.at("elkies").is_null()) {
    a.elkies = elkies_from_json(j.at("elkies"));
  }
  a.note = get_optional<std::string>(j, "note", where);
  return a;
}

}  // namespace

json report_to_json(Report const& r) {
  json gram = json::array();
  for (auto const& row : r.gram) gram.push_back(vector_to_json(row));
  json out{{"format", r.format},
           {"command", r.command},
           {"input", {{"source", r.source},
                      {"rank", r.gram.size()},
                      {"gram", std::move(gram)}}}};
  if (r.b1) out["input"]["b1"] = *r.b1;
  if (r.analysis) out["analysis"] = analysis_to_json(*r.analysis);
  if (r.moduli) out["moduli"] = moduli_to_json(*r.moduli);
  if (r.oracle) {
    out["oracle"] = {{"ran", r.oracle->ran},
                     {"agree", r.oracle->agree},
                     {"detail", r.oracle->detail}};
  }
  if (r.stats) {
    out["stats"] = {{"nodes", r.stats->nodes},
                    {"leaves", r.stats->leaves},
                    {"prunes", r.stats->prunes},
                    {"radius_shrinks", r.stats->radius_shrinks}};
  }
  return out;
}

Report report_from_json(json const& j) {
  std::string const where = "report";
  Report r;
  r.format = get<int>(j, "format", where);
  if (r.format != kReportFormat) {
    throw Error(ErrorCode::kParseError,
                "unsupported report format " + std::to_string(r.format));
  }
  r.command = get<std::string>(j, "command", where);
  json const& input = field(j, "input", where);
  r.source = get<std::string>(input, "source", "input");
  json const& gram = field(input, "gram", "input");
  for (std::size_t i = 0; i < gram.size(); ++i) {
    r.gram.push_back(
        vector_from_json(gram[i], "input.gram[" + std::to_string(i) + "]"));
  }
  r.b1 = get_optional<long>(input, "b1", "input");
  if (j.contains("analysis")) r.analysis = analysis_from_json(j.at("analysis"));
  if (j.contains("moduli")) r.moduli = moduli_from_json(j.at("moduli"));
  if (j.contains("oracle")) {
    json const& o = j.at("oracle");
    r.oracle = OracleSection{get<bool>(o, "ran", "oracle"),
                             get<bool>(o, "agree", "oracle"),
                             get<std::string>(o, "detail", "oracle")};
  }
  if (j.contains("stats")) {
    json const& s = j.at("stats");
    r.stats = StatsSection{get<std::uint64_t>(s, "nodes", "stats"),
                           get<std::uint64_t>(s, "leaves", "stats"),
                           get<std::uint64_t>(s, "prunes", "stats"),
                           get<std::uint64_t>(s, "radius_shrinks", "stats")};
  }
  return r;
}

}  // namespace latgate

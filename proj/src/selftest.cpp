#include "latgate/selftest.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "latgate/charvec.hpp"
#include "latgate/error.hpp"
#include "latgate/json_io.hpp"
#include "latgate/manifold.hpp"
#include "latgate/random_basis.hpp"

namespace latgate {
namespace {

using Check = std::function<std::string()>;  // empty string on success

SelftestRow run_check(std::string name, Check const& check) {
  try {
    std::string const failure = check();
    return {std::move(name), failure.empty(),
            failure.empty() ? "ok" : failure};
  } catch (std::exception const& e) {
    return {std::move(name), false, std::string("exception: ") + e.what()};
  }
}

std::vector<CatalogEntry> catalog_up_to(std::size_t max_rank) {
  std::vector<CatalogEntry> out;
  for (std::string const& id : standard_catalog_ids()) {
    CatalogEntry e = catalog_get(id);
    if (e.gram.rank() <= max_rank) out.push_back(std::move(e));
  }
  return out;
}

std::string check_goldens(SelftestConfig const& config, EnumOptions const& o) {
  std::vector<std::string> ids = standard_catalog_ids();
  ids.push_back("D4");
  for (auto const& [id, golden] : config.golden_overrides) ids.push_back(id);
  for (std::string const& id : ids) {
    CatalogEntry const e = catalog_get(id);
    if (e.gram.rank() > config.max_rank) continue;
    auto const it = config.golden_overrides.find(id);
    std::optional<Golden> const expected =
        it != config.golden_overrides.end() ? std::optional(it->second)
                                            : e.expected;
    if (!expected) continue;
    Golden actual{determinant(e.gram), parity(e.gram), std::nullopt,
                  std::nullopt};
    if (expected->m) {
      CharVecResult const r = min_char_vector(e.gram, o);
      actual.m = r.norm_m.convert_to<long>();
      actual.k = r.k;
    }
    if (!(actual == *expected)) return id + ": golden mismatch";
  }
  return {};
}

std::string check_oracle(SelftestConfig const& config, EnumOptions const& o,
                         std::mt19937_64& rng) {
  std::uniform_int_distribution<int> numerator(-3, 3);
  std::uniform_int_distribution<int> radius(0, 12);
  for (CatalogEntry const& e :
       catalog_up_to(std::min<std::size_t>(config.max_rank, 6))) {
    for (int trial = 0; trial < 5; ++trial) {
      RationalVector shift(e.gram.rank());
      for (Rational& t : shift) t = Rational(numerator(rng), 4);
      EnumQuery const q{e.gram, shift, Rational(radius(rng), 4)};
      if (enumerate_coset(q, o) != brute_force_coset(q, sufficient_box(q))) {
        return e.id + ": enumeration differs from brute force";
      }
    }
  }
  return {};
}

std::string check_conjugates(SelftestConfig const& config,
                             EnumOptions const& o, std::mt19937_64& rng) {
  for (CatalogEntry const& e :
       catalog_up_to(std::min<std::size_t>(config.max_rank, 10))) {
    CharVecResult const base = min_char_vector(e.gram, o);
    std::size_t const units = count_unit_vectors(e.gram, o);
    long const n = static_cast<long>(e.gram.rank());
    for (std::size_t c = 0; c < config.conjugates; ++c) {
      GramMatrix const g =
          basis_change(e.gram, random_unimodular(e.gram.rank(), 2, rng));
      CharVecResult const r = min_char_vector(g, o);
      if ((Integer(n) - r.norm_m) % 8 != 0) return e.id + ": m != n mod 8";
      if (r.norm_m != base.norm_m || r.k != base.k ||
          r.count_minimizers != base.count_minimizers) {
        return e.id + ": characteristic minimum not GL(n,Z)-invariant";
      }
      if (count_unit_vectors(g, o) != units) {
        return e.id + ": unit-vector count not GL(n,Z)-invariant";
      }
      bool const identity = units == 2 * e.gram.rank();
      bool const elkies = r.norm_m == Integer(n);
      if (identity != elkies) return e.id + ": Elkies cross-check failed";
      if (!signature_mod8_check(g, o)) return e.id + ": mod-8 check failed";
    }
  }
  return {};
}

std::string check_dimensions(SelftestConfig const& config,
                             EnumOptions const& o) {
  for (CatalogEntry const& e : catalog_up_to(config.max_rank)) {
    GramMatrix const form = e.gram.negated();
    LineBundleClass const l = choose_line_bundle({0, form}, o);
    for (long b1 = 0; b1 <= 3; ++b1) {
      ManifoldDescriptor const m{b1, form};
      virtual_dimension(m, l);  // throws on disagreement
      Reduction const reduced = reduce_to_b1_zero(m);
      if (!(reduced.result.form == m.form) || reduced.result.b1 != 0) {
        return e.id + ": surgery changed the form";
      }
      if (reduced.ledger.size() != static_cast<std::size_t>(b1)) {
        return e.id + ": wrong number of surgeries";
      }
      for (SurgeryCertificate const& c : reduced.ledger) {
        if (!c.ok()) return e.id + ": surgery certificate failed";
      }
    }
    ModuliReport const with_loops = donaldson_verdict({3, form}, o);
    ModuliReport const simply = donaldson_verdict({0, form}, o);
    if (with_loops.verdict != simply.verdict || with_loops.k != simply.k) {
      return e.id + ": verdict depends on b1";
    }
    bool const identity = count_unit_vectors(e.gram, o) == 2 * e.gram.rank();
    if ((simply.verdict == VerdictKind::kRealizable) != identity) {
      return e.id + ": verdict dichotomy failed";
    }
  }
  return {};
}

std::string check_boundary_numbers() {
  for (long k = 1; k <= 64; ++k) {
    BoundaryNumber const b = sw_boundary_number(k);
    if (b.value != 1 || !b.nonzero) return "k = " + std::to_string(k);
  }
  return {};
}

std::string check_weitzenbock(std::mt19937_64& rng) {
  if (weitzenbock_bound(2, 0) != 0) return "(2, 0) != 0";
  if (weitzenbock_bound(-4, 1) != 12) return "(-4, 1) != 12";
  std::uniform_int_distribution<int> num(-40, 40);
  std::uniform_int_distribution<int> den(1, 7);
  for (int i = 0; i < 1000; ++i) {
    Rational const s(num(rng), den(rng));
    Rational const p(std::abs(num(rng)), den(rng));
    Rational const b = weitzenbock_bound(s, p);
    if (b < 0) return "negative bound";
    if ((b == 0) != (s >= 2 * p)) return "zero set";
    if (weitzenbock_bound(s, p + Rational(1, 3)) < b) return "monotone in p";
    if (weitzenbock_bound(s + Rational(1, 3), p) > b) return "monotone in s";
  }
  return {};
}

}  // namespace

std::vector<SelftestRow> run_selftest(SelftestConfig const& config) {
  EnumOptions o;
  o.workers = config.workers;
  std::mt19937_64 rng(20260918);
  std::vector<SelftestRow> rows;
  rows.push_back(run_check("catalog goldens",
                           [&] { return check_goldens(config, o); }));
  rows.push_back(run_check("oracle equivalence",
                           [&] { return check_oracle(config, o, rng); }));
  rows.push_back(run_check("mod-8, GL-invariance, Elkies cross-check", [&] {
    return check_conjugates(config, o, rng);
  }));
  rows.push_back(run_check("dimension identity, surgery, verdicts",
                           [&] { return check_dimensions(config, o); }));
  rows.push_back(run_check("boundary numbers k = 1..64",
                           [] { return check_boundary_numbers(); }));
  rows.push_back(
      run_check("Weitzenbock bound", [&] { return check_weitzenbock(rng); }));
  return rows;
}

std::map<std::string, Golden> load_golden_overrides(std::string_view text) {
  nlohmann::json const j = parse_json_text(text);
  if (!j.is_object()) {
    throw Error(ErrorCode::kParseError, "goldens must be a JSON object");
  }
  std::map<std::string, Golden> out;
  for (auto const& [id, value] : j.items()) {
    if (!value.is_object() || !value.contains("det") ||
        !value.contains("parity")) {
      throw Error(ErrorCode::kParseError,
                  id + ": needs at least \"det\" and \"parity\"");
    }
    Golden g;
    g.det = integer_from_json(value.at("det"), id + ".det");
    std::string const p = value.at("parity").get<std::string>();
    if (p != "Even" && p != "Odd") {
      throw Error(ErrorCode::kParseError, id + ".parity: " + p);
    }
    g.parity = p == "Even" ? Parity::kEven : Parity::kOdd;
    if (value.contains("m")) g.m = value.at("m").get<long>();
    if (value.contains("k")) g.k = value.at("k").get<long>();
    out.emplace(id, std::move(g));
  }
  return out;
}

}  // namespace latgate

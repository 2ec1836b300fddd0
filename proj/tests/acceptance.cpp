// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance <path-to-latgate>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "latgate/catalog.hpp"
#include "latgate/charvec.hpp"
#include "latgate/enumerate.hpp"
#include "latgate/manifold.hpp"
#include "latgate/random_basis.hpp"

namespace {

using namespace latgate;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(std::string const& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::vector<std::string> elkies_catalog() {
  std::vector<std::string> ids;
  for (int n = 1; n <= 16; ++n) ids.push_back("Zn:" + std::to_string(n));
  ids.push_back("E8");
  for (int k = 1; k <= 4; ++k) ids.push_back("E8+Z" + std::to_string(k));
  ids.push_back("E8+E8");
  ids.push_back("D12plus");
  ids.push_back("D16plus");
  return ids;
}

bool is_identity_id(std::string const& id) { return id.rfind("Zn:", 0) == 0; }

std::string str(Integer const& x) { return x.str(); }

Outcome criterion_elkies() {
  Outcome o;
  for (std::string const& id : elkies_catalog()) {
    GramMatrix const g = catalog_get(id).gram;
    ElkiesVerdict const v = elkies_verdict(g);
    Integer const n = g.rank();
    if (is_identity_id(id)) {
      if (v.kind != ElkiesKind::kIdentity) o.fail(id + " not Identity");
      continue;
    }
    if (v.kind != ElkiesKind::kHasShortCharVector) {
      o.fail(id + " not HasShortCharVector");
    } else if (v.witness.k < 1 || v.witness.norm_m != n - 8 * v.witness.k) {
      o.fail(id + ": m = " + str(v.witness.norm_m) +
             ", k = " + std::to_string(v.witness.k));
    }
  }
  o.detail = o.passed ? std::to_string(elkies_catalog().size()) + " forms"
                      : o.detail;
  return o;
}

Outcome criterion_oracle() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> rad(0, 24);
  std::vector<std::string> ids = {"D4plus", "D4", "D3", "D5"};
  for (int n = 1; n <= 6; ++n) ids.push_back("Zn:" + std::to_string(n));
  std::size_t queries = 0;
  for (std::string const& id : ids) {
    GramMatrix const g = catalog_get(id).gram;
    for (int q = 0; q < 25; ++q) {
      RationalVector shift(g.rank());
      for (Rational& t : shift) t = Rational(num(rng), den(rng));
      EnumQuery const query{g, shift, Rational(rad(rng), 4)};
      if (!(enumerate_coset(query) ==
            brute_force_coset(query, coordinate_ranges(query)))) {
        o.fail(id + " query " + std::to_string(q) + " disagrees");
      }
      ++queries;
    }
  }
  if (o.passed) o.detail = std::to_string(queries) + " queries";
  return o;
}

struct Conjugate {
  std::string id;
  GramMatrix form;
};

std::vector<Conjugate> conjugates(int per_form) {
  std::mt19937_64 rng(8);
  std::vector<Conjugate> out;
  for (std::string const& id : standard_catalog_ids()) {
    GramMatrix const g = catalog_get(id).gram;
    if (g.rank() > 10) continue;
    for (int i = 0; i < per_form; ++i) {
      out.push_back({id, basis_change(g, random_unimodular(g.rank(), 2, rng))});
    }
  }
  return out;
}

Outcome criterion_mod8(std::vector<Conjugate> const& forms) {
  Outcome o;
  for (Conjugate const& c : forms) {
    CharVecResult const r = min_char_vector(c.form);
    Integer const n = c.form.rank();
    if ((n - r.norm_m) % 8 != 0) {
      o.fail(c.id + " conjugate: m = " + str(r.norm_m));
    }
  }
  if (o.passed) o.detail = std::to_string(forms.size()) + " conjugates";
  return o;
}

Outcome criterion_dimension() {
  Outcome o;
  std::size_t cases = 0;
  for (std::string const& id : standard_catalog_ids()) {
    for (long b1 = 0; b1 <= 3; ++b1) {
      ManifoldDescriptor const m{b1, catalog_get(id).gram.negated()};
      LineBundleClass const l = choose_line_bundle(m);
      Integer const num = l.c1_squared - (2 * m.chi() + 3 * m.sigma());
      if (num % 4 != 0 || num / 4 != 2 * l.k - 1 + b1) {
        o.fail(id + " b1=" + std::to_string(b1) + ": " + str(num) + "/4");
      }
      ++cases;
    }
  }
  ManifoldDescriptor const e8{0, catalog_get("E8").gram.negated()};
  long const d = virtual_dimension(e8, choose_line_bundle(e8));
  if (d != 1) o.fail("-E8 gives d = " + std::to_string(d));
  if (o.passed) o.detail = std::to_string(cases) + " cases, -E8 d = 1";
  return o;
}

Outcome criterion_donaldson() {
  Outcome o;
  for (std::string const& id : standard_catalog_ids()) {
    GramMatrix const g = catalog_get(id).gram;
    ModuliReport const r = donaldson_verdict({0, g.negated()});
    bool const identity = count_unit_vectors(g) == 2 * g.rank();
    VerdictKind const expected =
        identity ? VerdictKind::kRealizable : VerdictKind::kForbidden;
    if (r.verdict != expected) {
      o.fail(id + ": " + std::string(to_string(r.verdict)));
    }
  }
  ModuliReport const e8 =
      donaldson_verdict({0, catalog_get("E8").gram.negated()});
  if (e8.verdict != VerdictKind::kForbidden || e8.boundary != "CP^0" ||
      e8.sw_boundary_number != 1) {
    o.fail("-E8 not Forbidden with CP^0 and number 1");
  }
  if (o.passed) o.detail = "-E8 Forbidden, boundary CP^0, number 1";
  return o;
}

Outcome criterion_unit_vectors(std::vector<Conjugate> const& forms) {
  Outcome o;
  std::size_t checked = 0;
  auto check = [&](std::string const& label, GramMatrix const& g) {
    bool const units = count_unit_vectors(g) == 2 * g.rank();
    bool const identity = elkies_verdict(g).kind == ElkiesKind::kIdentity;
    if (units != identity) o.fail(label);
    ++checked;
  };
  for (std::string const& id : standard_catalog_ids()) {
    check(id, catalog_get(id).gram);
  }
  for (Conjugate const& c : forms) check(c.id + " conjugate", c.form);
  if (o.passed) o.detail = std::to_string(checked) + " forms";
  return o;
}

Outcome criterion_surgery() {
  Outcome o;
  std::size_t certificates = 0;
  for (std::string const& id : standard_catalog_ids()) {
    for (long b1 = 0; b1 <= 5; ++b1) {
      ManifoldDescriptor const m{b1, catalog_get(id).gram.negated()};
      Reduction const r = reduce_to_b1_zero(m);
      if (!(r.result.form == m.form)) o.fail(id + ": form changed");
      if (r.result.b1 != 0) o.fail(id + ": b1 not reduced");
      if (r.ledger.size() != static_cast<std::size_t>(b1)) {
        o.fail(id + ": ledger length");
      }
      for (SurgeryCertificate const& c : r.ledger) {
        if (c.before.alternating_sum() != 0 ||
            c.after.alternating_sum() != 0) {
          o.fail(id + ": nonzero alternating sum");
        }
        ++certificates;
      }
    }
  }
  if (o.passed) o.detail = std::to_string(certificates) + " certificates";
  return o;
}

Outcome criterion_weitzenbock() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> num(-200, 200);
  std::uniform_int_distribution<int> den(1, 30);
  for (int i = 0; i < 10000; ++i) {
    Rational const s(num(rng), den(rng));
    Rational const p(std::abs(num(rng)), den(rng));
    Rational const step(1, den(rng));
    Rational const b = weitzenbock_bound(s, p);
    if (b < 0) o.fail("negative bound");
    if ((b == 0) != (s >= 2 * p)) o.fail("zero set wrong at s=" + s.str());
    if (weitzenbock_bound(s, p + step) < b) o.fail("not monotone in p");
    if (weitzenbock_bound(s + step, p) > b) o.fail("not monotone in s");
  }
  if (weitzenbock_bound(2, 0) != 0) o.fail("(2, 0) != 0");
  if (weitzenbock_bound(-4, 1) != 12) o.fail("(-4, 1) != 12");
  if (o.passed) o.detail = "10000 pairs, (2,0)->0, (-4,1)->12";
  return o;
}

std::string capture(std::string const& command) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"),
                                            pclose);
  if (!pipe) return {};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) {
    out.append(buf.data(), got);
  }
  return out;
}

Outcome criterion_determinism(std::string const& binary) {
  Outcome o;
  std::string const base = "'" + binary + "' analyze --catalog D12plus --json";
  std::string const reference = capture(base + " --workers 1");
  if (reference.find("\"format\"") == std::string::npos) {
    o.fail("no report from " + binary);
    return o;
  }
  for (int run = 0; run < 5; ++run) {
    for (char const* workers : {"1", "4"}) {
      if (capture(base + " --workers " + workers) != reference) {
        o.fail(std::string("output differs with ") + workers + " workers");
      }
    }
  }
  if (o.passed) o.detail = "10 runs identical";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <latgate binary>\n";
    return 2;
  }
  std::string const binary = argv[1];
  std::vector<Conjugate> const forms = conjugates(50);

  struct Criterion {
    char const* name;
    double budget_s;  // 0: no budget
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria = {
      {"AC1 elkies dichotomy", 60, criterion_elkies},
      {"AC2 oracle equivalence", 30, criterion_oracle},
      {"AC3 mod-8 congruence", 120, [&] { return criterion_mod8(forms); }},
      {"AC4 dimension identity", 0, criterion_dimension},
      {"AC5 donaldson dichotomy", 0, criterion_donaldson},
      {"AC6 unit vectors vs identity", 0,
       [&] { return criterion_unit_vectors(forms); }},
      {"AC7 surgery bookkeeping", 0, criterion_surgery},
      {"AC8 weitzenbock bound", 0, criterion_weitzenbock},
      {"AC9 determinism", 0, [&] { return criterion_determinism(binary); }},
  };

  int failures = 0;
  for (Criterion const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      o.fail("over time budget of " + std::to_string(int(c.budget_s)) + " s");
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.passed ? "PASS " : "FAIL ") << c.name << ": " << o.detail
         << " (" << secs << " s)";
    std::cout << line.str() << std::endl;
    if (!o.passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

#include "latgate/manifold.hpp"

#include <boost/dynamic_bitset.hpp>

#include "latgate/error.hpp"

namespace latgate {

long ExactSequence::alternating_sum() const {
  long sum = 0;
  long sign = 1;
  for (SequenceTerm const& t : terms) {
    sum += sign * t.rank;
    sign = -sign;
  }
  return sum;
}

bool SurgeryCertificate::ok() const {
  return before.alternating_sum() == 0 && after.alternating_sum() == 0 &&
         b2_after == b2_before;
}

SurgeryStep surgery_reduce_b1(ManifoldDescriptor const& m) {
  if (m.b1 <= 0) {
    throw Error(ErrorCode::kNoLoopToSurger, "b1 = 0");
  }
  long const b2 = m.b2();
  // H_2(S^1 x B^3) = 0, so the complement X_+ carries all of H_2(X).
  long const b2_complement = b2;
  long constexpr kNeighborhood = 0;
  long constexpr kBoundary = 1;  // H_2(S^1 x S^2)
  long constexpr kReplacement = 1;  // H_2(B^2 x S^2)

  SurgeryCertificate cert;
  cert.b1_before = m.b1;
  cert.b2_before = b2;
  cert.before = {"H2(X_-)+H2(X_+) -> H2(X)",
                 {{"H2(X_-) + H2(X_+)", kNeighborhood + b2_complement},
                  {"H2(X)", b2}}};
  long const middle = kReplacement + b2_complement;
  cert.b2_after = middle - kBoundary;
  cert.after = {"H2(S1xS2) -> H2(B2xS2)+H2(X_+) -> H2(X')",
                {{"H2(S1xS2)", kBoundary},
                 {"H2(B2xS2) + H2(X_+)", middle},
                 {"H2(X')", cert.b2_after}}};
  return {ManifoldDescriptor{m.b1 - 1, m.form}, cert};
}

Reduction reduce_to_b1_zero(ManifoldDescriptor const& m) {
  Reduction out{m, {}};
  while (out.result.b1 > 0) {
    long const chi_before = out.result.chi();
    SurgeryStep step = surgery_reduce_b1(out.result);
    if (step.result.chi() != chi_before + 2 || !step.certificate.ok()) {
      throw Error(ErrorCode::kInconsistentDimension,
                  "surgery bookkeeping failed at b1 = " +
                      std::to_string(out.result.b1));
    }
    out.ledger.push_back(std::move(step.certificate));
    out.result = std::move(step.result);
  }
  return out;
}

LineBundleClass choose_line_bundle(ManifoldDescriptor const& m,
                                   EnumOptions const& options) {
  if (definiteness(m.form) != Definiteness::kNegativeDefinite) {
    throw Error(ErrorCode::kNotNegativeDefinite,
                std::string(to_string(definiteness(m.form))));
  }
  if (!is_unimodular(m.form)) {
    throw Error(ErrorCode::kNotUnimodular,
                "determinant " + determinant(m.form).str());
  }
  CharVecResult source = min_char_vector(m.form.negated(), options);
  LineBundleClass l;
  l.c1_squared = -source.norm_m;
  l.k = source.k;
  l.source = std::move(source);
  return l;
}

long virtual_dimension(ManifoldDescriptor const& m, LineBundleClass const& l) {
  Integer const numerator =
      l.c1_squared - Integer(2 * m.chi() + 3 * m.sigma());
  long const via_k = 2 * l.k - 1 + m.b1;
  if (numerator % 4 != 0 || numerator / 4 != via_k) {
    throw Error(ErrorCode::kInconsistentDimension,
                "(c1^2 - (2chi + 3sigma)) = " + numerator.str() +
                    " but 2k - 1 + b1 = " + std::to_string(via_k));
  }
  return via_k;
}

BoundaryNumber sw_boundary_number(long k) {
  if (k <= 0) {
    throw Error(ErrorCode::kInvalidK, "k = " + std::to_string(k));
  }
  std::size_t const n = static_cast<std::size_t>(k);
  // Truncated polynomials over F_2 as coefficient bitsets.
  auto multiply = [n](boost::dynamic_bitset<> const& a,
                      boost::dynamic_bitset<> const& b) {
    boost::dynamic_bitset<> c(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!a[i]) continue;
      for (std::size_t j = 0; i + j < n; ++j) {
        if (b[j]) c.flip(i + j);
      }
    }
    return c;
  };
  boost::dynamic_bitset<> x(n);
  boost::dynamic_bitset<> power(n);
  power.set(0);
  if (n > 1) x.set(1);
  for (std::size_t i = 0; i + 1 < n; ++i) power = multiply(power, x);
  int const value = power[n - 1] ? 1 : 0;
  return {value, value != 0};
}

std::string_view to_string(VerdictKind v) {
  switch (v) {
    case VerdictKind::kRealizable: return "Realizable";
    case VerdictKind::kForbidden: return "Forbidden";
    case VerdictKind::kNotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

ModuliReport donaldson_verdict(ManifoldDescriptor const& m,
                               EnumOptions const& options) {
  Reduction const reduced = reduce_to_b1_zero(m);
  ModuliReport report;
  report.surgery = reduced.ledger;

  Definiteness const d = definiteness(reduced.result.form);
  if (d == Definiteness::kPositiveDefinite) {
    report.reason =
        "orientation-reversed case: no reducible point (no anti-self-dual "
        "harmonic forms)";
    return report;
  }
  if (d != Definiteness::kNegativeDefinite) {
    report.reason = "intersection form is " + std::string(to_string(d)) +
                    ", not negative definite";
    return report;
  }

  LineBundleClass const l = choose_line_bundle(reduced.result, options);
  long const dim = virtual_dimension(reduced.result, l);
  report.k = l.k;
  report.c1_squared = l.c1_squared;
  report.virtual_dim = dim;
  report.based_dim = dim + 1;
  if (l.k == 0) {
    report.verdict = VerdictKind::kRealizable;
    return report;
  }
  BoundaryNumber const number = sw_boundary_number(l.k);
  report.boundary = "CP^" + std::to_string(l.k - 1);
  report.sw_boundary_number = number.value;
  report.sw_number_nonzero = number.nonzero;
  report.extension_forces_vanishing = true;
  if (!number.nonzero) {
    throw Error(ErrorCode::kInconsistentDimension,
                "boundary number vanished for k = " + std::to_string(l.k));
  }
  report.verdict = VerdictKind::kForbidden;
  return report;
}

Rational weitzenbock_bound(Rational const& s_min, Rational const& p) {
  if (p < 0) {
    throw Error(ErrorCode::kNegativePerturbationNorm, "p = " + p.str());
  }
  Rational const b = 4 * p - 2 * s_min;
  return b > 0 ? b : Rational(0);
}

}  // namespace latgate

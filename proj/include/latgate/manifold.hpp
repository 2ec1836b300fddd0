#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latgate/charvec.hpp"
#include "latgate/gram.hpp"

namespace latgate {

// Closed, connected, oriented 4-manifold, described by b1 and the
// intersection form on H_2 mod torsion. The form is stored as given.
struct ManifoldDescriptor {
  long b1 = 0;
  GramMatrix form;

  long b2() const { return static_cast<long>(form.rank()); }
  long sigma() const { return signature(form); }
  // b0 = b4 = 1, b3 = b1.
  long chi() const { return 2 - 2 * b1 + b2(); }

  friend bool operator==(ManifoldDescriptor const&,
                         ManifoldDescriptor const&) = default;
};

// One term of an exact sequence of real homology groups.
struct SequenceTerm {
  std::string label;
  long rank = 0;
  friend bool operator==(SequenceTerm const&, SequenceTerm const&) = default;
};

struct ExactSequence {
  std::string name;
  std::vector<SequenceTerm> terms;  // between the leading and trailing 0
  long alternating_sum() const;
  friend bool operator==(ExactSequence const&, ExactSequence const&) = default;
};

// Rank ledger for one surgery along a loop: the Mayer-Vietoris sequence of
// X = X_- u X_+ and the one after replacing X_- = S^1 x B^3 by B^2 x S^2.
struct SurgeryCertificate {
  long b1_before = 0;
  long b2_before = 0;
  long b2_after = 0;  // read off the second sequence by exactness
  ExactSequence before;
  ExactSequence after;
  bool ok() const;
  friend bool operator==(SurgeryCertificate const&,
                         SurgeryCertificate const&) = default;
};

struct SurgeryStep {
  ManifoldDescriptor result;
  SurgeryCertificate certificate;
};

// Throws NoLoopToSurger when b1 = 0.
SurgeryStep surgery_reduce_b1(ManifoldDescriptor const& m);

struct Reduction {
  ManifoldDescriptor result;
  std::vector<SurgeryCertificate> ledger;
};

// Surgers until b1 = 0. Throws InconsistentDimension if a step breaks the
// chi bookkeeping or a certificate.
Reduction reduce_to_b1_zero(ManifoldDescriptor const& m);

struct LineBundleClass {
  Integer c1_squared;
  long k = 0;
  CharVecResult source;  // computed on the positive-definite negation
};

// Throws NotNegativeDefinite, NotUnimodular.
LineBundleClass choose_line_bundle(ManifoldDescriptor const& m,
                                   EnumOptions const& options = {});

// (c1^2 - (2 chi + 3 sigma)) / 4, cross-checked against 2k - 1 + b1.
// Throws InconsistentDimension.
long virtual_dimension(ManifoldDescriptor const& m, LineBundleClass const& l);

struct BoundaryNumber {
  int value = 0;
  bool nonzero = false;
};

// w_2^{k-1}[CP^{k-1}] in H^*(CP^{k-1}; F_2) = F_2[x]/(x^k). Throws InvalidK.
BoundaryNumber sw_boundary_number(long k);

enum class VerdictKind { kRealizable, kForbidden, kNotApplicable };
std::string_view to_string(VerdictKind v);

struct ModuliReport {
  VerdictKind verdict = VerdictKind::kNotApplicable;
  std::string reason;  // set for NotApplicable
  std::optional<long> virtual_dim;
  std::optional<long> based_dim;
  std::optional<long> k;
  std::optional<Integer> c1_squared;
  std::optional<std::string> boundary;  // "CP^{k-1}" when k >= 1
  std::optional<int> sw_boundary_number;
  bool sw_number_nonzero = false;
  // A compact manifold with this boundary would force the number to vanish.
  bool extension_forces_vanishing = false;
  std::vector<SurgeryCertificate> surgery;
  friend bool operator==(ModuliReport const&, ModuliReport const&) = default;
};

// Throws NotUnimodular for a negative-definite form with |det| != 1.
ModuliReport donaldson_verdict(ManifoldDescriptor const& m,
                               EnumOptions const& options = {});

// max(0, 4p - 2 s_min). Throws NegativePerturbationNorm when p < 0.
Rational weitzenbock_bound(Rational const& s_min, Rational const& p);

}  // namespace latgate

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "abeldense/rational.hpp"
#include "abeldense/symreal.hpp"

namespace abeldense {

// A finite set of vectors in R^n with SymReal entries.
using GeneratorSet = std::vector<SymVector>;

enum class LineKind { dense_in_r, discrete_cyclic, one_sided_discrete };

struct LineClass {
  LineKind kind = LineKind::dense_in_r;
  // discrete_cyclic: the positive generator g with gens in gZ.
  std::optional<SymReal> generator;
  // one_sided_discrete: common sign of the generators.
  Sign sign = Sign::zero;
};

LineClass classify_line_semigroup(const std::vector<SymReal>& gens, double dead_zone = default_dead_zone());

enum class Verdict { dense, not_dense, inconclusive };
enum class CertificateKind { none, positive_combination, nonnegative_form, integer_form };

struct Certificate {
  CertificateKind kind = CertificateKind::none;
  // NotDense: the form l, integer entries, l != 0.
  IntegerVector form;
  // Dense: lambda_j > 0 with sum lambda_j a_j = 0, one per generator.
  std::vector<SymReal> lambda;
  // Dense: indices of generators forming a rational basis of R^n.
  std::vector<std::size_t> basis_indices;
  // Structured checks: coordinates of the last vector in the basis.
  std::vector<SymReal> alpha;
  // Rank of the lattice of forms taking integer values on A (0 when dense).
  std::size_t lattice_rank = 0;
};

struct DensityVerdict {
  Verdict verdict = Verdict::inconclusive;
  // "a" or "b" when not dense; which clause of the criterion failed.
  std::string failed_clause;
  Certificate certificate;
  std::string search_bound;
  std::string reason;
};

struct ConeResult {
  bool dense = false;
  // dense: lambda_j > 0 with sum lambda_j a_j = 0; otherwise empty.
  std::vector<SymReal> lambda;
  // not dense: nonzero l with l(A) >= 0.
  IntegerVector form;
  bool decided = true;
  std::string search_bound;
};

// Whether the cone spanned by A is all of R^n.
ConeResult cone_is_dense(const GeneratorSet& a, std::size_t n);

DensityVerdict check_dense_rn(const GeneratorSet& a, std::size_t n);
DensityVerdict check_dense_rn_structured(const GeneratorSet& v, const SymVector& v_last);

struct AbelianGroupSpec {
  std::size_t n = 0;
  std::size_t t = 0;
  std::vector<RationalVector> gamma_basis;
  std::size_t component_count = 1;
  std::size_t component_gens = 0;

  // Throws InputError when the invariants fail.
  void validate() const;
};

AbelianGroupSpec connected_spec(std::size_t n, std::size_t t, std::vector<RationalVector> gamma_basis = {});

DensityVerdict check_dense_group_exp(const AbelianGroupSpec& spec, const GeneratorSet& w);

// The generator set W u Gamma u -Gamma whose density in R^n is equivalent to
// density of the semigroup generated by exp(W) in G.
GeneratorSet group_verification_set(const AbelianGroupSpec& spec, const GeneratorSet& w);

std::size_t min_generators(const AbelianGroupSpec& spec);

// Exact re-verification of a verdict against its input; false on any failure.
bool verify_certificate(const GeneratorSet& a, std::size_t n, const DensityVerdict& v);
bool verify_group_certificate(const AbelianGroupSpec& spec, const GeneratorSet& w, const DensityVerdict& v);

// Rational vector with entries as SymReal values over basis.
SymVector rational_vector(const BasisPtr& basis, const RationalVector& v);

std::string to_string(Verdict v);
std::string to_string(CertificateKind k);
std::string to_string(LineKind k);

}  // namespace abeldense

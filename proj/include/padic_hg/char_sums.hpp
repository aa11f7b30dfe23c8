#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "padic_hg/fp.hpp"
#include "padic_hg/rational.hpp"

/// Floating-point Gauss and Jacobi sums over F_p.
///
/// Characters are indexed by a in Z/(p-1): χ_a(g^k) = exp(2πi a k/(p-1))
/// for the smallest primitive root g, with χ_a(0) = 0. χ_0 is trivial and
/// χ_{(p-1)/2} is the quadratic character.

namespace padic_hg {

using cplx = std::complex<double>;

inline constexpr u64 kDefaultComplexPrimeLimit = 10'000;

class CharTable {
 public:
  /// Precomputes discrete logs, roots of unity and all p-1 Gauss sums.
  /// Throws std::domain_error when p exceeds max_p.
  explicit CharTable(const FieldCtx& field, u64 max_p = kDefaultComplexPrimeLimit);

  u64 p() const { return p_; }
  u64 order() const { return p_ - 1; }
  std::int64_t quadratic() const { return static_cast<std::int64_t>((p_ - 1) / 2); }

  /// Canonical index in [0, p-2].
  u64 index(std::int64_t a) const;

  cplx chi(std::int64_t a, u64 x) const;

  /// g(χ_a) = Σ_x χ_a(x) ζ_p^x.
  cplx gauss_sum(std::int64_t a) const { return gauss_[index(a)]; }

  /// Direct summation of g(χ_a); gauss_sum() returns the cached copy.
  cplx gauss_sum_direct(std::int64_t a) const;

  /// J(χ_a, χ_b) = Σ_y χ_a(y) χ_b(1-y), summed directly.
  cplx jacobi_sum(std::int64_t a, std::int64_t b) const;

  /// Binomial (χ_a choose χ_b) = χ_b(-1)/p · J(χ_a, χ̄_b).
  cplx binomial(std::int64_t a, std::int64_t b) const;

 private:
  u64 p_;
  std::vector<u64> log_;         // log_[x] for x in 1..p-1
  std::vector<cplx> unity_pm1_;  // exp(2πi k/(p-1))
  std::vector<cplx> unity_p_;    // exp(2πi x/p)
  std::vector<cplx> gauss_;
};

struct IdentityErrors {
  double orthogonality = 0;   // Σ_χ χ(x) = (p-1)[x = 1]
  double gauss_product = 0;   // g(χ)g(χ̄) = p χ(-1) - (p-1)δ(χ)
  double gauss_jacobi = 0;    // J(χ1,χ2) = g(χ1)g(χ2)/g(χ1χ2) + (p-1)χ2(-1)δ(χ1χ2)
  double binomial_trivial = 0;  // (χ choose ε) = (χ choose χ) = -1/p + (p-1)/p δ(χ)
  double binomial_symmetry = 0; // (χ choose ψ) = (χ choose χψ̄)
  double gauss_trivial = 0;   // g(ε) = -1 and |g(χ)|² = p otherwise

  double max() const;
};

/// Worst-case deviation of each identity over all character indices.
IdentityErrors check_gauss_identities(const CharTable& table);

/// |∏_{i<m} g(χψ^i) - g(χ^m) χ^{-m}(m) ∏_{0<i<m} g(ψ^i)| relative to the
/// size of the right side (both have modulus up to p^(m/2)); ψ has exact
/// order m. Throws std::invalid_argument when m ∤ p-1.
double hasse_davenport_check(const CharTable& table, u64 m, std::int64_t chi);

/// B_n(t) = Σ_χ g(φχ^n) g(χ̄^n) χ̄((-1)^n t).
cplx B_n_oracle(const CharTable& table, u64 n, u64 t);

/// A_n(t) = Σ_χ g(φχ^(n-1)) g(χ̄^n) g(χ̄) g(χ²) χ̄(αt), α = 4(1-n)^(n-1)/n^n.
cplx A_n_oracle(const CharTable& table, u64 n, u64 t);

struct OracleComparison {
  cplx quotient;     // B_n/((p-1)g(φ)) or A_n/((p-1)g(φ))
  double expected = 0;
  double error = 0;
  double tolerance = 0;
  bool pass = false;
};

/// Tolerance on the quotients: 1e-6 p^(3/2).
double oracle_tolerance(u64 p);

/// B_n/((p-1)g(φ)) against an expected nGn(t).
OracleComparison compare_B_n(const CharTable& table, u64 n, u64 t, std::int64_t expected);

/// A_n/((p-1)g(φ)) against 1 + p·nG~n(t).
OracleComparison compare_A_n(const CharTable& table, u64 n, u64 t, const Rational& expected_gtilde);

/// Partial sum of 3F2(a; b; 1) with the given number of terms.
double hypergeometric_3f2_unit(const std::array<double, 3>& a, const std::array<double, 2>& b, std::size_t terms);

struct ClassicalErrors {
  double dixon = 0;
  double whipple = 0;
};

/// Truncated 3F2(1) series for the two classical special values, compared
/// with their Γ-quotient closed forms.
ClassicalErrors classical_sanity(std::size_t terms = 1'000'000);

}  // namespace padic_hg

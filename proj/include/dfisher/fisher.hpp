#ifndef DFISHER_FISHER_HPP
#define DFISHER_FISHER_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dfisher/family.hpp"
#include "dfisher/scalar.hpp"

namespace dfisher {

/// Evaluation routes for I_omega[P_n].
enum class Method { DirectSum, TheoremFormula, Expansion, ClosedForm };

inline constexpr Method kAllMethods[] = {Method::DirectSum, Method::TheoremFormula, Method::Expansion,
                                         Method::ClosedForm};

std::string_view to_string(Method m);
/// Accepts "direct", "theorem", "expansion", "closed" (and the enum spellings).
Method parse_method(std::string_view name);

/// Stopping rule for sums over the unbounded supports under BigFloat.
///
/// Summation starts past every zero of the summand's polynomial factor and
/// stops at the first x whose geometric tail bound |t_x| r / (1 - r) falls
/// below tail_tol * sum |t_y| (y <= x), where r majorizes the remaining term
/// ratios. Hitting hard_cap first throws TruncationCapExceeded.
struct TruncationPolicy {
  BigFloat tail_tol;
  long hard_cap = 1'000'000;

  /// tail_tol = 1e-30, hard_cap = 10^6.
  static TruncationPolicy defaults();
};

/// sum_x reduced_weight(x) q(x) / Z for a polynomial q of degree <= degree.
///
/// Bounded supports: the finite sum. Unbounded supports: exact factorial
/// moments under Rational, truncated per `trunc` under BigFloat.
template <Field T>
T weighted_polynomial_sum(const FamilySpec& f, long degree, const std::function<T(long)>& q,
                          const TruncationPolicy& trunc = TruncationPolicy::defaults());

/// rho_n(x) = omega(x) P_n(x)^2 / d_n^2.
/// Under Rational this throws NotRepresentable for Charlier and for Meixner
/// with non-integer gamma.
template <Field T>
T rakhmanov_density(const FamilySpec& f, long n, long x);

/// (1/d_n^2) sum_x omega(x) [Delta P_n(x)]^2.
template <Field T>
T fisher_direct(const FamilySpec& f, long n, const TruncationPolicy& trunc = TruncationPolicy::defaults());

/// Difference-equation route:
/// (1/d_n^2) ( omega(x-1) P_n(x)^2 |_a^b + sum_x omega(x) r(x) P_n(x)^2 ) - 1,
/// r = weight_ratio, with omega = 0 outside the support. On unbounded supports
/// under Rational the sum is taken in its shifted form
/// sum_y omega(y) P_n(y+1)^2, which is the same series term by term.
template <Field T>
T fisher_theorem(const FamilySpec& f, long n, const TruncationPolicy& trunc = TruncationPolicy::defaults());

/// Ladder/connection route (1/d_n^2) sum_j a_{j,n}^2 d_j^2; exact for rational
/// parameters and the reference value for the other methods.
template <Field T>
T fisher_expansion(const FamilySpec& f, long n);

struct ClosedFormResult {
  Scalar value;
  /// False only for Hahn when the C3 series did not settle.
  bool converged = true;
};

/// Closed-form expressions: n/mu (Charlier), n(1-mu)^2/(mu(n+gamma-1)) 2F1(1-n,1;2-n-gamma;mu)
/// (Meixner), n/((N-n+1)p(1-p)) 2F1(1-n,1;N-n+2;p/(p-1)) (Kravchuk) and the
/// A1 A2 (B1 B2 B3 + C1 C2 C3 + D1 D2 D3) form for Hahn. The Hahn value is a
/// BigFloat whichever backend is asked for because C3 is a non-terminating
/// 3F2 at -1, summed by accelerated_pfq_at_minus_one.
template <Field T>
ClosedFormResult fisher_closed(const FamilySpec& f, long n);

/// The ingredients of the Hahn closed form, for inspection and testing.
/// prefactor = A1*A2 (Gamma ratios folded into Pochhammer symbols),
/// b = B1*B2*B3, d = D1*D2*D3, c_outer = C1 * C2 * Gamma(s+n+1)/Gamma(s+2)
/// and c_series the 3F2 inside C3.
template <Field T>
struct HahnClosedParts {
  T prefactor;
  T b;
  T d;
  T c_outer;
  BigFloat c_series;
  bool c_converged = false;
};

template <Field T>
HahnClosedParts<T> hahn_closed_parts(const FamilySpec& f, long n);

struct MethodOutcome {
  Method method;
  std::optional<Scalar> value;
  bool converged = true;
  /// Error kind and message when the method failed.
  std::string error;
};

struct FisherReport {
  FamilySpec family;
  long degree = 0;
  std::vector<MethodOutcome> outcomes;
  Scalar max_pairwise_rel_discrepancy;
  std::optional<bool> hahn_c3_converged;

  const MethodOutcome* find(Method m) const;
};

/// Runs the requested methods (all by default); a failing method is recorded
/// and does not stop the others.
template <Field T>
FisherReport fisher_report(const FamilySpec& f, long n, const TruncationPolicy& trunc = TruncationPolicy::defaults(),
                           const std::vector<Method>& methods = {std::begin(kAllMethods), std::end(kAllMethods)});

}  // namespace dfisher

#endif  // DFISHER_FISHER_HPP

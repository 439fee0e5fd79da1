#ifndef DFISHER_HYPERGEOMETRIC_HPP
#define DFISHER_HYPERGEOMETRIC_HPP

#include <optional>
#include <vector>

#include "dfisher/scalar.hpp"

namespace dfisher {

/// Rising factorial (a)_k = a(a+1)...(a+k-1), with (a)_0 = 1.
template <Field T>
T pochhammer(const T& a, unsigned k);

/// Binomial coefficient C(n, k); zero when k > n.
template <Field T>
T binomial(unsigned n, unsigned k);

template <Field T>
T factorial(unsigned n) {
  return pochhammer<T>(T(1), n);
}

/// Parameters of pFq(numerator; denominator | argument).
template <Field T>
struct PFQSpec {
  std::vector<T> numerator;
  std::vector<T> denominator;
  T argument;
};

/// Index m of the last nonzero term when some numerator parameter is a
/// nonpositive integer -a (the shortest such series wins); nullopt otherwise.
template <Field T>
std::optional<unsigned> termination_length(const PFQSpec<T>& spec);

/// Sum_{k=0}^{m} prod (num)_k / prod (den)_k z^k / k!, built from the term
/// ratio. A denominator parameter that is a nonpositive integer is accepted
/// as long as its pole index lies beyond m; otherwise DenominatorPole.
/// Throws NotTerminating when no numerator parameter terminates the series.
template <Field T>
T terminating_pfq(const PFQSpec<T>& spec);

struct AcceleratedSum {
  Scalar value;
  bool converged = false;
  /// Number of series terms consumed by the transform.
  unsigned terms_used = 0;
};

/// Default relative tolerance for accelerated sums: 10^(-precision/2).
BigFloat default_acceleration_tolerance();

/// Sums pFq at z = -1, terminating or not.
///
/// Terminating series are summed exactly (converged is then always true).
/// Otherwise the partial sums are fed to the Levin d-transform
///
///   L_k = sum_j c_j S_j / a_{j+1}  /  sum_j c_j / a_{j+1},
///   c_j = (-1)^j C(k, j) ((1 + j) / (1 + k))^(k - 1),
///
/// which also assigns the Abel/Borel value to alternating series whose terms
/// grow algebraically. converged is set when two successive estimates agree
/// to `tol` relatively; otherwise the last estimate is returned with
/// converged = false.
template <Field T>
AcceleratedSum accelerated_pfq_at_minus_one(const PFQSpec<T>& spec, const BigFloat& tol,
                                            unsigned max_terms = 400);

}  // namespace dfisher

#endif  // DFISHER_HYPERGEOMETRIC_HPP

#ifndef DFISHER_FAMILIES_HPP
#define DFISHER_FAMILIES_HPP

#include <string>
#include <vector>

#include "dfisher/family.hpp"
#include "dfisher/scalar.hpp"

namespace dfisher {

/// c0 + c1 x + c2 x^2.
template <Field T>
struct Quadratic {
  T c0{0};
  T c1{0};
  T c2{0};

  T operator()(const T& x) const { return c0 + x * (c1 + x * c2); }
};

/// Coefficients of sigma(x) Delta Nabla P + tau(x) Delta P + lambda_n P = 0,
/// the support, and the constant stripped from the tabulated weight.
template <Field T>
struct TableOneData {
  Quadratic<T> sigma;
  Quadratic<T> tau;     // c2 == 0
  Quadratic<T> lambda;  // as a polynomial in n
  std::string reduced_weight_constant;
  LatticeSupport support;

  T lambda_of(long n) const { return lambda(T(n)); }
};

template <Field T>
TableOneData<T> table_one(const FamilySpec& f);

/// Total mass Z of the reduced weight, so that
/// sum_x reduced_weight(x) P_n(x)^2 = Z * reduced_norm(n).
/// Charlier Z = e^mu, Meixner Z = (1-mu)^(-gamma), otherwise 1.
/// Every Fisher ratio is independent of Z.
struct MassFactor {
  enum class Kind { One, Exponential, Power };
  Kind kind = Kind::One;
  Rational base{1};
  Rational exponent{0};

  bool is_one() const { return kind == Kind::One; }
  /// Throws NotRepresentable when T is exact and Z is irrational.
  template <Field T>
  T evaluate() const;
  std::string describe() const;
};

MassFactor mass_factor(const FamilySpec& f);

/// Weight with the family constant removed: mu^x/x!, (gamma)_x mu^x/x!,
/// C(N,x) p^x (1-p)^(N-x), (alpha+1)_{N-1-x} (beta+1)_x / ((N-1-x)! x!).
template <Field T>
T reduced_weight(const FamilySpec& f, long x);

/// Norm of the monic P_n against reduced_weight, without the mass factor Z.
template <Field T>
T reduced_norm(const FamilySpec& f, long n);

/// omega(x-1)/omega(x) from the closed form of the weight; x >= 1.
template <Field T>
T weight_ratio(const FamilySpec& f, long x);

/// Monic three-term recurrence P_{k+1} = (x - a_k) P_k - b_k P_{k-1}.
template <Field T>
struct RecurrenceCoeffs {
  std::vector<T> a;
  std::vector<T> b;  // b[0] is unused and set to zero
};

/// Coefficients for k = 0 .. count-1.
template <Field T>
RecurrenceCoeffs<T> recurrence_coeffs(const FamilySpec& f, long count);

/// Monic P_n with its recurrence coefficients computed once, for repeated
/// evaluation.
template <Field T>
class MonicPolynomial {
 public:
  MonicPolynomial(const FamilySpec& f, long n);

  T operator()(const T& x) const;
  T at(long x) const { return (*this)(T(x)); }
  long degree() const { return n_; }

 private:
  long n_;
  RecurrenceCoeffs<T> rc_;
};

/// Monic P_n(x).
template <Field T>
T eval_poly(const FamilySpec& f, long n, const T& x);

template <Field T>
T forward_diff(const FamilySpec& f, long n, const T& x);

template <Field T>
T backward_diff(const FamilySpec& f, long n, const T& x);

/// Delta P_n = factor * Q_{n-1} with Q monic in `family`.
struct LadderTarget {
  FamilySpec family;
  long factor;
};

/// Requires n >= 1.
LadderTarget ladder_target(const FamilySpec& f, long n);

/// a_{j,n}, j = 0..n-1, with Delta P_n(x) = sum_j a_{j,n} P_j(x) in the same family.
template <Field T>
std::vector<T> connection_coeffs(const FamilySpec& f, long n);

/// Largest |x| any zero of P_0..P_n can reach (Gershgorin on the Jacobi matrix).
BigFloat zero_bound(const FamilySpec& f, long n);

}  // namespace dfisher

#endif  // DFISHER_FAMILIES_HPP

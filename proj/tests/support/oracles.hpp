#ifndef DFISHER_TESTS_ORACLES_HPP
#define DFISHER_TESTS_ORACLES_HPP

// Reference computations that share no code with the library: weights are
// written out from their closed forms, polynomials come from Gram-Schmidt
// and series are summed term by term.

#include <vector>

#include "dfisher/scalar.hpp"

namespace oracle {

using dfisher::BigFloat;
using dfisher::Rational;

/// Kravchuk weight C(N,x) p^x (1-p)^(N-x), x = 0..N.
std::vector<Rational> kravchuk_weights(const Rational& p, long N);

/// Hahn weight (alpha+1)_{N-1-x} (beta+1)_x / ((N-1-x)! x!), x = 0..N-1.
std::vector<Rational> hahn_weights(const Rational& alpha, const Rational& beta, long N);

/// Monic orthogonal polynomials of degree 0..count-1 for the discrete
/// measure sum_x w[x] delta_x, coefficients lowest degree first.
std::vector<std::vector<Rational>> gram_schmidt(const std::vector<Rational>& w, long count);

Rational horner(const std::vector<Rational>& c, const Rational& x);

/// sum_x w (Delta P)^2 / sum_x w P^2 with P from gram_schmidt.
Rational direct_fisher(const std::vector<Rational>& w, long n);

/// Float brute force over x = 0..cutoff for Charlier / Meixner with their
/// full weights, Gram-Schmidt done in BigFloat.
BigFloat direct_fisher_charlier(const BigFloat& mu, long n, long cutoff);
BigFloat direct_fisher_meixner(const BigFloat& gamma, const BigFloat& mu, long n, long cutoff);

/// ln 2 from 1 - 1/2 + 1/3 - ... via repeated averaging of `terms` partial sums.
BigFloat euler_averaged_ln2(long terms);

}  // namespace oracle

#endif  // DFISHER_TESTS_ORACLES_HPP

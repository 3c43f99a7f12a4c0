#ifndef AIRYCONV_ASYMPTOTICS_HPP
#define AIRYCONV_ASYMPTOTICS_HPP

#include "airyconv/airy.hpp"
#include "airyconv/initial_data.hpp"

namespace airyconv {

// Regions of the (x, t) half-plane on which the expansion machinery is
// organized: T_alpha = {t >= |x|^alpha} and the lateral complements
// X_alpha^{+-} = {+-x > 0, 0 < t < |x|^alpha}.
struct Region {
  enum class Kind { T_alpha, X_plus_alpha, X_minus_alpha };
  Kind kind = Kind::T_alpha;
  double alpha = 2.7;
  double delta = 0.1;  // validity margin for t > |x|^{1+delta} uses
};

// Exact membership test per the region inequalities.
bool classify(double x, double t, const Region& region);

// The constant-plus-profile leading term of the large-time expansion.
struct LeadingTerm {
  double f0_plus = 0.0;
  double f0_minus = 0.0;
  // (f0+ - f0-) W(eta) + (f0+ + f0-)/2 at eta = x/(3t)^{1/3}
  double value(double x, double t, const AiryEvalConfig& cfg = {}) const;
};

// Leading term for the datum f; throws if f's order-0 tail coefficients
// are not declared.
double leading(const PowerTailFunction& f, double x, double t,
               const AiryEvalConfig& cfg = {});

// Taylor-regularized kernel
//   Psi_n(theta, eta) = theta^{-n} [Ai(eta - theta)
//                                   - sum_{r<n} (-theta)^r Ai^(r)(eta)/r!],
// continuously extended by (-1)^n Ai^(n)(eta)/n! at theta = 0.
double psi_n(int n, double theta, double eta, const AiryEvalConfig& cfg = {});

enum class Side { plus, minus };

// Boundary function of the tail regularization:
//   B_n^{+-}(eta) = sum_{r=0}^{n-2} Ai^(r)(eta)/(r!(r-n+1))
//                   + int over the unit theta-interval of Psi_n,
// the interval being [0,1] for plus and [-1,0] for minus.
double b_n(int n, double eta, Side side, const AiryEvalConfig& cfg = {});

}  // namespace airyconv

#endif  // AIRYCONV_ASYMPTOTICS_HPP

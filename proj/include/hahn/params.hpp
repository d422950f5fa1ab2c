#ifndef HAHN_PARAMS_HPP
#define HAHN_PARAMS_HPP

namespace hahn {

/// Parameters (alpha, beta, N) of a Hahn family. The family lives on the
/// N+1 integer points 0..N and has polynomials of degree 0..N.
class HahnParams {
 public:
  /// Throws DomainError unless alpha > -1, beta > -1 and N >= 1.
  HahnParams(double alpha, double beta, int N);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  int N() const { return N_; }
  int num_points() const { return N_ + 1; }

  /// True when both alpha and beta are nonnegative integers, which enables
  /// exact binomial weights.
  bool integer_parameters() const;

  friend bool operator==(const HahnParams&, const HahnParams&) = default;

 private:
  double alpha_;
  double beta_;
  int N_;
};

}  // namespace hahn

#endif  // HAHN_PARAMS_HPP

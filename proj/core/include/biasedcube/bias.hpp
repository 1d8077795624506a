#pragma once

namespace bcube {

class Bias {
 public:
  explicit Bias(double p);

  double p() const { return p_; }
  double q() const { return 1.0 - p_; }
  double sigma() const { return sigma_; }
  double variance() const { return sigma_ * sigma_; }
  // sigma^-2 ((1-p)^3 + p^3): the fourth-moment factor of a single biased character.
  double lambda() const { return lambda_; }

  // chi(0) and chi(1) of the normalized character (x - p) / sigma.
  double chi0() const { return -p_ / sigma_; }
  double chi1() const { return (1.0 - p_) / sigma_; }

  bool operator==(const Bias& o) const { return p_ == o.p_; }

 private:
  double p_;
  double sigma_;
  double lambda_;
};

}  // namespace bcube

#ifndef HAHN_COMPENSATED_SUM_HPP
#define HAHN_COMPENSATED_SUM_HPP

namespace hahn {

/// Neumaier's variant of Kahan summation. The running correction captures
/// the low-order bits lost by each addition (TwoSum), including the case
/// where the incoming term is larger than the running sum.
template <class T>
class CompensatedSum {
 public:
  CompensatedSum() = default;
  explicit CompensatedSum(T init) : sum_(init) {}

  void add(T term) {
    const T t = sum_ + term;
    if (magnitude(sum_) >= magnitude(term))
      comp_ += (sum_ - t) + term;
    else
      comp_ += (term - t) + sum_;
    sum_ = t;
  }

  CompensatedSum& operator+=(T term) {
    add(term);
    return *this;
  }

  T value() const { return sum_ + comp_; }

 private:
  static T magnitude(T v) { return v < T(0) ? -v : v; }

  T sum_{0};
  T comp_{0};
};

}  // namespace hahn

#endif  // HAHN_COMPENSATED_SUM_HPP

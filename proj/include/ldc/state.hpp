#ifndef LDC_STATE_HPP
#define LDC_STATE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>

namespace ldc {

// Phase-space point with fixed capacity. The largest model is 6-dimensional
// and the LD quadrature channel adds one more slot; a stack array keeps the
// integrator loops allocation-free.
class StateVector {
 public:
  static constexpr std::size_t capacity = 8;

  StateVector() = default;

  explicit StateVector(std::size_t n) : size_(n) {
    if (n > capacity) throw std::length_error("StateVector: dimension too large");
  }

  StateVector(std::initializer_list<double> init) : size_(init.size()) {
    if (init.size() > capacity) throw std::length_error("StateVector: dimension too large");
    std::size_t i = 0;
    for (double v : init) coords_[i++] = v;
  }

  std::size_t size() const { return size_; }
  void resize(std::size_t n) {
    if (n > capacity) throw std::length_error("StateVector: dimension too large");
    for (std::size_t i = size_; i < n; ++i) coords_[i] = 0.0;
    size_ = n;
  }

  double& operator[](std::size_t i) { return coords_[i]; }
  double operator[](std::size_t i) const { return coords_[i]; }

  const double* begin() const { return coords_.data(); }
  const double* end() const { return coords_.data() + size_; }
  double* begin() { return coords_.data(); }
  double* end() { return coords_.data() + size_; }

  bool all_finite() const {
    for (std::size_t i = 0; i < size_; ++i)
      if (!std::isfinite(coords_[i])) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (std::size_t i = 0; i < size_; ++i) m = std::max(m, std::abs(coords_[i]));
    return m;
  }

  bool operator==(const StateVector& other) const {
    if (size_ != other.size_) return false;
    for (std::size_t i = 0; i < size_; ++i)
      if (coords_[i] != other.coords_[i]) return false;
    return true;
  }

 private:
  std::array<double, capacity> coords_{};
  std::size_t size_ = 0;
};

inline double norm2(const StateVector& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

}  // namespace ldc

#endif

#pragma once

#include <cstdint>
#include <map>

#include "lgcy/poly.hpp"

namespace lgcy {

// Polynomial differential form on C^N: sum over increasing index sets I of
// a_I dz_I, with I encoded as a bitmask.
class DifferentialForm {
 public:
  explicit DifferentialForm(std::size_t nvars) : nvars_(nvars) {}

  static DifferentialForm function(const Polynomial& f);
  // dz_i
  static DifferentialForm dz(std::size_t nvars, std::size_t i);
  // a dz_1 ^ ... ^ dz_N
  static DifferentialForm volume(const Polynomial& a);

  std::size_t nvars() const { return nvars_; }
  const std::map<std::uint32_t, Polynomial>& components() const { return comps_; }
  Polynomial coefficient(std::uint32_t mask) const;
  bool is_zero() const { return comps_.empty(); }

  DifferentialForm wedge(const DifferentialForm& o) const;
  DifferentialForm exterior_derivative() const;
  DifferentialForm operator+(const DifferentialForm& o) const;
  DifferentialForm operator-(const DifferentialForm& o) const;
  DifferentialForm times(const Polynomial& g) const;

  friend bool operator==(const DifferentialForm& a, const DifferentialForm& b) {
    return a.nvars_ == b.nvars_ && a.comps_ == b.comps_;
  }

 private:
  void add_component(std::uint32_t mask, const Polynomial& p);

  std::size_t nvars_;
  std::map<std::uint32_t, Polynomial> comps_;
};

// df = sum d_i f dz_i
DifferentialForm differential(const Polynomial& f);

// xi = sum (-1)^{i-1} q_i z_i dz_1 ^ .. ^ (dz_i omitted) ^ .. ^ dz_N
DifferentialForm euler_xi_form(const WeightSystem& w);

inline std::uint32_t full_mask(std::size_t nvars) { return (std::uint32_t{1} << nvars) - 1; }

}  // namespace lgcy

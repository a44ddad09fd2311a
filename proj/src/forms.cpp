#include "lgcy/forms.hpp"

#include <bit>

namespace lgcy {

namespace {

// Sign of dz_A ^ dz_B after sorting into dz_{A|B}; zero when they overlap.
int wedge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  // Each index in b must move past every larger index of a.
  int swaps = 0;
  for (std::uint32_t rest = b; rest; rest &= rest - 1) {
    unsigned j = static_cast<unsigned>(std::countr_zero(rest));
    std::uint32_t above = j + 1 >= 32 ? 0 : (a >> (j + 1));
    swaps += std::popcount(above);
  }
  return swaps % 2 == 0 ? 1 : -1;
}

}  // namespace

DifferentialForm DifferentialForm::function(const Polynomial& f) {
  DifferentialForm w(f.nvars());
  w.add_component(0, f);
  return w;
}

DifferentialForm DifferentialForm::dz(std::size_t nvars, std::size_t i) {
  DifferentialForm w(nvars);
  w.add_component(std::uint32_t{1} << i, Polynomial::constant(nvars, Rational(1)));
  return w;
}

DifferentialForm DifferentialForm::volume(const Polynomial& a) {
  DifferentialForm w(a.nvars());
  w.add_component(full_mask(a.nvars()), a);
  return w;
}

Polynomial DifferentialForm::coefficient(std::uint32_t mask) const {
  auto it = comps_.find(mask);
  return it == comps_.end() ? Polynomial(nvars_) : it->second;
}

void DifferentialForm::add_component(std::uint32_t mask, const Polynomial& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = comps_.try_emplace(mask, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

DifferentialForm DifferentialForm::wedge(const DifferentialForm& o) const {
  DifferentialForm out(nvars_);
  for (const auto& [ma, pa] : comps_)
    for (const auto& [mb, pb] : o.comps_) {
      int s = wedge_sign(ma, mb);
      if (s == 0) continue;
      Polynomial prod = pa * pb;
      out.add_component(ma | mb, s > 0 ? prod : -prod);
    }
  return out;
}

DifferentialForm DifferentialForm::exterior_derivative() const {
  DifferentialForm out(nvars_);
  for (const auto& [mask, p] : comps_)
    for (std::size_t i = 0; i < nvars_; ++i) {
      std::uint32_t bit = std::uint32_t{1} << i;
      int s = wedge_sign(bit, mask);
      if (s == 0) continue;
      Polynomial dp = p.derivative(i);
      out.add_component(mask | bit, s > 0 ? dp : -dp);
    }
  return out;
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
  DifferentialForm out = *this;
  for (const auto& [m, p] : o.comps_) out.add_component(m, p);
  return out;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const {
  DifferentialForm out = *this;
  for (const auto& [m, p] : o.comps_) out.add_component(m, -p);
  return out;
}

DifferentialForm DifferentialForm::times(const Polynomial& g) const {
  DifferentialForm out(nvars_);
  for (const auto& [m, p] : comps_) out.add_component(m, p * g);
  return out;
}

DifferentialForm differential(const Polynomial& f) { return DifferentialForm::function(f).exterior_derivative(); }

DifferentialForm euler_xi_form(const WeightSystem& w) {
  const std::size_t n = w.nvars();
  DifferentialForm xi(n);
  for (std::size_t i = 0; i < n; ++i) {
    // dz_1 ^ .. omitted i .. ^ dz_N has increasing indices already.
    Polynomial coeff = Polynomial::monomial(Monomial::variable(n, i), i % 2 == 0 ? w.q()[i] : Rational(-w.q()[i]));
    DifferentialForm piece(n);
    piece = DifferentialForm::function(coeff);
    DifferentialForm frame = DifferentialForm::function(Polynomial::constant(n, Rational(1)));
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) frame = frame.wedge(DifferentialForm::dz(n, j));
    xi = xi + piece.wedge(frame);
  }
  return xi;
}

}  // namespace lgcy

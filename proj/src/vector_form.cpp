/*
 Copyright 2026 The splitcourant Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "splitcourant/vector_form.hpp"

#include <bit>
#include <memory>
#include <string>

#include "splitcourant/error.hpp"

namespace splitcourant {

namespace {

std::uint32_t xi_mask(int d) { return d == 0 ? 0u : ((1u << d) - 1u); }

bool has_p(const Monomial& m, int n) {
  for (int i = 1; i <= n; ++i) {
    if (m.p_exponent(i) != 0) return true;
  }
  return false;
}

int parity_of(const Superfunction& homogeneous, Grading grading) {
  if (homogeneous.is_zero()) return 0;
  const int d = homogeneous.dims().d;
  return shifted_degree(homogeneous.terms().begin()->first, d, grading) & 1;
}

}  // namespace

bool in_space(const Superfunction& f, Grading grading) {
  const auto [n, d] = f.dims();
  const std::uint32_t forbidden = grading == Grading::L ? xi_mask(d) : ~xi_mask(d);
  for (const auto& [m, c] : f.terms()) {
    if ((m.odd_mask() & forbidden) != 0 || has_p(m, n)) return false;
  }
  return true;
}

void require_in_space(const Superfunction& f, Grading grading, const char* what) {
  if (!in_space(f, grading)) {
    throw DegreeError(std::string(what) + " is not in " +
                      (grading == Grading::L ? "Gamma(wedge A)" : "Gamma(wedge A*)"));
  }
}

int shifted_degree(const Monomial& m, int d, Grading grading) {
  const Bidegree b = m.bidegree(d);
  return (grading == Grading::L ? b.k : b.l) - 2;
}

std::map<int, Superfunction> split_shifted(const Superfunction& f, Grading grading) {
  std::map<int, Superfunction> out;
  for (const auto& [m, c] : f.terms()) {
    out.try_emplace(shifted_degree(m, f.dims().d, grading), f.dims()).first->second.add_term(m, c);
  }
  return out;
}

VectorForm::VectorForm(Dims dims, int degree, Grading grading)
    : dims_(dims), degree_(degree), grading_(grading) {}

void VectorForm::add(int arity, Kernel kernel, const Rational& scale) {
  if (arity < 0) throw PreconditionError("negative arity");
  if (sgn(scale) == 0) return;
  kernels_[arity].emplace_back(scale, std::move(kernel));
}

void VectorForm::add(const VectorForm& other, const Rational& scale) {
  require_same_dims(dims_, other.dims_);
  if (other.degree_ != degree_ || other.grading_ != grading_) {
    throw DegreeError("cannot add vector forms of different degree or grading");
  }
  if (sgn(scale) == 0) return;
  for (const auto& [arity, list] : other.kernels_) {
    for (const auto& [s, k] : list) kernels_[arity].emplace_back(s * scale, k);
  }
}

std::vector<int> VectorForm::arities() const {
  std::vector<int> out;
  for (const auto& [a, list] : kernels_) out.push_back(a);
  return out;
}

VectorForm VectorForm::component(int arity) const {
  VectorForm out(dims_, degree_, grading_);
  if (auto it = kernels_.find(arity); it != kernels_.end()) out.kernels_[arity] = it->second;
  return out;
}

Superfunction VectorForm::evaluate_homogeneous(std::span<const Superfunction> args) const {
  Superfunction total(dims_);
  auto it = kernels_.find(static_cast<int>(args.size()));
  if (it == kernels_.end()) return total;
  for (const auto& [scale, kernel] : it->second) {
    Superfunction v = kernel(args);
    if (scale != 1) v *= scale;
    total += v;
  }
  return total;
}

Superfunction VectorForm::operator()(std::span<const Superfunction> args) const {
  Superfunction total(dims_);
  if (!kernels_.count(static_cast<int>(args.size()))) return total;
  std::vector<std::vector<Superfunction>> pieces;
  pieces.reserve(args.size());
  for (const auto& a : args) {
    require_same_dims(dims_, a.dims());
    require_in_space(a, grading_, "argument");
    auto split = split_shifted(a, grading_);
    if (split.empty()) return total;
    auto& list = pieces.emplace_back();
    for (auto& [deg, piece] : split) list.push_back(std::move(piece));
  }
  std::vector<Superfunction> current(args.size());
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == args.size()) {
      total += evaluate_homogeneous(current);
      return;
    }
    for (const auto& p : pieces[i]) {
      current[i] = p;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return total;
}

int unshuffle_sign(std::span<const int> parities, std::uint32_t front_mask) {
  int swaps = 0;
  int odd_behind = 0;  // odd arguments not in front seen so far
  for (std::size_t i = 0; i < parities.size(); ++i) {
    const bool front = (front_mask >> i) & 1u;
    if (!parities[i]) continue;
    if (front) {
      swaps += odd_behind;
    } else {
      ++odd_behind;
    }
  }
  return (swaps & 1) ? -1 : 1;
}

std::vector<std::uint32_t> unshuffles(int m, int k) {
  std::vector<std::uint32_t> out;
  if (k < 0 || k > m) return out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (std::popcount(mask) == k) out.push_back(mask);
  }
  return out;
}

VectorForm insert(const VectorForm& k, const VectorForm& h) {
  require_same_dims(k.dims(), h.dims());
  if (k.grading() != h.grading()) throw DegreeError("vector forms on different spaces");
  VectorForm out(k.dims(), k.degree() + h.degree(), k.grading());
  const Grading grading = k.grading();
  for (int ka : k.arities()) {
    for (int ha : h.arities()) {
      if (ha == 0) continue;
      auto kc = std::make_shared<VectorForm>(k.component(ka));
      auto hc = std::make_shared<VectorForm>(h.component(ha));
      const int m = ka + ha - 1;
      out.add(m, [kc, hc, ka, m, grading](std::span<const Superfunction> args) {
        std::vector<int> parities(m);
        for (int i = 0; i < m; ++i) parities[i] = parity_of(args[i], grading);
        Superfunction total(kc->dims());
        std::vector<Superfunction> inner;
        std::vector<Superfunction> outer;
        for (std::uint32_t mask : unshuffles(m, ka)) {
          inner.clear();
          outer.assign(1, Superfunction(kc->dims()));
          for (int i = 0; i < m; ++i) {
            if ((mask >> i) & 1u) {
              inner.push_back(args[i]);
            } else {
              outer.push_back(args[i]);
            }
          }
          outer[0] = (*kc)(inner);
          if (outer[0].is_zero()) continue;
          Superfunction v = (*hc)(outer);
          if (unshuffle_sign(parities, mask) < 0) v = -v;
          total += v;
        }
        return total;
      });
    }
  }
  return out;
}

VectorForm rn_pointwise(const VectorForm& k, const VectorForm& h) {
  VectorForm out = insert(k, h);
  const bool odd = (k.degree() * h.degree()) & 1;
  out.add(insert(h, k), odd ? Rational(1) : Rational(-1));
  return out;
}

}  // namespace splitcourant

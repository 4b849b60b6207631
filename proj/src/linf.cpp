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

#include "splitcourant/linf.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "splitcourant/error.hpp"

namespace splitcourant {

namespace {

Rational factorial(int k) {
  Rational r(1);
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

// Bidegree of the generator of an M-shaped arity-a atom.
Bidegree m_shape(int arity, Grading grading) {
  return grading == Grading::L ? Bidegree{3 - arity, arity} : Bidegree{arity, 3 - arity};
}

bool has_shape(const Superfunction& g, Bidegree b) {
  const auto hb = g.homogeneous_bidegree();
  return hb && *hb == b;
}

bool is_upsilon_atom(const DerivedAtom& a) {
  return a.arity <= 2 && has_shape(a.generator, {2 - a.arity, a.arity});
}

bool is_m_atom(const DerivedAtom& a) {
  return a.arity <= 3 && has_shape(a.generator, m_shape(a.arity, Grading::L));
}

SymFormAtom scaled(const SymFormAtom& atom, const Rational& factor) {
  if (const auto* d = std::get_if<DerivedAtom>(&atom)) {
    return DerivedAtom{d->generator, d->arity, d->sign * factor};
  }
  return EulerAtom{std::get<EulerAtom>(atom).scale * factor};
}

}  // namespace

SymFormFamily::SymFormFamily(Dims dims, int degree, Grading grading)
    : dims_(dims), degree_(degree), grading_(grading) {}

void SymFormFamily::add_derived(const Superfunction& generator, int arity, const Rational& sign) {
  require_same_dims(dims_, generator.dims());
  if (arity < 0) throw PreconditionError("negative arity");
  if (generator.is_zero() || sgn(sign) == 0) return;
  by_arity_[arity].push_back(DerivedAtom{generator, arity, sign});
}

void SymFormFamily::add_euler(const Rational& scale) {
  if (sgn(scale) == 0) return;
  by_arity_[1].push_back(EulerAtom{scale});
}

void SymFormFamily::add(const SymFormFamily& other) {
  require_same_dims(dims_, other.dims_);
  if (other.degree_ != degree_ || other.grading_ != grading_) {
    throw DegreeError("cannot add families of different degree or grading");
  }
  for (const auto& [a, atoms] : other.by_arity_) {
    for (const auto& atom : atoms) {
      if (const auto* d = std::get_if<DerivedAtom>(&atom)) {
        add_derived(d->generator, d->arity, d->sign);
      } else {
        add_euler(std::get<EulerAtom>(atom).scale);
      }
    }
  }
}

SymFormFamily SymFormFamily::component(int arity) const {
  SymFormFamily out(dims_, degree_, grading_);
  if (auto it = by_arity_.find(arity); it != by_arity_.end()) out.by_arity_[arity] = it->second;
  return out;
}

VectorForm SymFormFamily::pointwise() const {
  VectorForm out(dims_, degree_, grading_);
  const Grading grading = grading_;
  for (const auto& [arity, atoms] : by_arity_) {
    for (const auto& atom : atoms) {
      if (const auto* d = std::get_if<DerivedAtom>(&atom)) {
        auto gen = std::make_shared<Superfunction>(d->generator);
        out.add(
            arity,
            [gen, grading](std::span<const Superfunction> args) {
              Superfunction v = nested_bracket(*gen, args);
              if (!in_space(v, grading)) {
                throw RepresentationError("derived bracket value leaves the graded space");
              }
              return v;
            },
            d->sign);
      } else {
        out.add(
            1,
            [grading](std::span<const Superfunction> args) {
              const Superfunction& p = args[0];
              if (p.is_zero()) return p;
              const int deg = shifted_degree(p.terms().begin()->first, p.dims().d, grading);
              return p * Rational(deg);
            },
            std::get<EulerAtom>(atom).scale);
      }
    }
  }
  return out;
}

std::optional<Superfunction> SymFormFamily::m_source() const {
  if (degree_ != 1) return std::nullopt;
  Superfunction theta(dims_);
  for (const auto& [arity, atoms] : by_arity_) {
    for (const auto& atom : atoms) {
      const auto* d = std::get_if<DerivedAtom>(&atom);
      if (!d || arity > 3 || !has_shape(d->generator, m_shape(arity, grading_))) {
        return std::nullopt;
      }
      theta += d->generator * d->sign;
    }
  }
  return theta;
}

std::optional<Superfunction> SymFormFamily::upsilon_source() const {
  if (degree_ != 0 || grading_ != Grading::L) return std::nullopt;
  Superfunction j(dims_);
  for (const auto& [arity, atoms] : by_arity_) {
    for (const auto& atom : atoms) {
      const auto* d = std::get_if<DerivedAtom>(&atom);
      if (!d || !is_upsilon_atom(*d)) return std::nullopt;
      j -= d->generator * d->sign;
    }
  }
  return j;
}

SymFormFamily map_M(const CourantStructure& cs) {
  SymFormFamily l(cs.dims(), 1, Grading::L);
  l.add_derived(cs.psi, 0);
  l.add_derived(cs.gamma, 1);
  l.add_derived(cs.mu, 2);
  l.add_derived(cs.phi, 3);
  return l;
}

SymFormFamily dual_lambda(const CourantStructure& cs) {
  SymFormFamily l(cs.dims(), 1, Grading::LDual);
  l.add_derived(cs.phi, 0);
  l.add_derived(cs.mu, 1);
  l.add_derived(cs.gamma, 2);
  l.add_derived(cs.psi, 3);
  return l;
}

SymFormFamily map_upsilon(const SkewEndo& j) {
  SymFormFamily out(j.dims(), 0, Grading::L);
  out.add_derived(j.pi, 0, Rational(-1));
  out.add_derived(j.nn, 1, Rational(-1));
  out.add_derived(j.omega, 2, Rational(-1));
  return out;
}

SymFormFamily euler(Dims dims, const Rational& scale) {
  SymFormFamily out(dims, 0, Grading::L);
  out.add_euler(scale);
  return out;
}

SymFormFamily extend_tensor(const Superfunction& v, int arity) {
  for (const auto& [m, c] : v.terms()) {
    for (int i = 1; i <= v.dims().n; ++i) {
      if (m.p_exponent(i) != 0) throw DegreeError("tensor must not contain p");
    }
  }
  int l = 0;
  if (!v.is_zero()) {
    const auto b = v.homogeneous_bidegree();
    if (!b) throw DegreeError("tensor must be bidegree-homogeneous");
    if (b->l != arity) {
      throw DegreeError("arity " + std::to_string(arity) + " does not match " +
                        std::to_string(b->l) + " covector slots");
    }
    l = b->k;
  }
  const int k = arity;
  const int exponent = k * l - k * (k - 1) / 2;
  SymFormFamily out(v.dims(), k + l - 2, Grading::L);
  out.add_derived(v, k, (exponent % 2 == 0) ? Rational(1) : Rational(-1));
  return out;
}

Superfunction reduce_derived(const VectorForm& form, int arity) {
  const Dims dims = form.dims();
  const bool dual = form.grading() == Grading::LDual;
  std::vector<Superfunction> symbols;
  std::vector<Superfunction> partners;
  std::vector<bool> odd;
  for (int i = 1; i <= dims.n; ++i) {
    symbols.push_back(Superfunction::generator(dims, Generator::x(i)));
    partners.push_back(Superfunction::generator(dims, Generator::p(i)));
    odd.push_back(false);
  }
  for (int a = 1; a <= dims.d; ++a) {
    symbols.push_back(Superfunction::generator(dims, dual ? Generator::xi(a) : Generator::theta(a)));
    partners.push_back(Superfunction::generator(dims, dual ? Generator::theta(a) : Generator::xi(a)));
    odd.push_back(true);
  }
  Superfunction f(dims);
  if (!form.has_arity(arity)) return f;
  std::vector<Superfunction> args;
  for (const auto& ms : multisets(odd, arity)) {
    args.clear();
    for (int i : ms) args.push_back(symbols[i]);
    Superfunction v = form(args);
    if (v.is_zero()) continue;
    Rational weight(1);
    for (std::size_t i = 0, run = 1; i < ms.size(); ++i) {
      run = (i > 0 && ms[i] == ms[i - 1]) ? run + 1 : 1;
      weight /= static_cast<unsigned long>(run);
    }
    Superfunction y = Superfunction::scalar(dims, weight);
    for (std::size_t i = ms.size(); i-- > 0;) y = y * partners[ms[i]];
    f += v * y;
  }
  return f;
}

std::optional<FormDefect> compare_forms(const VectorForm& a, const VectorForm& b,
                                        const TupleSet& tuples, int max_arity) {
  const int top = std::min(max_arity, tuples.options().max_arity);
  for (int m = 0; m <= top; ++m) {
    if (!a.has_arity(m) && !b.has_arity(m)) continue;
    for (const auto& t : tuples.tuples(m)) {
      Superfunction diff = a(t) - b(t);
      if (!diff.is_zero()) return FormDefect{t, std::move(diff)};
    }
  }
  return std::nullopt;
}

CourantStructure map_M_inverse(const VectorForm& l, const TupleSet& tuples) {
  if (l.grading() != Grading::L || l.degree() != 1) {
    throw RepresentationError("expected a degree-1 family on Gamma(wedge A)[2]");
  }
  require_same_dims(l.dims(), tuples.dims());
  Superfunction theta(l.dims());
  const int top = std::max(3, l.max_arity());
  for (int m = 0; m <= top; ++m) {
    Superfunction f = reduce_derived(l, m);
    if (m <= 3 ? f != f.component({3 - m, m}) : !f.is_zero()) {
      throw RepresentationError("arity-" + std::to_string(m) +
                                " bracket is not the derived bracket of a degree-3 function");
    }
    theta += f;
  }
  CourantStructure cs = decompose(theta);
  if (compare_forms(map_M(cs).pointwise(), l, tuples, tuples.options().max_arity)) {
    throw RepresentationError("brackets are not multiderivations determined by generators");
  }
  return cs;
}

SkewEndo map_upsilon_inverse(const VectorForm& j, const TupleSet& tuples) {
  if (j.grading() != Grading::L || j.degree() != 0) {
    throw RepresentationError("expected a degree-0 family on Gamma(wedge A)[2]");
  }
  require_same_dims(j.dims(), tuples.dims());
  for (int m = 1; m <= tuples.options().max_arity; ++m) {
    if (!j.has_arity(m)) continue;
    for (const auto& t : tuples.tuples(m)) {
      if (t.front().homogeneous_bidegree() != Bidegree{0, 0}) continue;
      if (!j(t).is_zero()) {
        throw RepresentationError("form is not C-infinity-multilinear: j(f, ...) != 0");
      }
    }
  }
  Superfunction total(j.dims());
  const int top = std::max(2, j.max_arity());
  for (int m = 0; m <= top; ++m) {
    Superfunction f = -reduce_derived(j, m);
    if (m <= 2 ? f != f.component({2 - m, m}) : !f.is_zero()) {
      throw RepresentationError("arity-" + std::to_string(m) +
                                " component is not the extension of a tensor");
    }
    total += f;
  }
  SkewEndo s = SkewEndo::from_function(total);
  if (compare_forms(map_upsilon(s).pointwise(), j, tuples, tuples.options().max_arity)) {
    throw RepresentationError("form is not determined by its values on generators");
  }
  return s;
}

VectorForm insert(const SymFormFamily& k, const SymFormFamily& h) {
  return insert(k.pointwise(), h.pointwise());
}

namespace {

std::optional<SymFormFamily> rn_symbolic(const SymFormFamily& k, const SymFormFamily& h) {
  if (k.grading() != h.grading()) return std::nullopt;
  SymFormFamily out(k.dims(), k.degree() + h.degree(), k.grading());
  auto push = [&](const SymFormAtom& atom) {
    if (const auto* d = std::get_if<DerivedAtom>(&atom)) {
      out.add_derived(d->generator, d->arity, d->sign);
    } else {
      out.add_euler(std::get<EulerAtom>(atom).scale);
    }
  };
  const bool on_l = k.grading() == Grading::L;
  for (const auto& [ka, katoms] : k.by_arity()) {
    for (const auto& a : katoms) {
      for (const auto& [ha, hatoms] : h.by_arity()) {
        for (const auto& b : hatoms) {
          const auto* ea = std::get_if<EulerAtom>(&a);
          const auto* eb = std::get_if<EulerAtom>(&b);
          if (ea && eb) continue;
          if (ea) {
            push(scaled(b, -ea->scale * h.degree()));
            continue;
          }
          if (eb) {
            push(scaled(a, eb->scale * k.degree()));
            continue;
          }
          const auto& da = std::get<DerivedAtom>(a);
          const auto& db = std::get<DerivedAtom>(b);
          const int arity = da.arity + db.arity - 1;
          if (on_l && k.degree() == 0 && h.degree() == 1 && is_upsilon_atom(da) && is_m_atom(db)) {
            if (arity >= 0) out.add_derived(bracket(da.generator, db.generator), arity, -da.sign * db.sign);
          } else if (on_l && k.degree() == 1 && h.degree() == 0 && is_m_atom(da) &&
                     is_upsilon_atom(db)) {
            if (arity >= 0) out.add_derived(bracket(db.generator, da.generator), arity, da.sign * db.sign);
          } else {
            return std::nullopt;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

RnResult rn_bracket(const SymFormFamily& k, const SymFormFamily& h) {
  return RnResult{rn_pointwise(k.pointwise(), h.pointwise()), rn_symbolic(k, h)};
}

VectorForm jacobi_component(const VectorForm& l, int n) {
  return insert(l, l).component(n);
}

namespace {

JacobiReport jacobi_pointwise(const VectorForm& l, int n_max, const TupleSet& tuples,
                              bool skip_five) {
  if (l.degree() != 1) throw DegreeError("generalized Jacobi needs a degree-1 family");
  if (n_max < 0 || n_max > 5) throw PreconditionError("max-n must lie in [0,5]");
  JacobiReport report;
  const VectorForm ll = insert(l, l);
  for (int n = 0; n <= n_max; ++n) {
    JacobiEntry e;
    e.n = n;
    e.defect = Superfunction(l.dims());
    e.symbolic_defect = Superfunction(l.dims());
    if (n == 5 && skip_five) {
      e.vacuous = true;
    } else if (ll.has_arity(n)) {
      for (const auto& t : tuples.tuples(n)) {
        ++e.tuples_checked;
        Superfunction v = ll(t);
        if (!v.is_zero()) {
          e.pointwise_pass = false;
          e.defect = std::move(v);
          e.failing_tuple = t;
          break;
        }
      }
    }
    e.pass = e.pointwise_pass;
    report.entries.push_back(std::move(e));
  }
  return report;
}

void finish(JacobiReport& report) {
  report.pass = true;
  report.first_failure.reset();
  for (const auto& e : report.entries) {
    if (!e.pass) {
      report.pass = false;
      if (!report.first_failure) report.first_failure = e.n;
    }
  }
}

}  // namespace

JacobiReport gen_jacobi_check(const VectorForm& l, int n_max, const TupleSet& tuples) {
  JacobiReport report = jacobi_pointwise(l, n_max, tuples, false);
  finish(report);
  return report;
}

JacobiReport gen_jacobi_check(const SymFormFamily& l, int n_max, const TupleSet& tuples) {
  const auto theta = l.m_source();
  JacobiReport report = jacobi_pointwise(l.pointwise(), n_max, tuples, theta.has_value());
  if (theta) {
    std::array<Superfunction, 4> g;
    for (int a = 0; a < 4; ++a) g[a] = theta->component(m_shape(a, l.grading()));
    const bool on_l = l.grading() == Grading::L;
    const std::array<std::string, 4> name = on_l
        ? std::array<std::string, 4>{"psi", "gamma", "mu", "phi"}
        : std::array<std::string, 4>{"phi", "mu", "gamma", "psi"};
    auto br = [&](int i, int j) { return bracket(g[i], g[j]); };
    auto nm = [&](int i, int j) { return "{" + name[i] + "," + name[j] + "}"; };
    for (auto& e : report.entries) {
      Superfunction s(l.dims());
      switch (e.n) {
        case 0:
          s = br(1, 0);
          e.criterion = nm(1, 0) + "=0";
          break;
        case 1:
          s = br(2, 0) + br(1, 1) * Rational(1, 2);
          e.criterion = nm(2, 0) + "+1/2" + nm(1, 1) + "=0";
          break;
        case 2:
          s = br(3, 0) + br(2, 1);
          e.criterion = nm(3, 0) + "+" + nm(2, 1) + "=0";
          break;
        case 3:
          s = br(2, 2) + br(1, 3) * Rational(2);
          e.criterion = nm(2, 2) + "+2" + nm(1, 3) + "=0";
          break;
        case 4:
          s = br(2, 3);
          e.criterion = nm(2, 3) + "=0";
          break;
        default:
          e.criterion = "{" + name[3] + "," + name[3] + "}=0 (bidegree)";
          break;
      }
      e.symbolic_pass = s.is_zero();
      e.symbolic_defect = std::move(s);
      e.pass = e.pointwise_pass && *e.symbolic_pass;
    }
  }
  finish(report);
  return report;
}

NijenhuisFormReport nijenhuis_form_check(const SymFormFamily& n, const SymFormFamily& l,
                                         const SymFormFamily& k, const TupleSet& tuples) {
  if (n.degree() != 0 || k.degree() != 0) throw DegreeError("n and k must have degree 0");
  if (l.degree() != 1) throw DegreeError("l must have degree 1");
  NijenhuisFormReport r;
  const VectorForm np = n.pointwise();
  const VectorForm kp = k.pointwise();
  const VectorForm lp = l.pointwise();
  const VectorForm nnl = rn_pointwise(np, rn_pointwise(np, lp));
  const VectorForm kl = rn_pointwise(kp, lp);
  VectorForm diff = nnl;
  diff.add(kl, Rational(-1));
  r.reduced_defect = Superfunction(l.dims());
  for (int m = 0; m <= diff.max_arity(); ++m) r.reduced_defect += reduce_derived(diff, m);
  const int top = tuples.options().max_arity;
  r.defect = compare_forms(nnl, kl, tuples, top);
  r.square_ok = r.reduced_defect.is_zero() && !r.defect;
  if (!r.square_ok) {
    r.failed = "[n,[n,l]] = [k,l]";
  } else {
    const VectorForm nk = rn_pointwise(np, kp);
    r.defect = compare_forms(nk, VectorForm(nk.dims(), nk.degree(), nk.grading()), tuples, top);
    r.commute_ok = !r.defect;
    if (!r.commute_ok) r.failed = "[n,k] = 0";
  }
  r.pass = r.square_ok && r.commute_ok;
  return r;
}

Superfunction maurer_cartan_check(const VectorForm& l, const Superfunction& pi) {
  require_same_dims(l.dims(), pi.dims());
  require_in_space(pi, l.grading(), "pi");
  if (!pi.is_zero() && split_shifted(pi, l.grading()).begin()->first != 0) {
    throw DegreeError("Maurer-Cartan candidate must have shifted degree 0");
  }
  if (split_shifted(pi, l.grading()).size() > 1) {
    throw DegreeError("Maurer-Cartan candidate must have shifted degree 0");
  }
  Superfunction defect(l.dims());
  for (int k : l.arities()) {
    std::vector<Superfunction> args(k, pi);
    Rational c = Rational(1) / factorial(k);
    if (k % 2) c = -c;
    defect += l(args) * c;
  }
  return defect;
}

Superfunction maurer_cartan_check(const SymFormFamily& l, const Superfunction& pi) {
  return maurer_cartan_check(l.pointwise(), pi);
}

VectorForm twist_linf(const VectorForm& l, const Superfunction& pi) {
  require_same_dims(l.dims(), pi.dims());
  require_in_space(pi, l.grading(), "pi");
  const auto pieces = split_shifted(pi, l.grading());
  if (pieces.size() > 1 || (!pieces.empty() && pieces.begin()->first != 0)) {
    throw DegreeError("twisting element must have shifted degree 0");
  }
  VectorForm out(l.dims(), l.degree(), l.grading());
  auto base = std::make_shared<VectorForm>(l);
  auto p = std::make_shared<Superfunction>(pi);
  const std::vector<int> arities = l.arities();
  for (int m = 0; m <= l.max_arity(); ++m) {
    out.add(m, [base, p, arities, m](std::span<const Superfunction> args) {
      Superfunction total(base->dims());
      std::vector<Superfunction> full;
      for (int k : arities) {
        if (k < m) continue;
        full.assign(k - m, *p);
        full.insert(full.end(), args.begin(), args.end());
        Rational c = Rational(1) / factorial(k - m);
        if ((k - m) % 2) c = -c;
        total += (*base)(full) * c;
      }
      return total;
    });
  }
  return out;
}

VectorForm twist_linf(const SymFormFamily& l, const Superfunction& pi) {
  return twist_linf(l.pointwise(), pi);
}

}  // namespace splitcourant

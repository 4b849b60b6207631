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

#include "splitcourant/verify.hpp"

#include <array>
#include <memory>

#include "splitcourant/error.hpp"

namespace splitcourant {

namespace {

constexpr std::array<std::pair<FaceId, std::string_view>, 5> kFaces = {{
    {FaceId::DeformSquare, "deform-square"},
    {FaceId::TwistSquare, "twist-square"},
    {FaceId::CourantTwistDeform, "courant-twist-deform"},
    {FaceId::LinfTwistDeform, "linf-twist-deform"},
    {FaceId::Cube, "cube"},
}};

constexpr std::array<std::pair<StructureKind, std::string_view>, 6> kStructures = {{
    {StructureKind::Poisson, "poisson"},
    {StructureKind::PoissonNijenhuis, "poisson-nijenhuis"},
    {StructureKind::OmegaN, "omega-n"},
    {StructureKind::POmega, "p-omega"},
    {StructureKind::ExactPqnBackground, "exact-pqn-background"},
    {StructureKind::MaurerCartan, "maurer-cartan"},
}};

FaceResult make_result(std::string name, Superfunction lhs, Superfunction rhs) {
  FaceResult r;
  r.name = std::move(name);
  r.defect = lhs - rhs;
  r.pass = r.defect.is_zero();
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

void require_bivector(const Superfunction& pi) {
  if (!pi.is_zero() && pi.homogeneous_bidegree() != Bidegree{2, 0}) {
    throw PreconditionError("pi must be a bivector (bidegree (2,0))");
  }
}

SkewEndo n_only(const SkewEndo& j) {
  const Superfunction zero(j.dims());
  return SkewEndo::from_parts(zero, j.nn, zero);
}

// M(Theta_J) against [Upsilon(J), M(Theta)].
FaceResult deform_square(std::string name, const CourantStructure& cs, const SkewEndo& j,
                         const TupleSet& ts) {
  Superfunction courant = deform(cs, j).theta;
  const RnResult rn = rn_bracket(map_upsilon(j), map_M(cs));
  Superfunction linf = map_M_inverse(rn.pointwise, ts).theta;
  return make_result(std::move(name), std::move(linf), std::move(courant));
}

// M(e^pi Theta) against e^pi M(Theta).
FaceResult twist_square(std::string name, const CourantStructure& cs, const Superfunction& pi,
                        const TupleSet& ts, int max_order) {
  Superfunction courant = twist(cs, pi, max_order).theta;
  Superfunction linf = map_M_inverse(twist_linf(map_M(cs), pi), ts).theta;
  return make_result(std::move(name), std::move(linf), std::move(courant));
}

// e^pi(Theta_N) against (e^pi Theta)_{e^pi N}.
FaceResult courant_twist_deform(const CourantStructure& cs, const SkewEndo& nj,
                                const Superfunction& pi, int max_order) {
  Superfunction lhs = twist(deform(cs, nj), pi, max_order).theta;
  Superfunction rhs = deform(twist(cs, pi, max_order), twist_endo(nj.nn, pi)).theta;
  return make_result("courant-twist-deform", std::move(lhs), std::move(rhs));
}

// e^pi [j_1, l] against [j', e^pi l] with j' = j_1 + j_1(-pi).
FaceResult linf_twist_deform(const CourantStructure& cs, const SkewEndo& nj,
                             const Superfunction& pi, const TupleSet& ts) {
  const VectorForm l = map_M(cs).pointwise();
  const VectorForm j1 = map_upsilon(nj).pointwise();
  Superfunction lhs = map_M_inverse(twist_linf(rn_pointwise(j1, l), pi), ts).theta;

  VectorForm jprime = j1;
  auto j0 = std::make_shared<Superfunction>(j1({-pi}));
  jprime.add(0, [j0](std::span<const Superfunction>) { return *j0; });
  Superfunction rhs = map_M_inverse(rn_pointwise(jprime, twist_linf(l, pi)), ts).theta;
  return make_result("linf-twist-deform", std::move(lhs), std::move(rhs));
}

}  // namespace

std::string_view face_name(FaceId face) {
  for (const auto& [id, name] : kFaces) {
    if (id == face) return name;
  }
  return "unknown";
}

std::optional<FaceId> parse_face(std::string_view name) {
  for (const auto& [id, n] : kFaces) {
    if (n == name) return id;
  }
  return std::nullopt;
}

std::string_view structure_name(StructureKind kind) {
  for (const auto& [id, name] : kStructures) {
    if (id == kind) return name;
  }
  return "unknown";
}

std::optional<StructureKind> parse_structure(std::string_view name) {
  for (const auto& [id, n] : kStructures) {
    if (n == name) return id;
  }
  return std::nullopt;
}

FaceReport verify_face(FaceId face, const CourantStructure& cs, const SkewEndo& j,
                       const Superfunction& pi, const CheckOptions& options) {
  require_same_dims(cs.dims(), j.dims());
  require_same_dims(cs.dims(), pi.dims());
  const TupleSet ts(cs.dims(), Grading::L, options.tuples);
  FaceReport report{face, true, {}};
  const int order = options.max_order;
  switch (face) {
    case FaceId::DeformSquare:
      report.faces.push_back(deform_square("deform-square", cs, j, ts));
      break;
    case FaceId::TwistSquare:
      require_bivector(pi);
      report.faces.push_back(twist_square("twist-square", cs, pi, ts, order));
      break;
    case FaceId::CourantTwistDeform:
      require_bivector(pi);
      report.faces.push_back(courant_twist_deform(cs, n_only(j), pi, order));
      break;
    case FaceId::LinfTwistDeform:
      require_bivector(pi);
      report.faces.push_back(linf_twist_deform(cs, n_only(j), pi, ts));
      break;
    case FaceId::Cube: {
      require_bivector(pi);
      const SkewEndo nj = n_only(j);
      const CourantStructure twisted = twist(cs, pi, order);
      report.faces.push_back(deform_square("deform-square(Theta,N)", cs, nj, ts));
      report.faces.push_back(deform_square("deform-square(e^pi Theta,e^pi N)", twisted,
                                           twist_endo(nj.nn, pi), ts));
      report.faces.push_back(twist_square("twist-square(Theta)", cs, pi, ts, order));
      report.faces.push_back(twist_square("twist-square(Theta_N)", deform(cs, nj), pi, ts, order));
      report.faces.push_back(courant_twist_deform(cs, nj, pi, order));
      report.faces.push_back(linf_twist_deform(cs, nj, pi, ts));
      break;
    }
  }
  for (const auto& f : report.faces) report.pass = report.pass && f.pass;
  return report;
}

NijenhuisMorphismReport nijenhuis_morphism_check(const CourantStructure& cs, const SkewEndo& j,
                                                 const Rational& lambda,
                                                 const CheckOptions& options) {
  require_same_dims(cs.dims(), j.dims());
  NijenhuisMorphismReport r;
  r.torsion = torsion(cs, j, lambda, options.tuples.x_degree);
  r.is_nijenhuis = r.torsion.is_zero();
  const TupleSet ts(cs.dims(), Grading::L, options.tuples);
  r.form = nijenhuis_form_check(map_upsilon(j), map_M(cs), euler(cs.dims(), -lambda), ts);
  r.agree = r.form.pass == r.is_nijenhuis;
  return r;
}

namespace {

const Superfunction& need(const std::optional<Superfunction>& v, const char* name,
                          StructureKind kind) {
  if (!v) {
    throw PreconditionError(std::string(structure_name(kind)) + " needs " + name);
  }
  return *v;
}

PreconditionResult zero_check(std::string name, Superfunction value) {
  PreconditionResult p;
  p.name = std::move(name);
  p.ok = value.is_zero();
  p.defect = std::move(value);
  return p;
}

// N(pi#(xi_a)) = pi#(N*(xi_a)) with pi#(alpha) = {alpha,pi}, N(X) = {X,N},
// N*(alpha) = -{alpha,N}.
PreconditionResult compat_pi_n(const Superfunction& pi, const Superfunction& nn) {
  const Dims dims = pi.dims();
  Superfunction defect(dims);
  for (int a = 1; a <= dims.d; ++a) {
    const Superfunction xi = Superfunction::generator(dims, Generator::xi(a));
    const Superfunction lhs = bracket(bracket(xi, pi), nn);
    const Superfunction rhs = bracket(-bracket(xi, nn), pi);
    defect += (lhs - rhs) * Superfunction::generator(dims, Generator::theta(a));
  }
  return zero_check("N o pi# = pi# o N*", std::move(defect));
}

// omega_flat(N X) = N*(omega_flat X) on X = th^a.
PreconditionResult compat_omega_n(const Superfunction& omega, const Superfunction& nn) {
  const Dims dims = omega.dims();
  Superfunction defect(dims);
  for (int a = 1; a <= dims.d; ++a) {
    const Superfunction th = Superfunction::generator(dims, Generator::theta(a));
    const Superfunction lhs = bracket(bracket(th, nn), omega);
    const Superfunction rhs = -bracket(bracket(th, omega), nn);
    defect += (lhs - rhs) * Superfunction::generator(dims, Generator::xi(a));
  }
  return zero_check("omega_flat o N = N* o omega_flat", std::move(defect));
}

PreconditionResult square_check(std::string name, const SkewEndo& j,
                                const std::optional<Rational>& lambda, int x_degree,
                                std::optional<Rational>& found) {
  PreconditionResult p;
  p.name = std::move(name);
  p.defect = Superfunction(j.dims());
  const auto sq = j_square(j, x_degree);
  found = sq;
  p.ok = sq.has_value() && (!lambda || *sq == *lambda);
  return p;
}

bool all_ok(const std::vector<PreconditionResult>& list) {
  for (const auto& p : list) {
    if (!p.ok) return false;
  }
  return true;
}

}  // namespace

StructureReport check_structure(StructureKind kind, const StructureData& data,
                                const std::optional<Rational>& lambda,
                                const CheckOptions& options) {
  StructureReport r;
  r.kind = kind;
  const int xdeg = options.tuples.x_degree;

  if (kind == StructureKind::MaurerCartan) {
    const Superfunction& theta = need(data.theta, "theta", kind);
    const Superfunction& pi = need(data.pi, "pi", kind);
    require_bivector(pi);
    r.defect = maurer_cartan_check(map_M(decompose(theta)), pi);
    r.holds = r.defect.is_zero();
    return r;
  }

  const Superfunction& mu = need(data.mu, "mu", kind);
  const Dims dims = mu.dims();
  if (!mu.is_zero() && mu.homogeneous_bidegree() != Bidegree{1, 2}) {
    throw PreconditionError("mu must have bidegree (1,2)");
  }
  const Superfunction zero(dims);
  r.preconditions.push_back(zero_check("{mu,mu} = 0", bracket(mu, mu)));

  auto run_nijenhuis = [&](const Superfunction& theta, const SkewEndo& j) {
    r.preconditions_ok = all_ok(r.preconditions);
    if (!r.preconditions_ok) return;
    r.nijenhuis = nijenhuis_morphism_check(decompose(theta), j, *r.lambda, options);
    r.holds = r.nijenhuis->is_nijenhuis;
    r.defect = r.nijenhuis->torsion;
    r.cross_checks.push_back({"torsion = 0 <=> Upsilon(J) Nijenhuis with square -lambda E",
                              r.nijenhuis->agree, r.nijenhuis->form.reduced_defect});
  };

  switch (kind) {
    case StructureKind::Poisson: {
      const Superfunction& pi = need(data.pi, "pi", kind);
      require_bivector(pi);
      r.preconditions_ok = all_ok(r.preconditions);
      if (!r.preconditions_ok) break;
      r.defect = bracket(bracket(mu, pi), pi);
      r.holds = r.defect.is_zero();
      const Superfunction mc = maurer_cartan_check(map_M(decompose(mu)), pi);
      r.cross_checks.push_back(
          zero_check("Maurer-Cartan defect = 1/2 {{mu,pi},pi}", mc - r.defect * Rational(1, 2)));
      break;
    }
    case StructureKind::PoissonNijenhuis: {
      const Superfunction& pi = need(data.pi, "pi", kind);
      const Superfunction& nn = need(data.nn, "N", kind);
      const SkewEndo j = SkewEndo::from_parts(pi, nn, zero);
      r.preconditions.push_back(compat_pi_n(pi, nn));
      r.preconditions.push_back(
          square_check("N^2 = lambda id", SkewEndo::from_parts(zero, nn, zero), lambda, xdeg, r.lambda));
      if (r.lambda) run_nijenhuis(mu, j);
      break;
    }
    case StructureKind::OmegaN: {
      const Superfunction& omega = need(data.omega, "omega", kind);
      const Superfunction& nn = need(data.nn, "N", kind);
      const SkewEndo j = SkewEndo::from_parts(zero, nn, omega);
      r.preconditions.push_back(compat_omega_n(omega, nn));
      r.preconditions.push_back(
          square_check("N^2 = lambda id", SkewEndo::from_parts(zero, nn, zero), lambda, xdeg, r.lambda));
      if (r.lambda) run_nijenhuis(mu, j);
      break;
    }
    case StructureKind::POmega: {
      const Superfunction& pi = need(data.pi, "pi", kind);
      const Superfunction& omega = need(data.omega, "omega", kind);
      require_bivector(pi);
      // N = pi# o omega_flat, omega_N(X,Y) = omega(NX,Y).
      Superfunction nn(dims);
      for (int a = 1; a <= dims.d; ++a) {
        const Superfunction th = Superfunction::generator(dims, Generator::theta(a));
        nn += Superfunction::generator(dims, Generator::xi(a)) * bracket(bracket(th, omega), pi);
      }
      Superfunction omega_n(dims);
      for (int a = 1; a <= dims.d; ++a) {
        for (int b = a + 1; b <= dims.d; ++b) {
          const Superfunction tha = Superfunction::generator(dims, Generator::theta(a));
          const Superfunction thb = Superfunction::generator(dims, Generator::theta(b));
          const Superfunction v = nested_bracket(tha, {nn, omega, thb});
          omega_n += v * Superfunction::from_monomial(dims, Rational(1),
                                                      {Generator::xi(a), Generator::xi(b)});
        }
      }
      r.preconditions_ok = all_ok(r.preconditions);
      if (!r.preconditions_ok) break;
      const PreconditionResult poisson = zero_check("{{mu,pi},pi} = 0", bracket(bracket(mu, pi), pi));
      const PreconditionResult closed = zero_check("{mu,omega} = 0", bracket(mu, omega));
      const PreconditionResult closed_n = zero_check("{mu,omega_N} = 0", bracket(mu, omega_n));
      r.holds = poisson.ok && closed.ok && closed_n.ok;
      r.defect = poisson.defect + closed.defect + closed_n.defect;
      r.cross_checks.push_back(poisson);
      r.cross_checks.push_back(closed);
      r.cross_checks.push_back(closed_n);
      const SkewEndo jn = SkewEndo::from_parts(zero, nn, zero);
      const auto sq = j_square(jn, xdeg);
      if (sq && (!lambda || *lambda == *sq)) {
        r.lambda = sq;
        r.nijenhuis = nijenhuis_morphism_check(decompose(mu), jn, *sq, options);
        r.cross_checks.push_back({"torsion = 0 <=> Upsilon(J_N) Nijenhuis with square -lambda E",
                                  r.nijenhuis->agree, r.nijenhuis->form.reduced_defect});
        // A P-Omega pair makes N Nijenhuis.
        r.cross_checks.push_back({"P-Omega implies J_N Nijenhuis",
                                  !r.holds || r.nijenhuis->is_nijenhuis, r.nijenhuis->torsion});
      }
      break;
    }
    case StructureKind::ExactPqnBackground: {
      const Superfunction& pi = need(data.pi, "pi", kind);
      const Superfunction& nn = need(data.nn, "N", kind);
      const Superfunction& omega = need(data.omega, "omega", kind);
      const Superfunction& phi = need(data.phi, "phi", kind);
      if (!phi.is_zero() && phi.homogeneous_bidegree() != Bidegree{0, 3}) {
        throw PreconditionError("phi must have bidegree (0,3)");
      }
      const SkewEndo j = SkewEndo::from_parts(pi, nn, omega);
      r.preconditions.push_back(zero_check("{mu,phi} = 0", bracket(mu, phi)));
      r.preconditions.push_back(compat_pi_n(pi, nn));
      r.preconditions.push_back(compat_omega_n(omega, nn));
      std::optional<Rational> n_square;
      r.preconditions.push_back(
          square_check("N^2 = lambda id", SkewEndo::from_parts(zero, nn, zero), lambda, xdeg, n_square));
      r.preconditions.push_back(square_check("J^2 = lambda id", j, n_square ? n_square : lambda,
                                             xdeg, r.lambda));
      if (r.lambda) run_nijenhuis(mu + phi, j);
      break;
    }
    case StructureKind::MaurerCartan:
      break;
  }
  r.preconditions_ok = all_ok(r.preconditions);
  if (!r.preconditions_ok) r.holds = false;
  r.consistent = all_ok(r.cross_checks);
  return r;
}

}  // namespace splitcourant

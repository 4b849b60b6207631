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

#include "splitcourant/commands.hpp"

#include <charconv>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "splitcourant/error.hpp"
#include "splitcourant/expression.hpp"

namespace splitcourant {

namespace {

using Json = nlohmann::ordered_json;

struct CommandInfo {
  std::set<std::string, std::less<>> flags;
};

const std::map<std::string, CommandInfo, std::less<>>& command_table() {
  static const std::map<std::string, CommandInfo, std::less<>> table = {
      {"check-courant", {{"theta"}}},
      {"dorfman", {{"theta", "u", "v"}}},
      {"anchor", {{"theta", "u", "f"}}},
      {"to-linf", {{"theta"}}},
      {"check-linf", {{"theta", "max-n"}}},
      {"deform", {{"theta", "j"}}},
      {"torsion", {{"theta", "j", "lambda"}}},
      {"twist", {{"theta", "pi", "omega"}}},
      {"twist-linf", {{"theta", "pi"}}},
      {"check-mc", {{"theta", "pi"}}},
      {"check-nijenhuis", {{"theta", "j", "lambda"}}},
      {"check-structure", {{"kind", "theta", "mu", "phi", "pi", "N", "omega", "lambda"}}},
      {"verify-face", {{"face", "theta", "j", "pi"}}},
      {"verify-cube", {{"theta", "j", "pi"}}},
  };
  return table;
}

// Flag values of one request plus the resolved inputs reported back.
class Context {
 public:
  Context(const ProblemSpec& spec, const CheckRequest& request, CheckRecord& record)
      : spec_(spec), request_(request), record_(record) {
    if (request.argv.empty()) throw ParseError("empty check request", request.line, 1);
    const auto it = command_table().find(request.argv[0]);
    if (it == command_table().end()) {
      throw ParseError("unknown command '" + request.argv[0] + "'", request.line, 1);
    }
    for (std::size_t i = 1; i < request.argv.size(); ++i) {
      const std::string& arg = request.argv[i];
      if (arg.rfind("--", 0) != 0 || arg.size() == 2) {
        throw ParseError("expected a flag, found '" + arg + "'", request.line, 1);
      }
      std::string name = arg.substr(2);
      std::string value;
      if (const auto eq = name.find('='); eq != std::string::npos) {
        value = name.substr(eq + 1);
        name.resize(eq);
      } else {
        if (i + 1 >= request.argv.size()) {
          throw ParseError("flag --" + name + " needs a value", request.line, 1);
        }
        value = request.argv[++i];
      }
      if (!it->second.flags.contains(name)) {
        throw ParseError("unknown flag --" + name + " for " + request.argv[0], request.line, 1);
      }
      if (!flags_.emplace(name, value).second) {
        throw ParseError("duplicate flag --" + name, request.line, 1);
      }
    }
  }

  const std::string& command() const { return request_.argv[0]; }
  ParseError parse_error(const std::string& message) const {
    return ParseError(message, request_.line, 1);
  }
  Dims dims() const { return spec_.dims; }
  bool has_flag(std::string_view name) const { return flags_.find(name) != flags_.end(); }
  bool has_binding(std::string_view name) const {
    return spec_.bindings.find(name) != spec_.bindings.end();
  }
  std::optional<std::string> flag(std::string_view name) const {
    const auto it = flags_.find(name);
    if (it == flags_.end()) return std::nullopt;
    return it->second;
  }

  // The flag value (a binding name or an inline expression), else the
  // binding `fallback`.
  std::optional<Superfunction> lookup(std::string_view name, std::string_view fallback) {
    std::optional<Superfunction> out;
    if (const auto value = flag(name)) {
      if (const auto b = spec_.bindings.find(*value); b != spec_.bindings.end()) {
        out = b->second;
      } else {
        out = parse_expression(*value, spec_.dims, &spec_.bindings, {request_.line, 1});
      }
    } else if (const auto b = spec_.bindings.find(fallback); b != spec_.bindings.end()) {
      out = b->second;
    }
    if (out) record(name, *out);
    return out;
  }

  Superfunction require(std::string_view name, std::string_view fallback) {
    auto v = lookup(name, fallback);
    if (!v) {
      throw ParseError(command() + " needs --" + std::string(name) + " or a binding '" +
                           std::string(fallback) + "'",
                       request_.line, 1);
    }
    return *v;
  }

  Superfunction require(std::string_view name) { return require(name, name); }

  CourantStructure theta() {
    const Superfunction t = require("theta");
    return decompose(t);
  }

  // --j, else the binding j, else the binding N.
  SkewEndo endo() {
    auto j = lookup("j", "j");
    if (!j) j = lookup("j", "N");
    if (!j) throw ParseError(command() + " needs --j or a binding 'j' or 'N'", request_.line, 1);
    return SkewEndo::from_function(*j);
  }

  std::optional<Rational> lambda() {
    const auto value = flag("lambda");
    if (!value) return std::nullopt;
    Rational q = parse_rational(*value);
    record_.inputs.emplace_back("lambda", q.get_str());
    return q;
  }

  int integer_flag(std::string_view name, int fallback) {
    const auto value = flag(name);
    int out = fallback;
    if (value) {
      const char* first = value->data();
      const char* last = first + value->size();
      const auto [ptr, ec] = std::from_chars(first, last, out);
      if (ec != std::errc() || ptr != last) {
        throw ParseError("--" + std::string(name) + " expects an integer", request_.line, 1);
      }
    }
    record_.inputs.emplace_back(std::string(name), std::to_string(out));
    return out;
  }

  void record(std::string_view name, const Superfunction& f) {
    record_.inputs.emplace_back(std::string(name), render(f));
  }
  void record(std::string_view name, std::string value) {
    record_.inputs.emplace_back(std::string(name), std::move(value));
  }

 private:
  Rational parse_rational(const std::string& text) const {
    const auto bad = [&] {
      return ParseError("malformed rational '" + text + "'", request_.line, 1);
    };
    const auto slash = text.find('/');
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    const std::string num = text.substr(0, slash);
    const auto digits = [](const std::string& s, bool allow_sign) {
      std::size_t i = (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
      if (i == s.size()) return false;
      for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') return false;
      }
      return true;
    };
    if (!digits(num, true) || !digits(den, false)) throw bad();
    Rational q;
    q.get_num() = mpz_class(num[0] == '+' ? num.substr(1) : num);
    q.get_den() = mpz_class(den);
    if (q.get_den() == 0) throw bad();
    q.canonicalize();
    return q;
  }

  const ProblemSpec& spec_;
  const CheckRequest& request_;
  CheckRecord& record_;
  std::map<std::string, std::string, std::less<>> flags_;
};

Json tuple_json(const Tuple& t) {
  Json out = Json::array();
  for (const auto& f : t) out.push_back(render(f));
  return out;
}

void set_defect(CheckRecord& record, const Superfunction& defect) {
  record.defect = render(defect);
}

void require_degree(const Superfunction& f, int degree, const char* name) {
  if (!f.has_total_degree(degree)) {
    throw PreconditionError(std::string(name) + " must have total degree " + std::to_string(degree));
  }
}

void require_bidegree(const Superfunction& f, Bidegree b, const char* name) {
  if (!f.is_zero() && f.homogeneous_bidegree() != b) {
    throw PreconditionError(std::string(name) + " must have bidegree (" + std::to_string(b.k) +
                            "," + std::to_string(b.l) + ")");
  }
}

Rational lambda_or_square(Context& ctx, const SkewEndo& j, const CheckOptions& options) {
  if (auto l = ctx.lambda()) return *l;
  const auto sq = j_square(j, options.tuples.x_degree);
  if (!sq) throw PreconditionError("J^2 is not a multiple of the identity");
  ctx.record("lambda", sq->get_str());
  return *sq;
}

Json face_json(const FaceReport& report) {
  Json faces = Json::array();
  for (const auto& f : report.faces) {
    faces.push_back({{"face", f.name},
                     {"pass", f.pass},
                     {"lhs", render(f.lhs)},
                     {"rhs", render(f.rhs)},
                     {"defect", render(f.defect)}});
  }
  return faces;
}

void run_face(Context& ctx, CheckRecord& record, FaceId face, const CheckOptions& options) {
  const CourantStructure cs = ctx.theta();
  const SkewEndo j = ctx.endo();
  Superfunction pi = ctx.lookup("pi", "pi").value_or(Superfunction(ctx.dims()));
  const FaceReport report = verify_face(face, cs, j, pi, options);
  record.outcome = report.pass ? Outcome::Pass : Outcome::Fail;
  record.details["faces"] = face_json(report);
  Superfunction defect(ctx.dims());
  for (const auto& f : report.faces) {
    if (!f.pass) {
      defect = f.defect;
      record.message = "face " + f.name + " does not commute";
      break;
    }
  }
  set_defect(record, defect);
}

Json precondition_json(const std::vector<PreconditionResult>& list) {
  Json out = Json::array();
  for (const auto& p : list) {
    out.push_back({{"name", p.name}, {"ok", p.ok}, {"defect", render(p.defect)}});
  }
  return out;
}

void run_command(Context& ctx, CheckRecord& record, const CheckOptions& options) {
  const std::string& cmd = ctx.command();
  const auto tuples_for = [&](Grading g) { return TupleSet(ctx.dims(), g, options.tuples); };

  if (cmd == "check-courant") {
    const IntegrabilityReport r = integrability(ctx.theta());
    record.outcome = r.is_courant ? Outcome::Pass : Outcome::Fail;
    set_defect(record, r.full);
    Json comps = Json::object();
    std::string nonzero;
    for (std::size_t i = 0; i < r.components.size(); ++i) {
      const std::string name(IntegrabilityReport::kComponentNames[i]);
      comps[name] = render(r.components[i]);
      if (!r.components[i].is_zero()) nonzero += (nonzero.empty() ? "" : ", ") + name;
    }
    record.details["components"] = comps;
    if (!r.is_courant) record.message = "nonzero components: " + nonzero;
    return;
  }
  if (cmd == "dorfman") {
    const CourantStructure cs = ctx.theta();
    const Superfunction u = ctx.require("u");
    const Superfunction v = ctx.require("v");
    require_degree(u, 1, "u");
    require_degree(v, 1, "v");
    record.outcome = Outcome::Value;
    record.value = render(dorfman(cs, u, v));
    return;
  }
  if (cmd == "anchor") {
    const CourantStructure cs = ctx.theta();
    const Superfunction u = ctx.require("u");
    const Superfunction f = ctx.require("f");
    require_degree(u, 1, "u");
    require_degree(f, 0, "f");
    record.outcome = Outcome::Value;
    record.value = render(anchor_apply(cs, u, f));
    return;
  }
  if (cmd == "to-linf") {
    const CourantStructure cs = ctx.theta();
    const SymFormFamily l = map_M(cs);
    const CourantStructure back = map_M_inverse(l.pointwise(), tuples_for(Grading::L));
    record.details["l0"] = render(cs.psi);
    record.details["l1"] = render(cs.gamma);
    record.details["l2"] = render(cs.mu);
    record.details["l3"] = render(cs.phi);
    record.details["round_trip"] = back.theta == cs.theta;
    record.value = render(back.theta);
    set_defect(record, back.theta - cs.theta);
    record.outcome = back.theta == cs.theta ? Outcome::Value : Outcome::Fail;
    if (record.outcome == Outcome::Fail) record.message = "reconstruction differs from theta";
    return;
  }
  if (cmd == "check-linf") {
    const CourantStructure cs = ctx.theta();
    const int n_max = ctx.integer_flag("max-n", 5);
    if (n_max < 0 || n_max > 5) throw PreconditionError("--max-n must lie in 0..5");
    const JacobiReport r = gen_jacobi_check(map_M(cs), n_max, tuples_for(Grading::L));
    Json entries = Json::array();
    Superfunction defect(ctx.dims());
    for (const auto& e : r.entries) {
      Json ej = {{"n", e.n},
                 {"pass", e.pass},
                 {"vacuous", e.vacuous},
                 {"tuples_checked", e.tuples_checked},
                 {"criterion", e.criterion},
                 {"symbolic_pass", e.symbolic_pass ? Json(*e.symbolic_pass) : Json(nullptr)}};
      if (!e.pass) {
        ej["failing_tuple"] = tuple_json(e.failing_tuple);
        ej["defect"] = render(e.defect);
        ej["symbolic_defect"] = render(e.symbolic_defect);
        if (defect.is_zero()) defect = e.symbolic_pass ? e.symbolic_defect : e.defect;
      }
      entries.push_back(std::move(ej));
    }
    record.details["entries"] = entries;
    // Over all five identities the Jacobi check decides integrability.
    const bool courant = integrability(cs).is_courant;
    const bool agree = n_max < 5 || courant == r.pass;
    record.details["agrees_with_integrability"] = agree;
    set_defect(record, defect);
    record.outcome = r.pass && agree ? Outcome::Pass : Outcome::Fail;
    if (!agree) {
      record.message = "Jacobi check disagrees with integrability";
    } else if (r.first_failure) {
      record.message = "generalized Jacobi identity fails at n = " + std::to_string(*r.first_failure);
    }
    return;
  }
  if (cmd == "deform") {
    const CourantStructure cs = ctx.theta();
    const SkewEndo j = ctx.endo();
    record.outcome = Outcome::Value;
    record.value = render(deform(cs, j).theta);
    return;
  }
  if (cmd == "torsion") {
    const CourantStructure cs = ctx.theta();
    const SkewEndo j = ctx.endo();
    const Rational lambda = lambda_or_square(ctx, j, options);
    const Superfunction t = torsion(cs, j, lambda, options.tuples.x_degree);
    record.value = render(t);
    set_defect(record, t);
    record.outcome = t.is_zero() ? Outcome::Pass : Outcome::Fail;
    if (!t.is_zero()) record.message = "torsion does not vanish";
    return;
  }
  if (cmd == "twist") {
    const CourantStructure cs = ctx.theta();
    if (ctx.has_flag("pi") && ctx.has_flag("omega")) {
      throw ctx.parse_error("twist takes one of --pi and --omega");
    }
    std::optional<Superfunction> s;
    if (ctx.has_flag("pi")) {
      s = ctx.lookup("pi", "pi");
      require_bidegree(*s, {2, 0}, "pi");
    } else if (ctx.has_flag("omega")) {
      s = ctx.lookup("omega", "omega");
      require_bidegree(*s, {0, 2}, "omega");
    } else if (ctx.has_binding("pi")) {
      s = ctx.lookup("pi", "pi");
      require_bidegree(*s, {2, 0}, "pi");
    } else if (ctx.has_binding("omega")) {
      s = ctx.lookup("omega", "omega");
      require_bidegree(*s, {0, 2}, "omega");
    } else {
      throw ctx.parse_error("twist needs --pi or --omega");
    }
    const CourantStructure twisted = twist(cs, *s, options.max_order);
    const IntegrabilityReport before = integrability(cs);
    const IntegrabilityReport after = integrability(twisted);
    record.value = render(twisted.theta);
    set_defect(record, after.full);
    record.details["courant_before"] = before.is_courant;
    record.details["courant_after"] = after.is_courant;
    record.outcome = before.is_courant == after.is_courant ? Outcome::Pass : Outcome::Fail;
    if (record.outcome == Outcome::Fail) record.message = "twisting changed integrability";
    return;
  }
  if (cmd == "twist-linf") {
    const CourantStructure cs = ctx.theta();
    const Superfunction pi = ctx.require("pi");
    require_bidegree(pi, {2, 0}, "pi");
    const VectorForm twisted = twist_linf(map_M(cs), pi);
    const CourantStructure expected = twist(cs, pi, options.max_order);
    const auto diff = compare_forms(twisted, map_M(expected).pointwise(),
                                    tuples_for(Grading::L), 5);
    record.value = render(expected.theta);
    if (diff) {
      record.outcome = Outcome::Fail;
      set_defect(record, diff->defect);
      record.details["failing_tuple"] = tuple_json(diff->tuple);
      record.message = "twisted brackets differ from M(e^pi Theta)";
    } else {
      record.outcome = Outcome::Pass;
      set_defect(record, Superfunction(ctx.dims()));
    }
    return;
  }
  if (cmd == "check-mc") {
    const CourantStructure cs = ctx.theta();
    const Superfunction pi = ctx.require("pi");
    require_bidegree(pi, {2, 0}, "pi");
    const Superfunction d = maurer_cartan_check(map_M(cs), pi);
    set_defect(record, d);
    record.outcome = d.is_zero() ? Outcome::Pass : Outcome::Fail;
    if (!d.is_zero()) record.message = "pi is not a Maurer-Cartan element";
    return;
  }
  if (cmd == "check-nijenhuis") {
    const CourantStructure cs = ctx.theta();
    const SkewEndo j = ctx.endo();
    const Rational lambda = lambda_or_square(ctx, j, options);
    const NijenhuisMorphismReport r = nijenhuis_morphism_check(cs, j, lambda, options);
    set_defect(record, r.torsion);
    record.details["is_nijenhuis"] = r.is_nijenhuis;
    record.details["form_check"] = r.form.pass;
    record.details["agree"] = r.agree;
    if (!r.form.pass) record.details["form_failure"] = r.form.failed;
    record.outcome = r.is_nijenhuis && r.agree ? Outcome::Pass : Outcome::Fail;
    if (!r.agree) {
      record.message = "torsion and Nijenhuis form check disagree";
    } else if (!r.is_nijenhuis) {
      record.message = "torsion does not vanish";
    }
    return;
  }
  if (cmd == "check-structure") {
    const auto kind_name = ctx.flag("kind");
    if (!kind_name) throw ctx.parse_error("check-structure needs --kind");
    const auto kind = parse_structure(*kind_name);
    if (!kind) throw ctx.parse_error("unknown structure kind '" + *kind_name + "'");
    ctx.record("kind", *kind_name);
    StructureData data;
    std::optional<CourantStructure> cs;
    if (auto t = ctx.lookup("theta", "theta")) cs = decompose(*t);
    if (*kind == StructureKind::MaurerCartan && cs) data.theta = cs->theta;
    data.mu = ctx.lookup("mu", "mu");
    if (!data.mu && cs) data.mu = cs->mu;
    data.phi = ctx.lookup("phi", "phi");
    if (!data.phi && cs) data.phi = cs->phi;
    data.pi = ctx.lookup("pi", "pi");
    data.nn = ctx.lookup("N", "N");
    data.omega = ctx.lookup("omega", "omega");
    const auto lambda = ctx.lambda();
    const StructureReport r = check_structure(*kind, data, lambda, options);
    record.details["preconditions"] = precondition_json(r.preconditions);
    record.details["cross_checks"] = precondition_json(r.cross_checks);
    record.details["lambda"] = r.lambda ? Json(r.lambda->get_str()) : Json(nullptr);
    set_defect(record, r.defect);
    if (!r.preconditions_ok) {
      record.outcome = Outcome::PreconditionFailed;
      std::string failed;
      for (const auto& p : r.preconditions) {
        if (!p.ok) failed += (failed.empty() ? "" : "; ") + p.name;
      }
      record.message = "precondition failed: " + failed;
      return;
    }
    record.outcome = r.holds && r.consistent ? Outcome::Pass : Outcome::Fail;
    if (!r.consistent) {
      record.message = "cross-check failed";
    } else if (!r.holds) {
      record.message = std::string(structure_name(*kind)) + " condition fails";
    }
    return;
  }
  if (cmd == "verify-face") {
    const auto face_name_flag = ctx.flag("face");
    if (!face_name_flag) throw ctx.parse_error("verify-face needs --face");
    const auto face = parse_face(*face_name_flag);
    if (!face) throw ctx.parse_error("unknown face '" + *face_name_flag + "'");
    ctx.record("face", *face_name_flag);
    run_face(ctx, record, *face, options);
    return;
  }
  if (cmd == "verify-cube") {
    run_face(ctx, record, FaceId::Cube, options);
    return;
  }
  throw ctx.parse_error("unknown command '" + cmd + "'");
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, info] : command_table()) out.push_back(name);
    return out;
  }();
  return names;
}

CheckOptions check_options(const RunOptions& options) {
  CheckOptions out;
  out.tuples.x_degree = options.tuples_degree;
  out.tuples.seed = options.seed;
  out.tuples.max_generator_tuples = options.max_tuples;
  out.max_order = options.max_order;
  return out;
}

CheckRecord run_check(const ProblemSpec& spec, const CheckRequest& request,
                      const RunOptions& options) {
  CheckRecord record;
  record.command = request.text;
  const auto start = std::chrono::steady_clock::now();
  try {
    Context ctx(spec, request, record);
    run_command(ctx, record, check_options(options));
  } catch (const ParseError& e) {
    record.outcome = Outcome::ParseError;
    record.message = e.what();
  } catch (const PreconditionError& e) {
    record.outcome = Outcome::PreconditionFailed;
    record.message = e.what();
  } catch (const DegreeError& e) {
    record.outcome = Outcome::PreconditionFailed;
    record.message = e.what();
  } catch (const DimensionMismatch& e) {
    record.outcome = Outcome::PreconditionFailed;
    record.message = e.what();
  } catch (const std::exception& e) {
    record.outcome = Outcome::Fail;
    record.message = std::string("error: ") + e.what();
  }
  if (options.timing) {
    const auto end = std::chrono::steady_clock::now();
    record.timing_ms = std::chrono::duration<double, std::milli>(end - start).count();
  }
  return record;
}

Report run_problem(const ProblemSpec& spec, const RunOptions& options,
                   const std::optional<std::vector<CheckRequest>>& requests) {
  Report report;
  report.settings = {options.seed, options.tuples_degree, options.max_order, options.max_tuples};
  report.dims = spec.dims;
  const auto& list = requests ? *requests : spec.checks;
  for (std::size_t i = 0; i < list.size(); ++i) {
    CheckRecord record = run_check(spec, list[i], options);
    record.id = "check-" + std::to_string(i + 1);
    report.checks.push_back(std::move(record));
  }
  return report;
}

}  // namespace splitcourant

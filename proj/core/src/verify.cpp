#include "hagge/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "hagge/closed_form.hpp"
#include "hagge/construction.hpp"
#include "hagge/scene_io.hpp"
#include "hagge/similarity.hpp"
#include "json_codec.hpp"

namespace hagge {

namespace {

using json = nlohmann::ordered_json;

constexpr double kDoubleResidualLimit = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// mt19937_64 output is fixed by the standard; the distributions below are
/// hand-rolled so scenes do not depend on the standard library vendor.
class SceneRng {
 public:
  explicit SceneRng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  Rational rational(const ScenePolicy& policy) {
    return Rational(integer(-policy.max_abs_numerator, policy.max_abs_numerator),
                    integer(1, policy.max_denominator));
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

 private:
  std::mt19937_64 engine_;
};

template <Scalar T>
std::string describe(const Point<T>& p) {
  return "(" + ScalarTraits<T>::to_string(p.x) + ", " + ScalarTraits<T>::to_string(p.y) + ")";
}

template <Scalar T>
std::string describe(const Circle<T>& c) {
  return "{g=" + ScalarTraits<T>::to_string(c.g) + ", f=" + ScalarTraits<T>::to_string(c.f) +
         ", t=" + ScalarTraits<T>::to_string(c.t) + "}";
}

/// Collects check outcomes for one scene.
class Recorder {
 public:
  explicit Recorder(Witness witness) : witness_(std::move(witness)) {}

  /// `body` returns an empty string on success or a mismatch description.
  void exact(const std::string& name, const std::function<std::string()>& body) {
    std::string mismatch;
    try {
      mismatch = body();
    } catch (const GeometryError& e) {
      mismatch = std::string(code_name(e.code())) + ": " + e.what();
    }
    CheckRecord rec;
    rec.name = name;
    rec.pass = mismatch.empty();
    rec.total = 1;
    rec.passed = rec.pass ? 1 : 0;
    if (!rec.pass) {
      rec.residual = mismatch;
      rec.witness = witness_;
    }
    records_.push_back(std::move(rec));
  }

  /// `body` returns a scaled residual that must stay below the limit.
  void residual(const std::string& name, const std::function<double()>& body) {
    CheckRecord rec;
    rec.name = name;
    rec.total = 1;
    double value = 0.0;
    try {
      value = body();
      rec.pass = std::isfinite(value) && value < kDoubleResidualLimit;
      rec.residual = format_double(value);
      rec.residual_value = value;
    } catch (const GeometryError& e) {
      rec.pass = false;
      rec.residual = std::string(code_name(e.code())) + ": " + e.what();
    }
    rec.passed = rec.pass ? 1 : 0;
    if (!rec.pass) rec.witness = witness_;
    records_.push_back(std::move(rec));
  }

  std::vector<CheckRecord> take() { return std::move(records_); }

 private:
  Witness witness_;
  std::vector<CheckRecord> records_;
};

std::string expect_point(const char* what, const Point<Rational>& got, const Point<Rational>& want) {
  if (got == want) return {};
  return std::string(what) + ": got " + describe(got) + ", expected " + describe(want);
}

std::string expect_circle(const char* what, const Circle<Rational>& got, const Circle<Rational>& want) {
  if (got == want) return {};
  return std::string(what) + ": got " + describe(got) + ", expected " + describe(want);
}

constexpr const char* kVertexNames[] = {"A", "B", "C"};

void exact_checks(Recorder& rec, const Scene<Rational>& scene, const VerifyOptions& options) {
  using R = Rational;
  using P = Point<R>;
  const auto cf = construct(scene, ConstructionPath::closed_form);
  const auto geo = construct(scene, ConstructionPath::geometric);
  const auto params = scene.params()->as_array();
  const R k = scene.k();
  const P& d = scene.d();
  const P o = scene.circumcenter();

  rec.exact("closed_form_matches_geometric_path", [&]() -> std::string {
    for (std::size_t i = 0; i < 3; ++i) {
      std::string m;
      if (!(m = expect_point(kVertexNames[i], cf.vertices[i], geo.vertices[i])).empty()) return m;
      if (!(m = expect_point("chord end", cf.chord_ends[i], geo.chord_ends[i])).empty()) return m;
      if (!(m = expect_point("special point", cf.special_points[i], geo.special_points[i])).empty()) return m;
      if (!(m = expect_point("diagonal midpoint", cf.diagonal_midpoints[i], geo.diagonal_midpoints[i])).empty())
        return m;
    }
    return {};
  });

  rec.exact("chord_line_matches_line_through", [&]() -> std::string {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!equivalent(chord_line(params[i], d), line_through(cf.vertices[i], d))) {
        return std::string("chord line through ") + kVertexNames[i] + " is not proportional";
      }
    }
    return {};
  });

  rec.exact("chord_ends_on_circumcircle", [&]() -> std::string {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!on_circle(scene.circumcircle(), cf.chord_ends[i])) return "chord end off the circumcircle";
      if (!collinear(cf.vertices[i], d, cf.chord_ends[i])) return "chord end not on line through D";
    }
    return {};
  });

  if (scene.generator_at_circumcenter()) {
    rec.exact("degenerate_collapse_to_p", [&]() -> std::string {
      if (!cf.degenerate || !geo.degenerate) return "degenerate flag not set";
      if (cf.special_circle || geo.special_circle) return "circle emitted for a degenerate scene";
      for (std::size_t i = 0; i < 3; ++i) {
        std::string m = expect_point("special point", cf.special_points[i], scene.p());
        if (!m.empty()) return m;
        if (!(m = expect_point("chord end", cf.chord_ends[i], -cf.vertices[i])).empty()) return m;
      }
      return {};
    });
    return;
  }

  const Circle<R> special = options.printed_y_coefficient ? printed_special_circle(d, k)
                                                           : special_circle(d, k);
  rec.exact("special_circle_oracle", [&] {
    const auto& u = cf.special_points;
    return expect_circle("circle through U, V, W", circle_through_3(u[0], u[1], u[2]), special);
  });

  rec.exact("p_on_special_circle", [&]() -> std::string {
    return on_circle(special, scene.p()) ? "" : "P does not satisfy the special circle";
  });

  rec.exact("special_center_is_p_plus_d_minus_o", [&] {
    return expect_point("special circle centre", special.center(), scene.p() + d - o);
  });

  rec.exact("special_radius_sq_is_od_sq", [&]() -> std::string {
    const R want = dot(P(d - o), P(d - o));
    if (special.radius_sq() == want) return {};
    return "r^2 = " + special.radius_sq().str() + ", expected " + want.str();
  });

  rec.exact("midpoint_circle_oracle", [&] {
    const auto& u = cf.diagonal_midpoints;
    return expect_circle("circle through U', V', W'", circle_through_3(u[0], u[1], u[2]),
                         midpoint_circle(d));
  });

  rec.exact("midpoint_circle_has_diameter_od", [&]() -> std::string {
    const Circle<R> mc = midpoint_circle(d);
    if (!on_circle(mc, o)) return "O is not on the midpoint circle";
    if (!on_circle(mc, d)) return "D is not on the midpoint circle";
    if (std::string m = expect_point("midpoint circle centre", mc.center(), midpoint(o, d)); !m.empty()) return m;
    if (R(4) * mc.radius_sq() != dot(P(d - o), P(d - o))) return "radius is not |OD| / 2";
    return {};
  });

  rec.exact("geometric_circles_match_closed_form", [&]() -> std::string {
    if (!geo.special_circle || !geo.midpoint_circle) return "geometric path produced no circle";
    if (std::string m = expect_circle("special circle", *geo.special_circle, *cf.special_circle); !m.empty())
      return m;
    return expect_circle("midpoint circle", *geo.midpoint_circle, *cf.midpoint_circle);
  });

  rec.exact("q_uprime_u_collinear_ratio_2", [&]() -> std::string {
    for (std::size_t i = 0; i < 3; ++i) {
      const P& u = cf.special_points[i];
      const P& um = cf.diagonal_midpoints[i];
      if (!collinear(cf.q, um, u)) return "Q, U', U not collinear";
      if (std::string m = expect_point("Q->U", u - cf.q, R(2) * (um - cf.q)); !m.empty()) return m;
    }
    return {};
  });

  rec.exact("homothety_factor_2_gives_special_circle", [&] {
    return expect_circle("midpoint circle scaled by 2 about Q", homothety_circle(cf, R(2)),
                         *cf.special_circle);
  });

  rec.exact("uprime_independent_of_k", [&]() -> std::string {
    const Scene<R> shifted = scene.with_target({-(k + R(1)), R(0)});
    const auto other = construct(shifted, ConstructionPath::geometric);
    for (std::size_t i = 0; i < 3; ++i) {
      if (std::string m = expect_point("U' after moving P", other.diagonal_midpoints[i], geo.diagonal_midpoints[i]);
          !m.empty())
        return m;
    }
    return {};
  });

  rec.exact("origin_circle_center_d", [&]() -> std::string {
    const auto at_o = construct(scene.with_target(o), ConstructionPath::geometric);
    if (!at_o.special_circle) return "no circle through U'', V'', W''";
    if (!on_circle(*at_o.special_circle, o)) return "O is not on circle U''V''W''";
    return expect_point("centre of U''V''W''", at_o.special_circle->center(), d);
  });

  rec.exact("classic_hagge_contains_orthocenter", [&]() -> std::string {
    const auto hagge = classic_hagge(scene.vertices(), d);
    if (!on_circle(hagge.circle, hagge.orthocenter)) {
      return "H = " + describe(hagge.orthocenter) + " is not on " + describe(hagge.circle);
    }
    return {};
  });
}

double point_residual(const Point<double>& a, const Point<double>& b) {
  return std::max(std::abs(a.x - b.x), std::abs(a.y - b.y));
}

double circle_residual(const Circle<double>& a, const Circle<double>& b) {
  const double dr = std::abs(std::sqrt(std::max(0.0, a.radius_sq())) - std::sqrt(std::max(0.0, b.radius_sq())));
  return std::max(point_residual(a.center(), b.center()), dr);
}

void double_checks(Recorder& rec, const Scene<double>& scene) {
  const double scale = std::max(1.0, scene.scale());
  const auto geo = construct(scene, ConstructionPath::geometric);
  const auto canon = construct_in_canonical_frame(scene);

  rec.residual("frame_independence", [&] {
    double worst = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      worst = std::max({worst, point_residual(geo.chord_ends[i], canon.chord_ends[i]),
                        point_residual(geo.special_points[i], canon.special_points[i]),
                        point_residual(geo.diagonal_midpoints[i], canon.diagonal_midpoints[i])});
    }
    for (auto [a, b] : {std::pair{geo.q, canon.q}, std::pair{geo.k, canon.k}}) {
      worst = std::max(worst, point_residual(a, b));
    }
    if (!geo.special_circle || !canon.special_circle || !geo.midpoint_circle || !canon.midpoint_circle) {
      throw GeometryError(ErrorCode::DegenerateInput, "missing circle");
    }
    worst = std::max({worst, circle_residual(*geo.special_circle, *canon.special_circle),
                      circle_residual(*geo.midpoint_circle, *canon.midpoint_circle)});
    return worst / scale;
  });

  // Centre K = P + D - O, radius |OD|.
  const Point<double> o = scene.circumcenter();
  const Point<double> od = scene.d() - o;
  const Circle<double> predicted = circle_from_center(scene.center_k(), dot(od, od));
  const Circle<double> predicted_mid = circle_from_center(midpoint(o, scene.d()), dot(od, od) / 4.0);

  rec.residual("predicted_circle_membership", [&] {
    double worst = 0.0;
    for (const auto& x : {geo.special_points[0], geo.special_points[1], geo.special_points[2], scene.p()}) {
      worst = std::max(worst, std::abs(predicted.evaluate(x)));
    }
    return worst / (scale * scale);
  });

  rec.residual("predicted_midpoint_circle_membership", [&] {
    double worst = 0.0;
    for (const auto& x : {geo.diagonal_midpoints[0], geo.diagonal_midpoints[1], geo.diagonal_midpoints[2], o,
                          scene.d()}) {
      worst = std::max(worst, std::abs(predicted_mid.evaluate(x)));
    }
    return worst / (scale * scale);
  });
}

Report single_report(std::string kind, const std::string& scene_text, std::vector<CheckRecord> records) {
  Report report;
  report.trials = 1;
  report.kind = std::move(kind);
  report.scene_digest = codec::digest(scene_text);
  report.checks = std::move(records);
  return report;
}

/// Merges per-trial reports in trial order.
Report aggregate(std::uint64_t seed, std::string kind, std::vector<Report> per_trial) {
  Report out;
  out.seed = seed;
  out.trials = per_trial.size();
  out.kind = std::move(kind);
  std::map<std::string, std::size_t> index;
  std::string digests;
  for (std::uint64_t t = 0; t < per_trial.size(); ++t) {
    Report& r = per_trial[t];
    digests += r.scene_digest;
    out.elapsed += r.elapsed;
    for (CheckRecord& rec : r.checks) {
      auto [it, inserted] = index.emplace(rec.name, out.checks.size());
      if (inserted) {
        CheckRecord fresh;
        fresh.name = rec.name;
        out.checks.push_back(std::move(fresh));
      }
      CheckRecord& agg = out.checks[it->second];
      agg.total += rec.total;
      agg.passed += rec.passed;
      if (rec.residual_value) {
        if (!agg.residual_value || *rec.residual_value > *agg.residual_value) {
          agg.residual_value = rec.residual_value;
          if (agg.pass) agg.residual = rec.residual;
        }
      }
      if (!rec.pass && agg.pass) {
        agg.pass = false;
        agg.residual = rec.residual;
        agg.witness = rec.witness;
        if (agg.witness) {
          agg.witness->trial = t;
          agg.witness->trial_seed = trial_seed(seed, t);
        }
      }
    }
  }
  out.scene_digest = codec::digest(digests);
  return out;
}

template <class Fn>
std::vector<Report> run_trials(std::uint64_t trials, unsigned jobs, Fn&& one) {
  std::vector<Report> results(trials);
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, trials));
  if (jobs <= 1) {
    for (std::uint64_t t = 0; t < trials; ++t) results[t] = one(t);
    return results;
  }
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      for (std::uint64_t t = w; t < trials; t += jobs) results[t] = one(t);
    });
  }
  for (auto& th : workers) th.join();
  return results;
}

Report failed_generation(const std::string& check, const GeometryError& e) {
  CheckRecord rec;
  rec.name = check;
  rec.pass = false;
  rec.total = 1;
  rec.residual = std::string(code_name(e.code())) + ": " + e.what();
  Report r;
  r.trials = 1;
  r.checks.push_back(std::move(rec));
  return r;
}

bool point_on_any_side(const std::array<Point<Rational>, 3>& v, const Point<Rational>& p) {
  return collinear(p, v[1], v[2]) || collinear(p, v[2], v[0]) || collinear(p, v[0], v[1]);
}

double distance_to_line(const Point<double>& p, const Point<double>& a, const Point<double>& b) {
  const Point<double> ab = b - a;
  return std::abs(cross(ab, p - a)) / std::hypot(ab.x, ab.y);
}

}  // namespace

void ScenePolicy::validate() const {
  if (max_abs_numerator <= 0 || max_denominator <= 0 || max_attempts <= 0 ||
      min_param_separation.sign() < 0) {
    throw GeometryError(ErrorCode::PolicyUnsatisfiable, "scene policy bounds must be positive");
  }
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord* Report::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) { return splitmix64(master + index); }

Scene<Rational> random_scene(std::uint64_t seed, const ScenePolicy& policy) {
  policy.validate();
  SceneRng rng(seed);
  for (int attempt = 0; attempt < policy.max_attempts; ++attempt) {
    const TriangleParams<Rational> params{rng.rational(policy), rng.rational(policy), rng.rational(policy)};
    Rational k = rng.rational(policy);
    Point<Rational> d{rng.rational(policy), rng.rational(policy)};
    if (policy.zero_k) k = Rational(0);
    if (policy.force_generator_at_circumcenter) d = {Rational(0), Rational(0)};

    const auto& sep = policy.min_param_separation;
    if (abs(params.a - params.b) < sep || abs(params.b - params.c) < sep || abs(params.a - params.c) < sep ||
        params.a == params.b || params.b == params.c || params.a == params.c) {
      continue;
    }
    const bool at_o = d.x.is_zero() && d.y.is_zero();
    if (at_o && !policy.allow_generator_at_circumcenter && !policy.force_generator_at_circumcenter) continue;
    const auto vertices = params.vertices();
    if (std::any_of(vertices.begin(), vertices.end(), [&](const auto& v) { return v == d; })) continue;
    // D on a sideline sends two chord ends to vertices and merges two of U, V, W.
    if (point_on_any_side(vertices, d)) continue;
    return Scene<Rational>::canonical(params, k, d);
  }
  throw GeometryError(ErrorCode::PolicyUnsatisfiable,
                      "no admissible scene within " + std::to_string(policy.max_attempts) + " attempts");
}

Scene<double> random_double_scene(std::uint64_t seed, const DoubleScenePolicy& policy) {
  SceneRng rng(seed);
  const double box = policy.box;
  for (int attempt = 0; attempt < policy.max_attempts; ++attempt) {
    std::array<Point<double>, 3> v{};
    for (auto& p : v) p = {rng.uniform(-box, box), rng.uniform(-box, box)};
    if (std::abs(cross(v[1] - v[0], v[2] - v[0])) < policy.min_twice_area) continue;

    const Circle<double> circ = circle_through_3(v[0], v[1], v[2]);
    const Point<double> o = circ.center();
    const double radius = std::sqrt(circ.radius_sq());

    auto inside = [&]() {
      const double r = radius * std::sqrt(rng.unit());
      const double theta = 2.0 * std::acos(-1.0) * rng.unit();
      return Point<double>{o.x + r * std::cos(theta), o.y + r * std::sin(theta)};
    };
    const Point<double> p = inside();
    const Point<double> d = inside();

    const double clearance = policy.min_generator_clearance * radius;
    const Point<double> od = d - o;
    if (std::hypot(od.x, od.y) < clearance) continue;
    bool too_close = false;
    for (std::size_t i = 0; i < 3; ++i) {
      const Point<double> dv = d - v[i];
      if (std::hypot(dv.x, dv.y) < clearance) too_close = true;
      if (distance_to_line(d, v[i], v[(i + 1) % 3]) < clearance) too_close = true;
    }
    if (too_close) continue;
    return Scene<double>::from_vertices(v, p, d);
  }
  throw GeometryError(ErrorCode::PolicyUnsatisfiable,
                      "no admissible double scene within " + std::to_string(policy.max_attempts) + " attempts");
}

Report verify_scene(const Scene<Rational>& scene, const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(Witness{scene, std::nullopt, std::nullopt});
  if (scene.frame() != Frame::canonical || !scene.params()) {
    rec.exact("canonical_scene", [] { return std::string("exact verification needs a canonical scene"); });
  } else {
    try {
      exact_checks(rec, scene, options);
    } catch (const GeometryError& e) {
      rec.exact("construction", [&] { return std::string(code_name(e.code())) + ": " + e.what(); });
    }
  }
  Report report = single_report("exact", scene_to_json(scene), rec.take());
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

Report verify_double_scene(const Scene<double>& scene) {
  const auto start = std::chrono::steady_clock::now();
  Recorder rec(Witness{scene, std::nullopt, std::nullopt});
  try {
    double_checks(rec, scene);
  } catch (const GeometryError& e) {
    rec.exact("construction", [&] { return std::string(code_name(e.code())) + ": " + e.what(); });
  }
  Report report = single_report("double", scene_to_json(scene), rec.take());
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

Report verify_batch(std::uint64_t trials, std::uint64_t seed, const ScenePolicy& policy,
                    const VerifyOptions& options, unsigned jobs) {
  policy.validate();
  auto results = run_trials(trials, jobs, [&](std::uint64_t t) {
    try {
      return verify_scene(random_scene(trial_seed(seed, t), policy), options);
    } catch (const GeometryError& e) {
      return failed_generation("scene_generation", e);
    }
  });
  return aggregate(seed, "exact", std::move(results));
}

Report verify_double_batch(std::uint64_t trials, std::uint64_t seed, const DoubleScenePolicy& policy,
                           unsigned jobs) {
  auto results = run_trials(trials, jobs, [&](std::uint64_t t) {
    try {
      return verify_double_scene(random_double_scene(trial_seed(seed, t), policy));
    } catch (const GeometryError& e) {
      return failed_generation("scene_generation", e);
    }
  });
  return aggregate(seed, "double", std::move(results));
}

std::string report_to_json(const Report& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json witness = nullptr;
    if (c.witness) {
      witness = std::visit([](const auto& s) { return codec::scene(s); }, c.witness->scene);
      if (c.witness->trial) witness["trial"] = *c.witness->trial;
      if (c.witness->trial_seed) witness["trial_seed"] = *c.witness->trial_seed;
    }
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"passed", c.passed},
                      {"total", c.total},
                      {"residual", c.residual ? json(*c.residual) : json(nullptr)},
                      {"witness", witness}});
  }
  json doc{{"seed", report.seed},
           {"trials", report.trials},
           {"kind", report.kind},
           {"seed_rule", kSeedRule},
           {"scene_digest", report.scene_digest},
           {"checks", checks},
           {"status", report.status()}};
  return doc.dump(2) + "\n";
}

}  // namespace hagge

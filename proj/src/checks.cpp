#include "monopole/checks.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>

#include "monopole/bundle.hpp"
#include "monopole/errors.hpp"
#include "monopole/exponent.hpp"
#include "monopole/field_jets.hpp"
#include "monopole/geometry.hpp"
#include "monopole/kernel.hpp"
#include "monopole/kgraph.hpp"
#include "monopole/rep.hpp"
#include "monopole/sampling.hpp"
#include "monopole/star.hpp"

namespace monopole {

namespace {

using C = std::complex<double>;
constexpr C kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

/// Independent generator for trial `index` of sub-suite `salt`.
Rng trial_rng(std::uint64_t seed, std::uint64_t salt, std::uint64_t index) {
  return Rng::stream(splitmix64(seed) ^ splitmix64(salt + 0x51ed27a3ULL), index);
}

/// Evaluates f(0..count-1) on all hardware threads; results keep trial order.
template <class R, class F>
std::vector<R> run_trials(int count, F&& f) {
  std::vector<R> out(static_cast<std::size_t>(count));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i; (i = next.fetch_add(1)) < count;) {
      try {
        out[static_cast<std::size_t>(i)] = f(i);
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(std::max(count, 1)));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double deficit(double observed, double bound) { return std::max(0.0, bound - observed); }

struct Report {
  CheckReport r;
  const CheckParams& p;

  void param(const std::string& key, const std::string& value) { r.params.emplace_back(key, value); }
  void param(const std::string& key, double value) { param(key, fmt::format("{}", value)); }
  void param(const std::string& key, int value) { param(key, fmt::format("{}", value)); }
  void residual(const std::string& label, double value) { r.residuals.emplace_back(label, value); }

  int trials(int fallback) {
    const int t = p.trials.value_or(fallback);
    param("trials", t);
    return t;
  }
  double tol(double fallback) {
    r.tolerance = p.tol.value_or(fallback);
    return r.tolerance;
  }
  std::vector<double> ts() {
    std::vector<double> out = p.t ? std::vector<double>{*p.t} : std::vector<double>{0.0, 0.3, 0.5, 1.0};
    std::string s;
    for (double t : out) s += (s.empty() ? "" : ",") + fmt::format("{}", t);
    param("t", s);
    return out;
  }
  Exclusion excl() const { return {p.rmin, Exclusion{}.string_eps}; }
  MonopoleConfig config(int default_n) {
    if (p.eg) {
      param("eg", *p.eg);
      param("hbar", p.hbar);
      return MonopoleConfig::unquantized(*p.eg, p.hbar, excl());
    }
    const int n = p.n.value_or(default_n);
    param("n", n);
    param("hbar", p.hbar);
    return MonopoleConfig::quantized(n, p.hbar, excl());
  }
  std::vector<MonopoleConfig> configs(std::vector<int> default_ns) {
    if (p.eg || p.n) return {config(0)};
    std::string s;
    std::vector<MonopoleConfig> out;
    for (int n : default_ns) {
      s += (s.empty() ? "" : ",") + std::to_string(n);
      out.push_back(MonopoleConfig::quantized(n, p.hbar, excl()));
    }
    param("n", s);
    param("hbar", p.hbar);
    return out;
  }
};

Vec3 random_momentum(Rng& rng) { return {rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1)}; }

Chart chart_for(const Vec3& x) { return x[2] >= 0.0 ? Chart::Plus : Chart::Minus; }

// ---------------------------------------------------------------- geometry

void check_flux_stokes(Report& rep) {
  const auto cfg = rep.config(1);
  const int trials = rep.trials(100);
  const int nodes = rep.p.nodes;
  rep.param("nodes", nodes);
  rep.tol(1e-7);
  for (Chart chart : {Chart::Plus, Chart::Minus}) {
    const auto res = run_trials<double>(trials, [&](int i) {
      Rng rng = trial_rng(rep.p.seed, chart == Chart::Plus ? 1 : 2, static_cast<std::uint64_t>(i));
      const Triangle tri = random_admissible_triangle(rng, chart);
      const double circ = circulation(chart, Polyline::triangle_boundary(tri), cfg, nodes);
      return std::abs(circ - cfg.eg() * solid_angle(tri, cfg.exclusion()));
    });
    rep.residual(fmt::format("max |circulation - flux| ({})", chart_name(chart)), max_of(res));
  }
}

double tetra_flux(const std::array<Vec3, 4>& v, const MonopoleConfig& cfg) {
  return flux_triangle(Triangle::from_vertices(v[1], v[2], v[3]), cfg) -
         flux_triangle(Triangle::from_vertices(v[0], v[2], v[3]), cfg) +
         flux_triangle(Triangle::from_vertices(v[0], v[1], v[3]), cfg) -
         flux_triangle(Triangle::from_vertices(v[0], v[1], v[2]), cfg);
}

void check_gauss_law(Report& rep) {
  const auto cfgs = rep.configs({1, 2, 3});
  const int trials = rep.trials(200);
  rep.tol(1e-9);
  double worst_in = 0.0, worst_out = 0.0;
  for (std::size_t c = 0; c < cfgs.size(); ++c) {
    const auto& cfg = cfgs[c];
    const auto res = run_trials<std::pair<double, double>>(trials, [&](int i) {
      Rng rng = trial_rng(rep.p.seed, 10 + c, static_cast<std::uint64_t>(i));
      const auto in = random_tetrahedron(rng, true);
      const auto out = random_tetrahedron(rng, false);
      return std::pair{std::abs(std::abs(tetra_flux(in, cfg)) - 4 * kPi * std::abs(cfg.eg())),
                       std::abs(tetra_flux(out, cfg))};
    });
    for (const auto& [a, b] : res) {
      worst_in = std::max(worst_in, a);
      worst_out = std::max(worst_out, b);
    }
  }
  rep.residual("max | |closed flux| - 4 pi eg | (enclosing)", worst_in);
  rep.residual("max |closed flux| (not enclosing)", worst_out);
}

std::vector<double> cocycle_trials(Report& rep, const MonopoleConfig& cfg, int trials, bool enclose,
                                   std::uint64_t salt) {
  return run_trials<double>(trials, [&](int i) {
    Rng rng = trial_rng(rep.p.seed, salt, static_cast<std::uint64_t>(i));
    const auto v = random_tetrahedron(rng, enclose);
    return cocycle_residual(v[0], v[1] - v[0], v[2] - v[1], v[3] - v[2], cfg);
  });
}

void check_cocycle(Report& rep) {
  const auto cfg = rep.config(1);
  const int trials = rep.trials(200);
  rep.tol(1e-10);
  rep.residual("max cocycle residual (enclosing)", max_of(cocycle_trials(rep, cfg, trials, true, 20)));
  rep.residual("max cocycle residual (not enclosing)", max_of(cocycle_trials(rep, cfg, trials, false, 21)));
}

void check_quantization_negative(Report& rep) {
  const double eg = rep.p.eg.value_or(0.37);
  rep.param("eg", eg);
  rep.param("hbar", rep.p.hbar);
  const auto cfg = MonopoleConfig::unquantized(eg, rep.p.hbar, rep.excl());
  const int trials = rep.trials(200);
  rep.tol(1e-2);
  const double bound = std::abs(1.0 - std::polar(1.0, -4 * kPi * eg / rep.p.hbar)) - 1e-6;
  const auto res = cocycle_trials(rep, cfg, trials, true, 20);
  rep.residual("deficit of min cocycle residual below |1 - exp(-4 pi i eg/hbar)| - 1e-6",
               deficit(*std::min_element(res.begin(), res.end()), bound));
}

// ------------------------------------------------------------------ bundle

void check_theorem1(Report& rep) {
  const int trials = rep.trials(50);
  const int steps = rep.p.steps;
  if (steps < 8) throw std::invalid_argument("theorem1: --steps must be at least 8");
  rep.param("hbar", rep.p.hbar);
  rep.param("steps", steps);
  rep.tol(1e-6);
  const Exclusion excl = rep.excl();
  struct Out {
    double error = 0.0;
    double order = 0.0;
  };
  const auto res = run_trials<Out>(trials, [&](int i) {
    Rng rng = trial_rng(rep.p.seed, 30, static_cast<std::uint64_t>(i));
    const Triangle tri = random_triangle(rng, 0.3, 0.5, 1.5);
    const Quaternion closed = quaternion_multiplier(tri.base, tri.a, tri.b, rep.p.hbar, excl);
    const Polyline loop = Polyline::triangle_boundary(tri);
    // least-squares slope of log error against log M on M = steps/8 .. steps
    double sx = 0, sy = 0, sxx = 0, sxy = 0, err = 0;
    for (int k = 0; k < 4; ++k) {
      const int m = steps >> (3 - k);
      err = distance(path_ordered_exp(loop, m, excl), closed);
      const double lx = std::log(static_cast<double>(m));
      const double ly = std::log(std::max(err, 1e-300));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    return Out{err, -(4 * sxy - sx * sy) / (4 * sxx - sx * sx)};
  });
  std::vector<double> errors, orders;
  for (const auto& o : res) {
    errors.push_back(o.error);
    orders.push_back(o.order);
  }
  rep.residual(fmt::format("max |holonomy - closed form| at M = {}", steps), max_of(errors));
  rep.residual("deficit of median convergence order below 1.9", deficit(median_of(orders), 1.9));
}

// -------------------------------------------------------------- jets, star

ExponentParams exponent_params(const Report& rep, const Vec3& x0, int jet_order) {
  return {x0, rep.p.order, jet_order, rep.p.constant_beta};
}

void star_params(Report& rep) {
  rep.param("order", rep.p.order);
  if (rep.p.constant_beta) rep.param("constant_beta", "true");
}

/// Largest difference of the exponent coefficients at the base point, over
/// the union of monomials.
double exponent_value_difference(const WPoly& a, const WPoly& b) {
  double m = 0.0;
  for (const auto& t : a.terms()) {
    const Jet* other = b.find(t.grade, t.monomial);
    m = std::max(m, std::abs(t.coeff.value() - (other ? other->value() : C{})));
  }
  for (const auto& t : b.terms())
    if (!a.find(t.grade, t.monomial)) m = std::max(m, std::abs(t.coeff.value()));
  return m;
}

void check_zassenhaus_vs_flux(Report& rep) {
  const auto cfg = rep.config(1);
  star_params(rep);
  const auto ts = rep.ts();
  const int trials = rep.trials(20);
  rep.tol(1e-12);
  const auto res = run_trials<double>(trials, [&](int i) {
    Rng rng = trial_rng(rep.p.seed, 40, static_cast<std::uint64_t>(i));
    const auto p = exponent_params(rep, random_base_point(rng), 5);
    double worst = 0.0;
    for (double t : ts)
      worst = std::max(worst,
                       exponent_value_difference(exponent_flux(t, p, cfg), exponent_zassenhaus_shifted(t, p, cfg)));
    return worst;
  });
  rep.residual("max coefficient difference at x0, shifted Zassenhaus vs flux exponent", max_of(res));
}

void check_star_assoc(Report& rep) {
  const auto cfg = rep.config(1);
  star_params(rep);
  const auto ts = rep.ts();
  const int trials = rep.trials(50);
  constexpr int kBasePoints = 10;
  rep.param("base_points", kBasePoints);
  rep.tol(1e-9);
  const int K = rep.p.order;
  const int N = 2 * K;
  std::vector<double> worst(static_cast<std::size_t>(K + 1), 0.0);
  for (int b = 0; b < kBasePoints; ++b) {
    Rng rng = trial_rng(rep.p.seed, 50, static_cast<std::uint64_t>(b));
    const Vec3 x0 = random_base_point(rng);
    const Vec3 p0 = random_momentum(rng);
    const auto base = phase_base(x0, p0);
    for (std::size_t ti = 0; ti < ts.size(); ++ti) {
      const StarExpansion e = star_expansion(ts[ti], exponent_params(rep, x0, std::max(N - 1, 1)), cfg);
      const auto res = run_trials<std::vector<double>>(trials, [&](int k) {
        Rng r = trial_rng(rep.p.seed, 1000 + 16 * static_cast<std::uint64_t>(b) + ti, static_cast<std::uint64_t>(k));
        const HJet f = HJet::classical(random_polynomial_jet(r, 6, N, N, base));
        const HJet g = HJet::classical(random_polynomial_jet(r, 6, N, N, base));
        const HJet h = HJet::classical(random_polynomial_jet(r, 6, N, N, base));
        return associator_residuals(e, f, g, h);
      });
      for (const auto& v : res)
        for (std::size_t k = 0; k < v.size() && k < worst.size(); ++k) worst[k] = std::max(worst[k], v[k]);
    }
  }
  for (std::size_t k = 0; k < worst.size(); ++k) rep.residual(fmt::format("max associator, grade {}", k), worst[k]);
}

void check_graph_vs_direct(Report& rep) {
  const auto cfg = rep.config(1);
  if (rep.p.constant_beta) rep.param("constant_beta", "true");
  const int trials = rep.trials(10);
  rep.tol(1e-10);
  struct Out {
    double diff = 0.0;
    double loops = 0.0;
  };
  const auto res = run_trials<Out>(trials, [&](int i) {
    Rng rng = trial_rng(rep.p.seed, 60, static_cast<std::uint64_t>(i));
    const Vec3 x0 = random_base_point(rng);
    const Vec3 p0 = random_momentum(rng);
    const ExponentParams p{x0, 3, 5, rep.p.constant_beta};
    const StarExpansion direct = star_expansion(0.5, p, cfg);
    const StarExpansion graphs = kontsevich_expansion(x0, cfg, 5, rep.p.constant_beta);
    Out o{StarExpansion::max_difference(direct, graphs), 0.0};
    const auto P = poisson_matrix_jet(x0, p0, cfg, 5, rep.p.constant_beta);
    const auto base = phase_base(x0, p0);
    const Jet f = random_polynomial_jet(rng, 6, 5, 5, base);
    const Jet g = random_polynomial_jet(rng, 6, 5, 5, base);
    for (const auto& graph : vanishing_graphs()) {
      for (const auto& term : graph_terms(graph, P)) o.loops = std::max(o.loops, term.coeff.max_abs());
      o.loops = std::max(o.loops, graph_apply(graph, P, f, g).max_abs());
    }
    return o;
  });
  double diff = 0.0, loops = 0.0;
  for (const auto& o : res) {
    diff = std::max(diff, o.diff);
    loops = std::max(loops, o.loops);
  }
  rep.residual("max termwise difference, graph sum vs t = 1/2 expansion", diff);
  rep.residual("max |loop-bearing graph operator|", loops);
}

void check_commutator_bracket(Report& rep) {
  const auto cfg = rep.config(1);
  star_params(rep);
  const auto ts = rep.ts();
  const int trials = rep.trials(50);
  rep.tol(1e-10);
  const int K = rep.p.order;
  const int N = K + 2;
  const double hbar = cfg.hbar();
  struct Out {
    double bracket = 0.0;
    double pp = 0.0;
    double xp = 0.0;
  };
  const auto res = run_trials<Out>(trials, [&](int i) {
    Rng rng = trial_rng(rep.p.seed, 70, static_cast<std::uint64_t>(i));
    const Vec3 x0 = random_base_point(rng);
    const Vec3 p0 = random_momentum(rng);
    const auto base = phase_base(x0, p0);
    const Jet f = random_polynomial_jet(rng, 6, N, N, base);
    const Jet g = random_polynomial_jet(rng, 6, N, N, base);
    // {f, g} = d_x f . d_p g - d_p f . d_x g + beta_ij d_{p_i} f d_{p_j} g
    const auto beta = beta_jet(x0, cfg, N);
    Jet bracket(6, N - 1, base);
    for (int a = 0; a < 3; ++a) {
      bracket.add_product(f.derive(a), g.derive(3 + a));
      bracket.add_product(f.derive(3 + a), g.derive(a), -1.0);
      for (int b = 0; b < 3; ++b) {
        const Jet bij = beta[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)].embedded(6, base);
        bracket.add_product(bij * f.derive(3 + a), g.derive(3 + b));
      }
    }
    const Matrix3 b0 = beta_matrix(x0, cfg);
    Out o;
    for (double t : ts) {
      const StarExpansion e = star_expansion(t, exponent_params(rep, x0, N), cfg);
      const HJet fg = star_apply(e, HJet::classical(f), HJet::classical(g));
      const HJet gf = star_apply(e, HJet::classical(g), HJet::classical(f));
      const Jet anti = fg.grades[1] - gf.grades[1];
      o.bracket = std::max(o.bracket, (anti - kI * bracket.truncated(anti.order())).max_abs());
      auto commutator = [&](int va, int vb) {
        const HJet A = HJet::classical(Jet::variable(6, N, base, va));
        const HJet B = HJet::classical(Jet::variable(6, N, base, vb));
        const HJet ab = star_apply(e, A, B);
        const HJet ba = star_apply(e, B, A);
        C sum = 0.0;
        for (std::size_t k = 0; k < ab.grades.size(); ++k)
          sum += std::pow(hbar, static_cast<double>(k)) * (ab.grades[k].value() - ba.grades[k].value());
        return sum;
      };
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          const double bij = b0[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
          o.pp = std::max(o.pp, std::abs(commutator(3 + a, 3 + b) - kI * hbar * bij));
          o.xp = std::max(o.xp, std::abs(commutator(a, 3 + b) - kI * hbar * (a == b ? 1.0 : 0.0)));
        }
    }
    return o;
  });
  Out w;
  for (const auto& o : res) {
    w.bracket = std::max(w.bracket, o.bracket);
    w.pp = std::max(w.pp, o.pp);
    w.xp = std::max(w.xp, o.xp);
  }
  rep.residual("max |(f*g - g*f)_1 - i{f, g}|", w.bracket);
  rep.residual("max |[p_i, p_j]_* - i hbar beta_ij|", w.pp);
  rep.residual("max |[x^i, p_j]_* - i hbar delta_ij|", w.xp);
}

// ------------------------------------------------------------------ kernel

void check_kernel_consistency(Report& rep) {
  const auto cfg = rep.config(1);
  const int trials = rep.trials(100);
  rep.param("alpha", "0.3I,0.5I,diag(0.2,0.4,0.7)");
  rep.tol(1e-10);
  const std::array<Matrix3, 3> alphas{scalar_matrix(0.3), scalar_matrix(0.5), diagonal_matrix({0.2, 0.4, 0.7})};
  struct Out {
    double routes = 0.0;
    double midpoints = 0.0;
  };
  const auto res = run_trials<Out>(trials, [&](int i) {
    Rng rng = trial_rng(rep.p.seed, 80, static_cast<std::uint64_t>(i));
    for (int attempt = 0; attempt < 1000; ++attempt) {
      const Vec3 x = rng.in_shell(0.5, 2.0), xp = rng.in_shell(0.5, 2.0), xpp = rng.in_shell(0.5, 2.0);
      bool ok = true;
      for (const auto& alpha : alphas) {
        const auto v = bar_triangle(alpha, x, xp, xpp);
        if (origin_distance(Triangle::from_vertices(v[0], v[1], v[2])) < 0.1) ok = false;
      }
      if (!ok) continue;
      Out o;
      for (const auto& alpha : alphas)
        o.routes = std::max(o.routes, std::abs(kernel_magnetic(alpha, x, xp, xpp, cfg) -
                                               kernel_magnetic_bar(alpha, x, xp, xpp, cfg)));
      const auto v = bar_triangle(scalar_matrix(0.5), x, xp, xpp);
      o.midpoints = std::max({norm(0.5 * (v[0] + v[2]) - x), norm(0.5 * (v[0] + v[1]) - xp),
                              norm(0.5 * (v[1] + v[2]) - xpp), norm(v[0] - (x + xp - xpp)),
                              norm(v[1] - (xp + xpp - x)), norm(v[2] - (x + xpp - xp))});
      return o;
    }
    throw DomainError("kernel-consistency: no admissible configuration found");
  });
  Out w;
  for (const auto& o : res) {
    w.routes = std::max(w.routes, o.routes);
    w.midpoints = std::max(w.midpoints, o.midpoints);
  }
  rep.residual("max |explicit m-form - bar-triangle flux|", w.routes);
  rep.residual("excess of max midpoint/vertex error over 1e-12 (alpha = I/2)", std::max(0.0, w.midpoints - 1e-12));
}

// --------------------------------------------------------------------- rep

struct RepSample {
  Vec3 x;
  Vec3 a;
  Vec3 b;
  Chart chart;
};

RepSample rep_sample(Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    RepSample s{rng.in_shell(0.8, 1.5), rng.in_shell(0.05, 0.3), rng.in_shell(0.05, 0.3), Chart::Plus};
    s.chart = chart_for(s.x);
    const Triangle tri{s.x, s.a, s.b};
    if (origin_distance(tri) < 0.3 || string_pierces(s.chart, tri)) continue;
    if (string_distance_segment(s.chart, s.x, s.a) < 0.1 || string_distance_segment(s.chart, s.x + s.a, s.b) < 0.1 ||
        string_distance_segment(s.chart, s.x, s.a + s.b) < 0.1)
      continue;
    return s;
  }
  throw DomainError("rep: no admissible configuration found");
}

Vec3 section_center(Rng& rng, const Vec3& x) { return x + 0.3 * rng.unit_vector(); }

void check_rep_projective(Report& rep) {
  const auto cfg = rep.config(1);
  const int trials = rep.trials(50);
  rep.param("nodes", rep.p.nodes);
  rep.param("steps", rep.p.steps);
  rep.tol(1e-7);
  struct Out {
    double complex_res = 0.0;
    double quat_res = 0.0;
    double swapped = 0.0;
  };
  const auto res = run_trials<Out>(trials, [&](int i) {
    Rng rng = trial_rng(rep.p.seed, 90, static_cast<std::uint64_t>(i));
    const RepSample s = rep_sample(rng);
    const auto psi = TestSection::random(rng, section_center(rng, s.x), 1.0, 2, s.chart);
    const auto qpsi = QTestSection::random(rng, section_center(rng, s.x), 1.0, 2);
    const auto q = q_projective_residual(qpsi, s.a, s.b, s.x, cfg.hbar(), rep.p.steps, cfg.exclusion());
    return Out{projective_residual(s.chart, psi, s.a, s.b, s.x, cfg, rep.p.nodes), q.residual, q.swapped};
  });
  Out w;
  for (const auto& o : res) {
    w.complex_res = std::max(w.complex_res, o.complex_res);
    w.quat_res = std::max(w.quat_res, o.quat_res);
    w.swapped = std::max(w.swapped, o.swapped);
  }
  rep.residual("max |V(a)V(b)Psi - m V(a+b)Psi| (complex)", w.complex_res);
  rep.residual("max |V(a)V(b)Psi - M V(a+b)Psi| (quaternionic)", w.quat_res);
  rep.residual("deficit of max swapped-placement residual below 1e-3", deficit(w.swapped, 1e-3));
}

struct RepPoint {
  Vec3 x;
  Chart chart;
};

RepPoint rep_point(Rng& rng) {
  const Vec3 x = rng.in_shell(0.8, 1.5);
  return {x, chart_for(x)};
}

double q_pair_max(const std::function<double(int, int)>& f) {
  double m = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) m = std::max(m, f(i, j));
  return m;
}

void check_rep_commutators(Report& rep) {
  const auto cfg = rep.config(1);
  const int trials = rep.trials(50);
  rep.tol(1e-9);
  const Exclusion excl = cfg.exclusion();
  const auto res = run_trials<std::array<double, 5>>(trials, [&](int i) {
    Rng rng = trial_rng(rep.p.seed, 100, static_cast<std::uint64_t>(i));
    const RepPoint s = rep_point(rng);
    const auto psi = TestSection::random(rng, section_center(rng, s.x), 1.0, 2, s.chart);
    const auto qpsi = QTestSection::random(rng, section_center(rng, s.x), 1.0, 2);
    std::array<double, 5> o{};
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        o[0] = std::max(o[0], std::abs(commutator_PP(s.chart, psi, s.x, a, b, cfg)));
        o[1] = std::max(o[1], std::abs(commutator_QP(s.chart, psi, s.x, a, b, cfg)));
      }
    o[2] = q_pair_max([&](int a, int b) { return q_commutator_residual(1.0, qpsi, s.x, a, b, excl).vs_target; });
    o[3] = q_pair_max([&](int a, int b) { return q_commutator_residual(2.0, qpsi, s.x, a, b, excl).vs_zero; });
    for (int a = 0; a < 3; ++a) o[4] = std::max(o[4], j_commutation_residual(1.0, qpsi, s.x, a, excl));
    return o;
  });
  std::array<double, 5> w{};
  for (const auto& o : res)
    for (std::size_t k = 0; k < 5; ++k) w[k] = std::max(w[k], o[k]);
  rep.residual("max |([P_i, P_j] - i hbar beta_ij) Psi|", w[0]);
  rep.residual("max |([Q^i, P_j] - i hbar delta_ij) Psi|", w[1]);
  rep.residual("max quaternionic curvature residual, g = 1", w[2]);
  rep.residual("max |[nabla_i, nabla_j] Psi|, g = 2", w[3]);
  rep.residual("max |[J, nabla_i] Psi|, g = 1", w[4]);
}

void check_remark2(Report& rep) {
  const int trials = rep.trials(50);
  const std::array<double, 3> generic{0.5, 1.5, 3.0};
  rep.param("g", "0.5,1.5,3");
  rep.tol(1e-9);
  const Exclusion excl = rep.excl();
  const auto res = run_trials<std::array<double, 4>>(trials, [&](int i) {
    Rng rng = trial_rng(rep.p.seed, 110, static_cast<std::uint64_t>(i));
    const RepPoint s = rep_point(rng);
    const auto qpsi = QTestSection::random(rng, section_center(rng, s.x), 1.0, 2);
    std::array<double, 4> o{};
    o[0] = q_pair_max([&](int a, int b) { return q_commutator_residual(1.0, qpsi, s.x, a, b, excl).vs_target; });
    o[1] = q_pair_max([&](int a, int b) { return q_commutator_residual(2.0, qpsi, s.x, a, b, excl).vs_zero; });
    for (double g : generic) {
      const double curv = q_pair_max([&](int a, int b) {
        const auto r = q_commutator_residual(g, qpsi, s.x, a, b, excl);
        return std::min(r.vs_g_scaled, r.vs_target);
      });
      double jc = 0.0;
      for (int a = 0; a < 3; ++a) jc = std::max(jc, j_commutation_residual(g, qpsi, s.x, a, excl));
      o[2] = std::max(o[2], deficit(curv, 1e-3));
      o[3] = std::max(o[3], deficit(jc, 1e-3));
    }
    return o;
  });
  std::array<double, 4> w{};
  for (const auto& o : res)
    for (std::size_t k = 0; k < 4; ++k) w[k] = std::max(w[k], o[k]);
  rep.residual("max quaternionic curvature residual, g = 1", w[0]);
  rep.residual("max |[nabla_i, nabla_j] Psi|, g = 2", w[1]);
  rep.residual("deficit of generic-g curvature residual below 1e-3", w[2]);
  rep.residual("deficit of generic-g [J, nabla] residual below 1e-3", w[3]);
}

using CheckFn = void (*)(Report&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table{
      {"flux-stokes", check_flux_stokes},
      {"gauss-law", check_gauss_law},
      {"cocycle", check_cocycle},
      {"theorem1", check_theorem1},
      {"zassenhaus-vs-flux", check_zassenhaus_vs_flux},
      {"star-assoc", check_star_assoc},
      {"graph-vs-direct", check_graph_vs_direct},
      {"commutator-bracket", check_commutator_bracket},
      {"kernel-consistency", check_kernel_consistency},
      {"rep-projective", check_rep_projective},
      {"rep-commutators", check_rep_commutators},
      {"remark2", check_remark2},
      {"quantization-negative", check_quantization_negative},
  };
  return table;
}

void validate(const CheckParams& p) {
  auto fail = [](const char* what) { throw std::invalid_argument(what); };
  if (p.trials && *p.trials < 1) fail("--trials must be positive");
  if (p.order < 1 || p.order > 3) fail("--order must be 1, 2 or 3");
  if (!(p.hbar > 0.0)) fail("--hbar must be positive");
  if (p.t && !(*p.t >= 0.0 && *p.t <= 1.0)) fail("--t must lie in [0, 1]");
  if (p.tol && !(*p.tol >= 0.0)) fail("--tol must be nonnegative");
  if (p.steps < 1) fail("--steps must be positive");
  if (p.nodes < 1) fail("--nodes must be positive");
  if (!(p.rmin > 0.0)) fail("--rmin must be positive");
  if (p.n && p.eg) fail("--n and --eg are mutually exclusive");
  if (p.eg && !std::isfinite(*p.eg)) fail("--eg must be finite");
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

CheckReport run_check(const std::string& name, const CheckParams& params) {
  const auto& table = registry();
  const auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.first == name; });
  if (it == table.end()) throw std::invalid_argument("unknown check: " + name);
  validate(params);
  const auto start = std::chrono::steady_clock::now();
  Report rep{CheckReport{}, params};
  rep.r.name = name;
  rep.r.seed = params.seed;
  it->second(rep);
  rep.r.pass = std::all_of(rep.r.residuals.begin(), rep.r.residuals.end(),
                           [&](const auto& r) { return r.second <= rep.r.tolerance; });
  rep.r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep.r;
}

}  // namespace monopole

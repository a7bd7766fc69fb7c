#include "randic/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "randic/indices.hpp"

namespace randic {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

std::string format_alpha(double a) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", a);
  return buf;
}

}  // namespace

bool AlphaInterval::contains(double a) const noexcept {
  if (lo_open ? !(a > lo) : !(a >= lo)) return false;
  if (hi_open ? !(a < hi) : !(a <= hi)) return false;
  return true;
}

AlphaDomain AlphaDomain::none() { return AlphaDomain{}; }

AlphaDomain AlphaDomain::fixed(double alpha) {
  AlphaDomain d;
  d.kind_ = Kind::fixed;
  d.fixed_ = alpha;
  return d;
}

AlphaDomain AlphaDomain::interval(double lo, bool lo_open, double hi,
                                  bool hi_open) {
  AlphaDomain d;
  d.kind_ = Kind::intervals;
  d.intervals_.push_back({lo, hi, lo_open, hi_open});
  return d;
}

AlphaDomain AlphaDomain::union_of(const AlphaInterval& a,
                                  const AlphaInterval& b) {
  AlphaDomain d;
  d.kind_ = Kind::intervals;
  d.intervals_ = {a, b};
  return d;
}

double AlphaDomain::fixed_value() const {
  if (kind_ != Kind::fixed) {
    throw std::logic_error("alpha domain has no fixed value");
  }
  return fixed_;
}

bool AlphaDomain::contains(double alpha) const noexcept {
  switch (kind_) {
    case Kind::none:
      return false;
    case Kind::fixed:
      return alpha == fixed_;
    case Kind::intervals:
      for (const auto& iv : intervals_) {
        if (iv.contains(alpha)) return true;
      }
      return false;
  }
  return false;
}

std::string AlphaDomain::to_string() const {
  if (kind_ == Kind::none) return "none";
  if (kind_ == Kind::fixed) return "alpha=" + format_alpha(fixed_);
  std::string out;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& iv = intervals_[i];
    if (i) out += " or ";
    if (iv.lo == kNegInf && iv.hi == kPosInf) {
      out += "any alpha";
    } else if (iv.lo == kNegInf) {
      out += std::string("alpha") + (iv.hi_open ? "<" : "<=") +
             format_alpha(iv.hi);
    } else if (iv.hi == kPosInf) {
      out += std::string("alpha") + (iv.lo_open ? ">" : ">=") +
             format_alpha(iv.lo);
    } else {
      out += format_alpha(iv.lo) + std::string(iv.lo_open ? "<" : "<=") +
             "alpha" + (iv.hi_open ? "<" : "<=") + format_alpha(iv.hi);
    }
  }
  return out;
}

GraphInvariants compute_graph_invariants(const Graph& g,
                                         const InvariantOptions& opts) {
  GraphInvariants inv;
  inv.degrees = degree_stats(g);
  inv.flags = classify(g);
  inv.spectral = spectral_radius(g, opts.spectral);
  inv.clique = clique_number(g, opts.clique_budget);
  inv.chromatic = chromatic_number(g, opts.chromatic);
  return inv;
}

double EvalContext::randic(double alpha) const {
  auto it = randic_memo_.find(alpha);
  if (it != randic_memo_.end()) return it->second;
  double value = randic_index(*graph_, alpha);
  randic_memo_.emplace(alpha, value);
  return value;
}

double EvalContext::zeroth(double alpha) const {
  auto it = zeroth_memo_.find(alpha);
  if (it != zeroth_memo_.end()) return it->second;
  double value = zeroth_randic_index(*graph_, alpha);
  zeroth_memo_.emplace(alpha, value);
  return value;
}

double EvalContext::edge_products_geometric_mean() const {
  if (!geomean_memo_) {
    std::vector<double> products;
    for (std::int64_t p : edge_degree_products(*graph_)) {
      products.push_back(static_cast<double>(p));
    }
    geomean_memo_ = power_mean(PositiveValues(std::move(products)), 0.0);
  }
  return *geomean_memo_;
}

namespace {

using Ctx = EvalContext;

double rp(double base, double exponent) {
  return detail::real_power(base, exponent);
}

double hong_sq(const Ctx& c) { return 2.0 * c.m() - c.n() + 1.0; }

// ((sqrt(8m+1)-1)/2)^2, the square of the Bollobas-Erdos degree proxy.
double be_base(const Ctx& c) {
  double r = (std::sqrt(8.0 * c.m() + 1.0) - 1.0) / 2.0;
  return r * r;
}

double das_expr(const Ctx& c) {
  return c.avg_degree() * (c.max_degree() + c.min_degree()) -
         c.max_degree() * c.min_degree();
}

bool delta_ge1(const Ctx& c) { return c.min_degree() >= 1; }

bool is_k5(const Ctx& c) {
  return c.graph().vertex_count() == 5 && c.graph().edge_count() == 10 &&
         c.max_degree() == 4 && c.min_degree() == 4;
}

std::vector<BoundLink> one(double lhs, double rhs) { return {{lhs, rhs}}; }

AlphaInterval open_below_zero() { return {kNegInf, 0.0, false, true}; }

BoundSpec r_lower(std::string id, std::string statement, AlphaDomain domain,
                  std::function<double(const Ctx&, double)> rhs) {
  BoundSpec s;
  s.id = std::move(id);
  s.statement = std::move(statement);
  s.target = BoundTarget::randic_index;
  s.direction = Direction::lower;
  s.alpha_domain = std::move(domain);
  s.predicate_name = "delta>=1";
  s.predicate = delta_ge1;
  s.links = [rhs = std::move(rhs)](const Ctx& c, double a) {
    return one(c.randic(a), rhs(c, a));
  };
  return s;
}

BoundSpec q_bound(std::string id, std::string statement, Direction dir,
                  AlphaDomain domain,
                  std::function<double(const Ctx&, double)> rhs) {
  BoundSpec s;
  s.id = std::move(id);
  s.statement = std::move(statement);
  s.target = BoundTarget::zeroth_index;
  s.direction = dir;
  s.alpha_domain = std::move(domain);
  s.predicate_name = "delta>=1";
  s.predicate = delta_ge1;
  s.links = [rhs = std::move(rhs)](const Ctx& c, double a) {
    return one(c.zeroth(a), rhs(c, a));
  };
  return s;
}

bool eq_regular(const Ctx& c) { return c.invariants().flags.regular; }
bool eq_regular_or_semibip(const Ctx& c) {
  const auto& f = c.invariants().flags;
  return f.regular || f.semiregular_bipartite;
}
bool eq_complete(const Ctx& c) { return c.invariants().flags.complete; }
bool eq_star(const Ctx& c) { return c.invariants().flags.star; }
bool eq_c4_class(const Ctx& c) {
  return is_complete_bipartite(c.graph()) ||
         is_regular_complete_multipartite(c.graph());
}
bool eq_k4(const Ctx& c) {
  return c.invariants().flags.complete && c.graph().vertex_count() == 4;
}

std::vector<BoundSpec> make_registry() {
  std::vector<BoundSpec> reg;

  {
    auto s = r_lower("T1a", "R_a >= m*lambda^(2a)",
                     AlphaDomain::interval(kNegInf, false, 0.0, true),
                     [](const Ctx& c, double a) {
                       return c.m() * rp(c.lambda() * c.lambda(), a);
                     });
    s.needs_lambda = true;
    s.equality_name = "regular-or-semiregular-bipartite";
    s.equality = eq_regular_or_semibip;
    s.anchor = PowerMeanAnchor{0.5, Direction::upper, "lambda^2"};
    s.source = "power-mean transfer of Favaron-Maheo-Sacle 1993";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "T1b";
    s.statement = "R_a <= m*lambda^(2a)";
    s.target = BoundTarget::randic_index;
    s.direction = Direction::upper;
    s.alpha_domain = AlphaDomain::interval(0.0, true, 0.5, false);
    s.predicate_name = "delta>=1";
    s.predicate = delta_ge1;
    s.needs_lambda = true;
    s.links = [](const Ctx& c, double a) {
      return one(c.randic(a), c.m() * rp(c.lambda() * c.lambda(), a));
    };
    s.equality_name = "regular-or-semiregular-bipartite";
    s.equality = eq_regular_or_semibip;
    s.anchor = PowerMeanAnchor{0.5, Direction::upper, "lambda^2"};
    s.source = "power-mean transfer of Favaron-Maheo-Sacle 1993";
    reg.push_back(std::move(s));
  }
  {
    auto s = q_bound("T1c", "Q_a >= n*lambda^a", Direction::lower,
                     AlphaDomain::interval(kNegInf, false, 0.0, true),
                     [](const Ctx& c, double a) {
                       return c.n() * rp(c.lambda(), a);
                     });
    s.needs_lambda = true;
    s.equality_name = "regular";
    s.equality = eq_regular;
    s.anchor = PowerMeanAnchor{1.0, Direction::upper, "lambda"};
    s.source = "power-mean transfer of d <= lambda";
    reg.push_back(std::move(s));
  }
  {
    auto s = q_bound("T1d", "Q_a <= n*lambda^a", Direction::upper,
                     AlphaDomain::interval(0.0, true, 1.0, false),
                     [](const Ctx& c, double a) {
                       return c.n() * rp(c.lambda(), a);
                     });
    s.needs_lambda = true;
    s.equality_name = "regular";
    s.equality = eq_regular;
    s.anchor = PowerMeanAnchor{1.0, Direction::upper, "lambda"};
    s.source = "power-mean transfer of d <= lambda";
    reg.push_back(std::move(s));
  }
  {
    auto s = r_lower("C1", "R_a >= m*(2m-n+1)^a",
                     AlphaDomain::interval(kNegInf, false, 0.0, true),
                     [](const Ctx& c, double a) {
                       return c.m() * rp(hong_sq(c), a);
                     });
    s.source = "via Hong 1993";
    reg.push_back(std::move(s));
  }
  {
    auto s = r_lower("BE-L", "R_a >= m*((sqrt(8m+1)-1)/2)^(2a)",
                     AlphaDomain::interval(-1.0, false, 0.0, true),
                     [](const Ctx& c, double a) {
                       return c.m() * rp(be_base(c), a);
                     });
    s.source = "Bollobas-Erdos 1998";
    reg.push_back(std::move(s));
  }
  {
    auto s = r_lower("C2", "R_a >= n^(2a+2)*(w-1)^(2a+1)/(2*w^(2a+1))",
                     AlphaDomain::interval(kNegInf, false, -1.0, false),
                     [](const Ctx& c, double a) {
                       const double w = c.omega();
                       return rp(c.n(), 2 * a + 2) * rp(w - 1, 2 * a + 1) /
                              (2.0 * rp(w, 2 * a + 1));
                     });
    s.needs_omega = true;
    s.source = "via Nikiforov 2002 and Turan 1941";
    reg.push_back(std::move(s));
  }
  {
    auto s = r_lower("LY", "R_a >= n*(n-1)^(1+2a)/2",
                     AlphaDomain::interval(kNegInf, false, -1.0, false),
                     [](const Ctx& c, double a) {
                       return c.n() * rp(c.n() - 1, 1 + 2 * a) / 2.0;
                     });
    s.source = "Li-Yang 2004";
    reg.push_back(std::move(s));
  }
  {
    auto s = r_lower("C3", "R_a >= 2^(-a)*n^a*m^(1-a)*lambda^(3a)",
                     AlphaDomain::interval(kNegInf, false, 0.0, true),
                     [](const Ctx& c, double a) {
                       return rp(2.0, -a) * rp(c.n(), a) * rp(c.m(), 1 - a) *
                              rp(c.lambda(), 3 * a);
                     });
    s.needs_lambda = true;
    s.source = "generalises Lu-Liu-Tian 2004";
    reg.push_back(std::move(s));
  }
  {
    auto s = r_lower("T2R", "R_a >= m*d^(2a)",
                     AlphaDomain::interval(0.0, false, kPosInf, false),
                     [](const Ctx& c, double a) {
                       return c.m() * rp(c.avg_degree() * c.avg_degree(), a);
                     });
    s.anchor = PowerMeanAnchor{0.0, Direction::lower, "d^2"};
    s.source = "power-mean transfer of Ilic-Stevanovic 2009";
    reg.push_back(std::move(s));
  }
  {
    auto s = q_bound("T2Qa", "Q_a >= n*d^a", Direction::lower,
                     AlphaDomain::union_of(open_below_zero(),
                                           {1.0, kPosInf, false, false}),
                     [](const Ctx& c, double a) {
                       return c.n() * rp(c.avg_degree(), a);
                     });
    s.equality_name = "regular";
    s.equality = eq_regular;
    s.anchor = PowerMeanAnchor{1.0, Direction::lower, "d"};
    s.source = "power-mean transfer of Q_1 = 2m";
    reg.push_back(std::move(s));
  }
  {
    auto s = q_bound("T2Qb", "Q_a <= n*d^a", Direction::upper,
                     AlphaDomain::interval(0.0, true, 1.0, false),
                     [](const Ctx& c, double a) {
                       return c.n() * rp(c.avg_degree(), a);
                     });
    s.equality_name = "regular";
    s.equality = eq_regular;
    s.anchor = PowerMeanAnchor{1.0, Direction::upper, "d"};
    s.source = "power-mean transfer of Q_1 = 2m";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "T3";
    s.statement = "R_a <= m*(2m-n+1)^a";
    s.target = BoundTarget::randic_index;
    s.direction = Direction::upper;
    s.alpha_domain = AlphaDomain::interval(0.0, true, 1.0, false);
    s.predicate_name = "delta>=1";
    s.predicate = delta_ge1;
    s.links = [](const Ctx& c, double a) {
      return one(c.randic(a), c.m() * rp(hong_sq(c), a));
    };
    s.anchor = PowerMeanAnchor{1.0, Direction::upper, "2m-n+1"};
    s.source = "via Das-Gutman 2004";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "BE-U";
    s.statement = "R_a <= m*((sqrt(8m+1)-1)/2)^(2a)";
    s.target = BoundTarget::randic_index;
    s.direction = Direction::upper;
    s.alpha_domain = AlphaDomain::interval(0.0, true, 1.0, false);
    s.predicate_name = "delta>=1";
    s.predicate = delta_ge1;
    s.links = [](const Ctx& c, double a) {
      return one(c.randic(a), c.m() * rp(be_base(c), a));
    };
    s.source = "Bollobas-Erdos 1998";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "DG";
    s.statement =
        "R_1 <= 2m^2-(n-1)*m*dmin+(1/2)(dmin-1)*m*(2m/(n-1)+n-2)";
    s.target = BoundTarget::randic_index;
    s.direction = Direction::upper;
    s.alpha_domain = AlphaDomain::fixed(1.0);
    s.predicate_name = "delta>=1";
    s.predicate = delta_ge1;  // min degree >= 1 forces n >= 2
    s.links = [](const Ctx& c, double) {
      const double n = c.n(), m = c.m(), dmin = c.min_degree();
      const double rhs = 2 * m * m - (n - 1) * m * dmin +
                         0.5 * (dmin - 1) * m * (2 * m / (n - 1) + n - 2);
      return one(c.randic(1.0), rhs);
    };
    s.source = "Das-Gutman 2004";
    reg.push_back(std::move(s));
  }
  {
    auto s = q_bound("T4", "Q_a >= n*(d*(dmax+dmin)-dmax*dmin)^(a/2)",
                     Direction::lower,
                     AlphaDomain::interval(kNegInf, false, 0.0, true),
                     [](const Ctx& c, double a) {
                       return c.n() * rp(das_expr(c), a / 2);
                     });
    s.anchor = PowerMeanAnchor{2.0, Direction::upper,
                               "sqrt(d*(dmax+dmin)-dmax*dmin)"};
    s.source = "power-mean transfer of Das 2004";
    reg.push_back(std::move(s));
  }
  {
    auto s = q_bound("DAS", "Q_2 <= n*(d*(dmax+dmin)-dmax*dmin)",
                     Direction::upper, AlphaDomain::fixed(2.0),
                     [](const Ctx& c, double) {
                       return c.n() * das_expr(c);
                     });
    s.source = "Das 2004";
    reg.push_back(std::move(s));
  }
  {
    auto s = r_lower("SHI", "R_{-1} >= n/(2*dmax)", AlphaDomain::fixed(-1.0),
                     [](const Ctx& c, double) {
                       return c.n() / (2.0 * c.max_degree());
                     });
    s.equality_name = "regular";
    s.equality = eq_regular;
    s.source = "Shi 2009";
    reg.push_back(std::move(s));
  }
  {
    auto s = r_lower("LY6", "R_{-1} >= n/(2(n-1))", AlphaDomain::fixed(-1.0),
                     [](const Ctx& c, double) {
                       return c.n() / (2.0 * (c.n() - 1));
                     });
    s.equality_name = "complete";
    s.equality = eq_complete;
    s.source = "Li-Yang 2004";
    reg.push_back(std::move(s));
  }
  {
    auto s = r_lower("LG", "R_{-1} >= (n-1)/m", AlphaDomain::fixed(-1.0),
                     [](const Ctx& c, double) {
                       return (c.n() - 1) / c.m();
                     });
    s.equality_name = "star";
    s.equality = eq_star;
    s.source = "Liu-Gutman 2007";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "CM";
    s.statement = "R_{-1} >= 1 for trees";
    s.target = BoundTarget::randic_index;
    s.direction = Direction::lower;
    s.alpha_domain = AlphaDomain::fixed(-1.0);
    s.predicate_name = "tree";
    s.predicate = [](const Ctx& c) {
      return c.invariants().flags.tree && delta_ge1(c);
    };
    s.links = [](const Ctx& c, double) { return one(c.randic(-1.0), 1.0); };
    s.source = "Clark-Moon 2000";
    reg.push_back(std::move(s));
  }
  {
    auto s = r_lower("C4", "R_{-1} >= w/(2(w-1))", AlphaDomain::fixed(-1.0),
                     [](const Ctx& c, double) {
                       const double w = c.omega();
                       return w / (2.0 * (w - 1));
                     });
    s.needs_omega = true;
    s.equality_name = "complete-bipartite-or-regular-complete-multipartite";
    s.equality = eq_c4_class;
    s.source = "via Nikiforov 2002";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "C5";
    s.statement = "R_{-1} >= 2/3 for chemical graphs other than K_5";
    s.target = BoundTarget::randic_index;
    s.direction = Direction::lower;
    s.alpha_domain = AlphaDomain::fixed(-1.0);
    s.predicate_name = "chemical-and-not-K5";
    s.predicate = [](const Ctx& c) {
      return c.invariants().flags.chemical && !is_k5(c) && delta_ge1(c);
    };
    s.links = [](const Ctx& c, double) {
      return one(c.randic(-1.0), 2.0 / 3.0);
    };
    s.equality_name = "K4";
    s.equality = eq_k4;
    s.source = "via Brooks 1941 and C4";
    reg.push_back(std::move(s));
  }
  {
    auto s = r_lower("BE9-L", "R_{-1/2} >= sqrt(n-1)",
                     AlphaDomain::fixed(-0.5), [](const Ctx& c, double) {
                       return std::sqrt(c.n() - 1);
                     });
    s.equality_name = "star";
    s.equality = eq_star;
    s.source = "Bollobas-Erdos 1998";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "BE9-U";
    s.statement = "R_{-1/2} <= n/2";
    s.target = BoundTarget::randic_index;
    s.direction = Direction::upper;
    s.alpha_domain = AlphaDomain::fixed(-0.5);
    s.predicate_name = "delta>=1";
    s.predicate = delta_ge1;
    s.links = [](const Ctx& c, double) {
      return one(c.randic(-0.5), c.n() / 2.0);
    };
    s.source = "Bollobas-Erdos 1998";
    reg.push_back(std::move(s));
  }
  {
    // The second link only binds for connected graphs: with m >= n-1 the
    // new RHS is never worse than sqrt(n-1).
    auto s = r_lower("C7",
                     "R_{-1/2} >= m/sqrt(2m-n+1), and m/sqrt(2m-n+1) >= "
                     "sqrt(n-1) when connected",
                     AlphaDomain::fixed(-0.5), [](const Ctx& c, double) {
                       return c.m() / std::sqrt(hong_sq(c));
                     });
    s.links = [](const Ctx& c, double) {
      const double rhs = c.m() / std::sqrt(hong_sq(c));
      std::vector<BoundLink> links{{c.randic(-0.5), rhs, false}};
      if (c.invariants().flags.connected) {
        links.push_back({rhs, std::sqrt(c.n() - 1), false});
      }
      return links;
    };
    s.source = "via Hong 1993";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "C6";
    s.statement = "2*R_{-1/2} >= lambda+1 >= chi";
    s.target = BoundTarget::scalar;
    s.direction = Direction::lower;
    s.alpha_domain = AlphaDomain::fixed(-0.5);
    s.predicate_name = "delta>=1";
    s.predicate = delta_ge1;
    s.needs_lambda = true;
    s.needs_chromatic = true;
    s.links = [](const Ctx& c, double) {
      const double mid = c.lambda() + 1.0;
      return std::vector<BoundLink>{
          {2.0 * c.randic(-0.5), mid, false},
          {mid, static_cast<double>(c.chromatic()), true}};
    };
    s.source = "strengthens Hansen-Vukicevic 2009";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "HV";
    s.statement = "chi <= 2*R_{-1/2}";
    s.target = BoundTarget::scalar;
    s.direction = Direction::upper;
    s.alpha_domain = AlphaDomain::fixed(-0.5);
    s.predicate_name = "delta>=1";
    s.predicate = delta_ge1;
    s.needs_chromatic = true;
    s.links = [](const Ctx& c, double) {
      return std::vector<BoundLink>{{static_cast<double>(c.chromatic()),
                                     2.0 * c.randic(-0.5), true}};
    };
    s.source = "Hansen-Vukicevic 2009";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "AUX-HONG";
    s.statement = "lambda^2 <= 2m-n+1";
    s.target = BoundTarget::scalar;
    s.direction = Direction::upper;
    s.alpha_domain = AlphaDomain::none();
    s.predicate_name = "delta>=1";
    s.predicate = delta_ge1;
    s.needs_lambda = true;
    s.links = [](const Ctx& c, double) {
      return one(c.lambda() * c.lambda(), hong_sq(c));
    };
    s.source = "Hong 1993";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "AUX-NIK";
    s.statement = "lambda^2 <= 2m(w-1)/w";
    s.target = BoundTarget::scalar;
    s.direction = Direction::upper;
    s.alpha_domain = AlphaDomain::none();
    s.predicate_name = "m>=1";
    s.predicate = [](const Ctx& c) { return c.m() >= 1; };
    s.needs_lambda = true;
    s.needs_omega = true;
    s.links = [](const Ctx& c, double) {
      const double w = c.omega();
      return one(c.lambda() * c.lambda(), 2.0 * c.m() * (w - 1) / w);
    };
    s.source = "Nikiforov 2002";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "AUX-FAV";
    s.statement = "(R_{1/2}/m)^2 <= lambda^2";
    s.target = BoundTarget::scalar;
    s.direction = Direction::upper;
    s.alpha_domain = AlphaDomain::none();
    s.predicate_name = "delta>=1";
    s.predicate = delta_ge1;
    s.needs_lambda = true;
    s.links = [](const Ctx& c, double) {
      const double mean = c.randic(0.5) / c.m();
      return one(mean * mean, c.lambda() * c.lambda());
    };
    s.source = "Favaron-Maheo-Sacle 1993";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "AUX-IS";
    s.statement = "geomean(d_u*d_v) >= d^2";
    s.target = BoundTarget::scalar;
    s.direction = Direction::lower;
    s.alpha_domain = AlphaDomain::none();
    s.predicate_name = "delta>=1";
    s.predicate = delta_ge1;
    s.links = [](const Ctx& c, double) {
      return one(c.edge_products_geometric_mean(),
                 c.avg_degree() * c.avg_degree());
    };
    s.source = "Ilic-Stevanovic 2009";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "AUX-TUR";
    s.statement = "m <= n^2(w-1)/(2w)";
    s.target = BoundTarget::scalar;
    s.direction = Direction::upper;
    s.alpha_domain = AlphaDomain::none();
    s.predicate_name = "any";
    s.predicate = [](const Ctx&) { return true; };
    s.needs_omega = true;
    s.links = [](const Ctx& c, double) {
      const double w = c.omega();
      return one(c.m(), c.n() * c.n() * (w - 1) / (2.0 * w));
    };
    s.source = "Turan 1941";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "AUX-DL";
    s.statement = "d <= lambda";
    s.target = BoundTarget::scalar;
    s.direction = Direction::upper;
    s.alpha_domain = AlphaDomain::none();
    s.predicate_name = "any";
    s.predicate = [](const Ctx&) { return true; };
    s.needs_lambda = true;
    s.links = [](const Ctx& c, double) {
      return one(c.avg_degree(), c.lambda());
    };
    s.source = "average degree vs spectral radius (folklore)";
    reg.push_back(std::move(s));
  }
  {
    BoundSpec s;
    s.id = "AUX-LO";
    s.statement = "lambda <= 2m/w; w(w-1) <= 2m; chi <= 1+lambda";
    s.target = BoundTarget::scalar;
    s.direction = Direction::upper;
    s.alpha_domain = AlphaDomain::none();
    s.predicate_name = "m>=1";
    s.predicate = [](const Ctx& c) { return c.m() >= 1; };
    s.needs_lambda = true;
    s.needs_omega = true;
    s.needs_chromatic = true;
    s.links = [](const Ctx& c, double) {
      const double w = c.omega();
      return std::vector<BoundLink>{
          {c.lambda(), 2.0 * c.m() / w, false},
          {w * (w - 1), 2.0 * c.m(), false},
          {static_cast<double>(c.chromatic()), 1.0 + c.lambda(), true}};
    };
    s.source = "elementary clique-chromatic-spectral chain";
    reg.push_back(std::move(s));
  }

  return reg;
}

}  // namespace

const std::vector<BoundSpec>& bound_registry() {
  static const std::vector<BoundSpec> registry = make_registry();
  return registry;
}

const BoundSpec& find_bound(std::string_view id) {
  for (const auto& spec : bound_registry()) {
    if (spec.id == id) return spec;
  }
  throw std::invalid_argument("unknown bound id '" + std::string(id) + "'");
}

bool predict_equality(const BoundSpec& spec, const EvalContext& ctx) {
  return spec.equality && spec.equality(ctx);
}

BoundResult evaluate_bound(const BoundSpec& spec, const EvalContext& ctx,
                           std::optional<double> alpha, double slack_factor) {
  BoundResult r;
  r.bound_id = spec.id;

  bool alpha_ok = true;
  double effective_alpha = 0.0;
  switch (spec.alpha_domain.kind()) {
    case AlphaDomain::Kind::none:
      r.alpha = std::nullopt;
      break;
    case AlphaDomain::Kind::fixed:
      effective_alpha = spec.alpha_domain.fixed_value();
      if (alpha.has_value() && *alpha != effective_alpha) {
        alpha_ok = false;
        r.alpha = alpha;
      } else {
        r.alpha = effective_alpha;
      }
      break;
    case AlphaDomain::Kind::intervals:
      r.alpha = alpha;
      if (!alpha.has_value() || !spec.alpha_domain.contains(*alpha)) {
        alpha_ok = false;
      } else {
        effective_alpha = *alpha;
      }
      break;
  }

  if (!alpha_ok || !spec.predicate(ctx)) {
    r.applicable = false;
    return r;
  }
  r.applicable = true;

  if (spec.needs_lambda && !ctx.lambda_available()) {
    r.skipped = true;
    r.skip_reason = "spectral radius unavailable";
    return r;
  }
  if (spec.needs_omega && !ctx.omega_available()) {
    r.skipped = true;
    r.skip_reason = "clique number unavailable";
    return r;
  }

  const auto links = spec.links(ctx, effective_alpha);
  bool all_hold = true;
  bool all_equal = true;
  bool violation_needs_exact_chi = false;
  std::size_t binding = 0;
  double binding_gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < links.size(); ++i) {
    const auto& link = links[i];
    const double slack =
        slack_factor * std::max({1.0, std::fabs(link.lhs), std::fabs(link.rhs)});
    const double directed_gap = spec.direction == Direction::lower
                                    ? link.lhs - link.rhs
                                    : link.rhs - link.lhs;
    if (directed_gap < -slack) {
      all_hold = false;
      if (link.uses_chromatic && !ctx.chromatic_exact()) {
        violation_needs_exact_chi = true;
      }
    }
    if (std::fabs(link.lhs - link.rhs) > slack) all_equal = false;
    if (directed_gap < binding_gap) {
      binding_gap = directed_gap;
      binding = i;
    }
  }

  if (!all_hold && violation_needs_exact_chi) {
    // An upper bound on chi cannot witness the failing link.
    r.skipped = true;
    r.skip_reason = "chromatic number is an inexact upper bound";
    return r;
  }

  const auto& link = links[binding];
  r.lhs = link.lhs;
  r.rhs = link.rhs;
  r.holds = all_hold;
  r.abs_gap = std::fabs(link.lhs - link.rhs);
  r.rel_gap = r.abs_gap /
              std::max({1.0, std::fabs(link.lhs), std::fabs(link.rhs)});
  r.equality_observed = all_hold && all_equal;
  r.equality_predicted = predict_equality(spec, ctx);
  return r;
}

DominanceResult dominance_check(const BoundSpec& first, const BoundSpec& second,
                                const EvalContext& ctx, double alpha,
                                double slack_factor) {
  if (first.target != second.target || first.direction != second.direction) {
    throw std::invalid_argument(
        "dominance comparison needs same-direction, same-target bounds");
  }
  if (first.target == BoundTarget::scalar) {
    throw std::invalid_argument("dominance comparison needs index bounds");
  }
  auto check_applicable = [&](const BoundSpec& s) {
    if (!s.alpha_domain.contains(alpha) || !s.predicate(ctx)) {
      throw std::invalid_argument("bound " + s.id +
                                  " is not applicable at this (graph, alpha)");
    }
    if ((s.needs_lambda && !ctx.lambda_available()) ||
        (s.needs_omega && !ctx.omega_available())) {
      throw std::invalid_argument("bound " + s.id +
                                  " needs an unavailable invariant");
    }
  };
  check_applicable(first);
  check_applicable(second);

  DominanceResult out;
  out.first_id = first.id;
  out.second_id = second.id;
  out.first_rhs = first.links(ctx, alpha).front().rhs;
  out.second_rhs = second.links(ctx, alpha).front().rhs;
  out.gap = std::fabs(out.first_rhs - out.second_rhs);
  const double slack =
      slack_factor *
      std::max({1.0, std::fabs(out.first_rhs), std::fabs(out.second_rhs)});
  if (out.gap <= slack) {
    out.tighter = Tightness::tie;
  } else if (first.direction == Direction::lower) {
    out.tighter = out.first_rhs > out.second_rhs ? Tightness::first
                                                 : Tightness::second;
  } else {
    out.tighter = out.first_rhs < out.second_rhs ? Tightness::first
                                                 : Tightness::second;
  }
  return out;
}

}  // namespace randic

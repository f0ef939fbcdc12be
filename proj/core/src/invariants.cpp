#include "nagata/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "nagata/fatpoints.hpp"
#include "nagata/seed.hpp"

namespace nagata::invariants {
namespace {

mpz_class ipow(const mpz_class& base, int e) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

std::string str(const mpz_class& z) { return z.get_str(); }

template <class S>
Rational best_witness_ratio(const fatpoints::InterpolationProblem& problem) {
  Rational best = 0;
  for (const auto& k : fatpoints::kernel_polynomials<S>(problem)) {
    long sum = 0;
    for (int o : k.achieved_orders) sum += o;
    best = std::max(best, Rational(sum, k.degree));
  }
  best.canonicalize();
  return best;
}

}  // namespace

int omega(const configs::PointConfig& config, std::span<const int> orders, const ScalarDomain& domain) {
  if (orders.size() != config.size()) throw std::invalid_argument("orders must have one entry per point");
  fatpoints::InterpolationProblem problem;
  problem.config = config;
  problem.orders.assign(orders.begin(), orders.end());
  problem.domain = domain;
  problem.validate();

  // Columns exceeding conditions force a nonzero kernel, so the answer is at
  // most d_hi. One elimination at d_hi yields every lower degree through the
  // column prefixes, which also certifies that all smaller degrees are empty
  // (special systems such as the double conic sit below the expected degree).
  const int start = problem.max_order();
  const std::size_t conditions = problem.condition_count();
  int d_hi = start;
  while (fatpoints::monomial_count(config.dimension, d_hi) <= conditions) ++d_hi;
  problem.degree = d_hi;

  const auto dims = fatpoints::vanishing_dimensions_upto(problem);
  for (int d = start; d < static_cast<int>(dims.size()); ++d) {
    if (dims[static_cast<std::size_t>(d)] >= 1) return d;
  }
  throw std::runtime_error("omega search exceeded the rational column cap of " +
                           std::to_string(domain.rational_column_cap) +
                           "; use the prime field or raise the cap");
}

int omega_l(const configs::PointConfig& config, int l, const ScalarDomain& domain) {
  if (l < 1) throw std::invalid_argument("order l must be >= 1");
  const std::vector<int> orders(config.size(), l);
  return omega(config, orders, domain);
}

std::vector<int> omega_table(const configs::PointConfig& config, int l_max, const ScalarDomain& domain) {
  if (l_max < 1) throw std::invalid_argument("l_max must be >= 1");
  std::vector<int> table;
  for (int l = 1; l <= l_max; ++l) table.push_back(omega_l(config, l, domain));
  return table;
}

bool WaldschmidtInterval::contains_root(const Rational& r, int n) const {
  Rational lo = 1, hi = 1;
  for (int i = 0; i < n; ++i) {
    lo *= lower;
    hi *= upper;
  }
  return lo <= r && r <= hi;
}

WaldschmidtInterval waldschmidt_interval(std::span<const int> table, int n) {
  if (table.empty()) throw std::invalid_argument("empty omega table");
  WaldschmidtInterval w;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const int l = static_cast<int>(i) + 1;
    Rational lo(table[i], l + n - 1);
    Rational hi(table[i], l);
    lo.canonicalize();
    hi.canonicalize();
    if (w.lower_at == 0 || lo > w.lower) {
      w.lower = lo;
      w.lower_at = l;
    }
    if (w.upper_at == 0 || hi < w.upper) {
      w.upper = hi;
      w.upper_at = l;
    }
  }
  return w;
}

WaldschmidtInterval waldschmidt_interval(const configs::PointConfig& config, int l_max,
                                         const ScalarDomain& domain) {
  return waldschmidt_interval(omega_table(config, l_max, domain), config.dimension);
}

WitnessBound omega_s_witness_bound(const configs::PointConfig& config, int l, int d,
                                   const ScalarDomain& domain) {
  WitnessBound w;
  w.omega = omega_l(config, l, domain);
  w.analytic = Rational(static_cast<long>(config.size()) * l, w.omega);
  w.analytic.canonicalize();
  auto problem = fatpoints::InterpolationProblem::uniform(config, l, d, domain);
  if (domain.is_rational()) {
    w.witnessed = best_witness_ratio<Rational>(problem);
    w.certified = true;
  } else {
    w.witnessed = best_witness_ratio<exactla::Fp>(problem);
  }
  w.best = std::max(w.witnessed, w.analytic);
  return w;
}

std::vector<NagataRow> nagata_rows(std::span<const int> table, int n, std::size_t r) {
  std::vector<NagataRow> rows;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const int l = static_cast<int>(i) + 1;
    const bool holds = ipow(table[i], n) > ipow(l, n) * mpz_class(static_cast<unsigned long>(r));
    rows.push_back({l, table[i], holds});
  }
  return rows;
}

std::vector<NagataRow> nagata_check(const configs::PointConfig& config, int l_max, const ScalarDomain& domain) {
  return nagata_rows(omega_table(config, l_max, domain), config.dimension, config.size());
}

Rational harbourne_constant(int r) {
  static const Rational kTable[] = {Rational(1),     Rational(1),     Rational(3, 2),
                                    Rational(2),     Rational(2),     Rational(12, 5),
                                    Rational(21, 8), Rational(48, 17), Rational(3)};
  if (r < 1 || r > 9) throw std::out_of_range("the c_r table covers r = 1..9 only");
  return kTable[r - 1];
}

std::vector<HarbourneRow> harbourne_table_check(int m_max, std::uint64_t seed, const ScalarDomain& domain) {
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  std::vector<HarbourneRow> rows;
  for (int r = 1; r <= 9; ++r) {
    const auto config_seed = derive_seed(seed, "harbourne/r=" + std::to_string(r));
    const auto config = configs::generic_points(2, static_cast<std::size_t>(r), config_seed);
    for (int m = 1; m <= m_max; ++m) {
      HarbourneRow row;
      row.r = r;
      row.m = m;
      row.seed = config_seed;
      row.expected = ceil(harbourne_constant(r) * m);
      row.actual = omega_l(config, m, domain);
      row.pass = row.expected == row.actual;
      if (!row.pass) row.note = "config possibly special - re-seed";
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<Verdict> superadditivity_check(std::span<const int> table, int n) {
  const int l_max = static_cast<int>(table.size());
  auto om = [&](int l) { return table[static_cast<std::size_t>(l - 1)]; };

  Verdict sub{"superadditivity", true, "Omega(l1+l2) <= Omega(l1) + Omega(l2) for l1+l2 <= " +
                                           std::to_string(l_max)};
  for (int a = 1; a <= l_max && sub.pass; ++a) {
    for (int b = a; a + b <= l_max; ++b) {
      if (om(a + b) > om(a) + om(b)) {
        sub.pass = false;
        sub.detail = "Omega(" + std::to_string(a + b) + ")=" + std::to_string(om(a + b)) + " > Omega(" +
                     std::to_string(a) + ")+Omega(" + std::to_string(b) + ")=" +
                     std::to_string(om(a) + om(b));
        break;
      }
    }
  }

  Verdict norm{"normalized_bounds", true, "Omega(1)/n <= Omega(l)/l <= Omega(1) for l <= " +
                                              std::to_string(l_max)};
  for (int l = 1; l <= l_max; ++l) {
    // Omega(1)/n <= Omega(l)/l  <=>  l*Omega(1) <= n*Omega(l)
    if (l * om(1) > n * om(l) || om(l) > l * om(1)) {
      norm.pass = false;
      norm.detail = "violated at l=" + std::to_string(l) + ": Omega(l)=" + std::to_string(om(l)) +
                    ", Omega(1)=" + std::to_string(om(1));
      break;
    }
  }

  Verdict mono{"monotone_in_l", true, "l <= Omega(l) and Omega(l) <= Omega(l+1)"};
  for (int l = 1; l <= l_max; ++l) {
    if (om(l) < l || (l < l_max && om(l) > om(l + 1))) {
      mono.pass = false;
      mono.detail = "violated at l=" + std::to_string(l);
      break;
    }
  }
  return {sub, norm, mono};
}

std::vector<Verdict> superadditivity_check(const configs::PointConfig& config, int l_max,
                                           const ScalarDomain& domain) {
  if (l_max < 2) throw std::invalid_argument("superadditivity needs l_max >= 2");
  return superadditivity_check(omega_table(config, l_max, domain), config.dimension);
}

std::vector<Verdict> waldschmidt_upper_check(std::span<const int> table, int n, std::size_t r) {
  Verdict v{"waldschmidt_upper", true, ""};
  std::ostringstream detail;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const int l = static_cast<int>(i) + 1;
    const mpz_class lhs = ipow(table[i] + n - 1, n);
    const mpz_class rhs = ipow(l + n - 1, n) * mpz_class(static_cast<unsigned long>(r));
    const bool ok = lhs <= rhs;
    detail << (i ? "; " : "") << "l=" << l << ": " << str(lhs) << (ok ? " <= " : " > ") << str(rhs);
    v.pass = v.pass && ok;
  }
  v.detail = detail.str();
  return {v};
}

std::vector<Verdict> waldschmidt_upper_check(const configs::PointConfig& config, int l_max,
                                             const ScalarDomain& domain) {
  return waldschmidt_upper_check(omega_table(config, l_max, domain), config.dimension, config.size());
}

InvariantReport build_report(const configs::PointConfig& config, int l_max, const ScalarDomain& domain) {
  InvariantReport rep;
  rep.config = config;
  rep.domain = domain;
  rep.l_max = l_max;
  rep.table = omega_table(config, l_max, domain);
  const int n = config.dimension;
  rep.interval = waldschmidt_interval(rep.table, n);

  for (int l = 1; l <= l_max; ++l) {
    auto w = omega_s_witness_bound(config, l, rep.table[static_cast<std::size_t>(l - 1)], domain);
    if (rep.w_lower_at == 0 || w.best > rep.w_lower.best) {
      rep.w_lower = std::move(w);
      rep.w_lower_at = l;
    }
  }

  rep.verdicts.push_back({"interval_ordered", rep.interval.lower <= rep.interval.upper,
                          format_rational(rep.interval.lower) + " <= " + format_rational(rep.interval.upper)});
  if (l_max >= 2) {
    for (auto& v : superadditivity_check(rep.table, n)) rep.verdicts.push_back(std::move(v));
  }
  for (auto& v : waldschmidt_upper_check(rep.table, n, config.size())) rep.verdicts.push_back(std::move(v));
  return rep;
}

nlohmann::json to_json(const WaldschmidtInterval& w) {
  return {{"lower", format_rational(w.lower)},
          {"upper", format_rational(w.upper)},
          {"lower_at_l", w.lower_at},
          {"upper_at_l", w.upper_at},
          {"lower_approx", to_double(w.lower)},
          {"upper_approx", to_double(w.upper)}};
}

nlohmann::json to_json(const WitnessBound& w) {
  return {{"witnessed", format_rational(w.witnessed)},
          {"analytic", format_rational(w.analytic)},
          {"best", format_rational(w.best)},
          {"omega", w.omega},
          {"certified", w.certified}};
}

nlohmann::json to_json(const InvariantReport& rep) {
  nlohmann::json table = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.table.size(); ++i) {
    table.push_back({{"l", i + 1}, {"omega", rep.table[i]}});
  }
  return {{"config", configs::to_json(rep.config)},
          {"scalar_domain", rep.domain.name()},
          {"l_max", rep.l_max},
          {"omega_table", std::move(table)},
          {"interval", to_json(rep.interval)},
          {"w_lower", to_json(rep.w_lower)},
          {"w_lower_at_l", rep.w_lower_at},
          {"verdicts", nagata::to_json(rep.verdicts)}};
}

std::string to_csv(const InvariantReport& rep) {
  const int n = rep.config.dimension;
  const auto nagata = nagata_rows(rep.table, n, rep.config.size());
  std::ostringstream out;
  out << "l,omega,lower_l,upper_l,interval_lower,interval_upper,waldschmidt_upper_ok,nagata_strict\n";
  for (std::size_t i = 0; i < rep.table.size(); ++i) {
    const int l = static_cast<int>(i) + 1;
    const std::span<const int> prefix(rep.table.data(), i + 1);
    const auto running = waldschmidt_interval(prefix, n);
    const bool ok = ipow(rep.table[i] + n - 1, n) <=
                    ipow(l + n - 1, n) * mpz_class(static_cast<unsigned long>(rep.config.size()));
    Rational lo(rep.table[i], l + n - 1), hi(rep.table[i], l);
    lo.canonicalize();
    hi.canonicalize();
    out << l << ',' << rep.table[i] << ',' << format_rational(lo) << ',' << format_rational(hi) << ','
        << format_rational(running.lower) << ',' << format_rational(running.upper) << ','
        << (ok ? "true" : "false") << ',' << (nagata[i].holds ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace nagata::invariants

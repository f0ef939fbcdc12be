#include "nagata/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "nagata/seed.hpp"

namespace nagata::green {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Root of x^(d+1) = x + 1, the generalized golden ratio behind the R_d sequence.
double harmonious(int d) {
  double x = 2.0;
  for (int i = 0; i < 64; ++i) x = std::pow(1.0 + x, 1.0 / (d + 1));
  return x;
}

std::vector<ComplexPoint> kronecker_torus(int n, std::size_t count, std::uint64_t seed) {
  const double g = harmonious(n);
  std::vector<double> alpha(static_cast<std::size_t>(n));
  std::vector<double> shift(static_cast<std::size_t>(n));
  std::mt19937_64 rng(derive_seed(seed, "torus-shift"));
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int j = 0; j < n; ++j) {
    alpha[static_cast<std::size_t>(j)] = std::fmod(1.0 / std::pow(g, j + 1), 1.0);
    shift[static_cast<std::size_t>(j)] = unit(rng);
  }
  std::vector<ComplexPoint> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    ComplexPoint w(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const auto jj = static_cast<std::size_t>(j);
      const double frac = std::fmod(shift[jj] + static_cast<double>(k + 1) * alpha[jj], 1.0);
      w[jj] = std::polar(1.0, kTwoPi * frac);
    }
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

double norm(const ComplexPoint& z, DomainMode mode) {
  double acc = 0.0;
  for (const auto& c : z) {
    if (mode == DomainMode::ball) {
      acc += std::norm(c);
    } else {
      acc = std::max(acc, std::abs(c));
    }
  }
  return mode == DomainMode::ball ? std::sqrt(acc) : acc;
}

std::vector<ComplexPoint> unit_sphere_samples(int n, std::size_t count, SphereKind kind,
                                              std::uint64_t seed, int axis) {
  if (n < 1) throw std::invalid_argument("sphere samples need n >= 1");
  if (kind == SphereKind::torus) return kronecker_torus(n, count, seed);

  std::mt19937_64 rng(derive_seed(seed, "sphere-samples"));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ComplexPoint> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    ComplexPoint w(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    switch (kind) {
      case SphereKind::euclidean: {
        double s = 0.0;
        for (auto& c : w) {
          c = Complex(gauss(rng), gauss(rng));
          s += std::norm(c);
        }
        const double inv = 1.0 / std::sqrt(s);
        for (auto& c : w) c *= inv;
        break;
      }
      case SphereKind::sup_norm: {
        // Cycle through the faces |w_face| = 1; the other coordinates are
        // uniform in the closed unit disc.
        const auto face = k % static_cast<std::size_t>(n);
        for (std::size_t j = 0; j < w.size(); ++j) {
          const double theta = kTwoPi * unit(rng);
          const double radius = j == face ? 1.0 : std::sqrt(unit(rng));
          w[j] = std::polar(radius, theta);
        }
        break;
      }
      case SphereKind::axis: {
        if (axis < 0 || axis >= n) throw std::invalid_argument("axis index out of range");
        w[static_cast<std::size_t>(axis)] =
            std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(count));
        break;
      }
      case SphereKind::torus:
        break;
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<ComplexPoint> boundary_samples(int n, std::size_t count, DomainMode mode, std::uint64_t seed) {
  return unit_sphere_samples(n, count, mode == DomainMode::ball ? SphereKind::euclidean : SphereKind::torus,
                             seed);
}

}  // namespace nagata::green

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace nagata::green {

using Complex = std::complex<double>;
using ComplexPoint = std::vector<Complex>;

/// Ball: Euclidean norm and unit sphere. Polydisc: sup norm, with the unit
/// torus as distinguished boundary.
enum class DomainMode { ball, polydisc };

/// Which unit "sphere" a radial supremum is taken over.
enum class SphereKind {
  euclidean,  // ||w||_2 = 1
  sup_norm,   // max_k |w_k| = 1 (the whole boundary of the unit polydisc)
  torus,      // |w_k| = 1 for every k
  axis,       // w = e^{i theta} e_axis
};

double norm(const ComplexPoint& z, DomainMode mode);

/// Deterministic points on the unit sphere of the given kind. Euclidean and
/// sup-norm spheres draw from a seeded generator; the torus uses a Kronecker
/// (R_n) low-discrepancy sequence with a seeded shift. Except for `axis`
/// (equally spaced angles), a request for k points is a prefix of any longer
/// request with the same seed.
std::vector<ComplexPoint> unit_sphere_samples(int n, std::size_t count, SphereKind kind,
                                              std::uint64_t seed, int axis = 0);

/// Quasi-uniform samples of the boundary on which the domain's sup norm is
/// attained: Euclidean sphere (ball) or torus (polydisc).
std::vector<ComplexPoint> boundary_samples(int n, std::size_t count, DomainMode mode,
                                           std::uint64_t seed);

inline SphereKind sphere_for(DomainMode mode) {
  return mode == DomainMode::ball ? SphereKind::euclidean : SphereKind::sup_norm;
}

}  // namespace nagata::green

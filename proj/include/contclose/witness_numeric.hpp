#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "contclose/polynomial.hpp"

namespace contclose {

/// Deterministic sampling parameters; every report echoes the seed.
struct SampleSpec {
    std::size_t count = 1000;
    std::uint64_t seed = 1;
    std::size_t sphere_points = 10000;
    int sphere_levels = 9;  // radii 2^0 .. 2^{-(levels-1)}
};

struct SphereSup {
    double radius = 0;
    double sup = 0;
};

/// Limit probe of one phi function along the given paths.
struct ProbeVerdict {
    std::size_t phi_index = 0;
    bool consistent = false;
    std::complex<double> limit;  // when consistent
    std::vector<std::complex<double>> path_limits;
    std::vector<bool> path_converged;
    std::pair<std::size_t, std::size_t> witness_paths{0, 0};  // when inconsistent
};

struct WitnessReport {
    std::string construction;
    std::uint64_t seed = 0;
    std::size_t sample_count = 0;

    double max_residual = 0;
    double max_abs_f = 0;
    std::vector<double> residuals;  // per sample, for CSV export

    // homogeneous construction
    std::vector<SphereSup> sphere_sups;
    std::vector<double> sup_ratios;
    double expected_ratio = 0;  // 2^{-(d - max d_i)}
    bool decay_consistent = false;

    // phi probe
    std::vector<ProbeVerdict> probes;

    // psi construction
    double alt_cutoff_max_residual = 0;
};

/// Samples the continuous solution q_i(z) = |z|^{d-d_i} phi_i(z/|z|) with
/// phi_i = f conj(f_i) / sum |f_j|^2 on seeded points of the unit polydisc
/// and on shrinking spheres; reports the forcing residual and sup decay.
/// Requires homogeneous inputs with deg f > max deg f_i.
WitnessReport homogeneous_witness(const Polynomial& f, const std::vector<Polynomial>& gens,
                                  const SampleSpec& spec);

/// The q_i values of the homogeneous construction at one point (0 at the
/// origin). Throws if the generators vanish simultaneously at z != 0.
std::vector<std::complex<double>> homogeneous_q_values(
    const Polynomial& f, const std::vector<Polynomial>& gens,
    const std::vector<std::complex<double>>& z);

/// psi(v) = chi(|v|) (1 - v^s) / v^e with the piecewise-linear cutoff chi
/// (0 on [0, 1/2], 1 on [1, inf)); matches (1 - v^s)/v^e wherever
/// |v| >= 1 and is continuous on the whole sphere.
std::complex<double> psi_function_value(std::int64_t e, std::int64_t s,
                                        std::complex<double> v);

/// One parametrized curve t -> z(t): one univariate coordinate polynomial
/// per variable of the ambient ring, plus a display label.
struct ProbePath {
    std::string label;
    std::vector<Polynomial> coords;  // univariate in t
};

/// Estimates lim_{t->0} phi_i(z(t)) per path at t = 2^{-k} with geometric
/// extrapolation; verdict per phi: consistent limit or a witness pair of
/// paths with different limits.
WitnessReport phi_probe(const Polynomial& f, const std::vector<Polynomial>& gens,
                        const std::vector<ProbePath>& paths, const SampleSpec& spec);

/// The two-variable construction for f = z^r w^s over (z^e, w^e) with
/// r, s < e and r + s > e: q_2 = z^{r+s-e} psi(w/z) and
/// q_1 = -z^{r+s-e}((w/z)^e psi(w/z) + (w/z)^s), where psi is the cutoff
/// extension of (1 - v^s)/v^e. Reports max |z^e q_1 + w^e q_2 + z^r w^s|,
/// which cancels identically for any cutoff; a second cutoff is run to
/// demonstrate that.
WitnessReport psi_witness(std::int64_t e, std::int64_t r, std::int64_t s, const SampleSpec& spec);

}  // namespace contclose

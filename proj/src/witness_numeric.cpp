#include "contclose/witness_numeric.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace contclose {

namespace {

using Complex = std::complex<double>;

// mt19937_64 output is pinned by the standard; the mapping to doubles is
// done by hand so reports are bit-identical for a given seed everywhere.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double gaussian() {
        // Box-Muller; the cached second value keeps the stream deterministic.
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 == 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    /// Uniform on the closed unit disc.
    Complex unit_disc() {
        double r = std::sqrt(uniform());
        double a = 2.0 * std::numbers::pi * uniform();
        return {r * std::cos(a), r * std::sin(a)};
    }

    /// Uniform on the real sphere of the given radius in C^m.
    std::vector<Complex> sphere_point(std::size_t m, double radius) {
        std::vector<Complex> z(m);
        double norm2 = 0;
        do {
            norm2 = 0;
            for (auto& c : z) {
                c = {gaussian(), gaussian()};
                norm2 += std::norm(c);
            }
        } while (norm2 == 0);
        double scale = radius / std::sqrt(norm2);
        for (auto& c : z) c *= scale;
        return z;
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0;
};

double norm_of(const std::vector<Complex>& z) {
    double s = 0;
    for (const auto& c : z) s += std::norm(c);
    return std::sqrt(s);
}

std::vector<Complex> q_values_impl(const Polynomial& f, const std::vector<Polynomial>& gens,
                                   const std::vector<std::int64_t>& di, std::int64_t d,
                                   const std::vector<Complex>& z) {
    std::vector<Complex> q(gens.size(), Complex(0));
    double nz = norm_of(z);
    if (nz == 0) return q;
    std::vector<Complex> zh(z);
    for (auto& c : zh) c /= nz;
    double denom = 0;
    std::vector<Complex> gvals(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        gvals[i] = gens[i].evaluate(std::span<const Complex>(zh));
        denom += std::norm(gvals[i]);
    }
    if (denom == 0)
        throw std::runtime_error("generators vanish simultaneously at a nonzero sample; aborting");
    Complex fz = f.evaluate(std::span<const Complex>(zh));
    for (std::size_t i = 0; i < gens.size(); ++i)
        q[i] = std::pow(nz, static_cast<double>(d - di[i])) * fz * std::conj(gvals[i]) / denom;
    return q;
}

}  // namespace

WitnessReport homogeneous_witness(const Polynomial& f, const std::vector<Polynomial>& gens,
                                  const SampleSpec& spec) {
    if (gens.empty()) throw std::invalid_argument("homogeneous_witness needs generators");
    const std::size_t m = f.num_vars();
    if (f.is_zero() || !f.is_homogeneous())
        throw std::invalid_argument("f must be nonzero homogeneous");
    const std::int64_t d = *f.total_degree();
    std::int64_t max_di = 0;
    std::vector<std::int64_t> di;
    for (const auto& g : gens) {
        if (g.num_vars() != m || g.is_zero() || !g.is_homogeneous())
            throw std::invalid_argument("generators must be nonzero homogeneous");
        di.push_back(*g.total_degree());
        max_di = std::max(max_di, di.back());
    }
    if (d <= max_di)
        throw std::invalid_argument("degree condition violated: deg f must exceed max deg f_i");

    WitnessReport rep;
    rep.construction = "homogeneous";
    rep.seed = spec.seed;
    SampleRng rng(spec.seed);

    std::vector<std::vector<Complex>> samples;
    samples.push_back(std::vector<Complex>(m, Complex(0)));  // origin, q_i(0) := 0
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Complex> axis(m, Complex(0));
        axis[j] = 1;
        samples.push_back(std::move(axis));
    }
    while (samples.size() < spec.count) {
        std::vector<Complex> z(m);
        for (auto& c : z) c = rng.unit_disc();
        samples.push_back(std::move(z));
    }
    rep.sample_count = samples.size();

    for (const auto& z : samples) {
        Complex fz = f.evaluate(std::span<const Complex>(z));
        Complex sum = 0;
        std::vector<Complex> q = q_values_impl(f, gens, di, d, z);
        for (std::size_t i = 0; i < gens.size(); ++i)
            sum += q[i] * gens[i].evaluate(std::span<const Complex>(z));
        double resid = std::abs(fz - sum);
        rep.residuals.push_back(resid);
        rep.max_residual = std::max(rep.max_residual, resid);
        rep.max_abs_f = std::max(rep.max_abs_f, std::abs(fz));
    }

    rep.expected_ratio = std::pow(2.0, -static_cast<double>(d - max_di));
    for (int k = 0; k < spec.sphere_levels; ++k) {
        double radius = std::pow(2.0, -k);
        double sup = 0;
        for (std::size_t s = 0; s < spec.sphere_points; ++s) {
            std::vector<Complex> z = rng.sphere_point(m, radius);
            for (const Complex& qi : q_values_impl(f, gens, di, d, z))
                sup = std::max(sup, std::abs(qi));
        }
        rep.sphere_sups.push_back({radius, sup});
    }
    rep.decay_consistent = true;
    for (std::size_t k = 1; k < rep.sphere_sups.size(); ++k) {
        double ratio = rep.sphere_sups[k].sup / rep.sphere_sups[k - 1].sup;
        rep.sup_ratios.push_back(ratio);
        if (std::abs(ratio - rep.expected_ratio) > 0.1) rep.decay_consistent = false;
    }
    return rep;
}

std::vector<Complex> homogeneous_q_values(const Polynomial& f,
                                          const std::vector<Polynomial>& gens,
                                          const std::vector<Complex>& z) {
    std::vector<std::int64_t> di;
    for (const auto& g : gens) di.push_back(g.total_degree().value());
    return q_values_impl(f, gens, di, f.total_degree().value(), z);
}

WitnessReport phi_probe(const Polynomial& f, const std::vector<Polynomial>& gens,
                        const std::vector<ProbePath>& paths, const SampleSpec& spec) {
    if (gens.empty() || paths.empty())
        throw std::invalid_argument("phi_probe needs generators and paths");
    const std::size_t m = f.num_vars();
    for (const auto& p : paths)
        if (p.coords.size() != m)
            throw std::invalid_argument("path coordinate count must match the variables");

    WitnessReport rep;
    rep.construction = "phi-probe";
    rep.seed = spec.seed;

    constexpr int k_start = 6, k_end = 18;
    const double agree_tol = 1e-6;

    // phi values per generator, per path, per sampled t.
    std::vector<std::vector<std::vector<Complex>>> values(
        gens.size(), std::vector<std::vector<Complex>>(paths.size()));
    for (std::size_t pi = 0; pi < paths.size(); ++pi) {
        for (int k = k_start; k <= k_end; ++k) {
            Complex t(std::pow(2.0, -k), 0.0);
            std::vector<Complex> z(m);
            for (std::size_t j = 0; j < m; ++j)
                z[j] = paths[pi].coords[j].evaluate(std::span<const Complex>(&t, 1));
            double denom = 0;
            for (const auto& g : gens) denom += std::norm(g.evaluate(std::span<const Complex>(z)));
            if (denom == 0)
                throw std::runtime_error("path '" + paths[pi].label +
                                         "' hits the common zero locus at t != 0");
            Complex fz = f.evaluate(std::span<const Complex>(z));
            for (std::size_t i = 0; i < gens.size(); ++i)
                values[i][pi].push_back(
                    fz * std::conj(gens[i].evaluate(std::span<const Complex>(z))) / denom);
        }
    }
    rep.sample_count = paths.size() * static_cast<std::size_t>(k_end - k_start + 1);

    for (std::size_t i = 0; i < gens.size(); ++i) {
        ProbeVerdict pv;
        pv.phi_index = i;
        for (std::size_t pi = 0; pi < paths.size(); ++pi) {
            const auto& v = values[i][pi];
            Complex last = v.back();
            Complex d1 = v[v.size() - 1] - v[v.size() - 2];
            Complex d0 = v[v.size() - 2] - v[v.size() - 3];
            bool converged;
            Complex limit;
            if (std::abs(d1) < 1e-12) {
                converged = true;
                limit = last;
            } else if (std::abs(d0) > 0 && std::abs(d1) / std::abs(d0) <= 0.9) {
                // Geometric tail: sum the remaining increments.
                Complex rho = d1 / d0;
                converged = true;
                limit = last + d1 * rho / (Complex(1) - rho);
            } else {
                converged = false;
                limit = last;
            }
            pv.path_limits.push_back(limit);
            pv.path_converged.push_back(converged);
        }
        pv.consistent = true;
        for (std::size_t a = 0; a < paths.size() && pv.consistent; ++a) {
            if (!pv.path_converged[a]) {
                pv.consistent = false;
                pv.witness_paths = {a, a};
            }
            for (std::size_t b = a + 1; b < paths.size() && pv.consistent; ++b)
                if (std::abs(pv.path_limits[a] - pv.path_limits[b]) > agree_tol) {
                    pv.consistent = false;
                    pv.witness_paths = {a, b};
                }
        }
        if (pv.consistent) pv.limit = pv.path_limits[0];
        rep.probes.push_back(std::move(pv));
    }
    return rep;
}

namespace {

double linear_cutoff(double x, double lo, double hi) {
    if (x <= lo) return 0;
    if (x >= hi) return 1;
    return (x - lo) / (hi - lo);
}

double psi_residual(std::int64_t e, std::int64_t r, std::int64_t s, Complex z, Complex w,
                    double cut_lo, double cut_hi) {
    auto ipow = [](Complex b, std::int64_t n) {
        Complex out = 1;
        for (std::int64_t i = 0; i < n; ++i) out *= b;
        return out;
    };
    Complex q1 = 0, q2 = 0;
    if (z != Complex(0)) {
        Complex v = w / z;
        double chi = linear_cutoff(std::abs(v), cut_lo, cut_hi);
        Complex psi = chi == 0 ? Complex(0) : chi * (Complex(1) - ipow(v, s)) / ipow(v, e);
        Complex zpow = ipow(z, r + s - e);
        q2 = zpow * psi;
        q1 = -zpow * (ipow(v, e) * psi + ipow(v, s));
    }
    Complex forcing = ipow(z, e) * q1 + ipow(w, e) * q2 + ipow(z, r) * ipow(w, s);
    return std::abs(forcing);
}

}  // namespace

std::complex<double> psi_function_value(std::int64_t e, std::int64_t s, Complex v) {
    double chi = linear_cutoff(std::abs(v), 0.5, 1.0);
    if (chi == 0) return 0;
    Complex vs = 1, ve = 1;
    for (std::int64_t i = 0; i < s; ++i) vs *= v;
    for (std::int64_t i = 0; i < e; ++i) ve *= v;
    return chi * (Complex(1) - vs) / ve;
}

WitnessReport psi_witness(std::int64_t e, std::int64_t r, std::int64_t s, const SampleSpec& spec) {
    if (!(r >= 1 && s >= 1 && r < e && s < e && r + s > e))
        throw std::invalid_argument("psi construction needs r, s < e and r + s > e");

    WitnessReport rep;
    rep.construction = "psi";
    rep.seed = spec.seed;
    SampleRng rng(spec.seed);

    std::vector<std::pair<Complex, Complex>> samples;
    samples.emplace_back(Complex(0), Complex(0));
    samples.emplace_back(Complex(0), Complex(1));        // z = 0 line
    samples.emplace_back(Complex(0), Complex(0.3, 0.4));
    samples.emplace_back(Complex(1), Complex(0));
    while (samples.size() < spec.count) {
        Complex z = rng.unit_disc(), w = rng.unit_disc();
        samples.emplace_back(z, w);
    }
    rep.sample_count = samples.size();

    for (const auto& [z, w] : samples) {
        double resid = psi_residual(e, r, s, z, w, 0.5, 1.0);
        rep.residuals.push_back(resid);
        rep.max_residual = std::max(rep.max_residual, resid);
        double fz = std::abs(std::pow(std::abs(z), static_cast<double>(r)) *
                             std::pow(std::abs(w), static_cast<double>(s)));
        rep.max_abs_f = std::max(rep.max_abs_f, fz);
        // The cancellation is algebraic in psi, so any continuous cutoff
        // must produce the same (zero) residual.
        rep.alt_cutoff_max_residual =
            std::max(rep.alt_cutoff_max_residual, psi_residual(e, r, s, z, w, 0.25, 0.75));
    }
    return rep;
}

}  // namespace contclose

#include "projtv/measure.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace projtv {

namespace {

double unit_uniform(std::mt19937_64& rng) {
    // Identical across standard libraries, unlike the distribution classes.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double unit_normal(std::mt19937_64& rng) {
    // Box-Muller with deterministic uniforms.
    double u1 = unit_uniform(rng);
    while (u1 <= 1e-300) u1 = unit_uniform(rng);
    const double u2 = unit_uniform(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

RatVec sample_component(const DensityComponent& c, size_t d, std::mt19937_64& rng) {
    std::vector<double> x(d, 0.0);
    if (c.kind == "uniform-box") {
        for (size_t i = 0; i < d; ++i) {
            const double lo = i < c.a.size() ? c.a[i] : -1.0;
            const double hi = i < c.b.size() ? c.b[i] : 1.0;
            x[i] = lo + (hi - lo) * unit_uniform(rng);
        }
    } else if (c.kind == "gaussian") {
        for (size_t i = 0; i < d; ++i) {
            const double mean = i < c.a.size() ? c.a[i] : 0.0;
            const double sd = i < c.b.size() ? c.b[i] : 1.0;
            x[i] = mean + sd * unit_normal(rng);
        }
    } else if (c.kind == "point") {
        for (size_t i = 0; i < d; ++i) x[i] = i < c.a.size() ? c.a[i] : 0.0;
    } else {
        throw std::invalid_argument("demo_measure: unknown density kind '" + c.kind + "'");
    }
    RatVec r(d);
    for (size_t i = 0; i < d; ++i) r[i] = rationalize(x[i], 4096);
    return r;
}

RatVec sample_density(const DensitySpec& spec, std::mt19937_64& rng) {
    if (spec.components.empty()) throw std::invalid_argument("demo_measure: empty density");
    double total = 0;
    for (const auto& c : spec.components) total += c.weight;
    double pick = unit_uniform(rng) * total;
    for (const auto& c : spec.components) {
        pick -= c.weight;
        if (pick <= 0) return sample_component(c, spec.d, rng);
    }
    return sample_component(spec.components.back(), spec.d, rng);
}

}  // namespace

MeasureDemoResult demo_measure(const std::vector<DensitySpec>& densities, size_t d, long v,
                               size_t n_samples, uint64_t seed, const SearchConfig& cfg,
                               size_t sample_cap) {
    if (densities.empty()) throw std::invalid_argument("demo_measure: no densities");
    if (n_samples == 0 || n_samples > sample_cap)
        throw std::invalid_argument("demo_measure: sample count outside (0, cap]");
    if (v < 0 || v >= static_cast<long>(d))
        throw std::invalid_argument("demo_measure: need 0 <= v < d");
    const size_t m = densities.size();
    std::mt19937_64 rng(seed);

    MeasureDemoResult out;
    out.V = (v == static_cast<long>(d) - 1)
                ? hyperplane_at_infinity(d)
                : [&] {
                      RatMat rows;
                      for (long i = 0; i <= v; ++i) {
                          RatVec r(d + 1, Rat(0));
                          r[static_cast<size_t>(i)] = 1;
                          rows.push_back(std::move(r));
                      }
                      return canonicalize(rows, d + 1);
                  }();

    if (m == 1) {
        const long D = (static_cast<long>(d) - v) * (v + 1);
        out.bound = Rat(1, Int(D + 1));
        std::vector<ProjPoint> pts;
        for (size_t i = 0; i < n_samples; ++i)
            pts.push_back(point_from_affine(sample_density(densities[0], rng)));
        PointConfig x = make_config(d, std::move(pts));
        const Int r = ceil_div(Int(n_samples), Int(D + 1));
        out.rs = {r.convert_to<size_t>()};
        SearchOutcome s = search_center_subspace(out.V, x, r.convert_to<long>(), cfg);
        out.samples = {std::move(x)};
        out.W = s.W;
        out.cert = s.cert;
        out.discrete_pass = s.found;
        out.min_fractions = {Rat(Int(s.cert.min_count), Int(n_samples))};
        out.notes = "demonstration only: discrete sample certificate, not a measure certificate";
        return out;
    }

    // Transversal demo: tight sizes with power-of-two part counts.
    const long w = static_cast<long>(m) * (static_cast<long>(d) - v) - 1;
    if (w < 0 || w >= static_cast<long>(d))
        throw std::invalid_argument("demo_measure: w = m(d-v)-1 out of range for this m");
    const long D = (static_cast<long>(d) - v) * (static_cast<long>(d) - w);
    out.bound = Rat(1, Int(D + 1));
    TransversalInstance inst;
    inst.d = d;
    inst.v = v;
    inst.w = w;
    inst.p = 2;
    inst.V = out.V;
    for (size_t j = 0; j < m; ++j) {
        // The largest power-of-two part count whose tight size fits; the
        // full sample is kept (larger parts make witnesses findable).
        size_t rj = 1;
        while (required_points(Int(D), Int(rj * 2)) <= Int(n_samples)) rj *= 2;
        std::vector<ProjPoint> pts;
        for (size_t i = 0; i < n_samples; ++i)
            pts.push_back(point_from_affine(sample_density(densities[j], rng)));
        inst.configs.push_back(make_config(d, std::move(pts)));
        inst.rs.push_back(rj);
    }
    TransversalOutcome t = search_transversal(inst, cfg);
    out.samples = inst.configs;
    out.rs = inst.rs;
    out.W = t.W;
    out.partitions = t.partitions;
    out.cert = t.cert;
    out.discrete_pass = t.found;
    for (size_t j = 0; j < m; ++j) {
        // Each part meets both pieces, so each piece holds >= r_j points.
        const Int guaranteed = t.found ? Int(inst.rs[j]) : Int(0);
        out.min_fractions.push_back(Rat(guaranteed, Int(inst.configs[j].size())));
    }
    out.notes = "demonstration only: discrete sample certificate, not a measure certificate";
    return out;
}

}  // namespace projtv

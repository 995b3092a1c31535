#include "jensenlab/noise.hpp"

#include "jensenlab/rng.hpp"

namespace jensenlab {

ValueVector bounded_noise(const NoiseModel& model, const Group& g, const GroupElement& x) {
    const Bytes enc = g.canonical_encoding(x);
    const std::uint64_t h = hash_bytes(enc);
    ValueVector v(model.dimension);
    for (std::size_t i = 0; i < model.dimension; ++i) {
        const double u01 = unit_interval(mix64(model.seed ^ h ^ static_cast<std::uint64_t>(i)));
        v[i] = model.epsilon * (2.0 * u01 - 1.0);
    }
    return v;
}

GroupFunction pure_noise(const Group& g, const NoiseModel& model) {
    GroupFunction f(
        g, model.dimension,
        [model, g](const GroupElement& x) { return bounded_noise(model, g, x); },
        "noise(eps=" + std::to_string(model.epsilon) + ")");
    return f.with_defect_bound(4.0 * model.epsilon);
}

GroupFunction noisy_jensen(const GroupFunction& j, const NoiseModel& model) {
    if (model.dimension != j.dimension())
        throw std::invalid_argument("noise dimension does not match function dimension");
    const Group g = j.domain();
    GroupFunction f(
        g, j.dimension(),
        [j, model, g](const GroupElement& x) { return j(x) + bounded_noise(model, g, x); },
        j.name() + "+noise(eps=" + std::to_string(model.epsilon) + ")");
    return f.with_defect_bound(4.0 * model.epsilon);
}

}  // namespace jensenlab

#include "jensenlab/group_function.hpp"

namespace jensenlab {

GroupFunction operator+(const GroupFunction& a, const GroupFunction& b) {
    if (!(a.domain() == b.domain())) throw std::domain_error("function domains differ");
    if (a.dimension() != b.dimension()) throw std::domain_error("function dimensions differ");
    GroupFunction f(
        a.domain(), a.dimension(),
        [a, b](const GroupElement& x) { return a(x) + b(x); }, a.name() + "+" + b.name());
    if (a.defect_bound() && b.defect_bound())
        return f.with_defect_bound(*a.defect_bound() + *b.defect_bound());
    return f;
}

GroupFunction stack(const Group& domain, std::vector<GroupFunction> components,
                    std::string name) {
    if (components.empty()) throw std::invalid_argument("stack needs at least one component");
    std::optional<double> bound = 0.0;
    for (const auto& c : components) {
        if (!(c.domain() == domain)) throw std::domain_error("stack component domain differs");
        if (c.dimension() != 1) throw std::domain_error("stack components must be scalar");
        if (bound) {
            if (c.defect_bound())
                bound = std::max(*bound, *c.defect_bound());
            else
                bound.reset();
        }
    }
    const std::size_t d = components.size();
    GroupFunction f(
        domain, d,
        [components](const GroupElement& x) {
            ValueVector v(components.size());
            for (std::size_t i = 0; i < components.size(); ++i) v[i] = components[i](x)[0];
            return v;
        },
        std::move(name));
    // Euclidean norm over d coordinates, each within the scalar bound
    if (bound) return f.with_defect_bound(*bound * std::sqrt(static_cast<double>(d)));
    return f;
}

}  // namespace jensenlab

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "jensenlab/group.hpp"
#include "jensenlab/value_vector.hpp"

namespace jensenlab {

// A function f : G -> R^d with deterministic evaluation (equal elements give
// bit-identical values). A Jensen-defect bound may be attached when one is
// known analytically or has been measured; the stabilizer requires it.
class GroupFunction {
public:
    using Evaluator = std::function<ValueVector(const GroupElement&)>;

    GroupFunction(Group domain, std::size_t dimension, Evaluator eval, std::string name)
        : domain_(std::move(domain)),
          dim_(dimension),
          eval_(std::move(eval)),
          name_(std::move(name)) {}

    const Group& domain() const { return domain_; }
    std::size_t dimension() const { return dim_; }
    const std::string& name() const { return name_; }

    ValueVector operator()(const GroupElement& x) const {
        ValueVector v = eval_(x);
        if (v.dim() != dim_) throw std::logic_error("evaluator returned wrong dimension");
        return v;
    }

    std::optional<double> defect_bound() const { return defect_bound_; }
    GroupFunction with_defect_bound(double c) const {
        GroupFunction f = *this;
        f.defect_bound_ = c;
        return f;
    }

    GroupFunction renamed(std::string name) const {
        GroupFunction f = *this;
        f.name_ = std::move(name);
        return f;
    }

private:
    Group domain_;
    std::size_t dim_;
    Evaluator eval_;
    std::string name_;
    std::optional<double> defect_bound_;
};

// Pointwise sum; defect bounds add when both operands carry one.
GroupFunction operator+(const GroupFunction& a, const GroupFunction& b);

// Stacks scalar functions into a vector-valued one.
GroupFunction stack(const Group& domain, std::vector<GroupFunction> components,
                    std::string name);

}  // namespace jensenlab

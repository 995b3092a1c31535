#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace jensenlab {

// Vector in R^d with the Euclidean norm. Function values live here; every
// component is required to be finite.
class ValueVector {
public:
    ValueVector() = default;
    explicit ValueVector(std::size_t d, double fill = 0.0) : v_(d, fill) { check(); }
    ValueVector(std::initializer_list<double> init) : v_(init) { check(); }
    static ValueVector scalar(double x) { return ValueVector{x}; }

    std::size_t dim() const { return v_.size(); }
    double operator[](std::size_t i) const { return v_[i]; }
    double& operator[](std::size_t i) { return v_[i]; }
    const std::vector<double>& data() const { return v_; }

    ValueVector& operator+=(const ValueVector& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    ValueVector& operator-=(const ValueVector& o) {
        require_same_dim(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    ValueVector& operator*=(double s) {
        for (double& x : v_) x *= s;
        return *this;
    }
    ValueVector& operator/=(double s) {
        for (double& x : v_) x /= s;
        return *this;
    }

    friend ValueVector operator+(ValueVector a, const ValueVector& b) { return a += b; }
    friend ValueVector operator-(ValueVector a, const ValueVector& b) { return a -= b; }
    friend ValueVector operator*(double s, ValueVector a) { return a *= s; }
    friend ValueVector operator/(ValueVector a, double s) { return a /= s; }

    bool operator==(const ValueVector& o) const { return v_ == o.v_; }

    double norm() const {
        double s = 0;
        for (double x : v_) s += x * x;
        return std::sqrt(s);
    }
    double max_abs() const {
        double m = 0;
        for (double x : v_) m = std::max(m, std::fabs(x));
        return m;
    }

private:
    void check() const {
        for (double x : v_)
            if (!std::isfinite(x)) throw std::domain_error("non-finite value vector component");
    }
    void require_same_dim(const ValueVector& o) const {
        if (v_.size() != o.v_.size()) throw std::domain_error("value vector dimension mismatch");
    }

    std::vector<double> v_;
};

inline double distance(const ValueVector& a, const ValueVector& b) { return (a - b).norm(); }

}  // namespace jensenlab

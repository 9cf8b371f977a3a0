#include "vimo/vector.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace vimo {

namespace {

void require_finite(const std::vector<double>& coords) {
    for (double c : coords) {
        if (!std::isfinite(c)) {
            throw std::invalid_argument("Vector: non-finite coordinate");
        }
    }
}

}  // namespace

Vector::Vector(std::initializer_list<double> coords) : coords_(coords) {
    require_finite(coords_);
}

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
    require_finite(coords_);
}

Vector& Vector::operator+=(const Vector& rhs) {
    check_dim(rhs, dim(), "Vector::operator+=");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& rhs) {
    check_dim(rhs, dim(), "Vector::operator-=");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs[i];
    return *this;
}

Vector& Vector::operator*=(double s) {
    for (double& c : coords_) c *= s;
    return *this;
}

bool Vector::is_finite() const {
    for (double c : coords_) {
        if (!std::isfinite(c)) return false;
    }
    return true;
}

std::string Vector::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i > 0) os << ", ";
        os << coords_[i];
    }
    os << ")";
    return os.str();
}

Vector operator+(Vector lhs, const Vector& rhs) {
    lhs += rhs;
    return lhs;
}

Vector operator-(Vector lhs, const Vector& rhs) {
    lhs -= rhs;
    return lhs;
}

Vector operator*(double s, Vector v) {
    v *= s;
    return v;
}

Vector operator-(Vector v) {
    v *= -1.0;
    return v;
}

double dot(const Vector& a, const Vector& b) {
    check_dim(b, a.dim(), "dot");
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

double norm(const Vector& v) { return std::sqrt(dot(v, v)); }

double norm_inf(const Vector& v) {
    double m = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) m = std::max(m, std::abs(v[i]));
    return m;
}

double distance(const Vector& a, const Vector& b) { return norm(a - b); }

double weighted_norm(const Vector& v, const Vector& weights) {
    check_dim(weights, v.dim(), "weighted_norm");
    double s = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (weights[i] <= 0.0) {
            throw std::invalid_argument("weighted_norm: weights must be positive");
        }
        s += weights[i] * v[i] * v[i];
    }
    return std::sqrt(s);
}

Vector basis_vector(std::size_t dim, std::size_t i) {
    Vector e(dim);
    e[i] = 1.0;
    return e;
}

void check_dim(const Vector& v, std::size_t dim, const char* what) {
    if (v.dim() != dim) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(v.dim()) + " vs " + std::to_string(dim) + ")");
    }
}

}  // namespace vimo

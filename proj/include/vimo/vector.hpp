#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace vimo {

/// Dense point of R^n. The same type carries primal points and dual
/// functionals; the pairing between them is the Euclidean inner product.
/// Constructors reject non-finite coordinates.
class Vector {
public:
    Vector() = default;
    explicit Vector(std::size_t dim) : coords_(dim, 0.0) {}
    Vector(std::initializer_list<double> coords);
    explicit Vector(std::vector<double> coords);

    std::size_t dim() const { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    double& operator[](std::size_t i) { return coords_[i]; }

    const std::vector<double>& coords() const { return coords_; }
    auto begin() const { return coords_.begin(); }
    auto end() const { return coords_.end(); }

    Vector& operator+=(const Vector& rhs);
    Vector& operator-=(const Vector& rhs);
    Vector& operator*=(double s);

    bool is_finite() const;
    std::string str() const;

private:
    std::vector<double> coords_;
};

Vector operator+(Vector lhs, const Vector& rhs);
Vector operator-(Vector lhs, const Vector& rhs);
Vector operator*(double s, Vector v);
Vector operator-(Vector v);

double dot(const Vector& a, const Vector& b);
double norm(const Vector& v);
double norm_inf(const Vector& v);
double distance(const Vector& a, const Vector& b);

/// Diagonal-weighted Euclidean norm; weights must be positive.
double weighted_norm(const Vector& v, const Vector& weights);

/// Coordinate basis vector e_i.
Vector basis_vector(std::size_t dim, std::size_t i);

/// Throws std::invalid_argument unless both vectors have dimension `dim`.
void check_dim(const Vector& v, std::size_t dim, const char* what);

}  // namespace vimo

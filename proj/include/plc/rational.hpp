#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace plc {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline int sign(const Rational& x) { return x.sign(); }

/// Dense vector of exact rationals. Cones, rays and points all live here.
using Vector = std::vector<Rational>;

/// Row-major dense matrix.
using Matrix = std::vector<Vector>;

Vector zero_vector(std::size_t dim);
Vector unit_vector(std::size_t dim, std::size_t index);

Rational dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Vector& a, const Rational& factor);
Vector negate(const Vector& a);
bool is_zero(const Vector& a);

/// Clears denominators and divides by the content, giving the unique primitive
/// integer vector on the same open ray. The zero vector maps to itself.
Vector primitive(const Vector& a);

/// True iff b = t * a for some t > 0.
bool positively_parallel(const Vector& a, const Vector& b);

Matrix identity_matrix(std::size_t dim);
Vector multiply(const Matrix& m, const Vector& x);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);

std::size_t rank(Matrix rows);
Rational determinant(Matrix m);

/// Basis of { x : row . x = 0 for every row }, as primitive integer vectors.
std::vector<Vector> null_space(const Matrix& rows, std::size_t dim);

std::string to_string(const Vector& v);

}  // namespace plc

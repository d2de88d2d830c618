#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace lapmotif {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exact rational-valued function on the vertices of a graph, indexed by
// vertex id. The number type keeps every value in reduced canonical form.
using VertexFunction = std::vector<Rational>;

// "a" for integers, "a/b" otherwise.
std::string format_rational(const Rational& q);

// Accepts "a" and "a/b" with optional sign; rejects b = 0 and junk.
Rational parse_rational(const std::string& text);

bool is_integer(const Rational& q);
bool is_integer_valued(const VertexFunction& f);
bool is_zero_function(const VertexFunction& f);

// Exact conversion; throws PreconditionError when out of long long range.
long long to_long_checked(const Int& v);

}  // namespace lapmotif

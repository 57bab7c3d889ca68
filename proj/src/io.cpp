#include <ostream>

#include "k3/poly.hpp"
#include "k3/rational.hpp"

namespace k3 {

std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }
std::ostream& operator<<(std::ostream& os, const PolyQ& p) { return os << p.to_string(); }

} // namespace k3

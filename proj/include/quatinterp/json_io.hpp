#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "quatinterp/formal_poly.hpp"
#include "quatinterp/quaternion.hpp"
#include "quatinterp/sym_interp.hpp"
#include "quatinterp/txyz_poly.hpp"

namespace quatinterp {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Emitters print every floating-point field with 17 significant digits, so
// output is byte-stable and round-trips to the same doubles.
std::string emit(const Quaternion& q);
std::string emit(const FormalPoly& f);
std::string emit(const TxyzPoly& p);
std::string emit(const LagrangeBasis& basis);
std::string emit_points(const std::vector<Quaternion>& pts);
std::string emit_double(double v);

Quaternion parse_quaternion(const std::string& text);
std::vector<Quaternion> parse_points(const std::string& text);
FormalPoly parse_formal(const std::string& text);
TxyzPoly parse_txyz(const std::string& text);

/// Either kind of serialized polynomial, dispatched on the "type" field.
struct ParsedPoly {
    bool is_formal = false;
    FormalPoly formal;
    TxyzPoly txyz;
};
ParsedPoly parse_poly(const std::string& text);

} // namespace quatinterp

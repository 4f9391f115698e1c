#pragma once

#include <stdexcept>
#include <string>

#include "zg/algebra.hpp"
#include "zg/cone.hpp"
#include "zg/padic.hpp"

namespace zg {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Ring file:
///   name <text>
///   rank <h>
///   kind lie|associative|unital
///   identity <u_1> ... <u_h>        (unital only)
///   <i> <j> <k> <value>             (1-based, one nonzero constant per line)
/// '#' starts a comment. The result must pass validate().
StructureConstantAlgebra parse_ring(const std::string& text);
std::string emit_ring(const StructureConstantAlgebra& L);

/// Cone file:
///   T <m> <l>
///   N f_<j> : <m integers>          (j = 0..l)
///   N g_<j> : <m integers>
///   nu : <m integers>
MonomialConeDatum parse_cone(const std::string& text);
std::string emit_cone(const MonomialConeDatum& D);

/// Good-reduction counts: lines "<bitmask> <count>", count a Laurent polynomial
/// in p such as "p^2-2p+1" or a plain integer.
GoodReductionCounts parse_grc(const std::string& text);
TPPolynomial parse_p_polynomial(const std::string& text);

/// Cone-integral file: one polynomial per line ("c:e_1,...,e_m; ..."), f_0, g_0,
/// then f_i, g_i pairs.
ConeIntegralData parse_cint(const std::string& text);
std::string emit_cint(const ConeIntegralData& D);

std::string read_file(const std::string& path);

}  // namespace zg

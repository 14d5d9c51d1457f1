#ifndef VGLAB_DSL_HPP
#define VGLAB_DSL_HPP

#include <string>
#include <utility>

#include "vglab/bundle.hpp"

namespace vglab {

/* Bundle spec grammar:
 *
 *   spec  := sum ('@P' N)?             ambient tag, default P^2
 *   sum   := term ('+' term)*
 *   term  := atom ('^' K)?             K >= 1 copies
 *   atom  := 'O(' D ')' | 'Omega(' K ')' | 'Sym2Omega(' K ')'
 *          | 'case:' ID ('@P' N)? | coker
 *   coker := 'coker{' field (';' field)* '}'
 *   field := 'n=' N | 'F2=' [D,..] | 'F1=' [D,..] | 'F0=' [D,..]
 *          | 'A=' rows | 'A1=' rows | 'A2=' rows
 *
 * Matrix rows are [[entry, entry, ..], ..] over F0 (A) resp. F1 (A2), with
 * entries in polynomial syntax, e.g. "x0^2*x1 - 3*x2^3".  Explicit cokernels
 * are validated on parse: grading, A1*A2 = 0, and sampled fiber ranks. */
BundleSpec parse_spec(const std::string& text);

// "a..b" with a <= b; a bare integer means the one-twist range
std::pair<int, int> parse_twist_range(const std::string& text);

// "P;Q", each point "a:b:c" or "a,b,c"; two distinct points of P^n
std::pair<ProjPoint, ProjPoint> parse_line_points(const std::string& text, int n);

} // namespace vglab

#endif

#pragma once

#include <string>
#include <vector>

namespace skewfq {

/// Descending powers of `var`; unit coefficients are omitted, single-term
/// coefficients are joined with `*`, anything else is parenthesized.
template <class Elem>
std::string format_polynomial(const std::vector<Elem>& coeffs, char var) {
  std::string out;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    const Elem& c = coeffs[i];
    if (c.is_zero()) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += to_string(c);
      continue;
    }
    if (!c.is_one()) {
      out += c.term_count() == 1 ? to_string(c) : "(" + to_string(c) + ")";
      out += '*';
    }
    out += var;
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

}  // namespace skewfq

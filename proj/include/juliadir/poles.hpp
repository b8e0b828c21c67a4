#pragma once

#include <optional>
#include <string>
#include <vector>

#include "juliadir/bigint.hpp"
#include "juliadir/numerics.hpp"

namespace juliadir {

enum class OrderTag { Zero, Finite, Infinite };

struct PoleEntry {
  Complex a;        // pole location (inf components when not representable)
  double theta;     // argument of a
  double log_r;     // ln |a|, exact-ish even when a overflows
  double log_m;     // ln of the multiplicity (+inf when beyond double range)
  double m_value;   // multiplicity as a double (may be +inf)
  std::optional<BigUint> m_exact;
};

struct PoleConfiguration {
  OrderTag tag = OrderTag::Finite;
  double rho = 1.0;  // meaningful for OrderTag::Finite
  std::string source;  // "paper-recursion" or "mild-variant"
  std::vector<PoleEntry> entries;  // sorted by radius

  // Entries whose location fits in doubles (ln r <= 700), the only ones a
  // pointwise evaluator can use.
  PoleConfiguration representable() const {
    PoleConfiguration out = *this;
    out.entries.clear();
    for (const auto& e : entries) {
      if (e.log_r <= 700.0 && std::isfinite(e.m_value)) out.entries.push_back(e);
    }
    return out;
  }
};

}  // namespace juliadir

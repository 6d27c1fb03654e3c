#pragma once

#include <optional>
#include <string>

#include "carnot/error.hpp"
#include "carnot/rational.hpp"

namespace carnot {

enum class Target { Filling, Divergence };
enum class Relation { Equivalent, AtMost, AtLeast, StrictlyAbove, Unknown };

/// One asymptotic statement: F^m(l) or Div^m(r) related to l^exponent or r^exponent.
struct GrowthBound {
  Target target = Target::Filling;
  int m = 0;
  std::optional<Rational> exponent;  // absent only for Relation::Unknown
  Relation relation = Relation::Unknown;
  std::string source;
  std::string note;

  friend bool operator==(const GrowthBound&, const GrowthBound&) = default;
};

inline const char* to_string(Target t) { return t == Target::Filling ? "F" : "Div"; }

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::Equivalent: return "equivalent";
    case Relation::AtMost: return "at_most";
    case Relation::AtLeast: return "at_least";
    case Relation::StrictlyAbove: return "strictly_above";
    case Relation::Unknown: return "unknown";
  }
  throw internal_error("bad relation");
}

inline const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::Equivalent: return "~";
    case Relation::AtMost: return "<=";
    case Relation::AtLeast: return ">=";
    case Relation::StrictlyAbove: return ">!";
    case Relation::Unknown: return "?";
  }
  throw internal_error("bad relation");
}

}  // namespace carnot

#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bimclp/rational.hpp"

namespace bimclp {

using Dim = std::string;
using Coefficients = std::map<Dim, Rational>;
using Valuation = std::map<Dim, Rational>;

/// Stored relation of a normalized halfspace `a.x <= b` or `a.x < b`.
enum class Relation { LessEq, Less };

/// Relation as written by a user; >= and > are normalized away on construction.
enum class Comparison { Le, Lt, Ge, Gt };

std::string_view to_string(Comparison c);

/// One linear inequality `sum(coeff[d] * d) rel bound`.
///
/// Construction normalizes >=/> to <=/< and scales the row so that the first
/// nonzero coefficient (in dimension-name order) has magnitude 1. Two
/// halfspaces denoting the same set therefore compare equal.
class Halfspace {
 public:
  Halfspace(Coefficients coefficients, Comparison cmp, Rational bound);

  /// `dim cmp bound`, e.g. axis("X", Comparison::Ge, 3) for X >= 3.
  static Halfspace axis(const Dim& dim, Comparison cmp, Rational bound);

  const Coefficients& coefficients() const noexcept { return coefficients_; }
  const Rational& bound() const noexcept { return bound_; }
  Relation relation() const noexcept { return relation_; }
  bool strict() const noexcept { return relation_ == Relation::Less; }

  Rational coefficient(const Dim& dim) const;
  bool mentions(const Dim& dim) const { return coefficients_.contains(dim); }

  /// The dimension of an axis-aligned halfspace, if it has exactly one.
  std::optional<Dim> single_dim() const;

  /// Throws std::out_of_range when the valuation lacks a mentioned dimension.
  bool contains(const Valuation& point) const;

  /// Readable form, e.g. "X >= 3", "X - Y < 0", "2*X + Y <= 7/2".
  std::string to_string() const;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend auto operator<=>(const Halfspace& a, const Halfspace& b) {
    if (auto c = a.coefficients_ <=> b.coefficients_; c != 0) return c;
    if (auto c = a.bound_ <=> b.bound_; c != 0) return c;
    return a.relation_ <=> b.relation_;
  }

 private:
  Halfspace() = default;
  friend Halfspace negate(const Halfspace& h);

  void normalize();

  Coefficients coefficients_;
  Rational bound_;
  Relation relation_ = Relation::LessEq;
};

/// Set complement: not(a.x <= b) is a.x > b, not(a.x < b) is a.x >= b.
Halfspace negate(const Halfspace& h);

/// Parses `<var><op><decimal>` with op one of >=, >, <=, < (spaces allowed).
struct AxisConstraint {
  Dim var;
  Comparison cmp;
  Rational value;

  bool holds(const Rational& x) const;
  Halfspace halfspace() const { return Halfspace::axis(var, cmp, value); }
};
AxisConstraint parse_axis_constraint(std::string_view text);

/// A conjunction of halfspaces over an ordered set of named dimensions.
/// The empty conjunction is the whole space.
class LinSystem {
 public:
  LinSystem() = default;
  explicit LinSystem(std::vector<Dim> dims);
  LinSystem(std::vector<Dim> dims, std::vector<Halfspace> halfspaces);

  /// Throws std::invalid_argument if `h` mentions a dimension not in dims().
  void add(Halfspace h);

  const std::vector<Dim>& dims() const noexcept { return dims_; }
  const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }
  std::size_t size() const noexcept { return halfspaces_.size(); }
  bool empty() const noexcept { return halfspaces_.empty(); }
  bool has_dim(const Dim& dim) const;

  /// Set when elimination produced a false ground residual (e.g. 3 < 3).
  bool contradictory() const noexcept { return contradictory_; }

  bool contains(const Valuation& point) const;

  friend bool operator==(const LinSystem&, const LinSystem&) = default;

 private:
  friend LinSystem eliminate(const LinSystem& s, const Dim& v);

  std::vector<Dim> dims_;
  std::vector<Halfspace> halfspaces_;
  bool contradictory_ = false;
};

/// Conjunction of two systems over the same dims, `a`'s halfspaces first.
LinSystem conjoin(const LinSystem& a, const LinSystem& b);

/// One Fourier-Motzkin step: the exact projection of `s` with `v` removed.
LinSystem eliminate(const LinSystem& s, const Dim& v);

bool is_feasible(const LinSystem& s);

/// True iff every point of `s` satisfies `h`.
bool entails(const LinSystem& s, const Halfspace& h);

/// Drops halfspaces implied by the remaining ones, scanning in order.
LinSystem prune_redundant(const LinSystem& s);

struct Bound {
  Rational value;
  bool open = false;

  friend bool operator==(const Bound&, const Bound&) = default;
};

/// Per-dimension extent; a missing bound means unbounded on that side.
struct Interval {
  std::optional<Bound> lower;
  std::optional<Bound> upper;

  bool bounded() const { return lower && upper; }
  bool contains(const Rational& x) const;
  /// "[1, 4)", "(-inf, -4)", "[0, 0]"
  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Tightest bounds of the projection of `s` onto `v`.
/// Throws std::domain_error when `s` is infeasible.
Interval interval_of(const LinSystem& s, const Dim& v);

}  // namespace bimclp

#ifndef MCALG_SYNTAX_HPP
#define MCALG_SYNTAX_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace mcalg {

/// Ordered attribute-name -> type-name pairs. Order is part of the syntax.
using AttrMap = std::vector<std::pair<std::string, std::string>>;

struct ClassExists {
  std::string cls;
  auto operator<=>(const ClassExists&) const = default;
};

struct AttrTyped {
  std::string cls;
  std::string attr;
  std::string type;
  auto operator<=>(const AttrTyped&) const = default;
};

/// The class carries exactly the listed attributes, no more.
struct AttrComplete {
  std::string cls;
  AttrMap attrs;
  auto operator<=>(const AttrComplete&) const = default;
};

/// One atomic requirement a model imposes on a system.
using Constraint = std::variant<ClassExists, AttrTyped, AttrComplete>;

/// Class name every constraint is about.
const std::string& constrained_class(const Constraint& c);

/// Debug form, e.g. `AttrTyped(Person,name,String)`.
std::string to_string(const Constraint& c);

/// An ordered list of constraints. The order is significant for syntactic
/// equality and rendering; it never affects the denotation.
class Model {
 public:
  Model() = default;
  explicit Model(std::vector<Constraint> constraints)
      : constraints_(std::move(constraints)) {}

  std::span<const Constraint> constraints() const { return constraints_; }
  std::size_t size() const { return constraints_.size(); }
  bool empty() const { return constraints_.empty(); }

  /// Syntactic equality: element-wise, in order.
  friend bool operator==(const Model&, const Model&) = default;

 private:
  std::vector<Constraint> constraints_;
};

bool syntactic_eq(const Model& m1, const Model& m2);

/// Sorted, duplicate-free constraint list. Two models with the same
/// canonical form have the same denotation in every universe.
std::vector<Constraint> canonical_form(const Model& m);

enum class Severity { error, warning };

struct Location {
  std::size_t line = 0;
  std::size_t column = 0;
  std::size_t end_line = 0;
  std::size_t end_column = 0;
};

struct Diagnostic {
  Severity severity = Severity::error;
  std::string message;
  std::optional<Location> location;
};

/// `error: <msg> at <line>:<col>`, or without the location suffix when
/// the diagnostic is not tied to source text.
std::string format_diagnostic(const Diagnostic& d);
std::ostream& operator<<(std::ostream& os, const Diagnostic& d);

struct ParseResult {
  std::optional<Model> model;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return model.has_value(); }
};

/// Grammar:
///   model := decl*
///   decl  := ["complete"] "class" IDENT "{" [attr ("," attr)*] "}"
///   attr  := IDENT ":" IDENT
/// `class C { a: T }` expands to ClassExists(C), AttrTyped(C,a,T); the
/// `complete` form appends AttrComplete(C,{a->T}). `//` starts a comment.
/// Keywords are contextual, so any identifier may name a class, attribute
/// or type.
ParseResult parse(std::string_view text);

bool is_identifier(std::string_view name);

struct WellFormedness {
  bool ok = true;
  std::vector<Diagnostic> diagnostics;
};

/// Lexical/structural check only. Contradictory models are well-formed.
WellFormedness well_formed(const Model& m);

/// Rewrites m into a concatenation of declaration expansions by inserting
/// the constraints each declaration implies (a ClassExists ahead of an
/// attribute that cannot join the preceding declaration, the ClassExists
/// and AttrTyped entries ahead of a detached AttrComplete). Preserves the
/// denotation.
Model normalize(const Model& m);

/// Canonical text; parse(render(m)) == normalize(m).
std::string render(const Model& m);

}  // namespace mcalg

#endif  // MCALG_SYNTAX_HPP

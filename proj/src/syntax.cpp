#include "mcalg/syntax.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mcalg {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// One source declaration: `[complete] class C { attrs }`.
struct Decl {
  std::string cls;
  AttrMap attrs;
  bool complete = false;
};

bool has_attr(const AttrMap& attrs, const std::string& name) {
  return std::any_of(attrs.begin(), attrs.end(),
                     [&](const auto& p) { return p.first == name; });
}

// Greedy grouping of a constraint list into declarations. A constraint
// joins the open declaration when the expansion rule allows it; otherwise
// it opens a new one, which is where normalization inserts constraints.
std::vector<Decl> group(const Model& m) {
  std::vector<Decl> decls;
  bool open = false;
  for (const auto& c : m.constraints()) {
    std::visit(
        overloaded{
            [&](const ClassExists& ce) {
              decls.push_back(Decl{ce.cls, {}, false});
              open = true;
            },
            [&](const AttrTyped& at) {
              if (open && decls.back().cls == at.cls &&
                  !has_attr(decls.back().attrs, at.attr)) {
                decls.back().attrs.emplace_back(at.attr, at.type);
                return;
              }
              decls.push_back(Decl{at.cls, {{at.attr, at.type}}, false});
              open = true;
            },
            [&](const AttrComplete& ac) {
              if (open && decls.back().cls == ac.cls &&
                  decls.back().attrs == ac.attrs) {
                decls.back().complete = true;
              } else {
                decls.push_back(Decl{ac.cls, ac.attrs, true});
              }
              open = false;
            },
        },
        c);
  }
  return decls;
}

}  // namespace

const std::string& constrained_class(const Constraint& c) {
  return std::visit([](const auto& x) -> const std::string& { return x.cls; },
                    c);
}

std::string to_string(const Constraint& c) {
  return std::visit(
      overloaded{
          [](const ClassExists& ce) { return "ClassExists(" + ce.cls + ")"; },
          [](const AttrTyped& at) {
            return "AttrTyped(" + at.cls + "," + at.attr + "," + at.type + ")";
          },
          [](const AttrComplete& ac) {
            std::string s = "AttrComplete(" + ac.cls + ",{";
            for (std::size_t i = 0; i < ac.attrs.size(); ++i) {
              if (i > 0) s += ",";
              s += ac.attrs[i].first + "->" + ac.attrs[i].second;
            }
            return s + "})";
          },
      },
      c);
}

bool syntactic_eq(const Model& m1, const Model& m2) { return m1 == m2; }

std::vector<Constraint> canonical_form(const Model& m) {
  std::vector<Constraint> out(m.constraints().begin(), m.constraints().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_diagnostic(const Diagnostic& d) {
  std::string s = d.severity == Severity::error ? "error: " : "warning: ";
  s += d.message;
  if (d.location) {
    s += " at " + std::to_string(d.location->line) + ":" +
         std::to_string(d.location->column);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Diagnostic& d) {
  return os << format_diagnostic(d);
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char ch) {
    return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z');
  };
  auto digit = [](char ch) { return ch >= '0' && ch <= '9'; };
  if (!alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(), [&](char ch) {
    return alpha(ch) || digit(ch) || ch == '_';
  });
}

WellFormedness well_formed(const Model& m) {
  WellFormedness result;
  auto fail = [&](std::size_t index, const std::string& what) {
    result.ok = false;
    result.diagnostics.push_back(
        Diagnostic{Severity::error,
                   "constraint " + std::to_string(index + 1) + ": " + what,
                   std::nullopt});
  };
  auto check_name = [&](std::size_t index, const std::string& kind,
                        const std::string& name) {
    if (!is_identifier(name)) {
      fail(index, "invalid " + kind + " name '" + name + "'");
    }
  };

  const auto constraints = m.constraints();
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    std::visit(overloaded{
                   [&](const ClassExists& ce) { check_name(i, "class", ce.cls); },
                   [&](const AttrTyped& at) {
                     check_name(i, "class", at.cls);
                     check_name(i, "attribute", at.attr);
                     check_name(i, "type", at.type);
                   },
                   [&](const AttrComplete& ac) {
                     check_name(i, "class", ac.cls);
                     std::set<std::string> seen;
                     for (const auto& [attr, type] : ac.attrs) {
                       check_name(i, "attribute", attr);
                       check_name(i, "type", type);
                       if (!seen.insert(attr).second) {
                         fail(i, "duplicate attribute '" + attr +
                                     "' in complete class " + ac.cls);
                       }
                     }
                   },
               },
               constraints[i]);
  }
  return result;
}

Model normalize(const Model& m) {
  std::vector<Constraint> out;
  for (const auto& d : group(m)) {
    out.push_back(ClassExists{d.cls});
    for (const auto& [attr, type] : d.attrs) {
      out.push_back(AttrTyped{d.cls, attr, type});
    }
    if (d.complete) out.push_back(AttrComplete{d.cls, d.attrs});
  }
  return Model(std::move(out));
}

std::string render(const Model& m) {
  if (auto wf = well_formed(m); !wf.ok) {
    throw std::invalid_argument("render: " + wf.diagnostics.front().message);
  }
  std::ostringstream os;
  for (const auto& d : group(m)) {
    if (d.complete) os << "complete ";
    os << "class " << d.cls << " {";
    for (std::size_t i = 0; i < d.attrs.size(); ++i) {
      os << (i == 0 ? " " : ", ") << d.attrs[i].first << ": "
         << d.attrs[i].second;
    }
    os << " }\n";
  }
  return os.str();
}

}  // namespace mcalg

#ifndef GCAT_BASE_HPP
#define GCAT_BASE_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcat {

// Thrown on malformed input, unresolved references, signature mismatches.
// Axiom violations are not exceptions; they go into a ValidationReport.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline void str_append(std::ostringstream &) {}
template <typename T, typename... Ts>
void str_append(std::ostringstream &os, const T &head, const Ts &...tail) {
  os << head;
  str_append(os, tail...);
}
} // namespace detail

template <typename... Ts> std::string str(const Ts &...parts) {
  std::ostringstream os;
  detail::str_append(os, parts...);
  return os.str();
}

enum class ViolationKind { Format, Axiom };

struct Violation {
  ViolationKind kind = ViolationKind::Axiom;
  std::string rule;  // which axiom or format rule failed
  std::string where; // offending indices / names
};

struct ValidationReport {
  std::vector<Violation> items;

  bool ok() const { return items.empty(); }

  void axiom(std::string rule, std::string where) {
    items.push_back({ViolationKind::Axiom, std::move(rule), std::move(where)});
  }
  void format(std::string rule, std::string where) {
    items.push_back({ViolationKind::Format, std::move(rule), std::move(where)});
  }
  void merge(const ValidationReport &other, const std::string &prefix) {
    for (const auto &v : other.items)
      items.push_back({v.kind, prefix + v.rule, v.where});
  }
  bool has_format_errors() const {
    for (const auto &v : items)
      if (v.kind == ViolationKind::Format)
        return true;
    return false;
  }
  std::string to_string() const {
    std::ostringstream os;
    for (const auto &v : items)
      os << (v.kind == ViolationKind::Format ? "[format] " : "[axiom] ")
         << v.rule << ": " << v.where << "\n";
    return os.str();
  }
};

// Size caps keeping exhaustive checks and subgroup enumeration tractable.
// Configuration, not constants: the CLI exposes them as flags.
struct Limits {
  int max_group_order = 12;
  int max_objects = 8;
  int max_morphisms = 40;
};

} // namespace gcat

#endif

#pragma once

// Spec files and built-in presets. A spec names a backend, an optional
// Serre subcategory and a set of named objects; see docs/spec-format.md.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qcat/abcat.hpp"
#include "qcat/serre.hpp"

namespace qcat::cli {

struct Workspace {
  BackendPtr backend;
  SerreSpec serre;
  std::vector<std::pair<std::string, Obj>> objects;

  /// Named object, simple label, "unit" (tensor backends) or "0".
  /// Throws UnknownObject.
  Obj object(const std::string& name) const;
};

/// "pathA<n>", "repz<n>", "matvec:<b1>,<b2>,..." with an optional
/// "@<field>" suffix. Throws InvalidArgument for unknown names.
Workspace preset(const std::string& name);
bool looks_like_preset(const std::string& name);

/// Parses spec JSON; errors carry line and column. `origin` prefixes
/// messages.
Workspace parse_spec(std::string_view text, const std::string& origin = "<spec>");

/// A preset name or a path to a spec file.
Workspace load(const std::string& spec);

/// Comma separated labels; "" and "none" give the empty subcategory.
SerreSpec parse_serre(const BackendPtr& b, const std::string& labels);

}  // namespace qcat::cli

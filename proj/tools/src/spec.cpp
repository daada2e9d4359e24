#include "qcat_cli/spec.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qcat/io.hpp"
#include "qcat/monoidal.hpp"

namespace qcat::cli {

using io::Json;

namespace {

[[noreturn]] void parse_fail(const std::string& where, const std::string& msg) {
  fail(ErrorCode::ParseError, where + ": " + msg);
}

std::size_t to_size(std::string_view s, const std::string& what) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc() && p == s.data() + s.size() && !s.empty(), ErrorCode::InvalidArgument,
          "bad number '" + std::string(s) + "' in " + what);
  return v;
}

std::vector<std::size_t> size_list(std::string_view s, const std::string& what) {
  std::vector<std::size_t> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(to_size(s.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

// Smallest prime p with n | p - 1.
std::uint32_t split_prime(std::uint32_t n) {
  for (std::uint32_t p = n + 1;; p += 1) {
    bool prime = p > 1;
    for (std::uint32_t d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime && (p - 1) % n == 0) return p;
  }
}

Mat scalar_1x1(const Field& f) { return Mat::identity(f, 1); }

Workspace path_preset(std::size_t n, std::optional<Field> field) {
  require(n >= 1, ErrorCode::EmptyBackend, "pathA0 has no vertices");
  const Field f = field.value_or(Field::prime(2));
  std::vector<Arrow> arrows;
  for (std::size_t v = 0; v + 1 < n; ++v) arrows.push_back({v, v + 1, ""});
  Workspace w{Backend::path_algebra(f, n, arrows), SerreSpec{}, {}};
  w.serre = SerreSpec::none(w.backend);
  // Interval modules M<i><j>: k on vertices i..j, identities between them.
  if (n <= 9) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<std::size_t> dims(n, 0);
        for (std::size_t v = i; v <= j; ++v) dims[v] = 1;
        std::vector<Mat> maps;
        for (std::size_t a = 0; a + 1 < n; ++a) {
          maps.push_back(a >= i && a < j ? scalar_1x1(f) : Mat(f, dims[a + 1], dims[a]));
        }
        w.objects.emplace_back("M" + std::to_string(i + 1) + std::to_string(j + 1),
                               Obj(w.backend, std::move(dims), std::move(maps)));
      }
    }
  }
  return w;
}

Workspace group_preset(std::uint32_t n, std::optional<Field> field) {
  require(n >= 1, ErrorCode::EmptyBackend, "repz0 is not a group");
  const Field f = field.value_or(n <= 2 ? Field::rationals() : Field::prime(split_prime(n)));
  // W<k> carries the generator to the k-th power of the root, so W<n> is
  // the trivial representation.
  std::vector<NamedCharacter> chars;
  for (std::uint32_t k = 1; k <= n; ++k) chars.push_back({"W" + std::to_string(k), {k % n}});
  Workspace w{Backend::group_algebra(f, {n}, chars), SerreSpec{}, {}};
  w.serre = SerreSpec::none(w.backend);
  Mat shift(f, n, n);
  for (std::uint32_t i = 0; i < n; ++i) shift.set((i + 1) % n, i, 1L);
  w.objects.emplace_back("R", Obj(w.backend, {n}, {shift}));
  return w;
}

Workspace matvec_preset(std::vector<std::size_t> blocks, std::optional<Field> field) {
  const Field f = field.value_or(Field::rationals());
  Workspace w{Backend::matvec(f, std::move(blocks)), SerreSpec{}, {}};
  w.serre = SerreSpec::none(w.backend);
  return w;
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) parse_fail(where, std::string("missing '") + key + "'");
  return *it;
}

std::size_t get_size(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) parse_fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

BackendPtr backend_from_json(const Json& j, const std::string& where, Workspace& preset_out,
                             bool& from_preset) {
  if (j.is_string()) {
    preset_out = preset(j.get<std::string>());
    from_preset = true;
    return preset_out.backend;
  }
  if (!j.is_object()) parse_fail(where, "backend must be a preset name or an object");
  const std::string kind = member(j, "kind", where).get<std::string>();
  const Field f = j.contains("field") ? Field::parse(j["field"].get<std::string>())
                                      : Field::rationals();
  if (kind == "path") {
    const std::size_t n = get_size(member(j, "vertices", where), where + "/vertices");
    std::vector<Arrow> arrows;
    const Json arr = j.value("arrows", Json::array());
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string w = where + "/arrows/" + std::to_string(i);
      const Json& a = arr[i];
      std::size_t from = 0, to = 0;
      std::string name;
      if (a.is_array() && a.size() == 2) {
        from = get_size(a[0], w);
        to = get_size(a[1], w);
      } else if (a.is_object()) {
        from = get_size(member(a, "from", w), w + "/from");
        to = get_size(member(a, "to", w), w + "/to");
        name = a.value("name", "");
      } else {
        parse_fail(w, "arrow must be [from, to] or {\"from\", \"to\", \"name\"}");
      }
      if (from == 0 || to == 0) parse_fail(w, "vertices are numbered from 1");
      arrows.push_back({from - 1, to - 1, name});
    }
    return Backend::path_algebra(f, n, std::move(arrows));
  }
  if (kind == "group") {
    std::vector<std::uint32_t> orders;
    for (const auto& o : member(j, "orders", where)) orders.push_back(static_cast<std::uint32_t>(get_size(o, where + "/orders")));
    std::vector<NamedCharacter> chars;
    if (j.contains("characters")) {
      for (auto it = j["characters"].begin(); it != j["characters"].end(); ++it) {
        NamedCharacter c{it.key(), {}};
        for (const auto& e : *it) c.exponents.push_back(static_cast<std::uint32_t>(get_size(e, where + "/characters")));
        chars.push_back(std::move(c));
      }
    }
    return Backend::group_algebra(f, std::move(orders), std::move(chars));
  }
  if (kind == "matvec") {
    std::vector<std::size_t> blocks;
    for (const auto& b : member(j, "blocks", where)) blocks.push_back(get_size(b, where + "/blocks"));
    require(!blocks.empty(), ErrorCode::EmptyBackend, where + ": matvec needs at least one block");
    return Backend::matvec(f, std::move(blocks));
  }
  parse_fail(where + "/kind", "unknown backend kind '" + kind + "'");
}

}  // namespace

Obj Workspace::object(const std::string& name) const {
  for (const auto& [n, o] : objects) {
    if (n == name) return o;
  }
  if (name == "0") return Obj::zero(backend);
  if (name == "unit" && is_tensor_backend(*backend)) return unit(backend);
  if (auto s = backend->simple_index(name)) return Obj::simple(backend, *s);
  fail(ErrorCode::UnknownObject, "unknown object '" + name + "'");
}

bool looks_like_preset(const std::string& name) {
  return name.starts_with("pathA") || name.starts_with("repz") || name.starts_with("matvec:");
}

Workspace preset(const std::string& full) {
  std::string name = full;
  std::optional<Field> field;
  if (const auto at = full.find('@'); at != std::string::npos) {
    name = full.substr(0, at);
    field = Field::parse(full.substr(at + 1));
  }
  if (name.starts_with("pathA")) return path_preset(to_size(name.substr(5), full), field);
  if (name.starts_with("repz")) {
    return group_preset(static_cast<std::uint32_t>(to_size(name.substr(4), full)), field);
  }
  if (name.starts_with("matvec:")) return matvec_preset(size_list(name.substr(7), full), field);
  fail(ErrorCode::InvalidArgument, "unknown preset '" + full + "'");
}

SerreSpec parse_serre(const BackendPtr& b, const std::string& labels) {
  if (labels.empty() || labels == "none") return SerreSpec::none(b);
  if (labels == "all") return SerreSpec::all(b);
  std::vector<std::string> out;
  std::stringstream ss(labels);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return SerreSpec::from_labels(b, out);
}

Workspace parse_spec(std::string_view text, const std::string& origin) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (const auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    fail(ErrorCode::ParseError,
         origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + what);
  }
  try {
    if (!j.is_object()) parse_fail(origin, "spec must be a JSON object");
    Workspace w;
    bool from_preset = false;
    w.backend = backend_from_json(member(j, "backend", origin), origin + "/backend", w, from_preset);
    if (!from_preset) w.serre = SerreSpec::none(w.backend);
    if (j.contains("serre")) {
      const Json& s = j["serre"];
      if (!s.is_array()) parse_fail(origin + "/serre", "expected a list of simple labels");
      w.serre = SerreSpec::from_labels(w.backend, s.get<std::vector<std::string>>());
    }
    if (j.contains("objects")) {
      const Json& objs = j["objects"];
      if (!objs.is_object()) parse_fail(origin + "/objects", "expected an object of named objects");
      for (auto it = objs.begin(); it != objs.end(); ++it) {
        try {
          Obj o = io::obj_from_json(w.backend, *it);
          bool replaced = false;
          for (auto& [n, existing] : w.objects) {
            if (n == it.key()) {
              existing = o;
              replaced = true;
            }
          }
          if (!replaced) w.objects.emplace_back(it.key(), std::move(o));
        } catch (const Error& e) {
          fail(e.code(), origin + "/objects/" + it.key() + ": " + e.what());
        }
      }
    }
    return w;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, origin + ": " + e.what());
  }
}

Workspace load(const std::string& spec) {
  namespace fs = std::filesystem;
  if (!fs::exists(spec) && looks_like_preset(spec)) return preset(spec);
  std::ifstream in(spec, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::ParseError, spec + ": cannot read spec file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec(buf.str(), spec);
}

}  // namespace qcat::cli

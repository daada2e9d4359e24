#include "qcat/io.hpp"

namespace qcat::io {

namespace {

Scalar scalar_from_json(const Field& f, const Json& j) {
  if (j.is_number_integer()) return Scalar(f, j.get<long>());
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  fail(ErrorCode::ParseError, "matrix entries must be integers or \"p/q\" strings, got " + j.dump());
}

Json grid_of(const Obj& x, std::size_t block) {
  const auto& b = *x.backend();
  const std::size_t n = b.blocks()[block];
  Json g = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(x.dim(b.vertex_of({block, i, j})));
    g.push_back(row);
  }
  return g;
}

const Json& field_of(const Json& j, const char* key) {
  auto it = j.find(key);
  require(it != j.end(), ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return *it;
}

std::vector<Mat> arrow_maps(const BackendPtr& b, const Json& j, const std::vector<std::size_t>& dims) {
  std::vector<Mat> maps;
  const auto& arrows = b->arrows();
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const auto& a = arrows[i];
    const std::size_t r = dims[a.target], c = dims[a.source];
    if (j.is_null()) {
      maps.emplace_back(b->field(), r, c);
    } else if (j.is_array()) {
      require(j.size() == arrows.size(), ErrorCode::ParseError,
              "expected " + std::to_string(arrows.size()) + " arrow matrices");
      maps.push_back(mat_from_json(b->field(), j[i], r, c));
    } else if (j.is_object()) {
      auto it = j.find(a.name);
      maps.push_back(it == j.end() ? Mat(b->field(), r, c) : mat_from_json(b->field(), *it, r, c));
    } else {
      fail(ErrorCode::ParseError, "arrow matrices must be a list or an object");
    }
  }
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      bool known = false;
      for (const auto& a : arrows) known = known || a.name == it.key();
      require(known, ErrorCode::ParseError, "unknown arrow '" + it.key() + "'");
    }
  }
  return maps;
}

}  // namespace

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (const auto& row : m.to_strings()) out.push_back(row);
  return out;
}

Json to_json(const Obj& x) {
  const auto& b = *x.backend();
  Json out;
  switch (b.kind()) {
    case BackendKind::PathAlgebra: {
      out["dims"] = x.dims();
      Json arrows = Json::object();
      for (std::size_t i = 0; i < b.arrows().size(); ++i) arrows[b.arrows()[i].name] = to_json(x.map(i));
      out["arrows"] = arrows;
      break;
    }
    case BackendKind::GroupAlgebra: {
      out["dim"] = x.dim();
      Json gens = Json::array();
      for (const auto& m : x.maps()) gens.push_back(to_json(m));
      out["generators"] = gens;
      break;
    }
    case BackendKind::MatVec: {
      Json blocks = Json::array();
      for (std::size_t bl = 0; bl < b.blocks().size(); ++bl) blocks.push_back(grid_of(x, bl));
      out["blocks"] = blocks;
      break;
    }
  }
  return out;
}

Json to_json(const Mor& f) {
  Json out;
  out["source"] = to_json(f.source());
  out["target"] = to_json(f.target());
  Json comps = Json::array();
  for (const auto& c : f.components()) comps.push_back(to_json(c));
  out["components"] = comps;
  return out;
}

Json to_json(const SerreSpec& c) { return c.labels(); }

Json backend_to_json(const Backend& b) {
  Json out;
  out["id"] = b.id();
  out["kind"] = to_string(b.kind());
  out["field"] = b.field().name();
  switch (b.kind()) {
    case BackendKind::PathAlgebra: {
      out["vertices"] = b.vertex_count();
      Json arrows = Json::array();
      for (const auto& a : b.arrows()) {
        arrows.push_back(Json{{"name", a.name}, {"source", a.source + 1}, {"target", a.target + 1}});
      }
      out["arrows"] = arrows;
      break;
    }
    case BackendKind::GroupAlgebra: {
      out["cyclic_orders"] = b.cyclic_orders();
      Json roots = Json::array();
      for (const auto& r : b.roots_of_unity()) roots.push_back(r.to_string());
      out["roots_of_unity"] = roots;
      break;
    }
    case BackendKind::MatVec:
      out["blocks"] = b.blocks();
      break;
  }
  Json simples = Json::array();
  for (const auto& s : b.simples()) simples.push_back(s.label);
  out["simples"] = simples;
  return out;
}

Mat mat_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols) {
  require(j.is_array(), ErrorCode::ParseError, "matrix must be a list of rows");
  if (j.empty()) {
    require(rows == 0 || cols == 0, ErrorCode::ParseError,
            "empty matrix where a " + std::to_string(rows) + "x" + std::to_string(cols) +
                " one is expected");
    return Mat(f, rows, cols);
  }
  require(j.size() == rows, ErrorCode::ParseError,
          "matrix has " + std::to_string(j.size()) + " rows, expected " + std::to_string(rows));
  Mat m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    require(j[r].is_array() && j[r].size() == cols, ErrorCode::ParseError,
            "matrix row " + std::to_string(r + 1) + " must have " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, scalar_from_json(f, j[r][c]));
  }
  return m;
}

Obj obj_from_json(const BackendPtr& b, const Json& j) {
  require(j.is_object(), ErrorCode::ParseError, "object description must be a JSON object");
  if (auto it = j.find("simple"); it != j.end()) {
    require(it->is_string(), ErrorCode::ParseError, "'simple' must be a label");
    return Obj::simple(b, it->get<std::string>());
  }
  if (j.contains("zero")) return Obj::zero(b);
  switch (b->kind()) {
    case BackendKind::PathAlgebra: {
      auto dims = field_of(j, "dims").get<std::vector<std::size_t>>();
      require(dims.size() == b->vertex_count(), ErrorCode::ParseError,
              "'dims' needs one entry per vertex");
      auto maps = arrow_maps(b, j.contains("arrows") ? j["arrows"] : Json(), dims);
      return Obj(b, std::move(dims), std::move(maps));
    }
    case BackendKind::GroupAlgebra: {
      const auto d = field_of(j, "dim").get<std::size_t>();
      std::vector<std::size_t> dims{d};
      Json gens = j.contains("generators") ? j["generators"] : Json();
      if (gens.is_null()) {
        // Trivial action.
        std::vector<Mat> maps(b->arrows().size(), Mat::identity(b->field(), d));
        return Obj(b, std::move(dims), std::move(maps));
      }
      auto maps = arrow_maps(b, gens, dims);
      return Obj(b, std::move(dims), std::move(maps));
    }
    case BackendKind::MatVec: {
      const Json& blocks = field_of(j, "blocks");
      require(blocks.is_array() && blocks.size() == b->blocks().size(), ErrorCode::ParseError,
              "'blocks' needs one grid per block");
      std::vector<std::size_t> dims(b->vertex_count(), 0);
      for (std::size_t bl = 0; bl < blocks.size(); ++bl) {
        const std::size_t n = b->blocks()[bl];
        const Json& g = blocks[bl];
        require(g.is_array() && g.size() == n, ErrorCode::ParseError,
                "grid of block " + std::to_string(bl + 1) + " must be " + std::to_string(n) + "x" +
                    std::to_string(n));
        for (std::size_t i = 0; i < n; ++i) {
          require(g[i].is_array() && g[i].size() == n, ErrorCode::ParseError,
                  "grid of block " + std::to_string(bl + 1) + " must be square");
          for (std::size_t k = 0; k < n; ++k) {
            require(g[i][k].is_number_unsigned() || (g[i][k].is_number_integer() && g[i][k].get<long>() >= 0),
                    ErrorCode::ParseError, "cell dimensions must be non-negative integers");
            dims[b->vertex_of({bl, i, k})] = g[i][k].get<std::size_t>();
          }
        }
      }
      return Obj(b, std::move(dims), {});
    }
  }
  fail(ErrorCode::ParseError, "unsupported backend");
}

}  // namespace qcat::io

#pragma once

// JSON encoding of exact data. Scalars are strings ("3", "-1/2") so that no
// value ever passes through a float.

#include <nlohmann/json.hpp>

#include "qcat/abcat.hpp"
#include "qcat/serre.hpp"

namespace qcat::io {

using Json = nlohmann::ordered_json;

Json to_json(const Mat& m);
Json to_json(const Obj& x);
Json to_json(const Mor& f);
Json to_json(const SerreSpec& c);
Json backend_to_json(const Backend& b);

/// Entries may be integers or strings "p/q". `rows` x `cols` is enforced
/// when the array is empty.
Mat mat_from_json(const Field& f, const Json& j, std::size_t rows, std::size_t cols);
Obj obj_from_json(const BackendPtr& b, const Json& j);

}  // namespace qcat::io

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qcat/abcat.hpp"

namespace qcat {

std::string to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::PathAlgebra: return "path_algebra";
    case BackendKind::GroupAlgebra: return "group_algebra";
    case BackendKind::MatVec: return "matvec";
  }
  return "unknown";
}

namespace {

bool is_acyclic(std::size_t n, const std::vector<Arrow>& arrows) {
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& a : arrows) ++indegree[a.target];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (const auto& a : arrows) {
      if (a.source == v && --indegree[a.target] == 0) ready.push_back(a.target);
    }
  }
  return seen == n;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

// A root of unity of exact order n in the field.
Scalar root_of_unity(const Field& f, std::uint32_t n) {
  require(n >= 1, ErrorCode::InvalidArgument, "cyclic order must be positive");
  if (f.is_rational()) {
    require(n <= 2, ErrorCode::InvalidArgument,
            "Z/" + std::to_string(n) + " has characters outside Q; use GF(p) with n | p-1");
    return Scalar(f, n == 1 ? 1L : -1L);
  }
  const std::uint64_t p = f.characteristic();
  require((p - 1) % n == 0, ErrorCode::InvalidArgument,
          "Z/" + std::to_string(n) + " needs n | p-1 over " + f.name());
  const auto factors = prime_factors(p - 1);
  std::uint64_t g = 1;
  for (std::uint64_t cand = 2; p > 2; ++cand) {
    bool generator = true;
    for (auto q : factors) {
      if (powmod(cand, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) {
      g = cand;
      break;
    }
  }
  return Scalar(f, static_cast<long>(powmod(g, (p - 1) / n, p)));
}

Scalar power(const Scalar& x, std::uint32_t e) {
  Scalar r = Scalar::one(x.field());
  for (std::uint32_t i = 0; i < e; ++i) r = r * x;
  return r;
}

}  // namespace

BackendPtr Backend::path_algebra(Field field, std::size_t vertices, std::vector<Arrow> arrows,
                                 std::string id) {
  require(vertices > 0, ErrorCode::EmptyBackend, "path algebra needs at least one vertex");
  for (auto& a : arrows) {
    require(a.source < vertices && a.target < vertices, ErrorCode::InvalidArgument,
            "arrow endpoint out of range");
  }
  require(is_acyclic(vertices, arrows), ErrorCode::InvalidArgument,
          "path algebra backends require an acyclic quiver");
  auto b = std::shared_ptr<Backend>(new Backend());
  b->kind_ = BackendKind::PathAlgebra;
  b->field_ = field;
  b->vertices_ = vertices;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    if (arrows[i].name.empty()) arrows[i].name = "a" + std::to_string(i + 1);
  }
  b->arrows_ = std::move(arrows);
  for (std::size_t v = 0; v < vertices; ++v) {
    std::vector<Scalar> zeros(b->arrows_.size(), Scalar::zero(field));
    b->simples_.push_back({"S" + std::to_string(v + 1), v, std::move(zeros)});
  }
  if (id.empty()) {
    std::ostringstream os;
    os << "path:" << vertices;
    for (const auto& a : b->arrows_) os << ',' << a.source + 1 << '>' << a.target + 1;
    os << '@' << field.name();
    id = os.str();
  }
  b->id_ = std::move(id);
  return b;
}

BackendPtr Backend::group_algebra(Field field, std::vector<std::uint32_t> cyclic_orders,
                                  std::vector<NamedCharacter> characters, std::string id) {
  require(!cyclic_orders.empty(), ErrorCode::EmptyBackend, "group algebra needs a cyclic factor");
  auto b = std::shared_ptr<Backend>(new Backend());
  b->kind_ = BackendKind::GroupAlgebra;
  b->field_ = field;
  b->vertices_ = 1;
  b->orders_ = cyclic_orders;
  for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
    b->arrows_.push_back({0, 0, "g" + std::to_string(i + 1)});
    b->roots_.push_back(root_of_unity(field, cyclic_orders[i]));
  }

  // All exponent tuples, first factor slowest.
  std::vector<std::vector<std::uint32_t>> all{{}};
  for (auto n : cyclic_orders) {
    std::vector<std::vector<std::uint32_t>> next;
    for (const auto& prefix : all) {
      for (std::uint32_t e = 0; e < n; ++e) {
        auto t = prefix;
        t.push_back(e);
        next.push_back(std::move(t));
      }
    }
    all = std::move(next);
  }
  if (characters.empty()) {
    for (const auto& t : all) {
      std::string label = "chi";
      for (auto e : t) label += "_" + std::to_string(e);
      characters.push_back({label, t});
    }
  }
  require(characters.size() == all.size(), ErrorCode::InvalidArgument,
          "character list must name every character exactly once");
  for (const auto& ch : characters) {
    require(std::find(all.begin(), all.end(), ch.exponents) != all.end(),
            ErrorCode::InvalidArgument, "invalid character exponents for " + ch.label);
    for (const auto& other : characters) {
      require(&ch == &other || (ch.exponents != other.exponents && ch.label != other.label),
              ErrorCode::InvalidArgument, "duplicate character " + ch.label);
    }
    std::vector<Scalar> scalars;
    for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
      scalars.push_back(power(b->roots_[i], ch.exponents[i]));
    }
    b->simples_.push_back({ch.label, 0, std::move(scalars)});
  }
  if (id.empty()) {
    id = "group:";
    for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
      id += (i ? "x" : "") + std::string("Z") + std::to_string(cyclic_orders[i]);
    }
    id += "@" + field.name();
  }
  b->id_ = std::move(id);
  return b;
}

BackendPtr Backend::matvec(Field field, std::vector<std::size_t> blocks, std::string id) {
  auto b = std::shared_ptr<Backend>(new Backend());
  b->kind_ = BackendKind::MatVec;
  b->field_ = field;
  std::size_t offset = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    require(blocks[bi] > 0, ErrorCode::InvalidArgument, "matvec block sizes must be positive");
    b->block_offsets_.push_back(offset);
    const std::size_t n = blocks[bi];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        b->simples_.push_back({"E" + std::to_string(bi + 1) + "_" + std::to_string(i + 1) + "_" +
                                   std::to_string(j + 1),
                               offset + i * n + j,
                               {}});
      }
    }
    offset += n * n;
  }
  b->vertices_ = offset;
  b->blocks_ = std::move(blocks);
  if (id.empty()) {
    id = "matvec:";
    for (std::size_t i = 0; i < b->blocks_.size(); ++i) {
      id += (i ? "," : "") + std::to_string(b->blocks_[i]);
    }
    id += "@" + field.name();
  }
  b->id_ = std::move(id);
  return b;
}

std::optional<std::size_t> Backend::simple_index(const std::string& label) const {
  for (std::size_t i = 0; i < simples_.size(); ++i) {
    if (simples_[i].label == label) return i;
  }
  return std::nullopt;
}

std::uint64_t Backend::group_order() const {
  return std::accumulate(orders_.begin(), orders_.end(), std::uint64_t{1},
                         [](std::uint64_t a, std::uint32_t n) { return a * n; });
}

Cell Backend::cell(std::size_t vertex) const {
  require(kind_ == BackendKind::MatVec, ErrorCode::InvalidArgument, "cells exist only in matvec");
  require(vertex < vertices_, ErrorCode::InvalidArgument, "vertex out of range");
  std::size_t b = 0;
  while (b + 1 < blocks_.size() && block_offsets_[b + 1] <= vertex) ++b;
  const std::size_t local = vertex - block_offsets_[b];
  return {b, local / blocks_[b], local % blocks_[b]};
}

std::size_t Backend::vertex_of(const Cell& c) const {
  require(kind_ == BackendKind::MatVec && c.block < blocks_.size() && c.row < blocks_[c.block] &&
              c.col < blocks_[c.block],
          ErrorCode::InvalidArgument, "cell out of range");
  return block_offsets_[c.block] + c.row * blocks_[c.block] + c.col;
}

void Backend::check_relations(const std::vector<std::size_t>& dims,
                              const std::vector<Mat>& maps) const {
  if (kind_ != BackendKind::GroupAlgebra) return;
  const Mat id = Mat::identity(field_, dims[0]);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    Mat p = id;
    for (std::uint32_t k = 0; k < orders_[i]; ++k) p = p * maps[i];
    require(p == id, ErrorCode::InvalidMorphism,
            "generator " + arrows_[i].name + " does not satisfy g^" + std::to_string(orders_[i]) +
                " = 1");
    for (std::size_t j = i + 1; j < maps.size(); ++j) {
      require(maps[i] * maps[j] == maps[j] * maps[i], ErrorCode::InvalidMorphism,
              "generators " + arrows_[i].name + " and " + arrows_[j].name + " do not commute");
    }
  }
}

bool operator==(const Backend& a, const Backend& b) {
  if (&a == &b) return true;
  if (a.kind_ != b.kind_ || !(a.field_ == b.field_) || a.vertices_ != b.vertices_ ||
      a.arrows_ != b.arrows_ || a.orders_ != b.orders_ || a.blocks_ != b.blocks_ ||
      a.simples_.size() != b.simples_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.simples_.size(); ++i) {
    if (a.simples_[i].label != b.simples_[i].label ||
        a.simples_[i].vertex != b.simples_[i].vertex ||
        a.simples_[i].arrow_scalars != b.simples_[i].arrow_scalars) {
      return false;
    }
  }
  return true;
}

bool same_backend(const BackendPtr& a, const BackendPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace qcat

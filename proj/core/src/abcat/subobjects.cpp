#include <algorithm>
#include <numeric>

#include "detail/span_search.hpp"
#include "qcat/abcat.hpp"
#include "qcat/exactlin/linalg.hpp"

namespace qcat {

namespace {

// Subobject from independent, invariant per-vertex bases. Returns nothing
// when some arrow moves the span outside itself.
std::optional<SubObj> try_make_sub(const Obj& parent, std::vector<Mat> bases) {
  const auto& b = *parent.backend();
  std::vector<std::size_t> dims;
  for (const auto& m : bases) dims.push_back(m.cols());
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < b.arrows().size(); ++i) {
    const auto& a = b.arrows()[i];
    auto x = lin::solve(bases[a.target], parent.map(i) * bases[a.source]);
    if (!x) return std::nullopt;
    maps.push_back(std::move(*x));
  }
  Obj object(Obj::Unchecked{}, parent.backend(), std::move(dims), std::move(maps));
  Mor inclusion(object, parent, std::move(bases));
  return SubObj{std::move(object), std::move(inclusion)};
}

SubObj make_sub(const Obj& parent, std::vector<Mat> bases) {
  auto s = try_make_sub(parent, std::move(bases));
  require(s.has_value(), ErrorCode::NotSubobject, "span is not invariant under the arrows");
  return std::move(*s);
}

void check_same_parent(const SubObj& a, const SubObj& b) {
  require(a.parent() == b.parent(), ErrorCode::NotSubobject,
          "subobjects of different parents");
}

}  // namespace

SubObj subobject(const Obj& parent, const std::vector<Mat>& spans) {
  require(spans.size() == parent.dims().size(), ErrorCode::ShapeError,
          "one span per vertex is required");
  std::vector<Mat> bases;
  for (std::size_t v = 0; v < spans.size(); ++v) {
    require(spans[v].rows() == parent.dim(v), ErrorCode::ShapeError, "span has the wrong height");
    bases.push_back(lin::image_basis(spans[v]));
  }
  return make_sub(parent, std::move(bases));
}

SubObj zero_subobject(const Obj& parent) {
  std::vector<Mat> bases;
  for (auto n : parent.dims()) bases.emplace_back(parent.field(), n, 0);
  return make_sub(parent, std::move(bases));
}

SubObj whole(const Obj& parent) { return SubObj{parent, Mor::identity(parent)}; }

SubObj kernel(const Mor& f) {
  std::vector<Mat> bases;
  for (const auto& c : f.components()) bases.push_back(lin::kernel_basis(c));
  return make_sub(f.source(), std::move(bases));
}

SubObj image(const Mor& f) {
  std::vector<Mat> bases;
  for (const auto& c : f.components()) bases.push_back(lin::image_basis(c));
  return make_sub(f.target(), std::move(bases));
}

QuotientObj cokernel(const Mor& f) { return quotient_object(f.target(), image(f)); }

QuotientObj coimage(const Mor& f) { return quotient_object(f.source(), kernel(f)); }

SubObj spin_submodule(const Obj& m, const Mat& vectors) {
  require(vectors.rows() == m.dim(), ErrorCode::ShapeError, "vectors do not live in the carrier");
  const auto& b = *m.backend();
  const std::size_t nv = b.vertex_count();
  std::vector<Mat> bases;
  for (std::size_t v = 0; v < nv; ++v) {
    bases.push_back(lin::image_basis(vectors.block(m.offset(v), 0, m.dim(v), vectors.cols())));
  }
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t i = 0; i < b.arrows().size(); ++i) {
      const auto& a = b.arrows()[i];
      Mat moved = m.map(i) * bases[a.source];
      if (lin::in_span(bases[a.target], moved)) continue;
      bases[a.target] = lin::span_sum(bases[a.target], moved);
      grew = true;
    }
  }
  return make_sub(m, std::move(bases));
}

SubObj sum(const SubObj& a, const SubObj& b) {
  check_same_parent(a, b);
  std::vector<Mat> bases;
  for (std::size_t v = 0; v < a.parent().dims().size(); ++v) {
    bases.push_back(lin::span_sum(a.span(v), b.span(v)));
  }
  return make_sub(a.parent(), std::move(bases));
}

SubObj intersection(const SubObj& a, const SubObj& b) {
  check_same_parent(a, b);
  std::vector<Mat> bases;
  for (std::size_t v = 0; v < a.parent().dims().size(); ++v) {
    bases.push_back(lin::span_intersection(a.span(v), b.span(v)));
  }
  return make_sub(a.parent(), std::move(bases));
}

bool contains(const SubObj& outer, const SubObj& inner) {
  check_same_parent(outer, inner);
  for (std::size_t v = 0; v < outer.parent().dims().size(); ++v) {
    if (!lin::in_span(outer.span(v), inner.span(v))) return false;
  }
  return true;
}

bool same_subobject(const SubObj& a, const SubObj& b) {
  return a.dim() == b.dim() && contains(a, b);
}

SubObj preimage(const QuotientObj& q, const SubObj& sub) {
  require(sub.parent() == q.object, ErrorCode::NotSubobject,
          "subobject does not live in the quotient");
  std::vector<Mat> bases;
  for (std::size_t v = 0; v < q.object.dims().size(); ++v) {
    const Mat kill = lin::quotient_coords(q.object.dim(v), sub.span(v));
    bases.push_back(lin::kernel_basis(kill * q.projection.component(v)));
  }
  return make_sub(q.projection.source(), std::move(bases));
}

SubObj push_forward(const Mor& f, const SubObj& sub) {
  require(sub.parent() == f.source(), ErrorCode::NotSubobject,
          "subobject does not live in the source");
  return image(compose(f, sub.inclusion));
}

SubObj restrict_to(const SubObj& outer, const SubObj& sub) {
  check_same_parent(outer, sub);
  std::vector<Mat> bases;
  for (std::size_t v = 0; v < outer.parent().dims().size(); ++v) {
    auto x = lin::solve(outer.span(v), sub.span(v));
    require(x.has_value(), ErrorCode::NotSubobject, "subobject is not contained in the outer one");
    bases.push_back(std::move(*x));
  }
  return make_sub(outer.object, std::move(bases));
}

Obj direct_sum(const Obj& m, const Obj& n) { return biproduct(m, n).sum; }

Biproduct biproduct(const Obj& m, const Obj& n) {
  check_same_backend(m, n);
  const auto& b = *m.backend();
  const Field f = b.field();
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < b.vertex_count(); ++v) dims.push_back(m.dim(v) + n.dim(v));
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < b.arrows().size(); ++i) {
    const Mat parts[] = {m.map(i), n.map(i)};
    maps.push_back(Mat::block_diag(f, parts));
  }
  Obj s(Obj::Unchecked{}, m.backend(), dims, std::move(maps));
  std::vector<Mat> i1, i2, p1, p2;
  for (std::size_t v = 0; v < b.vertex_count(); ++v) {
    Mat a(f, dims[v], m.dim(v)), c(f, dims[v], n.dim(v));
    a.set_block(0, 0, Mat::identity(f, m.dim(v)));
    c.set_block(m.dim(v), 0, Mat::identity(f, n.dim(v)));
    p1.push_back(a.transpose());
    p2.push_back(c.transpose());
    i1.push_back(std::move(a));
    i2.push_back(std::move(c));
  }
  return Biproduct{s, Mor(m, s, std::move(i1)), Mor(n, s, std::move(i2)), Mor(s, m, std::move(p1)),
                   Mor(s, n, std::move(p2))};
}

QuotientObj quotient_object(const Obj& m, const SubObj& s) {
  require(s.parent() == m, ErrorCode::NotSubobject, "not a subobject of this object");
  const auto& b = *m.backend();
  std::vector<Mat> proj, lift;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < b.vertex_count(); ++v) {
    proj.push_back(lin::quotient_coords(m.dim(v), s.span(v)));
    lift.push_back(lin::complement_basis(m.dim(v), s.span(v)));
    dims.push_back(proj.back().rows());
  }
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < b.arrows().size(); ++i) {
    const auto& a = b.arrows()[i];
    maps.push_back(proj[a.target] * m.map(i) * lift[a.source]);
  }
  Obj q(Obj::Unchecked{}, m.backend(), std::move(dims), std::move(maps));
  Mor p(m, q, std::move(proj));
  return QuotientObj{std::move(q), std::move(p)};
}

// ---- simples and composition series -------------------------------------------

Mat simple_socle(const Obj& m, std::size_t simple) {
  const auto& b = *m.backend();
  const auto& s = b.simples().at(simple);
  const Field f = b.field();
  const std::size_t d = m.dim(s.vertex);
  std::vector<Mat> eqs;
  for (std::size_t i = 0; i < b.arrows().size(); ++i) {
    const auto& a = b.arrows()[i];
    if (a.source != s.vertex) continue;
    if (a.target == s.vertex) {
      eqs.push_back(m.map(i) - Mat::identity(f, d).scaled(s.arrow_scalars[i]));
    } else {
      eqs.push_back(m.map(i));
    }
  }
  if (eqs.empty()) return Mat::identity(f, d);
  return lin::kernel_basis(Mat::vstack(f, d, eqs));
}

CompositionSeries composition_series(const Obj& m, std::mt19937_64* rng) {
  const auto& b = *m.backend();
  const Field f = b.field();
  CompositionSeries out;
  out.chain.push_back(zero_subobject(m));
  std::vector<std::size_t> order(b.simple_count());
  std::iota(order.begin(), order.end(), 0);

  while (out.chain.back().dim() < m.dim()) {
    const QuotientObj q = quotient_object(m, out.chain.back());
    if (rng) std::shuffle(order.begin(), order.end(), *rng);
    bool found = false;
    for (auto s : order) {
      const Mat socle = simple_socle(q.object, s);
      if (socle.cols() == 0) continue;
      Mat local = socle.col(0);
      if (rng) {
        do {
          local = Mat(f, socle.rows(), 1);
          for (std::size_t k = 0; k < socle.cols(); ++k) {
            const long c = static_cast<long>((*rng)() % 7) - 3;
            local = local + socle.col(k).scaled(Scalar(f, c));
          }
        } while (local.is_zero());
      }
      const std::size_t v = b.simples()[s].vertex;
      Mat vec(f, q.object.dim(), 1);
      vec.set_block(q.object.offset(v), 0, local);
      const SubObj line = spin_submodule(q.object, vec);
      require(line.dim() == 1, ErrorCode::BackendContract, "socle vector does not span a simple");
      out.chain.push_back(preimage(q, line));
      out.factors.push_back(s);
      found = true;
      break;
    }
    require(found, ErrorCode::BackendContract,
            "nonzero object with no simple subobject from the inventory");
  }
  return out;
}

std::vector<std::size_t> composition_factors(const Obj& m, std::mt19937_64* rng) {
  std::vector<std::size_t> counts(m.backend()->simple_count(), 0);
  for (auto s : composition_series(m, rng).factors) ++counts[s];
  return counts;
}

// Every simple in the inventory is one-dimensional.
std::size_t length(const Obj& m) { return m.dim(); }

std::optional<Mor> find_isomorphism(const Obj& m, const Obj& n) {
  check_same_backend(m, n);
  if (m.dims() != n.dims()) return std::nullopt;
  const auto basis = hom_basis(m, n);
  return detail::search_span(basis, m.field(), Mor::zero(m, n), [](const Mor& f) {
    for (const auto& c : f.components()) {
      if (lin::rank(c) != c.rows()) return false;
    }
    return true;
  });
}

bool is_isomorphic(const Obj& m, const Obj& n) { return find_isomorphism(m, n).has_value(); }

std::optional<std::size_t> simple_label(const Obj& m) {
  if (m.dim() != 1) return std::nullopt;
  const auto& b = *m.backend();
  for (std::size_t s = 0; s < b.simple_count(); ++s) {
    const auto& info = b.simples()[s];
    if (m.dim(info.vertex) != 1) continue;
    bool match = true;
    for (std::size_t i = 0; i < b.arrows().size() && match; ++i) {
      const auto& a = b.arrows()[i];
      if (a.source == info.vertex && a.target == info.vertex) {
        match = m.map(i).at(0, 0) == info.arrow_scalars[i];
      }
    }
    if (match) return s;
  }
  return std::nullopt;
}

}  // namespace qcat

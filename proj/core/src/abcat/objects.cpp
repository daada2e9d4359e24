#include "qcat/abcat.hpp"
#include "qcat/exactlin/linalg.hpp"

namespace qcat {

void check_same_backend(const Obj& a, const Obj& b) {
  if (!same_backend(a.backend(), b.backend())) {
    fail(ErrorCode::BackendMismatch,
         "objects live in different backends (" + a.backend()->id() + " vs " +
             b.backend()->id() + ")");
  }
}

Obj::Obj(BackendPtr backend, std::vector<std::size_t> dims, std::vector<Mat> maps)
    : Obj(Unchecked{}, std::move(backend), std::move(dims), std::move(maps)) {
  d_->backend->check_relations(d_->dims, d_->maps);
}

Obj::Obj(Unchecked, BackendPtr backend, std::vector<std::size_t> dims, std::vector<Mat> maps) {
  require(backend != nullptr, ErrorCode::InvalidArgument, "object without backend");
  require(dims.size() == backend->vertex_count(), ErrorCode::ShapeError,
          "dimension vector has wrong length");
  require(maps.size() == backend->arrows().size(), ErrorCode::ShapeError,
          "one matrix per arrow is required");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& a = backend->arrows()[i];
    require(maps[i].field() == backend->field(), ErrorCode::FieldMismatch,
            "arrow matrix over the wrong field");
    require(maps[i].rows() == dims[a.target] && maps[i].cols() == dims[a.source],
            ErrorCode::ShapeError, "arrow " + a.name + " has the wrong shape");
  }
  auto d = std::make_shared<Data>();
  d->backend = std::move(backend);
  d->dims = std::move(dims);
  for (auto n : d->dims) {
    d->offsets.push_back(d->total);
    d->total += n;
  }
  d->maps = std::move(maps);
  d_ = std::move(d);
}

Obj Obj::zero(BackendPtr backend) {
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < backend->arrows().size(); ++i) maps.emplace_back(backend->field(), 0, 0);
  std::vector<std::size_t> dims(backend->vertex_count(), 0);
  return Obj(std::move(backend), std::move(dims), std::move(maps));
}

Obj Obj::simple(BackendPtr backend, std::size_t index) {
  require(index < backend->simple_count(), ErrorCode::UnknownObject, "simple index out of range");
  const auto& s = backend->simples()[index];
  std::vector<std::size_t> dims(backend->vertex_count(), 0);
  dims[s.vertex] = 1;
  std::vector<Mat> maps;
  for (std::size_t i = 0; i < backend->arrows().size(); ++i) {
    const auto& a = backend->arrows()[i];
    Mat m(backend->field(), dims[a.target], dims[a.source]);
    if (a.source == s.vertex && a.target == s.vertex) m.set(0, 0, s.arrow_scalars[i]);
    maps.push_back(std::move(m));
  }
  return Obj(std::move(backend), std::move(dims), std::move(maps));
}

Obj Obj::simple(BackendPtr backend, const std::string& label) {
  auto idx = backend->simple_index(label);
  require(idx.has_value(), ErrorCode::UnknownObject, "unknown simple " + label);
  return simple(std::move(backend), *idx);
}

bool operator==(const Obj& a, const Obj& b) {
  if (a.d_ == b.d_) return true;
  return same_backend(a.d_->backend, b.d_->backend) && a.d_->dims == b.d_->dims &&
         a.d_->maps == b.d_->maps;
}

// ---- morphisms ---------------------------------------------------------------

Mor::Mor(Obj source, Obj target, std::vector<Mat> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  check_same_backend(source_, target_);
  const auto& b = *source_.backend();
  require(components_.size() == b.vertex_count(), ErrorCode::ShapeError,
          "one component per vertex is required");
  for (std::size_t v = 0; v < components_.size(); ++v) {
    require(components_[v].field() == b.field(), ErrorCode::FieldMismatch,
            "component over the wrong field");
    if (components_[v].rows() != target_.dim(v) || components_[v].cols() != source_.dim(v)) {
      fail(ErrorCode::ShapeError, "component at vertex " + std::to_string(v + 1) +
                                      " has the wrong shape");
    }
  }
  for (std::size_t i = 0; i < b.arrows().size(); ++i) {
    const auto& a = b.arrows()[i];
    if (!(components_[a.target] * source_.map(i) == target_.map(i) * components_[a.source])) {
      fail(ErrorCode::InvalidMorphism, "morphism does not commute with arrow " + a.name);
    }
  }
}

Mor::Mor(Unchecked, Obj source, Obj target, std::vector<Mat> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {}

Mor Mor::zero(const Obj& source, const Obj& target) {
  check_same_backend(source, target);
  std::vector<Mat> c;
  for (std::size_t v = 0; v < source.dims().size(); ++v) {
    c.emplace_back(source.field(), target.dim(v), source.dim(v));
  }
  return Mor(Unchecked{}, source, target, std::move(c));
}

Mor Mor::identity(const Obj& object) {
  std::vector<Mat> c;
  for (auto n : object.dims()) c.push_back(Mat::identity(object.field(), n));
  return Mor(Unchecked{}, object, object, std::move(c));
}

Mor Mor::from_total(const Obj& source, const Obj& target, const Mat& total) {
  require(total.rows() == target.dim() && total.cols() == source.dim(), ErrorCode::ShapeError,
          "carrier matrix has the wrong shape");
  std::vector<Mat> c;
  for (std::size_t v = 0; v < source.dims().size(); ++v) {
    c.push_back(total.block(target.offset(v), source.offset(v), target.dim(v), source.dim(v)));
  }
  require(Mat::block_diag(source.field(), c) == total, ErrorCode::InvalidMorphism,
          "carrier matrix mixes vertices");
  return Mor(source, target, std::move(c));
}

Mat Mor::total() const { return Mat::block_diag(source_.field(), components_); }

bool Mor::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Mor Mor::operator+(const Mor& o) const {
  require(source_ == o.source_ && target_ == o.target_, ErrorCode::ShapeError,
          "adding morphisms with different endpoints");
  std::vector<Mat> c;
  for (std::size_t v = 0; v < components_.size(); ++v) c.push_back(components_[v] + o.components_[v]);
  return Mor(Unchecked{}, source_, target_, std::move(c));
}

Mor Mor::operator-(const Mor& o) const { return *this + (-o); }

Mor Mor::operator-() const {
  std::vector<Mat> c;
  for (const auto& m : components_) c.push_back(-m);
  return Mor(Unchecked{}, source_, target_, std::move(c));
}

Mor Mor::scaled(const Scalar& s) const {
  std::vector<Mat> c;
  for (const auto& m : components_) c.push_back(m.scaled(s));
  return Mor(Unchecked{}, source_, target_, std::move(c));
}

bool operator==(const Mor& a, const Mor& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.components_ == b.components_;
}

Mor compose(const Mor& g, const Mor& f) {
  if (!(f.target() == g.source())) {
    fail(ErrorCode::ComposeError, "target of the first morphism is not the source of the second");
  }
  std::vector<Mat> c;
  for (std::size_t v = 0; v < f.components().size(); ++v) {
    c.push_back(g.component(v) * f.component(v));
  }
  return Mor(Mor::Unchecked{}, f.source(), g.target(), std::move(c));
}

// ---- Hom spaces ----------------------------------------------------------------

std::vector<Mor> hom_basis(const Obj& m, const Obj& n) {
  check_same_backend(m, n);
  const auto& b = *m.backend();
  const Field f = b.field();
  const std::size_t nv = b.vertex_count();

  // Unknowns: the entries of each f_v, row-major, vertex after vertex.
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = offset[nv];

  // row-vec(A X B) = (A kron B^T) row-vec(X)
  std::vector<Mat> rows;
  for (std::size_t i = 0; i < b.arrows().size(); ++i) {
    const auto& a = b.arrows()[i];
    const std::size_t r = n.dim(a.target) * m.dim(a.source);
    if (r == 0) continue;
    Mat block(f, r, unknowns);
    const Mat left = lin::kronecker(Mat::identity(f, n.dim(a.target)), m.map(i).transpose());
    const Mat right = lin::kronecker(n.map(i), Mat::identity(f, m.dim(a.source)));
    if (a.source == a.target) {
      block.set_block(0, offset[a.target], left - right);
    } else {
      block.set_block(0, offset[a.target], left);
      block.set_block(0, offset[a.source], -right);
    }
    rows.push_back(std::move(block));
  }
  const Mat system = Mat::vstack(f, unknowns, rows);
  const Mat null = lin::kernel_basis(system);

  std::vector<Mor> out;
  for (std::size_t k = 0; k < null.cols(); ++k) {
    std::vector<Mat> comps;
    for (std::size_t v = 0; v < nv; ++v) {
      Mat c(f, n.dim(v), m.dim(v));
      for (std::size_t i = 0; i < c.rows(); ++i) {
        for (std::size_t j = 0; j < c.cols(); ++j) {
          c.set(i, j, null.at(offset[v] + i * c.cols() + j, k));
        }
      }
      comps.push_back(std::move(c));
    }
    out.emplace_back(m, n, std::move(comps));
  }
  return out;
}

}  // namespace qcat

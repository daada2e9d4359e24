#include "qcat/monoidal.hpp"

#include "qcat/exactlin/linalg.hpp"
#include "qcat/ideal.hpp"

namespace qcat {

namespace {

bool is_group(const Backend& b) { return b.kind() == BackendKind::GroupAlgebra; }

std::size_t cell_dim(const Obj& x, std::size_t block, std::size_t i, std::size_t j) {
  return x.dim(x.backend()->vertex_of({block, i, j}));
}

// Identity on the composite index a*d+a of V^* (x) V or V (x) V^*: the trace
// pairing as a row, or the canonical element as a column.
Mat pairing_row(const Field& f, std::size_t d) {
  Mat r(f, 1, d * d);
  for (std::size_t a = 0; a < d; ++a) r.set(0, a * d + a, 1L);
  return r;
}

// Unit cells of a matvec backend receive (or emit) a trace pairing summed over
// the middle index; every other cell gets an empty matrix. `pair_dim(b, i, j)`
// is the dimension being paired in summand j of cell (i, i).
template <class PairDim>
std::vector<Mat> matvec_pairing(const Obj& paired, const Obj& unit_obj, bool as_row,
                                PairDim pair_dim) {
  const auto& b = *paired.backend();
  const Field f = b.field();
  std::vector<Mat> comps;
  for (std::size_t v = 0; v < b.vertex_count(); ++v) {
    const Cell c = b.cell(v);
    if (c.row != c.col) {
      comps.push_back(as_row ? Mat(f, 0, paired.dim(v)) : Mat(f, paired.dim(v), 0));
      continue;
    }
    std::vector<Mat> parts;
    for (std::size_t j = 0; j < b.blocks()[c.block]; ++j) {
      parts.push_back(pairing_row(f, pair_dim(c.block, c.row, j)));
    }
    Mat row = Mat::hstack(f, 1, parts);
    require(row.cols() == paired.dim(v) && unit_obj.dim(v) == 1, ErrorCode::BackendContract,
            "pairing does not match the tensor carrier");
    comps.push_back(as_row ? row : row.transpose());
  }
  return comps;
}

Mor identity_between(const Obj& from, const Obj& to) {
  std::vector<Mat> c;
  for (std::size_t v = 0; v < from.dims().size(); ++v) {
    require(from.dim(v) == to.dim(v), ErrorCode::BackendContract, "unit constraint shape mismatch");
    c.push_back(Mat::identity(from.field(), from.dim(v)));
  }
  return Mor(from, to, std::move(c));
}

Mor left_unitor_inverse(const Obj& x) { return identity_between(x, tensor(unit(x.backend()), x)); }
Mor right_unitor_inverse(const Obj& x) { return identity_between(x, tensor(x, unit(x.backend()))); }

Mor chain(std::initializer_list<Mor> steps) {
  auto it = steps.begin();
  Mor acc = *it;
  for (++it; it != steps.end(); ++it) acc = compose(*it, acc);
  return acc;
}

}  // namespace

bool is_tensor_backend(const Backend& b) {
  return b.kind() == BackendKind::GroupAlgebra || b.kind() == BackendKind::MatVec;
}

void require_tensor(const Backend& b) {
  require(is_tensor_backend(b), ErrorCode::RequirementUnmet,
          "backend " + b.id() + " (" + to_string(b.kind()) + ") has no tensor product");
}

Obj unit(const BackendPtr& b) {
  require_tensor(*b);
  const Field f = b->field();
  if (is_group(*b)) {
    std::vector<Mat> maps(b->arrows().size(), Mat::identity(f, 1));
    return Obj(b, {1}, std::move(maps));
  }
  std::vector<std::size_t> dims(b->vertex_count(), 0);
  for (std::size_t v = 0; v < dims.size(); ++v) {
    const Cell c = b->cell(v);
    dims[v] = c.row == c.col ? 1 : 0;
  }
  return Obj(b, std::move(dims), {});
}

Obj tensor(const Obj& x, const Obj& y) {
  check_same_backend(x, y);
  const auto& b = *x.backend();
  require_tensor(b);
  if (is_group(b)) {
    std::vector<Mat> maps;
    for (std::size_t i = 0; i < b.arrows().size(); ++i) {
      maps.push_back(lin::kronecker(x.map(i), y.map(i)));
    }
    return Obj(Obj::Unchecked{}, x.backend(), {x.dim() * y.dim()}, std::move(maps));
  }
  std::vector<std::size_t> dims(b.vertex_count(), 0);
  for (std::size_t v = 0; v < dims.size(); ++v) {
    const Cell c = b.cell(v);
    for (std::size_t j = 0; j < b.blocks()[c.block]; ++j) {
      dims[v] += cell_dim(x, c.block, c.row, j) * cell_dim(y, c.block, j, c.col);
    }
  }
  return Obj(Obj::Unchecked{}, x.backend(), std::move(dims), {});
}

Mor tensor(const Mor& f, const Mor& g) {
  const Obj src = tensor(f.source(), g.source());
  const Obj tgt = tensor(f.target(), g.target());
  const auto& b = *src.backend();
  const Field fld = b.field();
  std::vector<Mat> comps;
  if (is_group(b)) {
    comps.push_back(lin::kronecker(f.component(0), g.component(0)));
  } else {
    for (std::size_t v = 0; v < b.vertex_count(); ++v) {
      const Cell c = b.cell(v);
      std::vector<Mat> parts;
      for (std::size_t j = 0; j < b.blocks()[c.block]; ++j) {
        parts.push_back(lin::kronecker(f.component(b.vertex_of({c.block, c.row, j})),
                                       g.component(b.vertex_of({c.block, j, c.col}))));
      }
      comps.push_back(Mat::block_diag(fld, parts));
    }
  }
  return Mor(src, tgt, std::move(comps));
}

Mor associator(const Obj& x, const Obj& y, const Obj& z) {
  const Obj src = tensor(tensor(x, y), z);
  const Obj tgt = tensor(x, tensor(y, z));
  const auto& b = *x.backend();
  if (is_group(b)) return identity_between(src, tgt);
  const Field f = b.field();
  std::vector<Mat> comps;
  for (std::size_t v = 0; v < b.vertex_count(); ++v) {
    const Cell c = b.cell(v);
    const std::size_t n = b.blocks()[c.block];
    auto dx = [&](std::size_t j) { return cell_dim(x, c.block, c.row, j); };
    auto dy = [&](std::size_t j, std::size_t k) { return cell_dim(y, c.block, j, k); };
    auto dz = [&](std::size_t k) { return cell_dim(z, c.block, k, c.col); };
    // Source: sum over k of (sum over j of X_ij (x) Y_jk) (x) Z_kl.
    // Target: sum over j of X_ij (x) (sum over k of Y_jk (x) Z_kl).
    // Kronecker order interleaves the inner sums, so map coordinates one by one.
    std::vector<std::size_t> src_outer(n), tgt_outer(n), width(n, 0);
    std::vector<std::vector<std::size_t>> src_inner(n, std::vector<std::size_t>(n)),
        tgt_inner(n, std::vector<std::size_t>(n));
    std::size_t off = 0;
    for (std::size_t k = 0; k < n; ++k) {
      src_outer[k] = off;
      std::size_t rows = 0;
      for (std::size_t j = 0; j < n; ++j) {
        src_inner[k][j] = rows;
        rows += dx(j) * dy(j, k);
      }
      off += rows * dz(k);
    }
    off = 0;
    for (std::size_t j = 0; j < n; ++j) {
      tgt_outer[j] = off;
      for (std::size_t k = 0; k < n; ++k) {
        tgt_inner[j][k] = width[j];
        width[j] += dy(j, k) * dz(k);
      }
      off += dx(j) * width[j];
    }
    Mat p(f, tgt.dim(v), src.dim(v));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t a = 0; a < dx(j); ++a) {
          for (std::size_t b2 = 0; b2 < dy(j, k); ++b2) {
            for (std::size_t e = 0; e < dz(k); ++e) {
              const std::size_t s =
                  src_outer[k] + (src_inner[k][j] + a * dy(j, k) + b2) * dz(k) + e;
              const std::size_t t = tgt_outer[j] + a * width[j] + tgt_inner[j][k] + b2 * dz(k) + e;
              p.set(t, s, 1L);
            }
          }
        }
      }
    }
    comps.push_back(std::move(p));
  }
  return Mor(src, tgt, std::move(comps));
}

Mor associator_inverse(const Obj& x, const Obj& y, const Obj& z) {
  const Mor a = associator(x, y, z);
  std::vector<Mat> comps;
  for (const auto& c : a.components()) comps.push_back(c.transpose());
  return Mor(a.target(), a.source(), std::move(comps));
}

Mor left_unitor(const Obj& x) { return identity_between(tensor(unit(x.backend()), x), x); }
Mor right_unitor(const Obj& x) { return identity_between(tensor(x, unit(x.backend())), x); }

namespace {

Obj group_dual_object(const Obj& x) {
  std::vector<Mat> maps;
  for (const auto& m : x.maps()) {
    auto inv = lin::inverse(m);
    require(inv.has_value(), ErrorCode::BackendContract, "group element acts non-invertibly");
    maps.push_back(inv->transpose());
  }
  return Obj(Obj::Unchecked{}, x.backend(), x.dims(), std::move(maps));
}

Obj matvec_transpose(const Obj& x) {
  const auto& b = *x.backend();
  std::vector<std::size_t> dims(b.vertex_count());
  for (std::size_t v = 0; v < dims.size(); ++v) {
    const Cell c = b.cell(v);
    dims[v] = cell_dim(x, c.block, c.col, c.row);
  }
  return Obj(Obj::Unchecked{}, x.backend(), std::move(dims), {});
}

}  // namespace

DualData left_dual(const Obj& x) {
  const auto& b = *x.backend();
  require_tensor(b);
  const Obj one = unit(x.backend());
  if (is_group(b)) {
    const Obj d = group_dual_object(x);
    const Mat row = pairing_row(b.field(), x.dim());
    return DualData{d, Mor(tensor(d, x), one, {row}), Mor(one, tensor(x, d), {row.transpose()})};
  }
  const Obj d = matvec_transpose(x);
  const Obj dx = tensor(d, x);
  const Obj xd = tensor(x, d);
  Mor ev(dx, one, matvec_pairing(dx, one, true, [&](std::size_t bl, std::size_t i, std::size_t j) {
           return cell_dim(x, bl, j, i);
         }));
  Mor coev(one, xd, matvec_pairing(xd, one, false, [&](std::size_t bl, std::size_t i, std::size_t j) {
             return cell_dim(x, bl, i, j);
           }));
  return DualData{d, std::move(ev), std::move(coev)};
}

DualData right_dual(const Obj& x) {
  const auto& b = *x.backend();
  require_tensor(b);
  const Obj one = unit(x.backend());
  if (is_group(b)) {
    const Obj d = group_dual_object(x);
    const Mat row = pairing_row(b.field(), x.dim());
    return DualData{d, Mor(tensor(x, d), one, {row}), Mor(one, tensor(d, x), {row.transpose()})};
  }
  const Obj d = matvec_transpose(x);
  const Obj xd = tensor(x, d);
  const Obj dx = tensor(d, x);
  Mor ev(xd, one, matvec_pairing(xd, one, true, [&](std::size_t bl, std::size_t i, std::size_t j) {
           return cell_dim(x, bl, i, j);
         }));
  Mor coev(one, dx, matvec_pairing(dx, one, false, [&](std::size_t bl, std::size_t i, std::size_t j) {
             return cell_dim(x, bl, j, i);
           }));
  return DualData{d, std::move(ev), std::move(coev)};
}

std::pair<Mor, Mor> left_zigzags(const Obj& x, const DualData& d) {
  const Obj& xs = d.dual;
  Mor first = chain({left_unitor_inverse(x), tensor(d.coev, Mor::identity(x)),
                     associator(x, xs, x), tensor(Mor::identity(x), d.ev), right_unitor(x)});
  Mor second = chain({right_unitor_inverse(xs), tensor(Mor::identity(xs), d.coev),
                      associator_inverse(xs, x, xs), tensor(d.ev, Mor::identity(xs)),
                      left_unitor(xs)});
  return {std::move(first), std::move(second)};
}

std::pair<Mor, Mor> right_zigzags(const Obj& x, const DualData& d) {
  const Obj& xs = d.dual;
  Mor first = chain({right_unitor_inverse(x), tensor(Mor::identity(x), d.coev),
                     associator_inverse(x, xs, x), tensor(d.ev, Mor::identity(x)),
                     left_unitor(x)});
  Mor second = chain({left_unitor_inverse(xs), tensor(d.coev, Mor::identity(xs)),
                      associator(xs, x, xs), tensor(Mor::identity(xs), d.ev), right_unitor(xs)});
  return {std::move(first), std::move(second)};
}

QMor q_tensor_unchecked(const QMor& a, const QMor& b) {
  require(a.serre() == b.serre(), ErrorCode::BackendMismatch,
          "quotient morphisms use different Serre subcategories");
  const SerreSpec& c = a.serre();
  const SubObj s1 = canonical_source(c, a.source()).reject;
  const SubObj s2 = canonical_source(c, b.source()).reject;
  const auto t1 = canonical_target(c, a.target());
  const auto t2 = canonical_target(c, b.target());
  const SubObj sub{tensor(s1.object, s2.object), tensor(s1.inclusion, s2.inclusion)};
  return from_direct_system(c, sub, tensor(a.rep(), b.rep()),
                            tensor(t1.quotient.projection, t2.quotient.projection));
}

QMor q_tensor(const QMor& a, const QMor& b) {
  require_tensor(*a.source().backend());
  if (!is_tensor_ideal(a.serre())) {
    fail(ErrorCode::NotTensorIdeal,
         a.serre().describe() + " is not a two-sided tensor ideal");
  }
  return q_tensor_unchecked(a, b);
}

}  // namespace qcat

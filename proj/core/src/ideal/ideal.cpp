#include "qcat/ideal.hpp"

#include <algorithm>

#include "qcat/exactlin/linalg.hpp"
#include "qcat/exactlin/poly.hpp"

namespace qcat {

std::vector<std::size_t> fusion(const BackendPtr& b, std::size_t i, std::size_t j) {
  return composition_factors(tensor(Obj::simple(b, i), Obj::simple(b, j)));
}

bool is_tensor_ideal(const SerreSpec& c) {
  const auto& b = c.backend;
  require_tensor(*b);
  for (auto y : c.simples) {
    for (std::size_t x = 0; x < b->simple_count(); ++x) {
      if (!factors_in(c, fusion(b, x, y)) || !factors_in(c, fusion(b, y, x))) return false;
    }
  }
  return true;
}

SerreSpec tensor_ideal_closure(const SerreSpec& seed) {
  const auto& b = seed.backend;
  require_tensor(*b);
  std::vector<bool> in(b->simple_count(), false);
  for (auto s : seed.simples) in[s] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t y = 0; y < in.size(); ++y) {
      if (!in[y]) continue;
      for (std::size_t x = 0; x < in.size(); ++x) {
        for (const auto& counts : {fusion(b, x, y), fusion(b, y, x)}) {
          for (std::size_t s = 0; s < counts.size(); ++s) {
            if (counts[s] && !in[s]) in[s] = grew = true;
          }
        }
      }
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < in.size(); ++s) {
    if (in[s]) out.push_back(s);
  }
  return SerreSpec::from_indices(b, std::move(out));
}

// ---- End(1) ------------------------------------------------------------------

namespace {

Mat flat(const Mor& f) {
  const Mat t = f.total();
  Mat out(t.field(), t.rows() * t.cols(), 1);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    for (std::size_t j = 0; j < t.cols(); ++j) out.set(i * t.cols() + j, 0, t.at(i, j));
  }
  return out;
}

std::size_t first_nonzero_row(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_zero()) return i;
    }
  }
  return m.rows();
}

// Split an idempotent e of a commutative split semisimple algebra into
// primitive ones, using the minimal polynomial of a non-scalar element of eA.
void split_idempotent(const Mor& e, const std::vector<Mor>& basis, std::vector<Mor>& out) {
  std::vector<Mor> corner;
  for (const auto& x : basis) corner.push_back(compose(e, x));
  std::vector<Mat> cols;
  for (const auto& c : corner) cols.push_back(flat(c));
  const Mat fe = flat(e);
  const Mat span = Mat::hstack(fe.field(), fe.rows(), cols);
  if (lin::rank(span) <= 1) {
    out.push_back(e);
    return;
  }
  const Mor* a = nullptr;
  for (const auto& c : corner) {
    if (lin::rank(Mat::hstack(fe, flat(c))) == 2) {
      a = &c;
      break;
    }
  }
  require(a != nullptr, ErrorCode::BackendContract, "End(1) corner has no non-scalar element");
  const lin::Poly mp = lin::minimal_polynomial(a->total(), e.total());
  const auto rs = lin::roots(mp);
  require(rs.size() + 1 == mp.size(), ErrorCode::BackendContract,
          "End(1) is not a product of copies of the ground field");
  for (std::size_t k = 0; k < rs.size(); ++k) {
    Mor p = e;
    for (std::size_t l = 0; l < rs.size(); ++l) {
      if (l == k) continue;
      const Mor factor = (*a - e.scaled(rs[l])).scaled((rs[k] - rs[l]).inverse());
      p = compose(p, factor);
    }
    split_idempotent(p, basis, out);
  }
}

}  // namespace

std::vector<UnitSummand> unit_decomposition(const BackendPtr& b) {
  const Obj one = unit(b);
  if (one.is_zero()) return {};
  const auto basis = hom_basis(one, one);
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      require(compose(x, y) == compose(y, x), ErrorCode::BackendContract, "End(1) is not commutative");
    }
  }
  std::vector<Mor> idem;
  split_idempotent(Mor::identity(one), basis, idem);
  std::vector<UnitSummand> out;
  for (auto& e : idem) {
    require(compose(e, e) == e, ErrorCode::BackendContract, "splitting produced a non-idempotent");
    SubObj im = image(e);
    out.push_back(UnitSummand{std::move(e), std::move(im)});
  }
  std::stable_sort(out.begin(), out.end(), [](const UnitSummand& x, const UnitSummand& y) {
    return first_nonzero_row(x.idempotent.total()) < first_nonzero_row(y.idempotent.total());
  });
  return out;
}

ComponentGrid component_grid(const BackendPtr& b) {
  const auto units = unit_decomposition(b);
  ComponentGrid g;
  g.size = units.size();
  g.cells.assign(g.size, std::vector<std::vector<std::size_t>>(g.size));
  for (const auto& u : units) {
    auto s = simple_label(u.image.object);
    require(s.has_value(), ErrorCode::BackendContract, "unit summand is not simple");
    g.unit_simple.push_back(*s);
  }
  for (std::size_t s = 0; s < b->simple_count(); ++s) {
    const Obj simple = Obj::simple(b, s);
    std::optional<std::pair<std::size_t, std::size_t>> where;
    for (std::size_t i = 0; i < g.size; ++i) {
      const Obj left = tensor(units[i].image.object, simple);
      if (left.is_zero()) continue;
      for (std::size_t j = 0; j < g.size; ++j) {
        const Obj both = tensor(left, units[j].image.object);
        if (both.is_zero()) continue;
        require(!where.has_value(), ErrorCode::BackendContract,
                "simple " + b->label(s) + " lies in two components");
        require(simple_label(both) == s, ErrorCode::BackendContract,
                "component of " + b->label(s) + " is not the simple itself");
        where = std::make_pair(i, j);
      }
    }
    require(where.has_value(), ErrorCode::BackendContract,
            "simple " + b->label(s) + " lies in no component");
    g.cell_of.push_back(*where);
    g.cells[where->first][where->second].push_back(s);
  }
  return g;
}

std::optional<IdealDescriptor> ideal_from_indices(const ComponentGrid& grid, const BackendPtr& b,
                                                  std::vector<std::size_t> J) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  std::vector<bool> in(grid.size, false);
  for (auto i : J) {
    require(i < grid.size, ErrorCode::InvalidArgument, "unit index out of range");
    in[i] = true;
  }
  for (std::size_t i = 0; i < grid.size; ++i) {
    for (std::size_t k = 0; k < grid.size; ++k) {
      if (in[i] && !in[k] && (grid.nonzero(i, k) || grid.nonzero(k, i))) return std::nullopt;
    }
  }
  std::vector<std::size_t> simples;
  for (std::size_t s = 0; s < grid.cell_of.size(); ++s) {
    if (in[grid.cell_of[s].first] || in[grid.cell_of[s].second]) simples.push_back(s);
  }
  return IdealDescriptor{std::move(J), SerreSpec::from_indices(b, std::move(simples))};
}

IdealDescriptor describe_ideal(const SerreSpec& c) {
  if (!is_tensor_ideal(c)) {
    fail(ErrorCode::NotTensorIdeal, c.describe() + " is not a two-sided tensor ideal");
  }
  const auto grid = component_grid(c.backend);
  std::vector<std::size_t> J;
  for (std::size_t i = 0; i < grid.size; ++i) {
    if (c.contains(grid.unit_simple[i])) J.push_back(i);
  }
  auto d = ideal_from_indices(grid, c.backend, J);
  require(d.has_value() && d->serre == c, ErrorCode::BackendContract,
          "tensor ideal is not determined by its unit summands");
  return std::move(*d);
}

std::vector<IdealDescriptor> enumerate_tensor_ideals(const BackendPtr& b) {
  require_tensor(*b);
  const auto grid = component_grid(b);
  require(grid.size <= 20, ErrorCode::InvalidArgument, "too many unit summands to enumerate");
  std::vector<IdealDescriptor> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << grid.size); ++mask) {
    std::vector<std::size_t> J;
    for (std::size_t i = 0; i < grid.size; ++i) {
      if (mask >> i & 1) J.push_back(i);
    }
    if (auto d = ideal_from_indices(grid, b, std::move(J))) out.push_back(std::move(*d));
  }
  std::sort(out.begin(), out.end(),
            [](const IdealDescriptor& x, const IdealDescriptor& y) { return x.J < y.J; });
  return out;
}

std::optional<std::size_t> monoidal_obstruction(const SerreSpec& c) {
  require_tensor(*c.backend);
  for (auto s : c.simples) {
    const Obj simple = Obj::simple(c.backend, s);
    if (!member(c, tensor(left_dual(simple).dual, simple))) return s;
  }
  return std::nullopt;
}

// ---- quotient model ----------------------------------------------------------

namespace {

struct VertexMap {
  std::vector<std::optional<std::size_t>> to_new;
};

VertexMap vertex_map(const QuotientModel& m) {
  VertexMap vm;
  const auto& src = *m.source;
  const auto& tgt = *m.target;
  vm.to_new.assign(src.vertex_count(), std::nullopt);
  for (std::size_t s = 0; s < src.simple_count(); ++s) {
    if (m.simple_map[s]) vm.to_new[src.simples()[s].vertex] = tgt.simples()[*m.simple_map[s]].vertex;
  }
  return vm;
}

}  // namespace

Obj QuotientModel::surviving_part(const Obj& x) const {
  const auto units = unit_decomposition(source);
  Obj acc = Obj::zero(source);
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (std::binary_search(ideal.J.begin(), ideal.J.end(), i)) continue;
    const Obj left = tensor(units[i].image.object, x);
    for (std::size_t j = 0; j < units.size(); ++j) {
      if (std::binary_search(ideal.J.begin(), ideal.J.end(), j)) continue;
      acc = direct_sum(acc, tensor(left, units[j].image.object));
    }
  }
  return acc;
}

Obj QuotientModel::transport(const Obj& x) const {
  const Obj part = surviving_part(x);
  const auto vm = vertex_map(*this);
  std::vector<std::size_t> dims(target->vertex_count(), 0);
  for (std::size_t v = 0; v < vm.to_new.size(); ++v) {
    if (vm.to_new[v]) {
      dims[*vm.to_new[v]] = part.dim(v);
    } else {
      require(part.dim(v) == 0, ErrorCode::BackendContract, "surviving part meets the ideal");
    }
  }
  std::vector<Mat> maps;
  if (target->vertex_count() > 0) maps = part.maps();
  return Obj(target, std::move(dims), std::move(maps));
}

Mor QuotientModel::transport(const Mor& f) const {
  const Obj src = transport(f.source());
  const Obj tgt = transport(f.target());
  const auto units = unit_decomposition(source);
  // f acts on each summand 1_i (x) X (x) 1_j by id (x) f (x) id.
  std::vector<Mat> comps;
  for (std::size_t v = 0; v < target->vertex_count(); ++v) comps.emplace_back(target->field(), tgt.dim(v), src.dim(v));
  const auto vm = vertex_map(*this);
  std::vector<Mor> pieces;
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (std::binary_search(ideal.J.begin(), ideal.J.end(), i)) continue;
    for (std::size_t j = 0; j < units.size(); ++j) {
      if (std::binary_search(ideal.J.begin(), ideal.J.end(), j)) continue;
      pieces.push_back(tensor(tensor(Mor::identity(units[i].image.object), f),
                              Mor::identity(units[j].image.object)));
    }
  }
  for (std::size_t ov = 0; ov < vm.to_new.size(); ++ov) {
    if (!vm.to_new[ov]) continue;
    std::vector<Mat> parts;
    for (const auto& p : pieces) parts.push_back(p.component(ov));
    comps[*vm.to_new[ov]] = Mat::block_diag(target->field(), parts);
  }
  return Mor(src, tgt, std::move(comps));
}

QuotientModel build_quotient_backend(const BackendPtr& b, const IdealDescriptor& c) {
  require_tensor(*b);
  const auto grid = component_grid(b);
  auto check = ideal_from_indices(grid, b, c.J);
  if (!check || !(check->serre == c.serre)) {
    fail(ErrorCode::NotTensorIdeal, c.serre.describe() + " is not a two-sided tensor ideal");
  }
  QuotientModel m;
  m.source = b;
  m.ideal = *check;
  m.simple_map.assign(b->simple_count(), std::nullopt);

  if (b->kind() == BackendKind::MatVec) {
    std::vector<std::size_t> kept_blocks, new_index(b->blocks().size(), 0);
    for (std::size_t bl = 0; bl < b->blocks().size(); ++bl) {
      const auto s = b->vertex_of({bl, 0, 0});
      if (!c.serre.contains(s)) {
        new_index[bl] = kept_blocks.size();
        kept_blocks.push_back(b->blocks()[bl]);
      }
    }
    m.target = Backend::matvec(b->field(), kept_blocks);
    for (std::size_t s = 0; s < b->simple_count(); ++s) {
      if (c.serre.contains(s)) continue;
      const Cell cell = b->cell(b->simples()[s].vertex);
      m.simple_map[s] = m.target->vertex_of({new_index[cell.block], cell.row, cell.col});
    }
  } else if (c.serre.empty()) {
    m.target = b;
    for (std::size_t s = 0; s < b->simple_count(); ++s) m.simple_map[s] = s;
  } else {
    require(c.serre.is_all(), ErrorCode::BackendContract,
            "a group algebra has only the trivial ideals");
    m.target = Backend::matvec(b->field(), {}, "zero@" + b->field().name());
  }

  const auto new_grid = component_grid(m.target);
  m.unit_map.assign(grid.size, std::nullopt);
  for (std::size_t i = 0; i < grid.size; ++i) {
    const auto s = m.simple_map[grid.unit_simple[i]];
    if (!s) continue;
    for (std::size_t k = 0; k < new_grid.size; ++k) {
      if (new_grid.unit_simple[k] == *s) m.unit_map[i] = k;
    }
    require(m.unit_map[i].has_value(), ErrorCode::BackendContract, "unit summand lost in quotient");
  }
  return m;
}

IdealDescriptor ideal_image_in_quotient(const QuotientModel& model, const IdealDescriptor& c2) {
  std::vector<std::size_t> J;
  for (auto i : c2.J) {
    require(i < model.unit_map.size(), ErrorCode::InvalidArgument, "unit index out of range");
    if (model.unit_map[i]) J.push_back(*model.unit_map[i]);
  }
  const auto grid = component_grid(model.target);
  auto d = ideal_from_indices(grid, model.target, std::move(J));
  if (!d) fail(ErrorCode::NotTensorIdeal, "image of the ideal is not a tensor ideal in the quotient");
  return std::move(*d);
}

}  // namespace qcat

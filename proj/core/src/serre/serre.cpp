#include "qcat/serre.hpp"

#include <algorithm>

#include "qcat/exactlin/linalg.hpp"

namespace qcat {

SerreSpec SerreSpec::none(BackendPtr backend) { return SerreSpec{std::move(backend), {}}; }

SerreSpec SerreSpec::all(BackendPtr backend) {
  std::vector<std::size_t> s(backend->simple_count());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
  return SerreSpec{std::move(backend), std::move(s)};
}

SerreSpec SerreSpec::from_indices(BackendPtr backend, std::vector<std::size_t> simples) {
  for (auto s : simples) {
    require(s < backend->simple_count(), ErrorCode::UnknownObject, "simple index out of range");
  }
  std::sort(simples.begin(), simples.end());
  simples.erase(std::unique(simples.begin(), simples.end()), simples.end());
  return SerreSpec{std::move(backend), std::move(simples)};
}

SerreSpec SerreSpec::from_labels(BackendPtr backend, const std::vector<std::string>& labels) {
  std::vector<std::size_t> idx;
  for (const auto& l : labels) {
    auto i = backend->simple_index(l);
    require(i.has_value(), ErrorCode::UnknownObject, "unknown simple label '" + l + "'");
    idx.push_back(*i);
  }
  return from_indices(std::move(backend), std::move(idx));
}

bool SerreSpec::contains(std::size_t simple) const {
  return std::binary_search(simples.begin(), simples.end(), simple);
}

std::vector<std::string> SerreSpec::labels() const {
  std::vector<std::string> out;
  for (auto s : simples) out.push_back(backend->label(s));
  return out;
}

std::string SerreSpec::describe() const {
  if (simples.empty()) return "0";
  std::string out = "<";
  for (std::size_t i = 0; i < simples.size(); ++i) {
    out += (i ? "," : "") + backend->label(simples[i]);
  }
  return out + ">";
}

void check_same_backend(const SerreSpec& c, const Obj& x) {
  if (!same_backend(c.backend, x.backend())) {
    fail(ErrorCode::BackendMismatch, "Serre subcategory and object use different backends");
  }
}

bool factors_in(const SerreSpec& c, const std::vector<std::size_t>& multiplicities) {
  for (std::size_t s = 0; s < multiplicities.size(); ++s) {
    if (multiplicities[s] != 0 && !c.contains(s)) return false;
  }
  return true;
}

bool member(const SerreSpec& c, const Obj& x) {
  check_same_backend(c, x);
  if (x.is_zero()) return true;
  if (c.is_all()) return true;
  return factors_in(c, composition_factors(x));
}

SubObj serre_socle(const SerreSpec& c, const Obj& m) {
  check_same_backend(c, m);
  const Field f = m.field();
  std::vector<Mat> spans;
  for (auto n : m.dims()) spans.emplace_back(f, n, 0);
  for (auto s : c.simples) {
    const std::size_t v = m.backend()->simples()[s].vertex;
    spans[v] = Mat::hstack(spans[v], simple_socle(m, s));
  }
  return subobject(m, spans);
}

SubObj serre_radical(const SerreSpec& c, const Obj& m) {
  check_same_backend(c, m);
  const auto& b = *m.backend();
  const Field f = m.field();
  // A map m -> S is a functional phi at the vertex of S with phi rho(a) equal
  // to the scalar of a on loops, and zero on arrows arriving from elsewhere.
  std::vector<std::vector<Mat>> functionals(b.vertex_count());
  for (auto s : c.simples) {
    const auto& info = b.simples()[s];
    const std::size_t v = info.vertex;
    const std::size_t d = m.dim(v);
    std::vector<Mat> cols;
    for (std::size_t i = 0; i < b.arrows().size(); ++i) {
      const auto& a = b.arrows()[i];
      if (a.target != v) continue;
      if (a.source == v) {
        cols.push_back(m.map(i) - Mat::identity(f, d).scaled(info.arrow_scalars[i]));
      } else {
        cols.push_back(m.map(i));
      }
    }
    Mat phis = cols.empty() ? Mat::identity(f, d)
                            : lin::kernel_basis(Mat::hstack(f, d, cols).transpose());
    functionals[v].push_back(phis.transpose());
  }
  std::vector<Mat> spans;
  for (std::size_t v = 0; v < b.vertex_count(); ++v) {
    if (functionals[v].empty()) {
      spans.push_back(Mat::identity(f, m.dim(v)));
    } else {
      spans.push_back(lin::kernel_basis(Mat::vstack(f, m.dim(v), functionals[v])));
    }
  }
  return subobject(m, spans);
}

SubObj torsion_part(const SerreSpec& c, const Obj& m) {
  check_same_backend(c, m);
  SubObj t = zero_subobject(m);
  if (c.empty()) return t;
  while (true) {
    const QuotientObj q = quotient_object(m, t);
    const SubObj soc = serre_socle(c, q.object);
    if (soc.dim() == 0) return t;
    t = preimage(q, soc);
  }
}

SubObj reject_part(const SerreSpec& c, const Obj& m) {
  check_same_backend(c, m);
  SubObj r = whole(m);
  if (c.empty()) return r;
  while (r.dim() > 0) {
    const SubObj rad = serre_radical(c, r.object);
    if (rad.dim() == r.dim()) break;
    r = push_forward(r.inclusion, rad);
  }
  return r;
}

}  // namespace qcat

#include "qcat/quotient.hpp"

#include "detail/span_search.hpp"
#include "qcat/exactlin/linalg.hpp"

namespace qcat {

namespace {

void check_serre(const SerreSpec& c, const Obj& x) { check_same_backend(c, x); }

// All entries of a morphism as one column; used to turn linear conditions on
// morphisms into linear systems.
Mat flatten(const Mor& f) {
  std::size_t n = 0;
  for (const auto& c : f.components()) n += c.rows() * c.cols();
  Mat out(f.source().field(), n, 1);
  std::size_t k = 0;
  for (const auto& c : f.components()) {
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t j = 0; j < c.cols(); ++j) out.set(k++, 0, c.at(i, j));
    }
  }
  return out;
}

}  // namespace

CanonicalSource canonical_source(const SerreSpec& c, const Obj& m) {
  return CanonicalSource{reject_part(c, m)};
}

CanonicalTarget canonical_target(const SerreSpec& c, const Obj& n) {
  SubObj t = torsion_part(c, n);
  QuotientObj q = quotient_object(n, t);
  return CanonicalTarget{std::move(t), std::move(q)};
}

QMor::QMor(Obj source, Obj target, SerreSpec c, Mor rep)
    : source_(std::move(source)), target_(std::move(target)), c_(std::move(c)),
      rep_(std::move(rep)) {
  check_serre(c_, source_);
  check_serre(c_, target_);
  require(rep_.source().dim() <= source_.dim() && rep_.target().dim() <= target_.dim(),
          ErrorCode::InvalidMorphism, "representative is not at the canonical pair");
}

QMor QMor::operator+(const QMor& o) const {
  require(c_ == o.c_ && source_ == o.source_ && target_ == o.target_, ErrorCode::ShapeError,
          "adding quotient morphisms with different endpoints");
  return QMor(source_, target_, c_, rep_ + o.rep_);
}

QMor QMor::operator-(const QMor& o) const { return *this + (-o); }
QMor QMor::operator-() const { return QMor(source_, target_, c_, -rep_); }
QMor QMor::scaled(const Scalar& s) const { return QMor(source_, target_, c_, rep_.scaled(s)); }

bool operator==(const QMor& a, const QMor& b) {
  return a.c_ == b.c_ && a.source_ == b.source_ && a.target_ == b.target_ && a.rep_ == b.rep_;
}

std::vector<QMor> qhom_basis(const Obj& m, const Obj& n, const SerreSpec& c) {
  check_same_backend(m, n);
  check_serre(c, m);
  const auto src = canonical_source(c, m);
  const auto tgt = canonical_target(c, n);
  std::vector<QMor> out;
  for (auto& f : hom_basis(src.reject.object, tgt.quotient.object)) out.emplace_back(m, n, c, f);
  return out;
}

QMor canonical_map(const Mor& f, const SerreSpec& c) {
  check_serre(c, f.source());
  const auto src = canonical_source(c, f.source());
  const auto tgt = canonical_target(c, f.target());
  return QMor(f.source(), f.target(), c,
              compose(tgt.quotient.projection, compose(f, src.reject.inclusion)));
}

QMor q_identity(const Obj& m, const SerreSpec& c) { return canonical_map(Mor::identity(m), c); }

QMor q_zero(const Obj& m, const Obj& n, const SerreSpec& c) {
  const auto src = canonical_source(c, m);
  const auto tgt = canonical_target(c, n);
  return QMor(m, n, c, Mor::zero(src.reject.object, tgt.quotient.object));
}

QMor q_compose(const QMor& g, const QMor& f) {
  if (!(f.target() == g.source()) || !(f.serre() == g.serre())) {
    fail(ErrorCode::ComposeError, "quotient morphisms are not composable");
  }
  const auto& c = f.serre();
  const Obj& mid = f.target();
  const auto src = canonical_source(c, mid);
  const auto tgt = canonical_target(c, mid);
  // f's representative lands in the image of c(N) in N/t(N); lift it through
  // c(N) -> N/t(N), whose kernel c(N) meet t(N) is killed by g.
  const Mor h = compose(tgt.quotient.projection, src.reject.inclusion);
  std::vector<Mat> comps;
  for (std::size_t v = 0; v < mid.dims().size(); ++v) {
    auto z = lin::solve(h.component(v), f.rep().component(v));
    require(z.has_value(), ErrorCode::BackendContract,
            "representative does not factor through the canonical source");
    comps.push_back(g.rep().component(v) * *z);
  }
  return QMor(f.source(), g.target(), c, Mor(f.rep().source(), g.rep().target(), std::move(comps)));
}

QMor from_direct_system(const SerreSpec& c, const SubObj& sub, const Mor& phi,
                        const Mor& w_proj) {
  const Obj& m = sub.parent();
  const Obj& w = w_proj.source();
  require(phi.source() == sub.object && phi.target() == w_proj.target(), ErrorCode::ComposeError,
          "direct system data do not fit together");
  const SubObj cm = reject_part(c, m);
  if (!contains(sub, cm)) {
    fail(ErrorCode::BackendContract, "subobject does not have its quotient in the Serre subcategory");
  }
  const auto tgt = canonical_target(c, w);
  if (!contains(tgt.torsion, kernel(w_proj))) {
    fail(ErrorCode::BackendContract, "target kernel does not lie in the Serre subcategory");
  }
  const Mor psi = compose(phi, restrict_to(sub, cm).inclusion);
  std::vector<Mat> comps;
  for (std::size_t v = 0; v < w.dims().size(); ++v) {
    auto lift = lin::solve(w_proj.component(v), psi.component(v));
    require(lift.has_value(), ErrorCode::BackendContract, "target map is not an epimorphism");
    comps.push_back(tgt.quotient.projection.component(v) * *lift);
  }
  return QMor(m, w, c, Mor(cm.object, tgt.quotient.object, std::move(comps)));
}

std::string QClass::name() const {
  if (iso()) return "iso";
  if (zero) return "zero";
  if (mono) return "mono";
  if (epi) return "epi";
  return "general";
}

QClass q_classify(const Mor& f, const SerreSpec& c) {
  check_serre(c, f.source());
  QClass out;
  out.zero = member(c, image(f).object);
  out.mono = member(c, kernel(f).object);
  out.epi = member(c, cokernel(f).object);
  return out;
}

// The canonical inclusion and projection become isomorphisms under T, so the
// representative classifies the quotient morphism.
QClass q_classify(const QMor& q) { return q_classify(q.rep(), q.serre()); }

std::size_t q_length(const Obj& x, const SerreSpec& c) {
  check_serre(c, x);
  const auto counts = composition_factors(x);
  std::size_t n = 0;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    if (!c.contains(s)) n += counts[s];
  }
  return n;
}

std::optional<QMor> q_inverse(const QMor& q) {
  const auto& c = q.serre();
  const auto basis = qhom_basis(q.target(), q.source(), c);
  const Mor id_m = q_identity(q.source(), c).rep();
  const Mor id_n = q_identity(q.target(), c).rep();
  const Mat want = Mat::vstack(flatten(id_m), flatten(id_n));
  if (basis.empty()) {
    if (want.is_zero()) return q_zero(q.target(), q.source(), c);
    return std::nullopt;
  }
  std::vector<Mat> cols;
  for (const auto& b : basis) {
    cols.push_back(Mat::vstack(flatten(q_compose(b, q).rep()), flatten(q_compose(q, b).rep())));
  }
  const Mat system = Mat::hstack(want.field(), want.rows(), cols);
  auto coeffs = lin::solve(system, want);
  if (!coeffs) return std::nullopt;
  QMor inv = q_zero(q.target(), q.source(), c);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Scalar s = coeffs->at(k, 0);
    if (!s.is_zero()) inv = inv + basis[k].scaled(s);
  }
  return inv;
}

std::optional<std::pair<QMor, QMor>> q_find_iso(const Obj& m, const Obj& n, const SerreSpec& c) {
  check_same_backend(m, n);
  check_serre(c, m);
  const auto fm = composition_factors(m);
  const auto fn = composition_factors(n);
  for (std::size_t s = 0; s < fm.size(); ++s) {
    if (!c.contains(s) && fm[s] != fn[s]) return std::nullopt;
  }
  const auto basis = qhom_basis(m, n, c);
  auto q = detail::search_span(basis, m.field(), q_zero(m, n, c),
                               [](const QMor& x) { return q_classify(x).iso(); });
  if (!q) return std::nullopt;
  auto inv = q_inverse(*q);
  require(inv.has_value(), ErrorCode::BackendContract,
          "morphism classified iso has no inverse in the quotient");
  return std::make_pair(std::move(*q), std::move(*inv));
}

bool q_iso(const Obj& m, const Obj& n, const SerreSpec& c) {
  return q_find_iso(m, n, c).has_value();
}

}  // namespace qcat

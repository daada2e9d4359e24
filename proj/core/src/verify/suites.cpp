#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include "qcat/exactlin/linalg.hpp"
#include "qcat/ideal.hpp"
#include "qcat/monoidal.hpp"
#include "qcat/quotient.hpp"
#include "qcat/verify.hpp"

namespace qcat::verify {

using gen::Rng;
using io::Json;

namespace {

// ---- trial plumbing ------------------------------------------------------------

struct Run {
  SuiteReport& report;
  const Options& options;
  const SerreSpec& given;
  std::map<std::vector<std::size_t>, QuotientModel> models;

  const BackendPtr& backend() const { return given.backend; }

  const QuotientModel& model(const SerreSpec& c) {
    auto it = models.find(c.simples);
    if (it == models.end()) {
      it = models.emplace(c.simples, build_quotient_backend(c.backend, describe_ideal(c))).first;
    }
    return it->second;
  }
};

struct Trial {
  Run& run;
  std::size_t index;
  Rng rng;
  SerreSpec c;

  template <class DataFn>
  void check(bool ok, const char* name, DataFn&& data) {
    ++run.report.checks;
    if (ok) return;
    if (run.report.failures.size() >= run.options.max_failures) return;
    Json d = data();
    d["serre"] = io::to_json(c);
    run.report.failures.push_back(Failure{index, name, std::move(d)});
  }
  void check(bool ok, const char* name) {
    check(ok, name, [] { return Json::object(); });
  }
  void nontrivial() { ++run.report.nontrivial; }

  Obj object(std::size_t max_dim = 0, std::size_t max_cell = 0) {
    gen::Bounds b = run.options.bounds;
    if (max_dim) b.max_dim = std::min(b.max_dim, max_dim);
    if (max_cell) b.max_cell = std::min(b.max_cell, max_cell);
    return gen::random_object(run.backend(), rng, b);
  }
  std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
};

Json objs(std::initializer_list<std::pair<const char*, Obj>> items) {
  Json j;
  for (const auto& [k, v] : items) j[k] = io::to_json(v);
  return j;
}

SerreSpec random_subset(const BackendPtr& b, Rng& rng) {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < b->simple_count(); ++i) {
    if (rng() & 1) s.push_back(i);
  }
  return SerreSpec::from_indices(b, std::move(s));
}

// Kernel lies in C: project away part of the torsion, then embed.
Mor random_t_mono(const SerreSpec& c, const Obj& m, Trial& t) {
  const SubObj tor = torsion_part(c, m);
  const SubObj k = push_forward(tor.inclusion, gen::random_subobject(tor.object, t.rng));
  const QuotientObj q = quotient_object(m, k);
  const Biproduct bp = biproduct(q.object, t.object(2));
  return compose(bp.in1, q.projection);
}

// Cokernel lies in C: include something containing the reject, after a
// projection off a random extra summand.
Mor random_t_epi(const SerreSpec& c, const Obj& m, Trial& t) {
  const SubObj s = sum(reject_part(c, m), gen::random_subobject(m, t.rng));
  const Biproduct bp = biproduct(s.object, t.object(2));
  return compose(s.inclusion, bp.pr1);
}

Mor random_morphism_from(const SerreSpec& c, const Obj& m, Trial& t) {
  switch (t.pick(4)) {
    case 0: return random_t_mono(c, m, t);
    case 1: return random_t_epi(c, m, t);
    case 2: {
      const QuotientObj q = quotient_object(m, gen::random_subobject(m, t.rng));
      return q.projection;
    }
    default: {
      const Obj n = t.object();
      return gen::random_morphism(m, n, t.rng);
    }
  }
}

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

// Rank of a family of quotient morphisms.
std::size_t q_rank(const std::vector<QMor>& family, const Field& f) {
  if (family.empty()) return 0;
  std::vector<Mat> cols;
  for (const auto& q : family) cols.push_back(flatten(q.rep()));
  return lin::rank(Mat::hstack(f, cols.front().rows(), cols));
}

// A random morphism M -> N that T sends to zero.
Mor random_t_null(const SerreSpec& c, const Obj& m, const Obj& n, Rng& rng) {
  const auto basis = hom_basis(m, n);
  if (basis.empty()) return Mor::zero(m, n);
  std::vector<Mat> cols;
  for (const auto& h : basis) cols.push_back(flatten(canonical_map(h, c).rep()));
  const Mat images = Mat::hstack(m.field(), cols.front().rows(), cols);
  const Mat null = lin::kernel_basis(images);
  Mor acc = Mor::zero(m, n);
  for (std::size_t k = 0; k < null.cols(); ++k) {
    const Scalar s = gen::random_scalar(m.field(), rng);
    if (s.is_zero()) continue;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Scalar w = null.at(i, k) * s;
      if (!w.is_zero()) acc = acc + basis[i].scaled(w);
    }
  }
  return acc;
}

// ---- suites ------------------------------------------------------------------

void classification_trial(Trial& t) {
  const auto& c = t.c;
  const Obj m = t.object();
  const Mor f = random_morphism_from(c, m, t);
  const Obj& src = f.source();
  const Obj& n = f.target();
  const QClass cls = q_classify(f, c);
  const QMor tf = canonical_map(f, c);
  auto data = [&] {
    Json j = io::to_json(f);
    j["class"] = cls.name();
    return j;
  };
  t.check(tf.is_zero() == cls.zero, "zero iff image in C", data);
  t.check(canonical_map(kernel(f).inclusion, c).is_zero() == cls.mono, "mono iff T kills kernel", data);
  t.check(canonical_map(cokernel(f).projection, c).is_zero() == cls.epi, "epi iff T kills cokernel",
          data);
  const auto inv = q_inverse(tf);
  t.check(inv.has_value() == cls.iso(), "iso iff invertible in quotient", data);
  if (inv) {
    t.nontrivial();
    t.check(q_compose(*inv, tf) == q_identity(src, c) && q_compose(tf, *inv) == q_identity(n, c),
            "inverse composites are identities", data);
  }
  const Obj x = t.object(4);
  if (cls.mono) {
    const auto into = qhom_basis(x, src, c);
    std::vector<QMor> after;
    for (const auto& u : into) after.push_back(q_compose(tf, u));
    t.check(q_rank(after, src.field()) == into.size(), "mono is left cancellable", data);
  }
  if (cls.epi) {
    const auto out = qhom_basis(n, x, c);
    std::vector<QMor> before;
    for (const auto& u : out) before.push_back(q_compose(u, tf));
    t.check(q_rank(before, src.field()) == out.size(), "epi is right cancellable", data);
  }
}

void length_trial(Trial& t) {
  const auto& c = t.c;
  const Obj x = t.object();
  const std::size_t l = length(x);
  const std::size_t ql = q_length(x, c);
  const auto factors = composition_factors(x);
  auto data = [&] { return objs({{"x", x}}); };
  t.check(ql <= l, "quotient length bounded by length", data);
  t.check((ql == l) == (std::all_of(c.simples.begin(), c.simples.end(),
                                    [&](std::size_t s) { return factors[s] == 0; })),
          "equality iff no factor in C", data);
  t.check((ql == 0) == member(c, x), "zero length iff member", data);
  if (ql > 0 && ql < l) t.nontrivial();

  // Steps of a composition series that survive in A/C.
  const auto series = composition_series(x, &t.rng);
  std::size_t survivors = 0;
  for (std::size_t i = 0; i + 1 < series.chain.size(); ++i) {
    const Mor step = restrict_to(series.chain[i + 1], series.chain[i]).inclusion;
    const QClass cls = q_classify(step, c);
    t.check(cls.mono, "series step is mono in quotient", data);
    if (!cls.epi) ++survivors;
  }
  t.check(survivors == ql, "quotient length equals surviving series steps", data);
  t.check(composition_factors(x, &t.rng) == factors, "factors independent of series", data);

  const std::size_t s = t.pick(c.backend->simple_count());
  const std::size_t qs = q_length(Obj::simple(c.backend, s), c);
  t.check(qs == (c.contains(s) ? 0u : 1u), "simple has quotient length zero or one",
          [&] { return Json{{"simple", c.backend->label(s)}}; });
}

void hom_finite_trial(Trial& t) {
  const auto& c = t.c;
  const Obj m = t.object(), n = t.object();
  const auto basis = qhom_basis(m, n, c);
  const SubObj cm = reject_part(c, m);
  const SubObj tn = torsion_part(c, n);
  const QuotientObj nq = quotient_object(n, tn);
  auto data = [&] { return objs({{"m", m}, {"n", n}}); };
  t.check(basis.size() == hom_basis(cm.object, nq.object).size(), "dimension at canonical pair",
          data);
  t.check(basis.size() <= cm.dim() * nq.object.dim(), "finite dimensional bound", data);
  t.check(q_rank(basis, m.field()) == basis.size(), "basis is independent", data);

  // Any index (M', N') with M' containing the reject and N' inside the
  // torsion maps into the canonical pair.
  const SubObj m1 = sum(cm, gen::random_subobject(m, t.rng));
  const SubObj n1 = push_forward(tn.inclusion, gen::random_subobject(tn.object, t.rng));
  const QuotientObj q1 = quotient_object(n, n1);
  const Mor phi = gen::random_morphism(m1.object, q1.object, t.rng);
  bool ok = true;
  try {
    (void)from_direct_system(c, m1, phi, q1.projection);
  } catch (const Error&) {
    ok = false;
  }
  t.check(ok, "direct system element has a canonical form", data);
  if (m1.dim() > cm.dim() || n1.dim() > 0) t.nontrivial();
}

void functoriality_trial(Trial& t) {
  const auto& c = t.c;
  const Obj m = t.object(5), n = t.object(5), p = t.object(5), r = t.object(5);
  const Mor f = gen::random_morphism(m, n, t.rng);
  const Mor f2 = gen::random_morphism(m, n, t.rng);
  const Mor g = gen::random_morphism(n, p, t.rng);
  const Mor h = gen::random_morphism(p, r, t.rng);
  const QMor tf = canonical_map(f, c), tg = canonical_map(g, c), th = canonical_map(h, c);
  auto data = [&] {
    return Json{{"f", io::to_json(f)}, {"g", io::to_json(g)}, {"h", io::to_json(h)}};
  };
  t.check(q_compose(tg, tf) == canonical_map(compose(g, f), c), "T preserves composition", data);
  t.check(canonical_map(f + f2, c) == tf + canonical_map(f2, c), "T is additive", data);
  t.check(canonical_map(Mor::identity(m), c) == q_identity(m, c), "T preserves identities", data);
  t.check(q_compose(tf, q_identity(m, c)) == tf && q_compose(q_identity(n, c), tf) == tf,
          "identities are neutral", data);
  t.check(q_compose(th, q_compose(tg, tf)) == q_compose(q_compose(th, tg), tf),
          "composition is associative", data);
  // Quotient morphisms that need not come from A.
  const auto b1 = qhom_basis(m, n, c), b2 = qhom_basis(n, p, c), b3 = qhom_basis(p, r, c);
  auto pick = [&](const std::vector<QMor>& b, const Obj& s, const Obj& d) {
    QMor acc = q_zero(s, d, c);
    for (const auto& q : b) acc = acc + q.scaled(gen::random_scalar(s.field(), t.rng));
    return acc;
  };
  const QMor u = pick(b1, m, n), v = pick(b2, n, p), w = pick(b3, p, r);
  if (!u.is_zero() && !v.is_zero()) t.nontrivial();
  t.check(q_compose(w, q_compose(v, u)) == q_compose(q_compose(w, v), u),
          "composition of general quotient morphisms is associative", data);
  const QMor u2 = pick(b1, m, n);
  t.check(q_compose(v, u + u2) == q_compose(v, u) + q_compose(v, u2), "composition is bilinear",
          data);
}

void colimit_trial(Trial& t) {
  const auto& c = t.c;
  constexpr std::size_t cap = 600;
  std::optional<std::vector<SubObj>> subs_m, subs_n;
  Obj m = Obj::zero(c.backend), n = m;
  // Redraw objects whose lattice is too large to enumerate.
  for (int attempt = 0; attempt < 50; ++attempt) {
    m = t.object(1 + t.pick(5));
    n = t.object(std::max<std::size_t>(1, 6 - m.dim()));
    if (m.dim() + n.dim() > 6) continue;
    subs_m = all_subobjects(m, cap);
    if (!subs_m) continue;
    subs_n = all_subobjects(n, cap);
    if (subs_n) break;
  }
  if (!subs_m || !subs_n) return;
  auto data = [&] { return objs({{"m", m}, {"n", n}}); };

  std::vector<SubObj> adm_m, adm_n;
  for (auto& s : *subs_m) {
    if (member(c, quotient_object(m, s).object)) adm_m.push_back(s);
  }
  for (auto& s : *subs_n) {
    if (member(c, s.object)) adm_n.push_back(s);
  }
  // Greatest index of the direct system, found by enumeration.
  SubObj low = adm_m.front();
  for (const auto& s : adm_m) low = intersection(low, s);
  SubObj high = adm_n.front();
  for (const auto& s : adm_n) high = sum(high, s);
  bool greatest = false;
  for (const auto& s : adm_m) greatest = greatest || same_subobject(s, low);
  t.check(greatest, "intersection of admissible sources is admissible", data);
  greatest = false;
  for (const auto& s : adm_n) greatest = greatest || same_subobject(s, high);
  t.check(greatest, "sum of admissible targets is admissible", data);
  t.check(same_subobject(low, reject_part(c, m)), "reject is the least admissible source", data);
  t.check(same_subobject(high, torsion_part(c, n)), "torsion is the greatest admissible target",
          data);

  const std::size_t qdim = qhom_basis(m, n, c).size();
  const std::size_t top = hom_basis(low.object, quotient_object(n, high).object).size();
  t.check(qdim == top, "canonical pair matches enumerated greatest index", data);

  // The colimit itself: direct sum over all indices modulo the transition
  // maps along covering relations.
  struct Index {
    std::size_t i, j;
    QuotientObj q;
    std::vector<Mor> basis;
    std::size_t offset;
  };
  std::vector<Index> idx;
  std::size_t total = 0;
  for (std::size_t i = 0; i < adm_m.size(); ++i) {
    for (std::size_t j = 0; j < adm_n.size(); ++j) {
      QuotientObj q = quotient_object(n, adm_n[j]);
      auto basis = hom_basis(adm_m[i].object, q.object);
      idx.push_back(Index{i, j, std::move(q), std::move(basis), total});
      total += idx.back().basis.size();
      if (total > 400) return;  // literal colimit too large; greatest index checked above
    }
  }
  t.nontrivial();
  auto covers = [](const std::vector<SubObj>& subs, std::size_t a, std::size_t b) {
    // a strictly inside b with nothing admissible in between
    if (subs[a].dim() >= subs[b].dim() || !contains(subs[b], subs[a])) return false;
    for (std::size_t k = 0; k < subs.size(); ++k) {
      if (k == a || k == b) continue;
      if (subs[k].dim() > subs[a].dim() && subs[k].dim() < subs[b].dim() &&
          contains(subs[k], subs[a]) && contains(subs[b], subs[k])) {
        return false;
      }
    }
    return true;
  };
  const Field f = m.field();
  std::vector<Mat> relations;
  auto at = [&](std::size_t i, std::size_t j) -> const Index& {
    return idx[i * adm_n.size() + j];
  };
  for (const auto& from : idx) {
    std::vector<const Index*> succ;
    for (std::size_t i2 = 0; i2 < adm_m.size(); ++i2) {
      if (covers(adm_m, i2, from.i)) succ.push_back(&at(i2, from.j));
    }
    for (std::size_t j2 = 0; j2 < adm_n.size(); ++j2) {
      if (covers(adm_n, from.j, j2)) succ.push_back(&at(from.i, j2));
    }
    for (const Index* to : succ) {
      const SubObj restr = restrict_to(adm_m[from.i], adm_m[to->i]);
      // N/N'_from -> N/N'_to
      std::vector<Mat> pcomp;
      for (std::size_t v = 0; v < n.dims().size(); ++v) {
        auto z = lin::solve(from.q.projection.component(v).transpose(),
                            to->q.projection.component(v).transpose());
        pcomp.push_back(z->transpose());
      }
      const Mor proj(from.q.object, to->q.object, std::move(pcomp));
      std::vector<Mat> target_cols;
      for (const auto& b : to->basis) target_cols.push_back(flatten(b));
      for (std::size_t k = 0; k < from.basis.size(); ++k) {
        const Mor moved = compose(proj, compose(from.basis[k], restr.inclusion));
        Mat rel(f, total, 1);
        rel.set(from.offset + k, 0, 1L);
        if (!to->basis.empty()) {
          const Mat span = Mat::hstack(f, target_cols.front().rows(), target_cols);
          auto coords = lin::solve(span, flatten(moved));
          for (std::size_t r = 0; r < to->basis.size(); ++r) {
            rel.set(to->offset + r, 0, rel.at(to->offset + r, 0) - coords->at(r, 0));
          }
        }
        relations.push_back(std::move(rel));
      }
    }
  }
  const std::size_t rk = relations.empty() ? 0 : lin::rank(Mat::hstack(f, total, relations));
  t.check(total - rk == qdim, "literal colimit dimension equals canonical pair", [&] {
    Json j = data();
    j["colimit_dim"] = total - rk;
    j["canonical_dim"] = qdim;
    return j;
  });
}

// -- tensor suites --

void kernel_membership_trial(Trial& t) {
  const auto& c = t.c;
  const Obj m = t.object(3, 1), x = t.object(3, 1);
  const Mor f = random_morphism_from(c, m, t);
  const Mor g = random_morphism_from(c, x, t);
  const Mor fg = tensor(f, g);
  auto data = [&] { return Json{{"f", io::to_json(f)}, {"g", io::to_json(g)}}; };
  if (member(c, kernel(f).object) && member(c, kernel(g).object)) {
    t.nontrivial();
    t.check(member(c, kernel(fg).object), "kernels in C give a tensor kernel in C", data);
  }
  if (member(c, cokernel(f).object) && member(c, cokernel(g).object)) {
    t.nontrivial();
    t.check(member(c, cokernel(fg).object), "cokernels in C give a tensor cokernel in C", data);
  }
}

void mono_trial(Trial& t) {
  const auto& c = t.c;
  const Obj m = t.object(3, 1), x = t.object(3, 1);
  const SubObj s1 = gen::random_subobject(m, t.rng), s2 = gen::random_subobject(x, t.rng);
  const Mor i = tensor(s1.inclusion, s2.inclusion);
  auto data = [&] { return objs({{"m", m}, {"x", x}}); };
  t.check(kernel(i).dim() == 0, "mono tensor mono is mono", data);
  const Mor f = random_t_mono(c, m, t), g = random_t_mono(c, x, t);
  t.check(q_classify(f, c).mono && q_classify(g, c).mono, "generated maps are monic in quotient",
          data);
  t.check(q_classify(tensor(f, g), c).mono, "quotient monos tensor to a mono", data);
  if (!kernel(f).object.is_zero() || !kernel(g).object.is_zero()) t.nontrivial();
}

void epi_trial(Trial& t) {
  const auto& c = t.c;
  const Obj m = t.object(3, 1), x = t.object(3, 1);
  const QuotientObj q1 = quotient_object(m, gen::random_subobject(m, t.rng));
  const QuotientObj q2 = quotient_object(x, gen::random_subobject(x, t.rng));
  auto data = [&] { return objs({{"m", m}, {"x", x}}); };
  t.check(cokernel(tensor(q1.projection, q2.projection)).object.is_zero(), "epi tensor epi is epi",
          data);
  const Mor f = random_t_epi(c, m, t), g = random_t_epi(c, x, t);
  t.check(q_classify(f, c).epi && q_classify(g, c).epi, "generated maps are epic in quotient", data);
  t.check(q_classify(tensor(f, g), c).epi, "quotient epis tensor to an epi", data);
  if (!cokernel(f).object.is_zero() || !cokernel(g).object.is_zero()) t.nontrivial();
}

void well_defined_trial(Trial& t) {
  const auto& c = t.c;
  const Obj m = t.object(3, 1), n = t.object(3, 1), x = t.object(3, 1), y = t.object(3, 1);
  const Mor f = gen::random_morphism(m, n, t.rng);
  const Mor g = gen::random_morphism(x, y, t.rng);
  const Mor h1 = random_t_null(c, m, n, t.rng);
  const Mor h2 = random_t_null(c, x, y, t.rng);
  const Mor f1 = f + h1, g1 = g + h2;
  auto data = [&] {
    return Json{{"f", io::to_json(f)}, {"g", io::to_json(g)}, {"h1", io::to_json(h1)},
                {"h2", io::to_json(h2)}};
  };
  const QMor tf = canonical_map(f, c), tg = canonical_map(g, c);
  t.check(canonical_map(f1, c) == tf && canonical_map(g1, c) == tg, "lifts have the same class",
          data);
  const QMor prod = q_tensor(tf, tg);
  t.check(prod == canonical_map(tensor(f, g), c), "T f (x) T g = T(f (x) g)", data);
  t.check(prod == canonical_map(tensor(f1, g1), c), "independent of the lifts", data);
  if (!h1.is_zero() || !h2.is_zero()) t.nontrivial();
  t.check(q_tensor(q_identity(m, c), q_identity(x, c)) == q_identity(tensor(m, x), c),
          "identity tensor identity", data);
}

// Pentagon and triangle as pairs of morphisms, in A.
std::pair<Mor, Mor> pentagon(const Obj& w, const Obj& x, const Obj& y, const Obj& z) {
  const Mor lhs = compose(associator(w, x, tensor(y, z)), associator(tensor(w, x), y, z));
  const Mor rhs = compose(tensor(Mor::identity(w), associator(x, y, z)),
                          compose(associator(w, tensor(x, y), z),
                                  tensor(associator(w, x, y), Mor::identity(z))));
  return {lhs, rhs};
}

std::pair<Mor, Mor> triangle(const Obj& x, const Obj& y) {
  const Obj one = unit(x.backend());
  const Mor lhs = compose(tensor(Mor::identity(x), left_unitor(y)), associator(x, one, y));
  const Mor rhs = tensor(right_unitor(x), Mor::identity(y));
  return {lhs, rhs};
}

void monoidal_trial(Trial& t) {
  const auto& c = t.c;
  const Obj w = t.object(2, 1), x = t.object(2, 1), y = t.object(2, 1), z = t.object(2, 1);
  auto data = [&] { return objs({{"w", w}, {"x", x}, {"y", y}, {"z", z}}); };
  const auto [p1, p2] = pentagon(w, x, y, z);
  t.check(p1 == p2, "pentagon", data);
  const auto [t1, t2] = triangle(x, y);
  t.check(t1 == t2, "triangle", data);

  const Mor f = gen::random_morphism(x, w, t.rng), g = gen::random_morphism(y, x, t.rng),
            h = gen::random_morphism(z, y, t.rng);
  t.check(compose(associator(w, x, y), tensor(tensor(f, g), h)) ==
              compose(tensor(f, tensor(g, h)), associator(x, y, z)),
          "associator is natural", data);

  // After T: edges tensored with identities are built in the quotient.
  auto ta = [&](const Obj& a, const Obj& b, const Obj& d) {
    return canonical_map(associator(a, b, d), c);
  };
  const QMor lhs = q_compose(ta(w, x, tensor(y, z)), ta(tensor(w, x), y, z));
  const QMor rhs = q_compose(q_tensor(q_identity(w, c), ta(x, y, z)),
                             q_compose(ta(w, tensor(x, y), z),
                                       q_tensor(ta(w, x, y), q_identity(z, c))));
  t.check(lhs == rhs, "pentagon in the quotient", data);
  const Obj one = unit(x.backend());
  const QMor tl = q_compose(q_tensor(q_identity(x, c), canonical_map(left_unitor(y), c)),
                            canonical_map(associator(x, one, y), c));
  const QMor tr = q_tensor(canonical_map(right_unitor(x), c), q_identity(y, c));
  t.check(tl == tr, "triangle in the quotient", data);
  if (!member(c, tensor(tensor(w, x), tensor(y, z)))) t.nontrivial();

  const QuotientModel& model = t.run.model(c);
  const Obj mw = model.transport(w), mx = model.transport(x), my = model.transport(y),
            mz = model.transport(z);
  const auto [m1, m2] = pentagon(mw, mx, my, mz);
  t.check(m1 == m2, "pentagon in the quotient model", data);
  const auto [m3, m4] = triangle(mx, my);
  t.check(m3 == m4, "triangle in the quotient model", data);
}

bool exact_in_a(const Mor& i, const Mor& p) {
  return kernel(i).dim() == 0 && cokernel(p).object.is_zero() &&
         same_subobject(image(i), kernel(p));
}

void multiring_trial(Trial& t) {
  const auto& c = t.c;
  const Obj m = t.object(3, 1), n = t.object(3, 1), x = t.object(3, 1), y = t.object(3, 1);
  auto data = [&] { return objs({{"m", m}, {"n", n}, {"x", x}, {"y", y}}); };
  const auto bmn = qhom_basis(m, n, c), bxy = qhom_basis(x, y, c);
  auto pick = [&](const std::vector<QMor>& b, const Obj& s, const Obj& d) {
    QMor acc = q_zero(s, d, c);
    for (const auto& q : b) acc = acc + q.scaled(gen::random_scalar(s.field(), t.rng));
    return acc;
  };
  const QMor q1 = pick(bmn, m, n), q2 = pick(bmn, m, n), q3 = pick(bxy, x, y);
  const Scalar s = gen::random_scalar(m.field(), t.rng);
  t.check(q_tensor(q1 + q2, q3) == q_tensor(q1, q3) + q_tensor(q2, q3), "left additive", data);
  t.check(q_tensor(q3, q1 + q2) == q_tensor(q3, q1) + q_tensor(q3, q2), "right additive", data);
  t.check(q_tensor(q1.scaled(s), q3) == q_tensor(q1, q3).scaled(s) &&
              q_tensor(q1, q3.scaled(s)) == q_tensor(q1, q3).scaled(s),
          "scalar compatible", data);
  if (!q1.is_zero() && !q3.is_zero()) t.nontrivial();

  // Short exact sequence 0 -> S -> M -> M/S -> 0 tensored on both sides.
  const SubObj sub = gen::random_subobject(m, t.rng);
  const QuotientObj q = quotient_object(m, sub);
  const Mor idx = Mor::identity(x);
  const Mor li = tensor(idx, sub.inclusion), lp = tensor(idx, q.projection);
  const Mor ri = tensor(sub.inclusion, idx), rp = tensor(q.projection, idx);
  t.check(exact_in_a(li, lp) && exact_in_a(ri, rp), "tensoring is exact", data);
  for (const auto& [i, p] : {std::pair{li, lp}, std::pair{ri, rp}}) {
    t.check(q_classify(i, c).mono && q_classify(p, c).epi && q_classify(compose(p, i), c).zero,
            "exact after T", data);
    t.check(q_length(i.target(), c) == q_length(i.source(), c) + q_length(p.target(), c),
            "quotient length additive", data);
  }

  // The quotient model: unit, surviving parts and Hom spaces.
  const QuotientModel& model = t.run.model(c);
  const Obj one = unit(c.backend);
  t.check(is_isomorphic(model.transport(one), unit(model.target)), "T of unit is the model unit",
          data);
  t.check(unit_decomposition(model.target).size() ==
              unit_decomposition(c.backend).size() - model.ideal.J.size(),
          "model unit has the surviving summands", data);
  t.check(q_iso(model.surviving_part(m), m, c), "surviving part is isomorphic in quotient", data);
  t.check(qhom_basis(m, n, c).size() ==
              hom_basis(model.transport(m), model.transport(n)).size(),
          "quotient Hom matches the model", data);
  const Obj mm = model.transport(m), mx = model.transport(x);
  if (!mm.is_zero()) {
    const SubObj ms = gen::random_subobject(mm, t.rng);
    const QuotientObj mq = quotient_object(mm, ms);
    t.check(exact_in_a(tensor(Mor::identity(mx), ms.inclusion),
                       tensor(Mor::identity(mx), mq.projection)),
            "model tensor is exact", data);
  }
}

void rigid_trial(Trial& t) {
  const auto& c = t.c;
  const Obj x = t.object(3, 1);
  auto data = [&] { return objs({{"x", x}}); };
  const DualData l = left_dual(x), r = right_dual(x);
  const auto [l1, l2] = left_zigzags(x, l);
  const auto [r1, r2] = right_zigzags(x, r);
  t.check(l1 == Mor::identity(x) && l2 == Mor::identity(l.dual), "left zigzags", data);
  t.check(r1 == Mor::identity(x) && r2 == Mor::identity(r.dual), "right zigzags", data);

  auto tm = [&](const Mor& f) { return canonical_map(f, c); };
  auto qid = [&](const Obj& o) { return q_identity(o, c); };
  const Obj& xs = l.dual;
  QMor z1 = q_compose(tm(right_unitor(x)),
                      q_compose(q_tensor(qid(x), tm(l.ev)),
                                q_compose(tm(associator(x, xs, x)),
                                          q_compose(q_tensor(tm(l.coev), qid(x)),
                                                    tm(Mor::identity(x))))));
  // The left unitor inverse is the identity matrix, so T of it is q_identity
  // on the same carrier.
  t.check(z1 == qid(x), "left zigzag in the quotient", data);
  QMor z2 = q_compose(q_tensor(tm(l.ev), qid(xs)),
                      q_compose(tm(associator_inverse(xs, x, xs)), q_tensor(qid(xs), tm(l.coev))));
  t.check(z2.rep() == qid(xs).rep(), "dual zigzag in the quotient", data);
  const Obj& ys = r.dual;
  QMor z3 = q_compose(q_tensor(tm(r.ev), qid(x)),
                      q_compose(tm(associator_inverse(x, ys, x)), q_tensor(qid(x), tm(r.coev))));
  t.check(z3.rep() == qid(x).rep(), "right zigzag in the quotient", data);
  if (!member(c, x)) t.nontrivial();

  const QuotientModel& model = t.run.model(c);
  const Obj mx = model.transport(x);
  const DualData ml = left_dual(mx), mr = right_dual(mx);
  const auto [a1, a2] = left_zigzags(mx, ml);
  const auto [b1, b2] = right_zigzags(mx, mr);
  t.check(a1 == Mor::identity(mx) && a2 == Mor::identity(ml.dual) && b1 == Mor::identity(mx) &&
              b2 == Mor::identity(mr.dual),
          "zigzags in the quotient model", data);
}

// -- classification suites (one pass, independent of trials) --

void tensor_category_pass(Trial& t) {
  const auto& b = t.c.backend;
  const auto ideals = enumerate_tensor_ideals(b);
  t.check(ideals.size() == 2 && ideals.front().serre.empty() && ideals.back().serre.is_all(),
          "only the trivial ideals", [&] {
            Json j = Json::array();
            for (const auto& d : ideals) j.push_back(d.serre.describe());
            return Json{{"ideals", j}};
          });
  for (std::size_t i = 0; i < b->simple_count(); ++i) {
    const Obj x = Obj::simple(b, i);
    t.check(cokernel(left_dual(x).ev).object.is_zero(), "evaluation onto the unit is epi",
            [&] { return Json{{"simple", b->label(i)}}; });
  }
  const std::size_t n = b->simple_count();
  if (n > 12) return;
  const std::size_t unit_simple = component_grid(b).unit_simple.front();
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    const SerreSpec c = SerreSpec::from_indices(b, s);
    auto data = [&] { return Json{{"candidate", c.describe()}}; };
    t.nontrivial();
    t.check(tensor_ideal_closure(c).is_all(), "closure of a nonzero subset is everything", data);
    t.check(monoidal_obstruction(c).has_value() || c.contains(unit_simple),
            "unobstructed subsets contain the unit", data);
  }
}

void classification_pass(Trial& t) {
  const auto& b = t.c.backend;
  const auto grid = component_grid(b);
  const auto ideals = enumerate_tensor_ideals(b);
  auto listing = [&] {
    Json j = Json::array();
    for (const auto& d : ideals) j.push_back(d.serre.describe());
    return Json{{"ideals", j}};
  };
  const std::size_t n = b->simple_count();
  if (n <= 12) {
    // Brute force: every simple subset closed under tensoring with simples.
    std::vector<std::vector<std::vector<std::size_t>>> table(n, std::vector<std::vector<std::size_t>>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) table[i][j] = fusion(b, i, j);
    }
    std::vector<std::vector<std::size_t>> brute;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      bool closed = true;
      for (std::size_t y = 0; y < n && closed; ++y) {
        if (!(mask >> y & 1)) continue;
        for (std::size_t x = 0; x < n && closed; ++x) {
          for (const auto* counts : {&table[x][y], &table[y][x]}) {
            for (std::size_t s = 0; s < n; ++s) {
              if ((*counts)[s] && !(mask >> s & 1)) closed = false;
            }
          }
        }
      }
      if (!closed) continue;
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1) s.push_back(i);
      }
      brute.push_back(std::move(s));
    }
    std::vector<std::vector<std::size_t>> enumerated;
    for (const auto& d : ideals) enumerated.push_back(d.serre.simples);
    std::sort(brute.begin(), brute.end());
    std::sort(enumerated.begin(), enumerated.end());
    t.nontrivial();
    t.check(brute == enumerated, "enumeration equals brute force", listing);
  }
  for (const auto& d : ideals) {
    auto data = [&] { return Json{{"ideal", d.serre.describe()}}; };
    t.check(is_tensor_ideal(d.serre), "enumerated ideal is a tensor ideal", data);
    t.check(tensor_ideal_closure(d.serre) == d.serre, "enumerated ideal is closed", data);
    bool dichotomy = true, vanishing = true;
    for (std::size_t i = 0; i < grid.size; ++i) {
      for (std::size_t j = 0; j < grid.size; ++j) {
        const auto& cell = grid.cells[i][j];
        const auto in = std::count_if(cell.begin(), cell.end(),
                                      [&](std::size_t s) { return d.serre.contains(s); });
        dichotomy = dichotomy && (in == 0 || in == static_cast<long>(cell.size()));
        const bool ji = std::binary_search(d.J.begin(), d.J.end(), i);
        const bool jj = std::binary_search(d.J.begin(), d.J.end(), j);
        if (ji != jj) vanishing = vanishing && cell.empty();
      }
    }
    t.check(dichotomy, "each cell lies wholly inside or outside", data);
    t.check(vanishing, "no cell joins J to its complement", data);
    std::vector<std::size_t> units;
    for (std::size_t i = 0; i < grid.size; ++i) {
      if (d.serre.contains(grid.unit_simple[i])) units.push_back(i);
    }
    t.check(units == d.J, "J is the set of unit summands in the ideal", data);
  }
  // Images of larger ideals in quotients by smaller ones.
  for (const auto& d1 : ideals) {
    const QuotientModel model = build_quotient_backend(b, d1);
    for (const auto& d2 : ideals) {
      if (!std::includes(d2.J.begin(), d2.J.end(), d1.J.begin(), d1.J.end())) continue;
      const IdealDescriptor img = ideal_image_in_quotient(model, d2);
      t.check(img.J.size() == d2.J.size() - d1.J.size(), "image ideal has the remaining summands",
              [&] { return Json{{"ideal", d1.serre.describe()}, {"larger", d2.serre.describe()}}; });
    }
  }
}

// ---- registry ------------------------------------------------------------------

enum class Needs { Any, PrimeField, TensorIdeal, TensorCategory, Tensor };

struct Suite {
  SuiteInfo info;
  Needs needs;
  bool per_trial;
  std::function<void(Trial&)> body;
};

const std::vector<Suite>& registry() {
  static const std::vector<Suite> all = {
      {{"quotient_classification", "lemma_2_4",
        "zero/mono/epi/iso in A/C from image, kernel and cokernel membership"},
       Needs::Any, true, classification_trial},
      {{"quotient_length", "prop_3_2", "finite length in A/C and simples of length at most one"},
       Needs::Any, true, length_trial},
      {{"quotient_hom_finite", "lemma_3_3", "quotient Hom spaces at the canonical pair"},
       Needs::Any, true, hom_finite_trial},
      {{"functoriality_T", "functoriality_T", "T preserves composition, sums and identities"},
       Needs::Any, true, functoriality_trial},
      {{"colimit_oracle", "colimit_oracle", "canonical pair against the enumerated direct system"},
       Needs::PrimeField, true, colimit_trial},
      {{"tensor_kernel_membership", "lemma_4_1", "kernels and cokernels of f (x) g stay in C"},
       Needs::TensorIdeal, true, kernel_membership_trial},
      {{"tensor_mono", "lemma_4_2", "tensor of monomorphisms"}, Needs::TensorIdeal, true, mono_trial},
      {{"tensor_epi", "lemma_4_3", "tensor of epimorphisms"}, Needs::TensorIdeal, true, epi_trial},
      {{"tensor_well_defined", "prop_4_5", "quotient tensor is independent of lifts"},
       Needs::TensorIdeal, true, well_defined_trial},
      {{"quotient_monoidal", "prop_4_8", "pentagon and triangle in A/C"}, Needs::TensorIdeal, true,
       monoidal_trial},
      {{"quotient_multiring", "prop_4_9", "bilinear, biexact quotient tensor and its model"},
       Needs::TensorIdeal, true, multiring_trial},
      {{"quotient_rigid", "prop_4_10", "duals survive in A/C"}, Needs::TensorIdeal, true,
       rigid_trial},
      {{"tensor_category_ideals", "prop_4_11", "a tensor category has only trivial ideals"},
       Needs::TensorCategory, false, tensor_category_pass},
      {{"ideal_classification", "prop_4_16", "ideals from unit summands against brute force"},
       Needs::Tensor, false, classification_pass},
  };
  return all;
}

const Suite& lookup(const std::string& name) {
  for (const auto& s : registry()) {
    if (s.info.name == name || s.info.alias == name) return s;
  }
  fail(ErrorCode::UnknownSuite, "unknown suite '" + name + "'");
}

void check_needs(const Suite& s, const SerreSpec& c, const Options& options) {
  const auto& b = *c.backend;
  const std::string who = "suite " + s.info.name + ": ";
  switch (s.needs) {
    case Needs::Any: return;
    case Needs::PrimeField:
      require(b.field().is_prime(), ErrorCode::RequirementUnmet,
              who + "subobject enumeration needs a prime field");
      return;
    case Needs::Tensor:
      require(is_tensor_backend(b), ErrorCode::RequirementUnmet, who + "needs a tensor backend");
      return;
    case Needs::TensorCategory:
      require(is_tensor_backend(b), ErrorCode::RequirementUnmet, who + "needs a tensor backend");
      require(component_grid(c.backend).size == 1, ErrorCode::RequirementUnmet,
              who + "needs a simple unit object");
      return;
    case Needs::TensorIdeal:
      require(is_tensor_backend(b), ErrorCode::RequirementUnmet, who + "needs a tensor backend");
      require(options.random_serre || is_tensor_ideal(c), ErrorCode::RequirementUnmet,
              who + c.describe() + " is not a two-sided tensor ideal");
      return;
  }
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& s : registry()) out.push_back(s.info);
    return out;
  }();
  return infos;
}

const SuiteInfo& find_suite(const std::string& name_or_alias) { return lookup(name_or_alias).info; }

SuiteReport run_suite(const std::string& name, const SerreSpec& c, std::size_t trials,
                      std::uint64_t seed, const Options& options) {
  const Suite& suite = lookup(name);
  check_needs(suite, c, options);
  SuiteReport report;
  report.suite = suite.info.name;
  report.alias = suite.info.alias;
  report.backend = c.backend->id();
  report.serre = options.random_serre && suite.per_trial ? "random" : c.describe();
  const std::size_t count = suite.per_trial ? trials : std::min<std::size_t>(trials, 1);
  report.trials = count;
  report.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  Run run{report, options, c, {}};
  std::vector<IdealDescriptor> ideals;
  if (options.random_serre && suite.needs == Needs::TensorIdeal) {
    ideals = enumerate_tensor_ideals(c.backend);
  }
  for (std::size_t i = 0; i < count; ++i) {
    Trial t{run, i, gen::trial_rng(seed, i), c};
    if (options.random_serre && suite.per_trial) {
      if (!ideals.empty()) {
        t.c = ideals[t.pick(ideals.size())].serre;
      } else {
        t.c = random_subset(c.backend, t.rng);
      }
    }
    try {
      suite.body(t);
    } catch (const Error& e) {
      t.check(false, "no error", [&] {
        return Json{{"error", std::string(to_string(e.code())) + ": " + e.what()}};
      });
    }
  }
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<SuiteReport> run_all(const SerreSpec& c, std::size_t trials, std::uint64_t seed,
                                 const Options& options) {
  std::vector<SuiteReport> out;
  for (const auto& s : registry()) {
    try {
      out.push_back(run_suite(s.info.name, c, trials, seed, options));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RequirementUnmet) throw;
      SuiteReport r;
      r.suite = s.info.name;
      r.alias = s.info.alias;
      r.backend = c.backend->id();
      r.serre = c.describe();
      r.trials = 0;
      r.seed = seed;
      r.skipped = true;
      r.skip_reason = e.what();
      out.push_back(std::move(r));
    }
  }
  return out;
}

Json to_json(const SuiteReport& r, bool timing) {
  Json j;
  j["suite"] = r.suite;
  j["alias"] = r.alias;
  j["backend"] = r.backend;
  j["serre"] = r.serre;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["checks"] = r.checks;
  j["nontrivial"] = r.nontrivial;
  j["passed"] = r.passed();
  j["vacuous"] = r.vacuous();
  j["skipped"] = r.skipped;
  if (r.skipped) j["skip_reason"] = r.skip_reason;
  Json fails = Json::array();
  for (const auto& f : r.failures) {
    fails.push_back(Json{{"trial", f.trial}, {"check", f.check}, {"data", f.data}});
  }
  j["failures"] = fails;
  if (timing) j["wall_ms"] = r.wall_ms;
  return j;
}

}  // namespace qcat::verify

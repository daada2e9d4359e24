#include <set>

#include "qcat/exactlin/linalg.hpp"
#include "qcat/verify.hpp"

namespace qcat::verify {

namespace {

std::string key_of(const SubObj& s) {
  std::string key;
  for (std::size_t v = 0; v < s.parent().dims().size(); ++v) {
    key += lin::rref(s.span(v).transpose()).reduced.to_string();
    key += '|';
  }
  return key;
}

}  // namespace

std::optional<std::vector<SubObj>> all_subobjects(const Obj& m, std::size_t cap) {
  const Field f = m.field();
  require(f.is_prime(), ErrorCode::RequirementUnmet, "subobject enumeration needs a finite field");
  const std::uint64_t p = f.characteristic();
  std::vector<SubObj> found{zero_subobject(m)};
  std::set<std::string> seen{key_of(found.front())};
  // Grow each known subobject by one vector of the quotient, taken up to
  // scalars (first nonzero coordinate equal to one).
  for (std::size_t next = 0; next < found.size(); ++next) {
    const QuotientObj q = quotient_object(m, found[next]);
    const std::size_t d = q.object.dim();
    if (d == 0) continue;
    const Mat lift = Mat::block_diag(f, [&] {
      std::vector<Mat> parts;
      for (std::size_t v = 0; v < m.dims().size(); ++v) {
        parts.push_back(lin::complement_basis(m.dim(v), found[next].span(v)));
      }
      return parts;
    }());
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 1; code < count; ++code) {
      Mat vec(f, d, 1);
      std::uint64_t x = code;
      std::size_t lead = d;
      for (std::size_t i = 0; i < d; ++i) {
        const auto c = static_cast<long>(x % p);
        x /= p;
        if (c != 0 && lead == d) lead = i;
        vec.set(i, 0, c);
      }
      if (vec.at(lead, 0) != Scalar::one(f)) continue;
      const Mat carrier = Mat::hstack(found[next].inclusion.total(), lift * vec);
      SubObj s = spin_submodule(m, carrier);
      if (seen.insert(key_of(s)).second) {
        if (found.size() >= cap) return std::nullopt;
        found.push_back(std::move(s));
      }
    }
  }
  return found;
}

}  // namespace qcat::verify

#include "qcat/exactlin/field.hpp"

#include <charconv>
#include <ostream>

#include "exactlin/ops.hpp"
#include "qcat/error.hpp"

namespace qcat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::ShapeError: return "ShapeError";
    case ErrorCode::DegenerateBasis: return "DegenerateBasis";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::BackendMismatch: return "BackendMismatch";
    case ErrorCode::NotSubobject: return "NotSubobject";
    case ErrorCode::InvalidMorphism: return "InvalidMorphism";
    case ErrorCode::ComposeError: return "ComposeError";
    case ErrorCode::NotTensorIdeal: return "NotTensorIdeal";
    case ErrorCode::BackendContract: return "BackendContract";
    case ErrorCode::RequirementUnmet: return "RequirementUnmet";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::UnknownObject: return "UnknownObject";
    case ErrorCode::EmptyBackend: return "EmptyBackend";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace qcat

namespace qcat::lin {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint32_t p) {
  require(p < (1u << 31), ErrorCode::InvalidArgument, "prime must be below 2^31");
  require(is_prime_number(p), ErrorCode::InvalidArgument,
          "GF(p) requires p prime, got " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ" || text == "rationals") return rationals();
  std::string_view body = text;
  if (body.starts_with("GF(") && body.ends_with(")")) {
    body = body.substr(3, body.size() - 4);
  } else if (body.starts_with("GF")) {
    body = body.substr(2);
    while (!body.empty() && body.front() == ' ') body.remove_prefix(1);
  } else {
    fail(ErrorCode::ParseError, "unknown field '" + std::string(text) + "'");
  }
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
  require(ec == std::errc() && ptr == body.data() + body.size(), ErrorCode::ParseError,
          "bad field characteristic in '" + std::string(text) + "'");
  return prime(p);
}

std::string Field::name() const {
  if (is_rational()) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

std::ostream& operator<<(std::ostream& os, const Field& f) { return os << f.name(); }

namespace {

mpq_class reduce(const Field& f, const mpq_class& v) {
  if (f.is_rational()) return v;
  detail::PrimeOps ops{f.characteristic()};
  return detail::PrimeOps::to(ops.from(v));
}

void check(const Scalar& a, const Scalar& b) {
  require(a.field() == b.field(), ErrorCode::FieldMismatch,
          "field mismatch: " + a.field().name() + " vs " + b.field().name());
}

}  // namespace

Scalar::Scalar(Field field, long value) : field_(field), value_(reduce(field, mpq_class(value))) {}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field), value_(reduce(field, value)) {
  value_.canonicalize();
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  require(!s.empty(), ErrorCode::ParseError, "empty scalar");
  for (char c : s) {
    bool ok = (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '/';
    require(ok, ErrorCode::ParseError, "bad scalar '" + s + "'");
  }
  if (s.front() == '+') s.erase(s.begin());
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(ErrorCode::ParseError, "bad scalar '" + s + "'");
  require(q.get_den() != 0, ErrorCode::DivisionByZero, "zero denominator in '" + s + "'");
  q.canonicalize();
  return Scalar(f, q);
}

Scalar Scalar::operator-() const { return Scalar(field_, mpq_class(-value_)); }

Scalar Scalar::inverse() const {
  require(!is_zero(), ErrorCode::DivisionByZero, "division by zero");
  return Scalar(field_, mpq_class(1 / value_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check(a, b);
  return Scalar(a.field_, mpq_class(a.value_ + b.value_));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  check(a, b);
  return Scalar(a.field_, mpq_class(a.value_ - b.value_));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  check(a, b);
  return Scalar(a.field_, mpq_class(a.value_ * b.value_));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  check(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const { return value_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace qcat::lin

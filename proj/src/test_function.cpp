#include "test_function.hpp"

#include <cmath>
#include <sstream>

#include "error.hpp"
#include "rng.hpp"

namespace tlab {

TestFunction TestFunction::translation(double ux, double uy) {
  const double n = std::hypot(ux, uy);
  if (!(n > 0.0)) fail(ErrorCode::InvalidArgument, "translation direction is zero");
  TestFunction f;
  f.kind_ = Kind::Translation;
  f.poly_ = TrigPoly(0.0, {ux / n}, {uy / n});
  std::ostringstream os;
  os << "translation:" << ux / n << "," << uy / n;
  f.spec_ = os.str();
  return f;
}

TestFunction TestFunction::dilation() {
  TestFunction f;
  f.kind_ = Kind::Dilation;
  f.poly_ = TrigPoly(1.0);
  f.spec_ = "dilation";
  return f;
}

TestFunction TestFunction::trig(TrigPoly p) {
  TestFunction f;
  f.kind_ = Kind::Trig;
  f.poly_ = std::move(p);
  std::ostringstream os;
  os << "trig:c0=" << f.poly_.c0;
  for (int k = 1; k <= f.poly_.degree(); ++k) {
    if (f.poly_.cos_coeffs[k - 1] != 0.0)
      os << ";k=" << k << ",a=" << f.poly_.cos_coeffs[k - 1];
    if (f.poly_.sin_coeffs[k - 1] != 0.0)
      os << ";k=" << k << ",b=" << f.poly_.sin_coeffs[k - 1];
  }
  f.spec_ = os.str();
  return f;
}

TestFunction TestFunction::tabulated(BoundaryField field) {
  TestFunction f;
  f.kind_ = Kind::Tabulated;
  f.table_ = std::move(field);
  f.spec_ = "tabulated";
  return f;
}

TestFunction TestFunction::random(std::uint64_t seed, int degree, double amplitude) {
  if (degree < 1) fail(ErrorCode::InvalidArgument, "random test function degree >= 1");
  std::mt19937_64 rng(seed);
  TrigPoly p(uniform(rng, -amplitude, amplitude));
  p.cos_coeffs.assign(degree, 0.0);
  p.sin_coeffs.assign(degree, 0.0);
  for (int k = 1; k <= degree; ++k) {
    const double bound = amplitude / std::max(1.0, static_cast<double>(k) * k);
    p.cos_coeffs[k - 1] = uniform(rng, -bound, bound);
    p.sin_coeffs[k - 1] = uniform(rng, -bound, bound);
  }
  TestFunction f = trig(std::move(p));
  std::ostringstream os;
  os << "random:" << seed << ":" << degree;
  f.spec_ = os.str();
  return f;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

double parse_num(const std::string& s) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "bad number '" + s + "' in test function spec");
  }
}

}  // namespace

TestFunction TestFunction::parse(const std::string& spec) {
  const auto head = split(spec, ':');
  if (head.empty()) fail(ErrorCode::ParseError, "empty test function spec");
  const std::string& kind = head[0];
  if (kind == "dilation") return dilation();
  if (kind == "translation") {
    if (head.size() != 2) fail(ErrorCode::ParseError, "translation needs a direction");
    if (head[1] == "x") return translation(1.0, 0.0);
    if (head[1] == "y") return translation(0.0, 1.0);
    const auto xy = split(head[1], ',');
    if (xy.size() != 2) fail(ErrorCode::ParseError, "translation direction must be x, y or vx,vy");
    return translation(parse_num(xy[0]), parse_num(xy[1]));
  }
  if (kind == "random") {
    if (head.size() < 3) fail(ErrorCode::ParseError, "random test function needs seed:degree");
    const auto seed = static_cast<std::uint64_t>(parse_num(head[1]));
    const int degree = static_cast<int>(parse_num(head[2]));
    const double amp = head.size() > 3 ? parse_num(head[3]) : 0.4;
    return random(seed, degree, amp);
  }
  if (kind == "trig") {
    if (head.size() != 2) fail(ErrorCode::ParseError, "trig spec needs terms");
    TrigPoly p(0.0);
    for (const auto& term : split(head[1], ';')) {
      int k = -1;
      double a = 0.0, b = 0.0;
      bool has_a = false, has_b = false;
      for (const auto& kv : split(term, ',')) {
        const auto pair = split(kv, '=');
        if (pair.size() != 2) fail(ErrorCode::ParseError, "bad trig term '" + term + "'");
        if (pair[0] == "k") k = static_cast<int>(parse_num(pair[1]));
        else if (pair[0] == "a") { a = parse_num(pair[1]); has_a = true; }
        else if (pair[0] == "b") { b = parse_num(pair[1]); has_b = true; }
        else if (pair[0] == "c0") p.c0 = parse_num(pair[1]);
        else fail(ErrorCode::ParseError, "unknown trig key '" + pair[0] + "'");
      }
      if (k < 0 && (has_a || has_b))
        fail(ErrorCode::ParseError, "trig term missing k: '" + term + "'");
      if (k > 0) {
        if (k > static_cast<int>(p.cos_coeffs.size())) {
          p.cos_coeffs.resize(k, 0.0);
          p.sin_coeffs.resize(k, 0.0);
        }
        if (has_a) p.cos_coeffs[k - 1] += a;
        if (has_b) p.sin_coeffs[k - 1] += b;
      }
    }
    TestFunction f = trig(std::move(p));
    f.spec_ = spec;
    return f;
  }
  fail(ErrorCode::ParseError, "unknown test function kind '" + kind + "'");
}

const TrigPoly& TestFunction::coeffs() const {
  if (!is_trig_like())
    fail(ErrorCode::InvalidArgument, "tabulated test function has no coefficients");
  return poly_;
}

double TestFunction::eval(double theta) const {
  if (kind_ == Kind::Tabulated) return table_->interp_cubic(theta);
  return poly_.eval(theta);
}

BoundaryField TestFunction::sample(int n) const {
  if (kind_ == Kind::Tabulated) {
    if (table_->size() == n) return *table_;
    BoundaryField r(n);
    for (int m = 0; m < n; ++m) r[m] = table_->interp_cubic(2.0 * M_PI * m / n);
    return r;
  }
  BoundaryField r(n);
  for (int m = 0; m < n; ++m) r[m] = poly_.eval(2.0 * M_PI * m / n);
  return r;
}

BoundaryField TestFunction::sample_deriv(int n) const {
  if (kind_ == Kind::Tabulated) return sample(n).spectral_derivative();
  BoundaryField r(n);
  for (int m = 0; m < n; ++m) r[m] = poly_.deriv(2.0 * M_PI * m / n);
  return r;
}

BoundaryField TestFunction::sample_second_plus_self(int n) const {
  if (kind_ == Kind::Tabulated)
    fail(ErrorCode::InvalidArgument, "tabulated test function cannot perturb a support");
  BoundaryField r(n);
  for (int m = 0; m < n; ++m) r[m] = poly_.second_plus_self(2.0 * M_PI * m / n);
  return r;
}

}  // namespace tlab

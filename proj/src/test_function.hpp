#pragma once
#include <cstdint>
#include <optional>
#include <string>

#include "boundary_field.hpp"
#include "trig_poly.hpp"

namespace tlab {

/// Perturbation / test function phi on S^1 (equivalently psi on the body
/// boundary through the Gauss map). Translation and dilation kinds are the
/// special directions of the theory: translation:u evaluates to xi . u and
/// dilation to the constant 1. Tabulated fields can be integrated but not
/// used as support perturbations.
class TestFunction {
public:
  enum class Kind { Translation, Dilation, Trig, Tabulated };

  static TestFunction translation(double ux, double uy);
  static TestFunction dilation();
  static TestFunction trig(TrigPoly p);
  static TestFunction tabulated(BoundaryField f);
  /// Decaying random trig polynomial: coefficients ~ U[-1,1] * amp / max(1,k^2).
  static TestFunction random(std::uint64_t seed, int degree, double amplitude = 0.4);

  /// Mini-language: "translation:x", "translation:y", "dilation",
  /// "trig:k=2,a=0.1;k=3,b=0.05", "random:seed:degree".
  static TestFunction parse(const std::string& spec);

  Kind kind() const { return kind_; }
  const std::string& spec() const { return spec_; }
  bool is_trig_like() const { return kind_ != Kind::Tabulated; }

  /// Coefficient view; throws for tabulated functions.
  const TrigPoly& coeffs() const;

  double eval(double theta) const;
  BoundaryField sample(int n) const;
  BoundaryField sample_deriv(int n) const;
  /// phi'' + phi, entering the convexity margin of h + t*phi.
  BoundaryField sample_second_plus_self(int n) const;

private:
  Kind kind_ = Kind::Dilation;
  TrigPoly poly_;
  std::optional<BoundaryField> table_;
  std::string spec_;
};

}  // namespace tlab

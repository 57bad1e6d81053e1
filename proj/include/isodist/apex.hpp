#pragma once

// Triangles (1, theta, 1): unit legs AB = AC = 1, base BC = theta.
//
// Working frame for points: A(0,0), B(1,0), C(a,b) with a = cos w = 1 - theta^2/2
// and b = sin w >= 0, where w is the apex angle.

#include "isodist/exact_real.hpp"
#include "isodist/quadratic.hpp"
#include "isodist/radical_sum.hpp"
#include "isodist/rational.hpp"

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace isodist::apex {

class ApexTriangle {
 public:
  /// Requires 0 <= theta^2 <= 4.
  explicit ApexTriangle(ExactReal theta_sq);

  const ExactReal& theta_sq() const { return theta_sq_; }
  bool degenerate() const;
  /// a = 1 - theta^2/2, in Q or Q(sqrt b) for theta^2 = A +- sqrt(b).
  Quadratic cos_apex() const;

 private:
  ExactReal theta_sq_;
};

/// theta^2 = 2(1 + pq + s*sqrt((1-p^2)(1-q^2))), -1 <= p, q <= 1.
struct ApexWitness {
  Rational p;
  Rational q;
  Sign s = Sign::Plus;

  /// Throws DomainError unless p, q lie in [-1, 1].
  void validate() const;
  /// The canonical theta^2 this witness stands for.
  ExactReal realize() const;

  friend bool operator==(const ApexWitness&, const ApexWitness&) = default;
};

enum class Route { RationalCase, SurdCase };

enum class Failure { NegativeDiscriminant, IrrationalRoots, RootOutOfRange, RootNotSquare };

/// f(t) = t^2 - linear*t + constant, whose roots are p^2 and q^2.
struct Trinomial {
  Rational linear;
  Rational constant;
  Rational discriminant() const { return linear * linear - Rational(4) * constant; }
};

struct Suitable {
  ApexWitness witness;
  Route route = Route::RationalCase;
};

struct NotSuitable {
  Failure reason = Failure::NegativeDiscriminant;
  Trinomial trinomial;
  std::vector<Rational> roots;  // present when rational
};

using Decision = std::variant<Suitable, NotSuitable>;

std::string to_string(Route r);
std::string to_string(Failure f);

/// Exact decision for the apex family.
Decision decide(const ApexTriangle& t);
/// The trinomial whose roots must be squares in [0,1]; theta^2 = A +- sqrt(B).
Trinomial apex_trinomial(const Rational& A, const Rational& B);

/// Point with rational distances R = MA, S = MB, T = MC.
struct ApexCertificate {
  Rational R, S, T;
  Rational u, v;
  Rational coord_x;
  RadicalSum coord_y;
  bool on_line_ab = false;
};

/// a and b of the working frame, exact in a multiquadratic field.
struct ApexFrame {
  RadicalSum a;
  RadicalSum b;
};

/// Frame for rational a.
ApexFrame frame_for_rational(const Rational& a);
/// Frame from a witness, via the a-form a = p'q' + s'sqrt(D) with
/// (p', q', s') = (-p, q, -s). Then b = |q' sqrt(1-p'^2) - s' p' sqrt(1-q'^2)|.
ApexFrame frame_for_witness(const ApexWitness& w);

/// Points on line AB for rational theta^2, one per psi not in {a, 1, -1}.
std::vector<ApexCertificate> lemma21_points(const ApexTriangle& t, std::span<const Rational> psis);
/// The first `count` psi of the Stern-Brocot walk that avoid {a, 1, -1}.
std::vector<Rational> default_psi_sweep(const Rational& a, std::size_t count);

struct Rst {
  Rational R, S, T;
  friend bool operator==(const Rst&, const Rst&) = default;
};

/// R, S, T with (R^2 - S^2 + 1)/(2R) = p and (R^2 - T^2 + 1)/(2R) = q.
/// Requires p + q != 0 and |p - q| != 2.
Rst lemma22_rst(const Rational& p, const Rational& q);

/// Points realizing a witness. For p' + q' = 0 the apex cosine is rational and
/// the psi sweep of `sweep_count` points is used instead.
std::vector<ApexCertificate> construct_points(const ApexTriangle& t, const ApexWitness& w,
                                              std::size_t sweep_count = 8);

/// Recovers a witness from three rational distances; R != 0, 0 < theta^2 < 4.
ApexWitness extract_witness(const Rational& R, const Rational& S, const Rational& T, const ApexTriangle& t);

/// R^2 a^2 + u^2 + v^2 == R^2 + 2 a u v, exactly.
bool relation_one_holds(const Rational& R, const Rational& u, const Rational& v, const Quadratic& a);

/// Exact re-check of a certificate: u and v definitions, u^2, v^2 <= R^2,
/// relation one, u^2 + y^2 = R^2, (u-1)^2 + y^2 = S^2 and the sign of y
/// against v - ua.
bool check_certificate(const ApexTriangle& t, const ApexCertificate& c);

/// MA^2, MB^2, MC^2 recomputed from coordinates in the given frame.
std::array<RadicalSum, 3> squared_distances(const ApexCertificate& c, const ApexFrame& f);

/// A line through the apex A: vertical, or y = slope * x.
struct Line {
  bool vertical = false;
  RadicalSum slope;

  bool same_as(const Line& o) const { return vertical == o.vertical && (vertical || slope == o.slope); }
  std::string to_string() const;
};

struct LocusReport {
  std::vector<Line> candidates;
  std::array<Line, 2> pair;
  bool product_zero = false;  // p0 q0 == 0
  /// The pair is matched by reflection across the apex bisector.
  bool pairing_reconstructed = true;
};

/// Mirror image test across the apex bisector, exact.
bool mirror_pair(const Line& l1, const Line& l2, const ApexFrame& f);

/// For irrational theta^2: candidate lines through A and the symmetric pair
/// that holds all solution points.
LocusReport locus_lines(const ApexTriangle& t, const ApexWitness& w);

/// True iff the point (u, y) lies on the line.
bool on_line(const Line& l, const Rational& x, const RadicalSum& y);

}  // namespace isodist::apex

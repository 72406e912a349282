#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "natural.hpp"
#include "opcount.hpp"
#include "primefield.hpp"
#include "strategy.hpp"

namespace nkecc {

// Short Weierstrass curve y^2 = x^3 + ax + b over GF(p). Construction checks
// p > 3 and non-singularity (4a^3 + 27b^2 != 0 mod p); it does not verify
// that p is prime. With validate_inputs set, point operations reject inputs
// that do not satisfy the curve equation; benchmarking paths construct the
// curve with validation off.
struct CurveParams {
    Natural p;
    FieldElement a;
    FieldElement b;
    bool validate_inputs = true;

    CurveParams(const Natural& p, const Natural& a, const Natural& b,
                bool validate_inputs = true);
};

// Affine point or the point at infinity (the group identity). Default
// construction yields infinity.
class Point {
public:
    Point() = default;

    static Point infinity() { return Point{}; }
    static Point affine(FieldElement x, FieldElement y) {
        Point p;
        p.coords_.emplace(std::move(x), std::move(y));
        return p;
    }

    bool is_infinity() const { return !coords_.has_value(); }
    const FieldElement& x() const { return coords_->first; }
    const FieldElement& y() const { return coords_->second; }

    bool operator==(const Point&) const = default;

private:
    std::optional<std::pair<FieldElement, FieldElement>> coords_;
};

enum class StepKind { Double, AddP };

// Group-operation schedule of a scalar multiplication, recorded so that
// replaying it from infinity (Double: Q = 2Q, AddP: Q = Q + P) rebuilds the
// result. Both scalar-multiplication variants produce traces with this
// replay semantics; the recursive variant records its steps in evaluation
// order.
struct ScalarTrace {
    std::vector<StepKind> steps;
    std::uint64_t doublings = 0;
    std::uint64_t additions = 0;
};

struct ScalarMulResult {
    Point point;
    ScalarTrace trace;
    OpCount count;
};

bool is_on_curve(const Point& P, const CurveParams& C);

Point point_neg(const Point& P, const CurveParams& C);

// Chord rule; handles identity, inverse and equal-point cases. Counted field
// multiplications: the slope product, its square, and the slope times
// (Xp - Xr). Inversions are uncounted.
std::pair<Point, OpCount> point_add(const Point& P, const Point& Q,
                                    const CurveParams& C, const StrategySpec& spec);

// Tangent rule; 2*inf = inf and doubling a point with y = 0 gives infinity.
std::pair<Point, OpCount> point_double(const Point& P, const CurveParams& C,
                                       const StrategySpec& spec);

// Most-significant-bit-first double-and-add over the binary digits of n.
// The trace records one Double per bit of n (the first acts on infinity and
// costs nothing) and one AddP per set bit.
ScalarMulResult scalar_mul_binary(const Natural& n, const Point& P,
                                  const CurveParams& C, const StrategySpec& spec);

// Recursive form: f(P, 0) = inf, f(P, n) = P + f(P, n-1) for odd n and
// f(2P, n/2) for even n.
ScalarMulResult scalar_mul_recursive(const Natural& n, const Point& P,
                                     const CurveParams& C, const StrategySpec& spec);

// Applies a trace from infinity. Untallied.
Point replay_trace(const ScalarTrace& trace, const Point& P, const CurveParams& C);

// Renders a trace as a doubling/addition expression, e.g. "2(2(P+2P))".
std::string expansion_string(const ScalarTrace& trace);

// Text forms used by the CLI: point "(x,y)" or "inf"; curve "p=<n> a=<n> b=<n>".
std::string point_to_text(const Point& P);
Point point_from_text(std::string_view text, const CurveParams& C);
CurveParams curve_from_text(std::string_view text, bool validate_inputs = true,
                            std::uint32_t radix = 10);

} // namespace nkecc

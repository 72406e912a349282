#include "weierstrass.hpp"

#include <sstream>

namespace nkecc {

namespace {

const StrategySpec kPlain = StrategySpec::make(StrategyKind::Schoolbook);

FieldElement fe_mul_plain(const FieldElement& a, const FieldElement& b) {
    return fe_mul(a, b, kPlain).first;
}

FieldElement fe_small(std::uint64_t v, const Natural& p) {
    return fe_new(Natural::from_u64(v, p.radix()), p);
}

void require_on_curve(const Point& P, const CurveParams& C, const char* role) {
    if (!is_on_curve(P, C))
        throw Error(ErrorCode::NotOnCurve,
                    std::string(role) + " does not satisfy the curve equation");
}

// Unvalidated group law; callers check inputs according to C.validate_inputs.
Point add_impl(const Point& P, const Point& Q, const CurveParams& C,
               const StrategySpec& spec, OpCount& t);

Point double_impl(const Point& P, const CurveParams& C, const StrategySpec& spec,
                  OpCount& t) {
    if (P.is_infinity()) return P;
    if (P.y().is_zero()) return Point::infinity(); // vertical tangent

    // lambda = (3x^2 + a) / 2y
    auto [xx, c1] = fe_mul(P.x(), P.x(), spec);
    t += c1;
    FieldElement num = fe_add(fe_add(xx, xx), xx);
    num = fe_add(num, C.a);
    FieldElement den = fe_add(P.y(), P.y());
    auto [lambda, c2] = fe_mul(num, fe_inv(den), spec);
    t += c2;

    auto [ll, c3] = fe_mul(lambda, lambda, spec);
    t += c3;
    FieldElement xr = fe_sub(fe_sub(ll, P.x()), P.x());
    auto [yr_prod, c4] = fe_mul(lambda, fe_sub(P.x(), xr), spec);
    t += c4;
    FieldElement yr = fe_sub(yr_prod, P.y());
    return Point::affine(std::move(xr), std::move(yr));
}

Point add_impl(const Point& P, const Point& Q, const CurveParams& C,
               const StrategySpec& spec, OpCount& t) {
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    if (P.x() == Q.x()) {
        if (P.y() == Q.y()) return double_impl(P, C, spec, t);
        return Point::infinity(); // P + (-P)
    }

    // lambda = (Yq - Yp) / (Xq - Xp)
    FieldElement num = fe_sub(Q.y(), P.y());
    FieldElement den = fe_sub(Q.x(), P.x());
    auto [lambda, c1] = fe_mul(num, fe_inv(den), spec);
    t += c1;

    auto [ll, c2] = fe_mul(lambda, lambda, spec);
    t += c2;
    FieldElement xr = fe_sub(fe_sub(ll, P.x()), Q.x());
    auto [yr_prod, c3] = fe_mul(lambda, fe_sub(P.x(), xr), spec);
    t += c3;
    FieldElement yr = fe_sub(yr_prod, P.y());
    return Point::affine(std::move(xr), std::move(yr));
}

} // namespace

CurveParams::CurveParams(const Natural& p_in, const Natural& a_in,
                         const Natural& b_in, bool validate)
    : p(p_in), a(fe_new(a_in, p_in)), b(fe_new(b_in, p_in)),
      validate_inputs(validate) {
    if (compare(p, Natural::from_u64(3, p.radix())) != Ordering::Greater)
        throw Error(ErrorCode::Domain, "field modulus must exceed 3");
    // 4a^3 + 27b^2 != 0 (mod p)
    FieldElement a3 = fe_mul_plain(fe_mul_plain(a, a), a);
    FieldElement b2 = fe_mul_plain(b, b);
    FieldElement d = fe_add(fe_mul_plain(fe_small(4, p), a3),
                            fe_mul_plain(fe_small(27, p), b2));
    if (d.is_zero())
        throw Error(ErrorCode::SingularCurve, "singular curve: 4a^3 + 27b^2 = 0");
}

bool is_on_curve(const Point& P, const CurveParams& C) {
    if (P.is_infinity()) return true;
    FieldElement lhs = fe_mul_plain(P.y(), P.y());
    FieldElement x2 = fe_mul_plain(P.x(), P.x());
    FieldElement rhs = fe_add(fe_add(fe_mul_plain(x2, P.x()),
                                     fe_mul_plain(C.a, P.x())),
                              C.b);
    return lhs == rhs;
}

Point point_neg(const Point& P, const CurveParams& C) {
    (void)C;
    if (P.is_infinity()) return P;
    return Point::affine(P.x(), fe_neg(P.y()));
}

std::pair<Point, OpCount> point_add(const Point& P, const Point& Q,
                                    const CurveParams& C, const StrategySpec& spec) {
    if (C.validate_inputs) {
        require_on_curve(P, C, "left operand");
        require_on_curve(Q, C, "right operand");
    }
    OpCount t;
    Point r = add_impl(P, Q, C, spec, t);
    return {std::move(r), t};
}

std::pair<Point, OpCount> point_double(const Point& P, const CurveParams& C,
                                       const StrategySpec& spec) {
    if (C.validate_inputs) require_on_curve(P, C, "operand");
    OpCount t;
    Point r = double_impl(P, C, spec, t);
    return {std::move(r), t};
}

ScalarMulResult scalar_mul_binary(const Natural& n, const Point& P,
                                  const CurveParams& C, const StrategySpec& spec) {
    if (C.validate_inputs) require_on_curve(P, C, "base point");
    ScalarMulResult res;
    res.point = Point::infinity();
    const Natural bits = convert_radix(n, 2);
    for (std::size_t i = bits.digit_len(); i-- > 0;) {
        res.point = double_impl(res.point, C, spec, res.count);
        res.trace.steps.push_back(StepKind::Double);
        res.trace.doublings += 1;
        if (bits.bit_at(i)) {
            res.point = add_impl(res.point, P, C, spec, res.count);
            res.trace.steps.push_back(StepKind::AddP);
            res.trace.additions += 1;
        }
    }
    return res;
}

namespace {

// The even case doubles the running base before descending; steps are pushed
// on the way back out so the trace reads in evaluation order.
Point scalar_rec(const Point& base, const Natural& bits, const CurveParams& C,
                 const StrategySpec& spec, ScalarTrace& trace, OpCount& t) {
    if (bits.is_zero()) return Point::infinity();
    if (bits.digit(0) == 1) { // odd: base + f(base, n-1)
        std::vector<digit_t> d(bits.digits().begin(), bits.digits().end());
        d[0] = 0;
        const Natural even = Natural::from_digits(std::move(d), 2);
        Point rest = scalar_rec(base, even, C, spec, trace, t);
        Point sum = add_impl(base, rest, C, spec, t);
        trace.steps.push_back(StepKind::AddP);
        trace.additions += 1;
        return sum;
    }
    // even: f(2*base, n/2)
    std::vector<digit_t> d(bits.digits().begin() + 1, bits.digits().end());
    const Natural half = Natural::from_digits(std::move(d), 2);
    Point doubled = double_impl(base, C, spec, t);
    Point rest = scalar_rec(doubled, half, C, spec, trace, t);
    trace.steps.push_back(StepKind::Double);
    trace.doublings += 1;
    return rest;
}

} // namespace

ScalarMulResult scalar_mul_recursive(const Natural& n, const Point& P,
                                     const CurveParams& C, const StrategySpec& spec) {
    if (C.validate_inputs) require_on_curve(P, C, "base point");
    ScalarMulResult res;
    const Natural bits = convert_radix(n, 2);
    res.point = scalar_rec(P, bits, C, spec, res.trace, res.count);
    return res;
}

Point replay_trace(const ScalarTrace& trace, const Point& P, const CurveParams& C) {
    OpCount scratch;
    Point q = Point::infinity();
    for (StepKind s : trace.steps) {
        if (s == StepKind::Double)
            q = double_impl(q, C, kPlain, scratch);
        else
            q = add_impl(q, P, C, kPlain, scratch);
    }
    return q;
}

std::string expansion_string(const ScalarTrace& trace) {
    std::string e = "0";
    for (StepKind s : trace.steps) {
        if (s == StepKind::Double) {
            if (e == "0") continue;
            e = e == "P" ? "2P" : "2(" + e + ")";
        } else {
            e = e == "0" ? "P" : "P+" + e;
        }
    }
    return e;
}

std::string point_to_text(const Point& P) {
    if (P.is_infinity()) return "inf";
    return "(" + P.x().value().to_text() + "," + P.y().value().to_text() + ")";
}

Point point_from_text(std::string_view text, const CurveParams& C) {
    if (text == "inf" || text == "INF" || text == "0")
        return Point::infinity();
    if (text.size() < 5 || text.front() != '(' || text.back() != ')')
        throw Error(ErrorCode::ParseError, "point must be \"(x,y)\" or \"inf\"");
    text = text.substr(1, text.size() - 2);
    const auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw Error(ErrorCode::ParseError, "point must be \"(x,y)\" or \"inf\"");
    const std::uint32_t radix = C.p.radix();
    Natural x = parse_prefixed(text.substr(0, comma), radix);
    Natural y = parse_prefixed(text.substr(comma + 1), radix);
    Point p = Point::affine(fe_new(x, C.p), fe_new(y, C.p));
    if (C.validate_inputs) require_on_curve(p, C, "point");
    return p;
}

CurveParams curve_from_text(std::string_view text, bool validate_inputs,
                            std::uint32_t radix) {
    std::istringstream in{std::string(text)};
    std::optional<Natural> p, a, b;
    std::string tok;
    while (in >> tok) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::ParseError, "curve text expects p=.. a=.. b=..");
        const std::string key = tok.substr(0, eq);
        const Natural val = parse_prefixed(tok.substr(eq + 1), radix);
        if (key == "p") p = val;
        else if (key == "a") a = val;
        else if (key == "b") b = val;
        else throw Error(ErrorCode::ParseError, "unknown curve field: " + key);
    }
    if (!p || !a || !b)
        throw Error(ErrorCode::ParseError, "curve text expects p=.. a=.. b=..");
    return CurveParams(*p, *a, *b, validate_inputs);
}

} // namespace nkecc

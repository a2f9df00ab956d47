#include "bellmix/curves.hpp"

#include "bellmix/errors.hpp"
#include "bellmix/format.hpp"

#include <cmath>

namespace bellmix {

namespace {

const double kRoot8 = 2.0 * std::sqrt(2.0);
const double kLn2 = std::log(2.0);

double entropy_term_log4(double p) {
    return p > 0.0 ? -p * std::log(p) / (2.0 * kLn2) : 0.0;
}

double h2(double x) {
    double s = 0.0;
    if (x > 0.0) s -= x * std::log(x) / kLn2;
    if (x < 1.0) s -= (1.0 - x) * std::log(1.0 - x) / kLn2;
    return s;
}

} // namespace

ClosedForm closed_form(const FamilySpec& spec) {
    ClosedForm f;
    if (const Pure* p = std::get_if<Pure>(&spec)) {
        const double a2 = p->a * p->a;
        f.tau = 4.0 * a2 * (1.0 - a2);
        f.bell_b = 2.0 * std::sqrt(1.0 + f.tau);
        f.s_linear = 0.0;
        f.s_von_neumann = 0.0;
    } else if (const Werner* w = std::get_if<Werner>(&spec)) {
        const double x = w->x;
        const double c = std::max(0.0, (3.0 * x - 1.0) / 2.0);
        f.tau = c * c;
        f.bell_b = kRoot8 * x; // M = 2x^2
        f.s_linear = 1.0 - x * x;
        const double top = (1.0 + 3.0 * x) / 4.0;
        const double rest = (1.0 - x) / 4.0;
        f.s_von_neumann = entropy_term_log4(top) + 3.0 * entropy_term_log4(rest);
    } else if (const Mems* me = std::get_if<Mems>(&spec)) {
        const double gamma = me->gamma;
        f.tau = gamma * gamma;
        // T = diag(gamma, -gamma, 4g-1); the third direction only wins below gamma = 1/3
        const double m = gamma >= 1.0 / 3.0 ? 2.0 * gamma * gamma : gamma * gamma + 1.0 / 9.0;
        f.bell_b = 2.0 * std::sqrt(m);
        if (gamma >= 2.0 / 3.0) {
            f.s_linear = (8.0 / 3.0) * gamma * (1.0 - gamma);
            f.s_von_neumann = 0.5 * h2(gamma);
        } else {
            f.s_linear = 8.0 / 9.0 - (2.0 / 3.0) * gamma * gamma;
            f.s_von_neumann = entropy_term_log4(1.0 / 3.0 + gamma / 2.0) +
                              entropy_term_log4(1.0 / 3.0 - gamma / 2.0) +
                              entropy_term_log4(1.0 / 3.0);
        }
    } else if (const TwoBell* tb = std::get_if<TwoBell>(&spec)) {
        const double w = tb->w;
        f.tau = (2.0 * w - 1.0) * (2.0 * w - 1.0);
        f.bell_b = 2.0 * std::sqrt(1.0 + f.tau);
        f.s_linear = (8.0 / 3.0) * w * (1.0 - w);
        f.s_von_neumann = 0.5 * h2(w);
    } else {
        const ThreeBell& t = std::get<ThreeBell>(spec);
        const double c = std::max(0.0, 2.0 * t.w1 - 1.0);
        f.tau = c * c;
        f.bell_b = 2.0 * std::sqrt(2.0 - 4.0 * t.w2 * (1.0 - t.w2) - 4.0 * t.w3 * (1.0 - t.w3));
        f.s_linear = (4.0 / 3.0) * (t.w1 * (1.0 - t.w1) + t.w2 * (1.0 - t.w2) +
                                    t.w3 * (1.0 - t.w3));
        f.s_von_neumann =
            entropy_term_log4(t.w1) + entropy_term_log4(t.w2) + entropy_term_log4(t.w3);
    }
    return f;
}

FamilySpec family_spec_for(FamilyKind kind, double parameter) {
    switch (kind) {
    case FamilyKind::pure: return Pure{parameter};
    case FamilyKind::werner: return Werner{parameter};
    case FamilyKind::mems: return Mems{parameter};
    case FamilyKind::two_bell: return TwoBell{parameter};
    case FamilyKind::three_bell:
    default:
        if (!(parameter >= 1.0 / 3.0 - 1e-12 && parameter <= 1.0))
            throw InvalidFamilyParameterError(
                "three_bell curve requires w1 in [1/3, 1], got " + format_double(parameter));
        return ThreeBell(parameter, (1.0 - parameter) / 2.0, (1.0 - parameter) / 2.0);
    }
}

std::vector<CurvePoint> family_curve(FamilyKind kind, const std::vector<double>& grid) {
    std::vector<CurvePoint> points;
    points.reserve(grid.size());
    for (double v : grid) {
        CurvePoint pt;
        pt.family = family_spec_for(kind, v);
        pt.parameter = v;
        pt.measured = measure_all(make_family(pt.family));
        pt.expected = closed_form(pt.family);
        pt.pipeline_gap = std::max({std::abs(pt.expected.tau - pt.measured.tau),
                                    std::abs(pt.expected.bell_b - pt.measured.bell_b),
                                    std::abs(pt.expected.s_linear - pt.measured.s_linear),
                                    std::abs(pt.expected.s_von_neumann - pt.measured.s_von_neumann)});
        points.push_back(std::move(pt));
    }
    return points;
}

Pure pure_with_bell(double b) {
    if (!(b >= 2.0 - 1e-9 && b <= kRoot8 + 1e-9))
        throw InvalidFamilyParameterError("pure states have B in [2, 2sqrt2], requested " +
                                          format_double(b));
    const double tau = std::min(1.0, std::max(0.0, b * b / 4.0 - 1.0));
    const double a2 = 0.5 * (1.0 + std::sqrt(1.0 - tau));
    return Pure{std::sqrt(a2)};
}

Werner werner_with_bell(double b) {
    if (!(b >= -1e-9 && b <= kRoot8 + 1e-9))
        throw InvalidFamilyParameterError("werner states have B in [0, 2sqrt2], requested " +
                                          format_double(b));
    return Werner{std::min(1.0, std::max(0.0, b / kRoot8))};
}

Mems mems_with_bell(double b) {
    if (!(b > 2.0 / 3.0 && b <= kRoot8 + 1e-9))
        throw InvalidFamilyParameterError("mems states have B in (2/3, 2sqrt2], requested " +
                                          format_double(b));
    const double split = kRoot8 / 3.0; // B at gamma = 1/3
    double gamma;
    if (b >= split)
        gamma = std::min(1.0, b / kRoot8);
    else
        gamma = std::sqrt(b * b / 4.0 - 1.0 / 9.0);
    return Mems{gamma};
}

std::vector<double> make_grid(double lo, double hi, double step) {
    if (!(step > 0.0)) throw DomainError("grid step must be positive");
    if (hi < lo) throw DomainError("grid upper bound below lower bound");
    std::vector<double> g;
    for (long k = 0;; ++k) {
        const double v = lo + static_cast<double>(k) * step;
        if (v > hi + 1e-12) break;
        g.push_back(std::abs(v - hi) <= 1e-12 ? hi : v);
        if (g.back() == hi) break;
    }
    if (g.empty()) g.push_back(lo);
    return g;
}

} // namespace bellmix

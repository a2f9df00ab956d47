#include "bellmix/family.hpp"

#include "bellmix/errors.hpp"
#include "bellmix/format.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bellmix {

namespace {

constexpr double kWeightSumTol = 1e-12;

[[noreturn]] void bad_parameter(const std::string& what) {
    throw InvalidFamilyParameterError("invalid family parameter: " + what);
}

ComplexMatrix4 ket01_projector() {
    std::array<cplx, 4> v{0.0, 1.0, 0.0, 0.0};
    return outer(v, v);
}

} // namespace

ThreeBell::ThreeBell(double a, double b, double c) : w1(a), w2(b), w3(c) {
    if (w1 < w2) std::swap(w1, w2);
    if (w2 < w3) std::swap(w2, w3);
    if (w1 < w2) std::swap(w1, w2);
}

DensityMatrix make_family(const FamilySpec& spec) {
    ComplexMatrix4 m;

    if (const Pure* p = std::get_if<Pure>(&spec)) {
        if (!(p->a >= 0.0 && p->a <= 1.0))
            bad_parameter("pure requires 0 <= a <= 1, got a=" + format_double(p->a));
        const double b = std::sqrt(std::max(0.0, 1.0 - p->a * p->a));
        std::array<cplx, 4> psi{p->a, 0.0, 0.0, b};
        m = outer(psi, psi);
    } else if (const Werner* w = std::get_if<Werner>(&spec)) {
        if (!(w->x >= 0.0 && w->x <= 1.0))
            bad_parameter("werner requires 0 <= x <= 1, got x=" + format_double(w->x));
        m = cplx(w->x) * bell_projector(BellState::PhiPlus) +
            cplx((1.0 - w->x) / 4.0) * ComplexMatrix4::identity();
    } else if (const Mems* me = std::get_if<Mems>(&spec)) {
        const double gamma = me->gamma;
        if (!(gamma > 0.0 && gamma <= 1.0))
            bad_parameter("mems requires 0 < gamma <= 1, got gamma=" + format_double(gamma));
        const double g = gamma < 2.0 / 3.0 ? 1.0 / 3.0 : gamma / 2.0;
        m = cplx((2.0 * g + gamma) / 2.0) * bell_projector(BellState::PhiPlus) +
            cplx((2.0 * g - gamma) / 2.0) * bell_projector(BellState::PhiMinus) +
            cplx(1.0 - 2.0 * g) * ket01_projector();
    } else if (const TwoBell* tb = std::get_if<TwoBell>(&spec)) {
        if (!(tb->w >= 0.0 && tb->w <= 1.0))
            bad_parameter("two_bell requires 0 <= w <= 1, got w=" + format_double(tb->w));
        m = cplx(tb->w) * bell_projector(BellState::PhiPlus) +
            cplx(1.0 - tb->w) * bell_projector(BellState::PhiMinus);
    } else {
        const ThreeBell& t = std::get<ThreeBell>(spec);
        if (!(t.w3 >= 0.0))
            bad_parameter("three_bell requires nonnegative weights, got w3=" + format_double(t.w3));
        const double sum = t.w1 + t.w2 + t.w3;
        if (std::abs(sum - 1.0) > kWeightSumTol)
            bad_parameter("three_bell requires w1+w2+w3 = 1 within 1e-12, got sum=" +
                          format_double(sum));
        m = cplx(t.w1) * bell_projector(BellState::PhiPlus) +
            cplx(t.w2) * bell_projector(BellState::PhiMinus) +
            cplx(t.w3) * bell_projector(BellState::PsiPlus);
    }

    return DensityMatrix::validate(m);
}

std::string family_name(const FamilySpec& spec) {
    return family_name(static_cast<FamilyKind>(spec.index()));
}

std::string family_name(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::pure: return "pure";
    case FamilyKind::werner: return "werner";
    case FamilyKind::mems: return "mems";
    case FamilyKind::two_bell: return "two_bell";
    case FamilyKind::three_bell: default: return "three_bell";
    }
}

std::string describe(const FamilySpec& spec) {
    std::ostringstream os;
    if (const Pure* p = std::get_if<Pure>(&spec)) {
        os << "pure(a=" << format_double(p->a) << ")";
    } else if (const Werner* w = std::get_if<Werner>(&spec)) {
        os << "werner(x=" << format_double(w->x) << ")";
    } else if (const Mems* m = std::get_if<Mems>(&spec)) {
        os << "mems(gamma=" << format_double(m->gamma) << ")";
    } else if (const TwoBell* tb = std::get_if<TwoBell>(&spec)) {
        os << "two_bell(w=" << format_double(tb->w) << ")";
    } else {
        const ThreeBell& t = std::get<ThreeBell>(spec);
        os << "three_bell(w1=" << format_double(t.w1) << ", w2=" << format_double(t.w2)
           << ", w3=" << format_double(t.w3) << ")";
    }
    return os.str();
}

} // namespace bellmix

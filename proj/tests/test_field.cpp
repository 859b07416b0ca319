#include <catch2/catch_amalgamated.hpp>

#include <vgraph/qreal.hpp>
#include <vgraph/rational.hpp>

#include <cmath>
#include <random>
#include <vector>

using namespace vgraph;

namespace {

QReal sqrt3() { return {0, 1, 0, 0}; }
QReal sqrt11() { return {0, 0, 1, 0}; }
QReal sqrt33() { return {0, 0, 0, 1}; }

QReal cos_a() { return {Rational(1, 4), 0, 0, Rational(1, 12)}; }
QReal sin_a() { return {0, Rational(-1, 12), Rational(1, 4), 0}; }
QReal cos_b() { return {Rational(1, 4), 0, 0, Rational(-1, 12)}; }
QReal sin_b() { return {0, Rational(1, 12), Rational(1, 4), 0}; }

// The angles behind the stored closed forms, evaluated in floating point.
double alpha_angle() { return std::acos(1.0 / (2.0 * std::sqrt(3.0))) - std::acos(-1.0) / 6.0; }
double beta_angle() { return alpha_angle() + std::acos(-1.0) / 3.0; }

QReal random_qreal(std::mt19937& rng) {
    const auto coeff = [&rng] {
        const long num = static_cast<long>(rng() % 19) - 9;
        const long den = static_cast<long>(rng() % 9) + 1;
        return Rational(num, den);
    };
    return {coeff(), coeff(), coeff(), coeff()};
}

} // namespace

TEST_CASE("rationals stay reduced with positive denominators") {
    const Rational r(2, 4);
    CHECK(rational_num(r) == 1);
    CHECK(rational_den(r) == 2);
    const Rational s = Rational(3) / Rational(-6);
    CHECK(rational_num(s) == -1);
    CHECK(rational_den(s) == 2);
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(to_string(Rational(5, 6)) == "5/6");
    CHECK(to_string(Rational(-7)) == "-7");
}

TEST_CASE("multiplication table of the radicals") {
    CHECK(sqrt3() * sqrt11() == sqrt33());
    CHECK(sqrt33() * sqrt33() == QReal{33, 0, 0, 0});
    CHECK(sqrt3() * sqrt3() == QReal{3, 0, 0, 0});
    CHECK(sqrt11() * sqrt11() == QReal{11, 0, 0, 0});
    CHECK(sqrt3() * sqrt33() == QReal{0, 0, 3, 0});
    CHECK(sqrt11() * sqrt33() == QReal{0, 11, 0, 0});
}

TEST_CASE("pythagorean identity for the stored cosine and sine") {
    CHECK(cos_a() * cos_a() + sin_a() * sin_a() == QReal::one());
    CHECK(cos_b() * cos_b() + sin_b() * sin_b() == QReal::one());
}

TEST_CASE("zero and equality are decided component-wise") {
    CHECK(is_zero(QReal{0, 0, 0, 0}));
    CHECK(is_zero(QReal::one() - QReal::one()));
    CHECK(sqrt3() * sqrt11() == sqrt33());
    CHECK_FALSE(is_zero(QReal{0, 0, 0, Rational(1, 1000000)}));
    CHECK_FALSE(QReal{1, 0, 0, 0} == QReal{0, 1, 0, 0});
}

TEST_CASE("dot products and squared norms are exact") {
    const XYVec alpha{cos_a(), sin_a()};
    const XYVec beta{cos_b(), sin_b()};
    const XYVec alpha_conj{cos_a(), -sin_a()};
    const XYVec beta_conj{cos_b(), -sin_b()};

    CHECK(dot(alpha, beta) == QReal{Rational(1, 2), 0, 0, 0});
    CHECK(norm_sq(XYVec{QReal::one(), QReal::zero()}) == QReal::one());
    CHECK(dot(alpha - beta, alpha_conj - beta_conj) == QReal{Rational(5, 6), 0, 0, 0});

    const double want = std::cos(beta_angle() - alpha_angle());
    CHECK(std::abs(to_double(dot(alpha, beta)) - want) < 1e-12);
}

TEST_CASE("unit length is an exact decision") {
    const XYVec alpha{cos_a(), sin_a()};
    const XYVec beta{cos_b(), sin_b()};
    CHECK(is_unit(alpha));
    CHECK(is_unit(beta));
    CHECK(is_unit(alpha - beta));
    CHECK_FALSE(is_unit(alpha + beta));
    CHECK(norm_sq(alpha + beta) == QReal{3, 0, 0, 0});
}

TEST_CASE("floating projection agrees with the trigonometric forms") {
    const double a = alpha_angle();
    const double b = beta_angle();
    CHECK(std::abs(to_double(cos_a()) - std::cos(a)) < 1e-12);
    CHECK(std::abs(to_double(sin_a()) - std::sin(a)) < 1e-12);
    CHECK(std::abs(to_double(cos_b()) - std::cos(b)) < 1e-12);
    CHECK(std::abs(to_double(sin_b()) - std::sin(b)) < 1e-12);
    CHECK(to_double(QReal::zero()) == 0.0);
    CHECK(std::abs(to_double(QReal{Rational(5, 6), 0, 0, 0}) - 5.0 / 6.0) < 1e-15);
}

TEST_CASE("field axioms hold on randomized samples") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const QReal x = random_qreal(rng);
        const QReal y = random_qreal(rng);
        const QReal z = random_qreal(rng);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * QReal::one() == x);
        CHECK(is_zero(x + (-x)));
    }
}

TEST_CASE("floating projection is multiplicative within tolerance") {
    std::mt19937 rng(20240812);
    for (int trial = 0; trial < 200; ++trial) {
        const QReal x = random_qreal(rng);
        const QReal y = random_qreal(rng);
        CHECK(std::abs(to_double(x * y) - to_double(x) * to_double(y)) < 1e-9);
    }
}

TEST_CASE("no nonzero small-coefficient value collapses to float zero") {
    std::mt19937 rng(20240813);
    for (int trial = 0; trial < 500; ++trial) {
        const auto coeff = [&rng] { return Rational(static_cast<long>(rng() % 19) - 9); };
        const QReal x{coeff(), coeff(), coeff(), coeff()};
        if (is_zero(x)) continue;
        CHECK(std::abs(to_double(x)) > 1e-9);
    }
}

TEST_CASE("diagnostic display uses reduced fractions") {
    CHECK(to_string(QReal::zero()) == "0");
    CHECK(to_string(cos_a()) == "1/4 + 1/12*sqrt33");
    CHECK(to_string(sin_a()) == "-1/12*sqrt3 + 1/4*sqrt11");
    CHECK(to_string(QReal{Rational(2, 4), 0, 0, 0}) == "1/2");
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "pbq/ring.hpp"
#include "support/gen.hpp"

using namespace pbq;
using pbq::testing::random_poly;
using pbq::testing::Rng;

namespace {
IntPoly sp(int e) { return IntPoly::monomial(Var::s(), e); }
IntPoly tp(int e) { return IntPoly::monomial(Var::t(), e); }
IntPoly c(long v) { return IntPoly::constant(BigInt(v)); }
}  // namespace

TEST_CASE("variable order is s < t < z < z_i < w_ij < alpha") {
    std::vector<Var> order{Var::s(),         Var::t(),         Var::z(),
                           Var::z_comp(1),   Var::z_comp(2),   Var::w_pair(1, 2),
                           Var::w_pair(1, 3), Var::w_pair(2, 3), Var::alpha()};
    for (std::size_t i = 0; i + 1 < order.size(); ++i) CHECK(order[i] < order[i + 1]);
    CHECK(Var::s().str() == "s");
    CHECK(Var::t().str() == "t");
    CHECK(Var::z().str() == "z");
    CHECK(Var::z_comp(2).str() == "z2");
    CHECK(Var::w_pair(1, 2).str() == "w1_2");
    CHECK(Var::alpha().str() == "alpha");
}

TEST_CASE("w_pair is unordered") {
    CHECK(Var::w_pair(2, 1) == Var::w_pair(1, 2));
    CHECK(Var::w_pair(2, 1).str() == "w1_2");
}

TEST_CASE("monomial algebra") {
    Monomial m = Monomial::of(Var::s(), 2).times(Monomial::of(Var::t(), -1));
    CHECK(m.str() == "s^2*t^-1");
    CHECK(m.exponent(Var::s()) == 2);
    CHECK(m.exponent(Var::t()) == -1);
    CHECK(m.exponent(Var::z()) == 0);
    CHECK(m.total_degree() == 1);
    CHECK(m.times(m.inverse()).is_one());
    CHECK(Monomial{}.str().empty());
    CHECK(Monomial::of(Var::s(), 0).is_one());

    // Exponents cancel through multiplication.
    CHECK(Monomial::of(Var::s(), 3).times(Monomial::of(Var::s(), -3)).is_one());
}

TEST_CASE("monomial order is graded then lexicographic") {
    CHECK(Monomial::of(Var::s(), 2) > Monomial::of(Var::s(), 1));
    CHECK(Monomial::of(Var::s(), 1) < Monomial::of(Var::s(), 1).times(Monomial::of(Var::t(), 1)));
    // Equal total degree: decided deterministically, and str() respects it.
    Monomial a = Monomial::of(Var::s(), 1), b = Monomial::of(Var::t(), 1);
    CHECK(a != b);
    CHECK(((a < b) || (b < a)));
}

TEST_CASE("polynomial arithmetic goldens") {
    IntPoly s = sp(1), t = tp(1);
    CHECK((s + t) * (s - t) == sp(2) - tp(2));
    CHECK((c(1) - s * t) * (c(1) - s * t) == c(1) - c(2) * s * t + sp(2) * tp(2));
    CHECK((s - s).is_zero());
    CHECK((s * t - t * s).is_zero());
    CHECK((-(s - t)) == t - s);
    IntPoly p = s + c(1);
    p += t;
    p -= s;
    CHECK(p == t + c(1));
    CHECK(IntPoly::zero().str() == "0");
}

TEST_CASE("serialization goldens") {
    IntPoly a = c(3) - IntPoly::monomial(Var::z(), -1) +
                IntPoly::term(1, Monomial::of(Var::s(), -2).times(Monomial::of(Var::t(), 1)));
    CHECK(a.str() == "3 - z^-1 + s^-2*t");
    CHECK((sp(1) * tp(2) - c(2) * IntPoly::monomial(Var::alpha(), 1) + c(5)).str() ==
          "s*t^2 - 2*alpha + 5");
    CHECK((c(1) - sp(1)).str() == "-s + 1");
}

TEST_CASE("gaussian integers") {
    GaussInt i = GaussInt::unit_i();
    CHECK(i * i == GaussInt(-1));
    CHECK(GaussInt(1, 1) * GaussInt(1, -1) == GaussInt(2));
    CHECK(GaussInt(2, -3).norm() == 13);
    CHECK(GaussInt(2, -3).conj() == GaussInt(2, 3));
    GaussPoly gp = GaussPoly::term(GaussInt(0, 1), Monomial::of(Var::z(), 1)) +
                   GaussPoly::constant(GaussInt(2, -3));
    CHECK(gp.str() == "i*z + (2-3i)");
}

TEST_CASE("quaternion multiplication table") {
    Quat i = Quat::unit_i(), j = Quat::unit_j(), k = Quat::unit_k();
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * j == -i);
    CHECK(k * i == j);
    CHECK(i * k == -j);
    CHECK(i * i == Quat(-1));
    CHECK(j * j == Quat(-1));
    CHECK(k * k == Quat(-1));
    CHECK(Quat(1, 1, 1, 1).norm() == 4);
    CHECK(Quat(1, 2, 3, 4) * Quat(1, 2, 3, 4).conj() == Quat(30));

    QuatPoly qq = QuatPoly::term(Quat(1, 1, 0, 0), Monomial::of(Var::z(), 2)) +
                  QuatPoly::term(Quat::unit_k(), Monomial{}) -
                  QuatPoly::constant(Quat(0, 0, 2, 0));
    CHECK(qq.str() == "(1+i)*z^2 + (-2j+k)");
}

TEST_CASE("quaternion polynomial multiplication is order-sensitive") {
    QuatPoly zi = QuatPoly::term(Quat::unit_i(), Monomial::of(Var::z(), 1));
    QuatPoly j = QuatPoly::constant(Quat::unit_j());
    CHECK(zi * j == QuatPoly::term(Quat::unit_k(), Monomial::of(Var::z(), 1)));
    CHECK(j * zi == QuatPoly::term(-Quat::unit_k(), Monomial::of(Var::z(), 1)));
    CHECK(zi * j + j * zi == QuatPoly::zero());
}

TEST_CASE("unit recognition") {
    IntPoly u = -(sp(1) * tp(1));
    auto parts = u.unit_parts();
    REQUIRE(parts.has_value());
    CHECK(parts->coeff == BigInt(-1));
    CHECK(parts->mono == Monomial::of(Var::s(), 1).times(Monomial::of(Var::t(), 1)));
    REQUIRE(u.unit_inverse().has_value());
    CHECK(u * *u.unit_inverse() == c(1));

    CHECK(!(c(1) - sp(1) * tp(1)).unit_parts().has_value());  // two terms
    CHECK(!(c(2) * sp(1)).unit_parts().has_value());          // 2 is not a unit
    CHECK(IntPoly::monomial(Var::z(), -1).unit_inverse() == IntPoly::monomial(Var::z(), 1));
    CHECK(!IntPoly::zero().unit_parts().has_value());

    // Over the quaternions the Lipschitz units are +-1, +-i, +-j, +-k.
    QuatPoly qz = QuatPoly::term(Quat::unit_i(), Monomial::of(Var::z(), 1));
    REQUIRE(qz.unit_inverse().has_value());
    CHECK(qz * *qz.unit_inverse() == QuatPoly::constant(Quat(1)));
    CHECK(*qz.unit_inverse() * qz == QuatPoly::constant(Quat(1)));
    CHECK(!QuatPoly::constant(Quat(1, 1, 0, 0)).unit_parts().has_value());  // norm 2
}

TEST_CASE("exponent ranges") {
    IntPoly p = IntPoly::monomial(Var::z(), 2) + IntPoly::monomial(Var::z(), -3) + sp(1);
    auto r = p.exponent_range(Var::z());
    CHECK(r.min == -3);
    CHECK(r.max == 2);
    auto rs = p.exponent_range(Var::s());
    CHECK(rs.min == 0);  // the z-terms have s-exponent 0
    CHECK(rs.max == 1);
    auto ra = p.exponent_range(Var::alpha());
    CHECK(ra.min == 0);
    CHECK(ra.max == 0);
    auto rz = IntPoly::zero().exponent_range(Var::z());
    CHECK(rz.min == 0);
    CHECK(rz.max == 0);
}

TEST_CASE("shifted multiplies every term by a monomial") {
    IntPoly p = sp(1) + c(1);
    Monomial m = Monomial::of(Var::t(), -2);
    CHECK(p.shifted(m) == sp(1) * tp(-2) + tp(-2));
    CHECK(p.shifted(Monomial{}) == p);
}

TEST_CASE("leading term and zero polynomial") {
    IntPoly p = sp(2) + c(7);
    CHECK(p.leading().first == Monomial::of(Var::s(), 2));
    CHECK(p.leading().second == BigInt(1));
    CHECK_THROWS_AS(IntPoly::zero().leading(), std::logic_error);
    CHECK(IntPoly::zero().term_count() == 0);
    CHECK(c(0).is_zero());
}

TEST_CASE("ring laws on random polynomials") {
    Rng rng(20260816);
    std::vector<Var> vars{Var::s(), Var::t(), Var::z()};
    for (int iter = 0; iter < 200; ++iter) {
        IntPoly a = random_poly(rng, vars, 4, 3);
        IntPoly b = random_poly(rng, vars, 4, 3);
        IntPoly d = random_poly(rng, vars, 4, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + d == a + (b + d));
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK((a - a).is_zero());
        CHECK(a + IntPoly::zero() == a);
        CHECK(a * c(1) == a);
        CHECK((a * IntPoly::zero()).is_zero());
    }
}

TEST_CASE("exact division round-trips products") {
    Rng rng(99);
    std::vector<Var> vars{Var::s(), Var::t(), Var::z()};
    int done = 0;
    for (int iter = 0; iter < 400 && done < 200; ++iter) {
        IntPoly a = random_poly(rng, vars, 4, 2);
        IntPoly b = random_poly(rng, vars, 4, 2);
        if (b.is_zero()) continue;
        CHECK(div_exact(a * b, b) == a);
        ++done;
    }
    CHECK(done == 200);
}

TEST_CASE("exact division rejects bad input") {
    CHECK_THROWS_AS(div_exact(sp(1) + c(1), IntPoly::zero()), std::logic_error);
    CHECK_THROWS_AS(div_exact(sp(1) + c(1), tp(1) + c(1)), std::logic_error);
    CHECK_THROWS_AS(div_exact(c(3), c(2)), std::logic_error);
    CHECK(div_exact(IntPoly::zero(), sp(1) + c(1)).is_zero());
}

TEST_CASE("embeddings preserve arithmetic") {
    Rng rng(7);
    std::vector<Var> vars{Var::s(), Var::z()};
    for (int iter = 0; iter < 50; ++iter) {
        IntPoly a = random_poly(rng, vars, 3, 2);
        IntPoly b = random_poly(rng, vars, 3, 2);
        CHECK(embed<GaussInt>(a * b) == embed<GaussInt>(a) * embed<GaussInt>(b));
        CHECK(embed<Quat>(a + b) == embed<Quat>(a) + embed<Quat>(b));
        CHECK(gauss_to_int(embed<GaussInt>(a)) == a);
    }
}

TEST_CASE("gauss_to_int rejects nonreal polynomials") {
    GaussPoly p = GaussPoly::term(GaussInt(0, 1), Monomial::of(Var::z(), 1));
    CHECK_THROWS_AS(gauss_to_int(p), std::logic_error);
}

TEST_CASE("big coefficients do not overflow") {
    IntPoly p = c(1);
    for (int i = 0; i < 40; ++i) p *= c(10) + sp(1);
    CHECK(p.exponent_range(Var::s()).max == 40);
    // Constant term is 10^40, far beyond any machine integer.
    CHECK(p.terms().begin()->second == BigInt("10000000000000000000000000000000000000000"));
}

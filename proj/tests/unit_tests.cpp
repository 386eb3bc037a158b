#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "syzcurve/curve.hpp"
#include "syzcurve/errors.hpp"
#include "syzcurve/parse.hpp"
#include "syzcurve/reproduce.hpp"
#include "syzcurve/unexpected.hpp"

using namespace syz;

TEST_CASE("cyclotomic arithmetic") {
    Cyclo i = Cyclo::zeta(4);
    CHECK(i * i == Cyclo(-1));
    CHECK((i * i * i * i) == Cyclo(1));
    CHECK(i.pow(3) == -i);
    CHECK(i.inv() == -i);

    Cyclo w = Cyclo::zeta(3);
    CHECK(w * w + w + Cyclo(1) == Cyclo());
    CHECK(w.pow(3) == Cyclo(1));
    CHECK((w.inv() * w) == Cyclo(1));

    // Mixed orders promote to the least common order.
    Cyclo z12 = Cyclo::zeta(12);
    CHECK(z12.pow(3) == i);
    CHECK(z12.pow(4) == w);
    CHECK(i * w == z12.pow(7));

    // Rational values demote to order 1.
    Cyclo r = Cyclo::zeta(5).pow(5);
    CHECK(r.is_rational());
    CHECK(r.rational_value() == 1);

    CHECK(parse_scalar("1/2 - 3*e^2", 5) == Cyclo(Rat(1, 2)) - Cyclo(3) * Cyclo::zeta(5).pow(2));
    CHECK_THROWS_AS(Cyclo().inv(), math_error);
}

TEST_CASE("cyclotomic polynomial data") {
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    // Phi_6 = t^2 - t + 1
    CHECK(cyclotomic_polynomial(6) == std::vector<Rat>{1, -1, 1});
    // Phi_4 = t^2 + 1
    CHECK(cyclotomic_polynomial(4) == std::vector<Rat>{1, 0, 1});
}

TEST_CASE("polynomial core") {
    Poly3 p = parse_poly<3>("x^2*y - 2*y*z^2 + z^3", xyz_names(), 1);
    CHECK(p.degree() == 3);
    CHECK(p.is_homogeneous());
    CHECK(p.leading_expo() == Expo<3>{2, 1, 0});
    CHECK(p.differentiate(1) == parse_poly<3>("x^2 - 2*z^2", xyz_names(), 1));

    auto monos = monomial_exponents<3>(2);
    CHECK(monos.size() == 6);
    CHECK(monos.front() == Expo<3>{2, 0, 0});
    CHECK(monos[1] == Expo<3>{1, 1, 0});
    CHECK(monos.back() == Expo<3>{0, 0, 2});

    Poly3 prod = parse_poly<3>("(x + y)*(x - y)", xyz_names(), 1);
    CHECK(prod == parse_poly<3>("x^2 - y^2", xyz_names(), 1));
    auto q = prod.divide_exact(parse_poly<3>("x + y", xyz_names(), 1));
    REQUIRE(q.has_value());
    CHECK(*q == parse_poly<3>("x - y", xyz_names(), 1));
    CHECK(!prod.divide_exact(parse_poly<3>("x + z", xyz_names(), 1)).has_value());

    CHECK(prod.scaled(Cyclo(-2)).proportional_to(prod));
    CHECK(parse_poly<3>("5*b^4*c", {"b", "c", "d"}, 1).term_count() == 1);
}

TEST_CASE("forms and multiplicities") {
    ProjPoint p{Cyclo(1), Cyclo(2), Cyclo(3)};
    Poly3 l = dual_form(p);
    CHECK(evaluate_at_point(l, ProjPoint{Cyclo(3), Cyclo(0), Cyclo(-1)}).is_zero());

    Poly3 c = parse_poly<3>("x*y*z", xyz_names(), 1);
    CHECK(multiplicity_at(c, ProjPoint{Cyclo(1), Cyclo(0), Cyclo(0)}) == 2);
    CHECK(multiplicity_at(c, ProjPoint{Cyclo(1), Cyclo(1), Cyclo(0)}) == 1);
    CHECK(multiplicity_at(c, ProjPoint{Cyclo(1), Cyclo(1), Cyclo(1)}) == 0);

    ProjPoint p0{Cyclo(1), Cyclo(0), Cyclo(1)}, p1{Cyclo(0), Cyclo(1), Cyclo(-1)};
    Poly2 r = restrict_to_line(c, p0, p1);
    CHECK(r.degree() == 3);
    CHECK(r == parse_poly<2>("l*m*(l - m)", lm_names(), 1));

    Poly2 a = parse_poly<2>("(l + m)^2*(l - m)", lm_names(), 1);
    Poly2 b = parse_poly<2>("(l + m)*m^3", lm_names(), 1);
    CHECK(binary_gcd(a, b) == parse_poly<2>("l + m", lm_names(), 1));
}

TEST_CASE("exact linear algebra") {
    Matrix m(2, 3);
    m.at(0, 0) = Cyclo(1);
    m.at(0, 1) = Cyclo(2);
    m.at(0, 2) = Cyclo(3);
    m.at(1, 0) = Cyclo(2);
    m.at(1, 1) = Cyclo(4);
    m.at(1, 2) = Cyclo(6);
    CHECK(rank(m) == 1);
    auto kernel = kernel_basis(std::move(m));
    REQUIRE(kernel.size() == 2);
    // Free columns in increasing order, unit entry at the own free column.
    CHECK(kernel[0][1] == Cyclo(1));
    CHECK(kernel[0][2] == Cyclo(0));
    CHECK(kernel[1][1] == Cyclo(0));
    CHECK(kernel[1][2] == Cyclo(1));
    for (const auto& v : kernel) CHECK(v[0] + Cyclo(2) * v[1] + Cyclo(3) * v[2] == Cyclo());
}

TEST_CASE("arrangements") {
    PointConfig z = b3();
    CHECK(z.size() == 9);
    Arrangement arr = build_arrangement(z);  // verifies the Euler identity internally
    CHECK(arr.f.degree() == 9);

    CHECK(fermat_dual(3).size() == 12);
    CHECK(fermat_dual(4).size() == 19);
    CHECK(fermat_dual(5).size() == 28);

    PointConfig dup = z;
    dup.points.push_back(z.points[0]);
    CHECK_THROWS_AS(build_arrangement(dup), math_error);

    GenericLine line = make_generic_line(arr, 7, 50);
    // The line misses every crossing point of the arrangement.
    for (size_t i = 0; i < arr.size(); ++i)
        for (size_t j = i + 1; j < arr.size(); ++j)
            CHECK(!dot(line.dual_point, cross(z.points[i], z.points[j])).is_zero());
    // lambda and mu both vanish at the dual point, pinning the d-fold point.
    CHECK(evaluate_at_point(line.lambda, line.dual_point).is_zero());
    CHECK(evaluate_at_point(line.mu, line.dual_point).is_zero());
    // Intersection parameters solve both incidences.
    for (size_t i = 0; i < arr.size(); ++i) {
        auto [l0, m0] = intersection_parameter(arr, line, i);
        ProjPoint q;
        for (int c = 0; c < 3; ++c) q[c] = l0 * line.p0[c] + m0 * line.p1[c];
        CHECK(evaluate_at_point(arr.linear_forms[i], q).is_zero());
        CHECK(dot(line.dual_point, q).is_zero());
    }

    PointConfig parsed = config_from_json(R"({"order": 3, "points": [["1","e","e^2"], ["0","1","-1"]]})");
    CHECK(parsed.size() == 2);
    CHECK(parsed.points[0][1] == Cyclo::zeta(3));
}

TEST_CASE("fat-point dimensions") {
    PointConfig z = b3();
    // Hand-checked Hilbert function values of the nine dual points.
    CHECK(ideal_dimension(z, 2) == 0);
    CHECK(ideal_dimension(z, 3) == 1);
    CHECK(ideal_dimension(z, 4) == 6);
    CHECK(imposes_independent(z, 4));
    CHECK(!imposes_independent(z, 2));

    DimTable t = dim_table(z, 1, 3, 2);
    REQUIRE(t.converged);
    REQUIRE(t.entries.size() >= 6);
    CHECK(t.entries[3] == 1);
    CHECK(t.entries[4] == 2);
    CHECK(t.entries[5] == 4);

    PointConfig df3 = fermat_dual(3);
    DimTable t2 = dim_table(df3, 2, 3, 2);
    REQUIRE(t2.converged);
    CHECK(t2.entries[2] == 0);
    CHECK(t2.entries[3] == 3);
    Rng rng(11);
    CHECK(fatpoint_dimension(df3, random_point(rng, 100), 4, 5) == 1);

    CHECK_THROWS_AS(dim_table(z, 1, 3, 1), math_error);
}

TEST_CASE("splitting recovery") {
    SplittingType st;
    st.k = 2;
    st.exponents = {4, 5, 7};
    epsilon_decomposition(st);
    CHECK(st.base == 4);
    CHECK(st.eps == std::vector<int>{0, 1, 3});
    CHECK(st.mult == std::vector<int>{1, 1, 1});
    CHECK(st.predicted_dimension(5) == 3);
    CHECK(chern_sum_check(st, 19));
    CHECK(!chern_sum_check(st, 20));

    SplittingType b3k1 = splitting_type(b3(), 1, 5, 2);
    CHECK(b3k1.exponents == std::vector<int>{3, 5});
    CHECK(b3k1.chern_consistent);

    CHECK_THROWS_AS(splitting_type(b3(), 4, 5, 2), math_error);  // 10 >= 9
}

TEST_CASE("restricted syzygies") {
    Arrangement arr = build_arrangement(b3());
    GenericLine line = make_generic_line(arr, 5, 50);
    CHECK(restricted_syzygies(arr, line, 1, 2).empty());
    auto basis = restricted_syzygies(arr, line, 1, 3);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0].reduced);
    // Identity re-checked against the unrestricted partials: the residual is
    // the recorded cofactor times the restricted arrangement form.
    std::array<Poly2, 3> w;
    for (int v = 0; v < 3; ++v) w[v] = restrict_to_line(arr.jacobian[v], line.p0, line.p1);
    Poly2 fr = restrict_to_line(arr.f, line.p0, line.p1);
    Poly2 sum;
    for (int v = 0; v < 3; ++v) sum += basis[0].restricted[v] * w[v];
    CHECK(sum == basis[0].line_cofactor * fr);

    // Lifting the tuple and the cofactor, the global residual vanishes on L.
    std::vector<Poly3> lift;
    for (const Poly2& g : basis[0].restricted) lift.push_back(lift_restricted(line, g));
    for (size_t v = 0; v < 3; ++v)
        CHECK(restrict_to_line(lift[v], line.p0, line.p1) == basis[0].restricted[v]);
    Poly3 recomposed;
    for (int v = 0; v < 3; ++v) recomposed += lift[v] * arr.jacobian[v];
    if (!basis[0].line_cofactor.is_zero()) recomposed -= lift_restricted(line, basis[0].line_cofactor) * arr.f;
    CHECK((recomposed.is_zero() || recomposed.divide_exact(dual_form(line.dual_point)).has_value()));

    CHECK(verify_global_syzygy(arr, line, 1, {Poly3(), Poly3(), Poly3()}).first);

    auto exact = exact_global_syzygies(arr, 1, 3);
    REQUIRE(exact.size() == 1);
    auto [ok2, cof2] = verify_global_syzygy(arr, line, 1, exact[0]);
    CHECK(ok2);
    CHECK(cof2.is_zero());

    // The exact global syzygy restricts into the same class as the basis
    // element: canonical representatives are proportional tuples.
    std::vector<Poly2> er;
    for (const Poly3& g : exact[0]) er.push_back(restrict_to_line(g, line.p0, line.p1));
    er = e_reduce(line, 1, 3, er);
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) CHECK(er[i] * basis[0].restricted[j] == er[j] * basis[0].restricted[i]);
}

TEST_CASE("derivation generators") {
    auto gens1 = e_generators(1);
    REQUIRE(gens1.size() == 1);
    CHECK(gens1[0].components == std::vector<Poly3>{Poly3::variable(0), Poly3::variable(1), Poly3::variable(2)});

    auto gens2 = e_generators(2);
    REQUIRE(gens2.size() == 3);
    // First generator pairs (x, y, z) with the slots containing the first
    // partial.
    auto idx = monomial_exponents<3>(2);
    for (size_t a = 0; a < idx.size(); ++a) {
        if (idx[a][0] > 0) {
            int var = idx[a] == Expo<3>{2, 0, 0} ? 0 : (idx[a] == Expo<3>{1, 1, 0} ? 1 : 2);
            CHECK(gens2[0].components[a] == Poly3::variable(var));
        } else {
            CHECK(gens2[0].components[a].is_zero());
        }
    }

    Arrangement arr = build_arrangement(b3());
    for (const DerGenerator& gen : gens2) CHECK(phi_e_identity(arr, gen));

    CHECK(multinomial(Expo<3>{2, 0, 0}) == 1);
    CHECK(multinomial(Expo<3>{1, 1, 0}) == 2);
    CHECK(multinomial(Expo<3>{1, 1, 1}) == 6);
}

TEST_CASE("curve construction") {
    Arrangement arr = build_arrangement(b3());
    GenericLine line = make_generic_line(arr, 5, 50);
    auto basis = restricted_syzygies(arr, line, 1, 3);
    REQUIRE(basis.size() == 1);
    CurveReport r = construct_curve(basis[0], arr, line);
    CHECK(r.degree == 4);
    CHECK(r.degree_drop == 0);
    CHECK(r.mult_at_p >= 3);
    for (int m : r.multiplicities_at_z) CHECK(m >= 1);
    CHECK(line_component_check(r));

    // Padding the syzygy with a common factor must reduce back to the same
    // curve with the drop recorded.
    SyzygyVector padded = basis[0];
    Poly2 factor = parse_poly<2>("l + 2*m", lm_names(), 1);
    for (Poly2& g : padded.restricted) g *= factor;
    padded.d += 1;
    padded.reduced = false;
    CurveReport r2 = construct_curve(padded, arr, line);
    CHECK(r2.degree_drop == 1);
    CHECK(r2.curve == r.curve);

    CurveReport v = verify_curve(parse_poly<3>("x*y*z", xyz_names(), 1),
                                 PointConfig{1, {ProjPoint{Cyclo(1), Cyclo(0), Cyclo(0)}}},
                                 ProjPoint{Cyclo(1), Cyclo(1), Cyclo(1)}, 1);
    CHECK(v.multiplicities_at_z[0] == 2);
    CHECK(v.mult_at_p == 0);

    auto exact = exact_global_syzygies(arr, 1, 3);
    REQUIRE(exact.size() == 1);
    CHECK(duality_check(arr, 1, 3, exact[0]));
}

TEST_CASE("unexpectedness criteria") {
    SplittingType df5k2;
    df5k2.k = 2;
    df5k2.exponents = {7, 9, 9};
    epsilon_decomposition(df5k2);
    CHECK(criterion_simple(df5k2, 0));   // 24 <= 25
    CHECK(!criterion_simple(df5k2, 1));  // balanced part

    SplittingType df3k2;
    df3k2.k = 2;
    df3k2.exponents = {3, 3, 3};
    epsilon_decomposition(df3k2);
    CHECK(!criterion_simple(df3k2, 0));
    CHECK(!criterion_epsilon(df3k2, 0));

    SplittingType df4k2;
    df4k2.k = 2;
    df4k2.exponents = {4, 5, 7};
    epsilon_decomposition(df4k2);
    CHECK(criterion_epsilon(df4k2, 0));
    CHECK(criterion_epsilon(df4k2, 1));
    CHECK(!criterion_epsilon(df4k2, 2));
    CHECK_THROWS_AS(criterion_epsilon(df4k2, 3), math_error);

    SplittingType df5k6;
    df5k6.k = 6;
    df5k6.exponents = {0, 0, 0, 1, 1, 2, 3};
    epsilon_decomposition(df5k6);
    CHECK(!criterion_epsilon(df5k6, 2));

    PointConfig z = b3();
    CHECK(expected_dimension(z, 3, 1) == std::max(0, ideal_dimension(z, 4) - 6));
    UnexpectednessVerdict v = is_unexpected_direct(z, 3, 1, 5, 2);
    CHECK(v.verdict_direct);  // the classical quartic with a triple point
    CHECK(v.actual_dim > v.expected_dim);
}

TEST_CASE("fixture files parse") {
    std::ifstream in(fixture_path("b3_k2_curve.txt"));
    REQUIRE(in.good());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Poly3 c = parse_poly<3>(text, xyz_names(), 1);
    CHECK(c.degree() == 4);
    CHECK(c.coeff(Expo<3>{3, 1, 0}) == Cyclo(49));
    CHECK(c.coeff(Expo<3>{1, 1, 2}) == Cyclo(44));
}

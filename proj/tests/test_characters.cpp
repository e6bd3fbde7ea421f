#include <gtest/gtest.h>

#include "oracles.hpp"
#include "weylchar/characters.hpp"
#include "weylchar/verify.hpp"

using namespace weylchar;

namespace {

/// Root-basis form of a polynomial; every exponent must be integral.
oracle::Poly in_roots(const Algebra& a, const LaurentPoly& p)
{
    oracle::Poly out;
    for (const auto& [e, c] : present_alpha_basis(a, p).terms) {
        oracle::Vec v;
        for (const auto& x : e) {
            EXPECT_EQ(x.get_den(), 1);
            v.push_back(x.get_num().get_si());
        }
        out[v] = c.get_si();
    }
    return out;
}

const std::vector<oracle::Vec> kG2Roots = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};

}  // namespace

TEST(Characters, G2KnownCharacters)
{
    const Algebra g2 = build_algebra(Family::G, 2);
    const CharacterEngine engine(g2, Method::gamma_table);

    EXPECT_EQ(in_roots(g2, engine.denominator()), oracle::product_form({-3, -5}, kG2Roots, -1));

    const oracle::Poly adjoint = oracle::product_of_sums(
        {-2, -3}, {{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {2, 3}, {3, 3}, {2, 4}, {3, 4}, {3, 5}, {3, 6}, {4, 6}}});
    EXPECT_EQ(in_roots(g2, engine.character(IntVec{1, 0}).poly), adjoint);

    const oracle::Poly seven =
        oracle::product_of_sums({-1, -2}, {{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}}});
    EXPECT_EQ(in_roots(g2, engine.character(IntVec{0, 1}).poly), seven);

    EXPECT_EQ(in_roots(g2, engine.character(IntVec{1, 1}).poly), oracle::product_form({-3, -5}, kG2Roots, 1));

    const oracle::Poly twenty_seven = oracle::product_of_sums(
        {-2, -4}, {{{0, 0}, {0, 1}, {0, 2}}, {{0, 0}, {1, 1}, {2, 2}}, {{0, 0}, {1, 2}, {2, 4}}});
    EXPECT_EQ(in_roots(g2, engine.character(IntVec{0, 2}).poly), twenty_seven);

    EXPECT_EQ(engine.character(IntVec{1, 0}).dimension, 14);
    EXPECT_EQ(engine.character(IntVec{1, 1}).dimension, 64);
}

TEST(Characters, G2Rendering)
{
    const Algebra g2 = build_algebra(Family::G, 2);
    const auto c = character(g2, WeightVec::in_weights({0, 1}), Method::gamma_table);
    const AlphaPresentation p = present_alpha_basis(c);
    EXPECT_EQ(p.variables, (std::vector<std::string>{"x", "y"}));
    EXPECT_EQ(p.prefactor, (RationalVec{-1, -2}));
    EXPECT_EQ(p.factored, "x^-1*y^-2*(x^2*y^4 + x^2*y^3 + x*y^3 + x*y^2 + x*y + y + 1)");
    EXPECT_EQ(p.expanded, "x*y^2 + x*y + y + 1 + y^-1 + x^-1*y^-1 + x^-1*y^-2");
}

TEST(Characters, TrivialRepresentation)
{
    for (const auto& [f, r] : std::vector<std::pair<Family, int>>{{Family::A, 1}, {Family::G, 2}, {Family::D, 4}}) {
        const Algebra a = build_algebra(f, r);
        for (Method m : {Method::gamma_table, Method::direct_weyl}) {
            const auto c = character(a, WeightVec::in_weights(IntVec(a.size(), 0)), m);
            EXPECT_EQ(c.poly, LaurentPoly::constant(a.size(), 1));
            EXPECT_EQ(c.dimension, 1);
        }
    }
}

TEST(Characters, A1Rendering)
{
    const Algebra a1 = build_algebra(Family::A, 1);
    const auto p = present_alpha_basis(character(a1, WeightVec::in_weights({1}), Method::gamma_table));
    EXPECT_EQ(p.expanded, "u^(1/2) + u^(-1/2)");
    EXPECT_EQ(p.factored, "u^(-1/2)*(u + 1)");
    const auto q = present_alpha_basis(character(a1, WeightVec::in_weights({2}), Method::gamma_table));
    EXPECT_EQ(q.expanded, "u + 1 + u^-1");
    const auto big = present_alpha_basis(character(build_algebra(Family::A, 3), WeightVec::in_weights({0, 0, 0}),
                                                   Method::direct_weyl));
    EXPECT_EQ(big.variables, (std::vector<std::string>{"u1", "u2", "u3"}));
    EXPECT_EQ(big.expanded, "1");
}

TEST(Characters, InputsAreValidated)
{
    const Algebra g2 = build_algebra(Family::G, 2);
    EXPECT_THROW(character(g2, WeightVec::in_weights({-1, 0}), Method::gamma_table), InputError);
    EXPECT_THROW(character(g2, WeightVec::in_weights({1, 0, 0}), Method::gamma_table), InputError);
    // a1 + a2 = l1 - l2 is not dominant
    EXPECT_THROW(character(g2, WeightVec::in_roots({1, 1}), Method::gamma_table), InputError);
    // a1 + 2 a2 = l2 is fine in root coordinates
    EXPECT_EQ(character(g2, WeightVec::in_roots({1, 2}), Method::gamma_table).dimension, 7);
    EXPECT_THROW(CharacterEngine(g2, assemble(build_algebra(Family::B, 2))), InputError);
    EXPECT_THROW(CharacterEngine(build_algebra(Family::E, 8), Method::gamma_table), EnvelopeError);
    EXPECT_THROW(CharacterEngine(build_algebra(Family::E, 7), Method::direct_weyl), EnvelopeError);
}

TEST(CharactersProperty, MethodsAgreeAndMatchFreudenthal)
{
    for (const auto& [f, r, depth] : std::vector<std::tuple<Family, int, int>>{
             {Family::A, 1, 4}, {Family::A, 2, 2}, {Family::B, 2, 2}, {Family::G, 2, 2}, {Family::C, 3, 1}, {Family::D, 4, 1}}) {
        const Algebra a = build_algebra(f, r);
        const CharacterEngine table(a, Method::gamma_table);
        const CharacterEngine direct(a, Method::direct_weyl);
        for (const auto& lambda : dominant_box(a.size(), depth)) {
            SCOPED_TRACE(a.id() + " " + format_vec(lambda));
            const CharacterResult c = table.character(lambda);
            EXPECT_EQ(c.poly, direct.character(lambda).poly);
            EXPECT_EQ(c.dimension, weyl_dimension(a, lambda));
            const WeightMultiplicities m = multiplicities(c);
            EXPECT_EQ(m, freudenthal_multiplicities(a, lambda));
            for (const auto& [mu, k] : m) {
                // positive and constant on Weyl orbits
                EXPECT_GT(k, 0);
                for (std::size_t i = 0; i < a.size(); ++i)
                    EXPECT_EQ(m.at(a.reflect(mu, i)), k);
            }
            EXPECT_EQ(m.at(lambda), 1);
        }
    }
}

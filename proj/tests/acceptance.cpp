// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

#include "oracles.hpp"
#include "weylchar/weylchar.hpp"

using namespace weylchar;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects the first few failures of one criterion.
struct Check {
    std::vector<std::string> failures;
    std::string note;

    void expect(bool ok, const std::string& what)
    {
        if (!ok && failures.size() < 5)
            failures.push_back(what);
        else if (!ok)
            failures.back() = "... and more";
    }
};

int failed = 0;

void criterion(int number, const std::string& title, double limit_seconds, const std::function<void(Check&)>& body)
{
    Check c;
    const auto start = Clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    if (limit_seconds > 0 && elapsed >= limit_seconds)
        c.failures.push_back("took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit_seconds) + " s");
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << " [" << (number ? std::to_string(number) : std::string("A")) << "] " << title
         << " (" << std::fixed << std::setprecision(3) << elapsed << " s)";
    if (!c.note.empty())
        line << " " << c.note;
    std::cout << line.str() << "\n";
    for (const auto& f : c.failures)
        std::cout << "    " << f << "\n";
    std::cout.flush();
}

oracle::Poly in_roots(const Algebra& a, const LaurentPoly& p)
{
    oracle::Poly out;
    for (const auto& [e, c] : present_alpha_basis(a, p).terms) {
        oracle::Vec v;
        for (const auto& x : e) {
            if (x.get_den() != 1)
                throw IntegrityError("non-integral root exponent");
            v.push_back(x.get_num().get_si());
        }
        out[v] = c.get_si();
    }
    return out;
}

const std::vector<std::pair<Family, int>> kSuite = {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
                                                    {Family::B, 3}, {Family::C, 3}, {Family::D, 4}, {Family::G, 2}};

/// Every type whose Weyl group fits the enumeration envelope.
std::vector<std::pair<Family, int>> supported_types()
{
    std::vector<std::pair<Family, int>> out;
    const std::vector<std::tuple<Family, int, int>> ranges = {
        {Family::A, 1, 8}, {Family::B, 2, 7}, {Family::C, 2, 7}, {Family::D, 4, 7},
        {Family::E, 6, 8}, {Family::F, 4, 4}, {Family::G, 2, 2}};
    for (const auto& [f, lo, hi] : ranges)
        for (int r = lo; r <= hi; ++r)
            if (weyl_group_order(f, r) <= kWeylEnvelope)
                out.emplace_back(f, r);
    return out;
}

const std::vector<oracle::Vec> kG2Roots = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};

}  // namespace

int main()
{
    const Algebra g2 = build_algebra(Family::G, 2);

    criterion(1, "G2 Gamma table: 12 entries, candidate lists, pairings and signatures", 1.0, [&](Check& c) {
        const GammaTable t = assemble(g2);
        c.expect(t.size() == 12, "entry count " + std::to_string(t.size()));
        c.expect(t.candidates[0] == std::vector<IntVec>{{0, 0}, {1, 0}, {1, 3}, {3, 3}, {3, 6}, {4, 6}},
                 "gamma_1 candidates differ");
        c.expect(t.candidates[1] == std::vector<IntVec>{{0, 0}, {0, 1}, {1, 1}, {1, 3}, {2, 3}, {2, 4}},
                 "gamma_2 candidates differ");
        // 1-based (I_1, I_2, sign) in the reference order
        const std::vector<std::tuple<std::size_t, std::size_t, int>> reference = {
            {1, 1, 1},  {2, 3, 1},  {3, 2, 1},  {4, 5, 1},  {5, 4, 1},  {6, 6, 1},
            {1, 2, -1}, {2, 1, -1}, {3, 4, -1}, {4, 3, -1}, {5, 6, -1}, {6, 5, -1}};
        std::set<std::tuple<std::size_t, std::size_t, int>> got;
        for (const auto& e : t.entries)
            got.emplace(e.selector[0] + 1, e.selector[1] + 1, e.signature);
        c.expect(got == std::set<std::tuple<std::size_t, std::size_t, int>>(reference.begin(), reference.end()),
                 "pairings or signatures differ");
        c.expect(got.count({1, 2, -1}) == 1, "Gamma_7 = {gamma_1(1), gamma_2(2)} with sign -1 missing");
    });

    criterion(2, "G2 generic alternant: 12 signed affine exponent pairs", 0, [&](Check& c) {
        using Row = std::array<int, 7>;
        // sign x^{c1 + a1 s1 + b1 s2} y^{c2 + a2 s1 + b2 s2}
        const std::set<Row> reference = {
            {1, 3, 2, 1, 5, 3, 2},       {1, -3, -2, -1, -5, -3, -2}, {1, -2, -1, -1, -1, 0, -1},
            {1, 2, 1, 1, 1, 0, 1},       {1, -1, -1, 0, -4, -3, -1},  {1, 1, 1, 0, 4, 3, 1},
            {-1, 1, 1, 0, -1, 0, -1},    {-1, -1, -1, 0, 1, 0, 1},    {-1, -2, -1, -1, -5, -3, -2},
            {-1, 2, 1, 1, 5, 3, 2},      {-1, -3, -2, -1, -4, -3, -1}, {-1, 3, 2, 1, 4, 3, 1}};
        std::set<Row> got;
        for (const auto& f : generic_alternant(g2, assemble(g2))) {
            Row row{f.signature};
            for (std::size_t i = 0; i < 2; ++i) {
                const Rational values[3] = {f.constant[i], f.slope[i][0], f.slope[i][1]};
                for (std::size_t k = 0; k < 3; ++k) {
                    c.expect(values[k].get_den() == 1, "non-integral exponent");
                    row[1 + 3 * i + k] = static_cast<int>(values[k].get_num().get_si());
                }
            }
            got.insert(row);
        }
        c.expect(got == reference, "affine exponent set differs");
    });

    criterion(3, "G2 A(rho) equals the expanded six-factor product", 0, [&](Check& c) {
        const CharacterEngine e(g2, Method::gamma_table);
        c.expect(in_roots(g2, e.denominator()) == oracle::product_form({-3, -5}, kG2Roots, -1),
                 "A(rho) differs from x^-3 y^-5 prod (1 - x^a y^b)");
    });

    const std::vector<std::tuple<IntVec, oracle::Poly, long>> g2_characters = {
        {{1, 0},
         oracle::product_of_sums({-2, -3}, {{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {2, 3}, {3, 3},
                                             {2, 4}, {3, 4}, {3, 5}, {3, 6}, {4, 6}}}),
         14},
        {{0, 1}, oracle::product_of_sums({-1, -2}, {{{0, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}}}), 7},
        {{1, 1}, oracle::product_form({-3, -5}, kG2Roots, 1), 64},
        {{0, 2},
         oracle::product_of_sums({-2, -4},
                                 {{{0, 0}, {0, 1}, {0, 2}}, {{0, 0}, {1, 1}, {2, 2}}, {{0, 0}, {1, 2}, {2, 4}}}),
         27},
    };
    for (const auto& [lambda, expected, dim] : g2_characters) {
        criterion(4, "G2 character " + format_vec(lambda) + ", dimension " + std::to_string(dim), 1.0, [&](Check& c) {
            const CharacterResult r = character(g2, WeightVec::in_weights(lambda), Method::gamma_table);
            c.expect(in_roots(g2, r.poly) == expected, "monomials differ from the reference product form");
            c.expect(r.dimension == dim, "dimension " + r.dimension.get_str());
            if (lambda == IntVec{1, 0})
                c.expect(r.poly.coefficient(Exponent{0, 0}) == 2, "zero weight multiplicity is not 2");
            if (lambda == IntVec{0, 1})
                c.expect(r.poly.term_count() == 7, "expected 7 terms");
        });
    }

    criterion(5, "G2 tensor V(l1) x V(l1+l2): seven summands, 14*64 = 896", 0, [&](Check& c) {
        const Decomposition d = tensor_decompose(g2, WeightVec::in_weights({1, 0}), WeightVec::in_weights({1, 1}));
        const std::vector<std::pair<IntVec, BigInt>> expected = {{{2, 1}, 1}, {{1, 2}, 1}, {{1, 1}, 2}, {{0, 4}, 1},
                                                                 {{0, 3}, 1}, {{0, 2}, 1}, {{0, 1}, 1}};
        c.expect(d.summands == expected, "summands differ");
        BigInt total = 0;
        for (const auto& [w, m] : d.summands)
            total += m * weyl_dimension(g2, w);
        c.expect(total == 896, "dimension sum " + total.get_str());
    });

    criterion(6, "entry count = |W| and candidate counts = orbit sizes (8 algebras)", 60.0, [&](Check& c) {
        for (const auto& [f, r] : kSuite) {
            const Algebra a = build_algebra(f, r);
            const GammaTable t = assemble(a);
            const std::size_t group = generate(a).size();
            c.expect(t.size() == group, a.id() + ": " + std::to_string(t.size()) + " entries, |W| = " + std::to_string(group));
            c.expect(BigInt(static_cast<unsigned long>(group)) == weyl_group_order(a), a.id() + ": |W| formula disagrees");
            for (std::size_t i = 0; i < a.size(); ++i) {
                const auto o = orbit(a, a.fundamental_weights()[i]);
                c.expect(t.candidates[i].size() == o.size(), a.id() + ": candidate list " + std::to_string(i + 1));
            }
        }
    });

    criterion(7, "alternant = Weyl sum, coefficients = Freudenthal, dimension = Weyl formula", 300.0, [&](Check& c) {
        std::size_t weights = 0;
        for (const auto& [f, r] : kSuite) {
            const Algebra a = build_algebra(f, r);
            const CharacterEngine engine(a, Method::gamma_table);
            const WeylGroup w = generate(a);
            for (const auto& lambda : dominant_box(a.size(), 2)) {
                const std::string tag = a.id() + " " + format_vec(lambda);
                c.expect(engine.alternant(lambda) == alternant_direct(a, w, lambda), tag + ": alternant");
                const CharacterResult ch = engine.character(lambda);
                c.expect(multiplicities(ch) == freudenthal_multiplicities(a, lambda), tag + ": multiplicities");
                c.expect(eval_ones(ch.poly) == weyl_dimension(a, lambda), tag + ": dimension");
                ++weights;
            }
        }
        c.note = std::to_string(weights) + " highest weights";
    });

    criterion(8, "properties: division round trip, orbit constancy, alternant(0) = A(rho)", 0, [&](Check& c) {
        std::mt19937 rng(8);
        auto random_poly = [&](std::size_t rank, int terms) {
            std::uniform_int_distribution<int> e(-3, 3), k(-9, 9);
            std::vector<LaurentPoly::Term> t;
            for (int n = 0; n < terms; ++n) {
                Exponent x(rank);
                for (auto& v : x)
                    v = e(rng);
                t.push_back({x, k(rng)});
            }
            return LaurentPoly::from_terms(rank, std::move(t));
        };
        for (int round = 0; round < 200; ++round) {
            const std::size_t rank = 1 + round % 4;
            const LaurentPoly p = random_poly(rank, 1 + round % 6);
            LaurentPoly q = random_poly(rank, 1 + round % 4);
            if (q.is_zero())
                q = LaurentPoly::constant(rank, 1);
            c.expect(exact_div(p * q, q) == p, "round " + std::to_string(round) + ": (p q) / q != p");
        }

        std::uniform_int_distribution<std::size_t> pick(0, kSuite.size() - 1);
        std::uniform_int_distribution<int> coord(0, 2);
        for (int round = 0; round < 20; ++round) {
            const auto [f, r] = kSuite[pick(rng)];
            const Algebra a = build_algebra(f, r);
            IntVec lambda(a.size());
            for (auto& x : lambda)
                x = coord(rng);
            const auto m = multiplicities(character(a, WeightVec::in_weights(lambda), Method::gamma_table));
            for (const auto& [mu, k] : m)
                for (std::size_t i = 0; i < a.size(); ++i) {
                    const auto it = m.find(a.reflect(mu, i));
                    c.expect(it != m.end() && it->second == k, a.id() + " " + format_vec(lambda) + ": not W-invariant");
                }
        }

        std::size_t algebras = 0;
        for (const auto& [f, r] : supported_types()) {
            const Algebra a = build_algebra(f, r);
            const IntVec zero(a.size(), 0);
            const LaurentPoly from_table = alternant(a, assemble(a), zero);
            c.expect(from_table == alternant_direct(a, generate(a), zero), a.id() + ": alternant(0) != Weyl sum at rho");
            if (a.positive_root_coords().size() <= kExpansionCap)
                c.expect(from_table == denominator_by_expansion(a), a.id() + ": alternant(0) != product form");
            ++algebras;
        }
        c.note = std::to_string(algebras) + " algebras within the envelope";
    });

    criterion(9, "determinant signatures = signatures read off the expanded product", 0, [&](Check& c) {
        std::size_t checked = 0;
        for (const auto& [f, r] : supported_types()) {
            const Algebra a = build_algebra(f, r);
            if (a.positive_root_coords().size() > kExpansionCap)
                continue;
            const GammaTable t = assemble(a);
            const SignatureCheck s = verify_signatures_by_expansion(a, t);
            c.expect(s.matches, a.id() + ": " + s.mismatch);
            for (std::size_t k = 0; k < t.size(); ++k)
                c.expect(s.expansion_signatures[k] == t.entries[k].signature, a.id() + ": entry " + std::to_string(k));
            ++checked;
        }
        c.expect(checked >= 7, "too few algebras under the expansion cap");
        c.note = std::to_string(checked) + " algebras";
    });

    criterion(0, "amortization: D4, 100 weights, cached table at least 5x faster than direct sums", 0, [&](Check& c) {
        const Algebra d4 = build_algebra(Family::D, 4);
        const auto dir = std::filesystem::temp_directory_path() / ("weylchar-acceptance-" + std::to_string(std::random_device{}()));
        save_table(d4, assemble(d4), cache_path(dir, d4));
        const GammaTable cached = load_table(cache_path(dir, d4));
        std::filesystem::remove_all(dir);

        std::vector<IntVec> weights = dominant_box(4, 3);
        weights.resize(100);
        const WeylGroup group = generate(d4);

        // best of three, to keep scheduler noise out of the ratio
        auto best = [](const std::function<void()>& f) {
            double t = 1e9;
            for (int k = 0; k < 3; ++k) {
                const auto start = Clock::now();
                f();
                t = std::min(t, seconds_since(start));
            }
            return t;
        };
        std::vector<LaurentPoly> from_table, direct;
        const double table_time = best([&] {
            from_table.clear();
            for (const auto& w : weights)
                from_table.push_back(alternant(d4, cached, w));
        });
        const double direct_time = best([&] {
            direct.clear();
            for (const auto& w : weights)
                direct.push_back(alternant_direct(d4, group, w));
        });
        const auto start = Clock::now();
        for (const auto& w : weights)
            (void)alternant_direct(d4, WeightVec::in_weights(w));
        const double scratch_time = seconds_since(start);

        c.expect(from_table == direct, "table and direct alternants differ");
        const double ratio = direct_time / table_time;
        c.expect(ratio >= 5.0, "speedup " + std::to_string(ratio) + "x over direct sums with a pre-enumerated group");
        std::ostringstream note;
        note << std::fixed << std::setprecision(1) << "table " << table_time * 1e3 << " ms, direct " << direct_time * 1e3
             << " ms (" << ratio << "x), direct with group enumeration per weight " << scratch_time * 1e3 << " ms ("
             << scratch_time / table_time << "x)";
        c.note = note.str();
    });

    std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << "\n";
    return failed == 0 ? 0 : 1;
}

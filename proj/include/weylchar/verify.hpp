#ifndef WEYLCHAR_VERIFY_HPP
#define WEYLCHAR_VERIFY_HPP

// Cross-checks the Gamma-table route against the explicit Weyl group,
// Freudenthal's formula and the Weyl dimension formula.

#include <string>
#include <vector>

#include "json.hpp"
#include "weylchar/characters.hpp"
#include "weylchar/gamma.hpp"
#include "weylchar/weyl.hpp"

namespace weylchar {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;
};

struct VerifyReport {
    std::string algebra_id;
    int depth = 0;
    std::vector<CheckResult> checks;

    bool passed() const
    {
        for (const auto& c : checks)
            if (!c.passed)
                return false;
        return true;
    }

    nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["algebra"] = algebra_id;
        j["depth"] = depth;
        j["passed"] = passed();
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"cases", c.cases}, {"detail", c.detail}});
        return j;
    }
};

/// Every dominant weight with coordinates in [0, depth], lexicographic order.
inline std::vector<IntVec> dominant_box(std::size_t rank, int depth)
{
    std::vector<IntVec> out;
    IntVec w(rank, 0);
    for (;;) {
        out.push_back(w);
        std::size_t i = rank;
        for (; i > 0; --i) {
            if (w[i - 1] < depth) {
                ++w[i - 1];
                break;
            }
            w[i - 1] = 0;
        }
        if (i == 0)
            return out;
    }
}

namespace detail {

inline void fail_once(CheckResult& c, const std::string& what)
{
    if (c.passed)
        c.detail = what;
    c.passed = false;
}

}  // namespace detail

inline VerifyReport run_verification(const Algebra& a, int depth)
{
    if (depth < 0)
        throw InputError("verification depth must be non-negative");
    VerifyReport report;
    report.algebra_id = a.id();
    report.depth = depth;

    const WeylGroup group = generate(a);
    const BigInt order = weyl_group_order(a);
    {
        CheckResult c{"weyl_group_order", true, 1, ""};
        if (BigInt(static_cast<unsigned long>(group.size())) != order)
            detail::fail_once(c, "generated " + std::to_string(group.size()) + " elements, formula gives " +
                                     order.get_str());
        report.checks.push_back(c);
    }

    GammaTable table;
    {
        CheckResult c{"gamma_entry_count", true, 1, ""};
        try {
            table = assemble(a);
            if (table.size() != group.size())
                detail::fail_once(c, "D = " + std::to_string(table.size()) + ", |W| = " + std::to_string(group.size()));
        } catch (const IntegrityError& e) {
            detail::fail_once(c, e.what());
            report.checks.push_back(c);
            return report;
        }
        report.checks.push_back(c);
    }
    {
        CheckResult c{"candidate_orbit_sizes", true, 0, ""};
        for (std::size_t i = 0; i < a.size(); ++i) {
            ++c.cases;
            const auto orbit_size = orbit_weights(a, a.weight_coords(a.fundamental_weights()[i])).size();
            if (table.candidates[i].size() != orbit_size)
                detail::fail_once(c, "index " + std::to_string(i) + ": " + std::to_string(table.candidates[i].size()) +
                                         " candidates, orbit size " + std::to_string(orbit_size));
        }
        report.checks.push_back(c);
    }
    if (a.positive_root_coords().size() <= kExpansionCap) {
        CheckResult c{"signatures_by_expansion", true, table.size(), ""};
        const SignatureCheck s = verify_signatures_by_expansion(a, table);
        if (!s.matches)
            detail::fail_once(c, s.mismatch);
        for (std::size_t k = 0; k < table.size() && c.passed; ++k)
            if (s.expansion_signatures[k] != table.entries[k].signature)
                detail::fail_once(c, "entry " + std::to_string(k) + " signature differs from the expansion");
        report.checks.push_back(c);
    }

    CheckResult alt{"alternant_equals_weyl_sum", true, 0, ""};
    CheckResult freud{"multiplicities_equal_freudenthal", true, 0, ""};
    CheckResult dim{"dimension_equals_weyl_formula", true, 0, ""};
    const CharacterEngine engine(a, table);
    for (const auto& w : dominant_box(a.size(), depth)) {
        const std::string tag = format_vec(w);
        ++alt.cases;
        if (alternant(a, table, w) != alternant_direct(a, group, w))
            detail::fail_once(alt, "mismatch at " + tag);
        ++freud.cases;
        ++dim.cases;
        try {
            const CharacterResult ch = engine.character(w);
            if (multiplicities(ch) != freudenthal_multiplicities(a, w))
                detail::fail_once(freud, "mismatch at " + tag);
            const BigInt expected = weyl_dimension(a, w);
            if (ch.dimension != expected)
                detail::fail_once(dim, "at " + tag + ": character gives " + ch.dimension.get_str() + ", formula " +
                                           expected.get_str());
        } catch (const IntegrityError& e) {
            detail::fail_once(freud, "at " + tag + ": " + e.what());
            detail::fail_once(dim, "at " + tag + ": " + e.what());
        }
    }
    report.checks.push_back(alt);
    report.checks.push_back(freud);
    report.checks.push_back(dim);
    return report;
}

}  // namespace weylchar

#endif

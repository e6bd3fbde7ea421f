#ifndef WEYLCHAR_CLI_HPP
#define WEYLCHAR_CLI_HPP

// Command-line front end: character | gamma | tensor | verify | dimension.
//
// Exit codes: 0 success, 2 input error, 3 integrity error (including a failed
// verify), 4 Weyl group outside the enumeration envelope, 1 anything else.

#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylchar/characters.hpp"
#include "weylchar/gamma.hpp"
#include "weylchar/table_io.hpp"
#include "weylchar/tensor.hpp"
#include "weylchar/verify.hpp"
#include "weylchar/weyl.hpp"

namespace weylchar::cli {

enum ExitCode : int { ok = 0, other_error = 1, input_error = 2, integrity_error = 3, envelope_error = 4 };

enum class Format { text, json };

struct RunConfig {
    std::string algebra;
    std::string weight;
    std::string left;
    std::string right;
    Method method = Method::gamma_table;
    Format format = Format::text;
    std::optional<std::filesystem::path> cache_dir;
    int depth = 2;
};

/// "1,0,2" -> {1,0,2}; checks the count and non-negativity.
inline IntVec parse_weight(const std::string& text, const Algebra& a, const std::string& flag)
{
    if (text.empty())
        throw InputError(flag + " is required for " + a.id());
    IntVec w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw InputError(flag + ": '" + item + "' is not an integer");
        }
        if (used != item.size())
            throw InputError(flag + ": '" + item + "' is not an integer");
        if (v < 0)
            throw InputError(flag + ": coordinates must be non-negative (dominant weight), got " + item);
        w.push_back(v);
    }
    if (!text.empty() && text.back() == ',')
        throw InputError(flag + ": trailing comma");
    if (w.size() != a.size())
        throw InputError(flag + ": " + a.id() + " needs " + std::to_string(a.rank()) + " coordinates, got " +
                         std::to_string(w.size()));
    return w;
}

inline nlohmann::json bigint_json(const BigInt& z)
{
    if (z.fits_slong_p())
        return static_cast<std::int64_t>(z.get_si());
    return z.get_str();
}

inline std::string weight_label(const IntVec& w)
{
    // 2*l1 + l2 style, "0" for the trivial weight
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (w[i] != 1)
            s += std::to_string(w[i]) + "*";
        s += "l" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

inline std::string root_label(const IntVec& n)
{
    std::string s;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0)
            continue;
        if (!s.empty())
            s += " + ";
        if (n[i] != 1)
            s += std::to_string(n[i]) + "*";
        s += "a" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

inline std::string affine_label(const Rational& constant, const RationalVec& slope)
{
    std::string s = constant.get_str();
    for (std::size_t j = 0; j < slope.size(); ++j) {
        if (slope[j] == 0)
            continue;
        const Rational mag = abs(slope[j]);
        s += slope[j] < 0 ? " - " : " + ";
        if (mag != 1)
            s += mag.get_str() + "*";
        s += "s" + std::to_string(j + 1);
    }
    return s;
}

/// Loads the cached table when present and valid, otherwise builds and caches it.
/// Cache problems are reported on `log` and never fail the command.
inline GammaTable load_or_build_table(const Algebra& a, const std::filesystem::path& dir, std::ostream& log)
{
    const auto path = cache_path(dir, a);
    std::error_code ec;
    if (std::filesystem::exists(path, ec)) {
        try {
            GammaTable t = load_table(path);
            if (t.family == a.family() && t.rank == a.rank()) {
                log << "loaded Gamma table from " << path.string() << "\n";
                return t;
            }
            log << "warning: " << path.string() << " holds a different algebra; rebuilding\n";
        } catch (const std::exception& e) {
            log << "warning: ignoring cached table " << path.string() << ": " << e.what() << "\n";
        }
    }
    GammaTable t = assemble(a);
    try {
        save_table(a, t, path);
        log << "built Gamma table and cached it at " << path.string() << "\n";
    } catch (const std::exception& e) {
        log << "warning: could not write cache: " << e.what() << "\n";
    }
    return t;
}

class Runner {
public:
    Runner(RunConfig config, std::ostream& out, std::ostream& log)
        : config_(std::move(config)), out_(out), log_(log), algebra_(parse_algebra(config_.algebra))
    {
    }

    std::filesystem::path cache_dir() const { return config_.cache_dir.value_or(default_cache_dir()); }

    std::shared_ptr<const CharacterEngine> engine() const
    {
        if (config_.method == Method::gamma_table)
            return std::make_shared<const CharacterEngine>(algebra_, load_or_build_table(algebra_, cache_dir(), log_));
        return std::make_shared<const CharacterEngine>(algebra_, Method::direct_weyl);
    }

    int cmd_character()
    {
        const IntVec w = parse_weight(config_.weight, algebra_, "--weight");
        const CharacterResult c = engine()->character(w);
        const AlphaPresentation p = present_alpha_basis(algebra_, c.poly);
        if (config_.format == Format::json) {
            nlohmann::json j;
            j["algebra"] = algebra_.id();
            j["weight"] = w;
            j["dimension"] = bigint_json(c.dimension);
            j["method"] = to_string(c.method);
            j["monomials"] = nlohmann::json::array();
            for (const auto& t : c.poly.terms())
                j["monomials"].push_back({{"exponents", to_int_vec(t.exponent)}, {"coeff", bigint_json(t.coeff)}});
            j["presentation"] = p.factored;
            out_ << j.dump(2) << "\n";
            return ok;
        }
        out_ << "algebra: " << algebra_.id() << "\n"
             << "highest weight: " << weight_label(w) << "  " << format_vec(w) << "\n"
             << "method: " << to_string(c.method) << "\n"
             << "dimension: " << c.dimension.get_str() << "\n"
             << "distinct weights: " << c.poly.term_count() << "\n"
             << "character (" << (algebra_.rank() == 2 ? "x = e^a1, y = e^a2" : "u_i = e^a_i") << "):\n  "
             << p.factored << "\n"
             << "weights (fundamental-weight coordinates) and multiplicities:\n";
        std::vector<std::pair<IntVec, BigInt>> rows;
        for (const auto& t : c.poly.terms())
            rows.emplace_back(to_int_vec(t.exponent), t.coeff);
        std::sort(rows.begin(), rows.end(), [&](const auto& x, const auto& y) {
            const auto hx = algebra_.scaled_height(x.first), hy = algebra_.scaled_height(y.first);
            return hx != hy ? hx > hy : y.first < x.first;
        });
        for (const auto& [mu, m] : rows)
            out_ << "  " << format_vec(mu) << "  " << m.get_str() << "\n";
        return ok;
    }

    int cmd_gamma()
    {
        const GammaTable t = load_or_build_table(algebra_, cache_dir(), log_);
        const auto generic = generic_alternant(algebra_, t);
        if (config_.format == Format::json) {
            nlohmann::json j;
            j["algebra"] = algebra_.id();
            j["order"] = t.size();
            j["candidates"] = t.candidates;
            j["entries"] = nlohmann::json::array();
            for (std::size_t k = 0; k < t.size(); ++k) {
                nlohmann::json xi = nlohmann::json::array();
                for (std::size_t i = 0; i < algebra_.size(); ++i) {
                    std::vector<std::string> slope;
                    for (const auto& s : generic[k].slope[i])
                        slope.push_back(s.get_str());
                    xi.push_back({{"constant", generic[k].constant[i].get_str()}, {"slope", slope}});
                }
                j["entries"].push_back(
                    {{"selector", t.entries[k].selector}, {"signature", t.entries[k].signature}, {"exponents", xi}});
            }
            out_ << j.dump(2) << "\n";
            return ok;
        }
        out_ << "algebra: " << algebra_.id() << "\n"
             << "entries: " << t.size() << "\n";
        for (std::size_t i = 0; i < t.candidates.size(); ++i) {
            out_ << "candidates for l" << (i + 1) << " (" << t.candidates[i].size() << "):\n";
            for (std::size_t p = 0; p < t.candidates[i].size(); ++p)
                out_ << "  g" << (i + 1) << "(" << (p + 1) << ") = " << root_label(t.candidates[i][p]) << "\n";
        }
        out_ << "Gamma sets:\n";
        for (std::size_t k = 0; k < t.size(); ++k) {
            const auto& e = t.entries[k];
            out_ << "  Gamma(" << (k + 1) << ") = {";
            for (std::size_t i = 0; i < e.selector.size(); ++i)
                out_ << (i ? ", " : "") << "g" << (i + 1) << "(" << (e.selector[i] + 1) << ")";
            out_ << "}  sign " << (e.signature > 0 ? "+1" : "-1") << "\n";
        }
        const auto vars = detail::variable_names(algebra_.size());
        out_ << "A(rho + Lambda), Lambda = sum s_i l_i:\n";
        for (const auto& f : generic) {
            out_ << "  " << (f.signature > 0 ? "+" : "-");
            for (std::size_t i = 0; i < algebra_.size(); ++i)
                out_ << " " << vars[i] << "^(" << affine_label(f.constant[i], f.slope[i]) << ")";
            out_ << "\n";
        }
        return ok;
    }

    int cmd_tensor()
    {
        const IntVec l = parse_weight(config_.left, algebra_, "--left");
        const IntVec r = parse_weight(config_.right, algebra_, "--right");
        CharacterCache cache(engine());
        const Decomposition d = tensor_decompose(cache, l, r);
        const BigInt dl = cache.get(l)->dimension, dr = cache.get(r)->dimension;
        BigInt total = 0;
        std::vector<BigInt> dims;
        for (const auto& [w, m] : d.summands) {
            dims.push_back(cache.get(w)->dimension);
            total += m * dims.back();
        }
        if (total != dl * dr)
            throw IntegrityError("dimension check failed: " + total.get_str() + " != " + BigInt(dl * dr).get_str());
        if (config_.format == Format::json) {
            nlohmann::json j;
            j["algebra"] = algebra_.id();
            j["left"] = l;
            j["right"] = r;
            j["summands"] = nlohmann::json::array();
            for (std::size_t k = 0; k < d.summands.size(); ++k)
                j["summands"].push_back({{"weight", d.summands[k].first},
                                         {"multiplicity", bigint_json(d.summands[k].second)},
                                         {"dimension", bigint_json(dims[k])}});
            j["dimension"] = {{"left", bigint_json(dl)}, {"right", bigint_json(dr)}, {"product", bigint_json(dl * dr)}};
            out_ << j.dump(2) << "\n";
            return ok;
        }
        out_ << "V(" << weight_label(l) << ") x V(" << weight_label(r) << ") =\n";
        std::string dim_line;
        for (std::size_t k = 0; k < d.summands.size(); ++k) {
            const auto& [w, m] = d.summands[k];
            out_ << (k ? "  + " : "    ") << (m != 1 ? m.get_str() + " " : "") << "V(" << weight_label(w) << ")  "
                 << format_vec(w) << "\n";
            dim_line += (k ? " + " : "") + (m != 1 ? m.get_str() + "*" : "") + dims[k].get_str();
        }
        out_ << "dimension check: " << dl.get_str() << " * " << dr.get_str() << " = " << BigInt(dl * dr).get_str()
             << " = " << dim_line << "\n";
        return ok;
    }

    int cmd_verify()
    {
        const VerifyReport report = run_verification(algebra_, config_.depth);
        if (config_.format == Format::json) {
            out_ << report.to_json().dump(2) << "\n";
        } else {
            out_ << "verify " << report.algebra_id << " depth " << report.depth << "\n";
            for (const auto& c : report.checks)
                out_ << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)"
                     << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
            out_ << (report.passed() ? "all checks passed" : "verification FAILED") << "\n";
        }
        return report.passed() ? ok : integrity_error;
    }

    int cmd_dimension()
    {
        const IntVec w = parse_weight(config_.weight, algebra_, "--weight");
        const BigInt d = weyl_dimension(algebra_, w);
        if (config_.format == Format::json) {
            nlohmann::json j{{"algebra", algebra_.id()}, {"weight", w}, {"dimension", bigint_json(d)}};
            out_ << j.dump(2) << "\n";
        } else {
            out_ << d.get_str() << "\n";
        }
        return ok;
    }

private:
    RunConfig config_;
    std::ostream& out_;
    std::ostream& log_;
    Algebra algebra_;
};

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Characters of simple Lie algebras from Gamma-set tables"};
    app.require_subcommand(1);
    RunConfig config;
    std::string method = "gamma";
    std::string format = "text";
    std::string cache_dir;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--algebra", config.algebra, "simple Lie algebra, e.g. G2, B3, A1")->required();
        sub->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--cache-dir", cache_dir, "Gamma table cache directory (env WEYLCHAR_CACHE_DIR)");
    };
    auto with_method = [&](CLI::App* sub) {
        sub->add_option("--method", method, "alternant route")->check(CLI::IsMember({"gamma", "weyl"}));
    };

    auto* character = app.add_subcommand("character", "character of an irreducible representation");
    common(character);
    with_method(character);
    character->add_option("--weight", config.weight, "highest weight, fundamental-weight coordinates")->required();

    auto* gamma = app.add_subcommand("gamma", "build or load the Gamma table");
    common(gamma);

    auto* tensor = app.add_subcommand("tensor", "decompose a tensor product of two irreducibles");
    common(tensor);
    with_method(tensor);
    tensor->add_option("--left", config.left, "first highest weight")->required();
    tensor->add_option("--right", config.right, "second highest weight")->required();

    auto* verify = app.add_subcommand("verify", "cross-check the Gamma-table route against the oracles");
    common(verify);
    verify->add_option("--depth", config.depth, "largest weight coordinate to test")->check(CLI::NonNegativeNumber);

    auto* dimension = app.add_subcommand("dimension", "Weyl dimension formula");
    common(dimension);
    dimension->add_option("--weight", config.weight, "highest weight, fundamental-weight coordinates")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }

    config.method = method == "weyl" ? Method::direct_weyl : Method::gamma_table;
    config.format = format == "json" ? Format::json : Format::text;
    if (!cache_dir.empty())
        config.cache_dir = cache_dir;

    try {
        Runner runner(config, out, err);
        if (*character)
            return runner.cmd_character();
        if (*gamma)
            return runner.cmd_gamma();
        if (*tensor)
            return runner.cmd_tensor();
        if (*verify)
            return runner.cmd_verify();
        return runner.cmd_dimension();
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return input_error;
    } catch (const EnvelopeError& e) {
        err << "envelope exceeded: " << e.what() << "\n";
        return envelope_error;
    } catch (const IntegrityError& e) {
        err << "integrity error: " << e.what() << "\n";
        return integrity_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return other_error;
    }
}

}  // namespace weylchar::cli

#endif

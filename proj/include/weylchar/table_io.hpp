#ifndef WEYLCHAR_TABLE_IO_HPP
#define WEYLCHAR_TABLE_IO_HPP

// Versioned JSON cache files for Gamma tables.
//
//   { "format_version": 1, "family": "G", "rank": 2, "cartan": [[2,-3],[-1,2]],
//     "candidates": [[[0,0],[1,0],...], ...],
//     "entries": [{"selector": [0,0], "signature": 1}, ...],
//     "checksum": "<sha256 of the compact dump of every other field>" }
//
// Keys are sorted and arrays are in canonical order, so identical tables
// produce identical files.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <string>

#include <openssl/sha.h>

#include "json.hpp"
#include "weylchar/algebra.hpp"
#include "weylchar/errors.hpp"
#include "weylchar/gamma.hpp"

namespace weylchar {

inline constexpr int kTableFormatVersion = 1;

/// Malformed, tampered or out-of-date cache file.
class TableFormatError : public IntegrityError {
public:
    using IntegrityError::IntegrityError;
};

inline std::string sha256_hex(const std::string& data)
{
    unsigned char digest[SHA256_DIGEST_LENGTH];
    SHA256(reinterpret_cast<const unsigned char*>(data.data()), data.size(), digest);
    std::ostringstream os;
    for (unsigned char b : digest)
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(b);
    return os.str();
}

inline nlohmann::json table_to_json(const Algebra& a, const GammaTable& t)
{
    detail::check_table(a, t);
    nlohmann::json j;
    j["format_version"] = kTableFormatVersion;
    j["family"] = std::string(1, static_cast<char>(t.family));
    j["rank"] = t.rank;
    j["cartan"] = a.cartan();
    j["candidates"] = t.candidates;
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : t.entries)
        entries.push_back({{"selector", e.selector}, {"signature", e.signature}});
    j["entries"] = std::move(entries);
    j["checksum"] = sha256_hex(j.dump());
    return j;
}

/// Parses and fully re-validates a table. Returns the algebra it belongs to via `algebra_out`.
inline GammaTable table_from_json(const nlohmann::json& j, Algebra* algebra_out = nullptr)
{
    try {
        if (!j.is_object())
            throw TableFormatError("table file is not a JSON object");
        const int version = j.at("format_version").get<int>();
        if (version != kTableFormatVersion)
            throw TableFormatError("table format version " + std::to_string(version) + " is not supported (expected " +
                                   std::to_string(kTableFormatVersion) + ")");
        nlohmann::json payload = j;
        payload.erase("checksum");
        if (j.at("checksum").get<std::string>() != sha256_hex(payload.dump()))
            throw TableFormatError("table checksum mismatch");

        const std::string family = j.at("family").get<std::string>();
        if (family.size() != 1)
            throw TableFormatError("bad family field");
        Algebra a = build_algebra(static_cast<Family>(family[0]), j.at("rank").get<int>());
        if (j.at("cartan").get<IntMatrix>() != a.cartan())
            throw TableFormatError("Cartan matrix in table does not match " + a.id());

        GammaTable t;
        t.family = a.family();
        t.rank = a.rank();
        t.candidates = j.at("candidates").get<std::vector<std::vector<IntVec>>>();
        for (const auto& e : j.at("entries")) {
            GammaEntry entry;
            entry.selector = e.at("selector").get<std::vector<std::size_t>>();
            entry.signature = e.at("signature").get<int>();
            t.entries.push_back(std::move(entry));
        }
        validate_table(a, t);
        if (algebra_out)
            *algebra_out = a;
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw TableFormatError(std::string("malformed table file: ") + e.what());
    } catch (const InputError& e) {
        throw TableFormatError(std::string("invalid table: ") + e.what());
    }
}

/// Writes to a temporary sibling and renames it into place.
inline void save_table(const Algebra& a, const GammaTable& t, const std::filesystem::path& path)
{
    const std::string text = table_to_json(a, t).dump(1) + "\n";
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::random_device rd;
    std::filesystem::path tmp = path;
    tmp += ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << text;
        out.flush();
        if (!out)
            throw std::runtime_error("short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move table into place at " + path.string() + ": " + ec.message());
    }
}

inline GammaTable load_table(const std::filesystem::path& path, Algebra* algebra_out = nullptr)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open table file " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw TableFormatError("table file " + path.string() + " is not valid JSON: " + e.what());
    }
    return table_from_json(j, algebra_out);
}

/// $WEYLCHAR_CACHE_DIR, else ~/.cache/weylchar.
inline std::filesystem::path default_cache_dir()
{
    if (const char* env = std::getenv("WEYLCHAR_CACHE_DIR"); env && *env)
        return env;
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "weylchar";
    return std::filesystem::temp_directory_path() / "weylchar";
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, const Algebra& a)
{
    return dir / (a.id() + ".v" + std::to_string(kTableFormatVersion) + ".json");
}

}  // namespace weylchar

#endif

#ifndef WEYLCHAR_TENSOR_HPP
#define WEYLCHAR_TENSOR_HPP

// Tensor product decomposition by peeling highest weights off the product
// of two characters.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "weylchar/characters.hpp"

namespace weylchar {

/// Characters of one algebra, computed once per highest weight.
/// Lookups take a shared lock; inserts are exclusive and idempotent.
class CharacterCache {
public:
    explicit CharacterCache(std::shared_ptr<const CharacterEngine> engine) : engine_(std::move(engine)) {}

    const CharacterEngine& engine() const { return *engine_; }
    const Algebra& algebra() const { return engine_->algebra(); }

    std::shared_ptr<const CharacterResult> get(const IntVec& highest)
    {
        {
            std::shared_lock lock(mutex_);
            if (auto it = cache_.find(highest); it != cache_.end())
                return it->second;
        }
        auto computed = std::make_shared<const CharacterResult>(engine_->character(highest));
        std::unique_lock lock(mutex_);
        return cache_.try_emplace(highest, std::move(computed)).first->second;
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return cache_.size();
    }

private:
    std::shared_ptr<const CharacterEngine> engine_;
    mutable std::shared_mutex mutex_;
    std::map<IntVec, std::shared_ptr<const CharacterResult>> cache_;
};

struct Decomposition {
    IntVec left;
    IntVec right;
    /// (highest weight, multiplicity), lexicographically descending by weight.
    std::vector<std::pair<IntVec, BigInt>> summands;
};

/// Tie-break among weights of equal height when picking the next highest weight.
enum class PeelOrder { height_lex, height_reverse_lex };

inline Decomposition tensor_decompose(CharacterCache& cache, const IntVec& left, const IntVec& right,
                                      PeelOrder order = PeelOrder::height_lex)
{
    const Algebra& a = cache.algebra();
    LaurentPoly rest = cache.get(left)->poly * cache.get(right)->poly;

    auto higher = [&](const Exponent& x, const Exponent& y) {
        const auto hx = a.scaled_height(to_int_vec(x));
        const auto hy = a.scaled_height(to_int_vec(y));
        if (hx != hy)
            return hx > hy;
        return order == PeelOrder::height_lex ? y < x : x < y;
    };

    Decomposition d{left, right, {}};
    while (!rest.is_zero()) {
        const auto top = std::min_element(rest.terms().begin(), rest.terms().end(),
                                          [&](const auto& s, const auto& t) { return higher(s.exponent, t.exponent); });
        const IntVec highest = to_int_vec(top->exponent);
        const BigInt mult = top->coeff;
        if (!a.is_dominant(highest))
            throw IntegrityError("highest remaining weight " + format_vec(highest) + " is not dominant");
        if (mult <= 0)
            throw IntegrityError("negative multiplicity " + mult.get_str() + " for " + format_vec(highest));
        rest -= cache.get(highest)->poly.scaled(mult);
        d.summands.emplace_back(highest, mult);
    }
    std::sort(d.summands.begin(), d.summands.end(), [](const auto& x, const auto& y) { return y.first < x.first; });
    return d;
}

inline Decomposition tensor_decompose(const Algebra& a, const WeightVec& left, const WeightVec& right)
{
    const IntVec l = detail::dominant_input(a, left);
    const IntVec r = detail::dominant_input(a, right);
    CharacterCache cache(std::make_shared<const CharacterEngine>(a, Method::gamma_table));
    return tensor_decompose(cache, l, r);
}

}  // namespace weylchar

#endif

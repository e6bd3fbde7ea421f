// Builds the G2 Gamma table, prints a few characters and one tensor product.

#include <iostream>
#include <memory>

#include "weylchar/weylchar.hpp"

using namespace weylchar;

int main()
{
    const Algebra g2 = build_algebra(Family::G, 2);
    const GammaTable table = assemble(g2);
    std::cout << "G2: " << table.size() << " Gamma sets\n";

    auto engine = std::make_shared<const CharacterEngine>(g2, table);
    for (const IntVec& w : {IntVec{1, 0}, IntVec{0, 1}, IntVec{1, 1}, IntVec{0, 2}}) {
        const CharacterResult c = engine->character(w);
        std::cout << "Ch" << format_vec(w) << " dim " << c.dimension.get_str() << "\n  "
                  << present_alpha_basis(g2, c.poly).factored << "\n";
    }

    CharacterCache cache(engine);
    const Decomposition d = tensor_decompose(cache, {1, 0}, {1, 1});
    std::cout << "V(1,0) x V(1,1) =";
    for (const auto& [w, m] : d.summands)
        std::cout << " " << m.get_str() << "*V" << format_vec(w);
    std::cout << "\n";
}

// Hand-built fixtures shared across suites, independent of the library's own
// constructors so they can serve as oracles for them.
#pragma once

#include <memory>

#include "semicanon/quiver.hpp"

namespace semicanon::testing {

// Kronecker quiver: two arrows from source "2" to sink "1"; vertex order
// ("1", "2").
inline std::shared_ptr<const BoundQuiver> kronecker() {
    return std::make_shared<BoundQuiver>(
        std::vector<std::string>{"1", "2"},
        std::vector<Arrow>{{"alpha", "2", "1"}, {"beta", "2", "1"}},
        std::vector<Relation>{});
}

// Canonical-type quiver with three arms of length 2 and one relation
// w3 = w1 + lam*w2, built directly. Vertex order (0, 1.1, 2.1, 3.1, w).
inline std::shared_ptr<const BoundQuiver> three_arms(long lam = 2) {
    std::vector<Arrow> arrows{{"a1.1", "0", "1.1"}, {"a1.2", "1.1", "w"},
                              {"a2.1", "0", "2.1"}, {"a2.2", "2.1", "w"},
                              {"a3.1", "0", "3.1"}, {"a3.2", "3.1", "w"}};
    Relation rel{{mpq_class(1), {"a3.1", "a3.2"}},
                 {mpq_class(-1), {"a1.1", "a1.2"}},
                 {mpq_class(-lam), {"a2.1", "a2.2"}}};
    return std::make_shared<BoundQuiver>(
        std::vector<std::string>{"0", "1.1", "2.1", "3.1", "w"}, std::move(arrows),
        std::vector<Relation>{std::move(rel)});
}

}  // namespace semicanon::testing

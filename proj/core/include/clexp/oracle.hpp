#pragma once

#include "clexp/expand.hpp"
#include "clexp/lpoly.hpp"
#include "clexp/surface.hpp"

#include <set>
#include <vector>

namespace clexp {

// Labelled seed with principal coefficients: N cluster variables as Laurent
// polynomials in the initial data and a 2N x N exchange matrix whose lower
// half starts as the identity.
struct Seed {
    std::vector<LPoly> cluster;
    std::vector<std::vector<int>> ext_matrix;

    int rank() const { return static_cast<int>(cluster.size()); }
    static Seed initial(const std::vector<std::vector<int>>& b);
    void check() const;  // skew-symmetric upper block, size consistency
};

// Mutation in direction k (1-based); an involution.
Seed mutate(const Seed& s, int k);

struct Closure {
    std::set<std::string> variables;  // canonical forms of all cluster variables
    int seeds_visited = 0;
    bool complete = true;  // false when the depth bound cut the search

    bool contains(const LPoly& p) const { return variables.count(p.str()) > 0; }
};

// Breadth-first mutation closure up to the given depth, deduplicated on
// clusters as unordered sets of canonical variables.
Closure mutation_closure(const Seed& s, int max_depth, size_t seed_limit = 200000);

struct VerifyResult {
    struct Item {
        std::string name;
        bool in_closure = false;
        std::string value;
    };
    std::vector<Item> items;
    int closure_size = 0;
    bool closure_complete = true;
    bool all_ok() const {
        for (const auto& i : items)
            if (!i.in_closure) return false;
        return true;
    }
};

// Checks that the formula expansion of every given arc is a cluster variable
// of the seed defined by the triangulation's exchange matrix.
VerifyResult verify_against_formula(const Triangulation& t,
                                    const std::vector<std::pair<std::string, ArcSpec>>& arcs,
                                    int max_depth, Backend backend = Backend::angles);

}  // namespace clexp

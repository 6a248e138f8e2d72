#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnorm/graph.hpp"

namespace gnorm {

// A normal covering witness: cliques and independent sets that each cover V,
// with every clique meeting every independent set.
struct NormalCertificate {
    std::vector<VertexSet> cliques;
    std::vector<VertexSet> independents;
};

struct Violation {
    enum class Kind { NotClique, NotIndependent, CliqueCoverGap, IndependentCoverGap, DisjointPair };
    Kind kind;
    int i = -1;      // index into cliques (or the family named by kind)
    int j = -1;      // index into independents for DisjointPair
    int u = -1;      // witness vertex / edge endpoint
    int v = -1;
    std::string describe() const;
};

struct VerifyResult {
    bool valid = false;
    std::vector<Violation> violations;
};

// Structured validity check. Out-of-range members and universe mismatches are
// input errors (std::invalid_argument), not violations.
VerifyResult verify_certificate(const Graph& g, const NormalCertificate& cert);

struct DecideBudget {
    std::uint64_t max_nodes = 50'000'000;
    std::int64_t max_millis = -1;  // < 0: no wall-clock limit
};

enum class Normality { Normal, NotNormal, BudgetExceeded };

const char* to_string(Normality v);

struct DecideResult {
    Normality outcome;
    std::optional<NormalCertificate> certificate;  // present iff Normal
    std::uint64_t nodes = 0;
};

// Exact decision by branch and prune over maximal cliques against maximal
// independent sets. Deterministic; never reports NotNormal after running out
// of budget.
DecideResult decide_normal(const Graph& g, const DecideBudget& budget = {});

// Greedily removes redundant members (largest first) while the certificate
// stays valid.
NormalCertificate minimize_certificate(const Graph& g, const NormalCertificate& cert);

struct Star {
    int center;
    VertexSet leaves;
};

// A normal covering of a triangle-free graph whose cliques form a spanning
// disjoint union of stars.
struct StarCovering {
    NormalCertificate certificate;
    std::vector<Star> stars;  // ascending center
    VertexSet centers;
};

// Reduction of a valid certificate of a triangle-free graph: drop single
// vertices inside edges, then repeatedly delete the lexicographically
// smallest clique edge whose endpoints both still have clique degree >= 2.
StarCovering to_star_covering(const Graph& g, const NormalCertificate& cert);

// Full invariant check of the star structure plus certificate validity.
VerifyResult verify_star_covering(const Graph& g, const StarCovering& cover);

}  // namespace gnorm

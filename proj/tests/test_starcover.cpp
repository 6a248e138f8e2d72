#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gnorm/cliques.hpp"
#include "gnorm/families.hpp"
#include "gnorm/normality.hpp"
#include "gnorm/sampling.hpp"

using namespace gnorm;

namespace {

NormalCertificate c6_all_edges_cert() {
    Graph c6 = cycle_graph(6);
    NormalCertificate cert;
    for (auto [u, v] : c6.edges()) cert.cliques.push_back(VertexSet::of(6, {u, v}));
    cert.independents.push_back(VertexSet::of(6, {0, 2, 4}));
    cert.independents.push_back(VertexSet::of(6, {1, 3, 5}));
    return cert;
}

}  // namespace

TEST_CASE("edge deletion trace on C6") {
    Graph c6 = cycle_graph(6);
    auto cover = to_star_covering(c6, c6_all_edges_cert());
    // Deleting (0,1), (2,3), (4,5) leaves the perfect matching {12, 34, 50},
    // read as stars centered at the lower endpoint.
    REQUIRE(cover.stars.size() == 3);
    CHECK(cover.stars[0].center == 0);
    CHECK(cover.stars[0].leaves == VertexSet::of(6, {5}));
    CHECK(cover.stars[1].center == 1);
    CHECK(cover.stars[1].leaves == VertexSet::of(6, {2}));
    CHECK(cover.stars[2].center == 3);
    CHECK(cover.stars[2].leaves == VertexSet::of(6, {4}));
    CHECK(cover.centers == VertexSet::of(6, {0, 1, 3}));
    CHECK(verify_star_covering(c6, cover).valid);
    CHECK(static_cast<int>(cover.stars.size()) <= independence_number(c6));
}

TEST_CASE("already-star coverings pass through") {
    Graph p4 = path_graph(4);
    NormalCertificate cert;
    cert.cliques = {VertexSet::of(4, {0, 1}), VertexSet::of(4, {2, 3})};
    cert.independents = {VertexSet::of(4, {0, 2}), VertexSet::of(4, {1, 3})};
    REQUIRE(verify_certificate(p4, cert).valid);
    auto cover = to_star_covering(p4, cert);
    REQUIRE(cover.stars.size() == 2);
    CHECK(cover.stars[0].center == 0);
    CHECK(cover.stars[1].center == 2);
    CHECK(verify_star_covering(p4, cover).valid);
}

TEST_CASE("single vertices become trivial stars") {
    // K1 alone: the lone vertex is its own star.
    Graph k1(1);
    NormalCertificate cert;
    cert.cliques = {VertexSet::of(1, {0})};
    cert.independents = {VertexSet::of(1, {0})};
    auto cover = to_star_covering(k1, cert);
    REQUIRE(cover.stars.size() == 1);
    CHECK(cover.stars[0].center == 0);
    CHECK(cover.stars[0].leaves.none());

    // An isolated vertex next to an edge component keeps its trivial star.
    // Every independent set must pass through the isolated vertex, so a
    // singleton clique can only ever sit on such a vertex.
    Graph mixed = Graph::from_edges(3, {{1, 2}});
    NormalCertificate iso;
    iso.cliques = {VertexSet::of(3, {0}), VertexSet::of(3, {1, 2})};
    iso.independents = {VertexSet::of(3, {0, 1}), VertexSet::of(3, {0, 2})};
    REQUIRE(verify_certificate(mixed, iso).valid);
    auto cover2 = to_star_covering(mixed, iso);
    REQUIRE(cover2.stars.size() == 2);
    CHECK(cover2.stars[0].center == 0);
    CHECK(cover2.stars[0].leaves.none());
    CHECK(cover2.stars[1].center == 1);
    CHECK(cover2.stars[1].leaves == VertexSet::of(3, {2}));
    CHECK(verify_star_covering(mixed, cover2).valid);
}

TEST_CASE("inputs are validated") {
    Graph tri = complete_graph(3);
    NormalCertificate tri_cert;
    tri_cert.cliques = {VertexSet::full(3)};
    tri_cert.independents = {VertexSet::of(3, {0}), VertexSet::of(3, {1}), VertexSet::of(3, {2})};
    CHECK_THROWS_AS((void)to_star_covering(tri, tri_cert), std::invalid_argument);

    Graph c6 = cycle_graph(6);
    auto broken = c6_all_edges_cert();
    broken.independents.pop_back();  // coverage gap
    CHECK_THROWS_AS((void)to_star_covering(c6, broken), std::invalid_argument);
}

TEST_CASE("verify_star_covering rejects tampering") {
    Graph c6 = cycle_graph(6);
    auto cover = to_star_covering(c6, c6_all_edges_cert());

    auto wrong_center = cover;
    wrong_center.centers = VertexSet::of(6, {0, 1, 4});
    CHECK_FALSE(verify_star_covering(c6, wrong_center).valid);

    auto extra_star = cover;
    extra_star.stars.push_back(Star{5, VertexSet(6)});
    CHECK_FALSE(verify_star_covering(c6, extra_star).valid);

    auto stray_clique = cover;
    stray_clique.certificate.cliques.push_back(VertexSet::of(6, {2, 3}));
    CHECK_FALSE(verify_star_covering(c6, stray_clique).valid);
}

TEST_CASE("random triangle-free coverings reduce to few stars") {
    int reduced = 0;
    for (std::uint64_t t = 0; reduced < 12 && t < 60; ++t) {
        const int n = 6 + static_cast<int>(t % 7);
        Graph g = sample_triangle_free(n, 0.3, 555, t);
        auto res = decide_normal(g);
        if (res.outcome != Normality::Normal) continue;
        auto cover = to_star_covering(g, *res.certificate);
        CHECK(verify_star_covering(g, cover).valid);
        CHECK(static_cast<int>(cover.stars.size()) <= independence_number(g));
        ++reduced;
    }
    CHECK(reduced == 12);
}

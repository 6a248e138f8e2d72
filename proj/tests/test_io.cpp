#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "gnorm/families.hpp"
#include "gnorm/graph_io.hpp"
#include "gnorm/sampling.hpp"

using namespace gnorm;

namespace {
Graph petersen() {
    return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                  {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                  {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}
}  // namespace

TEST_CASE("graph6 encodings are pinned") {
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(cycle_graph(7)) == "FhCKG");
    CHECK(to_graph6(complement(cycle_graph(7))) == "FUzro");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(path_graph(4)) == "Ch");
    CHECK(to_graph6(empty_graph(3)) == "B?");
    CHECK(to_graph6(petersen()) == "IheA@GUAo");
    CHECK(to_graph6(complete_graph(1)) == "@");
    CHECK(to_graph6(Graph(0)) == "?");
    Graph r12 = Graph::from_edges(
        12, {{0, 4}, {0, 9}, {0, 11}, {1, 3}, {1, 6}, {1, 8}, {1, 10}, {1, 11}, {2, 3}, {2, 4},
             {2, 11}, {3, 4}, {3, 5}, {3, 6}, {3, 8}, {5, 6}, {6, 9}, {7, 9}, {8, 11}, {10, 11}});
    CHECK(to_graph6(r12) == "KBkQg@O_q?[D");
}

TEST_CASE("graph6 round trips") {
    for (const Graph& g : {cycle_graph(5), petersen(), empty_graph(1), Graph(0)})
        CHECK(from_graph6(to_graph6(g)) == g);
    // Sizes around the one-byte boundary and into the long form.
    for (int n : {1, 2, 61, 62, 63, 64, 70}) {
        Graph g = sample_gnp(n, 0.3, 99, static_cast<std::uint64_t>(n));
        CHECK(from_graph6(to_graph6(g)) == g);
    }
    // Optional header and surrounding whitespace are accepted.
    CHECK(from_graph6(">>graph6<<Dhc") == cycle_graph(5));
    CHECK(from_graph6("Dhc\n") == cycle_graph(5));
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS((void)from_graph6(""), GraphParseError);
    CHECK_THROWS_AS((void)from_graph6("Dh"), GraphParseError);     // truncated
    CHECK_THROWS_AS((void)from_graph6("Dhcc"), GraphParseError);   // trailing data
    CHECK_THROWS_AS((void)from_graph6("D\x1f" "c"), GraphParseError);  // byte below range
    CHECK_THROWS_AS((void)from_graph6("Dhc\x7f"), GraphParseError);
}

TEST_CASE("edge list format") {
    Graph g = cycle_graph(4);
    CHECK(to_edge_list(g) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
    CHECK(from_edge_list(to_edge_list(g)) == g);
    CHECK(from_edge_list("3 1\n2 0\n") == Graph::from_edges(3, {{0, 2}}));
    CHECK(from_edge_list("0 0\n").vertex_count() == 0);

    CHECK_THROWS_AS((void)from_edge_list(""), GraphParseError);
    CHECK_THROWS_AS((void)from_edge_list("2 2\n0 1\n"), GraphParseError);  // missing edge
    CHECK_THROWS_AS((void)from_edge_list("2 1\n0 2\n"), GraphParseError);  // vertex range
    CHECK_THROWS_AS((void)from_edge_list("2 1\n0 x\n"), GraphParseError);
}

TEST_CASE("file io infers format from extension") {
    const std::string g6 = "/tmp/gnorm_io_test.g6";
    const std::string el = "/tmp/gnorm_io_test.el";
    Graph g = petersen();
    write_graph_file(g, g6);
    write_graph_file(g, el);
    CHECK(read_graph_file(g6) == g);
    CHECK(read_graph_file(el) == g);
    // Explicit override wins over the extension.
    write_graph_file(g, el + ".weird", "g6");
    CHECK(read_graph_file(el + ".weird", "g6") == g);
    CHECK_THROWS(read_graph_file("/tmp/gnorm_io_missing.g6"));
    std::remove(g6.c_str());
    std::remove(el.c_str());
    std::remove((el + ".weird").c_str());
}

#ifndef WMKCIS_IO_HPP
#define WMKCIS_IO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wmkcis/graph.hpp"

namespace wmkcis {

// A parsed instance: graph, original vertex names, and the optional colour
// lists from "l" lines (1-based colours in files, 0-based in masks here).
struct Instance {
    WeightedGraph graph;
    std::vector<std::string> names;
    bool has_lists = false;
    std::vector<uint32_t> raw_lists; // empty mask = no list line for that vertex
    int max_list_colour = 0;         // highest 1-based colour seen in list lines
    std::vector<std::string> warnings;
};

enum class InstanceFormat { Auto, EdgeList, Dimacs };

Instance parse_instance(std::istream& in, InstanceFormat format = InstanceFormat::Auto);
Instance parse_instance_file(const std::string& path, InstanceFormat format = InstanceFormat::Auto);

// Canonical edge-list serialization: one "w" line per vertex, "l" lines when
// lists are present, then edges in ascending id order. parse(serialize(x))
// reproduces x up to vertex renaming.
std::string serialize_instance(const Instance& inst);

// Lists for a run with k colours: the file lists when use_lists is set
// (missing lines mean the full palette), the full palette otherwise.
ListAssignment lists_for_k(const Instance& inst, int k, bool use_lists);

struct GeneratorParams {
    std::string family; // split | cograph | p5rk1-rejection
    int n = 0;
    int r = 0;          // rejection family only
    double p = 0.5;     // edge probability where applicable
    uint64_t seed = 0;
    Weight max_weight = 1; // uniform weights in [0, max_weight]; 1 = unit
    int max_tries = 10000; // rejection retry budget
};

// Reproducible (P5+rK1)-free instances; byte-identical output per seed.
Instance generate_instance(const GeneratorParams& params);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wmkcis

#endif

#pragma once

// The Kostka-Gale-Ryser graph on the nonzero entries of A*, conservative
// subtrees, and the polynomial-time reducibility test built on them.

#include <optional>
#include <string>
#include <vector>

#include "kostka/gale_ryser.hpp"

namespace kostka {

/// A nonzero entry of A*. Row and column are 1-based matrix indices.
struct Vertex {
    int row;
    int col;
    int sign;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Directed arc between vertex ids.
struct Arc {
    int from;
    int to;
    bool vertical;

    friend bool operator==(const Arc&, const Arc&) = default;
};

class KgrGraph {
public:
    /// Builds the graph and asserts forest, planarity, out-degree and the
    /// per-row source count. Throws MalformedStarMatrix when a -1 has no +1
    /// to its left.
    static KgrGraph build(const StarMatrix& s);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    /// Vertex id at (row, col), or -1.
    int id_at(int row, int col) const;
    /// Target of the unique outgoing arc, or -1.
    int out(int v) const { return out_[std::size_t(v)]; }
    const std::vector<int>& in(int v) const { return in_[std::size_t(v)]; }

    bool is_source(int v) const { return in_[std::size_t(v)].empty(); }
    bool is_sink(int v) const { return out_[std::size_t(v)] < 0; }

    /// Component label per vertex; labels are assigned in vertex order.
    std::vector<int> components() const;

private:
    void check_invariants(const StarMatrix& s) const;

    int rows_ = 0;
    int cols_ = 0;
    std::vector<Vertex> vertices_;  // sorted by (col, row)
    std::vector<Arc> arcs_;
    std::vector<int> cell_;         // rows_ * cols_ lookup
    std::vector<int> out_;
    std::vector<std::vector<int>> in_;
};

/// Undirected connectivity. Also asserts that the graph is connected exactly
/// when every column but the first contains a -1.
bool is_connected(const KgrGraph& g);

enum class WitnessKind { FullComponent, SinkSource };

const char* to_string(WitnessKind k);

struct SubtreeWitness {
    std::vector<int> vertices;  // sorted vertex ids
    std::vector<int> arcs;      // indices into KgrGraph::arcs()
    WitnessKind kind;

    /// Sorted 1-based columns that contain witness vertices.
    ColumnSet columns(const KgrGraph& g) const;
};

std::optional<SubtreeWitness> find_conservative_subtree(const KgrGraph& g);

/// Independent check of the conservative-subtree conditions.
bool verify_subtree(const KgrGraph& g, const SubtreeWitness& w);

struct FastReduction {
    ColumnSet columns;
    SubtreeWitness witness;
    Decomposition parts;
};

/// Ryser matrix, A*, graph, subtree search and split, all polynomial.
std::optional<FastReduction> fast_reducibility(const KostkaPair& pair);

/// Graphviz digraph with pinned positions; witness vertices and arcs are
/// drawn red when a witness is given.
std::string to_dot(const KgrGraph& g, const SubtreeWitness* highlight = nullptr);

}  // namespace kostka

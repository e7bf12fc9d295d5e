#include "kostka/kgr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kostka {

namespace {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x)
    {
        while (parent[std::size_t(x)] != x)
            x = parent[std::size_t(x)] = parent[std::size_t(parent[std::size_t(x)])];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        parent[std::size_t(std::max(a, b))] = std::min(a, b);
        return true;
    }
    std::vector<int> parent;
};

struct Segment {
    int r1, c1, r2, c2;  // r1 <= r2, c1 <= c2, axis-aligned
};

bool segments_clash(const Segment& a, const Segment& b)
{
    const bool ah = a.r1 == a.r2;
    const bool bh = b.r1 == b.r2;
    if (ah && bh) {
        if (a.r1 != b.r1)
            return false;
        return std::min(a.c2, b.c2) > std::max(a.c1, b.c1);
    }
    if (!ah && !bh) {
        if (a.c1 != b.c1)
            return false;
        return std::min(a.r2, b.r2) > std::max(a.r1, b.r1);
    }
    const Segment& h = ah ? a : b;
    const Segment& v = ah ? b : a;
    if (v.c1 < h.c1 || v.c1 > h.c2 || h.r1 < v.r1 || h.r1 > v.r2)
        return false;
    const bool end_of_h = v.c1 == h.c1 || v.c1 == h.c2;
    const bool end_of_v = h.r1 == v.r1 || h.r1 == v.r2;
    return !(end_of_h && end_of_v);
}

}  // namespace

int KgrGraph::id_at(int row, int col) const
{
    if (row < 1 || row > rows_ || col < 1 || col > cols_)
        return -1;
    return cell_[std::size_t(row - 1) * std::size_t(cols_) + std::size_t(col - 1)];
}

KgrGraph KgrGraph::build(const StarMatrix& s)
{
    KgrGraph g;
    const Grid& m = s.entries;
    g.rows_ = m.rows();
    g.cols_ = m.cols();
    g.cell_.assign(std::size_t(g.rows_) * std::size_t(g.cols_), -1);
    for (int j = 0; j < g.cols_; ++j)
        for (int i = 0; i < g.rows_; ++i)
            if (m(i, j) != 0) {
                g.cell_[std::size_t(i) * std::size_t(g.cols_) + std::size_t(j)] = int(g.vertices_.size());
                g.vertices_.push_back({i + 1, j + 1, m(i, j)});
            }
    const std::size_t n = g.vertices_.size();
    g.out_.assign(n, -1);
    g.in_.assign(n, {});

    auto add_arc = [&](int from, int to, bool vertical) {
        ensure(g.out_[std::size_t(from)] < 0, "KGR vertex has out-degree above one");
        g.out_[std::size_t(from)] = to;
        g.in_[std::size_t(to)].push_back(from);
        g.arcs_.push_back({from, to, vertical});
    };

    for (int v = 0; v < int(n); ++v) {
        const Vertex& x = g.vertices_[std::size_t(v)];
        if (x.sign == -1) {
            int c = x.col - 1;
            while (c >= 1 && m(x.row - 1, c - 1) == 0)
                --c;
            if (c < 1 || m(x.row - 1, c - 1) != 1)
                throw MalformedStarMatrix("-1 at (" + std::to_string(x.row) + "," + std::to_string(x.col) +
                                          ") has no +1 to its left");
            add_arc(v, g.id_at(x.row, c), false);
        } else {
            for (int i = 1; i <= g.rows_; ++i)
                if (m(i - 1, x.col - 1) == -1) {
                    add_arc(v, g.id_at(i, x.col), true);
                    break;
                }
        }
    }
    g.check_invariants(s);
    return g;
}

void KgrGraph::check_invariants(const StarMatrix& s) const
{
    UnionFind uf(vertices_.size());
    for (const Arc& a : arcs_)
        ensure(uf.unite(a.from, a.to), "KGR graph contains an undirected cycle");

    std::vector<Segment> segs;
    segs.reserve(arcs_.size());
    for (const Arc& a : arcs_) {
        const Vertex& p = vertices_[std::size_t(a.from)];
        const Vertex& q = vertices_[std::size_t(a.to)];
        segs.push_back({std::min(p.row, q.row), std::min(p.col, q.col), std::max(p.row, q.row),
                        std::max(p.col, q.col)});
    }
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j)
            ensure(!segments_clash(segs[i], segs[j]), "two KGR arcs cross");

    std::vector<Int> sources(std::size_t(rows_), 0);
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (!in_[v].empty())
            continue;
        ensure(vertices_[v].sign == 1, "KGR source is a -1");
        ++sources[std::size_t(vertices_[v].row - 1)];
    }
    ensure(sources == s.mu_star, "KGR source count per row differs from mu*");
}

std::vector<int> KgrGraph::components() const
{
    UnionFind uf(vertices_.size());
    for (const Arc& a : arcs_)
        uf.unite(a.from, a.to);
    std::vector<int> label(vertices_.size(), -1), root_label(vertices_.size(), -1);
    int next = 0;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        int& r = root_label[std::size_t(uf.find(int(v)))];
        if (r < 0)
            r = next++;
        label[v] = r;
    }
    return label;
}

bool is_connected(const KgrGraph& g)
{
    const auto label = g.components();
    const bool connected = std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
    std::vector<bool> has_minus(std::size_t(g.cols()), false);
    for (const Vertex& v : g.vertices())
        if (v.sign == -1)
            has_minus[std::size_t(v.col - 1)] = true;
    const bool every_column = std::all_of(has_minus.begin() + std::min<std::ptrdiff_t>(1, g.cols()),
                                          has_minus.end(), [](bool b) { return b; });
    ensure(connected == every_column, "connectivity disagrees with the horizontal-arc column test");
    return connected;
}

const char* to_string(WitnessKind k)
{
    return k == WitnessKind::FullComponent ? "C1" : "C2";
}

ColumnSet SubtreeWitness::columns(const KgrGraph& g) const
{
    ColumnSet out;
    for (int v : vertices)
        out.push_back(g.vertices()[std::size_t(v)].col);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

std::vector<int> induced_arcs(const KgrGraph& g, const std::vector<bool>& in_set)
{
    std::vector<int> out;
    for (std::size_t k = 0; k < g.arcs().size(); ++k)
        if (in_set[std::size_t(g.arcs()[k].from)] && in_set[std::size_t(g.arcs()[k].to)])
            out.push_back(int(k));
    return out;
}

SubtreeWitness make_witness(const KgrGraph& g, const std::vector<bool>& in_set, WitnessKind kind)
{
    SubtreeWitness w{{}, induced_arcs(g, in_set), kind};
    for (std::size_t v = 0; v < in_set.size(); ++v)
        if (in_set[v])
            w.vertices.push_back(int(v));
    return w;
}

}  // namespace

std::optional<SubtreeWitness> find_conservative_subtree(const KgrGraph& g)
{
    if (g.vertices().empty())
        return std::nullopt;
    if (!is_connected(g)) {
        const auto label = g.components();
        std::vector<bool> in_set(label.size());
        for (std::size_t v = 0; v < label.size(); ++v)
            in_set[v] = label[v] == 0;
        return make_witness(g, in_set, WitnessKind::FullComponent);
    }

    // Vertices are stored in (col, row) order, so the first -1 found with a
    // +1 further right in its row minimises (col(v), row(v)); scanning right
    // from it finds the smallest col(u').
    int v = -1, u = -1;
    for (std::size_t k = 0; k < g.vertices().size() && v < 0; ++k) {
        const Vertex& x = g.vertices()[k];
        if (x.sign != -1)
            continue;
        for (int c = x.col + 1; c <= g.cols(); ++c) {
            const int id = g.id_at(x.row, c);
            if (id >= 0 && g.vertices()[std::size_t(id)].sign == 1) {
                v = int(k);
                u = id;
                break;
            }
        }
    }
    if (v < 0)
        return std::nullopt;

    std::vector<bool> in_set(g.vertices().size(), false);
    std::vector<int> stack{v};
    in_set[std::size_t(v)] = true;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        if (x == u)
            continue;
        for (int y : g.in(x))
            if (!in_set[std::size_t(y)]) {
                in_set[std::size_t(y)] = true;
                stack.push_back(y);
            }
    }
    in_set[std::size_t(u)] = true;
    return make_witness(g, in_set, WitnessKind::SinkSource);
}

bool verify_subtree(const KgrGraph& g, const SubtreeWitness& w)
{
    const std::size_t n = g.vertices().size();
    if (w.vertices.empty())
        return false;
    std::vector<bool> in_set(n, false);
    for (int v : w.vertices) {
        if (v < 0 || std::size_t(v) >= n || in_set[std::size_t(v)])
            return false;
        in_set[std::size_t(v)] = true;
    }
    std::vector<bool> arc_in(g.arcs().size(), false);
    for (int k : w.arcs) {
        if (k < 0 || std::size_t(k) >= g.arcs().size() || arc_in[std::size_t(k)])
            return false;
        const Arc& a = g.arcs()[std::size_t(k)];
        if (!in_set[std::size_t(a.from)] || !in_set[std::size_t(a.to)])
            return false;
        arc_in[std::size_t(k)] = true;
    }

    // Connected and acyclic: a tree on |V| vertices with |V|-1 arcs.
    UnionFind uf(n);
    for (int k : w.arcs)
        if (!uf.unite(g.arcs()[std::size_t(k)].from, g.arcs()[std::size_t(k)].to))
            return false;
    if (w.arcs.size() + 1 != w.vertices.size())
        return false;

    // Column closure for vertical arcs.
    std::vector<bool> vertical_col(std::size_t(g.cols()) + 1, false);
    for (int k : w.arcs)
        if (g.arcs()[std::size_t(k)].vertical)
            vertical_col[std::size_t(g.vertices()[std::size_t(g.arcs()[std::size_t(k)].from)].col)] = true;
    for (std::size_t k = 0; k < g.arcs().size(); ++k) {
        const Arc& a = g.arcs()[k];
        if (a.vertical && vertical_col[std::size_t(g.vertices()[std::size_t(a.from)].col)] && !arc_in[k])
            return false;
    }

    std::vector<int> in_deg(n, 0), out_deg(n, 0);
    for (int k : w.arcs) {
        ++out_deg[std::size_t(g.arcs()[std::size_t(k)].from)];
        ++in_deg[std::size_t(g.arcs()[std::size_t(k)].to)];
    }

    if (w.kind == WitnessKind::FullComponent) {
        const auto label = g.components();
        const int l = label[std::size_t(w.vertices.front())];
        for (std::size_t v = 0; v < n; ++v)
            if ((label[v] == l) != in_set[v])
                return false;
        return std::size_t(std::count(arc_in.begin(), arc_in.end(), true)) ==
               std::size_t(std::count_if(g.arcs().begin(), g.arcs().end(),
                                         [&](const Arc& a) { return label[std::size_t(a.from)] == l; }));
    }

    int sink = -1;
    for (int v : w.vertices)
        if (out_deg[std::size_t(v)] == 0) {
            if (sink >= 0)
                return false;
            sink = v;
        }
    if (sink < 0 || g.vertices()[std::size_t(sink)].sign != -1)
        return false;
    const int sink_row = g.vertices()[std::size_t(sink)].row;

    bool have_row_source = false;
    std::vector<int> foreign;  // sources of the subtree that are not sources of g
    for (int v : w.vertices) {
        if (in_deg[std::size_t(v)] != 0)
            continue;
        const Vertex& x = g.vertices()[std::size_t(v)];
        if (!g.is_source(v))
            foreign.push_back(v);
        if (x.sign == 1 && x.row == sink_row)
            have_row_source = true;
    }
    if (!have_row_source || foreign.size() > 1)
        return false;
    if (foreign.size() == 1) {
        const Vertex& x = g.vertices()[std::size_t(foreign[0])];
        if (x.sign != 1 || x.row != sink_row)
            return false;
    }
    return true;
}

std::optional<FastReduction> fast_reducibility(const KostkaPair& pair)
{
    const CanonicalMatrix a = ryser_canonical(pair);
    const StarMatrix s = star_matrix(a);
    const KgrGraph g = KgrGraph::build(s);
    auto w = find_conservative_subtree(g);
    if (!w)
        return std::nullopt;
    ensure(verify_subtree(g, *w), "extracted subtree fails the conservative-subtree check");
    ColumnSet cols = w->columns(g);
    ensure(is_star_reducing_subset(s, cols), "subtree columns do not *-reduce A*");
    Decomposition parts = split_pair(a, cols);
    ensure(parts.bullet + parts.circ == pair, "split pieces do not sum to the pair");
    return FastReduction{std::move(cols), std::move(*w), std::move(parts)};
}

std::string to_dot(const KgrGraph& g, const SubtreeWitness* highlight)
{
    std::vector<bool> hv(g.vertices().size(), false), ha(g.arcs().size(), false);
    if (highlight) {
        for (int v : highlight->vertices)
            hv[std::size_t(v)] = true;
        for (int k : highlight->arcs)
            ha[std::size_t(k)] = true;
    }
    std::ostringstream os;
    os << "digraph kgr {\n";
    os << "  node [shape=circle, fontsize=10];\n";
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        const Vertex& x = g.vertices()[v];
        os << "  v" << x.row << '_' << x.col << " [label=\"" << (x.sign > 0 ? "+1" : "-1") << "\", row=" << x.row
           << ", col=" << x.col << ", pos=\"" << x.col << ',' << -x.row << "!\"";
        if (hv[v])
            os << ", color=red, witness=true";
        os << "];\n";
    }
    for (std::size_t k = 0; k < g.arcs().size(); ++k) {
        const Arc& a = g.arcs()[k];
        const Vertex& p = g.vertices()[std::size_t(a.from)];
        const Vertex& q = g.vertices()[std::size_t(a.to)];
        os << "  v" << p.row << '_' << p.col << " -> v" << q.row << '_' << q.col << " [kind="
           << (a.vertical ? "vertical" : "horizontal");
        if (ha[k])
            os << ", color=red, witness=true";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace kostka

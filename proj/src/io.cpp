#include "kostka/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace kostka {

Json to_json(const Partition& p)
{
    return Json(p.vec());
}

Json to_json(const KostkaPair& p)
{
    return Json{{"lambda", to_json(p.lambda())}, {"mu", to_json(p.mu())}, {"rank", p.rank()}};
}

Json to_json(const Grid& g)
{
    Json rows = Json::array();
    for (int i = 0; i < g.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < g.cols(); ++j)
            row.push_back(g(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json to_json(const CanonicalMatrix& a, bool with_history)
{
    Json j{{"pair", to_json(a.pair)}, {"rows", a.rows()}, {"cols", a.cols()}, {"matrix", to_json(a.entries)}};
    if (with_history) {
        Json h = Json::array();
        for (const auto& g : a.history)
            h.push_back(to_json(g));
        j["history"] = std::move(h);
    }
    return j;
}

Json to_json(const StarMatrix& s)
{
    return Json{{"matrix", to_json(s.entries)}, {"mu_star", s.mu_star}};
}

Json to_json(const ShapeSequence& seq)
{
    Json chain = Json::array();
    for (const auto& p : seq.chain)
        chain.push_back(to_json(p));
    Json steps = Json::array();
    for (const auto& s : seq.steps) {
        Json j{{"kind", to_string(s.kind)}, {"matrix_column", s.matrix_column}};
        if (s.kind != StepKind::DeleteColumn) {
            j["shortened_column"] = s.shortened_column;
            j["shortened_from"] = s.shortened_from;
            j["shortened_to"] = s.shortened_to;
        }
        if (s.kind != StepKind::ShortenRightmost) {
            j["deleted_column"] = s.deleted_column;
            j["deleted_length"] = s.deleted_length;
        }
        steps.push_back(std::move(j));
    }
    return Json{{"chain", std::move(chain)}, {"steps", std::move(steps)}};
}

Json to_json(const Decomposition& d)
{
    return Json{{"bullet", to_json(d.bullet)}, {"circ", to_json(d.circ)}};
}

namespace {

Json vertex_json(const Vertex& v)
{
    return Json{{"row", v.row}, {"col", v.col}, {"sign", v.sign}};
}

Json arc_json(const KgrGraph& g, const Arc& a)
{
    const Vertex& p = g.vertices()[std::size_t(a.from)];
    const Vertex& q = g.vertices()[std::size_t(a.to)];
    return Json{{"from", {p.row, p.col}}, {"to", {q.row, q.col}}, {"kind", a.vertical ? "vertical" : "horizontal"}};
}

}  // namespace

Json to_json(const KgrGraph& g)
{
    Json vs = Json::array(), as = Json::array();
    for (const auto& v : g.vertices())
        vs.push_back(vertex_json(v));
    for (const auto& a : g.arcs())
        as.push_back(arc_json(g, a));
    return Json{{"rows", g.rows()}, {"cols", g.cols()}, {"vertices", std::move(vs)}, {"arcs", std::move(as)}};
}

Json to_json(const KgrGraph& g, const SubtreeWitness& w)
{
    Json vs = Json::array(), as = Json::array();
    for (int v : w.vertices)
        vs.push_back(vertex_json(g.vertices()[std::size_t(v)]));
    for (int k : w.arcs)
        as.push_back(arc_json(g, g.arcs()[std::size_t(k)]));
    return Json{{"kind", to_string(w.kind)}, {"columns", w.columns(g)}, {"vertices", std::move(vs)}, {"arcs", std::move(as)}};
}

Json to_json(const RaySpec& s)
{
    return Json{{"a", s.a}, {"b", s.b}, {"ell", s.ell}, {"primitive", to_json(primitive_point(s))}};
}

Json to_json(const BasisCatalog& c)
{
    Json els = Json::array();
    for (const auto& p : c.elements)
        els.push_back(Json{{"lambda", to_json(p.lambda())}, {"mu", to_json(p.mu())}});
    return Json{{"version", kCatalogFormatVersion},
                {"rank", c.rank},
                {"count", c.elements.size()},
                {"hash", catalog_hash(c)},
                {"elements", std::move(els)},
                {"notes", c.notes}};
}

Json to_json(const WidthAuditReport& r)
{
    Json fails = Json::array();
    for (const auto& f : r.failures)
        fails.push_back(Json{{"pair", to_json(f.pair)}, {"note", f.note}});
    return Json{{"rank", r.rank},
                {"basis_size", r.basis_size},
                {"basis_checked", r.basis_checked},
                {"lambda1_equals_r", r.rectangle_pairs},
                {"sweep_pairs", r.sweep_pairs},
                {"sweep_split_by_subtree", r.sweep_fast},
                {"sweep_split_exhaustively", r.sweep_pairs - r.sweep_fast - r.failures.size()},
                {"passed", r.passed()},
                {"failures", std::move(fails)}};
}

Json to_json(const KimReport& r)
{
    Json j{{"cost", r.cost}, {"width", r.width}, {"cost_below_width", r.premise}, {"reducible", r.witness.has_value()}};
    j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
    return j;
}

Json to_json(const ReductionReport& r)
{
    std::vector<Int> lc = conjugate(r.pair.lambda()).vec();
    std::vector<Int> mc = conjugate(r.pair.mu()).vec();
    Json j{{"values", r.instance.values},
           {"target", r.instance.target},
           {"total", r.instance.total()},
           {"rank", r.pair.rank()},
           {"lambda_columns", conjugate(r.pair.lambda()).vec()},
           {"mu_columns", conjugate(r.pair.mu()).vec()},
           {"lambda", to_json(r.pair.lambda())},
           {"mu", to_json(r.pair.mu())},
           {"subset", r.subset ? Json(*r.subset) : Json(nullptr)},
           {"reducible", r.reducible},
           {"coordinates", r.coordinates}};
    if (r.certificate)
        j["certificate"] = to_json(*r.certificate);
    return j;
}

Json to_json(const LrTriple& t)
{
    return Json{{"lambda", to_json(t.lambda)}, {"mu", to_json(t.mu)}, {"nu", to_json(t.nu)}, {"rank", t.rank}};
}

Json to_json(const FamilyReport& r)
{
    Json rows = Json::array();
    for (const auto& x : r.rows) {
        Json j{{"k", x.k},
               {"rank", x.rank},
               {"nu_1", x.nu_1},
               {"lambda_size", x.lambda_size},
               {"mu_size", x.mu_size},
               {"nu_size", x.nu_size},
               {"nu_1_exceeds_rank", x.exceeds_rank}};
        j["coefficient"] = x.coefficient ? Json(*x.coefficient) : Json(nullptr);
        rows.push_back(std::move(j));
    }
    return Json{{"rows", std::move(rows)}, {"first_violation_k", r.first_violation}};
}

Partition partition_from_json(const Json& j)
{
    if (!j.is_array())
        throw InvalidPartition("partition must be a JSON array");
    return Partition(j.get<std::vector<Int>>());
}

KostkaPair pair_from_json(const Json& j, int rank)
{
    return KostkaPair(partition_from_json(j.at("lambda")), partition_from_json(j.at("mu")), rank);
}

namespace {

std::vector<std::string> diagram_lines(const Partition& p)
{
    std::vector<std::string> out;
    for (Int part : p.parts()) {
        std::string row;
        for (Int k = 0; k < part; ++k)
            row += "[]";
        out.push_back(std::move(row));
    }
    if (out.empty())
        out.push_back(".");
    return out;
}

std::string pad(std::string s, std::size_t w)
{
    s.resize(std::max(w, s.size()), ' ');
    return s;
}

}  // namespace

std::string young_pair_text(const KostkaPair& p)
{
    const auto a = diagram_lines(p.lambda());
    const auto b = diagram_lines(p.mu());
    std::size_t wa = 0;
    for (const auto& s : a)
        wa = std::max(wa, s.size());
    std::string out;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        std::string line = pad(i < a.size() ? a[i] : "", wa) + (i == 0 ? " , " : "   ") + (i < b.size() ? b[i] : "");
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out += line + '\n';
    }
    return out;
}

std::string catalog_text(const BasisCatalog& c, int per_line)
{
    std::string out;
    for (std::size_t start = 0; start < c.elements.size(); start += std::size_t(per_line)) {
        const std::size_t end = std::min(c.elements.size(), start + std::size_t(per_line));
        std::vector<std::vector<std::string>> blocks;
        std::vector<std::size_t> widths;
        std::size_t height = 0;
        for (std::size_t i = start; i < end; ++i) {
            std::vector<std::string> lines;
            std::istringstream is(young_pair_text(c.elements[i]));
            for (std::string l; std::getline(is, l);)
                lines.push_back(l);
            std::size_t w = 0;
            for (const auto& l : lines)
                w = std::max(w, l.size());
            widths.push_back(w);
            height = std::max(height, lines.size());
            blocks.push_back(std::move(lines));
        }
        for (std::size_t row = 0; row < height; ++row) {
            std::string line;
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                if (b)
                    line += "    ";
                line += pad(row < blocks[b].size() ? blocks[b][row] : "", widths[b]);
            }
            while (!line.empty() && line.back() == ' ')
                line.pop_back();
            out += line + '\n';
        }
        out += '\n';
    }
    return out;
}

std::uint64_t fnv1a64(std::string_view s)
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t h)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string catalog_hash(const BasisCatalog& c)
{
    std::string canon = "rank=" + std::to_string(c.rank) + "\n";
    for (const auto& p : c.elements)
        canon += p.lambda().to_string() + ";" + p.mu().to_string() + "\n";
    return hex64(fnv1a64(canon));
}

std::filesystem::path catalog_file(const std::filesystem::path& dir, int rank)
{
    return dir / ("hilbert_basis_r" + std::to_string(rank) + ".json");
}

void save_catalog(const BasisCatalog& c, const std::filesystem::path& file)
{
    if (file.has_parent_path())
        std::filesystem::create_directories(file.parent_path());
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream os(tmp);
        if (!os)
            throw Error("cannot write " + tmp);
        os << to_json(c).dump(2) << '\n';
    }
    std::filesystem::rename(tmp, file);
}

BasisCatalog load_catalog(const std::filesystem::path& file)
{
    std::ifstream is(file);
    if (!is)
        throw Error("cannot read catalog " + file.string());
    Json j;
    try {
        j = Json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed catalog " + file.string() + ": " + e.what());
    }
    if (j.value("version", -1) != kCatalogFormatVersion)
        throw Error("catalog " + file.string() + " has unsupported version");
    BasisCatalog c;
    try {
        c.rank = j.at("rank").get<int>();
        for (const auto& e : j.at("elements"))
            c.elements.push_back(pair_from_json(e, c.rank));
        if (j.contains("notes"))
            c.notes = j.at("notes").get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error("malformed catalog " + file.string() + ": " + e.what());
    }
    if (!std::is_sorted(c.elements.begin(), c.elements.end()) ||
        std::adjacent_find(c.elements.begin(), c.elements.end()) != c.elements.end())
        throw Error("catalog " + file.string() + " is not in canonical order");
    if (j.value("count", std::size_t(0)) != c.elements.size())
        throw Error("catalog " + file.string() + " count field disagrees with its elements");
    if (j.value("hash", std::string()) != catalog_hash(c))
        throw Error("catalog " + file.string() + " content hash mismatch");
    return c;
}

std::vector<std::string> json_diff(const Json& expected, const Json& actual, const std::string& path)
{
    std::vector<std::string> out;
    if (expected.type() != actual.type()) {
        out.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
        return out;
    }
    if (expected.is_object()) {
        for (auto it = expected.begin(); it != expected.end(); ++it) {
            if (!actual.contains(it.key()))
                out.push_back(path + "." + it.key() + ": missing");
            else
                for (auto& d : json_diff(it.value(), actual.at(it.key()), path + "." + it.key()))
                    out.push_back(std::move(d));
        }
        for (auto it = actual.begin(); it != actual.end(); ++it)
            if (!expected.contains(it.key()))
                out.push_back(path + "." + it.key() + ": unexpected");
    } else if (expected.is_array()) {
        const std::size_t n = std::min(expected.size(), actual.size());
        for (std::size_t i = 0; i < n; ++i)
            for (auto& d : json_diff(expected[i], actual[i], path + "[" + std::to_string(i) + "]"))
                out.push_back(std::move(d));
        for (std::size_t i = n; i < expected.size(); ++i)
            out.push_back(path + "[" + std::to_string(i) + "]: missing " + expected[i].dump());
        for (std::size_t i = n; i < actual.size(); ++i)
            out.push_back(path + "[" + std::to_string(i) + "]: unexpected " + actual[i].dump());
    } else if (expected != actual) {
        out.push_back(path + ": expected " + expected.dump() + ", got " + actual.dump());
    }
    return out;
}

std::vector<std::string> catalog_diff(const BasisCatalog& expected, const BasisCatalog& actual)
{
    std::vector<std::string> out;
    if (expected.rank != actual.rank)
        out.push_back("rank: expected " + std::to_string(expected.rank) + ", got " + std::to_string(actual.rank));
    std::vector<KostkaPair> missing, extra;
    std::set_difference(expected.elements.begin(), expected.elements.end(), actual.elements.begin(),
                        actual.elements.end(), std::back_inserter(missing));
    std::set_difference(actual.elements.begin(), actual.elements.end(), expected.elements.begin(),
                        expected.elements.end(), std::back_inserter(extra));
    for (const auto& p : missing)
        out.push_back("missing " + p.to_string());
    for (const auto& p : extra)
        out.push_back("extra " + p.to_string());
    return out;
}

}  // namespace kostka

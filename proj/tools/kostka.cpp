// Command-line front end for the kostka library.
//
// Exit status: 0 success, 1 negative decision, 2 usage or input error,
// 3 internal assertion failure.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kostka/io.hpp"
#include "kostka/tables.hpp"

using namespace kostka;

namespace {

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

// Tableau counts are exhaustive; the CLI only prints them for small pairs.
constexpr Int kCliKostkaCountCap = 12;

struct Options {
    std::string format = "text";
    Int cap_boxes = kDefaultIrreducibleBoxCap;
    int cap_width = kSubsetSearchCap;
    int cap_rank = kMaxBasisRank;
#ifdef KOSTKA_DEFAULT_FIXTURES
    std::string fixtures = KOSTKA_DEFAULT_FIXTURES;
#else
    std::string fixtures;
#endif
    int jobs = 1;
    int rank = 0;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

bool json_out(const Options& o)
{
    return o.format == "json";
}

void require_format(const Options& o, bool dot_allowed)
{
    if (o.format == "dot" && !dot_allowed)
        throw UsageError("--format dot is only available for the kgr subcommand");
}

KostkaPair read_pair(const std::string& l, const std::string& m, const Options& o)
{
    if (o.rank < 1)
        throw UsageError("a positive --rank/-r is required");
    return KostkaPair(Partition::parse(l), Partition::parse(m), o.rank);
}

// Zero when the table does not reach rank r.
template <std::size_t N>
Int published_count(const std::array<Int, N>& table, int r)
{
    return r <= int(N) ? table[std::size_t(r - 1)] : 0;
}

std::string yes(bool b)
{
    return b ? "yes" : "no";
}

std::string cols_text(const std::vector<int>& c)
{
    std::string s = "{";
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i ? "," : "") + std::to_string(c[i]);
    return s + "}";
}

int cmd_check(const Options& o, const std::string& ls, const std::string& ms)
{
    require_format(o, false);
    if (o.rank < 1)
        throw UsageError("a positive --rank/-r is required");
    const Partition l = Partition::parse(ls), m = Partition::parse(ms);
    const bool cone = in_kostka_cone(l, m, o.rank);
    const bool dom = dominates(l, m);
    const bool pos = kostka_positive(l, m);
    std::optional<Int> count;
    if (l.size() == m.size() && l.size() <= kCliKostkaCountCap)
        count = kostka_count(l, m);
    if (json_out(o)) {
        Json j{{"lambda", to_json(l)},   {"mu", to_json(m)},    {"rank", o.rank},
               {"in_cone", cone},        {"dominates", dom},    {"kostka_positive", pos}};
        j["kostka_number"] = count ? Json(*count) : Json(nullptr);
        emit(j);
    } else {
        std::cout << "lambda: (" << l.to_string() << ")\nmu: (" << m.to_string() << ")\nrank: " << o.rank << '\n'
                  << "in cone: " << yes(cone) << "\ndominates: " << yes(dom) << "\nkostka positive: " << yes(pos)
                  << '\n';
        if (count)
            std::cout << "kostka number: " << *count << '\n';
    }
    return cone && pos ? kOk : kNegative;
}

int cmd_ryser(const Options& o, const std::string& ls, const std::string& ms)
{
    require_format(o, false);
    const KostkaPair p = read_pair(ls, ms, o);
    const CanonicalMatrix a = ryser_canonical(p);
    const StarMatrix s = star_matrix(a);
    const ShapeSequence seq = shape_sequence(a, s);
    if (json_out(o)) {
        emit(Json{{"canonical", to_json(a)}, {"star", to_json(s)}, {"shape_sequence", to_json(seq)}});
        return kOk;
    }
    std::cout << "A(mu):\n" << a.history.front().to_text();
    for (std::size_t i = 1; i < a.history.size(); ++i)
        std::cout << "\nafter filling column " << (a.cols() - int(i) + 1) << ":\n" << a.history[i].to_text();
    std::cout << "\nA(lambda,mu):\n" << a.entries.to_text() << "\nA*:\n" << s.entries.to_text() << "\nmu*: ";
    for (std::size_t i = 0; i < s.mu_star.size(); ++i)
        std::cout << (i ? "," : "") << s.mu_star[i];
    std::cout << "\n\nshape sequence:\n";
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        const auto& st = seq.steps[i];
        std::cout << "  (" << seq.chain[i].to_string() << ") -> (" << seq.chain[i + 1].to_string()
                  << "): " << to_string(st.kind);
        if (st.kind != StepKind::DeleteColumn)
            std::cout << " column " << st.shortened_column << " " << st.shortened_from << "->" << st.shortened_to;
        if (st.kind != StepKind::ShortenRightmost)
            std::cout << " delete column " << st.deleted_column << " (length " << st.deleted_length << ")";
        std::cout << '\n';
    }
    return kOk;
}

int cmd_kgr(const Options& o, const std::string& ls, const std::string& ms)
{
    require_format(o, true);
    const KostkaPair p = read_pair(ls, ms, o);
    const StarMatrix s = star_matrix(ryser_canonical(p));
    const KgrGraph g = KgrGraph::build(s);
    const auto w = find_conservative_subtree(g);
    if (o.format == "dot") {
        std::cout << to_dot(g, w ? &*w : nullptr);
        return kOk;
    }
    if (json_out(o)) {
        Json j{{"pair", to_json(p)}, {"graph", to_json(g)}, {"connected", is_connected(g)}};
        j["witness"] = w ? to_json(g, *w) : Json(nullptr);
        emit(j);
        return kOk;
    }
    std::cout << "vertices: " << g.vertices().size() << "\narcs: " << g.arcs().size()
              << "\nconnected: " << yes(is_connected(g)) << '\n';
    for (const auto& a : g.arcs()) {
        const auto& x = g.vertices()[std::size_t(a.from)];
        const auto& y = g.vertices()[std::size_t(a.to)];
        std::cout << "  (" << x.row << "," << x.col << ") -> (" << y.row << "," << y.col << ") "
                  << (a.vertical ? "vertical" : "horizontal") << '\n';
    }
    if (w)
        std::cout << "conservative subtree: " << to_string(w->kind) << ", " << w->vertices.size() << " vertices, columns "
                  << cols_text(w->columns(g)) << '\n';
    else
        std::cout << "conservative subtree: none\n";
    return kOk;
}

int cmd_reduce(const Options& o, const std::string& ls, const std::string& ms, const std::string& method)
{
    require_format(o, false);
    const KostkaPair p = read_pair(ls, ms, o);
    std::optional<Decomposition> parts;
    std::optional<ColumnSet> cols;
    std::string used;
    if (method == "fast" || method == "auto") {
        if (auto f = fast_reducibility(p)) {
            parts = f->parts;
            cols = f->columns;
            used = "conservative-subtree";
        }
    }
    bool decided = parts.has_value();
    if (!parts && (method == "exhaustive" || method == "auto")) {
        auto r = is_irreducible(p, o.cap_boxes);
        parts = r.witness;
        used = "exhaustive";
        decided = true;
    }
    if (json_out(o)) {
        Json j{{"pair", to_json(p)}, {"method", used.empty() ? "conservative-subtree" : used}};
        j["reducible"] = parts.has_value();
        j["decided"] = decided;
        j["columns"] = cols ? Json(*cols) : Json(nullptr);
        j["decomposition"] = parts ? to_json(*parts) : Json(nullptr);
        emit(j);
    } else {
        std::cout << p.to_string() << ": ";
        if (parts) {
            std::cout << "reducible (" << used << ")\n";
            if (cols)
                std::cout << "columns: " << cols_text(*cols) << '\n';
            std::cout << "bullet: " << parts->bullet.to_string() << "\ncirc: " << parts->circ.to_string() << '\n';
        } else if (decided) {
            std::cout << "irreducible\n";
        } else {
            std::cout << "no conservative subtree (undecided by the fast test)\n";
        }
    }
    return parts ? kOk : kNegative;
}

void require_basis_rank(const Options& o)
{
    if (o.rank < 1)
        throw UsageError("a positive --rank/-r is required");
    if (o.rank > o.cap_rank)
        throw RankCapExceeded("rank " + std::to_string(o.rank) + " exceeds the rank cap " +
                              std::to_string(o.cap_rank));
}

int cmd_basis(const Options& o, bool recompute, bool save)
{
    require_format(o, false);
    require_basis_rank(o);
    const std::filesystem::path file = o.fixtures.empty() ? std::filesystem::path() : catalog_file(o.fixtures, o.rank);
    const bool have_fixture = !file.empty() && std::filesystem::exists(file);

    BasisCatalog cat;
    std::string source;
    std::vector<std::string> diff;
    if (have_fixture && !recompute) {
        cat = load_catalog(file);
        if (cat.rank != o.rank)
            throw AssertionFailure("fixture " + file.string() + " holds rank " + std::to_string(cat.rank));
        for (const auto& p : cat.elements) {
            ensure(p.lambda().first() <= o.rank, "fixture element outside the r x r box: " + p.to_string());
            ensure(is_irreducible(p, Int(o.rank) * o.rank).irreducible, "fixture element is reducible: " + p.to_string());
        }
        source = "fixture (verified)";
    } else {
        cat = hilbert_basis(o.rank, o.jobs);
        source = "computed";
        if (have_fixture)
            diff = catalog_diff(load_catalog(file), cat);
        if (save && !file.empty() && (!have_fixture || diff.empty()))
            save_catalog(cat, file);
    }
    const Int published = published_count(kPublishedBasisCounts, o.rank);
    const bool matches = !published || Int(cat.elements.size()) == published;

    if (json_out(o)) {
        Json j = to_json(cat);
        j["source"] = source;
        j["published_count"] = published ? Json(published) : Json(nullptr);
        j["matches_published"] = matches;
        j["fixture_diff"] = diff;
        emit(j);
    } else {
        std::cout << catalog_text(cat);
        std::cout << "rank " << o.rank << ": " << cat.elements.size() << " elements (" << source << ")\n";
        if (published)
            std::cout << "published count: " << published << (matches ? " (match)" : " (MISMATCH)") << '\n';
        for (const auto& n : cat.notes)
            std::cout << "note: " << n << '\n';
    }
    if (!diff.empty()) {
        std::cerr << "fixture " << file.string() << " differs from the computed catalog:\n";
        for (const auto& d : diff)
            std::cerr << "  " << d << '\n';
        return kInternal;
    }
    return matches ? kOk : kInternal;
}

int cmd_rays(const Options& o)
{
    require_format(o, false);
    if (o.rank < 1)
        throw UsageError("a positive --rank/-r is required");
    const auto rays = extremal_rays(o.rank);
    const Int formula = ray_count_formula(o.rank);
    const Int published = published_count(kPublishedRayCounts, o.rank);
    const bool ok = Int(rays.size()) == formula && (!published || published == formula);
    if (json_out(o)) {
        Json list = Json::array();
        for (const auto& r : rays)
            list.push_back(to_json(r));
        Json j{{"rank", o.rank}, {"count", rays.size()}, {"formula", formula}};
        j["published_count"] = published ? Json(published) : Json(nullptr);
        j["rays"] = std::move(list);
        emit(j);
    } else {
        for (const auto& r : rays)
            std::cout << "a=" << r.a << " b=" << r.b << " ell=" << r.ell << "  " << primitive_point(r).to_string()
                      << '\n';
        std::cout << "count: " << rays.size() << "\nC(r,3)+C(r,2)+C(r,1): " << formula << '\n';
        if (published)
            std::cout << "published count: " << published << '\n';
    }
    return ok ? kOk : kInternal;
}

int cmd_audit(const Options& o)
{
    require_format(o, false);
    require_basis_rank(o);
    const auto rep = width_bound_audit(o.rank, hilbert_basis(o.rank, o.jobs), o.jobs, false);
    if (json_out(o)) {
        emit(to_json(rep));
    } else {
        std::cout << "rank " << rep.rank << "\nbasis elements checked: " << rep.basis_checked << " of "
                  << rep.basis_size << "\nbasis elements with lambda_1 = r (all rectangle pairs): "
                  << rep.rectangle_pairs << "\npairs with lambda_1 = r+1 swept: " << rep.sweep_pairs
                  << " (split by subtree: " << rep.sweep_fast << ")\nfailures: " << rep.failures.size() << '\n';
        for (const auto& f : rep.failures)
            std::cout << "  " << f.pair.to_string() << ": " << f.note << '\n';
        std::cout << (rep.passed() ? "PASS\n" : "FAIL\n");
    }
    return rep.passed() ? kOk : kInternal;
}

int cmd_catalan(const Options& o, const std::string& text)
{
    require_format(o, false);
    const CatalanSeq x = CatalanSeq::parse(text);
    const Int c = cost(x), w = width(x);
    const auto witness = catalan_reducible(x, o.cap_width);
    if (c < w)
        ensure(witness.has_value(), "cost < width but no reducing sublist exists");
    if (json_out(o)) {
        Json j{{"sequence", x.entries()}, {"cost", c}, {"width", w}, {"run_maxima", run_maxima(x)}};
        j["reducible"] = witness.has_value();
        j["witness"] = witness ? Json(*witness) : Json(nullptr);
        emit(j);
    } else {
        std::cout << "cost: " << c << "\nwidth: " << w << '\n';
        if (witness) {
            std::vector<Int> in, out;
            std::size_t k = 0;
            for (std::size_t i = 0; i < x.length(); ++i) {
                const bool sel = k < witness->size() && (*witness)[k] == int(i) + 1;
                k += sel;
                (sel ? in : out).push_back(x.entries()[i]);
            }
            std::cout << "reducible: indices " << cols_text(*witness) << "\n  sublist: " << CatalanSeq(in).to_string()
                      << "\n  complement: " << CatalanSeq(out).to_string() << '\n';
        } else {
            std::cout << "not reducible\n";
        }
    }
    return witness ? kOk : kNegative;
}

int cmd_subsetsum(const Options& o, const std::vector<std::string>& words)
{
    require_format(o, false);
    std::string text;
    for (const auto& w : words)
        text += w + " ";
    const SubsetSumInstance inst = SubsetSumInstance::parse(text);
    if (inst.target > inst.total()) {
        if (json_out(o))
            emit(Json{{"values", inst.values}, {"target", inst.target}, {"trivially_negative", true}});
        else
            std::cout << "target exceeds the total: no subset\n";
        return kNegative;
    }
    const auto rep = reduction_equivalence_check(inst, o.cap_boxes);
    if (json_out(o)) {
        emit(to_json(rep));
    } else {
        std::cout << "instance: " << inst.to_string() << "\nreduced pair (rank " << rep.pair.rank()
                  << "): " << rep.pair.to_string() << "\nlambda columns: ";
        const auto lc = conjugate(rep.pair.lambda()).vec();
        for (std::size_t i = 0; i < lc.size(); ++i)
            std::cout << (i ? "," : "") << lc[i];
        std::cout << "\nsubset: " << (rep.subset ? cols_text(*rep.subset) : "none")
                  << "\nreduced pair reducible: " << yes(rep.reducible) << '\n';
        if (rep.certificate)
            std::cout << "certificate: " << rep.certificate->bullet.to_string() << " + "
                      << rep.certificate->circ.to_string() << '\n';
    }
    return rep.subset ? kOk : kNegative;
}

int cmd_lr_family(const Options& o, int k, int k_max)
{
    require_format(o, false);
    if (k < 2)
        throw UsageError("--k must be at least 2");
    const LrTriple t = counterexample_family(k);
    const FamilyReport rep = verify_counterexample(std::max(k, k_max));
    const auto& row = rep.rows[std::size_t(k - 2)];
    if (json_out(o)) {
        Json j{{"k", k}, {"triple", to_json(t)}, {"growth", to_json(rep)}};
        j["coefficient"] = row.coefficient ? Json(*row.coefficient) : Json(nullptr);
        emit(j);
    } else {
        std::cout << "k = " << k << ", r = " << t.rank << "\nlambda: (" << t.lambda.to_string() << ")\nmu: ("
                  << t.mu.to_string() << ")\nnu: (" << t.nu.to_string() << ")\n|lambda| = " << t.lambda.size()
                  << ", |mu| = " << t.mu.size() << ", |nu| = " << t.nu.size() << "\nnu_1 = " << t.nu.first()
                  << (t.nu.first() > t.rank ? " > r\n" : " <= r\n");
        std::cout << "coefficient: " << (row.coefficient ? std::to_string(*row.coefficient) : "skipped (over cap)")
                  << "\n\n k   r  nu_1  nu_1>r\n";
        for (const auto& x : rep.rows)
            std::cout << (x.k < 10 ? "  " : " ") << x.k << (x.rank < 10 ? "   " : "  ") << x.rank << "  "
                      << x.nu_1 << "  " << yes(x.exceeds_rank) << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Kostka semigroup toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->envname("KOSTKA_FORMAT");
    app.add_option("--cap-boxes", o.cap_boxes, "Box cap for exhaustive irreducibility")
        ->check(CLI::PositiveNumber)
        ->envname("KOSTKA_CAP_BOXES");
    app.add_option("--cap-width", o.cap_width, "Length cap for exhaustive subset searches")
        ->check(CLI::Range(1, 31))
        ->envname("KOSTKA_CAP_WIDTH");
    app.add_option("--cap-rank", o.cap_rank, "Largest rank accepted by basis and audit")
        ->check(CLI::Range(1, kMaxBasisRank))
        ->envname("KOSTKA_CAP_RANK");
    app.add_option("--fixtures", o.fixtures, "Fixture directory for basis catalogs")->envname("KOSTKA_FIXTURES");
    app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber)->envname("KOSTKA_JOBS");
    app.add_option("-r,--rank", o.rank, "Rank r")->check(CLI::PositiveNumber)->envname("KOSTKA_RANK");

    std::string ls, ms, method = "auto", seq;
    std::vector<std::string> words;
    bool recompute = false, save = false;
    int k = 2, k_max = 0;

    auto* check = app.add_subcommand("check", "Cone membership and Kostka positivity");
    auto* ryser = app.add_subcommand("ryser", "Canonical matrix, A* and shape sequence");
    auto* kgr = app.add_subcommand("kgr", "KGR graph and conservative subtree");
    auto* reduce = app.add_subcommand("reduce", "Reducibility with a certified decomposition");
    for (auto* sc : {check, ryser, kgr, reduce}) {
        sc->add_option("lambda", ls, "lambda, comma separated")->required();
        sc->add_option("mu", ms, "mu, comma separated")->required();
    }
    reduce->add_option("--method", method, "fast, exhaustive or auto")
        ->check(CLI::IsMember({"fast", "exhaustive", "auto"}));
    auto* basis = app.add_subcommand("basis", "Hilbert basis for rank r <= 6");
    basis->add_flag("--recompute", recompute, "Recompute even when a fixture exists");
    basis->add_flag("--save", save, "Write the catalog to the fixture directory");
    auto* rays = app.add_subcommand("rays", "Extremal rays of the cone");
    auto* audit = app.add_subcommand("audit", "Width bound audit");
    auto* catalan = app.add_subcommand("catalan", "Cost, width and reducibility of a Catalan sequence");
    catalan->add_option("sequence", seq, "entries, comma separated")->required()->allow_extra_args(false);
    auto* subsetsum = app.add_subcommand("subsetsum", "Subset Sum reduction: 'a1,...,ad : b'");
    subsetsum->add_option("instance", words, "a1,...,ad : b")->required();
    auto* lr = app.add_subcommand("lr-family", "Littlewood-Richardson family with quadratic nu_1");
    lr->add_option("--k", k, "family index k >= 2");
    lr->add_option("--k-max", k_max, "extend the growth table to this k");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*check)
            return cmd_check(o, ls, ms);
        if (*ryser)
            return cmd_ryser(o, ls, ms);
        if (*kgr)
            return cmd_kgr(o, ls, ms);
        if (*reduce)
            return cmd_reduce(o, ls, ms, method);
        if (*basis)
            return cmd_basis(o, recompute, save);
        if (*rays)
            return cmd_rays(o);
        if (*audit)
            return cmd_audit(o);
        if (*catalan)
            return cmd_catalan(o, seq);
        if (*subsetsum)
            return cmd_subsetsum(o, words);
        if (*lr)
            return cmd_lr_family(o, k, k_max);
    } catch (const AssertionFailure& e) {
        std::cerr << "internal assertion failed: " << e.what() << '\n';
        return kInternal;
    } catch (const UsageError& e) {
        std::cerr << "usage: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

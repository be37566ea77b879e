#include "cbsg/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cbsg/circle_semigroup.hpp"
#include "cbsg/oracle.hpp"
#include "cbsg/polygon_semigroup.hpp"
#include "cbsg/render.hpp"

namespace cbsg::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

Vec2Q parse_point(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 2) throw ParseError("expected 'x,y', got '" + s + "'");
    return {Rational::parse(parts[0]), Rational::parse(parts[1])};
}

LatticePoint parse_lattice_point(const std::string& s) {
    Vec2Q p = parse_point(s);
    if (!is_lattice(p)) throw ParseError("expected an integer point, got '" + s + "'");
    return to_lattice(p);
}

std::string fmt(const LatticePoint& p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string fmt(const std::vector<LatticePoint>& pts) {
    std::string out;
    for (const auto& p : pts) {
        if (!out.empty()) out += " ";
        out += fmt(p);
    }
    return out.empty() ? "-" : out;
}

std::string fmt(const std::vector<long long>& xs) {
    std::string out;
    for (long long x : xs) {
        if (!out.empty()) out += " ";
        out += std::to_string(x);
    }
    return out.empty() ? "-" : out;
}

const char* yesno(bool b) { return b ? "true" : "false"; }

// Ordered key/value document, printed one "key: value" per line.
struct Document {
    std::vector<std::pair<std::string, std::string>> fields;
    void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
    void print(std::ostream& os) const {
        os << "cbsg-result v1\n";
        for (const auto& [k, v] : fields) os << k << ": " << v << "\n";
    }
};

void add_ray_report(Document& doc, const std::string& prefix, const RayReport& r) {
    doc.add(prefix + "-generator", fmt(r.generator));
    doc.add(prefix + "-single-generator", yesno(r.single_generator));
    doc.add(prefix + "-minimal-multiples", fmt(r.minimal_multiples));
    doc.add(prefix + "-weak-criterion", yesno(r.weak_criterion));
}

struct CommonArgs {
    std::string circle_center, circle_radius, polygon, spec_file, point;
    bool witnesses = false;
    bool oracle_check = false;
    long long cap = 0;
    long long radius2 = 2500;

    void attach(CLI::App* cmd, bool with_point = false) {
        cmd->add_option("--circle", circle_center, "circle center as 'a,b'");
        cmd->add_option("--radius", circle_radius, "circle radius (with --circle)");
        cmd->add_option("--polygon", polygon, "polygon vertices 'x1,y1;x2,y2;...'");
        cmd->add_option("--spec-file", spec_file, "file with one body spec per line");
        cmd->add_flag("--witnesses", witnesses, "include full certificate payload");
        cmd->add_flag("--oracle-check", oracle_check, "cross-check against the brute oracle");
        cmd->add_option("--cap", cap, "oracle dilation cap (required with oracle runs)");
        cmd->add_option("--radius2", radius2, "oracle scan radius^2 (default 2500)");
        if (with_point) cmd->add_option("--point", point, "lattice point 'x,y'");
    }

    std::vector<BodySpec> bodies() const {
        std::vector<BodySpec> out;
        if (!spec_file.empty()) {
            std::ifstream in(spec_file);
            if (!in) throw ParseError("cannot open spec file '" + spec_file + "'");
            std::string line;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                out.push_back(BodySpec::parse_line(line));
            }
            if (out.empty()) throw ParseError("spec file is empty");
            return out;
        }
        if (!polygon.empty()) {
            out.push_back(BodySpec::polygon_spec(polygon));
        } else if (!circle_center.empty()) {
            if (circle_radius.empty()) throw ParseError("--circle requires --radius");
            out.push_back(BodySpec::circle_spec(circle_center, circle_radius));
        } else {
            throw ParseError("no body given: use --circle/--radius, --polygon or --spec-file");
        }
        return out;
    }

    long long required_cap() const {
        if (cap <= 0) throw ParseError("oracle runs need an explicit positive --cap");
        return cap;
    }
};

struct OracleMismatch : Error {
    using Error::Error;
};

void run_gens(const BodySpec& spec, const CommonArgs& args, Document& doc) {
    Semigroup sg(spec.body);
    const GeneratorSet& g = sg.generators();
    doc.add("generator-count", std::to_string(g.elements.size()));
    doc.add("generators", fmt(g.elements));
    doc.add("ray1-element", fmt(g.ray1));
    doc.add("ray2-element", fmt(g.ray2));
    if (args.oracle_check) {
        auto brute = brute_min_generators(spec.body, args.required_cap());
        std::vector<LatticePoint> main_sorted = g.elements;
        std::sort(main_sorted.begin(), main_sorted.end());
        std::sort(brute.begin(), brute.end());
        bool agree = main_sorted == brute;
        doc.add("oracle-agrees", yesno(agree));
        if (!agree) throw OracleMismatch("generator sets disagree with the oracle");
    }
}

void run_member(const BodySpec& spec, const CommonArgs& args, Document& doc) {
    if (args.point.empty()) throw ParseError("member needs --point 'x,y'");
    LatticePoint p = parse_lattice_point(args.point);
    Semigroup sg(spec.body);
    bool m = sg.member(p);
    doc.add("point", fmt(p));
    doc.add("member", yesno(m));
    DilationInterval iv = sg.dilation(p);
    if (iv.empty)
        doc.add("dilation-interval", "empty");
    else
        doc.add("dilation-interval",
                "[" + iv.lo.str() + ", " + (iv.hi ? iv.hi->str() : "inf") + "]");
    if (args.witnesses && m) {
        auto k = iv.first_integer(p.is_origin() ? 0 : 1);
        doc.add("witness-dilation", std::to_string(*k));
    }
    if (args.oracle_check) {
        bool brute = brute_member(spec.body, p, args.required_cap());
        doc.add("oracle-agrees", yesno(brute == m));
        if (brute != m) throw OracleMismatch("membership disagrees with the oracle");
    }
}

void run_affine(const BodySpec& spec, const CommonArgs& args, Document& doc) {
    if (is_circle(spec.body)) {
        CircleAffineness aff = circle_affineness(as_circle(spec.body));
        doc.add("affine", yesno(aff.affine));
        if (!aff.affine) {
            doc.add("reason", aff.reason);
        } else if (args.witnesses) {
            doc.add("ray1-witness", aff.witnesses[0].str());
            doc.add("ray2-witness", aff.witnesses[1].str());
        }
        return;
    }
    // Polygons with rational vertices are always affine once the cone exists.
    cone_of(spec.body);
    doc.add("affine", "true");
}

void run_cm(const BodySpec& spec, const CommonArgs& args, Document& doc) {
    Semigroup sg(spec.body);
    if (is_circle(spec.body)) {
        // Theorem route for circles: S itself is CM iff the Corollary scan
        // over the finite gap set passes.
        auto gaps = circle_interior_gaps(sg);
        const auto n1 = sg.ray(1, false).generator;
        const auto n2 = sg.ray(2, false).generator;
        std::vector<LatticePoint> violations;
        for (const auto& a : gaps)
            if (sg.member(a + n1) && sg.member(a + n2)) violations.push_back(a);
        // Ray gaps: point contacts discharge by divisibility; segment-contact
        // prefixes are finite and checked here.
        for (int which : {1, 2}) {
            const RaySemigroup& r = sg.ray(which, false);
            for (long long s : r.prefix_gaps()) {
                LatticePoint a = s * r.primitive;
                if (sg.member(a + n1) && sg.member(a + n2)) violations.push_back(a);
            }
        }
        doc.add("cohen-macaulay", yesno(violations.empty()));
        if (!violations.empty()) doc.add("witness", fmt(violations.front()));
        if (args.witnesses) doc.add("violations", fmt(violations));
        if (args.oracle_check) {
            auto brute = brute_cm_check(spec.body, args.radius2, args.required_cap());
            bool agree = brute.holds == violations.empty();
            doc.add("oracle-agrees", yesno(agree));
            if (!agree) throw OracleMismatch("CM verdict disagrees with the oracle");
        }
        return;
    }
    CohenMacaulayResult res = polygon_is_cohen_macaulay(sg);
    doc.add("cohen-macaulay", yesno(res.cohen_macaulay));
    if (res.witness) doc.add("witness", fmt(*res.witness));
    if (args.witnesses) doc.add("violations", fmt(res.violations));
    if (args.oracle_check) {
        auto brute = brute_cm_check(spec.body, args.radius2, args.required_cap());
        bool agree = brute.holds == res.cohen_macaulay;
        doc.add("oracle-agrees", yesno(agree));
        if (!agree) throw OracleMismatch("CM verdict disagrees with the oracle");
    }
}

void run_buchsbaum(const BodySpec& spec, const CommonArgs& args, Document& doc) {
    Semigroup sg(spec.body);
    bool verdict;
    if (is_circle(spec.body)) {
        CircleBuchsbaumCertificate cert = circle_is_buchsbaum(sg);
        verdict = cert.verdict;
        doc.add("verdict", yesno(cert.verdict));
        doc.add("interior-gap-count", std::to_string(cert.gaps.size()));
        if (args.witnesses) {
            std::string gaps, sbar;
            for (const auto& w : cert.gaps) {
                gaps += (gaps.empty() ? "" : " ") + fmt(w.point);
                sbar += std::string(sbar.empty() ? "" : " ") + yesno(w.in_sbar);
            }
            doc.add("interior-gaps", gaps.empty() ? "-" : gaps);
            doc.add("gaps-in-sbar", sbar.empty() ? "-" : sbar);
            doc.add("generators", fmt(sg.generators().elements));
            add_ray_report(doc, "ray1", cert.ray1);
            add_ray_report(doc, "ray2", cert.ray2);
        }
    } else {
        PolygonBuchsbaumCertificate cert = polygon_is_buchsbaum(sg);
        verdict = cert.verdict;
        doc.add("verdict", yesno(cert.verdict));
        doc.add("branch", cert.branch == PolygonBuchsbaumCertificate::InteriorEqual
                              ? "interior-equal"
                              : "interior-differs");
        if (args.witnesses) {
            doc.add("generators", fmt(sg.generators().elements));
            doc.add("case", std::to_string(cert.comparison.case_id));
            doc.add("strip-gaps-1", fmt(cert.comparison.strip_gaps1));
            doc.add("strip-gaps-2", fmt(cert.comparison.strip_gaps2));
            doc.add("wedge-gaps", fmt(cert.comparison.wedge_gaps));
            doc.add("wedge-gaps-outside-sbar", fmt(cert.comparison.wedge_sbar_gaps));
            doc.add("apex-gaps", fmt(cert.comparison.apex_gaps));
            doc.add("apex-gaps-outside-sbar", fmt(cert.comparison.apex_sbar_gaps));
            doc.add("nprime1", fmt(cert.nprime1));
            doc.add("nprime2", fmt(cert.nprime2));
            doc.add("upsilon-prime", fmt(cert.upsilon_prime));
            doc.add("apex-region-in-sbar", yesno(cert.apex_in_sbar));
            add_ray_report(doc, "ray1", cert.ray1);
            add_ray_report(doc, "ray2", cert.ray2);
        }
    }
    if (args.oracle_check) {
        auto brute = brute_sbar_cm(spec.body, args.radius2, args.required_cap());
        bool agree = brute.holds == verdict;
        doc.add("oracle-agrees", yesno(agree));
        if (!agree) throw OracleMismatch("Buchsbaum verdict disagrees with the oracle");
    }
}

void run_gaps(const BodySpec& spec, const CommonArgs&, Document& doc) {
    Semigroup sg(spec.body);
    if (is_circle(spec.body)) {
        auto gaps = circle_interior_gaps(sg);
        doc.add("gap-count", std::to_string(gaps.size()));
        doc.add("gaps", fmt(gaps));
        return;
    }
    PolygonGaps gaps = polygon_interior_gaps(sg);
    doc.add("gap-count", std::to_string(gaps.finite.size()));
    doc.add("gaps", fmt(gaps.finite));
    if (!gaps.strip_reps1.empty()) {
        doc.add("strip-gaps-1", fmt(gaps.strip_reps1));
        doc.add("strip-step-1", fmt(gaps.strip_step1));
    }
    if (!gaps.strip_reps2.empty()) {
        doc.add("strip-gaps-2", fmt(gaps.strip_reps2));
        doc.add("strip-step-2", fmt(gaps.strip_step2));
    }
}

}  // namespace

BodySpec BodySpec::circle_spec(const std::string& center, const std::string& radius) {
    BodySpec spec{RationalCircle(parse_point(center), Rational::parse(radius)), ""};
    const auto& c = as_circle(spec.body);
    spec.echo = "circle " + c.center.x.str() + "," + c.center.y.str() + " " + c.radius.str();
    return spec;
}

BodySpec BodySpec::polygon_spec(const std::string& vertices) {
    std::vector<Vec2Q> pts;
    for (const auto& part : split(vertices, ';')) {
        if (part.empty()) continue;
        pts.push_back(parse_point(part));
    }
    BodySpec spec{normalize_polygon(pts), ""};
    std::string echo = "polygon ";
    const auto& poly = as_polygon(spec.body);
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        if (i) echo += ";";
        echo += poly.vertices[i].x.str() + "," + poly.vertices[i].y.str();
    }
    spec.echo = echo;
    return spec;
}

BodySpec BodySpec::parse_line(const std::string& line) {
    std::istringstream in(line);
    std::string kind;
    in >> kind;
    if (kind == "circle") {
        std::string center, radius;
        in >> center >> radius;
        if (center.empty() || radius.empty()) throw ParseError("bad circle spec: " + line);
        return circle_spec(center, radius);
    }
    if (kind == "polygon") {
        std::string rest;
        in >> rest;
        if (rest.empty()) throw ParseError("bad polygon spec: " + line);
        return polygon_spec(rest);
    }
    throw ParseError("unknown body kind in spec line: " + line);
}

std::string canonicalize_document(const std::string& doc) {
    std::istringstream in(doc);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("timing-ms:", 0) == 0) continue;
        out << line << "\n";
    }
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"convex body semigroups: generators, gaps and Buchsbaum/CM decisions"};
    app.require_subcommand(1);

    CommonArgs common;
    std::string render_out, render_window = "40,20";
    bool render_skeleton = false;
    std::string family_kind = "triangle";
    long long family_count = 10;
    unsigned long long family_seed = 1;
    std::string oracle_what = "member";

    auto* gens = app.add_subcommand("gens", "minimal generating set");
    auto* member = app.add_subcommand("member", "membership of a lattice point");
    auto* affine = app.add_subcommand("affine", "affineness test");
    auto* cm = app.add_subcommand("cm", "Cohen-Macaulay decision");
    auto* buchs = app.add_subcommand("buchsbaum", "Buchsbaum decision");
    auto* gaps = app.add_subcommand("gaps", "interior gap structure");
    auto* render = app.add_subcommand("render", "SVG figure");
    auto* family = app.add_subcommand("family", "seeded guaranteed-Buchsbaum families");
    auto* oracle = app.add_subcommand("oracle", "run a brute-force oracle directly");

    for (CLI::App* c : {gens, affine, cm, buchs, gaps, render, oracle}) common.attach(c);
    common.attach(member, /*with_point=*/true);
    oracle->add_option("--check", oracle_what, "member|gens|cm|sbar-cm");
    oracle->add_option("--point", common.point, "lattice point for --check member");
    render->add_option("--out", render_out, "output SVG path")->required();
    render->add_option("--window", render_window, "lattice window 'W,H'");
    render->add_flag("--skeleton", render_skeleton, "overlay the skeleton construction");
    family->add_option("--kind", family_kind, "triangle|aligned-quad");
    family->add_option("--count", family_count, "number of bodies");
    family->add_option("--seed", family_seed, "base seed");

    try {
        std::vector<const char*> argv;
        argv.push_back("cbsg");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    auto started = std::chrono::steady_clock::now();
    Document doc;
    try {
        if (family->parsed()) {
            doc.add("command", "family");
            doc.add("kind", family_kind);
            doc.add("count", std::to_string(family_count));
            doc.add("seed", std::to_string(family_seed));
            bool all = true;
            for (long long i = 0; i < family_count; ++i) {
                ConvexPolygon poly = family_kind == "triangle"
                                         ? make_triangle_family(family_seed + i)
                                         : family_kind == "aligned-quad"
                                               ? make_aligned_quad_family(family_seed + i)
                                               : throw ParseError("unknown family kind '" +
                                                                  family_kind + "'");
                std::string echo = "polygon ";
                for (std::size_t k = 0; k < poly.vertices.size(); ++k) {
                    if (k) echo += ";";
                    echo += poly.vertices[k].x.str() + "," + poly.vertices[k].y.str();
                }
                Semigroup sg(poly);
                bool verdict = polygon_is_buchsbaum(sg).verdict;
                all = all && verdict;
                doc.add("body-" + std::to_string(i), echo + " | buchsbaum: " + yesno(verdict));
            }
            doc.add("all-buchsbaum", yesno(all));
            if (!all) throw InternalError("family constructor produced a non-Buchsbaum body");
        } else {
            std::string name = app.get_subcommands().front()->get_name();
            doc.add("command", name);
            auto bodies = common.bodies();
            for (std::size_t i = 0; i < bodies.size(); ++i) {
                const BodySpec& spec = bodies[i];
                if (bodies.size() > 1) doc.add("body-" + std::to_string(i), spec.echo);
                else doc.add("body", spec.echo);
                if (gens->parsed()) run_gens(spec, common, doc);
                else if (member->parsed()) run_member(spec, common, doc);
                else if (affine->parsed()) run_affine(spec, common, doc);
                else if (cm->parsed()) run_cm(spec, common, doc);
                else if (buchs->parsed()) run_buchsbaum(spec, common, doc);
                else if (gaps->parsed()) run_gaps(spec, common, doc);
                else if (render->parsed()) {
                    auto parts = split(render_window, ',');
                    if (parts.size() != 2) throw ParseError("bad --window, expected 'W,H'");
                    RenderOptions opt;
                    opt.window_x = std::stoll(parts[0]);
                    opt.window_y = std::stoll(parts[1]);
                    opt.skeleton = render_skeleton;
                    Semigroup sg(spec.body);
                    std::string svg = render_svg(sg, opt);
                    std::ofstream file(render_out, std::ios::binary);
                    if (!file) throw ParseError("cannot write '" + render_out + "'");
                    file << svg;
                    doc.add("out", render_out);
                    doc.add("bytes", std::to_string(svg.size()));
                } else if (oracle->parsed()) {
                    long long cap = common.required_cap();
                    doc.add("check", oracle_what);
                    doc.add("cap", std::to_string(cap));
                    if (oracle_what == "member") {
                        LatticePoint p = parse_lattice_point(common.point);
                        doc.add("point", fmt(p));
                        doc.add("member", yesno(brute_member(spec.body, p, cap)));
                    } else if (oracle_what == "gens") {
                        auto g = brute_min_generators(spec.body, cap);
                        doc.add("generator-count", std::to_string(g.size()));
                        doc.add("generators", fmt(g));
                    } else if (oracle_what == "cm") {
                        auto r = brute_cm_check(spec.body, common.radius2, cap);
                        doc.add("cohen-macaulay", yesno(r.holds));
                        if (r.witness) doc.add("witness", fmt(*r.witness));
                    } else if (oracle_what == "sbar-cm") {
                        auto r = brute_sbar_cm(spec.body, common.radius2, cap);
                        doc.add("sbar-cohen-macaulay", yesno(r.holds));
                        if (r.witness) doc.add("witness", fmt(*r.witness));
                    } else {
                        throw ParseError("unknown oracle check '" + oracle_what + "'");
                    }
                }
            }
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const OutOfQuadrant& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotAConvexBody& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NotAffine& e) {
        err << "not affine: " << e.what() << "\n";
        return 3;
    } catch (const NotSimplicial& e) {
        err << "not simplicial: " << e.what() << "\n";
        return 3;
    } catch (const UnsupportedGeometry& e) {
        err << "unsupported geometry: " << e.what() << "\n";
        return 3;
    } catch (const OracleMismatch& e) {
        doc.print(out);
        err << "oracle disagreement: " << e.what() << "\n";
        return 4;
    } catch (const GenerationFailed& e) {
        err << "generation failed: " << e.what() << "\n";
        return 5;
    } catch (const Error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }

    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    doc.add("timing-ms", std::to_string(elapsed));
    doc.print(out);
    return 0;
}

}  // namespace cbsg::cli

#include "lensfib/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lensfib/braid.hpp"
#include "lensfib/contact.hpp"
#include "lensfib/contfrac.hpp"
#include "lensfib/error.hpp"
#include "lensfib/json_io.hpp"
#include "lensfib/kirby.hpp"
#include "lensfib/lenslift.hpp"
#include "lensfib/openbook.hpp"
#include "lensfib/render.hpp"

namespace lensfib {

namespace {

struct FormatOpt {
    std::string value = "text";
    bool json() const { return value == "json"; }
};

void add_format(CLI::App* cmd, FormatOpt& fmt) {
    cmd->add_option("--format", fmt.value, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
}

void emit(std::ostream& out, const Json& j, bool as_json, const std::string& text) {
    if (as_json)
        out << j.dump(2) << "\n";
    else
        out << text;
}

double default_tolerance() {
    if (const char* env = std::getenv("LENSFIB_TOL")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && *end == '\0' && v > 0) return v;
        fail("UsageError", "LENSFIB_TOL must be a positive number");
    }
    return 1e-8;
}

GridSpec parse_grid(const std::string& text) {
    GridSpec g;
    char x1 = 0, x2 = 0;
    std::istringstream in(text);
    if (!(in >> g.n_t >> x1 >> g.n_theta >> x2 >> g.n_omega) || x1 != 'x' || x2 != 'x' ||
        !in.eof() || g.n_t < 2 || g.n_theta < 2 || g.n_omega < 2)
        fail("UsageError", "grid must look like 24x24x3 with entries >= 2");
    return g;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("IoError", "cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail("MalformedToken", "bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::string matrix_text(const FramedLinkMatrix& m) {
    std::ostringstream out;
    for (int i = 0; i < m.size(); ++i) {
        out << "[";
        for (int j = 0; j < m.size(); ++j) {
            if (j) out << ", ";
            out << m.entry(i, j);
        }
        out << "]\n";
    }
    return out.str();
}

std::string h1_text(const std::optional<long long>& h) {
    return h ? std::to_string(*h) : std::string("infinite");
}

Json h1_json(const std::optional<long long>& h) {
    return h ? Json(*h) : Json("infinite");
}

void cmd_contfrac(long long p, long long q, bool as_json, std::ostream& out) {
    CFExpansion cf = expand_neg_cf(p, q);
    FramedLinkMatrix chain = chain_matrix(cf);
    auto h1 = h1_order(chain);

    Json j{{"p", p}, {"q", q}, {"terms", cf.terms},
           {"chain_matrix", to_json(chain)}, {"h1_order", h1_json(h1)}};
    std::ostringstream text;
    text << "expansion of -" << p << "/" << q << ": " << Json(cf.terms).dump() << "\n"
         << "chain matrix:\n" << matrix_text(chain)
         << "h1 order: " << h1_text(h1) << "\n";
    emit(out, j, as_json, text.str());
}

void cmd_kirby_apply(const std::string& moves_path, const std::string& matrix_path,
                     bool as_json, std::ostream& out) {
    FramedLinkMatrix m = matrix_from_json(read_json_file(matrix_path));
    MoveTrace trace = trace_from_json(read_json_file(moves_path));
    FramedLinkMatrix r = apply_trace(m, trace);
    auto h1 = h1_order(r);

    Json j{{"moves_applied", trace.size()}, {"matrix", to_json(r)},
           {"h1_order", h1_json(h1)}};
    std::ostringstream text;
    text << "applied " << trace.size() << " moves\n"
         << matrix_text(r) << "h1 order: " << h1_text(h1) << "\n";
    emit(out, j, as_json, text.str());
}

void cmd_fibered(long long p_in, long long q_in, bool as_json, std::ostream& out) {
    LensParams params = normalize(p_in, q_in);
    FiberedLink fl;
    if (params.p <= 1 || params.q == 1)
        fl = build_fibered_Lp1(params.p == 0 ? 0 : params.p);
    else
        fl = build_fibered_Lpq(expand_neg_cf(params.p, params.q));

    auto h1 = h1_order(fl.presentation.fixed_matrix);
    Json j{{"p", params.p}, {"q", params.q}, {"open_book", to_json(fl.book)}};
    Json mixed{{"fixed_matrix", to_json(fl.presentation.fixed_matrix)},
               {"fixed_braid", to_json(fl.presentation.fixed_braid)},
               {"moving_components", fl.presentation.moving_components},
               {"description", fl.presentation.description}};
    j["mixed_link"] = mixed;
    j["h1_order"] = h1_json(h1);

    std::ostringstream text;
    text << "L(" << params.p << "," << params.q << ") open book: genus " << fl.book.genus
         << ", " << fl.book.boundary_count << " binding components\n"
         << "monodromy: " << to_json(fl.book)["monodromy"].dump() << "\n"
         << "mixed link: " << fl.presentation.description << "\n"
         << "fixed matrix:\n" << matrix_text(fl.presentation.fixed_matrix)
         << "h1 order: " << h1_text(h1) << "\n";
    if (fl.book.is_annulus()) {
        long long k = mcg_annulus_reduce(fl.book);
        j["reduced_monodromy_exponent"] = k;
        text << "reduced monodromy exponent: " << k << "\n";
    }
    emit(out, j, as_json, text.str());
}

void cmd_lift(long long p_in, long long q_in, const std::string& band_text, int strands,
              bool paper_naming, bool as_json, std::ostream& out) {
    BandDiagram band;
    band.strands = strands;
    band.word = parse_word(band_text, strands);
    LensParams params = normalize(p_in, q_in);
    BraidWord w = lift(band, params);
    ClosureInvariants inv = closure_invariants(w);

    Json j{{"p", params.p}, {"q", params.q}, {"word", to_json(w)},
           {"closure", to_json(inv)}};
    std::ostringstream text;
    text << "lift word: \"" << word_text(w) << "\" on " << w.strands << " strands\n"
         << "closure: " << inv.component_count << " components, exponent sum "
         << inv.exponent_sum << "\n"
         << "linking matrix:\n";
    for (const auto& row : inv.linking) text << Json(row).dump() << "\n";
    if (strands == 2) {
        auto cls = classify_two_strand_closure(w);
        std::string label = classification_label(cls, paper_naming);
        j["classification"] = label;
        text << "classification: " << label << "\n";
    }
    emit(out, j, as_json, text.str());
}

void cmd_classify(const std::string& band_text, int strands, bool paper_naming, bool as_json,
                  std::ostream& out) {
    BraidWord w = free_reduce(parse_word(band_text, strands));
    auto cls = classify_two_strand_closure(w);
    ClosureInvariants inv = closure_invariants(w);
    std::string label = classification_label(cls, paper_naming);

    Json j{{"word", to_json(w)}, {"closure", to_json(inv)}, {"classification", label}};
    std::ostringstream text;
    text << "reduced word: \"" << word_text(w) << "\"\n"
         << "classification: " << label << "\n";
    emit(out, j, as_json, text.str());
}

void cmd_contact_check(long long p_in, long long q_in, const std::string& grid_text,
                       double tol, int samples, bool as_json, std::ostream& out) {
    LensParams params = normalize(p_in, q_in);
    GridSpec grid = parse_grid(grid_text);
    StandardForms forms = standard_forms();
    CompatibilityReport report = check_supports(
        forms.s3_standard, [](double omega) { return standard_page(omega); },
        {BindingComponent::Z1Zero, BindingComponent::Z2Zero}, grid, tol);
    double defect = zp_invariance_defect(params, samples);

    Json j{{"p", params.p}, {"q", params.q}};
    Json rep = to_json(report);
    for (auto& [k, v] : rep.items()) j[k] = v;
    j["zp_invariance_defect"] = defect;

    std::ostringstream text;
    text << "compatibility of the standard sphere form with the annulus pages\n"
         << "min page area value: " << report.min_page_area_value << "\n"
         << "min binding value: " << report.min_binding_value << "\n"
         << "samples: " << report.sample_count << ", tolerance: " << report.tolerance << "\n"
         << "verdict: " << (report.verdict ? "true" : "false") << "\n"
         << "invariance defect for L(" << params.p << "," << params.q << "): " << defect
         << "\n";
    emit(out, j, as_json, text.str());
}

void cmd_contact_r3(bool as_json, std::ostream& out) {
    StandardForms forms = standard_forms();
    auto sweep = [](const SampledOneForm& form) {
        double mn = std::numeric_limits<double>::infinity();
        double mx = -mn;
        for (int ix = -1; ix <= 1; ++ix)
            for (int iy = -1; iy <= 1; ++iy)
                for (int iz = -1; iz <= 1; ++iz) {
                    double v = contact_volume_value(form, {1.5 * ix, 1.5 * iy, 1.5 * iz, 0});
                    mn = std::min(mn, v);
                    mx = std::max(mx, v);
                }
        return std::pair<double, double>(mn, mx);
    };
    auto [smin, smax] = sweep(forms.r3_standard);
    auto [ymin, ymax] = sweep(forms.r3_symmetric);

    Json j{{"grid", "3x3x3 over [-1.5,1.5]^3"},
           {"standard", {{"form", "dz + x dy"}, {"min", smin}, {"max", smax}}},
           {"symmetric", {{"form", "dz + x dy - y dx"}, {"min", ymin}, {"max", ymax}}}};
    std::ostringstream text;
    text << "volume values on a 3x3x3 grid over [-1.5,1.5]^3\n"
         << "dz + x dy:        min " << smin << ", max " << smax << "\n"
         << "dz + x dy - y dx: min " << ymin << ", max " << ymax << "\n";
    emit(out, j, as_json, text.str());
}

void cmd_render(const std::string& band_text, int strands, bool as_json, std::ostream& out) {
    BandDiagram band;
    band.strands = strands;
    band.word = parse_word(band_text, strands);
    AsciiDiagram diagram = render_band(band);
    if (as_json) {
        emit(out, Json{{"lines", diagram.lines}}, true, "");
    } else {
        for (const auto& line : diagram.lines) out << line << "\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"braid, surgery and open-book computations in lens spaces"};
    app.require_subcommand(1);

    // contfrac
    long long cf_p = 0, cf_q = 0;
    FormatOpt cf_fmt;
    CLI::App* contfrac_cmd =
        app.add_subcommand("contfrac", "negative continued fraction and chain matrix");
    contfrac_cmd->add_option("P", cf_p, "numerator p >= 2")->required();
    contfrac_cmd->add_option("Q", cf_q, "1 <= q < p, coprime to p")->required();
    add_format(contfrac_cmd, cf_fmt);

    // kirby apply
    std::string moves_path, matrix_path;
    FormatOpt kirby_fmt;
    CLI::App* kirby_cmd = app.add_subcommand("kirby", "Kirby calculus on linking matrices");
    kirby_cmd->require_subcommand(1);
    CLI::App* apply_cmd = kirby_cmd->add_subcommand("apply", "replay a move list");
    apply_cmd->add_option("--moves", moves_path, "JSON move list")->required();
    apply_cmd->add_option("--matrix", matrix_path, "JSON linking matrix")->required();
    add_format(apply_cmd, kirby_fmt);

    // fibered
    long long fib_p = 0, fib_q = 0;
    FormatOpt fib_fmt;
    CLI::App* fibered_cmd =
        app.add_subcommand("fibered", "fibered link and open book for L(p,q)");
    fibered_cmd->add_option("--p", fib_p, "p")->required();
    fibered_cmd->add_option("--q", fib_q, "q")->required();
    add_format(fibered_cmd, fib_fmt);

    // lift
    long long lift_p = 0, lift_q = 0;
    std::string lift_band;
    int lift_strands = 2;
    bool lift_paper = false;
    FormatOpt lift_fmt;
    CLI::App* lift_cmd = app.add_subcommand("lift", "lift of a band diagram to the sphere");
    lift_cmd->add_option("--p", lift_p, "p")->required();
    lift_cmd->add_option("--q", lift_q, "q")->required();
    lift_cmd->add_option("--band", lift_band, "band word, e.g. \"-1 -1\"")->required();
    lift_cmd->add_option("--strands", lift_strands, "strand count")->required();
    lift_cmd->add_flag("--paper-naming", lift_paper, "label Hopf closures as H+/H-");
    add_format(lift_cmd, lift_fmt);

    // classify
    std::string cls_band;
    int cls_strands = 2;
    bool cls_paper = false;
    FormatOpt cls_fmt;
    CLI::App* classify_cmd = app.add_subcommand("classify", "classify a 2-strand closure");
    classify_cmd->add_option("--band", cls_band, "band word")->required();
    classify_cmd->add_option("--strands", cls_strands, "strand count");
    classify_cmd->add_flag("--paper-naming", cls_paper, "label Hopf closures as H+/H-");
    add_format(classify_cmd, cls_fmt);

    // contact
    long long ct_p = 0, ct_q = 0;
    std::string ct_grid = "24x24x3";
    double ct_tol = -1.0;
    int ct_samples = 200;
    FormatOpt check_fmt, r3_fmt;
    CLI::App* contact_cmd = app.add_subcommand("contact", "contact form verification");
    contact_cmd->require_subcommand(1);
    CLI::App* check_cmd = contact_cmd->add_subcommand("check", "open-book compatibility");
    check_cmd->add_option("--p", ct_p, "p")->required();
    check_cmd->add_option("--q", ct_q, "q")->required();
    check_cmd->add_option("--grid", ct_grid, "t x theta x omega grid")->capture_default_str();
    check_cmd->add_option("--tol", ct_tol, "positivity threshold")
        ->check(CLI::PositiveNumber);
    check_cmd->add_option("--samples", ct_samples, "invariance sample count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_format(check_cmd, check_fmt);
    CLI::App* r3_cmd = contact_cmd->add_subcommand("r3", "volume values of the R^3 forms");
    add_format(r3_cmd, r3_fmt);

    // render
    std::string rnd_band;
    int rnd_strands = 2;
    FormatOpt rnd_fmt;
    CLI::App* render_cmd = app.add_subcommand("render", "ASCII band diagram");
    render_cmd->add_option("--band", rnd_band, "band word")->required();
    render_cmd->add_option("--strands", rnd_strands, "strand count")->required();
    add_format(render_cmd, rnd_fmt);

    std::vector<std::string> argv_vec;
    argv_vec.push_back("lensfib");
    argv_vec.insert(argv_vec.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_vec) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "{\"error\":\"UsageError\",\"message\":" << Json(e.what()).dump() << "}\n";
        return 2;
    }

    try {
        if (contfrac_cmd->parsed())
            cmd_contfrac(cf_p, cf_q, cf_fmt.json(), out);
        else if (apply_cmd->parsed())
            cmd_kirby_apply(moves_path, matrix_path, kirby_fmt.json(), out);
        else if (fibered_cmd->parsed())
            cmd_fibered(fib_p, fib_q, fib_fmt.json(), out);
        else if (lift_cmd->parsed())
            cmd_lift(lift_p, lift_q, lift_band, lift_strands, lift_paper, lift_fmt.json(), out);
        else if (classify_cmd->parsed())
            cmd_classify(cls_band, cls_strands, cls_paper, cls_fmt.json(), out);
        else if (check_cmd->parsed())
            cmd_contact_check(ct_p, ct_q, ct_grid,
                              ct_tol > 0 ? ct_tol : default_tolerance(), ct_samples,
                              check_fmt.json(), out);
        else if (r3_cmd->parsed())
            cmd_contact_r3(r3_fmt.json(), out);
        else if (render_cmd->parsed())
            cmd_render(rnd_band, rnd_strands, rnd_fmt.json(), out);
    } catch (const Error& e) {
        out << "{\"error\":" << Json(e.name()).dump()
            << ",\"message\":" << Json(e.what()).dump() << "}\n";
        return e.name() == "UsageError" ? 2 : 1;
    }
    return 0;
}

} // namespace lensfib

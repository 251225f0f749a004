#include "lensfib/json_io.hpp"

#include "lensfib/error.hpp"

namespace lensfib {

Json to_json(const BraidWord& w) {
    return Json{{"strands", w.strands}, {"letters", w.letters}};
}

BraidWord braid_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("strands") || !j.contains("letters"))
        fail("MalformedToken", "braid word needs {strands, letters}");
    BraidWord w;
    w.strands = j.at("strands").get<int>();
    if (w.strands < 1) fail("GeneratorOutOfRange", "strand count must be positive");
    for (const auto& e : j.at("letters")) {
        int v = e.get<int>();
        if (v == 0) fail("MalformedToken", "generator index 0 is not allowed");
        if (v > w.strands - 1 || v < 1 - w.strands)
            fail("GeneratorOutOfRange", "letter out of range");
        w.letters.push_back(v);
    }
    return w;
}

Json to_json(const ClosureInvariants& inv) {
    return Json{{"components", inv.component_count},
                {"exponent_sum", inv.exponent_sum},
                {"linking", inv.linking}};
}

Json to_json(const FramedLinkMatrix& m) { return Json(m.rows()); }

FramedLinkMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) fail("MalformedToken", "matrix must be an array of arrays");
    std::vector<std::vector<long long>> rows;
    for (const auto& r : j) {
        std::vector<long long> row;
        for (const auto& v : r) row.push_back(v.get<long long>());
        rows.push_back(std::move(row));
    }
    return FramedLinkMatrix(std::move(rows));
}

Json to_json(const Move& mv) {
    switch (mv.kind) {
    case Move::K1Add: return Json{{"move", "k1_add"}, {"sign", mv.sign}};
    case Move::K1Remove: return Json{{"move", "k1_remove"}, {"index", mv.i}};
    case Move::K2Slide:
        return Json{{"move", "k2_slide"}, {"i", mv.i}, {"j", mv.j}, {"sign", mv.sign}};
    case Move::BlowDown: return Json{{"move", "blow_down"}, {"index", mv.i}};
    }
    fail("MalformedToken", "unknown move kind");
}

Move move_from_json(const Json& j) {
    const std::string kind = j.at("move").get<std::string>();
    Move mv{};
    if (kind == "k1_add") {
        mv.kind = Move::K1Add;
        mv.sign = j.at("sign").get<int>();
    } else if (kind == "k1_remove") {
        mv.kind = Move::K1Remove;
        mv.i = j.at("index").get<int>();
    } else if (kind == "k2_slide") {
        mv.kind = Move::K2Slide;
        mv.i = j.at("i").get<int>();
        mv.j = j.at("j").get<int>();
        mv.sign = j.at("sign").get<int>();
    } else if (kind == "blow_down") {
        mv.kind = Move::BlowDown;
        mv.i = j.at("index").get<int>();
    } else {
        fail("MalformedToken", "unknown move '" + kind + "'");
    }
    return mv;
}

MoveTrace trace_from_json(const Json& j) {
    if (!j.is_array()) fail("MalformedToken", "move list must be an array");
    MoveTrace trace;
    for (const auto& m : j) trace.push_back(move_from_json(m));
    return trace;
}

Json to_json(const MoveTrace& trace) {
    Json arr = Json::array();
    for (const Move& mv : trace) arr.push_back(to_json(mv));
    return arr;
}

Json to_json(const AbstractOpenBook& ob) {
    Json monodromy = Json::array();
    for (const Twist& t : ob.monodromy) {
        Json entry;
        entry["curve"] = t.curve.label;
        switch (t.curve.kind) {
        case CurveId::Kind::Core: entry["encircles"] = "core"; break;
        case CurveId::Kind::Handle: entry["encircles"] = "handle"; break;
        case CurveId::Kind::Encircling:
            entry["encircles"] =
                std::vector<int>(t.curve.encircles.begin(), t.curve.encircles.end());
            break;
        }
        entry["exp"] = t.exponent;
        monodromy.push_back(std::move(entry));
    }
    return Json{{"genus", ob.genus}, {"boundary", ob.boundary_count},
                {"monodromy", monodromy}};
}

Json to_json(const CompatibilityReport& report) {
    return Json{{"min_page_area_value", report.min_page_area_value},
                {"min_binding_value", report.min_binding_value},
                {"sample_count", report.sample_count},
                {"tolerance", report.tolerance},
                {"verdict", report.verdict}};
}

} // namespace lensfib

#include "wahl/fixture_io.hpp"

#include <sstream>

namespace wahl::io {

namespace {

std::size_t to_size(const Int& v, const std::string& what) {
    require(v >= 0 && v <= 1000000, what + " out of range: " + to_string(v));
    return static_cast<std::size_t>(v.convert_to<unsigned long long>());
}

void check_schema(const jio::Value& v) {
    require(v.is_object(), "expected a JSON object");
    require(v.at("schema_version").as_int() == 1, "unsupported schema_version");
}

} // namespace

jio::Value config_to_json(const surface::CurveConfig& cfg) {
    jio::Value out{jio::Object{}};
    out.set("schema_version", 1);
    jio::Array curves;
    for (const surface::Curve& c : cfg.curves) {
        jio::Value rec{jio::Object{}};
        rec.set("id", c.id);
        rec.set("self_int", c.self_int);
        if (c.exceptional_of) rec.set("exceptional_of", *c.exceptional_of);
        curves.push_back(std::move(rec));
    }
    out.set("curves", jio::Value(std::move(curves)));
    jio::Array pairings;
    for (const auto& [k, v] : cfg.pairings)
        pairings.push_back(jio::Array{jio::Value(k.first), jio::Value(k.second), jio::Value(v)});
    out.set("pairings", jio::Value(std::move(pairings)));
    out.set("k_squared", cfg.k_squared);
    out.set("picard_rank", cfg.picard_rank);
    return out;
}

surface::CurveConfig config_from_json(const jio::Value& v) {
    check_schema(v);
    surface::CurveConfig cfg{{}, {}, v.at("k_squared").as_int(), v.at("picard_rank").as_int()};
    require(cfg.picard_rank >= 1, "picard_rank must be positive");
    for (const jio::Value& rec : v.at("curves").as_array()) {
        surface::Curve c{rec.at("id").as_string(), rec.at("self_int").as_int(), true,
                         std::nullopt};
        if (const jio::Value* e = rec.find("exceptional_of")) c.exceptional_of = e->as_string();
        require(!cfg.has_curve(c.id), "duplicate curve id '" + c.id + "'");
        cfg.curves.push_back(std::move(c));
    }
    for (const jio::Value& rec : v.at("pairings").as_array()) {
        const jio::Array& triple = rec.as_array();
        require(triple.size() == 3, "pairing entries are [idA, idB, k]");
        const std::string& a = triple[0].as_string();
        const std::string& b = triple[1].as_string();
        require(cfg.has_curve(a) && cfg.has_curve(b), "pairing references unknown curve");
        require(cfg.pairing(a, b) == 0, "duplicate pairing for '" + a + "','" + b + "'");
        cfg.set_pairing(a, b, triple[2].as_int());
    }
    return cfg;
}

BlowupScript script_from_json(const jio::Value& v) {
    check_schema(v);
    BlowupScript script{config_from_json(v.at("config")), {}};
    for (const jio::Value& rec : v.at("steps").as_array()) {
        BlowupStep step{rec.at("name").as_string(), {}};
        for (const jio::Value& p : rec.at("at").as_array())
            step.point.passes_through.emplace_back(p.at("curve").as_string(),
                                                   p.at("mult").as_int());
        script.steps.push_back(std::move(step));
    }
    return script;
}

surface::CurveConfig run_script(const BlowupScript& script) {
    surface::CurveConfig cfg = script.seed;
    for (std::size_t i = 0; i < script.steps.size(); ++i)
        cfg = surface::blow_up(cfg, script.steps[i].point, script.steps[i].name,
                               "blowup-" + std::to_string(i + 1));
    return cfg;
}

jio::Value fixture_to_json(const verify::LeeParkFixture& fx) {
    jio::Value out{jio::Object{}};
    out.set("schema_version", 1);
    out.set("name", fx.name);
    {
        jio::Array a;
        for (const Int& p : fx.excluded_characteristics) a.push_back(jio::Value(p));
        out.set("excluded_characteristics", jio::Value(std::move(a)));
    }
    out.set("k_m_squared", fx.k_m_squared);
    out.set("picard_rank_m", fx.picard_rank_m);
    out.set("target_k_squared", fx.target_k_squared);
    {
        jio::Array chains;
        for (const verify::FixtureChain& ch : fx.chains) {
            jio::Value rec{jio::Object{}};
            jio::Array w;
            for (const Int& b : ch.weights) w.push_back(jio::Value(b));
            rec.set("weights", jio::Value(std::move(w)));
            jio::Value t{jio::Object{}};
            t.set("d", ch.expected.d);
            t.set("n", ch.expected.n);
            t.set("a", ch.expected.a);
            rec.set("type", std::move(t));
            chains.push_back(std::move(rec));
        }
        out.set("chains", jio::Value(std::move(chains)));
    }
    {
        jio::Array curves;
        for (const verify::MinusOneCurve& cv : fx.minus_one_curves) {
            jio::Value rec{jio::Object{}};
            rec.set("id", cv.id);
            jio::Array ats;
            for (const verify::Attachment& at : cv.attachments) {
                jio::Value a{jio::Object{}};
                a.set("chain", at.chain);
                a.set("component", at.component);
                a.set("multiplicity", at.multiplicity);
                ats.push_back(std::move(a));
            }
            rec.set("attachments", jio::Value(std::move(ats)));
            if (cv.expected_delta) rec.set("expected_delta", jio::rational(*cv.expected_delta));
            if (cv.gt_one_assertion) rec.set("gt_one_assertion", *cv.gt_one_assertion);
            curves.push_back(std::move(rec));
        }
        out.set("minus_one_curves", jio::Value(std::move(curves)));
    }
    {
        jio::Array fl;
        for (const verify::Flanking& f : fx.flanking) {
            jio::Value rec{jio::Object{}};
            rec.set("chain", f.chain);
            auto side = [](const verify::Flank& s) {
                jio::Value rec{jio::Object{}};
                rec.set("id", s.id);
                rec.set("component", s.component);
                rec.set("multiplicity", s.multiplicity);
                return rec;
            };
            rec.set("left", side(f.left));
            rec.set("right", side(f.right));
            rec.set("in_b_plus", f.in_b_plus);
            fl.push_back(std::move(rec));
        }
        out.set("flanking", jio::Value(std::move(fl)));
    }
    if (fx.gram) {
        jio::Value rec{jio::Object{}};
        if (fx.gram->is_blocks()) {
            jio::Array sizes;
            for (std::size_t s : fx.gram->an_blocks) sizes.push_back(jio::Value(s));
            rec.set("an_blocks", jio::Value(std::move(sizes)));
        } else {
            jio::Array diag;
            for (const Int& d : fx.gram->diag) diag.push_back(jio::Value(d));
            rec.set("diag", jio::Value(std::move(diag)));
            jio::Array off;
            for (const auto& [i, j, val] : fx.gram->off)
                off.push_back(jio::Array{jio::Value(i), jio::Value(j), jio::Value(val)});
            rec.set("off", jio::Value(std::move(off)));
        }
        if (fx.gram->expected_determinant)
            rec.set("expected_determinant", *fx.gram->expected_determinant);
        out.set("gram", std::move(rec));
    }
    {
        jio::Array ws;
        for (const verify::ScWitness& w : fx.sc_witnesses) {
            jio::Value rec{jio::Object{}};
            rec.set("chain_i", w.chain_i);
            rec.set("chain_j", w.chain_j);
            rec.set("curve", w.curve);
            if (w.expected_gcd) rec.set("expected_gcd", *w.expected_gcd);
            ws.push_back(std::move(rec));
        }
        out.set("sc_witnesses", jio::Value(std::move(ws)));
    }
    {
        jio::Array facts;
        for (const verify::AssertedFact& f : fx.asserted_facts) {
            jio::Value rec{jio::Object{}};
            rec.set("condition", f.condition);
            rec.set("holds", f.holds);
            rec.set("citation", f.citation);
            facts.push_back(std::move(rec));
        }
        out.set("asserted_facts", jio::Value(std::move(facts)));
    }
    {
        jio::Array oc;
        for (const verify::OutsideCurve& c : fx.exceptional_outside) {
            jio::Value rec{jio::Object{}};
            rec.set("id", c.id);
            rec.set("self_int", c.self_int);
            oc.push_back(std::move(rec));
        }
        out.set("exceptional_outside", jio::Value(std::move(oc)));
    }
    out.set("b_contains_node_blowup", fx.b_contains_node_blowup);
    return out;
}

verify::LeeParkFixture fixture_from_json(const jio::Value& v) {
    check_schema(v);
    verify::LeeParkFixture fx;
    fx.name = v.at("name").as_string();
    for (const jio::Value& p : v.at("excluded_characteristics").as_array())
        fx.excluded_characteristics.push_back(p.as_int());
    fx.k_m_squared = v.at("k_m_squared").as_int();
    fx.picard_rank_m = v.at("picard_rank_m").as_int();
    fx.target_k_squared = v.at("target_k_squared").as_int();
    for (const jio::Value& rec : v.at("chains").as_array()) {
        std::vector<Int> w;
        for (const jio::Value& b : rec.at("weights").as_array()) w.push_back(b.as_int());
        const jio::Value& t = rec.at("type");
        fx.chains.push_back({std::move(w), classt::ClassTTriple(t.at("d").as_int(),
                                                                t.at("n").as_int(),
                                                                t.at("a").as_int())});
    }
    for (const jio::Value& rec : v.at("minus_one_curves").as_array()) {
        verify::MinusOneCurve cv{rec.at("id").as_string(), {}, std::nullopt, std::nullopt};
        for (const jio::Value& a : rec.at("attachments").as_array())
            cv.attachments.push_back({to_size(a.at("chain").as_int(), "chain index"),
                                      to_size(a.at("component").as_int(), "component index"),
                                      a.at("multiplicity").as_int()});
        if (const jio::Value* e = rec.find("expected_delta"))
            cv.expected_delta = jio::rational_from(*e);
        if (const jio::Value* g = rec.find("gt_one_assertion"))
            cv.gt_one_assertion = g->as_string();
        fx.minus_one_curves.push_back(std::move(cv));
    }
    for (const jio::Value& rec : v.at("flanking").as_array()) {
        auto side = [](const jio::Value& s) {
            return verify::Flank{s.at("id").as_string(),
                                 to_size(s.at("component").as_int(), "flank component"),
                                 s.at("multiplicity").as_int()};
        };
        fx.flanking.push_back({to_size(rec.at("chain").as_int(), "flanking chain"),
                               side(rec.at("left")), side(rec.at("right")),
                               rec.at("in_b_plus").as_bool()});
    }
    if (const jio::Value* g = v.find("gram")) {
        verify::GramData gram;
        if (const jio::Value* blocks = g->find("an_blocks")) {
            for (const jio::Value& s : blocks->as_array())
                gram.an_blocks.push_back(to_size(s.as_int(), "A_n block size"));
        } else {
            for (const jio::Value& d : g->at("diag").as_array()) gram.diag.push_back(d.as_int());
            for (const jio::Value& o : g->at("off").as_array()) {
                const jio::Array& t = o.as_array();
                require(t.size() == 3, "gram off entries are [i, j, value]");
                gram.off.emplace_back(to_size(t[0].as_int(), "gram index"),
                                      to_size(t[1].as_int(), "gram index"), t[2].as_int());
            }
        }
        if (const jio::Value* e = g->find("expected_determinant"))
            gram.expected_determinant = e->as_int();
        fx.gram = std::move(gram);
    }
    for (const jio::Value& rec : v.at("sc_witnesses").as_array()) {
        verify::ScWitness w{to_size(rec.at("chain_i").as_int(), "chain index"),
                            to_size(rec.at("chain_j").as_int(), "chain index"),
                            rec.at("curve").as_string(), std::nullopt};
        if (const jio::Value* e = rec.find("expected_gcd")) w.expected_gcd = e->as_int();
        fx.sc_witnesses.push_back(std::move(w));
    }
    for (const jio::Value& rec : v.at("asserted_facts").as_array())
        fx.asserted_facts.push_back({rec.at("condition").as_string(),
                                     rec.at("holds").as_bool(),
                                     rec.at("citation").as_string()});
    for (const jio::Value& rec : v.at("exceptional_outside").as_array())
        fx.exceptional_outside.push_back({rec.at("id").as_string(),
                                          rec.at("self_int").as_int()});
    fx.b_contains_node_blowup = v.at("b_contains_node_blowup").as_bool();
    return fx;
}

jio::Value report_to_json(const verify::VerificationReport& report) {
    jio::Value out{jio::Object{}};
    out.set("schema_version", 1);
    out.set("fixture", report.fixture);
    out.set("characteristic", report.characteristic);
    out.set("verdict", report.verdict);
    if (report.k_x_squared) out.set("k_x_squared", *report.k_x_squared);
    jio::Array deltas;
    for (const Int& d : report.deltas) deltas.push_back(jio::Value(d));
    out.set("deltas", jio::Value(std::move(deltas)));
    jio::Array conds;
    for (const verify::ConditionEntry& e : report.entries) {
        jio::Value rec{jio::Object{}};
        rec.set("id", e.id);
        rec.set("status", verify::to_string(e.status));
        rec.set("detail", e.detail);
        if (e.citation) rec.set("citation", *e.citation);
        if (e.note) rec.set("note", *e.note);
        if (!e.data.as_object().empty()) rec.set("data", e.data);
        conds.push_back(std::move(rec));
    }
    out.set("conditions", jio::Value(std::move(conds)));
    return out;
}

std::string report_to_text(const verify::VerificationReport& report) {
    std::ostringstream out;
    out << "fixture: " << report.fixture << "\n";
    out << "characteristic: " << report.characteristic.str() << "\n";
    for (const verify::ConditionEntry& e : report.entries) {
        out << "  " << e.id;
        for (std::size_t k = e.id.size(); k < 14; ++k) out << ' ';
        out << verify::to_string(e.status);
        if (!e.detail.empty()) out << "  " << e.detail;
        out << "\n";
        if (e.citation) out << "      citation: " << *e.citation << "\n";
        if (e.note) out << "      note: " << *e.note << "\n";
        if (e.id == "C10") {
            if (const jio::Value* curves = e.data.find("curves"))
                for (const jio::Value& c : curves->as_array())
                    if (c.find("delta_dot")) {
                        Rat v = jio::rational_from(c.at("delta_dot"));
                        out << "      " << c.at("id").as_string() << ": Delta.Gamma = "
                            << to_string(v) << (v > 1 ? "  (> 1" : "  (not > 1")
                            << ", by " << c.at("path").as_string() << ")\n";
                    }
        }
        if (e.id == "SC") {
            if (e.data.is_object())
                if (const jio::Value* ws = e.data.find("witnesses"))
                    for (const jio::Value& w : ws->as_array())
                        if (w.find("gcd"))
                            out << "      " << w.at("curve").as_string()
                                << ": gcd = " << w.at("gcd").as_int().str() << "\n";
        }
    }
    out << "verdict: " << report.verdict << "\n";
    if (report.k_x_squared) out << "K_X^2 = " << report.k_x_squared->str() << "\n";
    return out.str();
}

std::string emit_report(const verify::VerificationReport& report, Format format) {
    if (format == Format::Json) return jio::dump(report_to_json(report));
    return report_to_text(report);
}

} // namespace wahl::io

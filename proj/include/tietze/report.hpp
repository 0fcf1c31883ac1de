// Pipeline orchestration for the command line tool: run the stages, enforce
// the verdict invariants, and serialize reports as text or JSON.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tietze/criterion.hpp"
#include "tietze/normalizer.hpp"
#include "tietze/parser.hpp"
#include "tietze/render.hpp"
#include "tietze/solver.hpp"

namespace tietze {

using json = nlohmann::ordered_json;

enum class Verdict { no_diff_algebraic_solution, diff_riccati_constructed, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::no_diff_algebraic_solution: return "NoDiffAlgebraicSolution(conditional)";
        case Verdict::diff_riccati_constructed: return "DiffRiccatiConstructed";
        case Verdict::inconclusive: return "Inconclusive";
    }
    return "?";
}

struct VerdictOptions {
    bool assume_no_algebraic_solutions = false;
    long degree_bound = 4; // bounded-search window for shift/Mahler operators
};

struct VerdictReport {
    std::string matrix_src, op_spec;
    DiffOp op = DiffOp::q_dilation();
    NormalizationResult normalization = DegenerateForm{};
    std::optional<HypothesisReport> hypotheses;
    std::optional<LinearDiffOp> criterion;
    std::optional<SolveOutcome> solve;
    std::optional<GenElem> constructed_R;
    Verdict verdict = Verdict::inconclusive;
    std::vector<std::string> caveats;
};

inline VerdictReport run_verdict(const Mat2& a, const DiffOp& op, const VerdictOptions& opts) {
    VerdictReport rep;
    rep.op = op;
    rep.op_spec = op.spec_string();
    rep.normalization = normalize(op, a);

    if (const auto* deg = std::get_if<DegenerateForm>(&rep.normalization)) {
        rep.verdict = Verdict::inconclusive;
        rep.caveats.push_back("degenerate input: " + deg->reason);
        return rep;
    }
    if (std::holds_alternative<PeriodicForm>(rep.normalization)) {
        rep.verdict = Verdict::inconclusive;
        rep.caveats.push_back("reduction ends in the periodic form (tau B)B = r*I; the criterion does not apply");
        return rep;
    }

    const auto& tf = std::get<TietzeForm>(rep.normalization);
    HypothesisReport hyp = hypothesis_check(op, tf.r);
    if (opts.assume_no_algebraic_solutions)
        hyp.algebraic_solution_hypothesis = HypothesisReport::AlgHyp::asserted;
    rep.hypotheses = hyp;
    rep.criterion = build_criterion(op, tf.r);

    SolveOptions sopts;
    bool bounded_only = op.kind != DiffOp::Kind::q_dilation;
    if (bounded_only) {
        sopts.window = std::make_pair(-opts.degree_bound, opts.degree_bound);
        rep.caveats.push_back("non-q-dilation operator: rational solutions searched in a bounded window only");
    }
    rep.solve = solve_linear_qdifference(*rep.criterion, sopts);

    if (const auto* sol = std::get_if<Solution>(&*rep.solve)) {
        ConstructionCheck vc = verify_construction(op, tf.r, sol->g);
        if (!vc.criterion_residual.is_zero()) throw internal_error("solver returned a non-solution of the criterion");
        if (!vc.commutation_defect.is_zero())
            throw internal_error("commutation defect nonzero for a criterion solution");
        rep.constructed_R = vc.r_poly;
        rep.verdict = Verdict::diff_riccati_constructed;
        if (!hyp.dr_nonzero)
            rep.caveats.push_back("Dr = 0: the nonexistence criterion's hypotheses are not met; "
                                  "the differential Riccati construction is shown instead");
        return rep;
    }

    const auto& ns = std::get<NoSolution>(*rep.solve);
    const bool certified = !std::holds_alternative<SystemObstruction>(ns.cert) ||
                           !std::get<SystemObstruction>(ns.cert).bounded_search_only;
    if (!certified) {
        rep.verdict = Verdict::inconclusive;
        rep.caveats.push_back("no solution found in the bounded window; this is not a nonexistence certificate");
        return rep;
    }
    if (!hyp.theorem_hypotheses_met()) {
        rep.verdict = Verdict::inconclusive;
        if (!hyp.dr_nonzero) rep.caveats.push_back("hypothesis Dr != 0 fails");
        if (!hyp.valuation_condition())
            rep.caveats.push_back("no tau-stable place P with v_P(tau^i r) > 0 for all i could be certified");
        return rep;
    }
    if (hyp.algebraic_solution_hypothesis != HypothesisReport::AlgHyp::asserted) {
        rep.verdict = Verdict::inconclusive;
        rep.caveats.push_back("the hypothesis that Eq(A,i) has no solutions algebraic over F (all i >= 1) was "
                              "not asserted; pass --assume-no-algebraic-solutions to accept it");
        return rep;
    }
    rep.verdict = Verdict::no_diff_algebraic_solution;
    rep.caveats.push_back("conditional on the asserted hypothesis that no Eq(A,i) solution is algebraic over F");
    return rep;
}

// --- serialization ---------------------------------------------------------

inline json to_json(const Place& p) {
    switch (p.kind) {
        case Place::Kind::zero: return "zero";
        case Place::Kind::infinity: return "infinity";
        case Place::Kind::finite_point: return "t=" + render(p.alpha);
    }
    return "?";
}

inline json to_json(const StepRecord& s) {
    return json{{"form", to_string(s.form)}, {"P", render(s.p)}};
}

inline json to_json(const NormalizationResult& nr) {
    json j;
    if (const auto* tf = std::get_if<TietzeForm>(&nr)) {
        j["outcome"] = "tietze";
        j["e"] = render(tf->e);
        j["r"] = render(tf->r);
        j["Q"] = render(tf->q);
        j["trace"] = json::array();
        for (const auto& s : tf->trace) j["trace"].push_back(to_json(s));
    } else if (const auto* pf = std::get_if<PeriodicForm>(&nr)) {
        j["outcome"] = "periodic";
        j["r"] = render(pf->r);
        j["trace"] = json::array();
        for (const auto& s : pf->trace) j["trace"].push_back(to_json(s));
    } else {
        j["outcome"] = "degenerate";
        j["reason"] = std::get<DegenerateForm>(nr).reason;
    }
    return j;
}

inline json to_json(const HypothesisReport& h) {
    json j;
    j["r_nonzero"] = h.r_nonzero;
    j["dr_nonzero"] = h.dr_nonzero;
    if (h.place_witness) {
        j["witness_place"] = to_json(h.place_witness->place);
        j["witness_value"] = h.place_witness->value;
    } else {
        j["witness_place"] = nullptr;
    }
    j["algebraic_solution_hypothesis"] =
        h.algebraic_solution_hypothesis == HypothesisReport::AlgHyp::asserted ? "asserted" : "unchecked";
    return j;
}

inline json to_json(const LinearDiffOp& l) {
    json j;
    j["op"] = l.op.spec_string();
    j["coeffs"] = json::array();
    for (const auto& c : l.coeffs) j["coeffs"].push_back(render(c));
    j["rhs"] = render(l.rhs);
    return j;
}

inline json to_json(const ObstructionCert& cert) {
    json j;
    if (const auto* ind = std::get_if<IndicialObstruction>(&cert)) {
        j["kind"] = ind->place.kind == Place::Kind::infinity ? "indicial_at_infinity" : "indicial_at_zero";
        j["order"] = ind->order;
        j["residual"] = render(ind->residual);
        return j;
    }
    const auto& so = std::get<SystemObstruction>(cert);
    j["kind"] = "linear_system_inconsistent";
    j["rows"] = so.rows;
    j["cols"] = so.cols;
    j["rank"] = so.rank;
    if (so.witness_row) j["witness_row"] = *so.witness_row;
    if (so.window) j["window"] = json::array({so.window->first, so.window->second});
    j["bounded_search_only"] = so.bounded_search_only;
    j["note"] = so.note;
    return j;
}

inline json to_json(const SolveOutcome& out) {
    json j;
    if (const auto* sol = std::get_if<Solution>(&out)) {
        j["status"] = "solution";
        j["g"] = render(sol->g);
        j["nullspace"] = json::array();
        for (const auto& h : sol->nullspace) j["nullspace"].push_back(render(h));
    } else {
        j["status"] = "no_solution";
        j["certificate"] = to_json(std::get<NoSolution>(out).cert);
    }
    return j;
}

inline json to_json(const VerdictReport& rep) {
    json j;
    j["input"] = json{{"matrix", rep.matrix_src}, {"op", rep.op_spec}};
    j["normalization"] = to_json(rep.normalization);
    if (rep.hypotheses) j["hypotheses"] = to_json(*rep.hypotheses);
    if (rep.criterion) j["criterion"] = to_json(*rep.criterion);
    if (rep.solve) j["solve"] = to_json(*rep.solve);
    if (rep.constructed_R) j["R"] = render_gen(*rep.constructed_R);
    j["verdict"] = to_string(rep.verdict);
    j["caveats"] = rep.caveats;
    return j;
}

inline std::string text_of(const NormalizationResult& nr, bool trace) {
    std::ostringstream os;
    if (const auto* tf = std::get_if<TietzeForm>(&nr)) {
        os << "outcome: Tietze normal form\n";
        os << "  e = " << render(tf->e) << "\n";
        os << "  r = " << render(tf->r) << "\n";
        os << "  Q = " << render(tf->q) << "\n";
        if (trace) {
            os << "  trace:";
            if (tf->trace.empty()) os << " (already in Tietze form)";
            for (const auto& s : tf->trace) os << " " << to_string(s.form) << "-step P=" << render(s.p);
            os << "\n";
        }
    } else if (const auto* pf = std::get_if<PeriodicForm>(&nr)) {
        os << "outcome: Periodic ((tau B)B = r*I)\n";
        os << "  r = " << render(pf->r) << "\n";
    } else {
        os << "outcome: Degenerate\n";
        os << "  reason: " << std::get<DegenerateForm>(nr).reason << "\n";
    }
    return os.str();
}

inline std::string text_of(const SolveOutcome& out) {
    std::ostringstream os;
    if (const auto* sol = std::get_if<Solution>(&out)) {
        os << "status: solution\n  g = " << render(sol->g) << "\n";
        os << "  nullspace:";
        if (sol->nullspace.empty()) os << " (trivial)";
        for (const auto& h : sol->nullspace) os << " " << render(h);
        os << "\n";
    } else {
        const auto& cert = std::get<NoSolution>(out).cert;
        os << "status: no rational solution\n";
        if (const auto* ind = std::get_if<IndicialObstruction>(&cert)) {
            os << "  certificate: indicial obstruction at "
               << (ind->place.kind == Place::Kind::infinity ? "infinity" : "zero") << ", order " << ind->order
               << ", residual " << render(ind->residual) << "\n";
        } else {
            const auto& so = std::get<SystemObstruction>(cert);
            os << "  certificate: " << so.note << " (rows " << so.rows << ", cols " << so.cols << ", rank "
               << so.rank << ")\n";
        }
    }
    return os.str();
}

inline std::string text_of(const VerdictReport& rep, bool trace) {
    std::ostringstream os;
    os << "input: " << rep.matrix_src << "  op: " << rep.op_spec << "\n";
    os << text_of(rep.normalization, trace);
    if (rep.hypotheses) {
        const auto& h = *rep.hypotheses;
        os << "hypotheses: r != 0: " << (h.r_nonzero ? "yes" : "no")
           << "; D(r) != 0: " << (h.dr_nonzero ? "yes" : "no");
        if (h.place_witness)
            os << "; witness place " << to_json(h.place_witness->place).get<std::string>()
               << " with v = " << h.place_witness->value;
        else
            os << "; no place witness";
        os << "; algebraic-solution hypothesis: "
           << (h.algebraic_solution_hypothesis == HypothesisReport::AlgHyp::asserted ? "asserted" : "unchecked")
           << "\n";
    }
    if (rep.criterion) {
        os << "criterion (sum_i c_i tau^i(g) = rhs):\n";
        for (size_t i = 0; i < rep.criterion->coeffs.size(); ++i)
            os << "  c" << i << " = " << render(rep.criterion->coeffs[i]) << "\n";
        os << "  rhs = " << render(rep.criterion->rhs) << "\n";
    }
    if (rep.solve) os << text_of(*rep.solve);
    if (rep.constructed_R) os << "differential Riccati equation: Df + R(f) = 0 with R = " << render_gen(*rep.constructed_R) << "\n";
    os << "verdict: " << to_string(rep.verdict) << "\n";
    for (const auto& c : rep.caveats) os << "caveat: " << c << "\n";
    return os.str();
}

// --- commands ---------------------------------------------------------------

inline std::string cmd_normalize(const std::string& matrix_src, const std::string& op_spec, bool as_json,
                                 bool trace = true) {
    DiffOp op = parse_op_spec(op_spec);
    Mat2 a = parse_matrix(matrix_src);
    NormalizationResult nr = normalize(op, a);
    if (as_json) {
        json j;
        j["input"] = json{{"matrix", matrix_src}, {"op", op_spec}};
        j["normalization"] = to_json(nr);
        return j.dump(2) + "\n";
    }
    return text_of(nr, trace);
}

inline std::string cmd_criterion(const std::string& r_src, const std::string& op_spec, bool as_json) {
    DiffOp op = parse_op_spec(op_spec);
    FieldElem r = parse_elem(r_src);
    LinearDiffOp l = build_criterion(op, r);
    HypothesisReport h = hypothesis_check(op, r);
    if (as_json) {
        json j;
        j["input"] = json{{"r", r_src}, {"op", op_spec}};
        j["criterion"] = to_json(l);
        j["hypotheses"] = to_json(h);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "criterion for r = " << render(r) << " (sum_i c_i tau^i(g) = rhs):\n";
    for (size_t i = 0; i < l.coeffs.size(); ++i) os << "  c" << i << " = " << render(l.coeffs[i]) << "\n";
    os << "  rhs = " << render(l.rhs) << "\n";
    os << "hypotheses: r != 0: " << (h.r_nonzero ? "yes" : "no") << "; D(r) != 0: " << (h.dr_nonzero ? "yes" : "no");
    if (h.place_witness)
        os << "; witness place " << to_json(h.place_witness->place).get<std::string>() << " with v = "
           << h.place_witness->value;
    os << "\n";
    return os.str();
}

inline std::string cmd_solve(const std::vector<std::string>& coeff_srcs, const std::string& rhs_src,
                             const std::string& op_spec, bool as_json,
                             std::optional<std::pair<long, long>> window = std::nullopt) {
    LinearDiffOp l;
    l.op = parse_op_spec(op_spec);
    for (const auto& s : coeff_srcs) l.coeffs.push_back(parse_elem(s));
    l.rhs = rhs_src.empty() ? fe(0) : parse_elem(rhs_src);
    SolveOptions opts;
    opts.window = window;
    SolveOutcome out = solve_linear_qdifference(l, opts);
    if (as_json) {
        json j;
        j["operator"] = to_json(l);
        j["solve"] = to_json(out);
        return j.dump(2) + "\n";
    }
    return text_of(out);
}

inline std::string cmd_verify(const std::string& r_src, const std::string& g_src, const std::string& op_spec,
                              bool as_json) {
    DiffOp op = parse_op_spec(op_spec);
    FieldElem r = parse_elem(r_src);
    FieldElem g = parse_elem(g_src);
    ConstructionCheck vc = verify_construction(op, r, g);
    if (as_json) {
        json j;
        j["input"] = json{{"r", r_src}, {"g", g_src}, {"op", op_spec}};
        j["criterion_residual"] = render(vc.criterion_residual);
        j["criterion_holds"] = vc.criterion_residual.is_zero();
        j["commutation_defect_zero"] = vc.commutation_defect.is_zero();
        j["R"] = render_gen(vc.r_poly);
        return j.dump(2) + "\n";
    }
    std::ostringstream os;
    os << "criterion residual: " << render(vc.criterion_residual)
       << (vc.criterion_residual.is_zero() ? " (g solves the criterion)" : " (g does not solve the criterion)")
       << "\n";
    os << "R = " << render_gen(vc.r_poly) << "\n";
    os << "commutation defect D(tau Y) - s tau(DY) with DY = -R(Y): "
       << (vc.commutation_defect.is_zero() ? "0" : render_gen(vc.commutation_defect)) << "\n";
    return os.str();
}

inline std::string cmd_verdict(const std::string& matrix_src, const std::string& op_spec,
                               const VerdictOptions& opts, bool as_json, bool trace = false) {
    DiffOp op = parse_op_spec(op_spec);
    Mat2 a = parse_matrix(matrix_src);
    VerdictReport rep = run_verdict(a, op, opts);
    rep.matrix_src = matrix_src;
    rep.op_spec = op_spec;
    if (as_json) return to_json(rep).dump(2) + "\n";
    return text_of(rep, trace);
}

// Built-in q-Airy pipeline with every intermediate checked against the
// expected exact values.
inline std::string cmd_preset_qairy(bool as_json) {
    const std::string matrix_src = "[[-q*t,1],[1,0]]";
    const std::string op_spec = "qdilation";
    DiffOp op = parse_op_spec(op_spec);
    Mat2 a = parse_matrix(matrix_src);
    VerdictOptions opts;
    opts.assume_no_algebraic_solutions = true;
    VerdictReport rep = run_verdict(a, op, opts);
    rep.matrix_src = matrix_src;
    rep.op_spec = op_spec;

    auto expect = [](bool ok, const char* what) {
        if (!ok) throw internal_error(std::string("q-Airy preset check failed: ") + what);
    };
    const auto& tf = std::get<TietzeForm>(rep.normalization);
    expect(tf.e == parse_elem("-q^2*t"), "e = -q^2*t");
    expect(tf.r == parse_elem("1/(q^3*t^2)"), "r = 1/(q^3*t^2)");
    expect(tf.q == parse_matrix("[[-q*t,1],[-q*t,0]]"), "Q");
    expect(rep.criterion->coeffs.size() == 4, "criterion order 3");
    expect(rep.criterion->coeffs[3] == parse_elem("1/(q^4*t^2)"), "c3");
    expect(rep.criterion->coeffs[2] == parse_elem("1/(q^3*t^2)+q^2"), "c2");
    expect(rep.criterion->coeffs[1] == parse_elem("-(1/(q^4*t^2)+q)"), "c1");
    expect(rep.criterion->coeffs[0] == parse_elem("-1/(q^3*t^2)"), "c0");
    expect(rep.criterion->rhs == parse_elem("2/t"), "rhs = 2/t");
    expect(rep.hypotheses->place_witness && rep.hypotheses->place_witness->value == 2 &&
               rep.hypotheses->place_witness->place.kind == Place::Kind::infinity,
           "witness v_inf = 2");
    const auto* ns = std::get_if<NoSolution>(&*rep.solve);
    expect(ns != nullptr, "no rational solution");
    const auto* ind = std::get_if<IndicialObstruction>(&ns->cert);
    expect(ind && ind->place.kind == Place::Kind::infinity && ind->order == 1, "indicial order 1 at infinity");
    expect(ind->residual == qrat(-2), "residual -2");
    expect(replay_certificate(*rep.criterion, ns->cert), "certificate replays");
    expect(rep.verdict == Verdict::no_diff_algebraic_solution, "verdict");

    if (as_json) return to_json(rep).dump(2) + "\n";
    return text_of(rep, true);
}

} // namespace tietze

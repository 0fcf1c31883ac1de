// Classification of Riccati matrices into the forms F1-F4/FT and the
// reduction to Tietze normal form e*(1 r; 1 0), or a periodicity report
// when the reduction lands in F4.
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tietze/diff_ops.hpp"
#include "tietze/errors.hpp"
#include "tietze/mat2.hpp"

namespace tietze {

enum class FormClass { ft, f2, f3, f4, f1, degenerate };

inline const char* to_string(FormClass f) {
    switch (f) {
        case FormClass::ft: return "FT";
        case FormClass::f2: return "F2";
        case FormClass::f3: return "F3";
        case FormClass::f4: return "F4";
        case FormClass::f1: return "F1";
        case FormClass::degenerate: return "Degenerate";
    }
    return "?";
}

inline FormClass classify(const DiffOp& op, const Mat2& a) {
    const bool det_ok = !a.det().is_zero();
    if (det_ok && !a.c.is_zero() && a.d.is_zero() && a.a == a.c && !a.b.is_zero()) return FormClass::ft;
    if (a.c == fe(1) && a.d.is_zero() && !a.b.is_zero()) {
        if (!a.a.is_zero()) return FormClass::f2;
        return (tau(op, a.b) != a.b) ? FormClass::f3 : FormClass::f4;
    }
    if (det_ok && !a.c.is_zero()) return FormClass::f1;
    return FormClass::degenerate;
}

struct StepRecord {
    FormClass form; // class the step was applied to
    Mat2 p;
};

struct TietzeForm {
    FieldElem e, r;
    Mat2 q;
    std::vector<StepRecord> trace;
};

struct PeriodicForm {
    FieldElem r; // (tau B) B = r I, the equation y_2 = y up to the factor r
    std::vector<StepRecord> trace;
};

struct DegenerateForm {
    std::string reason;
};

using NormalizationResult = std::variant<TietzeForm, PeriodicForm, DegenerateForm>;

// One reduction step of the appropriate form; returns (P, (tau P) A P^{-1}).
inline std::pair<Mat2, Mat2> step(const DiffOp& op, const Mat2& a) {
    switch (classify(op, a)) {
        case FormClass::f1: {
            Mat2 p{a.c, a.d, fe(0), fe(1)};
            return {p, gauge(op, a, p)};
        }
        case FormClass::f2: {
            Mat2 p{a.a, a.b, a.a, fe(0)};
            return {p, gauge(op, a, p)};
        }
        case FormClass::f3: {
            if (a.b == fe(1)) throw internal_error("F3 matrix with b = 1 despite tau(b) != b");
            Mat2 p{fe(1), a.b, fe(1), fe(1)};
            return {p, gauge(op, a, p)};
        }
        default: throw wrong_form(std::string("no reduction step for class ") + to_string(classify(op, a)));
    }
}

inline NormalizationResult normalize(const DiffOp& op, const Mat2& a) {
    if (a.c.is_zero()) return DegenerateForm{"lower-left entry c is zero; not a Riccati matrix"};
    if (a.det().is_zero()) return DegenerateForm{"matrix is singular"};

    std::vector<StepRecord> trace;
    Mat2 cur = a;
    Mat2 q = Mat2::identity();
    for (int iter = 0; iter <= 3; ++iter) {
        FormClass cls = classify(op, cur);
        switch (cls) {
            case FormClass::ft: {
                FieldElem e = cur.a;
                FieldElem r = cur.b / cur.a;
                Mat2 target{e, e * r, e, fe(0)};
                if (!(gauge(op, a, q) == target)) throw internal_error("gauge identity violated by composed Q");
                return TietzeForm{e, r, q, trace};
            }
            case FormClass::f4: {
                FieldElem r = cur.b;
                Mat2 b2 = cocycle(op, cur, 2).entries;
                if (!(b2 == r * Mat2::identity())) throw internal_error("F4 matrix without B_2 = r I");
                return PeriodicForm{r, trace};
            }
            case FormClass::f1:
            case FormClass::f2:
            case FormClass::f3: {
                auto [p, next] = step(op, cur);
                trace.push_back({cls, p});
                q = p * q;
                cur = next;
                break;
            }
            case FormClass::degenerate:
                return DegenerateForm{"reduction reached a degenerate matrix"};
        }
    }
    throw internal_error("normalization did not terminate within 3 steps");
}

} // namespace tietze

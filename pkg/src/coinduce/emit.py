"""Deterministic TeX and structured (JSON) emitters for operators.

TeX schema (v1): one display equation per generator, terms ordered by
(coefficient-monomial degree, monomial, derivative multi-index); monomials
render as X_{j}^{k}, derivatives as \\partial_{X_{j}}, weight symbols as
\\lambda_{i}, matrix coefficients as pmatrix blocks.

Structured schema (v1): JSON with sorted keys.  Each generator carries a
list of terms {"coeff": ..., "mono": exponent vector, "deriv": index |
list | null, "h": component index | null}; "deriv" indexes hold the
differentiation directions (a single index for first-order coinduced
operators), "h" is used by the representation-independent phi/h emission.
Coefficients are {"num", "den"}, {"poly": [[[var, exp], ...], num, den]} or
{"matrix": [[coeff, ...], ...]}.  `parse_structured` inverts
`emit_structured` bit-exactly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Optional

from .decomp import Decomposition
from .realize import DiffOperator, HRepresentation, Matrix, weight_space
from .series import PhiH
from .superpoly import SuperPoly, VarSpace

STRUCTURED_FORMAT = "coinduce-operators v1"
PHIH_FORMAT = "coinduce-phi-h v1"


# -- TeX ------------------------------------------------------------------------


def tex_label(label: str) -> str:
    out = label
    for plain, tex in (("psi+", r"\psi^{+}"), ("psi-", r"\psi^{-}")):
        if out == plain:
            return tex
    if out.startswith(("e(", "f(", "h(")):
        return out[0] + "_{" + out[1:] + "}"
    if out.startswith("E[") and out.endswith("]"):
        return "E_{" + out[2:-1] + "}"
    if out.startswith("h") and out[1:].isdigit():
        return "h_{" + out[1:] + "}"
    return r"\mathrm{" + out.replace("_", r"\_") + "}"


def _tex_frac(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    sign = "-" if x < 0 else ""
    return sign + r"\tfrac{%d}{%d}" % (abs(x.numerator), x.denominator)


def _tex_weight_poly(p: SuperPoly) -> str:
    bits = []
    for mono in sorted(p.terms, key=lambda m: (len(m), m)):
        c = p.terms[mono]
        body = ""
        i = 0
        while i < len(mono):
            j = i
            while j < len(mono) and mono[j] == mono[i]:
                j += 1
            name = p.space.labels[mono[i]]
            sub = name[3:] if name.startswith("lam") else name
            body += r"\lambda_{%s}" % sub + (("^{%d}" % (j - i)) if j - i > 1 else "")
            i = j
        cs = _tex_frac(c)
        if body and cs == "1":
            cs = ""
        elif body and cs == "-1":
            cs = "-"
        bits.append((cs + body) or cs)
    out = ""
    for b in bits:
        out += b if not out or b.startswith("-") else "+" + b
    return out or "0"


def _tex_scalar(v) -> str:
    if isinstance(v, SuperPoly):
        s = _tex_weight_poly(v)
        return s if len(v.terms) == 1 else "(" + s + ")"
    return _tex_frac(v)


def _tex_matrix(m: Matrix) -> str:
    rows = [" & ".join(_tex_scalar(x) for x in r) for r in m.rows]
    return r"\begin{pmatrix}" + r" \\ ".join(rows) + r"\end{pmatrix}"


def _tex_mono(mono, space: VarSpace) -> str:
    out = ""
    i = 0
    while i < len(mono):
        j = i
        while j < len(mono) and mono[j] == mono[i]:
            j += 1
        out += "X_{%d}" % (mono[i] + 1) + (("^{%d}" % (j - i)) if j - i > 1 else "")
        i = j
    return out


def tex_operator(op: DiffOperator) -> str:
    if not op.terms:
        return "0"
    var = "X" if op.domain == "coinduced" else "P"
    bits = []
    for (mono, alpha) in sorted(op.terms, key=lambda k: (len(k[0]), k[0], len(k[1]), k[1])):
        mat = op.terms[(mono, alpha)]
        if op.vdim == 1:
            coeff = _tex_scalar(mat.rows[0][0])
        else:
            coeff = _tex_matrix(mat)
        body = _tex_mono(mono, op.space).replace("X_", var + "_")
        dpart = "".join(r"\partial_{%s_{%d}}" % (var, i + 1) for i in alpha)
        piece = body + dpart
        if piece and coeff == "1":
            coeff = ""
        elif piece and coeff == "-1":
            coeff = "-"
        bits.append((coeff + piece) or coeff)
    out = ""
    for b in bits:
        out += b if not out or b.startswith("-") else " + " + b
    return out


def emit_tex(
    ops: dict[int, DiffOperator],
    decomp: Decomposition,
    kind: str,
    rep_kind: str = "character",
) -> str:
    alg = decomp.alg
    sym = "T" if kind == "coinduced" else "I"
    lines = [
        "%% coinduce TeX v1",
        "%% algebra: " + alg.name,
        "%% module:  " + kind + " (" + rep_kind + ")",
        "%% decomposition: " + decomp.describe(),
        "",
    ]
    for i in sorted(ops):
        lines.append(r"\[")
        lines.append(sym + r"(" + tex_label(alg.label(i)) + ") = " + tex_operator(ops[i]))
        lines.append(r"\]")
    return "\n".join(lines) + "\n"


def emit_phi_h_tex(results: dict[int, PhiH], decomp: Decomposition) -> str:
    alg = decomp.alg
    lines = [
        "%% coinduce TeX v1 (phi/h series)",
        "%% algebra: " + alg.name,
        "%% decomposition: " + decomp.describe(),
        "",
    ]

    def series(p: SuperPoly, wrap) -> str:
        if not p.terms:
            return "0"
        bits = []
        for mono in sorted(p.terms, key=lambda m: (len(m), m)):
            vec = p.terms[mono]
            for b in sorted(vec.c):
                c = _tex_frac(vec.c[b])
                body = _tex_mono(mono, decomp.xspace) + wrap(b)
                if c == "1" and body:
                    c = ""
                elif c == "-1" and body:
                    c = "-"
                bits.append(c + body)
        out = ""
        for b in bits:
            out += b if not out or b.startswith("-") else " + " + b
        return out

    for i in sorted(results):
        r = results[i]
        lines.append(r"\[")
        lines.append(
            r"\varphi(X, %s)P = %s" % (tex_label(alg.label(i)), series(r.phiP, lambda b: tex_label(alg.label(b))))
        )
        lines.append(r"\]")
        lines.append(r"\[")
        lines.append(
            r"h(X, %s) = %s" % (tex_label(alg.label(i)), series(r.h, lambda b: tex_label(alg.label(b))))
        )
        lines.append(r"\]")
    return "\n".join(lines) + "\n"


# -- structured -----------------------------------------------------------------------


def _coeff_to_json(v):
    if isinstance(v, SuperPoly):
        terms = []
        for mono in sorted(v.terms, key=lambda m: (len(m), m)):
            c = v.terms[mono]
            pairs = []
            i = 0
            while i < len(mono):
                j = i
                while j < len(mono) and mono[j] == mono[i]:
                    j += 1
                pairs.append([mono[i], j - i])
                i = j
            terms.append([pairs, c.numerator, c.denominator])
        return {"poly": terms}
    v = Fraction(v)
    return {"num": v.numerator, "den": v.denominator}


def _coeff_from_json(obj, wspace: Optional[VarSpace]):
    if "poly" in obj:
        if wspace is None:
            raise ValueError("weight polynomial coefficient without a weight space")
        out = SuperPoly.zero(wspace)
        for pairs, num, den in obj["poly"]:
            mono = tuple(
                sorted(v for v, e in pairs for _ in range(e))
            )
            out.terms[mono] = Fraction(num, den)
        return out
    return Fraction(obj["num"], obj["den"])


def _mono_to_vector(mono, nvars: int) -> list[int]:
    out = [0] * nvars
    for i in mono:
        out[i] += 1
    return out


def _vector_to_mono(vec) -> tuple[int, ...]:
    out = []
    for i, e in enumerate(vec):
        out.extend([i] * e)
    return tuple(out)


def emit_structured(
    ops: dict[int, DiffOperator],
    decomp: Decomposition,
    kind: str,
    rep: HRepresentation,
) -> str:
    alg = decomp.alg
    nvars = len(decomp.xspace)
    gens = []
    for i in sorted(ops):
        op = ops[i]
        terms = []
        for (mono, alpha) in sorted(op.terms, key=lambda k: (len(k[0]), k[0], len(k[1]), k[1])):
            mat = op.terms[(mono, alpha)]
            if op.vdim == 1:
                coeff = _coeff_to_json(mat.rows[0][0])
            else:
                coeff = {
                    "matrix": [[_coeff_to_json(x) for x in r] for r in mat.rows],
                    "parity": mat.parity,
                }
            if kind == "coinduced":
                deriv = alpha[0] if alpha else None
            else:
                deriv = list(alpha) if alpha else None
            terms.append(
                {
                    "coeff": coeff,
                    "mono": _mono_to_vector(mono, nvars),
                    "deriv": deriv,
                    "h": None,
                }
            )
        gens.append({"label": alg.label(i), "index": i, "parity": alg.parity(i), "terms": terms})
    doc = {
        "format": STRUCTURED_FORMAT,
        "algebra": alg.name,
        "kind": kind,
        "representation": rep.kind,
        "vdim": rep.dim,
        "vparities": list(rep.vparities),
        "weights": list(rep.weights.labels) if rep.weights else None,
        "variables": list(decomp.xspace.labels),
        "parities": list(decomp.xspace.parities),
        "truncation": next((ops[i].truncation for i in ops), None),
        "generators": gens,
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def parse_structured(text: str, decomp: Decomposition) -> dict[int, DiffOperator]:
    doc = json.loads(text)
    if doc.get("format") != STRUCTURED_FORMAT:
        raise ValueError(f"unknown structured format {doc.get('format')!r}")
    kind = doc["kind"]
    space = decomp.xspace if kind == "coinduced" else decomp.pspace
    wspace = weight_space(doc["weights"]) if doc.get("weights") else None
    vdim = doc["vdim"]
    vparities = tuple(doc["vparities"])
    out: dict[int, DiffOperator] = {}
    for gen in doc["generators"]:
        op = DiffOperator(
            kind, space, vdim, vparities,
            parity=gen.get("parity", 0), truncation=doc.get("truncation"),
        )
        for t in gen["terms"]:
            mono = _vector_to_mono(t["mono"])
            d = t["deriv"]
            alpha = () if d is None else ((d,) if isinstance(d, int) else tuple(d))
            c = t["coeff"]
            if "matrix" in c:
                mat = Matrix(
                    [[_coeff_from_json(x, wspace) for x in r] for r in c["matrix"]],
                    parity=c.get("parity", 0),
                )
            else:
                entry = _coeff_from_json(c, wspace)
                mat = Matrix([[entry]], parity=0)
                if vdim != 1:
                    raise ValueError("scalar coefficient for a higher-dimensional module")
            op._put(mono, alpha, mat)
        out[gen["index"]] = op
    return out


def emit_phi_h_structured(results: dict[int, PhiH], decomp: Decomposition) -> str:
    """Representation-independent emission: phi-terms carry the derivative
    direction, h-terms carry the h-component index."""
    alg = decomp.alg
    nvars = len(decomp.xspace)
    gens = []
    for i in sorted(results):
        r = results[i]
        terms = []
        for mono in sorted(r.phiP.terms, key=lambda m: (len(m), m)):
            vec = r.phiP.terms[mono]
            for b in sorted(vec.c):
                c = Fraction(vec.c[b])
                terms.append(
                    {
                        "coeff": {"num": c.numerator, "den": c.denominator},
                        "mono": _mono_to_vector(mono, nvars),
                        "deriv": decomp.var_of_basis[b],
                        "h": None,
                    }
                )
        for mono in sorted(r.h.terms, key=lambda m: (len(m), m)):
            vec = r.h.terms[mono]
            for b in sorted(vec.c):
                c = Fraction(vec.c[b])
                terms.append(
                    {
                        "coeff": {"num": c.numerator, "den": c.denominator},
                        "mono": _mono_to_vector(mono, nvars),
                        "deriv": None,
                        "h": b,
                    }
                )
        gens.append(
            {
                "label": alg.label(i),
                "index": i,
                "truncation": r.truncation,
                "truncated": r.truncated,
                "terms": terms,
            }
        )
    doc = {
        "format": PHIH_FORMAT,
        "algebra": alg.name,
        "variables": list(decomp.xspace.labels),
        "parities": list(decomp.xspace.parities),
        "minus_basis": [alg.label(i) for i in decomp.minus],
        "generators": gens,
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"

"""Structure-constant text format (version 1).

The same schema serves as `load_custom` input and as the on-disk cache the
CLI writes for built-in constructors, so a cached algebra can be re-read,
hand-edited, or exported.  Layout:

    # coinduce-algebra v1
    name <display name>
    basis <label> <parity 0|1> <degree or ->
    ...
    bracket <label_i> <label_j> : <p/q>*<label_k> [+ <p/q>*<label_k> ...]

Basis order is line order; emitted brackets are the canonical i <= j ones in
index order, so writing is deterministic and round-trips byte-identically.
"""

from __future__ import annotations

from fractions import Fraction

from .liealg import AlgebraError, LieSuperAlgebra, load_custom

FORMAT_VERSION = 1
_HEADER = f"# coinduce-algebra v{FORMAT_VERSION}"


def dumps(alg: LieSuperAlgebra) -> str:
    lines = [_HEADER, f"name {alg.name}"]
    for b in alg.basis:
        deg = "-" if b.degree is None else str(b.degree)
        lines.append(f"basis {b.label} {b.parity} {deg}")
    for (i, j) in sorted(alg._sc):
        terms = alg._sc[(i, j)]
        rhs = " + ".join(
            f"{terms[k]}*{alg.label(k)}" for k in sorted(terms)
        )
        lines.append(f"bracket {alg.label(i)} {alg.label(j)} : {rhs}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> LieSuperAlgebra:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not (ln.startswith("#") and ln != _HEADER)]
    if not lines or lines[0] != _HEADER:
        raise AlgebraError(
            f"bad or missing header; expected {_HEADER!r}"
        )
    spec: dict = {"name": "custom", "basis": [], "brackets": []}
    for ln in lines[1:]:
        parts = ln.split()
        if parts[0] == "name":
            spec["name"] = ln[len("name ") :].strip()
        elif parts[0] == "basis":
            if len(parts) != 4:
                raise AlgebraError(f"malformed basis line: {ln!r}")
            _, label, parity, deg = parts
            spec["basis"].append(
                {
                    "label": label,
                    "parity": int(parity),
                    "degree": None if deg == "-" else int(deg),
                }
            )
        elif parts[0] == "bracket":
            head, _, rhs = ln.partition(":")
            hparts = head.split()
            if len(hparts) != 3 or not rhs.strip():
                raise AlgebraError(f"malformed bracket line: {ln!r}")
            terms: dict = {}
            # terms are joined by the padded separator " + " so that labels
            # like psi+ survive the split
            for piece in rhs.strip().split(" + "):
                coeff, _, label = piece.strip().partition("*")
                label = label.strip()
                if not label:
                    raise AlgebraError(f"malformed bracket term in line: {ln!r}")
                terms[label] = terms.get(label, Fraction(0)) + Fraction(coeff.strip())
            spec["brackets"].append(
                {"left": hparts[1], "right": hparts[2], "terms": terms}
            )
        else:
            raise AlgebraError(f"unknown directive in line: {ln!r}")
    return load_custom(spec)


def dump(alg: LieSuperAlgebra, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(alg))


def load(path) -> LieSuperAlgebra:
    with open(path) as fh:
        return loads(fh.read())

"""JSON wire formats.

Rationals travel as decimal-free strings "p/q" (q > 0, reduced) or "n".
Signs are the characters "+", "-", "0"; sign vectors and chirotope keys
are comma-joined with whitespace ignored.  Ascending always means the
order of the document's elements list.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .chirotope import Chirotope
from .osalg import OSAlgebra, OSElement
from .realization import RationalMatrix, chirotope_from_matrix
from .signvec import SignVector

SIGN_CHARS = {1: "+", 0: "0", -1: "-"}
CHAR_SIGNS = {"+": 1, "0": 0, "-": -1}


class InputError(ValueError):
    pass


def rational_to_str(x: Fraction) -> str:
    return str(Fraction(x))


def rational_from_str(s) -> Fraction:
    try:
        return Fraction(str(s).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {s!r}: {exc}") from None


def sign_vector_to_str(x: SignVector) -> str:
    return ",".join(SIGN_CHARS[s] for s in x.signs)


def sign_vector_from_str(ground: tuple, s: str) -> SignVector:
    parts = [p.strip() for p in s.split(",")]
    if len(parts) != len(ground):
        raise InputError(
            f"sign vector has {len(parts)} entries, expected {len(ground)}")
    try:
        return SignVector(ground, tuple(CHAR_SIGNS[p] for p in parts))
    except KeyError as exc:
        raise InputError(f"bad sign character {exc.args[0]!r}") from None


@dataclass
class ParsedInput:
    labels: tuple
    rank: int
    chi: Chirotope
    matrix: RationalMatrix | None


def parse_input(doc: dict) -> ParsedInput:
    if not isinstance(doc, dict):
        raise InputError("input document must be a JSON object")
    fmt = doc.get("format")
    if fmt not in ("chirotope", "matrix"):
        raise InputError('format must be "chirotope" or "matrix"')
    labels = doc.get("elements")
    if (not isinstance(labels, list) or not labels
            or len(set(labels)) != len(labels)):
        raise InputError("elements must be a non-empty list of unique labels")
    labels = tuple(str(e) for e in labels)
    if ("chirotope" in doc) == ("matrix" in doc):
        raise InputError("exactly one of chirotope/matrix must be present")

    if fmt == "matrix":
        rows = doc.get("matrix")
        if not isinstance(rows, list) or not rows:
            raise InputError("matrix must be a non-empty list of rows")
        parsed_rows = []
        for i, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != len(labels):
                raise InputError(f"matrix row {i} must list one entry per element")
            parsed_rows.append([rational_from_str(x) for x in row])
        mat = RationalMatrix.from_rows(labels, parsed_rows)
        try:
            chi = chirotope_from_matrix(mat)
        except ValueError as exc:
            raise InputError(str(exc)) from None
        rank = doc.get("rank", mat.nrows)
        if rank != mat.nrows:
            raise InputError(f"rank {rank} does not match {mat.nrows} matrix rows")
        return ParsedInput(labels, mat.nrows, chi, mat)

    rank = doc.get("rank")
    if not isinstance(rank, int) or rank < 1:
        raise InputError("rank must be a positive integer")
    table = doc.get("chirotope")
    if not isinstance(table, dict):
        raise InputError("chirotope must be an object of ascending keys")
    pos = {e: i for i, e in enumerate(labels)}
    values = {}
    for raw_key, raw_sign in table.items():
        parts = tuple(p.strip() for p in str(raw_key).split(","))
        if len(parts) != rank:
            raise InputError(f"key {raw_key!r} must list {rank} elements")
        for p in parts:
            if p not in pos:
                raise InputError(f"key {raw_key!r} names unknown element {p!r}")
        if len(set(parts)) != rank or list(parts) != sorted(parts, key=pos.get):
            raise InputError(f"key {raw_key!r} is not strictly ascending")
        if str(raw_sign) not in CHAR_SIGNS:
            raise InputError(f"bad sign {raw_sign!r} for key {raw_key!r}")
        values[parts] = CHAR_SIGNS[str(raw_sign)]
    # missing keys default to 0; validation reports loops/axiom failures
    chi = Chirotope.from_map(labels, rank, values)
    return ParsedInput(labels, rank, chi, None)


def input_to_document(parsed: ParsedInput) -> dict:
    if parsed.matrix is not None:
        return {
            "format": "matrix",
            "rank": parsed.rank,
            "elements": list(parsed.labels),
            "matrix": [[rational_to_str(x) for x in row]
                       for row in parsed.matrix.rows],
        }
    table = {}
    for key in combinations(parsed.labels, parsed.rank):
        table[",".join(key)] = SIGN_CHARS[parsed.chi.value(key)]
    return {
        "format": "chirotope",
        "rank": parsed.rank,
        "elements": list(parsed.labels),
        "chirotope": table,
    }


def oselement_to_document(x: OSElement) -> dict:
    terms = {}
    for key in sorted(x.terms, key=x.algebra.key_sort):
        terms[",".join(str(a) for a in key)] = rational_to_str(x.terms[key])
    return {"grade": x.grade, "terms": terms}


def oselement_from_document(alg: OSAlgebra, doc: dict) -> OSElement:
    grade = doc.get("grade")
    if not isinstance(grade, int) or grade < 0:
        raise InputError("grade must be a nonnegative integer")
    terms = {}
    for raw_key, raw_val in doc.get("terms", {}).items():
        key = tuple(p.strip() for p in str(raw_key).split(",")) if raw_key else ()
        value = rational_from_str(raw_val)
        if value == 0:
            raise InputError(f"terms must be nonzero (key {raw_key!r})")
        terms[key] = value
    try:
        return alg.from_terms(grade, terms)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def dumps_canonical(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"

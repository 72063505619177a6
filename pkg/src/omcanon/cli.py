"""Command-line surface and verification suites.

Exit codes: 0 success, 1 verification failure, 2 input/validation errors.
stdout carries exactly one JSON document; diagnostics go to stderr.
Set OMCANON_VALIDATE=off to skip exhaustive chirotope validation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import bases as bases_mod
from . import serialize as ser
from .chirotope import InvalidChirotope, validate_chirotope
from .forms import (algebra_of, canonical_form_from_triangulation,
                    canonical_form_tope, check_residue_axioms,
                    nonreduced_canonical_form)
from .om import NotATope, OrientedMatroid
from .realization import placing_triangulation


def _load(path: str) -> tuple:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ser.InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ser.InputError(
            f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    parsed = ser.parse_input(doc)
    validate = os.environ.get("OMCANON_VALIDATE", "").lower() != "off"
    if validate:
        validate_chirotope(parsed.chi)
    om = OrientedMatroid(parsed.chi, validate=False)
    return parsed, om


def cmd_info(args) -> int:
    parsed, om = _load(args.input)
    alg = algebra_of(om)
    m = om.underlying
    out = {
        "rank": om.rank,
        "elements": list(parsed.labels),
        "atoms": [sorted(a, key=parsed.labels.index) for a in m.atoms],
        "n_circuits": len(om.circuits),
        "n_cocircuits": len(om.cocircuits),
        "n_topes": len(om.topes),
        "os_dims": [alg.dim(k) for k in range(om.rank + 1)],
        "reduced_dims": [alg.reduced_dim(k) for k in range(om.rank)],
        "beta": m.beta(),
        "tutte": {f"{i},{j}": c for (i, j), c in sorted(m.tutte().items())},
    }
    sys.stdout.write(ser.dumps_canonical(out))
    return 0


def cmd_canonical(args) -> int:
    parsed, om = _load(args.input)
    tope = ser.sign_vector_from_str(parsed.labels, args.tope)
    if not om.is_tope(tope):
        nearest = sorted(om.topes, key=lambda t: (
            sum(a != b for a, b in zip(t.signs, tope.signs)), t.sort_key()))
        names = ", ".join(ser.sign_vector_to_str(t) for t in nearest[:3])
        raise ser.InputError(f"not a tope; nearest topes: {names}")
    if args.nonreduced:
        element = nonreduced_canonical_form(om, tope)
    else:
        element = canonical_form_tope(om, tope)
    sys.stdout.write(ser.dumps_canonical(ser.oselement_to_document(element)))
    return 0


def cmd_basis(args) -> int:
    parsed, om = _load(args.input)
    if not 0 <= args.grade <= om.rank - 1:
        raise ser.InputError(f"grade must be in 0..{om.rank - 1}")
    flag = bases_mod.build_flag(om, seed=args.seed)
    pairs = bases_mod.graded_basis(flag, om.rank - args.grade)
    out = {
        "grade": args.grade,
        "basis": [{"tope": ser.sign_vector_to_str(t),
                   "element": ser.oselement_to_document(f)}
                  for t, f in pairs],
    }
    sys.stdout.write(ser.dumps_canonical(out))
    return 0


def cmd_aomoto(args) -> int:
    parsed, om = _load(args.input)
    base = args.base if args.base is not None else parsed.labels[0]
    if base not in parsed.labels:
        raise ser.InputError(f"unknown base element {base!r}")
    rest = [e for e in parsed.labels if e != base]
    parts = [p.strip() for p in args.weights.split(",")]
    if len(parts) != len(rest):
        raise ser.InputError(
            f"expected {len(rest)} weights for elements {rest}")
    weights = {e: ser.rational_from_str(p) for e, p in zip(rest, parts)}
    report = bases_mod.aomoto(om, weights, base=base, seed=args.seed)
    out = {
        "dim_H": report.dim_h,
        "beta": report.beta,
        "dim_matches_beta": report.dim_matches_beta,
        "v_spans": report.v_spans,
        "is_generic": report.is_generic,
        "bounded_topes": [ser.sign_vector_to_str(t)
                          for t in report.bounded_topes],
        "basis_images": [ser.oselement_to_document(f)
                         for f in report.basis_forms],
    }
    sys.stdout.write(ser.dumps_canonical(out))
    return 0


# ---- verification suites ---------------------------------------------------


def _timed(name, fn, checks):
    start = time.perf_counter()
    try:
        detail = fn()
        passed = True
    except Exception as exc:  # noqa: BLE001 - reported, not swallowed
        detail = f"{type(exc).__name__}: {exc}"
        passed = False
    entry = {"name": name, "passed": passed,
             "seconds": round(time.perf_counter() - start, 6)}
    if isinstance(detail, str) and detail:
        entry["detail"] = detail
    checks.append(entry)


def _suite_residues(parsed, om, seed, checks):
    for tope in om.sorted_topes():
        def run(t=tope):
            report = check_residue_axioms(om, t)
            bad = [str(a) for a, ok in report.items() if not ok]
            if bad:
                raise AssertionError(f"failing atoms: {bad}")
        _timed(f"residues:{ser.sign_vector_to_str(tope)}", run, checks)


def _suite_simplex(parsed, om, seed, checks):
    ext = bases_mod.bounded_extension(om, seed=seed)

    def run():
        for basis in om.chi.nonzero_keys:
            result = bases_mod.simplex_identity_check(om, ext, basis)
            if not result["passed"]:
                raise AssertionError(f"basis {basis} fails")
        return f"{len(om.chi.nonzero_keys)} bases checked"
    _timed("simplex:all-bases", run, checks)


def _suite_triangulation(parsed, om, seed, checks):
    if parsed.matrix is None:
        checks.append({"name": "triangulation", "passed": True, "seconds": 0.0,
                       "detail": "skipped: requires a matrix realization"})
        return
    seen = set()
    topes = [t for t in om.sorted_topes()
             if t not in seen and not seen.update((t, -t))]

    def orders():
        import random
        rng = random.Random(seed)
        labels = list(parsed.labels)
        yield labels
        for _ in range(4):
            shuffled = labels[:]
            rng.shuffle(shuffled)
            yield shuffled

    for tope in topes:
        def run(t=tope):
            mat = parsed.matrix.reorient(t)
            chi = om.chi.reorient(t)
            expected = canonical_form_tope(om, t)
            for order in orders():
                tri = placing_triangulation(mat, order)
                value = canonical_form_from_triangulation(chi, tri)
                if value != expected:
                    raise AssertionError(f"insertion order {order} disagrees")
        _timed(f"triangulation:{ser.sign_vector_to_str(tope)}", run, checks)


def _suite_bases(parsed, om, seed, checks):
    alg = algebra_of(om)

    def run():
        flag = bases_mod.build_flag(om, seed=seed)
        for k in range(1, om.rank + 1):
            pairs = bases_mod.graded_basis(flag, k)  # asserts full rank
            if len(pairs) != alg.reduced_dim(om.rank - k):
                raise AssertionError(f"dimension mismatch at level {k}")
            for _, f in pairs:
                if not f.is_integral:
                    raise AssertionError("non-integral basis coordinates")
        return f"{om.rank} levels checked"
    _timed("bases:flag-levels", run, checks)


def _suite_aomoto(parsed, om, seed, checks):
    def run():
        base = parsed.labels[0]
        t0 = om.bounded_topes(base)
        beta = om.underlying.beta()
        if len(t0) != beta:
            raise AssertionError(f"|T^0| = {len(t0)} but beta = {beta}")
        for weights in bases_mod.sample_weight_vectors(om, base, seed=seed):
            report = bases_mod.aomoto(om, weights, base=base, seed=seed)
            if report.is_generic:
                return f"generic weights found; dim_H = {report.dim_h}"
        raise AssertionError("no generic weight vector among 5 samples")
    _timed("aomoto:bounded-basis", run, checks)


_SUITES = {
    "residues": _suite_residues,
    "simplex": _suite_simplex,
    "triangulation": _suite_triangulation,
    "bases": _suite_bases,
    "aomoto": _suite_aomoto,
}


def cmd_verify(args) -> int:
    parsed, om = _load(args.input)
    names = list(_SUITES) if args.suite == "all" else [args.suite]
    checks: list = []
    for name in names:
        _SUITES[name](parsed, om, args.seed, checks)
    passed = all(c["passed"] for c in checks)
    out = {"suite": args.suite, "passed": passed, "checks": checks}
    sys.stdout.write(ser.dumps_canonical(out))
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omcanon",
        description="Exact canonical forms of oriented-matroid topes "
                    "in Orlik-Solomon algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="summary invariants of an input")
    p.add_argument("--input", required=True)
    p.set_defaults(fn=cmd_info)

    p = sub.add_parser("canonical", help="canonical form of a tope")
    p.add_argument("--input", required=True)
    p.add_argument("--tope", required=True,
                   help='sign string such as "+,+,-,-"')
    p.add_argument("--nonreduced", action="store_true",
                   help="emit the top-grade form instead of the reduced one")
    p.set_defaults(fn=cmd_canonical)

    p = sub.add_parser("basis", help="canonical-form basis of a reduced grade")
    p.add_argument("--input", required=True)
    p.add_argument("--grade", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_basis)

    p = sub.add_parser("aomoto", help="weighted top-degree cohomology report")
    p.add_argument("--input", required=True)
    p.add_argument("--weights", required=True,
                   help='comma list of rationals such as "1,2,-3/2"')
    p.add_argument("--base", default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_aomoto)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--input", required=True)
    p.add_argument("--suite", default="all",
                   choices=["residues", "simplex", "triangulation",
                            "bases", "aomoto", "all"])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=cmd_verify)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ser.InputError, InvalidChirotope, NotATope, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> int:
    return run()


if __name__ == "__main__":
    sys.exit(run())

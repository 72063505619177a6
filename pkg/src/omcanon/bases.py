"""Canonical-form bases, truncation flags, structure constants, and the
Aomoto complex with its bounded-tope cohomology basis."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .forms import algebra_of, canonical_form_tope
from .om import Extension, OrientedMatroid
from .osalg import OSAlgebra, OSElement
from .signvec import SignVector


def perturbation_signature(om: OrientedMatroid, base=None) -> tuple:
    """(base, +) then the lexicographically smallest basis completion, signed -.

    Realizes a general perturbation of the base element; the minus signs
    push the extension to the far side of the base chamber so that the
    0-bounded topes stay bounded for the extension on the fixtures.
    """
    base = om.ground[0] if base is None else base
    chosen = [base]
    for e in om.ground:
        if len(chosen) == om.rank:
            break
        if e != base and om.underlying.rank_of(set(chosen) | {e}) > len(chosen):
            chosen.append(e)
    if len(chosen) < om.rank:
        raise ValueError("base element completes to no basis")
    return ((base, 1),) + tuple((e, -1) for e in chosen[1:])


def random_signature(om: OrientedMatroid, rng: random.Random, base=None) -> tuple:
    """A random basis through the base element, base signed +, rest random."""
    base = om.ground[0] if base is None else base
    elements = [e for e in om.ground if e != base]
    rng.shuffle(elements)
    chosen = [base]
    for e in elements:
        if len(chosen) == om.rank:
            break
        if om.underlying.rank_of(set(chosen) | {e}) > len(chosen):
            chosen.append(e)
    return ((base, 1),) + tuple((e, rng.choice((1, -1))) for e in chosen[1:])


def bounded_extension(om: OrientedMatroid, base=None, seed: int = 0,
                      attempts: int = 32) -> Extension:
    """A general perturbation of base with T^0 contained in T^ext.

    The inclusion is asserted at runtime; on failure, seeded random
    signatures are retried and exhaustion is an error, never silent.
    """
    base = om.ground[0] if base is None else base
    t0 = om.bounded_topes(base)
    rng = random.Random(seed)
    last = None
    for attempt in range(attempts):
        signature = (perturbation_signature(om, base) if attempt == 0
                     else random_signature(om, rng, base))
        ext = om.lex_extension(signature)
        if t0 <= ext.bounded_topes():
            return ext
        last = signature
    raise RuntimeError(
        f"no perturbation of {base!r} kept the bounded topes bounded after "
        f"{attempts} attempts (last signature {last})")


def tq_basis(om: OrientedMatroid, ext: Extension) -> list:
    """[(tope, form)] over the extension-bounded topes; a basis by rank check."""
    alg = algebra_of(om)
    topes = sorted(ext.bounded_topes(), key=SignVector.sort_key)
    pairs = [(t, canonical_form_tope(om, t)) for t in topes]
    expected = alg.reduced_dim(om.rank - 1)
    vectors = [alg.dense(f, om.rank - 1) for _, f in pairs]
    if len(pairs) != expected or len(linalg.greedy_independent(vectors)) != expected:
        raise RuntimeError(
            "internal invariant violation: bounded-tope forms are not a "
            f"basis (got {len(pairs)} topes for dimension {expected})")
    return pairs


def simplex_identity_check(om: OrientedMatroid, ext: Extension, basis) -> dict:
    """Both sides of the simplex expansion over a basis B.

    Left: (-1)^(|C^-|-1) chi(B) d e_B for the fundamental circuit C of
    B u q.  Right: the sum of the canonical forms of the topes agreeing
    with C on B.  Returns {"passed": bool, "lhs": ..., "rhs": ...}.
    """
    alg = algebra_of(om)
    basis = tuple(sorted(basis, key=lambda e: om.ground.index(e)))
    circuit = ext.fundamental_circuit(basis)
    sign = (-1) ** (len(circuit.negative_part) - 1)
    lhs = alg.boundary(alg.monomial(basis)).scale(sign * om.chi.value(basis))
    rhs = alg.zero(om.rank - 1)
    members = []
    for tope in om.topes:
        if all(tope.value(e) == circuit.value(e) for e in basis):
            members.append(tope)
            rhs = rhs + canonical_form_tope(om, tope)
    return {"passed": lhs == rhs, "lhs": lhs, "rhs": rhs,
            "topes": sorted(members, key=SignVector.sort_key)}


@dataclass(frozen=True)
class FlagStage:
    om: OrientedMatroid
    ext: Extension


@dataclass(frozen=True)
class Flag:
    stages: tuple  # FlagStage per rank r, r-1, ..., 1

    @property
    def base_om(self) -> OrientedMatroid:
        return self.stages[0].om


def build_flag(om: OrientedMatroid, seed: int = 0, attempts: int = 32) -> Flag:
    """Successive general truncations down to rank 1, ground set preserved.

    Every stage holds its extension witness; generality certificates are
    re-validated stage by stage and looplessness failures retry with
    seeded random signatures.
    """
    stages = []
    current = om
    rng = random.Random(seed)
    for _ in range(om.rank):
        ext = None
        for attempt in range(attempts):
            signature = (perturbation_signature(current) if attempt == 0
                         else random_signature(current, rng))
            try:
                ext = current.lex_extension(signature)
                break
            except (ValueError, RuntimeError):
                continue
        if ext is None:
            raise RuntimeError(f"no general extension found after {attempts} "
                               f"attempts at rank {current.rank}")
        stages.append(FlagStage(current, ext))
        if current.rank > 1:
            nxt = ext.om_ext.contract(ext.label)
            if set(nxt.ground) != set(current.ground):
                raise RuntimeError("internal invariant violation: truncation "
                                   "changed the ground set")
            current = nxt
    return Flag(tuple(stages))


def transport_to_base(base_alg: OSAlgebra, form: OSElement) -> OSElement:
    """Re-express a truncation's reduced form inside the base algebra.

    The form is lifted through the (iso) boundary of its own top grade and
    re-evaluated as a combination of d e_T over the identified ground set.
    """
    stage_alg = form.algebra
    if stage_alg is base_alg:
        return form
    lift = stage_alg.inverse_boundary(form)
    out = base_alg.zero(form.grade)
    for key, c in lift.terms.items():
        out = out + base_alg.boundary(base_alg.monomial(key)).scale(c)
    return out


def graded_basis(flag: Flag, k: int) -> list:
    """[(tope, form)] basis of the reduced algebra in degree rank - k.

    Forms of the k-bounded topes are computed in the (k-1)-st truncation
    and transported to the base algebra; exact full rank is asserted.
    """
    if not 1 <= k <= len(flag.stages):
        raise ValueError(f"flag level must be in 1..{len(flag.stages)}")
    base_alg = algebra_of(flag.base_om)
    stage = flag.stages[k - 1]
    grade = flag.base_om.rank - k
    topes = sorted(stage.ext.bounded_topes(), key=SignVector.sort_key)
    pairs = [(t, transport_to_base(base_alg,
                                   canonical_form_tope(stage.om, t)))
             for t in topes]
    expected = base_alg.reduced_dim(grade)
    vectors = [base_alg.dense(f, grade) for _, f in pairs]
    if len(pairs) != expected or len(linalg.greedy_independent(vectors)) != expected:
        raise RuntimeError(
            "internal invariant violation: k-bounded forms are not a basis "
            f"at level {k} (got {len(pairs)} for dimension {expected})")
    return pairs


def expand_in_basis(x: OSElement, basis: list) -> list:
    """Exact coordinates; raises if x lies outside the span."""
    forms = [f for _, f in basis] if basis and isinstance(basis[0], tuple) else basis
    coords = x.algebra.coordinates_in(x, forms)
    if coords is None:
        raise RuntimeError("internal invariant violation: element outside "
                           "the span of the given basis")
    return coords


def structure_constants(src_basis: list, target_basis: list,
                        i: int, j: int) -> list:
    """Coordinates of src[i] wedge src[j] in the target graded basis."""
    forms = [f for _, f in src_basis] if isinstance(src_basis[0], tuple) else src_basis
    product = forms[i].wedge(forms[j])
    if product.is_zero:
        return [Fraction(0)] * (len(target_basis) if target_basis else 0)
    return expand_in_basis(product, target_basis)


@dataclass
class AomotoReport:
    dim_h: int
    beta: int
    dim_matches_beta: bool
    v_spans: bool
    is_generic: bool
    bounded_topes: list
    extension_bounded_topes: list
    basis_forms: list  # canonical forms of the 0-bounded topes
    weights: dict


def aomoto(om: OrientedMatroid, weights: dict, base=None,
           seed: int = 0) -> AomotoReport:
    """Cohomology of the weighted degree-one multiplication in top degree.

    dim_h is the exact corank of the multiplication map into the top
    reduced grade; genericity additionally requires the 0-bounded forms to
    complement its image (checked through the extension-bounded splitting,
    whose inclusion of bounded topes is asserted at runtime).
    """
    base = om.ground[0] if base is None else base
    alg = algebra_of(om)
    r = om.rank
    expected_keys = {e for e in om.ground if e != base}
    if set(weights) != expected_keys:
        raise ValueError(f"weights must cover exactly {sorted(map(str, expected_keys))}")

    omega = alg.zero(1)
    for e, lam in weights.items():
        omega = omega + (alg.monomial((e,)) - alg.monomial((base,))).scale(Fraction(lam))
    if not alg.boundary(omega).is_zero:
        raise RuntimeError("internal invariant violation: weight form is "
                           "not boundary-closed")

    top = alg.reduced_basis(r - 1)
    image_cols: list = []
    if r >= 2:
        for b in alg.reduced_basis(r - 2):
            image_cols.append(alg.dense(omega.wedge(b), r - 1))
    image_rank = linalg.rank(linalg.columns_matrix(image_cols)) if image_cols else 0
    dim_h = len(top) - image_rank

    beta = om.underlying.beta()
    ext = bounded_extension(om, base, seed=seed)
    t0 = sorted(om.bounded_topes(base), key=SignVector.sort_key)
    tq = sorted(ext.bounded_topes(), key=SignVector.sort_key)

    v_forms = [canonical_form_tope(om, t) for t in t0]
    v_cols = [alg.dense(f, r - 1) for f in v_forms]
    combined = linalg.columns_matrix(image_cols + v_cols) if (image_cols or v_cols) else []
    combined_rank = linalg.rank(combined) if combined else 0
    v_spans = (combined_rank == len(top)
               and image_rank + len(v_cols) == len(top))

    dim_matches_beta = dim_h == beta
    return AomotoReport(
        dim_h=dim_h,
        beta=beta,
        dim_matches_beta=dim_matches_beta,
        v_spans=v_spans,
        is_generic=dim_matches_beta and v_spans,
        bounded_topes=t0,
        extension_bounded_topes=tq,
        basis_forms=v_forms,
        weights=dict(weights),
    )


def aomoto_degree_ranks(om: OrientedMatroid, weights: dict,
                        base=None) -> list:
    """Diagnostic: ranks of the weighted multiplication in every degree.

    Entry k is the exact rank of the map from reduced degree k to k+1.
    Informational only; no pass/fail contract is attached to degrees below
    the top one.
    """
    base = om.ground[0] if base is None else base
    alg = algebra_of(om)
    omega = alg.zero(1)
    for e, lam in weights.items():
        omega = omega + (alg.monomial((e,)) - alg.monomial((base,))).scale(Fraction(lam))
    ranks = []
    for k in range(om.rank - 1):
        cols = [alg.dense(omega.wedge(b), k + 1) for b in alg.reduced_basis(k)]
        ranks.append(linalg.rank(linalg.columns_matrix(cols)) if cols else 0)
    return ranks


def sample_weight_vectors(om: OrientedMatroid, base=None, seed: int = 0,
                          count: int = 5) -> list:
    """Seeded rational weight candidates for genericity hunting."""
    base = om.ground[0] if base is None else base
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append({e: Fraction(rng.randint(1, 9), rng.randint(1, 3))
                    * rng.choice((1, -1))
                    for e in om.ground if e != base})
    return out

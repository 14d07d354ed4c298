"""Specialization parameters, basic-set case dispatch, and verification of
canonical-basic-set conditions against ingested decomposition matrices.

A specialization is described purely arithmetically: the characteristic of
the coefficient field, the multiplicative order m of xi, and the two weight
integers (a, b).  All conditions (xi^a = 1, xi^b = -1, vanishing of the
weight product f_n) are decided by exponent arithmetic modulo m; -1 is a
power of xi exactly when m is even (characteristic 2 is refused).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Union

from . import fock
from .fock import ARIKI, FLOTW, FockParams, Multipartition
from .schur import (Partition, bipartitions, check_partition, dominance_leq_multi,
                    e_regular, partitions, standard_tableaux)


class CharTwoUnsupported(ValueError):
    """Type-B/D dispatch is stated away from characteristic 2."""


class CaseNotCovered(ValueError):
    """No dispatch case covers the requested parameters."""


class OddOrderUnsupported(ValueError):
    """Type D needs xi of even order."""


class MissingAlpha(ValueError):
    """Every decomposition-matrix row needs its alpha invariant."""


@dataclass(frozen=True)
class SpecParams:
    """Field characteristic, order of xi, and the weight integers (a, b)."""

    char: int
    xi_order: int
    a: int
    b: int

    def __post_init__(self):
        if self.char < 0 or self.char == 1 or \
                (self.char > 1 and any(self.char % d == 0
                                       for d in range(2, int(self.char ** 0.5) + 1))):
            raise ValueError("char must be 0 or a prime")
        if self.xi_order < 1:
            raise ValueError("xi_order must be >= 1")
        if self.a < 0 or self.b < 0:
            raise ValueError("weights must be nonnegative")

    def xi_power_is_one(self, k: int) -> bool:
        return k % self.xi_order == 0

    def xi_power_is_minus_one(self, k: int) -> bool:
        m = self.xi_order
        if self.char == 2:
            return self.xi_power_is_one(k)
        return m % 2 == 0 and k % m == m // 2


def e_value(params: SpecParams) -> Optional[int]:
    """Smallest i >= 2 with 1 + xi^a + ... + xi^((i-1)a) = 0, or None.

    When xi^a != 1 this is the multiplicative order of xi^a; when xi^a = 1
    the sum is i itself, so it vanishes first at i = char (never, in
    characteristic zero).
    """
    m, a = params.xi_order, params.a
    if not params.xi_power_is_one(a):
        return m // math.gcd(m, a)
    return params.char if params.char > 0 else None


def fn_zero(params: SpecParams, n: int) -> tuple[bool, Optional[int]]:
    """Does the product of (xi^b + xi^(a i)) over |i| <= n-1 vanish?

    Returns (flag, d) where d satisfies xi^(b + a d) = -1 with |d| <= n-1,
    smallest in absolute value (positive on ties), when the flag is set.
    """
    if params.char == 2:
        raise CharTwoUnsupported("the product criterion is stated away from char 2")
    for d in sorted(range(-(n - 1), n), key=lambda x: (abs(x), -x)):
        if params.xi_power_is_minus_one(params.b + params.a * d):
            return True, d
    return False, None


def basic_set_sym(params: SpecParams, n: int) -> list[Partition]:
    """e-regular partitions of n (the symmetric-group basic set)."""
    if params.a <= 0:
        raise ValueError("requires a > 0")
    e = e_value(params)
    return [nu for nu in partitions(n) if e_regular(nu, e)]


def _kleshchev_set(params: SpecParams, n: int) -> list[Multipartition]:
    """Simple-module labels through the component-order crystal.

    Needs the root-of-unity translation: l = order of xi^a and a shift d
    with xi^(b + a d) = -1; the two charges are then (0, d mod l).
    """
    m, a = params.xi_order, params.a
    l = m // math.gcd(m, a)
    zero, d = fn_zero(params, n)
    if not zero or d is None:
        raise CaseNotCovered("no crystal translation without a vanishing factor")
    p = FockParams(l=l, r=2, u=(0, d % l), node_order=ARIKI)
    return sorted(fock.uryu_set(p, n))


def _specht_index_set(params: SpecParams, n: int) -> list[Multipartition]:
    """The Specht-module indexing set of simple modules for type B."""
    e = e_value(params)
    zero, _ = fn_zero(params, n)
    if not zero:
        return [lam for lam in bipartitions(n)
                if e_regular(lam[0], e) and e_regular(lam[1], e)]
    if params.xi_power_is_one(params.a):
        # xi^b = -1 forced here: simples extend the symmetric-group ones
        return [(lam1, ()) for lam1 in partitions(n) if e_regular(lam1, e)]
    return _kleshchev_set(params, n)


def basic_set_B(params: SpecParams, n: int) -> tuple[list[Multipartition], str]:
    """Canonical basic set for type B_n with weights (a, b), with provenance.

    Dispatch: (1) asymptotic b > (n-1)a > 0; (2) nonvanishing product
    criterion; (3) xi^a = 1 and xi^b = -1; (4) equal weights a = b with the
    product vanishing; (5) b = 0 with the product vanishing.  Anything else
    is not covered and raises.
    """
    if params.char == 2:
        raise CharTwoUnsupported("type-B dispatch is stated away from char 2")
    a, b, m = params.a, params.b, params.xi_order

    if a > 0 and b > (n - 1) * a:
        return _specht_index_set(params, n), "asymptotic/DJM"

    zero, _ = fn_zero(params, n)
    if not zero:
        e = e_value(params)
        out = [lam for lam in bipartitions(n)
               if e_regular(lam[0], e) and e_regular(lam[1], e)]
        return out, "DJ-Morita"

    if params.xi_power_is_one(a) and params.xi_power_is_minus_one(b):
        e = e_value(params)
        out = [(lam1, ()) for lam1 in partitions(n) if e_regular(lam1, e)]
        return out, "DJ-extension"

    if not params.xi_power_is_one(a):
        l = m // math.gcd(m, a)
        if a == b and a > 0:
            # vanishing product forces -1 into <xi^a>, so l is even
            p = FockParams(l=l, r=2, u=(1, l // 2), node_order=FLOTW)
            return sorted(fock.uryu_set(p, n)), "Jacon-equal"
        if b == 0 and a > 0:
            p = FockParams(l=l, r=2, u=(0, l // 2), node_order=FLOTW)
            return sorted(fock.uryu_set(p, n)), "Jacon-b0"

    raise CaseNotCovered(
        f"no dispatch case for char={params.char}, m={m}, a={a}, b={b}, n={n}")


TypeDLabel = tuple  # ("pair", lam, mu) with lam != mu, or ("split", lam, "+"/"-")


def basic_set_D(params: SpecParams, n: int) -> list[TypeDLabel]:
    """Canonical basic set for type D_n from the b = 0 crystal set.

    Unordered pairs with distinct components, plus two split labels for each
    (l/2)-regular partition of n/2 when n is even.
    """
    if params.char == 2:
        raise CharTwoUnsupported("type-D dispatch is stated away from char 2")
    l = params.xi_order
    if l % 2 != 0 or l < 2:
        raise OddOrderUnsupported("type D needs xi of even order")
    p = FockParams(l=l, r=2, u=(0, l // 2), node_order=FLOTW)
    labels: list[TypeDLabel] = []
    seen = set()
    for lam in sorted(fock.uryu_set(p, n)):
        l1, l2 = lam
        if l1 == l2:
            continue
        key = frozenset((l1, l2)) if l1 != l2 else (l1,)
        if key in seen:
            continue
        seen.add(key)
        first, second = max(l1, l2), min(l1, l2)
        labels.append(("pair", first, second))
    if n % 2 == 0:
        for lam in partitions(n // 2):
            if e_regular(lam, l // 2):
                labels.append(("split", lam, "+"))
                labels.append(("split", lam, "-"))
    return labels


# ---------------------------------------------------------------------------
# decomposition matrices and verification
# ---------------------------------------------------------------------------

Label = Union[Multipartition, Partition, str]


@dataclass
class DecompMatrix:
    """An ingested decomposition matrix with row alpha-invariants."""

    labels: list[Label]
    alpha: list[int]
    entries: list[list[int]]
    dims: Optional[list[Optional[int]]] = None
    meta: Optional[dict] = None

    def __post_init__(self):
        if len(self.labels) != len(self.entries) or len(self.alpha) != len(self.labels):
            raise ValueError("row data lengths disagree")
        if self.dims is not None and len(self.dims) != len(self.labels):
            raise ValueError("row data lengths disagree")
        widths = {len(row) for row in self.entries}
        if len(widths) != 1:
            raise ValueError("ragged entry rows")
        (self.ncols,) = widths
        for j in range(self.ncols):
            if all(row[j] == 0 for row in self.entries):
                raise ValueError(f"column {j} has no nonzero entry")

    @classmethod
    def from_json_dict(cls, data: dict) -> "DecompMatrix":
        rows = data["rows"]
        labels: list[Label] = []
        alpha: list[int] = []
        dims: list[Optional[int]] = []
        entries: list[list[int]] = []
        for row in rows:
            lab = row["label"]
            if isinstance(lab, str):
                labels.append(lab)
            elif lab and isinstance(lab[0], list):
                labels.append(tuple(check_partition(c) for c in lab))
            else:
                labels.append(check_partition(lab))
            if "alpha" not in row:
                raise MissingAlpha(f"row {lab} lacks alpha")
            alpha.append(int(row["alpha"]))
            dims.append(row.get("dim"))
            entries.append([int(x) for x in row["entries"]])
        meta = {k: data[k] for k in ("type", "n", "a", "b", "xi_order", "char")
                if k in data}
        has_dims = any(d is not None for d in dims)
        return cls(labels, alpha, entries, dims if has_dims else None, meta)

    @classmethod
    def load(cls, path) -> "DecompMatrix":
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh))


@dataclass
class BasicSetResult:
    exists: bool
    assignment: Optional[list[int]] = None       # column -> row index
    breve_alpha: Optional[list[int]] = None      # per column
    witness_column: Optional[int] = None
    witness_rows: Optional[list[int]] = None

    def selected_labels(self, matrix: DecompMatrix) -> list[Label]:
        assert self.exists and self.assignment is not None
        order = sorted(range(len(self.assignment)),
                       key=lambda j: (self.breve_alpha[j], str(matrix.labels[self.assignment[j]])))
        return [matrix.labels[self.assignment[j]] for j in order]

    def to_json_dict(self, matrix: DecompMatrix) -> dict:
        def render(lab):
            if isinstance(lab, str):
                return lab
            if lab and isinstance(lab[0], tuple):
                return [list(c) for c in lab]
            return list(lab)

        if self.exists:
            return {
                "verdict": "exists",
                "labels": [render(l) for l in self.selected_labels(matrix)],
                "breve_alpha": list(self.breve_alpha or []),
            }
        return {
            "verdict": "fails",
            "witness_column": self.witness_column,
            "witness_rows": [render(matrix.labels[i]) for i in self.witness_rows or []],
        }


def verify_decomp(matrix: DecompMatrix) -> BasicSetResult:
    """Check the unitriangular alpha-selection conditions columnwise.

    Each column must meet exactly one row of minimal alpha among its nonzero
    entries, with multiplicity one there, and the induced column-to-row map
    must be injective.  The first violation is reported with its candidates.
    """
    assignment: list[int] = []
    breve: list[int] = []
    for j in range(matrix.ncols):
        support = [i for i in range(len(matrix.labels)) if matrix.entries[i][j] != 0]
        amin = min(matrix.alpha[i] for i in support)
        cands = [i for i in support if matrix.alpha[i] == amin]
        if len(cands) != 1 or matrix.entries[cands[0]][j] != 1:
            return BasicSetResult(False, witness_column=j, witness_rows=cands)
        assignment.append(cands[0])
        breve.append(amin)
    if len(set(assignment)) != len(assignment):
        dup = next(i for i in assignment if assignment.count(i) > 1)
        cols = [j for j, i in enumerate(assignment) if i == dup]
        return BasicSetResult(False, witness_column=cols[1], witness_rows=[dup])
    return BasicSetResult(True, assignment=assignment, breve_alpha=breve)


def check_dominance_triangularity(matrix: DecompMatrix,
                                  result: BasicSetResult) -> tuple[bool, Optional[tuple]]:
    """Nonzero entries must be dominated by their column's selected label.

    Runs after a successful verification; labels must be partition tuples.
    Returns (True, None) or (False, (row_label, column_label)).
    """
    if not result.exists or result.assignment is None:
        raise ValueError("needs a successful verification result")
    for j, sel in enumerate(result.assignment):
        mu = matrix.labels[sel]
        if matrix.entries[sel][j] != 1:
            return False, (mu, mu)
        for i in range(len(matrix.labels)):
            if matrix.entries[i][j] == 0:
                continue
            lam = matrix.labels[i]
            lam_t = lam if isinstance(lam[0], tuple) else (lam,)
            mu_t = mu if isinstance(mu[0], tuple) else (mu,)
            if not dominance_leq_multi(lam_t, mu_t):
                return False, (lam, mu)
    return True, None


def dim_bipartition(lam: Multipartition) -> int:
    """Dimension of the labelled module: binomial times tableaux counts."""
    l1, l2 = lam
    n = sum(l1) + sum(l2)
    return math.comb(n, sum(l2)) * standard_tableaux(l1) * standard_tableaux(l2)

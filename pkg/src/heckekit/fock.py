"""The level-r Fock space for affine sl_l and its crystal combinatorics.

Multipartitions carry l-residues on their diagram nodes; the quantum
operators E_i, F_i, K_i, D act on formal Laurent-coefficient combinations
with exponents counted against a configurable total order on nodes.  Two
orders are first class citizens:

* "flotw": by content b - a + u_c, ties broken towards the larger component;
* "ariki": by component (larger first), then by row (larger first),
  independent of the parameters u.

Good/cogood nodes come from the usual signature cancellation on the ordered
addable/removable word, and the crystal graph is the closure of the empty
multipartition under the cogood addition operator.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional

from .laurent import LaurentPoly, vpow
from .schur import Partition, check_partition, e_regular, partitions

Multipartition = tuple[Partition, ...]
FockVector = dict[Multipartition, LaurentPoly]

FLOTW = "flotw"
ARIKI = "ariki"


class ParamsOutOfRange(ValueError):
    """FLOTW membership needs 0 <= u_1 <= ... <= u_r <= l-1."""


class LevelCapExceeded(ValueError):
    """Crystal expansion beyond the configured level cap."""


class Node(NamedTuple):
    row: int
    col: int
    comp: int  # 1-based component index


@dataclass(frozen=True)
class FockParams:
    l: int
    r: int
    u: tuple[int, ...]
    node_order: str = FLOTW

    def __post_init__(self):
        if self.l < 2:
            raise ValueError("l must be at least 2")
        if self.r < 1:
            raise ValueError("r must be at least 1")
        if len(self.u) != self.r:
            raise ValueError("u must have one entry per component")
        if self.node_order not in (FLOTW, ARIKI):
            raise ValueError(f"unknown node order {self.node_order!r}")

    def flotw_ok(self) -> bool:
        u = self.u
        return all(0 <= u[i] for i in range(self.r)) and \
            all(u[i] <= u[i + 1] for i in range(self.r - 1)) and u[-1] <= self.l - 1


def check_multipartition(mp, r: Optional[int] = None) -> Multipartition:
    mp = tuple(check_partition(c) for c in mp)
    if r is not None and len(mp) != r:
        raise ValueError(f"expected {r} components, got {len(mp)}")
    return mp


def empty_mp(r: int) -> Multipartition:
    return ((),) * r


def mp_size(mp: Multipartition) -> int:
    return sum(sum(c) for c in mp)


def multipartitions(r: int, n: int) -> Iterator[Multipartition]:
    if r == 1:
        for nu in partitions(n):
            yield (nu,)
        return
    for k in range(n, -1, -1):
        for nu in partitions(k):
            for rest in multipartitions(r - 1, n - k):
                yield (nu,) + rest


def mp_text(mp: Multipartition) -> str:
    return "[" + ",".join("[" + ",".join(map(str, c)) + "]" for c in mp) + "]"


# ---------------------------------------------------------------------------
# nodes, residues, orders
# ---------------------------------------------------------------------------

def residue(node: Node, params: FockParams) -> int:
    return (node.col - node.row + params.u[node.comp - 1]) % params.l


def content(node: Node, params: FockParams) -> int:
    return node.col - node.row + params.u[node.comp - 1]


def above(g: Node, g2: Node, params: FockParams) -> bool:
    """Strict order: is g above g2 under the configured node order?"""
    if params.node_order == FLOTW:
        c1, c2 = content(g, params), content(g2, params)
        if c1 != c2:
            return c1 < c2
        return g2.comp < g.comp
    # parameter-free component order
    if g.comp != g2.comp:
        return g2.comp < g.comp
    return g2.row < g.row


def _sort_key(params: FockParams):
    if params.node_order == FLOTW:
        return lambda nd: (content(nd, params), -nd.comp)
    return lambda nd: (-nd.comp, -nd.row)


def addable(mp: Multipartition, i: Optional[int], params: FockParams) -> list[Node]:
    """Addable nodes (of residue i unless i is None), highest first."""
    out = []
    for c, part in enumerate(mp, start=1):
        for a in range(1, len(part) + 2):
            cur = part[a - 1] if a <= len(part) else 0
            prev = part[a - 2] if a >= 2 else None
            if prev is not None and prev == cur:
                continue  # row cannot grow past the one above
            nd = Node(a, cur + 1, c)
            if i is None or residue(nd, params) == i:
                out.append(nd)
    out.sort(key=_sort_key(params))
    return out


def removable(mp: Multipartition, i: Optional[int], params: FockParams) -> list[Node]:
    """Removable nodes (of residue i unless i is None), highest first."""
    out = []
    for c, part in enumerate(mp, start=1):
        for a in range(1, len(part) + 1):
            below = part[a] if a < len(part) else 0
            if part[a - 1] > below:
                nd = Node(a, part[a - 1], c)
                if i is None or residue(nd, params) == i:
                    out.append(nd)
    out.sort(key=_sort_key(params))
    return out


def icount(mp: Multipartition, i: int, params: FockParams) -> int:
    """W_i: number of i-nodes in the diagram."""
    total = 0
    for c, part in enumerate(mp, start=1):
        for a, length in enumerate(part, start=1):
            for b in range(1, length + 1):
                if (b - a + params.u[c - 1]) % params.l == i:
                    total += 1
    return total


def ncount(mp: Multipartition, i: int, params: FockParams) -> int:
    """N_i = number of addable i-nodes minus number of removable i-nodes."""
    return len(addable(mp, i, params)) - len(removable(mp, i, params))


def add_node(mp: Multipartition, nd: Node) -> Multipartition:
    part = list(mp[nd.comp - 1])
    if nd.row == len(part) + 1:
        part.append(1)
    else:
        part[nd.row - 1] += 1
    return mp[:nd.comp - 1] + (tuple(part),) + mp[nd.comp:]


def remove_node(mp: Multipartition, nd: Node) -> Multipartition:
    part = list(mp[nd.comp - 1])
    part[nd.row - 1] -= 1
    if part[nd.row - 1] == 0:
        part.pop()
    return mp[:nd.comp - 1] + (tuple(part),) + mp[nd.comp:]


# ---------------------------------------------------------------------------
# quantum and classical operators
# ---------------------------------------------------------------------------

def _accumulate(vec: FockVector, mp: Multipartition, coeff: LaurentPoly):
    cur = vec.get(mp)
    cur = coeff if cur is None else cur + coeff
    if cur:
        vec[mp] = cur
    elif mp in vec:
        del vec[mp]


def unit_vector(mp: Multipartition) -> FockVector:
    return {mp: LaurentPoly.one()}


def quantum_E(i: int, vec: FockVector, params: FockParams) -> FockVector:
    """Sum over removals of an i-node gamma, weighted by v^-N_i^a.

    N_i^a counts addable i-nodes of the smaller diagram above gamma minus
    removable i-nodes of the larger diagram above gamma.
    """
    out: FockVector = {}
    for mp, coeff in vec.items():
        for g in removable(mp, i, params):
            smaller = remove_node(mp, g)
            na = (sum(1 for g2 in addable(smaller, i, params) if above(g2, g, params))
                  - sum(1 for g2 in removable(mp, i, params) if above(g2, g, params)))
            _accumulate(out, smaller, coeff * vpow(-na))
    return out


def quantum_F(i: int, vec: FockVector, params: FockParams) -> FockVector:
    """Sum over additions of an i-node gamma, weighted by v^N_i^b.

    N_i^b counts addable i-nodes of the smaller diagram below gamma minus
    removable i-nodes of the larger diagram below gamma.
    """
    out: FockVector = {}
    for mp, coeff in vec.items():
        for g in addable(mp, i, params):
            larger = add_node(mp, g)
            nb = (sum(1 for g2 in addable(mp, i, params) if above(g, g2, params))
                  - sum(1 for g2 in removable(larger, i, params) if above(g, g2, params)))
            _accumulate(out, larger, coeff * vpow(nb))
    return out


def quantum_K(i: int, vec: FockVector, params: FockParams, power: int = 1) -> FockVector:
    out: FockVector = {}
    for mp, coeff in vec.items():
        _accumulate(out, mp, coeff * vpow(power * ncount(mp, i, params)))
    return out


def quantum_D(vec: FockVector, params: FockParams, power: int = 1) -> FockVector:
    out: FockVector = {}
    for mp, coeff in vec.items():
        _accumulate(out, mp, coeff * vpow(-power * icount(mp, 0, params)))
    return out


def classical_e(i: int, vec: FockVector, params: FockParams) -> FockVector:
    out: FockVector = {}
    for mp, coeff in vec.items():
        for g in removable(mp, i, params):
            _accumulate(out, remove_node(mp, g), coeff)
    return out


def classical_f(i: int, vec: FockVector, params: FockParams) -> FockVector:
    out: FockVector = {}
    for mp, coeff in vec.items():
        for g in addable(mp, i, params):
            _accumulate(out, add_node(mp, g), coeff)
    return out


def classical_h(i: int, vec: FockVector, params: FockParams) -> FockVector:
    out: FockVector = {}
    for mp, coeff in vec.items():
        _accumulate(out, mp, coeff * LaurentPoly.const(ncount(mp, i, params)))
    return out


def classical_d(vec: FockVector, params: FockParams) -> FockVector:
    out: FockVector = {}
    for mp, coeff in vec.items():
        _accumulate(out, mp, coeff * LaurentPoly.const(-icount(mp, 0, params)))
    return out


def ind(vec: FockVector, params: FockParams) -> FockVector:
    """Branching sum: increase exactly one part (any residue)."""
    out: FockVector = {}
    for mp, coeff in vec.items():
        for g in addable(mp, None, params):
            _accumulate(out, add_node(mp, g), coeff)
    return out


def res(vec: FockVector, params: FockParams) -> FockVector:
    """Branching sum: decrease exactly one part (any residue)."""
    out: FockVector = {}
    for mp, coeff in vec.items():
        for g in removable(mp, None, params):
            _accumulate(out, remove_node(mp, g), coeff)
    return out


def cartan_pairing(i: int, j: int, l: int) -> int:
    """alpha_i(h_j) for the affine type A_{l-1} Cartan matrix."""
    a = 2 if i == j else 0
    if (i - j) % l == 1:
        a -= 1
    if (j - i) % l == 1:
        a -= 1
    return a


# ---------------------------------------------------------------------------
# signature cancellation and crystal operators
# ---------------------------------------------------------------------------

def i_word(mp: Multipartition, i: int, params: FockParams) -> list[tuple[Node, str]]:
    """Addable/removable i-nodes as an (node, 'A'|'R') word, highest first."""
    entries = [(nd, "A") for nd in addable(mp, i, params)]
    entries += [(nd, "R") for nd in removable(mp, i, params)]
    entries.sort(key=lambda e: _sort_key(params)(e[0]))
    return entries


def _reduced_word(mp, i, params) -> list[tuple[Node, str]]:
    stack: list[tuple[Node, str]] = []
    for nd, kind in i_word(mp, i, params):
        if kind == "A" and stack and stack[-1][1] == "R":
            stack.pop()  # a removable directly above an addable cancels
        else:
            stack.append((nd, kind))
    return stack


def good_node(mp: Multipartition, i: int, params: FockParams) -> Optional[Node]:
    """Highest removable i-node surviving cancellation, if any."""
    for nd, kind in _reduced_word(mp, i, params):
        if kind == "R":
            return nd
    return None


def cogood_node(mp: Multipartition, i: int, params: FockParams) -> Optional[Node]:
    """Lowest addable i-node surviving cancellation, if any."""
    best = None
    for nd, kind in _reduced_word(mp, i, params):
        if kind == "A":
            best = nd
    return best


def normal_nodes_literal(mp: Multipartition, i: int, params: FockParams) -> list[Node]:
    """Normal removable i-nodes by the literal counting definition.

    A removable i-node g is normal when every addable i-node strictly below
    it sees strictly more removable than addable i-nodes strictly between.
    Serves as the independent oracle for the signature implementation.
    """
    adds = addable(mp, i, params)
    rems = removable(mp, i, params)
    out = []
    for g in rems:
        ok = True
        for g2 in adds:
            if not above(g, g2, params):
                continue
            between_r = sum(1 for d in rems
                            if above(g, d, params) and above(d, g2, params))
            between_a = sum(1 for d in adds
                            if above(g, d, params) and above(d, g2, params))
            if not between_r > between_a:
                ok = False
                break
        if ok:
            out.append(g)
    return out


def etilde(mp: Multipartition, i: int, params: FockParams) -> Optional[Multipartition]:
    g = good_node(mp, i, params)
    return None if g is None else remove_node(mp, g)


def ftilde(mp: Multipartition, i: int, params: FockParams) -> Optional[Multipartition]:
    g = cogood_node(mp, i, params)
    return None if g is None else add_node(mp, g)


# ---------------------------------------------------------------------------
# the crystal graph and its vertex sets
# ---------------------------------------------------------------------------

@dataclass
class CrystalGraph:
    params: FockParams
    levels: list[list[Multipartition]] = field(default_factory=list)
    edges: set[tuple[Multipartition, Multipartition, int]] = field(default_factory=set)

    @property
    def vertices(self) -> set[Multipartition]:
        return {mp for level in self.levels for mp in level}

    def to_json_dict(self) -> dict:
        return {
            "levels": [[list(map(list, mp)) for mp in level] for level in self.levels],
            "edges": sorted(
                [[list(map(list, a)), list(map(list, b)), i] for a, b, i in self.edges],
                key=str),
        }

    def to_dot(self) -> str:
        lines = ["digraph crystal {", "  rankdir=BT;"]
        for level in self.levels:
            for mp in sorted(level):
                lines.append(f'  "{mp_text(mp)}";')
        for a, b, i in sorted(self.edges, key=lambda e: (mp_size(e[0]), e[0], e[2])):
            lines.append(f'  "{mp_text(a)}" -> "{mp_text(b)}" [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def crystal(params: FockParams, n: int, cap: int = 30) -> CrystalGraph:
    """Breadth-first closure of the empty multipartition under cogood addition."""
    if n > cap:
        raise LevelCapExceeded(f"level bound {n} exceeds cap {cap}")
    graph = CrystalGraph(params)
    current = [empty_mp(params.r)]
    graph.levels.append(current)
    for _ in range(n):
        nxt: set[Multipartition] = set()
        for mp in current:
            for i in range(params.l):
                target = ftilde(mp, i, params)
                if target is not None:
                    graph.edges.add((mp, target, i))
                    nxt.add(target)
        current = sorted(nxt)
        graph.levels.append(current)
    return graph


def uryu_set(params: FockParams, n: int, cap: int = 30) -> set[Multipartition]:
    """Level-n vertex set of the connected component of the empty multipartition."""
    return set(crystal(params, n, cap).levels[n])


def flotw_member(mp: Multipartition, params: FockParams) -> bool:
    """Non-recursive membership test for the crystal component vertex set.

    Condition (a): cyclic domination between consecutive components shifted
    by the parameter gaps, oriented so that each component bounds the next
    one (the orientation is forced by the node order's tie-breaking, which
    sends growth into earlier components; the recursive construction agrees
    exhaustively).  Condition (b): for every row length, the residues at the
    right ends of rows of that length miss at least one value.
    """
    if not params.flotw_ok():
        raise ParamsOutOfRange(f"u = {params.u} not sorted inside [0, {params.l - 1}]")
    mp = check_multipartition(mp, params.r)
    r, l, u = params.r, params.l, params.u

    def part(c: int, idx: int) -> int:
        comp = mp[c]
        return comp[idx - 1] if 1 <= idx <= len(comp) else 0

    for j in range(r - 1):
        shift = u[j + 1] - u[j]
        for i in range(1, len(mp[j]) + len(mp[j + 1]) + 1):
            if part(j, i) < part(j + 1, i + shift):
                return False
    shift = l + u[0] - u[r - 1]
    for i in range(1, len(mp[0]) + len(mp[r - 1]) + 1):
        if part(r - 1, i) < part(0, i + shift):
            return False

    by_length: dict[int, set[int]] = {}
    for c, comp in enumerate(mp, start=1):
        for a, length in enumerate(comp, start=1):
            by_length.setdefault(length, set()).add(
                residue(Node(a, length, c), params))
    return all(len(resset) < l for resset in by_length.values())


@lru_cache(maxsize=None)
def _component_member(l: int, u: tuple[int, ...], order: str,
                      mp: Multipartition) -> bool:
    params = FockParams(l=l, r=len(u), u=u, node_order=order)
    if mp_size(mp) == 0:
        return True
    for i in range(l):
        smaller = etilde(mp, i, params)
        if smaller is not None and _component_member(l, u, order, smaller):
            return True
    return False


def kleshchev_member(mp: Multipartition, params: FockParams) -> bool:
    """Membership in the component-order crystal at the residue classes of u."""
    mp = check_multipartition(mp, params.r)
    u_mod = tuple(x % params.l for x in params.u)
    return _component_member(params.l, u_mod, ARIKI, mp)

"""Rooted trees indexing the boundary strata of the compactifications.

Trees are non-planar and reduced: every internal vertex has at least two
children, except the standalone unit.  Leaves are the integers ``1..n``.
Children are kept sorted by their minimal leaf label, which makes
structural equality the same as tree isomorphism respecting labels.

Internal vertices are numbered in preorder (root = 0).  The internal edge
above vertex ``v`` gets id ``v - 1``, so edge ids run over ``0..|T|-1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, Sequence, Union

from .config_space import Permutation
from .errors import BoundExceededError, ContractionError, ParameterError, SizeMismatchError, SlotError, TreeError

ENUMERATION_BOUND = 8

Subtree = Union["LabeledTree", int]


def _min_leaf(t: Subtree) -> int:
    return t if isinstance(t, int) else t.min_leaf


@dataclass(frozen=True)
class LabeledTree:
    children: tuple[Subtree, ...]

    @cached_property
    def min_leaf(self) -> int:
        return min(_min_leaf(c) for c in self.children)

    @cached_property
    def leaves(self) -> tuple[int, ...]:
        out: list[int] = []
        for c in self.children:
            out.extend([c] if isinstance(c, int) else c.leaves)
        return tuple(sorted(out))

    @property
    def n(self) -> int:
        return len(self.leaves)

    @property
    def arity(self) -> int:
        return len(self.children)

    def is_unit(self) -> bool:
        return len(self.children) == 1

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.children) + ")"


def make_tree(children: Sequence[Subtree]) -> LabeledTree:
    """Build a vertex with canonically ordered children."""
    return LabeledTree(tuple(sorted(children, key=_min_leaf)))


def check_tree(t: LabeledTree) -> LabeledTree:
    """Verify reducedness, canonical order and that leaves are exactly 1..n."""
    if t.is_unit():
        if t.children != (1,):
            raise TreeError("the only unary tree is the unit with leaf 1")
        return t

    def walk(v: LabeledTree) -> None:
        if len(v.children) < 2:
            raise TreeError("internal vertices need at least two children")
        keys = [_min_leaf(c) for c in v.children]
        if keys != sorted(keys):
            raise TreeError("children are not in canonical order")
        for c in v.children:
            if isinstance(c, LabeledTree):
                walk(c)

    walk(t)
    if t.leaves != tuple(range(1, len(t.leaves) + 1)):
        raise TreeError("leaves must be labelled 1..n", leaves=list(t.leaves))
    return t


def corolla(n: int) -> LabeledTree:
    if n < 1:
        raise ParameterError("corolla needs n >= 1", n=n)
    return LabeledTree(tuple(range(1, n + 1)))


def internal_vertices(t: LabeledTree) -> list[LabeledTree]:
    """Internal vertices in preorder; index = vertex id."""
    out: list[LabeledTree] = []

    def walk(v: LabeledTree) -> None:
        out.append(v)
        for c in v.children:
            if isinstance(c, LabeledTree):
                walk(c)

    walk(t)
    return out


def internal_edge_count(t: LabeledTree) -> int:
    return len(internal_vertices(t)) - 1


def relabel(t: Subtree, mapping) -> Subtree:
    """Apply ``mapping`` to leaf labels and restore canonical order."""
    if isinstance(t, int):
        return mapping(t)
    return make_tree([relabel(c, mapping) for c in t.children])


def graft(s: LabeledTree, i: int, t: LabeledTree) -> LabeledTree:
    """Replace leaf ``i`` of ``s`` by the root of ``t`` (splice relabelling)."""
    n1, n2 = s.n, t.n
    if not 1 <= i <= n1:
        raise SlotError("graft slot out of range", slot=i, arity=n1)
    if t.is_unit():
        return s
    if s.is_unit():
        return t
    lower = relabel(t, lambda k: k + i - 1)

    def walk(v: Subtree) -> Subtree:
        if isinstance(v, int):
            if v == i:
                return lower
            return v if v < i else v + n2 - 1
        return make_tree([walk(c) for c in v.children])

    return walk(s)


def contract(t: LabeledTree, e: int) -> LabeledTree:
    """Merge the endpoints of internal edge ``e``."""
    k = internal_edge_count(t)
    if not 0 <= e < k:
        raise ContractionError("not an internal edge", edge=e, internal_edges=k)
    target = internal_vertices(t)[e + 1]
    counter = itertools.count()

    def walk(v: LabeledTree) -> LabeledTree:
        next(counter)
        children: list[Subtree] = []
        for c in v.children:
            if isinstance(c, int):
                children.append(c)
            elif c is target:
                next(counter)
                children.extend(_walk_children(c))
            else:
                children.append(walk(c))
        return make_tree(children)

    def _walk_children(v: LabeledTree) -> list[Subtree]:
        return [c if isinstance(c, int) else walk(c) for c in v.children]

    return walk(t)


def act_permutation(t: LabeledTree, sigma: Permutation) -> LabeledTree:
    """Right action: the leaf formerly labelled ``sigma(i)`` is relabelled ``i``."""
    if len(sigma) != t.n:
        raise SizeMismatchError("permutation size does not match leaf count", n=t.n, size=len(sigma))
    inv = sigma.inverse()
    return relabel(t, inv)


def stratum_dimension(t: LabeledTree) -> int:
    if t.is_unit():
        return 0
    return sum(2 * v.arity - 3 for v in internal_vertices(t))


def set_partitions(items: Sequence[int]) -> Iterator[list[tuple[int, ...]]]:
    """All set partitions; blocks ordered by their first element."""
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for sub in set_partitions(rest):
        yield [(first,)] + sub
        for j in range(len(sub)):
            yield sub[:j] + [(first,) + sub[j]] + sub[j + 1 :]


@lru_cache(maxsize=None)
def _trees_on(labels: tuple[int, ...]) -> tuple[LabeledTree, ...]:
    out: list[LabeledTree] = []
    for blocks in set_partitions(labels):
        if len(blocks) < 2:
            continue
        blocks = sorted(blocks)
        options = [(b[0],) if len(b) == 1 else _trees_on(b) for b in blocks]
        for choice in itertools.product(*options):
            out.append(LabeledTree(tuple(choice)))
    return tuple(out)


def tree_sort_key(t: LabeledTree) -> tuple[int, str]:
    return internal_edge_count(t), str(t)


def all_trees(n: int, bound: int = ENUMERATION_BOUND) -> list[LabeledTree]:
    """Every reduced tree with leaves 1..n, sorted by (|T|, printed form)."""
    if n > bound:
        raise BoundExceededError("enumeration bound exceeded", n=n, bound=bound)
    if n < 1:
        return []
    if n == 1:
        return [corolla(1)]
    return list(_sorted_trees(n))


@lru_cache(maxsize=None)
def _sorted_trees(n: int) -> tuple[LabeledTree, ...]:
    return tuple(sorted(_trees_on(tuple(range(1, n + 1))), key=tree_sort_key))


@lru_cache(maxsize=None)
def _graded_trees(n: int, k: int) -> tuple[LabeledTree, ...]:
    return tuple(t for t in _sorted_trees(n) if internal_edge_count(t) == k)


def enumerate_trees(n: int, k: int, bound: int = ENUMERATION_BOUND) -> list[LabeledTree]:
    if n < 2 or not 0 <= k <= n - 2:
        return []
    if n > bound:
        raise BoundExceededError("enumeration bound exceeded", n=n, bound=bound)
    return list(_graded_trees(n, k))


@dataclass
class FacePoset:
    """Trees on ``n`` leaves ordered by contraction, graded by |T|."""

    n: int
    elements: list[LabeledTree]
    covers: list[tuple[int, int]]  # (i, j): contracting one edge of elements[i] gives elements[j]

    def grade(self, k: int) -> list[LabeledTree]:
        return [t for t in self.elements if internal_edge_count(t) == k]

    def grade_sizes(self) -> list[int]:
        return [len(self.grade(k)) for k in range(self.n - 1)]

    def leq(self, lower: int, upper: int) -> bool:
        """``elements[lower] -> elements[upper]`` by a (possibly empty) contraction sequence."""
        above = {lower}
        frontier = [lower]
        while frontier:
            nxt = []
            for a in frontier:
                for i, j in self.covers:
                    if i == a and j not in above:
                        above.add(j)
                        nxt.append(j)
            frontier = nxt
        return upper in above

    def to_dot(self) -> str:
        lines = ["digraph face_poset {", "  rankdir=BT;"]
        for idx, t in enumerate(self.elements):
            lines.append(f'  n{idx} [label="{t}", codim={internal_edge_count(t)}];')
        for i, j in self.covers:
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def face_poset(n: int, bound: int = 6) -> FacePoset:
    if n > bound:
        raise BoundExceededError("face poset bound exceeded", n=n, bound=bound)
    elements = all_trees(n, max(bound, ENUMERATION_BOUND))
    index = {t: i for i, t in enumerate(elements)}
    covers = sorted(
        {(index[t], index[contract(t, e)]) for t in elements for e in range(internal_edge_count(t))}
    )
    return FacePoset(n, elements, covers)


# Coloured trees ------------------------------------------------------------


@dataclass(frozen=True)
class ColoredLeaf:
    color: str  # "c" (interior point) or "o" (boundary point)
    label: int


ColoredSubtree = Union["ColoredTree", ColoredLeaf]


def _colored_key(t: ColoredSubtree) -> tuple:
    big = 1 << 30
    closed, opened = _colored_leaves(t)
    if t.color == "c":
        return (0, min(closed), 0)
    return (1, min(opened, default=big), min(closed, default=big))


def _colored_leaves(t: ColoredSubtree) -> tuple[list[int], list[int]]:
    if isinstance(t, ColoredLeaf):
        return ([t.label], []) if t.color == "c" else ([], [t.label])
    closed: list[int] = []
    opened: list[int] = []
    for c in t.children:
        a, b = _colored_leaves(c)
        closed += a
        opened += b
    return closed, opened


@dataclass(frozen=True)
class ColoredTree:
    """A vertex of colour ``o`` (boundary cluster) or ``c`` (interior cluster).

    Children are ordered closed-coloured first, then open-coloured, matching
    the doubling order used to decorate open vertices.
    """

    color: str
    children: tuple[ColoredSubtree, ...]

    @cached_property
    def counts(self) -> tuple[int, int]:
        closed, opened = _colored_leaves(self)
        return len(closed), len(opened)

    def inputs(self) -> tuple[int, int]:
        """(closed-coloured inputs, open-coloured inputs) of this vertex."""
        p = sum(1 for c in self.children if c.color == "c")
        return p, len(self.children) - p

    def is_unit(self) -> bool:
        return len(self.children) == 1 and isinstance(self.children[0], ColoredLeaf) and self.children[0].color == self.color

    def __str__(self) -> str:
        def fmt(c):
            if isinstance(c, ColoredLeaf):
                return f"{c.color}{c.label}"
            return str(c)

        return self.color + "(" + ",".join(fmt(c) for c in self.children) + ")"


def make_colored(color: str, children: Sequence[ColoredSubtree]) -> ColoredTree:
    return ColoredTree(color, tuple(sorted(children, key=_colored_key)))


def colored_vertices(t: ColoredTree) -> list[ColoredTree]:
    out: list[ColoredTree] = []

    def walk(v: ColoredTree) -> None:
        out.append(v)
        for c in v.children:
            if isinstance(c, ColoredTree):
                walk(c)

    walk(t)
    return out


def colored_admissibility_errors(t: ColoredTree) -> list[str]:
    """Reasons ``t`` does not index a stratum of H2; empty when admissible."""
    errors: list[str] = []
    if t.is_unit():
        return errors
    for v in colored_vertices(t):
        if v.color not in ("c", "o"):
            errors.append(f"unknown colour {v.color!r}")
            continue
        p, q = v.inputs()
        if v.color == "c":
            if q:
                errors.append(f"closed vertex {v} has open inputs")
            if p < 2:
                errors.append(f"closed vertex {v} has arity < 2")
        elif 2 * p + q < 2:
            errors.append(f"open vertex {v} violates 2p + q >= 2")
        if [_colored_key(c) for c in v.children] != sorted(_colored_key(c) for c in v.children):
            errors.append(f"children of {v} are not in canonical order")
    closed, opened = _colored_leaves(t)
    if sorted(closed) != list(range(1, len(closed) + 1)) or sorted(opened) != list(range(1, len(opened) + 1)):
        errors.append("leaf labels must be 1..p (closed) and 1..q (open)")
    return errors


def is_admissible(t: ColoredTree) -> bool:
    return not colored_admissibility_errors(t)


def check_colored(t: ColoredTree) -> ColoredTree:
    errors = colored_admissibility_errors(t)
    if errors:
        raise TreeError("inadmissible coloured tree", reasons=errors)
    return t


def colored_edge_count(t: ColoredTree) -> int:
    return len(colored_vertices(t)) - 1


def colored_stratum_dimension(t: ColoredTree) -> int:
    if t.is_unit():
        return 0
    total = 0
    for v in colored_vertices(t):
        p, q = v.inputs()
        total += 2 * p - 3 if v.color == "c" else 2 * p + q - 2
    return total


def colored_corolla(p: int, q: int, color: str = "o") -> ColoredTree:
    leaves = [ColoredLeaf("c", k) for k in range(1, p + 1)] + [ColoredLeaf("o", k) for k in range(1, q + 1)]
    return make_colored(color, leaves)


@lru_cache(maxsize=None)
def _colored_on(closed: tuple[int, ...], opened: tuple[int, ...], color: str) -> tuple[ColoredTree, ...]:
    """Admissible non-unit coloured trees on the given leaves with root colour ``color``."""
    if color == "c" and (opened or len(closed) < 2):
        return ()
    items = [ColoredLeaf("c", k) for k in closed] + [ColoredLeaf("o", k) for k in opened]
    out: list[ColoredTree] = []
    for blocks in set_partitions(range(len(items))):
        options = []
        for block in blocks:
            leaves = [items[b] for b in block]
            opts: list[ColoredSubtree] = [leaves[0]] if len(leaves) == 1 else []
            cl = tuple(x.label for x in leaves if x.color == "c")
            op = tuple(x.label for x in leaves if x.color == "o")
            for child_color in ("c", "o"):
                # one block means a unary vertex: only an open vertex over a closed cluster
                if len(blocks) == 1 and (color == "c" or child_color == "o"):
                    continue
                opts.extend(_colored_on(cl, op, child_color))
            options.append(opts)
        for choice in itertools.product(*options):
            v = make_colored(color, choice)
            if v.is_unit():
                continue
            p, q = v.inputs()
            if color == "c" and (q or p < 2):
                continue
            if color == "o" and 2 * p + q < 2:
                continue
            out.append(v)
    return tuple(sorted(set(out), key=str))


def enumerate_colored_trees(p: int, q: int, color: str = "o", bound: int = 5) -> list[ColoredTree]:
    """All admissible coloured trees with ``p`` closed and ``q`` open leaves."""
    if p + q > bound:
        raise BoundExceededError("coloured enumeration bound exceeded", p=p, q=q, bound=bound)
    return list(_sorted_colored(p, q, color))


@lru_cache(maxsize=None)
def _sorted_colored(p: int, q: int, color: str) -> tuple[ColoredTree, ...]:
    trees = _colored_on(tuple(range(1, p + 1)), tuple(range(1, q + 1)), color)
    return tuple(sorted(trees, key=lambda t: (colored_edge_count(t), str(t))))

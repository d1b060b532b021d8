"""Partitions, m-multipartitions and their shift orbits.

Partitions are plain tuples of weakly decreasing positive ints; an
m-multipartition is a tuple of m partitions.  The cyclic shift action
moves component i to component (i + d) mod m; its orbits index the
irreducible representations of G(m,p,n) together with an abstract
epsilon label per stabiliser element.

Text format: components joined by "|", parts by ",", empty component
"-", e.g. ``"2,2|-|1"`` for ((2,2), (), (1)).
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .polycore import GradedProduct, LaurentPoly

Partition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


def check_partition(parts: tuple[int, ...]) -> Partition:
    """Validate weakly decreasing positive parts."""
    parts = tuple(parts)
    for i, p in enumerate(parts):
        if not isinstance(p, int) or p < 1:
            raise ValueError(f"parts must be positive integers: {parts}")
        if i and parts[i - 1] < p:
            raise ValueError(f"parts must be weakly decreasing: {parts}")
    return parts


@functools.lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[Partition, ...]:
    """All partitions of n in descending lexicographic order.

    >>> partitions(3)
    ((3,), (2, 1), (1, 1, 1))
    """
    if n < 0:
        raise ValueError("cannot partition a negative integer")
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out: list[Partition] = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def hook_lengths(lam: Partition) -> tuple[int, ...]:
    """Hook length multiset as a descending tuple.

    >>> hook_lengths((2, 2))
    (3, 2, 2, 1)
    """
    lam = check_partition(lam)
    conj = conjugate(lam)
    hooks = []
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = conj[j] - i - 1
            hooks.append(arm + leg + 1)
    return tuple(sorted(hooks, reverse=True))


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for row in lam if row > j) for j in range(lam[0]))


def hook_poly(lam: Partition) -> GradedProduct:
    """prod over cells of (1 - t^hook)."""
    gp = GradedProduct.one()
    for h in hook_lengths(lam):
        gp = gp * GradedProduct.of(h)
    return gp


def weighted_size(lam: Partition) -> int:
    """n(lam) = sum_i (i - 1) * lam_i.

    >>> weighted_size((2, 2, 1))
    4
    """
    check_partition(lam)
    return sum(i * part for i, part in enumerate(lam))


def t_factorial(n: int) -> GradedProduct:
    """(t)_n = (1 - t)(1 - t^2)...(1 - t^n)."""
    if n < 0:
        raise ValueError("t-factorial needs n >= 0")
    gp = GradedProduct.one()
    for k in range(1, n + 1):
        gp = gp * GradedProduct.of(k)
    return gp


def standard_tableau_count(lam: Partition) -> int:
    """Number of standard Young tableaux, by the hook length formula."""
    n = sum(lam)
    denom = 1
    for h in hook_lengths(lam):
        denom *= h
    count, rem = divmod(functools.reduce(int.__mul__, range(1, n + 1), 1), denom)
    assert rem == 0
    return count


# -- multipartitions ----------------------------------------------------

def check_multipartition(mp: Multipartition) -> Multipartition:
    return tuple(check_partition(lam) for lam in mp)


def multipartition_size(mp: Multipartition) -> int:
    return sum(sum(lam) for lam in mp)


def _partition_key(lam: Partition) -> tuple:
    # Larger components first, then descending-lex on parts.
    return (-sum(lam), tuple(-p for p in lam))


def multipartition_key(mp: Multipartition) -> tuple:
    return tuple(_partition_key(lam) for lam in mp)


@functools.lru_cache(maxsize=None)
def multipartitions(m: int, n: int) -> tuple[Multipartition, ...]:
    """All m-multipartitions of n, deterministically ordered.

    The order sorts component 0 first (larger, lexicographically earlier
    partitions first), then recurses on the remaining components:

    >>> multipartitions(2, 2)[0]
    ((2,), ())
    """
    if m < 1:
        raise ValueError("need at least one component")
    if n < 0:
        raise ValueError("total size must be nonnegative")
    if m == 1:
        return tuple((lam,) for lam in partitions(n))
    out: list[Multipartition] = []
    for first_size in range(n, -1, -1):
        for lam in partitions(first_size):
            for rest in multipartitions(m - 1, n - first_size):
                out.append((lam,) + rest)
    return tuple(out)


def shift(mp: Multipartition, d: int) -> Multipartition:
    """Cyclic shift moving component i to component (i + d) mod m.

    >>> shift(((1,), (1,), ()), 1)
    ((), (1,), (1,))
    """
    m = len(mp)
    return tuple(mp[(i - d) % m] for i in range(m))


@dataclass(frozen=True)
class MultipartitionOrbit:
    """Orbit of a multipartition under iterated shift by d.

    ``members`` lists the distinct multipartitions in deterministic
    order, ``canonical`` is the least member under the enumeration
    order, and ``stab_order * len(members) == p`` always holds.
    """

    members: tuple[Multipartition, ...]
    canonical: Multipartition
    stab_order: int

    def size(self) -> int:
        return len(self.members)


def orbit_of(mp: Multipartition, p: int, d: int) -> MultipartitionOrbit:
    """Orbit of mp under the order-p group generated by shift-by-d."""
    mp = check_multipartition(mp)
    if p < 1 or d < 1 or len(mp) != p * d:
        raise ValueError("need m = p * d components")
    seen: list[Multipartition] = []
    current = mp
    for _ in range(p):
        if current in seen:
            break
        seen.append(current)
        current = shift(current, d)
    size = len(seen)
    stab, rem = divmod(p, size)
    assert rem == 0, "orbit size must divide p"
    members = tuple(sorted(seen, key=multipartition_key))
    return MultipartitionOrbit(members, members[0], stab)


def index_weight(mp: Multipartition) -> int:
    """r(mp) = sum_i i * |mp^i| (components indexed from 0).

    >>> index_weight(((1,), (1,), ()))
    1
    """
    return sum(i * sum(lam) for i, lam in enumerate(mp))


def orbit_weight_poly(orbit: MultipartitionOrbit) -> LaurentPoly:
    """R(t) = sum over orbit members of t^index_weight."""
    out = LaurentPoly.zero()
    for member in orbit.members:
        out = out + LaurentPoly.t(index_weight(member))
    return out


def hook_quotient(mp: Multipartition) -> GradedProduct:
    """(t)_n * t^(sum weighted_size) / prod hook polynomials, unexpanded.

    n is the total size of the multipartition; the monomial shift keeps
    the trailing-degree bookkeeping exact.
    """
    mp = check_multipartition(mp)
    n = multipartition_size(mp)
    gp = t_factorial(n)
    total_shift = 0
    for lam in mp:
        total_shift += weighted_size(lam)
        gp = gp * hook_poly(lam).inv()
    return gp.shifted(total_shift)


# -- text format ---------------------------------------------------------

def render_multipartition(mp: Multipartition) -> str:
    """Canonical text, e.g. ((2,2),(),(1,)) -> "2,2|-|1"."""
    comps = []
    for lam in mp:
        comps.append(",".join(str(p) for p in lam) if lam else "-")
    return "|".join(comps)


def parse_multipartition(text: str) -> Multipartition:
    """Inverse of render_multipartition."""
    text = text.strip()
    if not text:
        raise ValueError("empty multipartition text")
    out: list[Partition] = []
    for comp in text.split("|"):
        comp = comp.strip()
        if comp == "-" or comp == "":
            out.append(())
            continue
        try:
            parts = tuple(int(tok) for tok in comp.split(","))
        except ValueError as exc:
            raise ValueError(f"bad multipartition component {comp!r}") from exc
        out.append(check_partition(parts))
    return tuple(out)

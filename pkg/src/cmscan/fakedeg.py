"""Fake degree polynomials for the groups G(m,p,n).

Irreducible representations of G(m,p,n) are indexed by shift orbits of
m-multipartitions of n together with an abstract label epsilon in
{0, ..., stab_order - 1}; all labels of one orbit share the same fake
degree

    f(t) = (1 - t^(dn)) / (1 - t^(mn)) * R(t) * I(t^m),

where d = m/p, R is the orbit weight polynomial and I the hook
quotient.  Everything is assembled as a graded product and reduced
exactly; reduction failure would be an internal invariant violation.
"""
from __future__ import annotations

import functools
import re
from dataclasses import dataclass

from . import partitions as pt
from .polycore import GradedProduct, LaurentPoly

_GROUP_RE = re.compile(r"^G\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)$")


@dataclass(frozen=True)
class GroupSpec:
    """The group G(m,p,n) of n x n monomial matrices with m-th root of
    unity entries whose exponent sum is divisible by p; requires p | m."""

    m: int
    p: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.p < 1 or self.n < 1:
            raise ValueError("G(m,p,n) needs positive m, p, n")
        if self.m % self.p != 0:
            raise ValueError(f"p must divide m in G({self.m},{self.p},{self.n})")

    @property
    def d(self) -> int:
        return self.m // self.p

    @property
    def order(self) -> int:
        return self.m**self.n * functools.reduce(int.__mul__, range(1, self.n + 1), 1) // self.p

    @property
    def degrees(self) -> tuple[int, ...]:
        """Invariant degrees: m, 2m, ..., (n-1)m, dn."""
        return tuple(self.m * i for i in range(1, self.n)) + (self.d * self.n,)

    def render(self) -> str:
        return f"G({self.m},{self.p},{self.n})"

    def __str__(self) -> str:
        return self.render()

    @classmethod
    def parse(cls, text: str) -> GroupSpec:
        m = _GROUP_RE.match(text.strip())
        if not m:
            raise ValueError(f"bad group {text!r}; expected G(m,p,n)")
        return cls(*(int(g) for g in m.groups()))


@dataclass(frozen=True)
class IrrLabel:
    """One irreducible label: a shift orbit plus an epsilon index."""

    orbit: pt.MultipartitionOrbit
    eps: int

    def render(self) -> str:
        base = pt.render_multipartition(self.orbit.canonical)
        if self.orbit.stab_order == 1:
            return base
        return f"{base} eps={self.eps}"


@functools.lru_cache(maxsize=None)
def group_orbits(g: GroupSpec) -> tuple[pt.MultipartitionOrbit, ...]:
    """Shift orbits of m-multipartitions of n, in enumeration order."""
    seen: set[pt.Multipartition] = set()
    orbits: list[pt.MultipartitionOrbit] = []
    for mp in pt.multipartitions(g.m, g.n):
        if mp in seen:
            continue
        orbit = pt.orbit_of(mp, g.p, g.d)
        seen.update(orbit.members)
        orbits.append(orbit)
    return tuple(orbits)


def irr_labels(g: GroupSpec) -> tuple[IrrLabel, ...]:
    """All irreducible labels, one per (orbit, epsilon)."""
    out: list[IrrLabel] = []
    for orbit in group_orbits(g):
        for eps in range(orbit.stab_order):
            out.append(IrrLabel(orbit, eps))
    return tuple(out)


def irr_dimension(g: GroupSpec, label: IrrLabel | pt.MultipartitionOrbit) -> int:
    """Dimension: multinomial(n; component sizes) * prod SYT counts,
    divided by the stabiliser order."""
    orbit = label.orbit if isinstance(label, IrrLabel) else label
    mp = orbit.canonical
    dim = functools.reduce(int.__mul__, range(1, g.n + 1), 1)
    for lam in mp:
        k = sum(lam)
        dim //= functools.reduce(int.__mul__, range(1, k + 1), 1)
        dim *= pt.standard_tableau_count(lam)
    q, r = divmod(dim, orbit.stab_order)
    assert r == 0, "stabiliser order must divide the ambient dimension"
    return q


@functools.lru_cache(maxsize=None)
def fake_degree(g: GroupSpec, orbit: pt.MultipartitionOrbit) -> LaurentPoly:
    """Fake degree polynomial shared by every label of the orbit.

    The monomial part t^k of R is split off so the graded product
    carries the full trailing shift; the identity

        trailing degree == k + m * sum weighted_size(component)

    is asserted on the reduced result.
    """
    weight = pt.orbit_weight_poly(orbit)
    k = weight.trailing_degree()
    reduced_weight = weight.shift(-k)
    gp = GradedProduct.of(g.d * g.n) * GradedProduct.of(g.m * g.n).inv()
    gp = gp * pt.hook_quotient(orbit.canonical).substitute(g.m)
    f = gp.reduce_with(reduced_weight).shift(k)
    hooks_shift = sum(pt.weighted_size(lam) for lam in orbit.canonical)
    assert f.trailing_degree() == k + g.m * hooks_shift
    assert all(c > 0 for _, c in f.items()), "fake degree coefficients are nonnegative"
    return f


def coinvariant_poincare(g: GroupSpec) -> LaurentPoly:
    """Poincare polynomial of the coinvariant ring:
    prod (1 - t^degree) / (1 - t)^n."""
    gp = GradedProduct.of(1, -g.n)
    for deg in g.degrees:
        gp = gp * GradedProduct.of(deg)
    return gp.reduce()


# -- symmetric group oracle ----------------------------------------------

def standard_tableaux(lam: pt.Partition) -> tuple[tuple[int, ...], ...]:
    """All standard Young tableaux of shape lam, each encoded as the
    tuple row_of(1), ..., row_of(n)."""
    lam = pt.check_partition(lam)
    n = sum(lam)
    out: list[tuple[int, ...]] = []

    def grow(fill_counts: list[int], rows: list[int]):
        if len(rows) == n:
            out.append(tuple(rows))
            return
        for i, row_len in enumerate(lam):
            if fill_counts[i] < row_len and (i == 0 or fill_counts[i - 1] > fill_counts[i]):
                fill_counts[i] += 1
                rows.append(i)
                grow(fill_counts, rows)
                rows.pop()
                fill_counts[i] -= 1

    grow([0] * len(lam), [])
    return tuple(out)


def major_index_poly(lam: pt.Partition) -> LaurentPoly:
    """sum over SYT of t^maj, where maj adds i whenever i + 1 sits in a
    strictly lower row; independent oracle for G(1,1,n) fake degrees."""
    n = sum(lam)
    if n > 8:
        raise ValueError("tableau enumeration is limited to n <= 8")
    out = LaurentPoly.zero()
    for rows in standard_tableaux(lam):
        maj = sum(i + 1 for i in range(n - 1) if rows[i + 1] > rows[i])
        out = out + LaurentPoly.t(maj)
    return out


# -- configured battery ---------------------------------------------------

def configured_groups(max_order: int = 2000, max_m: int = 12,
                      max_n: int = 5) -> tuple[GroupSpec, ...]:
    """The battery of groups that element-level verifications run over.

    All G(m,p,n) with p | m, m <= max_m, n <= max_n and order <= max_order;
    for n = 1 only p = 1 is kept because G(m,p,1) and G(m/p,1,1) are the
    same subgroup of GL_1.
    """
    out: list[GroupSpec] = []
    for n in range(1, max_n + 1):
        for m in range(1, max_m + 1):
            for p in range(1, m + 1):
                if m % p != 0:
                    continue
                if n == 1 and p > 1:
                    continue
                g = GroupSpec(m, p, n)
                if g.order <= max_order:
                    out.append(g)
    return tuple(out)


REDUCIBLE_NATURAL = "reducible natural representation"


def reducibility_note(g: GroupSpec) -> str | None:
    """Known reducible or isomorphic-duplicate realizations, for report
    headers; verdicts are still computed."""
    if g.m == 1 and g.n >= 2:
        return f"{g}: natural n-dimensional realization is trivial + standard (reducible)"
    if (g.m, g.p, g.n) == (2, 2, 2):
        return "G(2,2,2): reducible (isomorphic to G(1,1,2) x G(1,1,2))"
    return None


def isomorphism_note(g: GroupSpec) -> str | None:
    if (g.m, g.p, g.n) == (2, 2, 3):
        return "G(2,2,3) is isomorphic to G(1,1,4) (the symmetric group S4)"
    if (g.m, g.p, g.n) == (4, 4, 2):
        return "G(4,4,2) is isomorphic to G(2,1,2) (the hyperoctahedral group B2)"
    if (g.m, g.p, g.n) == (3, 3, 2):
        return "G(3,3,2) is isomorphic to G(1,1,3) (the symmetric group S3)"
    if g.n == 1 and g.p > 1:
        return f"{g} coincides with G({g.d},1,1) as a matrix group"
    return None

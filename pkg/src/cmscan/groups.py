"""Exact matrix realizations of G(m,p,n).

Elements are monomial matrices stored as (permutation, exponent vector):
the matrix has entry zeta_m^exps[i] in row perm[i], column i.  Element
enumeration, reflection detection (rank(1 - w) = 1 over Q(zeta_m)),
conjugacy classes of reflections, restricted symplectic forms on h + h*
and Molien series all live here; everything is exact.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cyclo import CycloNumber
from .fakedeg import GroupSpec
from .polycore import LaurentPoly

DEFAULT_MAX_ORDER = 10**6


class GroupTooLargeError(ValueError):
    pass


class ReducibleRepresentationError(ValueError):
    pass


@dataclass(frozen=True)
class MonomialElement:
    """One monomial matrix: entry zeta^exps[i] at (perm[i], i)."""

    m: int
    perm: tuple[int, ...]
    exps: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm must be a permutation of 0..n-1")
        if len(self.exps) != len(self.perm):
            raise ValueError("need one exponent per coordinate")
        if any(not 0 <= e < self.m for e in self.exps):
            raise ValueError("exponents must be reduced mod m")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, m: int, n: int) -> MonomialElement:
        return cls(m, tuple(range(n)), (0,) * n)

    def __mul__(self, other: MonomialElement) -> MonomialElement:
        """Matrix product self * other (self applied second)."""
        if not isinstance(other, MonomialElement):
            return NotImplemented
        if self.m != other.m or self.n != other.n:
            raise ValueError("mixed ambient groups")
        perm = tuple(self.perm[other.perm[j]] for j in range(self.n))
        exps = tuple(
            (other.exps[j] + self.exps[other.perm[j]]) % self.m
            for j in range(self.n)
        )
        return MonomialElement(self.m, perm, exps)

    def inv(self) -> MonomialElement:
        q = [0] * self.n
        for i, img in enumerate(self.perm):
            q[img] = i
        exps = tuple((-self.exps[q[k]]) % self.m for k in range(self.n))
        return MonomialElement(self.m, tuple(q), exps)

    def is_identity(self) -> bool:
        return self.perm == tuple(range(self.n)) and not any(self.exps)

    def matrix(self) -> linalg.Matrix:
        zero = CycloNumber.zero(self.m)
        rows = [[zero] * self.n for _ in range(self.n)]
        for j in range(self.n):
            rows[self.perm[j]][j] = CycloNumber.zeta(self.m, self.exps[j])
        return tuple(tuple(r) for r in rows)

    def trace(self) -> CycloNumber:
        acc = CycloNumber.zero(self.m)
        for i in range(self.n):
            if self.perm[i] == i:
                acc = acc + CycloNumber.zeta(self.m, self.exps[i])
        return acc

    def trace_inverse(self) -> CycloNumber:
        acc = CycloNumber.zero(self.m)
        for i in range(self.n):
            if self.perm[i] == i:
                acc = acc + CycloNumber.zeta(self.m, -self.exps[i] % self.m)
        return acc

    def cycles(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for start in range(self.n):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            j = self.perm[start]
            while j != start:
                seen[j] = True
                cyc.append(j)
                j = self.perm[j]
            out.append(cyc)
        return out

    def sort_key(self) -> tuple:
        return (self.perm, self.exps)


def elements(g: GroupSpec, max_order: int = DEFAULT_MAX_ORDER):
    """All elements in deterministic (perm, exps) lexicographic order."""
    if g.order > max_order:
        raise GroupTooLargeError(
            f"{g} has order {g.order} > bound {max_order}")
    for perm in itertools.permutations(range(g.n)):
        for exps in itertools.product(range(g.m), repeat=g.n):
            if sum(exps) % g.p == 0:
                yield MonomialElement(g.m, perm, exps)


def _one_minus_rows(w: MonomialElement) -> list[dict[int, CycloNumber]]:
    one = CycloNumber.one(w.m)
    rows: list[dict[int, CycloNumber]] = [{i: one} for i in range(w.n)]
    for j in range(w.n):
        row = rows[w.perm[j]]
        val = row.get(j, CycloNumber.zero(w.m)) - CycloNumber.zeta(w.m, w.exps[j])
        if val.is_zero():
            row.pop(j, None)
        else:
            row[j] = val
    return rows


def is_reflection(w: MonomialElement) -> bool:
    """rank(1 - w) == 1, computed exactly over Q(zeta_m)."""
    return linalg.sparse_rank(_one_minus_rows(w), stop_at=2) == 1


@dataclass(frozen=True)
class ReflectionClass:
    """A conjugacy class of reflections with its nontrivial eigenvalue."""

    elements: tuple[MonomialElement, ...]
    zeta: CycloNumber

    @property
    def size(self) -> int:
        return len(self.elements)


def reflection_classes(g: GroupSpec,
                       max_order: int = DEFAULT_MAX_ORDER) -> tuple[ReflectionClass, ...]:
    """Conjugacy classes of reflections, ordered by first appearance."""
    all_elements = list(elements(g, max_order))
    reflections = [w for w in all_elements if is_reflection(w)]
    assigned: set[MonomialElement] = set()
    classes: list[ReflectionClass] = []
    n_minus_1 = CycloNumber.from_rational(g.m, g.n - 1)
    for s in reflections:
        if s in assigned:
            continue
        orbit = {x * s * x.inv() for x in all_elements}
        assigned |= orbit
        members = tuple(sorted(orbit, key=MonomialElement.sort_key))
        zeta = s.trace() - n_minus_1
        classes.append(ReflectionClass(members, zeta))
    return tuple(classes)


def character_norm(g: GroupSpec, max_order: int = DEFAULT_MAX_ORDER) -> Fraction:
    """<chi, chi> of the natural character, exactly."""
    acc = CycloNumber.zero(g.m)
    for w in elements(g, max_order):
        acc = acc + w.trace() * w.trace_inverse()
    return acc.as_rational() / g.order


def is_irreducible_natural(g: GroupSpec, max_order: int = DEFAULT_MAX_ORDER) -> bool:
    return character_norm(g, max_order) == 1


# -- the symplectic form on h + h* ---------------------------------------

@dataclass(frozen=True)
class SymplecticVector:
    """A vector of h + h* in coordinates (h part, dual-basis h* part)."""

    h: tuple[CycloNumber, ...]
    hstar: tuple[CycloNumber, ...]

    @classmethod
    def from_rationals(cls, m: int, h, hstar) -> SymplecticVector:
        return cls(tuple(CycloNumber.from_rational(m, c) for c in h),
                   tuple(CycloNumber.from_rational(m, c) for c in hstar))

    def concat(self) -> linalg.Vector:
        return self.h + self.hstar


def omega(x: SymplecticVector, y: SymplecticVector) -> CycloNumber:
    """omega((f1,f2),(g1,g2)) = f2(g1) - g2(f1)."""
    acc = CycloNumber.zero(x.h[0].m)
    for a, b in zip(x.hstar, y.h):
        acc = acc + a * b
    for a, b in zip(y.hstar, x.h):
        acc = acc - a * b
    return acc


def omega_restricted(s: MonomialElement, x: SymplecticVector,
                     y: SymplecticVector) -> CycloNumber:
    """omega(pi_s x, pi_s y) where pi_s projects onto Im(1 - s) along
    Ker(1 - s) in the h + h* action; s must be a reflection."""
    if not is_reflection(s):
        raise ValueError("omega_restricted needs a reflection")
    form = linalg.restricted_form_matrix(
        linalg.symplectic_extension(s.matrix(), s.m), s.m)
    xv, yv = x.concat(), y.concat()
    return linalg._dot(linalg.mat_vec(form, yv), xv)


def omega_class_sum(g: GroupSpec, refl_class: ReflectionClass) -> Fraction:
    """Scalar lambda with sum_{s in class} omega_s == lambda * omega.

    Verified entrywise on the standard basis, and asserted equal to the
    exact closed form (k/n)(1-zeta)^-1(1-zeta^-1)^-1(2-zeta-zeta^-1).
    Refuses reducible natural representations, where the Schur argument
    does not apply.
    """
    if not is_irreducible_natural(g):
        raise ReducibleRepresentationError(
            f"natural representation of {g} is reducible")
    m = g.m
    total: linalg.Matrix | None = None
    for s in refl_class.elements:
        form = linalg.restricted_form_matrix(
            linalg.symplectic_extension(s.matrix(), m), m)
        total = form if total is None else tuple(
            tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(total, form))
    j = linalg.symplectic_form_matrix(g.n, m)
    lam = linalg.proportionality_scalar(total, j)
    if lam is None:
        raise AssertionError(f"class sum for {g} is not proportional to omega")
    zeta = refl_class.zeta
    zinv = zeta.conj()
    one = CycloNumber.one(m)
    closed = (
        (one - zeta).inverse() * (one - zinv).inverse()
        * (CycloNumber.from_rational(m, 2) - zeta - zinv)
        * Fraction(refl_class.size, g.n)
    )
    assert lam == closed, "closed form disagrees with the computed scalar"
    return lam.as_rational()


# -- Molien series --------------------------------------------------------

def molien_series(g: GroupSpec, truncate: int = 30,
                  max_order: int = DEFAULT_MAX_ORDER) -> LaurentPoly:
    """(1/|W|) sum_w 1/det(1 - t w) to order ``truncate``, exactly.

    det(1 - t w) = prod over permutation cycles of (1 - zeta^E t^len),
    so elements are grouped by their cycle signature before the series
    work; the rational-integrality of the result is asserted.
    """
    signatures: dict[tuple[tuple[int, int], ...], int] = {}
    for w in elements(g, max_order):
        sig = []
        for cyc in w.cycles():
            total = sum(w.exps[i] for i in cyc) % g.m
            sig.append((len(cyc), total))
        key = tuple(sorted(sig))
        signatures[key] = signatures.get(key, 0) + 1

    n_terms = truncate + 1
    zero = CycloNumber.zero(g.m)
    one = CycloNumber.one(g.m)
    acc = [zero] * n_terms
    for sig, count in sorted(signatures.items()):
        den = [zero] * n_terms
        den[0] = one
        for length, exp in sig:
            z = CycloNumber.zeta(g.m, exp)
            nxt = list(den)
            for k in range(length, n_terms):
                if not den[k - length].is_zero():
                    nxt[k] = nxt[k] - z * den[k - length]
            den = nxt
        inv = [zero] * n_terms
        inv[0] = one
        for k in range(1, n_terms):
            s = zero
            for j in range(1, k + 1):
                if not den[j].is_zero() and not inv[k - j].is_zero():
                    s = s + den[j] * inv[k - j]
            inv[k] = -s
        c = Fraction(count)
        acc = [a + v * c for a, v in zip(acc, inv)]

    scale = Fraction(1, g.order)
    out: dict[int, int] = {}
    for k, v in enumerate(acc):
        value = v * scale
        coeff = value.as_rational()
        if coeff.denominator != 1:
            raise AssertionError(f"Molien coefficient at t^{k} is not integral")
        if coeff.numerator:
            out[k] = coeff.numerator
    return LaurentPoly(out)


def degrees_series(g: GroupSpec, truncate: int = 30) -> LaurentPoly:
    """prod 1/(1 - t^degree) truncated; the invariant-theory prediction."""
    den = LaurentPoly.one()
    for deg in g.degrees:
        den = den * LaurentPoly({0: 1, deg: -1})
    from .polycore import series_quotient
    return series_quotient(LaurentPoly.one(), den, truncate)

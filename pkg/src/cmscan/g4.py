"""The binary tetrahedral group as unit quaternions, its character
table, and the trace/form identities behind generic smoothness of its
Calogero-Moser space.

The 24 elements are +-1, +-i, +-j, +-k and the sixteen half-quaternions
(+-1 +- i +- j +- k)/2.  Class functions live over Q(omega); the
reflection representation h is realized as the V1-twist of the
quaternionic 2x2 matrices, with entries in Q(zeta_12) where Q(i) and
Q(omega) must mix.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .cyclo import CycloNumber

__all__ = [
    "Quaternion", "G4", "build_g4", "ROW_NAMES", "decompose",
    "inner_product", "solve_ef_multiplicities", "admissible_shapes",
    "ModuleShape", "reflection_form_check", "run_battery",
]


@dataclass(frozen=True)
class Quaternion:
    """a + b i + c j + d k with rational components."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    @classmethod
    def of(cls, a, b=0, c=0, d=0) -> Quaternion:
        return cls(Fraction(a), Fraction(b), Fraction(c), Fraction(d))

    def __mul__(self, other: Quaternion) -> Quaternion:
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = other.a, other.b, other.c, other.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __neg__(self) -> Quaternion:
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def conjugate(self) -> Quaternion:
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def norm(self) -> Fraction:
        return self.a ** 2 + self.b ** 2 + self.c ** 2 + self.d ** 2

    def inv(self) -> Quaternion:
        n = self.norm()
        conj = self.conjugate()
        return Quaternion(conj.a / n, conj.b / n, conj.c / n, conj.d / n)

    def order(self) -> int:
        power = self
        for k in range(1, 25):
            if power == ONE:
                return k
            power = power * self
        raise AssertionError("element order exceeds 24")

    def matrix(self, m: int = 12) -> linalg.Matrix:
        """2x2 matrix [[a+bi, c+di], [-c+di, a-bi]] over Q(zeta_m), 4|m."""
        if m % 4:
            raise ValueError("need a field containing i")
        i = CycloNumber.zeta(m, m // 4)
        rat = lambda q: CycloNumber.from_rational(m, q)
        return (
            (rat(self.a) + rat(self.b) * i, rat(self.c) + rat(self.d) * i),
            (rat(-self.c) + rat(self.d) * i, rat(self.a) - rat(self.b) * i),
        )

    def render(self) -> str:
        if self.a.denominator == 1:
            parts = []
            for coef, sym in zip((self.a, self.b, self.c, self.d),
                                 ("1", "i", "j", "k")):
                if coef == 0:
                    continue
                sign = "-" if coef < 0 else ("+" if parts else "")
                mag = abs(coef)
                body = sym if (mag == 1 and sym != "1") else str(mag)
                parts.append(f"{sign}{body}")
            return "".join(parts) or "0"
        inner = "".join(
            ("-" if coef < 0 else ("+" if idx else "")) + sym
            for idx, (coef, sym) in enumerate(
                zip((self.a, self.b, self.c, self.d), ("1", "i", "j", "k"))))
        return f"({inner})/2"

    def __str__(self) -> str:
        return self.render()


ONE = Quaternion.of(1)
I = Quaternion.of(0, 1)
J = Quaternion.of(0, 0, 1)
K = Quaternion.of(0, 0, 0, 1)
HALF = Fraction(1, 2)

S1 = Quaternion(-HALF, HALF, HALF, -HALF)
S2 = Quaternion(-HALF, HALF, -HALF, HALF)
S3 = Quaternion(-HALF, -HALF, HALF, HALF)
S4 = Quaternion(-HALF, -HALF, -HALF, -HALF)
T1 = Quaternion(-HALF, -HALF, -HALF, HALF)
T2 = Quaternion(-HALF, HALF, -HALF, -HALF)
T3 = Quaternion(-HALF, -HALF, HALF, -HALF)
T4 = Quaternion(-HALF, HALF, HALF, HALF)

CLASS_SIZES = (1, 1, 4, 4, 6, 4, 4)
# Element orders per class; Cl2 = {-1} is the central involution, so its
# order is 2 (a size-1 class of order 1 could only be the identity class,
# and the W character separates Cl2 from Cl1).
CLASS_ORDERS = (1, 2, 3, 3, 4, 6, 6)
ROW_NAMES = ("T", "V1", "V2", "W", "h", "h*", "U")

ClassFunction = tuple  # 7 CycloNumber(3) values on Cl1..Cl7


def _omega_row(*spec) -> ClassFunction:
    """Row values given as ints or (coeff, omega_power) pairs."""
    out = []
    for entry in spec:
        if isinstance(entry, tuple):
            coeff, power = entry
            val = CycloNumber.zeta(3, power) * Fraction(coeff)
        else:
            val = CycloNumber.from_rational(3, entry)
        out.append(val)
    return tuple(out)


CHARACTER_TABLE: dict[str, ClassFunction] = {
    "T":  _omega_row(1, 1, 1, 1, 1, 1, 1),
    "V1": _omega_row(1, 1, (1, 2), (1, 1), 1, (1, 2), (1, 1)),
    "V2": _omega_row(1, 1, (1, 1), (1, 2), 1, (1, 1), (1, 2)),
    "W":  _omega_row(2, -2, -1, -1, 0, 1, 1),
    "h":  _omega_row(2, -2, (-1, 2), (-1, 1), 0, (1, 2), (1, 1)),
    "h*": _omega_row(2, -2, (-1, 1), (-1, 2), 0, (1, 1), (1, 2)),
    "U":  _omega_row(3, 3, 0, 0, -1, 0, 0),
}


@dataclass(frozen=True)
class G4:
    """The group with its conjugacy classes labeled Cl1..Cl7."""

    elements: tuple[Quaternion, ...]
    classes: tuple[tuple[Quaternion, ...], ...]

    def class_index(self, q: Quaternion) -> int:
        for idx, cls in enumerate(self.classes):
            if q in cls:
                return idx
        raise ValueError(f"{q} is not a group element")


def _close_under_multiplication(gens: list[Quaternion]) -> set[Quaternion]:
    group = set(gens)
    frontier = list(gens)
    while frontier:
        fresh = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in group:
                    group.add(y)
                    fresh.append(y)
        frontier = fresh
    return group


def build_g4() -> G4:
    """Construct the 24 elements and label the seven conjugacy classes.

    Labels are pinned by representatives (1, -1, s1, t1, i, t1*t2,
    s1*s2): element order and quaternionic trace alone cannot separate
    Cl3 from Cl4 or Cl6 from Cl7.  Sizes, orders and the explicit
    reflection-class element lists are asserted during construction.
    """
    listed = [ONE, -ONE, I, -I, J, -J, K, -K] + [
        Quaternion(sa * HALF, sb * HALF, sc * HALF, sd * HALF)
        for sa, sb, sc, sd in itertools.product((1, -1), repeat=4)]
    assert len(set(listed)) == 24
    generated = _close_under_multiplication([S1, S2])
    assert generated == set(listed), "s1, s2 must generate all 24 elements"
    assert _close_under_multiplication(listed) == set(listed), "not closed"

    elements = tuple(listed)
    remaining = set(elements)
    raw_classes = []
    for q in elements:
        if q not in remaining:
            continue
        orbit = frozenset(x * q * x.inv() for x in elements)
        remaining -= orbit
        raw_classes.append(orbit)

    def class_of(rep: Quaternion) -> tuple[Quaternion, ...]:
        for orbit in raw_classes:
            if rep in orbit:
                return tuple(sorted(
                    orbit, key=lambda q: (q.a, q.b, q.c, q.d), reverse=True))
        raise AssertionError(f"no class contains {rep}")

    classes = tuple(class_of(rep)
                    for rep in (ONE, -ONE, S1, T1, I, T1 * T2, S1 * S2))
    assert len(raw_classes) == 7
    assert tuple(len(c) for c in classes) == CLASS_SIZES
    assert tuple(c[0].order() for c in classes) == CLASS_ORDERS
    for cls in classes:
        assert len({q.order() for q in cls}) == 1
    assert set(classes[2]) == {S1, S2, S3, S4}
    assert set(classes[3]) == {T1, T2, T3, T4}
    assert set(classes[4]) == {I, -I, J, -J, K, -K}
    assert T1 * T1 in classes[2], "t1^2 must land in Cl3"
    return G4(elements, classes)


def presentation_check(group: G4) -> None:
    """s1^3 = s2^3 = (s1 s2)^6 = 1, with the intermediate powers != 1."""
    assert S1.order() == 3 and S2.order() == 3
    assert (S1 * S2).order() == 6
    assert I * J == K
    assert S1 * T1 == ONE, "t1 must invert s1"
    assert set(group.elements) == _close_under_multiplication([S1, S2])


def class_product_check(group: G4) -> None:
    """Membership facts used by the trace argument: products of the two
    reflection classes land in prescribed classes."""
    for t in (S2, S3, S4):
        assert group.class_index(S1 * t) == 6, f"s1*{t} not in Cl7"
    for t in (T2, T3, T4):
        assert group.class_index(S1 * t) == 4, f"s1*{t} not in Cl5"
    for t in (T2, T3, T4):
        assert group.class_index(T1 * t) == 5, f"t1*{t} not in Cl6"
    assert group.class_index(T1 * T1) == 2


# -- character arithmetic over Q(omega) ------------------------------------

def class_function(values) -> ClassFunction:
    """Lift 7 integers (or CycloNumbers over Q(omega)) to a class function."""
    out = []
    for v in values:
        out.append(v if isinstance(v, CycloNumber)
                   else CycloNumber.from_rational(3, v))
    if len(out) != 7:
        raise ValueError("class functions have 7 values")
    return tuple(out)


def inner_product(chi: ClassFunction, psi: ClassFunction) -> CycloNumber:
    acc = CycloNumber.zero(3)
    for size, x, y in zip(CLASS_SIZES, chi, psi):
        acc = acc + x * y.conj() * Fraction(size)
    return acc * Fraction(1, 24)


def decompose(chi: ClassFunction) -> dict[str, int]:
    """Multiplicities against the table rows; rejects non-virtual input."""
    out = {}
    for name in ROW_NAMES:
        mult = inner_product(chi, CHARACTER_TABLE[name])
        if not mult.is_rational():
            raise ValueError(f"not a virtual character: <chi, {name}> "
                             "is irrational")
        value = mult.as_rational()
        if value.denominator != 1:
            raise ValueError(f"not a virtual character: <chi, {name}> = {value}")
        out[name] = value.numerator
    return out


def pointwise_product(chi: ClassFunction, psi: ClassFunction) -> ClassFunction:
    return tuple(x * y for x, y in zip(chi, psi))


def character_of(multiplicities: dict[str, int]) -> ClassFunction:
    acc = [CycloNumber.zero(3)] * 7
    for name, mult in multiplicities.items():
        row = CHARACTER_TABLE[name]
        acc = [a + v * Fraction(mult) for a, v in zip(acc, row)]
    return tuple(acc)


E_CHARACTER = character_of({"T": 1, "V1": 1, "V2": 1, "U": 3})
F_CHARACTER = character_of({"h": 1, "h*": 1, "W": 1})


def endomorphism_character(chi: ClassFunction) -> ClassFunction:
    return pointwise_product(chi, tuple(v.conj() for v in chi))


def orthogonality_check() -> None:
    rows = [CHARACTER_TABLE[name] for name in ROW_NAMES]
    one, zero = CycloNumber.one(3), CycloNumber.zero(3)
    for i, chi in enumerate(rows):
        for j, psi in enumerate(rows):
            want = one if i == j else zero
            assert inner_product(chi, psi) == want, (i, j)
    for ci in range(7):
        for cj in range(7):
            acc = CycloNumber.zero(3)
            for chi in rows:
                acc = acc + chi[ci] * chi[cj].conj()
            want = (CycloNumber.from_rational(3, Fraction(24, CLASS_SIZES[ci]))
                    if ci == cj else zero)
            assert acc == want, (ci, cj)


def trace_consistency_check(group: G4) -> None:
    """Quaternionic 2x2 trace (= 2 * real part) matches the W row."""
    w_row = CHARACTER_TABLE["W"]
    for q in group.elements:
        value = w_row[group.class_index(q)].lift(12)
        mat = q.matrix(12)
        assert mat[0][0] + mat[1][1] == value, q


# -- the (n, m) -> aE + bF solver and the shape enumeration ----------------

def solve_ef_multiplicities(n: int, m: int) -> tuple[int, int] | None:
    """Solve chi = (n, m, 0, ..., 0) = a*chi_E + b*chi_F.

    a = (n + m)/24 and b = 2(n - m)/24; returns None unless both are
    nonnegative integers (then 12a + 6b = n and 12a - 6b = m).
    """
    a_num, b_num = n + m, 2 * (n - m)
    if a_num % 24 or b_num % 24:
        return None
    a, b = a_num // 24, b_num // 24
    if a < 0 or b < 0:
        return None
    assert 12 * a + 6 * b == n and 12 * a - 6 * b == m
    return a, b


@dataclass(frozen=True)
class ModuleShape:
    """One candidate aE + bF with the End-summand facts that decide it."""

    a: int
    b: int
    eliminated: bool

    @property
    def dim(self) -> int:
        return 12 * self.a + 6 * self.b

    def render(self) -> str:
        e_part = [] if self.a == 0 else [f"{self.a if self.a > 1 else ''}E"]
        f_part = [] if self.b == 0 else [f"{self.b if self.b > 1 else ''}F"]
        name = " + ".join(e_part + f_part)
        if (self.a, self.b) == (1, 2):
            name += " (regular representation)"
        status = "eliminated" if self.eliminated else "admissible"
        return f"{name}: dim {self.dim}, {status}"


def admissible_shapes() -> tuple[ModuleShape, ...]:
    """All nonzero aE + bF with dim <= 24, flagged by the trace argument.

    A shape is eliminated exactly when h and h* both have multiplicity 0
    in End(aE + bF): then h + h* acts as zero and the commutation
    relation collapses to 0 = 2(c1 + c2) omega(x, y), impossible for
    generic parameters.  Only E + F and the regular representation
    E + 2F survive.
    """
    shapes = []
    for a in range(3):
        for b in range(5):
            if (a, b) == (0, 0) or 12 * a + 6 * b > 24:
                continue
            chi = tuple(x * Fraction(a) + y * Fraction(b)
                        for x, y in zip(E_CHARACTER, F_CHARACTER))
            mults = decompose(endomorphism_character(chi))
            eliminated = mults["h"] == 0 and mults["h*"] == 0
            shapes.append(ModuleShape(a, b, eliminated))
    shapes.sort(key=lambda s: (s.dim, s.b))
    assert len(shapes) == 8
    assert {(s.a, s.b) for s in shapes if not s.eliminated} == {(1, 1), (1, 2)}
    return tuple(shapes)


def summand_absence_check() -> dict[str, int]:
    """h and h* are absent from End(E) and End(F); the full published
    decompositions are asserted."""
    end_e = decompose(endomorphism_character(E_CHARACTER))
    end_f = decompose(endomorphism_character(F_CHARACTER))
    assert end_e == {"T": 12, "V1": 12, "V2": 12, "W": 0,
                     "h": 0, "h*": 0, "U": 36}, end_e
    assert end_f == {"T": 3, "V1": 3, "V2": 3, "W": 0,
                     "h": 0, "h*": 0, "U": 9}, end_f
    return {"End(E)": end_e["h"] + end_e["h*"],
            "End(F)": end_f["h"] + end_f["h*"]}


# -- the reflection representation and its restricted-form sums ------------

def reflection_matrix(group: G4, q: Quaternion) -> linalg.Matrix:
    """Action of q on h: the V1-twist of the quaternionic matrix, over
    Q(zeta_12).  On Cl3/Cl4 this has eigenvalues {1, omega} / {1, omega^2},
    so those classes act by genuine reflections (the untwisted quaternionic
    matrices do not)."""
    twist = CHARACTER_TABLE["V1"][group.class_index(q)].lift(12)
    return linalg.scalar_mul(twist, q.matrix(12))


def reflection_form_check(group: G4) -> dict[str, Fraction]:
    """Sum the restricted symplectic forms over Cl3 and over Cl4 on
    h + h*; each sum must equal exactly 2 times the standard form, and
    the scalar must match (k/n)(1-z)^-1(1-z^-1)^-1(2-z-z^-1)."""
    m = 12
    j = linalg.symplectic_form_matrix(2, m)
    one = CycloNumber.one(m)
    results: dict[str, Fraction] = {}
    for label, index in (("Cl3", 2), ("Cl4", 3)):
        total = None
        zeta = None
        for q in group.classes[index]:
            rho = reflection_matrix(group, q)
            b = linalg.mat_sub(linalg.identity(2, m), rho)
            assert linalg.rank(b) == 1, f"{q} does not act as a reflection"
            zeta_q = rho[0][0] + rho[1][1] - one
            zeta = zeta_q if zeta is None else zeta
            assert zeta_q == zeta, "eigenvalue must be constant on the class"
            form = linalg.restricted_form_matrix(
                linalg.symplectic_extension(rho, m), m)
            total = form if total is None else tuple(
                tuple(x + y for x, y in zip(rx, ry))
                for rx, ry in zip(total, form))
        lam = linalg.proportionality_scalar(total, j)
        assert lam is not None, f"{label} sum is not proportional to omega"
        closed = ((one - zeta).inverse() * (one - zeta.conj()).inverse()
                  * (CycloNumber.from_rational(m, 2) - zeta - zeta.conj())
                  * Fraction(4, 2))
        assert lam == closed, "closed form disagrees"
        scalar = lam.as_rational()
        assert scalar == 2, f"{label} scalar is {scalar}, expected 2"
        results[label] = scalar
    return results


def homomorphism_check(group: G4) -> None:
    """The h-realization is multiplicative and has the h-row character."""
    h_row = CHARACTER_TABLE["h"]
    for q in group.elements:
        rho = reflection_matrix(group, q)
        assert rho[0][0] + rho[1][1] == h_row[group.class_index(q)].lift(12), q
    for q1 in (S1, S2, T1, I, J):
        for q2 in (S1, T2, K, S1 * S2):
            lhs = reflection_matrix(group, q1 * q2)
            rhs = linalg.mat_mul(reflection_matrix(group, q1),
                                 reflection_matrix(group, q2))
            assert lhs == rhs, (q1, q2)


def tensor_positivity_check() -> None:
    """Products of genuine characters decompose with multiplicities >= 0."""
    for name_a in ROW_NAMES:
        for name_b in ROW_NAMES:
            mults = decompose(pointwise_product(
                CHARACTER_TABLE[name_a], CHARACTER_TABLE[name_b]))
            assert all(v >= 0 for v in mults.values()), (name_a, name_b)


def run_battery() -> tuple[tuple[str, str], ...]:
    """Run every check; returns (name, detail) lines, raising on failure."""
    group = build_g4()
    checks: list[tuple[str, str]] = []
    checks.append(("group order", f"|G4| = {len(group.elements)}"))
    presentation_check(group)
    checks.append(("presentation", "s1^3 = s2^3 = (s1*s2)^6 = 1; "
                   "s1, s2 generate; i*j = k"))
    checks.append(("conjugacy classes",
                   f"sizes {CLASS_SIZES}, orders {CLASS_ORDERS}, "
                   "reflection classes Cl3/Cl4 as listed"))
    class_product_check(group)
    checks.append(("class products",
                   "s1*s_i in Cl7, s1*t_j in Cl5, t1*t_j in Cl6, t1^2 in Cl3"))
    orthogonality_check()
    checks.append(("character table", "row and column orthogonality over Q(omega)"))
    trace_consistency_check(group)
    checks.append(("quaternionic traces", "2 * Re(q) matches the W row"))
    homomorphism_check(group)
    checks.append(("reflection representation",
                   "V1-twisted quaternionic action realizes the h row"))
    regular = class_function((24, 0, 0, 0, 0, 0, 0))
    reg = decompose(regular)
    assert reg == {"T": 1, "V1": 1, "V2": 1, "W": 2, "h": 2, "h*": 2, "U": 3}
    checks.append(("regular character", "multiplicities equal the degrees"))
    summand_absence_check()
    checks.append(("End decompositions",
                   "End(E) = 12T + 12V1 + 12V2 + 36U, "
                   "End(F) = 3T + 3V1 + 3V2 + 9U; no h or h* summand"))
    tensor_positivity_check()
    checks.append(("tensor positivity",
                   "all 49 products of rows decompose nonnegatively"))
    for (n, m), want in (((12, 12), (1, 0)), ((6, -6), (0, 1)),
                         ((24, 0), (1, 2)), ((18, 6), (1, 1))):
        got = solve_ef_multiplicities(n, m)
        assert got == want, (n, m, got)
    assert solve_ef_multiplicities(1, 2) is None
    checks.append(("aE + bF solver",
                   "(12,12)->(1,0) (6,-6)->(0,1) (24,0)->(1,2) "
                   "(18,6)->(1,1); (1,2) infeasible"))
    shapes = admissible_shapes()
    survivors = [s.render() for s in shapes if not s.eliminated]
    checks.append(("module shapes", f"8 candidates with dim <= 24; "
                   f"surviving: {'; '.join(survivors)}"))
    forms = reflection_form_check(group)
    checks.append(("restricted form sums",
                   f"sum over Cl3 = {forms['Cl3']} * omega, "
                   f"sum over Cl4 = {forms['Cl4']} * omega"))
    return tuple(checks)

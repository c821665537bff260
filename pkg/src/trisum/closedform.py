"""Closed-form evaluation of the series families.

Everything reduces to the basis integral

    C_r(lam) = integral over (0,1) of log x / (x - lam)^{r+1} dx,

which is a dilogarithm at r = 0 and elementary for r >= 1.  Expanding
the rational factor of each series' integral representation into
partial fractions over the roots of x(1-x)^2 = z and integrating
termwise gives the sum as a finite combination of C_r values at the
three roots; the log(x/(1-x)) kernel swaps x for 1-x in the second
half, which lands on C_r(1-lam) with an alternating sign, folded here
into C_mirror.

The registry at the bottom holds the published closed-form constants
for specific (family, z, m) triples, stored as exact-rational
combinations of a small atom set so they can be evaluated and printed
without rounding surprises.  Each entry's ``scale`` maps the family
normal form onto the constant as printed (the printed series absorb
powers of -1 and small integer factors into their coefficients).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, NonConvergent, UnknownConstant
from .jets import coeff_a, coeff_b
from .roots import CubicRoots, solve_cubic
from .series import SeriesFamily
from .specfun import catalan, dilog

__all__ = [
    "C_of",
    "C_mirror",
    "ClosedFormBreakdown",
    "closed_sum",
    "ConstantEntry",
    "REGISTRY",
    "reference_constant",
]

_CLOSED_FORM_FAMILIES = (SeriesFamily.A1, SeriesFamily.A2, SeriesFamily.B1, SeriesFamily.B2)


def _check_lam(lam: complex) -> complex:
    lam = complex(lam)
    if not (math.isfinite(lam.real) and math.isfinite(lam.imag)):
        raise DomainError(f"pole location must be finite, got {lam!r}")
    if lam.imag == 0.0 and 0.0 <= lam.real <= 1.0:
        raise DomainError(
            f"the basis integral diverges for a pole at {lam.real!r} inside [0, 1]"
        )
    return lam


def C_of(r: int, lam: complex) -> complex:
    """Closed form of the basis integral with a pole of order r+1 at lam."""
    if not isinstance(r, int) or isinstance(r, bool) or r < 0:
        raise DomainError(f"pole order must be a nonnegative integer, got {r!r}")
    lam = _check_lam(lam)
    if r == 0:
        return dilog(1.0 / lam)
    sign = -1.0 if r % 2 else 1.0
    acc = 0j
    for p in range(1, r):
        acc += (1.0 / (p * lam ** (r - p))) * (1.0 / (lam - 1.0) ** p - 1.0 / lam ** p)
    log_ratio = cmath.log((lam - 1.0) / lam)
    return (sign / r) * acc - (sign / (r * lam ** r)) * log_ratio


def C_mirror(r: int, lam: complex) -> complex:
    """C_r(lam) + (-1)^r C_r(1-lam): the basis combination produced by
    the log(x/(1-x)) kernel."""
    swap = C_of(r, 1.0 - complex(lam))
    return C_of(r, lam) + (swap if r % 2 == 0 else -swap)


@dataclass(frozen=True)
class ClosedFormBreakdown:
    """Closed-form value of one series with its per-root contributions.

    total is the real value; contributions[i] is the (complex) inner
    sum at roots.roots[i] before the overall (-1)^m sign.  The
    conjugate root pair contributes conjugate values, so the grand sum
    is real up to rounding; imag_residual records what was discarded.
    """

    family: SeriesFamily
    z: float
    m: int
    total: float
    roots: CubicRoots
    contributions: tuple[complex, complex, complex]
    imag_residual: float


def closed_sum(family: SeriesFamily | str, z: float, m: int = 0) -> ClosedFormBreakdown:
    """Evaluate one closed-form family (A1, A2, B1, B2)."""
    family = SeriesFamily(family)
    if family not in _CLOSED_FORM_FAMILIES:
        raise DomainError(
            f"family {family.value} has no closed form; its value is defined "
            f"by series and quadrature only"
        )
    z = float(z)
    if not math.isfinite(z):
        raise DomainError(f"z must be finite, got {z!r}")
    if abs(z) < 1.0:
        raise NonConvergent(f"family {family.value} requires |z| >= 1, got {z!r}")
    if not isinstance(m, int) or isinstance(m, bool) or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m!r}")

    rts = solve_cubic(z)
    full_numerator = family in (SeriesFamily.A1, SeriesFamily.B1)
    mirrored = family in (SeriesFamily.B1, SeriesFamily.B2)

    contribs = []
    for which in (1, 2, 3):
        lam = rts.roots[which - 1]
        coeffs = (coeff_a if full_numerator else coeff_b)(m, z, rts, which)
        inner = 0j
        for r in range(m + 1):
            basis = C_mirror(r, lam) if mirrored else C_of(r, lam)
            inner += coeffs[r] * basis
        contribs.append(inner)

    grand = sum(contribs, start=0j)
    if m % 2:
        grand = -grand
    return ClosedFormBreakdown(
        family=family,
        z=z,
        m=m,
        total=grand.real,
        roots=rts,
        contributions=(contribs[0], contribs[1], contribs[2]),
        imag_residual=abs(grand.imag),
    )


# -- reference constants ----------------------------------------------------

_SQRT7 = math.sqrt(7.0)


@lru_cache(maxsize=None)
def _atom(name: str) -> float:
    if name == "pi":
        return math.pi
    if name == "ln2":
        return math.log(2.0)
    if name == "G":
        return catalan()
    if name == "sqrt7":
        return _SQRT7
    if name == "atan75":
        return math.atan(_SQRT7 / 5.0)
    if name in ("re_li2_w", "im_li2_w"):
        v = dilog(complex(3.0, _SQRT7) / 8.0)
        return v.real if name == "re_li2_w" else v.imag
    if name == "im_li2_quot":
        return (dilog(2.0 / complex(3.0, _SQRT7)) / complex(5.0, _SQRT7)).imag
    raise UnknownConstant(f"unknown atom {name!r}")


_ATOM_DISPLAY = {
    "pi": "pi",
    "ln2": "ln2",
    "G": "G",
    "sqrt7": "sqrt7",
    "atan75": "atan(sqrt7/5)",
    "re_li2_w": "Re Li2((3+i*sqrt7)/8)",
    "im_li2_w": "Im Li2((3+i*sqrt7)/8)",
    "im_li2_quot": "Im[Li2(2/(3+i*sqrt7))/(5+i*sqrt7)]",
}


@dataclass(frozen=True)
class ConstantEntry:
    """One published closed-form constant and the series it evaluates."""

    id: str
    family: SeriesFamily
    z: float
    m: int
    scale: Fraction  # printed value = scale * closed_sum(family, z, m).total
    terms: tuple[tuple[Fraction, tuple[str, ...]], ...]

    def value(self) -> float:
        parts = []
        for coeff, names in self.terms:
            prod = float(coeff)
            for n in names:
                prod *= _atom(n)
            parts.append(prod)
        return math.fsum(parts)

    def expression(self) -> str:
        chunks = []
        for coeff, names in self.terms:
            mag = abs(coeff)
            body = "*".join(_ATOM_DISPLAY[n] for n in names)
            if mag.denominator == 1:
                lead = f"{mag.numerator}" if (mag != 1 or not body) else ""
            else:
                lead = f"({mag.numerator}/{mag.denominator})"
            piece = f"{lead}*{body}" if (lead and body) else (lead or body)
            chunks.append(("- " if coeff < 0 else ("+ " if chunks else "")) + piece)
        return " ".join(chunks)


def _F(n: int, d: int = 1) -> Fraction:
    return Fraction(n, d)


def _entries() -> tuple[ConstantEntry, ...]:
    E = []

    def add(cid, family, z, m, scale, *terms):
        E.append(ConstantEntry(
            id=cid, family=SeriesFamily(family), z=float(z), m=m,
            scale=Fraction(scale),
            terms=tuple((coeff, tuple(names)) for coeff, *names in terms),
        ))

    add("a1-z2-m0", "A1", 2, 0, 1,
        (_F(1, 48), "pi", "pi"), (_F(-1, 10), "ln2", "ln2"), (_F(2, 5), "G"))
    add("a1-zneg4-m0-dilog", "A1", -4, 0, -1,
        (_F(1, 96), "pi", "pi"), (_F(1, 8), "re_li2_w"),
        (_F(5, 56), "sqrt7", "im_li2_w"))
    add("a1-zneg4-m0-quot", "A1", -4, 0, -1,
        (_F(1, 96), "pi", "pi"), (_F(-4, 7), "sqrt7", "im_li2_quot"))
    add("a1-z2-m1", "A1", 2, 1, 1,
        (_F(3, 100), "pi"), (_F(-3, 400), "pi", "pi"), (_F(3, 25), "ln2"),
        (_F(9, 250), "ln2", "ln2"), (_F(-13, 125), "G"))
    add("a1-z2-m2", "A1", 2, 2, 1,
        (_F(3, 100),), (_F(-29, 1250), "pi"), (_F(149, 30000), "pi", "pi"),
        (_F(-58, 625), "ln2"), (_F(-149, 6250), "ln2", "ln2"), (_F(243, 3125), "G"))
    add("a1-z2-m3", "A1", 2, 3, 1,
        (_F(-13, 375),), (_F(1529, 75000), "pi"), (_F(-577, 150000), "pi", "pi"),
        (_F(752, 9375), "ln2"), (_F(577, 31250), "ln2", "ln2"), (_F(-1903, 31250), "G"))
    add("a2-z2-m1", "A2", 2, 1, 1,
        (_F(3, 200), "pi"), (_F(1, 150), "pi", "pi"), (_F(3, 50), "ln2"),
        (_F(-4, 125), "ln2", "ln2"), (_F(37, 250), "G"))
    add("a2-z2-m2", "A2", 2, 2, 1,
        (_F(3, 400),), (_F(23, 2500), "pi"), (_F(27, 10000), "pi", "pi"),
        (_F(23, 625), "ln2"), (_F(-81, 6250), "ln2", "ln2"), (_F(843, 12500), "G"))
    add("a2-z2-m3", "A2", 2, 3, 1,
        (_F(83, 12000),), (_F(3059, 600000), "pi"), (_F(11, 9375), "pi", "pi"),
        (_F(1517, 75000), "ln2"), (_F(-88, 15625), "ln2", "ln2"), (_F(8137, 250000), "G"))
    add("b1-z2-m0", "B1", 2, 0, 1,
        (_F(1, 20), "pi", "ln2"), (_F(-3, 40), "ln2", "ln2"), (_F(-1, 160), "pi", "pi"))
    add("b1-zneg4-m0", "B1", -4, 0, -1,
        (_F(3, 64), "ln2", "ln2"), (_F(1, 16), "atan75", "atan75"),
        (_F(-5, 112), "sqrt7", "ln2", "atan75"))
    add("b1-z2-m1", "B1", 2, 1, 1,
        (_F(-1, 200), "pi"), (_F(9, 4000), "pi", "pi"), (_F(3, 100), "ln2"),
        (_F(27, 1000), "ln2", "ln2"), (_F(-13, 1000), "pi", "ln2"))
    add("b1-z2-m2", "B1", 2, 2, 1,
        (_F(2, 625), "pi"), (_F(-149, 100000), "pi", "pi"), (_F(-51, 5000), "ln2"),
        (_F(-447, 25000), "ln2", "ln2"), (_F(243, 25000), "pi", "ln2"))
    add("b1-zneg4-m1", "B1", -4, 1, -1,
        (_F(3, 448), "ln2"), (_F(-9, 512), "ln2", "ln2"),
        (_F(-3, 128), "atan75", "atan75"), (_F(-1, 224), "sqrt7", "atan75"),
        (_F(89, 6272), "ln2", "sqrt7", "atan75"))
    add("b1-zneg4-m2", "B1", -4, 2, -2,
        (_F(-219, 25088), "ln2"), (_F(93, 4096), "ln2", "ln2"),
        (_F(31, 1024), "atan75", "atan75"), (_F(1, 256), "sqrt7", "atan75"),
        (_F(-6651, 351232), "ln2", "sqrt7", "atan75"))
    add("b2-z2-m1", "B2", 2, 1, 1,
        (_F(-1, 400), "pi"), (_F(37, 2000), "pi", "ln2"), (_F(-1, 500), "pi", "pi"),
        (_F(3, 200), "ln2"), (_F(-3, 125), "ln2", "ln2"))
    add("b2-z2-m2", "B2", 2, 2, 1,
        (_F(-17, 10000), "pi"), (_F(843, 100000), "pi", "ln2"),
        (_F(-81, 100000), "pi", "pi"), (_F(249, 20000), "ln2"),
        (_F(-243, 25000), "ln2", "ln2"))
    return tuple(E)


REGISTRY: dict[str, ConstantEntry] = {e.id: e for e in _entries()}


def reference_constant(cid: str) -> float:
    """Double value of one registry constant by id."""
    entry = REGISTRY.get(cid)
    if entry is None:
        raise UnknownConstant(
            f"no reference constant {cid!r}; known ids: {', '.join(REGISTRY)}"
        )
    return entry.value()

"""Monomial ideals as minimal generator sets of exponent vectors.

Covers Stanley-Reisner ideals, intersections, symbolic powers of squarefree
ideals, polarization, radicals and colons, and depth / Serre depth of S/I
for arbitrary monomial I (through polarization, or directly through degree
complexes of the local cohomology).
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import hochster
from .complex_core import (
    ComplexError,
    SimplicialComplex,
    complex_from_nonfaces,
    is_pure,
    minimal_nonfaces,
)
from .homology import QQ, FieldSpec, homology_of_masks

Monomial = tuple[int, ...]


class IdealError(ValueError):
    pass


class NotUnmixedError(IdealError):
    pass


def divides(u: Monomial, v: Monomial) -> bool:
    return all(a <= b for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def minimalize(gens: Iterable[Sequence[int]]) -> tuple[Monomial, ...]:
    uniq = sorted({tuple(int(x) for x in g) for g in gens}, key=lambda g: (sum(g), g))
    kept: list[Monomial] = []
    for g in uniq:
        if not any(divides(k, g) for k in kept):
            kept.append(g)
    return tuple(sorted(kept, key=lambda g: (sum(g), tuple(-x for x in g))))


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[Monomial, ...]

    @classmethod
    def from_gens(cls, n: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != n or any(x < 0 for x in g):
                raise IdealError(f"bad exponent vector {list(g)} for {n} variables")
        return cls(n, minimalize(gens))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "MonomialIdeal":
        """Read strings such as 'x1*x3, x2*x4' or 'x1^2'."""
        terms = [t.strip() for t in text.split(",") if t.strip()]
        parsed = []
        top = 0
        for t in terms:
            exps: dict[int, int] = {}
            if t == "1":
                parsed.append(exps)
                continue
            for factor in t.split("*"):
                m = re.fullmatch(r"\s*x(\d+)\s*(?:\^\s*(\d+))?\s*", factor)
                if not m:
                    raise IdealError(f"cannot read monomial factor {factor!r}")
                i, e = int(m.group(1)), int(m.group(2) or 1)
                if i < 1:
                    raise IdealError("variables are numbered from 1")
                exps[i] = exps.get(i, 0) + e
                top = max(top, i)
            parsed.append(exps)
        n = top if n is None else n
        if top > n:
            raise IdealError(f"variable x{top} exceeds n={n}")
        return cls.from_gens(n, [[e.get(i, 0) for i in range(1, n + 1)] for e in parsed])

    @classmethod
    def from_json(cls, obj: dict) -> "MonomialIdeal":
        if "n" not in obj or "gens" not in obj:
            raise IdealError("ideal JSON needs 'n' and 'gens'")
        return cls.from_gens(int(obj["n"]), obj["gens"])

    def to_json(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}

    @property
    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_squarefree(self) -> bool:
        return all(x <= 1 for g in self.gens for x in g)

    def contains(self, u: Sequence[int]) -> bool:
        return any(divides(g, tuple(u)) for g in self.gens)

    def max_exponents(self) -> tuple[int, ...]:
        return tuple(max((g[i] for g in self.gens), default=0) for i in range(self.n))

    def __str__(self):
        if self.is_zero:
            return "(0)"

        def mono(g):
            parts = [f"x{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(g) if e]
            return "*".join(parts) or "1"

        return "(" + ", ".join(mono(g) for g in self.gens) + ")"


# -- Stanley-Reisner correspondence -------------------------------------------------


def _support(g: Monomial) -> tuple[int, ...]:
    return tuple(i + 1 for i, x in enumerate(g) if x)


def _indicator(n: int, face: Iterable[int]) -> Monomial:
    s = set(face)
    return tuple(1 if i + 1 in s else 0 for i in range(n))


def sr_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    return MonomialIdeal(cx.n, minimalize(_indicator(cx.n, f) for f in minimal_nonfaces(cx)))


def sr_complex(ideal: MonomialIdeal) -> SimplicialComplex:
    if not ideal.is_squarefree:
        raise IdealError("Stanley-Reisner complex needs a squarefree ideal")
    return complex_from_nonfaces(ideal.n, [_support(g) for g in ideal.gens])


# -- arithmetic ------------------------------------------------------------------------


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    if I.n != J.n:
        raise IdealError("ideals live in different rings")
    return MonomialIdeal(I.n, minimalize(lcm(u, v) for u in I.gens for v in J.gens))


def prime_power(n: int, variables: Iterable[int], ell: int) -> MonomialIdeal:
    """All degree-ell monomials in the listed variables (1-based)."""
    vs = sorted(set(variables))
    if not vs:
        return MonomialIdeal(n, ())
    gens = []
    for combo in itertools.combinations_with_replacement(vs, ell):
        e = [0] * n
        for v in combo:
            e[v - 1] += 1
        gens.append(e)
    return MonomialIdeal(n, minimalize(gens))


def minimal_primes(ideal: MonomialIdeal) -> list[tuple[int, ...]]:
    """Minimal primes of a squarefree ideal as variable sets: complements of facets."""
    cx = sr_complex(ideal)
    full = set(range(1, ideal.n + 1))
    return [tuple(sorted(full - set(f))) for f in cx.facets]


def symbolic_power(ideal: MonomialIdeal, ell: int) -> MonomialIdeal:
    if ell < 1:
        raise IdealError("symbolic powers start at 1")
    primes = minimal_primes(ideal)
    if not primes:
        return MonomialIdeal(ideal.n, ((0,) * ideal.n,))
    out = prime_power(ideal.n, primes[0], ell)
    for P in primes[1:]:
        out = intersect(out, prime_power(ideal.n, P, ell))
    return out


def ordinary_power(ideal: MonomialIdeal, ell: int) -> MonomialIdeal:
    out = [(0,) * ideal.n]
    for _ in range(ell):
        out = minimalize(tuple(a + b for a, b in zip(u, v)) for u in out for v in ideal.gens)
    return MonomialIdeal(ideal.n, tuple(out))


def radical(ideal: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(ideal.n, minimalize(tuple(min(x, 1) for x in g) for g in ideal.gens))


def colon(ideal: MonomialIdeal, f: Sequence[int]) -> MonomialIdeal:
    """I : f, generated by u / gcd(u, f). Contains 1 exactly when f lies in I."""
    f = tuple(f)
    if len(f) != ideal.n:
        raise IdealError("monomial has the wrong number of variables")
    return MonomialIdeal(ideal.n, minimalize(tuple(max(a - b, 0) for a, b in zip(u, f)) for u in ideal.gens))


# -- polarization ------------------------------------------------------------------------


@dataclass(frozen=True)
class Polarization:
    ideal: MonomialIdeal
    extra: int
    # names[idx] = (i, k) for the new variable x_{i,k} with 1-based index idx, k >= 2
    names: dict

    def variable_of(self, i: int, k: int) -> int:
        """1-based index of x_{i,k}; k = 1 means the original x_i."""
        if k == 1:
            return i
        for idx, name in self.names.items():
            if name == (i, k):
                return idx
        raise KeyError((i, k))


def polarize_full(ideal: MonomialIdeal) -> Polarization:
    n = ideal.n
    gamma = ideal.max_exponents()
    index: dict[tuple[int, int], int] = {}
    nxt = n + 1
    for i in range(1, n + 1):
        for k in range(2, gamma[i - 1] + 1):
            index[(i, k)] = nxt
            nxt += 1
    total = nxt - 1
    gens = []
    for g in ideal.gens:
        e = [0] * total
        for i in range(1, n + 1):
            c, gm = g[i - 1], gamma[i - 1]
            if c == 0:
                continue
            if c < gm:
                for k in range(2, c + 2):
                    e[index[(i, k)] - 1] = 1
            else:
                for k in range(2, gm + 1):
                    e[index[(i, k)] - 1] = 1
                e[i - 1] = 1
        gens.append(e)
    return Polarization(MonomialIdeal(total, minimalize(gens)), total - n, {v: k for k, v in index.items()})


def polarize(ideal: MonomialIdeal) -> tuple[MonomialIdeal, int]:
    p = polarize_full(ideal)
    return p.ideal, p.extra


# -- depth and Serre depth of S/I -------------------------------------------------------


def krull_dim(ideal: MonomialIdeal) -> int:
    """dim S/I = dim S/sqrt(I)."""
    if ideal.is_unit:
        raise IdealError("the unit ideal has the zero quotient")
    return sr_complex(radical(ideal)).krull_dim


def is_unmixed(ideal: MonomialIdeal) -> bool:
    return is_pure(sr_complex(polarize(ideal)[0]))


def _polarized_complex(ideal: MonomialIdeal):
    if ideal.is_unit:
        raise IdealError("the unit ideal has the zero quotient")
    P, extra = polarize(ideal)
    return sr_complex(P), extra


def degree_complex(ideal: MonomialIdeal, G: int, a: Sequence[int]) -> tuple[int, ...]:
    """Facet bitmasks of the degree complex of S/I in a degree whose negative
    support is G (bitmask over 1..n) and whose other entries are a (indexed 1..n).

    Faces are the F outside G such that every generator u has some j outside
    F and G with u_j > a_j.
    """
    n = ideal.n
    off = [j for j in range(1, n + 1) if not (G >> j) & 1]
    blockers = []
    for u in ideal.gens:
        b = tuple(j for j in off if u[j - 1] > a[j - 1])
        if not b:
            return ()
        blockers.append(b)
    cx = complex_from_nonfaces(n, blockers)
    offmask = 0
    for j in off:
        offmask |= 1 << j
    return hochster._restrict_masks(cx.facet_masks, offmask)


def local_coh_dims_direct(ideal: MonomialIdeal, field: FieldSpec = QQ) -> hochster.LocalCohDimProfile:
    """Dimension profile of the local cohomology of S/I from degree complexes.

    Degrees with a_j >= (max exponent of x_j) for some nonnegative entry
    contribute nothing, and negative entries only matter through their support,
    so the enumeration is finite.
    """
    n = ideal.n
    d = krull_dim(ideal)
    rho = ideal.max_exponents()
    rad = sr_complex(radical(ideal))
    best: dict[int, int] = {}
    for size in range(d, -1, -1):
        for Gset in rad.faces(size):
            G = 0
            for j in Gset:
                G |= 1 << j
            off = [j for j in range(1, n + 1) if j not in Gset]
            if any(rho[j - 1] == 0 for j in off):
                continue
            for vals in itertools.product(*[range(rho[j - 1]) for j in off]):
                a = [0] * n
                for j, v in zip(off, vals):
                    a[j - 1] = v
                raw = homology_of_masks(degree_complex(ideal, G, a), field.p)
                for k, h in enumerate(raw):
                    if h:
                        i = (k - 1) + size + 1
                        best.setdefault(i, size)
    dims = {j: hochster.ABSENT for j in range(d + 1)}
    dims.update(best)
    return hochster.LocalCohDimProfile(dims, d)


def depth_monomial(ideal: MonomialIdeal, field: FieldSpec = QQ, method: str = "polarization") -> int:
    if method == "direct":
        return local_coh_dims_direct(ideal, field).depth()
    cx, extra = _polarized_complex(ideal)
    return hochster.depth(cx, field) - extra


def serre_depth_monomial(ideal: MonomialIdeal, r: int, field: FieldSpec = QQ, method: str = "polarization") -> int:
    cx, extra = _polarized_complex(ideal)
    if not is_pure(cx):
        raise NotUnmixedError("S/I is not unmixed")
    if method == "direct":
        return local_coh_dims_direct(ideal, field).serre_depth(r)
    return hochster.serre_depth(cx, r, field) - extra

"""Exact arithmetic in the cyclotomic field Q(z) for a primitive l-th root
of unity z.

An element is a rational-coefficient polynomial in ``z`` reduced modulo the
l-th cyclotomic polynomial, so equality of coefficient vectors is equality
in the field.  Internally the coefficients are kept as integer numerators
over a single positive denominator (the kernel entry layout); the ``coeffs``
property exposes them as ``Fraction`` values.  No floating point anywhere.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import _backend
from .errors import LevelMismatchError, ParseError

_K = _backend.kernel


# ---------------------------------------------------------------------------
# integer polynomials, ascending coefficients


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_div_exact(num, den):
    # Exact division by a monic divisor; remainder must vanish.
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    assert not any(num), "division was not exact"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(level: int) -> tuple[int, ...]:
    """Coefficients (ascending) of the cyclotomic polynomial of the given
    index, computed by dividing ``x^l - 1`` by the polynomials of all proper
    divisors.

    >>> cyclotomic_polynomial(1)
    (-1, 1)
    >>> cyclotomic_polynomial(4)
    (1, 0, 1)
    >>> cyclotomic_polynomial(3)
    (1, 1, 1)
    """
    if level < 1:
        raise ValueError("cyclotomic polynomial index must be >= 1")
    poly = [-1] + [0] * (level - 1) + [1]
    for d in range(1, level):
        if level % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


def euler_phi(level: int) -> int:
    """Degree of the l-th cyclotomic polynomial."""
    return len(cyclotomic_polynomial(level)) - 1


class _LevelData:
    """Precomputed reduction data for one cyclotomic level."""

    __slots__ = ("level", "phi", "poly", "red", "xi")

    def __init__(self, level):
        poly = cyclotomic_polynomial(level)
        phi = len(poly) - 1
        self.level = level
        self.phi = phi
        self.poly = poly
        # red[m - phi]: fully reduced coefficients of x^m, phi <= m <= 2phi-2
        base = tuple(-c for c in poly[:phi])
        rows = []
        prev = base
        for _ in range(phi - 1):
            rows.append(prev)
            t = prev[phi - 1]
            nxt = [0] + list(prev[: phi - 1])
            if t:
                for j in range(phi):
                    nxt[j] += t * base[j]
            prev = tuple(nxt)
        self.red = tuple(rows)
        # xi[k]: entry for z^k, 0 <= k < level
        pows = []
        cur = [1] + [0] * (phi - 1)
        for _ in range(level):
            pows.append(tuple(cur) + (1,))
            t = cur[phi - 1]
            cur = [0] + cur[: phi - 1]
            if t:
                for j in range(phi):
                    cur[j] += t * base[j]
        self.xi = tuple(pows)


_LEVELS: dict[int, _LevelData] = {}


def level_data(level: int) -> _LevelData:
    data = _LEVELS.get(level)
    if data is None:
        if not isinstance(level, int) or isinstance(level, bool) or level < 2:
            raise ValueError(f"cyclotomic level must be an integer >= 2, got {level!r}")
        data = _LEVELS[level] = _LevelData(level)
    return data


# ---------------------------------------------------------------------------
# Fraction-polynomial helpers (cold paths: construction from long
# polynomials and field inversion)


def _fpoly_rem(num, den):
    # num, den: ascending Fraction lists, den monic-ish (leading nonzero)
    num = list(num)
    dd = len(den) - 1
    lead = den[dd]
    while len(num) - 1 >= dd:
        c = num[-1] / lead
        if c:
            k = len(num) - 1 - dd
            for j in range(dd + 1):
                num[k + j] -= c * den[j]
        num.pop()
    while num and not num[-1]:
        num.pop()
    return num


def _entry_from_fractions(coeffs, phi):
    den = 1
    for f in coeffs:
        q = f.denominator
        den = den // gcd(den, q) * q
    nums = [int(f * den) for f in coeffs]
    nums += [0] * (phi - len(nums))
    return _K._normalize(nums, den)


class CycElem:
    """One element of Q(z); immutable, hashable, printed as a polynomial in
    ``z`` with ascending powers, e.g. ``2 + 1*z``."""

    __slots__ = ("level", "_ent")

    def __init__(self, level, coeffs=()):
        data = level_data(level)
        if isinstance(coeffs, (int, str, Fraction)):
            coeffs = (coeffs,)
        fracs = [Fraction(c) for c in coeffs]
        if len(fracs) > data.phi:
            poly = [Fraction(c) for c in data.poly]
            fracs = _fpoly_rem(fracs, poly)
        self.level = level
        self._ent = _entry_from_fractions(fracs, data.phi)

    @classmethod
    def _from_entry(cls, level, ent):
        # Trusted constructor: ent is canonical or None.
        self = object.__new__(cls)
        self.level = level
        self._ent = ent
        return self

    @classmethod
    def zero(cls, level):
        level_data(level)
        return cls._from_entry(level, None)

    @classmethod
    def one(cls, level):
        return root_power(level, 0)

    # -- structure ----------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        phi = level_data(self.level).phi
        if self._ent is None:
            return (Fraction(0),) * phi
        den = self._ent[phi]
        return tuple(Fraction(self._ent[i], den) for i in range(phi))

    def is_zero(self):
        return self._ent is None

    def __bool__(self):
        return self._ent is not None

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycElem(self.level, other)
        if not isinstance(other, CycElem):
            return NotImplemented
        return self.level == other.level and self._ent == other._ent

    def __hash__(self):
        return hash((self.level, self._ent))

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, CycElem):
            if other.level != self.level:
                raise LevelMismatchError(
                    f"cannot combine levels {self.level} and {other.level}"
                )
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CycElem(self.level, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._ent is None:
            return other
        if other._ent is None:
            return self
        phi = level_data(self.level).phi
        return CycElem._from_entry(self.level, _K.ent_add(self._ent, other._ent, phi))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        if self._ent is None:
            return self
        return CycElem._from_entry(self.level, _K.ent_neg(self._ent))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self._ent is None or other._ent is None:
            return CycElem._from_entry(self.level, None)
        data = level_data(self.level)
        return CycElem._from_entry(
            self.level, _K.ent_mul(self._ent, other._ent, data.phi, data.red)
        )

    __rmul__ = __mul__

    def inv(self) -> "CycElem":
        """Multiplicative inverse, by the extended Euclidean algorithm
        against the minimal polynomial of ``z``."""
        if self._ent is None:
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        data = level_data(self.level)
        phi = data.phi
        den = self._ent[phi]
        if phi == 1 or not any(self._ent[1:phi]):
            # rational shortcut: (n0/den)^-1 = den/n0
            return CycElem._from_entry(
                self.level, _K._normalize([den] + [0] * (phi - 1), self._ent[0])
            )
        m = [Fraction(c) for c in data.poly]
        a = [Fraction(self._ent[i], den) for i in range(phi)]
        while a and not a[-1]:
            a.pop()
        # invariant: r0 = t0*a (mod m), r1 = t1*a (mod m)
        r0, r1 = m, a
        t0, t1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, rem = _fpoly_divmod(r0, r1)
            r0, r1 = r1, rem
            t0, t1 = t1, _fpoly_sub(t0, _fpoly_mul(q, t1))
        c = r1[0]
        inv_coeffs = [t / c for t in t1]
        inv_coeffs = _fpoly_rem(inv_coeffs, m)
        return CycElem._from_entry(self.level, _entry_from_fractions(inv_coeffs, phi))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inv()

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        base = self
        if k < 0:
            base = self.inv()
            k = -k
        out = CycElem.one(self.level)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- text ----------------------------------------------------------

    def __str__(self):
        if self._ent is None:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*z")
            else:
                parts.append(f"{c}*z^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"CycElem({self.level}, {str(self)!r})"

    _TERM_RE = re.compile(r"(-?\d+(?:/\d+)?)(?:\*z(?:\^(\d+))?)?$")

    @classmethod
    def parse(cls, level, text: str) -> "CycElem":
        """Inverse of ``str``: ``CycElem.parse(3, '2 + 1*z')``."""
        data = level_data(level)
        coeffs = [Fraction(0)] * data.phi
        s = text.strip()
        if s == "0":
            return cls.zero(level)
        pos = 0
        for chunk in s.split("+"):
            term = chunk.strip()
            at = pos + (len(chunk) - len(chunk.lstrip()))
            pos += len(chunk) + 1
            m = cls._TERM_RE.match(term)
            if not m:
                raise ParseError(f"bad coefficient term {term!r}", at)
            power = 0
            if term.endswith("z"):
                power = 1
            elif m.group(2) is not None:
                power = int(m.group(2))
            if power >= data.phi:
                raise ParseError(f"power z^{power} not reduced at level {level}", at)
            if coeffs[power]:
                raise ParseError(f"repeated power z^{power}", at)
            coeffs[power] = Fraction(m.group(1))
        return cls(level, coeffs)


def _fpoly_divmod(num, den):
    num = list(num)
    dd = len(den) - 1
    lead = den[dd]
    q = [Fraction(0)] * max(len(num) - dd, 0)
    while len(num) - 1 >= dd and num:
        c = num[-1] / lead
        k = len(num) - 1 - dd
        q[k] = c
        for j in range(dd + 1):
            num[k + j] -= c * den[j]
        num.pop()
    while num and not num[-1]:
        num.pop()
    return q, num


def _fpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _fpoly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] -= v
    while out and not out[-1]:
        out.pop()
    return out


def root_power(level: int, k: int) -> CycElem:
    """``z**(k mod level)`` as a reduced element; ``root_power(l, 0)`` is 1.

    >>> str(root_power(4, 2))
    '-1'
    >>> str(root_power(3, 3))
    '1'
    """
    data = level_data(level)
    return CycElem._from_entry(level, data.xi[k % level])

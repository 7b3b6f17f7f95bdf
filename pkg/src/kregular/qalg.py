"""Exact polynomial and truncated power-series arithmetic in ``q``.

Everything here works on Python integers, so coefficients never overflow
and never round. Three value types are provided:

* :class:`IntPoly` -- a dense polynomial in ``q``;
* :class:`QSeries` -- a power series known exactly through ``q**trunc``;
* :class:`XQSeries` -- a series in ``x`` whose coefficients are
  :class:`QSeries` sharing one truncation order.

All three are immutable.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _format_terms(coeffs: Iterable[int], var: str = "q") -> str:
    pieces = []
    for e, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}"
            body = mono if mag == 1 else f"{mag}{mono}"
        sign = "-" if c < 0 else "+"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"{sign} {body}")
    return " ".join(pieces) if pieces else "0"


def _conv(a: tuple[int, ...], b: tuple[int, ...], limit: int | None = None) -> list[int]:
    if not a or not b:
        return []
    size = len(a) + len(b) - 1
    if limit is not None:
        size = min(size, limit)
    out = [0] * size
    for i, ai in enumerate(a):
        if ai == 0 or i >= size:
            continue
        top = min(len(b), size - i)
        for j in range(top):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


@dataclass(frozen=True)
class IntPoly:
    """Polynomial in ``q`` with integer coefficients; ``coeffs[e]`` multiplies ``q**e``.

    The coefficient tuple is normalized on construction, so the zero
    polynomial is ``IntPoly(())`` and equality is structural.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _strip(int(c) for c in self.coeffs))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> IntPoly:
        if exponent < 0:
            raise ValueError(f"negative exponent {exponent}")
        return cls((0,) * exponent + (coeff,))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, e: int) -> int:
        return self.coeffs[e] if 0 <= e < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return IntPoly(_conv(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPoly((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, e: int) -> IntPoly:
        """Multiply by ``q**e``."""
        if e < 0:
            raise ValueError(f"negative shift {e}")
        if not self.coeffs:
            return self
        return IntPoly((0,) * e + self.coeffs)

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __str__(self):
        return _format_terms(self.coeffs)

    def __repr__(self):
        return f"IntPoly({self})"

    def to_json(self) -> dict:
        return {"var": "q", "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: Mapping) -> IntPoly:
        if obj.get("var", "q") != "q":
            raise ValueError(f"unsupported variable {obj.get('var')!r}")
        return cls(int(c) for c in obj["coeffs"])


def _as_poly(x):
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly((x,))
    return NotImplemented


ZERO = IntPoly()
ONE = IntPoly((1,))


def poly_add(p: IntPoly, r: IntPoly) -> IntPoly:
    return p + r


def poly_mul(p: IntPoly, r: IntPoly) -> IntPoly:
    return p * r


def q_int(n: int) -> IntPoly:
    """The q-integer ``[n]_q = 1 + q + ... + q**(n-1)``; ``[0]_q = 0``."""
    if n < 0:
        raise ValueError(f"q_int needs n >= 0, got {n}")
    return IntPoly((1,) * n)


@lru_cache(maxsize=None)
def q_factorial(n: int) -> IntPoly:
    if n < 0:
        raise ValueError(f"q_factorial needs n >= 0, got {n}")
    if n == 0:
        return ONE
    return q_factorial(n - 1) * q_int(n)


def q_binomial(n: int, k: int) -> IntPoly:
    """Gaussian binomial coefficient, exact polynomial quotient of q-factorials."""
    if k < 0 or k > n:
        return ZERO
    num = q_factorial(n)
    den = q_factorial(k) * q_factorial(n - k)
    quo, rem = poly_divmod(num, den)
    assert rem.is_zero()
    return quo


def poly_divmod(p: IntPoly, d: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Long division by a polynomial whose leading coefficient is +-1."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    lead = d.coeffs[-1]
    if lead not in (1, -1):
        raise ValueError("divisor must be monic up to sign")
    rem = list(p.coeffs)
    dd = d.degree
    if len(rem) - 1 < dd:
        return ZERO, p
    quo = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1 - dd, -1, -1):
        c = rem[i + dd] * lead
        quo[i] = c
        if c:
            for j, dj in enumerate(d.coeffs):
                rem[i + j] -= c * dj
    return IntPoly(quo), IntPoly(rem)


def qpoch(n: int, *, shift: int = 1, step: int = 1, sign: int = 1) -> IntPoly:
    """Finite product ``prod_{j<n} (1 - sign * q**(shift + step*j))``.

    ``qpoch(n)`` is ``(q; q)_n``; ``qpoch(n, step=2)`` is ``(q; q^2)_n`` and
    ``qpoch(n, step=2, sign=-1)`` is ``(-q; q^2)_n``.
    """
    if n < 0:
        raise ValueError(f"qpoch needs n >= 0, got {n}")
    out = ONE
    for j in range(n):
        out = out * (ONE - IntPoly.monomial(shift + step * j, sign))
    return out


@lru_cache(maxsize=None)
def poch_finite(n: int) -> IntPoly:
    """``(q; q)_n = (1-q)(1-q^2)...(1-q^n)``."""
    if n < 0:
        raise ValueError(f"poch_finite needs n >= 0, got {n}")
    if n == 0:
        return ONE
    return poch_finite(n - 1) * (ONE - IntPoly.monomial(n))


@dataclass(frozen=True)
class QSeries:
    """Power series in ``q`` known exactly through ``q**trunc``.

    ``coeffs`` always has length ``trunc + 1``. Binary operations take the
    smaller of the two truncation orders.
    """

    coeffs: tuple[int, ...]
    trunc: int

    def __post_init__(self):
        if self.trunc < 0:
            raise ValueError(f"truncation order must be >= 0, got {self.trunc}")
        c = tuple(int(v) for v in self.coeffs[: self.trunc + 1])
        c = c + (0,) * (self.trunc + 1 - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, trunc: int) -> QSeries:
        return cls((), trunc)

    @classmethod
    def one(cls, trunc: int) -> QSeries:
        return cls((1,), trunc)

    def __getitem__(self, e: int) -> int:
        if e > self.trunc:
            raise IndexError(f"q^{e} lies beyond truncation order {self.trunc}")
        return self.coeffs[e] if e >= 0 else 0

    def __iter__(self):
        return iter(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def truncate(self, trunc: int) -> QSeries:
        if trunc > self.trunc:
            raise ValueError(f"cannot extend truncation {self.trunc} to {trunc}")
        return QSeries(self.coeffs, trunc)

    def _coerce(self, other) -> QSeries:
        if isinstance(other, QSeries):
            return other
        if isinstance(other, IntPoly):
            return series_from_poly(other, self.trunc)
        if isinstance(other, int):
            return QSeries((other,), self.trunc)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = min(self.trunc, other.trunc)
        return QSeries([a + b for a, b in zip(self.coeffs[: t + 1], other.coeffs[: t + 1])], t)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.trunc)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = min(self.trunc, other.trunc)
        return QSeries(_conv(self.coeffs[: t + 1], other.coeffs[: t + 1], t + 1), t)

    __rmul__ = __mul__

    def shift(self, e: int) -> QSeries:
        """Multiply by ``q**e``; coefficients pushed past ``trunc`` are dropped."""
        if e < 0:
            raise ValueError(f"negative shift {e}")
        return QSeries((0,) * e + self.coeffs, self.trunc)

    def to_poly(self) -> IntPoly:
        return IntPoly(self.coeffs)

    def __str__(self):
        return f"{_format_terms(self.coeffs)} + O(q^{self.trunc + 1})"

    def __repr__(self):
        return f"QSeries({self})"

    def to_json(self) -> dict:
        return {"var": "q", "coeffs": [str(c) for c in _strip(self.coeffs)], "trunc": self.trunc}

    @classmethod
    def from_json(cls, obj: Mapping) -> QSeries:
        if obj.get("var", "q") != "q":
            raise ValueError(f"unsupported variable {obj.get('var')!r}")
        return cls(tuple(int(c) for c in obj["coeffs"]), int(obj["trunc"]))


def series_from_poly(p: IntPoly, T: int) -> QSeries:
    return QSeries(p.coeffs, T)


def series_recip(s: QSeries) -> QSeries:
    """Multiplicative inverse through ``s.trunc``; needs constant term +1 or -1."""
    c0 = s.coeffs[0]
    if c0 not in (1, -1):
        raise ValueError(f"series has non-unit constant term {c0}; no integer reciprocal")
    a = s.coeffs
    out = [0] * (s.trunc + 1)
    out[0] = c0
    # a0 * t_n = -sum_{i=1}^{n} a_i t_{n-i}, and 1/a0 == a0 for a unit
    for n in range(1, s.trunc + 1):
        acc = 0
        for i in range(1, n + 1):
            ai = a[i]
            if ai:
                acc += ai * out[n - i]
        out[n] = -c0 * acc
    return QSeries(out, s.trunc)


@lru_cache(maxsize=None)
def recip_poch(n: int, T: int) -> QSeries:
    """``1/(q; q)_n`` through ``q**T``."""
    return series_recip(series_from_poly(poch_finite(n), T))


@dataclass(frozen=True)
class XQSeries:
    """Series in ``x`` with :class:`QSeries` coefficients, cut at ``x**xmax``.

    Only nonzero x-coefficients are stored. Every stored coefficient has
    truncation ``qmax``.
    """

    terms: Mapping[int, QSeries] = field(default_factory=dict)
    xmax: int = 0
    qmax: int = 0

    def __post_init__(self):
        if self.xmax < 0 or self.qmax < 0:
            raise ValueError("xmax and qmax must be >= 0")
        clean = {}
        for d in sorted(self.terms):
            s = self.terms[d]
            if d < 0:
                raise ValueError(f"negative x-degree {d}")
            if d > self.xmax:
                continue
            if s.trunc < self.qmax:
                raise ValueError(f"x^{d} coefficient truncated at {s.trunc} < qmax {self.qmax}")
            if s.trunc > self.qmax:
                s = s.truncate(self.qmax)
            if not s.is_zero():
                clean[d] = s
        object.__setattr__(self, "terms", clean)

    @classmethod
    def one(cls, xmax: int, qmax: int) -> XQSeries:
        return cls({0: QSeries.one(qmax)}, xmax, qmax)

    def coeff(self, x_deg: int) -> QSeries:
        if x_deg > self.xmax:
            raise IndexError(f"x^{x_deg} lies beyond xmax {self.xmax}")
        return self.terms.get(x_deg, QSeries.zero(self.qmax))

    def __getitem__(self, key: tuple[int, int]) -> int:
        x_deg, q_deg = key
        return self.coeff(x_deg)[q_deg]

    def __eq__(self, other):
        if not isinstance(other, XQSeries):
            return NotImplemented
        return (self.xmax, self.qmax) == (other.xmax, other.qmax) and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.xmax, self.qmax, tuple(sorted(self.terms.items()))))

    def __add__(self, other: XQSeries) -> XQSeries:
        _check_compatible(self, other)
        out = dict(self.terms)
        for d, s in other.terms.items():
            out[d] = out[d] + s if d in out else s
        return XQSeries(out, min(self.xmax, other.xmax), self.qmax)

    def __mul__(self, other: XQSeries) -> XQSeries:
        return xq_mul(self, other)

    def items(self):
        """(x-degree, QSeries) pairs in increasing x-degree, zeros included."""
        return [(d, self.coeff(d)) for d in range(self.xmax + 1)]

    def nonzero(self):
        """Every nonzero coefficient as ``(x_deg, q_deg, value)``, in order."""
        for d in sorted(self.terms):
            for e, c in enumerate(self.terms[d].coeffs):
                if c:
                    yield d, e, c

    def to_json(self) -> dict:
        return {
            "xmax": self.xmax,
            "qmax": self.qmax,
            "terms": {str(d): self.terms[d].to_json() for d in sorted(self.terms)},
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> XQSeries:
        terms = {int(d): QSeries.from_json(s) for d, s in obj["terms"].items()}
        return cls(terms, int(obj["xmax"]), int(obj["qmax"]))


def _check_compatible(u: XQSeries, v: XQSeries):
    if u.qmax != v.qmax:
        raise ValueError(f"mismatched q-truncation: {u.qmax} vs {v.qmax}")


def xq_mul(u: XQSeries, v: XQSeries) -> XQSeries:
    """Bivariate product; x-degrees beyond ``min(u.xmax, v.xmax)`` are dropped."""
    _check_compatible(u, v)
    xmax = min(u.xmax, v.xmax)
    out: dict[int, QSeries] = {}
    for du, su in u.terms.items():
        for dv, sv in v.terms.items():
            d = du + dv
            if d > xmax:
                continue
            prod = su * sv
            out[d] = out[d] + prod if d in out else prod
    return XQSeries(out, xmax, u.qmax)

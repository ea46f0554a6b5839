"""Sparse multivariate polynomials with exact integer coefficients.

Polynomials live in Z[w, x, y, z, t].  A polynomial is stored as a dict
mapping exponent vectors ``(e_w, e_x, e_y, e_z, e_t)`` to non-zero Python
ints, so coefficients never overflow.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from typing import Union

VARS = ("w", "x", "y", "z", "t")
_INDEX = {name: i for i, name in enumerate(VARS)}
_ZERO_EXPS = (0, 0, 0, 0, 0)

Exps = tuple[int, int, int, int, int]
Coercible = Union["MultiPoly", int]


class MultiPoly:
    """An immutable element of Z[w, x, y, z, t]."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exps, int] | Iterable[tuple[Exps, int]] | None = None):
        acc: dict[Exps, int] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exps, coeff in items:
                exps = tuple(int(e) for e in exps)
                if len(exps) != len(VARS) or min(exps) < 0:
                    raise ValueError(f"bad exponent vector {exps!r}")
                acc[exps] = acc.get(exps, 0) + int(coeff)
        self._terms = {k: v for k, v in acc.items() if v != 0}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exps, int]) -> MultiPoly:
        # trusted constructor: terms already clean
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: int) -> MultiPoly:
        return cls._raw({_ZERO_EXPS: int(c)} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> MultiPoly:
        exps = [0] * len(VARS)
        exps[_INDEX[name]] = power
        return cls._raw({tuple(exps): 1})

    @classmethod
    def monomial(cls, coeff: int, **powers: int) -> MultiPoly:
        exps = [0] * len(VARS)
        for name, e in powers.items():
            exps[_INDEX[name]] = e
        return cls._raw({tuple(exps): coeff} if coeff else {})

    @classmethod
    def gens(cls) -> tuple[MultiPoly, ...]:
        """Return the generators ``(w, x, y, z, t)``."""
        return tuple(cls.var(v) for v in VARS)

    @property
    def terms(self) -> dict[Exps, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(e == _ZERO_EXPS for e in self._terms)

    def __int__(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(_ZERO_EXPS, 0)

    def degree(self, name: str) -> int:
        """Largest exponent of ``name``; -1 for the zero polynomial."""
        i = _INDEX[name]
        return max((e[i] for e in self._terms), default=-1)

    def coefficient(self, **powers: int) -> int:
        exps = [0] * len(VARS)
        for name, e in powers.items():
            exps[_INDEX[name]] = e
        return self._terms.get(tuple(exps), 0)

    # ring operations

    @staticmethod
    def _coerce(other: Coercible) -> MultiPoly:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, int):
            return MultiPoly.const(other)
        return NotImplemented

    def __add__(self, other: Coercible) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for exps, c in other._terms.items():
            v = acc.get(exps, 0) + c
            if v:
                acc[exps] = v
            else:
                acc.pop(exps, None)
        return MultiPoly._raw(acc)

    __radd__ = __add__

    def __neg__(self) -> MultiPoly:
        return MultiPoly._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: Coercible) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Coercible) -> MultiPoly:
        return (-self) + other

    def __mul__(self, other: Coercible) -> MultiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Exps, int] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                exps = (ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3], ea[4] + eb[4])
                acc[exps] = acc.get(exps, 0) + ca * cb
        return MultiPoly._raw({k: v for k, v in acc.items() if v})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> MultiPoly:
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # evaluation

    def evaluate(self, assignment: Mapping[str, int] | None = None, **values: int) -> MultiPoly:
        """Substitute integers for some or all variables.

        Unassigned variables stay symbolic.  ``p.evaluate(t=3)`` and
        ``p.evaluate({"t": 3})`` are equivalent.
        """
        vals = dict(assignment or {})
        vals.update(values)
        unknown = set(vals) - set(VARS)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        idx = [(_INDEX[name], int(v)) for name, v in vals.items()]
        acc: dict[Exps, int] = {}
        for exps, c in self._terms.items():
            e = list(exps)
            for i, v in idx:
                if e[i]:
                    c *= v ** e[i]
                    e[i] = 0
            if c:
                key = tuple(e)
                acc[key] = acc.get(key, 0) + c
        return MultiPoly._raw({k: v for k, v in acc.items() if v})

    def __call__(self, **values: int) -> MultiPoly:
        return self.evaluate(values)

    def substitute(self, name: str, value: MultiPoly) -> MultiPoly:
        """Replace variable ``name`` by the polynomial ``value``, expanding exactly."""
        i = _INDEX[name]
        powers = [MultiPoly.const(1)]
        out = MultiPoly()
        for exps, c in self._terms.items():
            k = exps[i]
            while len(powers) <= k:
                powers.append(powers[-1] * value)
            rest = list(exps)
            rest[i] = 0
            out = out + MultiPoly._raw({tuple(rest): c}) * powers[k]
        return out

    # rendering

    def sorted_terms(self) -> list[tuple[Exps, int]]:
        """Terms in lexicographic order of exponent vectors (w, x, y, z, t)."""
        return sorted(self._terms.items())

    def to_text(self) -> str:
        """Canonical text, grouped by powers of t, e.g. ``(w+x+z)*t + y*t^2``."""
        if not self._terms:
            return "0"
        groups: dict[int, dict[tuple[int, ...], int]] = {}
        for exps, c in self._terms.items():
            groups.setdefault(exps[4], {})[exps[:4]] = c
        parts = []
        for et in sorted(groups):
            coeffs = groups[et]
            tpart = "" if et == 0 else ("t" if et == 1 else f"t^{et}")
            inner = _render_sum(coeffs)
            if not tpart:
                parts.append(inner)
            elif len(coeffs) == 1:
                (mono, c), = coeffs.items()
                head = _render_monomial(c, mono, VARS[:4])
                if head == "1":
                    parts.append(tpart)
                elif head == "-1":
                    parts.append("-" + tpart)
                else:
                    parts.append(f"{head}*{tpart}")
            else:
                parts.append(f"({inner})*{tpart}")
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()!r})"

    def to_records(self) -> list[dict]:
        """JSON-ready list of ``{"coeff": int, "exps": [e_w, e_x, e_y, e_z, e_t]}``."""
        return [{"coeff": c, "exps": list(e)} for e, c in self.sorted_terms()]

    @classmethod
    def from_records(cls, records: Iterable[Mapping]) -> MultiPoly:
        return cls((tuple(r["exps"]), r["coeff"]) for r in records)


def _render_monomial(c: int, exps: tuple[int, ...], names: tuple[str, ...]) -> str:
    factors = []
    for name, e in zip(names, exps):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    if not factors:
        return str(c)
    body = "*".join(factors)
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    return f"{c}*{body}"


def _render_sum(coeffs: Mapping[tuple[int, ...], int]) -> str:
    # descending lex so that w comes before x before constants
    out = ""
    for mono in sorted(coeffs, reverse=True):
        s = _render_monomial(coeffs[mono], mono, VARS[:4])
        if not out:
            out = s
        elif s.startswith("-"):
            out += "-" + s[1:]
        else:
            out += "+" + s
    return out


def poly_eval(p: MultiPoly, assignment: Mapping[str, int]) -> MultiPoly:
    return p.evaluate(assignment)


def poly_subst_w(p: MultiPoly) -> MultiPoly:
    """Replace w by (w - x - y - z)."""
    w, x, y, z, _ = MultiPoly.gens()
    return p.substitute("w", w - x - y - z)

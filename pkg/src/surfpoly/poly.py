"""Sparse multivariate polynomials over arbitrary-precision integers.

Variables are x, y, a, b, z plus the genus-indexed families xg(k), yg(k)
with k any integer.  Exponents of a and b count half powers of the genus
parameters, so all stored exponents stay integral.  Negative exponents are
admitted internally (substitution rules may carry them) but every public
result must be a true polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from .errors import NegativeExponentRemains

__all__ = ["Var", "Monomial", "MultiPoly", "X", "Y", "A", "B", "Z", "xg", "yg"]

_TAG_RANK = {"x": 0, "y": 1, "a": 2, "b": 3, "z": 4, "xg": 5, "yg": 6}


@dataclass(frozen=True, order=False)
class Var:
    """One variable: a plain tag or a genus-indexed family member."""

    tag: str
    genus: int | None = None

    def __post_init__(self) -> None:
        if self.tag not in _TAG_RANK:
            raise ValueError(f"unknown variable tag {self.tag!r}")
        if (self.genus is not None) != (self.tag in ("xg", "yg")):
            raise ValueError(f"tag {self.tag!r} and genus index do not match")

    @property
    def rank(self) -> tuple[int, int]:
        return (_TAG_RANK[self.tag], self.genus or 0)

    def __lt__(self, other: "Var") -> bool:
        return self.rank < other.rank

    def __str__(self) -> str:
        if self.genus is None:
            return self.tag
        return f"{self.tag}({self.genus})"


X = Var("x")
Y = Var("y")
A = Var("a")
B = Var("b")
Z = Var("z")


def xg(k: int) -> Var:
    return Var("xg", k)


def yg(k: int) -> Var:
    return Var("yg", k)


@dataclass(frozen=True)
class Monomial:
    """Product of variable powers; exponents nonzero, possibly negative."""

    powers: tuple[tuple[Var, int], ...]

    @classmethod
    def make(cls, exps: Mapping[Var, int] | Iterable[tuple[Var, int]]) -> "Monomial":
        items = exps.items() if isinstance(exps, Mapping) else exps
        merged: dict[Var, int] = {}
        for v, e in items:
            merged[v] = merged.get(v, 0) + e
        return cls(tuple(sorted(((v, e) for v, e in merged.items() if e), key=lambda t: t[0].rank)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial.make(self.powers + other.powers)

    def __pow__(self, n: int) -> "Monomial":
        return Monomial.make((v, e * n) for v, e in self.powers)

    def exponent(self, v: Var) -> int:
        for w, e in self.powers:
            if w == v:
                return e
        return 0

    def variables(self) -> list[Var]:
        return [v for v, _ in self.powers]

    def __str__(self) -> str:
        if not self.powers:
            return "1"
        return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in self.powers)


_ONE = Monomial(())


class MultiPoly:
    """Immutable sparse polynomial: monomial table with integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        object.__setattr__(self, "terms", {m: c for m, c in (terms or {}).items() if c})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def const(cls, c: int) -> "MultiPoly":
        return cls({_ONE: c})

    @classmethod
    def var(cls, v: Var) -> "MultiPoly":
        return cls({Monomial.make({v: 1}): 1})

    @classmethod
    def term(cls, coeff: int, exps: Mapping[Var, int]) -> "MultiPoly":
        return cls({Monomial.make(exps): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = MultiPoly.const(other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            other = MultiPoly.const(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly | int") -> "MultiPoly":
        return self + (-other)

    def __rsub__(self, other: int) -> "MultiPoly":
        return MultiPoly.const(other) - self

    def __mul__(self, other: "MultiPoly | int") -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly({m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative polynomial power")
        out = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def variables(self) -> list[Var]:
        seen = {v for m in self.terms for v in m.variables()}
        return sorted(seen, key=lambda v: v.rank)

    def has_negative_exponent(self) -> bool:
        return any(e < 0 for m in self.terms for _, e in m.powers)

    def evaluate(
        self,
        assignment: Mapping[Var, Fraction | int] | None = None,
        default: Fraction | int | None = None,
        family: Callable[[Var], Fraction | int] | None = None,
    ) -> Fraction:
        """Exact value under a variable assignment.

        Lookup order per variable: explicit assignment, then the ``family``
        callback, then ``default``.  Missing variables are an error.
        """
        assignment = assignment or {}
        total = Fraction(0)
        for m, c in self.terms.items():
            value = Fraction(c)
            for v, e in m.powers:
                if v in assignment:
                    base = assignment[v]
                elif family is not None and (got := family(v)) is not None:
                    base = got
                elif default is not None:
                    base = default
                else:
                    raise KeyError(f"no value for variable {v}")
                value *= Fraction(base) ** e
            total += value
        return total

    def substitute(self, rule: Mapping[Var, "MultiPoly"], check: bool = True) -> "MultiPoly":
        """Replace variables by polynomials (Laurent images allowed).

        With ``check`` the result must be a true polynomial; a leftover
        negative exponent raises NegativeExponentRemains.
        """
        out = MultiPoly()
        for m, c in self.terms.items():
            term = MultiPoly.const(c)
            for v, e in m.powers:
                image = rule.get(v)
                if image is None:
                    term = term * MultiPoly.term(1, {v: e})
                elif e >= 0:
                    term = term * image**e
                elif len(image.terms) == 1:
                    # Laurent inverse of a single term with unit coefficient.
                    ((im, ic),) = image.terms.items()
                    if ic not in (1, -1):
                        raise ValueError("cannot invert a non-unit coefficient")
                    term = term * MultiPoly({im**e: ic**e})
                else:
                    raise ValueError("cannot raise a sum to a negative power")
            out = out + term
        if check and out.has_negative_exponent():
            raise NegativeExponentRemains(str(out))
        return out

    def coefficients_in(self, v: Var) -> dict[int, "MultiPoly"]:
        """Split into v-degree buckets with polynomial coefficients."""
        buckets: dict[int, dict[Monomial, int]] = {}
        for m, c in self.terms.items():
            e = m.exponent(v)
            rest = Monomial.make((w, k) for w, k in m.powers if w != v)
            bucket = buckets.setdefault(e, {})
            bucket[rest] = bucket.get(rest, 0) + c
        return {e: MultiPoly(t) for e, t in buckets.items()}

    def divide_linear(self, v: Var, root: int) -> "MultiPoly":
        """Exact division by (v - root); nonzero remainder is an error."""
        buckets = self.coefficients_in(v)
        if not buckets:
            return MultiPoly()
        degree = max(buckets)
        if min(buckets) < 0:
            raise NegativeExponentRemains(str(self))
        quotient: dict[int, MultiPoly] = {}
        carry = MultiPoly()
        for e in range(degree, -1, -1):
            coeff = buckets.get(e, MultiPoly()) + carry * root
            if e == 0:
                if not coeff.is_zero():
                    raise ValueError(f"division by ({v} - {root}) leaves remainder {coeff}")
            else:
                quotient[e - 1] = coeff
                carry = coeff
        out = MultiPoly()
        for e, poly in quotient.items():
            out = out + poly * MultiPoly.term(1, {v: e})
        return out

    def _sorted_terms(self) -> list[tuple[Monomial, int]]:
        vs = self.variables()
        return sorted(
            self.terms.items(), key=lambda t: tuple(t[0].exponent(v) for v in vs)
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self._sorted_terms():
            body = str(m)
            if body == "1":
                text = str(abs(c))
            elif abs(c) == 1:
                text = body
            else:
                text = f"{abs(c)}*{body}"
            if not parts:
                parts.append(text if c > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if c > 0 else f"- {text}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

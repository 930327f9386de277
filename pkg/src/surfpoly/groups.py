"""Finite groups as Cayley tables, a name catalog, and genus zeta values.

The zeta values z(G, gbar) that weight flow and tension counts are obtained
by relator-solution counting on the Cayley table:

    z(G, g)  = |G|^(1-2g) * #{(a1,b1,..,ag,bg) : [a1,b1]...[ag,bg] = 1}
    z(G, -g) = |G|^(1-g)  * #{(c1,..,cg) : c1^2 ... cg^2 = 1}
    z(G, 0)  = |G|

computed by convolving the one-step distributions (commutators, squares)
g times, so the cost is g*|G|^2 rather than |G|^(2g).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import BudgetExceeded, UnknownGroup, ValidationError
from .premap import ValidationReport

__all__ = [
    "FiniteGroup",
    "validate_group",
    "group_from_table",
    "catalog",
    "catalog_names",
    "zeta",
    "conjugacy_class_count",
    "involution_count",
]

_MAX_ORDER = 64


@dataclass(frozen=True)
class FiniteGroup:
    """Cayley table with identity at index 0; table[i][j] = i*j."""

    table: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inverse(self, i: int) -> int:
        return self.table[i].index(0)

    def is_abelian(self) -> bool:
        n = self.order
        return all(self.table[i][j] == self.table[j][i] for i in range(n) for j in range(i))


def validate_group(table: list[list[int]] | tuple[tuple[int, ...], ...]) -> ValidationReport:
    """Check shape, two-sided identity at 0, inverses, and associativity."""
    report = ValidationReport()
    n = len(table)
    if n == 0 or any(len(row) != n for row in table):
        report.add("BadShape")
        return report
    if any(not 0 <= x < n for row in table for x in row):
        report.add("EntryOutOfRange")
        return report
    if any(table[0][j] != j for j in range(n)) or any(table[i][0] != i for i in range(n)):
        report.add("NoIdentity")
    for i in range(n):
        if 0 not in table[i]:
            report.add("NoInverse", i)
            break
    for i in range(n):
        bad = next(
            (
                (j, k)
                for j in range(n)
                for k in range(n)
                if table[table[i][j]][k] != table[i][table[j][k]]
            ),
            None,
        )
        if bad is not None:
            report.add("NotAssociative", i)
            break
    return report


def group_from_table(table: list[list[int]] | tuple[tuple[int, ...], ...]) -> FiniteGroup:
    report = validate_group(table)
    if not report.ok:
        raise ValidationError(f"not a group: {report.summary()}", report)
    return FiniteGroup(tuple(tuple(row) for row in table))


def _cyclic(n: int) -> FiniteGroup:
    return FiniteGroup(tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


def _dihedral(order: int) -> FiniteGroup:
    if order < 2 or order % 2:
        raise UnknownGroup(f"dihedral order must be even and >= 2, got {order}")
    n = order // 2

    # Element i + n*j is r^i s^j; s r s = r^{-1}.
    def mul(a: int, b: int) -> int:
        i, j = a % n, a // n
        k, l = b % n, b // n
        return (i + (k if j == 0 else -k)) % n + n * ((j + l) % 2)

    return FiniteGroup(tuple(tuple(mul(a, b) for b in range(order)) for a in range(order)))


def _quaternion8() -> FiniteGroup:
    # Elements as quaternions (w, x, y, z) with one entry +-1.
    units = [
        (1, 0, 0, 0), (-1, 0, 0, 0), (0, 1, 0, 0), (0, -1, 0, 0),
        (0, 0, 1, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, 0, 0, -1),
    ]

    def qmul(p, q):
        pw, px, py, pz = p
        qw, qx, qy, qz = q
        return (
            pw * qw - px * qx - py * qy - pz * qz,
            pw * qx + px * qw + py * qz - pz * qy,
            pw * qy - px * qz + py * qw + pz * qx,
            pw * qz + px * qy - py * qx + pz * qw,
        )

    index = {u: i for i, u in enumerate(units)}
    return FiniteGroup(
        tuple(tuple(index[qmul(p, q)] for q in units) for p in units)
    )


def _symmetric(n: int) -> FiniteGroup:
    # Lexicographic order puts the identity permutation first.
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):
        return tuple(p[q[x]] for x in range(n))

    return FiniteGroup(
        tuple(tuple(index[compose(p, q)] for q in perms) for p in perms)
    )


def product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    """Direct product; pair (a, b) gets index a*|H| + b."""
    nh = h.order

    def mul(x: int, y: int) -> int:
        return g.mul(x // nh, y // nh) * nh + h.mul(x % nh, y % nh)

    order = g.order * nh
    return FiniteGroup(tuple(tuple(mul(x, y) for y in range(order)) for x in range(order)))


_NAME_RE = re.compile(r"^([a-z]+)(?:\((.*)\)|(\d+))?$")


def _split_args(body: str) -> list[str]:
    args, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "," and depth == 0:
            args.append(body[start:i])
            start = i + 1
    args.append(body[start:])
    return [a.strip() for a in args]


def catalog(name: str) -> FiniteGroup:
    """Look up a group by name: cyclic(n), dihedral(order), quaternion8,
    symmetric(3|4), product(name, name, ...).  "cyclic3" means "cyclic(3)"."""
    match = _NAME_RE.match(name.strip())
    if not match:
        raise UnknownGroup(name)
    head, body, suffix = match.groups()
    if head == "product":
        if body is None:
            raise UnknownGroup(name)
        factors = [catalog(a) for a in _split_args(body)]
        if not factors:
            raise UnknownGroup(name)
        out = factors[0]
        for f in factors[1:]:
            out = product(out, f)
        return out
    arg = None
    if body is not None:
        if not body.isdigit():
            raise UnknownGroup(name)
        arg = int(body)
    elif suffix is not None:
        arg = int(suffix)
    if head == "cyclic" and arg is not None and arg >= 1:
        return _cyclic(arg)
    if head == "dihedral" and arg is not None:
        return _dihedral(arg)
    if head == "quaternion" and arg == 8:
        return _quaternion8()
    if head == "symmetric" and arg in (3, 4):
        return _symmetric(arg)
    raise UnknownGroup(name)


def catalog_names() -> list[str]:
    return ["cyclic(n)", "dihedral(order)", "quaternion8", "symmetric(3)",
            "symmetric(4)", "product(name, ...)"]


def _convolve(g: FiniteGroup, dist: list[int], step: list[int]) -> list[int]:
    out = [0] * g.order
    for i, ci in enumerate(dist):
        if not ci:
            continue
        for j, cj in enumerate(step):
            if cj:
                out[g.mul(i, j)] += ci * cj
    return out


@lru_cache(maxsize=None)
def zeta(g: FiniteGroup, gbar: int) -> Fraction:
    """Genus-indexed representation sum, via solution counting (see module doc)."""
    n = g.order
    if n > _MAX_ORDER:
        raise BudgetExceeded(f"group order {n} exceeds the zeta budget ({_MAX_ORDER})")
    if gbar == 0:
        return Fraction(n)
    if gbar > 0:
        step = [0] * n
        for a in range(n):
            ainv = g.inverse(a)
            for b in range(n):
                # [a, b] = a b a^-1 b^-1
                step[g.mul(g.mul(g.mul(a, b), ainv), g.inverse(b))] += 1
        count, weight = gbar, Fraction(1, n ** (2 * gbar - 1))
    else:
        step = [0] * n
        for c in range(n):
            step[g.mul(c, c)] += 1
        count, weight = -gbar, Fraction(1, n ** (-gbar - 1))
    dist = [0] * n
    dist[0] = 1
    for _ in range(count):
        dist = _convolve(g, dist, step)
    return weight * dist[0]


def conjugacy_class_count(g: FiniteGroup) -> int:
    n = g.order
    seen: set[int] = set()
    classes = 0
    for x in range(n):
        if x in seen:
            continue
        classes += 1
        seen.update(g.mul(g.mul(a, x), g.inverse(a)) for a in range(n))
    return classes


def involution_count(g: FiniteGroup) -> int:
    """Number of solutions of c^2 = 1, identity included."""
    return sum(1 for c in range(g.order) if g.mul(c, c) == 0)

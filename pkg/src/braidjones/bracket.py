"""Kauffman bracket evaluation of braid closures, as an independent oracle.

Two evaluators share one convention block: a naive sum over all ``2^c``
crossing smoothings, and a transfer-matrix pass through the planar diagram
algebra whose cost is polynomial in word length for fixed strand count.
``jones_via_bracket`` applies the writhe correction and rewrites the
bracket variable ``A`` into the skein variable ``s``. Nothing here touches
the recurrence engine, so agreement between the two pipelines is a real
cross-check.

Convention (pinned by the unknot, Hopf link and trefoil values in the
tests): for a letter ``x_i`` the pass-through smoothing carries weight
A^-1 and the cap-cup smoothing carries A, with the two weights swapped
for ``x_i^-1``; closed loops count ``delta = -A^2 - A^-2`` per loop beyond
the first; the closure value is normalized by ``(-A)^(3 writhe)`` and the
final substitution is ``s = A^2``. Flipping either the smoothing weights
or the sign of the writhe exponent mirrors every chiral value and breaks
those fixtures.
"""

from __future__ import annotations

from functools import cache

from .braid import BraidWord
from .laurent import LaurentPoly

# Laurent polynomials in the smoothing variable A
BracketPoly = LaurentPoly

A = LaurentPoly.monomial(1)
A_INV = LaurentPoly.monomial(-1)
DELTA = LaurentPoly({2: -1, -2: -1})

DEFAULT_MAX_CROSSINGS = 24
DEFAULT_MAX_STRANDS = 12


class CapExceeded(RuntimeError):
    """Input is larger than the configured cost cap for this evaluator."""


class ParityError(ArithmeticError):
    """A bracket value had odd powers of A left after normalization."""


@cache
def _delta_power(n: int) -> BracketPoly:
    return DELTA**n


class _LoopCounter:
    """Union-find over wire segments of a smoothed diagram."""

    __slots__ = ("parent",)

    def __init__(self) -> None:
        self.parent: list[int] = []

    def fresh(self) -> int:
        self.parent.append(len(self.parent))
        return len(self.parent) - 1

    def find(self, a: int) -> int:
        parent = self.parent
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb

    def classes(self) -> int:
        return sum(1 for i, p in enumerate(self.parent) if self.find(i) == i)


def bracket_naive(word: BraidWord, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> BracketPoly:
    """Bracket of the closure by brute force over all smoothing states.

    Exponential in the crossing count; guarded by ``max_crossings``.
    """
    letters = list(word.letters())
    c = len(letters)
    if c > max_crossings:
        raise CapExceeded(
            f"{c} crossings exceed the naive cap of {max_crossings} (2^{c} states)"
        )
    n = word.strands
    tally: dict[tuple[int, int], int] = {}
    for state in range(1 << c):
        uf = _LoopCounter()
        start = [uf.fresh() for _ in range(n)]
        current = list(start)
        a_exp = 0
        for bit, (gen, direction) in enumerate(letters):
            cap = (state >> bit) & 1
            a_exp += direction * (1 if cap else -1)
            if cap:
                i = gen - 1
                uf.union(current[i], current[i + 1])
                wire = uf.fresh()
                current[i] = wire
                current[i + 1] = wire
        for i in range(n):
            uf.union(current[i], start[i])
        key = (a_exp, uf.classes())
        tally[key] = tally.get(key, 0) + 1
    result = LaurentPoly()
    for (a_exp, loops), count in tally.items():
        result = result + LaurentPoly.monomial(a_exp, count) * _delta_power(loops - 1)
    return result


def _identity_matching(n: int) -> tuple[int, ...]:
    # points 0..n-1 are the fixed top boundary, n..2n-1 the working bottom
    return tuple(range(n, 2 * n)) + tuple(range(n))


def bracket_tl(word: BraidWord, max_strands: int = DEFAULT_MAX_STRANDS) -> BracketPoly:
    """Bracket of the closure via the planar matching transfer pass.

    Maintains a weighted sum of noncrossing matchings of the boundary
    (at most Catalan(strands) of them) and applies one crossing at a
    time, so the cost is linear in the crossing count for fixed strand
    count. Guarded by ``max_strands``.
    """
    n = word.strands
    if n > max_strands:
        raise CapExceeded(f"{n} strands exceed the transfer cap of {max_strands}")
    states: dict[tuple[int, ...], BracketPoly] = {_identity_matching(n): LaurentPoly.monomial(0)}
    for gen, direction in word.letters():
        pass_w = A_INV if direction > 0 else A
        cap_w = A if direction > 0 else A_INV
        p = n + gen - 1
        q = p + 1
        nxt: dict[tuple[int, ...], BracketPoly] = {}

        def bump(key: tuple[int, ...], val: BracketPoly) -> None:
            prev = nxt.get(key)
            nxt[key] = val if prev is None else prev + val

        for match, coeff in states.items():
            bump(match, coeff * pass_w)
            a, b = match[p], match[q]
            if a == q:
                # p and q were already partners: the cap closes a loop and
                # the cup restores the same matching
                bump(match, coeff * cap_w * DELTA)
            else:
                rewired = list(match)
                rewired[a], rewired[b] = b, a
                rewired[p], rewired[q] = q, p
                bump(tuple(rewired), coeff * cap_w)
        states = nxt
    result = LaurentPoly({0: 0})
    for match, coeff in states.items():
        uf = _LoopCounter()
        nodes = [uf.fresh() for _ in range(2 * n)]
        for i, j in enumerate(match):
            uf.union(nodes[i], nodes[j])
        for i in range(n):
            uf.union(nodes[i], nodes[n + i])
        loops = uf.classes()
        result = result + coeff * _delta_power(loops - 1)
    return result


def jones_via_bracket(
    word: BraidWord,
    max_crossings: int = DEFAULT_MAX_CROSSINGS,
    max_strands: int = DEFAULT_MAX_STRANDS,
) -> LaurentPoly:
    """Jones polynomial of the closure from the bracket alone.

    Uses the transfer pass when the strand count allows it and falls back
    to the naive sum otherwise. Applies the ``(-A)^(3 writhe)``
    normalization and substitutes ``s = A^2``; a surviving odd power of A
    would indicate a convention bug and raises ParityError.
    """
    if word.strands <= max_strands:
        value = bracket_tl(word, max_strands)
    else:
        value = bracket_naive(word, max_crossings)
    w = word.writhe()
    value = value * LaurentPoly.monomial(3 * w, -1 if w % 2 else 1)
    out: dict[int, int] = {}
    for exp, coeff in value.terms():
        if exp % 2:
            raise ParityError(f"odd A power {exp} after writhe normalization")
        out[exp // 2] = coeff
    return LaurentPoly(out)

"""Positive braids, their complement, and the projection from LD-expansions.

Generators are strand indices: the atom ``i`` is the crossing of strands i
and i+1.  The complement encodes the Artin relations, so the reversing
engine provides the word problem, lcms and gcds.

The projection onto braids sends the expansion atom at address 1^i to the
crossing i+1 and drops every other atom; it carries the local Garside word
of a term with right-height n to the half-twist on n strands, which is how
``delta_n`` is defined here.

Braids also act on sequences: by swapping entries (the permutation action)
and, more generally, through any binary operation satisfying the left
self-distributive law (``act_ld``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Sequence, TypeVar

from . import mld, reversing, terms
from .reversing import DEFAULT_BUDGET, Complement, Word
from .terms import Term

S = TypeVar("S")


def braid_complement(i: int, j: int) -> Word:
    """C(s_i, s_j): empty / far commutation / the braid relation tail."""
    if i == j:
        return ()
    if abs(i - j) >= 2:
        return (j,)
    return (j, i)


def atom_name(i: int) -> str:
    return f"s{i}"


def parse_atom(text: str) -> int:
    if not text.startswith("s") or not text[1:].isdigit() or int(text[1:]) < 1:
        raise ValueError(f"expected a braid atom 's<i>', got {text!r}")
    return int(text[1:])


BRAID = Complement(name="braid", table=braid_complement, atom_name=atom_name)


def pi(word: Word) -> Word:
    """Project an expansion word: 1^i goes to the crossing i+1, the rest drops."""
    out = []
    for addr in word:
        if "0" not in addr:
            out.append(len(addr) + 1)
    return tuple(out)


@lru_cache(maxsize=None)
def delta_n(n: int) -> Word:
    """The n-strand half-twist, obtained by projecting the right comb's Garside word."""
    if n < 0:
        raise ValueError("strand count must be >= 0")
    return pi(mld.delta_big(terms.right_comb(n)))


def is_simple_braid(w: Word, n: int, budget: int = DEFAULT_BUDGET) -> bool:
    """Whether ``w`` left-divides the n-strand half-twist."""
    return reversing.divides(BRAID, w, delta_n(n), budget)


def crossings_at_most_once(w: Word, n: int) -> bool:
    """Permutation-diagram criterion for simplicity: no strand pair crosses twice.

    Independent of the divisibility route; tracks which strand occupies each
    position and records crossed pairs.
    """
    if any(i >= n for i in w):
        return False
    strands = list(range(n))
    crossed: set[tuple[int, int]] = set()
    for i in w:
        a, b = strands[i - 1], strands[i]
        pair = (min(a, b), max(a, b))
        if pair in crossed:
            return False
        crossed.add(pair)
        strands[i - 1], strands[i] = b, a
    return True


def check_proj_compat(alpha: str, beta: str, budget: int = DEFAULT_BUDGET) -> bool:
    """Projection respects complements on the pair (alpha, beta).

    Compares the projected LD-complement with the reversing of the projected
    atoms in the braid monoid, as elements.
    """
    lhs = pi(mld.ld_complement(alpha, beta))
    rhs, _ = reversing.reverse(BRAID, pi((alpha,)), pi((beta,)), budget)
    return reversing.equal(BRAID, lhs, rhs, budget)


def act_nat(n: int, w: Word) -> int | None:
    """The trivial action on strand counts: defined when all crossings fit."""
    return n if all(1 <= i < n for i in w) else None


def act_seq(seq: Sequence, w: Word) -> tuple | None:
    """Permutation action: the crossing i swaps entries i and i+1 (1-based)."""
    out = list(seq)
    for i in w:
        if i < 1 or i + 1 > len(out):
            return None
        out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


@dataclass(frozen=True)
class LdSystem:
    """A carrier with a binary operation expected to satisfy x(yz) = (xy)(xz).

    ``elements`` optionally lists a finite carrier (used for exhaustive law
    checking); infinite carriers are sampled instead.
    """

    name: str
    op: Callable
    elements: tuple = ()

    def check_law(self, triples) -> list[tuple]:
        """Return the triples violating left self-distributivity."""
        bad = []
        for x, y, z in triples:
            if self.op(x, self.op(y, z)) != self.op(self.op(x, y), self.op(x, z)):
                bad.append((x, y, z))
        return bad


def right_projection_lds() -> LdSystem:
    """Integers with x*y = y; its braid action degenerates to entry swaps."""
    return LdSystem(name="right-projection", op=lambda x, y: y)


def mean_lds(modulus: int) -> LdSystem:
    """Z/m with x*y = 2y - x, a classical affine LD-system."""
    return LdSystem(
        name=f"mean-mod-{modulus}",
        op=lambda x, y: (2 * y - x) % modulus,
        elements=tuple(range(modulus)),
    )


@lru_cache(maxsize=None)
def laver_table(n: int) -> LdSystem:
    """The Laver table on {1, ..., 2^n}.

    Determined by p*1 = p+1 cyclically and p*(q+1) = (p*q)*(p+1), filled by
    descending first argument.
    """
    order = 2**n
    table = [[0] * (order + 1) for _ in range(order + 1)]
    table[order] = [0] + list(range(1, order + 1))  # top row acts as identity
    for p in range(order - 1, 0, -1):
        table[p][1] = p + 1
        for q in range(1, order):
            # row values stay above p, so the referenced row already exists
            table[p][q + 1] = table[table[p][q]][p + 1]
    return LdSystem(
        name=f"laver-{order}",
        op=lambda x, y: table[x][y],
        elements=tuple(range(1, order + 1)),
    )


def _reduce_signed(word: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def braid_group_lds() -> LdSystem:
    """The braid-group carrier with x*y = x sh(y) s1 sh(x)^-1.

    Elements are freely reduced signed words (positive k for a crossing, -k
    for its inverse); only free reduction is applied, no braid-relation
    equality is decided.
    """

    def sh(word: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(x + 1 if x > 0 else x - 1 for x in word)

    def op(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        inv = tuple(-k for k in reversed(sh(x)))
        return _reduce_signed(x + sh(y) + (1,) + inv)

    return LdSystem(name="braid-group", op=op)


def act_ld(system: LdSystem, seq: Sequence, w: Word) -> tuple | None:
    """LD-system action: the crossing i maps (x_i, x_i+1) to (x_i * x_i+1, x_i)."""
    out = list(seq)
    for i in w:
        if i < 1 or i + 1 > len(out):
            return None
        out[i - 1], out[i] = system.op(out[i - 1], out[i]), out[i - 1]
    return tuple(out)


def project_term_morphism(
    t: Term, a: Word
) -> tuple[int, Word, int]:
    """Project a labelled expansion of ``t`` to a braid morphism on RH(t) strands."""
    if terms.act_word(t, a) is None:
        raise ValueError("the word does not act at the given term")
    n = terms.right_height(t)
    image = pi(a)
    assert all(i < n for i in image), "projected crossings must fit the strand count"
    return (n, image, n)


def eval_term(system: LdSystem, assignment: Callable[[int], S], t: Term) -> S:
    """Evaluate a term in an LD-system under a variable assignment."""
    if isinstance(t, terms.Leaf):
        return assignment(t.var)
    return system.op(
        eval_term(system, assignment, t.left), eval_term(system, assignment, t.right)
    )


def project_pi_s(
    system: LdSystem, assignment: Callable[[int], S], t: Term
) -> tuple:
    """Evaluations of the subterms at 0, 10, ..., 1^(n-1)0 for n = RH(t)."""
    n = terms.right_height(t)
    if n == 0:
        raise ValueError("projection to sequences requires right-height >= 1")
    out = []
    cur = t
    for _ in range(n):
        assert isinstance(cur, terms.Node)
        out.append(eval_term(system, assignment, cur.left))
        cur = cur.right
    return tuple(out)


def parse_word(text: str) -> Word:
    """Parse a whitespace-separated list of ``s<i>`` atoms."""
    return tuple(parse_atom(part) for part in text.split())


def format_word(word: Word) -> str:
    return " ".join(atom_name(i) for i in word)

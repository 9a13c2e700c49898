"""Binary terms, subterm addresses, and the expansion actions on them.

Terms are finite binary trees whose leaves carry positive variable indices.
A subterm position is a bit-string address: '' is the root, '0' forks left,
'1' forks right.  Two partial rewriting actions live here:

- the self-distributive expansion ``apply_ld`` rewrites the subterm
  ``t0*(t1*t2)`` at a given address into ``(t0*t1)*(t0*t2)``;
- the associative rotation ``apply_assoc`` rewrites ``t1*(t2*t3)`` into
  ``(t1*t2)*t3``.

All values are immutable; every operation returns fresh terms.  Partiality
is expressed by returning None (an address may simply not exist).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union


@dataclass(frozen=True)
class Leaf:
    """A variable leaf; ``var`` is the 1-based variable index."""

    var: int = 1

    def __post_init__(self) -> None:
        if self.var < 1:
            raise ValueError(f"variable index must be >= 1, got {self.var}")
        object.__setattr__(self, "_hash", hash(("leaf", self.var)))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]


@dataclass(frozen=True)
class Node:
    """An inner node: the product ``left * right``."""

    left: Term
    right: Term

    def __post_init__(self) -> None:
        object.__setattr__(self, "_hash", hash((hash(self.left), hash(self.right))))

    def __hash__(self) -> int:
        return self._hash  # type: ignore[attr-defined]


Term = Union[Leaf, Node]

# An address is a string over {'0', '1'}; '' denotes the root.
Address = str


def size(t: Term) -> int:
    """Number of inner nodes of ``t`` (a leaf has size 0)."""
    if isinstance(t, Leaf):
        return 0
    return 1 + size(t.left) + size(t.right)


def leaves(t: Term) -> Iterator[int]:
    """Variable indices of the leaves, left to right."""
    if isinstance(t, Leaf):
        yield t.var
    else:
        yield from leaves(t.left)
        yield from leaves(t.right)


def subterm(t: Term, addr: Address) -> Term | None:
    """Subterm of ``t`` rooted at ``addr``, or None when the address overruns."""
    for bit in addr:
        if isinstance(t, Leaf):
            return None
        t = t.left if bit == "0" else t.right
    return t


def replace(t: Term, addr: Address, new: Term) -> Term:
    """Rebuild ``t`` with the subterm at ``addr`` replaced by ``new``.

    The address must exist in ``t``.
    """
    if not addr:
        return new
    if isinstance(t, Leaf):
        raise ValueError(f"address {addr!r} does not exist in the term")
    if addr[0] == "0":
        return Node(replace(t.left, addr[1:], new), t.right)
    return Node(t.left, replace(t.right, addr[1:], new))


def apply_ld(t: Term, addr: Address) -> Term | None:
    """One self-distributive expansion at ``addr``, or None if there is no redex.

    The subterm at ``addr`` must have the shape ``t0*(t1*t2)``; it becomes
    ``(t0*t1)*(t0*t2)``.  The result is strictly larger than ``t``.
    """
    sub = subterm(t, addr)
    if not isinstance(sub, Node) or not isinstance(sub.right, Node):
        return None
    t0, t1, t2 = sub.left, sub.right.left, sub.right.right
    return replace(t, addr, Node(Node(t0, t1), Node(t0, t2)))


def act_word(t: Term, word: tuple[Address, ...]) -> Term | None:
    """Left-to-right composition of ``apply_ld``; None as soon as a step fails."""
    cur: Term | None = t
    for addr in word:
        if cur is None:
            return None
        cur = apply_ld(cur, addr)
    return cur


def dist(t: Term, u: Term) -> Term:
    """Distribute ``t`` once everywhere inside ``u``.

    Recursively: ``dist(t, x_i) = t*x_i`` and
    ``dist(t, u1*u2) = dist(t, u1) * dist(t, u2)``.
    """
    if isinstance(u, Leaf):
        return Node(t, u)
    return Node(dist(t, u.left), dist(t, u.right))


def phi(t: Term) -> Term:
    """The fundamental expansion of ``t``: replace every product by ``dist``."""
    if isinstance(t, Leaf):
        return t
    return dist(phi(t.left), phi(t.right))


def right_height(t: Term) -> int:
    """Length of the rightmost branch; invariant under apply_ld."""
    n = 0
    while isinstance(t, Node):
        t = t.right
        n += 1
    return n


def rightmost_var(t: Term) -> int:
    """Index of the rightmost variable occurring in ``t``."""
    while isinstance(t, Node):
        t = t.right
    return t.var


def pi_hat(t: Term) -> tuple[int, ...]:
    """Rightmost-variable indices of the subterms at 0, 10, ..., 1^(n-1)0.

    Requires right_height(t) >= 1.  This is the sequence on which the braid
    projection acts by the permutation action.
    """
    n = right_height(t)
    if n == 0:
        raise ValueError("pi_hat requires a term of right-height >= 1")
    out = []
    cur = t
    for _ in range(n):
        assert isinstance(cur, Node)
        out.append(rightmost_var(cur.left))
        cur = cur.right
    return tuple(out)


def apply_assoc(t: Term, addr: Address) -> Term | None:
    """One associativity rotation at ``addr``: ``t1*(t2*t3)`` becomes ``(t1*t2)*t3``.

    Size-preserving; None when the subterm is not of the required shape.
    """
    sub = subterm(t, addr)
    if not isinstance(sub, Node) or not isinstance(sub.right, Node):
        return None
    t1, t2, t3 = sub.left, sub.right.left, sub.right.right
    return replace(t, addr, Node(Node(t1, t2), t3))


def left_comb(t: Term) -> Term:
    """The fully left-bracketed term with the same leaf sequence as ``t``."""
    seq = list(leaves(t))
    out: Term = Leaf(seq[0])
    for var in seq[1:]:
        out = Node(out, Leaf(var))
    return out


def right_comb(n: int, var: int = 1) -> Term:
    """The right comb ``x*(x*(...*x))`` with ``n`` nodes (right-height ``n``)."""
    out: Term = Leaf(var)
    for _ in range(n):
        out = Node(Leaf(var), out)
    return out


def node_addresses(t: Term, prefix: Address = "") -> Iterator[Address]:
    """Addresses of the inner nodes of ``t``, in prefix order."""
    if isinstance(t, Node):
        yield prefix
        yield from node_addresses(t.left, prefix + "0")
        yield from node_addresses(t.right, prefix + "1")


def ld_redexes(t: Term) -> tuple[Address, ...]:
    """Addresses where apply_ld is defined: nodes whose right child is a node."""
    return tuple(a for a in node_addresses(t) if subterm(t, a + "11") is not None)


def assoc_redexes(t: Term) -> tuple[Address, ...]:
    """Addresses where apply_assoc is defined (same shape condition as LD)."""
    return ld_redexes(t)


@lru_cache(maxsize=None)
def shapes(n: int) -> tuple[Term, ...]:
    """All terms of size ``n`` whose leaves are all x1, in a fixed order."""
    if n == 0:
        return (Leaf(1),)
    out = []
    for i in range(n):
        for left in shapes(i):
            for right in shapes(n - 1 - i):
                out.append(Node(left, right))
    return tuple(out)


def all_terms(max_size: int) -> Iterator[Term]:
    """All single-variable terms of size 0..max_size (Catalan-many per size)."""
    for n in range(max_size + 1):
        yield from shapes(n)


def with_distinct_vars(t: Term) -> Term:
    """Relabel the leaves of ``t`` as x1, x2, ... from left to right."""
    counter = iter(range(1, size(t) + 2))

    def go(u: Term) -> Term:
        if isinstance(u, Leaf):
            return Leaf(next(counter))
        return Node(go(u.left), go(u.right))

    return go(t)


# ---------------------------------------------------------------------------
# Text grammar:  term := var | "(" term "*" term ")" ;  var := "x" [1-9][0-9]*
# Outer parentheses are optional; "*" is not associative, nesting must be
# parenthesized.  The bare variable "x" is shorthand for "x1".
# ---------------------------------------------------------------------------


class TermSyntaxError(ValueError):
    """Raised when a term string does not match the grammar."""


def parse_term(text: str) -> Term:
    """Parse the textual term grammar, e.g. ``x1*(x2*x3)``."""
    s = text.replace(" ", "")
    term, pos = _parse_top(s, 0)
    if pos != len(s):
        raise TermSyntaxError(f"trailing input at position {pos} in {text!r}")
    return term


def _parse_top(s: str, pos: int) -> tuple[Term, int]:
    # Top level: a term, optionally followed by "*" term (outer parens omitted).
    left, pos = _parse_atom(s, pos)
    if pos < len(s) and s[pos] == "*":
        right, pos = _parse_atom(s, pos + 1)
        return Node(left, right), pos
    return left, pos


def _parse_atom(s: str, pos: int) -> tuple[Term, int]:
    if pos >= len(s):
        raise TermSyntaxError("unexpected end of input")
    if s[pos] == "(":
        left, pos = _parse_atom(s, pos + 1)
        if pos >= len(s) or s[pos] != "*":
            raise TermSyntaxError(f"expected '*' at position {pos}")
        right, pos = _parse_atom(s, pos + 1)
        if pos >= len(s) or s[pos] != ")":
            raise TermSyntaxError(f"expected ')' at position {pos}")
        return Node(left, right), pos + 1
    if s[pos] != "x":
        raise TermSyntaxError(f"expected variable or '(' at position {pos}")
    pos += 1
    start = pos
    while pos < len(s) and s[pos].isdigit():
        pos += 1
    if start == pos:
        return Leaf(1), pos
    if s[start] == "0":
        raise TermSyntaxError(f"variable index may not start with 0 at {start}")
    return Leaf(int(s[start:pos])), pos


def format_term(t: Term, outer: bool = True) -> str:
    """Render a term in the grammar; the outermost product drops its parens."""
    if isinstance(t, Leaf):
        return f"x{t.var}"
    inner = f"{format_term(t.left, False)}*{format_term(t.right, False)}"
    return inner if outer else f"({inner})"


def parse_address(text: str) -> Address:
    """Parse a bit-string address; the empty string is the root."""
    if any(c not in "01" for c in text):
        raise TermSyntaxError(f"address must consist of bits, got {text!r}")
    return text

"""Subword reversing over a presentation by right-complement.

A complement on an atom set S assigns to every ordered pair (a, b) of
distinct atoms a word C(a, b) so that ``a C(a,b) = b C(b,a)`` is the defining
relation for the pair, with ``C(a, a)`` empty.  Reversing extends C to a
partial map on words: the signed word ``u^-1 v`` is rewritten by replacing
each factor ``a^-1 b`` with ``C(a,b) C(b,a)^-1`` until no negative letter
precedes a positive one.  The positive output is written ``u\\v`` below, so
that ``u * (u\\v) = v * (v\\u)`` represents the right-lcm of u and v whenever
the procedure terminates.

On top of one reversing primitive the module derives the word problem,
left-divisibility, quotients, right-lcms, an iterated left-gcd, and the cube
condition used to certify a presentation as left-preGarside.

Every entry point takes a step budget; exceeding it raises BudgetExhausted
rather than silently looping on a divergent presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable, Sequence, TypeVar

Atom = TypeVar("Atom", bound=Hashable)
Word = tuple  # tuple[Atom, ...]; kept loose so address- and index-atoms mix freely

DEFAULT_BUDGET = 10**6


class BudgetExhausted(RuntimeError):
    """Reversing exceeded its step budget; the computation may diverge."""

    def __init__(self, steps: int, context: str = ""):
        self.steps = steps
        super().__init__(f"reversing exhausted after {steps} steps {context}".rstrip())


@dataclass(frozen=True)
class Complement:
    """A complement table together with the serialization used for ordering.

    ``table(a, b)`` must return the word C(a, b) for every pair of atoms, with
    ``C(a, a)`` empty.  ``atom_name`` serializes an atom; candidate atoms are
    enumerated in length-then-lexicographic order of their names.
    """

    name: str
    table: Callable[[Hashable, Hashable], Word]
    atom_name: Callable[[Hashable], str] = field(default=str)

    def __call__(self, a: Hashable, b: Hashable) -> Word:
        return self.table(a, b)

    def sort_key(self, a: Hashable) -> tuple[int, str]:
        name = self.atom_name(a)
        return (len(name), name)


# Reversing is organized around pushing one positive letter through a
# negative word; identical pushes recur massively across gcd stripping, the
# divisor walks, and the functor computations, so completed pushes are
# memoized per table.  The caps bound resident memory: keys hold whole words,
# so a few hundred thousand entries is already a few hundred MB.
_PUSH_CACHE: dict[tuple, tuple[Word, Word]] = {}
_CACHE_LIMIT = 400_000


# Letters copied while assembling results are bounded separately from the
# step budget: pathological reversings balloon quadratically in memory long
# before they exhaust their steps, and an early honest Exhausted beats an OOM.
_COPY_LIMIT = 40_000_000


def _push(comp: Complement, neg: Word, letter, budget: int, state: list) -> tuple[Word, Word]:
    """Reverse ``neg^-1 . letter`` completely; return (positives, residual).

    Both words are in monoid order (the first letter of ``neg`` is the one
    adjacent to the positive side).  Iterative worker with an explicit frame
    stack; each table lookup on a fresh input costs one budget step, memoized
    sub-pushes are free.
    """
    # Frames: [letters, idx, acc_positives, cur_neg, post_word, memo_key]
    stack: list[list] = []
    result: tuple[Word, Word] | None = None
    while True:
        # descend: evaluate push(neg, letter)
        while result is None:
            key = (comp.name, neg, letter)
            hit = _PUSH_CACHE.get(key)
            if hit is not None:
                result = hit
            elif not neg:
                result = ((letter,), ())
            else:
                state[0] += 1
                if state[0] > budget:
                    raise BudgetExhausted(state[0], f"in {comp.name}")
                forward = comp(neg[0], letter)
                backward = comp(letter, neg[0])
                stack.append([forward, 0, [], neg[1:], backward, key])
                if forward:
                    neg, letter = neg[1:], forward[0]
                    stack[-1][1] = 1
                else:
                    result = ((), neg[1:])
        # unwind finished pushes into the enclosing frame
        while stack:
            frame = stack[-1]
            frame[2].extend(result[0])
            frame[3] = result[1]
            state[1] += len(result[0]) + len(result[1])
            if state[1] > _COPY_LIMIT:
                raise BudgetExhausted(state[0], f"in {comp.name} (memory bound)")
            if frame[1] < len(frame[0]):
                neg, letter = frame[3], frame[0][frame[1]]
                frame[1] += 1
                result = None
                break
            positives = tuple(frame[2])
            residual = frame[4] + frame[3]
            result = (positives, residual)
            if len(_PUSH_CACHE) >= _CACHE_LIMIT:
                _PUSH_CACHE.clear()
            _PUSH_CACHE[frame[5]] = result
            stack.pop()
        if not stack:
            return result


_RESULT_CACHE: dict[tuple, tuple[Word, Word]] = {}


def reverse(
    comp: Complement, u: Word, v: Word, budget: int = DEFAULT_BUDGET
) -> tuple[Word, Word]:
    """Fully reverse ``u^-1 v``; return the pair ``(u\\v, v\\u)``.

    Deterministic (reversing is confluent: redexes never overlap); the
    budget bounds the number of fresh table lookups in this call.
    """
    u, v = tuple(u), tuple(v)
    key = (comp.name, u, v)
    hit = _RESULT_CACHE.get(key)
    if hit is not None:
        return hit
    if len(v) > len(u):
        # The grid is symmetric; pushing the shorter side through the longer
        # keys the memo on suffixes of the stable long word.
        second, first = reverse(comp, v, u, budget)
        return first, second
    state = [0, 0]
    positives: tuple = ()
    neg = u
    for letter in v:
        got, neg = _push(comp, neg, letter, budget, state)
        positives += got
    if len(_RESULT_CACHE) >= _CACHE_LIMIT:
        _RESULT_CACHE.clear()
    _RESULT_CACHE[key] = (positives, neg)
    _RESULT_CACHE[(comp.name, v, u)] = (neg, positives)
    return positives, neg


def equal(comp: Complement, u: Word, v: Word, budget: int = DEFAULT_BUDGET) -> bool:
    """Word problem: u and v represent the same element.

    Sound because both remainders of a full reversal vanish exactly when the
    elements coincide, the identity being the only invertible element.
    """
    r1, r2 = reverse(comp, u, v, budget)
    return not r1 and not r2


def divides(comp: Complement, u: Word, v: Word, budget: int = DEFAULT_BUDGET) -> bool:
    """Left-divisibility: u <= v, i.e. v = u*w for some w."""
    _, rem = reverse(comp, u, v, budget)
    return not rem


class NotDivisor(ValueError):
    """quotient() was asked for u\\v although u does not left-divide v."""


def quotient(comp: Complement, u: Word, v: Word, budget: int = DEFAULT_BUDGET) -> Word:
    """The word w with u*w = v, when u left-divides v."""
    w, rem = reverse(comp, u, v, budget)
    if rem:
        raise NotDivisor(
            f"{[comp.atom_name(a) for a in u]} does not left-divide "
            f"{[comp.atom_name(a) for a in v]}"
        )
    return w


def lcm(comp: Complement, u: Word, v: Word, budget: int = DEFAULT_BUDGET) -> Word:
    """The right-lcm u * (u\\v); equal, as an element, to v * (v\\u)."""
    w, _ = reverse(comp, u, v, budget)
    return u + w


CandidateProvider = Callable[[Word], Iterable]


def gcd(
    comp: Complement,
    u: Word,
    v: Word,
    candidates: Iterable | CandidateProvider,
    budget: int = DEFAULT_BUDGET,
) -> Word:
    """Left-gcd of u and v by iterated atom stripping.

    ``candidates`` supplies the atoms that may still divide the running
    quotients: either a static iterable, or a callable receiving the prefix
    stripped so far (needed when the enabled atoms change along the way, as
    they do for actions on growing objects).  It must cover every atom
    left-dividing the running quotients; the result does not depend on the
    enumeration order beyond picking the same gcd word.
    """
    provider: CandidateProvider
    if callable(candidates):
        provider = candidates
    else:
        fixed = tuple(candidates)
        provider = lambda _prefix: fixed
    prefix: list = []
    while True:
        for a in sorted(set(provider(tuple(prefix))), key=comp.sort_key):
            atom = (a,)
            rem_u, quot_u = reverse(comp, u, atom, budget)
            if rem_u:
                continue
            rem_v, quot_v = reverse(comp, v, atom, budget)
            if rem_v:
                continue
            u, v = quot_u, quot_v
            prefix.append(a)
            break
        else:
            return tuple(prefix)


def cube_check(comp: Complement, a, b, c, budget: int = DEFAULT_BUDGET) -> bool:
    """The cube condition on the triple (a, b, c).

    True when reversing ((a\\b)\\(a\\c)) against ((b\\a)\\(b\\c)) leaves an
    empty first remainder; with the condition holding for all triples the
    presented monoid is left-preGarside.
    """
    ab, ba = reverse(comp, (a,), (b,), budget)
    ac, _ = reverse(comp, (a,), (c,), budget)
    bc, _ = reverse(comp, (b,), (c,), budget)
    left, _ = reverse(comp, ab, ac, budget)
    right, _ = reverse(comp, ba, bc, budget)
    final, _ = reverse(comp, left, right, budget)
    return not final


def word_from_atoms(atoms: Sequence) -> Word:
    """Normalize any atom sequence to the tuple form used throughout."""
    return tuple(atoms)


def clear_caches() -> None:
    """Drop the push and result memos (used to bound long-run memory)."""
    _PUSH_CACHE.clear()
    _RESULT_CACHE.clear()

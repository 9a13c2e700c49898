"""Greedy normal forms over any locally left-Garside instance.

An Instance packages what the normal-form machinery needs to know about a
monoid acting partially on objects: the enabled atoms at an object, the
partial action on words, the local Garside word at an object, and the
complement presenting the monoid.  Both concrete instances (LD-expansions
acting on terms, positive braids acting on strand counts) plug in here.

The head of a word at an object is its gcd with the local Garside word; the
normal form peels heads greedily.  Left multiplication by a simple element
updates a normal form by a left-to-right pass of two-factor normalizations;
right multiplication needs the functor to preserve normality (regularity),
which for LD-expansions is an open conjecture, so the right pass
cross-checks itself and reports a violation instead of trusting the domino.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from . import braids, mld, reversing, terms
from .reversing import DEFAULT_BUDGET, Complement, Word


@dataclass(frozen=True)
class Instance:
    """A monoid with partial action, local Garside words, and a complement."""

    name: str
    complement: Complement
    atoms: Callable[[Any], tuple]
    act: Callable[[Any, Word], Any]
    delta: Callable[[Any], Word]
    budget: int = DEFAULT_BUDGET
    # private memo for functor and star words, keyed by (kind, object, word)
    _memo: dict = field(default_factory=dict, compare=False, repr=False)

    def candidate_provider(self, x: Any) -> Callable[[Word], tuple]:
        """Candidate atoms for gcds of words acting at ``x``: the atoms enabled
        at the running object, which cover every atom dividing the quotients."""

        def provider(prefix: Word) -> tuple:
            obj = self.act(x, prefix)
            if obj is None:
                raise ValueError("gcd prefix stopped acting; inputs were not in M_x")
            return self.atoms(obj)

        return provider


def ld_instance(budget: int = DEFAULT_BUDGET) -> Instance:
    """LD-expansions acting on terms, with delta the local Garside word."""
    return Instance(
        name="ld",
        complement=mld.LD,
        atoms=mld.enabled_atoms,
        act=terms.act_word,
        delta=mld.delta_big,
        budget=budget,
    )


def braid_instance(budget: int = DEFAULT_BUDGET) -> Instance:
    """Positive braids acting on strand counts, with the half-twist words."""
    return Instance(
        name="braid",
        complement=braids.BRAID,
        atoms=lambda n: tuple(range(1, n)),
        act=braids.act_nat,
        delta=braids.delta_n,
        budget=budget,
    )


@dataclass(frozen=True)
class NormalForm:
    """A greedy decomposition: factors simple at their running objects.

    ``objects`` has one more entry than ``factors``; objects[i] is where
    factors[i] applies.  The identity is the empty sequence.
    """

    source: Any
    factors: tuple[Word, ...]
    objects: tuple = field(default=())

    def word(self) -> Word:
        out: tuple = ()
        for f in self.factors:
            out += f
        return out

    @property
    def target(self) -> Any:
        return self.objects[-1]


@dataclass(frozen=True)
class RegularityViolation:
    """A right-domino pass disagreed with from-scratch normalization.

    For the LD instance this would witness a failure of regularity, hence a
    counterexample to the embedding program; carry everything needed to
    replay it.
    """

    source: Any
    nf_factors: tuple[Word, ...]
    g: Word
    domino_factors: tuple[Word, ...]
    scratch_factors: tuple[Word, ...]


def head(inst: Instance, x: Any, a: Word) -> Word:
    """Maximal simple left-divisor of ``a`` at ``x``: gcd(a, delta(x))."""
    return reversing.gcd(
        inst.complement, a, inst.delta(x), inst.candidate_provider(x), inst.budget
    )


def normal_form(inst: Instance, x: Any, a: Word) -> NormalForm:
    """Greedy normal form of ``a`` at ``x`` (the action of ``a`` must exist)."""
    if inst.act(x, a) is None:
        raise ValueError("normal_form needs a word acting at the object")
    factors: list[Word] = []
    objects = [x]
    rem = tuple(a)
    cur = x
    while rem:
        h = head(inst, cur, rem)
        if not h:
            raise AssertionError("empty head for a nonempty remainder; axiom broken")
        rem = reversing.quotient(inst.complement, h, rem, inst.budget)
        cur = inst.act(cur, h)
        factors.append(h)
        objects.append(cur)
    return NormalForm(source=x, factors=tuple(factors), objects=tuple(objects))


def star(inst: Instance, x: Any, f: Word) -> Word:
    """The co-factor with ``f * star = delta(x)``, for ``f`` simple at ``x``."""
    key = ("star", x, tuple(f))
    got = inst._memo.get(key)
    if got is None:
        got = reversing.quotient(inst.complement, f, inst.delta(x), inst.budget)
        inst._memo[key] = got
    return got


def is_normal_pair(inst: Instance, x: Any, f1: Word, f2: Word) -> bool:
    """Greedy (f1, f2): star(f1) and f2 must be left-coprime."""
    x1 = inst.act(x, f1)
    g = reversing.gcd(
        inst.complement, star(inst, x, f1), f2, inst.candidate_provider(x1), inst.budget
    )
    return not g


def local_check(inst: Instance, nf: NormalForm) -> bool:
    """The domino characterization: every adjacent factor pair is normal."""
    return all(
        is_normal_pair(inst, nf.objects[i], nf.factors[i], nf.factors[i + 1])
        for i in range(len(nf.factors) - 1)
    )


def _two_factor(inst: Instance, x: Any, w: Word) -> tuple[Word, Word]:
    """Normalize a product of two simples: (head, remainder)."""
    h = head(inst, x, w)
    return h, reversing.quotient(inst.complement, h, w, inst.budget)


def left_multiply_nf(inst: Instance, x: Any, g: Word, nf: NormalForm) -> NormalForm:
    """Normal form of ``g`` (simple at ``x``) times the element of ``nf``.

    One left-to-right pass: normalize g against each factor in turn, pushing
    the remainder rightward; a trailing empty remainder is dropped.
    """
    if inst.act(x, g) != nf.source:
        raise ValueError("nf must be based at the target of g")
    factors: list[Word] = []
    objects = [x]
    cur_g = tuple(g)
    cur_x = x
    for f in nf.factors:
        h, cur_g = _two_factor(inst, cur_x, cur_g + f)
        cur_x = inst.act(cur_x, h)
        factors.append(h)
        objects.append(cur_x)
    if cur_g:
        factors.append(cur_g)
        objects.append(inst.act(cur_x, cur_g))
    return NormalForm(source=x, factors=tuple(factors), objects=tuple(objects))


def right_multiply_nf(
    inst: Instance, nf: NormalForm, g: Word
) -> NormalForm | RegularityViolation:
    """Normal form of the element of ``nf`` times ``g`` (simple at the target).

    Right-to-left domino pass, then cross-validated against from-scratch
    normalization; a disagreement is returned as a RegularityViolation, never
    swallowed, since the pass is only guaranteed on regular instances.
    """
    tail: list[Word] = []
    cur_g = tuple(g)
    for i in range(len(nf.factors) - 1, -1, -1):
        cur_g, f_prime = _two_factor(inst, nf.objects[i], nf.factors[i] + cur_g)
        if f_prime:
            tail.insert(0, f_prime)
    factors = ([cur_g] if cur_g else []) + tail
    scratch = normal_form(inst, nf.source, nf.word() + tuple(g))
    if not _factors_agree(inst, tuple(factors), scratch.factors):
        return RegularityViolation(
            source=nf.source,
            nf_factors=nf.factors,
            g=tuple(g),
            domino_factors=tuple(factors),
            scratch_factors=scratch.factors,
        )
    return scratch


def _factors_agree(
    inst: Instance, left: tuple[Word, ...], right: tuple[Word, ...]
) -> bool:
    return len(left) == len(right) and all(
        reversing.equal(inst.complement, a, b, inst.budget)
        for a, b in zip(left, right)
    )


def nf_equal(inst: Instance, a: NormalForm, b: NormalForm) -> bool:
    """Entrywise equality of two normal forms over the same source."""
    return a.source == b.source and _factors_agree(inst, a.factors, b.factors)


def phi_object(inst: Instance, x: Any) -> Any:
    """The functor on objects: act by the local Garside word."""
    return inst.act(x, inst.delta(x))


def phi_op(inst: Instance, x: Any, f: Word) -> Word:
    """The functor on words at ``x``: delta(x) * phi(f) = f * delta(target)."""
    key = ("phi", x, tuple(f))
    got = inst._memo.get(key)
    if got is not None:
        return got
    target = inst.act(x, f)
    if target is None:
        raise ValueError("phi needs a word acting at the object")
    got = reversing.quotient(
        inst.complement, inst.delta(x), tuple(f) + inst.delta(target), inst.budget
    )
    inst._memo[key] = got
    return got


def regularity_pair_check(inst: Instance, x: Any, f1: Word, f2: Word) -> bool:
    """Does the functor preserve normality of the normal pair (f1, f2)?"""
    x1 = inst.act(x, f1)
    img1 = phi_op(inst, x, f1)
    img2 = phi_op(inst, x1, f2)
    return is_normal_pair(inst, phi_object(inst, x), img1, img2)


def gcd_preservation_check(inst: Instance, x: Any, a: Word, b: Word) -> bool:
    """Does the functor at ``x`` carry gcd(a, b) to gcd of the images?

    The image of gcd(a, b) always divides both images, so it is the gcd of
    the images exactly when its two quotients are left-coprime; testing that
    takes one sweep over the atoms enabled at the running object.
    """
    g = reversing.gcd(inst.complement, a, b, inst.candidate_provider(x), inst.budget)
    phi_g = phi_op(inst, x, g)
    quot_a = reversing.quotient(
        inst.complement, phi_g, phi_op(inst, x, a), inst.budget
    )
    quot_b = reversing.quotient(
        inst.complement, phi_g, phi_op(inst, x, b), inst.budget
    )
    y = inst.act(phi_object(inst, x), phi_g)
    for atom in inst.atoms(y):
        if reversing.divides(inst.complement, (atom,), quot_a, inst.budget) and (
            reversing.divides(inst.complement, (atom,), quot_b, inst.budget)
        ):
            return False
    return True


def dual_check(inst: Instance, x: Any, f: Word) -> bool:
    """The functor commutes with the star co-factor on simples."""
    lhs = phi_op(inst, inst.act(x, f), star(inst, x, f))
    rhs = star(inst, phi_object(inst, x), phi_op(inst, x, f))
    return reversing.equal(inst.complement, lhs, rhs, inst.budget)


def lcm_bound_check(inst: Instance, x: Any, simples: tuple[Word, ...]) -> bool:
    """A product of d simples divides the d-fold Garside product along the orbit."""
    word: tuple = ()
    for f in simples:
        word += f
    bound: tuple = ()
    y = x
    for _ in range(len(simples)):
        bound += inst.delta(y)
        y = phi_object(inst, y)
    return reversing.divides(inst.complement, word, bound, inst.budget)

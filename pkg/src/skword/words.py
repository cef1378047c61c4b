"""Freely reduced words over a generating set.

A word is a tuple of nonzero signed integers: letter k stands for the k-th
generator (1-based) and -k for its inverse.  Words are kept reduced (no
adjacent x, -x); reported lengths are reduced lengths, while the synthesis
layer tracks unreduced letter counts separately for bound comparisons.
"""

from __future__ import annotations

from typing import Iterable

from .errors import IndexOutOfRange, ZeroLetter
from .group import GenSet, GroupElement
from .matops import mat_mul

Word = tuple[int, ...]

EMPTY: Word = ()


def word_reduce(letters: Iterable[int]) -> Word:
    """Freely reduce a letter sequence; idempotent."""
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ZeroLetter("letter 0 names no generator")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def word_concat(u: Word, v: Word) -> Word:
    """Reduced concatenation; |uv| <= |u| + |v|."""
    out = list(u)
    for x in v:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def word_invert(w: Word) -> Word:
    return tuple(-x for x in reversed(w))


def comm_word(u: Word, v: Word) -> Word:
    """The commutator word u^-1 v^-1 u v, reduced; length <= 2(|u| + |v|)."""
    return word_concat(word_concat(word_invert(u), word_invert(v)), word_concat(u, v))


def word_evaluate(w: Word, gens: GenSet) -> GroupElement:
    """Ordered product of generators; the empty word evaluates to I."""
    m = len(gens.elements)
    dim = gens.dim
    mod = gens.params.modulus
    step = gens.step_matrices()
    acc = None
    for x in w:
        if not -m <= x <= m or x == 0:
            raise IndexOutOfRange(f"letter {x} outside generating set of size {m}")
        mat = step[x]
        acc = mat if acc is None else mat_mul(acc, mat, dim, mod)
    if acc is None:
        return gens.identity()
    return GroupElement(acc, dim, gens.params)


def format_word(w: Word) -> str:
    return " ".join(str(x) for x in w)


def parse_word(text: str) -> Word:
    return word_reduce(int(tok) for tok in text.split())

"""Tensor products of letters under the signature rule.

A tensor element is a tuple of letter ids of one :class:`Alphabet`, leftmost
factor first.  The factor's ambient crystal (its shape entry) is recoverable
from ``Alphabet.crystal_of``, so the tuple alone is the canonical key.

Convention: each factor contributes ``phi_i`` minus signs followed by
``eps_i`` plus signs; adjacent ``+-`` pairs cancel; ``f_i`` acts on the factor
holding the rightmost surviving minus and ``e_i`` on the leftmost surviving
plus.  This is the reverse of Kashiwara's ordering.
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

from .letters import Alphabet
from .rootdata import Weight

Element = tuple[int, ...]


class ReducedSignature(NamedTuple):
    minus_count: int
    plus_count: int
    f_position: int | None
    e_position: int | None


def signature(A: Alphabet, b: Sequence[int], i: int) -> ReducedSignature:
    # letters never carry both a minus and a plus for the same color
    phi, eps = A.phi[i], A.eps[i]
    plus: list[int] = []
    minus = 0
    last_minus = None
    for pos, a in enumerate(b):
        if phi[a]:
            if plus:
                plus.pop()
            else:
                minus += 1
                last_minus = pos
        elif eps[a]:
            plus.append(pos)
    return ReducedSignature(minus, len(plus), last_minus, plus[0] if plus else None)


def tensor_f(A: Alphabet, b: Element, i: int) -> Element | None:
    pos = signature(A, b, i).f_position
    if pos is None:
        return None
    return b[:pos] + (A.f[i][b[pos]],) + b[pos + 1:]


def tensor_e(A: Alphabet, b: Element, i: int) -> Element | None:
    pos = signature(A, b, i).e_position
    if pos is None:
        return None
    return b[:pos] + (A.e[i][b[pos]],) + b[pos + 1:]


def tensor_phi(A: Alphabet, b: Element, i: int) -> int:
    return signature(A, b, i).minus_count


def tensor_eps(A: Alphabet, b: Element, i: int) -> int:
    return signature(A, b, i).plus_count


def tensor_weight(A: Alphabet, b: Sequence[int]) -> Weight:
    w = [0] * A.rd.size
    for a in b:
        for k, c in enumerate(A.weights[a]):
            w[k] += c
    return tuple(w)


def is_highest_weight(A: Alphabet, b: Element, colors=None) -> bool:
    cs = A.rd.index_set if colors is None else colors
    return all(signature(A, b, i).plus_count == 0 for i in cs)


def shape(A: Alphabet, b: Sequence[int]) -> tuple[int, ...]:
    return tuple(A.crystal_of[a] for a in b)


def element(A: Alphabet, *labels) -> Element:
    """Build an element from letter labels, e.g. ``element(A, "2,-1,-0", "-0,1")``."""
    return tuple(A.letter(x) for x in labels)


def element_label(A: Alphabet, b: Sequence[int]) -> str:
    return " ⊗ ".join(A.label(a) for a in b) if b else "∅"

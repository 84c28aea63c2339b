"""Ranker-based equivalence deciders with witness reporting.

Each decider checks, over ranker families realized on the two words:

  (a) the same rankers are defined on both words,
  (b) rankers agree with shorter rankers on their relative order,
  (c) (alternation variants) rankers agree with equally-deep rankers that
      end in the opposite direction.

Condition (a) is checked over the whole cumulative family first, which
guarantees every ranker appearing in (b) and (c) is defined on both words.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from .errors import AlphabetMismatchError
from .rankers import (
    AnyRanker,
    Direction,
    alternation_blocks,
    _cached_realized,
    _cached_realized_suc,
    render_ranker,
    sort_key,
)
from .words import Word


class FailedCondition(Enum):
    NONE = "none"
    DEFINEDNESS = "definedness"
    ORDER = "order"
    CROSS_DIRECTION = "cross-direction"


@dataclass(frozen=True)
class WitnessEntry:
    ranker: AnyRanker
    pos_u: Optional[int]
    pos_v: Optional[int]

    def to_json_dict(self) -> dict:
        return {"ranker": render_ranker(self.ranker), "posU": self.pos_u, "posV": self.pos_v}


@dataclass(frozen=True)
class EquivReport:
    verdict: bool
    failed_condition: FailedCondition
    witnesses: tuple[WitnessEntry, ...]
    n: int
    m: Optional[int]
    successor: bool

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "signature": "order+successor" if self.successor else "order",
            "verdict": self.verdict,
            "failedCondition": self.failed_condition.value,
            "witnesses": [w.to_json_dict() for w in self.witnesses],
        }


def _structure_check(u: Word, v: Word, n: int, m: Optional[int], successor: bool) -> EquivReport:
    if u.alphabet != v.alphabet:
        raise AlphabetMismatchError(
            f"words use different alphabets: {u.alphabet} vs {v.alphabet}"
        )
    if n < 1:
        raise ValueError("n must be >= 1")
    if m is not None and m < 1:
        raise ValueError("m must be >= 1")
    realize = _cached_realized_suc if successor else _cached_realized
    ru = realize(u, n)
    rv = realize(v, n)

    def family(realized) -> set:
        if m is None:
            return set(realized.positions)
        return {r for r in realized.positions if alternation_blocks(r) <= m}

    fam_u = family(ru)
    fam_v = family(rv)
    if fam_u != fam_v:
        witness = min(fam_u ^ fam_v, key=sort_key)
        entry = WitnessEntry(witness, ru.positions.get(witness), rv.positions.get(witness))
        return EquivReport(False, FailedCondition.DEFINEDNESS, (entry,), n, m, successor)

    common = sorted(fam_u, key=sort_key)
    if not common:
        return EquivReport(True, FailedCondition.NONE, (), n, m, successor)
    lengths = np.array([len(r) for r in common])
    blocks = np.array([alternation_blocks(r) for r in common])
    last_right = np.array([r.last_direction is Direction.RIGHT for r in common])
    pos_u = np.array([ru.positions[r] for r in common])
    pos_v = np.array([rv.positions[r] for r in common])
    du = pos_u[:, None] - pos_u[None, :]
    dv = pos_v[:, None] - pos_v[None, :]
    if successor:
        cmp_u = np.clip(du, -2, 2)
        cmp_v = np.clip(dv, -2, 2)
    else:
        cmp_u = np.sign(du)
        cmp_v = np.sign(dv)
    disagree = cmp_u != cmp_v

    def first_bad(row_mask: np.ndarray, col_mask: np.ndarray) -> Optional[tuple[int, int]]:
        bad = disagree & row_mask[:, None] & col_mask[None, :]
        if not bad.any():
            return None
        flat = int(np.argmax(bad))  # row-major: deterministic enumeration order
        return divmod(flat, len(common))

    # (b): rankers vs strictly shorter (and, in alternation mode, strictly
    # less alternating) rankers
    row_b = np.ones(len(common), dtype=bool)
    col_b = lengths <= n - 1
    if m is not None:
        col_b = col_b & (blocks <= m - 1)
    hit = first_bad(row_b, col_b)
    if hit is not None:
        i, j = hit
        entries = (
            WitnessEntry(common[i], int(pos_u[i]), int(pos_v[i])),
            WitnessEntry(common[j], int(pos_u[j]), int(pos_v[j])),
        )
        return EquivReport(False, FailedCondition.ORDER, entries, n, m, successor)

    # (c): only in alternation mode; equally-alternating shorter rankers
    # ending with the opposite direction
    if m is not None:
        col_c = lengths <= n - 1
        dir_differs = last_right[:, None] != last_right[None, :]
        bad = disagree & col_c[None, :] & dir_differs
        if bad.any():
            flat = int(np.argmax(bad))
            i, j = divmod(flat, len(common))
            entries = (
                WitnessEntry(common[i], int(pos_u[i]), int(pos_v[i])),
                WitnessEntry(common[j], int(pos_u[j]), int(pos_v[j])),
            )
            return EquivReport(False, FailedCondition.CROSS_DIRECTION, entries, n, m, successor)

    return EquivReport(True, FailedCondition.NONE, (), n, m, successor)


def ranker_equiv(u: Word, v: Word, n: int) -> EquivReport:
    """Words agree on all sentences of quantifier depth up to n (order only)."""
    return _structure_check(u, v, n, None, successor=False)


def ranker_equiv_alt(u: Word, v: Word, m: int, n: int) -> EquivReport:
    """Agreement up to depth n with at most m alternating quantifier blocks."""
    return _structure_check(u, v, n, m, successor=False)


def suc_ranker_equiv(u: Word, v: Word, n: int) -> EquivReport:
    """Depth-n agreement over the order+successor signature."""
    return _structure_check(u, v, n, None, successor=True)


def suc_ranker_equiv_alt(u: Word, v: Word, m: int, n: int) -> EquivReport:
    return _structure_check(u, v, n, m, successor=True)


def alphabet_collapse_check(u: Word, v: Word, n: int) -> bool:
    """Probe for the alternation collapse: blocks beyond alphabet-size+1 add nothing.

    Returns the implication "equivalent at (|alphabet|+1, n) implies
    equivalent at n", which is expected to always hold.
    """
    if u.alphabet != v.alphabet:
        raise AlphabetMismatchError(
            f"words use different alphabets: {u.alphabet} vs {v.alphabet}"
        )
    k = len(u.alphabet)
    alt = _structure_check(u, v, n, k + 1, successor=False)
    if not alt.verdict:
        return True
    return ranker_equiv(u, v, n).verdict

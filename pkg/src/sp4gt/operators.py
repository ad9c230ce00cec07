"""Differential operators on minor polynomials.

E[i,j] acts on a minor by substituting the column index j with i (Leibniz
rule over products).  The sp4 generators are

    f[i,j] = E[i,j] - sign(i) sign(j) E[-j,-i],

and the o5 generators are F[i,j] = E[i,j] - E[-j,-i].  With these signs the
map f[i,j] -> operator is a Lie algebra homomorphism on the b-alphabet
(checked in the test-suite on 4x4 matrices).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .minors import (
    A_ALPHABET,
    B_ALPHABET,
    SO5_INDICES,
    SP4_INDICES,
    MinorPoly,
    MinorSymbol,
)

KINDS = ("E_pseudo", "f_sp4", "F_so5", "L_left")


def sign(i: int) -> int:
    return 1 if i > 0 else -1


@dataclass(frozen=True)
class OperatorSpec:
    kind: str
    i: int
    j: int
    primed_output: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown operator kind {self.kind!r}")
        allowed = SO5_INDICES if self.kind in ("F_so5", "L_left") else SP4_INDICES
        if self.i not in allowed or self.j not in allowed:
            raise ValueError(f"indices ({self.i},{self.j}) invalid for {self.kind}")

    @property
    def alphabet(self):
        return A_ALPHABET if self.kind in ("F_so5", "L_left") else B_ALPHABET

    @property
    def name(self) -> str:
        letter = {"E_pseudo": "E", "f_sp4": "f", "F_so5": "F", "L_left": "L"}[self.kind]
        return f"{letter}[{self.i},{self.j}]"

    def __str__(self):
        return self.name


def E(i, j, primed_output=False):
    return OperatorSpec("E_pseudo", i, j, primed_output)


def f(i, j):
    return OperatorSpec("f_sp4", i, j)


def F(i, j):
    return OperatorSpec("F_so5", i, j)


def parse_operator(text: str) -> OperatorSpec:
    text = text.strip().replace(" ", "")
    letter = text[0]
    kind = {"E": "E_pseudo", "f": "f_sp4", "F": "F_so5", "L": "L_left"}.get(letter)
    if kind is None or text[1] != "[" or text[-1] != "]":
        raise ValueError(f"cannot parse operator {text!r}")
    i, j = (int(x) for x in text[2:-1].split(","))
    return OperatorSpec(kind, i, j)


def _substitute(sym: MinorSymbol, i: int, j: int, alph, primed_output: bool):
    """Image of one symbol under E[i,j] as a list of (target index, coeff)."""
    letter_kinds = ("A1", "A2") if alph is A_ALPHABET else ("B1", "B2")
    if sym.kind == "B1P":
        if sym.idx[0] != j:
            return []
        if i == j:
            return [(alph.index[sym], 1)]
        return [(alph.index[MinorSymbol("B1", (i,))], 1)]
    if sym.kind in ("A1", "B1"):
        if sym.idx[0] != j:
            return []
        if primed_output and i in (1, 2) and i != j:
            return [(alph.index[MinorSymbol("B1P", (i,), 2)], 1)]
        return [(alph.index[MinorSymbol(letter_kinds[0], (i,))], 1)]
    k, l = sym.idx
    if j not in (k, l):
        return []
    new = (i, l) if k == j else (k, i)
    if new[0] == new[1]:
        return []
    if new[0] < new[1]:
        return [(alph.index[MinorSymbol(letter_kinds[1], new)], 1)]
    return [(alph.index[MinorSymbol(letter_kinds[1], (new[1], new[0]))], -1)]


def _e_table(i, j, alph, primed_output=False):
    return [_substitute(s, i, j, alph, primed_output) for s in alph.symbols]


def _combine(t1, t2, scale):
    out = []
    for a_, b_ in zip(t1, t2):
        acc = {}
        for tgt, c in a_:
            acc[tgt] = acc.get(tgt, 0) + c
        for tgt, c in b_:
            acc[tgt] = acc.get(tgt, 0) + scale * c
        out.append([(t, c) for t, c in sorted(acc.items()) if c])
    return out


@lru_cache(maxsize=None)
def derivation_table(op: OperatorSpec):
    alph = op.alphabet
    i, j = op.i, op.j
    if op.kind == "E_pseudo":
        return tuple(tuple(x) for x in _e_table(i, j, alph, op.primed_output))
    if op.kind == "f_sp4":
        t = _combine(_e_table(i, j, alph), _e_table(-j, -i, alph), -sign(i) * sign(j))
        return tuple(tuple(x) for x in t)
    if op.kind == "F_so5":
        t = _combine(_e_table(i, j, alph), _e_table(-j, -i, alph), -1)
        return tuple(tuple(x) for x in t)
    # left shifts: only the diagonal ones keep the a-alphabet closed
    if i != j or i not in (-2, -1):
        raise ValueError(
            f"L[{i},{j}] changes row indices and leaves the a-alphabet; "
            "only L[-2,-2] and L[-1,-1] are supported"
        )
    table = []
    for k, s in enumerate(alph.symbols):
        rows = (-2,) if s.kind == "A1" else (-2, -1)
        table.append(((k, 1),) if i in rows else ())
    return tuple(table)


def apply_operator(op: OperatorSpec, p: MinorPoly) -> MinorPoly:
    """Apply op to p by the Leibniz rule; the result is not normal-formed."""
    if p.alphabet is not op.alphabet:
        raise ValueError(f"{op} acts on the {op.alphabet.name}-alphabet")
    return MinorPoly(p.alphabet, kernels.apply_derivation(p.terms, derivation_table(op)), _trusted=True)


def apply_power(op: OperatorSpec, p: MinorPoly, n: int) -> MinorPoly:
    for _ in range(n):
        if p.is_zero():
            break
        p = apply_operator(op, p)
    return p


# 4x4 matrices of the sp4 generators in the defining representation

def _pos(i):
    return SP4_INDICES.index(i)


def unit_matrix(i, j):
    m = [[0] * 4 for _ in range(4)]
    m[_pos(i)][_pos(j)] = 1
    return m


def f_matrix(i, j):
    m = [[0] * 4 for _ in range(4)]
    m[_pos(i)][_pos(j)] += 1
    m[_pos(-j)][_pos(-i)] -= sign(i) * sign(j)
    return m


# one representative for each independent f[i,j]
SP4_BASIS = (
    (-2, -2), (-1, -1),
    (-2, -1), (-1, -2),
    (-2, 1), (1, -2),
    (-2, 2), (2, -2),
    (-1, 1), (1, -1),
)

"""Highest weights, h-highest labels and Gelfand-Tsetlin diagrams.

A diagram (sigma; m2, m1; k2, k1; s2; s1) indexes one basis vector of the
irreducible representation with highest weight [m2, m1].  Its first six
entries form an h-highest label; s1 runs from s2 down to -s2 in unit steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import HalfInt


def _h(x) -> HalfInt:
    return x if isinstance(x, HalfInt) else HalfInt(x)


def _same_class(values) -> bool:
    parities = {v.twice % 2 for v in values}
    return len(parities) <= 1


@dataclass(frozen=True)
class HighestWeight:
    m2: HalfInt
    m1: HalfInt

    def __post_init__(self):
        object.__setattr__(self, "m2", _h(self.m2))
        object.__setattr__(self, "m1", _h(self.m1))
        if not _same_class([self.m2, self.m1]):
            raise ValueError("weight entries must both be integers or both half-integers")
        if not (self.m2 >= self.m1 >= 0):
            raise ValueError("weight must satisfy m2 >= m1 >= 0")

    @classmethod
    def parse(cls, text: str) -> "HighestWeight":
        parts = [p for p in text.replace("[", "").replace("]", "").split(",")]
        if len(parts) != 2:
            raise ValueError(f"cannot parse weight {text!r}")
        return cls(HalfInt(parts[0]), HalfInt(parts[1]))

    @property
    def is_integer(self) -> bool:
        return self.m2.is_integer

    def sp4_weight(self):
        """The sp4 weight [x, y] = [m2 + m1, m2 - m1]."""
        return ((self.m2 + self.m1).to_int(), (self.m2 - self.m1).to_int())

    def __str__(self):
        return f"[{self.m2},{self.m1}]"

    def to_json(self):
        return [str(self.m2), str(self.m1)]

    def key(self):
        return (self.m2.twice, self.m1.twice)


def weights_up_to(max_m2, include_half=True, include_integer=True):
    """All highest weights with m2 <= max_m2, sorted by (m2, m1)."""
    top = _h(max_m2).twice
    out = []
    for t2 in range(0, top + 1):
        if t2 % 2 == 0 and not include_integer:
            continue
        if t2 % 2 == 1 and not include_half:
            continue
        for t1 in range(t2 % 2, t2 + 1, 2):
            out.append(HighestWeight(HalfInt(twice=t2), HalfInt(twice=t1)))
    return out


@dataclass(frozen=True)
class HWLabel:
    sigma: int
    m2: HalfInt
    m1: HalfInt
    k2: HalfInt
    k1: HalfInt
    s2: HalfInt

    def __post_init__(self):
        for name in ("m2", "m1", "k2", "k1", "s2"):
            object.__setattr__(self, name, _h(getattr(self, name)))

    @property
    def weight(self) -> HighestWeight:
        return HighestWeight(self.m2, self.m1)

    def is_valid(self) -> bool:
        vals = [self.m2, self.m1, self.k2, self.k1, self.s2]
        if self.sigma not in (0, 1):
            return False
        if not _same_class(vals):
            return False
        if not (self.m2 >= self.k2 >= self.m1 >= self.k1 >= 0):
            return False
        if not (self.k2 >= self.s2 >= self.k1):
            return False
        if self.k1 == 0 and self.sigma != 0:
            return False
        return True

    def validate(self):
        if not self.is_valid():
            raise ValueError(f"invalid label {self}")
        return self

    def second_component(self) -> Fraction:
        """-2(k2+k1) + (m2+m1) + s2 + sigma, the printed weight rule."""
        return (
            -2 * (self.k2 + self.k1).to_fraction()
            + (self.m2 + self.m1).to_fraction()
            + self.s2.to_fraction()
            + self.sigma
        )

    def to_json(self):
        return {
            "sigma": self.sigma,
            "m2": str(self.m2),
            "m1": str(self.m1),
            "k2": str(self.k2),
            "k1": str(self.k1),
            "s2": str(self.s2),
        }

    @classmethod
    def from_json(cls, d):
        return cls(int(d["sigma"]), HalfInt(d["m2"]), HalfInt(d["m1"]), HalfInt(d["k2"]), HalfInt(d["k1"]), HalfInt(d["s2"]))

    def __str__(self):
        return f"({self.sigma}; {self.m2},{self.m1}; {self.k2},{self.k1}; {self.s2})"


@dataclass(frozen=True)
class GTDiagram:
    sigma: int
    m2: HalfInt
    m1: HalfInt
    k2: HalfInt
    k1: HalfInt
    s2: HalfInt
    s1: HalfInt

    def __post_init__(self):
        for name in ("m2", "m1", "k2", "k1", "s2", "s1"):
            object.__setattr__(self, name, _h(getattr(self, name)))

    @property
    def label(self) -> HWLabel:
        return HWLabel(self.sigma, self.m2, self.m1, self.k2, self.k1, self.s2)

    @property
    def weight(self) -> HighestWeight:
        return HighestWeight(self.m2, self.m1)

    @property
    def depth(self) -> int:
        """Lowering depth p = s2 - s1."""
        return (self.s2 - self.s1).to_int()

    def is_valid(self) -> bool:
        if not self.label.is_valid():
            return False
        if not (self.s2 >= self.s1 >= -self.s2):
            return False
        return (self.s2 - self.s1).is_integer

    def sort_key(self):
        return (-self.k2.twice, -self.k1.twice, self.sigma, -self.s2.twice, -self.s1.twice)

    def replace(self, **kw) -> "GTDiagram":
        d = dict(sigma=self.sigma, m2=self.m2, m1=self.m1, k2=self.k2, k1=self.k1, s2=self.s2, s1=self.s1)
        d.update({k: (v if k == "sigma" else _h(v)) for k, v in kw.items()})
        return GTDiagram(**d)

    def to_json(self):
        d = self.label.to_json()
        d["s1"] = str(self.s1)
        return d

    @classmethod
    def from_json(cls, d):
        return cls(int(d["sigma"]), HalfInt(d["m2"]), HalfInt(d["m1"]), HalfInt(d["k2"]), HalfInt(d["k1"]), HalfInt(d["s2"]), HalfInt(d["s1"]))

    @classmethod
    def parse(cls, text: str) -> "GTDiagram":
        """Parse 'sigma;m2,m1;k2,k1;s2,s1' (separators , or ;)."""
        parts = [p for p in text.replace(";", ",").replace(" ", "").split(",") if p]
        if len(parts) != 7:
            raise ValueError(f"cannot parse diagram {text!r}")
        return cls(int(parts[0]), *(HalfInt(p) for p in parts[1:]))

    def __str__(self):
        return f"({self.sigma}; {self.m2},{self.m1}; {self.k2},{self.k1}; {self.s2},{self.s1})"


def validate_diagram(d: GTDiagram) -> bool:
    return d.is_valid()


def _halfint_range(lo: HalfInt, hi: HalfInt):
    """lo, lo+1, ..., up to hi (same parity as lo)."""
    t = lo.twice
    while t <= hi.twice:
        yield HalfInt(twice=t)
        t += 2


def enumerate_labels(w: HighestWeight, s2=None):
    """All valid h-highest labels of a weight, in canonical order."""
    out = []
    zero = HalfInt(twice=w.m2.twice % 2)
    for k2 in _halfint_range(w.m1, w.m2):
        for k1 in _halfint_range(zero, w.m1):
            for sigma in (0, 1):
                for s in _halfint_range(k1, k2):
                    lab = HWLabel(sigma, w.m2, w.m1, k2, k1, s)
                    if lab.is_valid():
                        out.append(lab)
    out.sort(key=lambda l: (-l.k2.twice, -l.k1.twice, l.sigma, -l.s2.twice))
    if s2 is not None:
        out = [l for l in out if l.s2 == _h(s2)]
    return out


def enumerate_diagrams(w: HighestWeight):
    out = []
    for lab in enumerate_labels(w):
        for s1 in _halfint_range(-lab.s2, lab.s2):
            out.append(GTDiagram(lab.sigma, lab.m2, lab.m1, lab.k2, lab.k1, lab.s2, s1))
    out.sort(key=GTDiagram.sort_key)
    return out


def weyl_dim(w: HighestWeight) -> int:
    m2, m1 = w.m2.to_fraction(), w.m1.to_fraction()
    val = (m2 - m1 + 1) * (m2 + m1 + 2) * (2 * m2 + 3) * (2 * m1 + 1) / 6
    if val.denominator != 1:
        raise ArithmeticError("Weyl dimension is not an integer")
    return int(val)

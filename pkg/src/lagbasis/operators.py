# module operators
"""Catalog of radial operators acting on the Laguerre radial functions.

Operators are either one of the named catalog entries (overlap, r, r², 1/r,
1/r², r·d/dr, d/dr, d²/dr²) or a free-form "word": an ordered product of
factors r^a (integer a, possibly negative) and d/dr.  Words are what the
quadrature oracle integrates; the named entries additionally have closed-form
matrix elements.
"""

from __future__ import annotations

from dataclasses import dataclass

# A factor is ("r", a) for multiplication by r^a or ("d", 1) for d/dr.
Factor = tuple[str, int]

_TAG_WORDS: dict[str, tuple[Factor, ...]] = {
    "overlap": (),
    "r": (("r", 1),),
    "r2": (("r", 2),),
    "rinv": (("r", -1),),
    "rinv2": (("r", -2),),
    "rddr": (("r", 1), ("d", 1)),
    "ddr": (("d", 1),),
    "d2dr2": (("d", 1), ("d", 1)),
}


@dataclass(frozen=True)
class RadialOperator:
    """A radial operator, as a named tag and/or an explicit factor word.

    The word lists factors in operator order: ``word[0]`` is applied last.
    ``scale_exponent`` is the net power of length carried by the operator;
    matrix elements at radial scale b equal b**scale_exponent times their
    b = 1 values.
    """

    tag: str | None = None
    word: tuple[Factor, ...] = ()

    @classmethod
    def from_tag(cls, tag: str) -> "RadialOperator":
        if tag not in _TAG_WORDS:
            raise ValueError(f"unknown radial operator tag {tag!r}")
        return cls(tag=tag, word=_TAG_WORDS[tag])

    @classmethod
    def from_word(cls, factors: "list[Factor] | tuple[Factor, ...]") -> "RadialOperator":
        factors = tuple(factors)
        for f in factors:
            if not (len(f) == 2 and f[0] in ("r", "d")):
                raise ValueError(f"malformed operator factor {f!r}")
            if f[0] == "d" and f[1] != 1:
                raise ValueError("derivative factors must be ('d', 1)")
        return cls(tag=None, word=factors)

    @property
    def scale_exponent(self) -> int:
        s = 0
        for kind, a in self.word:
            s += a if kind == "r" else -1
        return s

    @property
    def name(self) -> str:
        if self.tag is not None:
            return self.tag
        parts = []
        for kind, a in self.word:
            parts.append(f"r^{a}" if kind == "r" else "d/dr")
        return " ".join(parts) if parts else "identity"


def as_operator(op: "RadialOperator | str") -> RadialOperator:
    """Coerce a tag name or operator instance to a RadialOperator."""
    if isinstance(op, RadialOperator):
        return op
    return RadialOperator.from_tag(op)


OVERLAP = RadialOperator.from_tag("overlap")
R = RadialOperator.from_tag("r")
R2 = RadialOperator.from_tag("r2")
RINV = RadialOperator.from_tag("rinv")
RINV2 = RadialOperator.from_tag("rinv2")
RDDR = RadialOperator.from_tag("rddr")
DDR = RadialOperator.from_tag("ddr")
D2DR2 = RadialOperator.from_tag("d2dr2")

ALL_TAGS = tuple(_TAG_WORDS)

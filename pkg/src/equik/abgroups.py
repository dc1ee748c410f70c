"""Finitely generated abelian groups in invariant-factor form.

A group is stored as (free_rank, torsion) where torsion is the chain
d1 | d2 | ... with every d >= 2.  Presentations are row-relation
matrices over the generators; normalize() sends them through the Smith
normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InputError
from .intmat import IntMatrix, snf


@dataclass(frozen=True)
class FgAbelianGroup:
    free_rank: int
    torsion: tuple

    def __post_init__(self):
        if self.free_rank < 0:
            raise InputError("free rank must be nonnegative")
        tor = tuple(int(d) for d in self.torsion)
        for d in tor:
            if d < 2:
                raise InputError("torsion invariants must be >= 2")
        for a, b in zip(tor, tor[1:]):
            if b % a:
                raise InputError(f"torsion chain broken: {a} does not divide {b}")
        object.__setattr__(self, "torsion", tor)

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def render(self) -> str:
        """Canonical display form, e.g. 'Z^2 ⊕ Z_2 ⊕ Z_4'."""
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z_{d}" for d in self.torsion)
        if not parts:
            return "0"
        return " ⊕ ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "free_rank": str(self.free_rank),
            "torsion": [str(d) for d in self.torsion],
        }

    @classmethod
    def from_json_dict(cls, obj) -> "FgAbelianGroup":
        if not isinstance(obj, dict) or "free_rank" not in obj or "torsion" not in obj:
            raise InputError("group object needs free_rank and torsion fields")
        free = int(obj["free_rank"])
        torsion = tuple(int(d) for d in obj["torsion"])
        return cls(free, torsion)


TRIVIAL_GROUP = FgAbelianGroup(0, ())


@dataclass(frozen=True)
class Presentation:
    """generators free generators subject to the rows of relations."""

    generators: int
    relations: IntMatrix

    def __post_init__(self):
        if self.generators < 0:
            raise InputError("generator count must be nonnegative")
        if self.relations.cols != self.generators:
            raise InputError(
                f"relations have {self.relations.cols} columns for "
                f"{self.generators} generators"
            )


def normalize(p: Presentation) -> FgAbelianGroup:
    """Canonical form of the cokernel of the relation matrix."""
    factors = snf(p.relations).invariant_factors()
    free_rank = p.generators - len(factors)
    torsion = tuple(d for d in factors if d > 1)
    return FgAbelianGroup(free_rank, torsion)


def _chain(torsion_multiset) -> tuple:
    ds = [int(d) for d in torsion_multiset if int(d) > 1]
    if not ds:
        return ()
    group = normalize(Presentation(len(ds), IntMatrix.diagonal(ds)))
    return group.torsion


def direct_sum(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    return FgAbelianGroup(a.free_rank + b.free_rank, _chain(a.torsion + b.torsion))


def tensor(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    """Tensor product over Z, computed from the classification.

    Z^a x Z^b contributes Z^(ab); Z_d x Z^b contributes b copies of Z_d;
    Z_d x Z_e collapses to Z_gcd(d, e).
    """
    tors = []
    tors.extend(e for e in b.torsion for _ in range(a.free_rank))
    tors.extend(d for d in a.torsion for _ in range(b.free_rank))
    tors.extend(gcd(d, e) for d in a.torsion for e in b.torsion)
    return FgAbelianGroup(a.free_rank * b.free_rank, _chain(tors))


def tor(a: FgAbelianGroup, b: FgAbelianGroup) -> FgAbelianGroup:
    """Tor_1 over Z: free parts die, Tor(Z_d, Z_e) = Z_gcd(d, e)."""
    tors = [gcd(d, e) for d in a.torsion for e in b.torsion]
    return FgAbelianGroup(0, _chain(tors))


def parse_group_literal(text: str) -> FgAbelianGroup:
    """Parse '0', 'Z', 'Z^2', 'Z_4', or ⊕/+ -joined combinations."""
    text = text.strip()
    if text == "0":
        return TRIVIAL_GROUP
    free = 0
    tors = []
    for raw in text.replace("⊕", "+").split("+"):
        part = raw.strip()
        if not part:
            raise InputError(f"empty summand in group literal {text!r}")
        if part == "Z":
            free += 1
        elif part.startswith("Z^"):
            try:
                free += int(part[2:])
            except ValueError:
                raise InputError(f"bad free part {part!r}") from None
        elif part.startswith("Z_"):
            try:
                tors.append(int(part[2:].strip("{}")))
            except ValueError:
                raise InputError(f"bad torsion part {part!r}") from None
        else:
            raise InputError(f"cannot parse group summand {part!r}")
    return FgAbelianGroup(free, _chain(tors))

"""Joins of finite sets: complexes, homology, and K-theory rank formulas.

The k-fold join of an N-point set is the complete k-partite simplicial
complex on k blocks of N vertices.  Its K-theory ranks follow a closed
one-step recursion; the simplicial homology computed here by Smith
reduction serves as an independent oracle for those numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .abgroups import FgAbelianGroup, Presentation, TRIVIAL_GROUP, normalize
from .errors import CapExceededError, InputError
from .intmat import IntMatrix, cokernel_invariants, hermite_rows, hermite_solve, kernel_basis

COMPLEX_CAP = 100_000


def join_step_formula(l: int, r: int, n: int):
    """One join step: (K0, K1) ranks (l, r) joined with an n-point set.

    Returns (r*(n-1) + 1, (l-1)*(n-1)).  The K0 rank must be at least 1;
    a space with no unit class has no join step here.
    """
    if l < 1:
        raise InputError("join step needs K0 rank >= 1")
    if r < 0:
        raise InputError("join step needs K1 rank >= 0")
    if n < 1:
        raise InputError("join step needs a nonempty finite set")
    return r * (n - 1) + 1, (l - 1) * (n - 1)


def join_k_theory_formula(n: int, k: int):
    """(K0, K1) ranks of the k-fold self-join of an n-point set.

    Closed form: for odd k the ranks are ((n-1)^k + 1, 0); for even k
    they are (1, (n-1)^k).  Equivalently, iterate join_step_formula
    starting from (n, 0).
    """
    if n < 1:
        raise InputError("set size must be >= 1")
    if k < 1:
        raise InputError("join copies must be >= 1")
    step = (n - 1) ** k
    if k % 2:
        return step + 1, 0
    return 1, step


@dataclass(frozen=True)
class KTheoryRanks:
    k0_rank: int
    k1_rank: int


@dataclass(frozen=True)
class JoinComplex:
    """Complete k-partite complex: parts blocks of part_size vertices."""

    parts: int
    part_size: int

    def __post_init__(self):
        if self.parts < 1 or self.part_size < 1:
            raise InputError("join complex needs parts >= 1 and part_size >= 1")
        if self.part_size ** self.parts > COMPLEX_CAP:
            raise CapExceededError(
                f"cap exceeded: {self.part_size}^{self.parts} top cells is over "
                f"{COMPLEX_CAP}"
            )

    @property
    def vertex_count(self) -> int:
        return self.parts * self.part_size

    @property
    def dimension(self) -> int:
        return self.parts - 1

    def faces(self, d: int) -> list:
        """All d-faces as sorted vertex tuples, in lexicographic order.

        Vertex (block p, point v) has id p * part_size + v; a face picks
        at most one vertex per block.
        """
        if d < 0 or d > self.dimension:
            return []
        out = []
        for blocks in combinations(range(self.parts), d + 1):
            for pts in product(range(self.part_size), repeat=d + 1):
                out.append(
                    tuple(blocks[i] * self.part_size + pts[i] for i in range(d + 1))
                )
        out.sort()
        return out

    def face_counts(self) -> tuple:
        from math import comb

        return tuple(
            comb(self.parts, d + 1) * self.part_size ** (d + 1)
            for d in range(self.parts)
        )


def build_join_complex(n: int, k: int) -> JoinComplex:
    if n < 1 or k < 1:
        raise InputError("join complex needs n >= 1 and k >= 1")
    return JoinComplex(parts=k, part_size=n)


@dataclass(frozen=True)
class ChainComplex:
    """Boundary matrices of a complex, rows = d-faces, cols = (d-1)-faces.

    boundaries[d-1] is the degree-d boundary; chains are row vectors and
    the boundary acts on the right, so del(del(x)) = x . B_d . B_(d-1).
    """

    face_counts: tuple
    boundaries: tuple


def boundary_matrices(jc: JoinComplex) -> ChainComplex:
    counts = jc.face_counts()
    faces_by_dim = [jc.faces(d) for d in range(jc.parts)]
    index = [
        {face: i for i, face in enumerate(faces_by_dim[d])} for d in range(jc.parts)
    ]
    mats = []
    for d in range(1, jc.parts):
        rows = len(faces_by_dim[d])
        cols = len(faces_by_dim[d - 1])
        ent = [0] * (rows * cols)
        for ri, face in enumerate(faces_by_dim[d]):
            base = ri * cols
            sign = 1
            for drop in range(d + 1):
                sub = face[:drop] + face[drop + 1 :]
                ent[base + index[d - 1][sub]] = sign
                sign = -sign
        mats.append(IntMatrix(rows, cols, tuple(ent)))
    return ChainComplex(counts, tuple(mats))


@dataclass(frozen=True)
class BettiTable:
    """Reduced homology groups by degree, exact including torsion."""

    groups: tuple

    def group_at(self, d: int) -> FgAbelianGroup:
        if 0 <= d < len(self.groups):
            return self.groups[d]
        return TRIVIAL_GROUP

    def ranks(self) -> tuple:
        return tuple(g.free_rank for g in self.groups)

    def has_torsion(self) -> bool:
        return any(g.torsion for g in self.groups)


def reduced_homology(jc: JoinComplex) -> BettiTable:
    """Reduced simplicial homology via kernel/image Smith reduction."""
    chain = boundary_matrices(jc)
    n_vert = chain.face_counts[0]
    aug = IntMatrix(n_vert, 1, (1,) * n_vert)
    groups = []
    top = jc.parts - 1
    for d in range(top + 1):
        bnd = aug if d == 0 else chain.boundaries[d - 1]
        ker = kernel_basis(bnd)
        ker_rows = [ker.row(i) for i in range(ker.rows)]
        if d < top:
            img_rows = hermite_rows(
                [chain.boundaries[d].row(i) for i in range(chain.boundaries[d].rows)],
                chain.face_counts[d],
            )
        else:
            img_rows = ()
        rel = []
        for row in img_rows:
            sol = hermite_solve(ker_rows, row)
            # boundaries of boundaries vanish, so the image sits in the kernel
            assert sol is not None, "image escaped the kernel"
            rel.append(sol)
        relmat = (
            IntMatrix.from_rows(rel, cols=len(ker_rows))
            if rel
            else IntMatrix.zeros(0, len(ker_rows))
        )
        groups.append(normalize(Presentation(len(ker_rows), relmat)))
    return BettiTable(tuple(groups))


@dataclass(frozen=True)
class MvDeltaReport:
    delta0: IntMatrix
    kernel_rank: int
    cokernel: FgAbelianGroup


def mayer_vietoris_delta(l: int, n: int) -> MvDeltaReport:
    """The comparison map Z^l + Z^n -> Z^(l*n), (a, b) -> a.(1..1) - (1;..;1).b.

    Its kernel is the rank-1 diagonal (all coordinates equal) and its
    cokernel is free of rank l*n - l - n + 1.
    """
    if l < 1 or n < 1:
        raise InputError("comparison map needs l >= 1 and n >= 1")
    rows = l + n
    cols = l * n
    ent = [0] * (rows * cols)
    for i in range(l):
        for j in range(n):
            ent[i * cols + (i * n + j)] = 1
    for j in range(n):
        for i in range(l):
            ent[(l + j) * cols + (i * n + j)] = -1
    delta = IntMatrix(rows, cols, tuple(ent))
    ker = kernel_basis(delta)
    free, torsion = cokernel_invariants(delta)
    return MvDeltaReport(delta, ker.rows, FgAbelianGroup(free, torsion))


@dataclass(frozen=True)
class OracleCheck:
    """Formula ranks against the homology of the actual complex."""

    set_size: int
    copies: int
    ranks: KTheoryRanks
    betti: BettiTable
    even_sum: int
    odd_sum: int
    torsion_free: bool
    consistent: bool


def oracle_consistency(n: int, k: int) -> OracleCheck:
    """Check k0 = 1 + sum of even Betti numbers, k1 = sum of odd ones.

    Torsion anywhere in the homology would break the comparison and is
    reported as an inconsistency.
    """
    k0, k1 = join_k_theory_formula(n, k)
    betti = reduced_homology(build_join_complex(n, k))
    even = sum(g.free_rank for d, g in enumerate(betti.groups) if d % 2 == 0)
    odd = sum(g.free_rank for d, g in enumerate(betti.groups) if d % 2 == 1)
    torsion_free = not betti.has_torsion()
    consistent = torsion_free and k0 == 1 + even and k1 == odd
    return OracleCheck(
        n, k, KTheoryRanks(k0, k1), betti, even, odd, torsion_free, consistent
    )

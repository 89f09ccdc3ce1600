"""Named fusion partitions and the interval classifier for primitive fusions.

Four reference partitions of the index cube are built directly:

  discrete        every vector its own cell (the tensor power itself)
  cameron         orbits of coordinate permutations (the symmetrized power)
  trivial_block   cells by the exact set of coordinate blocks hit, which
                  renders the tensor power of a trivial scheme on block
                  super-coordinates
  hamming_block   cells by the number of blocks hit, which renders the
                  Hamming scheme on block super-coordinates

A valid primitive fusion is then classified by interval membership:
"cameron" when every cell sits inside a single coordinate-permutation
orbit, "hamming" when for some block structure the trivial-block
partition refines it and it refines the hamming-block partition.  The
two kinds can overlap (for k = 1 the symmetrized power with singleton
blocks is the Hamming scheme); all hamming witnesses are reported and a
fusion in both intervals is labeled cameron with the witnesses attached.
Block structures are searched explicitly instead of canonicalizing
coordinates: at desk scale there are few of them and the winning blocks
are useful output.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import Vec, cube, support, weight, zero_vector
from .fusion import (
    FusionPartition,
    domination_preorder,
    is_primitive,
    is_valid_fusion,
    max_weight_subset,
    down_closure,
    set_weight,
)


@dataclass(frozen=True)
class BlockStructure:
    """Partition of the coordinate set {1..d} into equal blocks of size e."""

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]]) -> "BlockStructure":
        canon = tuple(sorted(tuple(sorted(b)) for b in blocks))
        bs = cls(canon)
        bs._validate()
        return bs

    def _validate(self) -> None:
        if not self.blocks:
            raise ValueError("no blocks")
        sizes = {len(b) for b in self.blocks}
        if len(sizes) != 1:
            raise ValueError(f"blocks of unequal sizes: {self.blocks}")
        flat = [i for b in self.blocks for i in b]
        if sorted(flat) != list(range(1, len(flat) + 1)):
            raise ValueError(f"blocks are not a partition of 1..{len(flat)}: {self.blocks}")

    @property
    def e(self) -> int:
        return len(self.blocks[0])

    @property
    def d(self) -> int:
        return self.e * len(self.blocks)

    def hit_blocks(self, a: Vec) -> frozenset[int]:
        """Indices (into blocks) of the blocks where a has a positive entry."""
        sup = support(a)
        return frozenset(i for i, b in enumerate(self.blocks) if sup & set(b))

    def to_dict(self) -> dict:
        return {"e": self.e, "blocks": [list(b) for b in self.blocks]}


def singleton_blocks(d: int) -> BlockStructure:
    return BlockStructure.from_blocks([[i] for i in range(1, d + 1)])


def equal_block_partitions(d: int, e: int) -> Iterator[BlockStructure]:
    """All partitions of {1..d} into d/e blocks of size e, canonically ordered."""
    if d % e:
        raise ValueError(f"{e} does not divide {d}")

    def rec(remaining: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if not remaining:
            yield ()
            return
        first, rest = remaining[0], remaining[1:]
        for tail in itertools.combinations(rest, e - 1):
            block = (first,) + tail
            left = tuple(i for i in rest if i not in tail)
            for more in rec(left):
                yield (block,) + more

    for blocks in rec(tuple(range(1, d + 1))):
        yield BlockStructure(blocks)


# ---------------------------------------------------------------------------
# named partitions


def discrete_partition(k: int, d: int) -> FusionPartition:
    """Every vector a singleton cell: J(m,k)^d itself."""
    return FusionPartition.from_cells(k, d, [[v] for v in cube(k, d)])


def cameron_partition(k: int, d: int) -> FusionPartition:
    """Orbits of the coordinate-permuting symmetric group on [0,k]^d."""
    orbits: dict[tuple[int, ...], list[Vec]] = {}
    for v in cube(k, d):
        orbits.setdefault(tuple(sorted(v)), []).append(v)
    return FusionPartition.from_cells(k, d, orbits.values())


def _grouped(k: int, d: int, key) -> FusionPartition:
    groups: dict[object, list[Vec]] = {}
    for v in cube(k, d):
        groups.setdefault(key(v), []).append(v)
    return FusionPartition.from_cells(k, d, groups.values())


def trivial_block_partition(k: int, d: int, blocks: BlockStructure) -> FusionPartition:
    """Cells by the exact set of blocks with a nonzero restriction."""
    if blocks.d != d:
        raise ValueError(f"block structure covers {blocks.d} coordinates, need {d}")
    return _grouped(k, d, blocks.hit_blocks)


def hamming_block_partition(k: int, d: int, blocks: BlockStructure) -> FusionPartition:
    """Cells by the count of blocks with a nonzero restriction."""
    if blocks.d != d:
        raise ValueError(f"block structure covers {blocks.d} coordinates, need {d}")
    return _grouped(k, d, lambda v: len(blocks.hit_blocks(v)))


def weight_partition(k: int, d: int) -> FusionPartition:
    """Cells by total weight; equals hamming_block with singleton blocks."""
    return _grouped(k, d, weight)


# ---------------------------------------------------------------------------
# classification


def refines(finer: FusionPartition, coarser: FusionPartition) -> bool:
    """Every cell of finer lies inside one cell of coarser."""
    if (finer.k, finer.d) != (coarser.k, coarser.d):
        raise ValueError("partitions live on different cubes")
    return all(
        len({coarser.cell_of(v) for v in cell}) == 1 for cell in finer.cells
    )


def cameron_refinement_holds(part: FusionPartition) -> bool:
    """Whether every cell sits inside a single coordinate-permutation orbit."""
    return all(len({tuple(sorted(v)) for v in cell}) == 1 for cell in part.cells)


def hamming_witnesses(part: FusionPartition) -> tuple[BlockStructure, ...]:
    """Block structures placing the partition between the trivial-block
    power and the hamming-block scheme."""
    d = part.d
    found = []
    for e in range(1, d + 1):
        if d % e:
            continue
        for bs in equal_block_partitions(d, e):
            trivial_ok = all(
                len({part.cell_of(v) for v in cell}) == 1
                for cell in trivial_block_partition(part.k, d, bs).cells
            )
            if not trivial_ok:
                continue
            if all(
                len({len(bs.hit_blocks(v)) for v in cell}) == 1 for cell in part.cells
            ):
                found.append(bs)
    return tuple(found)


@dataclass(frozen=True)
class Classification:
    cameron: bool
    hamming: tuple[BlockStructure, ...]

    @property
    def verdict(self) -> str:
        if self.cameron:
            return "cameron"
        if self.hamming:
            return "hamming"
        return "outside"

    def to_dict(self) -> dict:
        out: dict = {
            "verdict": self.verdict,
            "cameron": self.cameron,
            "hamming": [bs.to_dict() for bs in self.hamming],
        }
        if self.verdict == "hamming":
            out["e"] = self.hamming[0].e
            out["blocks"] = [list(b) for b in self.hamming[0].blocks]
        return out


def classify(part: FusionPartition, *, check: bool = True) -> Classification:
    """Interval membership of a valid primitive fusion.

    Raises on partitions that are not valid fusions or not primitive; the
    intervals of the classification are only meaningful for primitive
    fusions.
    """
    if check:
        if not is_valid_fusion(part):
            raise ValueError("partition is not a valid fusion in generic mode")
        if not is_primitive(part):
            raise ValueError("fusion is not primitive")
    return Classification(cameron_refinement_holds(part), hamming_witnesses(part))


# ---------------------------------------------------------------------------
# minimal-cell structure


@dataclass(frozen=True)
class MinimalCellFacts:
    cell: int
    weight: int
    maximal: tuple[Vec, ...]
    down_closure_minimal: bool
    supports_disjoint: bool
    supports_equal_size: bool
    covers_coordinates: bool
    weight_one_complete: bool | None
    corner_cube: bool | None
    block_structure: BlockStructure | None

    @property
    def passed(self) -> bool:
        base = (
            self.down_closure_minimal
            and self.supports_disjoint
            and self.supports_equal_size
            and self.covers_coordinates
        )
        extra = self.weight_one_complete if self.weight == 1 else self.corner_cube
        return base and bool(extra)


def verify_minimal_cell_structure(part: FusionPartition) -> tuple[MinimalCellFacts, ...]:
    """Structural facts about each minimal nonidentity cell of a valid
    primitive fusion.

    For minimal cells the down-closure must add only the zero vector, the
    maximal-weight members must have disjoint equal-size supports covering
    every coordinate, and the cell is either the full set of weight-one
    vectors or its maximal members sit in {0,k}^d, in which case their
    supports form the block structure of the Hamming interval.
    """
    if not is_valid_fusion(part):
        raise ValueError("partition is not a valid fusion in generic mode")
    if not is_primitive(part):
        raise ValueError("fusion is not primitive")
    pre = domination_preorder(part)
    facts = []
    zero = zero_vector(part.d)
    for alpha in pre.minimal:
        members = part.cells[alpha]
        star = max_weight_subset(members)
        w = set_weight(members)
        closure = down_closure(star)
        d_minimal = closure == set(members) | {zero}
        sups = [support(v) for v in star]
        disjoint = all(not (s & t) for i, s in enumerate(sups) for t in sups[i + 1 :])
        sizes = {len(s) for s in sups}
        equal_size = len(sizes) == 1
        covers = frozenset().union(*sups) == frozenset(range(1, part.d + 1))
        weight_one = None
        corner = None
        blocks = None
        if w == 1:
            weight_one = set(star) == {v for v in cube(part.k, part.d) if weight(v) == 1}
        else:
            corner = all(x in (0, part.k) for v in star for x in v)
        if disjoint and equal_size and covers:
            blocks = BlockStructure.from_blocks([sorted(s) for s in sups])
        facts.append(
            MinimalCellFacts(
                alpha, w, star, d_minimal, disjoint, equal_size, covers,
                weight_one, corner, blocks,
            )
        )
    return tuple(facts)


def beta_star_sums_of_minimal(part: FusionPartition, alpha: int) -> bool:
    """Whether every cell's maximal-weight members are sums of the members
    of the minimal cell alpha's maximal-weight set that they dominate."""
    star = max_weight_subset(part.cells[alpha])
    for cell in part.cells:
        for b in max_weight_subset(cell):
            total = zero_vector(part.d)
            for a in star:
                if all(x <= y for x, y in zip(a, b)):
                    total = tuple(x + y for x, y in zip(total, a))
            if total != b:
                return False
    return True

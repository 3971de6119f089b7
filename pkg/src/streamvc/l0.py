"""Linear sketch of a signed integer vector with nonzero-coordinate sampling.

The sketch keeps, per repetition and subsampling level, a one-sparse
recovery cell (count, index_sum, fingerprint over the prime field
p = 2^61 - 1). Level l of a repetition sees each coordinate with
probability 2^-l via a seeded hash treated as fully random; levels are
nested (a coordinate active at level l is active at all shallower
levels). A cell is decodable when it holds exactly one nonzero
coordinate, which the fingerprint test count * z^(index_sum/count)
certifies; false accepts need a fingerprint collision and are
vanishingly rare.

Updates, merges and therefore the final state are linear in the update
stream: any reordering or insert/delete cancellation produces the same
cells bit for bit.
"""
from __future__ import annotations

import math
import struct

import numpy as np

from .errors import SeedMismatchError
from .seeds import derive_seed, mix_u64

PRIME = (1 << 61) - 1

# repetitions R = ceil(REP_SCALE * ln(1/delta)); per-repetition decode
# success is a constant, so failure decays as delta^(const * REP_SCALE)
REP_SCALE = 4.0


class NonZeroIndex:
    """Successful sample: a coordinate from the support and its sign."""

    __slots__ = ("index", "sign")

    def __init__(self, index: int, sign: int):
        self.index = index
        self.sign = sign

    def __eq__(self, other):
        return (
            isinstance(other, NonZeroIndex)
            and self.index == other.index
            and self.sign == other.sign
        )

    def __repr__(self):
        return f"NonZeroIndex({self.index}, {self.sign:+d})"


class _Empty:
    def __repr__(self):
        return "Empty"


class _Fail:
    def __repr__(self):
        return "Fail"


EMPTY = _Empty()
FAIL = _Fail()

_MAGIC = b"L0S1"
_HEADER = struct.Struct("<QIIQQd")
_CELL = struct.Struct("<qqq")


def level_count(universe: int) -> int:
    return 2 * max(0, math.ceil(math.log2(universe))) + 2


def repetition_count(delta: float) -> int:
    return max(1, math.ceil(REP_SCALE * math.log(1.0 / delta)))


class L0Sketch:
    """Sketch of a vector over 0..universe-1; supports update/merge/sample."""

    def __init__(self, universe: int, delta: float, seed: int):
        if universe < 1:
            raise ValueError(f"universe size must be >= 1, got {universe}")
        if not (0.0 < delta < 1.0):
            raise ValueError(f"delta must be in (0,1), got {delta}")
        self.universe = universe
        self.delta = delta
        self.seed = seed
        self.levels = level_count(universe)
        self.reps = repetition_count(delta)
        self.rep_seeds = mix_u64(derive_seed(seed, "rep-seeds"), np.arange(self.reps))
        self._subsample_seed = derive_seed(seed, "subsample")
        self.z = 1 + derive_seed(seed, "fingerprint-base") % (PRIME - 1)
        shape = (self.reps, self.levels)
        self.counts = np.zeros(shape, dtype=np.int64)
        self.index_sums = np.zeros(shape, dtype=np.int64)
        self.fingerprints = np.zeros(shape, dtype=np.int64)

    # -- update path ---------------------------------------------------

    def active_mask(self, index: int) -> np.ndarray:
        """Bool[reps, levels]: which cells index lands in (nested levels)."""
        u = self.rep_seeds + np.uint64(index)
        x = mix_u64(self._subsample_seed, u)
        lowbit = x & (~x + np.uint64(1))
        with np.errstate(divide="ignore"):
            tz = np.where(x == 0, 64, np.log2(lowbit.astype(np.float64)))
        limits = np.minimum(tz.astype(np.int64), self.levels - 1)
        return np.arange(self.levels)[None, :] <= limits[:, None]

    def update(self, index: int, delta: int) -> "L0Sketch":
        if not (0 <= index < self.universe):
            raise IndexError(f"index {index} not in 0..{self.universe - 1}")
        self.apply_masked(self.active_mask(index), index, delta, self.zpow(index))
        return self

    def zpow(self, index: int) -> int:
        return pow(self.z, index, PRIME)

    def apply_masked(self, mask: np.ndarray, index: int, delta: int, zpow: int) -> None:
        """Raw cell update with a precomputed mask/power (hot path for banks)."""
        self.counts += delta * mask
        self.index_sums += (delta * index) * mask
        self.fingerprints = (self.fingerprints + (delta * zpow) * mask) % PRIME

    # -- merge ---------------------------------------------------------

    def compatible(self, other: "L0Sketch") -> bool:
        return (
            self.universe == other.universe
            and self.reps == other.reps
            and self.levels == other.levels
            and self.seed == other.seed
        )

    def merge(self, other: "L0Sketch") -> "L0Sketch":
        """Cell-wise sum; equals the sketch of the summed vectors."""
        if not self.compatible(other):
            raise SeedMismatchError("sketches differ in seeds or dimensions")
        out = self.copy()
        out.counts += other.counts
        out.index_sums += other.index_sums
        out.fingerprints = (out.fingerprints + other.fingerprints) % PRIME
        return out

    def copy(self) -> "L0Sketch":
        out = object.__new__(L0Sketch)
        out.universe = self.universe
        out.delta = self.delta
        out.seed = self.seed
        out.levels = self.levels
        out.reps = self.reps
        out.rep_seeds = self.rep_seeds
        out._subsample_seed = self._subsample_seed
        out.z = self.z
        out.counts = self.counts.copy()
        out.index_sums = self.index_sums.copy()
        out.fingerprints = self.fingerprints.copy()
        return out

    def is_zero(self) -> bool:
        return (
            not self.counts.any()
            and not self.index_sums.any()
            and not self.fingerprints.any()
        )

    # -- sampling --------------------------------------------------------

    def sample(self):
        """EMPTY, FAIL, or a NonZeroIndex from the support of the vector."""
        return sample_cells(
            self.counts, self.index_sums, self.fingerprints, self.z, self.universe
        )

    # -- serialization ---------------------------------------------------

    def serialized_size(self) -> int:
        return len(_MAGIC) + _HEADER.size + self.reps * self.levels * _CELL.size

    def to_bytes(self) -> bytes:
        parts = [
            _MAGIC,
            _HEADER.pack(
                self.universe, self.levels, self.reps, self.seed, self.z, self.delta
            ),
        ]
        cells = np.stack(
            [self.counts, self.index_sums, self.fingerprints], axis=-1
        ).astype("<i8")
        parts.append(cells.tobytes())
        return b"".join(parts)

    @classmethod
    def from_bytes(cls, blob: bytes) -> "L0Sketch":
        if blob[:4] != _MAGIC:
            raise ValueError("bad magic; not a serialized sketch")
        universe, levels, reps, seed, z, delta = _HEADER.unpack_from(blob, 4)
        out = cls(universe, delta, seed)
        if (out.levels, out.reps, out.z) != (levels, reps, z):
            raise ValueError("serialized header inconsistent with seed derivation")
        cells = np.frombuffer(blob, dtype="<i8", offset=4 + _HEADER.size)
        cells = cells.reshape(reps, levels, 3)
        out.counts = cells[:, :, 0].astype(np.int64)
        out.index_sums = cells[:, :, 1].astype(np.int64)
        out.fingerprints = cells[:, :, 2].astype(np.int64)
        return out


def sample_cells(counts, index_sums, fingerprints, z: int, universe: int):
    """Decode one nonzero coordinate from raw cell arrays.

    EMPTY when every repetition's level-0 cell is identically zero;
    otherwise the first repetition-major cell passing the one-sparse
    verification wins; FAIL when none does.
    """
    level0 = (
        (counts[:, 0] == 0) & (index_sums[:, 0] == 0) & (fingerprints[:, 0] == 0)
    )
    if bool(level0.all()):
        return EMPTY
    reps, levels = counts.shape
    nonzero = counts != 0
    for r in range(reps):
        row = nonzero[r]
        if not row.any():
            continue
        for lv in np.nonzero(row)[0]:
            c = int(counts[r, lv])
            s = int(index_sums[r, lv])
            if s % c != 0:
                continue
            q = s // c
            if not (0 <= q < universe):
                continue
            if (c % PRIME) * pow(z, q, PRIME) % PRIME == int(fingerprints[r, lv]):
                return NonZeroIndex(q, 1 if c > 0 else -1)
    return FAIL

"""Exact and residue tables of the overpartition counts S(n).

S(n) counts partitions of n into parts congruent to 0, 1 or 5 mod 6
(equivalently, the Schur-type overpartitions counted by the gap-matrix
oracle below). The primary computation is the Euler product prefix-sum
update, run once per admissible part size; slices and itertools keep the
inner loops at C speed, and a numpy variant produces residue tables for
congruence work at large lengths.
"""

from __future__ import annotations

import os
import struct
from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from operator import add

import numpy as np

_PART_RESIDUES = (0, 1, 5)

CACHE_MAGIC = b"SCHS1"
CACHE_ENV = "QDISSECT_CACHE"


def _is_part(j: int) -> bool:
    return j % 6 in _PART_RESIDUES


@dataclass(frozen=True)
class SchurSeries:
    """Exact values S(0), ..., S(precision - 1)."""

    values: tuple[int, ...]

    @property
    def precision(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def residues(self, m: int) -> np.ndarray:
        if m < 2:
            raise ValueError("modulus must be at least 2")
        return np.array([v % m for v in self.values], dtype=np.uint64)


@dataclass(frozen=True)
class ResidueTable:
    """S(n) mod `modulus` as a numpy vector."""

    values: np.ndarray
    modulus: int

    @property
    def precision(self) -> int:
        return len(self.values)

    def __getitem__(self, n: int) -> int:
        return int(self.values[n])

    def residues(self, m: int) -> np.ndarray:
        if m < 2 or self.modulus % m != 0:
            raise ValueError(f"cannot reduce a mod-{self.modulus} table mod {m}")
        return (self.values % m).astype(np.uint64)


def _euler_exact(n: int) -> list[int]:
    v = [0] * n
    v[0] = 1
    for j in range(1, n):
        if not _is_part(j):
            continue
        if 2 * j >= n:
            v[j:] = list(map(add, v[j:], v[: n - j]))
        elif j * j >= n:
            for s in range(j, n, j):
                e = min(s + j, n)
                v[s:e] = list(map(add, v[s:e], v[s - j : e - j]))
        else:
            for r in range(j):
                v[r::j] = accumulate(v[r::j])
    return v


def s_series(precision: int, cache_path: str | None = None) -> SchurSeries:
    """Exact S(0..precision-1); reads/writes the cache file when given one."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if cache_path is None:
        cache_path = os.environ.get(CACHE_ENV) or None
    if cache_path and os.path.exists(cache_path):
        cached = load_table(cache_path)
        if cached.precision >= precision:
            return SchurSeries(cached.values[:precision])
    table = SchurSeries(tuple(_euler_exact(precision)))
    if cache_path:
        save_table(cache_path, table)
    return table


@lru_cache(maxsize=4)
def _byte_table(precision: int) -> np.ndarray:
    # S(n) mod 256: uint8 wraparound is exactly arithmetic mod 256
    v = np.zeros(precision, dtype=np.uint8)
    v[0] = 1
    split = int(precision**0.5)
    for j in range(1, precision):
        if not _is_part(j):
            continue
        if j <= split:
            for r in range(j):
                w = v[r::j]
                np.cumsum(w, dtype=np.uint8, out=w)
        else:
            for s in range(j, precision, j):
                e = min(s + j, precision)
                np.add(v[s:e], v[s - j : e - j], out=v[s:e])
    v.setflags(write=False)
    return v


def _euler_mod(precision: int, m: int) -> np.ndarray:
    # general modulus: uint64 with a conditional subtract after each add
    v = np.zeros(precision, dtype=np.uint64)
    v[0] = 1
    mm = np.uint64(m)
    for j in range(1, precision):
        if not _is_part(j):
            continue
        for s in range(j, precision, j):
            e = min(s + j, precision)
            w = v[s:e]
            np.add(w, v[s - j : e - j], out=w)
            w[w >= mm] -= mm
    return v


def residue_table(precision: int, m: int) -> ResidueTable:
    """S(n) mod m for n < precision, without big-integer arithmetic."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if m < 2:
        raise ValueError("modulus must be at least 2")
    if 256 % m == 0:
        vals = _byte_table(precision) % np.uint8(m) if m < 256 else _byte_table(precision)
        return ResidueTable(vals, m)
    if m >= 1 << 62:
        raise ValueError("residue tables support moduli below 2^62")
    return ResidueTable(_euler_mod(precision, m), m)


def save_table(path: str, table: SchurSeries) -> None:
    """Little-endian cache: magic, u64 count, then u32 length + magnitude + sign."""
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(struct.pack("<Q", table.precision))
        for v in table.values:
            mag = abs(v)
            raw = mag.to_bytes((mag.bit_length() + 7) // 8 or 1, "little")
            fh.write(struct.pack("<I", len(raw)))
            fh.write(raw)
            fh.write(b"\x01" if v < 0 else b"\x00")


def load_table(path: str) -> SchurSeries:
    with open(path, "rb") as fh:
        data = fh.read()
    if data[: len(CACHE_MAGIC)] != CACHE_MAGIC:
        raise ValueError(f"{path}: not a table cache (bad magic)")
    off = len(CACHE_MAGIC)
    (count,) = struct.unpack_from("<Q", data, off)
    off += 8
    values = []
    for _ in range(count):
        (n,) = struct.unpack_from("<I", data, off)
        off += 4
        mag = int.from_bytes(data[off : off + n], "little")
        off += n
        sign = data[off]
        off += 1
        values.append(-mag if sign else mag)
    if off != len(data):
        raise ValueError(f"{path}: trailing bytes in table cache")
    return SchurSeries(tuple(values))


def oracle_part_count(n: int) -> int:
    """Brute-force count of partitions of n into parts == 0, 1, 5 mod 6."""
    if not 0 <= n <= 80:
        raise ValueError("part-count oracle is limited to 0 <= n <= 80")
    parts = [j for j in range(1, n + 1) if _is_part(j)]

    @lru_cache(maxsize=None)
    def ways(remaining: int, idx: int) -> int:
        if remaining == 0:
            return 1
        if idx == len(parts) or parts[idx] > remaining:
            return 0
        return ways(remaining - parts[idx], idx) + ways(remaining, idx + 1)

    return ways(n, 0)


# Gap matrix for the overpartition oracle. Row = class of the larger part,
# column = class of the smaller; parts not divisible by 3 are always
# overlined, parts divisible by 3 come overlined ("3bar") or plain ("3").
DIFFERENCE_MATRIX: dict[tuple[str, str], int] = {
    ("1bar", "1bar"): 3, ("1bar", "2bar"): 2, ("1bar", "3bar"): 4, ("1bar", "3"): 1,
    ("2bar", "1bar"): 4, ("2bar", "2bar"): 3, ("2bar", "3bar"): 5, ("2bar", "3"): 2,
    ("3bar", "1bar"): 5, ("3bar", "2bar"): 4, ("3bar", "3bar"): 6, ("3bar", "3"): 3,
    ("3", "1bar"): 2, ("3", "2bar"): 1, ("3", "3bar"): 3, ("3", "3"): 0,
}

_CLASSES = ("1bar", "2bar", "3bar", "3")


def _smallest_part_classes(w: int):
    if w % 3 == 1:
        if w % 6 == 1:
            yield "1bar"
    elif w % 3 == 2:
        if w % 6 == 2:
            yield "2bar"
    else:
        if w % 6 == 3:
            yield "3bar"
        if w % 6 == 0:
            yield "3"


def oracle_schur_overpartitions(n: int) -> int:
    """Count the gap-condition overpartitions of n directly.

    Smallest part: overlined with residue 1, 2 or 3 mod 6, or plain with
    residue 0 mod 6. Going upward, each new part exceeds the previous one
    by at least the matrix entry for the pair of classes, with the excess
    a multiple of 6. Plain parts must be divisible by 3.
    """
    if not 0 <= n <= 40:
        raise ValueError("overpartition oracle is limited to 0 <= n <= 40")
    if n == 0:
        return 1

    @lru_cache(maxsize=None)
    def extend(remaining: int, prev: int, prev_class: str) -> int:
        total = 1 if remaining == 0 else 0
        if remaining < prev:
            return total
        for u in _CLASSES:
            first = prev + DIFFERENCE_MATRIX[(u, prev_class)]
            for part in range(first, remaining + 1, 6):
                total += extend(remaining - part, part, u)
        return total

    total = 0
    for w in range(1, n + 1):
        for cls in _smallest_part_classes(w):
            total += extend(n - w, w, cls)
    return total


def oracle_mismatches(limit: int) -> list[int]:
    """n <= limit where the combinatorial oracle disagrees with s_series."""
    table = s_series(limit + 1)
    return [
        n for n in range(limit + 1) if oracle_schur_overpartitions(n) != table[n]
    ]

"""Phase-tracked Pauli operators, check matrices and stabilizer groups.

Bit-vector convention: qubit i lives at bit i of the packed x/z integers.
Textual I/O is 1-based (qubit 1 = first character); internals are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import GuardExceeded
from .f2core import BinMatrix, rank, row_reduce

_PHASE_PREFIX = {"+": 0, "": 0, "i": 1, "+i": 1, "-": 2, "-i": 3}
_PHASE_STR = {0: "", 1: "i", 2: "-", 3: "-i"}
_LETTER = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}

_I2 = np.eye(2, dtype=complex)
_X2 = np.array([[0, 1], [1, 0]], dtype=complex)
_Y2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z2 = np.array([[1, 0], [0, -1]], dtype=complex)
_MATS = {"I": _I2, "X": _X2, "Y": _Y2, "Z": _Z2}


@dataclass(frozen=True)
class PauliOperator:
    """i^phase times a tensor product of I/X/Y/Z, with X->(x=1,z=0), Z->(0,1), Y->(1,1)."""

    n: int
    x: int
    z: int
    phase: int = 0  # i-exponent of the sign prefix, mod 4

    def __post_init__(self):
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask or self.x < 0 or self.z < 0:
            raise ValueError("x/z bits out of range")
        if self.phase not in (0, 1, 2, 3):
            raise ValueError("phase must be in {0,1,2,3}")

    @property
    def support(self) -> frozenset[int]:
        """0-based qubits where the operator differs from identity."""
        both = self.x | self.z
        return frozenset(i for i in range(self.n) if (both >> i) & 1)

    @property
    def weight(self) -> int:
        return (self.x | self.z).bit_count()

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    # internal "XZ form": operator = i^e * X^x Z^z with e = phase + |x&z| mod 4
    def _xz_exponent(self) -> int:
        return (self.phase + (self.x & self.z).bit_count()) % 4

    def __mul__(self, other: "PauliOperator") -> "PauliOperator":
        if self.n != other.n:
            raise ValueError("qubit counts differ")
        x = self.x ^ other.x
        z = self.z ^ other.z
        e = (self._xz_exponent() + other._xz_exponent()
             + 2 * (self.z & other.x).bit_count()) % 4
        return PauliOperator(self.n, x, z, (e - (x & z).bit_count()) % 4)

    def __str__(self) -> str:
        letters = "".join(_LETTER[((self.x >> i) & 1, (self.z >> i) & 1)]
                          for i in range(self.n))
        return _PHASE_STR[self.phase] + letters

    def to_matrix(self) -> np.ndarray:
        """Dense 2^n x 2^n matrix (qubit 1 = leftmost tensor factor)."""
        out = np.array([[1j ** self.phase]], dtype=complex)
        for i in range(self.n):
            out = np.kron(out, _MATS[_LETTER[((self.x >> i) & 1, (self.z >> i) & 1)]])
        return out


def parse_pauli(s: str) -> PauliOperator:
    """Parse an optional sign prefix (+, -, i, -i) followed by I/X/Y/Z letters."""
    s = s.strip()
    body = s
    phase = 0
    for prefix in ("-i", "+i", "i", "-", "+"):
        if s.startswith(prefix):
            phase = _PHASE_PREFIX[prefix]
            body = s[len(prefix):]
            break
    if not body:
        raise ValueError("empty Pauli string")
    x = z = 0
    for pos, ch in enumerate(body):
        if ch == "X":
            x |= 1 << pos
        elif ch == "Z":
            z |= 1 << pos
        elif ch == "Y":
            x |= 1 << pos
            z |= 1 << pos
        elif ch != "I":
            raise ValueError(f"invalid Pauli character {ch!r} at position {pos + 1}")
    return PauliOperator(len(body), x, z, phase)


def commutes(p: PauliOperator, q: PauliOperator) -> bool:
    """True iff the symplectic product x_p.z_q + z_p.x_q vanishes mod 2."""
    if p.n != q.n:
        raise ValueError("qubit counts differ")
    return ((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) % 2 == 0


@dataclass(frozen=True)
class CheckMatrix:
    """m generators over n qubits in block form [B|C]: row j = x bits then z bits."""

    n: int
    generators: tuple[PauliOperator, ...]

    def __post_init__(self):
        for g in self.generators:
            if g.n != self.n:
                raise ValueError("generator length mismatch")

    @property
    def m(self) -> int:
        return len(self.generators)

    def to_binmatrix(self) -> BinMatrix:
        """[B|C] with x in columns 0..n-1 and z in columns n..2n-1."""
        return BinMatrix(tuple(g.x | (g.z << self.n) for g in self.generators),
                         2 * self.n)

    @staticmethod
    def from_binmatrix(m: BinMatrix, signs: tuple[int, ...] | None = None) -> "CheckMatrix":
        if m.cols % 2:
            raise ValueError("check matrix needs an even column count")
        n = m.cols // 2
        mask = (1 << n) - 1
        gens = []
        for i, r in enumerate(m.rows):
            phase = 2 * signs[i] if signs else 0
            gens.append(PauliOperator(n, r & mask, r >> n, phase))
        return CheckMatrix(n, tuple(gens))

    @staticmethod
    def from_strings(lines) -> "CheckMatrix":
        gens = tuple(parse_pauli(s) for s in lines)
        if not gens:
            raise ValueError("no generators")
        return CheckMatrix(gens[0].n, gens)


def is_valid_stabilizer(gens: CheckMatrix) -> bool:
    """Pairwise commuting, independent over GF(2), and -I not generated."""
    ops = gens.generators
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            if not commutes(ops[i], ops[j]):
                return False
    if rank(gens.to_binmatrix()) != gens.m:
        return False
    # Independence forbids a nonempty product with the all-identity pattern, so
    # -I can only arise from a generator that fails to square to +I.
    for g in ops:
        if g.phase % 2:
            return False
    return True


@dataclass(frozen=True)
class StabilizerGroup:
    """A valid set of stabilizer generators with tracked signs."""

    generators: CheckMatrix

    def __post_init__(self):
        if not is_valid_stabilizer(self.generators):
            raise ValueError("generators do not define a stabilizer group")

    @property
    def n(self) -> int:
        return self.generators.n

    @property
    def m(self) -> int:
        return self.generators.m

    @staticmethod
    def from_strings(lines) -> "StabilizerGroup":
        return StabilizerGroup(CheckMatrix.from_strings(lines))


def enumerate_group(s: StabilizerGroup, guard: int = 24) -> Iterator[PauliOperator]:
    """Yield all 2^m sign-tracked products of generator subsets, identity first."""
    if s.m > guard:
        raise GuardExceeded(f"generator count {s.m} exceeds enumeration guard {guard}")
    gens = s.generators.generators
    elems = [PauliOperator(s.n, 0, 0, 0)]
    yield elems[0]
    for g in gens:
        new = [e * g for e in elems]
        yield from new
        elems.extend(new)

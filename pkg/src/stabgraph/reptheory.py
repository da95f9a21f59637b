"""Irreducible representations of the dihedral group D_n (n even) and the
Heisenberg group H_p (p an odd prime), explicit Clebsch-Gordan unitaries with
fusion rules, recovery of the second input label, and verification."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np


# ---------------------------------------------------------------- groups

def dihedral_elements(n: int) -> list[tuple[int, int]]:
    """Elements r^t s^k as pairs (t, k), t in {0,1}, k in Z_n."""
    return [(t, k) for t in (0, 1) for k in range(n)]


def dihedral_mul(n: int, g1, g2) -> tuple[int, int]:
    """(r^t1 s^k1)(r^t2 s^k2) = r^(t1+t2) s^((-1)^t2 k1 + k2)."""
    t1, k1 = g1
    t2, k2 = g2
    return (t1 + t2) % 2, ((k1 if t2 == 0 else -k1) + k2) % n


def heisenberg_elements(p: int) -> list[tuple[int, int, int]]:
    """Upper-triangular triples (x, y, z) over Z_p."""
    return [(x, y, z) for x in range(p) for y in range(p) for z in range(p)]


def heisenberg_mul(p: int, g1, g2) -> tuple[int, int, int]:
    x1, y1, z1 = g1
    x2, y2, z2 = g2
    return (x1 + x2) % p, (y1 + y2 + z1 * x2) % p, (z1 + z2) % p


def _check_dihedral_n(n: int):
    if n < 4 or n % 2:
        raise ValueError("dihedral parameter n must be even and >= 4")


def _is_odd_prime(p: int) -> bool:
    return p >= 3 and p % 2 == 1 and all(p % d for d in range(3, int(p**0.5) + 1, 2))


def _check_heisenberg_p(p: int):
    if not _is_odd_prime(p):
        raise ValueError("Heisenberg parameter p must be an odd prime")


# ---------------------------------------------------------------- irrep labels

@dataclass(frozen=True)
class DihedralIrrep:
    """chi(a, b) one-dimensional, or rho(h) two-dimensional with h canonical
    in [1, n/2 - 1] via rho_h ~ rho_(-h)."""

    kind: str  # "chi" | "rho"
    a: int = 0
    b: int = 0
    h: int = 0

    @staticmethod
    def chi(a: int, b: int) -> "DihedralIrrep":
        return DihedralIrrep("chi", a % 2, b % 2)

    @staticmethod
    def rho(n: int, h: int) -> "DihedralIrrep":
        hc = canonical_rho_index(n, h)
        return DihedralIrrep("rho", h=hc)

    def dim(self) -> int:
        return 1 if self.kind == "chi" else 2

    def label(self) -> str:
        return (f"chi:{self.a},{self.b}" if self.kind == "chi"
                else f"rho:{self.h}")


def canonical_rho_index(n: int, h: int) -> int:
    hm = h % n
    hc = min(hm, n - hm)
    if hc == 0 or hc == n // 2:
        raise ValueError(f"rho index {h} is degenerate for n={n}")
    return hc


@dataclass(frozen=True)
class HeisenbergIrrep:
    """chi(a, b) one-dimensional, or sigma(k) p-dimensional, k in Z_p nonzero."""

    kind: str  # "chi" | "sigma"
    a: int = 0
    b: int = 0
    k: int = 0

    @staticmethod
    def chi(p: int, a: int, b: int) -> "HeisenbergIrrep":
        return HeisenbergIrrep("chi", a % p, b % p)

    @staticmethod
    def sigma(p: int, k: int) -> "HeisenbergIrrep":
        if k % p == 0:
            raise ValueError("sigma index must be nonzero mod p")
        return HeisenbergIrrep("sigma", k=k % p)

    def dim_in(self, p: int) -> int:
        return 1 if self.kind == "chi" else p

    def label(self) -> str:
        return (f"chi:{self.a},{self.b}" if self.kind == "chi"
                else f"sigma:{self.k}")


# ---------------------------------------------------------------- matrices

def dihedral_irrep_matrix(n: int, mu: DihedralIrrep, g) -> np.ndarray:
    _check_dihedral_n(n)
    t, k = g
    if mu.kind == "chi":
        return np.array([[(-1.0) ** (mu.a * t + mu.b * k)]], dtype=complex)
    w = np.exp(2j * np.pi / n)
    m = np.zeros((2, 2), dtype=complex)
    for r in (0, 1):
        m[(r + t) % 2, r] = w ** (mu.h * k) * w ** (-2 * mu.h * k * r)
    return m


def heisenberg_irrep_matrix(p: int, mu: HeisenbergIrrep, g) -> np.ndarray:
    _check_heisenberg_p(p)
    x, y, z = g
    w = np.exp(2j * np.pi / p)
    if mu.kind == "chi":
        return np.array([[w ** (mu.a * x + mu.b * z)]], dtype=complex)
    m = np.zeros((p, p), dtype=complex)
    for r in range(p):
        m[(r + x) % p, r] = w ** (mu.k * y) * w ** (mu.k * z * r)
    return m


def irrep_matrix(group: str, size: int, mu, g) -> np.ndarray:
    if group == "dihedral":
        return dihedral_irrep_matrix(size, mu, g)
    if group == "heisenberg":
        return heisenberg_irrep_matrix(size, mu, g)
    raise ValueError(f"unknown group {group!r}")


def _elements(group: str, size: int):
    return dihedral_elements(size) if group == "dihedral" else heisenberg_elements(size)


def all_irreps(group: str, size: int):
    if group == "dihedral":
        out = [DihedralIrrep.chi(a, b) for a in (0, 1) for b in (0, 1)]
        out += [DihedralIrrep.rho(size, h) for h in range(1, size // 2)]
        return out
    out = [HeisenbergIrrep.chi(size, a, b) for a in range(size) for b in range(size)]
    out += [HeisenbergIrrep.sigma(size, k) for k in range(1, size)]
    return out


def _dim(group: str, size: int, mu) -> int:
    return mu.dim() if group == "dihedral" else mu.dim_in(size)


@lru_cache(maxsize=None)
def _rep_table(group: str, size: int, mu) -> tuple[np.ndarray, ...]:
    """All irrep matrices of mu, aligned with _elements(group, size)."""
    return tuple(irrep_matrix(group, size, mu, g) for g in _elements(group, size))


@lru_cache(maxsize=None)
def _char_table(group: str, size: int, mu) -> np.ndarray:
    return np.array([np.trace(m) for m in _rep_table(group, size, mu)])


# ---------------------------------------------------------------- fusion

@dataclass(frozen=True)
class FusionResult:
    unitary: np.ndarray
    outputs: tuple  # ((irrep, multiplicity), ...) in block order
    type_tag: str
    # pre-canonicalization block labels (dihedral rho arithmetic is mod n and
    # only isomorphism-reduced for display; recovery needs the raw value)
    raw_labels: tuple = field(default=())


def _block_rep(group: str, size: int, outputs):
    dims = []
    mus = []
    for mu, mult in outputs:
        for _ in range(mult):
            mus.append(mu)
            dims.append(_dim(group, size, mu))
    total = sum(dims)

    def d_of(g):
        m = np.zeros((total, total), dtype=complex)
        pos = 0
        for mu, d in zip(mus, dims):
            m[pos:pos + d, pos:pos + d] = irrep_matrix(group, size, mu, g)
            pos += d
        return m

    return d_of, total


def _exact_unitary(group: str, size: int, mu1, mu2, outputs, w: np.ndarray) -> np.ndarray:
    """Compose the closed-form change of basis with a correction intertwiner so
    the conjugated product representation equals the canonical block form
    exactly: project a fixed generic matrix onto the intertwiner space of the
    w-conjugated representation, then take its unitary polar factor."""
    d_of, total = _block_rep(group, size, outputs)
    els = _elements(group, size)
    r1 = _rep_table(group, size, mu1)
    r2 = _rep_table(group, size, mu2)

    rng = np.random.default_rng(12345)
    m0 = rng.normal(size=(total, total)) + 1j * rng.normal(size=(total, total))
    t = np.zeros((total, total), dtype=complex)
    for i, g in enumerate(els):
        pg = w @ np.kron(r1[i], r2[i]) @ w.conj().T
        t += d_of(g) @ m0 @ pg.conj().T
    t /= len(els)
    uu, sv, vh = np.linalg.svd(t)
    if sv.min() < 1e-8:
        raise RuntimeError("claimed output multiset does not intertwine the product")
    return (uu @ vh) @ w


_QX = np.array([[0, 1], [1, 0]], dtype=complex)
_QZ = np.array([[1, 0], [0, -1]], dtype=complex)


def dihedral_fuse(n: int, mu1: DihedralIrrep, mu2: DihedralIrrep) -> FusionResult:
    _check_dihedral_n(n)
    half = n // 2
    if mu1.kind == "chi" and mu2.kind == "chi":
        out = ((DihedralIrrep.chi(mu1.a + mu2.a, mu1.b + mu2.b), 1),)
        u = _exact_unitary("dihedral", n, mu1, mu2, out, np.eye(1, dtype=complex))
        return FusionResult(u, out, "type1", (None,))
    if mu1.kind == "chi" or mu2.kind == "chi":
        chi, rho = (mu1, mu2) if mu1.kind == "chi" else (mu2, mu1)
        tag = "type2" if mu1.kind == "chi" else "type3"
        raw_h = rho.h if chi.b == 0 else (half - rho.h) % n
        out = ((DihedralIrrep.rho(n, raw_h), 1),)
        w = np.linalg.matrix_power(_QZ, chi.a) @ np.linalg.matrix_power(_QX, chi.b)
        u = _exact_unitary("dihedral", n, mu1, mu2, out, w)
        return FusionResult(u, out, tag, (raw_h,))
    # type 4: both two-dimensional
    h1, h2 = mu1.h, mu2.h
    w4 = np.zeros((4, 4), dtype=complex)
    # |00><00| + |10><01| + |11><10| + |01><11|
    w4[0, 0] = w4[2, 1] = w4[3, 2] = w4[1, 3] = 1.0
    cond_i = (h1 + h2) % n == half
    cond_ii = (h1 - h2) % n == 0
    outs = []
    raws = []
    if cond_i and cond_ii:
        for a, b in ((0, 0), (1, 0), (0, 1), (1, 1)):
            outs.append((DihedralIrrep.chi(a, b), 1))
            raws.append(None)
    elif cond_i:
        outs += [(DihedralIrrep.chi(0, 1), 1), (DihedralIrrep.chi(1, 1), 1)]
        raws += [None, None]
        outs.append((DihedralIrrep.rho(n, h1 - h2), 1))
        raws.append((h1 - h2) % n)
    elif cond_ii:
        outs += [(DihedralIrrep.chi(0, 0), 1), (DihedralIrrep.chi(1, 0), 1)]
        raws += [None, None]
        outs.append((DihedralIrrep.rho(n, h1 + h2), 1))
        raws.append((h1 + h2) % n)
    else:
        outs.append((DihedralIrrep.rho(n, h1 + h2), 1))
        raws.append((h1 + h2) % n)
        outs.append((DihedralIrrep.rho(n, h1 - h2), 1))
        raws.append((h1 - h2) % n)
    u = _exact_unitary("dihedral", n, mu1, mu2, tuple(outs), w4)
    return FusionResult(u, tuple(outs), "type4", tuple(raws))


def heisenberg_fuse(p: int, mu1: HeisenbergIrrep, mu2: HeisenbergIrrep) -> FusionResult:
    _check_heisenberg_p(p)
    w = np.exp(2j * np.pi / p)
    if mu1.kind == "chi" and mu2.kind == "chi":
        out = ((HeisenbergIrrep.chi(p, mu1.a + mu2.a, mu1.b + mu2.b), 1),)
        u = _exact_unitary("heisenberg", p, mu1, mu2, out, np.eye(1, dtype=complex))
        return FusionResult(u, out, "type1", (None,))
    if mu1.kind == "chi" or mu2.kind == "chi":
        chi, sig = (mu1, mu2) if mu1.kind == "chi" else (mu2, mu1)
        tag = "type2" if mu1.kind == "chi" else "type3"
        kinv = pow(sig.k, -1, p)
        v2 = np.zeros((p, p), dtype=complex)
        for t in range(p):
            v2[(t + kinv * chi.b) % p, t] = w ** (-chi.a * t)
        out = ((HeisenbergIrrep.sigma(p, sig.k), 1),)
        u = _exact_unitary("heisenberg", p, mu1, mu2, out, v2)
        return FusionResult(u, out, tag, (sig.k,))
    k1, k2 = mu1.k, mu2.k
    if (k1 + k2) % p:
        kinv = pow(k1 + k2, -1, p)
        v4 = np.zeros((p * p, p * p), dtype=complex)
        for a in range(p):
            for b in range(p):
                v4[(((a - b) % p) * p + (k1 * a + k2 * b) * kinv % p), a * p + b] = 1.0
        out = ((HeisenbergIrrep.sigma(p, k1 + k2), p),)
        u = _exact_unitary("heisenberg", p, mu1, mu2, out, v4)
        return FusionResult(u, out, "type4", ((k1 + k2) % p,))
    # type 5: k1 + k2 = 0; every one-dimensional irrep once, block (w, v)
    # carrying chi with a = 2v, b = k1 w
    v5 = np.zeros((p * p, p * p), dtype=complex)
    for a in range(p):
        for b in range(p):
            for c in range(p):
                v5[((a - b) % p) * p + c, a * p + b] += w ** ((a + b) * c) / np.sqrt(p)
    outs = []
    for wlab in range(p):
        for vlab in range(p):
            outs.append((HeisenbergIrrep.chi(p, 2 * vlab, k1 * wlab), 1))
    u = _exact_unitary("heisenberg", p, mu1, mu2, tuple(outs), v5)
    return FusionResult(u, tuple(outs), "type5", (None,) * (p * p))


def fuse(group: str, size: int, mu1, mu2) -> FusionResult:
    if group == "dihedral":
        return dihedral_fuse(size, mu1, mu2)
    if group == "heisenberg":
        return heisenberg_fuse(size, mu1, mu2)
    raise ValueError(f"unknown group {group!r}")


# ---------------------------------------------------------------- verification

def decomposition_deviation(group: str, size: int, mu1, mu2) -> float:
    """Max-abs deviation of U (R1 x R2) U^dag from the claimed block form."""
    res = fuse(group, size, mu1, mu2)
    d_of, _ = _block_rep(group, size, res.outputs)
    r1 = _rep_table(group, size, mu1)
    r2 = _rep_table(group, size, mu2)
    dev = 0.0
    for i, g in enumerate(_elements(group, size)):
        pg = np.kron(r1[i], r2[i])
        dev = max(dev, float(np.max(np.abs(
            res.unitary @ pg @ res.unitary.conj().T - d_of(g)))))
    return dev


def verify_decomposition(group: str, size: int, mu1, mu2,
                         tol: float = 1e-9) -> bool:
    return decomposition_deviation(group, size, mu1, mu2) < tol


def character_fusion_oracle(group: str, size: int, mu1, mu2) -> dict:
    """Multiplicities from character inner products, independent of the
    explicit unitaries."""
    els = _elements(group, size)
    chi1 = _char_table(group, size, mu1)
    chi2 = _char_table(group, size, mu2)
    out = {}
    for mu in all_irreps(group, size):
        chim = _char_table(group, size, mu)
        val = np.sum(chi1 * chi2 * np.conj(chim)) / len(els)
        mult = round(val.real)
        if abs(val - mult) > 1e-9:
            raise RuntimeError(f"non-integer multiplicity {val} for {mu.label()}")
        if mult:
            out[mu] = mult
    return out


# ---------------------------------------------------------------- mu2 recovery

def recover_mu2(group: str, size: int, mu1, mu, raw_index: int | None = None):
    """Invert fusion: given the first input label and an output label, return
    the unique second input per the case tables.

    For dihedral outputs of two rho inputs the case-table formula uses the
    transmitted (pre-canonicalization) index; pass it via raw_index when
    available."""
    if group == "heisenberg":
        p = size
        if mu1.kind == "chi" and mu.kind == "chi":
            return HeisenbergIrrep.chi(p, mu.a - mu1.a, mu.b - mu1.b)
        if mu1.kind == "chi" and mu.kind == "sigma":
            return HeisenbergIrrep.sigma(p, mu.k)
        if mu1.kind == "sigma" and mu.kind == "chi":
            return HeisenbergIrrep.sigma(p, -mu1.k)
        k = mu.k if raw_index is None else raw_index
        if (k - mu1.k) % p == 0:
            raise ValueError("inconsistent label pair (sigma index collision)")
        return HeisenbergIrrep.sigma(p, k - mu1.k)
    if group == "dihedral":
        n = size
        half = n // 2
        if mu1.kind == "chi" and mu.kind == "chi":
            return DihedralIrrep.chi(mu.a + mu1.a, mu.b + mu1.b)
        if mu1.kind == "chi" and mu.kind == "rho":
            h = mu.h if raw_index is None else raw_index
            return DihedralIrrep.rho(n, h if mu1.b == 0 else half - h)
        if mu1.kind == "rho" and mu.kind == "chi":
            return DihedralIrrep.rho(n, half - mu1.h if mu.b == 1 else mu1.h)
        h = mu.h if raw_index is None else raw_index
        return DihedralIrrep.rho(n, h - mu1.h)
    raise ValueError(f"unknown group {group!r}")

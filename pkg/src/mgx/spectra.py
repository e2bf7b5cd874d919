"""Hermitian adjacency matrices over the Gaussian integers, their exact
characteristic polynomials, and inertia by two independent exact routes.

Matrices are held as a pair of integer arrays (real part, imaginary part).
Arithmetic runs in int64 while a headroom check proves no intermediate can
overflow, and switches to Python integers (object arrays) otherwise, so the
results are exact for any input size.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .graph import MixedGraph

_INT64_SAFE = 2**62


class ConsistencyError(ArithmeticError):
    """An exactness invariant failed: a bug, never a property of valid input."""


@dataclass(frozen=True)
class GaussianInt:
    re: int = 0
    im: int = 0

    def __add__(self, other):
        other = _gauss(other)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _gauss(other)
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _gauss(other) - self

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other):
        other = _gauss(other)
        return GaussianInt(self.re * other.re - self.im * other.im,
                           self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = _gauss(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re or self.im)

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        unit = {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        if not self.re:
            return unit
        return f"{self.re}{'+' if self.im > 0 else ''}{unit}"


I = GaussianInt(0, 1)


def _gauss(x) -> GaussianInt:
    if isinstance(x, GaussianInt):
        return x
    if isinstance(x, (int, np.integer)):
        return GaussianInt(int(x), 0)
    if isinstance(x, complex) and x.real.is_integer() and x.imag.is_integer():
        return GaussianInt(int(x.real), int(x.imag))
    raise TypeError(f"not a Gaussian integer: {x!r}")


def _int_arrays(re_rows, im_rows, n: int) -> tuple[np.ndarray, np.ndarray]:
    flat_re = [int(x) for row in re_rows for x in row]
    flat_im = [int(x) for row in im_rows for x in row]
    big = any(abs(x) >= 2**31 for x in flat_re + flat_im)
    dtype = object if big else np.int64
    return (np.array(flat_re, dtype=dtype).reshape(n, n),
            np.array(flat_im, dtype=dtype).reshape(n, n))


class HermitianMatrix:
    """Square matrix over Z[i] equal to its conjugate transpose."""

    __slots__ = ("n", "re", "im")

    def __init__(self, re: np.ndarray, im: np.ndarray, check: bool = True):
        if re.shape != im.shape or re.ndim != 2 or re.shape[0] != re.shape[1]:
            raise ValueError("real and imaginary parts must be equal square arrays")
        if re.dtype != im.dtype:
            re, im = re.astype(object), im.astype(object)
        if check and not (np.array_equal(re, re.T) and np.array_equal(im, -im.T)):
            raise ValueError("matrix is not Hermitian")
        re.flags.writeable = False
        im.flags.writeable = False
        self.n = re.shape[0]
        self.re = re
        self.im = im

    @classmethod
    def from_entries(cls, entries: Sequence[Sequence]) -> HermitianMatrix:
        """From an n x n table of Gaussian integers (ints and integral complex accepted)."""
        n = len(entries)
        if any(len(row) != n for row in entries):
            raise ValueError("matrix must be square")
        g = [[_gauss(x) for x in row] for row in entries]
        return cls(*_int_arrays([[x.re for x in row] for row in g],
                                [[x.im for x in row] for row in g], n))

    @classmethod
    def zeros(cls, n: int) -> HermitianMatrix:
        return cls(np.zeros((n, n), dtype=np.int64), np.zeros((n, n), dtype=np.int64))

    def entry(self, k: int, l: int) -> GaussianInt:
        return GaussianInt(int(self.re[k, l]), int(self.im[k, l]))

    def entries(self) -> list[list[GaussianInt]]:
        return [[self.entry(k, l) for l in range(self.n)] for k in range(self.n)]

    def conjugate(self) -> HermitianMatrix:
        return HermitianMatrix(self.re.copy(), -self.im, check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HermitianMatrix):
            return NotImplemented
        return (self.n == other.n and np.array_equal(self.re, other.re)
                and np.array_equal(self.im, other.im))

    def __repr__(self) -> str:
        rows = ["[" + ", ".join(str(x) for x in row) + "]" for row in self.entries()]
        return f"HermitianMatrix([{', '.join(rows)}])"


@dataclass(frozen=True)
class IntPolynomial:
    """Monic characteristic polynomial: ``coeffs[j]`` multiplies lambda^(n-j)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("characteristic polynomial must be monic")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, j: int) -> int:
        return self.coeffs[j]

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.coeffs)


@dataclass(frozen=True)
class Inertia:
    p_plus: int
    n_minus: int
    nullity: int

    def __post_init__(self):
        if min(self.p_plus, self.n_minus, self.nullity) < 0:
            raise ValueError(f"negative inertia component in {self}")

    @property
    def rank(self) -> int:
        return self.p_plus + self.n_minus

    @property
    def order(self) -> int:
        return self.p_plus + self.n_minus + self.nullity

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.p_plus, self.n_minus, self.nullity)

    def __str__(self) -> str:
        return f"({self.p_plus}, {self.n_minus}, {self.nullity})"


def hermitian_adjacency(g: MixedGraph) -> HermitianMatrix:
    """H(G): 1 on both sides of an undirected edge, i / -i for an arc tail->head / head->tail."""
    n = g.n
    re = np.zeros((n, n), dtype=np.int64)
    im = np.zeros((n, n), dtype=np.int64)
    for u, v, o in g.edges:
        if o == 0:
            re[u, v] = re[v, u] = 1
        else:
            im[u, v] = o
            im[v, u] = -o
    return HermitianMatrix(re, im, check=False)


def _peak(*arrays: np.ndarray) -> int:
    return max((int(np.abs(a).max()) for a in arrays if a.size), default=0)


def _widen(*arrays: np.ndarray) -> list[np.ndarray]:
    return [a.astype(object) for a in arrays]


def charpoly(h: HermitianMatrix) -> IntPolynomial:
    """det(lambda I - H) by the Faddeev-LeVerrier recurrence.

    With M_1 = I, a_k = -tr(H M_k) / k and M_{k+1} = H M_k + a_k I.  Each
    trace must be real and each division exact; either failing raises
    ConsistencyError.
    """
    n = h.n
    hre, him = h.re, h.im
    wide = hre.dtype == object
    hpeak = _peak(hre, him)
    mre = np.eye(n, dtype=object if wide else np.int64)
    mim = np.zeros((n, n), dtype=mre.dtype)
    coeffs = [1]
    diag = np.arange(n)
    for k in range(1, n + 1):
        if not wide and 4 * (n + 1) * n * max(hpeak, 1) * max(_peak(mre, mim), 1) >= _INT64_SAFE:
            hre, him, mre, mim = _widen(hre, him, mre, mim)
            wide = True
        pre = hre @ mre - him @ mim
        pim = hre @ mim + him @ mre
        if int(pim[diag, diag].sum()) != 0:
            raise ConsistencyError(f"trace of H*M_{k} has a nonzero imaginary part")
        q, r = divmod(-int(pre[diag, diag].sum()), k)
        if r:
            raise ConsistencyError(f"trace at step {k} is not divisible by {k}")
        coeffs.append(q)
        pre[diag, diag] += q
        mre, mim = pre, pim
    return IntPolynomial(tuple(coeffs))


def inertia_from_charpoly(p: IntPolynomial) -> Inertia:
    """Inertia of a real-rooted characteristic polynomial by Descartes' rule.

    Positive roots = sign changes of a_0..a_n ignoring zeros; the zero root
    has multiplicity n - (last index with a_j != 0).
    """
    n = p.degree
    changes, last = 0, 1
    top = 0
    for j, c in enumerate(p.coeffs):
        if c:
            top = j
            s = 1 if c > 0 else -1
            if s != last:
                changes += 1
            last = s
    nullity = n - top
    return Inertia(changes, n - nullity - changes, nullity)


def _reduce(wre: np.ndarray, wim: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    if not wre.size:
        return wre, wim
    g = int(np.gcd.reduce(np.concatenate([wre.ravel(), wim.ravel()])))
    if g > 1:
        return wre // g, wim // g
    return wre, wim


def inertia_by_congruence(h: HermitianMatrix) -> Inertia:
    """Inertia by symmetric elimination (Sylvester's law of inertia).

    A nonzero diagonal entry d is a 1x1 pivot contributing its sign; when the
    working diagonal is all zero, the first nonzero off-diagonal entry h in
    row-major order gives a 2x2 pivot [[0, h], [conj(h), 0]] contributing one
    positive and one negative eigenvalue.  Schur complements are scaled by
    the positive factors |d| or |h|^2, which keeps every entry a Gaussian
    integer, and the working block is divided by the gcd of its parts.
    """
    wre, wim = h.re.copy(), h.im.copy()
    wide = wre.dtype == object
    pos = neg = 0
    while wre.shape[0]:
        r = wre.shape[0]
        peak = _peak(wre, wim)
        if peak == 0:
            break
        if not wide and 16 * peak**3 >= _INT64_SAFE:
            wre, wim = _widen(wre, wim)
            wide = True
        d = np.diagonal(wim)
        if d.any():
            raise ConsistencyError("Hermitian working matrix has a non-real diagonal")
        nz = np.flatnonzero(np.diagonal(wre))
        if nz.size:
            p = int(nz[0])
            d = int(wre[p, p])
            rest = [i for i in range(r) if i != p]
            cr, ci = wre[rest, p], wim[rest, p]
            ore = np.multiply.outer(cr, cr) + np.multiply.outer(ci, ci)
            oim = np.multiply.outer(ci, cr) - np.multiply.outer(cr, ci)
            sub_re = wre[np.ix_(rest, rest)]
            sub_im = wim[np.ix_(rest, rest)]
            if d > 0:
                pos += 1
                wre, wim = d * sub_re - ore, d * sub_im - oim
            else:
                neg += 1
                wre, wim = -d * sub_re + ore, -d * sub_im + oim
        else:
            flat = np.flatnonzero((wre != 0) | (wim != 0))
            p, q = divmod(int(flat[0]), r)
            hr, hi = int(wre[p, q]), int(wim[p, q])
            pos += 1
            neg += 1
            rest = [i for i in range(r) if i not in (p, q)]
            xr, xi = wre[rest, p], wim[rest, p]
            yr, yi = wre[rest, q], wim[rest, q]
            # A = y x^*, B = conj(h) A, T = B + B^*
            are = np.multiply.outer(yr, xr) + np.multiply.outer(yi, xi)
            aim = np.multiply.outer(yi, xr) - np.multiply.outer(yr, xi)
            bre = hr * are + hi * aim
            bim = hr * aim - hi * are
            norm = hr * hr + hi * hi
            wre = norm * wre[np.ix_(rest, rest)] - (bre + bre.T)
            wim = norm * wim[np.ix_(rest, rest)] - (bim - bim.T)
        wre, wim = _reduce(wre, wim)
    return Inertia(pos, neg, h.n - pos - neg)


def inertia(h: HermitianMatrix, method: str = "descartes") -> Inertia:
    if method == "descartes":
        return inertia_from_charpoly(charpoly(h))
    if method == "congruence":
        return inertia_by_congruence(h)
    raise ValueError(f"unknown inertia method {method!r}")


def rank(h: HermitianMatrix, method: str = "descartes") -> int:
    return inertia(h, method).rank


def graph_inertia(g: MixedGraph, method: str = "descartes") -> Inertia:
    return inertia(hermitian_adjacency(g), method)


def graph_charpoly(g: MixedGraph) -> IntPolynomial:
    return charpoly(hermitian_adjacency(g))

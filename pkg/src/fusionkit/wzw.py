"""Simple objects, quantum dimensions, twists and fusion rules of C(sl2,k) and C(sl3,k).

Weights are tuples of Dynkin labels: (m,) for sl2, (m1, m2) for sl3, constrained
to the level-k alcove.  Fusion is computed by the Kac-Walton prescription:
classical tensor decomposition via the Klimyk weight-shift (weight multiplicities
by Freudenthal's recursion), folded into the alcove with shifted affine Weyl
reflections and signs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .cyclo import CycNum, root_of_unity_from_exponent, sin_pi
from .ring import FusionRing, ModularData

Weight = tuple[int, ...]


class OutOfAlcove(Exception):
    """Weight outside the level-k alcove."""


class NotASimpleCurrent(Exception):
    pass


@dataclass(frozen=True)
class AlgebraSpec:
    series: str  # "A1" or "A2"
    level: int

    def __post_init__(self):
        if self.series not in ("A1", "A2"):
            raise ValueError(f"unsupported series {self.series!r}")
        if self.level < 1:
            raise ValueError("level must be >= 1")

    @staticmethod
    def sl2(k: int) -> "AlgebraSpec":
        return AlgebraSpec("A1", k)

    @staticmethod
    def sl3(k: int) -> "AlgebraSpec":
        return AlgebraSpec("A2", k)

    @property
    def dual_coxeter(self) -> int:
        return 2 if self.series == "A1" else 3

    @property
    def height(self) -> int:
        # k + h^vee, the denominator of all alcove trigonometry
        return self.level + self.dual_coxeter


@lru_cache(maxsize=None)
def alcove(spec: AlgebraSpec) -> tuple[Weight, ...]:
    """All level-k alcove weights in lexicographic order."""
    k = spec.level
    if spec.series == "A1":
        return tuple((m,) for m in range(k + 1))
    return tuple((m1, m2) for m1 in range(k + 1) for m2 in range(k + 1 - m1))


def _check_alcove(spec: AlgebraSpec, w: Weight):
    if w not in set(alcove(spec)):
        raise OutOfAlcove(f"{w} is not in the level-{spec.level} alcove of {spec.series}")


@lru_cache(maxsize=None)
def qdim(spec: AlgebraSpec, w: Weight) -> CycNum:
    """Exact quantum dimension (equals FPdim by pseudo-unitarity)."""
    _check_alcove(spec, w)
    n = spec.height
    if spec.series == "A1":
        val = sin_pi(w[0] + 1, n) / sin_pi(1, n)
    else:
        m1, m2 = w
        num = sin_pi(m1 + 1, n) * sin_pi(m2 + 1, n) * sin_pi(m1 + m2 + 2, n)
        den = sin_pi(2, n) * sin_pi(1, n) * sin_pi(1, n)
        val = num / den
    return val.reduced()


def twist_exponent(spec: AlgebraSpec, w: Weight) -> Fraction:
    """The rational t with theta_w = e^(2 pi i t), reduced mod 1."""
    _check_alcove(spec, w)
    if spec.series == "A1":
        m = w[0]
        t = Fraction(m * (m + 2), 4 * (spec.level + 2))
    else:
        m1, m2 = w
        t = Fraction(m1 * m1 + 3 * m1 + m1 * m2 + 3 * m2 + m2 * m2, 3 * (spec.level + 3))
    return t % 1


def twist(spec: AlgebraSpec, w: Weight) -> CycNum:
    """Exact ribbon twist, a root of unity."""
    return root_of_unity_from_exponent(twist_exponent(spec, w))


# ---------------------------------------------------------------------------
# classical weight systems (Freudenthal) and Kac-Walton folding

_A2_POS_ROOTS = ((2, -1), (-1, 2), (1, 1))


def _ip3(u: Weight, v: Weight) -> int:
    # three times the Weyl-invariant inner product in fundamental-weight coords
    return 2 * u[0] * v[0] + u[0] * v[1] + u[1] * v[0] + 2 * u[1] * v[1]


def _dominant_conjugate(w: Weight) -> Weight:
    x, y = w
    while x < 0 or y < 0:
        if x < 0:
            x, y = -x, x + y
        else:
            x, y = x + y, -y
    return (x, y)


def _weyl_orbit(w: Weight) -> set[Weight]:
    orbit = {w}
    frontier = [w]
    while frontier:
        x, y = frontier.pop()
        for img in ((-x, x + y), (x + y, -y)):
            if img not in orbit:
                orbit.add(img)
                frontier.append(img)
    return orbit


@lru_cache(maxsize=None)
def _a2_weight_system(hw: Weight) -> tuple[tuple[Weight, int], ...]:
    """All weights of the sl3 irrep with highest weight hw, with multiplicities."""
    m1, m2 = hw
    depth_cap = 2 * (m1 + m2) + 1
    dominant: dict[Weight, tuple[int, int]] = {}
    for a in range(depth_cap):
        for b in range(depth_cap):
            mu = (m1 - 2 * a + b, m2 + a - 2 * b)
            if mu[0] >= 0 and mu[1] >= 0:
                dominant[mu] = (a, b)
    rho = (1, 1)
    top = (m1 + 1, m2 + 1)
    norm_top = _ip3(top, top)
    mults: dict[Weight, int] = {}
    for mu, (a, b) in sorted(dominant.items(), key=lambda kv: sum(kv[1])):
        if (a, b) == (0, 0):
            mults[mu] = 1
            continue
        acc = 0
        norm_hw = _ip3(hw, hw)
        for alpha in _A2_POS_ROOTS:
            j = 1
            while True:
                w = (mu[0] + j * alpha[0], mu[1] + j * alpha[1])
                m = mults.get(_dominant_conjugate(w), 0)
                # weights satisfy |w| <= |hw|; the norm is strictly increasing in j
                if m == 0 and _ip3(w, w) > norm_hw:
                    break
                acc += m * _ip3(w, alpha)
                j += 1
        mu_rho = (mu[0] + 1, mu[1] + 1)
        den = norm_top - _ip3(mu_rho, mu_rho)
        assert den > 0 and (2 * acc) % den == 0
        mults[mu] = 2 * acc // den
    full: dict[Weight, int] = {}
    for mu, m in mults.items():
        if m:
            for img in _weyl_orbit(mu):
                full[img] = m
    return tuple(sorted(full.items()))


def _a2_fold(x: int, y: int, n: int) -> tuple[Weight | None, int]:
    """Fold the shifted weight (x, y) into the interior of the level alcove.

    n = k + 3.  Returns (alcove weight, sign) or (None, 0) for a wall hit.
    """
    sign = 1
    for _ in range(10 * n):
        if x == 0 or y == 0 or x + y == n:
            return None, 0
        if x < 0:
            x, y = -x, x + y
            sign = -sign
        elif y < 0:
            x, y = x + y, -y
            sign = -sign
        elif x + y > n:
            t = x + y - n
            x, y = x - t, y - t
            sign = -sign
        else:
            return (x - 1, y - 1), sign
    raise RuntimeError("affine folding did not terminate")


@lru_cache(maxsize=None)
def fuse(spec: AlgebraSpec, a: Weight, b: Weight) -> tuple[tuple[Weight, int], ...]:
    """Fusion product a (x) b as a sorted tuple of (weight, multiplicity)."""
    _check_alcove(spec, a)
    _check_alcove(spec, b)
    n = spec.height
    out: dict[Weight, int] = {}
    if spec.series == "A1":
        # Clebsch-Gordan weights of the smaller factor, folded
        lam, mu = (a, b) if a[0] >= b[0] else (b, a)
        for nu in range(-mu[0], mu[0] + 1, 2):
            x = lam[0] + 1 + nu
            sign = 1
            while True:
                x %= 2 * n
                if x > n:
                    x = 2 * n - x
                    sign = -sign
                elif x % n == 0:
                    sign = 0
                    break
                else:
                    break
            if sign:
                out[(x - 1,)] = out.get((x - 1,), 0) + sign
    else:
        lam, mu = (a, b) if sum(a) >= sum(b) else (b, a)
        for nu, m in _a2_weight_system(mu):
            w, sign = _a2_fold(lam[0] + 1 + nu[0], lam[1] + 1 + nu[1], n)
            if sign:
                out[w] = out.get(w, 0) + sign * m
    result = {w: m for w, m in out.items() if m}
    assert all(m > 0 for m in result.values())
    return tuple(sorted(result.items()))


@lru_cache(maxsize=None)
def fusion_tensor(spec: AlgebraSpec) -> np.ndarray:
    """Structure constants over the full alcove, N[i][j][k] in alcove order."""
    basis = alcove(spec)
    index = {w: i for i, w in enumerate(basis)}
    r = len(basis)
    N = np.zeros((r, r, r), dtype=np.int64)
    for i, a in enumerate(basis):
        for j, b in enumerate(basis[: i + 1]):
            for w, m in fuse(spec, a, b):
                N[i, j, index[w]] = m
                N[j, i, index[w]] = m
    return N


def dual_weight(spec: AlgebraSpec, w: Weight) -> Weight:
    return w if spec.series == "A1" else (w[1], w[0])


def simple_currents(spec: AlgebraSpec) -> list[Weight]:
    """Alcove weights of quantum dimension exactly 1."""
    return [w for w in alcove(spec) if qdim(spec, w) == 1]


def current_action(spec: AlgebraSpec, J: Weight, w: Weight) -> Weight:
    """The unique weight in fuse(J, w) for a simple current J."""
    if qdim(spec, J) != 1:
        raise NotASimpleCurrent(f"{J} has qdim != 1")
    out = fuse(spec, J, w)
    if len(out) != 1 or out[0][1] != 1:
        raise NotASimpleCurrent(f"fuse({J}, {w}) is not a single simple")
    return out[0][0]


def fusion_ring(spec: AlgebraSpec) -> FusionRing:
    basis = alcove(spec)
    index = {w: i for i, w in enumerate(basis)}
    dual = tuple(index[dual_weight(spec, w)] for w in basis)
    labels = tuple(str(w) for w in basis)
    return FusionRing(labels, 0, dual, fusion_tensor(spec))


def modular_data(spec: AlgebraSpec) -> ModularData:
    """Complete modular data; the S-matrix is computed on demand via balancing."""
    ring = fusion_ring(spec)
    dims = tuple(qdim(spec, w) for w in alcove(spec))
    twists = tuple(twist(spec, w) for w in alcove(spec))
    return ModularData(ring, dims, twists)

"""Abstract fusion rings and modular data.

A FusionRing is a based ring with nonnegative integer structure constants,
a unit and a duality involution.  ModularData adds exact quantum dimensions,
twists and an S-matrix; the S-matrix is always obtained from the balancing
equation, and the Verlinde formula closes the loop back to the structure
constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .cyclo import CycNum, quadratic, sqrt_of, zeta


class NoConvergence(Exception):
    """Power iteration failed to settle within the iteration cap."""


class NonIntegerOutcome(Exception):
    """Verlinde formula produced a non-integer multiplicity (input not modular)."""


class SingularS(Exception):
    """Verlinde formula hit a vanishing unit-row S entry."""


@dataclass
class Report:
    """Outcome of an exhaustive verification; failures keep the first violation first."""

    ok: bool
    failures: list[str] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class FusionRing:
    labels: tuple[str, ...]
    unit: int
    dual: tuple[int, ...]
    N: np.ndarray  # shape (r, r, r), N[i][j][k] = mult of k in i x j

    def __post_init__(self):
        object.__setattr__(self, "N", np.ascontiguousarray(self.N, dtype=np.int64))

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def fusion_matrix(self, i: int) -> np.ndarray:
        return self.N[i]

    def product(self, i: int, j: int) -> dict[int, int]:
        row = self.N[i, j]
        return {k: int(row[k]) for k in np.nonzero(row)[0]}

    def invertibles(self) -> list[int]:
        return [i for i in range(self.rank) if self.N[i, self.dual[i]].sum() == 1]

    def __eq__(self, other):
        if not isinstance(other, FusionRing):
            return NotImplemented
        return (
            self.labels == other.labels
            and self.unit == other.unit
            and self.dual == other.dual
            and np.array_equal(self.N, other.N)
        )


def ring_from_products(labels, unit_label, dual_map, products) -> FusionRing:
    """Build a FusionRing from a {(label, label): {label: mult}} table."""
    labels = tuple(labels)
    idx = {l: i for i, l in enumerate(labels)}
    r = len(labels)
    N = np.zeros((r, r, r), dtype=np.int64)
    for (a, b), out in products.items():
        for c, m in out.items():
            N[idx[a], idx[b], idx[c]] = m
    dual = tuple(idx[dual_map.get(l, l)] for l in labels)
    return FusionRing(labels, idx[unit_label], dual, N)


def group_ring(n: int) -> FusionRing:
    """Group ring of the cyclic group Z_n."""
    labels = tuple("I" if a == 0 else f"g{a}" if a > 1 else "g" for a in range(n))
    N = np.zeros((n, n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            N[a, b, (a + b) % n] = 1
    dual = tuple((-a) % n for a in range(n))
    return FusionRing(labels, 0, dual, N)


def verify_ring(r: FusionRing) -> Report:
    """Check unit laws, Frobenius reciprocity and associativity exhaustively."""
    failures = []
    n, e = r.N, r.unit
    rank = r.rank
    eye = np.eye(rank, dtype=np.int64)
    if not np.array_equal(n[e], eye):
        j, k = _first_bad(n[e] != eye)
        failures.append(f"unit law: N[unit][{j}][{k}] = {n[e, j, k]}")
    if not failures:
        want = np.zeros((rank, rank), dtype=np.int64)
        for i in range(rank):
            want[i, r.dual[i]] = 1
        got = n[:, :, e]
        if not np.array_equal(got, want):
            i, j = _first_bad(got != want)
            failures.append(f"duality: N[{i}][{j}][unit] = {got[i, j]}, dual({i}) = {r.dual[i]}")
    if not failures:
        dual = np.asarray(r.dual)
        # N[i][j][k] = N[dual(i)][k][j] = N[k][dual(j)][i]
        a = n[dual][:, :, :].transpose(0, 2, 1)
        b = n[:, dual, :].transpose(2, 1, 0)
        if not np.array_equal(n, a) or not np.array_equal(n, b):
            bad = (n != a) | (n != b)
            i, j, k = _first_bad(bad)
            failures.append(f"Frobenius reciprocity violated at N[{i}][{j}][{k}]")
    if not failures:
        f = n.astype(np.float64)
        lhs = (f.reshape(rank * rank, rank) @ f.reshape(rank, rank * rank)).reshape(
            rank, rank, rank, rank
        )
        rhs = np.einsum("jkm,iml->ijkl", f, f, optimize=True)
        if not np.array_equal(lhs, rhs):
            i, j, k, l = _first_bad(lhs != rhs)
            failures.append(
                f"associativity violated at (i,j,k,l)=({i},{j},{k},{l}): "
                f"{lhs[i, j, k, l]:.0f} != {rhs[i, j, k, l]:.0f}"
            )
    return Report(not failures, failures)


def _first_bad(mask: np.ndarray) -> tuple:
    return tuple(int(x) for x in np.argwhere(mask)[0])


@dataclass
class FPDims:
    values: list[float]
    exact: list[CycNum] | None  # set when recognition in Z[sqrt(2)] / Z[sqrt(3)] succeeds


def fp_dims(r: FusionRing, tol: float = 1e-12, max_iter: int = 20000) -> FPDims:
    """Frobenius-Perron dimensions via power iteration on the total fusion matrix.

    The common Perron eigenvector v of all fusion matrices is found by iterating
    sum_i N_i; then FPdim(i) is read off from N_i v = FPdim(i) v.  Exact values
    in Z[sqrt(2)] or Z[sqrt(3)] are recovered by rounding and verified against
    the ring homomorphism identity symbolically.
    """
    total = r.N.sum(axis=0).astype(np.float64)
    v = np.ones(r.rank)
    for _ in range(max_iter):
        w = total @ v
        w /= w.max()
        if np.abs(w - v).max() < tol:
            v = w
            break
        v = w
    else:
        raise NoConvergence("power iteration did not converge")
    vals = [float((v @ r.N[i] @ v) / (v @ v)) for i in range(r.rank)]
    exact = _recognize_quadratic(vals)
    if exact is not None and not _check_homomorphism(r, exact):
        exact = None
    return FPDims(vals, exact)


def _recognize_quadratic(vals: list[float], tol: float = 1e-6) -> list[CycNum] | None:
    out = []
    for x in vals:
        hit = None
        if abs(x - round(x)) < tol:
            hit = CycNum.from_rational(round(x))
        else:
            for disc in (3, 2):
                root = disc ** 0.5
                for b in range(1, int(x / root) + 2):
                    a = round(x - b * root)
                    if abs(a + b * root - x) < tol:
                        hit = quadratic(a, b, disc)
                        break
                if hit is not None:
                    break
        if hit is None:
            return None
        out.append(hit)
    return out


def _check_homomorphism(r: FusionRing, dims: list[CycNum]) -> bool:
    for i in range(r.rank):
        for j in range(r.rank):
            lhs = dims[i] * dims[j]
            rhs = CycNum.zero()
            for k, m in r.product(i, j).items():
                rhs = rhs + dims[k] * m
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# modular data


@dataclass
class ModularData:
    ring: FusionRing
    dims: tuple[CycNum, ...]
    twists: tuple[CycNum, ...]
    _S: list[list[CycNum]] | None = None

    @property
    def rank(self) -> int:
        return self.ring.rank

    def global_dim(self) -> CycNum:
        total = CycNum.zero()
        for d in self.dims:
            total = total + d * d
        return total

    def s_matrix(self) -> list[list[CycNum]]:
        if self._S is None:
            self._S = balancing_S(self.ring, self.dims, self.twists)
        return self._S

    def gauss_sums(self) -> tuple[CycNum, CycNum]:
        p_plus = CycNum.zero()
        p_minus = CycNum.zero()
        for d, t in zip(self.dims, self.twists):
            p_plus = p_plus + d * d * t
            p_minus = p_minus + d * d * t.conj()
        return p_plus, p_minus


def balancing_S(ring: FusionRing, dims, twists) -> list[list[CycNum]]:
    """S_xy = theta_x^-1 theta_y^-1 sum_z N[x][y][z] dim(z) theta(z)."""
    r = ring.rank
    dt = [dims[z] * twists[z] for z in range(r)]
    tinv = [t.conj() for t in twists]  # twists are roots of unity
    S: list[list[CycNum]] = [[None] * r for _ in range(r)]
    for x in range(r):
        for y in range(x, r):
            acc = CycNum.zero()
            for z, m in ring.product(x, y).items():
                acc = acc + dt[z] * m
            val = tinv[x] * tinv[y] * acc
            S[x][y] = val
            if y != x:
                # fusion commutativity makes S symmetric; recompute when it is not
                if np.array_equal(ring.N[x, y], ring.N[y, x]):
                    S[y][x] = val
                else:
                    acc = CycNum.zero()
                    for z, m in ring.product(y, x).items():
                        acc = acc + dt[z] * m
                    S[y][x] = tinv[x] * tinv[y] * acc
    return S


def verlinde(md: ModularData) -> np.ndarray:
    """Recover structure constants from the S-matrix.

    N'[i][j][k] = (1/D) sum_m S[i][m] S[j][m] conj(S[k][m]) / S[unit][m]
    with D = sum dims^2; the unnormalized S keeps everything inside the
    cyclotomic field, and the outcome must be nonnegative integers.
    """
    S = md.s_matrix()
    r = md.rank
    e = md.ring.unit
    for m in range(r):
        if S[e][m].is_zero():
            raise SingularS(f"S[unit][{m}] = 0")
    inv_d = md.global_dim().inverse()
    weight = [S[e][m].inverse() * inv_d for m in range(r)]
    conjS = [[S[k][m].conj() for m in range(r)] for k in range(r)]
    out = np.zeros((r, r, r), dtype=np.int64)
    for i in range(r):
        for j in range(i, r):
            row = [S[i][m] * S[j][m] * weight[m] for m in range(r)]
            for k in range(r):
                acc = CycNum.zero()
                for m in range(r):
                    acc = acc + row[m] * conjS[k][m]
                q = acc.as_rational()
                if q is None or q.denominator != 1 or q < 0:
                    raise NonIntegerOutcome(f"N'[{i}][{j}][{k}] = {acc}")
                out[i, j, k] = int(q)
                out[j, i, k] = int(q)
    return out


def verify_modular(md: ModularData) -> Report:
    """S symmetric, S conj(S) = D Id, unit row = dims, Verlinde integrality, Gauss sums."""
    failures = []
    r = md.rank
    S = md.s_matrix()
    e = md.ring.unit
    for x in range(r):
        for y in range(x + 1, r):
            if S[x][y] != S[y][x]:
                failures.append(f"S not symmetric at ({x},{y})")
                break
        if failures:
            break
    if md.dims[e] != 1:
        failures.append("dims[unit] != 1")
    for i in range(r):
        if md.dims[i] != md.dims[md.ring.dual[i]]:
            failures.append(f"dims[{i}] != dims[dual({i})]")
            break
    for m in range(r):
        if S[e][m] != md.dims[m]:
            failures.append(f"unit row of S differs from dims at {m}")
            break
    D = md.global_dim()
    for x in range(r):
        for y in range(r):
            acc = CycNum.zero()
            for m in range(r):
                acc = acc + S[x][m] * S[y][m].conj()
            want = D if x == y else CycNum.zero()
            if acc != want:
                failures.append(f"(S conj(S))[{x}][{y}] != {'D' if x == y else '0'}")
                break
        if failures and failures[-1].startswith("(S conj(S))"):
            break
    try:
        got = verlinde(md)
        if not np.array_equal(got, md.ring.N):
            i, j, k = _first_bad(got != md.ring.N)
            failures.append(f"Verlinde round-trip differs at N[{i}][{j}][{k}]")
    except (NonIntegerOutcome, SingularS) as exc:
        failures.append(f"Verlinde failed: {exc}")
    p_plus, p_minus = md.gauss_sums()
    if p_plus * p_minus != D:
        failures.append("Gauss sums: p+ p- != D")
    return Report(not failures, failures)


def deligne_product(a: ModularData, b: ModularData) -> ModularData:
    """Deligne product: labels pair up, all data multiplies entrywise on pairs."""
    ra, rb = a.ring, b.ring
    labels = tuple(f"{la}⊠{lb}" for la in ra.labels for lb in rb.labels)
    n = np.einsum("ijk,abc->iajbkc", ra.N, rb.N).reshape(
        ra.rank * rb.rank, ra.rank * rb.rank, ra.rank * rb.rank
    )
    dual = tuple(ra.dual[i] * rb.rank + rb.dual[j] for i in range(ra.rank) for j in range(rb.rank))
    ring = FusionRing(labels, ra.unit * rb.rank + rb.unit, dual, n)
    dims = tuple(da * db for da in a.dims for db in b.dims)
    twists = tuple(ta * tb for ta in a.twists for tb in b.twists)
    S = None
    if a._S is not None and b._S is not None:
        S = [
            [a._S[i][j] * b._S[x][y] for j in range(ra.rank) for y in range(rb.rank)]
            for i in range(ra.rank)
            for x in range(rb.rank)
        ]
    return ModularData(ring, dims, twists, S)


def count_trivial_twists(md: ModularData) -> tuple[int, list[str]]:
    hits = [md.ring.labels[i] for i in range(md.rank) if md.twists[i] == 1]
    return len(hits), hits


def pointed_cyclic(n: int, s: int, form_order: int | None = None) -> ModularData:
    """Pointed modular data C(Z_n, eta) with eta(g^a) = zeta_m^(s a^2), m = form_order or n."""
    m = form_order if form_order is not None else n
    ring = group_ring(n)
    dims = tuple(CycNum.one() for _ in range(n))
    twists = tuple(zeta(m, (s * a * a) % m) for a in range(n))
    return ModularData(ring, dims, twists)


def trivial_data() -> ModularData:
    ring = group_ring(1)
    return ModularData(ring, (CycNum.one(),), (CycNum.one(),))


# ---------------------------------------------------------------------------
# arithmetic searches


def sum_of_squares_search(
    total: tuple[int, int], forced_invertibles: int
) -> list[tuple[tuple[int, int], ...]]:
    """All multisets of d = a + b*sqrt(3) (a >= 1, b >= 0, d != 1) with
    forced_invertibles * 1 + sum d^2 = total.

    total is (rational part, sqrt(3) part).  Results are sorted multisets of
    (a, b) pairs; deterministic depth-first search with the remaining total
    staying totally nonnegative as the pruning rule.
    """
    t0 = total[0] - forced_invertibles
    t1 = total[1]
    if not _totally_nonneg(t0, t1):
        return []
    candidates = []
    for a in range(1, 41):
        for b in range(0, 41):
            if (a, b) == (1, 0):
                continue
            sq = (a * a + 3 * b * b, 2 * a * b)
            if _totally_nonneg(t0 - sq[0], t1 - sq[1]):
                candidates.append(((a, b), sq))
    # fixed deterministic order: decreasing float value
    candidates.sort(key=lambda c: -(c[0][0] + c[0][1] * 3 ** 0.5))
    solutions: list[tuple[tuple[int, int], ...]] = []

    def dfs(start: int, rem0: int, rem1: int, picked: list[tuple[int, int]]):
        if rem0 == 0 and rem1 == 0:
            solutions.append(tuple(sorted(picked)))
            return
        for idx in range(start, len(candidates)):
            d, sq = candidates[idx]
            if _totally_nonneg(rem0 - sq[0], rem1 - sq[1]):
                picked.append(d)
                dfs(idx, rem0 - sq[0], rem1 - sq[1], picked)
                picked.pop()

    dfs(0, t0, t1, [])
    return sorted(set(solutions))


def _totally_nonneg(c0: int, c1: int) -> bool:
    # c0 + c1*sqrt(3) >= 0 under both embeddings sqrt(3) -> +-sqrt(3)
    return c0 >= 0 and c0 * c0 >= 3 * c1 * c1


def near_group_recognize(r: FusionRing) -> tuple[int, int] | None:
    """Detect a near-group ring: invertibles form a group G plus one X with
    X.X = sum_g g + n X; returns (|G|, n) or None."""
    inv = set(r.invertibles())
    non_inv = [i for i in range(r.rank) if i not in inv]
    if len(non_inv) != 1:
        return None
    x = non_inv[0]
    for g in inv:
        for h in inv:
            out = r.product(g, h)
            if len(out) != 1 or set(out) - inv:
                return None
        if r.product(g, x) != {x: 1} or r.product(x, g) != {x: 1}:
            return None
    xx = r.product(x, x)
    n = xx.get(x, 0)
    expect = {g: 1 for g in inv}
    expect[x] = n
    if n == 0:
        del expect[x]
    if xx != expect:
        return None
    return len(inv), n

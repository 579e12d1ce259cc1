"""Ground truth at desk scale: exhaustive MaxCut and the smallest adjacency eigenvalue."""

from __future__ import annotations

import numpy as np

from .errors import InvalidParameter, NoConvergence, TooLarge
from .graph import Graph
from .rounding import Cut

MAX_EXACT_N = 24
_LOW_BITS = 14


def exact_maxcut(g: Graph):
    """Maximum cut over all bipartitions with vertex 0 on side A.

    The witness is the lexicographically smallest maximizing side vector.
    The last ``b`` vertices are enumerated as one vectorized block of
    ``2^b`` assignments; the remaining vertices are walked in Gray-code order,
    each step flipping one vertex and updating every block total in O(2^b)
    plus O(degree) for the walked part.
    """
    n = g.n
    if n > MAX_EXACT_N:
        raise TooLarge(f"exact MaxCut is limited to n <= {MAX_EXACT_N}, got n={n}")
    if n <= 1:
        side = np.zeros(n, dtype=np.uint8)
        return 0, Cut.from_sides(g, side)
    b = min(n - 1, _LOW_BITS)
    low0 = n - b
    walk = list(range(1, low0))  # vertex 0 stays on side A
    adj = g.adjacency_lists()

    labels = np.arange(1 << b, dtype=np.int64)
    # bit of low vertex j inside a block index; chosen so integer order = lexicographic order
    low_bits = [((labels >> (n - 1 - j)) & 1).astype(np.int32) for j in range(low0, n)]

    low_internal = np.zeros(1 << b, dtype=np.int32)
    for u, v in g.edges.tolist():
        if u >= low0:
            low_internal += low_bits[u - low0] ^ low_bits[v - low0]

    # ones_low[u][l] = low neighbors of u on side B; deg_low[u] = number of low neighbors
    ones_low = {}
    deg_low = {}
    cross = np.zeros(1 << b, dtype=np.int32)
    for u in range(low0):
        acc = np.zeros(1 << b, dtype=np.int32)
        k = 0
        for v in adj[u]:
            if v >= low0:
                acc += low_bits[v - low0]
                k += 1
        ones_low[u] = acc
        deg_low[u] = k
        cross += acc  # every high vertex starts on side A

    side = [0] * n
    high_internal = 0
    high_key = 0
    base = low_internal + cross
    best = int(base.max())
    best_key = int(np.argmax(base))

    for step in range(1, 1 << len(walk)):
        u = walk[(step & -step).bit_length() - 1]
        old = side[u]
        for v in adj[u]:
            if v < low0:
                high_internal += 1 if side[v] == old else -1
        if old == 0:
            cross += deg_low[u] - 2 * ones_low[u]
        else:
            cross += 2 * ones_low[u] - deg_low[u]
        side[u] = 1 - old
        high_key ^= 1 << (n - 1 - u)
        totals = low_internal + cross
        idx = int(np.argmax(totals))
        value = int(totals[idx]) + high_internal
        key = high_key + idx
        if value > best or (value == best and key < best_key):
            best, best_key = value, key

    sides = np.array([(best_key >> (n - 1 - v)) & 1 for v in range(n)], dtype=np.uint8)
    witness = Cut.from_sides(g, sides)
    assert witness.crossing == best
    return best, witness


def exact_surplus(g: Graph) -> float:
    mc, _ = exact_maxcut(g)
    return mc - g.m / 2


def _start_vector(n: int, attempt: int) -> np.ndarray:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(0x5EED, spawn_key=(attempt,))))
    v = rng.standard_normal(n)
    return v / np.linalg.norm(v)


def smallest_eigenvalue(g: Graph, tol: float = 1e-9, max_iter: int = 10**6) -> float:
    """lambda_min(A) by power iteration on ``Delta * I - A``.

    With ``Delta`` the maximum degree every eigenvalue of the shifted
    operator is non-negative, so its dominant eigenvalue is ``Delta - lambda_min``.
    Iteration stops once the residual ``||B v - mu v||`` drops below ``tol``.
    """
    if g.n < 1:
        raise InvalidParameter("graph must have at least one vertex")
    if not tol > 0:
        raise InvalidParameter("tol must be positive")
    shift = float(g.degrees.max())
    if shift == 0:
        return 0.0
    u, w = g.edges[:, 0], g.edges[:, 1]
    n = g.n

    def apply(x):
        ax = np.bincount(u, weights=x[w], minlength=n) + np.bincount(w, weights=x[u], minlength=n)
        return shift * x - ax

    attempt = 0
    v = _start_vector(n, attempt)
    for _ in range(max_iter):
        y = apply(v)
        norm = np.linalg.norm(y)
        if norm < 1e-12:
            # start vector fell into the kernel of the shifted operator
            attempt += 1
            v = _start_vector(n, attempt)
            continue
        mu = float(v @ y)
        if np.linalg.norm(y - mu * v) <= tol:
            return shift - mu
        v = y / norm
    raise NoConvergence(f"power iteration did not reach tol={tol} in {max_iter} iterations")

"""Congruence certificates between symmetric integer forms.

A certificate is a list of basis operations, each either
``("slide", i, j, s)`` (replace e_i by e_i + s*e_j) or ``("flip", i)``
(negate e_i), whose composite congruence carries the first form to the
second.  Certificates are found either by a bounded breadth-first search
over the operations, or -- for definite forms -- by matching bases among
short vectors and factoring the resulting unimodular matrix into the
allowed operations.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from math import isqrt

from .intform import IntSymForm

CertOp = tuple

__all__ = [
    "apply_certificate",
    "verify_certificate",
    "find_congruence",
    "short_vectors",
    "find_isometry",
    "factor_unimodular",
]


def apply_certificate(form: IntSymForm, ops) -> IntSymForm:
    cur = form
    for op in ops:
        if op[0] == "slide":
            _, i, j, s = op
            cur = cur.slide(i, j, s)
        elif op[0] == "flip":
            cur = cur.flip(op[1])
        else:
            raise ValueError(f"unknown certificate op {op!r}")
    return cur


def verify_certificate(a: IntSymForm, b: IntSymForm, ops) -> bool:
    return apply_certificate(a, ops) == b


def _ldl(G):
    """Unit lower L and diagonal D with G = L D L^T, exact rationals.

    Requires all leading pivots nonzero (true for definite G).
    """
    n = len(G)
    A = [[Fraction(G[i][j]) for j in range(n)] for i in range(n)]
    L = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    D = [Fraction(0)] * n
    for k in range(n):
        D[k] = A[k][k]
        if D[k] == 0:
            raise ValueError("zero pivot; matrix not definite")
        for i in range(k + 1, n):
            L[i][k] = A[i][k] / D[k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] -= L[i][k] * L[j][k] * D[k]
    return L, D


def _floor_sqrt(f: Fraction) -> int:
    if f < 0:
        return -1
    return isqrt(f.numerator * f.denominator) // f.denominator


def short_vectors(form: IntSymForm, norm: int) -> list[tuple[int, ...]]:
    """All nonzero integer v with v^T F v == norm, F negative definite, norm < 0.

    Classic lattice-point enumeration on the exact LDL decomposition of -F.
    """
    n = form.n
    if n == 0 or norm >= 0:
        return []
    G = [[-form[i, j] for j in range(n)] for i in range(n)]
    L, D = _ldl(G)
    target = Fraction(-norm)
    out: list[tuple[int, ...]] = []
    v = [0] * n

    def descend(k: int, rem: Fraction) -> None:
        if k < 0:
            if rem == 0 and any(v):
                out.append(tuple(v))
            return
        center = sum(L[i][k] * v[i] for i in range(k + 1, n))
        radius = _floor_sqrt(rem / D[k])
        lo = -radius - int(center) - 2
        hi = radius - int(center) + 2
        for x in range(lo, hi + 1):
            used = D[k] * (x + center) ** 2
            if used <= rem:
                v[k] = x
                descend(k - 1, rem - used)
        v[k] = 0

    descend(n - 1, target)
    return sorted(out)


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps: int):
        self.left = steps

    def spend(self) -> bool:
        if self.left <= 0:
            return False
        self.left -= 1
        return True


def find_isometry(a: IntSymForm, b: IntSymForm, budget: _Budget | None = None):
    """Integer P (rows) with P^T a P = b, both forms negative definite.

    Columns of P are picked by backtracking among vectors of a-norm equal to
    each diagonal entry of b, constrained by the pairings already fixed.
    Returns None if no isometry exists or the step budget runs out.
    """
    n = a.n
    if n != b.n:
        return None
    if budget is None:
        budget = _Budget(1_000_000)
    pools: dict[int, list[tuple[int, ...]]] = {}
    for j in range(n):
        norm = b[j, j]
        if norm not in pools:
            pools[norm] = short_vectors(a, norm)
            if not pools[norm]:
                return None
    cols: list[tuple[int, ...]] = [None] * n  # type: ignore[list-item]
    acols: list[tuple[int, ...]] = [None] * n  # type: ignore[list-item]

    def pair(av, w) -> int:
        return sum(x * y for x, y in zip(av, w))

    def extend(j: int) -> bool:
        if j == n:
            return True
        for v in pools[b[j, j]]:
            if not budget.spend():
                return False
            ok = True
            for i in range(j):
                if pair(acols[i], v) != b[i, j]:
                    ok = False
                    break
            if not ok:
                continue
            cols[j] = v
            acols[j] = tuple(sum(a[i, k] * v[k] for k in range(n)) for i in range(n))
            if extend(j + 1):
                return True
        return False

    if not extend(0):
        return None
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def factor_unimodular(P) -> list[CertOp]:
    """Factor an integer matrix of determinant +-1 into slide/flip operations.

    The returned list, interpreted as successive congruence operations,
    realizes exactly P: applying them to a form F yields P^T F P.
    """
    n = len(P)
    M = [list(r) for r in P]
    applied: list[CertOp] = []

    def col_add(i: int, j: int, s: int) -> None:
        for r in range(n):
            M[r][i] += s * M[r][j]
        applied.append(("slide", i, j, s))

    def col_flip(i: int) -> None:
        for r in range(n):
            M[r][i] = -M[r][i]
        applied.append(("flip", i))

    def col_swap(i: int, j: int) -> None:
        # swap columns via three adds and one flip
        col_add(i, j, 1)
        col_add(j, i, -1)
        col_add(i, j, 1)
        col_flip(j)

    # Phase 1: row by row, use columns >= r to leave a single +1 at (r, r).
    for r in range(n):
        while True:
            nz = [c for c in range(r, n) if M[r][c] != 0]
            if not nz:
                raise ValueError("matrix is singular")
            if len(nz) == 1:
                c = nz[0]
                if c != r:
                    col_swap(r, c)
                    continue
                if M[r][r] < 0:
                    col_flip(r)
                break
            nz.sort(key=lambda c: (abs(M[r][c]), c))
            small, big = nz[0], nz[1]
            q = M[r][big] // M[r][small]
            if q == 0:
                q = 1 if M[r][big] * M[r][small] > 0 else -1
            step = -1 if q > 0 else 1
            for _ in range(abs(q)):
                col_add(big, small, step)
    # Phase 2: clear below the diagonal, rightmost column first.
    for r in range(n - 1, -1, -1):
        for rr in range(r + 1, n):
            k = M[rr][r]
            step = -1 if k > 0 else 1
            for _ in range(abs(k)):
                col_add(r, rr, step)
    for i in range(n):
        for j in range(n):
            if M[i][j] != (1 if i == j else 0):
                raise AssertionError("column reduction failed")
    # M * (applied ops) = I, hence P = product of inverse ops in reverse.
    ops: list[CertOp] = []
    for op in reversed(applied):
        if op[0] == "slide":
            _, i, j, s = op
            ops.append(("slide", i, j, -s))
        else:
            ops.append(op)
    return ops


def _all_ops(n: int) -> list[CertOp]:
    ops: list[CertOp] = []
    for i in range(n):
        ops.append(("flip", i))
        for j in range(n):
            if i != j:
                ops.append(("slide", i, j, 1))
                ops.append(("slide", i, j, -1))
    return ops


def _short_scan(a: IntSymForm, b: IntSymForm, depth: int):
    """Exhaustive search for a certificate of at most `depth` operations."""
    frontier: list[tuple[IntSymForm, list[CertOp]]] = [(a, [])]
    ops = _all_ops(a.n)
    for _ in range(depth):
        nxt = []
        for cur, path in frontier:
            for op in ops:
                im = cur.flip(op[1]) if op[0] == "flip" else cur.slide(op[1], op[2], op[3])
                if im == b:
                    return path + [op]
                nxt.append((im, path + [op]))
        frontier = nxt
    return None


def _bfs_certificate(a: IntSymForm, b: IntSymForm, budget: _Budget):
    """Breadth-first search over slide/flip operations, small cases only."""
    if a == b:
        return []
    n = a.n
    start = a.rows
    goal = b.rows
    seen = {start: None}
    queue = deque([a])
    moves = []
    for i in range(n):
        moves.append(("flip", i))
        for j in range(n):
            if i != j:
                moves.append(("slide", i, j, 1))
                moves.append(("slide", i, j, -1))
    while queue:
        cur = queue.popleft()
        for op in moves:
            if not budget.spend():
                return None
            nxt = cur.flip(op[1]) if op[0] == "flip" else cur.slide(op[1], op[2], op[3])
            key = nxt.rows
            if key in seen:
                continue
            seen[key] = (cur.rows, op)
            if key == goal:
                path = []
                k = key
                while seen[k] is not None:
                    prev, op_ = seen[k]
                    path.append(op_)
                    k = prev
                path.reverse()
                return path
            queue.append(nxt)
    return None


def find_congruence(a: IntSymForm, b: IntSymForm, budget: int = 200_000):
    """Certificate of congruence between a and b, or None within budget.

    None is inconclusive unless the exact congruence invariants already
    differ, in which case no certificate can exist.  The budget counts
    search steps, not certificate length.
    """
    if a.n != b.n:
        raise ValueError("dimension mismatch")
    if a == b:
        return []
    if a.invariants().congruence_key() != b.invariants().congruence_key():
        return None
    steps = _Budget(budget)
    if a.n <= 4:
        ops = _short_scan(a, b, depth=2)
        if ops is not None:
            return ops
    if a.invariants().definiteness == "negative definite":
        P = find_isometry(a, b, steps)
        if P is not None:
            ops = factor_unimodular(P)
            if verify_certificate(a, b, ops):
                return ops
        return None
    # Singular negative semidefinite: match the definite quotients modulo the
    # radical and lift the quotient isometry through unimodular splittings.
    inv = a.invariants()
    if inv.definiteness == "negative semidefinite" and inv.nullity >= 1:
        try:
            P = _semidefinite_isometry(a, b, steps)
        except ValueError:
            P = None
        if P is not None:
            ops = factor_unimodular(P)
            if verify_certificate(a, b, ops):
                return ops
        return None
    ops = _bfs_certificate(a, b, steps)
    if ops is not None and verify_certificate(a, b, ops):
        return ops
    return None


def _splitting(form: IntSymForm):
    """Unimodular S (columns) separating a complement from the radical.

    Columns: standard basis vectors at the kept coordinates, then the
    primitive kernel vectors.  S^T F S is then blockdiag(quotient, 0).
    """
    n = form.n
    kernel = form.kernel_basis()
    drop: list[int] = []
    for v in kernel:
        for pos in range(n - 1, -1, -1):
            if abs(v[pos]) == 1 and pos not in drop:
                drop.append(pos)
                break
        else:
            raise ValueError("kernel vector without unit coordinate")
    keep = [i for i in range(n) if i not in drop]
    cols = [tuple(1 if r == i else 0 for r in range(n)) for i in keep]
    cols += [tuple(v) for v in kernel]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def _mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum(A[i][k] * B[k][j] for k in range(m)) for j in range(p)]
            for i in range(n)]


def _mat_inv_unimodular(S):
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(S)
    A = [[Fraction(x) for x in row] for row in S]
    inv = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for c in range(n):
        pr = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[pr] = A[pr], A[c]
        inv[c], inv[pr] = inv[pr], inv[c]
        pv = A[c][c]
        A[c] = [x / pv for x in A[c]]
        inv[c] = [x / pv for x in inv[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[c])]
    out = [[int(x) for x in row] for row in inv]
    return out


def _semidefinite_isometry(a: IntSymForm, b: IntSymForm, budget: _Budget):
    """P with P^T a P = b for negative semidefinite forms, via quotients."""
    Sa = _splitting(a)
    Sb = _splitting(b)
    qa = a.quotient_by_kernel()
    qb = b.quotient_by_kernel()
    if qa.n != qb.n:
        return None
    Q = find_isometry(qa, qb, budget)
    if Q is None:
        return None
    n = a.n
    r = qa.n
    R = [[0] * n for _ in range(n)]
    for i in range(r):
        for j in range(r):
            R[i][j] = Q[i][j]
    for i in range(r, n):
        R[i][i] = 1
    return _mat_mul(_mat_mul(Sa, R), _mat_inv_unimodular(Sb))

"""Symmetric integer bilinear forms with exact invariants.

Everything here runs on Python ints and Fractions; no floating point
ever enters an invariant computation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class InvariantBundle:
    """Exact congruence data of a symmetric integer form.

    ``kernel`` is a primitive integer basis of the radical, one tuple per
    basis vector, deterministic.  The kernel entries depend on the basis
    the form is written in; the remaining fields are congruence invariants.
    """

    dim: int
    rank: int
    determinant: int
    signature: int
    even: bool
    definiteness: str
    kernel: tuple[tuple[int, ...], ...]

    @property
    def nullity(self) -> int:
        return len(self.kernel)

    def congruence_key(self) -> tuple:
        """The part of the bundle preserved by unimodular congruence."""
        return (self.dim, self.rank, self.determinant, self.signature,
                self.even, self.definiteness)


class IntSymForm:
    """Immutable square symmetric integer matrix."""

    __slots__ = ("_rows", "_n")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError("matrix is not square")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix not symmetric at ({i},{j})")
        object.__setattr__(self, "_rows", rows)
        object.__setattr__(self, "_n", n)

    @property
    def n(self) -> int:
        return self._n

    @property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        return self._rows

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        return isinstance(other, IntSymForm) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"IntSymForm({[list(r) for r in self._rows]})"

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zeros(n: int) -> "IntSymForm":
        return IntSymForm([[0] * n for _ in range(n)])

    @staticmethod
    def diagonal(entries) -> "IntSymForm":
        entries = list(entries)
        n = len(entries)
        rows = [[0] * n for _ in range(n)]
        for i, e in enumerate(entries):
            rows[i][i] = e
        return IntSymForm(rows)

    def bordered(self, column, corner: int) -> "IntSymForm":
        """Adjoin one basis vector with pairings ``column`` and self-pairing
        ``corner`` (used to append a toral handle to a grape form)."""
        column = [int(x) for x in column]
        if len(column) != self._n:
            raise ValueError("border length mismatch")
        rows = [list(r) + [column[i]] for i, r in enumerate(self._rows)]
        rows.append(column + [corner])
        return IntSymForm(rows)

    # -- exact invariants ----------------------------------------------------

    def determinant(self) -> int:
        """Bareiss fraction-free determinant."""
        n = self._n
        if n == 0:
            return 1
        M = [list(r) for r in self._rows]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if M[k][k] == 0:
                for r in range(k + 1, n):
                    if M[r][k] != 0:
                        M[k], M[r] = M[r], M[k]
                        sign = -sign
                        break
                else:
                    return 0
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            prev = M[k][k]
        return sign * M[-1][-1]

    def signature(self) -> int:
        """Exact signature by symmetric reduction with rational pivots.

        Nonzero diagonal pivots are consumed by Schur complement; if every
        remaining diagonal entry is zero but the block is nonzero, a
        row+column addition (a congruence) creates a pivot.
        """
        n = self._n
        A = [[Fraction(x) for x in row] for row in self._rows]
        live = list(range(n))
        sig = 0
        while live:
            pivot = None
            for i in live:
                if A[i][i] != 0:
                    pivot = i
                    break
            if pivot is None:
                moved = False
                for i in live:
                    for j in live:
                        if j != i and A[i][j] != 0:
                            for k in range(n):
                                A[i][k] += A[j][k]
                            for k in range(n):
                                A[k][i] += A[k][j]
                            moved = True
                            break
                    if moved:
                        break
                if not moved:
                    break  # remaining block is zero
                continue
            d = A[pivot][pivot]
            sig += 1 if d > 0 else -1
            live.remove(pivot)
            col = {i: A[i][pivot] for i in live}
            for i in live:
                ci = col[i]
                if ci == 0:
                    continue
                for j in live:
                    A[i][j] -= ci * col[j] / d
            for i in live:
                A[i][pivot] = A[pivot][i] = 0
        return sig

    def kernel_basis(self) -> tuple[tuple[int, ...], ...]:
        """Primitive integer basis of the radical, deterministic order.

        Vectors are scaled integer, content 1, first nonzero entry positive.
        """
        n = self._n
        A = [[Fraction(x) for x in row] for row in self._rows]
        pivots = []
        r = 0
        for c in range(n):
            pr = None
            for rr in range(r, n):
                if A[rr][c] != 0:
                    pr = rr
                    break
            if pr is None:
                continue
            A[r], A[pr] = A[pr], A[r]
            pv = A[r][c]
            A[r] = [x / pv for x in A[r]]
            for rr in range(n):
                if rr != r and A[rr][c] != 0:
                    f = A[rr][c]
                    A[rr] = [x - f * y for x, y in zip(A[rr], A[r])]
            pivots.append(c)
            r += 1
            if r == n:
                break
        free = [c for c in range(n) if c not in pivots]
        basis = []
        for fc in free:
            v = [Fraction(0)] * n
            v[fc] = Fraction(1)
            for i, pc in enumerate(pivots):
                v[pc] = -A[i][fc]
            lcm = 1
            for x in v:
                lcm = lcm * x.denominator // gcd(lcm, x.denominator)
            iv = [int(x * lcm) for x in v]
            g = 0
            for x in iv:
                g = gcd(g, abs(x))
            iv = [x // g for x in iv]
            for x in iv:
                if x != 0:
                    if x < 0:
                        iv = [-y for y in iv]
                    break
            basis.append(tuple(iv))
        return tuple(basis)

    def rank(self) -> int:
        return self._n - len(self.kernel_basis())

    def is_even(self) -> bool:
        return all(self._rows[i][i] % 2 == 0 for i in range(self._n))

    def invariants(self) -> InvariantBundle:
        kernel = self.kernel_basis()
        rank = self._n - len(kernel)
        sig = self.signature()
        det = self.determinant()
        if self._n == 0:
            definiteness = "zero"
        elif rank == 0:
            definiteness = "zero"
        elif sig == self._n:
            definiteness = "positive definite"
        elif sig == -self._n:
            definiteness = "negative definite"
        elif sig == rank:
            definiteness = "positive semidefinite"
        elif sig == -rank:
            definiteness = "negative semidefinite"
        else:
            definiteness = "indefinite"
        return InvariantBundle(
            dim=self._n,
            rank=rank,
            determinant=det,
            signature=sig,
            even=self.is_even(),
            definiteness=definiteness,
            kernel=kernel,
        )

    # -- congruence actions --------------------------------------------------

    def slide(self, i: int, j: int, sign: int = 1) -> "IntSymForm":
        """Handle slide: replace basis vector i by (i) + sign*(j).

        Returns P^T F P for the elementary matrix P adding sign*e_j to e_i.
        """
        n = self._n
        if i == j:
            raise ValueError("slide requires distinct indices")
        if not (0 <= i < n and 0 <= j < n):
            raise IndexError("slide index out of range")
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        M = [list(r) for r in self._rows]
        # row/col i pick up sign * row/col j; entry (i,i) twice plus (j,j)
        new_ii = M[i][i] + 2 * sign * M[i][j] + M[j][j]
        for k in range(n):
            M[i][k] += sign * M[j][k]
        for k in range(n):
            M[k][i] += sign * M[k][j]
        M[i][i] = new_ii
        return IntSymForm(M)

    def flip(self, i: int) -> "IntSymForm":
        """Negate basis vector i (a congruence by a diagonal sign matrix)."""
        n = self._n
        if not (0 <= i < n):
            raise IndexError("flip index out of range")
        M = [list(r) for r in self._rows]
        for k in range(n):
            M[i][k] = -M[i][k]
        for k in range(n):
            M[k][i] = -M[k][i]
        return IntSymForm(M)

    def congruent_by(self, P) -> "IntSymForm":
        """P^T F P for an integer matrix P given as rows."""
        n = self._n
        P = [list(r) for r in P]
        FP = [[sum(self._rows[i][k] * P[k][j] for k in range(n)) for j in range(n)]
              for i in range(n)]
        out = [[sum(P[k][i] * FP[k][j] for k in range(n)) for j in range(n)]
               for i in range(n)]
        return IntSymForm(out)

    def permuted(self, perm) -> "IntSymForm":
        """Simultaneous row/column permutation; perm[i] = old index at slot i."""
        return IntSymForm([[self._rows[perm[i]][perm[j]] for j in range(self._n)]
                           for i in range(self._n)])

    def quotient_by_kernel(self) -> "IntSymForm":
        """Gram matrix of the induced form on a complement of the radical.

        The radical is primitive, so the form splits as (zero) + (quotient)
        and two forms with one-dimensional radical are congruent iff their
        quotients are.  Basis of the complement: the standard basis vectors
        at non-pivot coordinates of the kernel vectors.
        """
        kernel = self.kernel_basis()
        if not kernel:
            return self
        drop = set()
        for v in kernel:
            for pos in range(len(v) - 1, -1, -1):
                if abs(v[pos]) == 1 and pos not in drop:
                    drop.add(pos)
                    break
            else:
                raise ValueError("kernel vector without unit coordinate")
        keep = [i for i in range(self._n) if i not in drop]
        return IntSymForm([[self._rows[i][j] for j in keep] for i in keep])

    # -- serialization -------------------------------------------------------

    def to_text(self) -> str:
        lines = [str(self._n)]
        for r in self._rows:
            lines.append(" ".join(str(x) for x in r))
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "IntSymForm":
        toks = [ln for ln in (ln.strip() for ln in text.splitlines())
                if ln and not ln.startswith("#")]
        if not toks:
            raise ValueError("empty form file")
        n = int(toks[0])
        rows = [[int(x) for x in ln.split()] for ln in toks[1:1 + n]]
        if len(rows) != n:
            raise ValueError("row count mismatch")
        return IntSymForm(rows)

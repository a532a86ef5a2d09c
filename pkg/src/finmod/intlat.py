"""Exact integer linear algebra: Smith and Hermite normal forms, homogeneous
congruence systems, and canonical representations of subgroups of finite
abelian groups.

All arithmetic uses Python's arbitrary-precision integers; intermediate
entries of a Smith reduction can exceed machine words even for small inputs.
Every routine is deterministic (fixed pivot rules, no randomization), so equal
inputs always produce bit-identical outputs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import lcm, prod


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix, entries stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimension")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows, cols=None) -> "IntMatrix":
        rows = [tuple(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntMatrix":
        return cls(m, n, (0,) * (m * n))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            [[self.at(i, j) for i in range(self.rows)] for j in range(self.cols)],
            self.rows,
        )

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            out.append(
                [
                    sum(ri[k] * other.at(k, j) for k in range(self.cols))
                    for j in range(other.cols)
                ]
            )
        return IntMatrix.from_rows(out, other.cols)

    def is_diagonal(self) -> bool:
        return all(
            self.at(i, j) == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )


@dataclass(frozen=True)
class SnfDecomposition:
    """U * A * V = D with U, V unimodular and D in Smith normal form."""

    U: IntMatrix
    D: IntMatrix
    V: IntMatrix


def _identity_rows(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _snf_with_transforms(a_rows):
    """Smith reduction on a list-of-rows matrix.

    Returns (U, D, V, Vinv) as lists of rows with U*A*V = D.  Vinv is the
    exact inverse of V, tracked alongside so callers can translate between
    original and Smith coordinates without a separate inversion.
    """
    m = len(a_rows)
    n = len(a_rows[0]) if m else 0
    D = [list(r) for r in a_rows]
    U = _identity_rows(m)
    V = _identity_rows(n)
    Vinv = _identity_rows(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def negate_row(i):
        D[i] = [-x for x in D[i]]
        U[i] = [-x for x in U[i]]

    def sub_row(i, s, q):
        # row i -= q * row s
        Di, Ds = D[i], D[s]
        for k in range(n):
            Di[k] -= q * Ds[k]
        Ui, Us = U[i], U[s]
        for k in range(m):
            Ui[k] -= q * Us[k]

    def add_row(i, j):
        Di, Dj = D[i], D[j]
        for k in range(n):
            Di[k] += Dj[k]
        Ui, Uj = U[i], U[j]
        for k in range(m):
            Ui[k] += Uj[k]

    def swap_cols(i, j):
        for r in D:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def sub_col(j, s, q):
        # col j -= q * col s;  Vinv row s += q * Vinv row j
        for r in D:
            r[j] -= q * r[s]
        for r in V:
            r[j] -= q * r[s]
        Vs, Vj = Vinv[s], Vinv[j]
        for k in range(n):
            Vs[k] += q * Vj[k]

    for s in range(min(m, n)):
        while True:
            pivot = None
            for i in range(s, m):
                Di = D[i]
                for j in range(s, n):
                    a = Di[j]
                    if a != 0:
                        key = (abs(a), i, j)
                        if pivot is None or key < pivot:
                            pivot = key
            if pivot is None:
                break
            _, pi, pj = pivot
            if pi != s:
                swap_rows(s, pi)
            if pj != s:
                swap_cols(s, pj)
            if D[s][s] < 0:
                negate_row(s)
            p = D[s][s]
            for i in range(s + 1, m):
                if D[i][s]:
                    sub_row(i, s, D[i][s] // p)
            for j in range(s + 1, n):
                if D[s][j]:
                    sub_col(j, s, D[s][j] // p)
            if any(D[i][s] for i in range(s + 1, m)) or any(
                D[s][j] for j in range(s + 1, n)
            ):
                continue
            bad = None
            for i in range(s + 1, m):
                Di = D[i]
                for j in range(s + 1, n):
                    if Di[j] % p != 0:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(s, bad)
        if all(D[s][j] == 0 for j in range(s, n)):
            break
    return U, D, V, Vinv


def snf(a: IntMatrix) -> SnfDecomposition:
    """Smith normal form with unimodular transforms: U * A * V = D.

    D is diagonal with nonnegative entries satisfying D[i,i] | D[i+1,i+1].

    >>> dec = snf(IntMatrix.from_rows([[2, 4], [6, 8]]))
    >>> [dec.D.at(0, 0), dec.D.at(1, 1)]
    [2, 4]
    """
    U, D, V, _ = _snf_with_transforms(a.to_rows())
    return SnfDecomposition(
        IntMatrix.from_rows(U, a.rows),
        IntMatrix.from_rows(D, a.cols),
        IntMatrix.from_rows(V, a.cols),
    )


def integer_kernel(a_rows, ncols) -> list[list[int]]:
    """Basis (as rows) of {x in Z^n : A x = 0} for A given as list of rows."""
    m = len(a_rows)
    if m == 0:
        return _identity_rows(ncols)
    _, D, V, _ = _snf_with_transforms(a_rows)
    basis = []
    for j in range(ncols):
        dj = D[j][j] if j < m else 0
        if dj == 0:
            basis.append([V[i][j] for i in range(ncols)])
    return basis


def hnf_rows(rows, ncols) -> list[list[int]]:
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Output rows are in echelon form with strictly increasing pivot columns,
    positive pivots, and entries above each pivot reduced into [0, pivot).
    The result is the unique such basis of the row lattice.
    """
    pool = [list(r) for r in rows if any(r)]
    pivots = []
    for col in range(ncols):
        while True:
            nz = [r for r in pool if r[col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            pc = p[col]
            for r in nz[1:]:
                q = r[col] // pc
                if q:
                    for k in range(col, ncols):
                        r[k] -= q * p[k]
            pool = [r for r in pool if any(r)]
        nz = [r for r in pool if r[col] != 0]
        if nz:
            p = nz[0]
            pool.remove(p)
            if p[col] < 0:
                p = [-x for x in p]
            pivots.append((col, p))
    for idx in range(len(pivots)):
        col, p = pivots[idx]
        pc = p[col]
        for k in range(idx):
            r = pivots[k][1]
            q = r[col] // pc
            if q:
                for t in range(col, ncols):
                    r[t] -= q * p[t]
    return [p for _, p in pivots]


def hnf_canonical(generators: IntMatrix, moduli) -> IntMatrix:
    """Canonical basis of the subgroup of prod Z/moduli[j] that the rows of
    ``generators`` generate.

    The moduli relations are adjoined before reduction, so equal subgroups
    always yield bit-identical output.  Rows representing the zero element
    are dropped; the zero subgroup has an empty basis.
    """
    moduli = tuple(moduli)
    full = _full_hnf(generators.to_rows(), moduli)
    basis = _reduced_basis(full, moduli)
    return IntMatrix.from_rows(basis, len(moduli))


def _full_hnf(gen_rows, moduli):
    n = len(moduli)
    rows = [[x % moduli[j] for j, x in enumerate(r)] for r in gen_rows]
    for j, mj in enumerate(moduli):
        rel = [0] * n
        rel[j] = mj
        rows.append(rel)
    full = hnf_rows(rows, n)
    if len(full) != n:  # the moduli rows force full rank
        raise AssertionError("modular lattice not full rank")
    return full


def _reduced_basis(full, moduli):
    basis = []
    for r in full:
        red = tuple(x % m for x, m in zip(r, moduli))
        if any(red):
            basis.append(red)
    return basis


class CanonicalSubgroup:
    """A subgroup of prod Z/moduli[j] in canonical Hermite form.

    Two instances represent the same subgroup iff they compare equal; the
    canonical form makes equality a tuple comparison.
    """

    __slots__ = ("moduli", "full_hnf", "basis", "order", "_smith")

    def __init__(self, moduli, generator_rows):
        moduli = tuple(moduli)
        for m in moduli:
            if m < 1:
                raise ValueError("moduli must be positive")
        full = _full_hnf(list(generator_rows), moduli)
        self.moduli = moduli
        self.full_hnf = tuple(tuple(r) for r in full)
        self.basis = tuple(_reduced_basis(full, moduli))
        self.order = prod(moduli) // prod(full[i][i] for i in range(len(moduli)))
        self._smith = None

    def __eq__(self, other):
        if not isinstance(other, CanonicalSubgroup):
            return NotImplemented
        return self.moduli == other.moduli and self.full_hnf == other.full_hnf

    def __hash__(self):
        return hash((self.moduli, self.full_hnf))

    def __repr__(self):
        return f"CanonicalSubgroup(order={self.order}, basis={list(self.basis)})"

    def express(self, vec):
        """Integer coordinates of ``vec`` w.r.t. the full HNF rows, or None
        when the (integer lift of the) vector is not in the lattice."""
        n = len(self.moduli)
        v = list(vec)
        x = [0] * n
        for i in range(n):
            h = self.full_hnf[i]
            if v[i] % h[i] != 0:
                return None
            q = v[i] // h[i]
            x[i] = q
            if q:
                for k in range(i, n):
                    v[k] -= q * h[k]
        return x

    def contains(self, vec) -> bool:
        return self.express(vec) is not None

    def contains_subgroup(self, other: "CanonicalSubgroup") -> bool:
        return all(self.contains(r) for r in other.basis)

    def sum(self, other: "CanonicalSubgroup") -> "CanonicalSubgroup":
        if self.moduli != other.moduli:
            raise ValueError("ambient mismatch")
        return CanonicalSubgroup(self.moduli, list(self.basis) + list(other.basis))

    def intersect(self, other: "CanonicalSubgroup") -> "CanonicalSubgroup":
        if self.moduli != other.moduli:
            raise ValueError("ambient mismatch")
        n = len(self.moduli)
        # Solve u*H1 = v*H2 over Z; the matched values generate the meet.
        sys_rows = [
            [self.full_hnf[i][j] for i in range(n)]
            + [-other.full_hnf[i][j] for i in range(n)]
            for j in range(n)
        ]
        gens = []
        for k in integer_kernel(sys_rows, 2 * n):
            u = k[:n]
            vec = [
                sum(u[i] * self.full_hnf[i][j] for i in range(n)) % self.moduli[j]
                for j in range(n)
            ]
            gens.append(vec)
        return CanonicalSubgroup(self.moduli, gens)

    def _smith_data(self):
        if self._smith is None:
            n = len(self.moduli)
            rel_rows = _integer_congruence_lattice(
                [[self.full_hnf[i][j] for i in range(n)] for j in range(n)],
                self.moduli,
                n,
            )
            _, D, V, Vinv = _snf_with_transforms(rel_rows)
            kept = [i for i in range(n) if D[i][i] > 1]
            invariants = tuple(D[i][i] for i in kept)
            gens = []
            for i in kept:
                coeffs = Vinv[i]
                vec = tuple(
                    sum(coeffs[k] * self.full_hnf[k][j] for k in range(n))
                    % self.moduli[j]
                    for j in range(n)
                )
                gens.append(vec)
            self._smith = (invariants, tuple(gens), kept, V)
        return self._smith

    @property
    def invariants(self) -> tuple[int, ...]:
        """Abelian invariant factors d_1 | d_2 | ... (trivial factors dropped)."""
        return self._smith_data()[0]

    @property
    def smith_gens(self) -> tuple[tuple[int, ...], ...]:
        """Generators realizing the invariant-factor decomposition."""
        return self._smith_data()[1]

    def coords(self, vec):
        """Coordinates of a member in the invariant-factor decomposition."""
        invariants, _, kept, V = self._smith_data()
        x = self.express(vec)
        if x is None:
            raise ValueError("vector not in subgroup")
        n = len(self.moduli)
        return tuple(
            sum(x[i] * V[i][k] for i in range(n)) % d for k, d in zip(kept, invariants)
        )

    def from_coords(self, coords):
        invariants, gens, _, _ = self._smith_data()
        n = len(self.moduli)
        out = [0] * n
        for c, g in zip(coords, gens):
            for j in range(n):
                out[j] += c * g[j]
        return tuple(x % m for x, m in zip(out, self.moduli))

    def elements(self):
        """Iterate all members, deterministically."""
        invariants = self.invariants
        for coords in itertools.product(*[range(d) for d in invariants]):
            yield self.from_coords(coords)


@dataclass(frozen=True)
class CongruenceSolutionSet:
    """Solutions of a rowwise-modular homogeneous system inside a finite
    product of cyclic groups."""

    particular: tuple[int, ...] | None
    lattice_basis: IntMatrix
    moduli: tuple[int, ...]
    subgroup: CanonicalSubgroup = field(compare=False, repr=False)


def _integer_congruence_lattice(a_rows, row_moduli, ncols):
    """HNF basis of {x in Z^n : A x = 0 (mod row_moduli, rowwise)}.

    The system is first replaced by the canonical basis of the row subgroup
    modulo the lcm of the moduli, which keeps the Smith reduction small even
    when the caller supplies thousands of redundant rows.
    """
    if ncols == 0:
        return []
    if not a_rows:
        return _identity_rows(ncols)
    big = 1
    for m in row_moduli:
        big = lcm(big, m)
    seen = set()
    lifted = []
    for row, m in zip(a_rows, row_moduli):
        f = big // m
        r = tuple((x * f) % big for x in row)
        if any(r) and r not in seen:
            seen.add(r)
            lifted.append(list(r))
    if not lifted:
        return _identity_rows(ncols)
    for j in range(ncols):
        rel = [0] * ncols
        rel[j] = big
        lifted.append(rel)
    b = hnf_rows(lifted, ncols)
    m2 = len(b)
    aug = [list(b[i]) + [big if j == i else 0 for j in range(m2)] for i in range(m2)]
    kern = integer_kernel(aug, ncols + m2)
    proj = [k[:ncols] for k in kern]
    return hnf_rows(proj, ncols)


def solve_homogeneous_congruences(
    a: IntMatrix, row_moduli, col_moduli
) -> CongruenceSolutionSet:
    """Generating set for {x : A x = 0 (mod row_moduli, rowwise)} inside
    prod Z/col_moduli[j].

    The system must be compatible with the column moduli (each col_moduli[j]
    * e_j must itself solve the system), so that the solution set is a
    well-defined subgroup of the ambient product; otherwise ValueError.
    """
    row_moduli = tuple(row_moduli)
    col_moduli = tuple(col_moduli)
    if a.rows != len(row_moduli):
        raise ValueError("row count does not match moduli")
    if a.cols != len(col_moduli):
        raise ValueError("column count does not match moduli")
    for m in row_moduli:
        if m < 1:
            raise ValueError("moduli must be positive")
    for i in range(a.rows):
        for j in range(a.cols):
            if (a.at(i, j) * col_moduli[j]) % row_moduli[i] != 0:
                raise ValueError(
                    f"system is not defined modulo column modulus at ({i},{j})"
                )
    lattice = _integer_congruence_lattice(a.to_rows(), row_moduli, a.cols)
    sub = CanonicalSubgroup(col_moduli, lattice)
    return CongruenceSolutionSet(
        particular=None,
        lattice_basis=IntMatrix.from_rows([list(r) for r in sub.basis], a.cols),
        moduli=col_moduli,
        subgroup=sub,
    )


@dataclass(frozen=True)
class PresentationNF:
    """Invariant-factor normal form of Z^n modulo a relation lattice.

    ``projection`` maps old coordinates to normal-form coordinates and
    ``section`` picks an integer representative for each normal-form
    generator; projection @ section is the identity exactly.
    """

    invariants: tuple[int, ...]
    projection: tuple[tuple[int, ...], ...]  # len(invariants) x n
    section: tuple[tuple[int, ...], ...]  # n x len(invariants)


def finite_presentation(relation_rows, ncols) -> PresentationNF:
    """Normal form of the quotient Z^ncols / rowspan(relation_rows).

    The quotient must be finite (the relation lattice has full rank).
    """
    rows = [list(r) for r in relation_rows]
    _, D, V, Vinv = _snf_with_transforms(rows)
    for i in range(ncols):
        if i >= len(rows) or D[i][i] == 0:
            raise ValueError("relation lattice is not full rank; quotient infinite")
    kept = [i for i in range(ncols) if D[i][i] > 1]
    invariants = tuple(D[i][i] for i in kept)
    projection = tuple(
        tuple(V[j][k] % D[k][k] for j in range(ncols)) for k in kept
    )
    section = tuple(tuple(Vinv[k][j] for k in kept) for j in range(ncols))
    return PresentationNF(invariants, projection, section)

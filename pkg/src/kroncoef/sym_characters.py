"""Symmetric group character theory: the brute-force oracle.

Everything here is exact integer/rational arithmetic: characters by
border-strip recursion, Kronecker coefficients as class-weighted triple
products, induction multiplicities by summing over class pairs, and explicit
Specht module matrices on the standard polytabloid basis.
"""

from __future__ import annotations

import json
import os
import threading
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .partitions import Partition, partitions_of

SPECHT_CAP_DEFAULT = 7


def specht_dim(lam: Partition) -> int:
    """Dimension of the Specht module (number of standard tableaux), by the
    hook length formula."""
    lam = Partition(lam)
    if not lam.parts:
        return 1
    conj = lam.conjugate().parts
    prod = 1
    for i, p in enumerate(lam.parts):
        for j in range(p):
            prod *= p - j + conj[j] - i - 1
    return factorial(lam.size) // prod


def character(lam: Partition, rho: Partition) -> int:
    """Irreducible character value chi^lam on the class of cycle type rho."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise ValueError(f"size mismatch: |{lam}| != |{rho}|")
    return _char(lam.parts, rho.parts)


@lru_cache(maxsize=None)
def _char(lam: tuple, rho: tuple) -> int:
    if not lam:
        return 1
    t, rest = rho[0], rho[1:]
    m = len(lam)
    beta = [lam[i] + (m - 1 - i) for i in range(m)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - t
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for c in beta if nb < c < b)
        newbeta = sorted((c for c in beta if c != b), reverse=True)
        newbeta.append(nb)
        newbeta.sort(reverse=True)
        newlam = tuple(c - (m - 1 - i) for i, c in enumerate(newbeta))
        while newlam and newlam[-1] == 0:
            newlam = newlam[:-1]
        total += (-1) ** height * _char(newlam, rest)
    return total


def class_size(rho: Partition) -> int:
    """Number of permutations of cycle type rho: |rho|! / prod k^{m_k} m_k!."""
    rho = Partition(rho)
    z = 1
    mult: dict[int, int] = {}
    for part in rho.parts:
        mult[part] = mult.get(part, 0) + 1
    for k, m in mult.items():
        z *= k**m * factorial(m)
    return factorial(rho.size) // z


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[tuple[tuple, int], ...]:
    return tuple((rho.parts, class_size(rho)) for rho in partitions_of(n))


class CharacterTable:
    """Exact character table of the symmetric group of degree n."""

    def __init__(self, n: int):
        self.n = n
        self.partitions = partitions_of(n)
        self.class_sizes = {rho: class_size(rho) for rho in self.partitions}
        self.values = {
            (lam, rho): character(lam, rho)
            for lam in self.partitions
            for rho in self.partitions
        }

    def value(self, lam: Partition, rho: Partition) -> int:
        return self.values[(Partition(lam), Partition(rho))]

    def check_orthogonality(self) -> None:
        """Raise if either orthogonality relation fails."""
        nfact = factorial(self.n)
        for lam in self.partitions:
            for mu in self.partitions:
                s = sum(
                    self.class_sizes[rho] * self.values[(lam, rho)] * self.values[(mu, rho)]
                    for rho in self.partitions
                )
                if s != (nfact if lam == mu else 0):
                    raise ArithmeticError(f"row orthogonality fails at ({lam}, {mu})")
        for rho in self.partitions:
            for tau in self.partitions:
                s = sum(
                    self.values[(lam, rho)] * self.values[(lam, tau)]
                    for lam in self.partitions
                )
                expect = nfact // self.class_sizes[rho] if rho == tau else 0
                if s != expect:
                    raise ArithmeticError(f"column orthogonality fails at ({rho}, {tau})")

    def to_tsv(self) -> str:
        """Rows are Specht labels, columns are cycle types."""
        header = "\t".join(["lambda\\rho"] + [str(r) for r in self.partitions])
        lines = [header]
        for lam in self.partitions:
            row = [str(lam)] + [str(self.values[(lam, rho)]) for rho in self.partitions]
            lines.append("\t".join(row))
        return "\n".join(lines) + "\n"


_tables: dict[int, CharacterTable] = {}
_tables_lock = threading.Lock()


def character_table(n: int) -> CharacterTable:
    """Build (once) and return the character table for degree n.

    Concurrent callers observe a single coherent table.  If the environment
    variable KRONCOEF_CACHE_DIR is set, values are persisted there as JSON.
    """
    with _tables_lock:
        table = _tables.get(n)
        if table is None:
            table = _load_cached_table(n)
            if table is None:
                table = CharacterTable(n)
                _store_cached_table(table)
            _tables[n] = table
        return table


def _cache_path(n: int) -> str | None:
    root = os.environ.get("KRONCOEF_CACHE_DIR")
    if not root:
        return None
    return os.path.join(root, f"chartable_{n}.json")


def _load_cached_table(n: int) -> CharacterTable | None:
    path = _cache_path(n)
    if path is None or not os.path.exists(path):
        return None
    with open(path) as fh:
        data = json.load(fh)
    table = CharacterTable.__new__(CharacterTable)
    table.n = n
    table.partitions = partitions_of(n)
    table.class_sizes = {rho: class_size(rho) for rho in table.partitions}
    table.values = {
        (Partition.parse(lam), Partition.parse(rho)): v
        for lam, rho, v in data["values"]
    }
    return table


def _store_cached_table(table: CharacterTable) -> None:
    path = _cache_path(table.n)
    if path is None:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    data = {"values": [[str(l), str(r), v] for (l, r), v in table.values.items()]}
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(data, fh)
    os.replace(tmp, path)


def kron_oracle(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Kronecker coefficient g^nu_{lam,mu} for three partitions of the same n,
    as the class-weighted scalar product of characters."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    n = lam.size
    if mu.size != n or nu.size != n:
        raise ValueError("kron_oracle needs three partitions of the same size")
    total = 0
    for rho, size in _classes(n):
        total += size * _char(lam.parts, rho) * _char(mu.parts, rho) * _char(nu.parts, rho)
    q, r = divmod(total, factorial(n) if n else 1)
    if r:
        raise ArithmeticError(f"non-integral character sum for ({lam},{mu},{nu})")
    return q


def induction_mult(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of the outer product piece S(lam) x S(mu) in the
    restriction of S(nu) to the corresponding Young subgroup."""
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    r1, r2 = lam.size, mu.size
    if nu.size != r1 + r2:
        raise ValueError("induction_mult needs |nu| = |lam| + |mu|")
    total = 0
    for rho1, s1 in _classes(r1):
        c1 = _char(lam.parts, rho1)
        if not c1:
            continue
        for rho2, s2 in _classes(r2):
            c2 = _char(mu.parts, rho2)
            if not c2:
                continue
            joint = tuple(sorted(rho1 + rho2, reverse=True))
            total += s1 * s2 * c1 * c2 * _char(nu.parts, joint)
    q, rem = divmod(total, factorial(r1) * factorial(r2))
    if rem:
        raise ArithmeticError("non-integral induction sum")
    return q


# ---------------------------------------------------------------------------
# Specht modules on the standard polytabloid basis
# ---------------------------------------------------------------------------


def standard_tableaux(shape: Partition) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All standard Young tableaux of the given shape, entries 1..|shape|."""
    shape = Partition(shape)
    out: list = []

    def grow(rows: list[list[int]], value: int):
        if value > shape.size:
            out.append(tuple(tuple(r) for r in rows))
            return
        for i in range(len(shape)):
            filled = len(rows[i])
            above = len(rows[i - 1]) if i else None
            if filled < shape.row(i + 1) and (above is None or filled < above):
                rows[i].append(value)
                grow(rows, value + 1)
                rows[i].pop()

    grow([[] for _ in shape.parts], 1)
    return tuple(out)


def _perm_parity(seq: tuple, base: tuple) -> int:
    """+1/-1 parity of the rearrangement taking base to seq."""
    pos = {v: i for i, v in enumerate(base)}
    idx = [pos[v] for v in seq]
    inv = sum(1 for i in range(len(idx)) for j in range(i + 1, len(idx)) if idx[i] > idx[j])
    return -1 if inv % 2 else 1


def _tabloid(rows) -> tuple:
    return tuple(tuple(sorted(r)) for r in rows)


def _polytabloid(rows: tuple[tuple[int, ...], ...]) -> dict[tuple, int]:
    """Signed sum of tabloids over the column group of the tableau."""
    ncols = len(rows[0]) if rows else 0
    cols = [tuple(row[j] for row in rows if j < len(row)) for j in range(ncols)]
    vec: dict[tuple, int] = {}
    for images in _column_perms(cols):
        sign = 1
        mapping = {}
        for col, img in zip(cols, images):
            sign *= _perm_parity(img, col)
            mapping.update(zip(col, img))
        tab = _tabloid(tuple(mapping[v] for v in row) for row in rows)
        vec[tab] = vec.get(tab, 0) + sign
        if vec[tab] == 0:
            del vec[tab]
    return vec


def _column_perms(cols):
    if not cols:
        yield ()
        return
    for head in permutations(cols[0]):
        for rest in _column_perms(cols[1:]):
            yield (head,) + rest


class SpechtModel:
    """Specht module with explicit matrices for the adjacent transpositions.

    The basis is the set of standard polytabloids; matrices are exact and
    integral.  Validated through the Coxeter relations and trace identities
    rather than any particular basis convention.
    """

    def __init__(self, nu: Partition):
        self.nu = Partition(nu)
        self.k = self.nu.size
        self.tableaux = standard_tableaux(self.nu)
        self.dim = len(self.tableaux)
        self.basis_vectors = [_polytabloid(t) for t in self.tableaux]
        self._solver = _ExpansionSolver(self.basis_vectors)
        self.generators = [self._generator_matrix(i) for i in range(1, self.k)]
        self._matrix_cache: dict[tuple, tuple] = {}

    def _generator_matrix(self, i: int) -> tuple:
        cols = []
        for t in self.tableaux:
            swapped = tuple(
                tuple(i + 1 if v == i else i if v == i + 1 else v for v in row)
                for row in t
            )
            cols.append(self._solver.solve(_polytabloid(swapped)))
        return tuple(tuple(cols[j][a] for j in range(self.dim)) for a in range(self.dim))

    def matrix_of(self, sigma: tuple[int, ...]) -> tuple:
        """Matrix of the permutation given in one-line notation (sigma[j-1] is
        the image of j)."""
        sigma = tuple(sigma)
        if len(sigma) != self.k or sorted(sigma) != list(range(1, self.k + 1)):
            raise ValueError(f"not a permutation of 1..{self.k}: {sigma}")
        cached = self._matrix_cache.get(sigma)
        if cached is not None:
            return cached
        word = []
        w = list(sigma)
        while True:
            desc = next((i for i in range(len(w) - 1) if w[i] > w[i + 1]), None)
            if desc is None:
                break
            w[desc], w[desc + 1] = w[desc + 1], w[desc]
            word.append(desc + 1)
        mat = _identity_matrix(self.dim)
        for i in reversed(word):
            mat = _mat_mul(mat, self.generators[i - 1])
        self._matrix_cache[sigma] = mat
        return mat

    def invariant_form(self) -> tuple:
        """Gram matrix of the basis under the tabloid inner product."""
        g = []
        for u in self.basis_vectors:
            g.append(tuple(sum(c * v.get(tab, 0) for tab, c in u.items()) for v in self.basis_vectors))
        return tuple(g)


class _ExpansionSolver:
    """Expands tabloid vectors in a fixed independent set of tabloid vectors.

    Picks an invertible square subsystem once; each solve is a
    back-substitution plus a full consistency check.
    """

    def __init__(self, basis: list[dict]):
        self.basis = basis
        self.dim = len(basis)
        tabs = sorted({t for v in basis for t in v})
        self.tab_index = {t: i for i, t in enumerate(tabs)}
        rows = [[Fraction(v.get(t, 0)) for v in basis] for t in tabs]
        pivot_rows = _independent_rows(rows, self.dim)
        self.pivot_tabs = [tabs[i] for i in pivot_rows]
        square = [rows[i] for i in pivot_rows]
        self.inverse = _mat_inverse(square)

    def solve(self, vec: dict) -> tuple:
        rhs = [Fraction(vec.get(t, 0)) for t in self.pivot_tabs]
        x = [sum(self.inverse[i][j] * rhs[j] for j in range(self.dim)) for i in range(self.dim)]
        # solution must reproduce vec exactly on every tabloid
        check: dict[tuple, Fraction] = {}
        for coeff, bvec in zip(x, self.basis):
            if coeff:
                for t, c in bvec.items():
                    check[t] = check.get(t, Fraction(0)) + coeff * c
        reduced = {t: c for t, c in check.items() if c}
        if reduced != {t: Fraction(c) for t, c in vec.items() if c}:
            raise ArithmeticError("tabloid vector outside the polytabloid span")
        out = []
        for c in x:
            if c.denominator != 1:
                raise ArithmeticError("non-integral polytabloid expansion")
            out.append(int(c))
        return tuple(out)


def _independent_rows(rows: list[list[Fraction]], need: int) -> list[int]:
    work = [list(r) for r in rows]
    chosen: list[int] = []
    col = 0
    used = [False] * len(rows)
    while col < need:
        pivot = next(
            (i for i in range(len(work)) if not used[i] and work[i][col] != 0), None
        )
        if pivot is None:
            raise ArithmeticError("polytabloid basis is singular")
        used[pivot] = True
        chosen.append(pivot)
        inv = 1 / work[pivot][col]
        work[pivot] = [x * inv for x in work[pivot]]
        for i in range(len(work)):
            if i != pivot and work[i][col] != 0:
                f = work[i][col]
                work[i] = [a - f * b for a, b in zip(work[i], work[pivot])]
        col += 1
    return chosen


def _mat_inverse(m: list[list[Fraction]]) -> list[list[Fraction]]:
    k = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(k)] for i, row in enumerate(m)]
    for col in range(k):
        pivot = next(i for i in range(col, k) if aug[i][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(k):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[col])]
    return [row[k:] for row in aug]


def _identity_matrix(k: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(k)) for i in range(k))


def _mat_mul(a, b):
    n, m = len(a), len(b[0]) if b else 0
    inner = len(b)
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(inner)) for j in range(m))
        for i in range(n)
    )


@lru_cache(maxsize=None)
def _specht_model_cached(parts: tuple) -> SpechtModel:
    return SpechtModel(Partition(parts))


def specht_model(nu: Partition, cap: int = SPECHT_CAP_DEFAULT) -> SpechtModel:
    """Explicit Specht module for |nu| up to the desk-scale cap."""
    nu = Partition(nu)
    if nu.size > cap:
        raise ValueError(f"|{nu}| exceeds the Specht model cap {cap}")
    return _specht_model_cached(nu.parts)


def cycle_type(sigma: tuple[int, ...]) -> Partition:
    """Cycle type of a permutation in one-line notation."""
    k = len(sigma)
    seen = [False] * (k + 1)
    parts = []
    for start in range(1, k + 1):
        if seen[start]:
            continue
        length = 0
        v = start
        while not seen[v]:
            seen[v] = True
            v = sigma[v - 1]
            length += 1
        parts.append(length)
    return Partition(sorted(parts, reverse=True))

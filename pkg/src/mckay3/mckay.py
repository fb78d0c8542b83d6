"""McKay quivers and generalized Cartan matrices over exact arithmetic.

The quiver of a group with character table gamma_1..gamma_r against a chosen
representation pi has adjacency m[i][j] = <chi_pi * gamma_i, gamma_j>, the
multiplicity of gamma_j in pi tensor gamma_i.  From it we form B = n*I - M
(n the dimension of pi) and the generalized Cartan matrix A = B + B^T, and
check the structural facts exactly: A is positive semi-definite, the
dimension vector spans the kernel, every table column is an eigenvector of M,
and conjugating pi transposes the quiver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chartab import CharacterTable, decompose_product
from .exactnum import Cyclotomic


class NotSymmetric(ValueError):
    """Positive semidefiniteness is only tested for symmetric matrices."""


@dataclass(frozen=True)
class Quiver:
    """Weighted digraph on the irreducible characters of a group."""

    dims: tuple[int, ...]
    matrix: tuple[tuple[int, ...], ...]
    rep_dim: int = 3

    @property
    def count(self) -> int:
        return len(self.dims)


def adjacency(table: CharacterTable, chi=None) -> Quiver:
    """Quiver of the table against the class function chi.

    chi defaults to the trace of the stored class representatives, i.e. the
    natural (defining) representation of the matrix group.
    """
    if chi is None:
        if table.class_reps is None:
            raise ValueError("table has no class representatives; pass chi")
        chi = tuple(m.trace() for m in table.class_reps)
    m = decompose_product(table, chi)
    n = chi[0].try_rational()
    if n is None or n.denominator != 1:
        raise ValueError("chi(identity) must be a positive integer")
    return Quiver(
        dims=table.dims,
        matrix=tuple(tuple(row) for row in m),
        rep_dim=int(n),
    )


def pre_cartan(quiver: Quiver) -> tuple[tuple[int, ...], ...]:
    """B = n*I - M."""
    n = quiver.rep_dim
    return tuple(
        tuple((n if i == j else 0) - quiver.matrix[i][j] for j in range(quiver.count))
        for i in range(quiver.count)
    )


def gen_cartan(b) -> tuple[tuple[int, ...], ...]:
    """Generalized Cartan matrix A = B + B^T."""
    r = len(b)
    return tuple(tuple(b[i][j] + b[j][i] for j in range(r)) for i in range(r))


def char_poly(mat) -> tuple[int, ...]:
    """Characteristic polynomial det(xI - mat), coefficients descending.

    Faddeev-LeVerrier over the integers; every division is exact and is
    asserted to be so.
    """
    n = len(mat)
    work = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # M_0 = I
    coeffs = [1]
    for k in range(1, n + 1):
        prod = [
            [sum(mat[i][t] * work[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(prod[i][i] for i in range(n))
        q, rem = divmod(-tr, k)
        assert rem == 0, "Faddeev-LeVerrier division must be exact"
        coeffs.append(q)
        work = [
            [prod[i][j] + (q if i == j else 0) for j in range(n)] for i in range(n)
        ]
    return tuple(coeffs)


@dataclass(frozen=True)
class PsdReport:
    is_psd: bool
    char_poly: tuple[int, ...]
    failing_index: int | None


def psd_check(mat) -> PsdReport:
    """Exact positive semidefiniteness for a symmetric integer matrix.

    A symmetric matrix has real spectrum, and det(xI - A) = sum_k (-1)^k
    e_k x^(r-k) with e_k the elementary symmetric functions of the
    eigenvalues; all eigenvalues are >= 0 exactly when every e_k >= 0.
    """
    r = len(mat)
    for i in range(r):
        for j in range(i + 1, r):
            if mat[i][j] != mat[j][i]:
                raise NotSymmetric(f"entry ({i},{j}) != ({j},{i})")
    poly = char_poly(mat)
    for k in range(1, r + 1):
        e_k = poly[k] if k % 2 == 0 else -poly[k]
        if e_k < 0:
            return PsdReport(False, poly, k)
    return PsdReport(True, poly, None)


def kernel_delta(mat, vec) -> bool:
    """Does mat * vec vanish exactly?"""
    r = len(mat)
    return all(sum(mat[i][j] * vec[j] for j in range(r)) == 0 for i in range(r))


def eigenvector_check(table: CharacterTable, quiver: Quiver, chi) -> tuple[bool, ...]:
    """Per-class test that each table column p_k = (gamma_i(C_k))_i satisfies
    M p_k = chi(C_k) p_k exactly.

    Since B = n*I - M, this is the same as B p_k = (n - chi(C_k)) p_k.
    """
    from math import lcm

    target = lcm(table.conductor, max(v.conductor for v in chi))
    cols = [
        [table.values[i][k].promote(target) for i in range(table.count)]
        for k in range(table.count)
    ]
    chi_p = [v.promote(target) for v in chi]
    m = quiver.matrix
    r = quiver.count
    verdicts = []
    for k in range(r):
        p_k = cols[k]
        lam = chi_p[k]
        ok = True
        for i in range(r):
            total = Cyclotomic.rational(0, target)
            for j in range(r):
                if m[i][j]:
                    total = total + m[i][j] * p_k[j]
            if total != lam * p_k[i]:
                ok = False
                break
        verdicts.append(ok)
    return tuple(verdicts)


def dual_transpose_check(table: CharacterTable, quiver: Quiver, chi) -> bool:
    """Replacing pi by its dual must transpose the quiver."""
    dual = adjacency(table, tuple(v.conjugate() for v in chi))
    r = quiver.count
    return all(
        dual.matrix[i][j] == quiver.matrix[j][i] for i in range(r) for j in range(r)
    )


# ---------------------------------------------------------------------------
# isomorphism of labelled quivers


def quiver_iso(q1: Quiver, q2: Quiver) -> tuple[int, ...] | None:
    """A dimension-preserving digraph isomorphism q1 -> q2, or None.

    Returns a permutation p with q2.matrix[p[i]][p[j]] == q1.matrix[i][j]
    and q2.dims[p[i]] == q1.dims[i].  Deterministic: the search tries
    candidates in ascending vertex order.
    """
    n = q1.count
    if q2.count != n or sorted(q1.dims) != sorted(q2.dims):
        return None
    c1 = _refine_colors(q1)
    c2 = _refine_colors(q2)
    if sorted(c1) != sorted(c2):
        return None

    m1, m2 = q1.matrix, q2.matrix
    mapping = [-1] * n
    used = [False] * n

    def compatible(i: int, j: int) -> bool:
        if c1[i] != c2[j] or m1[i][i] != m2[j][j]:
            return False
        for i2 in range(n):
            j2 = mapping[i2]
            if j2 >= 0:
                if m1[i][i2] != m2[j][j2] or m1[i2][i] != m2[j2][j]:
                    return False
        return True

    order = sorted(range(n), key=lambda i: (c1.count(c1[i]), i))

    def search(pos: int) -> bool:
        if pos == n:
            return True
        i = order[pos]
        for j in range(n):
            if not used[j] and compatible(i, j):
                mapping[i] = j
                used[j] = True
                if search(pos + 1):
                    return True
                mapping[i] = -1
                used[j] = False
        return False

    if search(0):
        return tuple(mapping)
    return None


def _refine_colors(q: Quiver) -> list[int]:
    """Stable coloring refinement: start from dims, split by in/out profiles."""
    n = q.count
    m = q.matrix
    colors = list(q.dims)
    while True:
        sigs = []
        for i in range(n):
            out = sorted((m[i][j], colors[j]) for j in range(n) if m[i][j] and j != i)
            inn = sorted((m[j][i], colors[j]) for j in range(n) if m[j][i] and j != i)
            sigs.append((colors[i], m[i][i], tuple(out), tuple(inn)))
        canon = {s: idx for idx, s in enumerate(sorted(set(sigs)))}
        fresh = [canon[s] for s in sigs]
        if len(set(fresh)) == len(set(colors)):
            return fresh
        colors = fresh


# ---------------------------------------------------------------------------
# export


def export_dot(quiver: Quiver) -> str:
    """Graphviz source; opposite unit arrows are merged into undirected edges."""
    lines = ["digraph mckay {", "  node [shape=circle];"]
    for i, d in enumerate(quiver.dims):
        lines.append(f'  r{i} [label="r{i} ({d})"];')
    m = quiver.matrix
    n = quiver.count
    for i in range(n):
        if m[i][i]:
            label = f' [label="{m[i][i]}"]' if m[i][i] > 1 else ""
            lines.append(f"  r{i} -> r{i}{label};")
        for j in range(i + 1, n):
            both = min(m[i][j], m[j][i])
            if both:
                label = f', label="{both}"' if both > 1 else ""
                lines.append(f"  r{i} -> r{j} [dir=none{label}];")
            if m[i][j] > both:
                extra = m[i][j] - both
                label = f' [label="{extra}"]' if extra > 1 else ""
                lines.append(f"  r{i} -> r{j}{label};")
            if m[j][i] > both:
                extra = m[j][i] - both
                label = f' [label="{extra}"]' if extra > 1 else ""
                lines.append(f"  r{j} -> r{i}{label};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(quiver: Quiver) -> dict:
    nodes = [{"id": i, "dim": d} for i, d in enumerate(quiver.dims)]
    edges = [
        {"from": i, "to": j, "mult": quiver.matrix[i][j]}
        for i in range(quiver.count)
        for j in range(quiver.count)
        if quiver.matrix[i][j]
    ]
    return {"repDim": quiver.rep_dim, "nodes": nodes, "edges": edges}

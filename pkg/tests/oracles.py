"""Independent oracles used to freeze expected values.

These deliberately avoid the library's elimination and tensor code paths:
determinants by cofactor expansion, Kronecker products by the quadruple
loop, rank-one endomorphisms written out entry by entry.
"""

from azumaya.linalg import ExactMatrix


def cofactor_det(rows):
    """Determinant by first-row cofactor expansion on a list of lists."""
    n = len(rows)
    if n == 0:
        raise ValueError("empty matrix")
    if n == 1:
        return rows[0][0]
    total = None
    for j, head in enumerate(rows[0]):
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = head * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total


def loop_kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Kronecker product via the explicit quadruple loop."""
    rows = [
        [None] * (a.cols * b.cols) for _ in range(a.rows * b.rows)
    ]
    for i1 in range(a.rows):
        for j1 in range(a.cols):
            for i2 in range(b.rows):
                for j2 in range(b.cols):
                    rows[i1 * b.rows + i2][j1 * b.cols + j2] = (
                        a.entry(i1, j1) * b.entry(i2, j2)
                    )
    return ExactMatrix.from_rows(a.field, rows)


def rank_one_endo_vector(field, m_vec, eta_values):
    """Flattened matrix of l |-> eta(l) m, rows flat(out, in)."""
    m = len(m_vec)
    out = [field.zero] * (m * m)
    for i, x in enumerate(m_vec):
        if not x:
            continue
        for l, y in enumerate(eta_values):
            if y:
                out[i * m + l] = x * y
    return tuple(out)


def is_hopf_morphism(src, dst, t_matrix) -> bool:
    """Exhaustive check that a matrix is a morphism of Hopf algebras."""
    f = src.field
    d = src.dim
    for i in range(d):
        for j in range(d):
            lhs = t_matrix.apply(src.mult_basis(i, j))
            rhs = dst.multiply(t_matrix.column(i), t_matrix.column(j))
            if tuple(lhs) != tuple(rhs):
                return False
    if tuple(t_matrix.apply(src.unit)) != tuple(dst.unit):
        return False
    for h in range(d):
        lhs = {}
        for c, i, j in src.comult[h]:
            col_i = t_matrix.column(i)
            col_j = t_matrix.column(j)
            for a, x in enumerate(col_i):
                if not x:
                    continue
                for b, y in enumerate(col_j):
                    if y:
                        key = (a, b)
                        lhs[key] = lhs.get(key, f.zero) + c * x * y
        rhs = {}
        col_h = t_matrix.column(h)
        for k, x in enumerate(col_h):
            if not x:
                continue
            for c, a, b in dst.comult[k]:
                key = (a, b)
                rhs[key] = rhs.get(key, f.zero) + x * c
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = {k: v for k, v in rhs.items() if v}
        if lhs != rhs:
            return False
    for h in range(d):
        if dst.counit_of(t_matrix.column(h)) != src.counit[h]:
            return False
        lhs = t_matrix.apply(src.antipode.column(h))
        rhs = dst.antipode.apply(t_matrix.column(h))
        if tuple(lhs) != tuple(rhs):
            return False
    return True

"""Braided comodule algebras and the Azumaya decision machinery.

Everything here lives in the category of right H-comodules braided by a
dual quasitriangular form r.  The two canonical maps from twisted tensor
squares into endomorphism algebras decide Azumaya-ness; for cleft
extensions the same verdict comes from one d x d pairing matrix, and the
integral machinery below supplies explicit preimages as test oracles.

Bijectivity questions are settled by determinants of the assembled
matrices: finite dimension makes them rank questions, and exact
arithmetic makes the determinant a complete invariant for that.
"""

from __future__ import annotations

from dataclasses import dataclass

from .checks import CheckResult
from .comodule import (
    ComoduleAlgebraData,
    ComoduleData,
    check_comodule_algebra,
)
from .convolution import (
    Functional1,
    Functional2,
    conv_inverse2,
    convolve,
    doi_twist,
    twisted_opposite_algebra,
    twisted_rform,
)
from .fields import Scalar
from .hopf import HopfAlgebraData, antipode_inverse, dualize
from .linalg import ExactMatrix, LinAlgError, pair_index


class PreconditionFailure(ValueError):
    """An input failed the checker that guards an operation."""

    def __init__(self, message: str, results: list[CheckResult]):
        super().__init__(message)
        self.results = results


@dataclass(frozen=True)
class BraidedMapMatrix:
    """Matrix of one of the structural linear maps, with provenance tag."""

    matrix: ExactMatrix
    tag: str
    source_dim: int
    target_dim: int


# -- products and endomorphism algebras ------------------------------------


def smash_product(
    A: ComoduleAlgebraData,
    B: ComoduleAlgebraData,
    r: Functional2,
    verify: bool = False,
) -> ComoduleAlgebraData:
    """Braided tensor product algebra on A (x) B:
    (a # b)(c # d) = sum (a c0 # b0 d) r(c1 (x) b1)."""
    if A.hopf is not B.hopf and A.hopf != B.hopf:
        raise ValueError("smash factors must share the ambient Hopf algebra")
    H = A.hopf
    f = H.field
    ma, mb = A.dim, B.dim
    dim = ma * mb

    mult = [[None] * dim for _ in range(dim)]
    for a in range(ma):
        for b in range(mb):
            row_idx = pair_index(a, b, mb)
            for c in range(ma):
                for dd in range(mb):
                    out = [f.zero] * dim
                    for cc, c0, c1 in A.coaction[c]:
                        for cb, b0, b1 in B.coaction[b]:
                            s = r.value(c1, b1)
                            if not s:
                                continue
                            coeff = cc * cb * s
                            left = A.mult_basis(a, c0)
                            right = B.mult_basis(b0, dd)
                            for u, x in enumerate(left):
                                if not x:
                                    continue
                                for v, y in enumerate(right):
                                    if y:
                                        k = pair_index(u, v, mb)
                                        out[k] = out[k] + coeff * x * y
                    mult[row_idx][pair_index(c, dd, mb)] = tuple(out)

    coaction = []
    for a in range(ma):
        for b in range(mb):
            triples = []
            for ca, a0, a1 in A.coaction[a]:
                for cb, b0, b1 in B.coaction[b]:
                    coeff = ca * cb
                    prod = H.mult_basis(b1, a1)
                    for h, x in enumerate(prod):
                        if x:
                            triples.append((coeff * x, pair_index(a0, b0, mb), h))
            coaction.append(tuple(triples))

    unit = [f.zero] * dim
    for u, x in enumerate(A.unit):
        if not x:
            continue
        for v, y in enumerate(B.unit):
            if y:
                unit[pair_index(u, v, mb)] = x * y

    labels = tuple(
        f"{A.labels[a]}#{B.labels[b]}" for a in range(ma) for b in range(mb)
    )
    out = ComoduleAlgebraData(
        hopf=H,
        dim=dim,
        mult=tuple(tuple(row) for row in mult),
        unit=tuple(unit),
        coaction=tuple(coaction),
        labels=labels,
    )
    if verify:
        bad = [x for x in check_comodule_algebra(out, leg="op") if not x.passed]
        if bad:
            raise ValueError(f"smash product fails {bad[0].name} at {bad[0].witness}")
    return out


def braided_opposite(A: ComoduleAlgebraData, r: Functional2) -> ComoduleAlgebraData:
    """Same comodule, product a o b = sum b0 a0 r(b1 (x) a1)."""
    f = A.field
    m = A.dim
    mult = []
    for a in range(m):
        row = []
        for b in range(m):
            out = [f.zero] * m
            for cb, b0, b1 in A.coaction[b]:
                for ca, a0, a1 in A.coaction[a]:
                    s = r.value(b1, a1)
                    if not s:
                        continue
                    coeff = cb * ca * s
                    prod = A.mult_basis(b0, a0)
                    for k, x in enumerate(prod):
                        if x:
                            out[k] = out[k] + coeff * x
            row.append(tuple(out))
        mult.append(tuple(row))
    return ComoduleAlgebraData(
        hopf=A.hopf,
        dim=m,
        mult=tuple(mult),
        unit=A.unit,
        coaction=A.coaction,
        labels=A.labels,
    )


def end_algebra(P: ComoduleData, variant: str = "plain") -> ComoduleAlgebraData:
    """End(P) (or its opposite) as a comodule algebra.

    Basis is the matrix units E[i, j] (e_j |-> e_i) flattened as
    (i, j) |-> i * dim + j.  The coaction is read off by evaluating the
    defining formula on every basis vector:

      plain: rho(f)(a) = sum f(a0)_0 (x) S^{-1}(a1) f(a0)_1
      op:    rho(f)(a) = sum f(a0)_0 (x) f(a0)_1 S(a1)
    """
    if variant not in ("plain", "op"):
        raise ValueError("variant must be 'plain' or 'op'")
    H = P.hopf
    f = H.field
    m = P.dim
    dim = m * m
    s_inv = antipode_inverse(H) if variant == "plain" else None

    mult = [[None] * dim for _ in range(dim)]
    zero_vec = (f.zero,) * dim
    for i in range(m):
        for j in range(m):
            p = pair_index(i, j, m)
            for k in range(m):
                for l in range(m):
                    q = pair_index(k, l, m)
                    if variant == "plain":
                        # E[i,j] compose E[k,l] = [j == k] E[i,l]
                        if j == k:
                            vec = [f.zero] * dim
                            vec[pair_index(i, l, m)] = f.one
                            mult[p][q] = tuple(vec)
                        else:
                            mult[p][q] = zero_vec
                    else:
                        # reversed composition: E[k,l] compose E[i,j]
                        if l == i:
                            vec = [f.zero] * dim
                            vec[pair_index(k, j, m)] = f.one
                            mult[p][q] = tuple(vec)
                        else:
                            mult[p][q] = zero_vec

    coaction = []
    for i in range(m):
        for j in range(m):
            acc: dict = {}
            for b in range(m):
                for c1, b0, h in P.coaction[b]:
                    if b0 != j:
                        continue
                    for c2, i0, h2 in P.coaction[i]:
                        coeff = c1 * c2
                        if variant == "plain":
                            hvec = H.multiply(s_inv.column(h), H.basis_vector(h2))
                        else:
                            hvec = H.multiply(
                                H.basis_vector(h2), H.antipode.column(h)
                            )
                        for t, x in enumerate(hvec):
                            if x:
                                key = (pair_index(i0, b, m), t)
                                val = acc.get(key, f.zero) + coeff * x
                                if val:
                                    acc[key] = val
                                elif key in acc:
                                    del acc[key]
            coaction.append(tuple((c, e, t) for (e, t), c in acc.items()))

    unit = [f.zero] * dim
    for i in range(m):
        unit[pair_index(i, i, m)] = f.one
    labels = tuple(
        f"E[{P.labels[i]},{P.labels[j]}]" for i in range(m) for j in range(m)
    )
    return ComoduleAlgebraData(
        hopf=H,
        dim=dim,
        mult=tuple(tuple(row) for row in mult),
        unit=tuple(unit),
        coaction=tuple(coaction),
        labels=labels,
    )


# -- the canonical maps -----------------------------------------------------


def to_end_map(A: ComoduleAlgebraData, r: Functional2) -> BraidedMapMatrix:
    """Matrix of the first canonical map A # A-bar -> End(A):
    (a # b)(c) = sum a c0 b0 r(c1 (x) b1), products in A.

    Rows are endomorphism coordinates flat(out, in); columns flat(a, b).
    """
    f = A.field
    m = A.dim
    dim = m * m
    cols = [[f.zero] * dim for _ in range(dim)]
    for a in range(m):
        for b in range(m):
            col = pair_index(a, b, m)
            target = cols[col]
            for c in range(m):
                for cc, c0, c1 in A.coaction[c]:
                    for cb, b0, b1 in A.coaction[b]:
                        s = r.value(c1, b1)
                        if not s:
                            continue
                        coeff = cc * cb * s
                        vec = A.multiply(A.mult_basis(a, c0), A.basis_vector(b0))
                        for out, x in enumerate(vec):
                            if x:
                                target[pair_index(out, c, m)] = (
                                    target[pair_index(out, c, m)] + coeff * x
                                )
    entries = tuple(cols[col][row] for row in range(dim) for col in range(dim))
    return BraidedMapMatrix(ExactMatrix(dim, dim, entries, f), "to-end", dim, dim)


def to_end_op_map(A: ComoduleAlgebraData, r: Functional2) -> BraidedMapMatrix:
    """Matrix of the second canonical map A-bar # A -> End(A)^op:
    (a # b)(c) = sum r(a1 (x) c1) a0 c0 b, products in A."""
    f = A.field
    m = A.dim
    dim = m * m
    cols = [[f.zero] * dim for _ in range(dim)]
    for a in range(m):
        for b in range(m):
            col = pair_index(a, b, m)
            target = cols[col]
            for c in range(m):
                for ca, a0, a1 in A.coaction[a]:
                    for cc, c0, c1 in A.coaction[c]:
                        s = r.value(a1, c1)
                        if not s:
                            continue
                        coeff = ca * cc * s
                        vec = A.multiply(A.mult_basis(a0, c0), A.basis_vector(b))
                        for out, x in enumerate(vec):
                            if x:
                                target[pair_index(out, c, m)] = (
                                    target[pair_index(out, c, m)] + coeff * x
                                )
    entries = tuple(cols[col][row] for row in range(dim) for col in range(dim))
    return BraidedMapMatrix(ExactMatrix(dim, dim, entries, f), "to-end-op", dim, dim)


def _endo_of_column(field, m: int, column) -> ExactMatrix:
    rows = [[column[pair_index(i, c, m)] for c in range(m)] for i in range(m)]
    return ExactMatrix.from_rows(field, rows)


def check_canonical_maps(A: ComoduleAlgebraData, r: Functional2) -> list[CheckResult]:
    """Exhaustive checks that both canonical maps are unital algebra maps
    and comodule maps (Azumaya or not)."""
    H = A.hopf
    f = A.field
    m = A.dim
    dim = m * m
    abar = braided_opposite(A, r)
    results: list[CheckResult] = []

    for tag, dom, mapping, end_variant in (
        ("to-end", smash_product(A, abar, r), to_end_map(A, r), "plain"),
        ("to-end-op", smash_product(abar, A, r), to_end_op_map(A, r), "op"),
    ):
        M = mapping.matrix
        endo = [_endo_of_column(f, m, M.column(col)) for col in range(dim)]
        target = end_algebra(A.comodule(), end_variant)

        image_unit = M.apply(dom.unit)
        ok = _endo_of_column(f, m, image_unit) == ExactMatrix.identity(f, m)
        results.append(CheckResult(f"{tag}-unit", ok, None if ok else "1#1"))

        witness = None
        for p in range(dim):
            for q in range(dim):
                prod_vec = dom.mult_basis(p, q)
                lhs = _endo_of_column(f, m, M.apply(prod_vec))
                if end_variant == "plain":
                    rhs = endo[p] @ endo[q]
                else:
                    rhs = endo[q] @ endo[p]
                if lhs != rhs:
                    witness = f"({dom.labels[p]}, {dom.labels[q]})"
                    break
            if witness:
                break
        results.append(CheckResult(f"{tag}-algebra-map", witness is None, witness))

        witness = None
        for p in range(dim):
            lhs: dict = {}
            for c, p0, h in dom.coaction[p]:
                col = M.column(p0)
                for e, x in enumerate(col):
                    if x:
                        key = (e, h)
                        val = lhs.get(key, f.zero) + c * x
                        if val:
                            lhs[key] = val
                        elif key in lhs:
                            del lhs[key]
            rhs: dict = {}
            col = M.column(p)
            for e, x in enumerate(col):
                if not x:
                    continue
                for c, e0, h in target.coaction[e]:
                    key = (e0, h)
                    val = rhs.get(key, f.zero) + x * c
                    if val:
                        rhs[key] = val
                    elif key in rhs:
                        del rhs[key]
            if lhs != rhs:
                witness = dom.labels[p]
                break
        results.append(CheckResult(f"{tag}-comodule-map", witness is None, witness))
    return results


def rform_pairing_map(
    r: Functional2,
    H: HopfAlgebraData,
    verify: bool = True,
) -> BraidedMapMatrix:
    """The map h |-> r(- (x) h) from H (opposite product) into the dual.

    Column j holds the functional r(- (x) e_j); with ``verify`` the map is
    checked to be an algebra map into the convolution algebra and a
    coalgebra map into the dual coalgebra.
    """
    f = H.field
    d = H.dim
    theta = r.as_matrix()
    if verify:
        coal = H.coalgebra()
        cols = [Functional1(f, theta.column(j)) for j in range(d)]
        for i in range(d):
            for j in range(d):
                # multiplicativity for the opposite product: e_j e_i
                lhs = theta.apply(H.mult_basis(j, i))
                rhs = convolve(cols[i], cols[j], coal).values
                if tuple(lhs) != tuple(rhs):
                    raise PreconditionFailure(
                        f"pairing map not multiplicative at ({H.label(i)}, {H.label(j)})",
                        [],
                    )
        for k in range(d):
            for a in range(d):
                for b in range(d):
                    lhs = f.zero
                    for t, x in enumerate(H.mult_basis(a, b)):
                        if x and theta.entry(t, k):
                            lhs = lhs + x * theta.entry(t, k)
                    rhs = f.zero
                    for c, i, j in H.comult[k]:
                        v1 = theta.entry(a, i)
                        v2 = theta.entry(b, j)
                        if v1 and v2:
                            rhs = rhs + c * v1 * v2
                    if lhs != rhs:
                        raise PreconditionFailure(
                            f"pairing map not comultiplicative at {H.label(k)}", []
                        )
        if tuple(theta.apply(H.unit)) != tuple(H.counit):
            raise PreconditionFailure("pairing map does not send 1 to the counit", [])
    return BraidedMapMatrix(theta, "pairing", d, d)


# -- Azumaya deciders --------------------------------------------------------


@dataclass(frozen=True)
class AzumayaEvidence:
    azumaya: bool
    det_to_end: Scalar
    det_to_end_op: Scalar


def is_azumaya(A: ComoduleAlgebraData, r: Functional2) -> AzumayaEvidence:
    """Decide Azumaya-ness of an algebra in the braided category by the
    determinants of both canonical maps."""
    det_f = to_end_map(A, r).matrix.det()
    det_g = to_end_op_map(A, r).matrix.det()
    return AzumayaEvidence(bool(det_f) and bool(det_g), det_f, det_g)


@dataclass(frozen=True)
class CleftEvidence:
    azumaya: bool
    pairing_det: Scalar
    twisted: HopfAlgebraData
    r_twisted: Functional2


def cleft_is_azumaya(
    H: HopfAlgebraData,
    sigma: Functional2,
    r: Functional2,
    sigma_inv: Functional2 | None = None,
    verify: bool = False,
) -> CleftEvidence:
    """Azumaya verdict for the cleft extension attached to sigma, over the
    braiding r: invertibility of the twisted pairing matrix.

    The twisted braiding form is transported onto the two-sided twist of
    H; its value matrix is the pairing map whose determinant decides.
    """
    if sigma_inv is None:
        sigma_inv = conv_inverse2(sigma, H)
    r_tw = twisted_rform(r, sigma, H, sigma_inv)
    twisted = doi_twist(H, sigma, sigma_inv, verify=verify)
    theta = rform_pairing_map(r_tw, twisted, verify=verify)
    det = theta.matrix.det()
    return CleftEvidence(bool(det), det, twisted, r_tw)


# -- integrals and explicit preimages ---------------------------------------


def dual_left_integral(H: HopfAlgebraData) -> Functional1:
    """The left integral on H (an element of the dual), normalized by the
    kernel solve; its solution space must be one-dimensional."""
    f = H.field
    d = H.dim
    rows = [[f.zero] * d for _ in range(d * d)]
    for h in range(d):
        for c, i, j in H.comult[h]:
            for t in range(d):
                if t == i:
                    rows[pair_index(h, t, d)][j] = rows[pair_index(h, t, d)][j] + c
        for t in range(d):
            if H.unit[t]:
                rows[pair_index(h, t, d)][h] = rows[pair_index(h, t, d)][h] - H.unit[t]
    basis = ExactMatrix.from_rows(f, rows).kernel_basis()
    if len(basis) != 1:
        raise LinAlgError(
            f"integral space has dimension {len(basis)}; input is not a Hopf algebra"
        )
    return Functional1(f, basis[0])


def integral_translates(
    H: HopfAlgebraData, zeta: Functional1, h: int
) -> tuple[Functional1, Functional1]:
    """The functionals k |-> zeta(k S(e_h)) and its precomposition with the
    inverse antipode."""
    f = H.field
    s_h = H.antipode.column(h)
    v_vals = tuple(
        zeta(H.multiply(H.basis_vector(k), s_h)) for k in range(H.dim)
    )
    s_inv = antipode_inverse(H)
    w_vals = tuple(
        sum(
            (v_vals[t] * s_inv.entry(t, k) for t in range(H.dim) if v_vals[t]),
            start=f.zero,
        )
        for k in range(H.dim)
    )
    return Functional1(f, v_vals), Functional1(f, w_vals)


def translate_matrices(H: HopfAlgebraData, zeta: Functional1) -> tuple[ExactMatrix, ExactMatrix]:
    """Columns h give the two translate functionals at e_h; both matrices
    are invertible for a genuine integral (fundamental-theorem bijection)."""
    v_cols = []
    w_cols = []
    for h in range(H.dim):
        v, w = integral_translates(H, zeta, h)
        v_cols.append(list(v.values))
        w_cols.append(list(w.values))
    return (
        ExactMatrix.from_columns(H.field, v_cols),
        ExactMatrix.from_columns(H.field, w_cols),
    )


def check_integral_identities(H: HopfAlgebraData) -> list[CheckResult]:
    """The three translate identities, checked for every basis pair."""
    f = H.field
    d = H.dim
    zeta = dual_left_integral(H)
    vmat, wmat = translate_matrices(H, zeta)
    s_inv = antipode_inverse(H)
    lab = H.label
    results = []

    ok = bool(vmat.det()) and bool(wmat.det())
    results.append(CheckResult("integral-translate-bijective", ok, None if ok else "V"))

    witness = None
    for h in range(d):
        for k in range(d):
            lhs = [f.zero] * d
            for c, k1, k2 in H.comult[k]:
                x = vmat.entry(k2, h)
                if x:
                    lhs[k1] = lhs[k1] + c * x
            rhs = [f.zero] * d
            for c, h1, h2 in H.comult[h]:
                x = vmat.entry(k, h1)
                if x:
                    rhs[h2] = rhs[h2] + c * x
            if lhs != rhs:
                witness = f"({lab(h)}, {lab(k)})"
                break
        if witness:
            break
    results.append(CheckResult("integral-translate-shift", witness is None, witness))

    witness = None
    for h in range(d):
        for k in range(d):
            lhs = [f.zero] * d
            for c, k1, k2 in H.comult[k]:
                x = wmat.entry(k1, h)
                if not x:
                    continue
                col = s_inv.column(k2)
                for t, y in enumerate(col):
                    if y:
                        lhs[t] = lhs[t] + c * x * y
            rhs = [f.zero] * d
            for c, h1, h2 in H.comult[h]:
                x = wmat.entry(k, h1)
                if x:
                    rhs[h2] = rhs[h2] + c * x
            if lhs != rhs:
                witness = f"({lab(h)}, {lab(k)})"
                break
        if witness:
            break
    results.append(
        CheckResult("integral-translate-inverse-shift", witness is None, witness)
    )

    witness = None
    for h in range(d):
        for k in range(d):
            lhs = [f.zero] * d
            for c, k1, k2 in H.comult[k]:
                x = wmat.entry(k1, h)
                if x:
                    lhs[k2] = lhs[k2] + c * x
            rhs = [f.zero] * d
            for c, h1, h2 in H.comult[h]:
                x = wmat.entry(k, h1)
                if not x:
                    continue
                col = H.antipode.column(h2)
                for t, y in enumerate(col):
                    if y:
                        rhs[t] = rhs[t] + c * x * y
            if lhs != rhs:
                witness = f"({lab(h)}, {lab(k)})"
                break
        if witness:
            break
    results.append(
        CheckResult("integral-translate-antipode-shift", witness is None, witness)
    )
    return results


def twisted_antipode_pair(
    H: HopfAlgebraData,
    sigma: Functional2,
    h: int,
    sigma_inv: Functional2 | None = None,
) -> tuple[tuple, tuple]:
    """The two antipode-like elements of the twisted opposite algebra:

      first(h)  = sum sigma^{-1}(S(h2) (x) h3) S(h1)
      second(h) = sum sigma^{-1}(h3 (x) S^{-1}(h2)) S^{-1}(h1)
    """
    f = H.field
    if sigma_inv is None:
        sigma_inv = conv_inverse2(sigma, H)
    s_inv = antipode_inverse(H)
    it3 = H.iterated_comult(3)
    first = [f.zero] * H.dim
    second = [f.zero] * H.dim
    for c, (h1, h2, h3) in it3[h]:
        x = sigma_inv.eval_right_basis(H.antipode.column(h2), h3)
        if x:
            col = H.antipode.column(h1)
            for t, y in enumerate(col):
                if y:
                    first[t] = first[t] + c * x * y
        x = sigma_inv.eval_left_basis(h3, s_inv.column(h2))
        if x:
            col = s_inv.column(h1)
            for t, y in enumerate(col):
                if y:
                    second[t] = second[t] + c * x * y
    return tuple(first), tuple(second)


def check_twisted_antipode_identities(
    H: HopfAlgebraData,
    sigma: Functional2,
    sigma_inv: Functional2 | None = None,
) -> list[CheckResult]:
    """The four counit identities tying the twisted antipode pair to the
    product of the twisted opposite algebra, for every basis element."""
    f = H.field
    d = H.dim
    if sigma_inv is None:
        sigma_inv = conv_inverse2(sigma, H)
    A = twisted_opposite_algebra(H, sigma, verify=False)
    pairs = [twisted_antipode_pair(H, sigma, h, sigma_inv) for h in range(d)]
    lab = H.label
    results = []

    def run(name, combine):
        witness = None
        for h in range(d):
            acc = [f.zero] * d
            for c, h1, h2 in H.comult[h]:
                term = combine(h1, h2)
                for t, x in enumerate(term):
                    if x:
                        acc[t] = acc[t] + c * x
            target = [H.counit[h] * u for u in H.unit]
            if acc != target:
                witness = lab(h)
                break
        results.append(CheckResult(name, witness is None, witness))

    run("twisted-antipode-left",
        lambda h1, h2: A.multiply(A.basis_vector(h2), pairs[h1][0]))
    run("twisted-antipode-right",
        lambda h1, h2: A.multiply(pairs[h1][1], A.basis_vector(h2)))
    run("twisted-antipode-left-swapped",
        lambda h1, h2: A.multiply(pairs[h2][0], A.basis_vector(h1)))
    run("twisted-antipode-right-swapped",
        lambda h1, h2: A.multiply(A.basis_vector(h1), pairs[h2][1]))
    return results


def rank_one_preimage(
    H: HopfAlgebraData,
    sigma: Functional2,
    r: Functional2,
    eta: Functional1,
    m_vec,
    side: str = "end",
) -> tuple:
    """Explicit preimage of the rank-one endomorphism l |-> eta(l) m under
    the canonical map chosen by ``side`` ('end' or 'end-op').

    Requires the twisted pairing matrix to be invertible; eta is converted
    to the basis element it translates from (the translate matrix is a
    bijection).  The returned coefficient vector lives on the flattened
    tensor-square basis of the cleft algebra.
    """
    if side not in ("end", "end-op"):
        raise ValueError("side must be 'end' or 'end-op'")
    f = H.field
    d = H.dim
    sigma_inv = conv_inverse2(sigma, H)
    A = twisted_opposite_algebra(H, sigma, verify=False)
    twisted = doi_twist(H, sigma, sigma_inv, verify=False)
    r_tw = twisted_rform(r, sigma, H, sigma_inv)
    theta = r_tw.as_matrix()
    try:
        theta_inv = theta.inverse()
    except LinAlgError as exc:
        raise PreconditionFailure("twisted pairing matrix is singular", []) from exc
    t_star = theta_inv.transpose()

    zeta = dual_left_integral(H)
    _, wmat = translate_matrices(H, zeta)
    h_vec = wmat.solve(eta.values)

    s_pairs = [twisted_antipode_pair(H, sigma, t, sigma_inv) for t in range(d)]

    def apply_first(vec):
        out = [f.zero] * d
        for t, c in enumerate(vec):
            if c:
                for u, x in enumerate(s_pairs[t][0]):
                    if x:
                        out[u] = out[u] + c * x
        return tuple(out)

    def apply_second(vec):
        out = [f.zero] * d
        for t, c in enumerate(vec):
            if c:
                for u, x in enumerate(s_pairs[t][1]):
                    if x:
                        out[u] = out[u] + c * x
        return tuple(out)

    gamma = [f.zero] * (d * d)
    for c, i, j in H.comult_vec(h_vec):
        if not c:
            continue
        w1 = wmat.column(i)
        s_h2 = H.antipode.column(j)
        # split w1 along the coproduct dual to the twisted product
        for p in range(d):
            for q in range(d):
                coeff = f.zero
                vec = twisted.mult_basis(p, q)
                for k, x in enumerate(vec):
                    if x and w1[k]:
                        coeff = coeff + x * w1[k]
                if not coeff:
                    continue
                coeff = c * coeff
                if side == "end":
                    leg1 = A.multiply(
                        A.multiply(m_vec, apply_second(s_h2)),
                        apply_first(theta_inv.column(q)),
                    )
                    leg2 = theta_inv.column(p)
                else:
                    leg1 = t_star.column(q)
                    leg2 = A.multiply(
                        A.multiply(apply_second(t_star.column(p)), apply_first(s_h2)),
                        m_vec,
                    )
                for u, x in enumerate(leg1):
                    if not x:
                        continue
                    for v, y in enumerate(leg2):
                        if y:
                            k = pair_index(u, v, d)
                            gamma[k] = gamma[k] + coeff * x * y
    return tuple(gamma)


# -- the module-algebra (dual) picture ---------------------------------------


@dataclass(frozen=True)
class DualSideEvidence:
    azumaya: bool
    pairing_det: Scalar
    comodule_side_det: Scalar
    consistent: bool


def _tensor_square_product(H: HopfAlgebraData, left: dict, right: dict) -> dict:
    f = H.field
    out: dict = {}
    for (i1, j1), c1 in left.items():
        for (i2, j2), c2 in right.items():
            coeff = c1 * c2
            v1 = H.mult_basis(i1, i2)
            v2 = H.mult_basis(j1, j2)
            for p, x in enumerate(v1):
                if not x:
                    continue
                for q, y in enumerate(v2):
                    if y:
                        key = (p, q)
                        val = out.get(key, f.zero) + coeff * x * y
                        if val:
                            out[key] = val
                        elif key in out:
                            del out[key]
    return out


def dual_side_azumaya(
    H: HopfAlgebraData,
    R: ExactMatrix,
    C: ExactMatrix,
) -> DualSideEvidence:
    """Azumaya verdict on the module-algebra side of the duality.

    R and C are coefficient matrices of elements of H (x) H: R a
    quasitriangular structure (checked through the dual), C a cocycle for
    the dual.  The verdict is invertibility of the coefficient matrix of
    (tau C) R C^{-1}, computed with algebra products in H (x) H, and it is
    cross-checked against the comodule-side verdict on the dualized data.
    """
    from .convolution import check_dqt_rform, check_left_2cocycle

    f = H.field
    d = H.dim
    h_dual = dualize(H)
    r_func = Functional2(f, tuple(tuple(R.entry(i, j) for j in range(d)) for i in range(d)))
    c_func = Functional2(f, tuple(tuple(C.entry(i, j) for j in range(d)) for i in range(d)))

    dqt = check_dqt_rform(r_func, h_dual)
    if not all(x.passed for x in dqt):
        raise PreconditionFailure("R is not quasitriangular per the checker", dqt)
    coc = check_left_2cocycle(c_func, h_dual, derived_identities=False)
    if not all(x.passed for x in coc):
        raise PreconditionFailure("C is not a cocycle for the dual per the checker", coc)

    c_dict = {
        (i, j): C.entry(i, j)
        for i in range(d)
        for j in range(d)
        if C.entry(i, j)
    }
    r_dict = {
        (i, j): R.entry(i, j)
        for i in range(d)
        for j in range(d)
        if R.entry(i, j)
    }
    tau_c = {(j, i): v for (i, j), v in c_dict.items()}

    # invert C in the algebra H (x) H
    unit_vec = [f.zero] * (d * d)
    for i, x in enumerate(H.unit):
        if not x:
            continue
        for j, y in enumerate(H.unit):
            if y:
                unit_vec[pair_index(i, j, d)] = x * y
    rows = [[f.zero] * (d * d) for _ in range(d * d)]
    for (i, j), cval in c_dict.items():
        for k in range(d):
            v1 = H.mult_basis(i, k)
            for l in range(d):
                v2 = H.mult_basis(j, l)
                col = pair_index(k, l, d)
                for p, x in enumerate(v1):
                    if not x:
                        continue
                    for q, y in enumerate(v2):
                        if y:
                            rows[pair_index(p, q, d)][col] = (
                                rows[pair_index(p, q, d)][col] + cval * x * y
                            )
    try:
        inv_flat = ExactMatrix.from_rows(f, rows).solve(unit_vec)
    except LinAlgError as exc:
        raise PreconditionFailure("C is not invertible in H (x) H", []) from exc
    c_inv = {
        (i, j): inv_flat[pair_index(i, j, d)]
        for i in range(d)
        for j in range(d)
        if inv_flat[pair_index(i, j, d)]
    }
    check = _tensor_square_product(H, c_inv, c_dict)
    expected = {
        (i, j): v
        for (i, j), v in (
            ((i, j), unit_vec[pair_index(i, j, d)]) for i in range(d) for j in range(d)
        )
        if v
    }
    if check != expected:
        raise PreconditionFailure("inverse of C is one-sided", [])

    rc = _tensor_square_product(H, _tensor_square_product(H, tau_c, r_dict), c_inv)
    theta_rows = [[f.zero] * d for _ in range(d)]
    for (i, j), v in rc.items():
        theta_rows[i][j] = v
    det = ExactMatrix.from_rows(f, theta_rows).det()

    comodule_side = cleft_is_azumaya(h_dual, c_func, r_func)
    return DualSideEvidence(
        azumaya=bool(det),
        pairing_det=det,
        comodule_side_det=comodule_side.pairing_det,
        consistent=bool(det) == comodule_side.azumaya,
    )

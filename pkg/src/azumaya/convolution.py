"""Linear functionals on H and H (x) H, convolution, cocycles and twists.

Functionals on H are coefficient vectors against the basis; functionals
on H (x) H are value matrices indexed by basis pairs (first argument =
row).  Convolution happens over explicit coalgebra data, so the same code
serves H, H (x) H, and any twist (twisting never changes the coalgebra).
"""

from __future__ import annotations

from dataclasses import dataclass

from .checks import CheckResult
from .comodule import ComoduleAlgebraData
from .fields import FieldContext, Scalar
from .hopf import (
    CoalgebraData,
    HopfAlgebraData,
    opposite_variants,
    tensor_square_coalgebra,
)
from .linalg import ExactMatrix, LinAlgError, pair_index


class ConvolutionError(ValueError):
    """Raised when a functional is not convolution invertible."""


@dataclass(frozen=True)
class Functional1:
    """A linear functional on H: one value per basis element."""

    field: FieldContext
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.field(x) for x in self.values))

    @property
    def dim(self) -> int:
        return len(self.values)

    def __call__(self, vec) -> Scalar:
        acc = self.field.zero
        for a, v in zip(vec, self.values):
            if a and v:
                acc = acc + a * v
        return acc


@dataclass(frozen=True)
class Functional2:
    """A linear functional on H (x) H: a value per basis pair."""

    field: FieldContext
    values: tuple  # values[i][j] on e_i (x) e_j

    def __post_init__(self):
        object.__setattr__(
            self,
            "values",
            tuple(tuple(self.field(x) for x in row) for row in self.values),
        )

    @property
    def dim(self) -> int:
        return len(self.values)

    def value(self, i: int, j: int) -> Scalar:
        return self.values[i][j]

    def __call__(self, u, v) -> Scalar:
        acc = self.field.zero
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.values[i]
            for j, b in enumerate(v):
                if b and row[j]:
                    acc = acc + a * b * row[j]
        return acc

    def eval_left_basis(self, i: int, v) -> Scalar:
        """Value on e_i (x) v."""
        acc = self.field.zero
        row = self.values[i]
        for j, b in enumerate(v):
            if b and row[j]:
                acc = acc + b * row[j]
        return acc

    def eval_right_basis(self, u, j: int) -> Scalar:
        """Value on u (x) e_j."""
        acc = self.field.zero
        for i, a in enumerate(u):
            if a and self.values[i][j]:
                acc = acc + a * self.values[i][j]
        return acc

    def flatten(self) -> Functional1:
        d = self.dim
        flat = [self.field.zero] * (d * d)
        for i in range(d):
            for j in range(d):
                flat[pair_index(i, j, d)] = self.values[i][j]
        return Functional1(self.field, tuple(flat))

    @classmethod
    def from_flat(cls, field: FieldContext, dim: int, flat) -> "Functional2":
        rows = [
            tuple(flat[pair_index(i, j, dim)] for j in range(dim))
            for i in range(dim)
        ]
        return cls(field, tuple(rows))

    def flip(self) -> "Functional2":
        """Precompose with the tensor flip: (f o tau)(h (x) k) = f(k (x) h)."""
        d = self.dim
        return Functional2(
            self.field,
            tuple(tuple(self.values[j][i] for j in range(d)) for i in range(d)),
        )

    def as_matrix(self) -> ExactMatrix:
        return ExactMatrix.from_rows(self.field, [list(r) for r in self.values])


def counit_functional(H) -> Functional1:
    return Functional1(H.field, H.counit)


def trivial_cocycle(H: HopfAlgebraData) -> Functional2:
    """epsilon (x) epsilon, the unit of the convolution algebra on H (x) H."""
    eps = H.counit
    rows = tuple(tuple(a * b for b in eps) for a in eps)
    return Functional2(H.field, rows)


def convolve(f: Functional1, g: Functional1, C: CoalgebraData) -> Functional1:
    """(f * g)(c) = sum f(c1) g(c2) over C's coproduct triples."""
    if f.dim != C.dim or g.dim != C.dim:
        raise LinAlgError("functional dimension does not match the coalgebra")
    zero = C.field.zero
    out = []
    for c in range(C.dim):
        acc = zero
        for coeff, i, j in C.comult[c]:
            fi = f.values[i]
            gj = g.values[j]
            if fi and gj:
                acc = acc + coeff * fi * gj
        out.append(acc)
    return Functional1(C.field, tuple(out))


def left_convolution_matrix(f: Functional1, C: CoalgebraData) -> ExactMatrix:
    """Matrix of x |-> f * x acting on coefficient vectors."""
    zero = C.field.zero
    rows = [[zero] * C.dim for _ in range(C.dim)]
    for c in range(C.dim):
        for coeff, i, j in C.comult[c]:
            if f.values[i]:
                rows[c][j] = rows[c][j] + coeff * f.values[i]
    return ExactMatrix.from_rows(C.field, rows)


def conv_inverse(f: Functional1, C: CoalgebraData) -> Functional1:
    """Convolution inverse via one linear solve; both sides verified."""
    L = left_convolution_matrix(f, C)
    try:
        x = L.solve(C.counit)
    except LinAlgError as exc:
        raise ConvolutionError("functional is not convolution invertible") from exc
    inv = Functional1(C.field, x)
    if convolve(inv, f, C).values != tuple(C.counit):
        raise ConvolutionError("left inverse is not a right inverse")
    return inv


def convolve2(f: Functional2, g: Functional2, H: HopfAlgebraData) -> Functional2:
    T = tensor_square_coalgebra(H)
    return Functional2.from_flat(
        H.field, H.dim, convolve(f.flatten(), g.flatten(), T).values
    )


def conv_inverse2(f: Functional2, H: HopfAlgebraData) -> Functional2:
    T = tensor_square_coalgebra(H)
    return Functional2.from_flat(H.field, H.dim, conv_inverse(f.flatten(), T).values)


def conv_inverse1(f: Functional1, H: HopfAlgebraData) -> Functional1:
    return conv_inverse(f, H.coalgebra())


# -- cocycles ----------------------------------------------------------


def check_left_2cocycle(
    sigma: Functional2,
    H: HopfAlgebraData,
    derived_identities: bool = True,
) -> list[CheckResult]:
    """Normalization, invertibility, the left cocycle identity, and (by
    default) the two shifted identities it implies.

    The shifted identities need the convolution inverse, so they are also
    a cross-check of ``conv_inverse2``.
    """
    f = H.field
    d = H.dim
    lab = H.label
    results: list[CheckResult] = []

    witness = None
    for h in range(d):
        left = sigma.eval_left_basis(h, H.unit)
        right = sigma.eval_right_basis(H.unit, h)
        if left != H.counit[h] or right != H.counit[h]:
            witness = lab(h)
            break
    results.append(CheckResult("cocycle-normalization", witness is None, witness))

    sigma_inv = None
    try:
        sigma_inv = conv_inverse2(sigma, H)
        results.append(CheckResult("cocycle-invertibility", True))
    except ConvolutionError:
        results.append(
            CheckResult("cocycle-invertibility", False, "not convolution invertible")
        )

    witness = None
    for h in range(d):
        for k in range(d):
            for m in range(d):
                lhs = f.zero
                for ck, k1, k2 in H.comult[k]:
                    for cm, m1, m2 in H.comult[m]:
                        s1 = sigma.value(k1, m1)
                        if not s1:
                            continue
                        km = H.mult_basis(k2, m2)
                        lhs = lhs + ck * cm * s1 * sigma.eval_left_basis(h, km)
                rhs = f.zero
                for ch, h1, h2 in H.comult[h]:
                    for ck, k1, k2 in H.comult[k]:
                        s1 = sigma.value(h1, k1)
                        if not s1:
                            continue
                        hk = H.mult_basis(h2, k2)
                        rhs = rhs + ch * ck * s1 * sigma.eval_right_basis(hk, m)
                if lhs != rhs:
                    witness = f"({lab(h)}, {lab(k)}, {lab(m)})"
                    break
            if witness:
                break
        if witness:
            break
    results.append(CheckResult("cocycle-identity", witness is None, witness))

    if derived_identities and sigma_inv is not None:
        it3 = H.iterated_comult(3)

        witness = None
        for k in range(d):
            for l in range(d):
                for m in range(d):
                    lhs = sigma.eval_left_basis(k, H.mult_basis(l, m))
                    rhs = f.zero
                    for cl, (l1, l2, l3) in it3[l]:
                        for ck, k1, k2 in H.comult[k]:
                            s2 = sigma.value(k1, l2)
                            if not s2:
                                continue
                            for cm, m1, m2 in H.comult[m]:
                                s1 = sigma_inv.value(l1, m1)
                                if not s1:
                                    continue
                                kl = H.mult_basis(k2, l3)
                                rhs = rhs + cl * ck * cm * s1 * s2 * sigma.eval_right_basis(kl, m2)
                    if lhs != rhs:
                        witness = f"({lab(k)}, {lab(l)}, {lab(m)})"
                        break
                if witness:
                    break
            if witness:
                break
        results.append(CheckResult("cocycle-shift-left", witness is None, witness))

        witness = None
        for k in range(d):
            for l in range(d):
                for m in range(d):
                    lhs = sigma.eval_right_basis(H.mult_basis(k, l), m)
                    rhs = f.zero
                    for cl, (l1, l2, l3) in it3[l]:
                        for ck, k1, k2 in H.comult[k]:
                            s1 = sigma_inv.value(k1, l1)
                            if not s1:
                                continue
                            for cm, m1, m2 in H.comult[m]:
                                s2 = sigma.value(l2, m1)
                                if not s2:
                                    continue
                                lm = H.mult_basis(l3, m2)
                                rhs = rhs + cl * ck * cm * s1 * s2 * sigma.eval_left_basis(k2, lm)
                    if lhs != rhs:
                        witness = f"({lab(k)}, {lab(l)}, {lab(m)})"
                        break
                if witness:
                    break
            if witness:
                break
        results.append(CheckResult("cocycle-shift-right", witness is None, witness))

    return results


# -- dual quasitriangular forms ----------------------------------------


def check_dqt_rform(r: Functional2, H: HopfAlgebraData) -> list[CheckResult]:
    """Convolution invertibility, the two multiplicativity identities, and
    quasi-commutativity; together these make the comodule category braided."""
    f = H.field
    d = H.dim
    lab = H.label
    results: list[CheckResult] = []

    try:
        conv_inverse2(r, H)
        results.append(CheckResult("rform-invertibility", True))
    except ConvolutionError:
        results.append(
            CheckResult("rform-invertibility", False, "not convolution invertible")
        )

    witness = None
    for a in range(d):
        for b in range(d):
            ab = H.mult_basis(a, b)
            for c in range(d):
                lhs = r.eval_right_basis(ab, c)
                rhs = f.zero
                for cc, c1, c2 in H.comult[c]:
                    v1 = r.value(a, c1)
                    v2 = r.value(b, c2)
                    if v1 and v2:
                        rhs = rhs + cc * v1 * v2
                if lhs != rhs:
                    witness = f"({lab(a)}, {lab(b)}, {lab(c)})"
                    break
            if witness:
                break
        if witness:
            break
    results.append(CheckResult("rform-mult-first", witness is None, witness))

    witness = None
    for a in range(d):
        for b in range(d):
            for c in range(d):
                bc = H.mult_basis(b, c)
                lhs = r.eval_left_basis(a, bc)
                rhs = f.zero
                for ca, a1, a2 in H.comult[a]:
                    v1 = r.value(a1, c)
                    v2 = r.value(a2, b)
                    if v1 and v2:
                        rhs = rhs + ca * v1 * v2
                if lhs != rhs:
                    witness = f"({lab(a)}, {lab(b)}, {lab(c)})"
                    break
            if witness:
                break
        if witness:
            break
    results.append(CheckResult("rform-mult-second", witness is None, witness))

    witness = None
    for a in range(d):
        for b in range(d):
            lhs = [f.zero] * d
            rhs = [f.zero] * d
            for ca, a1, a2 in H.comult[a]:
                for cb, b1, b2 in H.comult[b]:
                    coeff = ca * cb
                    v = r.value(a2, b2)
                    if v:
                        prod = H.mult_basis(b1, a1)
                        for k, x in enumerate(prod):
                            if x:
                                lhs[k] = lhs[k] + coeff * v * x
                    w = r.value(a1, b1)
                    if w:
                        prod = H.mult_basis(a2, b2)
                        for k, x in enumerate(prod):
                            if x:
                                rhs[k] = rhs[k] + coeff * w * x
            if lhs != rhs:
                witness = f"({lab(a)}, {lab(b)})"
                break
        if witness:
            break
    results.append(CheckResult("rform-quasi-commutativity", witness is None, witness))
    return results


# -- twists and crossed products ----------------------------------------


def doi_twist(
    H: HopfAlgebraData,
    sigma: Functional2,
    sigma_inv: Functional2 | None = None,
    verify: bool = True,
) -> HopfAlgebraData:
    """Deform the product on both sides by sigma and its inverse.

    The coalgebra is untouched.  The twisted antipode is found by solving
    the antipode axiom as a linear system (it is uniquely determined), and
    the right-antipode axiom plus, optionally, the full axiom suite are
    verified on the result.
    """
    f = H.field
    d = H.dim
    if sigma_inv is None:
        sigma_inv = conv_inverse2(sigma, H)
    it3 = H.iterated_comult(3)
    mult = [[None] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            out = [f.zero] * d
            for c1, (a1, a2, a3) in it3[i]:
                for c2, (b1, b2, b3) in it3[j]:
                    s = sigma.value(a1, b1)
                    if not s:
                        continue
                    t = sigma_inv.value(a3, b3)
                    if not t:
                        continue
                    coeff = c1 * c2 * s * t
                    prod = H.mult_basis(a2, b2)
                    for k, x in enumerate(prod):
                        if x:
                            out[k] = out[k] + coeff * x
            mult[i][j] = tuple(out)
    mult = tuple(tuple(row) for row in mult)

    # Solve sum S'(h1) ._s h2 = eps(h) 1 for the matrix of S'.
    rows = [[f.zero] * (d * d) for _ in range(d * d)]
    rhs = [f.zero] * (d * d)
    for h in range(d):
        for c in range(d):
            rhs[pair_index(h, c, d)] = H.counit[h] * H.unit[c]
        for coeff, i, j in H.comult[h]:
            for a in range(d):
                col = pair_index(a, i, d)
                vec = mult[a][j]
                for c in range(d):
                    if vec[c]:
                        rows[pair_index(h, c, d)][col] = (
                            rows[pair_index(h, c, d)][col] + coeff * vec[c]
                        )
    system = ExactMatrix.from_rows(f, rows)
    try:
        flat = system.solve(rhs)
    except LinAlgError as exc:
        raise ConvolutionError(
            "twisted antipode does not exist; sigma is not a 2-cocycle"
        ) from exc
    antipode = ExactMatrix(
        d, d, tuple(flat[pair_index(a, i, d)] for a in range(d) for i in range(d)), f
    )

    twisted = HopfAlgebraData(
        field=f,
        dim=d,
        mult=mult,
        unit=H.unit,
        comult=H.comult,
        counit=H.counit,
        antipode=antipode,
        labels=H.labels,
    )

    # The solved left antipode must also be a right antipode.
    for h in range(d):
        acc = [f.zero] * d
        for coeff, i, j in H.comult[h]:
            sj = antipode.column(j)
            term = twisted.multiply(twisted.basis_vector(i), sj)
            for k, x in enumerate(term):
                acc[k] = acc[k] + coeff * x
        target = [H.counit[h] * u for u in H.unit]
        if acc != target:
            raise ConvolutionError("twisted antipode is one-sided; invalid cocycle")

    if verify:
        from .hopf import verify_hopf_axioms

        bad = [r for r in verify_hopf_axioms(twisted) if not r.passed]
        if bad:
            raise ConvolutionError(
                f"twist is not a Hopf algebra: {bad[0].name} fails at {bad[0].witness}"
            )
    return twisted


def twisted_rform(
    r: Functional2,
    sigma: Functional2,
    H: HopfAlgebraData,
    sigma_inv: Functional2 | None = None,
) -> Functional2:
    """(sigma o tau) * r * sigma^{-1}: the braiding form carried by the twist."""
    if sigma_inv is None:
        sigma_inv = conv_inverse2(sigma, H)
    return convolve2(convolve2(sigma.flip(), r, H), sigma_inv, H)


def crossed_product(
    H: HopfAlgebraData,
    sigma: Functional2,
    verify: bool = True,
) -> ComoduleAlgebraData:
    """The crossed product of the base field by H along sigma.

    Same underlying comodule as H (coaction = coproduct); the product is
    h . k = sum sigma(h1 (x) k1) h2 k2.  An ordinary (plain-leg) comodule
    algebra; this is the cleft extension attached to sigma.
    """
    f = H.field
    d = H.dim
    mult = []
    for i in range(d):
        row = []
        for j in range(d):
            out = [f.zero] * d
            for c1, i1, i2 in H.comult[i]:
                for c2, j1, j2 in H.comult[j]:
                    s = sigma.value(i1, j1)
                    if not s:
                        continue
                    coeff = c1 * c2 * s
                    prod = H.mult_basis(i2, j2)
                    for k, x in enumerate(prod):
                        if x:
                            out[k] = out[k] + coeff * x
            row.append(tuple(out))
        mult.append(tuple(row))
    A = ComoduleAlgebraData(
        hopf=H,
        dim=d,
        mult=tuple(mult),
        unit=H.unit,
        coaction=H.comult,
        labels=H.labels,
    )
    if verify:
        from .comodule import check_comodule_algebra

        bad = [r for r in check_comodule_algebra(A, leg="plain") if not r.passed]
        if bad:
            raise ConvolutionError(
                f"crossed product fails {bad[0].name} at {bad[0].witness}"
            )
    return A


def twisted_opposite_algebra(
    H: HopfAlgebraData,
    sigma: Functional2,
    verify: bool = True,
) -> ComoduleAlgebraData:
    """The algebra on H with product h . k = sum sigma(k1 (x) h1) k2 h2 and
    coaction the coproduct: the cleft extension viewed inside the braided
    category (an op-leg comodule algebra).

    With the trivial cocycle this is H^op.  ``verify`` additionally checks
    that sigma o tau is a left 2-cocycle for H^op (used, not assumed), the
    op-leg comodule axioms, and the recovery identity
    hk = sum sigma^{-1}(h1 (x) k1) k2 . h2.
    """
    f = H.field
    d = H.dim
    mult = []
    for i in range(d):
        row = []
        for j in range(d):
            out = [f.zero] * d
            for c1, i1, i2 in H.comult[i]:
                for c2, j1, j2 in H.comult[j]:
                    s = sigma.value(j1, i1)
                    if not s:
                        continue
                    coeff = c1 * c2 * s
                    prod = H.mult_basis(j2, i2)
                    for k, x in enumerate(prod):
                        if x:
                            out[k] = out[k] + coeff * x
            row.append(tuple(out))
        mult.append(tuple(row))
    A = ComoduleAlgebraData(
        hopf=H,
        dim=d,
        mult=tuple(mult),
        unit=H.unit,
        coaction=H.comult,
        labels=H.labels,
    )
    if verify:
        from .comodule import check_comodule_algebra

        flipped = check_left_2cocycle(
            sigma.flip(), opposite_variants(H, "op"), derived_identities=False
        )
        bad = [r for r in flipped if not r.passed]
        if bad:
            raise ConvolutionError(
                f"sigma o tau is not a 2-cocycle for the opposite algebra:"
                f" {bad[0].name} at {bad[0].witness}"
            )
        bad = [r for r in check_comodule_algebra(A, leg="op") if not r.passed]
        if bad:
            raise ConvolutionError(
                f"twisted opposite fails {bad[0].name} at {bad[0].witness}"
            )
        sigma_inv = conv_inverse2(sigma, H)
        for i in range(d):
            for j in range(d):
                expected = H.mult_basis(i, j)
                acc = [f.zero] * d
                for c1, i1, i2 in H.comult[i]:
                    for c2, j1, j2 in H.comult[j]:
                        s = sigma_inv.value(i1, j1)
                        if not s:
                            continue
                        coeff = c1 * c2 * s
                        term = A.mult_basis(j2, i2)
                        for k, x in enumerate(term):
                            if x:
                                acc[k] = acc[k] + coeff * x
                if tuple(acc) != expected:
                    raise ConvolutionError(
                        f"recovery identity fails at ({H.label(i)}, {H.label(j)})"
                    )
    return A


def cohomologous_twist(
    omega: Functional2,
    theta: Functional1,
    H: HopfAlgebraData,
) -> Functional2:
    """Twist a 2-cocycle by a convolution-invertible functional:
    omega^theta(h (x) k) = sum theta(h1) theta(k1) omega(h2 (x) k2)
    theta^{-1}(h3 k3)."""
    f = H.field
    d = H.dim
    theta_inv = conv_inverse(theta, H.coalgebra())
    it3 = H.iterated_comult(3)
    rows = []
    for h in range(d):
        row = []
        for k in range(d):
            acc = f.zero
            for c1, (h1, h2, h3) in it3[h]:
                t1 = theta.values[h1]
                if not t1:
                    continue
                for c2, (k1, k2, k3) in it3[k]:
                    t2 = theta.values[k1]
                    if not t2:
                        continue
                    om = omega.value(h2, k2)
                    if not om:
                        continue
                    tail = theta_inv(H.mult_basis(h3, k3))
                    if tail:
                        acc = acc + c1 * c2 * t1 * t2 * om * tail
            row.append(acc)
        rows.append(tuple(row))
    return Functional2(f, tuple(rows))

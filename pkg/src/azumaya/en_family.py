"""The E(n) Hopf algebras, their universal braiding forms, and the
generalized Clifford algebras that realize their cleft extensions.

E(n) is generated by an order-two group-like c and skew-primitive x_i
(i = 1..n) with c x_i = -x_i c, x_i x_j = -x_j x_i, x_i^2 = 0; the
monomial basis is c^a x_P for a in {0,1} and increasing subsets P.  Basis
index convention: a * 2^n + bits(P) with bit i-1 standing for x_i.

The Clifford side Cl(alpha, gamma, Lambda) uses generators u, v_i with
u^2 = alpha, u v_i + v_i u = gamma_i, v_i v_j + v_j v_i =
lambda_ij + lambda_ji, reduced to the ordered basis u^a v_P by rewriting.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .comodule import ComoduleAlgebraData, check_comodule_algebra
from .convolution import (
    ConvolutionError,
    Functional2,
    check_left_2cocycle,
    conv_inverse2,
    crossed_product,
    twisted_rform,
)
from .fields import FieldContext, QQ, Scalar, scalar_to_str
from .hopf import HopfAlgebraData
from .linalg import ExactMatrix, LinAlgError, pair_index


# -- monomial basis bookkeeping ------------------------------------------


def en_dim(n: int) -> int:
    return 2 ** (n + 1)


def en_index(n: int, a: int, bits: int) -> int:
    return a * 2 ** n + bits


def en_parts(n: int, idx: int) -> tuple[int, int]:
    return divmod(idx, 2 ** n)


def en_label(n: int, idx: int) -> str:
    a, bits = en_parts(n, idx)
    xs = "".join(f"x{i + 1}" for i in range(n) if bits >> i & 1)
    if a == 0 and not xs:
        return "1"
    return ("c" if a else "") + xs


def _popcount(bits: int) -> int:
    return bin(bits).count("1")


def _shuffle_sign(pbits: int, qbits: int) -> int:
    """Sign of merging x_P x_Q into increasing order (disjoint supports)."""
    inv = 0
    q = qbits
    while q:
        low = q & -q
        pos = low.bit_length() - 1
        inv += _popcount(pbits >> (pos + 1))
        q ^= low
    return -1 if inv % 2 else 1


def en_basis_product(n: int, i: int, j: int):
    """Product of two basis monomials: (sign, index) or None if zero."""
    a, pbits = en_parts(n, i)
    b, qbits = en_parts(n, j)
    if pbits & qbits:
        return None
    sign = 1
    if b and _popcount(pbits) % 2:
        sign = -sign
    sign *= _shuffle_sign(pbits, qbits)
    return sign, en_index(n, (a + b) % 2, pbits | qbits)


def _dict_mul(n: int, field, left: dict, right: dict) -> dict:
    """Product in E(n) (x) E(n) on pair-index dicts (componentwise legs)."""
    out: dict = {}
    for (i1, j1), c1 in left.items():
        for (i2, j2), c2 in right.items():
            p = en_basis_product(n, i1, i2)
            if p is None:
                continue
            q = en_basis_product(n, j1, j2)
            if q is None:
                continue
            s1, k1 = p
            s2, k2 = q
            coeff = c1 * c2 * (s1 * s2)
            key = (k1, k2)
            val = out.get(key, field.zero) + coeff
            if val:
                out[key] = val
            elif key in out:
                del out[key]
    return out


def build_en(n: int, field: FieldContext = QQ) -> HopfAlgebraData:
    """Construct E(n) as structure constants over the given field."""
    if n < 1:
        raise ValueError("n must be at least 1")
    d = en_dim(n)
    f = field
    one = f.one

    mult = []
    for i in range(d):
        row = []
        for j in range(d):
            vec = [f.zero] * d
            p = en_basis_product(n, i, j)
            if p is not None:
                s, k = p
                vec[k] = f(s)
            row.append(tuple(vec))
        mult.append(tuple(row))

    c_idx = en_index(n, 1, 0)
    comult = []
    for idx in range(d):
        a, bits = en_parts(n, idx)
        # Multiplicative extension of Delta(c) = c (x) c and
        # Delta(x_i) = 1 (x) x_i + x_i (x) c, evaluated in E(n) (x) E(n).
        acc = {(0, 0): one}
        if a:
            acc = _dict_mul(n, f, acc, {(c_idx, c_idx): one})
        for i in range(n):
            if bits >> i & 1:
                xi = en_index(n, 0, 1 << i)
                factor = {(0, xi): one, (xi, c_idx): one}
                acc = _dict_mul(n, f, acc, factor)
        comult.append(tuple((c, i, j) for (i, j), c in acc.items()))

    counit = tuple(one if en_parts(n, idx)[1] == 0 else f.zero for idx in range(d))

    # Anti-multiplicative extension of S(c) = c, S(x_i) = c x_i.
    antipode_cols = []
    for idx in range(d):
        a, bits = en_parts(n, idx)
        word = []
        for i in reversed(range(n)):
            if bits >> i & 1:
                word.append(en_index(n, 1, 1 << i))
        if a:
            word.append(c_idx)
        sign = 1
        cur = 0
        for w in word:
            p = en_basis_product(n, cur, w)
            s, cur = p
            sign *= s
        col = [f.zero] * d
        col[cur] = f(sign)
        antipode_cols.append(col)
    antipode = ExactMatrix.from_columns(f, antipode_cols)

    unit = [f.zero] * d
    unit[0] = one
    return HopfAlgebraData(
        field=f,
        dim=d,
        mult=tuple(mult),
        unit=tuple(unit),
        comult=tuple(comult),
        counit=counit,
        antipode=antipode,
        labels=tuple(en_label(n, idx) for idx in range(d)),
    )


# -- parameters -----------------------------------------------------------


@dataclass(frozen=True)
class EnParams:
    """One parameter point: braiding matrix A, cocycle data (alpha, gamma,
    Lambda) with Lambda lower triangular and alpha invertible."""

    field: FieldContext
    n: int
    a_matrix: tuple
    alpha: Scalar
    gamma: tuple
    lam: tuple

    def __post_init__(self):
        f = self.field
        n = self.n
        if n < 1:
            raise ValueError("n must be at least 1")
        a = tuple(tuple(f(x) for x in row) for row in self.a_matrix)
        lam = tuple(tuple(f(x) for x in row) for row in self.lam)
        gamma = tuple(f(x) for x in self.gamma)
        alpha = f(self.alpha)
        if len(a) != n or any(len(r) != n for r in a):
            raise ValueError("A must be n x n")
        if len(lam) != n or any(len(r) != n for r in lam):
            raise ValueError("Lambda must be n x n")
        if len(gamma) != n:
            raise ValueError("gamma must have length n")
        if not alpha:
            raise ValueError("alpha must be nonzero")
        for i in range(n):
            for j in range(i + 1, n):
                if lam[i][j]:
                    raise ValueError("Lambda must be lower triangular")
        object.__setattr__(self, "a_matrix", a)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "gamma", gamma)
        object.__setattr__(self, "alpha", alpha)

    def b_matrix(self) -> tuple:
        """b_ij = a_ij - lambda_ij - lambda_ji."""
        n = self.n
        return tuple(
            tuple(self.a_matrix[i][j] - self.lam[i][j] - self.lam[j][i] for j in range(n))
            for i in range(n)
        )

    def gamma_outer(self) -> tuple:
        return tuple(
            tuple(self.gamma[i] * self.gamma[j] for j in range(self.n))
            for i in range(self.n)
        )

    def describe(self) -> dict:
        return {
            "n": self.n,
            "field": self.field.name,
            "alpha": scalar_to_str(self.alpha),
            "gamma": [scalar_to_str(x) for x in self.gamma],
            "lambda": [[scalar_to_str(x) for x in row] for row in self.lam],
            "a": [[scalar_to_str(x) for x in row] for row in self.a_matrix],
        }


# -- universal braiding forms ---------------------------------------------


def rform_en(n: int, a_matrix, field: FieldContext = QQ) -> Functional2:
    """The braiding form attached to an n x n matrix A.

    Supported on pairs of monomials of equal x-degree; on x_P (x) x_F the
    value is +/- the (P, F) minor of A, with the sign pattern fixed by the
    c-exponents and (-1)^{s(s-1)/2} for s = |P|.  In particular
    r(x_i (x) x_j) = a_ij and r(c (x) c) = -1.
    """
    f = field
    d = en_dim(n)
    a = [[f(x) for x in row] for row in a_matrix]
    values = [[f.zero] * d for _ in range(d)]

    def minor_det(prows, fcols) -> Scalar:
        s = len(prows)
        if s == 0:
            return f.one
        sub = ExactMatrix.from_rows(
            f, [[a[p][q] for q in fcols] for p in prows]
        )
        return sub.det()

    positions = list(range(n))
    for s in range(n + 1):
        base_sign = -1 if (s * (s - 1) // 2) % 2 else 1
        parity = -1 if s % 2 else 1
        for prows in combinations(positions, s):
            pbits = 0
            for p in prows:
                pbits |= 1 << p
            for fcols in combinations(positions, s):
                fbits = 0
                for q in fcols:
                    fbits |= 1 << q
                coeff = f(base_sign) * minor_det(prows, fcols)
                if not coeff:
                    continue
                i00 = en_index(n, 0, pbits)
                i10 = en_index(n, 1, pbits)
                j00 = en_index(n, 0, fbits)
                j10 = en_index(n, 1, fbits)
                values[i00][j00] = values[i00][j00] + coeff
                values[i10][j00] = values[i10][j00] + coeff
                values[i00][j10] = values[i00][j10] + parity * coeff
                values[i10][j10] = values[i10][j10] - parity * coeff
    return Functional2(f, tuple(tuple(row) for row in values))


# -- generalized Clifford algebras ----------------------------------------


def clifford_normal_form(params: EnParams, word) -> dict:
    """Reduce a generator word to the ordered basis u^a v_P.

    Generators are encoded 0 = u, i = v_i.  Rewriting uses u^2 = alpha,
    v_i u = gamma_i - u v_i, v_i^2 = lambda_ii, and for i > j
    v_i v_j = (lambda_ij + lambda_ji) - v_j v_i.  The (length, inversions)
    measure drops at every step, so reduction terminates.
    """
    f = params.field
    n = params.n
    out: dict = {}
    stack = [(f.one, tuple(word))]
    while stack:
        coeff, w = stack.pop()
        redex = None
        for i in range(len(w) - 1):
            if w[i] >= w[i + 1]:
                redex = i
                break
        if redex is None:
            a = 0
            bits = 0
            for g in w:
                if g == 0:
                    a ^= 1
                else:
                    bits |= 1 << (g - 1)
            key = en_index(n, a, bits)
            val = out.get(key, f.zero) + coeff
            if val:
                out[key] = val
            elif key in out:
                del out[key]
            continue
        i = redex
        g1, g2 = w[i], w[i + 1]
        head, tail = w[:i], w[i + 2:]
        if g1 == g2 == 0:
            stack.append((coeff * params.alpha, head + tail))
        elif g1 == g2:
            stack.append((coeff * params.lam[g1 - 1][g1 - 1], head + tail))
        elif g2 == 0:
            gam = params.gamma[g1 - 1]
            if gam:
                stack.append((coeff * gam, head + tail))
            stack.append((-coeff, head + (g2, g1) + tail))
        else:
            lam = params.lam[g1 - 1][g2 - 1] + params.lam[g2 - 1][g1 - 1]
            if lam:
                stack.append((coeff * lam, head + tail))
            stack.append((-coeff, head + (g2, g1) + tail))
    return out


def _clifford_word(n: int, idx: int) -> tuple:
    a, bits = en_parts(n, idx)
    word = [0] * a
    for i in range(n):
        if bits >> i & 1:
            word.append(i + 1)
    return tuple(word)


def clifford_label(n: int, idx: int) -> str:
    a, bits = en_parts(n, idx)
    vs = "".join(f"v{i + 1}" for i in range(n) if bits >> i & 1)
    if a == 0 and not vs:
        return "1"
    return ("u" if a else "") + vs


def build_clifford(
    params: EnParams,
    H: HopfAlgebraData | None = None,
    verify: bool = True,
) -> ComoduleAlgebraData:
    """The cleft extension of the base field attached to (alpha, gamma,
    Lambda), as an ordinary comodule algebra over E(n) with coaction
    rho(u) = u (x) c, rho(v_j) = 1 (x) x_j + v_j (x) c extended
    multiplicatively."""
    f = params.field
    n = params.n
    d = en_dim(n)
    if H is None:
        H = build_en(n, f)

    mult = []
    for i in range(d):
        row = []
        for j in range(d):
            nf = clifford_normal_form(params, _clifford_word(n, i) + _clifford_word(n, j))
            vec = [f.zero] * d
            for k, c in nf.items():
                vec[k] = c
            row.append(tuple(vec))
        mult.append(tuple(row))

    c_idx = en_index(n, 1, 0)
    u_idx = en_index(n, 1, 0)
    coaction = []
    for idx in range(d):
        a, bits = en_parts(n, idx)
        acc = {(0, 0): f.one}
        factors = []
        if a:
            factors.append({(u_idx, c_idx): f.one})
        for i in range(n):
            if bits >> i & 1:
                vi = en_index(n, 0, 1 << i)
                xi = en_index(n, 0, 1 << i)
                factors.append({(0, xi): f.one, (vi, c_idx): f.one})
        for factor in factors:
            out: dict = {}
            for (b1, h1), c1 in acc.items():
                for (b2, h2), c2 in factor.items():
                    nf = clifford_normal_form(
                        params, _clifford_word(n, b1) + _clifford_word(n, b2)
                    )
                    ph = en_basis_product(n, h1, h2)
                    if ph is None:
                        continue
                    sh, hk = ph
                    for bk, cb in nf.items():
                        key = (bk, hk)
                        val = out.get(key, f.zero) + c1 * c2 * cb * sh
                        if val:
                            out[key] = val
                        elif key in out:
                            del out[key]
            acc = out
        coaction.append(tuple((c, b, h) for (b, h), c in acc.items()))

    unit = [f.zero] * d
    unit[0] = f.one
    A = ComoduleAlgebraData(
        hopf=H,
        dim=d,
        mult=tuple(mult),
        unit=tuple(unit),
        coaction=tuple(coaction),
        labels=tuple(clifford_label(n, idx) for idx in range(d)),
    )
    if verify:
        bad = [r for r in check_comodule_algebra(A, leg="plain") if not r.passed]
        if bad:
            raise ValueError(
                f"Clifford construction fails {bad[0].name} at {bad[0].witness}"
            )
    return A


# -- cocycle extraction from a cleft extension -----------------------------


def derive_cocycle_from_cleft(
    B: ComoduleAlgebraData,
    H: HopfAlgebraData,
    section: tuple | None = None,
    verify: bool = True,
) -> Functional2:
    """Read the 2-cocycle off a cleft extension through a basis section.

    ``section[i]`` is the B-basis index of the section image of H-basis
    element i (identity by default).  The section is inverted in the
    convolution algebra Hom(H, B); sigma(h (x) k) is the unit coefficient
    of sum phi(h1) phi(k1) phi^{-1}(h2 k2).  A non-scalar value means the
    section is not cleft-compatible.
    """
    f = H.field
    d = H.dim
    m = B.dim
    if section is None:
        if m != d:
            raise ValueError("default section needs matching dimensions")
        section = tuple(range(d))

    # Solve sum phi(h1) psi(h2) = eps(h) 1_B for psi: H -> B.
    rows = [[f.zero] * (m * d) for _ in range(d * m)]
    rhs = [f.zero] * (d * m)
    for h in range(d):
        for c in range(m):
            rhs[pair_index(h, c, m)] = H.counit[h] * B.unit[c]
        for coeff, i, j in H.comult[h]:
            phi_i = section[i]
            for b in range(m):
                col = pair_index(b, j, d)
                vec = B.mult_basis(phi_i, b)
                for c in range(m):
                    if vec[c]:
                        rows[pair_index(h, c, m)][col] = (
                            rows[pair_index(h, c, m)][col] + coeff * vec[c]
                        )
    try:
        flat = ExactMatrix.from_rows(f, rows).solve(rhs)
    except LinAlgError as exc:
        raise ConvolutionError("section is not convolution invertible") from exc
    psi_cols = [
        tuple(flat[pair_index(b, j, d)] for b in range(m)) for j in range(d)
    ]

    def psi(vec) -> tuple:
        out = [f.zero] * m
        for j, c in enumerate(vec):
            if not c:
                continue
            for b, x in enumerate(psi_cols[j]):
                if x:
                    out[b] = out[b] + c * x
        return tuple(out)

    # psi must also be a left convolution inverse.
    for h in range(d):
        acc = [f.zero] * m
        for coeff, i, j in H.comult[h]:
            term = B.multiply(psi(H.basis_vector(i)), B.basis_vector(section[j]))
            for c, x in enumerate(term):
                acc[c] = acc[c] + coeff * x
        if tuple(acc) != tuple(H.counit[h] * u for u in B.unit):
            raise ConvolutionError("section inverse is one-sided")

    unit_pivot = next(c for c, x in enumerate(B.unit) if x)
    values = []
    for h in range(d):
        row = []
        for k in range(d):
            elem = [f.zero] * m
            for c1, h1, h2 in H.comult[h]:
                for c2, k1, k2 in H.comult[k]:
                    prod = B.multiply(
                        B.mult_basis(section[h1], section[k1]),
                        psi(H.mult_basis(h2, k2)),
                    )
                    coeff = c1 * c2
                    for c, x in enumerate(prod):
                        if x:
                            elem[c] = elem[c] + coeff * x
            scalar = elem[unit_pivot] / B.unit[unit_pivot]
            if tuple(elem) != tuple(scalar * u for u in B.unit):
                raise ConvolutionError(
                    f"section is not cleft-compatible at ({H.label(h)}, {H.label(k)})"
                )
            row.append(scalar)
        values.append(tuple(row))
    sigma = Functional2(f, tuple(values))

    if verify:
        bad = [r for r in check_left_2cocycle(sigma, H) if not r.passed]
        if bad:
            raise ConvolutionError(
                f"derived functional fails {bad[0].name} at {bad[0].witness}"
            )
        cp = crossed_product(H, sigma, verify=False)
        for i in range(d):
            for j in range(d):
                expected = B.mult_basis(section[i], section[j])
                image = [f.zero] * m
                for k, c in enumerate(cp.mult_basis(i, j)):
                    if c:
                        image[section[k]] = image[section[k]] + c
                if tuple(image) != expected:
                    raise ConvolutionError(
                        "crossed product does not match the cleft extension "
                        f"at ({H.label(i)}, {H.label(j)})"
                    )
    return sigma


# -- the closed-form criterion --------------------------------------------


def criterion_matrix(params: EnParams) -> ExactMatrix:
    """2 alpha (A - Lambda - Lambda^t) + Gamma with Gamma_ij = gamma_i gamma_j."""
    f = params.field
    n = params.n
    b = params.b_matrix()
    g = params.gamma_outer()
    two_alpha = params.alpha + params.alpha
    rows = [
        [two_alpha * b[i][j] + g[i][j] for j in range(n)]
        for i in range(n)
    ]
    return ExactMatrix.from_rows(f, rows)


def azumaya_criterion(params: EnParams) -> tuple[bool, Scalar]:
    """Closed-form verdict: Azumaya iff the criterion determinant is nonzero."""
    det = criterion_matrix(params).det()
    return (bool(det), det)


# -- generator tables ------------------------------------------------------


@dataclass(frozen=True)
class TableEntry:
    family: str
    left: str
    right: str
    computed: Scalar
    expected: Scalar

    @property
    def match(self) -> bool:
        return self.computed == self.expected


def rsigma_generator_table(
    params: EnParams,
    H: HopfAlgebraData | None = None,
    sigma: Functional2 | None = None,
    r_sigma: Functional2 | None = None,
) -> list[TableEntry]:
    """Values of the twisted braiding form on generator pairs, next to
    their closed forms in alpha, gamma and b_ij = a_ij - l_ij - l_ji."""
    f = params.field
    n = params.n
    if H is None:
        H = build_en(n, f)
    if r_sigma is None:
        if sigma is None:
            cl = build_clifford(params, H, verify=False)
            sigma = derive_cocycle_from_cleft(cl, H, verify=False)
        r = rform_en(n, params.a_matrix, f)
        r_sigma = twisted_rform(r, sigma, H)

    alpha_inv = f.one / params.alpha
    b = params.b_matrix()
    gam = params.gamma
    c = en_index(n, 1, 0)

    def x(i):
        return en_index(n, 0, 1 << i)

    def cx(i):
        return en_index(n, 1, 1 << i)

    lab = H.label
    entries: list[TableEntry] = []
    for j in range(n):
        entries.append(TableEntry(
            "x_j|c", lab(x(j)), lab(c),
            r_sigma.value(x(j), c), -alpha_inv * gam[j],
        ))
        entries.append(TableEntry(
            "c|x_j", lab(c), lab(x(j)),
            r_sigma.value(c, x(j)), -alpha_inv * gam[j],
        ))
        entries.append(TableEntry(
            "c|cx_j", lab(c), lab(cx(j)),
            r_sigma.value(c, cx(j)), gam[j],
        ))
        entries.append(TableEntry(
            "cx_j|c", lab(cx(j)), lab(c),
            r_sigma.value(cx(j), c), gam[j],
        ))
        for i in range(n):
            entries.append(TableEntry(
                "cx_i|cx_j", lab(cx(i)), lab(cx(j)),
                r_sigma.value(cx(i), cx(j)), params.alpha * b[i][j],
            ))
            entries.append(TableEntry(
                "x_i|x_j", lab(x(i)), lab(x(j)),
                r_sigma.value(x(i), x(j)), alpha_inv * b[i][j],
            ))
            entries.append(TableEntry(
                "cx_i|x_j", lab(cx(i)), lab(x(j)),
                r_sigma.value(cx(i), x(j)), b[i][j] + alpha_inv * gam[i] * gam[j],
            ))
            entries.append(TableEntry(
                "x_i|cx_j", lab(x(i)), lab(cx(j)),
                r_sigma.value(x(i), cx(j)), -b[i][j],
            ))
    entries.append(TableEntry(
        "c|c", lab(c), lab(c), r_sigma.value(c, c), -f.one,
    ))
    return entries


def sigma_reference_entries(
    params: EnParams,
    sigma: Functional2,
    sigma_inv: Functional2 | None = None,
    H: HopfAlgebraData | None = None,
) -> list[TableEntry]:
    """Closed forms for the cocycle and its convolution inverse on
    generator pairs: the regression targets for the derived cocycle."""
    f = params.field
    n = params.n
    if H is None:
        H = build_en(n, f)
    if sigma_inv is None:
        sigma_inv = conv_inverse2(sigma, H)
    alpha = params.alpha
    alpha_inv = f.one / alpha
    gam = params.gamma
    lam = params.lam
    c = en_index(n, 1, 0)

    def x(i):
        return en_index(n, 0, 1 << i)

    def cx(i):
        return en_index(n, 1, 1 << i)

    lab = H.label
    entries: list[TableEntry] = []
    entries.append(TableEntry("s:c|c", lab(c), lab(c), sigma.value(c, c), alpha))
    for i in range(n):
        entries.append(TableEntry(
            "s:x_i|c", lab(x(i)), lab(c), sigma.value(x(i), c), gam[i]))
        entries.append(TableEntry(
            "s:c|x_i", lab(c), lab(x(i)), sigma.value(c, x(i)), f.zero))
        entries.append(TableEntry(
            "s:cx_i|c", lab(cx(i)), lab(c), sigma.value(cx(i), c), gam[i]))
        entries.append(TableEntry(
            "s:c|cx_i", lab(c), lab(cx(i)), sigma.value(c, cx(i)), f.zero))
        for j in range(n):
            entries.append(TableEntry(
                "s:x_i|x_j", lab(x(i)), lab(x(j)),
                sigma.value(x(i), x(j)), lam[i][j]))
            entries.append(TableEntry(
                "s:cx_i|x_j", lab(cx(i)), lab(x(j)),
                sigma.value(cx(i), x(j)), lam[i][j]))
            entries.append(TableEntry(
                "s:x_i|cx_j", lab(x(i)), lab(cx(j)),
                sigma.value(x(i), cx(j)), -lam[i][j]))
            entries.append(TableEntry(
                "s:cx_i|cx_j", lab(cx(i)), lab(cx(j)),
                sigma.value(cx(i), cx(j)), -alpha * lam[i][j]))
    entries.append(TableEntry(
        "si:c|c", lab(c), lab(c), sigma_inv.value(c, c), alpha_inv))
    for i in range(n):
        entries.append(TableEntry(
            "si:c|x_i", lab(c), lab(x(i)), sigma_inv.value(c, x(i)), f.zero))
        entries.append(TableEntry(
            "si:x_i|c", lab(x(i)), lab(c), sigma_inv.value(x(i), c),
            -alpha_inv * gam[i]))
        entries.append(TableEntry(
            "si:c|cx_i", lab(c), lab(cx(i)), sigma_inv.value(c, cx(i)), f.zero))
        entries.append(TableEntry(
            "si:cx_i|c", lab(cx(i)), lab(c), sigma_inv.value(cx(i), c),
            -alpha_inv * gam[i]))
        for j in range(n):
            entries.append(TableEntry(
                "si:x_i|x_j", lab(x(i)), lab(x(j)),
                sigma_inv.value(x(i), x(j)), -alpha_inv * lam[i][j]))
            entries.append(TableEntry(
                "si:cx_i|x_j", lab(cx(i)), lab(x(j)),
                sigma_inv.value(cx(i), x(j)), -lam[i][j]))
            entries.append(TableEntry(
                "si:x_i|cx_j", lab(x(i)), lab(cx(j)),
                sigma_inv.value(x(i), cx(j)), lam[i][j]))
            entries.append(TableEntry(
                "si:cx_i|cx_j", lab(cx(i)), lab(cx(j)),
                sigma_inv.value(cx(i), cx(j)), lam[i][j]))
    return entries

import random
from fractions import Fraction

import pytest

from azumaya.checks import all_passed
from azumaya.comodule import check_comodule_algebra
from azumaya.convolution import (
    ConvolutionError,
    check_dqt_rform,
    check_left_2cocycle,
    crossed_product,
    trivial_cocycle,
)
from azumaya.fields import QQ, PrimeField
from azumaya.hopf import verify_hopf_axioms
from azumaya.en_family import (
    EnParams,
    azumaya_criterion,
    build_clifford,
    build_en,
    clifford_normal_form,
    criterion_matrix,
    derive_cocycle_from_cleft,
    en_dim,
    en_index,
    en_label,
    rform_en,
    rsigma_generator_table,
    sigma_reference_entries,
)
from azumaya.linalg import ExactMatrix

from conftest import params1


def test_dimensions_and_labels():
    assert en_dim(1) == 4 and en_dim(2) == 8 and en_dim(3) == 16
    assert en_label(2, en_index(2, 1, 0b11)) == "cx1x2"
    assert en_label(2, 0) == "1"
    with pytest.raises(ValueError):
        build_en(0)


def test_e1_is_the_four_dimensional_algebra(e1):
    assert e1.dim == 4
    assert all_passed(verify_hopf_axioms(e1))
    x = en_index(1, 0, 1)
    c = en_index(1, 1, 0)
    assert all(v == 0 for v in e1.mult_basis(x, x))
    assert tuple(e1.mult_basis(c, x)) == tuple(-v for v in e1.mult_basis(x, c))


def test_e3_axioms(e3):
    assert all_passed(verify_hopf_axioms(e3))


def test_antipode_square_is_grading_sign(e2):
    s2 = e2.antipode @ e2.antipode
    for idx in range(e2.dim):
        col = s2.column(idx)
        bits = idx % 4
        sign = -1 if bin(bits).count("1") % 2 else 1
        assert col[idx] == sign


# -- braiding forms -------------------------------------------------------------


def test_rform_generator_values(e2):
    a = ((Fraction(1), Fraction(2)), (Fraction(-1, 2), Fraction(3)))
    r = rform_en(2, a, QQ)
    c = en_index(2, 1, 0)
    for i in range(2):
        for j in range(2):
            xi = en_index(2, 0, 1 << i)
            xj = en_index(2, 0, 1 << j)
            assert r.value(xi, xj) == a[i][j]
    assert r.value(c, c) == -1
    assert r.value(0, c) == 1 and r.value(c, 0) == 1


def test_rform_zero_matrix_supported_on_grouplikes(e1):
    r = rform_en(1, [[0]], QQ)
    group = {0, en_index(1, 1, 0)}
    for i in range(e1.dim):
        for j in range(e1.dim):
            if r.value(i, j):
                assert i in group and j in group


def test_rform_passes_checks_n2(e2):
    rng = random.Random(2)
    for _ in range(3):
        a = [[Fraction(rng.randint(-2, 2)) for _ in range(2)] for _ in range(2)]
        assert all_passed(check_dqt_rform(rform_en(2, a, QQ), e2))


def test_rform_passes_checks_n3_nonsymmetric(e3):
    # size-3 minors exercise the full sign pattern of the formula
    a = ((2, -1, -1), (0, 1, 2), (2, -1, 2))
    assert all_passed(check_dqt_rform(rform_en(3, a, QQ), e3))


# -- Clifford algebras -----------------------------------------------------------


def test_clifford_exterior_like_case(e1):
    p = params1(1, 0, 0)
    cl = build_clifford(p, e1)
    u = en_index(1, 1, 0)
    v = en_index(1, 0, 1)
    assert cl.mult_basis(u, u)[0] == 1
    assert all(x == 0 for x in cl.mult_basis(v, v))


def test_clifford_h4_module_algebra_relations(e1):
    alpha, beta, gamma = Fraction(2), Fraction(1, 2), Fraction(3)
    p = params1(alpha, gamma, beta)
    cl = build_clifford(p, e1)
    u = en_index(1, 1, 0)
    v = en_index(1, 0, 1)
    sq_u = cl.mult_basis(u, u)
    sq_v = cl.mult_basis(v, v)
    assert sq_u[0] == alpha and all(x == 0 for x in sq_u[1:])
    assert sq_v[0] == beta and all(x == 0 for x in sq_v[1:])
    anti = [a + b for a, b in zip(cl.mult_basis(u, v), cl.mult_basis(v, u))]
    assert anti[0] == gamma and all(x == 0 for x in anti[1:])


def test_clifford_dimension_and_comodule(e2):
    p = EnParams(QQ, 2, ((0, 0), (0, 0)), 3, (1, 2), ((1, 0), (2, -1)))
    cl = build_clifford(p, e2)
    assert cl.dim == en_dim(2)
    assert all_passed(check_comodule_algebra(cl, leg="plain"))


def test_clifford_rewriting_confluence():
    # splitting a word anywhere and reducing the pieces first gives the
    # same normal form as reducing the whole word
    p = EnParams(QQ, 3, [[0] * 3] * 3, 2, (1, -1, 2), ((1, 0, 0), (2, 1, 0), (0, -1, 1)))
    rng = random.Random(12)
    gens = list(range(4))  # 0 = u, 1..3 = v_i
    for _ in range(40):
        word = tuple(rng.choice(gens) for _ in range(rng.randint(2, 7)))
        whole = clifford_normal_form(p, word)
        cut = rng.randint(0, len(word))
        left = clifford_normal_form(p, word[:cut])
        right = clifford_normal_form(p, word[cut:])
        recombined: dict = {}
        for k1, c1 in left.items():
            for k2, c2 in right.items():
                w1 = _word_of(3, k1)
                w2 = _word_of(3, k2)
                for k3, c3 in clifford_normal_form(p, w1 + w2).items():
                    val = recombined.get(k3, QQ.zero) + c1 * c2 * c3
                    if val:
                        recombined[k3] = val
                    elif k3 in recombined:
                        del recombined[k3]
        assert recombined == whole


def _word_of(n, idx):
    a, bits = divmod(idx, 2 ** n)
    word = [0] * a
    for i in range(n):
        if bits >> i & 1:
            word.append(i + 1)
    return tuple(word)


# -- cocycle extraction ------------------------------------------------------------


def test_identity_section_gives_trivial_cocycle(e1):
    from azumaya.comodule import hopf_as_comodule_algebra

    b = hopf_as_comodule_algebra(e1)
    sigma = derive_cocycle_from_cleft(b, e1)
    assert sigma.values == trivial_cocycle(e1).values


def test_sigma_tables_n1(e1):
    p = params1(Fraction(-3, 2), Fraction(2), Fraction(5))
    cl = build_clifford(p, e1, verify=False)
    sigma = derive_cocycle_from_cleft(cl, e1)
    entries = sigma_reference_entries(p, sigma, H=e1)
    assert entries and all(e.match for e in entries)


def test_sigma_tables_n2(e2):
    p = EnParams(QQ, 2, ((1, 0), (0, 1)), 2, (1, -1), ((Fraction(1, 2), 0), (3, -2)))
    cl = build_clifford(p, e2, verify=False)
    sigma = derive_cocycle_from_cleft(cl, e2)
    entries = sigma_reference_entries(p, sigma, H=e2)
    assert all(e.match for e in entries)


def test_derive_then_crossed_product_round_trip(e2):
    p = EnParams(QQ, 2, ((0, 0), (0, 0)), 2, (0, 1), ((1, 0), (1, 1)))
    cl = build_clifford(p, e2, verify=False)
    sigma = derive_cocycle_from_cleft(cl, e2, verify=True)  # includes the iso check
    cp = crossed_product(e2, sigma, verify=False)
    assert cp.mult == cl.mult


def test_incompatible_section_rejected(e1):
    # a scrambled section is not a unital comodule section, and the
    # convolution-inverse solve detects it
    p = params1(1, 1, 0)
    cl = build_clifford(p, e1, verify=False)
    with pytest.raises(ConvolutionError):
        derive_cocycle_from_cleft(cl, e1, section=(1, 0, 2, 3))


def test_nonscalar_cleft_coefficient_rejected(e1):
    # an algebra that is not a cleft extension of the base field: the
    # square of the wanted scalar element is not scalar
    from azumaya.comodule import ComoduleAlgebraData

    mult = [[None] * 4 for _ in range(4)]
    ident = ExactMatrix.identity(QQ, 4)
    for i in range(4):
        for j in range(4):
            if i == 0:
                mult[i][j] = tuple(ident.column(j))
            elif j == 0:
                mult[i][j] = tuple(ident.column(i))
            else:
                vec = [QQ.zero] * 4
                vec[min(i + j, 3)] = QQ.one  # truncated-polynomial style
                mult[i][j] = tuple(vec)
    b = ComoduleAlgebraData(
        hopf=e1, dim=4, mult=tuple(map(tuple, mult)), unit=(1, 0, 0, 0),
        coaction=e1.comult,
    )
    with pytest.raises(ConvolutionError):
        derive_cocycle_from_cleft(b, e1)


# -- the closed-form criterion -------------------------------------------------------


def test_criterion_reduces_to_braiding_determinant():
    rng = random.Random(7)
    for _ in range(5):
        a = [[Fraction(rng.randint(-3, 3)) for _ in range(2)] for _ in range(2)]
        p = EnParams(QQ, 2, tuple(map(tuple, a)), 1, (0, 0), ((0, 0), (0, 0)))
        ok, det = azumaya_criterion(p)
        a_det = ExactMatrix.from_rows(QQ, a).det()
        assert ok == (a_det != 0)
        assert det == 4 * a_det  # det(2A) = 2^n det(A)


def test_criterion_reduces_to_symmetrized_lambda():
    rng = random.Random(8)
    for _ in range(5):
        lam = [[Fraction(rng.randint(-3, 3)), 0], [Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3))]]
        p = EnParams(QQ, 2, ((0, 0), (0, 0)), 1, (0, 0), tuple(map(tuple, lam)))
        ok, det = azumaya_criterion(p)
        sym = ExactMatrix.from_rows(
            QQ, [[lam[i][j] + lam[j][i] for j in range(2)] for i in range(2)]
        )
        assert ok == (sym.det() != 0)


def test_criterion_h4_closed_form():
    for alpha, gamma, lam, t in [(1, 0, 0, 1), (2, 1, Fraction(1, 2), -2), (1, 2, 1, 0)]:
        p = params1(alpha, gamma, lam, t=t)
        ok, det = azumaya_criterion(p)
        closed = 2 * QQ(alpha) * (QQ(t) - 2 * QQ(lam)) + QQ(gamma) ** 2
        assert det == closed and ok == (closed != 0)


def test_criterion_matrix_shape(e2):
    p = EnParams(QQ, 2, ((1, 2), (3, 4)), 2, (1, 1), ((1, 0), (1, 1)))
    m = criterion_matrix(p)
    assert m.rows == m.cols == 2
    b = p.b_matrix()
    g = p.gamma_outer()
    for i in range(2):
        for j in range(2):
            assert m.entry(i, j) == 4 * b[i][j] + g[i][j]


def test_alpha_zero_rejected():
    with pytest.raises(ValueError):
        params1(0, 1, 1)


def test_lambda_must_be_lower_triangular():
    with pytest.raises(ValueError):
        EnParams(QQ, 2, ((0, 0), (0, 0)), 1, (0, 0), ((0, 1), (0, 0)))


# -- generator tables -------------------------------------------------------------------


def test_rsigma_table_trivial_cocycle_reduces_to_rform(e1):
    # alpha=1, gamma=0, lambda=0: the twisted form equals the plain one on
    # generators except the closed forms already encode it; check directly
    p = params1(1, 0, 0, t=Fraction(5, 2))
    entries = rsigma_generator_table(p, e1)
    r = rform_en(1, [[Fraction(5, 2)]], QQ)
    x = en_index(1, 0, 1)
    by_family = {e.family: e for e in entries}
    assert by_family["x_i|x_j"].computed == r.value(x, x)
    assert all(e.match for e in entries)


def test_rsigma_table_five_points_n1(e1):
    points = [
        params1(1, 0, 0, t=1),
        params1(2, 1, Fraction(1, 2), t=3),
        params1(Fraction(-1, 2), 2, 1, t=0),
        params1(3, -1, -2, t=-1),
        params1(Fraction(5, 3), Fraction(1, 3), Fraction(2, 5), t=Fraction(7, 2)),
    ]
    for p in points:
        assert all(e.match for e in rsigma_generator_table(p, e1))


def test_prime_field_construction():
    f7 = PrimeField(7)
    h = build_en(2, f7)
    assert all_passed(verify_hopf_axioms(h))
    p = EnParams(f7, 2, ((1, 0), (0, 1)), 2, (1, 0), ((1, 0), (0, 1)))
    cl = build_clifford(p, h, verify=False)
    sigma = derive_cocycle_from_cleft(cl, h, verify=False)
    assert all_passed(check_left_2cocycle(sigma, h, derived_identities=False))


def test_cocycle_round_trip_through_crossed_product(e1, e2):
    # starting from a derived cocycle, the crossed product with the
    # identity section gives the same cocycle back
    points = {
        1: params1(2, 1, Fraction(1, 2)),
        2: EnParams(QQ, 2, ((0, 0), (0, 0)), 3, (1, -1), ((1, 0), (2, 1))),
    }
    for n, h in ((1, e1), (2, e2)):
        p = points[n]
        cl = build_clifford(p, h, verify=False)
        sigma = derive_cocycle_from_cleft(cl, h, verify=False)
        cp = crossed_product(h, sigma, verify=False)
        again = derive_cocycle_from_cleft(cp, h, verify=False)
        assert again.values == sigma.values


def test_lazy_cocycle_n2(e2):
    from azumaya.convolution import doi_twist

    p = EnParams(QQ, 2, ((0, 0), (0, 0)), 1, (0, 0), ((2, 0), (Fraction(1, 2), -1)))
    cl = build_clifford(p, e2, verify=False)
    sigma = derive_cocycle_from_cleft(cl, e2, verify=False)
    twisted = doi_twist(e2, sigma)
    assert twisted.mult == e2.mult

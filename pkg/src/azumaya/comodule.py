"""Comodules and comodule algebras over a fixed Hopf algebra.

A coaction is stored as sparse triples per basis element:
``rho(e_a) = sum coeff * e_{a'} (x) e_h`` becomes ``(coeff, a', h)``.

Algebras in the braided category of right H-comodules are exactly the
H^op-comodule algebras: the coaction is multiplicative with the H-legs
multiplied in reverse order.  Ordinary (cleft-extension style) comodule
algebras multiply the H-legs in the plain order.  ``check_comodule_algebra``
takes the leg convention as a parameter; ``op`` is the braided-category
default.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .checks import CheckResult
from .hopf import HopfAlgebraData, normalize_triples


@dataclass(frozen=True)
class ComoduleData:
    """A right H-comodule given by coaction triples."""

    hopf: HopfAlgebraData
    dim: int
    coaction: tuple
    labels: tuple | None = None

    def __post_init__(self):
        f = self.hopf.field
        object.__setattr__(
            self, "coaction", tuple(normalize_triples(f, t) for t in self.coaction)
        )
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(f"a{i}" for i in range(self.dim)))


@dataclass(frozen=True)
class ComoduleAlgebraData:
    """An algebra that is also a right comodule over its ambient H."""

    hopf: HopfAlgebraData
    dim: int
    mult: tuple
    unit: tuple
    coaction: tuple
    labels: tuple | None = None
    _cache: dict = dc_field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        f = self.hopf.field
        mult = tuple(
            tuple(tuple(f(x) for x in vec) for vec in row) for row in self.mult
        )
        object.__setattr__(self, "mult", mult)
        object.__setattr__(self, "unit", tuple(f(x) for x in self.unit))
        object.__setattr__(
            self, "coaction", tuple(normalize_triples(f, t) for t in self.coaction)
        )
        if self.labels is None:
            object.__setattr__(self, "labels", tuple(f"a{i}" for i in range(self.dim)))

    @property
    def field(self):
        return self.hopf.field

    def zero_vector(self) -> list:
        return [self.field.zero] * self.dim

    def basis_vector(self, i: int) -> tuple:
        v = self.zero_vector()
        v[i] = self.field.one
        return tuple(v)

    def mult_basis(self, i: int, j: int) -> tuple:
        return self.mult[i][j]

    def multiply(self, u, v) -> tuple:
        out = self.zero_vector()
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.mult[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in enumerate(row[j]):
                    if c:
                        out[k] = out[k] + ab * c
        return tuple(out)

    def multiply_many(self, vectors) -> tuple:
        acc = self.unit
        for v in vectors:
            acc = self.multiply(acc, v)
        return acc

    def comodule(self) -> ComoduleData:
        return ComoduleData(self.hopf, self.dim, self.coaction, self.labels)

    def label(self, i: int) -> str:
        return self.labels[i]


def regular_comodule(H: HopfAlgebraData) -> ComoduleData:
    """H as a right comodule over itself via the coproduct."""
    return ComoduleData(H, H.dim, H.comult, H.labels)


def trivial_comodule_algebra(H: HopfAlgebraData) -> ComoduleAlgebraData:
    """The base field as a comodule algebra (1 |-> 1 (x) 1)."""
    f = H.field
    unit_triples = tuple(
        (c, 0, h) for h, c in enumerate(H.unit) if c
    )
    return ComoduleAlgebraData(
        hopf=H,
        dim=1,
        mult=(((f.one,),),),
        unit=(f.one,),
        coaction=(unit_triples,),
        labels=("1",),
    )


def hopf_as_comodule_algebra(H: HopfAlgebraData, opposite: bool = False) -> ComoduleAlgebraData:
    """H (or H^op) with coaction the coproduct."""
    mult = H.mult
    if opposite:
        d = H.dim
        mult = tuple(tuple(H.mult[j][i] for j in range(d)) for i in range(d))
    return ComoduleAlgebraData(
        hopf=H,
        dim=H.dim,
        mult=mult,
        unit=H.unit,
        coaction=H.comult,
        labels=H.labels,
    )


def check_comodule(P: ComoduleData) -> list[CheckResult]:
    """Coassociativity and counitality of a coaction."""
    H = P.hopf
    f = H.field
    results = []

    witness = None
    for a in range(P.dim):
        left: dict = {}
        right: dict = {}
        for c, a0, h in P.coaction[a]:
            for c2, a00, h2 in P.coaction[a0]:
                key = (a00, h2, h)
                left[key] = left.get(key, f.zero) + c * c2
            for c2, h1, h2 in H.comult[h]:
                key = (a0, h1, h2)
                right[key] = right.get(key, f.zero) + c * c2
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        if left != right:
            witness = P.labels[a]
            break
    results.append(CheckResult("coaction-coassociativity", witness is None, witness))

    witness = None
    for a in range(P.dim):
        vec = [f.zero] * P.dim
        for c, a0, h in P.coaction[a]:
            vec[a0] = vec[a0] + c * H.counit[h]
        expected = [f.zero] * P.dim
        expected[a] = f.one
        if vec != expected:
            witness = P.labels[a]
            break
    results.append(CheckResult("coaction-counit", witness is None, witness))
    return results


def check_comodule_algebra(A: ComoduleAlgebraData, leg: str = "op") -> list[CheckResult]:
    """Comodule axioms plus multiplicativity of the coaction.

    ``leg='op'`` checks rho(ab) = sum a0*b0 (x) b1*a1 (an algebra in the
    braided comodule category); ``leg='plain'`` checks the ordinary
    comodule-algebra order a1*b1.
    """
    if leg not in ("op", "plain"):
        raise ValueError("leg must be 'op' or 'plain'")
    H = A.hopf
    f = H.field
    results = check_comodule(A.comodule())

    witness = None
    for i in range(A.dim):
        e = A.basis_vector(i)
        if A.multiply(A.unit, e) != e or A.multiply(e, A.unit) != e:
            witness = A.labels[i]
            break
    results.append(CheckResult("algebra-unit", witness is None, witness))

    witness = None
    for i in range(A.dim):
        for j in range(A.dim):
            ij = A.mult_basis(i, j)
            for k in range(A.dim):
                left = A.multiply(ij, A.basis_vector(k))
                right = A.multiply(A.basis_vector(i), A.mult_basis(j, k))
                if left != right:
                    witness = f"({A.labels[i]}, {A.labels[j]}, {A.labels[k]})"
                    break
            if witness:
                break
        if witness:
            break
    results.append(CheckResult("algebra-associativity", witness is None, witness))

    unit_pairs: dict = {}
    for a, c in enumerate(A.unit):
        if not c:
            continue
        for c2, a0, h in A.coaction[a]:
            key = (a0, h)
            unit_pairs[key] = unit_pairs.get(key, f.zero) + c * c2
    expected: dict = {}
    for a, c in enumerate(A.unit):
        if not c:
            continue
        for h, c2 in enumerate(H.unit):
            if c2:
                expected[(a, h)] = c * c2
    unit_pairs = {k: v for k, v in unit_pairs.items() if v}
    ok = unit_pairs == expected
    results.append(CheckResult("coaction-unit", ok, None if ok else "1"))

    witness = None
    for i in range(A.dim):
        for j in range(A.dim):
            lhs: dict = {}
            for a, c in enumerate(A.mult_basis(i, j)):
                if not c:
                    continue
                for c2, a0, h in A.coaction[a]:
                    key = (a0, h)
                    val = lhs.get(key, f.zero) + c * c2
                    if val:
                        lhs[key] = val
                    elif key in lhs:
                        del lhs[key]
            rhs: dict = {}
            for c1, i0, h1 in A.coaction[i]:
                for c2, j0, h2 in A.coaction[j]:
                    coeff = c1 * c2
                    prod_a = A.mult_basis(i0, j0)
                    if leg == "op":
                        prod_h = H.mult_basis(h2, h1)
                    else:
                        prod_h = H.mult_basis(h1, h2)
                    for a, ca in enumerate(prod_a):
                        if not ca:
                            continue
                        for h, ch in enumerate(prod_h):
                            if not ch:
                                continue
                            key = (a, h)
                            val = rhs.get(key, f.zero) + coeff * ca * ch
                            if val:
                                rhs[key] = val
                            elif key in rhs:
                                del rhs[key]
            if lhs != rhs:
                witness = f"({A.labels[i]}, {A.labels[j]})"
                break
        if witness:
            break
    results.append(
        CheckResult(f"coaction-multiplicative[{leg}]", witness is None, witness)
    )
    return results


"""Finite-dimensional Hopf algebras as exact structure constants.

Elements are dense coefficient tuples over the basis.  Multiplication is
stored densely (``mult[i][j]`` is the coefficient vector of ``e_i e_j``);
comultiplication is a sparse list of ``(coeff, i, j)`` triples per basis
element, meaning ``coeff * e_i (x) e_j`` summands.  The antipode is kept
as a matrix whose column j holds the coefficients of S(e_j).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .checks import CheckResult
from .fields import FieldContext, Scalar
from .linalg import ExactMatrix, LinAlgError, pair_index

Triples = tuple  # tuple[tuple[Scalar, int, int], ...] per basis element


def normalize_triples(field: FieldContext, triples) -> tuple:
    """Merge duplicate (i, j) slots, drop zeros, sort; canonical form."""
    acc: dict = {}
    for coeff, i, j in triples:
        c = field(coeff)
        if not c:
            continue
        key = (i, j)
        prev = acc.get(key)
        s = c if prev is None else prev + c
        if s:
            acc[key] = s
        elif prev is not None:
            del acc[key]
    return tuple((acc[k], k[0], k[1]) for k in sorted(acc))


def _default_labels(dim: int) -> tuple:
    return tuple(f"e{i}" for i in range(dim))


@dataclass(frozen=True)
class CoalgebraData:
    """A coalgebra given by comultiplication triples and a counit vector."""

    field: FieldContext
    dim: int
    comult: Triples
    counit: tuple
    labels: tuple | None = None

    def __post_init__(self):
        norm = tuple(normalize_triples(self.field, t) for t in self.comult)
        object.__setattr__(self, "comult", norm)
        object.__setattr__(self, "counit", tuple(self.field(x) for x in self.counit))


@dataclass(frozen=True)
class HopfAlgebraData:
    """Single source of truth for one Hopf algebra H.

    Treat instances as immutable; the private cache only memoizes derived
    data (iterated coproducts, tensor-square coalgebras).
    """

    field: FieldContext
    dim: int
    mult: tuple        # mult[i][j] -> coefficient vector of e_i e_j
    unit: tuple
    comult: Triples
    counit: tuple
    antipode: ExactMatrix
    labels: tuple | None = None
    _cache: dict = dc_field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        f = self.field
        mult = tuple(
            tuple(tuple(f(x) for x in vec) for vec in row) for row in self.mult
        )
        object.__setattr__(self, "mult", mult)
        object.__setattr__(self, "unit", tuple(f(x) for x in self.unit))
        object.__setattr__(
            self, "comult", tuple(normalize_triples(f, t) for t in self.comult)
        )
        object.__setattr__(self, "counit", tuple(f(x) for x in self.counit))
        if self.labels is None:
            object.__setattr__(self, "labels", _default_labels(self.dim))

    # -- element helpers ----------------------------------------------

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

    def counit_of(self, vec) -> Scalar:
        acc = self.field.zero
        for a, e in zip(vec, self.counit):
            if a and e:
                acc = acc + a * e
        return acc

    def comult_vec(self, vec) -> list:
        out = []
        for h, a in enumerate(vec):
            if not a:
                continue
            out.extend((a * c, i, j) for c, i, j in self.comult[h])
        return out

    def iterated_comult(self, legs: int) -> tuple:
        """Per basis element, the summands of the (legs-1)-fold coproduct
        as (coeff, index-tuple) pairs; legs=1 is the identity."""
        if legs < 1:
            raise ValueError("need at least one leg")
        key = ("iterated", legs)
        cached = self._cache.get(key)
        if cached is not None:
            return cached
        if legs == 1:
            out = tuple(((self.field.one, (h,)),) for h in range(self.dim))
        else:
            prev = self.iterated_comult(legs - 1)
            rows = []
            for h in range(self.dim):
                terms = []
                for coeff, idx in prev[h]:
                    first = idx[0]
                    rest = idx[1:]
                    for c, a, b in self.comult[first]:
                        terms.append((coeff * c, (a, b) + rest))
                rows.append(tuple(terms))
            out = tuple(rows)
        self._cache[key] = out
        return out

    def coalgebra(self) -> CoalgebraData:
        return CoalgebraData(self.field, self.dim, self.comult, self.counit, self.labels)

    def antipode_of_basis(self, j: int) -> tuple:
        return self.antipode.column(j)

    def apply_antipode(self, vec) -> tuple:
        return self.antipode.apply(vec)

    def label(self, i: int) -> str:
        return self.labels[i]

    def index_of_label(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError as exc:
            raise KeyError(f"no basis element labeled {label!r}") from exc


def same_structure(a: HopfAlgebraData, b: HopfAlgebraData) -> bool:
    """Equality of structure constants (labels ignored)."""
    return (
        a.field == b.field
        and a.dim == b.dim
        and a.mult == b.mult
        and a.unit == b.unit
        and a.comult == b.comult
        and a.counit == b.counit
        and a.antipode == b.antipode
    )


def _pair_dict(field, triples) -> dict:
    acc: dict = {}
    for c, i, j in triples:
        if not c:
            continue
        key = (i, j)
        s = acc.get(key, field.zero) + c
        if s:
            acc[key] = s
        elif key in acc:
            del acc[key]
    return acc


def verify_hopf_axioms(H: HopfAlgebraData) -> list[CheckResult]:
    """Exhaustively check every Hopf axiom over all basis tuples."""
    f = H.field
    d = H.dim
    results: list[CheckResult] = []
    lab = H.label

    witness = None
    for i in range(d):
        for j in range(d):
            ij = H.mult_basis(i, j)
            for k in range(d):
                left = H.multiply(ij, H.basis_vector(k))
                right = H.multiply(H.basis_vector(i), H.mult_basis(j, k))
                if left != right:
                    witness = f"({lab(i)}, {lab(j)}, {lab(k)})"
                    break
            if witness:
                break
        if witness:
            break
    results.append(CheckResult("mult-associativity", witness is None, witness))

    witness = None
    for i in range(d):
        e = H.basis_vector(i)
        if H.multiply(H.unit, e) != e or H.multiply(e, H.unit) != e:
            witness = lab(i)
            break
    results.append(CheckResult("mult-unit", witness is None, witness))

    witness = None
    for h in range(d):
        left: dict = {}
        right: dict = {}
        for c, a, b in H.comult[h]:
            for c2, a1, a2 in H.comult[a]:
                key = (a1, a2, b)
                left[key] = left.get(key, f.zero) + c * c2
            for c2, b1, b2 in H.comult[b]:
                key = (a, b1, b2)
                right[key] = right.get(key, f.zero) + c * c2
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        if left != right:
            witness = lab(h)
            break
    results.append(CheckResult("comult-coassociativity", witness is None, witness))

    witness = None
    for h in range(d):
        left = H.zero_vector()
        right = H.zero_vector()
        for c, a, b in H.comult[h]:
            left[b] = left[b] + c * H.counit[a]
            right[a] = right[a] + c * H.counit[b]
        if tuple(left) != H.basis_vector(h) or tuple(right) != H.basis_vector(h):
            witness = lab(h)
            break
    results.append(CheckResult("comult-counit", witness is None, witness))

    witness = None
    for i in range(d):
        for j in range(d):
            prod = H.mult_basis(i, j)
            lhs = _pair_dict(f, H.comult_vec(prod))
            rhs: dict = {}
            for c1, a, b in H.comult[i]:
                for c2, p, q in H.comult[j]:
                    coeff = c1 * c2
                    ap = H.mult_basis(a, p)
                    bq = H.mult_basis(b, q)
                    for s, cs in enumerate(ap):
                        if not cs:
                            continue
                        for t, ct in enumerate(bq):
                            if not ct:
                                continue
                            key = (s, t)
                            val = rhs.get(key, f.zero) + coeff * cs * ct
                            if val:
                                rhs[key] = val
                            elif key in rhs:
                                del rhs[key]
            if lhs != rhs:
                witness = f"({lab(i)}, {lab(j)})"
                break
            eps = H.counit_of(prod)
            if eps != H.counit[i] * H.counit[j]:
                witness = f"({lab(i)}, {lab(j)}) [counit]"
                break
        if witness:
            break
    results.append(CheckResult("bialgebra-multiplicativity", witness is None, witness))

    unit_pairs = _pair_dict(f, H.comult_vec(H.unit))
    expected: dict = {}
    for i, a in enumerate(H.unit):
        if not a:
            continue
        for j, b in enumerate(H.unit):
            if b:
                expected[(i, j)] = a * b
    ok = unit_pairs == expected and H.counit_of(H.unit) == f.one
    results.append(CheckResult("bialgebra-unit", ok, None if ok else "1"))

    witness = None
    for h in range(d):
        left = H.zero_vector()
        right = H.zero_vector()
        for c, a, b in H.comult[h]:
            sa = H.antipode_of_basis(a)
            term = H.multiply(sa, H.basis_vector(b))
            for k, x in enumerate(term):
                left[k] = left[k] + c * x
            sb = H.antipode_of_basis(b)
            term = H.multiply(H.basis_vector(a), sb)
            for k, x in enumerate(term):
                right[k] = right[k] + c * x
        target = tuple(H.counit[h] * u for u in H.unit)
        if tuple(left) != target:
            witness = f"{lab(h)} [left]"
            break
        if tuple(right) != target:
            witness = f"{lab(h)} [right]"
            break
    results.append(CheckResult("antipode", witness is None, witness))

    invertible = H.antipode.det() != 0
    results.append(CheckResult("antipode-invertible", invertible, None if invertible else "S"))
    return results


def antipode_inverse(H: HopfAlgebraData) -> ExactMatrix:
    """Exact inverse of the antipode matrix."""
    try:
        return H.antipode.inverse()
    except LinAlgError as exc:
        raise LinAlgError(
            "antipode is singular: input is not a finite-dimensional Hopf algebra"
        ) from exc


def dualize(H: HopfAlgebraData) -> HopfAlgebraData:
    """The dual Hopf algebra on the dual basis.

    Multiplication transposes the coproduct, comultiplication transposes
    the product, and canonical double-dual identification makes the
    construction an exact involution on structure constants.
    """
    f = H.field
    d = H.dim
    mult = [[[f.zero] * d for _ in range(d)] for _ in range(d)]
    for k in range(d):
        for c, i, j in H.comult[k]:
            mult[i][j][k] = mult[i][j][k] + c
    comult = []
    for k in range(d):
        triples = []
        for i in range(d):
            for j in range(d):
                c = H.mult[i][j][k]
                if c:
                    triples.append((c, i, j))
        comult.append(tuple(triples))
    labels = tuple(f"{l}*" for l in H.labels)
    return HopfAlgebraData(
        field=f,
        dim=d,
        mult=tuple(tuple(tuple(v) for v in row) for row in mult),
        unit=H.counit,
        comult=tuple(comult),
        counit=H.unit,
        antipode=H.antipode.transpose(),
        labels=labels,
    )


def opposite_variants(H: HopfAlgebraData, which: str) -> HopfAlgebraData:
    """Opposite algebra, co-opposite coalgebra, or both.

    ``op`` and ``cop`` take the inverse antipode so the Hopf axioms still
    hold; ``opcop`` keeps S.
    """
    if which not in ("op", "cop", "opcop"):
        raise ValueError("which must be one of 'op', 'cop', 'opcop'")
    mult = H.mult
    comult = H.comult
    if which in ("op", "opcop"):
        d = H.dim
        mult = tuple(tuple(H.mult[j][i] for j in range(d)) for i in range(d))
    if which in ("cop", "opcop"):
        comult = tuple(
            tuple((c, j, i) for c, i, j in row) for row in H.comult
        )
    antipode = H.antipode if which == "opcop" else antipode_inverse(H)
    return HopfAlgebraData(
        field=H.field,
        dim=H.dim,
        mult=mult,
        unit=H.unit,
        comult=comult,
        counit=H.counit,
        antipode=antipode,
        labels=H.labels,
    )


def tensor_square_coalgebra(H) -> CoalgebraData:
    """Coalgebra on H (x) H with the project-wide flattening.

    Accepts Hopf or coalgebra data; memoized on Hopf inputs since every
    convolution over H (x) H goes through it.
    """
    cache = getattr(H, "_cache", None)
    if cache is not None and "tensor-square" in cache:
        return cache["tensor-square"]
    f = H.field
    d = H.dim
    comult = []
    counit = []
    for h in range(d):
        for k in range(d):
            triples = []
            for c1, a, b in H.comult[h]:
                for c2, p, q in H.comult[k]:
                    triples.append(
                        (c1 * c2, pair_index(a, p, d), pair_index(b, q, d))
                    )
            comult.append(tuple(triples))
            counit.append(H.counit[h] * H.counit[k])
    labels = None
    if H.labels is not None:
        labels = tuple(
            f"{H.labels[h]}|{H.labels[k]}" for h in range(d) for k in range(d)
        )
    out = CoalgebraData(f, d * d, tuple(comult), tuple(counit), labels)
    if cache is not None:
        cache["tensor-square"] = out
    return out


def group_algebra_z2(field: FieldContext) -> HopfAlgebraData:
    """The group algebra of the two-element group: basis (1, g)."""
    one, zero = field.one, field.zero
    mult = (
        (((one, zero)), ((zero, one))),
        (((zero, one)), ((one, zero))),
    )
    comult = (
        ((one, 0, 0),),
        ((one, 1, 1),),
    )
    return HopfAlgebraData(
        field=field,
        dim=2,
        mult=mult,
        unit=(one, zero),
        comult=comult,
        counit=(one, one),
        antipode=ExactMatrix.identity(field, 2),
        labels=("1", "g"),
    )

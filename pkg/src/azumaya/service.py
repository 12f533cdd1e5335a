"""The operations behind the service endpoints and the CLI.

Every entry point takes a request model and returns a report model.
Construction of E(n) is cached per (field, n); everything downstream of
the parameters is computed per request.  Input problems never raise out
of here: they come back as reports with ``error`` set (exit code 2).
"""

from __future__ import annotations

import random
import time
from functools import lru_cache

from .braided import (
    check_canonical_maps,
    check_integral_identities,
    check_twisted_antipode_identities,
    cleft_is_azumaya,
    is_azumaya,
)
from .checks import CheckResult
from .comodule import check_comodule_algebra
from .convolution import (
    ConvolutionError,
    check_dqt_rform,
    check_left_2cocycle,
    conv_inverse2,
    crossed_product,
    twisted_opposite_algebra,
)
from .documents import DocumentError, load_document, hopf_from_document
from .en_family import (
    EnParams,
    azumaya_criterion,
    build_clifford,
    build_en,
    derive_cocycle_from_cleft,
    rform_en,
    rsigma_generator_table,
)
from .fields import FieldError, field_from_name, scalar_to_str
from .hopf import verify_hopf_axioms
from .reports import (
    CheckResultModel,
    EnCheckRequest,
    RouteEvidence,
    SweepPoint,
    SweepReport,
    TableEntryModel,
    TableReport,
    VerdictReport,
    VerifyRequest,
    SweepRequest,
    TableRequest,
)


@lru_cache(maxsize=32)
def _cached_en(field_name: str, n: int):
    return build_en(n, field_from_name(field_name))


def _params_from_request(req) -> EnParams:
    field = field_from_name(req.field)
    n = req.n
    gamma = req.gamma if req.gamma is not None else [0] * n
    lam = req.lam if req.lam is not None else [[0] * n for _ in range(n)]
    return EnParams(
        field=field,
        n=n,
        a_matrix=tuple(tuple(row) for row in req.a),
        alpha=field(req.alpha),
        gamma=tuple(gamma),
        lam=tuple(tuple(row) for row in lam),
    )


def _check_models(results: list[CheckResult]) -> list[CheckResultModel]:
    return [
        CheckResultModel(name=r.name, passed=r.passed, witness=r.witness)
        for r in results
    ]


MAX_N_TWIST_ROUTES = 3  # cocycle solves grow as dim^4; keep them desk-scale


def _en_point_routes(params: EnParams, routes, structural_checks: bool):
    """Run the requested verdict routes at one parameter point."""
    field = params.field
    if params.n > MAX_N_TWIST_ROUTES and ("theta" in routes or "fg" in routes):
        raise ValueError(
            f"routes 'theta' and 'fg' are limited to n <= {MAX_N_TWIST_ROUTES}; "
            f"for n = {params.n} request routes=['det']"
        )
    H = _cached_en(field.name, params.n)
    evidence: list[RouteEvidence] = []
    checks: list[CheckResult] = []

    sigma = None
    sigma_inv = None
    r = None
    if "theta" in routes or "fg" in routes:
        cl = build_clifford(params, H, verify=structural_checks)
        sigma = derive_cocycle_from_cleft(cl, H, verify=structural_checks)
        sigma_inv = conv_inverse2(sigma, H)
        r = rform_en(params.n, params.a_matrix, field)
        if structural_checks:
            checks.extend(check_dqt_rform(r, H))

    if "det" in routes:
        ok, det = azumaya_criterion(params)
        evidence.append(
            RouteEvidence(
                route="det",
                azumaya=ok,
                determinants={"criterion": scalar_to_str(det)},
            )
        )
    if "theta" in routes:
        cleft = cleft_is_azumaya(H, sigma, r, sigma_inv, verify=structural_checks)
        evidence.append(
            RouteEvidence(
                route="theta",
                azumaya=cleft.azumaya,
                determinants={"pairing": scalar_to_str(cleft.pairing_det)},
            )
        )
    if "fg" in routes:
        A = twisted_opposite_algebra(H, sigma, verify=structural_checks)
        ev = is_azumaya(A, r)
        evidence.append(
            RouteEvidence(
                route="fg",
                azumaya=ev.azumaya,
                determinants={
                    "to_end": scalar_to_str(ev.det_to_end),
                    "to_end_op": scalar_to_str(ev.det_to_end_op),
                },
            )
        )
        if structural_checks:
            checks.extend(check_canonical_maps(A, r))
    return evidence, checks


def run_en_check(req: EnCheckRequest) -> VerdictReport:
    start = time.perf_counter()
    echo = req.model_dump()
    try:
        params = _params_from_request(req)
        evidence, checks = _en_point_routes(params, req.routes, req.structural_checks)
    except (FieldError, ValueError, ConvolutionError) as exc:
        return VerdictReport(
            command="en-check",
            input=echo,
            field=req.field,
            error=str(exc),
            azumaya=None,
            elapsed_seconds=time.perf_counter() - start,
        )
    verdicts = {e.azumaya for e in evidence}
    consistent = len(verdicts) <= 1 and all(c.passed for c in checks)
    return VerdictReport(
        command="en-check",
        input=echo,
        field=req.field,
        checks=_check_models(checks),
        routes=evidence,
        azumaya=verdicts.pop() if len(verdicts) == 1 else None,
        consistent=consistent,
        elapsed_seconds=time.perf_counter() - start,
    )


def run_verify(req: VerifyRequest) -> VerdictReport:
    start = time.perf_counter()
    echo = {"document": req.document, "checks": req.checks}
    try:
        doc = load_document(req.document)
        H, functionals = hopf_from_document(doc)
    except DocumentError as exc:
        return VerdictReport(
            command="verify",
            input=echo,
            field=req.document.get("field", "?") if isinstance(req.document, dict) else "?",
            error="; ".join(exc.errors),
            elapsed_seconds=time.perf_counter() - start,
        )
    cocycles = {n: f for n, (role, f) in functionals.items() if role == "cocycle"}
    rforms = {n: f for n, (role, f) in functionals.items() if role == "rform"}

    requested = req.checks
    if requested is None:
        requested = ["hopf", "integrals"]
        if cocycles:
            requested += ["cocycle", "comodule", "twisted-antipode"]
        if rforms:
            requested += ["rform"]

    results: list[CheckResult] = []
    error = None
    try:
        for check in requested:
            if check == "hopf":
                results.extend(verify_hopf_axioms(H))
            elif check == "integrals":
                results.extend(check_integral_identities(H))
            elif check == "cocycle":
                if not cocycles:
                    error = "check 'cocycle' needs a functional with role 'cocycle'"
                    break
                for name, sigma in cocycles.items():
                    for r in check_left_2cocycle(sigma, H):
                        results.append(
                            CheckResult(f"{name}:{r.name}", r.passed, r.witness)
                        )
            elif check == "rform":
                if not rforms:
                    error = "check 'rform' needs a functional with role 'rform'"
                    break
                for name, rf in rforms.items():
                    for r in check_dqt_rform(rf, H):
                        results.append(
                            CheckResult(f"{name}:{r.name}", r.passed, r.witness)
                        )
            elif check == "comodule":
                if not cocycles:
                    error = "check 'comodule' needs a functional with role 'cocycle'"
                    break
                for name, sigma in cocycles.items():
                    try:
                        cp = crossed_product(H, sigma, verify=False)
                        for r in check_comodule_algebra(cp, leg="plain"):
                            results.append(
                                CheckResult(
                                    f"{name}:crossed-{r.name}", r.passed, r.witness
                                )
                            )
                        ta = twisted_opposite_algebra(H, sigma, verify=False)
                        for r in check_comodule_algebra(ta, leg="op"):
                            results.append(
                                CheckResult(
                                    f"{name}:opposite-{r.name}", r.passed, r.witness
                                )
                            )
                    except ConvolutionError as exc:
                        results.append(CheckResult(f"{name}:comodule", False, str(exc)))
            elif check == "twisted-antipode":
                if not cocycles:
                    error = "check 'twisted-antipode' needs a functional with role 'cocycle'"
                    break
                for name, sigma in cocycles.items():
                    try:
                        for r in check_twisted_antipode_identities(H, sigma):
                            results.append(
                                CheckResult(f"{name}:{r.name}", r.passed, r.witness)
                            )
                    except ConvolutionError as exc:
                        results.append(
                            CheckResult(f"{name}:twisted-antipode", False, str(exc))
                        )
    except ConvolutionError as exc:
        error = str(exc)

    return VerdictReport(
        command="verify",
        input=echo,
        field=doc["field"],
        checks=_check_models(results),
        error=error,
        elapsed_seconds=time.perf_counter() - start,
    )


def run_table(req: TableRequest) -> TableReport:
    start = time.perf_counter()
    echo = req.model_dump()
    try:
        params = _params_from_request(req)
        H = _cached_en(params.field.name, params.n)
        entries = rsigma_generator_table(params, H)
    except (FieldError, ValueError, ConvolutionError) as exc:
        return TableReport(
            input=echo,
            field=req.field,
            error=str(exc),
            elapsed_seconds=time.perf_counter() - start,
        )
    models = [
        TableEntryModel(
            family=e.family,
            left=e.left,
            right=e.right,
            computed=scalar_to_str(e.computed),
            expected=scalar_to_str(e.expected),
            match=e.match,
        )
        for e in entries
    ]
    return TableReport(
        input=echo,
        field=req.field,
        entries=models,
        all_match=all(e.match for e in models),
        elapsed_seconds=time.perf_counter() - start,
    )


def _random_point(rng: random.Random, req: SweepRequest) -> dict:
    n = req.n
    return {
        "a": [[rng.randint(req.low, req.high) for _ in range(n)] for _ in range(n)],
        "alpha": str(rng.choice(req.alphas)),
        "gamma": [rng.randint(req.low, req.high) for _ in range(n)],
        "lam": [
            [rng.randint(req.low, req.high) if j <= i else 0 for j in range(n)]
            for i in range(n)
        ],
    }


def run_sweep(req: SweepRequest) -> SweepReport:
    """Seeded random parameter points, each run through the requested
    routes; points are generated and reported in input order."""
    start = time.perf_counter()
    echo = req.model_dump()
    try:
        field = field_from_name(req.field)
    except FieldError as exc:
        return SweepReport(
            input=echo, field=req.field, error=str(exc),
            elapsed_seconds=time.perf_counter() - start,
        )
    rng = random.Random(req.seed)
    points: list[SweepPoint] = []
    disagreements: list[int] = []
    azumaya_count = 0
    for index in range(req.points):
        raw = _random_point(rng, req)
        try:
            params = EnParams(
                field=field,
                n=req.n,
                a_matrix=tuple(tuple(r) for r in raw["a"]),
                alpha=field(raw["alpha"]),
                gamma=tuple(raw["gamma"]),
                lam=tuple(tuple(r) for r in raw["lam"]),
            )
            evidence, _ = _en_point_routes(params, req.routes, False)
        except (FieldError, ValueError, ConvolutionError) as exc:
            return SweepReport(
                input=echo, field=req.field, points=points,
                error=f"point {index}: {exc}",
                elapsed_seconds=time.perf_counter() - start,
            )
        verdicts = {e.azumaya for e in evidence}
        consistent = len(verdicts) == 1
        azumaya = verdicts.pop() if consistent else False
        dets = {}
        for e in evidence:
            for key, val in e.determinants.items():
                dets[f"{e.route}:{key}"] = val
        if not consistent:
            disagreements.append(index)
        if azumaya:
            azumaya_count += 1
        points.append(
            SweepPoint(
                index=index,
                params=raw,
                azumaya=azumaya,
                consistent=consistent,
                determinants=dets,
            )
        )
    return SweepReport(
        input=echo,
        field=req.field,
        points=points,
        disagreements=disagreements,
        azumaya_count=azumaya_count,
        all_consistent=not disagreements,
        elapsed_seconds=time.perf_counter() - start,
    )

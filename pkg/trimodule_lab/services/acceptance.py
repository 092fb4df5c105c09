"""
The acceptance suite: one function per criterion, each returning a ``Report``.

Criteria run in identifier order; every sampled check draws from a generator
seeded with ``settings.sample_seed`` so reports are reproducible.
"""

import time
from dataclasses import replace
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
import structlog

from ..core.config import settings
from ..core.errors import InvariantViolation, PreconditionError
from ..core.logging import get_logger
from ..models.schemas import CriterionResult, Report, SuiteReport
from .bialgebra import (
    BialgebraFD,
    antipode_system,
    bialgebra_from_maps,
    find_antipode,
    find_twisted_antipode,
    validate_bialgebra,
)
from .comodule import BicomoduleFD, cotensor, regular_bicomodule, trivial_comodule, validate_bicomodule
from .exact_kernel import LinearMap, identity
from .fixtures import (
    comodule_pool,
    pointed_example_algebra,
    fixture_bialgebra,
    fixture_bialgebras,
    small_pool,
    trimodule_pool,
)
from .monad_lab import (
    check_linton_coherence,
    free_forgetful_iso,
    fusion_report,
    internal_hom_components,
    is_right_hopf,
    linton_suite,
    monad_instance,
    monad_laws,
    module_monad_compatibility,
    reconstruction_identity,
)
from .serialization import serialize
from .trimodule import (
    HopfTrimoduleFD,
    check_interchange,
    interchange_monoidality,
    regular_trimodule,
    structure_theorem_check,
    trimodule_from_comodule,
    validate_trimodule,
)
from .trimodule_algebra import (
    TrimoduleAlgebraFD,
    b_dot_b,
    certify_cohom,
    cohom,
    contra_vs_modules_count,
    free_module,
    is_semisimple_trimodule_algebra,
    j_functor_report,
    unit_algebra,
    validate_trimodule_algebra,
)

logger = get_logger(__name__)


def _rng() -> np.random.Generator:
    return np.random.default_rng(settings.sample_seed)


def _expect(report: Report, name: str, actual: object, expected: object) -> None:
    ok = actual == expected
    report.add(name, ok, None if ok else f"{actual!r} != {expected!r}")


# ========================
# Criteria
# ========================

def pointed_reconstruction_end_to_end() -> Report:
    """A 1-dim algebra in bidegree (e, e), s acting by 0, μ and η the identity on k."""
    a = pointed_example_algebra()
    k = a.field
    report = Report(subject="pointed reconstruction over k[S], eps(s) = 0")
    report.extend(validate_trimodule_algebra(a))
    _expect(report, "dim", a.dim, 1)
    degree_e = LinearMap.from_rows([[1], [0]], k)
    _expect(report, "left-degree-e", a.carrier.left_coaction, degree_e)
    _expect(report, "right-degree-e", a.carrier.right_coaction, degree_e)
    report.add("s-acts-by-zero", a.carrier.action.select_columns([1]).is_zero())
    _expect(report, "mul", a.mul, identity(1, k))
    _expect(report, "unit", a.unit, LinearMap.from_rows([[1, 0]], k))
    report.add("deterministic", serialize(a) == serialize(pointed_example_algebra()))
    return report


def pointed_reconstruction_hom_data() -> Report:
    """[X, δ_e ▷ X] ≅ δ_e and [X, δ_s ▷ X] = 0, read off componentwise."""
    a = pointed_example_algebra()
    t = monad_instance(a, comodule_pool(a.base))
    report = reconstruction_identity(t, settings.adjunction_samples, _rng())
    components = internal_hom_components(t)
    _expect(report, "internal-hom:e", components["e"], {"e": 1})
    _expect(report, "internal-hom:s", components["s"], {})
    return report


def b_dot_b_suite() -> Report:
    report = Report(subject="B•B")
    rng = _rng()
    for b in fixture_bialgebras().values():
        a = b_dot_b(b)
        pool = comodule_pool(b)
        report.extend(validate_trimodule_algebra(a), prefix=f"{b.name}:")
        for n in pool:
            _expect(report, f"{b.name}:dim:{n.name}", cotensor(a.carrier, n).dim, b.dim * n.dim)
        m, p, q = pool[0], pool[-1], pool[1 % len(pool)]
        report.extend(
            j_functor_report(b, m, p, q, settings.j_functor_samples, rng), prefix=f"{b.name}:J:"
        )
    return report


def semisimplicity_witnesses() -> Report:
    report = Report(subject="semisimplicity")
    cases: List[Tuple[TrimoduleAlgebraFD, bool]] = [
        (b_dot_b(b), True) for b in fixture_bialgebras().values()
    ]
    cases.append((pointed_example_algebra(), True))
    cases.append((unit_algebra(fixture_bialgebra("H4")), False))
    for a, expected in cases:
        pool = comodule_pool(a.base)
        label = f"{a.base.name}:{a.name}"
        try:
            verdict = is_semisimple_trimodule_algebra(a, pool)
        except PreconditionError as exc:
            report.add(f"semisimple:{label}", False, str(exc))
            continue
        _expect(report, f"semisimple:{label}", verdict, expected)
        if verdict:
            counts = contra_vs_modules_count(a, pool)
            report.data[f"counts:{label}"] = counts
            _expect(
                report, f"counts-agree:{label}", counts["module-simples"], counts["contramodule-simples"]
            )
    return report


def antipode_suite() -> Report:
    report = Report(subject="antipodes")
    report.add("antipode:k[Z/2]", find_antipode(fixture_bialgebra("k[Z/2]")) is not None)

    h4 = fixture_bialgebra("H4")
    s = find_antipode(h4)
    report.add("antipode:H4", s is not None)
    if s is not None:
        i4 = identity(4, h4.field)
        report.add("H4:S^2-not-id", s @ s != i4)
        report.add("H4:S^4-id", s @ s @ s @ s == i4)
        twisted = find_twisted_antipode(h4)
        report.add("H4:twisted-is-S^3", twisted is not None and twisted == s @ s @ s)

    ks = fixture_bialgebra("k[S]")
    system = antipode_system(ks)
    certificate = f"rank {system.rank} < augmented rank {system.augmented_rank}"
    report.data["k[S]:certificate"] = certificate
    report.add("no-antipode:k[S]", not system.solvable and system.rank < system.augmented_rank, certificate)
    return report


def fusion_suite() -> Report:
    report = Report(subject="fusion and Galois maps")
    for b in fixture_bialgebras().values():
        try:
            verdict = is_right_hopf(b)
        except InvariantViolation as exc:
            report.add(f"right-hopf:{b.name}", False, str(exc))
            continue
        _expect(report, f"right-hopf:{b.name}", verdict, find_antipode(b) is not None)
        report.extend(fusion_report(b), prefix=f"{b.name}:")
    report.data["k[S]:galois-rank"] = fusion_report(fixture_bialgebra("k[S]")).data["galois-rank"]
    _expect(report, "k[S]:galois-rank", report.data["k[S]:galois-rank"], 3)
    return report


def interchange_suite() -> Report:
    report = Report(subject="interchange")
    rng = _rng()
    for b in fixture_bialgebras().values():
        pool = comodule_pool(b)
        regular = regular_trimodule(b)
        for x in trimodule_pool(b):
            targets = [regular] if x != regular else []
            report.extend(check_interchange(x, pool, settings.naturality_samples, rng, targets))
    algebra = pointed_example_algebra()
    report.extend(check_interchange(
        algebra.carrier, comodule_pool(algebra.base), settings.naturality_samples, rng
    ))
    return report


def _monoidality_cases() -> List[Tuple[List[HopfTrimoduleFD], BialgebraFD]]:
    cases = [
        ([regular_trimodule(b), trimodule_from_comodule(trivial_comodule(b))], b)
        for b in fixture_bialgebras().values()
    ]
    cases.append(([b_dot_b(fixture_bialgebra("k[Z/2]")).carrier], fixture_bialgebra("k[Z/2]")))
    algebra = pointed_example_algebra()
    cases.append(([algebra.carrier], algebra.base))
    return cases


def monoidality_suite() -> Report:
    report = Report(subject="monoidality of χ")
    for xs, b in _monoidality_cases():
        pool = comodule_pool(b)
        for x, y, m, n in product(xs, xs, pool, pool):
            report.checks.append(interchange_monoidality(x, y, m, n))
    return report


def structure_theorem_suite() -> Report:
    report = Report(subject="structure theorem")
    for name in ("H4", "k[Z/2]"):
        b = fixture_bialgebra(name)
        xs: List[HopfTrimoduleFD] = [b_dot_b(b).carrier]
        xs.extend(trimodule_from_comodule(m) for m in comodule_pool(b))
        for x in xs:
            result = structure_theorem_check(x)
            report.add(f"iso:{name}:{x.name}", result.is_iso, result.witness)
    result = structure_theorem_check(pointed_example_algebra().carrier)
    report.add("not-iso:k[S]:example", not result.is_iso)
    _expect(report, "witness:k[S]:example", result.witness, "dim B⊗X^coB = 2 != 1 = dim X")
    return report


def _linton_algebras() -> List[TrimoduleAlgebraFD]:
    z2 = fixture_bialgebra("k[Z/2]")
    return [unit_algebra(z2), b_dot_b(z2), pointed_example_algebra()]


def linton_suite_criterion() -> Report:
    report = Report(subject="Linton actions")
    for a in _linton_algebras():
        pool = comodule_pool(a.base)
        t = monad_instance(a, pool)
        modules = [free_module(a, m) for m in pool]
        report.extend(monad_laws(t), prefix=f"{a.name}:")
        report.extend(module_monad_compatibility(t, len(pool) ** 2), prefix=f"{a.name}:")
        report.extend(linton_suite(t, modules), prefix=f"{a.name}:")
        small = small_pool(a.base)
        triples = [(v, w, free_module(a, m)) for v, w, m in product(small, repeat=3)]
        report.extend(check_linton_coherence(t, triples), prefix=f"{a.name}:")
    return report


def adjunction_suite() -> Report:
    report = Report(subject="adjunctions")
    rng = _rng()
    algebras = [b_dot_b(b) for b in fixture_bialgebras().values()]
    algebras.extend(unit_algebra(b) for b in fixture_bialgebras().values())
    algebras.append(pointed_example_algebra())
    for a in algebras:
        pool = comodule_pool(a.base)
        t = monad_instance(a, pool)
        for x in pool:
            for p in pool:
                bijection = free_forgetful_iso(t, x, free_module(a, p))
                report.extend(bijection.certify(settings.adjunction_samples, rng), prefix=f"{a.name}:")
        for m in pool:
            report.extend(
                certify_cohom(cohom(a, m), pool, settings.adjunction_samples, rng),
                prefix=f"{a.name}:cohom:{m.name}:",
            )
    return report


def _perturb(f: LinearMap, i: int, j: int) -> LinearMap:
    grid = f.entries.copy()
    grid[i, j] = grid[i, j] + f.field.one
    return LinearMap(grid, f.field)


def _perturbed_bialgebra(b: BialgebraFD, which: str, i: int, j: int) -> BialgebraFD:
    maps = {"mul": b.mul, "unit": b.unit, "comul": b.comul, "counit": b.counit}
    maps[which] = _perturb(maps[which], i, j)
    return bialgebra_from_maps(maps["mul"], maps["unit"], maps["comul"], maps["counit"], f"{b.name}~{which}")


def perturbations() -> List[Tuple[str, Callable[[], Report]]]:
    """Twelve single-entry perturbations with the validator that must reject each."""
    z2, ks, h4 = (fixture_bialgebra(name) for name in ("k[Z/2]", "k[S]", "H4"))

    def bicomodule(b: BialgebraFD, side: str) -> Report:
        x = regular_bicomodule(b)
        left = _perturb(x.left, 0, 0) if side == "left" else x.left
        right = _perturb(x.right, 1, 0) if side == "right" else x.right
        return validate_bicomodule(BicomoduleFD(b, x.dim, left, right, f"{x.name}~{side}"))

    def trimodule(x: HopfTrimoduleFD) -> Report:
        return validate_trimodule(replace(x, action=_perturb(x.action, 0, 0)))

    def algebra(a: TrimoduleAlgebraFD) -> Report:
        return validate_trimodule_algebra(replace(a, unit=_perturb(a.unit, 0, 0)))

    return [
        ("bialgebra:k[Z/2]:mul", lambda: validate_bialgebra(_perturbed_bialgebra(z2, "mul", 0, 0))),
        ("bialgebra:k[Z/2]:comul", lambda: validate_bialgebra(_perturbed_bialgebra(z2, "comul", 0, 0))),
        ("bialgebra:H4:counit", lambda: validate_bialgebra(_perturbed_bialgebra(h4, "counit", 0, 1))),
        ("bialgebra:k[S]:unit", lambda: validate_bialgebra(_perturbed_bialgebra(ks, "unit", 1, 0))),
        ("bicomodule:k[Z/2]:left", lambda: bicomodule(z2, "left")),
        ("bicomodule:k[S]:right", lambda: bicomodule(ks, "right")),
        ("bicomodule:H4:left", lambda: bicomodule(h4, "left")),
        ("trimodule:k[Z/2]:regular", lambda: trimodule(regular_trimodule(z2))),
        ("trimodule:k[S]:B⊗k", lambda: trimodule(trimodule_from_comodule(trivial_comodule(ks)))),
        ("trimodule:H4:regular", lambda: trimodule(regular_trimodule(h4))),
        ("algebra:k[Z/2]:B•B", lambda: algebra(b_dot_b(z2))),
        ("algebra:k[S]:example", lambda: algebra(pointed_example_algebra())),
    ]


def robustness_suite() -> Report:
    report = Report(subject="perturbation robustness")
    for name, run in perturbations():
        result = run()
        witnessed = [c for c in result.failures if c.witness]
        report.add(
            f"rejects:{name}",
            bool(witnessed),
            witnessed[0].name if witnessed else "validator accepted the perturbation",
        )
        if witnessed:
            report.data[f"witness:{name}"] = f"{witnessed[0].name}: {witnessed[0].witness}"
    return report


# ========================
# Suite
# ========================

CRITERIA: Dict[str, Tuple[str, Callable[[], Report]]] = {
    "C01": ("pointed reconstruction end to end", pointed_reconstruction_end_to_end),
    "C02": ("pointed reconstruction hom data", pointed_reconstruction_hom_data),
    "C03": ("B•B suite", b_dot_b_suite),
    "C04": ("semisimplicity witnesses", semisimplicity_witnesses),
    "C05": ("antipode suite", antipode_suite),
    "C06": ("fusion and Galois suite", fusion_suite),
    "C07": ("interchange suite", interchange_suite),
    "C08": ("monoidality of the interchange", monoidality_suite),
    "C09": ("structure theorem", structure_theorem_suite),
    "C10": ("Linton suite", linton_suite_criterion),
    "C11": ("adjunction certifications", adjunction_suite),
    "C12": ("perturbation robustness", robustness_suite),
}


def run_criterion(identifier: str) -> CriterionResult:
    title, run = CRITERIA[identifier]
    start = time.perf_counter()
    with structlog.contextvars.bound_contextvars(criterion=identifier):
        report = run()
        seconds = time.perf_counter() - start
        logger.info("Criterion finished", passed=report.passed, seconds=round(seconds, 3))
    return CriterionResult(identifier=identifier, title=title, report=report, seconds=seconds)


def run_acceptance_suite(selected: Optional[Sequence[str]] = None) -> SuiteReport:
    identifiers = sorted(selected) if selected else sorted(CRITERIA)
    unknown = [i for i in identifiers if i not in CRITERIA]
    if unknown:
        raise KeyError(f"unknown criteria: {', '.join(unknown)}")
    return SuiteReport(criteria=[run_criterion(i) for i in identifiers])

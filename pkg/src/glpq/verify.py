"""Named identity suites over the algebra presets."""
from __future__ import annotations

import time

from . import funalg, uea
from .errors import SuiteInapplicable
from .hopf import relation_images
from .report import IdentityReport
from .rewrite import check_confluence

FUN_IDS = ("mat", "gl", "slq", "slqxi")
U_IDS = ("upq", "uq", "uqxi")
PRESET_IDS = FUN_IDS + U_IDS
SUITES = ("relations", "hopf", "determinant", "centrality", "ideals", "matrix",
          "plane", "bialgebra", "confluence", "uea")
DEFAULT_ROOTS = ((2, 2), (3, 3), (4, 2))


def get_preset(preset_id, n=None, d=None):
    """Resolve a preset id (``mat``, ``gl``, ..., ``uqxi``) to a cached preset."""
    if preset_id in ("slqxi", "uqxi") and n is None:
        raise ValueError(f"{preset_id} needs --n")
    if preset_id not in ("slqxi", "uqxi") and (n is not None or d is not None):
        raise ValueError(f"--n/--d only apply to slqxi and uqxi, not {preset_id}")
    if preset_id in FUN_IDS:
        return funalg.fun_preset(preset_id, n, d)
    if preset_id in U_IDS:
        return uea.u_preset(preset_id, n, d)
    raise ValueError(f"unknown preset {preset_id!r}")


def _is_fun(pre):
    return isinstance(pre, funalg.FunPreset)


def _fun_only(pre, suite):
    if not _is_fun(pre):
        raise SuiteInapplicable(f"suite {suite} applies to the function algebras, not {pre.label}")


def _relations(pre):
    if _is_fun(pre):
        return funalg.relation_checks(pre)
    rep = IdentityReport("relations", pre.label)
    for name, lhs, rhs in pre.relations():
        rep.equal(f"{name} holds", pre.free(lhs), pre.free(rhs))
        for kind, (l, r) in relation_images(pre, lhs, rhs).items():
            rep.equal(f"{kind} respects {name}", l, r)
    return rep


def _hopf(pre):
    if _is_fun(pre):
        if not pre.has_antipode:
            raise SuiteInapplicable(f"{pre.label} has no antipode (D is not inverted)")
        return funalg.hopf_axiom_checks(pre)
    full = uea.uea_checks(pre)
    rep = IdentityReport("hopf", pre.label)
    rep.checks = [c for c in full.checks if c.name.startswith(("coassociativity", "(ε", "(id", "m(", "S^2"))]
    return rep


def _determinant(pre):
    _fun_only(pre, "determinant")
    rep = funalg.determinant_checks(pre)
    if pre.variant == "slq":
        rep.equal("D = 1", funalg.determinant(pre), pre.alg.one)
    return rep


def _centrality(pre):
    _fun_only(pre, "centrality")
    return funalg.centrality_checks(pre)


def _ideals(pre):
    _fun_only(pre, "ideals")
    rep = IdentityReport("ideals", pre.label)
    rep.extend(funalg.hopf_ideal_check_bc(pre))
    if pre.variant == "slqxi":
        rep.extend(funalg.hopf_ideal_check_Dn(pre.n, pre.mode.d))
        rep.extend(funalg.quotient_checks(pre.n, pre.mode.d))
    return rep


def _matrix(pre):
    _fun_only(pre, "matrix")
    return funalg.matrix_identities(pre)


def _plane(pre):
    _fun_only(pre, "plane")
    return funalg.quantum_plane_coaction_check(pre)


def _bialgebra(pre):
    _fun_only(pre, "bialgebra")
    return check_bialgebra_maps(pre)


def _confluence(pre):
    max_len = 4 if _is_fun(pre) else 3
    cr = check_confluence(pre.alg, max_len)
    rep = IdentityReport("confluence", pre.label)
    detail = None if cr.confluent else "; ".join(f"{w}: {a} != {b}" for w, a, b in cr.divergences[:3])
    rep.truth(f"confluent on {cr.words_checked} words up to length {max_len}", cr.confluent, detail=detail)
    return rep


def _uea(pre):
    if _is_fun(pre):
        raise SuiteInapplicable(f"suite uea applies to the enveloping algebras, not {pre.label}")
    rep = uea.uea_checks(pre)
    if pre.variant == "uqxi":
        rep.extend(uea.embedding_consistency(pre.n, pre.mode.d))
    elif pre.variant == "uq":
        rep.extend(uea.uq_specialization_checks())
    return rep


_RUNNERS = {
    "relations": _relations,
    "hopf": _hopf,
    "determinant": _determinant,
    "centrality": _centrality,
    "ideals": _ideals,
    "matrix": _matrix,
    "plane": _plane,
    "bialgebra": _bialgebra,
    "confluence": _confluence,
    "uea": _uea,
}


def check_bialgebra_maps(preset):
    """Δ(Y) = i'(Y) i''(Y) entrywise; Δ, ε and S respect the relations."""
    return funalg.bialgebra_map_checks(preset)


def run_suite(preset_id, suite, n=None, d=None):
    """Run one suite (or ``all`` applicable suites) and return the report."""
    pre = get_preset(preset_id, n, d) if isinstance(preset_id, str) else preset_id
    start = time.perf_counter()
    if suite == "all":
        rep = IdentityReport("all", pre.label)
        for name in SUITES:
            try:
                part = _RUNNERS[name](pre)
            except SuiteInapplicable:
                continue
            for c in part.checks:
                c.name = f"[{name}] {c.name}"
            rep.extend(part)
    elif suite in _RUNNERS:
        rep = _RUNNERS[suite](pre)
        rep.suite = suite
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    rep.preset = pre.label
    rep.elapsed = time.perf_counter() - start
    return rep

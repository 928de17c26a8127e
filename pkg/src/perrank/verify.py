"""Verification of the permanental rank-nullity statements on concrete matrices.

``verify`` classifies a square matrix with the analyzers (never trusting
where it came from), computes permanental rank and nullity, and checks every
statement whose hypotheses the matrix meets. ``batch_verify`` and
``search_counterexample`` drive it over seeded generator output.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .errors import ResourceError, TheoremViolation
from .generators import GenConfig, generate_matrix
from .matrix import Matrix, as_matrix, format_scalar, psd_check, rank_exact
from .polynomial import Poly, perm_poly
from .rank import PermRankResult, perm_rank_exact, perm_rank_nonnegative
from .sachs import EkOk, ek_ok, enumerate_sachs
from .signed_graph import CycleParity, cycle_parity_class, graph_from_matrix, is_balanced

log = logging.getLogger(__name__)

VERIFY_CAP = 14

THEOREMS = (
    "general_inequality",
    "coefficient_truncation",
    "yu_bound",
    "ek_ok_criterion",
    "nonnegative_symmetric",
    "sachs_subgraph_exists",
    "balanced_signed",
    "uniform_parity",
    "psd",
)


@dataclass(frozen=True)
class Classes:
    nonnegative: bool
    symmetric: bool
    psd: bool
    zero_pm1: bool  # symmetric, entries in {0, +-1}, zero diagonal
    balanced: bool | None = None
    parity: CycleParity | None = None

    @property
    def uniform_parity(self) -> bool:
        return self.parity is not None and self.parity.is_uniform

    def to_dict(self) -> dict:
        return {
            "nonnegative": self.nonnegative,
            "symmetric": self.symmetric,
            "psd": self.psd,
            "zero_pm1": self.zero_pm1,
            "balanced": self.balanced,
            "uniform_parity_class": None if self.parity is None else self.parity.value,
        }


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    applicable: bool
    holds: bool | None

    @property
    def violated(self) -> bool:
        return self.applicable and self.holds is False


@dataclass(frozen=True)
class VerifyReport:
    n: int
    rho: int
    eta: int
    rank: int
    classes: Classes
    witness: PermRankResult
    poly: Poly
    ek: EkOk | None
    theorems: tuple[TheoremCheck, ...]

    @property
    def sum(self) -> int:
        return self.rho + self.eta

    @property
    def identity_holds(self) -> bool:
        return self.sum == self.n

    @property
    def inequality_holds(self) -> bool:
        return self.sum >= self.n

    @property
    def yu_bound_holds(self) -> bool:
        return self.rank <= 2 * self.rho

    def theorem(self, name: str) -> TheoremCheck:
        return next(t for t in self.theorems if t.name == name)

    @property
    def violations(self) -> list[TheoremCheck]:
        return [t for t in self.theorems if t.violated]

    def to_json(self) -> dict:
        w = self.witness
        return {
            "n": self.n,
            "rho": self.rho,
            "eta": self.eta,
            "sum": self.sum,
            "rank": self.rank,
            "classes": self.classes.to_dict(),
            "identity": self.identity_holds,
            "inequality": self.inequality_holds,
            "yu_bound": self.yu_bound_holds,
            "ek": None if self.ek is None else format_scalar(self.ek.E),
            "ok": None if self.ek is None else format_scalar(self.ek.O),
            "poly": self.poly.coeff_strings(),
            "witness": {"rows": list(w.rows), "cols": list(w.cols), "permanent": format_scalar(w.permanent)},
            "theorems": [{"name": t.name, "applicable": t.applicable, "holds": t.holds} for t in self.theorems],
        }


def classify(a: Matrix) -> Classes:
    symmetric = a.is_symmetric
    zero_pm1 = symmetric and a.is_zero_pm1 and a.has_zero_diagonal
    balanced = parity = None
    if zero_pm1:
        g = graph_from_matrix(a)
        balanced = is_balanced(g)[0]
        try:
            parity = cycle_parity_class(g)
        except ResourceError:
            log.warning("cycle enumeration cap hit; uniform-parity check skipped")
    return Classes(
        nonnegative=a.is_nonnegative,
        symmetric=symmetric,
        psd=symmetric and psd_check(a),
        zero_pm1=zero_pm1,
        balanced=balanced,
        parity=parity,
    )


def verify(a) -> VerifyReport:
    a = as_matrix(a)
    a.require_square("verify")
    n = a.nrows
    if n > VERIFY_CAP:
        raise ResourceError(f"verify is capped at n={VERIFY_CAP}, got n={n}")
    classes = classify(a)
    witness = perm_rank_exact(a)
    rho = witness.rank
    poly = perm_poly(a)
    eta = poly.zero_root_multiplicity()
    rank = rank_exact(a)
    identity = rho + eta == n

    ek = None
    g = None
    if classes.zero_pm1:
        g = graph_from_matrix(a)
        ek = ek_ok(g, rho)

    checks = [
        TheoremCheck("general_inequality", True, rho + eta >= n),
        TheoremCheck("coefficient_truncation", True, all(c == 0 for c in poly.coeffs[rho + 1:])),
        TheoremCheck("yu_bound", True, rank <= 2 * rho),
    ]
    checks.append(TheoremCheck(
        "ek_ok_criterion", classes.zero_pm1,
        None if ek is None else identity == (ek.E != ek.O),
    ))
    nonneg_sym = classes.nonnegative and classes.symmetric
    checks.append(TheoremCheck("nonnegative_symmetric", nonneg_sym, identity if nonneg_sym else None))
    unsigned_graph = nonneg_sym and classes.zero_pm1
    checks.append(TheoremCheck(
        "sachs_subgraph_exists", unsigned_graph,
        next(enumerate_sachs(g, rho), None) is not None if unsigned_graph else None,
    ))
    if classes.zero_pm1 and classes.balanced:
        same_rank = rho == perm_rank_nonnegative(a.abs())
        checks.append(TheoremCheck("balanced_signed", True, identity and same_rank))
    else:
        checks.append(TheoremCheck("balanced_signed", False, None))
    uniform = classes.zero_pm1 and classes.uniform_parity
    checks.append(TheoremCheck("uniform_parity", uniform, identity if uniform else None))
    if classes.psd:
        principal_rho = perm_rank_exact(a, principal_only=True).rank
        checks.append(TheoremCheck("psd", True, identity and principal_rho == rho))
    else:
        checks.append(TheoremCheck("psd", False, None))

    return VerifyReport(n, rho, eta, rank, classes, witness, poly, ek, tuple(checks))


def reproducer(a: Matrix, report: VerifyReport, seed: int | None = None, cfg: GenConfig | None = None) -> dict:
    out = {
        "matrix": [[format_scalar(v) for v in row] for row in a.rows()],
        "report": report.to_json(),
    }
    if seed is not None:
        out["seed"] = seed
    if cfg is not None:
        out["kind"] = cfg.kind
        out["n"] = cfg.n
        out["density"] = format_scalar(cfg.density)
    return out


def check(a, seed: int | None = None, cfg: GenConfig | None = None) -> VerifyReport:
    """``verify`` that raises TheoremViolation when an applicable statement fails."""
    a = as_matrix(a)
    report = verify(a)
    if report.violations:
        names = ", ".join(t.name for t in report.violations)
        raise TheoremViolation(f"theorem violated ({names})", reproducer(a, report, seed, cfg))
    return report


@dataclass
class BatchSummary:
    kind: str
    count: int
    seed: int
    sizes: tuple[int, int]
    identity_holds: int = 0
    identity_fails: int = 0
    inequality_holds: int = 0
    strict_inequality: int = 0
    criterion_agrees: int = 0
    criterion_applicable: int = 0
    yu_bound_holds: int = 0
    theorem_tallies: dict = field(default_factory=dict)
    identity_failure_seeds: list = field(default_factory=list)
    records: list = field(default_factory=list)

    def add(self, seed: int, report: VerifyReport) -> None:
        if report.identity_holds:
            self.identity_holds += 1
        else:
            self.identity_fails += 1
            self.identity_failure_seeds.append(seed)
        self.inequality_holds += report.inequality_holds
        self.strict_inequality += report.sum > report.n
        self.yu_bound_holds += report.yu_bound_holds
        crit = report.theorem("ek_ok_criterion")
        if crit.applicable:
            self.criterion_applicable += 1
            self.criterion_agrees += bool(crit.holds)
        for t in report.theorems:
            tally = self.theorem_tallies.setdefault(t.name, {"applicable": 0, "holds": 0})
            if t.applicable:
                tally["applicable"] += 1
                tally["holds"] += bool(t.holds)
        self.records.append({
            "seed": seed,
            "n": report.n,
            "rho": report.rho,
            "eta": report.eta,
            "sum": report.sum,
            "rank": report.rank,
            "identity": report.identity_holds,
            "ek": None if report.ek is None else format_scalar(report.ek.E),
            "ok": None if report.ek is None else format_scalar(report.ek.O),
        })

    def to_json(self) -> dict:
        out = {k: v for k, v in self.__dict__.items() if k != "records"}
        out["sizes"] = list(self.sizes)
        return out


def instance_config(cfg: GenConfig, index: int, n_min: int | None = None) -> GenConfig:
    """Config for the ``index``-th batch instance; sizes cycle through n_min..cfg.n."""
    n = cfg.n
    if n_min is not None and n_min < cfg.n:
        n = n_min + index % (cfg.n - n_min + 1)
    return GenConfig(cfg.kind, n, cfg.density, cfg.seed + index, cfg.r, cfg.bound,
                     cfg.switching if n == cfg.n else None)


def _run_one(cfg: GenConfig):
    a = generate_matrix(cfg)
    return cfg.seed, a, verify(a)


def _run_all(cfg: GenConfig, count: int, n_min: int | None, threads: int):
    configs = [instance_config(cfg, i, n_min) for i in range(count)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            yield from pool.map(_run_one, configs, chunksize=max(1, count // (4 * threads)))
    else:
        for c in configs:
            yield _run_one(c)


def batch_verify(cfg: GenConfig, count: int, n_min: int | None = None, threads: int = 1) -> BatchSummary:
    """Verify ``count`` seeded instances; the first violation aborts with a reproducer."""
    lo = cfg.n if n_min is None else min(n_min, cfg.n)
    summary = BatchSummary(cfg.kind, count, cfg.seed, (lo, cfg.n))
    # results arrive in seed order, so the first violation is the lowest seed
    for seed, a, report in _run_all(cfg, count, n_min, threads):
        if report.violations:
            names = ", ".join(t.name for t in report.violations)
            raise TheoremViolation(
                f"theorem violated at seed {seed} ({names})",
                reproducer(a, report, seed, instance_config(cfg, seed - cfg.seed, n_min)),
            )
        summary.add(seed, report)
    log.info("batch %s: %d instances, %d identity failures", cfg.kind, count, summary.identity_fails)
    return summary


def search_counterexample(cfg: GenConfig, count: int, n_min: int | None = None, threads: int = 1):
    """Seeded instances on which rho + eta != n, each re-verified independently."""
    hits = []
    for seed, a, report in _run_all(cfg, count, n_min, threads):
        if report.violations:
            names = ", ".join(t.name for t in report.violations)
            raise TheoremViolation(
                f"theorem violated at seed {seed} ({names})",
                reproducer(a, report, seed, instance_config(cfg, seed - cfg.seed, n_min)),
            )
        if not report.identity_holds:
            again = verify(generate_matrix(instance_config(cfg, seed - cfg.seed, n_min)))
            if again.to_json() != report.to_json():
                raise RuntimeError(f"re-verification of seed {seed} disagrees with the first run")
            hits.append((seed, a, report))
    return hits

"""Config-driven sweeps of recovery quality and mutual information.

A sweep walks a (time, fragment size) grid: at each point it evolves the
branch record, builds the fragment encoding channel and its Petz recovery,
and tabulates the round-trip fidelity Q, the system-fragment mutual
information R, the conditional mutual information increment, the PRC defect,
and the recovery clip diagnostic.  Results persist as a CSV body plus a JSON
metadata sidecar carrying full provenance (config echo, seed, code version,
per-time system entropy).

Randomness is consumed once, up front, when the model is built, so rows are
a pure function of (config, seed) and two identical runs produce
bit-identical CSV bodies.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .channels import encoding_channel, choi_min_eigenvalue
from .errors import (
    ConfigError,
    RecoveryNegativityError,
    ReferenceRankError,
    ShapeError,
    SizeCapError,
    SupportError,
)
from .infotheory import (
    fawzi_renner_check,
    fidelity,
    mutual_information,
    support_inclusion_check,
    vn_entropy,
)
from .linalg import ENTRY_CAP, hermitianize, kron, sqrtm_psd, trace_norm
from .model import (
    BlochState,
    EnvironmentSpec,
    KET_PLUS,
    PAULI_Z,
    SystemObservable,
    evolve_branches,
    gue_environment,
    prc_defect,
    reduced_joint_state,
    reduced_system_state,
    zz_environment,
    zz_random_g_environment,
)
from .petz import build_m_map, build_petz, markov_defect, r_map_defect, recovery_quality
from .probes import random_density, random_hermitian
from .version import __version__

# Hard environment-size limit for sweeps; dense fragment eigendecompositions
# at 2^k scale are the binding cost.
MAX_SITES = 14

CSV_HEADER = "t,k,Q,R,cmi,prc_defect,clip"

MODEL_KINDS = ("ZZ", "ZH_GUE", "ZZ_random_g")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def _require_keys(mapping: dict, allowed: set[str], context: str) -> None:
    unknown = set(mapping) - allowed
    if unknown:
        raise ConfigError(f"unknown {context} keys: {sorted(unknown)}")


def _parse_state_vector(spec: Any, context: str) -> np.ndarray | None:
    """Ready-state spec: the string 'plus' or two [re, im] amplitude pairs."""
    if spec == "plus":
        return None
    if (
        isinstance(spec, (list, tuple))
        and len(spec) == 2
        and all(isinstance(a, (list, tuple)) and len(a) == 2 for a in spec)
    ):
        v = np.array([complex(a[0], a[1]) for a in spec])
        norm = np.linalg.norm(v)
        if norm < 1e-12:
            raise ConfigError(f"{context} amplitudes are all zero")
        return v / norm
    raise ConfigError(f"{context} must be 'plus' or two [re, im] pairs")


@dataclass(frozen=True)
class ExperimentConfig:
    """One sweep: model, initial state, grids, reference, seed, display base."""

    model_kind: str
    n: int
    initial: BlochState
    t_start: float
    t_end: float
    t_count: int
    k_min: int
    k_max: int
    g: float | None = None
    g_list: tuple[float, ...] | None = None
    ready: Any = "plus"
    reference: Any = "maximally_mixed"
    seed: int = 0
    log_base: str = "2"

    def validate(self) -> None:
        if self.model_kind not in MODEL_KINDS:
            raise ConfigError(f"model_kind must be one of {MODEL_KINDS}")
        if self.n < 1:
            raise ConfigError("n must be at least 1")
        if self.n > MAX_SITES:
            raise SizeCapError(f"n = {self.n} exceeds the sweep limit {MAX_SITES}")
        if (2 ** (self.k_max + 1)) ** 2 > ENTRY_CAP:
            raise SizeCapError(f"fragment size {self.k_max} exceeds the dense entry cap")
        if (self.g is None) == (self.g_list is None):
            raise ConfigError("exactly one of g and g_list must be set")
        if self.g_list is not None:
            if self.model_kind != "ZZ":
                raise ConfigError("g_list is only supported for the ZZ model")
            if len(self.g_list) != self.n:
                raise ConfigError("g_list length must equal n")
        if self.t_count < 1:
            raise ConfigError("t_count must be at least 1")
        if self.t_start < 0 or self.t_end < self.t_start:
            raise ConfigError("need 0 <= t_start <= t_end")
        if not (1 <= self.k_min <= self.k_max <= self.n):
            raise ConfigError("need 1 <= k_min <= k_max <= n")
        if self.log_base not in ("2", "e"):
            raise ConfigError("log_base must be '2' or 'e'")
        _parse_state_vector(self.ready, "ready")
        self.reference_matrix()

    def times(self) -> np.ndarray:
        return np.linspace(self.t_start, self.t_end, self.t_count)

    def ks(self) -> range:
        return range(self.k_min, self.k_max + 1)

    def build_environment(self, rng: np.random.Generator) -> EnvironmentSpec:
        ready = _parse_state_vector(self.ready, "ready")
        if self.model_kind == "ZZ":
            if self.g_list is not None:
                site_ready = KET_PLUS if ready is None else ready
                return EnvironmentSpec(
                    couplings=np.asarray(self.g_list, dtype=float),
                    site_ops=(PAULI_Z,) * self.n,
                    ready_states=(site_ready,) * self.n,
                )
            return zz_environment(self.n, self.g, ready)
        if self.model_kind == "ZH_GUE":
            return gue_environment(self.n, self.g, rng, ready)
        return zz_random_g_environment(self.n, self.g, rng, ready)

    def reference_matrix(self) -> np.ndarray:
        if self.reference == "maximally_mixed":
            return np.eye(2, dtype=complex) / 2.0
        if isinstance(self.reference, dict):
            _require_keys(self.reference, {"r", "theta", "phi"}, "reference")
            return BlochState(**self.reference).density_matrix()
        raise ConfigError("reference must be 'maximally_mixed' or Bloch angles")

    def base_factor(self) -> float:
        return 1.0 / math.log(2.0) if self.log_base == "2" else 1.0

    def to_dict(self) -> dict:
        out: dict[str, Any] = {
            "model_kind": self.model_kind,
            "n": self.n,
            "initial": {"r": self.initial.r, "theta": self.initial.theta, "phi": self.initial.phi},
            "ready": self.ready,
            "t_start": self.t_start,
            "t_end": self.t_end,
            "t_count": self.t_count,
            "k_min": self.k_min,
            "k_max": self.k_max,
            "reference": self.reference,
            "seed": self.seed,
            "log_base": self.log_base,
        }
        if self.g is not None:
            out["g"] = self.g
        if self.g_list is not None:
            out["g_list"] = list(self.g_list)
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "ExperimentConfig":
        allowed = {
            "model_kind",
            "n",
            "g",
            "g_list",
            "initial",
            "ready",
            "t_start",
            "t_end",
            "t_count",
            "k_min",
            "k_max",
            "reference",
            "seed",
            "log_base",
        }
        _require_keys(data, allowed, "config")
        required = {"model_kind", "n", "initial", "t_start", "t_end", "t_count", "k_min", "k_max"}
        missing = required - set(data)
        if missing:
            raise ConfigError(f"missing config keys: {sorted(missing)}")
        initial = data["initial"]
        if not isinstance(initial, dict):
            raise ConfigError("initial must be an object with r, theta, phi")
        _require_keys(initial, {"r", "theta", "phi"}, "initial")
        try:
            bloch = BlochState(**initial)
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad initial state: {exc}") from exc
        cfg = cls(
            model_kind=data["model_kind"],
            n=int(data["n"]),
            g=float(data["g"]) if "g" in data else None,
            g_list=tuple(data["g_list"]) if "g_list" in data else None,
            initial=bloch,
            ready=data.get("ready", "plus"),
            t_start=float(data["t_start"]),
            t_end=float(data["t_end"]),
            t_count=int(data["t_count"]),
            k_min=int(data["k_min"]),
            k_max=int(data["k_max"]),
            reference=data.get("reference", "maximally_mixed"),
            seed=int(data.get("seed", 0)),
            log_base=str(data.get("log_base", "2")),
        )
        cfg.validate()
        return cfg

    @classmethod
    def from_json_file(cls, path: str) -> "ExperimentConfig":
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ConfigError(f"config {path} is not valid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config root must be a JSON object")
        return cls.from_dict(data)


@dataclass(frozen=True)
class SweepRow:
    t: float
    k: int
    q: float
    r: float
    cmi: float
    prc_defect: float
    clip: float


@dataclass
class SweepResult:
    """Rows in deterministic (t, k) order plus full provenance metadata."""

    rows: list[SweepRow]
    metadata: dict

    def csv_body(self) -> str:
        lines = [CSV_HEADER]
        for row in self.rows:
            lines.append(
                ",".join(
                    [
                        _fmt(row.t),
                        str(row.k),
                        _fmt(row.q),
                        _fmt(row.r),
                        _fmt(row.cmi),
                        _fmt(row.prc_defect),
                        _fmt(row.clip),
                    ]
                )
            )
        return "\n".join(lines) + "\n"

    def rows_at(self, t: float, atol: float = 1e-12) -> list[SweepRow]:
        return [row for row in self.rows if abs(row.t - t) <= atol]

    def write(self, csv_path: str, meta_path: str | None = None) -> tuple[str, str]:
        if meta_path is None:
            base = csv_path[:-4] if csv_path.endswith(".csv") else csv_path
            meta_path = base + ".meta.json"
        for path in (csv_path, meta_path):
            parent = os.path.dirname(os.path.abspath(path))
            os.makedirs(parent, exist_ok=True)
        with open(csv_path, "w", encoding="utf-8") as fh:
            fh.write(self.csv_body())
        with open(meta_path, "w", encoding="utf-8") as fh:
            json.dump(self.metadata, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return csv_path, meta_path


def run_sweep(cfg: ExperimentConfig) -> SweepResult:
    """Sweep the (t, k) grid of `cfg`; per-row recovery errors are recorded, not fatal."""
    cfg.validate()
    rng = np.random.default_rng(cfg.seed)
    sys_obs = SystemObservable.pauli_z()
    env = cfg.build_environment(rng)
    gamma = cfg.initial.density_matrix()
    reference = cfg.reference_matrix()
    factor = cfg.base_factor()

    rows: list[SweepRow] = []
    s_gamma: list[dict] = []
    row_errors: list[dict] = []
    for t in cfg.times():
        rec = evolve_branches(sys_obs, env, float(t))
        s_t = vn_entropy(reduced_system_state(cfg.initial, rec)) * factor
        s_gamma.append({"t": float(t), "s": s_t})
        if cfg.k_min > 1:
            rho_prev = reduced_joint_state(cfg.initial, rec, cfg.k_min - 1)
            dims_prev = (2,) * cfg.k_min
            r_prev = mutual_information(rho_prev, dims_prev, (0,), tuple(range(1, cfg.k_min)))
        else:
            r_prev = 0.0
        for k in cfg.ks():
            q = math.nan
            clip = math.nan
            try:
                ch = encoding_channel(rec, k)
                pmap = build_petz(ch, reference)
                recovered, clip = pmap.recover_with_clip(ch.apply(gamma))
                q = fidelity(gamma, recovered)
            except (SupportError, ReferenceRankError, RecoveryNegativityError) as exc:
                row_errors.append({"t": float(t), "k": k, "error": str(exc)})
            rho_k = reduced_joint_state(cfg.initial, rec, k)
            r_k = mutual_information(rho_k, (2,) * (k + 1), (0,), tuple(range(1, k + 1)))
            rows.append(
                SweepRow(
                    t=float(t),
                    k=k,
                    q=q,
                    r=r_k * factor,
                    cmi=(r_k - r_prev) * factor,
                    prc_defect=prc_defect(rec, k),
                    clip=clip,
                )
            )
            r_prev = r_k

    metadata = {
        "config": cfg.to_dict(),
        "seed": cfg.seed,
        "version": __version__,
        "log_base": cfg.log_base,
        "s_gamma": s_gamma,
        "row_errors": row_errors,
    }
    return SweepResult(rows=rows, metadata=metadata)


def plateau_onset(result: SweepResult, t: float) -> int | None:
    """First k at time t with R(k) >= S(rho_Gamma(t)) - 1e-9, or None."""
    s_t = None
    for entry in result.metadata["s_gamma"]:
        if abs(entry["t"] - t) <= 1e-12:
            s_t = entry["s"]
            break
    if s_t is None:
        raise ValueError(f"time {t} not in sweep metadata")
    for row in result.rows_at(t):
        if row.r >= s_t - 1e-9:
            return row.k
    return None


# ---------------------------------------------------------------------------
# Identity verification suite
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerifyCheck:
    name: str
    defect: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.defect < self.tolerance


@dataclass
class VerifyReport:
    model: str
    checks: list[VerifyCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def format_table(self) -> str:
        width = max(len(c.name) for c in self.checks)
        lines = [f"identity suite [{self.model}]"]
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            lines.append(f"  {c.name:<{width}}  {c.defect:12.3e}  (tol {c.tolerance:.0e})  {status}")
        lines.append("  => " + ("all passed" if self.passed else "FAILURES PRESENT"))
        return "\n".join(lines)


def default_verify_config(model_kind: str = "ZZ") -> ExperimentConfig:
    n = 4 if model_kind == "ZZ" else 3
    return ExperimentConfig(
        model_kind=model_kind,
        n=n,
        g=1.0,
        initial=BlochState(1.0, 0.1, 0.0),
        t_start=0.0,
        t_end=math.pi / 4.0,
        t_count=4,
        k_min=1,
        k_max=n,
        seed=11 if model_kind == "ZZ" else 23,
    )


def _suite_times(cfg: ExperimentConfig) -> list[float]:
    ts = cfg.times()
    picks = {0: ts[0], 1: ts[len(ts) // 2], 2: ts[-1]}
    return sorted(set(float(t) for t in picks.values()))


def _random_kraus_channel(dim_in: int, dim_out: int, n_ops: int, rng: np.random.Generator):
    """Random isometry split into `n_ops` Kraus blocks."""
    from .channels import QuantumChannel

    g = rng.standard_normal((dim_out * n_ops, dim_in)) + 1j * rng.standard_normal(
        (dim_out * n_ops, dim_in)
    )
    v, _ = np.linalg.qr(g)
    ops = tuple(v[i * dim_out : (i + 1) * dim_out, :] for i in range(n_ops))
    return QuantumChannel(kraus_ops=ops, dim_in=dim_in, dim_out=dim_out)


def verify_suite(
    cfg: ExperimentConfig | None = None, inject_non_tp: bool = False
) -> VerifyReport:
    """Run every appendix identity at small size and report max defects.

    `inject_non_tp` is a test hook: it corrupts one Kraus operator so the
    completeness check must fail.
    """
    from .channels import nesting_defect_adjoint, nesting_defect_states

    cfg = default_verify_config() if cfg is None else cfg
    cfg.validate()
    rng = np.random.default_rng(cfg.seed)
    sys_obs = SystemObservable.pauli_z()
    env = cfg.build_environment(rng)
    x = cfg.initial
    gamma = x.density_matrix()
    reference = cfg.reference_matrix()
    report = VerifyReport(model=f"{cfg.model_kind} n={cfg.n} seed={cfg.seed}")
    times = _suite_times(cfg)
    records = {t: evolve_branches(sys_obs, env, t) for t in times}

    completeness = 0.0
    choi_neg = 0.0
    for t, rec in records.items():
        for k in range(1, cfg.n + 1):
            ch = encoding_channel(rec, k)
            if inject_non_tp and k == 1 and t == times[-1]:
                bad = tuple(op * 1.01 for op in ch.kraus_ops)
                ch = type(ch)(kraus_ops=bad, dim_in=ch.dim_in, dim_out=ch.dim_out)
            completeness = max(completeness, ch.completeness_defect())
            if k <= 6:
                choi_neg = max(choi_neg, max(0.0, -choi_min_eigenvalue(ch)))
    report.checks.append(VerifyCheck("kraus_completeness", completeness, 1e-10))
    report.checks.append(VerifyCheck("choi_psd", choi_neg, 1e-10))

    nest_states = 0.0
    nest_adjoint = 0.0
    for t, rec in records.items():
        for k in range(1, cfg.n):
            nest_states = max(nest_states, nesting_defect_states(rec, k))
            nest_adjoint = max(nest_adjoint, nesting_defect_adjoint(rec, k, rng))
    report.checks.append(VerifyCheck("channel_nesting", nest_states, 1e-10))
    report.checks.append(VerifyCheck("adjoint_nesting", nest_adjoint, 1e-10))

    m_factor = 0.0
    m_tp = 0.0
    m_pair = 0.0
    fixed_point = 0.0
    probe_states = [
        BlochState(1.0, 0.1, 0.0),
        BlochState(1.0, np.pi / 2, 0.3),
        BlochState(0.3, 0.0, 0.0),
        BlochState(0.7, 2.0, 1.0),
    ]
    for t, rec in records.items():
        for k in range(1, cfg.n):
            mmap = build_m_map(rec, k, reference)
            ch_k = encoding_channel(rec, k)
            ch_k1 = encoding_channel(rec, k + 1)
            pmap_k = build_petz(ch_k, reference)
            fixed_point = max(
                fixed_point, trace_norm(pmap_k.raw(ch_k.apply(reference)) - reference)
            )
            for probe in probe_states:
                g_probe = probe.density_matrix()
                via_m = mmap.apply(ch_k1.apply(g_probe))
                via_petz = pmap_k.raw(ch_k.apply(g_probe))
                m_factor = max(m_factor, trace_norm(via_m - via_petz))
                # TP on the image of the (k+1)-encoding, where the appendix
                # derivation applies (the reduced probe stays inside
                # Supp(L_k(reference))); k = 1 at t > 0 also covers
                # unrestricted probes since L_1(reference) is full-rank there.
                img = ch_k1.apply(g_probe)
                m_tp = max(m_tp, abs(np.trace(mmap.apply(img)).real - np.trace(img).real))
            if k == 1 and t > 0:
                free = random_density(ch_k1.dim_out, rng)
                m_tp = max(m_tp, abs(np.trace(mmap.apply(free)).real - np.trace(free).real))
            x_probe = random_hermitian(2, rng)
            big_probe = random_hermitian(ch_k1.dim_out, rng)
            lhs = np.trace(mmap.apply_adjoint(x_probe).conj().T @ big_probe)
            rhs = np.trace(x_probe.conj().T @ mmap.apply(big_probe))
            m_pair = max(m_pair, abs(lhs - rhs))
    report.checks.append(VerifyCheck("m_factorization", m_factor, 1e-9))
    report.checks.append(VerifyCheck("m_trace_preserving", m_tp, 1e-10))
    report.checks.append(VerifyCheck("m_adjoint_pairing", m_pair, 1e-10))
    report.checks.append(VerifyCheck("petz_fixed_point", fixed_point, 1e-10))

    # The residual map acts as the identity wherever the extra site adds no
    # information: t = 0 always, and the PRC endpoint for the ZZ model.  At
    # those times the recovery quality must also be k-independent.
    r_fix = 0.0
    q_gap = 0.0
    fixed_times = [times[0]]
    if (
        cfg.model_kind == "ZZ"
        and cfg.g is not None
        and abs(times[-1] - math.pi / (4.0 * cfg.g)) < 1e-12
    ):
        fixed_times.append(times[-1])
    for t in fixed_times:
        rec = records[t]
        qs = [recovery_quality(x, rec, k, reference) for k in range(1, cfg.n + 1)]
        for k in range(1, cfg.n):
            r_fix = max(r_fix, r_map_defect(x, rec, k, reference))
            q_gap = max(q_gap, abs(qs[k] - qs[k - 1]))
    report.checks.append(VerifyCheck("r_map_fixed_point", r_fix, 1e-9))
    report.checks.append(VerifyCheck("q_equality_at_fixed_point", q_gap, 1e-9))

    markov = _markov_exactness_defect(cfg, records, rng)
    report.checks.append(VerifyCheck("markov_exactness", markov, 1e-9))

    failures = 0
    for trial in range(100):
        if trial % 2 == 0:
            dim_in, dim_out = 2, int(rng.integers(2, 5))
            ch = _random_kraus_channel(dim_in, dim_out, int(rng.integers(1, 4)), rng)
        else:
            t = times[int(rng.integers(0, len(times)))]
            k = int(rng.integers(1, cfg.n + 1))
            ch = encoding_channel(records[t], k)
            dim_in = ch.dim_in
        rank = int(rng.integers(1, dim_in + 1))
        sigma = random_density(dim_in, rng, rank=rank)
        w = random_density(dim_in, rng)
        root = sqrtm_psd(sigma)
        rho = hermitianize(root @ w @ root)
        tr = float(np.trace(rho).real)
        if tr < 1e-12:
            continue
        rho /= tr
        if support_inclusion_check(rho, sigma, ch) is not True:
            failures += 1
    report.checks.append(VerifyCheck("support_inclusion_trials", float(failures), 0.5))

    # Bound trials run against the suite's configured reference (the shipped
    # default is maximally mixed).  Skewed references can genuinely break the
    # plain-map bound; see the recovery-map module notes.
    worst_margin = 0.0
    worst_delta = 0.0
    for _ in range(100):
        t = times[int(rng.integers(0, len(times)))]
        k = int(rng.integers(1, cfg.n + 1))
        ch = encoding_channel(records[t], k)
        rho = random_density(2, rng, rank=int(rng.integers(1, 3)))
        res = fawzi_renner_check(rho, reference, ch)
        worst_margin = max(worst_margin, max(0.0, -res.margin))
        if not math.isnan(res.delta):
            worst_delta = max(worst_delta, max(0.0, res.delta))
    report.checks.append(VerifyCheck("fawzi_renner_margin", worst_margin, 1e-8))
    report.checks.append(VerifyCheck("fawzi_renner_data_processing", worst_delta, 1e-9))

    try:
        rank_one = BlochState(1.0, 0.0, 0.0).density_matrix()
        build_petz(encoding_channel(records[times[-1]], 1), rank_one)
        guard = 1.0
    except ReferenceRankError:
        guard = 0.0
    report.checks.append(VerifyCheck("reference_rank_guard", guard, 0.5))

    return report


def _markov_exactness_defect(
    cfg: ExperimentConfig, records: dict, rng: np.random.Generator
) -> float:
    """Reconstruction defect on states with (numerically) vanishing CMI."""
    defect = 0.0
    # Fully product probe: system x fragment site x extra site.
    parts = [random_density(2, rng) for _ in range(3)]
    product = kron(kron(parts[0], parts[1]), parts[2])
    defect = max(defect, markov_defect(product, (2, 2, 2)))

    # Evolved states at times where the extra site adds no information:
    # t = 0 always qualifies; the PRC endpoint qualifies for the ZZ model.
    candidate_times = [min(records)]
    if cfg.model_kind == "ZZ":
        candidate_times.append(max(records))
    for t in candidate_times:
        rec = records[t]
        for k in range(1, cfg.n - 1):
            dims = (2,) * (k + 2)
            rho = reduced_joint_state(cfg.initial, rec, k + 1)
            cmi = mutual_information(rho, dims, (0,), tuple(range(1, k + 2))) - (
                mutual_information(rho, dims, (0,), tuple(range(1, k + 1)))
            )
            if cmi < 1e-10:
                defect = max(defect, markov_defect(rho, dims))
    return defect


# ---------------------------------------------------------------------------
# Bundled figure configurations
# ---------------------------------------------------------------------------


def _figure(model_kind: str, g: float, initial: BlochState, seed: int) -> ExperimentConfig:
    return ExperimentConfig(
        model_kind=model_kind,
        n=10,
        g=g,
        initial=initial,
        t_start=0.0,
        t_end=math.pi / (4.0 * g),
        t_count=10,
        k_min=1,
        k_max=10,
        seed=seed,
    )


# The two-panel group captions state g = 0.1 while the single-panel captions
# use g = 1 and say "all other details" carry over; fig2 ships both couplings
# to surface the ambiguity, the remaining grouped panels follow their group
# caption.
NAMED_CONFIGS: dict[str, ExperimentConfig] = {
    "fig1": _figure("ZZ", 1.0, BlochState(1.0, 0.1, 0.0), seed=1),
    "fig2_g01": _figure("ZZ", 0.1, BlochState(1.0, math.pi / 4.0, 0.0), seed=1),
    "fig2_g1": _figure("ZZ", 1.0, BlochState(1.0, math.pi / 4.0, 0.0), seed=1),
    "fig3": _figure("ZZ", 0.1, BlochState(0.3, 0.0, 0.0), seed=1),
    "fig4": _figure("ZH_GUE", 1.0, BlochState(1.0, 0.1, 0.0), seed=42),
    "fig5_pure": _figure("ZH_GUE", 0.1, BlochState(1.0, math.pi / 4.0, 0.0), seed=43),
    "fig5_mixture": _figure("ZH_GUE", 0.1, BlochState(0.3, 0.0, 0.0), seed=44),
}

FIGURE_GROUPS: dict[str, tuple[str, ...]] = {
    "fig1": ("fig1",),
    "fig2": ("fig2_g01", "fig2_g1"),
    "fig3": ("fig3",),
    "fig4": ("fig4",),
    "fig5": ("fig5_pure", "fig5_mixture"),
}

"""Claim registry, run orchestration and report serialization for the CLI."""

from __future__ import annotations

import csv
import io
import json
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

from .errors import DomainError, GexError, InvariantViolation

SCHEMA_VERSION = "gex.report/1"
COMMANDS = ("build", "verify", "volume", "slopes", "symmetry", "canonical", "all")
FORMATS = ("json", "csv", "text")
DEFAULT_ALL_RANGE = tuple(range(2, 21))
DEEP_VOLUME_GS = (10, 50, 250, 500)
CONSISTENCY_TOL = 1e-12
TILT_TOL = 1e-12
CUSP_TOL = 1e-9
LIMIT_BAND = 0.01


class ClaimError(GexError):
    """A module error raised while checking a claim, tagged with the claim and g."""

    def __init__(self, claim, g, cause):
        super().__init__(f"claim {claim} (g={g}) raised {type(cause).__name__}: {cause}")
        self.claim = claim
        self.g = g
        self.cause = cause


@dataclass(frozen=True)
class RunConfig:
    command: str
    gs: tuple
    quadrature_tol: float = 1e-8
    coeff_bound: int = 100
    k: float = 1.0
    output: str | None = None
    fmt: str = "text"
    deep: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise DomainError(f"unknown command {self.command!r}")
        if self.fmt not in FORMATS:
            raise DomainError(f"unknown format {self.fmt!r}")
        if any((not isinstance(g, int)) or g < 2 for g in self.gs):
            raise DomainError(f"every g must be an integer >= 2, got {self.gs}")
        if not 0 < self.quadrature_tol < 1:
            raise DomainError(f"tolerance must lie in (0, 1), got {self.quadrature_tol}")
        if self.coeff_bound < 1:
            raise DomainError(f"coefficient bound must be positive, got {self.coeff_bound}")
        if not self.k > 0:
            raise DomainError(f"k must be positive, got {self.k}")

    def as_dict(self):
        return {
            "command": self.command,
            "g": list(self.gs),
            "tol": self.quadrature_tol,
            "bound": self.coeff_bound,
            "k": self.k,
            "deep": self.deep,
        }


class Context:
    """Lazily built objects shared by the claims for one value of g."""

    def __init__(self, g, cfg: RunConfig):
        self.g = g
        self.cfg = cfg

    @cached_property
    def T(self):
        from .triangulation import build_triangulation

        return build_triangulation(self.g)

    @cached_property
    def a(self):
        from .geometry import angles

        return angles(self.g)

    @cached_property
    def torus(self):
        from .cusp import build_cusp_torus

        return build_cusp_torus(self.T, self.a)

    @cached_property
    def group(self):
        from .triangulation import automorphism_group

        return automorphism_group(self.T)


# -- per-g checkers: each returns (passed, witness) --------------------------

def _edge_census(ctx):
    from .triangulation import edge_classes, expected_edge_census

    classes = edge_classes(ctx.T)
    found = {ec.id: ec.incidence for ec in classes}
    want = {f"e{k}": inc for k, (_, inc) in expected_edge_census(ctx.g).items()}
    g = ctx.g
    shape = sorted(found.values()) == sorted([6] * (g + 1) + [4 * g + 4, 2 * g + 2])
    return found == want and shape, {"incidences": found, "classes": len(classes)}


def _vertex_links(ctx):
    from .triangulation import classify_vertex_links, cusp_surface, truncation_surface

    cusp_genus, boundary_genus = classify_vertex_links(ctx.T)
    cs, ts = cusp_surface(ctx.T), truncation_surface(ctx.T)
    ideal = [vc for vc in ctx.T.vertex_classes if vc.kind == "ideal"]
    ok = (len(ideal) == 1 and cs.euler_characteristic == 0 and cs.triangles == 2 * ctx.g + 2
          and ts.components == 1 and ts.euler_characteristic == 2 - 2 * ctx.g)
    return ok, {"ideal_classes": len(ideal), "cusp_triangles": cs.triangles,
                "cusp_chi": cs.euler_characteristic, "boundary_components": ts.components,
                "boundary_chi": ts.euler_characteristic, "boundary_genus": boundary_genus}


def _angle_identities(ctx):
    from .geometry import cusp_angle_sums, edge_angle_sums

    res = ctx.a.residuals()
    sums = edge_angle_sums(ctx.T, ctx.a)
    cusp = cusp_angle_sums(ctx.T, ctx.a)
    edge_dev = max(abs(s - 2 * math.pi) for s in sums.values())
    cusp_dev = max(abs(s - math.pi) for s in cusp)
    worst = max(abs(v) for v in res.values())
    return max(worst, edge_dev, cusp_dev) <= CONSISTENCY_TOL, {
        "max_identity_residual": worst, "max_edge_sum_deviation": edge_dev,
        "max_cusp_sum_deviation": cusp_dev}


def _consistency(ctx):
    from .geometry import check_consistency

    r = check_consistency(ctx.a)
    return abs(r) <= CONSISTENCY_TOL, {"lhs_minus_rhs": r}


def _half_space(ctx):
    from .geometry import check_Rprime_inequality, realize_half_space

    h = realize_half_space(ctx.a)
    worst = h.max_residual(ctx.a)
    bigger = check_Rprime_inequality(ctx.a)
    return worst <= CUSP_TOL and bigger, {"max_residual": worst, "Rprime": h.Rprime,
                                          "Rprime_exceeds_R": bigger}


def _tilt_identities(ctx):
    from .tilts import tilt_identity_witness

    w = tilt_identity_witness(ctx.a)
    ok = all(abs(w[key]) <= TILT_TOL for key in ("res1", "res2", "d4_minus_4d2cos2gamma"))
    return ok, w


def _canonicity(ctx):
    from .tilts import certify_canonical

    cert = certify_canonical(ctx.T, ctx.a, k=ctx.cfg.k, strict=False)
    sums = [s for _, s in cert.per_face_pair_sums]
    return cert.verdict, {"r_used": cert.r_used, "r_threshold": cert.r_threshold,
                          "tilts": list(cert.tilts), "face_pairs": len(sums),
                          "max_pair_sum": max(sums)}


def _automorphisms(ctx):
    from .triangulation import check_dihedral, dihedral_ok

    w = check_dihedral(ctx.group, ctx.g)
    return dihedral_ok(w), w


def _cusp_consistency(ctx):
    from .cusp import cusp_area, cusp_area_from_triangles, edge_slope_length

    ct, a = ctx.torus, ctx.a
    ell, area = edge_slope_length(a), cusp_area(a)
    w = {
        "edge_length": ct.edge_length, "edge_length_formula": ell,
        "lattice_det": ct.lattice_det, "area_formula": area,
        "area_from_triangles": cusp_area_from_triangles(a),
        "second_length_over_ell": abs(ct.second) / ct.edge_length,
        "theta": ct.theta, "max_loop_residual": ct.max_loop_residual,
    }
    ok = (abs(ct.edge_length - ell) <= CUSP_TOL and abs(ct.lattice_det - area) <= CUSP_TOL
          and abs(area - w["area_from_triangles"]) <= 1e-12 * max(1.0, area)
          and ct.max_loop_residual <= CUSP_TOL)
    return ok, w


def _slope_audit(ctx):
    from .cusp import exhaustive_slope_audit

    audit = exhaustive_slope_audit(ctx.torus, ctx.cfg.coeff_bound, ctx.a)
    return audit.ok, audit.to_dict()


def _volume(ctx):
    from .volume import volume_of_Mg

    vm = volume_of_Mg(ctx.g, ctx.cfg.quadrature_tol)
    n = 2 * ctx.g + 2
    ok = vm.value > 0 and vm.abs_error_bound <= n * ctx.cfg.quadrature_tol
    return ok, {"V_g": vm.value / n, "vol_M_g": vm.value, "vol_M_g_over_g": vm.value / ctx.g,
                "abs_error_bound": vm.abs_error_bound}


@dataclass(frozen=True)
class Claim:
    id: str
    location: str
    checker: object


CLAIMS = {
    c.id: c for c in (
        Claim("edge_census", "triangulation: edge classes and their valences", _edge_census),
        Claim("vertex_links", "triangulation: one cusp with torus link, connected boundary of genus g",
              _vertex_links),
        Claim("angle_identities", "geometry: dihedral angles of the tetrahedra and edge sums",
              _angle_identities),
        Claim("consistency_equation", "geometry: matching equation for the lengths AB and CD",
              _consistency),
        Claim("half_space_realization", "geometry: upper half-space picture and the R' > R inequality",
              _half_space),
        Claim("tilt_identities", "canonical decomposition: vanishing of the k-terms of the tilts",
              _tilt_identities),
        Claim("canonicity", "canonical decomposition: negative tilt sums over glued faces",
              _canonicity),
        Claim("automorphism_group", "symmetry: isometry group is dihedral of order 2g+2 and preserves orientation",
              _automorphisms),
        Claim("cusp_consistency", "fillings: edge-slope length and maximal cusp area", _cusp_consistency),
        Claim("slope_audit", "fillings: every slope other than the meridian is longer than 6",
              _slope_audit),
        Claim("volume_quadrature", "volume: volume of M_g as 2g+2 truncated tetrahedra", _volume),
    )
}

COMMAND_CLAIMS = {
    "build": ("edge_census", "vertex_links"),
    "verify": ("edge_census", "vertex_links", "angle_identities", "consistency_equation",
               "half_space_realization", "tilt_identities", "canonicity", "automorphism_group",
               "cusp_consistency", "slope_audit"),
    "volume": ("volume_quadrature",),
    "slopes": ("cusp_consistency", "slope_audit"),
    "symmetry": ("automorphism_group",),
    "canonical": ("tilt_identities", "canonicity"),
}
COMMAND_CLAIMS["all"] = COMMAND_CLAIMS["verify"]

LIMIT_LOCATION = "volume: asymptotic growth of vol(M_g)/g"


def _check(ctx, claim_id):
    claim = CLAIMS[claim_id]
    try:
        ok, witness = claim.checker(ctx)
    except InvariantViolation as exc:
        ok, witness = False, {"error": f"{type(exc).__name__}: {exc}"}
    except GexError as exc:
        raise ClaimError(claim_id, ctx.g, exc) from exc
    return {"g": ctx.g, "claim": claim_id, "location": claim.location,
            "status": "pass" if ok else "fail", "witness": _clean(witness)}


def _clean(x):
    """Make witness values JSON-friendly and stable."""
    if isinstance(x, dict):
        return {str(k): _clean(v) for k, v in sorted(x.items())}
    if isinstance(x, (list, tuple)):
        return [_clean(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if hasattr(x, "item"):
        return _clean(x.item())
    if isinstance(x, float):
        return x
    if isinstance(x, complex):
        return [x.real, x.imag]
    return str(x)


def _artifacts_for(ctx, command):
    out = {}
    if command == "build":
        out["triangulation"] = ctx.T.to_dict()
    elif command == "symmetry":
        G = ctx.group
        out["group_order"] = G.order
        out["multiplication_table"] = [list(row) for row in G.multiplication_table()]
    elif command == "slopes":
        from .cusp import MERIDIAN, certify_filling

        ct = ctx.torus
        out["meridian_certificate"] = certify_filling(ct, MERIDIAN).to_dict()
        out["basis"] = {"meridian": [ct.meridian.real, ct.meridian.imag],
                        "second": [ct.second.real, ct.second.imag], "theta": ct.theta}
    elif command == "canonical":
        from .tilts import certify_canonical

        out["certificate"] = certify_canonical(ctx.T, ctx.a, k=ctx.cfg.k, strict=False).to_dict()
    return out


def _run_one(args):
    g, cfg, claim_ids = args
    ctx = Context(g, cfg)
    entries = [_check(ctx, cid) for cid in claim_ids]
    return g, entries, _clean(_artifacts_for(ctx, cfg.command))


def max_workers(n_jobs: int) -> int:
    cap = os.environ.get("GEX_MAX_THREADS")
    limit = int(cap) if cap else (os.cpu_count() or 1)
    return max(1, min(limit, n_jobs))


@dataclass
class VerificationReport:
    config: RunConfig
    entries: list
    artifacts: dict = field(default_factory=dict)
    tables: dict = field(default_factory=dict)

    @property
    def summary(self):
        passed = sum(e["status"] == "pass" for e in self.entries)
        failed = len(self.entries) - passed
        return {"total": len(self.entries), "passed": passed, "failed": failed,
                "status": "pass" if failed == 0 else "fail"}

    @property
    def ok(self) -> bool:
        return self.summary["status"] == "pass"

    def to_dict(self):
        return {"schema": SCHEMA_VERSION, "config": self.config.as_dict(),
                "entries": self.entries, "summary": self.summary, "artifacts": self.artifacts}


def _limit_entry(rows, cfg):
    from .volume import LIMIT_CONSTANT

    ratios = [r["vol_M_g_over_g"] for r in rows]
    increasing = all(x < y for x, y in zip(ratios, ratios[1:]))
    below = all(x < LIMIT_CONSTANT for x in ratios)
    last = rows[-1]
    # the 0.01 band is a statement about g = 500; smaller sweeps only test the monotone approach
    close = abs(last["vol_M_g_over_g"] - LIMIT_CONSTANT) < LIMIT_BAND if last["g"] >= 500 else None
    ok = increasing and below and close is not False
    return {"g": None, "claim": "volume_limit", "location": LIMIT_LOCATION,
            "status": "pass" if ok else "fail",
            "witness": _clean({"g": [r["g"] for r in rows], "vol_M_g_over_g": ratios,
                               "limit": LIMIT_CONSTANT, "strictly_increasing": increasing,
                               "below_limit": below, "last_gap": last["vol_M_g_over_g"] - LIMIT_CONSTANT,
                               "within_band": close,
                               "band": LIMIT_BAND})}


def _entry_key(e):
    return (e["g"] is None, e["g"] or 0, e["claim"])


def run(cfg: RunConfig) -> VerificationReport:
    gs = tuple(sorted(set(cfg.gs)))
    claim_ids = COMMAND_CLAIMS[cfg.command]
    jobs = [(g, cfg, claim_ids) for g in gs]
    workers = max_workers(len(jobs))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, jobs))
    else:
        results = [_run_one(j) for j in jobs]
    entries = [e for _, es, _ in results for e in es]
    artifacts = {str(g): art for g, _, art in results if art}
    tables = {}

    volume_gs = ()
    if cfg.command == "volume":
        volume_gs = gs
    elif cfg.command == "all":
        volume_gs = tuple(sorted(set(gs) | set(DEEP_VOLUME_GS))) if cfg.deep else gs
    if volume_gs:
        vol_entries = entries if cfg.command == "volume" else [
            _check(Context(g, cfg), "volume_quadrature") for g in volume_gs]
        if cfg.command == "all":
            entries = entries + vol_entries
        rows = [dict(e["witness"], g=e["g"]) for e in vol_entries
                if e["claim"] == "volume_quadrature" and "vol_M_g" in e["witness"]]
        rows.sort(key=lambda r: r["g"])
        tables["volume"] = rows
        if len(rows) >= 2:
            entries = entries + [_limit_entry(rows, cfg)]
    if cfg.command == "slopes" and len(gs) == 1:
        # the sweep CSV has fixed columns without g, so it is only emitted for a single g
        from .cusp import sweep_csv

        tables["slopes"] = sweep_csv(Context(gs[0], cfg).torus, cfg.coeff_bound)
    entries.sort(key=_entry_key)
    return VerificationReport(cfg, entries, artifacts, tables)


# -- serialization ------------------------------------------------------------

REPORT_CSV_COLUMNS = ("g", "claim", "status", "location", "witness")


def _json_bytes(rep):
    return (json.dumps(rep.to_dict(), sort_keys=True, indent=2) + "\n").encode()


def _csv_bytes(rep):
    from .volume import volume_table_csv

    if rep.config.command == "volume" and "volume" in rep.tables:
        return volume_table_csv(rep.tables["volume"]).encode()
    if rep.config.command == "slopes" and rep.tables.get("slopes"):
        return rep.tables["slopes"].encode()
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_CSV_COLUMNS)
    for e in rep.entries:
        w.writerow(["" if e["g"] is None else e["g"], e["claim"], e["status"], e["location"],
                    json.dumps(e["witness"], sort_keys=True)])
    return buf.getvalue().encode()


def _short(witness):
    items = []
    for k, v in witness.items():
        if isinstance(v, float):
            items.append(f"{k}={v:.6g}")
        elif isinstance(v, (int, bool, str)) or v is None:
            items.append(f"{k}={v}")
    text = ", ".join(items)
    return text if len(text) <= 160 else text[:157] + "..."


def _text_bytes(rep):
    lines = [f"gex report ({SCHEMA_VERSION}) command={rep.config.command}"]
    for e in rep.entries:
        g = "all" if e["g"] is None else f"g={e['g']}"
        lines.append(f"[{e['status'].upper()}] {g:>6} {e['claim']:<24} {e['location']}")
        lines.append(f"         {_short(e['witness'])}")
    if "volume" in rep.tables:
        lines.append("")
        lines.append(f"{'g':>5} {'V_g':>20} {'vol(M_g)/g':>20} {'error bound':>12}")
        for r in rep.tables["volume"]:
            lines.append(f"{r['g']:>5} {r['V_g']:>20.15f} {r['vol_M_g_over_g']:>20.15f} "
                         f"{r['abs_error_bound']:>12.3g}")
    s = rep.summary
    lines.append("")
    lines.append(f"{s['passed']}/{s['total']} claims passed; overall {s['status']}")
    return ("\n".join(lines) + "\n").encode()


def emit_report(rep: VerificationReport, fmt: str = "text") -> bytes:
    if fmt == "json":
        return _json_bytes(rep)
    if fmt == "csv":
        return _csv_bytes(rep)
    if fmt == "text":
        return _text_bytes(rep)
    raise DomainError(f"unknown format {fmt!r}")

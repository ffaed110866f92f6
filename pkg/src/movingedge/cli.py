"""Command-line front end.

    movingedge fieldmap    exact lab-frame field on a grid (CSV/JSON)
    movingedge decompose   GO incident / reflected / diffracted split on a grid
    movingedge geometry    shadow boundaries, singular rays, extremal lines, wavefronts (JSON)
    movingedge validate    residual checks; exit status 3 on a tolerance breach
    movingedge convergence asymptotic error table (CSV)

Angles are in degrees on the command line.  A ``--config`` JSON file may
supply any option by its long name with dashes replaced by underscores;
explicit flags win.
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import asymptotics, geometry, validation
from .errors import MovingEdgeError
from .fields import COMPONENTS
from .kinematics import LabPoint, Motion, WaveParams, lab_to_primed, transform_wave
from .lab_field import lab_field_total, plane_wave
from .sommerfeld import EDGE_TOL

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_USAGE, EXIT_IO, EXIT_BREACH = 0, 1, 2, 3

DEFAULTS = {
    "beta": 0.0,
    "theta_deg": 60.0,
    "k": 2 * math.pi,
    "c": 1.0,
    "a1_re": 1.0,
    "a1_im": 0.0,
    "a2_re": 0.0,
    "a2_im": 0.0,
    "t": 0.0,
    "xmin": -2.0,
    "xmax": 2.0,
    "nx": 41,
    "zmin": -2.0,
    "zmax": 2.0,
    "nz": 41,
    "format": "csv",
    "output": "-",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class Grid:
    xmin: float
    xmax: float
    nx: int
    zmin: float
    zmax: float
    nz: int

    def __post_init__(self):
        if self.nx < 1 or self.nz < 1:
            raise UsageError("nx and nz must be >= 1")
        if not (self.xmax > self.xmin and self.zmax > self.zmin):
            raise UsageError("grid needs xmax > xmin and zmax > zmin")

    def points(self, t):
        """Row-major (z outer, x inner) flattened grid."""
        xs = np.linspace(self.xmin, self.xmax, self.nx)
        zs = np.linspace(self.zmin, self.zmax, self.nz)
        Z, X = np.meshgrid(zs, xs, indexing="ij")
        return LabPoint(X.ravel(), Z.ravel(), np.full(X.size, float(t)))


@dataclass(frozen=True)
class Scenario:
    wave: WaveParams
    motion: Motion
    time: float
    grid: Grid
    output_path: str
    format: str


def _fmt(v):
    v = float(v)
    return "nan" if math.isnan(v) else f"{v:.16e}"


def _jnum(v):
    v = float(v)
    return None if not math.isfinite(v) else v


def _jcomplex(z):
    return {"re": _jnum(z.real), "im": _jnum(z.imag)}


def _common(p):
    p.add_argument("--config")
    p.add_argument("--beta", type=float)
    p.add_argument("--theta-deg", type=float)
    p.add_argument("--k", type=float)
    p.add_argument("--c", type=float)
    p.add_argument("--a1-re", type=float)
    p.add_argument("--a1-im", type=float)
    p.add_argument("--a2-re", type=float)
    p.add_argument("--a2-im", type=float)
    p.add_argument("--t", type=float)
    p.add_argument("--output", "-o")


def _grid_flags(p):
    for name in ("xmin", "xmax", "zmin", "zmax"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--nx", type=int)
    p.add_argument("--nz", type=int)
    p.add_argument("--format", choices=("csv", "json"))


def build_parser():
    parser = _Parser(prog="movingedge", description="Plane-wave diffraction by a moving half-plane.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fm = sub.add_parser("fieldmap", help="exact lab-frame field on a grid")
    _common(fm)
    _grid_flags(fm)
    fm.add_argument("--quantity", choices=("fields", "abs_e", "phase", "local_frequency"))
    fm.add_argument("--component", choices=COMPONENTS)

    dc = sub.add_parser("decompose", help="GO + diffracted decomposition on a grid")
    _common(dc)
    _grid_flags(dc)

    ge = sub.add_parser("geometry", help="moving-edge loci as JSON")
    _common(ge)
    ge.add_argument("--levels", type=float, nargs="*", help="equiphase levels C")

    va = sub.add_parser("validate", help="residual checks")
    _common(va)
    va.add_argument("--plane-wave", action="store_true", help="check the bare incident wave (no screen)")
    va.add_argument("--bc-tol", type=float)
    va.add_argument("--slope-tol", type=float)
    va.add_argument("--n-points", type=int)

    cv = sub.add_parser("convergence", help="asymptotic error vs k' rho'")
    _common(cv)
    cv.add_argument("--directions-deg", type=float, nargs="*", help="primed angles phi' in degrees")
    cv.add_argument("--krho-min", type=float)
    cv.add_argument("--krho-max", type=float)
    cv.add_argument("--n-krho", type=int)
    cv.add_argument("--min-gap-deg", type=float)
    return parser


EXTRA_DEFAULTS = {
    "quantity": "fields",
    "component": "Ey",
    "levels": [],
    "plane_wave": False,
    "bc_tol": 1e-10,
    "slope_tol": 0.2,
    "n_points": 50,
    "directions_deg": None,
    "krho_min": 1e2,
    "krho_max": 1e4,
    "n_krho": 5,
    "min_gap_deg": 10.0,
}


def resolve_options(args):
    """Merge explicit flags over the config file over built-in defaults."""
    opts = dict(DEFAULTS)
    opts.update(EXTRA_DEFAULTS)
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                cfg = json.load(fh)
        except OSError as exc:
            raise OSError(f"cannot read config: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise UsageError(f"bad config file: {exc}") from exc
        unknown = set(cfg) - set(opts)
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        opts.update(cfg)
    for key, val in vars(args).items():
        if key in ("config", "command"):
            continue
        if val is not None and not (key == "plane_wave" and val is False):
            opts[key] = val
    return opts


def scenario_from_options(opts):
    try:
        wave = WaveParams(
            k=float(opts["k"]),
            theta=math.radians(float(opts["theta_deg"])),
            A1=complex(opts["a1_re"], opts["a1_im"]),
            A2=complex(opts["a2_re"], opts["a2_im"]),
            c=float(opts["c"]),
        )
        motion = Motion(float(opts["beta"]))
    except MovingEdgeError as exc:
        raise UsageError(str(exc)) from exc
    grid = Grid(
        float(opts["xmin"]), float(opts["xmax"]), int(opts["nx"]),
        float(opts["zmin"]), float(opts["zmax"]), int(opts["nz"]),
    )
    return Scenario(wave, motion, float(opts["t"]), grid, opts["output"], opts["format"])


def _point_status(p, s):
    """'ok', 'singular' (edge) or 'boundary' (on the screen) per grid point."""
    pp = lab_to_primed(p, s.motion, s.wave.c)
    pw = transform_wave(s.wave, s.motion)
    rho_min = EDGE_TOL * 2 * np.pi / pw.k_prime
    status = np.full(np.shape(p.x), "ok", dtype=object)
    on_screen = (np.asarray(pp.z_prime) == 0) & (np.asarray(pp.x_prime) < 0)
    status[on_screen] = "boundary"
    status[np.asarray(pp.rho_prime) < rho_min] = "singular"
    return status


def _subset(p, mask):
    return LabPoint(np.asarray(p.x)[mask], np.asarray(p.z)[mask], np.asarray(p.t)[mask])


def compute_fieldmap(s: Scenario, quantity="fields", component="Ey"):
    """Column names and row tuples for the fieldmap command."""
    p = s.grid.points(s.time)
    status = _point_status(p, s)
    ok = status == "ok"
    n = ok.size
    if quantity == "fields":
        names = [f"{c}_{part}" for c in COMPONENTS for part in ("re", "im")]
        vals = np.full((6, n), np.nan + 1j * np.nan, dtype=complex)
        if ok.any():
            vals[:, ok] = lab_field_total(_subset(p, ok), s.wave, s.motion).as_array()
        cols = [v for c in vals for v in (c.real, c.imag)]
    else:
        vals = np.full(n, np.nan)
        if ok.any():
            q = _subset(p, ok)
            if quantity == "local_frequency":
                vals[ok] = asymptotics.local_frequency(q, s.wave, s.motion)
            else:
                f = lab_field_total(q, s.wave, s.motion)
                if quantity == "abs_e":
                    vals[ok] = np.sqrt(np.sum(np.abs(f.E) ** 2, axis=0))
                else:
                    vals[ok] = np.angle(f.component(component))
        names = [quantity if quantity != "phase" else f"phase_{component}"]
        cols = [vals]
    header = ["x", "z", "t", "status"] + names
    rows = [
        (p.x[i], p.z[i], p.t[i], status[i]) + tuple(col[i] for col in cols)
        for i in range(n)
    ]
    return header, rows


def compute_decomposition(s: Scenario):
    p = s.grid.points(s.time)
    status = _point_status(p, s)
    # the asymptotic split is valid on the screen faces; only the edge is excluded
    status[status == "boundary"] = "ok"
    u, v = asymptotics.shadow_arguments(p, s.wave, s.motion)
    near = (np.abs(u) < asymptotics.SHADOW_TOL) | (np.abs(v) < asymptotics.SHADOW_TOL)
    status[near & (status == "ok")] = "shadow_boundary"
    ok = status == "ok"
    parts = ("go_incident", "go_reflected", "diffracted", "total")
    n = ok.size
    vals = np.full((len(parts), 6, n), np.nan + 1j * np.nan, dtype=complex)
    if ok.any():
        d = asymptotics.decompose(_subset(p, ok), s.wave, s.motion)
        for j, name in enumerate(parts):
            vals[j][:, ok] = getattr(d, name).as_array()
    names = [f"{part}_{c}_{ri}" for part in parts for c in COMPONENTS for ri in ("re", "im")]
    header = ["x", "z", "t", "status", "incident_lit", "reflected_lit"] + names
    inc_lit, ref_lit = np.asarray(u) < 0, np.asarray(v) < 0
    rows = []
    for i in range(n):
        nums = []
        for j in range(len(parts)):
            for c in vals[j][:, i]:
                nums += [c.real, c.imag]
        rows.append((p.x[i], p.z[i], p.t[i], status[i], int(inc_lit[i]), int(ref_lit[i])) + tuple(nums))
    return header, rows


def _ray(h):
    return {
        "origin": list(h.origin),
        "direction": list(h.direction),
        "valid_side_sign": h.valid_side_sign,
        "degenerate": h.degenerate,
    }


def compute_geometry(s: Scenario, levels):
    w, m, t = s.wave, s.motion, s.time
    circles = []
    for C in levels:
        try:
            circ = geometry.equiphase_circle(C, w, m, t)
            circles.append({"C": float(C), "center": list(circ.center), "radius": circ.radius})
        except MovingEdgeError:
            circles.append({"C": float(C), "center": None, "radius": None})
    if m.beta == 0:
        extremal = None
    else:
        extremal = [_ray(h) for h in geometry.extremal_z_lines(m, t, w.c)]
    return {
        "schema_version": SCHEMA_VERSION,
        "command": "geometry",
        "parameters": _params(s),
        "edge": list(geometry.edge_position(m, t, w.c)),
        "shadow_boundaries": {
            kind: _ray(geometry.shadow_boundary(kind, w, m, t)) for kind in ("incident", "reflected")
        },
        "singularity_lines": [_ray(h) for h in geometry.singularity_lines(w, m, t)],
        "extremal_z_lines": extremal,
        "circles": circles,
    }


def _params(s):
    w = s.wave
    return {
        "beta": s.motion.beta,
        "theta_deg": math.degrees(w.theta),
        "k": w.k,
        "c": w.c,
        "A1": _jcomplex(w.A1),
        "A2": _jcomplex(w.A2),
        "t": s.time,
    }


def run_validation(s: Scenario, opts):
    """Reports and pass/fail for the configured scenario."""
    w, m, t = s.wave, s.motion, s.time
    lam = w.wavelength
    x0 = m.beta * w.c * t
    boxes = {
        "upper": validation.Box(x0 - 2 * lam, x0 + 2 * lam, 0.25 * lam, 2 * lam, t, t + lam / w.c),
        "lower": validation.Box(x0 - 2 * lam, x0 + 2 * lam, -2 * lam, -0.25 * lam, t, t + lam / w.c),
    }
    hs = tuple(1e-2 * 0.5 ** j for j in range(5))
    results = []
    ok = True
    if opts["plane_wave"]:
        samplers = {"plane_wave": (lambda p: plane_wave(p, w), False)}
        box_items = [("all", validation.Box(x0 - 2 * lam, x0 + 2 * lam, -2 * lam, 2 * lam, t, t + lam / w.c))]
    else:
        samplers = {"lab_field_total": (lambda p: lab_field_total(p, w, m), True)}
        box_items = list(boxes.items())
    for sname, (fn, screen) in samplers.items():
        for bname, box in box_items:
            reports, slope = validation.maxwell_convergence(
                fn, box, hs, w.c, k=w.k, beta=m.beta, screen=screen,
                n_points=int(opts["n_points"]), name=f"maxwell/{sname}/{bname}",
            )
            passed = abs(slope - 2.0) <= float(opts["slope_tol"])
            ok &= passed
            for r in reports:
                d = r.as_dict()
                d["passed"] = passed if r.convergence_slope is not None else None
                results.append(d)
    if not opts["plane_wave"]:
        pw = transform_wave(w, m)
        rho = np.geomspace(0.1, 100, 64) / pw.k_prime
        rep = validation.boundary_residual(w, m, rho)
        passed = rep.relative <= float(opts["bc_tol"])
        ok &= passed
        d = rep.as_dict()
        d["tolerance"] = float(opts["bc_tol"])
        d["passed"] = passed
        results.append(d)
    return {"schema_version": SCHEMA_VERSION, "command": "validate", "parameters": _params(s),
            "passed": bool(ok), "reports": results}, ok


def run_convergence(s: Scenario, opts):
    w, m = s.wave, s.motion
    gap = float(opts["min_gap_deg"])
    if opts["directions_deg"] is None:
        dirs = validation.default_directions(w, m, gap)
    else:
        if len(opts["directions_deg"]) == 0:
            raise UsageError("--directions-deg needs at least one angle")
        dirs = np.radians(opts["directions_deg"])
    n = int(opts["n_krho"])
    if n < 1:
        raise UsageError("--n-krho must be >= 1")
    krho = np.geomspace(float(opts["krho_min"]), float(opts["krho_max"]), n)
    try:
        table = validation.convergence_scan(w, m, dirs, krho, gap)
    except validation.PreconditionError as exc:
        raise UsageError(str(exc)) from exc
    header = ["krho", "max_rel_error", "slope"]
    rows = [(kr, e, table.slope) for kr, e in table.rows()]
    return header, rows


def _csv_text(header, rows):
    lines = [",".join(header)]
    for row in rows:
        cells = []
        for v in row:
            if isinstance(v, str):
                cells.append(v)
            elif v is None:
                cells.append("")
            elif isinstance(v, (int, np.integer)) and not isinstance(v, bool):
                cells.append(str(int(v)))
            else:
                cells.append(_fmt(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def _table_json(command, s, header, rows):
    records = []
    for row in rows:
        rec = {}
        for name, v in zip(header, row):
            if isinstance(v, str) or v is None:
                rec[name] = v
            elif isinstance(v, (int, np.integer)):
                rec[name] = int(v)
            else:
                rec[name] = _jnum(v)
        records.append(_pair_complex(rec))
    return {"schema_version": SCHEMA_VERSION, "command": command, "parameters": _params(s), "rows": records}


def _pair_complex(rec):
    """Fold ``<name>_re``/``<name>_im`` pairs into {"re": .., "im": ..} objects."""
    out = {}
    for key, val in rec.items():
        if key.endswith("_re") and key[:-3] + "_im" in rec:
            out[key[:-3]] = {"re": val, "im": rec[key[:-3] + "_im"]}
        elif key.endswith("_im") and key[:-3] + "_re" in rec:
            continue
        else:
            out[key] = val
    return out


def _json_text(doc):
    return json.dumps(doc, indent=2, sort_keys=False, allow_nan=False) + "\n"


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        opts = resolve_options(args)
        s = scenario_from_options(opts)
        status = EXIT_OK
        if args.command == "fieldmap":
            header, rows = compute_fieldmap(s, opts["quantity"], opts["component"])
            text = _csv_text(header, rows) if s.format == "csv" else _json_text(_table_json("fieldmap", s, header, rows))
        elif args.command == "decompose":
            header, rows = compute_decomposition(s)
            text = _csv_text(header, rows) if s.format == "csv" else _json_text(_table_json("decompose", s, header, rows))
        elif args.command == "geometry":
            text = _json_text(compute_geometry(s, opts["levels"]))
        elif args.command == "validate":
            doc, ok = run_validation(s, opts)
            text = _json_text(doc)
            status = EXIT_OK if ok else EXIT_BREACH
        else:
            header, rows = run_convergence(s, opts)
            text = _csv_text(header, rows)
        _write(s.output_path, text)
        return status
    except UsageError as exc:
        print(f"movingedge: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"movingedge: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

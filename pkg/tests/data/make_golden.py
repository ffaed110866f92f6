"""Regenerate the stationary (beta = 0) golden files.

    python tests/data/make_golden.py

stationary_fieldmap.csv comes from the co-moving-frame Sommerfeld module
(at beta = 0 the primed point is the lab point).  stationary_decompose.csv
substitutes the two-term asymptotic form of G into the same closed forms,
splitting the Heaviside term (GO) from the i/(2a) and edge terms
(diffracted).  Neither path touches lab_field or asymptotics.
"""

import math
import pathlib

import numpy as np

from movingedge.kinematics import PrimedPoint, PrimedWaveParams
from movingedge.sommerfeld import total_field_primed

HERE = pathlib.Path(__file__).parent

SCENARIO = dict(beta=0.0, theta_deg=60.0, k=2 * math.pi, c=1.0, a1=1.0, a2=0.5 - 0.25j, t=0.0,
                xmin=-2.0, xmax=2.0, nx=9, zmin=-2.0, zmax=2.0, nz=9)
COMPONENTS = ("Ex", "Ey", "Ez", "cBx", "cBy", "cBz")


def cli_args(s=SCENARIO):
    return [
        "--beta", repr(s["beta"]), "--theta-deg", repr(s["theta_deg"]), "--k", repr(s["k"]),
        "--c", repr(s["c"]), "--a1-re", repr(s["a1"].real if isinstance(s["a1"], complex) else s["a1"]),
        "--a1-im", repr(complex(s["a1"]).imag), "--a2-re", repr(complex(s["a2"]).real),
        "--a2-im", repr(complex(s["a2"]).imag), "--t", repr(s["t"]),
        "--xmin", repr(s["xmin"]), "--xmax", repr(s["xmax"]), "--nx", str(s["nx"]),
        "--zmin", repr(s["zmin"]), "--zmax", repr(s["zmax"]), "--nz", str(s["nz"]),
    ]


def _grid(s):
    xs = np.linspace(s["xmin"], s["xmax"], s["nx"])
    zs = np.linspace(s["zmin"], s["zmax"], s["nz"])
    return [(x, z) for z in zs for x in xs]


def _fmt(v):
    return "nan" if math.isnan(v) else f"{v:.16e}"


def _pw(s):
    return PrimedWaveParams(s["k"], math.radians(s["theta_deg"]), complex(s["a1"]), complex(s["a2"]), s["c"])


def fieldmap_rows(s=SCENARIO):
    pw = _pw(s)
    out = []
    for x, z in _grid(s):
        if x == 0 and z == 0:
            status, vals = "singular", [math.nan] * 12
        elif z == 0 and x < 0:
            status, vals = "boundary", [math.nan] * 12
        else:
            status = "ok"
            f = total_field_primed(PrimedPoint.from_cartesian(x, z, s["t"]), pw).as_array()
            vals = [p for c in f for p in (c.real, c.imag)]
        out.append([x, z, s["t"], status] + vals)
    return out


def _asym_parts(x, z, s):
    """(GO incident, GO reflected, diffracted) 6-vectors, stationary screen."""
    k, th = s["k"], math.radians(s["theta_deg"])
    A1, A2 = complex(s["a1"]), complex(s["a2"])
    rho, phi = math.hypot(x, z), math.atan2(z, x)
    if z == 0 and x < 0:
        phi = math.pi
    u = -math.sqrt(2 * k * rho) * math.cos((phi - th) / 2)
    v = math.sqrt(2 * k * rho) * math.cos((phi + th) / 2)
    pref = np.exp(-0.25j * math.pi) / math.sqrt(math.pi) * np.exp(1j * k * rho - 1j * k * s["c"] * s["t"])
    W = math.sqrt(2 / (k * rho))
    go = lambda a: (a < 0) * math.sqrt(math.pi) * np.exp(0.25j * math.pi) * np.exp(-1j * a * a)
    dif = lambda a: 0.5j / a
    ch, sh, ct, st = math.cos(phi / 2), math.sin(phi / 2), math.cos(th / 2), math.sin(th / 2)

    def vec(Gu, Gv, edge):
        dG, sG = Gu - Gv, Gu + Gv
        return np.array([
            A2 * pref * (-math.sin(th) * dG - edge * 1j * W * ch * st),
            A1 * pref * dG,
            A2 * pref * (math.cos(th) * sG - edge * 1j * W * sh * st),
            A1 * pref * (math.sin(th) * sG + edge * 1j * W * sh * ct),
            A2 * pref * sG,
            A1 * pref * (-math.cos(th) * dG - edge * 1j * W * ch * ct),
        ])

    inc = vec(go(u), 0.0, 0)
    ref = vec(0.0, go(v), 0)
    diff = vec(dif(u), dif(v), 1)
    return inc, ref, diff, u < 0, v < 0


def decompose_rows(s=SCENARIO):
    out = []
    for x, z in _grid(s):
        if x == 0 and z == 0:
            out.append([x, z, s["t"], "singular", 0, 0] + [math.nan] * 48)
            continue
        inc, ref, diff, il, rl = _asym_parts(x, z, s)
        vals = []
        for part in (inc, ref, diff, inc + ref + diff):
            vals += [p for c in part for p in (c.real, c.imag)]
        out.append([x, z, s["t"], "ok", int(il), int(rl)] + vals)
    return out


def write(path, header, rows):
    lines = [",".join(header)]
    for r in rows:
        lines.append(",".join(c if isinstance(c, str) else str(c) if isinstance(c, int) else _fmt(c) for c in r))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main():
    fm_header = ["x", "z", "t", "status"] + [f"{c}_{p}" for c in COMPONENTS for p in ("re", "im")]
    write(HERE / "stationary_fieldmap.csv", fm_header, fieldmap_rows())
    parts = ("go_incident", "go_reflected", "diffracted", "total")
    dc_header = ["x", "z", "t", "status", "incident_lit", "reflected_lit"] + [
        f"{p}_{c}_{ri}" for p in parts for c in COMPONENTS for ri in ("re", "im")
    ]
    write(HERE / "stationary_decompose.csv", dc_header, decompose_rows())


if __name__ == "__main__":
    main()

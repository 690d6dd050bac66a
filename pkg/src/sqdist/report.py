"""Serializable per-shape reports shared by the command line front end."""

from __future__ import annotations

from fractions import Fraction

from . import checks
from . import closed_forms as cf
from . import spectral as sp
from .errors import BlockCountTooSmall, CofactorZero
from .graph import Shape
from .linalg import format_rational

CSV_COLUMNS = [
    "shape", "n", "b", "det_delta", "cof_delta", "rho_lo", "rho_hi",
    "lap_inertia_plus", "lap_inertia_zero", "lap_inertia_minus",
]


def analysis_report(shape: Shape, width_limit=sp.DEFAULT_WIDTH) -> dict:
    shape = shape.canonical()
    notes = []
    try:
        lam = format_rational(cf.lambda_(shape))
        eta = [format_rational(v) for v in cf.eta(shape).entries]
        cofactor_constant = format_rational(cf.cofactor_constant(shape))
    except CofactorZero:
        lam = eta = cofactor_constant = None
        notes.append(f"inverse undefined: {shape}")
    except BlockCountTooSmall:
        lam = eta = cofactor_constant = None
        notes.append(f"laplacian-like form needs at least two blocks: {shape}")
    lap = checks.laplacian_inertia(shape)
    results = checks.run_shape_checks(shape, width_limit)
    return {
        "shape": list(shape.parts),
        "n": shape.n,
        "b": shape.b,
        "det_delta": format_rational(cf.det_delta_closed(shape)),
        "det_delta22": format_rational(cf.det_delta22_closed(shape)),
        "cof_delta": format_rational(cf.cof_delta_closed(shape)),
        "cof_delta22": format_rational(cf.cof_delta22_closed(shape)),
        "charpoly_delta": cf.charpoly_delta_closed(shape).to_strings(),
        "inertia_delta": list(cf.inertia_delta_closed(shape)),
        "inertia_delta22": list(cf.inertia_delta22_closed(shape)),
        "lambda": lam,
        "eta": eta,
        "cofactor_constant": cofactor_constant,
        "laplacian_inertia": None if lap is None else list(lap),
        "rho": sp.spectral_radius(shape, width_limit).to_json(),
        "checks": {k: "pass" if v else "fail" for k, v in results.items()},
        "notes": notes,
    }


def render_text(report: dict) -> str:
    lines = []
    for key, value in report.items():
        if key == "checks":
            lines.append("checks:")
            lines.extend(f"  {name}: {status}" for name, status in value.items())
        elif key == "rho":
            lo, hi = Fraction(value["lo"]), Fraction(value["hi"])
            approx = float((lo + hi) / 2)
            lines.append(f"rho: [{value['lo']}, {value['hi']}]  (approx {approx:.12g})")
        elif isinstance(value, list):
            lines.append(f"{key}: [{', '.join(map(str, value))}]")
        else:
            lines.append(f"{key}: {'null' if value is None else value}")
    return "\n".join(lines)


def sweep_row(shape: Shape, width_limit=sp.DEFAULT_WIDTH) -> dict:
    br = sp.spectral_radius(shape, width_limit)
    lap = checks.laplacian_inertia(shape)
    row = {
        "shape": list(shape.parts),
        "n": shape.n,
        "b": shape.b,
        "det_delta": format_rational(cf.det_delta_closed(shape)),
        "cof_delta": format_rational(cf.cof_delta_closed(shape)),
        "rho_lo": format_rational(br.lo),
        "rho_hi": format_rational(br.hi),
    }
    for key, v in zip(CSV_COLUMNS[-3:], lap if lap is not None else (None,) * 3):
        row[key] = v
    return row


def extremal_text(rep: sp.ExtremalReport) -> str:
    lines = [f"n={rep.n} b={rep.b}"]
    for s, br in rep.shapes:
        lines.append(f"  {s}: rho in [{format_rational(br.lo)}, {format_rational(br.hi)}]"
                     f"  (approx {float(br.midpoint):.12g})")
    lines.append(f"argmin: {rep.argmin_shape} unique={rep.min_unique} expected={rep.expected_min}")
    lines.append(f"argmax: {rep.argmax_shape} unique={rep.max_unique} expected={rep.expected_max}")
    return "\n".join(lines)

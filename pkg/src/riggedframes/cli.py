"""Command-line interface: classify, solve, certify, gallery.

System files and reports are JSON text. Complex numbers are [re, im]
pairs throughout; a system file carries exactly one of an explicit
evaluation table or a gallery reference. Reports are deterministic for
identical inputs and seeds once the provenance timestamp is suppressed
with ``--no-timestamp``.

Exit codes: 0 success (an unsolvable moment problem is a finding, not
a failure), 2 validation error, 3 numerical failure.
"""

from __future__ import annotations

import argparse
import datetime
import hashlib
import json
import sys
from pathlib import Path

import numpy as np

from . import __version__, gallery, moment, spectra, wmap
from .errors import (
    BadParams,
    CertificateUnstable,
    NoConvergence,
    RiggedFrameError,
)
from .gelfand import TripleSpec
from .measure import KINDS, MeasureSpace, make_counting, make_uniform
from .wmap import SampledMap


class ValidationError(RiggedFrameError, ValueError):
    """Malformed system file or command arguments."""


# ---------------------------------------------------------------------------
# parsing


def _require(mapping: dict, key: str, where: str):
    if key not in mapping:
        raise ValidationError(f"{where} is missing required key {key!r}")
    return mapping[key]


def _parse_complex_entry(entry, where: str) -> complex:
    if (
        not isinstance(entry, (list, tuple))
        or len(entry) != 2
        or not all(isinstance(part, (int, float)) for part in entry)
    ):
        raise ValidationError(f"{where} must be a [re, im] pair, got {entry!r}")
    value = complex(float(entry[0]), float(entry[1]))
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise ValidationError(f"{where} contains a non-finite value")
    return value


def _parse_measure(block, n_rows: int | None) -> MeasureSpace:
    if not isinstance(block, dict):
        raise ValidationError('"measure" must be an object')
    kind = _require(block, "kind", '"measure"')
    if kind not in KINDS:
        raise ValidationError(f'unknown measure kind {kind!r}; choose from {KINDS}')
    if "nodes" in block or "weights" in block:
        nodes = _require(block, "nodes", '"measure"')
        weights = _require(block, "weights", '"measure"')
        nodes = np.asarray(nodes, dtype=float)
        weights = np.asarray(weights, dtype=float)
        if np.any(~np.isfinite(weights)) or np.any(weights <= 0):
            raise ValidationError("measure weights must be finite and positive")
        return MeasureSpace(nodes, weights, kind)
    n = int(_require(block, "N", '"measure"'))
    if kind == "counting":
        return make_counting(n)
    a = float(_require(block, "a", '"measure"'))
    b = float(_require(block, "b", '"measure"'))
    return make_uniform(a, b, n, periodic=(kind == "trapezoid-periodic"))


def _parse_table(block, dim: int, n_nodes: int) -> np.ndarray:
    if not isinstance(block, list) or len(block) != n_nodes:
        raise ValidationError(
            f'"table" must be a list of {n_nodes} rows matching the measure'
        )
    out = np.zeros((n_nodes, dim), dtype=complex)
    for i, row in enumerate(block):
        if not isinstance(row, list) or len(row) != dim:
            raise ValidationError(
                f"table row {i} must have {dim} entries matching the triple"
            )
        for n, entry in enumerate(row):
            out[i, n] = _parse_complex_entry(entry, f"table entry ({i}, {n})")
    return out


def load_system(path: str) -> tuple[SampledMap, gallery.GallerySpec | None]:
    """Parse and validate a system file; returns the map and its gallery spec, if any."""
    raw = Path(path).read_text(encoding="utf-8")
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ValidationError("system file must be a JSON object")

    has_table = "table" in doc
    has_gallery = "gallery" in doc
    if has_table == has_gallery:
        raise ValidationError('exactly one of "table" or "gallery" must be present')

    if has_gallery:
        block = doc["gallery"]
        if not isinstance(block, dict):
            raise ValidationError('"gallery" must be an object')
        name = _require(block, "name", '"gallery"')
        params = block.get("params", {})
        if not isinstance(params, dict):
            raise ValidationError('"gallery" params must be an object')
        spec = gallery.GallerySpec(str(name), params)
        return gallery.make(spec), spec

    triple_block = _require(doc, "triple", "system file")
    if not isinstance(triple_block, dict):
        raise ValidationError('"triple" must be an object')
    dim = int(_require(triple_block, "dim", '"triple"'))
    max_order = int(triple_block.get("max_order", gallery.DEFAULT_MAX_ORDER))
    triple = TripleSpec(dim, max_order)

    ms = _parse_measure(_require(doc, "measure", "system file"), None)
    table = _parse_table(doc["table"], dim, ms.size)
    return SampledMap(table, ms, triple), None


def _parse_moments(arg: str, n_nodes: int) -> np.ndarray:
    text = arg.strip()
    if not text.startswith("["):
        text = Path(arg).read_text(encoding="utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"moments are not valid JSON: {exc}") from None
    if not isinstance(doc, list):
        raise ValidationError("moments must be a JSON array")
    if len(doc) != n_nodes:
        raise ValidationError(f"got {len(doc)} moments for {n_nodes} nodes")
    out = np.zeros(n_nodes, dtype=complex)
    for i, entry in enumerate(doc):
        if isinstance(entry, (int, float)):
            if not np.isfinite(entry):
                raise ValidationError(f"moment {i} is non-finite")
            out[i] = complex(entry)
        else:
            out[i] = _parse_complex_entry(entry, f"moment {i}")
    return out


# ---------------------------------------------------------------------------
# serialization


def _jsonify(obj):
    if isinstance(obj, dict):
        return {key: _jsonify(value) for key, value in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonify(item) for item in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonify(item) for item in obj.tolist()]
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer, int)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    return obj


def _dump(doc: dict, out: str | None) -> None:
    text = json.dumps(_jsonify(doc), indent=2, sort_keys=True, allow_nan=False) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _provenance(args, input_path: str | None) -> dict:
    out = {"tool": f"riggedframes {__version__}", "seed": args.seed}
    if input_path is not None:
        digest = hashlib.sha256(Path(input_path).read_bytes()).hexdigest()
        out["input_digest"] = f"sha256:{digest}"
    if not args.no_timestamp:
        out["timestamp"] = datetime.datetime.now(datetime.timezone.utc).isoformat()
    return out


def _classification_dict(cls: spectra.Classification) -> dict:
    return {
        "bessel": cls.bessel,
        "bessel_order": cls.bessel_order,
        "bessel_constant": cls.bessel_constant,
        "bounded_bessel": cls.bounded_bessel,
        "bessel_bound": cls.bessel_bound,
        "upper_semiframe": cls.upper_semiframe,
        "riesz_fischer": cls.riesz_fischer,
        "rf_lower_bound": cls.rf_lower_bound,
        "frame": cls.frame,
        "frame_bounds": [cls.frame_bounds.lower, cls.frame_bounds.upper],
        "total": cls.total,
        "mu_independent": cls.mu_independent,
        "row_norm_min": cls.row_norm_min,
        "row_norm_max": cls.row_norm_max,
        "tolerances": {
            "rank_tol": cls.tolerances.rank_tol,
            "frame_tol": cls.tolerances.frame_tol,
            "strict_total_tol": cls.tolerances.strict_total_tol,
            "residual_tol": cls.tolerances.residual_tol,
            "certificate_growth": cls.tolerances.certificate_growth,
        },
    }


def _certificate_dict(cert: moment.RFCertificate) -> dict:
    return {
        "holds": cert.holds,
        "sigma_min_synthesis": cert.sigma_min_synthesis,
        "witness_radius": cert.witness_radius,
        "witness_set": None
        if cert.witness_set is None
        else {"order": cert.witness_set.order, "radius": cert.witness_set.radius},
        "max_violation": cert.max_violation,
        "probes": cert.probes,
    }


# ---------------------------------------------------------------------------
# commands

#: Galleries whose doubled-dimension companion is a meaningful family
#: member (deterministic construction, not a fresh random draw).
_FAMILY_GALLERIES = ("onb", "fourier", "delta_prime", "non_total")


def _companion_for(spec: gallery.GallerySpec | None) -> SampledMap | None:
    if spec is None or spec.name not in _FAMILY_GALLERIES:
        return None
    try:
        return gallery.make(gallery.double_dimension(spec))
    except BadParams:
        return None


def _cmd_classify(args) -> int:
    m, gspec = load_system(args.input)
    tols = spectra.Tolerances(rank_tol=args.rank_tol)
    cls = spectra.classify(
        m,
        tolerances=tols,
        companion=_companion_for(gspec),
        probes=args.probes,
        seed=args.seed,
    )
    cert = moment.rf_certificate(m, rank_tol=args.rank_tol, probes=args.probes, seed=args.seed)
    report = {
        "classification": _classification_dict(cls),
        "bounds": {
            "frame_lower": cls.frame_bounds.lower,
            "frame_upper": cls.frame_bounds.upper,
            "bessel_bound": cls.bessel_bound,
            "rf_lower_bound": cls.rf_lower_bound,
            "row_norm_min": cls.row_norm_min,
            "row_norm_max": cls.row_norm_max,
        },
        "rf_certificate": _certificate_dict(cert),
        "provenance": _provenance(args, args.input),
    }
    _dump(report, args.out)
    return 0


def _cmd_solve(args) -> int:
    m, _ = load_system(args.input)
    h = _parse_moments(args.moments, m.n_nodes)
    sol = moment.solve_moment(
        m, h, rank_tol=args.rank_tol, residual_tol=args.residual_tol
    )
    if wmap.is_total(m, args.rank_tol):
        constants = [
            moment.stability_constant(m, k=k, rank_tol=args.rank_tol)
            for k in range(m.triple.max_order + 1)
        ]
    else:
        constants = None
    report = {
        "moment": {
            "solution": list(sol.f),
            "residual": sol.residual,
            "unique": sol.unique,
            "kernel_dim": sol.kernel_dim,
            "solvable": sol.solvable,
            "decay_profile": sol.decay,
            "stability_constants": constants,
        },
        "provenance": _provenance(args, args.input),
    }
    _dump(report, args.out)
    return 0


def _cmd_certify(args) -> int:
    m, _ = load_system(args.input)
    cert = moment.rf_certificate(
        m, rank_tol=args.rank_tol, probes=args.probes, seed=args.seed
    )
    agrees = moment.rf_equivalence_check(
        m, trials=20, tol=args.residual_tol, seed=args.seed, rank_tol=args.rank_tol
    )
    report = {
        "rf_certificate": _certificate_dict(cert),
        "equivalence_check": agrees,
        "provenance": _provenance(args, args.input),
    }
    _dump(report, args.out)
    return 0


def _cmd_gallery(args) -> int:
    if args.list:
        for name in gallery.GALLERY_NAMES:
            sys.stdout.write(name + "\n")
        return 0
    if args.name is None:
        raise ValidationError("provide a gallery name or --list")
    params = {}
    for item in args.params:
        if "=" not in item:
            raise ValidationError(f"gallery parameters must be key=value, got {item!r}")
        key, value = item.split("=", 1)
        try:
            params[key] = json.loads(value)
        except json.JSONDecodeError:
            raise ValidationError(f"cannot parse parameter value {value!r}") from None
    spec = gallery.GallerySpec(args.name, params)
    gallery.make(spec)  # validate before writing
    _dump({"gallery": {"name": spec.name, "params": spec.params}}, args.out)
    return 0


# ---------------------------------------------------------------------------
# entry point


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", default=None, help="output path (default: stdout)")
    common.add_argument("--seed", type=int, default=0, help="seed for probe sampling")
    common.add_argument(
        "--rank-tol",
        type=float,
        default=1e-10,
        help="relative singular-value threshold for rank decisions",
    )
    common.add_argument(
        "--probes", type=int, default=100, help="random probes for certificates"
    )
    common.add_argument(
        "--residual-tol",
        type=float,
        default=1e-8,
        help="residual below which a moment problem counts as solved",
    )
    common.add_argument(
        "--no-timestamp",
        action="store_true",
        help="omit the provenance timestamp (deterministic reports)",
    )

    parser = argparse.ArgumentParser(
        prog="riggedframes",
        description="Frame-theoretic analysis of sampled distribution systems",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="full classification report")
    p.add_argument("input", help="system file (JSON)")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("solve", parents=[common], help="solve a moment problem")
    p.add_argument("input", help="system file (JSON)")
    p.add_argument(
        "--moments",
        required=True,
        help="target values: a JSON array inline or a path to one",
    )
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("certify", parents=[common], help="lower-bound certificate")
    p.add_argument("input", help="system file (JSON)")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("gallery", parents=[common], help="materialize example systems")
    p.add_argument("name", nargs="?", help="gallery name")
    p.add_argument("params", nargs="*", help="key=value parameters")
    p.add_argument("--list", action="store_true", help="list gallery names")
    p.set_defaults(func=_cmd_gallery)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (NoConvergence, CertificateUnstable) as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return 3
    except (RiggedFrameError, ValueError, KeyError, OSError) as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

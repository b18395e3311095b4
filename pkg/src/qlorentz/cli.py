"""Command-line interface.

Subcommands:

  spin-entropy         entropy over (theta, Gamma), CSV theta,gamma,entropy
  massive-distinguish  boosted-spinor discrimination and fidelity vs Gamma
  photon-doppler       helicity-beam discrimination vs Omega and observer speed
  chsh                 CHSH value and concurrence vs boost speed
  causality            JSON reports for the worked measurement protocols, or
                       classification of a Kraus file

Common flags: --out PATH (default stdout), --format csv|json, --grid
coarse|default|fine, --config PATH (JSON; explicit flags win).  Exit codes:
0 success, 1 internal numerical failure, 2 bad input.

Outputs are deterministic: identical configurations give byte-identical
files.  Floats are printed with 17 significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__, causality, massive, sweeps
from .grids import GridSpec
from .results import SweepResult


class UsageError(Exception):
    pass


def _load_config(path: str | None) -> dict:
    if not path:
        return {}
    try:
        with open(path, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config file: {exc}") from exc
    if not isinstance(cfg, dict):
        raise UsageError("config file must hold a JSON object")
    return cfg


def _setting(args, cfg: dict, name: str, default):
    """Flag value if given, else config value, else default."""
    value = getattr(args, name.replace("-", "_"), None)
    if value is not None:
        return value
    return cfg.get(name, default)


def _float_list(value, name: str) -> list[float]:
    if isinstance(value, str):
        value = value.split(",")
    try:
        out = [float(v) for v in value]
    except (TypeError, ValueError) as exc:
        raise UsageError(f"{name} must be a list of numbers") from exc
    if not out:
        raise UsageError(f"{name} must be non-empty")
    return out


def _grid(args, cfg, pair: bool = False) -> GridSpec:
    name = str(_setting(args, cfg, "grid", "default")).lower()
    if name not in ("coarse", "default", "fine"):
        raise UsageError("--grid must be coarse, default or fine")
    return GridSpec.named(f"pair-{name}" if pair else name)


def _emit(result: SweepResult, args) -> None:
    text = result.to_json() if args.format == "json" else result.to_csv()
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_speeds(vs, lo=0.0) -> list[float]:
    for v in vs:
        if not lo <= v < 1.0:
            raise UsageError(f"speed {v} outside [{lo}, 1)")
    return vs


def cmd_spin_entropy(args) -> None:
    cfg = _load_config(args.config)
    dom = float(_setting(args, cfg, "delta-over-m", 0.02))
    vs = _check_speeds(_float_list(_setting(args, cfg, "v-list", [0.0, 0.3, 0.6, 0.9, 0.99]), "v-list"))
    thetas = _float_list(
        _setting(args, cfg, "theta-list", list(np.linspace(0.0, np.pi, 13))), "theta-list"
    )
    if dom <= 0:
        raise UsageError("delta-over-m must be positive")
    _emit(massive.entropy_surface(dom, vs, thetas, _grid(args, cfg)), args)


def cmd_massive_distinguish(args) -> None:
    cfg = _load_config(args.config)
    dom = float(_setting(args, cfg, "delta-over-m", 0.02))
    vs = _check_speeds(_float_list(_setting(args, cfg, "v-list", [0.3, 0.6, 0.9]), "v-list"))
    theta = float(_setting(args, cfg, "theta", 0.0))
    if dom <= 0:
        raise UsageError("delta-over-m must be positive")
    _emit(sweeps.massive_distinguish_sweep(dom, vs, theta, _grid(args, cfg)), args)


def cmd_photon_doppler(args) -> None:
    cfg = _load_config(args.config)
    omegas = _float_list(_setting(args, cfg, "omega-list", [0.02, 0.05]), "omega-list")
    vs = _float_list(_setting(args, cfg, "v-list", [0.0, 0.3, 0.6]), "v-list")
    for v in vs:
        if not -1.0 < v < 1.0:
            raise UsageError(f"speed {v} outside (-1, 1)")
    if any(o <= 0 for o in omegas):
        raise UsageError("omega values must be positive")
    _emit(sweeps.photon_doppler_sweep(omegas, vs, spec=_grid(args, cfg)), args)


def cmd_chsh(args) -> None:
    cfg = _load_config(args.config)
    vs = _check_speeds(_float_list(_setting(args, cfg, "v-list", [0.0, 0.3, 0.6, 0.9]), "v-list"))
    dom = float(_setting(args, cfg, "delta-over-m", 0.05))
    if dom <= 0:
        raise UsageError("delta-over-m must be positive")
    _emit(sweeps.chsh_sweep(vs, dom, _grid(args, cfg, pair=True)), args)


def _matrix_json(m) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


def _witness_json(witness) -> dict | None:
    if witness is None:
        return None
    return {
        "input_1": _matrix_json(witness.rho1),
        "input_2": _matrix_json(witness.rho2),
        "receiver_marginal_1": _matrix_json(witness.marginal1),
        "receiver_marginal_2": _matrix_json(witness.marginal2),
        "marginal_trace_distance": witness.distance,
        "discrimination_success": witness.success,
    }


def _semicausal_report(op) -> dict:
    ok_ba, wit_ba = causality.semicausal_check(op, "B_to_A")
    ok_ab, wit_ab = causality.semicausal_check(op, "A_to_B")
    verdict = {(True, True): "both", (True, False): "B_to_A", (False, True): "A_to_B",
               (False, False): "none"}[(ok_ba, ok_ab)]
    return {
        "semicausal": verdict,
        "causal": ok_ba and ok_ab,
        "witness_B_to_A": _witness_json(wit_ba),
        "witness_A_to_B": _witness_json(wit_ab),
    }


def cmd_causality(args) -> None:
    case = args.case
    if case == "incomplete-bell":
        demo = causality.incomplete_bell_demo()
        report = {
            "case": case,
            "outcome_probs_input_01": list(demo["probs_01"]),
            "outcome_probs_input_00": list(demo["probs_00"]),
            "alice_marginal_input_01": _matrix_json(demo["alice_marginal_01"]),
            "alice_marginal_input_00": _matrix_json(demo["alice_marginal_00"]),
            "discrimination_success": demo["discrimination_success"],
        }
        report.update(_semicausal_report(causality.incomplete_bell_operation()))
    elif case == "one-way":
        rng = np.random.default_rng(20240601)
        worst = 0.0
        for _ in range(100):
            z = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
            rho = z @ z.conj().T
            rho /= np.trace(rho).real
            stats = causality.one_way_pvm_protocol(rho)
            direct = np.array(
                [float(np.trace(e @ rho).real) for e in causality.one_way_pvm_elements()]
            )
            worst = max(worst, float(np.max(np.abs(stats.probs - direct))))
        eigenstate = causality.one_way_pvm_elements()[2]
        report = {
            "case": case,
            "protocol_vs_direct_max_deviation": worst,
            "eigenstate_outcome_probs": list(causality.one_way_pvm_protocol(eigenstate).probs),
        }
    elif case == "verification":
        certainties = []
        for mu, e in enumerate(causality.one_way_pvm_elements()):
            stats = causality.verification_measurement_sim(e)
            certainties.append(float(stats.probs[mu]))
        report = {"case": case, "certainty_per_projector": certainties}
    elif case == "check":
        if not args.kraus_file:
            raise UsageError("causality check requires a Kraus JSON file argument")
        try:
            with open(args.kraus_file, encoding="utf-8") as fh:
                payload = json.load(fh)
            op = causality.kraus_from_json(payload)
        except (OSError, json.JSONDecodeError, ValueError) as exc:
            raise UsageError(f"cannot load Kraus file: {exc}") from exc
        report = {"case": case, "file": args.kraus_file, "dims": list(op.dims)}
        report.update(_semicausal_report(op))
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown case {case!r}")

    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlorentz",
        description="Quantum Lorentz transformations of spin and polarization qubits",
    )
    parser.add_argument("--version", action="version", version=f"qlorentz {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, pair_grid=False):
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--grid", type=str.lower, choices=("coarse", "default", "fine"),
                       default=None, help="grid resolution preset (default: default)")
        p.add_argument("--config", help="JSON config file; explicit flags override it")

    p = sub.add_parser("spin-entropy", help="spin entropy over (theta, Gamma)")
    common(p)
    p.add_argument("--delta-over-m", type=float, default=None,
                   help="momentum spread over mass (default: 0.02)")
    p.add_argument("--v-list", default=None,
                   help="comma-separated speeds in [0, 1) (default: 0,0.3,0.6,0.9,0.99)")
    p.add_argument("--theta-list", default=None,
                   help="comma-separated spinor angles (default: 13 points on [0, pi])")
    p.set_defaults(func=cmd_spin_entropy)

    p = sub.add_parser("massive-distinguish", help="boosted-spinor discrimination vs Gamma")
    common(p)
    p.add_argument("--delta-over-m", type=float, default=None,
                   help="momentum spread over mass (default: 0.02)")
    p.add_argument("--v-list", default=None,
                   help="comma-separated speeds in [0, 1) (default: 0.3,0.6,0.9)")
    p.add_argument("--theta", type=float, default=None,
                   help="fidelity spinor angle (default: 0)")
    p.set_defaults(func=cmd_massive_distinguish)

    p = sub.add_parser("photon-doppler", help="photon beam discrimination under Doppler")
    common(p)
    p.add_argument("--omega-list", default=None,
                   help="comma-separated beam spreads (default: 0.02,0.05)")
    p.add_argument("--v-list", default=None,
                   help="observer speeds in (-1, 1) (default: 0,0.3,0.6)")
    p.set_defaults(func=cmd_photon_doppler)

    p = sub.add_parser("chsh", help="CHSH value and concurrence vs boost speed")
    common(p, pair_grid=True)
    p.add_argument("--v-list", default=None,
                   help="comma-separated speeds in [0, 1) (default: 0,0.3,0.6,0.9)")
    p.add_argument("--delta-over-m", type=float, default=None,
                   help="packet spread over mass for the concurrence column (default: 0.05)")
    p.set_defaults(func=cmd_chsh)

    p = sub.add_parser(
        "causality",
        help="measurement-causality reports (JSON)",
        description="Worked-protocol reports, or semicausality classification of a "
        "Kraus file with schema "
        '{"dims": [dA, dB], "outcomes": [[matrix, ...], ...]} '
        "where each matrix is nested rows of [re, im] pairs.",
    )
    p.add_argument("case", choices=("incomplete-bell", "one-way", "verification", "check"))
    p.add_argument("kraus_file", nargs="?", help="Kraus JSON file for 'check'")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_causality)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # numerical or internal failure
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front-end with JSON input and output.

Subcommands: generate, invert, basis, mpi, ep.  All files are UTF-8 JSON;
complex numbers serialize as two-element arrays [re, im] and matrices as
row-major nested arrays.  Angles in files are radians unless --degrees is
given, which converts every ingested angle (including --gamma).

Exit codes: 0 success, 2 input or schema error, 3 numerical-invariant
violation (a reported residual above --tol, default 1e-9).  Residuals in
the output are always recomputed from the emitted matrix data, never
cached from intermediate state.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from .applications import (
    CoherentAmplitudes,
    EPSpec,
    FreeParams,
    complete_basis,
    ep_build,
    ep_dof,
    mpi_propagate,
)
from .ck import build_su
from .complexmat import determinant, frobenius, identity, unitarity_residual
from .errors import DegenerateInputError, DomainError, ShapeError
from .essential import EssentialParams, GeneralUnitaryParams, essential_to_ck
from .hypersphere import PureState, angles_from_state

ROUNDTRIP_TOL = 1e-14
INGEST_NORM_TOL = 1e-9

_EXIT_OK = 0
_EXIT_INPUT = 2
_EXIT_NUMERIC = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = _EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _warn(message: str) -> None:
    print(f"warning: {message}", file=sys.stderr)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as err:
        raise CliError(f"cannot read {path}: {err}") from err
    except json.JSONDecodeError as err:
        raise CliError(f"{path} is not valid JSON: {err}") from err


def _num(value, label: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise CliError(f"{label} must be a number, got {value!r}")
    value = float(value)
    if not math.isfinite(value):
        raise CliError(f"{label} must be finite, got {value!r}")
    return value


def _complex_in(value, label: str) -> complex:
    if not (isinstance(value, list) and len(value) == 2):
        raise CliError(f"{label} must be a two-element [re, im] array, got {value!r}")
    return complex(_num(value[0], f"{label}[0]"), _num(value[1], f"{label}[1]"))


def _complex_out(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def _vector_out(v: np.ndarray) -> list:
    return [_complex_out(z) for z in v]


def _matrix_out(m: np.ndarray) -> list:
    return [_vector_out(row) for row in m]


def _check_keys(obj: dict, allowed: set[str], label: str) -> None:
    unknown = set(obj) - allowed
    if unknown:
        raise CliError(f"{label} has unknown keys {sorted(unknown)}; allowed: {sorted(allowed)}")


def _angle(value, label: str, degrees: bool) -> float:
    v = _num(value, label)
    return math.radians(v) if degrees else v


def _pair_key(key: str, label: str) -> tuple[int, int]:
    parts = key.split(",")
    try:
        j, k = (int(p.strip()) for p in parts)
    except ValueError:
        raise CliError(f'{label} key {key!r} is not of the form "j,k"') from None
    return j, k


def _angle_map(obj, label: str, degrees: bool) -> dict[tuple[int, int], float]:
    if not isinstance(obj, dict):
        raise CliError(f"{label} must be an object of 'j,k' keys")
    return {
        _pair_key(key, label): _angle(value, f"{label}[{key}]", degrees)
        for key, value in obj.items()
    }


def _chi_map(obj, label: str, degrees: bool) -> dict[int, float]:
    if not isinstance(obj, dict):
        raise CliError(f"{label} must be an object of 'j' keys")
    out = {}
    for key, value in obj.items():
        try:
            j = int(str(key).strip())
        except ValueError:
            raise CliError(f"{label} key {key!r} is not an integer row index") from None
        out[j] = _angle(value, f"{label}[{key}]", degrees)
    return out


def _parse_params(obj, degrees: bool, label: str, allow_gamma: bool = True):
    """Returns (EssentialParams, gamma-from-file-or-None)."""
    if not isinstance(obj, dict):
        raise CliError(f"{label} must be a JSON object")
    allowed = {"n", "thetas", "phis", "chis"} | ({"gamma"} if allow_gamma else set())
    _check_keys(obj, allowed, label)
    n = obj.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise CliError(f"{label}.n must be a positive integer, got {n!r}")
    try:
        params = EssentialParams(
            n,
            _angle_map(obj.get("thetas", {}), f"{label}.thetas", degrees),
            _angle_map(obj.get("phis", {}), f"{label}.phis", degrees),
            _chi_map(obj.get("chis", {}), f"{label}.chis", degrees),
        )
    except (DomainError, ValueError) as err:
        raise CliError(f"{label}: {err}") from err
    gamma = obj.get("gamma")
    if gamma is not None:
        gamma = _angle(gamma, f"{label}.gamma", degrees)
    return params, gamma


def _parse_amplitudes(obj, label: str) -> np.ndarray:
    if not (isinstance(obj, list) and obj):
        raise CliError(f"{label} must be a non-empty array of [re, im] pairs")
    return np.array(
        [_complex_in(entry, f"{label}[{i}]") for i, entry in enumerate(obj)],
        dtype=np.complex128,
    )


def _parse_state(obj, label: str) -> PureState:
    amps = _parse_amplitudes(obj, label)
    norm = float(np.linalg.norm(amps))
    if norm == 0.0:
        raise CliError(f"{label} is the zero vector")
    if abs(norm - 1.0) > INGEST_NORM_TOL:
        raise CliError(
            f"{label} norm deviates from 1 by {abs(norm - 1.0):.3e} "
            f"(ingest tolerance {INGEST_NORM_TOL:.0e})"
        )
    if abs(norm - 1.0) > 1e-12:
        _warn(f"{label}: renormalizing, |norm - 1| = {abs(norm - 1.0):.3e}")
    return PureState(amps.shape[0], amps / norm)


def _parse_free(obj, n: int, degrees: bool, label: str) -> FreeParams:
    if not isinstance(obj, dict):
        raise CliError(f"{label} must be a JSON object")
    _check_keys(obj, {"n", "thetas", "phis", "chis"}, label)
    file_n = obj.get("n")
    if file_n is not None and file_n != n:
        raise CliError(f"{label}.n is {file_n!r} but the state has dimension {n}")
    try:
        return FreeParams(
            n,
            _angle_map(obj.get("thetas", {}), f"{label}.thetas", degrees),
            _angle_map(obj.get("phis", {}), f"{label}.phis", degrees),
            _chi_map(obj.get("chis", {}), f"{label}.chis", degrees),
        )
    except (DomainError, ValueError) as err:
        raise CliError(f"{label}: {err}") from err


def _parse_ep(obj, degrees: bool, label: str) -> EPSpec:
    if not isinstance(obj, dict):
        raise CliError(f"{label} must be a JSON object")
    _check_keys(obj, {"gamma", "parties"}, label)
    parties = obj.get("parties")
    if not (isinstance(parties, list) and parties):
        raise CliError(f"{label}.parties must be a non-empty array")
    parsed = [
        _parse_params(p, degrees, f"{label}.parties[{i}]", allow_gamma=False)[0]
        for i, p in enumerate(parties)
    ]
    gamma = _angle(obj.get("gamma", 0.0), f"{label}.gamma", degrees)
    try:
        return EPSpec(tuple(parsed), gamma)
    except DomainError as err:
        raise CliError(f"{label}: {err}") from err


def _resolve_gamma(args, gamma_file) -> float:
    if not args.general:
        return 0.0
    if args.gamma is not None:
        return _angle(args.gamma, "--gamma", args.degrees)
    return gamma_file if gamma_file is not None else 0.0


def _emit(result: dict) -> None:
    print(json.dumps(result))


def _gate(residual: float, tol: float) -> int:
    return _EXIT_NUMERIC if residual > tol else _EXIT_OK


def _batch_paths(directory: str) -> list[Path]:
    root = Path(directory)
    if not root.is_dir():
        raise CliError(f"--batch expects a directory, got {directory}")
    paths = sorted(root.glob("*.json"))
    if not paths:
        raise CliError(f"no .json files in {directory}")
    return paths


def _run_maybe_batch(args, target: str, process_one) -> int:
    """Run process_one(path) -> (result, code) on one file, or on every
    .json file of a directory with --batch (one output line per file)."""
    if not getattr(args, "batch", False):
        result, code = process_one(target)
        _emit(result)
        return code
    statuses = []
    for path in _batch_paths(target):
        try:
            result, code = process_one(str(path))
            _emit({"file": path.name, **result})
            statuses.append(code)
        except CliError as err:
            print(f"error [{path.name}]: {err}", file=sys.stderr)
            statuses.append(err.code)
    if _EXIT_INPUT in statuses:
        return _EXIT_INPUT
    if _EXIT_NUMERIC in statuses:
        return _EXIT_NUMERIC
    return _EXIT_OK


# -- generate ---------------------------------------------------------------


def _generate_one(path: str, args):
    params, gamma_file = _parse_params(_load_json(path), args.degrees, path)
    if args.general:
        try:
            matrix = np.exp(1j * _resolve_gamma(args, gamma_file)) * build_su(
                essential_to_ck(params)
            )
        except DomainError as err:
            raise CliError(str(err)) from err
    else:
        matrix = build_su(essential_to_ck(params))
    residual = unitarity_residual(matrix)
    result = {
        "n": params.n,
        "matrix": _matrix_out(matrix),
        "det": _complex_out(determinant(matrix)),
        "unitarity_residual": residual,
    }
    return result, _gate(residual, args.tol)


def _check_result_file(path: str, tol: float) -> int:
    obj = _load_json(path)
    if not isinstance(obj, dict):
        raise CliError(f"{path} must be a JSON object")
    for key in ("n", "matrix", "det", "unitarity_residual"):
        if key not in obj:
            raise CliError(f"{path} is missing key {key!r}")
    rows = obj["matrix"]
    if not (isinstance(rows, list) and rows):
        raise CliError(f"{path}.matrix must be a non-empty nested array")
    matrix = np.array(
        [
            [_complex_in(z, f"matrix[{i}][{j}]") for j, z in enumerate(row)]
            for i, row in enumerate(rows)
        ],
        dtype=np.complex128,
    )
    stored_det = _complex_in(obj["det"], "det")
    stored_residual = _num(obj["unitarity_residual"], "unitarity_residual")
    residual = unitarity_residual(matrix)
    det = determinant(matrix)
    drift = max(abs(residual - stored_residual), abs(det - stored_det))
    _emit(
        {
            "checked": path,
            "n": obj["n"],
            "unitarity_residual": residual,
            "det": _complex_out(det),
            "roundtrip_drift": drift,
        }
    )
    if drift > ROUNDTRIP_TOL:
        return _EXIT_NUMERIC
    return _gate(residual, tol)


def cmd_generate(args) -> int:
    if args.check is not None:
        if args.batch:
            raise CliError("--check cannot be combined with --batch")
        return _check_result_file(args.check, args.tol)
    if args.params is None:
        raise CliError("a parameter file is required unless --check is given")
    return _run_maybe_batch(args, args.params, lambda p: _generate_one(p, args))


# -- invert -----------------------------------------------------------------


def _invert_one(path: str):
    state = _parse_state(_load_json(path), path)
    angles = angles_from_state(state)
    result = {
        "n": state.n,
        "thetas": [float(t) for t in angles.thetas],
        "phis": [float(p) for p in angles.phis],
    }
    return result, _EXIT_OK


def cmd_invert(args) -> int:
    return _run_maybe_batch(args, args.state, _invert_one)


# -- basis ------------------------------------------------------------------


def _basis_one(path: str, args):
    state = _parse_state(_load_json(path), path)
    n = state.n
    if n < 2:
        raise CliError("basis completion needs dimension >= 2")
    if args.free is not None and args.seed is not None:
        raise CliError("give either a free-parameter file or --seed, not both")
    if args.free is not None:
        free = _parse_free(_load_json(args.free), n, args.degrees, args.free)
    elif args.seed is not None:
        free = FreeParams.random(n, np.random.default_rng(args.seed))
    else:
        free = FreeParams.zeros(n)
    try:
        gen = complete_basis(state, free)
    except DomainError as err:
        raise CliError(str(err)) from err
    gram_residual = frobenius(gen.matrix @ gen.matrix.conj().T - identity(n))
    result = {
        "n": n,
        "matrix": _matrix_out(gen.matrix),
        "basis": [_vector_out(ket.amplitudes) for ket in gen.basis],
        "gram_residual": gram_residual,
    }
    return result, _gate(gram_residual, args.tol)


def cmd_basis(args) -> int:
    return _run_maybe_batch(args, args.state, lambda p: _basis_one(p, args))


# -- mpi --------------------------------------------------------------------


def _mpi_one(amp_path: str, args, u_params: GeneralUnitaryParams):
    alphas = CoherentAmplitudes(_parse_amplitudes(_load_json(amp_path), amp_path))
    try:
        out = mpi_propagate(u_params, alphas)
    except ShapeError as err:
        raise CliError(str(err)) from err
    residual = abs(out.total_power() - alphas.total_power())
    result = {
        "n": out.n,
        "alphas": _vector_out(out.alphas),
        "conservation_residual": residual,
    }
    return result, _gate(residual, args.tol)


def cmd_mpi(args) -> int:
    params, gamma_file = _parse_params(_load_json(args.params), args.degrees, args.params)
    try:
        u_params = GeneralUnitaryParams(params, _resolve_gamma(args, gamma_file))
    except DomainError as err:
        raise CliError(str(err)) from err
    return _run_maybe_batch(args, args.amplitudes, lambda p: _mpi_one(p, args, u_params))


# -- ep ---------------------------------------------------------------------


def _ep_one(path: str, args):
    spec = _parse_ep(_load_json(path), args.degrees, path)
    matrix = ep_build(spec)
    residual = unitarity_residual(matrix)
    result = {
        "dims": list(spec.dims),
        "dof": ep_dof(spec.dims),
        "matrix": _matrix_out(matrix),
        "unitarity_residual": residual,
    }
    return result, _gate(residual, args.tol)


def cmd_ep(args) -> int:
    return _run_maybe_batch(args, args.spec, lambda p: _ep_one(p, args))


# -- wiring -----------------------------------------------------------------


def _add_tol(parser) -> None:
    parser.add_argument(
        "--tol",
        type=float,
        default=1e-9,
        help="residual threshold for exit code 3 (default 1e-9)",
    )


def _add_degrees(parser) -> None:
    parser.add_argument(
        "--degrees",
        action="store_true",
        help="interpret every ingested angle as degrees",
    )


def _add_batch(parser, what: str) -> None:
    parser.add_argument(
        "--batch",
        action="store_true",
        help=f"treat {what} as a directory and process every .json file in it",
    )


def _add_general(parser) -> None:
    parser.add_argument(
        "--general",
        action="store_true",
        help="apply a global phase (from --gamma or the file's gamma field)",
    )
    parser.add_argument(
        "--gamma",
        type=float,
        default=None,
        help="global phase angle; implies nothing unless --general is given",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ckunitary",
        description="build, invert, and apply unitary matrices from minimal angle files",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build a unitary matrix from an angle file")
    g.add_argument("params", nargs="?", help="angle file (directory with --batch)")
    _add_general(g)
    _add_degrees(g)
    _add_tol(g)
    g.add_argument(
        "--check",
        metavar="RESULT",
        help="verify a previously emitted result file instead of generating: "
        "recompute det and unitarity residual from its matrix and require "
        "agreement with the stored values within 1e-14",
    )
    _add_batch(g, "PARAMS")
    g.set_defaults(func=cmd_generate)

    i = sub.add_parser("invert", help="recover superposition and phase angles of a state")
    i.add_argument("state", help="state file (directory with --batch)")
    _add_batch(i, "STATE")
    i.set_defaults(func=cmd_invert)

    b = sub.add_parser("basis", help="complete one state to an orthonormal basis")
    b.add_argument("state", help="state file (directory with --batch)")
    b.add_argument("free", nargs="?", help="optional free-parameter file")
    b.add_argument("--seed", type=int, default=None, help="draw random free parameters")
    _add_degrees(b)
    _add_tol(b)
    _add_batch(b, "STATE")
    b.set_defaults(func=cmd_basis)

    m = sub.add_parser("mpi", help="propagate coherent amplitudes through a multiport")
    m.add_argument("params", help="angle file for the multiport matrix")
    m.add_argument("amplitudes", help="input amplitude file (directory with --batch)")
    _add_general(m)
    _add_degrees(m)
    _add_tol(m)
    _add_batch(m, "AMPLITUDES")
    m.set_defaults(func=cmd_mpi)

    e = sub.add_parser("ep", help="assemble a multi-party tensor-product unitary")
    e.add_argument("spec", help="multi-party spec file (directory with --batch)")
    _add_degrees(e)
    _add_tol(e)
    _add_batch(e, "SPEC")
    e.set_defaults(func=cmd_ep)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as err:
        print(f"error: {err}", file=sys.stderr)
        return err.code
    except DegenerateInputError as err:
        print(f"error: {err}", file=sys.stderr)
        return _EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())

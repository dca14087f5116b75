"""Command-line interface exposing every module as a subcommand.

Every successful invocation prints one JSON document to stdout with a
top-level ``"schema": 1`` field, serialised with sorted keys so output is
byte-stable for fixed inputs (and fixed ``--seed`` where randomness
exists).  Complex numbers are ``[re, im]`` pairs; exact polynomials are
maps from quarter-unit exponent (string) to integer coefficient.

Exit codes: 0 success, 1 input error, 2 resource error, 3 invariant
violation (including numeric non-convergence).  Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import braids, fsymbols, fusion, knots, stringnet, toric, trace_estimation
from .errors import AnyonError, InputError, InvariantViolation, ResourceError

SCHEMA = 1


@dataclass(frozen=True)
class CommandResult:
    """Outcome of one CLI invocation: exit status plus JSON payload."""

    status: int
    payload: dict | None = None
    error: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 1
        raise InputError(message)


def _parse_model(name_or_path: str) -> fusion.AnyonModel:
    if name_or_path.startswith("@"):
        with open(name_or_path[1:], encoding="utf-8") as fh:
            return fusion.AnyonModel.from_json(fh.read())
    return fusion.named_model(name_or_path)


def _parse_label(model: fusion.AnyonModel, token: str):
    for label in model.labels:
        if str(label) == token:
            return label
    raise InputError(f"label {token!r} not in model {list(model.labels)}")


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise InputError(f"cannot parse complex number from {text!r}")


def _cpx(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


_NAMED_GATES = {
    "identity": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "NOT": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.diag([1.0, -1.0]).astype(complex),
    "H": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2),
    "S": np.diag([1.0, 1.0j]),
    "T": np.diag([1.0, np.exp(1j * np.pi / 4)]),
}


def _parse_gate(text: str) -> np.ndarray:
    if text in _NAMED_GATES:
        return _NAMED_GATES[text]
    try:
        rows = json.loads(text)
        return np.array(
            [[complex(re, im) for re, im in row] for row in rows], dtype=complex
        )
    except (ValueError, TypeError) as exc:
        raise InputError(
            f"target must be one of {sorted(_NAMED_GATES)} or a JSON matrix "
            "of [re, im] pairs"
        ) from exc


def _fr_data_for(model_name: str):
    if model_name == "fibonacci":
        return fsymbols.fibonacci_data()
    model = _parse_model(model_name)
    f, r = fsymbols.trivial_data(model)
    return model, f, r


def _rep_for(args) -> braids.BraidRep:
    if args.rep == "abelian":
        return braids.abelian_rep(args.phi)
    if args.rep == "tl":
        return braids.tl_b3_rep(_parse_complex(args.t))
    if args.rep == "fib":
        return braids.fib_qubit_rep()
    raise InputError(f"unknown representation {args.rep!r}")


def _build_parser() -> _Parser:
    p = _Parser(prog="anyons", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("fusion-dim", help="fusion-space dimension")
    sp.add_argument("--model", required=True)
    sp.add_argument("--inputs", required=True, help="comma-separated labels")
    sp.add_argument("--total", required=True)

    sp = sub.add_parser("fusion-trees", help="enumerate fusion trees")
    sp.add_argument("--model", required=True)
    sp.add_argument("--inputs", required=True)
    sp.add_argument("--total", required=True)
    sp.add_argument("--cap", type=int, default=fusion.TREE_CAP)

    sp = sub.add_parser("qdims", help="quantum dimensions")
    sp.add_argument("--model", required=True)
    sp.add_argument("--tolerance", type=float, default=fusion.QDIM_TOL)

    sp = sub.add_parser("entropy", help="total quantum dimension and entropy")
    sp.add_argument("--model", required=True)
    sp.add_argument("--tolerance", type=float, default=fusion.QDIM_TOL)
    sp.add_argument("--base", type=float, default=None,
                    help="logarithm base (natural log when omitted)")

    for name in ("pentagon", "hexagon"):
        sp = sub.add_parser(name, help=f"{name} residual of built-in F/R data")
        sp.add_argument("--model", default="fibonacci")
        sp.add_argument("--f-json", default=None,
                        help="serialized F table file (overrides --model data)")
        if name == "hexagon":
            sp.add_argument("--r-json", default=None,
                            help="serialized R table file")

    sp = sub.add_parser("braid-check", help="braid-relation residual of a rep")
    sp.add_argument("--rep", choices=("abelian", "tl", "fib"), required=True)
    sp.add_argument("--strands", type=int, default=3)
    sp.add_argument("--phi", type=float, default=np.pi,
                    help="abelian exchange phase")
    sp.add_argument("--t", default="1,0", help="Temperley-Lieb parameter re,im")
    sp.add_argument("--braid", default=None,
                    help="optional braid word to evaluate (round-trip check)")

    sp = sub.add_parser("compile", help="brute-force gate compilation")
    sp.add_argument("--target", required=True)
    sp.add_argument("--max-len", type=int, required=True)

    for name in ("jones", "bracket"):
        sp = sub.add_parser(name, help=f"exact {name} of a braid closure")
        sp.add_argument("--braid", required=True)
        sp.add_argument("--t", default=None,
                        help="also evaluate at this complex t (re,im)")
        sp.add_argument("--cap", type=int, default=knots.CROSSING_CAP)
        if name == "bracket":
            sp.add_argument("--method", choices=("statesum", "tl"),
                            default="statesum")

    sp = sub.add_parser("trace-est", help="Hadamard-test trace estimate")
    sp.add_argument("--braid", required=True)
    sp.add_argument("--rep", choices=("fib", "tl", "abelian"), default="fib")
    sp.add_argument("--t", default="1,0")
    sp.add_argument("--phi", type=float, default=np.pi)
    sp.add_argument("--shots", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)

    sp = sub.add_parser("toric", help="toric-code summary")
    sp.add_argument("--lx", type=int, required=True)
    sp.add_argument("--ly", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)

    sp = sub.add_parser("interferometer", help="charge/flux interferometer")
    sp.add_argument("--lx", type=int, required=True)
    sp.add_argument("--ly", type=int, required=True)
    sp.add_argument("--beta", type=float, required=True)
    sp.add_argument("--braid", choices=("yes", "no"), required=True)

    sub.add_parser("stringnet-check", help="Levin-Wen face-term residuals")

    sp = sub.add_parser("honeycomb", help="honeycomb-model phase and coupling")
    sp.add_argument("--jx", type=float, required=True)
    sp.add_argument("--jy", type=float, required=True)
    sp.add_argument("--jz", type=float, required=True)

    sp = sub.add_parser("cf-statistics", help="composite-fermion statistics")
    sp.add_argument("--j", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = sub.add_parser("su2k", help="SU(2)_k fusion admissibility")
    sp.add_argument("--j1", required=True)
    sp.add_argument("--j2", required=True)
    sp.add_argument("--j", required=True)
    sp.add_argument("--k", type=int, required=True)

    return p


# Which package operations each subcommand reaches (directly or through the
# functions it calls); the coverage test checks this map spans the public API.
OPERATION_COVERAGE = {
    "fusion-dim": ["fusion_space_dim", "fuse"],
    "fusion-trees": ["enumerate_fusion_trees", "fuse"],
    "qdims": ["quantum_dimensions"],
    "entropy": ["total_dimension_entropy", "quantum_dimensions"],
    "pentagon": ["fibonacci_data", "pentagon_residual", "f_unitarity_residual"],
    "hexagon": ["fibonacci_data", "hexagon_residual"],
    "braid-check": [
        "abelian_rep", "tl_b3_rep", "fib_qubit_rep", "relation_residual",
        "parse_braid", "evaluate",
    ],
    "compile": ["compile_gate"],
    "jones": ["parse_braid", "closure", "writhe", "jones", "kauffman_bracket"],
    "bracket": ["parse_braid", "kauffman_bracket", "bracket_tl_b3"],
    "trace-est": ["exact_normalized_trace", "hadamard_test_trace", "evaluate"],
    "toric": [
        "build_stabilizers", "commutation_phase", "ground_space_dim",
        "dyon_braiding_phase", "string_operator", "syndrome", "correct",
        "homology_class",
    ],
    "interferometer": ["ground_state", "interferometer_run"],
    "stringnet-check": ["vertex_projector", "face_operator", "face_term_checks"],
    "honeycomb": ["honeycomb_phase", "honeycomb_effective_coupling"],
    "cf-statistics": ["composite_fermion_statistics"],
    "su2k": ["su2k_admissible"],
}


def _cmd_fusion_dim(args) -> dict:
    model = _parse_model(args.model)
    inputs = [_parse_label(model, tok) for tok in args.inputs.split(",")]
    total = _parse_label(model, args.total)
    return {"dim": fusion.fusion_space_dim(model, inputs, total)}


def _cmd_fusion_trees(args) -> dict:
    model = _parse_model(args.model)
    inputs = [_parse_label(model, tok) for tok in args.inputs.split(",")]
    total = _parse_label(model, args.total)
    trees = fusion.enumerate_fusion_trees(model, inputs, total, cap=args.cap)
    return {
        "count": len(trees),
        "trees": [[str(x) for x in t.internal] for t in trees],
    }


def _cmd_qdims(args) -> dict:
    model = _parse_model(args.model)
    dims = fusion.quantum_dimensions(model, tol=args.tolerance)
    return {"dims": {str(k): v for k, v in dims.items()}}


def _cmd_entropy(args) -> dict:
    model = _parse_model(args.model)
    D, S = fusion.total_dimension_entropy(model, log_base=args.base)
    return {"D": D, "S": S, "log_base": args.base if args.base else "natural"}


def _cmd_pentagon(args) -> dict:
    model, f, _ = _fr_data_for(args.model)
    if args.f_json:
        with open(args.f_json, encoding="utf-8") as fh:
            f = fsymbols.FSymbolTable.from_json(fh.read())
        model = f.model
    return {
        "model": args.model if not args.f_json else "from file",
        "residual": fsymbols.pentagon_residual(model, f),
        "unitarity_residual": fsymbols.f_unitarity_residual(model, f),
    }


def _cmd_hexagon(args) -> dict:
    model, f, r = _fr_data_for(args.model)
    if args.f_json:
        with open(args.f_json, encoding="utf-8") as fh:
            f = fsymbols.FSymbolTable.from_json(fh.read())
        model = f.model
    if args.r_json:
        with open(args.r_json, encoding="utf-8") as fh:
            r = fsymbols.RSymbolTable.from_json(fh.read())
    return {
        "model": args.model if not args.f_json else "from file",
        "residual": fsymbols.hexagon_residual(model, f, r),
    }


def _cmd_braid_check(args) -> dict:
    rep = _rep_for(args)
    out = {
        "rep": args.rep,
        "strands": args.strands,
        "residual": braids.relation_residual(rep, args.strands),
        "unitary": rep.unitary,
    }
    if args.braid is not None:
        word = braids.parse_braid(args.braid)
        matrix = braids.evaluate(rep, word)
        out["word"] = braids.format_braid(word)
        out["matrix"] = [[_cpx(z) for z in row] for row in matrix]
    return out


def _cmd_compile(args) -> dict:
    target = _parse_gate(args.target)
    word, dist = braids.compile_gate(target, args.max_len)
    return {"word": braids.format_braid(word), "distance": dist,
            "length": len(word)}


def _cmd_jones(args) -> dict:
    word = braids.parse_braid(args.braid)
    poly = knots.jones(word, cap=args.cap)
    out = {"poly": poly.to_json_dict(), "writhe": knots.writhe(word)}
    if args.t is not None:
        out["value"] = _cpx(poly.evaluate(_parse_complex(args.t)))
    return out


def _cmd_bracket(args) -> dict:
    word = braids.parse_braid(args.braid)
    if args.method == "tl":
        if args.t is None:
            raise InputError("--method tl needs --t")
        value = knots.bracket_tl_b3(word, _parse_complex(args.t))
        return {"method": "tl", "value": _cpx(value)}
    poly = knots.kauffman_bracket(word, cap=args.cap)
    out = {"method": "statesum", "poly": poly.to_json_dict()}
    if args.t is not None:
        out["value"] = _cpx(poly.evaluate(_parse_complex(args.t)))
    return out


def _cmd_trace_est(args) -> dict:
    word = braids.parse_braid(args.braid)
    rep = _rep_for(args)
    matrices = [rep.generator(g) for g in word.letters]
    if not matrices:
        matrices = [rep.identity()]
    exact = trace_estimation.exact_normalized_trace(matrices)
    est = trace_estimation.hadamard_test_trace(matrices, args.shots, args.seed)
    return {
        "re": est.value.real,
        "im": est.value.imag,
        "stderr_re": est.stderr_re,
        "stderr_im": est.stderr_im,
        "shots": est.shots,
        "seed": est.seed,
        "exact": _cpx(exact),
    }


def _cmd_toric(args) -> dict:
    lat = toric.TorusLattice(args.lx, args.ly)
    lat.validate()
    d = args.d
    stars, plaqs = toric.build_stabilizers(lat, d)
    ops = stars + plaqs
    commute = max(
        toric.commutation_phase(p, q) for p in ops for q in ops
    ) == 0
    prod_stars = stars[0]
    for s in stars[1:]:
        prod_stars = prod_stars * s
    prod_plaqs = plaqs[0]
    for q in plaqs[1:]:
        prod_plaqs = prod_plaqs * q
    table = [
        [
            [
                [toric.dyon_braiding_phase(d, (r, s), (rp, sp)) for sp in range(d)]
                for rp in range(d)
            ]
            for s in range(d)
        ]
        for r in range(d)
    ]
    demo = _correction_demo(lat, d)
    return {
        "lx": args.lx,
        "ly": args.ly,
        "d": d,
        "n_edges": lat.n_edges,
        "degeneracy": toric.ground_space_dim(lat, d),
        "stabilizers_commute": bool(commute),
        "product_of_stars_is_identity": prod_stars.is_identity(),
        "product_of_plaquettes_is_identity": prod_plaqs.is_identity(),
        "braiding_phase_exponents": table,
        "braiding_phase_units": "pi/d, mod 2d",
        "correction_demo": demo,
    }


def _correction_demo(lat: toric.TorusLattice, d: int) -> dict:
    """Charge-pair error, its syndrome, greedy correction, homology class."""
    path = toric.vertex_path_edges(lat, [(0, 0), (1, 0), (1, 1)])
    error = toric.string_operator(lat, path, "charge", 1, d)
    syn = toric.syndrome(lat, error)
    corr = toric.correct(lat, syn)
    composite = error * corr
    cls = toric.homology_class(lat, composite)
    return {
        "error_vertex_defects": {str(k): v for k, v in sorted(syn.vertex.items())},
        "corrected": toric.syndrome(lat, composite).is_empty(),
        "homology_class": {k: list(v) for k, v in cls.items()},
    }


def _cmd_interferometer(args) -> dict:
    lat = toric.TorusLattice(args.lx, args.ly)
    no_braid = toric.interferometer_run(lat, braid=False, beta=args.beta)
    braid_run = toric.interferometer_run(lat, braid=True, beta=args.beta)
    phi11 = toric.extract_mutual_statistics(braid_run, no_braid)
    requested = braid_run if args.braid == "yes" else no_braid
    return {
        "beta": args.beta,
        "expectation": requested,
        "no_braid_expectation": no_braid,
        "braid_expectation": braid_run,
        "phi_1_1": phi11,
    }


def _cmd_stringnet_check(args) -> dict:
    _, coeffs = stringnet.vertex_projector()
    checks = stringnet.face_term_checks()
    pauli = {
        "z" + "".join(str(q) for q in subset) if subset else "identity":
            [c.numerator, c.denominator]
        for subset, c in coeffs.items()
    }
    return {**checks, "vertex_pauli_coefficients": pauli}


def _cmd_honeycomb(args) -> dict:
    phase = toric.honeycomb_phase(args.jx, args.jy, args.jz)
    j_eff = (
        toric.honeycomb_effective_coupling(args.jx, args.jy, args.jz)
        if args.jz != 0
        else None
    )
    return {"phase": phase, "j_eff": j_eff}


def _cmd_cf_statistics(args) -> dict:
    value = fusion.composite_fermion_statistics(args.j, args.p)
    return {
        "value": [value.numerator, value.denominator],
        "as_float": float(value),
    }


def _cmd_su2k(args) -> dict:
    from fractions import Fraction

    def half(tok):
        return Fraction(tok)

    return {
        "admissible": fsymbols.su2k_admissible(
            half(args.j1), half(args.j2), half(args.j), args.k
        )
    }


_HANDLERS = {
    "fusion-dim": _cmd_fusion_dim,
    "fusion-trees": _cmd_fusion_trees,
    "qdims": _cmd_qdims,
    "entropy": _cmd_entropy,
    "pentagon": _cmd_pentagon,
    "hexagon": _cmd_hexagon,
    "braid-check": _cmd_braid_check,
    "compile": _cmd_compile,
    "jones": _cmd_jones,
    "bracket": _cmd_bracket,
    "trace-est": _cmd_trace_est,
    "toric": _cmd_toric,
    "interferometer": _cmd_interferometer,
    "stringnet-check": _cmd_stringnet_check,
    "honeycomb": _cmd_honeycomb,
    "cf-statistics": _cmd_cf_statistics,
    "su2k": _cmd_su2k,
}


def run(argv: list[str]) -> CommandResult:
    """Dispatch one invocation; never raises package errors."""
    try:
        args = _build_parser().parse_args(argv)
        payload = _HANDLERS[args.command](args)
        return CommandResult(0, {"schema": SCHEMA, **payload})
    except ResourceError as exc:
        return CommandResult(2, error=str(exc))
    except InvariantViolation as exc:
        return CommandResult(3, error=str(exc))
    except (InputError, AnyonError) as exc:
        return CommandResult(1, error=str(exc))
    except (OSError, ValueError) as exc:
        # unreadable files, malformed JSON documents, bad numeric literals
        return CommandResult(1, error=str(exc))


def render(result: CommandResult) -> str:
    if result.payload is None:
        return ""
    return json.dumps(result.payload, sort_keys=True)


def main(argv: list[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.payload is not None:
        print(render(result))
    if result.error is not None:
        print(f"error: {result.error}", file=sys.stderr)
    return result.status


if __name__ == "__main__":
    sys.exit(main())

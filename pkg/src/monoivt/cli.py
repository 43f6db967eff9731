"""Command-line front end.

Exit codes: 0 success or affirmative answer, 1 certified negative answer
(infeasible system, failed sandwich), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Callable, Sequence

from .certlp import FarkasCertificate, solve_nonneg
from .cones import range_orthant_rays
from .formats import FormatError, Report, format_entry, input_digest, read_matrix, read_vector
from .ivt import PreconditionViolated, SandwichFailure, sandwich_preimages
from .linalg import DimensionError, Matrix, Vector, qap_decompose
from .monotonicity import is_weakly_monotone, q_nonneg_shortcut

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2


class InputError(Exception):
    pass


def _cert_data(cert: FarkasCertificate) -> dict[str, Any]:
    if cert.is_primal:
        return {"kind": "primal", "x": list(cert.primal_x)}
    return {"kind": "dual", "y": list(cert.dual_y)}


def _mat(M: Matrix | None):
    return None if M is None else [list(r) for r in M.rows]


def _vec_str(v: Sequence) -> str:
    return "(" + ", ".join(format_entry(x) for x in v) + ")"


def _mat_lines(M: Sequence[Sequence], indent: str = "  ") -> list[str]:
    if not M:
        return [indent + "(empty)"]
    return [indent + "[" + "  ".join(format_entry(x) for x in row) + "]" for row in M]


def _cert_lines(cert: dict[str, Any]) -> list[str]:
    if cert["kind"] == "primal":
        return [f"certificate: primal x = {_vec_str(cert['x'])}"]
    return [f"certificate: dual y = {_vec_str(cert['y'])}  (y^T M >= 0, y^T b < 0)"]


# -- commands -------------------------------------------------------------
# Each returns (report, exit code, human-readable lines).


def cmd_analyze(args) -> tuple[Report, int, list[str]]:
    A = read_matrix(args.matrix)
    rep = is_weakly_monotone(A)
    cm = None
    if rep.counterexample_monotone is not None:
        x = rep.counterexample_monotone
        cm = {"x": list(x), "Ax": list(A @ x)}
    cw = None
    if rep.counterexample_weak is not None:
        cw = {"b": list(rep.counterexample_weak), "certificate": _cert_data(rep.counterexample_weak_certificate)}
    result = {
        "shape": [A.m, A.n],
        "rank": rep.rank,
        "full_rank": rep.full_rank,
        "monotone": rep.monotone,
        "weakly_monotone": rep.weakly_monotone,
        "method": rep.method.value,
        "left_inverse": _mat(rep.left_inverse),
        "right_inverse": _mat(rep.right_inverse),
        "counterexample_monotone": cm,
        "counterexample_weak": cw,
        "q_shortcut": q_nonneg_shortcut(A).value,
    }
    lines = [
        f"shape: {A.m}x{A.n}",
        f"rank: {rep.rank} ({'full' if rep.full_rank else 'deficient'})",
        f"monotone: {str(rep.monotone).lower()}",
        f"weakly monotone: {str(rep.weakly_monotone).lower()}",
        f"method: {rep.method.value}",
        f"Q shortcut: {result['q_shortcut']}",
    ]
    if rep.left_inverse is not None:
        lines += ["nonnegative left inverse B (B A = I):", *_mat_lines(result["left_inverse"])]
    if rep.right_inverse is not None:
        lines += ["nonnegative right inverse B (A B = I):", *_mat_lines(result["right_inverse"])]
    if cm is not None:
        lines.append(f"not monotone: x = {_vec_str(cm['x'])} has A x = {_vec_str(cm['Ax'])} >= 0")
    if cw is not None:
        lines.append(f"not weakly monotone: b = {_vec_str(cw['b'])} is in range(A), b >= 0, no preimage >= 0")
        lines += ["  " + s for s in _cert_lines(cw["certificate"])]
    return Report("analyze", input_digest(A), result), EXIT_OK, lines


def cmd_solve(args) -> tuple[Report, int, list[str]]:
    A = read_matrix(args.matrix)
    b = read_vector(args.vector)
    if A.m != b.dim:
        raise InputError(f"matrix has {A.m} rows but vector has {b.dim} entries")
    digest = input_digest(A, b)
    if args.nonneg:
        cert = solve_nonneg(A, b)
        data = _cert_data(cert)
        code = EXIT_OK if cert.is_primal else EXIT_NEGATIVE
        head = "feasible: x >= 0 with A x = b" if cert.is_primal else "infeasible: no x >= 0 with A x = b"
        return Report("solve", digest, {"mode": "nonneg", "certificate": data}), code, [head, *_cert_lines(data)]
    x = qap_decompose(A).particular_solution(b)
    result = {"mode": "any", "solvable": x is not None, "x": None if x is None else list(x)}
    if x is None:
        return Report("solve", digest, result), EXIT_NEGATIVE, ["no solution: b is not in the range of A"]
    return Report("solve", digest, result), EXIT_OK, [f"x = {_vec_str(x)}"]


def cmd_sandwich(args) -> tuple[Report, int, list[str]]:
    A = read_matrix(args.matrix)
    ys = [read_vector(p) for p in (args.y0, args.y, args.y1)]
    for v in ys:
        if v.dim != A.m:
            raise InputError(f"matrix has {A.m} rows but a vector has {v.dim} entries")
    try:
        out = sandwich_preimages(A, *ys)
    except PreconditionViolated as exc:
        raise InputError(str(exc)) from None
    digest = input_digest(A, *ys)
    if isinstance(out, SandwichFailure):
        data = _cert_data(out.certificate)
        result = {"status": "failure", "step": out.step, "certificate": data}
        lines = [f"no ordered preimages: step {out.step} has no nonnegative solution", *_cert_lines(data)]
        return Report("sandwich", digest, result), EXIT_NEGATIVE, lines
    result = {"status": "ok", "x0": list(out.x0), "x": list(out.x), "x1": list(out.x1)}
    lines = [f"x0 = {_vec_str(out.x0)}", f"x  = {_vec_str(out.x)}", f"x1 = {_vec_str(out.x1)}"]
    return Report("sandwich", digest, result), EXIT_OK, lines


def cmd_decompose(args) -> tuple[Report, int, list[str]]:
    A = read_matrix(args.matrix)
    d = qap_decompose(A)
    result = {
        "rank": d.rank,
        "q": _mat(d.q),
        "p": _mat(d.p),
        "s": _mat(d.s),
        "s_shape": [d.s.m, d.s.n],
        "columns": list(d.columns),
        "reduced": _mat(d.reduced_form()),
    }
    lines = [f"rank k = {d.rank}", "Q:", *_mat_lines(result["q"]), "P:", *_mat_lines(result["p"])]
    lines += [f"S ({d.s.m}x{d.s.n}):", *_mat_lines(result["s"]), "Q A P:", *_mat_lines(result["reduced"])]
    return Report("decompose", input_digest(A), result), EXIT_OK, lines


def cmd_rays(args) -> tuple[Report, int, list[str]]:
    A = read_matrix(args.matrix)
    rays = range_orthant_rays(A)
    result = {"ambient_dim": rays.ambient_dim, "rays": [list(r) for r in rays]}
    lines = [f"{len(rays)} extreme ray(s) of range(A) ∩ orthant"]
    lines += ["  " + _vec_str(r) for r in rays]
    return Report("rays", input_digest(A), result), EXIT_OK, lines


COMMANDS: dict[str, Callable] = {
    "analyze": cmd_analyze,
    "solve": cmd_solve,
    "sandwich": cmd_sandwich,
    "decompose": cmd_decompose,
    "rays": cmd_rays,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monoivt",
        description="Monotone / weakly monotone matrices and ordered preimages, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_: str, *positionals: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        for pos in positionals:
            p.add_argument(pos)
        p.add_argument("--json", action="store_true", help="print a JSON report")
        return p

    add("analyze", "decide monotone and weakly monotone", "matrix")
    solve = add("solve", "solve A x = b", "matrix", "vector")
    solve.add_argument("--nonneg", action="store_true", help="require x >= 0 and return a Farkas certificate")
    add("sandwich", "find x0 <= x <= x1 mapping onto y0 <= y <= y1", "matrix", "y0", "y", "y1")
    add("decompose", "print Q, P, S with Q A P = [I S; 0 0]", "matrix")
    add("rays", "extreme rays of range(A) ∩ orthant", "matrix")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, code, lines = COMMANDS[args.command](args)
    except (FormatError, DimensionError, InputError) as exc:
        print(f"monoivt {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if args.json:
        sys.stdout.write(report.to_json())
    else:
        print("\n".join(lines))
    return code


if __name__ == "__main__":
    sys.exit(main())

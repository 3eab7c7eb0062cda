"""Command-line entry point.

Exit codes: 0 success, 1 validation error, 2 computational failure.
All randomness sits behind explicit --seed flags; floats print with
round-trip-exact precision.
"""

from __future__ import annotations

import argparse
import math
import sys

from motzkinlab import groundstate, hamiltonian, schmidt, sweep


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; the CLI contract says 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    p = _Parser(prog="motzkinlab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    ent = sub.add_parser("entropy", help="half-chain entanglement entropy S_n")
    ent.add_argument("--s", type=int, required=True)
    ent.add_argument("--t", type=float, required=True)
    ent.add_argument("--n", type=int, required=True)
    ent.add_argument("--base2", action="store_true", help="report in bits")

    tab = sub.add_parser("schmidt-table", help="print m, logM, p rows as CSV")
    tab.add_argument("--s", type=int, required=True)
    tab.add_argument("--t", type=float, required=True)
    tab.add_argument("--n", type=int, required=True)

    ver = sub.add_parser("verify", help="frustration-freeness / uniqueness check")
    ver.add_argument("--two-n", type=int, required=True)
    ver.add_argument("--s", type=int, default=1)
    ver.add_argument("--t", type=float)
    ver.add_argument("--angles-seed", type=int)
    ver.add_argument("--theta-first", type=float, default=math.pi / 4)
    ver.add_argument("--residual-tol", type=float, default=1e-10)
    ver.add_argument("--zero-tol", type=float, default=1e-9)

    ang = sub.add_parser("angles", help="print a tuned angle set")
    ang.add_argument("--two-n", type=int, required=True)
    ang.add_argument("--seed", type=int, required=True)
    ang.add_argument("--theta-first", type=float, default=math.pi / 4)

    swp = sub.add_parser("sweep", help="run a parameter sweep plan")
    swp.add_argument("--plan", required=True)
    swp.add_argument("--out", required=True)
    swp.add_argument("--jobs", type=int)

    fit = sub.add_parser("fit", help="least-squares scaling fit of a sweep CSV")
    fit.add_argument("--in", dest="infile", required=True)
    fit.add_argument("--model", required=True, choices=sweep.FIT_MODELS)
    fit.add_argument("--s", type=int)
    fit.add_argument("--t", type=float)
    fit.add_argument("--n-min", type=int)
    fit.add_argument("--n-max", type=int)

    dmp = sub.add_parser("dump-gs", help="dump the ground-state ensemble")
    dmp.add_argument("--two-n", type=int, required=True)
    dmp.add_argument("--s", type=int, required=True)
    dmp.add_argument("--t", type=float, required=True)
    dmp.add_argument("--out", required=True)
    return p


def _cmd_entropy(args) -> int:
    if args.n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return 1
    prof = schmidt.profile(args.n, args.s, args.t)
    value = prof.entropy / math.log(2) if args.base2 else prof.entropy
    print(repr(value))
    return 0


def _cmd_schmidt_table(args) -> int:
    if args.n < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return 1
    sys.stdout.write(schmidt.profile_csv(schmidt.profile(args.n, args.s, args.t)))
    return 0


def _verify_spec(args) -> hamiltonian.ChainSpec:
    if (args.t is None) == (args.angles_seed is None):
        raise SystemExit(_validation("give exactly one of --t or --angles-seed"))
    if args.t is not None:
        return hamiltonian.uniform_spec(args.two_n, args.s, args.t)
    if args.s != 1:
        raise SystemExit(_validation("angle mode needs --s 1"))
    return hamiltonian.generate_tuned_angles(args.two_n, args.angles_seed, args.theta_first)


def _validation(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 1


def _cmd_verify(args) -> int:
    spec = _verify_spec(args)
    ens = groundstate.build_ground_state(spec)
    H = hamiltonian.build_hamiltonian(spec)
    res = hamiltonian.residual(spec, ens.as_vector(), H=H)
    report = hamiltonian.diagonalize_low(spec, k=2, zero_tol=args.zero_tol)
    res_ok = res < args.residual_tol
    null_ok = report.null_dim == 1
    print(
        f"residual={res!r} ({'<' if res_ok else '>='}{args.residual_tol:g}) "
        f"{'PASS' if res_ok else 'FAIL'}; "
        f"null_dim={report.null_dim} {'PASS' if null_ok else 'FAIL'}; "
        f"e0={report.lowest_eigenvalues[0]!r} e1={report.lowest_eigenvalues[1]!r}"
    )
    return 0 if (res_ok and null_ok) else 2


def _cmd_angles(args) -> int:
    spec = hamiltonian.generate_tuned_angles(args.two_n, args.seed, args.theta_first)
    ang = spec.deformation
    print("bond,phi,psi,theta")
    for b in range(len(ang.phi)):
        print(f"{b},{float(ang.phi[b])!r},{float(ang.psi[b])!r},{float(ang.theta[b])!r}")
    return 0


def _cmd_sweep(args) -> int:
    plan = sweep.load_plan(args.plan)
    if args.jobs is not None:
        plan = sweep.SweepPlan(plan.grid, plan.n_samples, plan.out, args.jobs)
    sweep.run_sweep(plan, out=args.out)
    return 0


def _cmd_fit(args) -> int:
    rows = sweep.read_sweep_rows(
        args.infile, s=args.s, t=args.t, n_min=args.n_min, n_max=args.n_max
    )
    result = sweep.fit_scaling(rows, args.model)
    print(
        f"model={result.model} coefficient={result.coefficient!r} "
        f"residual={result.residual!r} n_range={result.n_range[0]}..{result.n_range[1]}"
    )
    return 0


def _cmd_dump_gs(args) -> int:
    spec = hamiltonian.uniform_spec(args.two_n, args.s, args.t)
    ens = groundstate.build_ground_state(spec)
    with open(args.out, "w") as fh:
        ens.dump(fh)
    return 0


_COMMANDS = {
    "entropy": _cmd_entropy,
    "schmidt-table": _cmd_schmidt_table,
    "verify": _cmd_verify,
    "angles": _cmd_angles,
    "sweep": _cmd_sweep,
    "fit": _cmd_fit,
    "dump-gs": _cmd_dump_gs,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # solver failures and friends
        print(f"computational failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())

"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (bad word, bad flags, invalid
presentation), 2 when a super summit set exceeds its cap.
"""

from __future__ import annotations

import argparse
import re
import sys

from . import garside, lamination
from .exchange import ExchangePresentation, is_degenerate, iterated_exchange
from .experiment import ExperimentConfig, run_experiment
from .words import BraidError, format_word, parse_word


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # let words such as "-1,2" through as positionals
        self._negative_number_matcher = re.compile(r"^-\d+(,-?\d+)*$")

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="braidforge", description="Iterated exchange moves and the tools that tell their results apart.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("nf", help="print the left normal form of a word")
    s.add_argument("word")
    s.add_argument("--n", type=int)

    s = sub.add_parser("conj", help="decide conjugacy of two words")
    s.add_argument("w1")
    s.add_argument("w2")
    s.add_argument("--n", type=int)
    s.add_argument("--cap", type=int, default=garside.DEFAULT_SSS_CAP)

    s = sub.add_parser("exchange", help="print ex^k(AB)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--A", default="")
    s.add_argument("--B", default="")
    s.add_argument("--k", type=int, required=True)

    s = sub.add_parser("degenerate", help="degeneracy report for A, B")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--A", default="")
    s.add_argument("--B", default="")

    s = sub.add_parser("entropy", help="entropy estimate of a word")
    s.add_argument("word")
    s.add_argument("--n", type=int)
    s.add_argument("--iters", type=int, default=2000)
    s.add_argument("--tol", type=float, default=1e-6)
    s.add_argument("--seeds", type=int, default=4)

    s = sub.add_parser("experiment", help="run an experiment from a key=value config")
    s.add_argument("--config", required=True)
    s.add_argument("--format", choices=("csv", "json"))
    s.add_argument("--out")
    return p


def _words(n, *texts):
    if n is None:
        n = max(parse_word(t).n for t in texts)
    return [parse_word(t, n) for t in texts]


def _run(args) -> int:
    if args.cmd == "nf":
        (w,) = _words(args.n, args.word)
        print(garside.normal_form(w).serialize())
    elif args.cmd == "conj":
        u, v = _words(args.n, args.w1, args.w2)
        ok, g = garside.conjugate_test(u, v, cap=args.cap)
        print("conjugate" if ok else "non-conjugate")
        if ok:
            print(format_word(g))
    elif args.cmd == "exchange":
        P = ExchangePresentation.from_text(args.n, args.A, args.B)
        print(format_word(iterated_exchange(P, args.k)))
    elif args.cmd == "degenerate":
        P = ExchangePresentation.from_text(args.n, args.A, args.B)
        rep = is_degenerate(P)
        a_moves, b_moves = lamination.geometric_nondegeneracy(P)
        print(f"a_commutes={rep.a_commutes}")
        print(f"b_commutes={rep.b_commutes}")
        print(f"degenerate={rep.degenerate}")
        print(f"a_moves_curve={a_moves}")
        print(f"b_moves_curve={b_moves}")
    elif args.cmd == "entropy":
        (w,) = _words(args.n, args.word)
        est = lamination.entropy_estimate(w, max_iters=args.iters, tol=args.tol, seeds=args.seeds)
        print(f"estimate={est.value:.9f} iterations={est.iterations} "
              f"converged={est.converged} residual={est.residual:.3g}")
    elif args.cmd == "experiment":
        cfg = ExperimentConfig.from_file(args.config)
        if args.format or args.out:
            cfg = ExperimentConfig(
                cfg.presentation, cfg.k_min, cfg.k_max, cfg.iters, cfg.tol, cfg.seeds, cfg.cap,
                args.format or cfg.format, args.out or cfg.out,
            )
        report = run_experiment(cfg)
        if cfg.out:
            for path in report.write():
                print(path)
        elif cfg.format == "json":
            import json
            print(json.dumps(report.to_json(), indent=2))
        else:
            sys.stdout.write(report.rows_csv())
            sys.stdout.write("\n")
            sys.stdout.write(report.matrix_csv())
    return 0


def cli_main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except garside.SuperSummitOverflow as e:
        print(f"braidforge: {e} (partial set of {len(e.partial)} elements)", file=sys.stderr)
        return 2
    except (BraidError, OSError) as e:
        print(f"braidforge: {e}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_main())

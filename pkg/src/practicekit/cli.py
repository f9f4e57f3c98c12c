"""Admin command line: bank ingestion, simulations, store audits, and
serving the HTTP API. Everything here is a thin layer over the library
(or, for ``audit --url``, over a running service).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bank import dump_bank, ingest_bank, load_bank
from .config import EngineConfig, load_config
from .errors import PracticeError
from .models import Exercise
from .service import PracticeService
from .sim import SimParams, SimPolicy, run_simulation
from .store import Store


def _load_engine_config(path: str | None) -> EngineConfig:
    return load_config(path) if path else EngineConfig()


def _cmd_ingest(args: argparse.Namespace) -> int:
    report = ingest_bank(args.bank)
    print(f"{report.path}: {report.exercise_count} exercises in {len(report.topics)} topics")
    for topic_id, count in sorted(report.topics.items()):
        print(f"  {topic_id}: {count}")
    for warning in report.warnings:
        print(f"warning: {warning}", file=sys.stderr)
    return 0


def _cmd_simulate(args: argparse.Namespace) -> int:
    config = _load_engine_config(args.config)
    params = SimParams(
        population=args.population,
        attempts_per_learner=args.attempts,
        policy=SimPolicy.parse(args.policy),
        seed=args.seed if args.seed is not None else config.seed,
        response_noise=args.noise,
        bank_size=args.bank_size,
    )
    result = run_simulation(params, config)
    result.write_csvs(args.steps_csv, args.summary_csv)
    print(f"simulated {params.population} learners x {params.attempts_per_learner} attempts")
    print(f"median |rating - true_skill|: {result.median_abs_error():.4f}")
    share = result.calibration_share()
    print(f"learners with last-50 success in [0.60, 0.80]: {share:.1%}")
    print(f"steps -> {args.steps_csv}")
    print(f"summary -> {args.summary_csv}")
    return 0


def _cmd_audit(args: argparse.Namespace) -> int:
    if args.url:
        import httpx

        response = httpx.get(args.url.rstrip("/") + "/admin/audit", timeout=10.0)
        response.raise_for_status()
        report = response.json()
        print(json.dumps(report, indent=2))
        return 0 if report.get("ok") else 1

    config = _load_engine_config(args.config)
    store = Store.open(load_bank(args.bank), config, log_path=args.log)
    report = store.audit()
    print(
        f"replayed {report.attempts_replayed} attempts over "
        f"{report.learner_topics_checked} learner-topic states, "
        f"{report.exercises_checked} exercises"
    )
    if report.ok:
        print("audit ok: log fold matches stored state")
        return 0
    for m in report.mismatches:
        print(
            f"MISMATCH {m.kind} {m.key}: stored {m.stored!r}, recomputed {m.recomputed!r}",
            file=sys.stderr,
        )
    return 1


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import create_app

    config = _load_engine_config(args.config)
    if args.demo:
        exercises = demo_bank()
        if args.bank:
            Path(args.bank).write_text(dump_bank(exercises), encoding="utf-8")
    else:
        if not args.bank:
            print("error: --bank is required unless --demo is given", file=sys.stderr)
            return 2
        exercises = load_bank(args.bank)
    store = Store.open(exercises, config, log_path=args.log)
    service = PracticeService(store)
    app = create_app(service)
    print(f"serving {len(exercises)} exercises on http://{args.host}:{args.port}")
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def demo_bank() -> dict[str, Exercise]:
    """Small two-topic bank for local demos of the service and UI."""
    rows = [
        ("fractions", "fr-01", -2.0, "1/2 + 1/2 = ?", "1"),
        ("fractions", "fr-02", -1.4, "1/2 + 1/4 = ?", "3/4"),
        ("fractions", "fr-03", -0.8, "3/4 - 1/2 = ?", "1/4"),
        ("fractions", "fr-04", -0.2, "2/3 + 1/6 = ?", "5/6"),
        ("fractions", "fr-05", 0.4, "3/5 + 1/4 = ?", "17/20"),
        ("fractions", "fr-06", 1.0, "7/8 - 5/6 = ?", "1/24"),
        ("fractions", "fr-07", 1.6, "5/12 + 7/18 = ?", "29/36"),
        ("fractions", "fr-08", 2.2, "11/15 - 7/20 = ?", "23/60"),
        ("equations", "eq-01", -1.8, "x + 3 = 7. x = ?", "4"),
        ("equations", "eq-02", -1.0, "2x = 10. x = ?", "5"),
        ("equations", "eq-03", -0.4, "3x - 2 = 13. x = ?", "5"),
        ("equations", "eq-04", 0.2, "5x + 4 = 2x + 19. x = ?", "5"),
        ("equations", "eq-05", 0.9, "x/3 + x/6 = 9. x = ?", "18"),
        ("equations", "eq-06", 1.5, "2(x - 3) = 3(x - 5). x = ?", "9"),
        ("equations", "eq-07", 2.1, "x^2 - 5x + 6 = 0. smallest x = ?", "2"),
    ]
    return {
        ex_id: Exercise(id=ex_id, topic_id=topic, difficulty=d, prompt=prompt, answer_key=key)
        for topic, ex_id, d, prompt, key in rows
    }


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="practicekit",
        description="Adaptive exercise-practice engine: ingest banks, run simulations, "
        "audit stores, serve the practice API.",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(
            name, help=help_text, formatter_class=argparse.ArgumentDefaultsHelpFormatter
        )

    p_ingest = add_parser("ingest", "validate a bank file and summarise it")
    p_ingest.add_argument("bank", help="line-delimited exercise bank file")
    p_ingest.set_defaults(func=_cmd_ingest)

    p_sim = add_parser("simulate", "run a seeded learner population")
    p_sim.add_argument("--population", type=int, default=100, help="number of learners")
    p_sim.add_argument("--attempts", type=int, default=200, help="attempts per learner")
    p_sim.add_argument(
        "--policy",
        default="fixed:0.5",
        help="slider policy: fixed:<v>, greedy_harder or feedback_follower",
    )
    p_sim.add_argument("--seed", type=int, default=None, help="override the config seed")
    p_sim.add_argument("--noise", type=float, default=0.0, help="response misspecification: "
                       "probability mass moved to a coin flip (0..1)")
    p_sim.add_argument("--bank-size", type=int, default=161, help="synthetic bank size")
    p_sim.add_argument("--config", help="engine config file (key = value lines)")
    p_sim.add_argument("--steps-csv", default="sim_steps.csv", help="per-attempt CSV path")
    p_sim.add_argument("--summary-csv", default="sim_summary.csv", help="per-learner CSV path")
    p_sim.set_defaults(func=_cmd_simulate)

    p_audit = add_parser("audit", "verify that stored ratings equal the log fold")
    p_audit.add_argument("--bank", help="bank file (local audit)")
    p_audit.add_argument("--log", help="attempt log file (local audit)")
    p_audit.add_argument("--config", help="engine config file")
    p_audit.add_argument("--url", help="audit a running service instead, e.g. http://localhost:8000")
    p_audit.set_defaults(func=_cmd_audit)

    p_serve = add_parser("serve", "run the practice HTTP API")
    p_serve.add_argument("--bank", help="bank file to load (also written when --demo)")
    p_serve.add_argument("--log", help="append-only attempt log path (omit for in-memory)")
    p_serve.add_argument("--config", help="engine config file")
    p_serve.add_argument("--demo", action="store_true", help="serve a built-in demo bank")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8000)
    p_serve.set_defaults(func=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PracticeError as exc:
        print(f"error [{exc.code}]: {exc.message}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

"""Operator and developer command line: pack validation, headless bot
simulation, log reports, SUS scoring and the service launcher.

Exit codes: 0 success, 1 validation failure, 2 I/O error.
"""

import argparse
import csv
import os
import sys
from pathlib import Path

from .analytics import (
    cohort_report,
    format_cohort_report,
    session_metrics,
    split_by_session,
    sus_adjective,
    sus_score,
)
from .bots import BotSpec, run_simulation
from .content import default_pack_path, load_pack, validate_pack
from .engine import GamePolicy
from .errors import GameError
from .events import EventLog, read_event_file
from .profile import SecurityProfile, generate_answer, load_profile, set_answer
from .rng import substream

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cuequest",
        description="Serious-game toolkit for security questions training.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate-pack", help="check a challenge pack file")
    p_validate.add_argument("pack", help="path to pack.json")

    p_sim = sub.add_parser("simulate", help="run headless bot sessions")
    p_sim.add_argument("--pack", default=None, help="pack file (default: bundled pack)")
    p_sim.add_argument("--profile", default=None, help="profile fixture JSON (default: generated)")
    p_sim.add_argument(
        "--bot",
        default="perfect",
        choices=["perfect", "fallible", "hint-hungry"],
        help="bot behaviour",
    )
    p_sim.add_argument("--sessions", type=int, default=10)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--p-standard", type=float, default=0.8, help="fallible bot accuracy")
    p_sim.add_argument("--p-recognition", type=float, default=0.9)
    p_sim.add_argument("--p-recall", type=float, default=0.9)
    p_sim.add_argument("--out", default=None, help="directory for emitted event logs")
    p_sim.add_argument("--csv", action="store_true", help="emit the report as CSV")

    p_report = sub.add_parser("report", help="aggregate metrics from event logs")
    p_report.add_argument("logs", nargs="+", help="event log files (shell glob friendly)")
    p_report.add_argument("--csv", action="store_true", help="emit the report as CSV")

    p_sus = sub.add_parser("sus", help="score SUS questionnaire responses")
    p_sus.add_argument("csvfile", help="CSV with one respondent per row, 10 integer columns")
    p_sus.add_argument("--csv", action="store_true", help="emit scores as CSV")

    p_serve = sub.add_parser("serve", help="run the HTTP service")
    p_serve.add_argument(
        "--data-dir",
        default=os.environ.get("GAME_DATA_DIR"),
        help="state directory (or env GAME_DATA_DIR)",
    )
    p_serve.add_argument("--pack", default=None, help="pack file (default: bundled pack)")
    p_serve.add_argument("--bind", default="127.0.0.1:8000", help="host:port")
    p_serve.add_argument(
        "--reveal-length",
        action="store_true",
        help="let challenge views include the answer letter count",
    )
    return parser


def cmd_validate_pack(args) -> int:
    pack = load_pack(args.pack, validate=False)
    report = validate_pack(pack)
    if report.ok:
        print(f"pack {pack.pack_id!r} v{pack.version}: ok "
              f"({len(pack.challenges)} challenges, {len(pack.distractors)} distractors, "
              f"{len(pack.questions)} questions)")
        return EXIT_OK
    print(f"pack {pack.pack_id!r} v{pack.version}: {len(report.violations)} violation(s)")
    for violation in report.violations:
        print(f"  - {violation}")
    return EXIT_VALIDATION


def demo_profile(pack, seed: int) -> SecurityProfile:
    """A synthetic three-question profile with system-generated answers, used
    when no fixture is supplied."""
    profile = SecurityProfile(player_id="fixture")
    for i, question in enumerate(pack.questions[:3]):
        answer = generate_answer(
            pack.distractors, substream(seed, "fixture-answer", i).randrange(2**32)
        )
        set_answer(
            profile,
            pack.questions,
            question.question_id,
            answer,
            [f"assets/{question.question_id}/{n}.svg" for n in range(1, 5)],
            [f"cue {n} for {question.question_id}" for n in range(1, 5)],
        )
    return profile


def cmd_simulate(args) -> int:
    pack = load_pack(args.pack or default_pack_path())
    profile = load_profile(args.profile) if args.profile else demo_profile(pack, args.seed)
    spec = BotSpec(
        name=args.bot,
        p_correct={
            "standard": args.p_standard,
            "recognition": args.p_recognition,
            "recall": args.p_recall,
        },
    )
    sessions = run_simulation(
        pack, profile, GamePolicy(), spec, sessions=args.sessions, seed=args.seed
    )
    out_dir = Path(args.out) if args.out else Path("sim-events")
    event_log = EventLog(out_dir)
    for session in sessions:
        event_log.append(session.events)

    metrics = [session_metrics(s.events) for s in sessions]
    report = cohort_report(metrics)
    if args.csv:
        print(report_as_csv(report))
    else:
        print(format_cohort_report(report))
        print(f"event logs: {out_dir}")
    return EXIT_OK


def report_as_csv(report) -> str:
    lines = ["metric,mean,median,sd"]
    for name, agg in [
        ("solved_total", report.solved_total),
        ("solved_standard", report.solved_standard),
        ("solved_recognition", report.solved_recognition),
        ("solved_recall", report.solved_recall),
        ("hints", report.hints),
        ("verbal_cues", report.verbal_cues),
        ("points", report.points),
        ("duration_minutes", report.duration_minutes),
    ]:
        lines.append(f"{name},{agg.mean:.6g},{agg.median:.6g},{agg.sd:.6g}")
    return "\n".join(lines)


def cmd_report(args) -> int:
    events = []
    for pattern in args.logs:
        path = Path(pattern)
        if path.is_dir():
            for file in sorted(path.glob("*.ndjson")):
                events.extend(read_event_file(file))
        else:
            events.extend(read_event_file(path))
    if not events:
        print("no events found", file=sys.stderr)
        return EXIT_VALIDATION
    events.sort(key=lambda e: e.ts)
    metrics = [session_metrics(chunk) for chunk in split_by_session(events).values()]
    report = cohort_report(metrics)
    print(report_as_csv(report) if args.csv else format_cohort_report(report))
    return EXIT_OK


def cmd_sus(args) -> int:
    rows = []
    with open(args.csvfile, newline="", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            if not row or not row[0].strip().lstrip("-").isdigit():
                continue  # header or blank line
            rows.append([int(cell) for cell in row])
    if not rows:
        print("no responses found", file=sys.stderr)
        return EXIT_VALIDATION
    scores = [sus_score(row) for row in rows]
    if args.csv:
        print("respondent,score,band,nearer")
        for i, score in enumerate(scores, start=1):
            rating = sus_adjective(score)
            print(f"{i},{score},{rating.band.value},{rating.nearer or ''}")
    else:
        for i, score in enumerate(scores, start=1):
            rating = sus_adjective(score)
            print(f"respondent {i:>3}: {score:>5.1f}  ({rating.label()})")
        mean = sum(scores) / len(scores)
        print(f"cohort mean: {mean:.1f}  ({sus_adjective(mean).label()})")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import build_service, create_app

    if not args.data_dir:
        print("a data directory is required (--data-dir or GAME_DATA_DIR)", file=sys.stderr)
        return EXIT_VALIDATION
    pack_path = Path(args.pack) if args.pack else default_pack_path()
    policy = GamePolicy(reveal_length=args.reveal_length)
    host, _, port = args.bind.partition(":")
    service = build_service(args.data_dir, pack_path, policy=policy)
    uvicorn.run(
        create_app(service, assets_dir=pack_path.parent / "assets"),
        host=host or "127.0.0.1",
        port=int(port or 8000),
        log_level="warning",
    )
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "validate-pack": cmd_validate_pack,
        "simulate": cmd_simulate,
        "report": cmd_report,
        "sus": cmd_sus,
        "serve": cmd_serve,
    }
    try:
        return handlers[args.command](args)
    except GameError as exc:
        print(f"error: {exc.message}", file=sys.stderr)
        if getattr(exc, "violations", None):
            for violation in exc.violations:
                print(f"  - {violation}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

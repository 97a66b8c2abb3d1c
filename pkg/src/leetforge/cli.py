"""Command-line interface: gen, crack, detect, bench, export-rules, stats."""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import sys
from pathlib import Path

from .bench import format_report_table, run_benchmark
from .corpus import corpus_stats, load_wordlist_files
from .cracker import ALGORITHMS, DEFAULT_CHUNK_BYTES, crack
from .detector import audit
from .errors import InputFormatError, LeetforgeError
from .generator import GenOptions, base_candidates, generate
from .hashstore import format_potfile, load_hashes
from .rules import builtin_rules, export_hashcat, parse_rules, serialize_rules

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_RUNTIME = 3

THREADS_ENV = "LEETFORGE_THREADS"


class _ArgumentParser(argparse.ArgumentParser):
    """argparse flavor whose usage failures exit 1, leaving 2 for bad input data."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _default_threads() -> int:
    env = os.environ.get(THREADS_ENV, "").strip()
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            print(f"leetforge: ignoring non-numeric {THREADS_ENV}={env!r}", file=sys.stderr)
    return os.cpu_count() or 1


def _load_rules(source: str):
    if source == "builtin":
        return builtin_rules()
    return parse_rules(Path(source).read_text(encoding="utf-8"))


def _open_out(path: str | None):
    if path is None or path == "-":
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w", encoding="utf-8")


def cmd_gen(args) -> int:
    wl = load_wordlist_files(args.wordlist)
    rs = _load_rules(args.rules)
    opts = GenOptions(include_base=args.include_base,
                      strict_multi=args.strict_multi, dedup=not args.no_dedup)
    stream = generate(wl, rs, opts)
    with contextlib.ExitStack() as stack:
        out = stack.enter_context(_open_out(args.output))
        prov = None
        if args.provenance:
            prov = stack.enter_context(open(args.provenance, "w", encoding="utf-8"))
        for rec in stream:
            out.write(rec.candidate + "\n")
            if prov is not None:
                prov.write(f"{rec.candidate}\t{rec.base_word}\t{rec.rule_id}\n")
    if args.stats_json:
        Path(args.stats_json).write_text(
            json.dumps(stream.stats.to_dict(), indent=2) + "\n", encoding="utf-8")
    stats = stream.stats
    print(f"emitted {stats.emitted} candidates "
          f"({stats.suppressed_duplicates} duplicates suppressed)", file=sys.stderr)
    return EXIT_OK


def cmd_crack(args) -> int:
    store = load_hashes(Path(args.hashes).read_bytes(), args.algorithm)
    wl = load_wordlist_files(args.wordlist)
    if args.rules == "none":
        candidates = base_candidates(wl)
    else:
        rs = _load_rules(args.rules)
        opts = GenOptions(include_base=not args.patterns_only,
                          strict_multi=args.strict_multi, dedup=not args.no_dedup)
        candidates = generate(wl, rs, opts)
    result = crack(store, candidates, algorithm=args.algorithm,
                   threads=args.threads, chunk_bytes=args.chunk_kib * 1024)
    if args.potfile:
        Path(args.potfile).write_text(format_potfile(store), encoding="utf-8")
    if args.json:
        print(json.dumps(result.to_dict(), indent=2))
    else:
        for m in result.matches:
            sys.stdout.write(f"{m.digest.hex()}:{m.plaintext}\n")
    print(f"attempted {result.attempted}, recovered {result.recovered_new} "
          f"of {store.unique_count} unique digests "
          f"({result.throughput:,.0f} candidates/s)", file=sys.stderr)
    return EXIT_OK


def cmd_detect(args) -> int:
    rs = _load_rules(args.rules)
    dictionary = load_wordlist_files([args.dict])
    passwords = list(args.password or [])
    if args.stdin:
        passwords += [line.rstrip("\r\n") for line in sys.stdin if line.strip()]
    if not passwords:
        print("leetforge detect: no passwords given "
              "(use --password or --stdin)", file=sys.stderr)
        return EXIT_USAGE
    for pw in passwords:
        print(json.dumps(audit(pw, rs, dictionary).to_dict()))
    return EXIT_OK


def cmd_bench(args) -> int:
    wl = load_wordlist_files(args.wordlist)
    rs = _load_rules(args.rules)
    report = run_benchmark(
        wl, Path(args.hashes).read_bytes(), rs,
        GenOptions(strict_multi=args.strict_multi, dedup=not args.no_dedup),
        patterns_only=args.patterns_only, algorithm=args.algorithm,
        threads=args.threads, ruleset_name=args.rules, potfile_path=args.potfile)
    doc = json.dumps(report.to_dict(), indent=2)
    print(doc)
    if args.json:
        Path(args.json).write_text(doc + "\n", encoding="utf-8")
    if args.table:
        sys.stderr.write(format_report_table(report))
    return EXIT_OK


def cmd_export_rules(args) -> int:
    rs = builtin_rules() if args.builtin or args.rules is None else _load_rules(args.rules)
    sys.stdout.write(serialize_rules(rs) if args.format == "native" else export_hashcat(rs))
    return EXIT_OK


def cmd_stats(args) -> int:
    stats = corpus_stats(load_wordlist_files(args.wordlist))
    if args.json:
        print(json.dumps({
            "sources": [{"name": n, "words": c} for n, c in stats.per_source],
            "raw_total": stats.raw_total,
            "unique_words": stats.unique_words,
        }, indent=2))
        return EXIT_OK
    rows = [(name, f"{count:,}") for name, count in stats.per_source]
    rows.append(("total (raw)", f"{stats.raw_total:,}"))
    rows.append(("unique", f"{stats.unique_words:,}"))
    width = max(len(name) for name, _ in rows)
    for name, count in rows:
        print(f"{name:<{width}}  {count}")
    return EXIT_OK


def _add_wordlist_arg(p, required=True):
    p.add_argument("-w", "--wordlist", action="append", metavar="FILE",
                   required=required, help="wordlist file, one word per line (repeatable)")


def _add_rules_arg(p):
    p.add_argument("-r", "--rules", default="builtin", metavar="FILE",
                   help="rule file, or 'builtin' for the canonical set (default)")


def _add_crack_args(p):
    p.add_argument("-a", "--algorithm", choices=sorted(ALGORITHMS), default="md5",
                   help="digest algorithm (default md5)")
    p.add_argument("-t", "--threads", type=int, default=_default_threads(),
                   help=f"worker threads (default: {THREADS_ENV} or cpu count)")


def _add_gen_toggles(p):
    p.add_argument("--strict-multi", action="store_true",
                   help="multi-pair rules require every source char present")
    p.add_argument("--no-dedup", action="store_true", help="keep duplicate candidates")


def build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(prog="leetforge",
                             description="wordlist mangling, hash recovery and "
                                         "leet-pattern auditing")
    parser.add_argument("--version", action="version", version="%(prog)s 0.1.0")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("gen", help="generate mangled candidates")
    _add_wordlist_arg(p)
    _add_rules_arg(p)
    p.add_argument("--include-base", action="store_true",
                   help="emit the unmangled words ahead of the mangles")
    _add_gen_toggles(p)
    p.add_argument("-o", "--output", metavar="FILE", help="write candidates here (default stdout)")
    p.add_argument("--provenance", metavar="FILE",
                   help="also write candidate/base/rule-id TSV here")
    p.add_argument("--stats-json", metavar="FILE", help="write generation stats JSON here")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("crack", help="match candidates against a digest list")
    p.add_argument("--hashes", required=True, metavar="FILE",
                   help="digest file, one hex digest per line")
    _add_wordlist_arg(p)
    _add_rules_arg(p)
    p.add_argument("--patterns-only", action="store_true",
                   help="try only the mangles, not the base words")
    _add_gen_toggles(p)
    _add_crack_args(p)
    p.add_argument("--chunk-kib", type=int, default=DEFAULT_CHUNK_BYTES // 1024,
                   help="candidate text per work unit (default 64)")
    p.add_argument("--potfile", metavar="FILE", help="write recovered digest:plaintext lines here")
    p.add_argument("--json", action="store_true", help="print a JSON summary instead of matches")
    p.set_defaults(func=cmd_crack)

    p = sub.add_parser("detect", help="audit passwords for mangling patterns")
    p.add_argument("-p", "--password", action="append", metavar="PW",
                   help="password to audit (repeatable)")
    p.add_argument("--stdin", action="store_true", help="read passwords from stdin")
    p.add_argument("--dict", required=True, metavar="FILE", help="dictionary wordlist")
    _add_rules_arg(p)
    p.set_defaults(func=cmd_detect)

    p = sub.add_parser("bench", help="baseline vs pattern recovery benchmark")
    _add_wordlist_arg(p)
    p.add_argument("--hashes", required=True, metavar="FILE",
                   help="digest file, one hex digest per line")
    _add_rules_arg(p)
    p.add_argument("--patterns-only", action="store_true",
                   help="pattern phase tries only the mangles")
    _add_gen_toggles(p)
    _add_crack_args(p)
    p.add_argument("--json", metavar="FILE", help="also write the JSON report here")
    p.add_argument("--potfile", metavar="FILE",
                   help="write the pattern phase's recoveries here")
    p.add_argument("--table", action="store_true",
                   help="also print an aligned summary table to stderr")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("export-rules", help="print rules in an external format")
    p.add_argument("-r", "--rules", metavar="FILE", help="rule file to export")
    p.add_argument("--builtin", action="store_true", help="export the builtin set (default)")
    p.add_argument("--format", choices=("hashcat", "native"), default="hashcat",
                   help="output syntax (default hashcat)")
    p.set_defaults(func=cmd_export_rules)

    p = sub.add_parser("stats", help="per-source wordlist counts")
    _add_wordlist_arg(p)
    p.add_argument("--json", action="store_true", help="print JSON instead of a table")
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits: 0 for --help/--version, 1 for usage
        return int(exc.code or 0)
    if getattr(args, "func", None) is None:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: a command is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except (InputFormatError, OSError, UnicodeDecodeError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except LeetforgeError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except Exception as exc:
        print(f"{parser.prog}: unexpected error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

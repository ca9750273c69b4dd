"""Batch command-line interface: characters, verification suites, listings.

Exit codes: 0 success, 1 verification violations or internal inconsistency,
2 invalid configuration.  Output is deterministic for a given configuration
regardless of the parallelism degree (results are reduced in sorted order).
"""

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

from . import admissible, fermionic, recurrence, specialize
from .charseries import CharSeries
from .reporting import CheckReport

DEFAULTS = {"l": 2, "level": 2, "zmax": 6, "qmax": 16, "jobs": 1}


class CliError(Exception):
    """Invalid run configuration (exit code 2)."""


def _parse_int_list(text, label):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise CliError(f"{label} must be a comma-separated integer list, got {text!r}")


def _read_config_file(path):
    values = {}
    try:
        with open(path, encoding="utf-8") as handle:
            for line in handle:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise CliError(f"bad config line {line!r} (expected key=value)")
                key, value = line.split("=", 1)
                values[key.strip()] = value.strip()
    except OSError as exc:
        raise CliError(f"cannot read config file {path}: {exc}")
    return values


def _merged(args, key, cast=int):
    """Flag value if given, else config-file value, else the default."""
    flag = getattr(args, key.replace("-", "_"), None)
    if flag is not None:
        return flag
    if args.config_values and key in args.config_values:
        try:
            return cast(args.config_values[key])
        except ValueError:
            raise CliError(f"config value for {key} is not valid: "
                           f"{args.config_values[key]!r}")
    return DEFAULTS.get(key)


def _job_count(args):
    jobs = _merged(args, "jobs")
    cap = os.environ.get("FSTCHAR_MAX_JOBS")
    if cap:
        try:
            jobs = min(jobs, max(1, int(cap)))
        except ValueError:
            raise CliError(f"FSTCHAR_MAX_JOBS must be an integer, got {cap!r}")
    return max(1, jobs)


def _pmap(fn, items, jobs):
    """Order-preserving map, optionally across a process pool."""
    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def _emit(args, text):
    output = getattr(args, "output", None)
    if output:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_dumps(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ": "), indent=1) + "\n"


# -- character ---------------------------------------------------------------


def _oracle_char(task):
    l, weight, qmax, caps = task
    return admissible.character_oracle(l, weight, qmax, caps)


def _fermionic_coeff(task):
    weight, n1, n2, qmax = task
    return fermionic.a_coefficient(weight, n1, n2, qmax)


def cmd_character(args):
    method = args.method
    l = _merged(args, "l")
    zmax = _merged(args, "zmax")
    qmax = _merged(args, "qmax")
    jobs = _job_count(args)
    if method in ("fermionic", "fjmmt", "fjmmt2") and l != 2:
        raise CliError(f"method {method} requires --l 2")
    if zmax < 0 or qmax < 0:
        raise CliError("window must be nonnegative")

    if method in ("oracle", "fermionic"):
        if args.weight is None:
            raise CliError(f"method {method} needs --weight")
        weight = _parse_int_list(args.weight, "--weight")
        if len(weight) != l + 1:
            raise CliError(f"--weight must have {l + 1} entries for l={l}")
        if any(x < 0 for x in weight) or sum(weight) < 1:
            raise CliError("weight entries must be >= 0 with level >= 1")
        caps = (zmax,) * l
        if method == "oracle":
            result = _oracle_char((l, weight, qmax, caps))
        else:
            grid = [
                (weight, n1, n2, qmax)
                for n1 in range(zmax + 1)
                for n2 in range(zmax + 1)
            ]
            coeffs = _pmap(_fermionic_coeff, grid, jobs)
            result = CharSeries(
                2, caps, qmax,
                {(t[1], t[2]): c for t, c in zip(grid, coeffs)},
            )
        text = (
            _json_dumps(result.to_json())
            if args.format == "json"
            else result.render_table()
        )
    elif method == "fjmmt":
        if args.weight is None:
            raise CliError("method fjmmt needs --weight k0,k1,0")
        weight = _parse_int_list(args.weight, "--weight")
        if len(weight) != 3 or weight[2] != 0:
            raise CliError("method fjmmt is defined for weights k0,k1,0")
        if any(x < 0 for x in weight) or sum(weight) < 1:
            raise CliError("weight entries must be >= 0 with level >= 1")
        result = specialize.chi_fjmmt(weight[0], weight[1], zmax, qmax)
        text = (
            _json_dumps(result.to_json())
            if args.format == "json"
            else "\n".join(f"z^{n}: {result.terms[n]!r}" for n in sorted(result.terms))
            + "\n"
        )
    elif method == "fjmmt2":
        if args.ab is None:
            raise CliError("method fjmmt2 needs --ab a,b")
        a, b = _parse_int_list(args.ab, "--ab")
        level = _merged(args, "level")
        sites = None
        if args.sites not in (None, "inf"):
            try:
                sites = int(args.sites)
            except ValueError:
                raise CliError(f"--sites must be an integer or 'inf', got {args.sites!r}")
        if not 0 <= a <= level or b < 0:
            raise CliError(f"--ab out of range for level {level}")
        series = specialize.chi_fjmmt2(a, b, level, sites, qmax)
        text = (
            _json_dumps(series.to_json())
            if args.format == "json"
            else repr(series) + "\n"
        )
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(f"unknown method {method}")
    _emit(args, text)
    return 0


# -- verify -------------------------------------------------------------------


def _system_suite(l, level, zmax, qmax, jobs, golden_path=None):
    weights = recurrence.level_weights(level, l)
    caps = (zmax,) * l
    chars = _pmap(_oracle_char, [(l, w, qmax, caps) for w in weights], jobs)
    provider = dict(zip(weights, chars)).__getitem__
    report = recurrence.verify_system(provider, level, l, caps, qmax)
    reports = [report]
    if (l, level) == (2, 2) or golden_path:
        rendered = recurrence.render_system(recurrence.build_system(2, 2))
        if golden_path:
            with open(golden_path, encoding="utf-8") as handle:
                golden = handle.read()
        else:
            golden = (
                resources.files("fstchar.data")
                .joinpath("system_l2_k2.txt")
                .read_text(encoding="utf-8")
            )
        golden_report = CheckReport(name="recurrence-golden[k=2,l=2]")
        golden_report.checked = 1
        if rendered != golden:
            bad = next(
                (
                    i
                    for i, (got, want) in enumerate(
                        zip(rendered.splitlines(), golden.splitlines())
                    )
                    if got != want
                ),
                min(len(rendered.splitlines()), len(golden.splitlines())),
            )
            golden_report.add_violation(
                where={"line": bad + 1},
                expected=(golden.splitlines() + ["<eof>"])[bad],
                actual=(rendered.splitlines() + ["<eof>"])[bad],
            )
        reports.append(golden_report)
    return reports


def _spec1_pair(task):
    k0, k1, zmax, qmax = task
    return specialize.verify_spec1(k0, k1, zmax, qmax)


def _spec2_weight(task):
    weight, qmax = task
    return specialize.verify_spec2(weight, qmax)


def _union_weight(task):
    weight, qmax = task
    return specialize.verify_union_identity(weight, qmax)


def cmd_verify(args):
    suite = args.suite
    l = _merged(args, "l")
    level = _merged(args, "level")
    zmax = _merged(args, "zmax")
    qmax = _merged(args, "qmax")
    jobs = _job_count(args)
    if level < 1 or l < 1:
        raise CliError("need level >= 1 and l >= 1")
    reports = []
    if suite in ("system", "all"):
        reports.extend(_system_suite(l, level, zmax, qmax, jobs, args.golden))
    if suite in ("lemmas", "all"):
        reports.extend(
            _pmap(fermionic.identity_battery, range(1, min(level, 5) + 1), jobs)
        )
    if suite in ("fjmmt", "all"):
        pairs = [(k0, level - k0, zmax, qmax) for k0 in range(level, -1, -1)]
        reports.extend(_pmap(_spec1_pair, pairs, jobs))
    if suite in ("fjmmt2", "all"):
        weights = recurrence.level_weights(level, 2)
        reports.extend(_pmap(_spec2_weight, [(w, qmax) for w in weights], jobs))
        reports.extend(_pmap(_union_weight, [(w, qmax) for w in weights], jobs))
    if not reports:
        raise CliError(f"unknown suite {suite}")

    ok = all(r.ok for r in reports)
    if args.format == "json":
        text = _json_dumps({"ok": ok, "reports": [r.to_json() for r in reports]})
    else:
        lines = [r.render_text() for r in reports]
        lines.append(f"suite {suite}: {'ok' if ok else 'FAILED'}")
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return 0 if ok else 1


# -- list-admissible -----------------------------------------------------------


def cmd_list_admissible(args):
    l = _merged(args, "l")
    # explicit window flags or config only: the default q bound applies only
    # when no energy bound was requested, and caps default to unbounded
    zmax = args.zmax
    if zmax is None and args.config_values.get("zmax") is not None:
        zmax = int(args.config_values["zmax"])
    qmax = args.qmax
    if qmax is None and args.config_values.get("qmax") is not None:
        qmax = int(args.config_values["qmax"])
    if qmax is None and args.energy_max is None:
        qmax = DEFAULTS["qmax"]
    if args.weight is None:
        raise CliError("list-admissible needs --weight")
    weight = _parse_int_list(args.weight, "--weight")
    if len(weight) != l + 1:
        raise CliError(f"--weight must have {l + 1} entries for l={l}")
    if any(x < 0 for x in weight) or sum(weight) < 1:
        raise CliError("weight entries must be >= 0 with level >= 1")
    init_prefix = None
    if args.init is not None:
        init_prefix = _parse_int_list(args.init, "--init")
        if len(init_prefix) != 2:
            raise CliError("--init must be a pair a,b")
        if l != 2:
            raise CliError("--init requires --l 2")
    caps = (zmax,) * l if zmax is not None else None
    try:
        stream = admissible.enumerate_configs(
            l, weight, q_order=qmax, caps=caps,
            init_prefix=init_prefix, energy_max=args.energy_max,
        )
        lines = []
        for config in stream:
            degree, n = admissible.degree_weight(config, l)
            if args.format == "json":
                lines.append(json.dumps([list(config), degree, list(n)]))
            else:
                lines.append(f"a={list(config)} d={degree} n={list(n)}")
    except ValueError as exc:
        raise CliError(str(exc))
    _emit(args, "\n".join(lines) + "\n")
    return 0


# -- parser --------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(
        prog="fstchar",
        description="Exact characters of principal-like subspace modules: "
        "brute-force enumeration, closed fermionic formulas, and the "
        "verification suites tying them together.",
    )
    parser.add_argument("--config", help="key=value config file (flags win)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--l", type=int, help="number of z variables (rank)")
    common.add_argument("--zmax", type=int, help="per-variable weight cap")
    common.add_argument("--qmax", type=int, help="q truncation order")
    common.add_argument("--jobs", type=int, help="worker processes "
                        "(FSTCHAR_MAX_JOBS caps this)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--output", help="write to file instead of stdout")

    p_char = subparsers.add_parser(
        "character", parents=[common], help="compute one character"
    )
    p_char.add_argument(
        "--method", required=True, choices=("oracle", "fermionic", "fjmmt", "fjmmt2")
    )
    p_char.add_argument("--weight", help="comma-separated weight entries")
    p_char.add_argument("--ab", help="a,b pair for method fjmmt2")
    p_char.add_argument("--level", type=int, help="level for method fjmmt2")
    p_char.add_argument("--sites", help="site count for fjmmt2 (integer or inf)")
    p_char.set_defaults(func=cmd_character)

    p_verify = subparsers.add_parser(
        "verify", parents=[common], help="run a verification suite"
    )
    p_verify.add_argument(
        "--suite", required=True,
        choices=("system", "lemmas", "fjmmt", "fjmmt2", "all"),
    )
    p_verify.add_argument("--level", type=int, help="level k under test")
    p_verify.add_argument("--golden", help="override the recurrence golden file")
    p_verify.set_defaults(func=cmd_verify)

    p_list = subparsers.add_parser(
        "list-admissible", parents=[common], help="stream admissible configurations"
    )
    p_list.add_argument("--weight", help="comma-separated weight entries")
    p_list.add_argument("--init", help="exact prefix a,b (l=2 only)")
    p_list.add_argument("--energy-max", type=int, help="first-moment bound")
    p_list.set_defaults(func=cmd_list_admissible)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.config_values = _read_config_file(args.config) if args.config else {}
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # internal inconsistency
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

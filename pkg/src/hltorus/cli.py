"""Command line front end: verify single instances, sweep grids, list.

Exit codes: 0 when every instance matched or vanished as predicted, 1 when
a mismatch was found, 2 for usage errors, 3 when a resource ceiling was
hit.  JSON output is one record per line with sorted keys; identical
inputs produce byte-identical output regardless of the job count (timing
is only included on request).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import DomainError, ResourceLimitError
from .identities import REGISTRY, sweep_weights, verify

USAGE_EXIT = 2
RESOURCE_EXIT = 3


def _apply_memory_ceiling():
    mib = os.environ.get("HLTORUS_MAX_MIB")
    if not mib:
        return
    try:
        import resource
    except ImportError:  # non-POSIX platform
        return
    limit = int(mib) * 1024 * 1024
    resource.setrlimit(resource.RLIMIT_AS, (limit, limit))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hltorus",
        description="exact verification of Hall-Littlewood torus integral identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    lst = sub.add_parser("list", help="print the identity catalog")
    lst.add_argument("--json", action="store_true", help="machine-readable output")

    def common(p):
        p.add_argument("--identity", required=True, help="identity name (see list)")
        p.add_argument("--n", type=int, required=True, help="rank parameter n")
        p.add_argument("--m", type=int, default=None, help="second rank parameter")
        p.add_argument("--order", type=int, default=12, help="truncation order D")
        p.add_argument("--json", action="store_true", help="one JSON record per line")
        p.add_argument("--jobs", type=int, default=1, help="parallel workers")
        p.add_argument(
            "--timings", action="store_true", help="include wall time in JSON records"
        )

    ver = sub.add_parser("verify", help="verify one identity instance")
    common(ver)
    ver.add_argument("--lambda", dest="weight", default=None,
                     help="comma-separated weight, e.g. 2,1,0")
    ver.add_argument("--mu", default=None, help="second partition where required")

    swp = sub.add_parser("sweep", help="verify a grid of weights")
    common(swp)
    swp.add_argument("--max-weight", type=int, default=4,
                     help="largest |weight| in the grid")
    swp.add_argument("--max-parts", type=int, default=None,
                     help="cap on individual part size")
    return parser


def _parse_weight(defn, text):
    if text is None:
        return None
    entries = tuple(int(x) for x in text.split(",")) if text.strip() else ()
    if not defn.allows_negative and any(e < 0 for e in entries):
        raise DomainError(
            "identity %r takes a partition; negative entries are only "
            "accepted by the dominant-weight identities" % defn.name
        )
    return entries


def _run_instances(instances, jobs):
    if jobs <= 1 or len(instances) <= 1:
        return [verify(**kw) for kw in instances]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(verify, **kw) for kw in instances]
        return [f.result() for f in futures]


def _emit(reports, as_json, timings, out):
    worst = 0
    for rep in reports:
        if as_json:
            out.write(json.dumps(rep.to_json_obj(include_timing=timings),
                                 sort_keys=True, separators=(",", ":")))
            out.write("\n")
        else:
            out.write(rep.text_line() + "\n")
        if rep.status == "mismatch":
            worst = max(worst, 1)
        elif rep.status == "resource-limit" or rep.achieved_order < rep.order:
            worst = max(worst, RESOURCE_EXIT)
    if not as_json:
        counts = {}
        for rep in reports:
            counts[rep.status] = counts.get(rep.status, 0) + 1
        summary = ", ".join("%d %s" % (v, k) for k, v in sorted(counts.items()))
        out.write("-- %d instance(s): %s\n" % (len(reports), summary))
    return worst


def _cmd_list(args, out):
    for name in sorted(REGISTRY):
        defn = REGISTRY[name]
        if args.json:
            out.write(json.dumps({
                "name": defn.name,
                "description": defn.description,
                "weight_shape": defn.weight_shape,
                "parameters": list(defn.params),
                "needs_m": defn.needs_m,
                "needs_mu": defn.needs_mu,
                "negative_weights": defn.allows_negative,
            }, sort_keys=True, separators=(",", ":")))
            out.write("\n")
        else:
            extras = []
            if defn.params:
                extras.append("parameters: " + ",".join(defn.params))
            if defn.needs_m:
                extras.append("needs --m")
            suffix = (" [%s]" % "; ".join(extras)) if extras else ""
            out.write("%-20s %s | weight: %s%s\n"
                      % (defn.name, defn.description, defn.weight_shape, suffix))
    return 0


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_EXIT if exc.code else 0
    _apply_memory_ceiling()
    if args.command == "list":
        return _cmd_list(args, out)

    defn = REGISTRY.get(args.identity)
    if defn is None:
        sys.stderr.write("unknown identity %r; try the list command\n" % args.identity)
        return USAGE_EXIT
    if args.order < 1:
        sys.stderr.write("--order must be at least 1\n")
        return USAGE_EXIT
    if defn.needs_m and args.m is None:
        sys.stderr.write("identity %r needs --m\n" % args.identity)
        return USAGE_EXIT

    try:
        if args.command == "verify":
            kw = dict(name=args.identity, n=args.n, m=args.m, order=args.order)
            if defn.needs_weight:
                kw["weight"] = _parse_weight(defn, args.weight)
            if defn.needs_mu:
                kw["mu"] = _parse_weight(defn, args.mu)
            instances = [kw]
        else:
            grid = sweep_weights(args.identity, args.n, args.m,
                                 max_weight=args.max_weight,
                                 max_parts=args.max_parts)
            instances = []
            for w in grid:
                kw = dict(name=args.identity, n=args.n, m=args.m, order=args.order)
                if defn.needs_weight:
                    kw["weight"] = w.parts
                if defn.needs_mu:
                    # pair sweeps run over both entries of the grid
                    continue
                instances.append(kw)
            if defn.needs_mu:
                for w in grid:
                    for mu in grid:
                        instances.append(dict(name=args.identity, n=args.n, m=args.m,
                                              order=args.order, weight=w.parts,
                                              mu=mu.parts))
        reports = _run_instances(instances, args.jobs)
    except (DomainError, KeyError) as exc:
        sys.stderr.write("error: %s\n" % exc)
        return USAGE_EXIT
    except ResourceLimitError as exc:
        sys.stderr.write("resource limit: %s\n" % exc)
        return RESOURCE_EXIT
    except MemoryError:
        sys.stderr.write("memory ceiling exceeded\n")
        return RESOURCE_EXIT
    return _emit(reports, args.json, args.timings, out)


if __name__ == "__main__":
    sys.exit(main())

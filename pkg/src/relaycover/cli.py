"""Command-line front end.

Thin client over the service layer: every subcommand builds the same
request model the HTTP API accepts, runs the shared handler (in process by
default, or against a running server with --server), and renders the
response as CSV.  Exit codes: 0 success, 2 input error, 3 infeasible
configuration.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import Sequence

import pydantic

from .errors import InfeasibleConfiguration
from .schemas import (
    CoverRequest,
    CoverResponse,
    PlanRequest,
    PlanResponse,
    PowerSweepParams,
    RelaysRequest,
    RelaysResponse,
    ScenarioFile,
    SimulateRequest,
    SimulateResponse,
)

EXIT_INPUT_ERROR = 2
EXIT_INFEASIBLE = 3


class _InputError(Exception):
    pass


def _fmt(value) -> str:
    # Locale-independent cells: floats at 9 significant digits.
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.9g}"
    if value is None:
        return ""
    return str(value)


@dataclass
class OutputTable:
    """Column-labeled rows with deterministic CSV serialization."""

    columns: list[str]
    rows: list[list]

    def write(self, stream) -> None:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([_fmt(v) for v in row])


def _load_scenario(path: str | None, scheme_override: str | None) -> ScenarioFile:
    if path is None:
        scenario = ScenarioFile()
    else:
        try:
            with open(path) as fh:
                raw = json.load(fh)
        except OSError as exc:
            raise _InputError(f"cannot read scenario file: {exc}")
        except json.JSONDecodeError as exc:
            raise _InputError(f"scenario file is not valid JSON: {exc}")
        try:
            scenario = ScenarioFile.model_validate(raw)
        except pydantic.ValidationError as exc:
            raise _InputError(f"scenario file failed validation:\n{exc}")
    if scheme_override is not None:
        scenario = scenario.model_copy(update={"scheme": scheme_override})
    return scenario


def _parse_power_sweep(spec: str) -> PowerSweepParams:
    parts = spec.split(":")
    if len(parts) != 3:
        raise _InputError("--power-sweep expects lo:hi:step in dBm")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError:
        raise _InputError("--power-sweep expects numeric lo:hi:step")
    try:
        return PowerSweepParams(lo_dbm=lo, hi_dbm=hi, step_dbm=step)
    except pydantic.ValidationError as exc:
        raise _InputError(f"invalid power sweep: {exc}")


def _post(server: str, path: str, request: pydantic.BaseModel, response_type):
    import httpx

    url = server.rstrip("/") + path
    reply = httpx.post(url, json=request.model_dump(mode="json"), timeout=300.0)
    if reply.status_code == 409:
        raise InfeasibleConfiguration(reply.json().get("detail", "infeasible configuration"))
    if reply.status_code >= 400:
        raise _InputError(f"server rejected the request ({reply.status_code}): {reply.text}")
    return response_type.model_validate(reply.json())


def _dispatch(args, path: str, request, response_type, local_handler):
    if getattr(args, "server", None):
        return _post(args.server, path, request, response_type)
    return local_handler(request)


def _relays_table(response: RelaysResponse) -> OutputTable:
    max_links = max(row.links for row in response.rows)
    columns = ["scheme", "power_dbm", "relays", "links", "total_m"] + [
        f"d_{i + 1}_m" for i in range(max_links)
    ]
    rows = []
    for row in response.rows:
        padded = list(row.distances_m) + [None] * (max_links - row.links)
        rows.append([row.scheme, row.power_dbm, row.relays, row.links, row.total_m] + padded)
    return OutputTable(columns, rows)


def _cover_table(response: CoverResponse) -> OutputTable:
    columns = [
        "placement_mode",
        "center_x_m",
        "center_y_m",
        "radius_m",
        "vertex_index",
        "vertex_x_m",
        "vertex_y_m",
        "distance_m",
    ]
    rows = [
        [
            response.placement_mode,
            response.center[0],
            response.center[1],
            response.radius_m,
            i + 1,
            v[0],
            v[1],
            d,
        ]
        for i, (v, d) in enumerate(zip(response.vertices, response.distances_m))
    ]
    return OutputTable(columns, rows)


def _plan_table(response: PlanResponse) -> OutputTable:
    columns = [
        "dest_x_m",
        "dest_y_m",
        "distance_m",
        "relays",
        "feasible",
        "achieved_reach_m",
        "relay_offsets_m",
    ]
    entries = response.destinations if response.destinations else [response.worst_vertex]
    rows = [
        [
            e.destination[0],
            e.destination[1],
            e.distance_m,
            e.relays,
            e.feasible,
            e.achieved_reach_m,
            ";".join(f"{off:.3f}" for off in e.relay_offsets_m),
        ]
        for e in entries
    ]
    return OutputTable(columns, rows)


def _simulate_table(response: SimulateResponse) -> OutputTable:
    columns = [
        "direction",
        "scheme",
        "links",
        "trials",
        "seed",
        "empirical_outage",
        "analytic_outage",
        "stderr",
        "z_score",
        "empirical_rate_bps",
        "analytic_rate_bps",
    ]
    rows = [
        [
            r.direction,
            r.scheme,
            r.links,
            r.trials,
            r.seed,
            r.empirical_outage,
            r.analytic_outage,
            r.stderr,
            r.z_score,
            r.empirical_rate_bps,
            r.analytic_rate_bps,
        ]
        for r in response.rows
    ]
    return OutputTable(columns, rows)


def _emit(table: OutputTable, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", newline="") as fh:
            table.write(fh)
    else:
        table.write(sys.stdout)


def _cmd_relays(args) -> int:
    scenario = _load_scenario(args.scenario, args.scheme)
    kwargs: dict = {"scenario": scenario}
    if args.power_sweep:
        kwargs["power_sweep"] = _parse_power_sweep(args.power_sweep)
        if args.relays is not None:
            kwargs["relays"] = args.relays
    elif args.sweep:
        kwargs["sweep"] = True
    else:
        kwargs["relays"] = args.relays if args.relays is not None else 1
    try:
        request = RelaysRequest(**kwargs)
    except pydantic.ValidationError as exc:
        raise _InputError(str(exc))
    from .service import run_relays

    response = _dispatch(args, "/relays", request, RelaysResponse, run_relays)
    _emit(_relays_table(response), args.out)
    return 0


def _cmd_cover(args) -> int:
    scenario = _load_scenario(args.scenario, None)
    request = CoverRequest(scenario=scenario)
    from .service import run_cover

    try:
        response = _dispatch(args, "/cover", request, CoverResponse, run_cover)
    except ValueError as exc:
        raise _InputError(str(exc))
    _emit(_cover_table(response), args.out)
    return 0


def _cmd_plan(args) -> int:
    scenario = _load_scenario(args.scenario, args.scheme)
    request = PlanRequest(scenario=scenario)
    from .service import run_plan

    try:
        response = _dispatch(args, "/plan", request, PlanResponse, run_plan)
    except ValueError as exc:
        raise _InputError(str(exc))
    document = response.model_dump_json(indent=2)
    if args.plan_out == "-":
        sys.stdout.write(document + "\n")
        return 0
    if args.plan_out:
        with open(args.plan_out, "w") as fh:
            fh.write(document + "\n")
    _emit(_plan_table(response), args.out)
    return 0


def _cmd_simulate(args) -> int:
    scenario = _load_scenario(args.scenario, args.scheme)
    kwargs: dict = {"scenario": scenario, "trials": args.trials, "seed": args.seed}
    if args.distances:
        try:
            kwargs["distances_m"] = [float(d) for d in args.distances.split(",")]
        except ValueError:
            raise _InputError("--distances expects comma-separated meters")
    else:
        kwargs["relays"] = args.relays
    try:
        request = SimulateRequest(**kwargs)
    except pydantic.ValidationError as exc:
        raise _InputError(str(exc))
    from .service import run_simulate

    try:
        response = _dispatch(args, "/simulate", request, SimulateResponse, run_simulate)
    except ValueError as exc:
        raise _InputError(str(exc))
    _emit(_simulate_table(response), args.out)
    return 0


def _cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relaycover",
        description="Coverage planning for relay-assisted wireless networks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, scheme=True):
        p.add_argument("scenario", nargs="?", default=None, help="scenario JSON file")
        if scheme:
            p.add_argument("--scheme", choices=["td", "fd"], default=None,
                           help="override the scenario's scheduling scheme")
        p.add_argument("--out", default=None, help="write the CSV table to this path")
        p.add_argument("--server", default=None,
                       help="send the request to a running service at this base URL")

    p = sub.add_parser("relays", help="reach-maximizing relay placement")
    add_common(p)
    p.add_argument("--relays", type=int, default=None, help="relay count to solve for")
    p.add_argument("--sweep", action="store_true",
                   help="sweep every admissible relay count")
    p.add_argument("--power-sweep", default=None, metavar="LO:HI:STEP",
                   help="sweep base-station power in dBm, keeping device offsets")
    p.set_defaults(func=_cmd_relays)

    p = sub.add_parser("cover", help="optimal mobile base station position")
    add_common(p, scheme=False)
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("plan", help="full deployment plan")
    add_common(p)
    p.add_argument("--plan-out", default=None,
                   help="write the plan document (JSON) to this path, or - for stdout")
    p.set_defaults(func=_cmd_plan)

    p = sub.add_parser("simulate", help="Monte Carlo check of outage and rate")
    add_common(p)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--relays", type=int, default=1,
                   help="simulate the reach-optimal chain for this relay count")
    p.add_argument("--distances", default=None,
                   help="explicit comma-separated hop lengths in meters")
    p.set_defaults(func=_cmd_simulate)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(func=_cmd_serve)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except pydantic.ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except InfeasibleConfiguration as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    raise SystemExit(main())

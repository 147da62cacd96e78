"""HTTP surface: the ``seq``, ``value`` and ``verify`` commands as GET endpoints.

GET /api/seq/{family}?n=1..7&k=-4..0&format=md
GET /api/value/{family}?n=5&k=-3
GET /api/verify/{theorem}?nmax=16&kmax=8&pmax=13&Nmax=4
"""
from __future__ import annotations

import json
import logging
import time
from typing import Any, Dict, Optional

import azure.functions as func

from ..sequences import build_table, single_value
from ..shared.ranges import parse_range
from ..shared.rationals import allow_long_integers, canonical
from ..shared.seq_logging import log_error, log_function_complete, log_function_start
from ..shared.tables import FORMATS
from ..shared.telemetry import track_event, track_exception
from ..theorem_verifier import THEOREMS, SweepRanges, run_suite, suite_passed
from ..theorem_verifier.suite import resolve

LOGGER = logging.getLogger(__name__)

bp = func.Blueprint()

allow_long_integers()

_MIMETYPES = {"json": "application/json", "csv": "text/csv", "md": "text/markdown"}


def _json_response(payload: Dict[str, Any], status_code: int = 200) -> func.HttpResponse:
    return func.HttpResponse(json.dumps(payload), status_code=status_code, mimetype="application/json")


def _bad_request(message: str) -> func.HttpResponse:
    return _json_response({"error": message}, status_code=400)


def _optional_int(req: func.HttpRequest, name: str) -> Optional[int]:
    raw = req.params.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}")


def _optional_range(req: func.HttpRequest, name: str):
    raw = req.params.get(name)
    return None if raw is None else parse_range(raw)


async def _unexpected(exc: Exception, context: Optional[func.Context], route: str) -> func.HttpResponse:
    log_error(f"{route} failed", exc, context, "http", {"Route": route})
    await track_exception(exc, {"operation": route})
    return _json_response({"error": str(exc)}, status_code=500)


async def seq_handler(req: func.HttpRequest, context: Optional[func.Context] = None) -> func.HttpResponse:
    """Core handler for /api/seq/{family}."""
    started = time.perf_counter()
    family = req.route_params.get("family", "")
    log_function_start(context, "http", {"Route": "seq", "Family": family})

    fmt = req.params.get("format", "json")
    if fmt not in FORMATS:
        return _bad_request(f"format must be one of {', '.join(FORMATS)}, got {fmt!r}")
    n_text = req.params.get("n")
    if not n_text:
        return _bad_request("Missing required parameter: n")

    try:
        table = build_table(
            family,
            parse_range(n_text),
            ks=_optional_range(req, "k"),
            Ns=_optional_range(req, "N"),
            convention=req.params.get("convention"),
        )
    except ValueError as exc:
        return _bad_request(str(exc))
    except Exception as exc:  # pylint: disable=broad-except
        return await _unexpected(exc, context, "seq")

    duration_ms = (time.perf_counter() - started) * 1000
    log_function_complete(context, "http", duration_ms, {"Route": "seq", "Family": family})
    await track_event("SequenceServed", {"family": family, "rows": len(table.row_labels)})
    return func.HttpResponse(table.render(fmt), status_code=200, mimetype=_MIMETYPES[fmt])


async def value_handler(req: func.HttpRequest, context: Optional[func.Context] = None) -> func.HttpResponse:
    """Core handler for /api/value/{family}."""
    started = time.perf_counter()
    family = req.route_params.get("family", "")
    log_function_start(context, "http", {"Route": "value", "Family": family})

    try:
        n = _optional_int(req, "n")
        if n is None:
            return _bad_request("Missing required parameter: n")
        k = _optional_int(req, "k")
        N = _optional_int(req, "N")
        result = single_value(family, n, k=k, N=N, convention=req.params.get("convention"))
    except ValueError as exc:
        return _bad_request(str(exc))
    except Exception as exc:  # pylint: disable=broad-except
        return await _unexpected(exc, context, "value")

    duration_ms = (time.perf_counter() - started) * 1000
    log_function_complete(context, "http", duration_ms, {"Route": "value", "Family": family})
    await track_event("SequenceServed", {"family": family, "rows": 1})
    return _json_response({"family": family, "n": n, "k": k, "N": N, "value": canonical(result)})


async def verify_handler(req: func.HttpRequest, context: Optional[func.Context] = None) -> func.HttpResponse:
    """Core handler for /api/verify/{theorem}; 200 with ``passed`` either way."""
    started = time.perf_counter()
    theorem = req.route_params.get("theorem", "")
    log_function_start(context, "http", {"Route": "verify", "Theorem": theorem})

    try:
        theorem_ids = resolve(theorem)
    except KeyError:
        return _bad_request(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}, all")

    try:
        defaults = SweepRanges.defaults()
        overrides = {name: _optional_int(req, name) for name in ("nmax", "kmax", "pmax", "Nmax")}
        ranges = SweepRanges(
            **{**defaults.model_dump(), **{k: v for k, v in overrides.items() if v is not None}}
        )
        workers = _optional_int(req, "workers")
        if workers is not None and workers < 1:
            raise ValueError(f"workers must be >= 1, got {workers}")
    except ValueError as exc:
        return _bad_request(str(exc))

    try:
        reports = await run_suite(theorem_ids, ranges, workers)
    except ValueError as exc:
        # sweep reaches past the public caps, e.g. denominator at nmax > max_n / 2
        return _bad_request(str(exc))
    except Exception as exc:  # pylint: disable=broad-except
        return await _unexpected(exc, context, "verify")

    duration_ms = (time.perf_counter() - started) * 1000
    log_function_complete(context, "http", duration_ms, {"Route": "verify", "Theorem": theorem})
    return _json_response(
        {
            "passed": suite_passed(reports),
            "reports": [report.model_dump(mode="json", by_alias=True) for report in reports],
        }
    )


@bp.route(route="seq/{family}", methods=["GET"], auth_level=func.AuthLevel.ANONYMOUS)
async def sequence(req: func.HttpRequest, context: func.Context) -> func.HttpResponse:
    return await seq_handler(req, context)


@bp.route(route="value/{family}", methods=["GET"], auth_level=func.AuthLevel.ANONYMOUS)
async def value(req: func.HttpRequest, context: func.Context) -> func.HttpResponse:
    return await value_handler(req, context)


@bp.route(route="verify/{theorem}", methods=["GET"], auth_level=func.AuthLevel.ANONYMOUS)
async def verify(req: func.HttpRequest, context: func.Context) -> func.HttpResponse:
    return await verify_handler(req, context)

"""
Structured logging for the poly-Euler services.

Diagnostics always go to stderr (stdout carries data only). When
SEQ_SERVER_URL is configured the same events are shipped to Seq through
seqlog, with structured properties taken from ``extra={...}``.
"""
from __future__ import annotations

import json
import logging
import sys
from datetime import datetime, timezone
from typing import TYPE_CHECKING, Any, Dict, Optional

import requests

from .settings import get_settings

if TYPE_CHECKING:  # pragma: no cover
    import azure.functions as func

    from ..theorem_verifier.report import VerifyReport

LOGGER = logging.getLogger(__name__)

_logging_configured = False
_seqlog_configured = False
_seq_enabled = False

# seqlog==0.4.3's SeqLogHandler.publish_log_batch holds the handler lock
# around an untimed requests.Session.post(). An unreachable Seq would then
# block every other logging call, so the POST gets a bounded timeout.
_SEQ_REQUEST_TIMEOUT = (3.05, 10)

_STDERR_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def _patch_seqlog_request_timeout() -> None:
    """Add a request timeout to seqlog's Seq POST.

    Best-effort: if seqlog's internals don't match what we patched against,
    log a warning and leave seqlog's default behavior in place.
    """
    try:
        from seqlog import structured_logging as seqlog_structured_logging

        def _patched_publish_log_batch(self, batch):
            if len(batch) == 0:
                return

            processed_records = []
            for record in batch:
                event_data = self._build_event_data(record)
                try:
                    processed_records.append(json.dumps(event_data, cls=self.json_encoder_class))
                except TypeError:
                    self.handleError(record)

            request_body_json = '{"Events": [%s]}' % (",".join(processed_records),)

            self.acquire()
            try:
                response = self.session.post(
                    self.server_url,
                    data=request_body_json,
                    stream=True,
                    timeout=_SEQ_REQUEST_TIMEOUT,
                )
                response.raise_for_status()
            except requests.RequestException as request_failed:
                self.handleError(batch[0])
                seqlog_structured_logging._log_logger_error(
                    "response from Seq was unavailable.", request_failed
                )
            finally:
                self.release()

        seqlog_structured_logging.SeqLogHandler.publish_log_batch = _patched_publish_log_batch

    except Exception as exc:
        logging.warning(
            f"Could not patch seqlog request timeout - falling back to untimed POST: {exc}"
        )


class Emoticons:
    """Message prefixes shared by every log line."""

    STARTED = "🚀"
    COMPLETED = "✅"
    PROCESSING = "📊"
    FAILED = "❌"
    EXPECTED_FAILURE = "🔎"


def _stderr_handler(level: int) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(_STDERR_FORMAT))
    return handler


def configure_logging(level: Optional[str] = None) -> bool:
    """Route diagnostics to stderr, then try to enable Seq.

    Returns:
        bool: True if Seq logging is active as well.
    """
    global _logging_configured

    if _logging_configured:
        return _seq_enabled
    _logging_configured = True

    settings = get_settings()
    numeric_level = logging.getLevelName((level or settings.log_level).upper())
    if not isinstance(numeric_level, int):
        numeric_level = logging.WARNING

    root = logging.getLogger()
    root.setLevel(numeric_level)
    if not any(getattr(h, "_polyeuler_stderr", False) for h in root.handlers):
        handler = _stderr_handler(numeric_level)
        handler._polyeuler_stderr = True  # type: ignore[attr-defined]
        root.addHandler(handler)

    return configure_seq_logging()


def configure_seq_logging() -> bool:
    """
    Configure Seq logging when a server URL is set.

    Returns:
        bool: True if Seq logging was successfully configured, False otherwise
    """
    global _seqlog_configured, _seq_enabled

    if _seqlog_configured:
        return _seq_enabled
    _seqlog_configured = True

    settings = get_settings()
    if not settings.seq_server_url:
        LOGGER.debug("SEQ_SERVER_URL not configured - Seq logging disabled")
        _seq_enabled = False
        return False

    if not settings.seq_api_key:
        if settings.environment != "development":
            LOGGER.error(
                f"SEQ_API_KEY is required in non-development environments "
                f"(current: {settings.environment}). Seq logging disabled."
            )
            _seq_enabled = False
            return False
        LOGGER.warning("SEQ_API_KEY not configured - using unauthenticated Seq logging (dev only)")

    try:
        import seqlog

        _patch_seqlog_request_timeout()

        seqlog.log_to_seq(
            server_url=settings.seq_server_url,
            api_key=settings.seq_api_key or None,
            level=logging.INFO,
            batch_size=50,
            auto_flush_timeout=5,
            additional_handlers=[_stderr_handler(logging.getLogger().level or logging.WARNING)],
            override_root_logger=True,
            support_extra_properties=True,
        )
        seqlog.set_global_log_properties(
            AppName=settings.app_name,
            Environment=settings.environment,
            AppVersion=settings.app_version,
        )

        # Azure worker chatter stays out of Seq.
        for noisy in ("azure.functions", "azure_functions_worker", "urllib3"):
            logging.getLogger(noisy).setLevel(logging.WARNING)

        LOGGER.info(f"{Emoticons.STARTED} Seq logging configured successfully")
        _seq_enabled = True
        return True

    except ImportError:
        LOGGER.warning("seqlog package not installed - Seq logging disabled")
    except Exception as e:
        LOGGER.error(f"Failed to configure Seq logging: {e}")

    _seq_enabled = False
    return False


# =============================================================================
# HTTP function helpers
# =============================================================================

def get_base_properties(context: Optional["func.Context"], trigger_type: str) -> Dict[str, Any]:
    """Standard properties attached to every function log line."""
    settings = get_settings()
    props: Dict[str, Any] = {
        "AppName": settings.app_name,
        "AppVersion": settings.app_version,
        "Environment": settings.environment,
        "ExecutionTimestamp": datetime.now(timezone.utc).isoformat(),
        "TriggerType": trigger_type,
    }
    if context is not None:
        props["FunctionName"] = context.function_name
        props["InvocationId"] = context.invocation_id
    return props


def log_function_start(
    context: Optional["func.Context"],
    trigger_type: str,
    additional_props: Optional[Dict[str, Any]] = None,
) -> None:
    props = get_base_properties(context, trigger_type)
    if additional_props:
        props.update(additional_props)
    LOGGER.info(f"{Emoticons.STARTED} Function started", extra=props)


def log_function_complete(
    context: Optional["func.Context"],
    trigger_type: str,
    duration_ms: float,
    additional_props: Optional[Dict[str, Any]] = None,
) -> None:
    props = get_base_properties(context, trigger_type)
    props["DurationMs"] = round(duration_ms, 2)
    if additional_props:
        props.update(additional_props)
    LOGGER.info(f"{Emoticons.COMPLETED} Function completed successfully", extra=props)


def log_error(
    message: str,
    error: Exception,
    context: Optional["func.Context"],
    trigger_type: str,
    additional_props: Optional[Dict[str, Any]] = None,
) -> None:
    """Log an unexpected failure with its type and message."""
    props = get_base_properties(context, trigger_type)
    props.update({"ErrorType": type(error).__name__, "ErrorMessage": str(error)[:500]})
    if additional_props:
        props.update(additional_props)
    LOGGER.error(f"{Emoticons.FAILED} {message}", exc_info=True, extra=props)


# =============================================================================
# Verifier helpers
# =============================================================================

def log_sweep_started(theorem_id: str, swept_range: Dict[str, int]) -> None:
    LOGGER.info(
        f"{Emoticons.PROCESSING} Sweep started: {theorem_id}",
        extra={"TheoremId": theorem_id, "SweptRange": dict(swept_range)},
    )


def log_claim_result(report: "VerifyReport") -> None:
    """One line per finished claim; expected failures stay at INFO."""
    props: Dict[str, Any] = {
        "TheoremId": report.theorem_id,
        "Passed": report.passed,
        "ExpectedFail": report.expected_fail,
        "DurationMs": report.elapsed_ms,
    }
    if report.counterexample is not None:
        props["Counterexample"] = report.counterexample.model_dump()

    if report.passed:
        LOGGER.info(f"{Emoticons.COMPLETED} Claim held: {report.theorem_id}", extra=props)
    elif report.expected_fail:
        LOGGER.info(
            f"{Emoticons.EXPECTED_FAILURE} Known discrepancy reproduced: {report.theorem_id}",
            extra=props,
        )
    else:
        LOGGER.warning(f"{Emoticons.FAILED} Claim failed: {report.theorem_id}", extra=props)

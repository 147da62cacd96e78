"""Shared fixtures: every test starts from freshly read settings."""
import pytest

from polyeuler.shared import seq_logging
from polyeuler.shared.settings import get_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def reset_logging_state(monkeypatch):
    """Let configure_logging / configure_seq_logging run again inside one test."""
    monkeypatch.setattr(seq_logging, "_logging_configured", False)
    monkeypatch.setattr(seq_logging, "_seqlog_configured", False)
    monkeypatch.setattr(seq_logging, "_seq_enabled", False)
    yield

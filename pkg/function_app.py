"""Azure Functions entry point for fx-app-poly-euler."""
from __future__ import annotations

# ============================================================
# SECTION 1: Standard library imports
# ============================================================
import logging

# ============================================================
# SECTION 2: Third-party imports
# ============================================================
import azure.functions as func

# ============================================================
# SECTION 3: Logging configuration (BEFORE FunctionApp)
# ============================================================
from polyeuler.shared.rationals import allow_long_integers
from polyeuler.shared.seq_logging import configure_logging
configure_logging()
allow_long_integers()

# Get logger after configuration
logger = logging.getLogger(__name__)

# ============================================================
# SECTION 4: Create FunctionApp instance
# ============================================================
app = func.FunctionApp()

# ============================================================
# SECTION 5: Blueprint imports and registrations
# ============================================================
from polyeuler.api.sequence_endpoints import bp as sequence_bp

app.register_blueprint(sequence_bp)

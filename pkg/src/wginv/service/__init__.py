from .app import app, create_app
from .handlers import run_command
from .schemas import REQUEST_TYPES, Report

__all__ = ["app", "create_app", "run_command", "REQUEST_TYPES", "Report"]

"""HTTP API over the identity kernel."""

from .main import create_app

__all__ = ["create_app"]

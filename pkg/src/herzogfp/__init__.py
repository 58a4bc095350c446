"""Herzog-ideal certification and F-purity testing in exact arithmetic."""

__version__ = "0.1.0"

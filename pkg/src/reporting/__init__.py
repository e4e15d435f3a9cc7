"""
Reporting module for hcode-verify

Check and Report records serialized as the JSON verification reports.
"""

from .report import Check, Report, versions

__all__ = ["Check", "Report", "versions"]

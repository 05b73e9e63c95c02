"""
Utility modules: configuration, parsing and reports
"""
from .config import ConfigLoader, AppConfig
from .report import ReportGenerator

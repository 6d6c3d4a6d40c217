"""Utility modules for irrlab."""

from src.utils.config_manager import ConfigManager, EnumerationBudgets, VerificationSettings

__all__ = [
    'ConfigManager',
    'EnumerationBudgets',
    'VerificationSettings',
]

"""
Configuration module for the HEN cleaning scheduler
"""

from config.settings import settings, Settings

__all__ = ["settings", "Settings"]

"""Configuration management for the micro-tensile toolkit."""

from .campaign import CampaignConfig, load_campaign_config
from .settings import Settings

__all__ = ["CampaignConfig", "Settings", "load_campaign_config"]

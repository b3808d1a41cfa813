#!/usr/bin/env python3
"""
TotDom Game Solver - Configuration Package
Combinatorial Games Group

Configuration management for the solver.
"""

from src.config.settings import *

__version__ = "1.0.0"
__author__ = "Combinatorial Games Group"
__description__ = "Configuration management for the total domination game solver"

# Expose main configuration items for easy access
__all__ = [
    "APP_NAME",
    "VERSION",
    "DEFAULT_MAX_NODES",
    "DEFAULT_MAX_TABLE",
    "DEFAULT_THREADS",
    "DEFAULT_SEED",
    "DEFAULT_PROFILE",
    "ORACLE_MAX_ORDER",
    "TOTAL_DOMINATION_MAX_ORDER",
    "PROFILES",
    "REPORTED_ATTACHMENT_ORDERS",
    "OUTPUT_FORMATS",
    "EXIT_OK",
    "EXIT_CLAIM_FAILURE",
    "EXIT_USAGE",
    "EXIT_RESOURCE",
    "DEBUG_MODE",
    "APP_DIR",
    "LOGS_DIR",
    "USER_CONFIG_FILE",
    "ResourceLimits",
    "resolve_limits",
    "resolve_verify_defaults",
    "load_user_settings",
]

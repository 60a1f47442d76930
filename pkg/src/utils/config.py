"""
Configuration management utilities for the Winger verifier.
"""
import json
import os

from dotenv import load_dotenv

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "..", "data")
CONFIG_FILE = os.path.join(DATA_DIR, "config.json")
REFERENCE_FILE = os.path.join(DATA_DIR, "reference_tables.json")

ENV_PREFIX = "WINGER_"

DEFAULTS = {
    "molien_degree": 30,
    "reynolds_degrees": [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 15],
    "random_seed": 20240601,
    "lambda_samples": 10,
    "smoothness_samples": 10,
    "digits": 30,
    "report_path": None,
    "record_timings": False,
    "deep_points_start": 1,
    "quiet": False,
    "fault": None,
}


def load_config():
    """Load verifier defaults from the JSON config file."""
    if not os.path.exists(CONFIG_FILE):
        return {}
    with open(CONFIG_FILE, "r") as f:
        return json.load(f)


def _parse_env_value(raw):
    """Environment values are JSON when they parse as JSON, plain strings otherwise."""
    try:
        return json.loads(raw)
    except json.JSONDecodeError:
        return raw


def env_overrides():
    """WINGER_<KEY> variables from the environment (and .env)."""
    load_dotenv()
    overrides = {}
    for key in DEFAULTS:
        raw = os.getenv(ENV_PREFIX + key.upper())
        if raw is not None and raw != "":
            overrides[key] = _parse_env_value(raw)
    return overrides


def get_settings(cli_overrides=None):
    """Defaults, then data/config.json, then environment, then command-line flags."""
    settings = dict(DEFAULTS)
    settings.update(load_config())
    settings.update(env_overrides())
    for key, value in (cli_overrides or {}).items():
        if value is not None:
            settings[key] = value
    return settings


def load_reference_tables():
    """Published pair list and tuple table used as golden data."""
    if not os.path.exists(REFERENCE_FILE):
        return {}
    try:
        with open(REFERENCE_FILE, "r") as f:
            return json.load(f)
    except (json.JSONDecodeError, FileNotFoundError):
        return {}

import json
import logging
import os
from typing import Any, Dict, Optional

from .errors import SettingsError

logger = logging.getLogger(__name__)

BASE_DIR = os.path.dirname(os.path.dirname(__file__))
STORAGE_DIR = os.path.join(BASE_DIR, "storage")
SETTINGS_PATH = os.path.join(STORAGE_DIR, "settings.json")

DEFAULTS: Dict[str, Any] = {
    "logic": "boolean",
    "sig": "1,1,1",
    "engine": "norm",
    "family": "minmax",
    "mode": "pessimistic",
    # unset: AND keeps its lower-bound chain, OR its upper-bound chain
    "bound": None,
    "digits": 9,
}

CHOICES = {
    "logic": ("boolean", "kleene", "belnap", "custom", "neutro"),
    "engine": ("norm", "priority"),
    "family": ("minmax", "product", "lukasiewicz"),
    "mode": ("pessimistic", "optimistic"),
    "bound": ("lower", "upper"),
}


def load_json(path: str) -> Optional[Any]:
    if not os.path.exists(path):
        return None
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except Exception as e:
        logger.warning("failed to read %s: %s", path, e)
        return None


def settings_path() -> str:
    return os.environ.get("NVLOGIC_SETTINGS") or SETTINGS_PATH


def load_settings(path: Optional[str] = None) -> Dict[str, Any]:
    """Defaults overlaid with storage/settings.json (or $NVLOGIC_SETTINGS)."""
    path = path or settings_path()
    data = load_json(path)
    settings = dict(DEFAULTS)
    if data is None:
        logger.debug("no settings at %s, using defaults", path)
        return settings
    if not isinstance(data, dict):
        raise SettingsError(f"{path}: expected a JSON object")

    for key, value in data.items():
        if key not in DEFAULTS:
            continue
        if key in CHOICES and not (key == "bound" and value is None):
            value = str(value).lower()
            if value not in CHOICES[key]:
                raise SettingsError(f"{path}: {key} must be one of {', '.join(CHOICES[key])}, got {value!r}")
        settings[key] = value

    try:
        settings["digits"] = int(settings["digits"])
    except (TypeError, ValueError) as e:
        raise SettingsError(f"{path}: {e}") from e
    if not 1 <= settings["digits"] <= 17:
        raise SettingsError(f"{path}: digits must be within 1..17")
    return settings

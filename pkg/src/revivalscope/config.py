"""Config-file parsing and merging over presets.

Format: ``[section]`` headers with ``key = value`` pairs and ``#``
comments.  Numbers are plain decimals, except that the packet momentum
accepts the single documented pi-literal form ``400*pi``.
"""

import configparser
import re

import numpy as np

from .errors import ConfigError
from .presets import ScenarioConfig, preset

_SECTIONS = ("system", "packet", "grid", "time", "analysis", "output")
_PI_FORM = re.compile(r"^\s*([-+0-9.eE]+)\s*\*\s*pi\s*$")

_BOOL_WORDS = {"on": True, "true": True, "yes": True, "1": True,
               "off": False, "false": False, "no": False, "0": False}


def parse_number(raw, field, allow_pi=False):
    text = str(raw).strip()
    if allow_pi:
        m = _PI_FORM.match(text)
        if m:
            try:
                return float(m.group(1)) * np.pi
            except ValueError:
                raise ConfigError(field, f"bad pi-literal '{text}'") from None
    try:
        return float(text)
    except ValueError:
        hint = " (pi arithmetic is only supported as 'N*pi' for the packet momentum)" \
            if "pi" in text else ""
        raise ConfigError(field, f"not a number: '{text}'{hint}") from None


def parse_int(raw, field):
    try:
        return int(str(raw).strip())
    except ValueError:
        raise ConfigError(field, f"not an integer: '{raw}'") from None


def parse_bool(raw, field):
    if isinstance(raw, bool):
        return raw
    word = str(raw).strip().lower()
    if word not in _BOOL_WORDS:
        raise ConfigError(field, f"expected on/off, got '{raw}'")
    return _BOOL_WORDS[word]


def read_config_file(path):
    """Raw section dicts from a config file."""
    parser = configparser.ConfigParser(
        inline_comment_prefixes=("#",), interpolation=None
    )
    try:
        with open(path, "r", encoding="utf-8") as fh:
            parser.read_file(fh)
    except OSError as exc:
        raise ConfigError("config", f"cannot read '{path}': {exc}") from None
    except configparser.Error as exc:
        raise ConfigError("config", f"parse error in '{path}': {exc}") from None
    sections = {}
    for name in parser.sections():
        if name not in _SECTIONS:
            raise ConfigError(name, f"unknown section (expected one of {_SECTIONS})")
        sections[name] = dict(parser.items(name))
    return sections


def load_scenario(preset_name=None, config_path=None):
    """Preset overridden by config-file values; a config file alone must
    name the system kind in [system]."""
    if preset_name is not None:
        cfg = preset(preset_name)
    else:
        cfg = ScenarioConfig(kind="")
    if config_path is not None:
        overrides = read_config_file(config_path)
        kind = overrides.get("system", {}).pop("kind", None)
        if kind is not None:
            cfg.kind = kind
        for section, values in overrides.items():
            getattr(cfg, section).update(values)
    if not cfg.kind:
        raise ConfigError("system.kind", "no preset given and no kind configured")
    if cfg.kind not in ("square-well", "bouncer", "morse"):
        raise ConfigError("system.kind", f"unknown system kind '{cfg.kind}'")
    return cfg

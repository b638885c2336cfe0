import os
import re
from pathlib import Path
from typing import Any, Dict

import yaml
from dotenv import load_dotenv

PROJECT_ROOT = Path(__file__).resolve().parents[1]
DEFAULT_CONFIG_PATH = PROJECT_ROOT / "config" / "config.yaml"

# ${VAR} or ${VAR:-fallback}
_ENV_PATTERN = re.compile(r"^\$\{(?P<name>[A-Za-z_][A-Za-z0-9_]*)(?::-(?P<fallback>.*))?\}$")


class ConfigLoader:
    """YAML settings shared by the library, CLI and API (singleton)."""

    _instance = None

    def __new__(cls, config_path: str | os.PathLike | None = None):
        if cls._instance is None:
            load_dotenv()
            path = config_path or os.getenv("HYBRID_TUCKER_CONFIG") or DEFAULT_CONFIG_PATH
            instance = super().__new__(cls)
            instance.config_path = Path(path)
            instance.config = instance._load_config()
            cls._instance = instance
        return cls._instance

    def _load_config(self) -> Dict[str, Any]:
        if not self.config_path.is_file():
            raise FileNotFoundError(f"Config file not found: {self.config_path}")
        with self.config_path.open() as f:
            raw = yaml.safe_load(f) or {}
        return self._expand(raw)

    def _expand(self, node: Any) -> Any:
        """Resolve ${VAR} / ${VAR:-fallback} leaves; unset without fallback gives None."""
        if isinstance(node, dict):
            return {key: self._expand(value) for key, value in node.items()}
        if isinstance(node, list):
            return [self._expand(item) for item in node]
        if isinstance(node, str):
            match = _ENV_PATTERN.match(node)
            if match:
                return os.getenv(match["name"], match["fallback"])
        return node

    def get(self, *keys, default=None):
        """Nested lookup, e.g. config.get('bench', 'table1', 'sizes'); missing or null gives default."""
        node = self.config
        for key in keys:
            if not isinstance(node, dict) or node.get(key) is None:
                return default
            node = node[key]
        return node

    def reload(self):
        """Re-read the file and the environment."""
        self.config = self._load_config()


def get_config() -> ConfigLoader:
    return ConfigLoader()


config = get_config()
